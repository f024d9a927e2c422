#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace slipforge {

// Deterministic random stream.  Gaussian draws go through an explicit
// Box-Muller transform instead of std::normal_distribution, whose algorithm
// is implementation-defined; this keeps seeded outputs identical across
// standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    // standard complex Gaussian: E|z|^2 = 1
    std::complex<double> complex_gaussian() {
        const double inv_sqrt2 = 0.7071067811865476;
        double re = gaussian();
        double im = gaussian();
        return {re * inv_sqrt2, im * inv_sqrt2};
    }

    // stable derivation of per-item seeds from a master seed
    static uint64_t derive(uint64_t seed, uint64_t index) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace slipforge
