#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace slipforge {

// ── BigInt: signed arbitrary-precision integer ───────────────────────────────
//
// Sign-magnitude, base 2^32 limbs stored little-endian.  Everything the
// counting machinery needs stays exact: k! overflows 64 bits already at
// k = 21, and character powers a^n reach hundreds of bits.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);                       // NOLINT: implicit by design
    BigInt(const BigInt&) = default;
    BigInt(BigInt&&) noexcept = default;
    BigInt& operator=(const BigInt&) = default;
    BigInt& operator=(BigInt&&) noexcept = default;

    [[nodiscard]] bool is_zero() const { return sign_ == 0; }
    [[nodiscard]] bool is_negative() const { return sign_ < 0; }
    [[nodiscard]] int signum() const { return sign_; }

    [[nodiscard]] BigInt abs() const;
    [[nodiscard]] BigInt negated() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);     // truncated toward zero
    BigInt& operator%=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
    BigInt operator-() const { return negated(); }

    // quotient and remainder in one pass; remainder has the dividend's sign
    static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);

    [[nodiscard]] int compare(const BigInt& o) const;   // -1, 0, +1
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    [[nodiscard]] BigInt pow(uint64_t e) const;
    static BigInt factorial(uint64_t n);
    static BigInt binomial(uint64_t n, uint64_t k);
    static BigInt gcd(BigInt a, BigInt b);   // nonnegative result

    [[nodiscard]] bool fits_int64() const;
    [[nodiscard]] int64_t to_int64() const;  // throws std::overflow_error if unrepresentable
    [[nodiscard]] double to_double() const;  // may round; infinities never produced for our sizes
    [[nodiscard]] std::string to_string() const;

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<uint32_t> limbs_;     // little-endian magnitude; empty iff sign_ == 0

    void trim();
    static int compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

// ── Rational: exact fraction of BigInts ──────────────────────────────────────
//
// Always normalized: denominator positive, gcd(num, den) == 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}   // NOLINT: implicit by design
    Rational(int64_t n) : num_(n), den_(1) {}             // NOLINT
    Rational(BigInt n, BigInt d);

    [[nodiscard]] const BigInt& num() const { return num_; }
    [[nodiscard]] const BigInt& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_integer() const { return den_ == BigInt(1); }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(num_.negated(), den_); }

    [[nodiscard]] int compare(const Rational& o) const;
    friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.compare(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    [[nodiscard]] Rational abs() const;
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const;   // "num/den", or "num" when integral

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

} // namespace slipforge
