#include "slipforge/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace slipforge {

// ── construction ─────────────────────────────────────────────────────────────

BigInt::BigInt(int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // avoid UB on INT64_MIN by going through uint64_t
    uint64_t mag = v > 0 ? static_cast<uint64_t>(v)
                         : ~static_cast<uint64_t>(v) + 1u;
    while (mag != 0) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

// ── magnitude helpers ─────────────────────────────────────────────────────────

int BigInt::compare_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> r(big.size() + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r(a.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (s < 0) {
            s += (int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry != 0) {
            uint64_t cur = r[k] + carry;
            r[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// ── arithmetic ────────────────────────────────────────────────────────────────

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::negated() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) { *this = o; return *this; }
    if (sign_ == o.sign_) {
        limbs_ = add_mag(limbs_, o.limbs_);
        return *this;
    }
    int c = compare_mag(limbs_, o.limbs_);
    if (c == 0) { sign_ = 0; limbs_.clear(); return *this; }
    if (c > 0) {
        limbs_ = sub_mag(limbs_, o.limbs_);
    } else {
        limbs_ = sub_mag(o.limbs_, limbs_);
        sign_ = o.sign_;
    }
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += o.negated(); }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) { sign_ = 0; limbs_.clear(); return *this; }
    limbs_ = mul_mag(limbs_, o.limbs_);
    sign_ = sign_ * o.sign_;
    return *this;
}

// Binary long division on magnitudes.  Operands in this project stay well
// under a thousand bits, so the O(bits * limbs) loop is plenty.
void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (num.sign_ == 0) { quot = BigInt(); rem = BigInt(); return; }

    int cmp = compare_mag(num.limbs_, den.limbs_);
    if (cmp < 0) { quot = BigInt(); rem = num; return; }

    const std::vector<uint32_t>& n = num.limbs_;
    std::vector<uint32_t> q(n.size(), 0);
    std::vector<uint32_t> r;   // running remainder, little-endian

    for (size_t bit_index = n.size() * 32; bit_index-- > 0;) {
        // r = (r << 1) | bit
        uint32_t bit = (n[bit_index / 32] >> (bit_index % 32)) & 1u;
        uint32_t carry = bit;
        for (auto& limb : r) {
            uint32_t next_carry = limb >> 31;
            limb = (limb << 1) | carry;
            carry = next_carry;
        }
        if (carry) r.push_back(carry);
        if (compare_mag(r, den.limbs_) >= 0) {
            r = sub_mag(r, den.limbs_);
            q[bit_index / 32] |= (1u << (bit_index % 32));
        }
    }

    quot = BigInt();
    quot.limbs_ = std::move(q);
    quot.sign_ = num.sign_ * den.sign_;
    quot.trim();
    rem = BigInt();
    rem.limbs_ = std::move(r);
    rem.sign_ = num.sign_;
    rem.trim();
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

int BigInt::compare(const BigInt& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = compare_mag(limbs_, o.limbs_);
    return sign_ > 0 ? c : -c;
}

BigInt BigInt::pow(uint64_t e) const {
    BigInt base = *this;
    BigInt r(1);
    while (e != 0) {
        if (e & 1u) r *= base;
        e >>= 1;
        if (e != 0) base *= base;
    }
    return r;
}

BigInt BigInt::factorial(uint64_t n) {
    BigInt r(1);
    for (uint64_t i = 2; i <= n; ++i) r *= BigInt(static_cast<int64_t>(i));
    return r;
}

BigInt BigInt::binomial(uint64_t n, uint64_t k) {
    if (k > n) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (uint64_t i = 1; i <= k; ++i) {
        r *= BigInt(static_cast<int64_t>(n - k + i));
        r /= BigInt(static_cast<int64_t>(i));   // exact at every step
    }
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return mag <= static_cast<uint64_t>(INT64_MAX);
    return mag <= static_cast<uint64_t>(INT64_MAX) + 1u;
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
    if (sign_ == 0) return 0;
    uint64_t mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    if (sign_ > 0) return static_cast<int64_t>(mag);
    return -static_cast<int64_t>(mag - 1) - 1;
}

double BigInt::to_double() const {
    double r = 0.0;
    for (size_t i = limbs_.size(); i-- > 0;) r = r * 4294967296.0 + limbs_[i];
    return sign_ < 0 ? -r : r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        // divide magnitude by 1e9, collecting the remainder
        uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

// ── Rational ─────────────────────────────────────────────────────────────────

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) { den_ = BigInt(1); return; }
    if (den_.is_negative()) {
        num_ = num_.negated();
        den_ = den_.negated();
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ /= g;
        den_ /= g;
    }
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

int Rational::compare(const Rational& o) const {
    return (num_ * o.den_).compare(o.num_ * den_);
}

Rational Rational::abs() const {
    return num_.is_negative() ? Rational(num_.negated(), den_) : *this;
}

double Rational::to_double() const {
    return num_.to_double() / den_.to_double();
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace slipforge
