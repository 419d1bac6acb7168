#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace piperfect {

/// Arbitrary-precision signed integer.
///
/// The magnitude is a little-endian vector of 32-bit limbs with no trailing
/// zero limbs; zero is the empty vector. Small enough to stay honest about:
/// only the operations the toolkit needs (ring arithmetic, truncating
/// division, decimal output) are provided.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    explicit BigInt(unsigned long long v);

    static BigInt pow2(unsigned k);
    /// Exact binomial coefficient; zero when k < 0 or k > n.
    static BigInt binomial(long long n, long long k);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }
    BigInt abs() const;
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    bool fits_int64() const;
    long long to_int64() const;  // valid only when fits_int64()
    std::string to_string() const;

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    /// Truncating division; remainder carries the dividend's sign.
    /// Division by zero throws std::invalid_argument.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    int compare(const BigInt& o) const;  // -1, 0, +1
    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

private:
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    size_t bit_length() const;
    bool bit(size_t i) const;

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static void sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
};

BigInt gcd(BigInt a, BigInt b);

/// Exact rational number: reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    /// Numerator, valid only when is_integer().
    const BigInt& as_integer() const { return num_; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    std::string to_string() const;  // "p" or "p/q"

private:
    BigInt num_, den_;
    void normalize();
};

}  // namespace piperfect
