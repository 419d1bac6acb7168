#include "piperfect/bigint.hpp"

#include <stdexcept>

namespace piperfect {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long u = negative_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u) {
        limbs_.push_back(static_cast<uint32_t>(u));
        u >>= 32;
    }
}

BigInt::BigInt(unsigned long long v) {
    while (v) {
        limbs_.push_back(static_cast<uint32_t>(v));
        v >>= 32;
    }
}

BigInt BigInt::pow2(unsigned k) {
    BigInt r;
    r.limbs_.assign(k / 32 + 1, 0);
    r.limbs_[k / 32] = 1u << (k % 32);
    return r;
}

BigInt BigInt::binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        BigInt q, rem;
        divmod(r, BigInt(i), q, rem);
        r = q;  // always exact at this step
    }
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = 0;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return (limbs_.size() - 1) * 32 + bits;
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

void BigInt::add_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t s = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) a.push_back(static_cast<uint32_t>(carry));
}

void BigInt::sub_mag(std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<uint32_t>(d);
    }
}

int BigInt::compare(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_ ? -1 : 1;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? -c : c;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (negative_ == o.negative_) {
        add_mag(limbs_, o.limbs_);
    } else if (cmp_mag(limbs_, o.limbs_) >= 0) {
        sub_mag(limbs_, o.limbs_);
    } else {
        std::vector<uint32_t> tmp = o.limbs_;
        sub_mag(tmp, limbs_);
        limbs_ = std::move(tmp);
        negative_ = o.negative_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) { return *this = *this * o; }

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    // binary long division on magnitudes; plenty fast at the sizes we see
    q = BigInt();
    r = BigInt();
    q.limbs_.assign(a.limbs_.size(), 0);
    for (size_t i = a.bit_length(); i-- > 0;) {
        // r = 2r + bit_i(a)
        uint32_t carry = a.bit(i) ? 1u : 0u;
        for (size_t j = 0; j < r.limbs_.size(); ++j) {
            uint32_t next = r.limbs_[j] >> 31;
            r.limbs_[j] = (r.limbs_[j] << 1) | carry;
            carry = next;
        }
        if (carry) r.limbs_.push_back(carry);
        if (cmp_mag(r.limbs_, b.limbs_) >= 0) {
            sub_mag(r.limbs_, b.limbs_);
            r.trim();
            q.limbs_[i / 32] |= 1u << (i % 32);
        }
    }
    q.trim();
    q.negative_ = !q.is_zero() && (a.negative_ != b.negative_);
    r.negative_ = !r.is_zero() && a.negative_;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    unsigned long long mag = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) mag |= static_cast<unsigned long long>(limbs_[i]) << (32 * i);
    return negative_ ? mag <= 0x8000000000000000ull : mag <= 0x7fffffffffffffffull;
}

long long BigInt::to_int64() const {
    unsigned long long mag = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) mag |= static_cast<unsigned long long>(limbs_[i]) << (32 * i);
    return negative_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string digits;
    while (!mag.empty()) {
        // short division by 10^9
        uint64_t rem = 0;
        for (size_t i = mag.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

bool Rational::is_integer() const { return den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num_ * b.num_, a.den_ * b.den_); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace piperfect
