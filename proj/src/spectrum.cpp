#include "piperfect/spectrum.hpp"

#include <algorithm>
#include <bit>

#include "piperfect/metric.hpp"

namespace piperfect {

void walsh_hadamard(std::vector<long long>& a) {
    const size_t n = a.size();
    if (!std::has_single_bit(n)) throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    for (size_t len = 1; len < n; len <<= 1) {
        for (size_t i = 0; i < n; i += len << 1) {
            for (size_t j = i; j < i + len; ++j) {
                long long u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
        }
    }
}

FourierTable fourier(const ExplicitCode& code) {
    if (code.n() > 20) throw instance_too_large("fourier: n exceeds 20");
    FourierTable t;
    t.n = code.n();
    t.values.assign(1ull << t.n, 0);
    for (uint64_t w : code.words()) t.values[w] = 1;
    walsh_hadamard(t.values);
    return t;
}

DkClass dk_members(const TwoValuedProfile& profile, int k, bool enumerate) {
    if (k < 0 || k > profile.m()) throw std::invalid_argument("dk_members: k out of range");
    const int m = profile.m();
    const int outside_total = profile.n() - m;
    DkClass cls;
    cls.k = k;
    cls.ones_in_m = k;
    cls.ones_outside = (1 << (profile.t() - 1)) - k * (m - k + 1);
    if (cls.ones_outside < 0 || cls.ones_outside > outside_total) {
        cls.count = BigInt(0);
        return cls;
    }
    cls.count = BigInt::binomial(m, k) * BigInt::binomial(outside_total, cls.ones_outside);
    if (!enumerate) return cls;
    if (profile.n() > 24) throw instance_too_large("dk_members: enumeration needs n <= 24");

    // all k-subsets of the first m positions crossed with all
    // ones_outside-subsets of the rest
    std::vector<uint64_t> left, right;
    auto subsets = [](int from, int upto, int want, std::vector<uint64_t>& out) {
        auto rec = [&](auto&& self, int start, int depth, uint64_t acc) -> void {
            if (depth == want) {
                out.push_back(acc);
                return;
            }
            for (int p = start; p <= upto - (want - depth - 1); ++p)
                self(self, p + 1, depth + 1, acc | (1ull << (p - 1)));
        };
        rec(rec, from, 0, 0);
    };
    subsets(1, m, k, left);
    subsets(m + 1, profile.n(), cls.ones_outside, right);
    cls.members.reserve(left.size() * right.size());
    for (uint64_t l : left)
        for (uint64_t r : right) cls.members.push_back({l | r, profile.n()});
    std::sort(cls.members.begin(), cls.members.end());
    return cls;
}

std::vector<long long> dk_group_sums(const FourierTable& table, const TwoValuedProfile& profile) {
    if (table.n != profile.n()) throw std::invalid_argument("dk_group_sums: length mismatch");
    const int m = profile.m();
    const uint64_t m_mask = profile.m_mask();
    std::vector<long long> sums(m + 1, 0);
    std::vector<int> want_outside(m + 1);
    for (int k = 0; k <= m; ++k) want_outside[k] = (1 << (profile.t() - 1)) - k * (m - k + 1);
    for (uint64_t d = 0; d < table.values.size(); ++d) {
        int k = std::popcount(d & m_mask);
        int outside = std::popcount(d & ~m_mask & mask_bits(table.n));
        if (outside == want_outside[k]) sums[k] += table.values[d];
    }
    return sums;
}

SupportCheck support_characterization(const ExplicitCode& code, const TwoValuedProfile& profile) {
    if (code.n() != profile.n()) throw std::invalid_argument("support_characterization: length mismatch");
    FourierTable table = fourier(code);
    const int m = profile.m();
    const uint64_t m_mask = profile.m_mask();
    std::vector<int> want_outside(m + 1);
    for (int k = 0; k <= m; ++k) want_outside[k] = (1 << (profile.t() - 1)) - k * (m - k + 1);

    SupportCheck res;
    for (uint64_t d = 1; d < table.values.size(); ++d) {
        if (table.values[d] == 0) continue;
        int k = std::popcount(d & m_mask);
        int outside = std::popcount(d & ~m_mask & mask_bits(table.n));
        if (outside != want_outside[k]) {
            res.witness = BitWord{d, code.n()};
            return res;
        }
    }
    res.ok = true;
    return res;
}

RationalFunctionOnCube RationalFunctionOnCube::indicator(const ExplicitCode& code) {
    if (code.n() > 20) throw instance_too_large("RationalFunctionOnCube: n exceeds 20");
    RationalFunctionOnCube f;
    f.n = code.n();
    f.values.assign(1ull << f.n, Rational(0));
    for (uint64_t w : code.words()) f.values[w] = Rational(1);
    return f;
}

RationalFunctionOnCube RationalFunctionOnCube::constant(int n, const Rational& value) {
    if (n < 1 || n > 20) throw instance_too_large("RationalFunctionOnCube: n must be in 1..20");
    RationalFunctionOnCube f;
    f.n = n;
    f.values.assign(1ull << n, value);
    return f;
}

WeightedPerfectCheck weighted_perfect_check(const RationalFunctionOnCube& f, const TwoValuedProfile& profile) {
    if (f.n != profile.n()) throw std::invalid_argument("weighted_perfect_check: length mismatch");
    auto patterns = sphere_patterns(profile.pi(), 2);
    WeightedPerfectCheck res;
    const Rational one(1);
    for (uint64_t x = 0; x < f.values.size(); ++x) {
        Rational sum(0);
        for (uint64_t e : patterns) sum += f.values[x ^ e];
        if (!(sum == one)) {
            res.witness_center = BitWord{x, f.n};
            res.witness_sum = sum;
            return res;
        }
    }
    res.ok = true;
    return res;
}

BitWord translation_vector(const TwoValuedProfile& profile) {
    const int n = profile.n();
    if (n > 64) throw instance_too_large("translation_vector: n exceeds 64");
    if (profile.m() % 2 == 1) return {mask_bits(n), n};
    return {mask_bits(n) & ~profile.m_mask(), n};
}

BitWord translation_vector(const WeightVector& pi) {
    const int n = pi.n();
    if (n > 64) throw instance_too_large("translation_vector: n exceeds 64");
    uint64_t ones_mask = 0;
    for (int p = 1; p <= n; ++p)
        if (pi.weight(p) == 1) ones_mask |= 1ull << (p - 1);
    if (std::popcount(ones_mask) % 2 == 1) return {mask_bits(n), n};
    return {mask_bits(n) & ~ones_mask, n};
}

EMatrix build_E(int m) {
    if (m < 0 || m > 30) throw std::invalid_argument("build_E: need 0 <= m <= 30");
    EMatrix e;
    e.m = m;
    e.entries.assign(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= i; ++j) {
            BigInt v = BigInt::binomial(m - j, i - j);
            e.entries[i][j] = Rational(j % 2 == 0 ? v : -v);
        }
    // forward substitution column by column; the diagonal is +-1
    e.inverse.assign(m + 1, std::vector<Rational>(m + 1, Rational(0)));
    for (int j = 0; j <= m; ++j) {
        for (int i = j; i <= m; ++i) {
            Rational acc = (i == j) ? Rational(1) : Rational(0);
            for (int k = j; k < i; ++k) acc -= e.entries[i][k] * e.inverse[k][j];
            e.inverse[i][j] = acc / e.entries[i][i];
        }
    }
    return e;
}

DistributionTable distribution_from_code(const ExplicitCode& code, const TwoValuedProfile& profile) {
    if (code.n() != profile.n()) throw std::invalid_argument("distribution_from_code: length mismatch");
    DistributionTable t;
    t.m = profile.m();
    t.outside = profile.n() - profile.m();
    t.a.assign(t.m + 1, std::vector<BigInt>(t.outside + 1, BigInt(0)));
    const uint64_t m_mask = profile.m_mask();
    for (uint64_t w : code.words()) {
        int i = std::popcount(w & m_mask);
        int j = std::popcount(w & ~m_mask & mask_bits(code.n()));
        t.a[i][j] += BigInt(1);
    }
    return t;
}

std::string DistributionTable::csv() const {
    std::string out;
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= outside; ++j) {
            if (j) out.push_back(',');
            out += a[i][j].to_string();
        }
        out.push_back('\n');
    }
    return out;
}

namespace {

// coefficient vector of (1 + sx)^k, s = +-1
std::vector<BigInt> binomial_poly(int k, int s) {
    std::vector<BigInt> c(k + 1);
    for (int i = 0; i <= k; ++i) {
        c[i] = BigInt::binomial(k, i);
        if (s < 0 && i % 2 == 1) c[i] = -c[i];
    }
    return c;
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> c(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

RecoveryResult recover_distribution(const std::vector<BigInt>& a_head, const TwoValuedProfile& profile) {
    const int m = profile.m();
    const int n = profile.n();
    const int t = profile.t();
    const int outside = n - m;
    if (static_cast<int>(a_head.size()) != m + 1)
        throw std::invalid_argument("recover_distribution: head must have m+1 entries");
    if (a_head[0] != BigInt(1))
        throw inconsistent_input("recover_distribution: a_{0,0} must be 1");
    for (const BigInt& v : a_head)
        if (v.sign() < 0) throw inconsistent_input("recover_distribution: negative head entry");

    // y_l = 2^(n-m+l) sum_{i=l}^m C(i,l) a_{i,0} - 2^(n-t) C(m,l)
    std::vector<BigInt> y(m + 1);
    for (int l = 0; l <= m; ++l) {
        BigInt s(0);
        for (int i = l; i <= m; ++i) s += BigInt::binomial(i, l) * a_head[i];
        y[l] = BigInt::pow2(static_cast<unsigned>(n - m + l)) * s -
               BigInt::pow2(static_cast<unsigned>(n - t)) * BigInt::binomial(m, l);
    }

    // solve E x = y; E is integer lower-triangular with unit diagonal up to sign
    EMatrix e = build_E(m);
    std::vector<BigInt> x(m + 1);
    for (int i = 0; i <= m; ++i) {
        Rational acc{y[i]};
        for (int j = 0; j < i; ++j) acc -= e.entries[i][j] * Rational(x[j]);
        Rational xi = acc / e.entries[i][i];
        if (!xi.is_integer())
            throw inconsistent_input("recover_distribution: fractional grouped character sum at k = " +
                                     std::to_string(i));
        x[i] = xi.as_integer();
    }

    // expand |C|(1+X)^m (1+Y)^(n-m)
    //      + sum_k x_k (1-X)^k (1+X)^(m-k) (1-Y)^w_k (1+Y)^(n-m-w_k),
    // then divide by 2^n; w_k is the off-block weight of the class D_k
    std::vector<std::vector<BigInt>> acc(m + 1, std::vector<BigInt>(outside + 1, BigInt(0)));
    auto add_term = [&](const BigInt& scale, const std::vector<BigInt>& px, const std::vector<BigInt>& py) {
        for (size_t i = 0; i < px.size(); ++i) {
            if (px[i].is_zero()) continue;
            BigInt row = scale * px[i];
            for (size_t j = 0; j < py.size(); ++j) acc[i][j] += row * py[j];
        }
    };
    add_term(BigInt::pow2(static_cast<unsigned>(n - t)), binomial_poly(m, 1), binomial_poly(outside, 1));
    for (int k = 0; k <= m; ++k) {
        if (x[k].is_zero()) continue;
        int wk = (1 << (t - 1)) - k * (m - k + 1);
        if (wk < 0 || wk > outside)
            throw inconsistent_input("recover_distribution: nonzero sum on the empty class D_" + std::to_string(k));
        auto px = poly_mul(binomial_poly(k, -1), binomial_poly(m - k, 1));
        auto py = poly_mul(binomial_poly(wk, -1), binomial_poly(outside - wk, 1));
        add_term(x[k], px, py);
    }

    RecoveryResult res{DistributionTable{m, outside, {}}, std::move(x)};
    res.table.a.assign(m + 1, std::vector<BigInt>(outside + 1, BigInt(0)));
    const BigInt denom = BigInt::pow2(static_cast<unsigned>(n));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= outside; ++j) {
            BigInt q, r;
            BigInt::divmod(acc[i][j], denom, q, r);
            if (!r.is_zero())
                throw inconsistent_input("recover_distribution: fractional count at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            if (q.sign() < 0)
                throw inconsistent_input("recover_distribution: negative count at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            res.table.a[i][j] = q;
        }
    for (int i = 0; i <= m; ++i)
        if (res.table.a[i][0] != a_head[i])
            throw inconsistent_input("recover_distribution: recovered column 0 disagrees with the head at i = " +
                                     std::to_string(i));
    return res;
}

std::vector<std::pair<long long, long long>> pi_weight_enumerator(const ExplicitCode& code,
                                                                  const WeightVector& pi) {
    if (code.n() > 20) throw instance_too_large("pi_weight_enumerator: n exceeds 20");
    if (code.n() != pi.n()) throw std::invalid_argument("pi_weight_enumerator: length mismatch");
    std::map<long long, long long> coeffs;
    for (uint64_t w : code.words()) ++coeffs[pi_weight({w, code.n()}, pi)];
    return {coeffs.begin(), coeffs.end()};
}

}  // namespace piperfect
