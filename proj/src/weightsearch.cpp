#include "piperfect/weightsearch.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "piperfect/bigint.hpp"

namespace piperfect {

const char* to_string(FeasibilityReason r) {
    switch (r) {
        case FeasibilityReason::constructive: return "constructive";
        case FeasibilityReason::nagell_no_solution: return "nagell-no-solution";
        case FeasibilityReason::parity_fail: return "parity-fail";
        case FeasibilityReason::proven_infeasible_m12: return "proven-infeasible-m12";
    }
    return "?";
}

namespace {

unsigned long long isqrt_u64(unsigned long long v) {
    unsigned long long r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

WeightVector pi_from_classes(int n, const std::vector<int>& x1, const std::vector<int>& x2,
                             const std::vector<int>& x3, const std::vector<int>& y, int y_weight) {
    std::vector<int> w(n, 0);
    for (int p : x1) w[p - 1] = 1;
    for (int p : x2) w[p - 1] = 2;
    for (int p : x3) w[p - 1] = 3;
    for (int p : y) w[p - 1] = y_weight;
    return WeightVector(std::move(w));
}

}  // namespace

std::vector<std::pair<unsigned long long, int>> nagell_solutions(int limit) {
    if (limit < 0 || limit > 63) throw std::invalid_argument("nagell_solutions: limit must be in 0..63");
    std::vector<std::pair<unsigned long long, int>> out;
    for (int n = 3; n <= limit; ++n) {
        unsigned long long target = (1ull << n) - 7;
        unsigned long long x = isqrt_u64(target);
        if (x * x == target && x >= 1) out.emplace_back(x, n);
    }
    return out;
}

int hamming_2perfect_max_x1(int m) {
    if (m < 2 || m > 20) throw std::invalid_argument("hamming_2perfect_max_x1: need 2 <= m <= 20");
    long long n = (1ll << m) - 1;
    int best = -1;
    for (long long x1 = 0; x1 <= n; ++x1) {
        BigInt gv = BigInt(1) + BigInt::binomial(x1 - 1, 1) + BigInt::binomial(x1 - 1, 2) + BigInt::binomial(x1 - 1, 3);
        if (!(gv < BigInt::pow2(static_cast<unsigned>(m)))) break;
        if (n - x1 - x1 * (x1 - 1) / 2 < 0) continue;
        best = static_cast<int>(x1);
    }
    if (best < 0) throw infeasible_parameters("hamming_2perfect_max_x1: no feasible x1");
    return best;
}

WeightAssignment hamming_2perfect_pi(int m, int x1, const std::vector<int>& seed) {
    if (m < 2 || m > 20) throw std::invalid_argument("hamming_2perfect_pi: need 2 <= m <= 20");
    const int n = (1 << m) - 1;
    if (x1 < 0 || x1 > n) throw std::invalid_argument("hamming_2perfect_pi: x1 out of range");

    BigInt gv = BigInt(1) + BigInt::binomial(x1 - 1, 1) + BigInt::binomial(x1 - 1, 2) + BigInt::binomial(x1 - 1, 3);
    if (!(gv < BigInt::pow2(static_cast<unsigned>(m))))
        throw infeasible_parameters("hamming_2perfect_pi: greedy-selection bound fails: 1+C(x1-1,1)+C(x1-1,2)+C(x1-1,3) = " +
                                    gv.to_string() + " >= 2^" + std::to_string(m));
    long long x2_count = static_cast<long long>(n) - x1 - static_cast<long long>(x1) * (x1 - 1) / 2;
    if (x2_count < 0)
        throw infeasible_parameters("hamming_2perfect_pi: x2 = 2^m-1-x1-C(x1,2) = " + std::to_string(x2_count) +
                                    " is negative");

    // blocked[v]: v is a chosen value, a pairwise XOR, or a triple XOR of
    // chosen values; any such candidate would create a <=4-term dependency
    std::vector<uint8_t> blocked(static_cast<size_t>(n) + 1, 0);
    std::vector<int> chosen;
    auto add = [&](int p) {
        for (int a : chosen)
            for (int b : chosen)
                if (a < b) blocked[static_cast<size_t>(a ^ b ^ p)] = 1;
        for (int a : chosen) blocked[static_cast<size_t>(a ^ p)] = 1;
        blocked[static_cast<size_t>(p)] = 1;
        chosen.push_back(p);
    };

    for (int p : seed) {
        if (p < 1 || p > n) throw std::invalid_argument("hamming_2perfect_pi: seed position out of range");
        if (blocked[static_cast<size_t>(p)])
            throw std::invalid_argument("hamming_2perfect_pi: seed creates a dependency at position " +
                                        std::to_string(p));
        add(p);
        if (static_cast<int>(chosen.size()) > x1) throw std::invalid_argument("hamming_2perfect_pi: seed longer than x1");
    }
    for (int p = 1; p <= n && static_cast<int>(chosen.size()) < x1; ++p)
        if (!blocked[static_cast<size_t>(p)]) add(p);
    if (static_cast<int>(chosen.size()) < x1)
        throw infeasible_parameters("hamming_2perfect_pi: greedy exhausted at " + std::to_string(chosen.size()) +
                                    " of " + std::to_string(x1) + " positions");

    // pairwise XORs of X1 land strictly outside X1 and are pairwise distinct
    std::vector<int> heavy;
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j) heavy.push_back(chosen[i] ^ chosen[j]);
    std::sort(heavy.begin(), heavy.end());
    if (std::adjacent_find(heavy.begin(), heavy.end()) != heavy.end())
        throw std::logic_error("hamming_2perfect_pi: pair map not injective");

    std::vector<uint8_t> taken(static_cast<size_t>(n) + 1, 0);
    for (int p : chosen) taken[static_cast<size_t>(p)] = 1;
    for (int p : heavy) {
        if (taken[static_cast<size_t>(p)]) throw std::logic_error("hamming_2perfect_pi: pair map hits X1");
        taken[static_cast<size_t>(p)] = 1;
    }
    std::vector<int> rest;
    for (int p = 1; p <= n; ++p)
        if (!taken[static_cast<size_t>(p)]) rest.push_back(p);

    WeightAssignment out{HammingVariant::standard, m, 2, pi_from_classes(n, chosen, rest, {}, heavy, 3),
                         sorted_copy(chosen), std::move(rest), {}, std::move(heavy), {}};
    out.notes.push_back("x1 = " + std::to_string(x1) + ", pairwise-XOR image of X1 carries weight 3");
    return out;
}

FeasibilityVerdict ext_hamming_2perfect_feasibility(int m) {
    if (m < 2 || m > 60) throw std::invalid_argument("ext_hamming_2perfect_feasibility: need 2 <= m <= 60");
    FeasibilityVerdict v;
    unsigned long long target = (1ull << (m + 3)) - 7;
    unsigned long long s = isqrt_u64(target);
    if (s * s != target) {
        v.reason = FeasibilityReason::nagell_no_solution;
        return v;
    }
    if ((s + 1) % 2 != 0) {  // cannot happen for an odd square; kept as a guard
        v.reason = FeasibilityReason::parity_fail;
        return v;
    }
    long long x1 = static_cast<long long>((s + 1) / 2);
    v.x1 = x1;
    v.x2 = (1ll << m) - x1;
    if (m == 12) {
        v.reason = FeasibilityReason::proven_infeasible_m12;
        return v;
    }
    v.feasible = true;
    v.reason = FeasibilityReason::constructive;
    return v;
}

WeightAssignment ext_hamming_2perfect_pi(int m) {
    FeasibilityVerdict verdict = ext_hamming_2perfect_feasibility(m);
    if (!verdict.feasible)
        throw infeasible_parameters("ext_hamming_2perfect_pi: m = " + std::to_string(m) + " is infeasible (" +
                                    std::string(to_string(verdict.reason)) + ")");
    const int n = 1 << m;
    std::vector<int> x1_set;
    if (m == 2) {
        x1_set = {1, 2, 3};
    } else {
        // support of the first Hamming-weight-6 codeword in bitmask order
        ExplicitCode words = enumerate_codewords(build_hamming(m, HammingVariant::extended).code());
        for (uint64_t w : words.words()) {
            if (std::popcount(w) == 6) {
                x1_set = BitWord{w, n}.support();
                break;
            }
        }
        if (x1_set.empty()) throw std::logic_error("ext_hamming_2perfect_pi: no weight-6 codeword");
    }
    std::vector<uint8_t> in_x1(static_cast<size_t>(n) + 1, 0);
    for (int p : x1_set) in_x1[static_cast<size_t>(p)] = 1;
    std::vector<int> x2_set;
    for (int p = 1; p <= n; ++p)
        if (!in_x1[static_cast<size_t>(p)]) x2_set.push_back(p);

    WeightAssignment out{HammingVariant::extended, m, 2, pi_from_classes(n, x1_set, x2_set, {}, {}, 4),
                         std::move(x1_set), std::move(x2_set), {}, {}, {}};
    out.notes.push_back(m == 2 ? "X1 = three positions, X2 the remaining one"
                               : "X1 = support of the lowest weight-6 codeword");
    return out;
}

WeightAssignment ext_hamming_3perfect_pi(int m, int x1) {
    if (m < 2 || m > 20) throw std::invalid_argument("ext_hamming_3perfect_pi: need 2 <= m <= 20");
    const int n = 1 << m;
    if (x1 == 3 && m != 2)
        throw infeasible_parameters("ext_hamming_3perfect_pi: x1 = 3 requires m = 2");
    if (x1 < 1 || x1 > 3)
        throw infeasible_parameters("ext_hamming_3perfect_pi: x1 must be 1, 2, or 3 (3 only with m = 2)");

    WeightAssignment out{HammingVariant::extended, m, 3, WeightVector::all_ones(1), {}, {}, {}, {}, {}};
    if (x1 == 1) {
        out.X1 = {1};
        for (int p = 2; p <= n; ++p) out.X2.push_back(p);
        out.pi = pi_from_classes(n, out.X1, out.X2, {}, {}, 4);
        out.notes.push_back("x1 = 1: every other position gets weight 2");
    } else if (x1 == 2) {
        const int alpha = 1, beta = 2;
        out.X1 = {alpha, beta};
        std::vector<uint8_t> placed(static_cast<size_t>(n) + 1, 0);
        placed[alpha] = placed[beta] = 1;
        for (int g = 1; g <= n; ++g) {
            if (placed[static_cast<size_t>(g)]) continue;
            int d = fourth_point(alpha, beta, g, m);
            placed[static_cast<size_t>(g)] = placed[static_cast<size_t>(d)] = 1;
            out.X2.push_back(std::min(g, d));
            out.X3.push_back(std::max(g, d));
        }
        std::sort(out.X2.begin(), out.X2.end());
        std::sort(out.X3.begin(), out.X3.end());
        out.pi = pi_from_classes(n, out.X1, out.X2, out.X3, {}, 4);
        out.notes.push_back("x1 = 2: positions paired through weight-4 codewords over {1,2}; "
                            "smaller index of each pair gets weight 2");
    } else {
        out.X1 = {1, 2, 3};
        out.Y = {fourth_point(1, 2, 3, m)};
        out.pi = pi_from_classes(n, out.X1, {}, {}, out.Y, 4);
        out.notes.push_back("x1 = 3 (m = 2): the completing fourth position gets weight 4");
    }
    return out;
}

}  // namespace piperfect
