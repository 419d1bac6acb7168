#include "piperfect/construct.hpp"

#include <algorithm>
#include <bit>

namespace piperfect {

namespace {

long long pairs_of(long long m) { return m * (m - 1) / 2; }

std::vector<uint32_t> column_values(const BinaryMatrix& h) {
    std::vector<uint32_t> vals(h.cols, 0);
    for (int r = 0; r < h.rows; ++r)
        for (int c = 0; c < h.cols; ++c)
            if ((h.row_masks[r] >> c) & 1u) vals[c] |= 1u << r;
    return vals;
}

}  // namespace

BinaryMatrix FamilyMatrix::matrix() const {
    const int n = profile.n();
    if (n > 64) throw instance_too_large("FamilyMatrix: matrix needs n <= 64");
    BinaryMatrix h;
    h.rows = profile.t();
    h.cols = n;
    h.row_masks.assign(h.rows, 0);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < h.rows; ++r)
            if ((columns[c] >> r) & 1u) h.row_masks[r] |= 1ull << c;
    return h;
}

FamilyCheckResult family_check(const BinaryMatrix& h, int m) {
    const int t = h.rows;
    const int n = h.cols;
    if (m < 0 || m > n) throw std::invalid_argument("family_check: need 0 <= m <= n");
    if (t < 1 || t > 30 || n != (1ll << t) - 1 - pairs_of(m))
        throw std::invalid_argument("family_check: need cols = 2^rows - 1 - C(m,2)");

    auto vals = column_values(h);
    FamilyCheckResult res;

    // P1: nonzero, pairwise distinct
    std::vector<int> where(1u << t, 0);  // value -> 1-based column index
    for (int c = 0; c < n; ++c) {
        if (vals[c] == 0) {
            res.violation = FamilyViolation{"P1", {c + 1}, "zero column"};
            return res;
        }
        if (where[vals[c]]) {
            res.violation = FamilyViolation{"P1", {where[vals[c]], c + 1}, "repeated column"};
            return res;
        }
        where[vals[c]] = c + 1;
    }

    // P2: head pair XORs avoid the tail
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int at = where[vals[i] ^ vals[j]];
            if (at > m) {
                res.violation = FamilyViolation{"P2", {i + 1, j + 1, at}, "head pair XOR equals a tail column"};
                return res;
            }
        }

    // P3: head pair and triple XORs avoid the head
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int at = where[vals[i] ^ vals[j]];
            if (at >= 1 && at <= m) {
                res.violation = FamilyViolation{"P3", {i + 1, j + 1, at}, "head pair XOR equals a head column"};
                return res;
            }
            for (int k = j + 1; k < m; ++k) {
                int at3 = where[vals[i] ^ vals[j] ^ vals[k]];
                if (at3 >= 1 && at3 <= m && at3 != i + 1 && at3 != j + 1 && at3 != k + 1) {
                    res.violation =
                        FamilyViolation{"P3", {i + 1, j + 1, k + 1, at3}, "head triple XOR equals a head column"};
                    return res;
                }
            }
        }

    res.ok = true;
    return res;
}

FamilyMatrix family_build(int t, int m, const std::vector<uint32_t>& seed) {
    if (t < 1 || t > 20) throw std::invalid_argument("family_build: need 1 <= t <= 20");
    if (m < 0) throw std::invalid_argument("family_build: negative m");
    const long long full = (1ll << t) - 1;
    const long long n = full - pairs_of(m);
    if (full - m - pairs_of(m) <= 0)
        throw infeasible_parameters("family_build: need 2^t - 1 - m - C(m,2) > 0");

    // no XOR of up to four chosen values may vanish; tracked exactly as in
    // the weight-1 class selection for the Hamming construction
    std::vector<uint8_t> blocked(static_cast<size_t>(full) + 1, 0);
    std::vector<uint32_t> head;
    auto add = [&](uint32_t p) {
        for (size_t i = 0; i < head.size(); ++i)
            for (size_t j = i + 1; j < head.size(); ++j) blocked[head[i] ^ head[j] ^ p] = 1;
        for (uint32_t a : head) blocked[a ^ p] = 1;
        blocked[p] = 1;
        head.push_back(p);
    };

    if (!seed.empty()) {
        for (uint32_t p : seed) {
            if (p < 1 || static_cast<long long>(p) > full)
                throw std::invalid_argument("family_build: seed value out of range");
            if (blocked[p]) throw std::invalid_argument("family_build: seed creates a dependency");
            add(p);
        }
        if (static_cast<int>(head.size()) > m) throw std::invalid_argument("family_build: seed longer than m");
    }
    // basis vectors first, then everything else ascending
    std::vector<uint32_t> order;
    for (int b = 0; b < t; ++b) order.push_back(1u << b);
    for (long long v = 1; v <= full; ++v)
        if (!std::has_single_bit(static_cast<uint32_t>(v))) order.push_back(static_cast<uint32_t>(v));
    for (uint32_t p : order) {
        if (static_cast<int>(head.size()) >= m) break;
        if (!blocked[p]) add(p);
    }
    if (static_cast<int>(head.size()) < m) {
        std::string partial;
        for (uint32_t p : head) partial += (partial.empty() ? "" : ",") + std::to_string(p);
        throw infeasible_parameters("family_build: no valid head; deepest partial head {" + partial + "}");
    }

    // tail forced: all remaining nonzero values minus the head's pair XORs
    std::vector<uint8_t> excluded(static_cast<size_t>(full) + 1, 0);
    for (uint32_t p : head) excluded[p] = 1;
    for (size_t i = 0; i < head.size(); ++i)
        for (size_t j = i + 1; j < head.size(); ++j) excluded[head[i] ^ head[j]] = 1;

    std::vector<uint32_t> columns = head;
    for (long long v = 1; v <= full; ++v)
        if (!excluded[static_cast<size_t>(v)]) columns.push_back(static_cast<uint32_t>(v));
    if (static_cast<long long>(columns.size()) != n)
        throw std::logic_error("family_build: tail size mismatch");

    return FamilyMatrix{TwoValuedProfile(static_cast<int>(n), m), std::move(columns)};
}

std::pair<LinearCode, WeightVector> code_from_family(const FamilyMatrix& fam) {
    return {LinearCode(fam.matrix()), fam.profile.pi()};
}

}  // namespace piperfect
