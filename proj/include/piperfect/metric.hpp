#pragma once

#include "piperfect/bigint.hpp"
#include "piperfect/core.hpp"

namespace piperfect {

/// Sum of position weights over the support of x.
long long pi_weight(const BitWord& x, const WeightVector& pi);

/// Weighted Hamming distance: pi_weight(x ^ y).
long long pi_distance(const BitWord& x, const BitWord& y, const WeightVector& pi);

/// Exact sphere size with its per-composition breakdown: one term per choice
/// of how many positions are taken from each weight class.
struct SphereSizeBreakdown {
    struct Term {
        std::vector<std::pair<int, int>> picks;  // (class weight value, count), ascending by weight
        BigInt count;                            // product of binomials C(x_i, k_i)
    };
    BigInt total;
    std::vector<Term> terms;
};

/// |S_pi(x; r)| via the breakdown enumeration. Independent of the center x.
SphereSizeBreakdown sphere_size(const WeightVector& pi, long long radius);

/// |S_pi(x; r)| alone, by dynamic programming over the weight classes.
BigInt sphere_size_total(const WeightVector& pi, long long radius);

/// All words within pi-distance radius of x, ascending as bitmasks.
/// Searches error patterns class by class rather than scanning 2^n.
std::vector<BitWord> sphere_enumerate(const BitWord& x, long long radius, const WeightVector& pi,
                                      uint64_t max_results = 1ull << 24);

/// The error patterns of the sphere around zero, as bitmasks (unsorted).
std::vector<uint64_t> sphere_patterns(const WeightVector& pi, long long radius,
                                      uint64_t max_results = 1ull << 24);

}  // namespace piperfect
