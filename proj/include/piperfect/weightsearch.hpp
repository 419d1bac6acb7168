#pragma once

#include <optional>

#include "piperfect/hamming.hpp"

namespace piperfect {

/// A weight vector together with the class sets it was built from.
///
/// X1, X2, X3 are the positions of weight 1, 2 and 3; Y collects everything
/// heavier than the radius (weight >= radius + 1). For radius 2 the weight-3
/// positions therefore land in Y and X3 stays empty.
struct WeightAssignment {
    HammingVariant target;
    int m = 0;
    int radius = 0;
    WeightVector pi;
    std::vector<int> X1, X2, X3, Y;
    std::vector<std::string> notes;
};

enum class FeasibilityReason { constructive, nagell_no_solution, parity_fail, proven_infeasible_m12 };

struct FeasibilityVerdict {
    bool feasible = false;
    FeasibilityReason reason = FeasibilityReason::nagell_no_solution;
    std::optional<long long> x1;
    std::optional<long long> x2;
};

const char* to_string(FeasibilityReason r);

/// All (x, n) with x^2 + 7 = 2^n and n <= limit, by brute force. limit <= 63.
std::vector<std::pair<unsigned long long, int>> nagell_solutions(int limit);

/// Weight vector making the standard Hamming code 2-perfect.
///
/// X1 is chosen greedily (ascending positions, optionally seeded) so that no
/// four or fewer members are linearly dependent as binary column values; the
/// pairwise XORs of X1 get weight 3, everything else weight 2.
/// Requires 1 + C(x1-1,1) + C(x1-1,2) + C(x1-1,3) < 2^m and
/// x2 = 2^m - 1 - x1 - C(x1,2) >= 0.
WeightAssignment hamming_2perfect_pi(int m, int x1, const std::vector<int>& seed = {});

/// Largest x1 accepted by hamming_2perfect_pi for this m.
int hamming_2perfect_max_x1(int m);

/// Whether the extended code can be 2-perfect for this m (exactly m = 2, 4;
/// m = 12 passes the counting identity but is known impossible).
FeasibilityVerdict ext_hamming_2perfect_feasibility(int m);

/// The 2-perfect weight vector for the extended code, m in {2, 4}.
WeightAssignment ext_hamming_2perfect_pi(int m);

/// 3-perfect weight vectors for the extended code: x1 = 1 or 2 for any
/// m >= 2, x1 = 3 only for m = 2.
WeightAssignment ext_hamming_3perfect_pi(int m, int x1);

}  // namespace piperfect
