#pragma once

#include <optional>

#include "piperfect/core.hpp"

namespace piperfect {

/// A parity-check matrix in the two-valued family: t rows, n = 2^t - 1 - C(m,2)
/// columns, columns stored as t-bit values with the top row as bit 0.
///
/// Membership requires: nonzero pairwise-distinct columns; no XOR of two
/// distinct head columns (the first m) appears among the tail columns; and no
/// XOR of two or three distinct head columns appears among the head columns.
struct FamilyMatrix {
    TwoValuedProfile profile;
    std::vector<uint32_t> columns;

    BinaryMatrix matrix() const;  // needs n <= 64
};

struct FamilyViolation {
    std::string property;      // "P1", "P2" or "P3"
    std::vector<int> columns;  // 1-based indices of the offending columns
    std::string detail;
};

struct FamilyCheckResult {
    bool ok = false;
    std::optional<FamilyViolation> violation;
};

/// Checks the three family properties; the matrix must have
/// cols = 2^rows - 1 - C(m,2).
FamilyCheckResult family_check(const BinaryMatrix& h, int m);

/// Builds a family matrix: the head greedily (basis vectors first, then
/// ascending values; a seed of column values overrides), the tail as every
/// remaining nonzero value except the head's pairwise XORs, ascending.
FamilyMatrix family_build(int t, int m, const std::vector<uint32_t>& seed = {});

/// The code checked by the matrix and the two-valued weight vector it is
/// 2-perfect under.
std::pair<LinearCode, WeightVector> code_from_family(const FamilyMatrix& fam);

}  // namespace piperfect
