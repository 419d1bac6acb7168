#pragma once

#include <optional>

#include "piperfect/bigint.hpp"
#include "piperfect/core.hpp"

namespace piperfect {

/// Character sums A_d = sum over codewords of (-1)^(c.d), for every d.
struct FourierTable {
    int n = 0;
    std::vector<long long> values;  // indexed by d as a bitmask

    long long at(uint64_t d) const { return values[d]; }
};

/// Full table via the fast transform; n <= 20.
FourierTable fourier(const ExplicitCode& code);

/// In-place Walsh-Hadamard butterfly; length must be a power of two.
void walsh_hadamard(std::vector<long long>& a);

/// The frequency class D_k: k ones among the weight-1 positions and total
/// Hamming weight 2^(t-1) - k(m-k).
struct DkClass {
    int k = 0;
    int ones_in_m = 0;        // = k
    int ones_outside = 0;     // 2^(t-1) - k(m-k+1); negative marks an empty class
    BigInt count;
    std::vector<BitWord> members;  // filled when enumerable (n <= 24)
};

DkClass dk_members(const TwoValuedProfile& profile, int k, bool enumerate = true);

/// Per-class sums of A_d for k = 0..m.
std::vector<long long> dk_group_sums(const FourierTable& table, const TwoValuedProfile& profile);

struct SupportCheck {
    bool ok = false;
    std::optional<BitWord> witness;  // a d outside {0} and all D_k with A_d != 0
};

/// A_d must vanish outside d = 0 and the classes D_k.
SupportCheck support_characterization(const ExplicitCode& code, const TwoValuedProfile& profile);

/// A rational-valued function on the cube, dense table; n <= 20.
struct RationalFunctionOnCube {
    int n = 0;
    std::vector<Rational> values;

    static RationalFunctionOnCube indicator(const ExplicitCode& code);
    static RationalFunctionOnCube constant(int n, const Rational& value);
};

struct WeightedPerfectCheck {
    bool ok = false;
    std::optional<BitWord> witness_center;  // sphere sum there differs from 1
    Rational witness_sum;
};

/// Fractional perfectness: every radius-2 sphere sum must equal exactly 1.
WeightedPerfectCheck weighted_perfect_check(const RationalFunctionOnCube& f, const TwoValuedProfile& profile);

/// The vector u with C + u = C for every 2-perfect code under this profile:
/// all ones when m is odd, the weight-2 block indicator when m is even.
BitWord translation_vector(const TwoValuedProfile& profile);

/// Same rule keyed off an arbitrary {1,2}-or-heavier weight vector: all ones
/// when the number of weight-1 positions is odd, otherwise the indicator of
/// everything heavier.
BitWord translation_vector(const WeightVector& pi);

/// Lower-triangular system matrix of the distribution recovery, with its
/// exact inverse: E[i][j] = (-1)^j C(m-j, i-j) for i >= j.
struct EMatrix {
    int m = 0;
    std::vector<std::vector<Rational>> entries;
    std::vector<std::vector<Rational>> inverse;
};

EMatrix build_E(int m);  // m <= 30

/// Codeword counts a[i][j] = #{c : i ones on the weight-1 block, j outside}.
struct DistributionTable {
    int m = 0;
    int outside = 0;  // n - m
    std::vector<std::vector<BigInt>> a;  // (m+1) x (n-m+1)

    std::string csv() const;
};

DistributionTable distribution_from_code(const ExplicitCode& code, const TwoValuedProfile& profile);

struct RecoveryResult {
    DistributionTable table;
    std::vector<BigInt> group_sums;  // sum of A_d over D_k, k = 0..m
};

/// Recovers the full distribution from its first column a_{0,0}..a_{m,0}.
///
/// Solves E x = y for the grouped character sums, with
/// y_l = 2^(n-m+l) * sum_{i>=l} C(i,l) a_{i,0} - 2^(n-t) C(m,l), then expands
/// the two-variable product identity and reads off the coefficients. Inputs
/// that cannot come from a 2-perfect code surface as negative or fractional
/// coefficients and throw inconsistent_input.
RecoveryResult recover_distribution(const std::vector<BigInt>& a_head, const TwoValuedProfile& profile);

/// The weight enumerator sum over codewords of x^pi_weight(c), as
/// (degree, count) pairs, ascending.
std::vector<std::pair<long long, long long>> pi_weight_enumerator(const ExplicitCode& code,
                                                                  const WeightVector& pi);

}  // namespace piperfect
