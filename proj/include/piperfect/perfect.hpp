#pragma once

#include <optional>
#include <variant>

#include "piperfect/metric.hpp"

namespace piperfect {

enum class Verdict { perfect, not_perfect };
enum class VerifyMethod { exhaustive, structural };

struct UncoveredWitness {
    BitWord vector;
};
struct DoubleCoverWitness {
    BitWord vector;
    BitWord center_a;
    BitWord center_b;
};
struct PartitionWitness {
    BitWord codeword;
    BitWord part_x;
    BitWord part_y;
};
struct PackingWitness {
    BigInt sphere_total;
    BigInt required;  // 2^(n-k)
};
using Witness = std::variant<std::monostate, UncoveredWitness, DoubleCoverWitness, PartitionWitness, PackingWitness>;

struct PerfectnessReport {
    Verdict verdict;
    VerifyMethod method;
    Witness witness;
    bool perfect() const { return verdict == Verdict::perfect; }
};

struct VerifyOptions {
    int jobs = 1;
    int max_n = 24;  // exhaustive-scan cap; the CLI maps PIPERFECT_MAX_N here
};

/// Covers F_2^n with the radius-r spheres around the codewords and checks
/// the result is an exact partition. A failure always names a concrete
/// uncovered or doubly covered vector.
PerfectnessReport verify_exhaustive(const ExplicitCode& code, const WeightVector& pi, long long radius,
                                    const VerifyOptions& opts = {});

/// Linear-code criterion: sphere size must equal 2^(n-k), and no nonzero
/// codeword may split into two parts of pi-weight <= r each. Only codewords
/// of pi-weight <= 2r can violate the split condition, so only those are
/// enumerated.
PerfectnessReport verify_structural(const LinearCode& code, const WeightVector& pi, long long radius);

/// All nonzero codewords of pi-weight <= bound, ascending as bitmasks.
std::vector<BitWord> low_weight_codewords(const LinearCode& code, const WeightVector& pi, long long bound,
                                          uint64_t max_search = 1ull << 26);

}  // namespace piperfect
