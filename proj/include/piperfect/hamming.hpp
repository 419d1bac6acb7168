#pragma once

#include <ostream>

#include "piperfect/core.hpp"

namespace piperfect {

enum class HammingVariant { standard, extended };

/// The Hamming parity-check family.
///
/// Standard: m x (2^m - 1), column i is the binary expansion of i (top row
/// most significant). Extended: (m+1) x 2^m, first row all ones, column i
/// carries binary(i mod 2^m) in the lower m rows — so the column whose lower
/// part is zero sits at position 2^m, and removing the first row together
/// with that column gives back the standard matrix.
struct HammingFamily {
    int m;
    HammingVariant variant;

    int length() const { return variant == HammingVariant::standard ? (1 << m) - 1 : 1 << m; }
    int check_rows() const { return variant == HammingVariant::standard ? m : m + 1; }

    /// Lower-m-row pattern of the given column (1-based position).
    uint32_t column_value(int position) const;

    /// Streams the matrix in the row-per-line text format; works for any m.
    void write_matrix(std::ostream& out) const;

    /// In-memory forms, available while the length fits 64 columns.
    BinaryMatrix matrix() const;
    LinearCode code() const;
};

/// Builds H_m or its extension, 2 <= m <= 20.
HammingFamily build_hamming(int m, HammingVariant variant);

/// The unique position completing {a, b} to a Hamming-weight-3 codeword of
/// the standard code: the XOR of the column indices.
int third_point(int a, int b, int m);

/// The unique position completing {a, b, c} to a weight-4 codeword of the
/// extended code. Inputs must be three distinct positions in 1..2^m.
int fourth_point(int a, int b, int c, int m);

}  // namespace piperfect
