#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace piperfect {

// Thrown when an operation would exceed the exhaustive-search budget.
struct instance_too_large : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when inputs cannot come from any object of the claimed kind
// (e.g. a weight-distribution head no perfect code can produce).
struct inconsistent_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when requested parameters admit no construction.
struct infeasible_parameters : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t mask_bits(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

/// A vector of F_2^n, n <= 64, packed as a bitmask.
///
/// Positions are 1-based everywhere in the public API: position i is bit i-1.
/// Printed with position 1 leftmost.
struct BitWord {
    uint64_t bits = 0;
    int n = 0;

    static BitWord zero(int n) { return {0, n}; }
    static BitWord from_positions(const std::vector<int>& positions, int n);
    /// Parses a 0/1 string, position 1 leftmost.
    static BitWord parse(std::string_view s);

    bool bit(int pos) const { return (bits >> (pos - 1)) & 1u; }
    int hamming_weight() const;
    std::vector<int> support() const;
    std::string str() const;

    friend BitWord operator^(BitWord a, BitWord b);
    auto operator<=>(const BitWord&) const = default;
};

/// The set of nonzero coordinate positions, 1-based.
std::vector<int> support(const BitWord& w);

/// Position weights pi_1..pi_n (positive integers). The length is not tied
/// to the BitWord cap: weight vectors for long codes are fine, only the
/// operations that pair them with words require n <= 64.
class WeightVector {
public:
    explicit WeightVector(std::vector<int> weights);
    static WeightVector all_ones(int n);
    static WeightVector parse(std::string_view csv);

    const std::vector<int>& weights() const { return w_; }
    int n() const { return static_cast<int>(w_.size()); }
    int weight(int pos) const { return w_[pos - 1]; }
    bool is_all_ones() const;
    int max_weight() const;
    long long total_weight() const;

    /// Weight value -> sorted positions carrying it (the classes X_i).
    std::map<int, std::vector<int>> classes() const;
    std::vector<int> class_positions(int value) const;
    long long class_size(int value) const;

    std::string str() const;  // comma-separated
    bool operator==(const WeightVector&) const = default;

private:
    std::vector<int> w_;
};

/// The two-valued weight profile: weight 1 on positions 1..m, weight 2 on
/// m+1..n, with 1 + n + C(m,2) an exact power of two (= 2^t).
class TwoValuedProfile {
public:
    TwoValuedProfile(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    int t() const { return t_; }

    WeightVector pi() const;
    /// Indicator of the weight-1 block; requires n <= 64.
    uint64_t m_mask() const;

private:
    int n_, m_, t_;
};

/// Dense binary matrix, at most 64 columns; row r bit c-1 = entry (r, c).
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint64_t> row_masks;

    static BinaryMatrix parse(std::istream& in);
    static BinaryMatrix parse(std::string_view text);
    std::string str() const;

    bool at(int row, int col) const { return (row_masks[row] >> (col - 1)) & 1u; }
    bool operator==(const BinaryMatrix&) const = default;
};

class ExplicitCode;

/// Binary linear code given by a parity-check matrix; membership by syndrome.
class LinearCode {
public:
    explicit LinearCode(BinaryMatrix parity_check);

    const BinaryMatrix& parity_check() const { return h_; }
    int n() const { return h_.cols; }
    int rank() const { return rank_; }
    int dimension() const { return h_.cols - rank_; }

    bool contains(uint64_t word) const;
    bool contains(const BitWord& w) const;

    /// Basis of the nullspace of the parity-check matrix.
    const std::vector<uint64_t>& nullspace_basis() const { return basis_; }

private:
    BinaryMatrix h_;
    int rank_ = 0;
    std::vector<uint64_t> basis_;
};

/// A finite set of words of common length: sorted, duplicate-free.
class ExplicitCode {
public:
    ExplicitCode(int n, std::vector<uint64_t> words);
    static ExplicitCode parse(std::istream& in);
    static ExplicitCode parse(std::string_view text);

    int n() const { return n_; }
    size_t size() const { return words_.size(); }
    const std::vector<uint64_t>& words() const { return words_; }
    BitWord word(size_t idx) const { return {words_[idx], n_}; }
    bool contains(uint64_t w) const;

    std::string str() const;
    bool operator==(const ExplicitCode&) const = default;

private:
    int n_;
    std::vector<uint64_t> words_;
};

/// All 2^k codewords, ascending as bitmask values. Requires k <= 24.
ExplicitCode enumerate_codewords(const LinearCode& code);

}  // namespace piperfect
