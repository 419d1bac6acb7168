#include "piperfect/core.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace piperfect {

BitWord BitWord::from_positions(const std::vector<int>& positions, int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("BitWord: length must be in 1..64");
    BitWord w{0, n};
    for (int p : positions) {
        if (p < 1 || p > n) throw std::invalid_argument("BitWord: position out of range");
        w.bits |= 1ull << (p - 1);
    }
    return w;
}

BitWord BitWord::parse(std::string_view s) {
    if (s.empty() || s.size() > 64) throw std::invalid_argument("BitWord: length must be in 1..64");
    BitWord w{0, static_cast<int>(s.size())};
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            w.bits |= 1ull << i;
        else if (s[i] != '0')
            throw std::invalid_argument("BitWord: expected only '0'/'1' characters");
    }
    return w;
}

int BitWord::hamming_weight() const { return std::popcount(bits); }

std::vector<int> BitWord::support() const {
    std::vector<int> out;
    uint64_t b = bits;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

std::string BitWord::str() const {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((bits >> i) & 1u) s[i] = '1';
    return s;
}

BitWord operator^(BitWord a, BitWord b) {
    if (a.n != b.n) throw std::invalid_argument("BitWord: length mismatch");
    return {a.bits ^ b.bits, a.n};
}

std::vector<int> support(const BitWord& w) { return w.support(); }

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw std::invalid_argument("WeightVector: empty");
    if (w_.size() > (1u << 21)) throw std::invalid_argument("WeightVector: too long");
    for (int v : w_)
        if (v < 1) throw std::invalid_argument("WeightVector: weights must be positive");
}

WeightVector WeightVector::all_ones(int n) { return WeightVector(std::vector<int>(n, 1)); }

WeightVector WeightVector::parse(std::string_view csv) {
    std::vector<int> vals;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw std::invalid_argument("WeightVector: empty entry");
        vals.push_back(std::stoi(cur));
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',')
            flush();
        else if (!std::isspace(static_cast<unsigned char>(c)))
            cur.push_back(c);
    }
    if (!cur.empty()) flush();
    return WeightVector(std::move(vals));
}

bool WeightVector::is_all_ones() const {
    return std::all_of(w_.begin(), w_.end(), [](int v) { return v == 1; });
}

int WeightVector::max_weight() const { return *std::max_element(w_.begin(), w_.end()); }

long long WeightVector::total_weight() const {
    long long s = 0;
    for (int v : w_) s += v;
    return s;
}

std::map<int, std::vector<int>> WeightVector::classes() const {
    std::map<int, std::vector<int>> out;
    for (int i = 0; i < n(); ++i) out[w_[i]].push_back(i + 1);
    return out;
}

std::vector<int> WeightVector::class_positions(int value) const {
    std::vector<int> out;
    for (int i = 0; i < n(); ++i)
        if (w_[i] == value) out.push_back(i + 1);
    return out;
}

long long WeightVector::class_size(int value) const {
    return std::count(w_.begin(), w_.end(), value);
}

std::string WeightVector::str() const {
    std::string s;
    for (size_t i = 0; i < w_.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(w_[i]);
    }
    return s;
}

TwoValuedProfile::TwoValuedProfile(int n, int m) : n_(n), m_(m) {
    if (n < 1) throw std::invalid_argument("TwoValuedProfile: n must be positive");
    if (m < 0 || m > n) throw std::invalid_argument("TwoValuedProfile: need 0 <= m <= n");
    unsigned long long cells = 1ull + n + static_cast<unsigned long long>(m) * (m - 1) / 2;
    if (!std::has_single_bit(cells))
        throw infeasible_parameters("TwoValuedProfile: 1 + n + C(m,2) = " + std::to_string(cells) +
                                    " is not a power of two");
    t_ = std::countr_zero(cells);
}

WeightVector TwoValuedProfile::pi() const {
    std::vector<int> w(n_, 2);
    for (int i = 0; i < m_; ++i) w[i] = 1;
    return WeightVector(std::move(w));
}

uint64_t TwoValuedProfile::m_mask() const {
    if (n_ > 64) throw instance_too_large("TwoValuedProfile: mask needs n <= 64");
    return mask_bits(m_);
}

BinaryMatrix BinaryMatrix::parse(std::istream& in) {
    BinaryMatrix m;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (m.rows == 0) {
            m.cols = static_cast<int>(line.size());
            if (m.cols > 64) throw instance_too_large("BinaryMatrix: more than 64 columns");
        } else if (static_cast<int>(line.size()) != m.cols) {
            throw std::invalid_argument("BinaryMatrix: ragged rows");
        }
        uint64_t mask = 0;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '1')
                mask |= 1ull << i;
            else if (line[i] != '0')
                throw std::invalid_argument("BinaryMatrix: expected only '0'/'1' characters");
        }
        m.row_masks.push_back(mask);
        ++m.rows;
    }
    if (m.rows == 0) throw std::invalid_argument("BinaryMatrix: empty input");
    return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

std::string BinaryMatrix::str() const {
    std::string out;
    for (int r = 0; r < rows; ++r) {
        out += BitWord{row_masks[r], cols}.str();
        out.push_back('\n');
    }
    return out;
}

LinearCode::LinearCode(BinaryMatrix parity_check) : h_(std::move(parity_check)) {
    if (h_.cols < 1) throw std::invalid_argument("LinearCode: empty matrix");
    // reduced row echelon form, pivots at the lowest set bit of each row
    std::vector<uint64_t> reduced;
    std::vector<int> pivots;  // 0-based bit index per reduced row
    for (uint64_t row : h_.row_masks) {
        for (size_t i = 0; i < reduced.size(); ++i)
            if ((row >> pivots[i]) & 1u) row ^= reduced[i];
        if (!row) continue;
        int p = std::countr_zero(row);
        for (size_t i = 0; i < reduced.size(); ++i)
            if ((reduced[i] >> p) & 1u) reduced[i] ^= row;
        reduced.push_back(row);
        pivots.push_back(p);
    }
    rank_ = static_cast<int>(reduced.size());

    std::vector<bool> is_pivot(h_.cols, false);
    for (int p : pivots) is_pivot[p] = true;
    for (int f = 0; f < h_.cols; ++f) {
        if (is_pivot[f]) continue;
        uint64_t w = 1ull << f;
        for (size_t i = 0; i < reduced.size(); ++i)
            if ((reduced[i] >> f) & 1u) w |= 1ull << pivots[i];
        basis_.push_back(w);
    }
}

bool LinearCode::contains(uint64_t word) const {
    for (uint64_t row : h_.row_masks)
        if (std::popcount(row & word) & 1) return false;
    return true;
}

bool LinearCode::contains(const BitWord& w) const {
    if (w.n != n()) throw std::invalid_argument("LinearCode: word length mismatch");
    return contains(w.bits);
}

ExplicitCode::ExplicitCode(int n, std::vector<uint64_t> words) : n_(n), words_(std::move(words)) {
    if (n < 1 || n > 64) throw std::invalid_argument("ExplicitCode: length must be in 1..64");
    uint64_t mask = mask_bits(n);
    for (uint64_t w : words_)
        if (w & ~mask) throw std::invalid_argument("ExplicitCode: word exceeds length");
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

ExplicitCode ExplicitCode::parse(std::istream& in) {
    std::string line;
    int n = 0;
    std::vector<uint64_t> words;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        BitWord w = BitWord::parse(line);
        if (n == 0)
            n = w.n;
        else if (w.n != n)
            throw std::invalid_argument("ExplicitCode: mixed word lengths");
        words.push_back(w.bits);
    }
    if (n == 0) throw std::invalid_argument("ExplicitCode: empty input");
    return ExplicitCode(n, std::move(words));
}

ExplicitCode ExplicitCode::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

bool ExplicitCode::contains(uint64_t w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::string ExplicitCode::str() const {
    std::string out;
    for (uint64_t w : words_) {
        out += BitWord{w, n_}.str();
        out.push_back('\n');
    }
    return out;
}

ExplicitCode enumerate_codewords(const LinearCode& code) {
    int k = code.dimension();
    if (k > 24) throw instance_too_large("enumerate_codewords: dimension " + std::to_string(k) + " exceeds 24");
    const auto& basis = code.nullspace_basis();
    std::vector<uint64_t> words;
    words.reserve(1ull << k);
    uint64_t cur = 0;
    words.push_back(0);
    // Gray-code walk over the span
    for (uint64_t idx = 1; idx < (1ull << k); ++idx) {
        cur ^= basis[std::countr_zero(idx)];
        words.push_back(cur);
    }
    return ExplicitCode(code.n(), std::move(words));
}

}  // namespace piperfect
