#include "piperfect/hamming.hpp"

namespace piperfect {

HammingFamily build_hamming(int m, HammingVariant variant) {
    if (m < 2 || m > 20) throw std::invalid_argument("build_hamming: need 2 <= m <= 20");
    return {m, variant};
}

uint32_t HammingFamily::column_value(int position) const {
    if (position < 1 || position > length()) throw std::invalid_argument("HammingFamily: position out of range");
    return variant == HammingVariant::standard ? static_cast<uint32_t>(position)
                                               : static_cast<uint32_t>(position) & ((1u << m) - 1);
}

void HammingFamily::write_matrix(std::ostream& out) const {
    const int n = length();
    if (variant == HammingVariant::extended) {
        for (int i = 0; i < n; ++i) out.put('1');
        out.put('\n');
    }
    for (int row = 0; row < m; ++row) {
        int bit = m - 1 - row;  // top row holds the most significant bit
        for (int i = 1; i <= n; ++i) out.put((column_value(i) >> bit) & 1u ? '1' : '0');
        out.put('\n');
    }
}

BinaryMatrix HammingFamily::matrix() const {
    const int n = length();
    if (n > 64) throw instance_too_large("HammingFamily: matrix needs length <= 64, use write_matrix");
    BinaryMatrix h;
    h.cols = n;
    if (variant == HammingVariant::extended) {
        h.row_masks.push_back(mask_bits(n));
        ++h.rows;
    }
    for (int row = 0; row < m; ++row) {
        int bit = m - 1 - row;
        uint64_t mask = 0;
        for (int i = 1; i <= n; ++i)
            if ((column_value(i) >> bit) & 1u) mask |= 1ull << (i - 1);
        h.row_masks.push_back(mask);
        ++h.rows;
    }
    return h;
}

LinearCode HammingFamily::code() const { return LinearCode(matrix()); }

int third_point(int a, int b, int m) {
    int n = (1 << m) - 1;
    if (a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("third_point: position out of range");
    if (a == b) throw std::invalid_argument("third_point: positions must differ");
    return a ^ b;
}

int fourth_point(int a, int b, int c, int m) {
    int n = 1 << m;
    for (int p : {a, b, c})
        if (p < 1 || p > n) throw std::invalid_argument("fourth_point: position out of range");
    if (a == b || a == c || b == c) throw std::invalid_argument("fourth_point: positions must be distinct");
    int mask = n - 1;
    int value = (a & mask) ^ (b & mask) ^ (c & mask);
    return value == 0 ? n : value;
}

}  // namespace piperfect
