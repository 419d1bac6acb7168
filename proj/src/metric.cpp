#include "piperfect/metric.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace piperfect {

long long pi_weight(const BitWord& x, const WeightVector& pi) {
    if (x.n != pi.n()) throw std::invalid_argument("pi_weight: length mismatch");
    long long s = 0;
    uint64_t b = x.bits;
    while (b) {
        s += pi.weights()[std::countr_zero(b)];
        b &= b - 1;
    }
    return s;
}

long long pi_distance(const BitWord& x, const BitWord& y, const WeightVector& pi) {
    return pi_weight(x ^ y, pi);
}

namespace {

struct WeightClass {
    int value;
    std::vector<int> positions;  // 1-based
};

std::vector<WeightClass> class_list(const WeightVector& pi) {
    std::vector<WeightClass> out;
    for (auto& [value, positions] : pi.classes()) out.push_back({value, positions});
    return out;
}

}  // namespace

SphereSizeBreakdown sphere_size(const WeightVector& pi, long long radius) {
    if (radius < 0) throw std::invalid_argument("sphere_size: negative radius");
    auto classes = class_list(pi);
    SphereSizeBreakdown out;
    out.total = BigInt(0);

    constexpr size_t kMaxTerms = 1u << 20;
    std::vector<std::pair<int, int>> picks;
    BigInt product(1);

    auto emit = [&] {
        SphereSizeBreakdown::Term term;
        for (auto& [v, k] : picks)
            if (k > 0) term.picks.emplace_back(v, k);
        term.count = product;
        out.total += product;
        out.terms.push_back(std::move(term));
        if (out.terms.size() > kMaxTerms)
            throw instance_too_large("sphere_size: composition count exceeds budget");
    };

    // depth-first over the number of positions taken from each class
    auto rec = [&](auto&& self, size_t ci, long long budget) -> void {
        if (ci == classes.size()) {
            emit();
            return;
        }
        const auto& cls = classes[ci];
        long long max_k = std::min<long long>(static_cast<long long>(cls.positions.size()),
                                              budget / cls.value);
        BigInt saved = product;
        for (long long k = 0; k <= max_k; ++k) {
            picks.emplace_back(cls.value, static_cast<int>(k));
            product = saved * BigInt::binomial(static_cast<long long>(cls.positions.size()), k);
            self(self, ci + 1, budget - k * cls.value);
            picks.pop_back();
        }
        product = saved;
    };
    rec(rec, 0, radius);
    return out;
}

BigInt sphere_size_total(const WeightVector& pi, long long radius) {
    if (radius < 0) throw std::invalid_argument("sphere_size_total: negative radius");
    long long cap = std::min(radius, pi.total_weight());
    // dp over achievable pi-weights <= cap, sparse to tolerate large weights
    std::map<long long, BigInt> dp;
    dp[0] = BigInt(1);
    for (auto& [value, positions] : pi.classes()) {
        long long size = static_cast<long long>(positions.size());
        std::map<long long, BigInt> next;
        for (auto& [w, cnt] : dp) {
            for (long long k = 0; k * value + w <= cap && k <= size; ++k) {
                BigInt add = cnt * BigInt::binomial(size, k);
                auto [it, fresh] = next.try_emplace(w + k * value, add);
                if (!fresh) it->second += add;
            }
        }
        dp = std::move(next);
        if (dp.size() > (1u << 22)) throw instance_too_large("sphere_size_total: state space exceeds budget");
    }
    BigInt total(0);
    for (auto& [w, cnt] : dp) total += cnt;
    return total;
}

std::vector<uint64_t> sphere_patterns(const WeightVector& pi, long long radius, uint64_t max_results) {
    if (radius < 0) throw std::invalid_argument("sphere_patterns: negative radius");
    if (pi.n() > 64) throw instance_too_large("sphere_patterns: n exceeds 64");
    BigInt total = sphere_size_total(pi, radius);
    if (total > BigInt(static_cast<unsigned long long>(max_results)))
        throw instance_too_large("sphere_patterns: sphere has " + total.to_string() + " words, budget is " +
                                 std::to_string(max_results));

    auto classes = class_list(pi);
    std::vector<uint64_t> out;
    out.reserve(static_cast<size_t>(total.to_int64()));

    // choose `remaining` more positions from cls.positions[from..]
    auto combos = [&](auto&& self, const WeightClass& cls, size_t from, int remaining, uint64_t acc,
                      auto&& next) -> void {
        if (remaining == 0) {
            next(acc);
            return;
        }
        for (size_t i = from; i + remaining <= cls.positions.size(); ++i)
            self(self, cls, i + 1, remaining - 1, acc | (1ull << (cls.positions[i] - 1)), next);
    };

    auto rec = [&](auto&& self, size_t ci, long long budget, uint64_t acc) -> void {
        if (ci == classes.size()) {
            out.push_back(acc);
            return;
        }
        const auto& cls = classes[ci];
        long long max_k = std::min<long long>(static_cast<long long>(cls.positions.size()),
                                              budget / cls.value);
        for (long long k = 0; k <= max_k; ++k) {
            combos(combos, cls, 0, static_cast<int>(k), acc,
                   [&](uint64_t with) { self(self, ci + 1, budget - k * cls.value, with); });
        }
    };
    rec(rec, 0, radius, 0);
    return out;
}

std::vector<BitWord> sphere_enumerate(const BitWord& x, long long radius, const WeightVector& pi,
                                      uint64_t max_results) {
    if (x.n != pi.n()) throw std::invalid_argument("sphere_enumerate: length mismatch");
    auto patterns = sphere_patterns(pi, radius, max_results);
    std::vector<BitWord> out;
    out.reserve(patterns.size());
    for (uint64_t e : patterns) out.push_back({x.bits ^ e, x.n});
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace piperfect
