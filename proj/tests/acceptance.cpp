// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the CLI binary, exercised directly where the criterion is about
// command output.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "piperfect/perfect.hpp"
#include "piperfect/spectrum.hpp"
#include "test_util.hpp"

using json = nlohmann::json;
using namespace piperfect;
using namespace testutil;

namespace {

std::string g_cli;
int g_failures = 0;

struct Criterion {
    int number;
    std::string label;
    double limit_seconds;
    std::function<void(std::vector<std::string>&)> body;
};

void require(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

std::string run_cli(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run: " + cmd);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
}

// every two-valued family code buildable at t <= 4, with its profile
struct BuiltCode {
    TwoValuedProfile profile;
    LinearCode lin;
    ExplicitCode words;
};

std::vector<BuiltCode> small_family_codes() {
    std::vector<BuiltCode> out;
    for (int t : {3, 4}) {
        for (int m = 0; m <= 5; ++m) {
            if ((1ll << t) - 1 - m - static_cast<long long>(m) * (m - 1) / 2 <= 0) continue;
            FamilyMatrix fam = family_build(t, m);
            LinearCode lin(fam.matrix());
            ExplicitCode words = enumerate_codewords(lin);
            out.push_back(BuiltCode{fam.profile, std::move(lin), std::move(words)});
        }
    }
    return out;
}

void criterion1(std::vector<std::string>& problems) {
    std::string raw = run_cli("construct --t 3 --m 2 --format json");
    json j = json::parse(raw, nullptr, false);
    require(problems, !j.is_discarded(), "CLI emitted unparseable JSON");
    if (j.is_discarded()) return;

    std::set<std::string> got;
    for (const auto& w : j["codewords"]) got.insert(w.get<std::string>());
    std::set<std::string> expect(std::begin(kExampleCodewords), std::end(kExampleCodewords));
    require(problems, got == expect, "codeword set differs from the published example");
    require(problems, j["verified"].get<bool>(), "CLI did not report verified=true");

    // independent exhaustive confirmation over all 64 vectors
    auto [code, pi] = code_from_family(family_build(3, 2));
    require(problems, verify_exhaustive(enumerate_codewords(code), pi, 2).perfect(),
            "exhaustive verification failed");
}

void criterion2(std::vector<std::string>& problems) {
    WeightAssignment wa = hamming_2perfect_pi(4, 5, {1, 2, 4, 8, 15});
    require(problems, wa.X1 == std::vector<int>{1, 2, 4, 8, 15}, "seeded X1 differs");
    require(problems, wa.X2.empty(), "X2 should be empty");

    ExplicitCode code = enumerate_codewords(build_hamming(4, HammingVariant::standard).code());
    require(problems, code.size() == 2048, "codeword count");
    require(problems, sphere_size_total(wa.pi, 2) == BigInt(16), "sphere size");
    require(problems, verify_exhaustive(code, wa.pi, 2).perfect(), "not 2-perfect over 2^15");
}

void criterion3(std::vector<std::string>& problems) {
    WeightAssignment wa = ext_hamming_2perfect_pi(4);
    require(problems, wa.X1.size() == 6, "|X1| != 6");
    require(problems, wa.X2.size() == 10, "|X2| != 10");

    ExplicitCode code = enumerate_codewords(build_hamming(4, HammingVariant::extended).code());
    require(problems, code.size() == 2048, "codeword count");
    require(problems, sphere_size_total(wa.pi, 2) == BigInt(32), "sphere size");
    require(problems, verify_exhaustive(code, wa.pi, 2).perfect(), "not 2-perfect over 2^16");
}

void criterion4(std::vector<std::string>& problems) {
    for (int m = 2; m <= 20; ++m) {
        FeasibilityVerdict v = ext_hamming_2perfect_feasibility(m);
        bool should = (m == 2 || m == 4);
        require(problems, v.feasible == should, "feasibility wrong at m=" + std::to_string(m));
        if (m == 12)
            require(problems, v.reason == FeasibilityReason::proven_infeasible_m12 && v.x1 == 91 && v.x2 == 4005,
                    "m=12 must cite the known impossibility with its packing numbers");
        else if (!should)
            require(problems,
                    v.reason == FeasibilityReason::nagell_no_solution ||
                        v.reason == FeasibilityReason::parity_fail,
                    "reason wrong at m=" + std::to_string(m));
    }
    using Sol = std::vector<std::pair<unsigned long long, int>>;
    require(problems, nagell_solutions(40) == Sol{{1, 3}, {3, 4}, {5, 5}, {11, 7}, {181, 15}},
            "nagell solution list");
}

void criterion5(std::vector<std::string>& problems) {
    std::vector<std::pair<int, int>> shapes = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {4, 2}};
    for (auto [m, x1] : shapes) {
        WeightAssignment wa = ext_hamming_3perfect_pi(m, x1);
        std::string tag = " (m=" + std::to_string(m) + ", x1=" + std::to_string(x1) + ")";
        long long nx1 = static_cast<long long>(wa.X1.size());
        long long nx2 = static_cast<long long>(wa.X2.size());
        long long nx3 = static_cast<long long>(wa.X3.size());
        BigInt identity = BigInt(1) + BigInt(nx1) + BigInt(nx2) + BigInt::binomial(nx1, 2) + BigInt(nx3) +
                          BigInt::binomial(nx1, 3) + BigInt(nx1) * BigInt(nx2);
        require(problems, identity == BigInt::pow2(m + 1), "packing identity fails" + tag);
        require(problems, sphere_size_total(wa.pi, 3) == BigInt::pow2(m + 1), "sphere size differs" + tag);

        ExplicitCode code = enumerate_codewords(build_hamming(m, HammingVariant::extended).code());
        require(problems, verify_exhaustive(code, wa.pi, 3).perfect(), "not 3-perfect" + tag);
    }
}

void criterion6(std::vector<std::string>& problems) {
    for (const BuiltCode& built : small_family_codes()) {
        std::string tag = " (t=" + std::to_string(built.profile.t()) +
                          ", m=" + std::to_string(built.profile.m()) + ")";
        FourierTable table = fourier(built.words);
        require(problems, table.at(0) == (1ll << (built.profile.n() - built.profile.t())),
                "A_0 != 2^(n-t)" + tag);
        require(problems, support_characterization(built.words, built.profile).ok,
                "support leaks outside the D_k" + tag);

        if (built.profile.n() > 12) continue;
        const int n = built.profile.n();
        const int m = built.profile.m();
        auto patterns = sphere_patterns(built.profile.pi(), 2);
        std::mt19937_64 rng(977);
        for (uint64_t x : {uint64_t{0}, rng() & mask_bits(n)}) {
            for (uint64_t d = 0; d < (1ull << n); ++d) {
                long long lhs = 0;
                for (uint64_t e : patterns) lhs += (std::popcount(d & (x ^ e)) & 1) ? -1 : 1;
                int k = std::popcount(d & built.profile.m_mask());
                long long bracket = 1 + n - 2ll * std::popcount(d) +
                                    static_cast<long long>(m) * (m - 1) / 2 - 2ll * k * (m - k);
                long long sign = (std::popcount(d & x) & 1) ? -1 : 1;
                if (lhs != sign * bracket) {
                    problems.push_back("sphere character identity fails" + tag);
                    return;
                }
            }
        }
    }
}

void criterion7(std::vector<std::string>& problems) {
    for (const BuiltCode& built : small_family_codes()) {
        std::string tag = " (t=" + std::to_string(built.profile.t()) +
                          ", m=" + std::to_string(built.profile.m()) + ")";
        DistributionTable direct = distribution_from_code(built.words, built.profile);
        std::vector<BigInt> head;
        for (int i = 0; i <= built.profile.m(); ++i) head.push_back(direct.a[i][0]);
        try {
            RecoveryResult rec = recover_distribution(head, built.profile);
            require(problems, rec.table.a == direct.a, "recovered table differs from direct count" + tag);
        } catch (const std::exception& e) {
            problems.push_back(std::string("recovery threw: ") + e.what() + tag);
        }
    }
    for (int m = 0; m <= 12; ++m) {
        EMatrix e = build_E(m);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; j <= m; ++j) {
                Rational dot(0);
                for (int k = 0; k <= m; ++k) dot += e.entries[i][k] * e.inverse[k][j];
                if (!(dot == Rational(i == j ? 1 : 0))) {
                    problems.push_back("E inverse wrong at m=" + std::to_string(m));
                    return;
                }
            }
    }
}

void criterion8(std::vector<std::string>& problems) {
    auto translated_equal = [](const ExplicitCode& code, uint64_t u) {
        std::set<uint64_t> moved;
        for (uint64_t w : code.words()) moved.insert(w ^ u);
        return moved == std::set<uint64_t>(code.words().begin(), code.words().end());
    };

    for (const BuiltCode& built : small_family_codes()) {
        BitWord u = translation_vector(built.profile);
        require(problems, translated_equal(built.words, u.bits),
                "translation fails for t=" + std::to_string(built.profile.t()) +
                    ", m=" + std::to_string(built.profile.m()));
    }

    // the weighted Hamming and extended-Hamming codes, via the general rule
    {
        WeightAssignment wa = hamming_2perfect_pi(4, 5, {1, 2, 4, 8, 15});
        ExplicitCode code = enumerate_codewords(build_hamming(4, HammingVariant::standard).code());
        require(problems, translated_equal(code, translation_vector(wa.pi).bits),
                "translation fails for the weighted Hamming code");
    }
    {
        WeightAssignment wa = ext_hamming_2perfect_pi(4);
        ExplicitCode code = enumerate_codewords(build_hamming(4, HammingVariant::extended).code());
        require(problems, translated_equal(code, translation_vector(wa.pi).bits),
                "translation fails for the weighted extended Hamming code");
    }
}

void criterion9(std::vector<std::string>& problems) {
    // metric axioms, 10^4 random triples
    std::mt19937_64 rng(1009);
    for (int iter = 0; iter < 10000; ++iter) {
        int n = 1 + static_cast<int>(rng() % 16);
        WeightVector pi = random_pi(rng, n);
        BitWord x{rng() & mask_bits(n), n}, y{rng() & mask_bits(n), n}, z{rng() & mask_bits(n), n};
        long long dxy = pi_distance(x, y, pi);
        bool ok = dxy >= 0 && (dxy == 0) == (x == y) && dxy == pi_distance(y, x, pi) &&
                  dxy <= pi_distance(x, z, pi) + pi_distance(z, y, pi);
        if (!ok) {
            problems.push_back("metric axiom violated at iteration " + std::to_string(iter));
            break;
        }
    }

    // sphere enumeration counts match the DP totals
    for (int n = 4; n <= 12; n += 2) {
        for (int trial = 0; trial < 2; ++trial) {
            WeightVector pi = random_pi(rng, n);
            for (long long r : {0ll, 1ll, 2ll, 3ll, 4ll}) {
                BigInt total = sphere_size_total(pi, r);
                int centers = n <= 8 ? (1 << n) : 64;
                for (int i = 0; i < centers; ++i) {
                    uint64_t x = n <= 8 ? static_cast<uint64_t>(i) : (rng() & mask_bits(n));
                    auto ball = sphere_enumerate({x, n}, r, pi);
                    if (BigInt(static_cast<long long>(ball.size())) != total) {
                        problems.push_back("sphere size mismatch at n=" + std::to_string(n));
                        return;
                    }
                }
            }
        }
    }

    // the two verifiers agree: curated plus 200 random codes
    long long curated_used = 0;
    for (const Instance& inst : curated_instances()) {
        if (inst.code.n() > 14) continue;
        ++curated_used;
        PerfectnessReport st = verify_structural(inst.code, inst.pi, inst.radius);
        PerfectnessReport ex = verify_exhaustive(enumerate_codewords(inst.code), inst.pi, inst.radius);
        bool ok = st.perfect() == ex.perfect() && (inst.expected < 0 || st.perfect() == (inst.expected == 1));
        if (!ok) {
            problems.push_back("verifier disagreement on " + inst.name);
            return;
        }
    }
    if (curated_used < 50)
        problems.push_back("only " + std::to_string(curated_used) + " curated instances");
    for (int iter = 0; iter < 200; ++iter) {
        LinearCode code = random_code(rng, 14);
        WeightVector pi = random_pi(rng, code.n());
        long long radius = 1 + static_cast<long long>(rng() % 4);
        PerfectnessReport st = verify_structural(code, pi, radius);
        PerfectnessReport ex = verify_exhaustive(enumerate_codewords(code), pi, radius);
        if (st.perfect() != ex.perfect()) {
            problems.push_back("verifier disagreement on random code " + std::to_string(iter));
            return;
        }
    }

    // Parseval up to n = 14
    for (int iter = 0; iter < 25; ++iter) {
        int n = 4 + static_cast<int>(rng() % 11);
        std::vector<uint64_t> words;
        int count = 1 + static_cast<int>(rng() % 300);
        for (int i = 0; i < count; ++i) words.push_back(rng() & mask_bits(n));
        ExplicitCode code(n, std::move(words));
        FourierTable table = fourier(code);
        BigInt sum(0);
        for (long long v : table.values) sum += BigInt(v) * BigInt(v);
        if (sum != BigInt::pow2(n) * BigInt(static_cast<long long>(code.size()))) {
            problems.push_back("Parseval fails at n=" + std::to_string(n));
            return;
        }
    }
}

void run(const Criterion& c) {
    std::vector<std::string> problems;
    auto start = std::chrono::steady_clock::now();
    try {
        c.body(problems);
    } catch (const std::exception& e) {
        problems.push_back(std::string("threw: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds)
        problems.push_back("time limit exceeded: " + std::to_string(seconds) + "s > " +
                           std::to_string(c.limit_seconds) + "s");
    if (problems.empty()) {
        std::printf("PASS criterion %d: %s (%.2fs)\n", c.number, c.label.c_str(), seconds);
    } else {
        ++g_failures;
        std::printf("FAIL criterion %d: %s (%.2fs)\n", c.number, c.label.c_str(), seconds);
        for (const std::string& p : problems) std::printf("     - %s\n", p.c_str());
    }
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance_tests <path-to-cli>\n");
        return 2;
    }
    g_cli = argv[1];

    std::vector<Criterion> criteria = {
        {1, "published length-6 example reproduced end to end", 1.0, criterion1},
        {2, "seeded weighted Hamming construction at m=4 over 2^15", 5.0, criterion2},
        {3, "weighted extended Hamming construction at m=4 over 2^16", 10.0, criterion3},
        {4, "extended feasibility sweep and Nagell solutions", 60.0, criterion4},
        {5, "3-perfect constructions with exact packing identities", 60.0, criterion5},
        {6, "character support confined to the frequency classes", 60.0, criterion6},
        {7, "distribution recovery round-trips, E inverse exact", 60.0, criterion7},
        {8, "translation symmetry of every verified code", 60.0, criterion8},
        {9, "property suites: axioms, spheres, verifier agreement, Parseval", 60.0, criterion9},
    };
    for (const Criterion& c : criteria) run(c);
    return g_failures == 0 ? 0 : 1;
}
