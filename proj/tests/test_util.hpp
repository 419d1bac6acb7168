#pragma once

// shared fixtures for the unit and acceptance suites

#include <random>
#include <set>
#include <string>
#include <vector>

#include "piperfect/construct.hpp"
#include "piperfect/hamming.hpp"
#include "piperfect/metric.hpp"
#include "piperfect/weightsearch.hpp"

namespace testutil {

inline const char* kExampleMatrix = "100101\n010011\n001111\n";

inline const char* kExampleCodewords[] = {"000000", "001111", "101100", "100011",
                                          "011010", "010101", "111001", "110110"};

inline piperfect::LinearCode example_code() {
    return piperfect::LinearCode(piperfect::BinaryMatrix::parse(kExampleMatrix));
}

inline piperfect::WeightVector example_pi() { return piperfect::WeightVector::parse("1,1,2,2,2,2"); }

inline piperfect::WeightVector random_pi(std::mt19937_64& rng, int n, int max_w = 4) {
    std::vector<int> w(n);
    for (int& v : w) v = 1 + static_cast<int>(rng() % max_w);
    return piperfect::WeightVector(w);
}

struct Instance {
    std::string name;
    piperfect::LinearCode code;
    piperfect::WeightVector pi;
    long long radius;
    // -1 unknown, 0 expect not-perfect, 1 expect perfect
    int expected = -1;
};

// hand-picked codes: every construction the library produces at desk scale,
// plus systematic perturbations with known verdicts
inline std::vector<Instance> curated_instances() {
    using namespace piperfect;
    std::vector<Instance> out;

    auto add = [&](std::string name, LinearCode code, WeightVector pi, long long r, int expected) {
        out.push_back(Instance{std::move(name), std::move(code), std::move(pi), r, expected});
    };

    // family matrices for every feasible (t, m) up to t = 4
    for (int t : {3, 4}) {
        for (int m = 0; m <= 5; ++m) {
            if ((1ll << t) - 1 - m - static_cast<long long>(m) * (m - 1) / 2 <= 0) continue;
            FamilyMatrix fam = family_build(t, m);
            auto [code, pi] = code_from_family(fam);
            std::string name = "family t" + std::to_string(t) + " m" + std::to_string(m);
            add(name, code, pi, 2, 1);
            add(name + " radius 1", code, pi, 1, 0);
            // with every weight even (m = 0) an odd radius buys nothing, so
            // the radius-3 spheres coincide with the radius-2 ones
            add(name + " radius 3", code, pi, 3, m == 0 ? 1 : 0);

            // swapping one tail column for a head pair-XOR leaves the family
            if (m >= 2) {
                FamilyMatrix broken = fam;
                broken.columns.back() = fam.columns[0] ^ fam.columns[1];
                add(name + " perturbed", LinearCode(broken.matrix()), pi, 2, 0);
            }
        }
    }

    // classical Hamming codes in the plain metric
    for (int m : {2, 3, 4}) {
        LinearCode code = build_hamming(m, HammingVariant::standard).code();
        add("hamming m" + std::to_string(m), code, WeightVector::all_ones(code.n()), 1, 1);
        add("hamming m" + std::to_string(m) + " radius 2", code, WeightVector::all_ones(code.n()), 2, 0);
    }

    // weighted 2-perfect Hamming constructions
    for (int m : {2, 3}) {
        for (int x1 = 0; x1 <= hamming_2perfect_max_x1(m); ++x1) {
            WeightAssignment wa = hamming_2perfect_pi(m, x1);
            add("hamming-pi m" + std::to_string(m) + " x1=" + std::to_string(x1),
                build_hamming(m, HammingVariant::standard).code(), wa.pi, 2, 1);
        }
    }

    // extended code, radius 2 (m = 2) and radius 3 (m = 2, 3)
    {
        WeightAssignment wa = ext_hamming_2perfect_pi(2);
        add("ext-hamming-pi m2", build_hamming(2, HammingVariant::extended).code(), wa.pi, 2, 1);
    }
    for (int m : {2, 3}) {
        for (int x1 : {1, 2, 3}) {
            if (x1 == 3 && m != 2) continue;
            WeightAssignment wa = ext_hamming_3perfect_pi(m, x1);
            LinearCode code = build_hamming(m, HammingVariant::extended).code();
            add("ext-3perfect m" + std::to_string(m) + " x1=" + std::to_string(x1), code, wa.pi, 3, 1);
            add("ext-3perfect m" + std::to_string(m) + " x1=" + std::to_string(x1) + " radius 2", code, wa.pi,
                2, 0);
        }
    }

    // the binary repetition code of length 7 is 3-perfect
    {
        BinaryMatrix h;
        h.rows = 6;
        h.cols = 7;
        for (int r = 0; r < 6; ++r) h.row_masks.push_back(1ull | (1ull << (r + 1)));
        add("repetition n7", LinearCode(h), WeightVector::all_ones(7), 3, 1);
        add("repetition n7 radius 2", LinearCode(h), WeightVector::all_ones(7), 2, 0);
    }

    // zero code {0}: perfect exactly when one sphere is the whole space
    {
        BinaryMatrix h;
        h.rows = h.cols = 3;
        for (int r = 0; r < 3; ++r) h.row_masks.push_back(1ull << r);
        add("zero code n3", LinearCode(h), WeightVector::all_ones(3), 3, 1);
        add("zero code n3 radius 2", LinearCode(h), WeightVector::all_ones(3), 2, 0);
    }

    // whole space F_2^n as a code: 0-perfect
    {
        BinaryMatrix h;
        h.rows = 1;
        h.cols = 4;
        h.row_masks.push_back(0);
        add("full space n4", LinearCode(h), WeightVector::all_ones(4), 0, 1);
        add("full space n4 radius 1", LinearCode(h), WeightVector::all_ones(4), 1, 0);
    }

    // even-weight code: packing fails in the plain metric
    {
        BinaryMatrix h;
        h.rows = 1;
        h.cols = 4;
        h.row_masks.push_back(0b1111);
        add("even weight n4", LinearCode(h), WeightVector::all_ones(4), 1, 0);
    }

    return out;
}

inline piperfect::LinearCode random_code(std::mt19937_64& rng, int max_n = 14) {
    int n = 3 + static_cast<int>(rng() % (max_n - 2));
    int t = 1 + static_cast<int>(rng() % 4);
    piperfect::BinaryMatrix h;
    h.rows = t;
    h.cols = n;
    for (int r = 0; r < t; ++r) h.row_masks.push_back(rng() & piperfect::mask_bits(n));
    return piperfect::LinearCode(h);
}

}  // namespace testutil
