#include <doctest.h>

#include <random>

#include "piperfect/perfect.hpp"
#include "test_util.hpp"

using namespace piperfect;
using namespace testutil;

TEST_SUITE_BEGIN("perfect");

TEST_CASE("the worked length-6 example is 2-perfect") {
    LinearCode code = example_code();
    WeightVector pi = example_pi();
    ExplicitCode words = enumerate_codewords(code);

    PerfectnessReport ex = verify_exhaustive(words, pi, 2);
    CHECK(ex.perfect());
    CHECK(ex.method == VerifyMethod::exhaustive);

    PerfectnessReport st = verify_structural(code, pi, 2);
    CHECK(st.perfect());
    CHECK(st.method == VerifyMethod::structural);
}

TEST_CASE("{0000,1111} with one heavy position, any choice of it") {
    ExplicitCode code = ExplicitCode::parse("0000\n1111\n");
    for (int heavy = 1; heavy <= 4; ++heavy) {
        std::vector<int> w(4, 1);
        w[heavy - 1] = 2;
        CHECK(verify_exhaustive(code, WeightVector(w), 2).perfect());
    }
}

TEST_CASE("a single sphere missing half the space names the hole") {
    ExplicitCode code(1, {0});
    PerfectnessReport rep = verify_exhaustive(code, WeightVector::all_ones(1), 0);
    CHECK(!rep.perfect());
    auto* witness = std::get_if<UncoveredWitness>(&rep.witness);
    REQUIRE(witness != nullptr);
    CHECK(witness->vector.str() == "1");
}

TEST_CASE("double cover carries both centers") {
    ExplicitCode code = ExplicitCode::parse("000\n011\n");
    PerfectnessReport rep = verify_exhaustive(code, WeightVector::all_ones(3), 1);
    CHECK(!rep.perfect());
    auto* witness = std::get_if<DoubleCoverWitness>(&rep.witness);
    REQUIRE(witness != nullptr);
    CHECK(pi_distance(witness->vector, witness->center_a, WeightVector::all_ones(3)) <= 1);
    CHECK(pi_distance(witness->vector, witness->center_b, WeightVector::all_ones(3)) <= 1);
    CHECK(witness->center_a != witness->center_b);
}

TEST_CASE("low-weight codeword search") {
    LinearCode code = example_code();
    WeightVector pi = example_pi();
    CHECK(low_weight_codewords(code, pi, 0).empty());
    CHECK(low_weight_codewords(code, pi, 4).empty());
    auto five = low_weight_codewords(code, pi, 5);
    std::set<std::string> got;
    for (auto& w : five) got.insert(w.str());
    CHECK(got == std::set<std::string>{"101100", "100011", "011010", "010101"});
}

TEST_CASE("classical Hamming codes are 1-perfect") {
    for (int m : {2, 3, 4}) {
        LinearCode code = build_hamming(m, HammingVariant::standard).code();
        WeightVector ones = WeightVector::all_ones(code.n());
        CHECK(verify_structural(code, ones, 1).perfect());
        CHECK(verify_exhaustive(enumerate_codewords(code), ones, 1).perfect());
    }
}

TEST_CASE("a balanced split is found and reported") {
    // the example matrix with the value-4 column replaced by the head pair
    // XOR: packing still holds, but 111000 becomes a weight-4 codeword
    BinaryMatrix h = BinaryMatrix::parse("101101\n011011\n000111\n");
    LinearCode code(h);
    WeightVector pi = example_pi();
    CHECK(code.dimension() == 3);

    PerfectnessReport st = verify_structural(code, pi, 2);
    CHECK(!st.perfect());
    auto* witness = std::get_if<PartitionWitness>(&st.witness);
    REQUIRE(witness != nullptr);
    CHECK(code.contains(witness->codeword));
    CHECK((witness->part_x ^ witness->part_y) == witness->codeword);
    CHECK(pi_weight(witness->part_x, pi) <= 2);
    CHECK(pi_weight(witness->part_y, pi) <= 2);

    CHECK(!verify_exhaustive(enumerate_codewords(code), pi, 2).perfect());
}

TEST_CASE("packing failure is reported with both totals") {
    BinaryMatrix h;
    h.rows = 1;
    h.cols = 4;
    h.row_masks.push_back(0b1111);
    PerfectnessReport rep = verify_structural(LinearCode(h), WeightVector::all_ones(4), 1);
    CHECK(!rep.perfect());
    auto* witness = std::get_if<PackingWitness>(&rep.witness);
    REQUIRE(witness != nullptr);
    CHECK(witness->sphere_total == BigInt(5));
    CHECK(witness->required == BigInt(2));
}

TEST_CASE("both verifiers agree on the curated instances") {
    for (const Instance& inst : curated_instances()) {
        if (inst.code.n() > 14) continue;
        CAPTURE(inst.name);
        PerfectnessReport st = verify_structural(inst.code, inst.pi, inst.radius);
        PerfectnessReport ex = verify_exhaustive(enumerate_codewords(inst.code), inst.pi, inst.radius);
        CHECK(st.perfect() == ex.perfect());
        if (inst.expected >= 0) CHECK(st.perfect() == (inst.expected == 1));
    }
}

TEST_CASE("both verifiers agree on random codes") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 60; ++iter) {
        LinearCode code = random_code(rng, 12);
        WeightVector pi = random_pi(rng, code.n());
        long long radius = 1 + static_cast<long long>(rng() % 4);
        CAPTURE(iter);
        PerfectnessReport st = verify_structural(code, pi, radius);
        PerfectnessReport ex = verify_exhaustive(enumerate_codewords(code), pi, radius);
        CHECK(st.perfect() == ex.perfect());
    }
}

TEST_CASE("a perfect verdict means the sphere sizes sum to the space exactly") {
    for (const Instance& inst : curated_instances()) {
        if (inst.expected != 1 || inst.code.n() > 14) continue;
        ExplicitCode words = enumerate_codewords(inst.code);
        BigInt covered = BigInt(static_cast<long long>(words.size())) * sphere_size_total(inst.pi, inst.radius);
        CHECK(covered == BigInt::pow2(static_cast<unsigned>(inst.code.n())));
    }
}

TEST_CASE("worker count does not change the verdict") {
    LinearCode code = example_code();
    ExplicitCode words = enumerate_codewords(code);
    for (int jobs : {1, 2, 4}) {
        VerifyOptions opts;
        opts.jobs = jobs;
        CHECK(verify_exhaustive(words, example_pi(), 2, opts).perfect());
        CHECK(!verify_exhaustive(words, example_pi(), 1, opts).perfect());
    }
}

TEST_CASE("exhaustive scans refuse oversized spaces") {
    ExplicitCode tiny(30, {0});
    CHECK_THROWS_AS(verify_exhaustive(tiny, WeightVector::all_ones(30), 1), instance_too_large);
}

TEST_SUITE_END();
