#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "zccs/gbf.hpp"

using namespace zccs;

namespace {

Gbf z(int m, int q, int i) { return Gbf::variable(m, q, i); }
Gbf zb(int m, int q, int i) { return Gbf::variable(m, q, i, true); }

Gbf random_gbf(std::mt19937& rng, int m, int q) {
    std::uniform_int_distribution<int> coeff(0, q - 1), var(0, m - 1), deg(0, 3), flip(0, 1);
    std::vector<Term> terms;
    for (int t = 0; t < 6; ++t) {
        Term term{coeff(rng), {}};
        for (int d = deg(rng); d > 0; --d) term.literals.push_back({var(rng), flip(rng) == 1});
        terms.push_back(term);
    }
    return Gbf(m, q, terms);
}

std::vector<std::uint8_t> complement(std::vector<std::uint8_t> p) {
    for (auto& b : p) b ^= 1U;
    return p;
}

}  // namespace

TEST_CASE("eval_gbf: monomials and complements") {
    const std::uint8_t ones[] = {1, 1};
    CHECK(eval_gbf(z(2, 2, 0) * z(2, 2, 1), ones) == 1);
    const std::uint8_t zero[] = {0};
    CHECK(eval_gbf(zb(1, 2, 0), zero) == 1);
    const std::uint8_t short_point[] = {0};
    CHECK_THROWS_AS(eval_gbf(z(2, 2, 0), short_point), std::invalid_argument);
}

TEST_CASE("eval_gbf: example seed matches a hand-written truth table") {
    const auto p = fixtures::example_base();
    const Gbf g = build_g(p);
    // g written out directly over z0..z7.
    auto hand = [](const std::vector<std::uint8_t>& b) {
        int z[8];
        for (int i = 0; i < 8; ++i) z[i] = b[i];
        auto n = [&](int i) { return 1 - z[i]; };
        int quad = z[0] * z[1] + z[1] * z[2] + z[2] * z[3] + z[3] * z[0] + z[0] * z[2];
        int lin = z[0] + z[1] + z[2] + z[3];
        int alpha = n(7) * (n(4) * (z[5] + z[6]) + z[6] * z[5]);
        int beta = z[2] * (n(7) * (z[6] * n(5) * n(4) + z[6] * z[5]) + z[7] * n(6) * n(5));
        return (quad + lin + alpha + beta) % 2;
    };
    const std::vector<std::uint8_t> origin(8, 0);
    CHECK(eval_gbf(g, origin) == 0);
    for (std::uint64_t r = 0; r < 256; ++r) {
        const auto bits = index_to_bits(r, 8);
        REQUIRE(eval_gbf(g, bits) == hand(bits));
    }
}

TEST_CASE("index_to_bits: LSB-first default, MSB-first option") {
    CHECK(index_to_bits(0, 3) == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(index_to_bits(1, 3) == std::vector<std::uint8_t>{1, 0, 0});
    CHECK(index_to_bits(6, 3) == std::vector<std::uint8_t>{0, 1, 1});
    CHECK(index_to_bits(1, 3, BitOrder::Msb) == std::vector<std::uint8_t>{0, 0, 1});
    CHECK_THROWS_AS(index_to_bits(8, 3), std::out_of_range);
}

TEST_CASE("psi and its truncations") {
    CHECK(psi(Gbf::zero(2, 2)).phases() == std::vector<int>{0, 0, 0, 0});
    const Gbf f = z(2, 2, 0) * z(2, 2, 1);
    CHECK(psi(f).phases() == std::vector<int>{0, 0, 0, 1});
    CHECK(psi(z(1, 4, 0).scaled(2)).phases() == std::vector<int>{0, 2});

    CHECK(psi_prefix(f, 2).phases() == std::vector<int>{0, 0});
    CHECK(psi_suffix(f, 2).phases() == std::vector<int>{0, 1});
    CHECK(psi_prefix(f, 4) == psi(f));
    CHECK(psi_suffix(f, 4) == psi(f));
    CHECK_THROWS_AS(psi_prefix(f, 0), std::out_of_range);
    CHECK_THROWS_AS(psi_suffix(f, 5), std::out_of_range);
}

TEST_CASE("substitute_complement") {
    const Gbf f = z(1, 2, 0);
    const Gbf fb = substitute_complement(f);
    const std::uint8_t one[] = {1};
    CHECK(eval_gbf(fb, one) == 0);
    const Gbf c = Gbf::constant(3, 2, 1);
    CHECK(substitute_complement(c) == c);
}

TEST_CASE("term normalization") {
    // z0 z0 = z0; z0 z̄0 = 0; like terms merge; coefficients reduce mod q.
    const Gbf f(2, 4, {Term{1, {{0, false}, {0, false}}}, Term{3, {{0, false}, {0, true}}}, Term{2, {{1, false}}},
                       Term{3, {{1, false}}}, Term{4, {}}});
    REQUIRE(f.terms().size() == 2);
    CHECK(f.terms()[0] == Term{1, {{0, false}}});
    CHECK(f.terms()[1] == Term{1, {{1, false}}});
    CHECK_THROWS_AS(Gbf(2, 2, {Term{1, {{2, false}}}}), std::invalid_argument);
}

TEST_CASE("properties over random GBFs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + trial % 12;
        const int q = std::array{2, 4, 3, 8}[trial % 4];
        const Gbf f = random_gbf(rng, m, q);
        const auto seq = psi(f);
        const auto fb = substitute_complement(f);
        const auto fbb = substitute_complement(fb);
        for (std::uint64_t r = 0; r < seq.size(); ++r) {
            const auto bits = index_to_bits(r, m);
            REQUIRE(seq[r] == eval_gbf(f, bits));
            REQUIRE(eval_gbf(fb, bits) == eval_gbf(f, complement(bits)));
            REQUIRE(eval_gbf(fbb, bits) == eval_gbf(f, bits));
            if (q == 2) REQUIRE((seq[r] == 0 || seq[r] == 1));
        }
        std::uniform_int_distribution<std::size_t> pick(1, seq.size());
        const std::size_t j = pick(rng);
        auto joined = psi_prefix(f, j).phases();
        if (j < seq.size()) {
            const auto tail = psi_suffix(f, seq.size() - j).phases();
            joined.insert(joined.end(), tail.begin(), tail.end());
        }
        REQUIRE(joined == seq.phases());
    }
}

TEST_CASE("sequence helpers") {
    const PhaseSequence s(4, {0, 1, 3});
    CHECK(conjugate(s).phases() == std::vector<int>{0, 3, 1});
    CHECK(add_phase(s, 2).phases() == std::vector<int>{2, 3, 1});
    const PhaseSequence parts[] = {s, s};
    CHECK(concat(parts).size() == 6);
    CHECK_THROWS_AS(PhaseSequence(2, {0, 2}), std::invalid_argument);
}
