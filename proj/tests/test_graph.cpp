#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "zccs/graph.hpp"

using namespace zccs;

namespace {

void check_certificate(const LabeledGraph& g, const PathCertificate& c) {
    std::vector<int> all = c.deleted;
    all.insert(all.end(), c.path_order.begin(), c.path_order.end());
    std::sort(all.begin(), all.end());
    for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(all[v] == v);
    for (std::size_t a = 0; a < c.path_order.size(); ++a) {
        for (std::size_t b = a + 1; b < c.path_order.size(); ++b) {
            const bool adjacent = g.weight(c.path_order[a], c.path_order[b]).has_value();
            REQUIRE(adjacent == (b == a + 1));
        }
    }
    REQUIRE(c.end_vertices.front() == std::min(c.path_order.front(), c.path_order.back()));
    REQUIRE(c.end_vertices.back() == std::max(c.path_order.front(), c.path_order.back()));
}

PathViolationKind violation_of(const LabeledGraph& g, std::vector<int> deleted, std::optional<int> w = {}) {
    try {
        validate_deletion_path(g, deleted, w);
    } catch (const PathError& e) {
        return e.violation().kind;
    }
    FAIL("expected a PathError");
    return PathViolationKind::Disconnected;
}

}  // namespace

TEST_CASE("graph_of_quadratic") {
    const auto g = graph_of_quadratic(fixtures::example_quadratic());
    CHECK(g.vertex_count() == 4);
    CHECK(g.edges() == std::vector<Edge>{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {2, 3, 1}});

    const auto empty = graph_of_quadratic(Gbf::zero(1, 2));
    CHECK(empty.vertex_count() == 1);
    CHECK(empty.edges().empty());

    const auto single = graph_of_quadratic(Gbf::variable(2, 2, 0) * Gbf::variable(2, 2, 1) + Gbf::variable(2, 2, 0));
    CHECK(single.edges().size() == 1);

    const Gbf cubic = Gbf::variable(3, 2, 0) * Gbf::variable(3, 2, 1) * Gbf::variable(3, 2, 2);
    CHECK_THROWS_AS(graph_of_quadratic(cubic), ParameterError);
    CHECK_THROWS_AS(graph_of_quadratic(Gbf::variable(2, 2, 0, true)), ParameterError);
}

TEST_CASE("validate_deletion_path: worked cases") {
    const auto g = graph_of_quadratic(fixtures::example_quadratic());
    const auto cert = validate_deletion_path(g, {0, 1});
    CHECK(cert.path_order == std::vector<int>{2, 3});
    CHECK(cert.end_vertices == std::vector<int>{2, 3});
    CHECK(cert.other_end(2) == 3);

    const auto trivial = validate_deletion_path(LabeledGraph(1), {});
    CHECK(trivial.end_vertices == std::vector<int>{0});
    CHECK(trivial.other_end(0) == 0);

    // Removing vertex 0 leaves edges 1-2 and 2-3: a path, not a triangle.
    CHECK(validate_deletion_path(g, {0}).path_order == std::vector<int>{1, 2, 3});
    CHECK(violation_of(g, {1}) == PathViolationKind::Cycle);
    CHECK(violation_of(g, {3}) == PathViolationKind::Cycle);
    CHECK(violation_of(g, {}) == PathViolationKind::DegreeAtLeastThree);
    CHECK(violation_of(LabeledGraph(3, {{0, 1, 1}}), {}) == PathViolationKind::Disconnected);
    CHECK(violation_of(LabeledGraph(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}), {}) == PathViolationKind::Disconnected);
    CHECK(violation_of(LabeledGraph(3, {{0, 1, 2}, {1, 2, 1}}), {}, 2) == PathViolationKind::WrongEdgeWeight);

    CHECK_THROWS_AS(validate_deletion_path(g, {4}), ParameterError);
    CHECK_THROWS_AS(validate_deletion_path(g, {1, 1}), ParameterError);
    CHECK_THROWS_AS(validate_deletion_path(g, {0, 1, 2, 3}), ParameterError);
}

TEST_CASE("enumerate_admissible_deletions: worked cases") {
    const auto g = graph_of_quadratic(fixtures::example_quadratic());
    const auto found = enumerate_admissible_deletions(g, 2);
    // Brute force over all six 2-subsets.
    std::vector<std::vector<int>> expected;
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            if (oracle::residual_is_path(g, {a, b})) expected.push_back({a, b});
        }
    }
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i].deleted == expected[i]);
    CHECK(found.front().deleted == std::vector<int>{0, 1});

    const LabeledGraph path(3, {{0, 1, 1}, {1, 2, 1}});
    const auto one = enumerate_admissible_deletions(path, 0);
    REQUIRE(one.size() == 1);
    CHECK(one[0].end_vertices == std::vector<int>{0, 2});

    const auto k4 = oracle::graph_from_mask(4, 0x3F);
    CHECK(enumerate_admissible_deletions(k4, 0).empty());
    CHECK_THROWS_AS(enumerate_admissible_deletions(k4, 4), ParameterError);
}

TEST_CASE("path detection agrees with brute force (all graphs up to 5 vertices)") {
    for (int n = 1; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            const auto g = oracle::graph_from_mask(n, mask);
            for (int k = 0; k < n; ++k) {
                const auto listed = enumerate_admissible_deletions(g, k);
                for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
                    if (__builtin_popcount(subset) != k) continue;
                    std::vector<int> del;
                    for (int v = 0; v < n; ++v) {
                        if ((subset >> v) & 1U) del.push_back(v);
                    }
                    const bool expect = oracle::residual_is_path(g, del);
                    const auto result = check_deletion_path(g, del);
                    REQUIRE(std::holds_alternative<PathCertificate>(result) == expect);
                    const bool in_list = std::any_of(listed.begin(), listed.end(),
                                                     [&](const PathCertificate& c) { return c.deleted == del; });
                    REQUIRE(in_list == expect);
                    if (expect) check_certificate(g, std::get<PathCertificate>(result));
                }
            }
        }
    }
}

TEST_CASE("path detection agrees with brute force (random graphs, 6 to 8 vertices)") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 6 + trial % 3;
        const int pairs = n * (n - 1) / 2;
        // Sparse graphs so that paths actually occur.
        std::uint64_t mask = 0;
        for (int b = 0; b < pairs; ++b) {
            if (rng() % 4 == 0) mask |= std::uint64_t{1} << b;
        }
        const auto g = oracle::graph_from_mask(n, mask);
        for (int k = 0; k <= 3; ++k) {
            const auto listed = enumerate_admissible_deletions(g, k);
            for (std::uint32_t subset = 0; subset < (1U << n); ++subset) {
                if (__builtin_popcount(subset) != k) continue;
                std::vector<int> del;
                for (int v = 0; v < n; ++v) {
                    if ((subset >> v) & 1U) del.push_back(v);
                }
                const bool expect = oracle::residual_is_path(g, del);
                const bool in_list = std::any_of(listed.begin(), listed.end(),
                                                 [&](const PathCertificate& c) { return c.deleted == del; });
                REQUIRE(in_list == expect);
            }
            for (const auto& c : listed) check_certificate(g, c);
        }
    }
}
