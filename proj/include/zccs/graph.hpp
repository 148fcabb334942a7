#pragma once

// Labeled graph of a quadratic form and the "delete k vertices, leave a path"
// admissibility check used by the CCC constructions.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "zccs/error.hpp"
#include "zccs/gbf.hpp"

namespace zccs {

struct Edge {
    int u = 0;  // u < v
    int v = 0;
    int weight = 1;

    bool operator==(const Edge&) const = default;
};

class LabeledGraph {
public:
    explicit LabeledGraph(int vertex_count, std::vector<Edge> edges = {});

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<int> weight(int u, int v) const;

private:
    int vertex_count_;
    std::vector<Edge> edges_;  // sorted by (u, v)
};

struct PathCertificate {
    std::vector<int> deleted;     // sorted ascending
    std::vector<int> path_order;  // residual vertices in path order
    std::vector<int> end_vertices;  // one entry for a single-vertex path, else two (ascending)

    /// The end vertex opposite `end` (itself for a single-vertex path).
    int other_end(int end) const;
    bool operator==(const PathCertificate&) const = default;
};

enum class PathViolationKind { Disconnected, DegreeAtLeastThree, Cycle, WrongEdgeWeight };

struct PathViolation {
    PathViolationKind kind;
    std::string detail;
};

std::string describe(PathViolationKind kind);

class PathError : public ParameterError {
public:
    explicit PathError(PathViolation violation);
    const PathViolation& violation() const { return violation_; }

private:
    PathViolation violation_;
};

/// Vertices are the variables of Q, one edge per quadratic monomial. Linear
/// and constant terms are ignored; degree > 2 or complemented literals throw.
LabeledGraph graph_of_quadratic(const Gbf& Q);

/// Non-throwing form of validate_deletion_path.
std::variant<PathCertificate, PathViolation> check_deletion_path(
    const LabeledGraph& g, std::vector<int> deleted, std::optional<int> required_weight = {});

/// Throws PathError unless removing `deleted` leaves a single path (every
/// residual edge carrying `required_weight` when given).
PathCertificate validate_deletion_path(const LabeledGraph& g, std::vector<int> deleted,
                                       std::optional<int> required_weight = {});

/// All k-subsets of vertices whose removal leaves a path, in lexicographic
/// subset order.
std::vector<PathCertificate> enumerate_admissible_deletions(
    const LabeledGraph& g, int k, std::optional<int> required_weight = {});

}  // namespace zccs
