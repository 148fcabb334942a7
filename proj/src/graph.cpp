#include "zccs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace zccs {

LabeledGraph::LabeledGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= vertex_count_) {
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " outside " + std::to_string(vertex_count_) + " vertices");
        }
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw std::invalid_argument("duplicate edge " + std::to_string(edges_[i].u) + "-" +
                                        std::to_string(edges_[i].v));
        }
    }
}

std::optional<int> LabeledGraph::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& e : edges_) {
        if (e.u == u && e.v == v) return e.weight;
    }
    return std::nullopt;
}

int PathCertificate::other_end(int end) const {
    if (end_vertices.size() == 1) return end_vertices.front();
    return end == end_vertices[0] ? end_vertices[1] : end_vertices[0];
}

std::string describe(PathViolationKind kind) {
    switch (kind) {
        case PathViolationKind::Disconnected: return "residual graph is disconnected";
        case PathViolationKind::DegreeAtLeastThree: return "residual graph has a vertex of degree >= 3";
        case PathViolationKind::Cycle: return "residual graph is a cycle";
        case PathViolationKind::WrongEdgeWeight: return "residual edge has the wrong weight";
    }
    return "residual graph is not a path";
}

PathError::PathError(PathViolation violation)
    : ParameterError(describe(violation.kind) + (violation.detail.empty() ? "" : ": " + violation.detail)),
      violation_(std::move(violation)) {}

LabeledGraph graph_of_quadratic(const Gbf& Q) {
    std::vector<Edge> edges;
    for (const auto& t : Q.terms()) {
        if (t.degree() > 2) {
            throw ParameterError("quadratic form contains a degree-" + std::to_string(t.degree()) +
                                 " term");
        }
        for (const auto& lit : t.literals) {
            if (lit.complemented) throw ParameterError("quadratic form contains a complemented literal");
        }
        if (t.degree() == 2) edges.push_back({t.literals[0].var, t.literals[1].var, t.coefficient});
    }
    return LabeledGraph(Q.m(), std::move(edges));
}

std::variant<PathCertificate, PathViolation> check_deletion_path(const LabeledGraph& g,
                                                                 std::vector<int> deleted,
                                                                 std::optional<int> required_weight) {
    const int n = g.vertex_count();
    std::sort(deleted.begin(), deleted.end());
    std::vector<bool> gone(n, false);
    for (std::size_t i = 0; i < deleted.size(); ++i) {
        int v = deleted[i];
        if (v < 0 || v >= n) throw ParameterError("deleted vertex " + std::to_string(v) + " out of range");
        if (i > 0 && deleted[i - 1] == v) throw ParameterError("deleted vertex " + std::to_string(v) + " listed twice");
        gone[v] = true;
    }
    if (static_cast<int>(deleted.size()) >= n) {
        throw ParameterError("deleting " + std::to_string(deleted.size()) + " of " +
                             std::to_string(n) + " vertices leaves nothing");
    }

    std::vector<std::vector<int>> adj(n);
    std::size_t residual_edges = 0;
    for (const auto& e : g.edges()) {
        if (gone[e.u] || gone[e.v]) continue;
        if (required_weight && e.weight != *required_weight) {
            return PathViolation{PathViolationKind::WrongEdgeWeight,
                                 "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                     " has weight " + std::to_string(e.weight) + ", need " +
                                     std::to_string(*required_weight)};
        }
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
        ++residual_edges;
    }

    std::vector<int> residual;
    for (int v = 0; v < n; ++v) {
        if (!gone[v]) residual.push_back(v);
    }
    for (int v : residual) {
        if (adj[v].size() >= 3) {
            return PathViolation{PathViolationKind::DegreeAtLeastThree,
                                 "vertex " + std::to_string(v) + " has degree " + std::to_string(adj[v].size())};
        }
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{residual.front()};
    seen[residual.front()] = true;
    std::size_t reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    if (reached < residual.size()) {
        return PathViolation{PathViolationKind::Disconnected,
                             std::to_string(residual.size() - reached) + " vertices unreachable from " +
                                 std::to_string(residual.front())};
    }
    if (residual_edges >= residual.size()) {
        return PathViolation{PathViolationKind::Cycle, ""};
    }

    // Connected, acyclic, max degree 2: a path. Walk it from the
    // smaller end vertex.
    PathCertificate cert;
    cert.deleted = deleted;
    int start = residual.front();
    if (residual.size() > 1) {
        for (int v : residual) {
            if (adj[v].size() == 1) {
                cert.end_vertices.push_back(v);
            }
        }
        start = cert.end_vertices.front();
    } else {
        cert.end_vertices.push_back(start);
    }
    int prev = -1;
    int cur = start;
    while (true) {
        cert.path_order.push_back(cur);
        int next = -1;
        for (int w : adj[cur]) {
            if (w != prev) next = w;
        }
        if (next < 0) break;
        prev = cur;
        cur = next;
    }
    return cert;
}

PathCertificate validate_deletion_path(const LabeledGraph& g, std::vector<int> deleted,
                                       std::optional<int> required_weight) {
    auto result = check_deletion_path(g, std::move(deleted), required_weight);
    if (auto* violation = std::get_if<PathViolation>(&result)) throw PathError(*violation);
    return std::get<PathCertificate>(std::move(result));
}

std::vector<PathCertificate> enumerate_admissible_deletions(const LabeledGraph& g, int k,
                                                            std::optional<int> required_weight) {
    const int n = g.vertex_count();
    if (k < 0 || k >= n) {
        throw ParameterError("k must satisfy 0 <= k < " + std::to_string(n));
    }
    std::vector<PathCertificate> out;
    // Lexicographic k-combinations of [0, n).
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
        auto result = check_deletion_path(g, subset, required_weight);
        if (auto* cert = std::get_if<PathCertificate>(&result)) out.push_back(std::move(*cert));

        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    }
    return out;
}

}  // namespace zccs
