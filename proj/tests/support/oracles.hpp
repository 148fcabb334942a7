#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// correlation or path code.

#include <algorithm>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "zccs/constructions.hpp"
#include "zccs/graph.hpp"

namespace oracle {

using cvec = std::vector<std::complex<double>>;

inline cvec values(const zccs::PhaseSequence& s) {
    cvec out;
    for (int p : s.phases()) out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * p / s.q()));
    return out;
}

// Three-case aperiodic cross-correlation, written out literally.
inline std::complex<double> accs(const cvec& u, const cvec& v, long tau) {
    const long L = static_cast<long>(u.size());
    std::complex<double> sum{};
    if (tau >= 0 && tau < L) {
        for (long k = 0; k <= L - 1 - tau; ++k) sum += u[k] * std::conj(v[k + tau]);
    } else if (tau < 0 && tau > -L) {
        for (long k = 0; k <= L + tau - 1; ++k) sum += u[k - tau] * std::conj(v[k]);
    }
    return sum;
}

inline std::complex<double> set_accs(const zccs::Code& a, const zccs::Code& b, long tau) {
    std::complex<double> sum{};
    for (std::size_t r = 0; r < a.size(); ++r) sum += accs(values(a[r]), values(b[r]), tau);
    return sum;
}

// Brute-force check of the zero-zone conditions for |tau| < Z.
inline bool is_zccs(const zccs::CodeSet& set, std::size_t Z, double tol = 1e-6) {
    const std::size_t N = set.codes.front().size();
    const std::size_t L = set.codes.front().front().size();
    for (std::size_t i = 0; i < set.codes.size(); ++i) {
        for (std::size_t j = 0; j < set.codes.size(); ++j) {
            for (long tau = -static_cast<long>(Z) + 1; tau < static_cast<long>(Z); ++tau) {
                const auto v = set_accs(set.codes[i], set.codes[j], tau);
                const double target = (i == j && tau == 0) ? static_cast<double>(N * L) : 0.0;
                if (std::abs(v - target) > tol) return false;
            }
        }
    }
    return true;
}

// A residual graph is a path iff some ordering of its vertices makes every
// consecutive pair adjacent and it has exactly |V| - 1 edges.
inline bool residual_is_path(const zccs::LabeledGraph& g, const std::vector<int>& deleted) {
    std::vector<int> rest;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (std::find(deleted.begin(), deleted.end(), v) == deleted.end()) rest.push_back(v);
    }
    std::size_t edges = 0;
    for (const auto& e : g.edges()) {
        bool keep = std::find(deleted.begin(), deleted.end(), e.u) == deleted.end() &&
                    std::find(deleted.begin(), deleted.end(), e.v) == deleted.end();
        edges += keep ? 1 : 0;
    }
    if (rest.empty() || edges + 1 != rest.size()) return false;
    do {
        bool ok = true;
        for (std::size_t i = 1; i < rest.size() && ok; ++i) ok = g.weight(rest[i - 1], rest[i]).has_value();
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

inline zccs::LabeledGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<zccs::Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++bit) {
            if ((mask >> bit) & 1U) edges.push_back({u, v, 1});
        }
    }
    return zccs::LabeledGraph(n, edges);
}

inline zccs::PhaseSequence random_sequence(std::mt19937& rng, int q, std::size_t L) {
    std::uniform_int_distribution<int> dist(0, q - 1);
    std::vector<int> p(L);
    for (auto& x : p) x = dist(rng);
    return zccs::PhaseSequence(q, p);
}

}  // namespace oracle
