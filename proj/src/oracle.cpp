#include "zccs/oracle.hpp"

#include <functional>

namespace zccs {

namespace {

int zbit(std::uint64_t r, int i, int m, BitOrder order) {
    return static_cast<int>((r >> (order == BitOrder::Lsb ? i : m - 1 - i)) & 1U);
}

// Sum of coefficient * product of literal values for the raw term list.
long long eval_terms(const std::vector<Term>& terms, const std::vector<int>& z) {
    long long acc = 0;
    for (const auto& t : terms) {
        long long prod = t.coefficient;
        for (const auto& lit : t.literals) prod *= lit.complemented ? 1 - z[lit.var] : z[lit.var];
        acc += prod;
    }
    return acc;
}

int wrap(long long v, int q) { return static_cast<int>(((v % q) + q) % q); }

// Residual path end opposite beta1, read straight off the quadratic terms.
int opposite_end(const Gbf& quadratic, const std::vector<int>& deleted, int beta1) {
    const int n = quadratic.m();
    std::vector<int> degree(n, 0);
    std::vector<bool> gone(n, false);
    for (int p : deleted) gone[p] = true;
    for (const auto& t : quadratic.terms()) {
        if (t.literals.size() != 2) continue;
        int u = t.literals[0].var, v = t.literals[1].var;
        if (gone[u] || gone[v]) continue;
        ++degree[u];
        ++degree[v];
    }
    for (int v = 0; v < n; ++v) {
        if (!gone[v] && v != beta1 && degree[v] <= 1) return v;
    }
    return beta1;
}

struct Lemma1Oracle {
    const Lemma1Params& p;
    int offset;

    // g(z) straight from its definition.
    int g(const std::vector<int>& z) const {
        const int m = p.m1;
        auto nz = [&z](int i) { return 1 - z[i]; };
        long long v = eval_terms(p.quadratic.terms(), z) + p.d;
        for (int i = 0; i < m - 4; ++i) v += p.d_vec[i] * z[i];
        v += nz(m - 1) * (nz(m - 4) * (z[m - 3] + z[m - 2]) + z[m - 2] * z[m - 3]);
        v += z[p.beta1] * (nz(m - 1) * (z[m - 2] * nz(m - 3) * nz(m - 4) + z[m - 2] * z[m - 3]) +
                           z[m - 1] * nz(m - 2) * nz(m - 3));
        return wrap(v, 2);
    }

    std::vector<int> point(std::uint64_t r) const {
        std::vector<int> z(p.m1);
        for (int i = 0; i < p.m1; ++i) z[i] = zbit(r, i, p.m1, p.bit_order);
        return z;
    }

    // side 0: g^{a,n}(r); side 1: s^{a,n}(r).
    int value(int side, std::uint64_t n, std::uint64_t row, std::uint64_t r) const {
        const int k = static_cast<int>(p.deleted.size());
        const auto z = point(r);
        auto zc = z;
        for (int& x : zc) x = 1 - x;
        int a_last = static_cast<int>(row & 1U);
        long long v = side == 0 ? g(z) : g(zc);
        for (int i = 0; i < k; ++i) {
            int ai = static_cast<int>((row >> (k - i)) & 1U);
            int ni = static_cast<int>((n >> i) & 1U);
            int lit = side == 0 ? z[p.deleted[i]] : 1 - z[p.deleted[i]];
            v += (ai + ni) * lit;
        }
        v += (side == 0 ? a_last : 1 - a_last) * z[offset];
        return wrap(v, 2);
    }
};

struct Lemma2Oracle {
    const Lemma2Params& p;

    int value(int side, std::uint64_t n, std::uint64_t row, std::uint64_t r) const {
        const int k = static_cast<int>(p.deleted.size());
        std::vector<int> z(p.m2);
        for (int i = 0; i < p.m2; ++i) z[i] = zbit(r, i, p.m2, p.bit_order);
        auto zc = z;
        for (int& x : zc) x = 1 - x;
        long long lin = 0;
        for (int i = 0; i < k; ++i) {
            int ai = static_cast<int>((row >> (k - i)) & 1U);
            int ni = static_cast<int>((n >> i) & 1U);
            lin += (ai + ni) * (side == 0 ? z[p.deleted[i]] : 1 - z[p.deleted[i]]);
        }
        int a_last = static_cast<int>(row & 1U);
        lin += (side == 0 ? a_last : 1 - a_last) * z[p.beta1];
        long long v = eval_terms(p.f.terms(), side == 0 ? z : zc) + static_cast<long long>(p.q / 2) * lin;
        return wrap(v, p.q);
    }
};

int sign_bit(const BitVector& c, std::uint64_t block) {
    int s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * static_cast<int>((block >> i) & 1U);
    return s & 1;
}

std::vector<BitVector> s_r_of(const BlockParams& b) {
    if (!b.s_r.empty()) return b.s_r;
    std::vector<BitVector> out;
    for (int v = 0; v < b.R; ++v) {
        BitVector c(b.l);
        for (int i = 0; i < b.l; ++i) c[i] = (v >> i) & 1;
        out.push_back(c);
    }
    return out;
}

// Fills codes[side * groups + group][row][x] = element(side, n, group, row, x).
CodeSet assemble(int q, std::size_t n_count, std::size_t groups, std::size_t rows, std::size_t length,
                 const std::function<int(int, std::uint64_t, std::size_t, std::uint64_t, std::size_t)>& element) {
    CodeSet out;
    out.q = q;
    for (int side = 0; side < 2; ++side) {
        for (std::uint64_t n = 0; n < n_count; ++n) {
            for (std::size_t grp = 0; grp < groups; ++grp) {
                Code code;
                for (std::uint64_t row = 0; row < rows; ++row) {
                    std::vector<int> phases(length);
                    for (std::size_t x = 0; x < length; ++x) phases[x] = element(side, n, grp, row, x);
                    code.emplace_back(q, std::move(phases));
                }
                out.codes.push_back(std::move(code));
            }
        }
    }
    return out;
}

}  // namespace

CodeSet oracle_regenerate(const CodeSet& set) {
    if (!set.provenance) throw ParameterError("code set has no provenance to regenerate from");
    const auto& prov = *set.provenance;
    CodeSet out;

    auto lemma1_family = [&](const Lemma1Params& p, int R, const std::vector<BitVector>& s_r, bool three_block) {
        const Lemma1Oracle o{p, opposite_end(p.quadratic, p.deleted, p.beta1)};
        const std::size_t k = p.deleted.size();
        const std::uint64_t full = std::uint64_t{1} << p.m1;
        const std::size_t gamma = (full >> 1) + (full >> 3);
        const std::size_t blocks = three_block ? 3 : static_cast<std::size_t>(R);
        const std::size_t groups = three_block ? 1 : s_r.size();
        return assemble(2, std::size_t{1} << k, groups, std::size_t{2} << k, blocks * gamma,
                        [&](int side, std::uint64_t n, std::size_t grp, std::uint64_t row, std::size_t x) {
                            const std::size_t block = x / gamma, off = x % gamma;
                            const std::uint64_t r = side == 0 ? off : full - gamma + off;
                            int v = o.value(side, n, row, r);
                            v += three_block ? (block == 2 ? 1 : 0) : sign_bit(s_r[grp], block);
                            return v & 1;  // conjugation is the identity mod 2
                        });
    };
    auto lemma2_family = [&](const Lemma2Params& p, int R, const std::vector<BitVector>& s_r) {
        const Lemma2Oracle o{p};
        const std::size_t k = p.deleted.size();
        const std::size_t length = std::size_t{1} << p.m2;
        return assemble(p.q, std::size_t{1} << k, s_r.size(), std::size_t{2} << k, R * length,
                        [&](int side, std::uint64_t n, std::size_t grp, std::uint64_t row, std::size_t x) {
                            const std::size_t block = x / length;
                            long long v = o.value(side, n, row, x % length) +
                                          static_cast<long long>(p.q / 2) * sign_bit(s_r[grp], block);
                            if (side == 1) v = -v;
                            return wrap(v, p.q);
                        });
    };
    const std::vector<BitVector> single{BitVector{}};

    switch (prov.construction) {
        case Construction::Lemma1:
            out = lemma1_family(std::get<Lemma1Params>(prov.params), 1, single, false);
            break;
        case Construction::Theorem3:
            out = lemma1_family(std::get<Lemma1Params>(prov.params), 3, single, true);
            break;
        case Construction::Theorem1: {
            const auto& p = std::get<Theorem1Params>(prov.params);
            out = lemma1_family(p.base, p.blocks.R, s_r_of(p.blocks), false);
            break;
        }
        case Construction::Lemma2:
            out = lemma2_family(std::get<Lemma2Params>(prov.params), 1, single);
            break;
        case Construction::Theorem2: {
            const auto& p = std::get<Theorem2Params>(prov.params);
            out = lemma2_family(p.base, p.blocks.R, s_r_of(p.blocks));
            break;
        }
    }
    out.declared = out.measured();
    out.declared.Z = set.declared.Z;
    switch (prov.construction) {
        case Construction::Lemma1:
        case Construction::Lemma2: out.declared.Z = out.declared.L; break;
        case Construction::Theorem1: out.declared.Z = out.declared.L / std::get<Theorem1Params>(prov.params).blocks.R; break;
        case Construction::Theorem2: out.declared.Z = out.declared.L / std::get<Theorem2Params>(prov.params).blocks.R; break;
        case Construction::Theorem3: out.declared.Z = out.declared.L / 3 * 2; break;
    }
    out.provenance = prov;
    return out;
}

std::vector<Mismatch> compare_sets(const CodeSet& a, const CodeSet& b) {
    if (a.q != b.q || a.codes.size() != b.codes.size()) throw std::invalid_argument("code sets differ in shape");
    std::vector<Mismatch> out;
    for (std::size_t c = 0; c < a.codes.size(); ++c) {
        if (a.codes[c].size() != b.codes[c].size()) throw std::invalid_argument("code sets differ in shape");
        for (std::size_t r = 0; r < a.codes[c].size(); ++r) {
            const auto& x = a.codes[c][r];
            const auto& y = b.codes[c][r];
            if (x.size() != y.size()) throw std::invalid_argument("code sets differ in shape");
            for (std::size_t t = 0; t < x.size(); ++t) {
                if (x[t] != y[t]) out.push_back({c, r, t});
            }
        }
    }
    return out;
}

}  // namespace zccs
