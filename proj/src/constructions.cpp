#include "zccs/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zccs {

namespace {

constexpr int kMaxVariables = 24;
constexpr int kMaxBlockBits = 16;

std::string join(std::span<const int> xs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
    return out.str();
}

void check_bits(std::span<const int> bits, const char* what) {
    for (int b : bits) {
        if (b != 0 && b != 1) throw ParameterError(std::string(what) + " entries must be 0 or 1");
    }
}

void check_strictly_ascending(std::span<const int> xs) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] <= xs[i - 1]) {
            throw ParameterError("deleted vertices must be distinct and ascending, got {" + join(xs) + "}");
        }
    }
}

int parity(std::uint64_t x) { return __builtin_popcountll(x) & 1; }

std::uint64_t pack(const BitVector& c) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < c.size(); ++i) v |= static_cast<std::uint64_t>(c[i]) << i;
    return v;
}

// z_{p_i} offsets with coefficients (a_i + n_i), plus the a-coefficient term
// on offset_vertex; `mirror` selects the s/h form (complemented p-literals and
// coefficient 1 - a), and every coefficient is multiplied by `weight`.
Gbf add_offsets(const Gbf& base, std::span<const int> deleted, int offset_vertex,
                std::span<const int> a_vec, std::uint64_t n, int weight, bool mirror) {
    const std::size_t k = deleted.size();
    if (a_vec.size() != k + 1) {
        throw ParameterError("a-vector must have k + 1 = " + std::to_string(k + 1) + " entries");
    }
    check_bits(a_vec, "a-vector");
    if (k < 64 && n >= (std::uint64_t{1} << k)) {
        throw ParameterError("n = " + std::to_string(n) + " outside [0, 2^" + std::to_string(k) + ")");
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < k; ++i) {
        int coeff = a_vec[i] + static_cast<int>((n >> i) & 1U);
        terms.push_back(Term{coeff * weight, {Literal{deleted[i], mirror}}});
    }
    int a = a_vec[k];
    terms.push_back(Term{(mirror ? 1 - a : a) * weight, {Literal{offset_vertex, false}}});
    return base + Gbf(base.m(), base.q(), std::move(terms));
}

struct SeedBlocks {
    // first[n][t], second[n][t]: the unconjugated g/f-side and s/h-side rows.
    std::vector<std::vector<PhaseSequence>> first;
    std::vector<std::vector<PhaseSequence>> second;
    int k = 0;
};

SeedBlocks lemma1_blocks(const Lemma1Params& p) {
    const auto layout = resolve(p);
    const Gbf g = build_g(p);
    SeedBlocks out;
    out.k = static_cast<int>(p.deleted.size());
    const std::uint64_t count = std::uint64_t{1} << out.k;
    const std::uint64_t rows = count * 2;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<PhaseSequence> f_rows, s_rows;
        for (std::uint64_t t = 0; t < rows; ++t) {
            const auto a = a_vec_for_row(out.k, t);
            f_rows.push_back(psi_prefix(build_g_an(g, p.deleted, layout.offset_vertex, a, n),
                                        layout.gamma, p.bit_order));
            s_rows.push_back(psi_suffix(build_s_an(g, p.deleted, layout.offset_vertex, a, n),
                                        layout.gamma, p.bit_order));
        }
        out.first.push_back(std::move(f_rows));
        out.second.push_back(std::move(s_rows));
    }
    return out;
}

SeedBlocks lemma2_blocks(const Lemma2Params& p) {
    resolve(p);
    SeedBlocks out;
    out.k = static_cast<int>(p.deleted.size());
    const std::uint64_t count = std::uint64_t{1} << out.k;
    for (std::uint64_t n = 0; n < count; ++n) {
        std::vector<PhaseSequence> f_rows, h_rows;
        for (std::uint64_t t = 0; t < count * 2; ++t) {
            const auto a = a_vec_for_row(out.k, t);
            f_rows.push_back(psi(build_f_an(p, a, n), p.bit_order));
            h_rows.push_back(psi(build_h_an(p, a, n), p.bit_order));
        }
        out.first.push_back(std::move(f_rows));
        out.second.push_back(std::move(h_rows));
    }
    return out;
}

// R consecutive copies of `block`, copy r negated (phase + q/2) when c . r is odd.
PhaseSequence block_row(const PhaseSequence& block, const BitVector& c, int R) {
    const std::uint64_t cbits = pack(c);
    const int half = block.q() / 2;
    std::vector<PhaseSequence> parts;
    parts.reserve(R);
    for (int r = 0; r < R; ++r) parts.push_back(add_phase(block, half * parity(cbits & static_cast<std::uint64_t>(r))));
    return concat(parts);
}

CodeSet blocked_set(const SeedBlocks& seed, const BlockLayout& blocks, int R, int q) {
    CodeSet set;
    set.q = q;
    for (int side = 0; side < 2; ++side) {
        const auto& src = side == 0 ? seed.first : seed.second;
        for (const auto& rows : src) {
            for (const auto& c : blocks.s_r) {
                Code code;
                for (const auto& row : rows) {
                    auto seq = block_row(row, c, R);
                    code.push_back(side == 0 ? std::move(seq) : conjugate(seq));
                }
                set.codes.push_back(std::move(code));
            }
        }
    }
    return set;
}

CodeSet paired_set(const SeedBlocks& seed, int q) {
    CodeSet set;
    set.q = q;
    for (const auto& rows : seed.first) set.codes.push_back(rows);
    for (const auto& rows : seed.second) {
        Code code;
        for (const auto& row : rows) code.push_back(conjugate(row));
        set.codes.push_back(std::move(code));
    }
    return set;
}

}  // namespace

std::string to_string(const Dimensions& d) {
    return "(" + std::to_string(d.M) + ", " + std::to_string(d.N) + ", " + std::to_string(d.L) +
           ", " + std::to_string(d.Z) + ")";
}

std::string to_string(Construction c) {
    switch (c) {
        case Construction::Lemma1: return "lemma1";
        case Construction::Theorem1: return "thm1";
        case Construction::Lemma2: return "lemma2";
        case Construction::Theorem2: return "thm2";
        case Construction::Theorem3: return "thm3";
    }
    return "?";
}

Construction parse_construction(const std::string& name) {
    for (auto c : {Construction::Lemma1, Construction::Theorem1, Construction::Lemma2,
                   Construction::Theorem2, Construction::Theorem3}) {
        if (to_string(c) == name) return c;
    }
    throw ParameterError("unknown construction '" + name + "' (expected lemma1, thm1, lemma2, thm2 or thm3)");
}

Dimensions CodeSet::measured() const {
    Dimensions d;
    d.M = codes.size();
    d.N = codes.empty() ? 0 : codes.front().size();
    d.L = d.N == 0 ? 0 : codes.front().front().size();
    d.Z = declared.Z;
    return d;
}

void CodeSet::check_shape() const {
    const auto m = measured();
    if (m.M != declared.M || m.N != declared.N || m.L != declared.L) {
        throw std::invalid_argument("stored code set " + to_string(m) +
                                    " disagrees with declared " + to_string(declared));
    }
    if (declared.Z > declared.L) throw std::invalid_argument("declared Z exceeds L");
    for (const auto& code : codes) {
        if (code.size() != m.N) throw std::invalid_argument("codes have differing sequence counts");
        for (const auto& row : code) {
            if (row.size() != m.L) throw std::invalid_argument("sequences have differing lengths");
            if (row.q() != q) throw std::invalid_argument("sequence modulus differs from set modulus");
        }
    }
}

std::size_t gamma_length(int m1) {
    if (m1 < 5) throw ParameterError("m1 must be at least 5");
    return (std::size_t{1} << (m1 - 1)) + (std::size_t{1} << (m1 - 3));
}

Lemma1Layout resolve(const Lemma1Params& p) {
    if (p.m1 < 5 || p.m1 > kMaxVariables) {
        throw ParameterError("m1 must lie in [5, " + std::to_string(kMaxVariables) + "], got " +
                             std::to_string(p.m1));
    }
    const int nq = p.m1 - 4;
    if (p.quadratic.m() != nq || p.quadratic.q() != 2) {
        throw ParameterError("Q must be a binary form over m1 - 4 = " + std::to_string(nq) + " variables");
    }
    for (const auto& t : p.quadratic.terms()) {
        if (t.degree() != 2) throw ParameterError("Q must be a quadratic form (degree-2 terms only); use d-vec and d for the rest");
    }
    if (static_cast<int>(p.d_vec.size()) != nq) {
        throw ParameterError("d-vector must have m1 - 4 = " + std::to_string(nq) + " entries");
    }
    check_bits(p.d_vec, "d-vector");
    if (p.d != 0 && p.d != 1) throw ParameterError("d must be 0 or 1");
    check_strictly_ascending(p.deleted);

    Lemma1Layout layout;
    layout.path = validate_deletion_path(graph_of_quadratic(p.quadratic), p.deleted);
    const auto& ends = layout.path.end_vertices;
    if (std::find(ends.begin(), ends.end(), p.beta1) == ends.end()) {
        throw ParameterError("beta1 = " + std::to_string(p.beta1) + " is not an end vertex of the residual path {" +
                             join(layout.path.path_order) + "}");
    }
    layout.offset_vertex = layout.path.other_end(p.beta1);
    layout.gamma = gamma_length(p.m1);
    if (static_cast<int>(p.deleted.size()) > p.m1 - 5) {
        layout.warnings.push_back("k = " + std::to_string(p.deleted.size()) + " exceeds m1 - 5 = " +
                                  std::to_string(p.m1 - 5));
    }
    return layout;
}

Lemma2Layout resolve(const Lemma2Params& p) {
    if (p.q < 2 || p.q % 2 != 0) throw ParameterError("q must be an even integer >= 2");
    if (p.m2 < 1 || p.m2 > kMaxVariables) {
        throw ParameterError("m2 must lie in [1, " + std::to_string(kMaxVariables) + "]");
    }
    if (p.f.m() != p.m2 || p.f.q() != p.q) {
        throw ParameterError("f must be a GBF over m2 = " + std::to_string(p.m2) + " variables mod q");
    }
    check_strictly_ascending(p.deleted);
    Lemma2Layout layout;
    layout.path = validate_deletion_path(graph_of_quadratic(p.f), p.deleted, p.q / 2);
    const auto& ends = layout.path.end_vertices;
    if (std::find(ends.begin(), ends.end(), p.beta1) == ends.end()) {
        throw ParameterError("beta1 = " + std::to_string(p.beta1) + " is not an end vertex of the residual path {" +
                             join(layout.path.path_order) + "}");
    }
    return layout;
}

std::vector<BitVector> default_s_r(int l, int R) {
    std::vector<BitVector> out;
    for (int v = 0; v < R; ++v) {
        BitVector c(l);
        for (int i = 0; i < l; ++i) c[i] = (v >> i) & 1;
        out.push_back(std::move(c));
    }
    return out;
}

BlockLayout resolve(const BlockParams& b) {
    if (b.l < 1 || b.l > kMaxBlockBits) {
        throw ParameterError("l must lie in [1, " + std::to_string(kMaxBlockBits) + "]");
    }
    if (b.R < 2 || b.R % 2 != 0 || b.R > (1 << b.l)) {
        throw ParameterError("R must be even with 2 <= R <= 2^l = " + std::to_string(1 << b.l) +
                             ", got " + std::to_string(b.R));
    }
    BlockLayout layout;
    layout.s_r = b.s_r.empty() ? default_s_r(b.l, b.R) : b.s_r;
    if (static_cast<int>(layout.s_r.size()) != b.R) {
        throw ParameterError("S_R must list exactly R = " + std::to_string(b.R) + " vectors");
    }
    std::set<std::uint64_t> seen;
    for (const auto& c : layout.s_r) {
        if (static_cast<int>(c.size()) != b.l) {
            throw ParameterError("S_R vectors must have length l = " + std::to_string(b.l));
        }
        check_bits(c, "S_R");
        if (!seen.insert(pack(c)).second) throw ParameterError("S_R vectors must be distinct");
    }
    // Blocks of distinct c, c' cancel at tau = 0 only if sum_r (-1)^{(c^c').r} = 0.
    for (std::size_t i = 0; i < layout.s_r.size(); ++i) {
        for (std::size_t j = i + 1; j < layout.s_r.size(); ++j) {
            const std::uint64_t diff = pack(layout.s_r[i]) ^ pack(layout.s_r[j]);
            int sum = 0;
            for (int r = 0; r < b.R; ++r) sum += parity(diff & static_cast<std::uint64_t>(r)) ? -1 : 1;
            if (sum != 0) {
                layout.warnings.push_back("S_R vectors " + std::to_string(i) + " and " + std::to_string(j) +
                                          " are not orthogonal over the first R block indices; "
                                          "codes will correlate at tau = 0");
            }
        }
    }
    return layout;
}

BitVector a_vec_for_row(int k, std::uint64_t t) {
    BitVector a(k + 1);
    for (int i = 0; i <= k; ++i) a[i] = static_cast<int>((t >> (k - i)) & 1U);
    return a;
}

Gbf build_g(const Lemma1Params& p) {
    resolve(p);
    const int m = p.m1;
    auto z = [m](int i) { return Gbf::variable(m, 2, i); };
    auto zb = [m](int i) { return Gbf::variable(m, 2, i, true); };

    Gbf g = p.quadratic.extended(m) + Gbf::constant(m, 2, p.d);
    for (int i = 0; i < m - 4; ++i) {
        if (p.d_vec[i]) g = g + z(i);
    }
    const Gbf alpha = zb(m - 1) * (zb(m - 4) * (z(m - 3) + z(m - 2)) + z(m - 2) * z(m - 3));
    const Gbf beta = z(p.beta1) * (zb(m - 1) * (z(m - 2) * zb(m - 3) * zb(m - 4) + z(m - 2) * z(m - 3)) +
                                   z(m - 1) * zb(m - 2) * zb(m - 3));
    return g + alpha + beta;
}

Gbf build_g_an(const Gbf& g, std::span<const int> deleted, int offset_vertex,
               std::span<const int> a_vec, std::uint64_t n) {
    return add_offsets(g, deleted, offset_vertex, a_vec, n, 1, false);
}

Gbf build_s_an(const Gbf& g, std::span<const int> deleted, int offset_vertex,
               std::span<const int> a_vec, std::uint64_t n) {
    return add_offsets(substitute_complement(g), deleted, offset_vertex, a_vec, n, 1, true);
}

Gbf build_g_an(const Gbf& g, const Lemma1Params& p, std::span<const int> a_vec, std::uint64_t n) {
    return build_g_an(g, p.deleted, resolve(p).offset_vertex, a_vec, n);
}

Gbf build_s_an(const Gbf& g, const Lemma1Params& p, std::span<const int> a_vec, std::uint64_t n) {
    return build_s_an(g, p.deleted, resolve(p).offset_vertex, a_vec, n);
}

Gbf build_f_an(const Lemma2Params& p, std::span<const int> a_vec, std::uint64_t n) {
    if (p.q % 2 != 0) throw ParameterError("q must be even");
    return add_offsets(p.f, p.deleted, p.beta1, a_vec, n, p.q / 2, false);
}

Gbf build_h_an(const Lemma2Params& p, std::span<const int> a_vec, std::uint64_t n) {
    if (p.q % 2 != 0) throw ParameterError("q must be even");
    return add_offsets(substitute_complement(p.f), p.deleted, p.beta1, a_vec, n, p.q / 2, true);
}

CodeSet lemma1_ccc(const Lemma1Params& p) {
    const auto seed = lemma1_blocks(p);
    CodeSet set = paired_set(seed, 2);
    const std::size_t size = std::size_t{2} << seed.k;
    const std::size_t gamma = gamma_length(p.m1);
    set.declared = {size, size, gamma, gamma};
    set.provenance = Provenance{Construction::Lemma1, p};
    return set;
}

CodeSet theorem1_zccs(const Theorem1Params& p) {
    const auto blocks = resolve(p.blocks);
    const auto seed = lemma1_blocks(p.base);
    CodeSet set = blocked_set(seed, blocks, p.blocks.R, 2);
    const std::size_t n_rows = std::size_t{2} << seed.k;
    const std::size_t gamma = gamma_length(p.base.m1);
    set.declared = {p.blocks.R * n_rows, n_rows, p.blocks.R * gamma, gamma};
    Theorem1Params stored = p;
    stored.blocks.s_r = blocks.s_r;
    set.provenance = Provenance{Construction::Theorem1, stored};
    return set;
}

CodeSet lemma2_ccc(const Lemma2Params& p) {
    const auto seed = lemma2_blocks(p);
    CodeSet set = paired_set(seed, p.q);
    const std::size_t size = std::size_t{2} << seed.k;
    const std::size_t length = std::size_t{1} << p.m2;
    set.declared = {size, size, length, length};
    set.provenance = Provenance{Construction::Lemma2, p};
    return set;
}

CodeSet theorem2_zccs(const Theorem2Params& p) {
    const auto blocks = resolve(p.blocks);
    const auto seed = lemma2_blocks(p.base);
    CodeSet set = blocked_set(seed, blocks, p.blocks.R, p.base.q);
    const std::size_t n_rows = std::size_t{2} << seed.k;
    const std::size_t length = std::size_t{1} << p.base.m2;
    set.declared = {p.blocks.R * n_rows, n_rows, p.blocks.R * length, length};
    Theorem2Params stored = p;
    stored.blocks.s_r = blocks.s_r;
    set.provenance = Provenance{Construction::Theorem2, stored};
    return set;
}

CodeSet theorem3_zccs(const Lemma1Params& p) {
    const auto seed = lemma1_blocks(p);
    CodeSet set;
    set.q = 2;
    for (int side = 0; side < 2; ++side) {
        const auto& src = side == 0 ? seed.first : seed.second;
        for (const auto& rows : src) {
            Code code;
            for (const auto& row : rows) {
                const PhaseSequence parts[] = {row, row, add_phase(row, 1)};
                auto seq = concat(parts);
                code.push_back(side == 0 ? std::move(seq) : conjugate(seq));
            }
            set.codes.push_back(std::move(code));
        }
    }
    const std::size_t size = std::size_t{2} << seed.k;
    const std::size_t gamma = gamma_length(p.m1);
    set.declared = {size, size, 3 * gamma, 2 * gamma};
    set.provenance = Provenance{Construction::Theorem3, p};
    return set;
}

namespace {

template <class T>
const T& params_as(const Provenance& prov) {
    if (const auto* p = std::get_if<T>(&prov.params)) return *p;
    throw ParameterError("parameters do not match construction " + to_string(prov.construction));
}

}  // namespace

CodeSet generate(const Provenance& prov) {
    switch (prov.construction) {
        case Construction::Lemma1: return lemma1_ccc(params_as<Lemma1Params>(prov));
        case Construction::Theorem1: return theorem1_zccs(params_as<Theorem1Params>(prov));
        case Construction::Lemma2: return lemma2_ccc(params_as<Lemma2Params>(prov));
        case Construction::Theorem2: return theorem2_zccs(params_as<Theorem2Params>(prov));
        case Construction::Theorem3: return theorem3_zccs(params_as<Lemma1Params>(prov));
    }
    throw ParameterError("unknown construction");
}

std::vector<std::string> parameter_warnings(const Provenance& prov) {
    std::vector<std::string> out;
    auto append = [&out](const std::vector<std::string>& w) { out.insert(out.end(), w.begin(), w.end()); };
    switch (prov.construction) {
        case Construction::Lemma1:
        case Construction::Theorem3: append(resolve(params_as<Lemma1Params>(prov)).warnings); break;
        case Construction::Theorem1: {
            const auto& p = params_as<Theorem1Params>(prov);
            append(resolve(p.base).warnings);
            append(resolve(p.blocks).warnings);
            break;
        }
        case Construction::Lemma2: append(resolve(params_as<Lemma2Params>(prov)).warnings); break;
        case Construction::Theorem2: {
            const auto& p = params_as<Theorem2Params>(prov);
            append(resolve(p.base).warnings);
            append(resolve(p.blocks).warnings);
            break;
        }
    }
    return out;
}

Gbf quadratic_form(int vertices, int q, std::span<const Edge> edges) {
    std::vector<Term> terms;
    for (const auto& e : edges) {
        if (e.u == e.v) throw ParameterError("quadratic edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is a loop");
        terms.push_back(Term{e.weight, {Literal{e.u, false}, Literal{e.v, false}}});
    }
    try {
        return Gbf(vertices, q, std::move(terms));
    } catch (const std::invalid_argument& err) {
        throw ParameterError(err.what());
    }
}

}  // namespace zccs
