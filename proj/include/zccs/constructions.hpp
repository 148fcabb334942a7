#pragma once

// Generators for the GBF-based CCC and ZCCS families.
//
// Code ordering is fixed so that output files are reproducible:
//   * lemma codes: n = 0..2^k-1 from the g/f side, then the same n from the
//     conjugated s/h side;
//   * theorem 1/2 codes: all Omega/Phi codes (n-major, then S_R order), then
//     all Lambda/Delta codes in the same order;
//   * rows inside a code: a = (a_0, ..., a_{k-1}, a) in lexicographic order.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "zccs/gbf.hpp"
#include "zccs/graph.hpp"

namespace zccs {

using Code = std::vector<PhaseSequence>;
using BitVector = std::vector<int>;

struct Dimensions {
    std::size_t M = 0;  // set size
    std::size_t N = 0;  // sequences per code
    std::size_t L = 0;  // sequence length
    std::size_t Z = 0;  // zero correlation zone width

    bool operator==(const Dimensions&) const = default;
};

std::string to_string(const Dimensions& d);

enum class Construction { Lemma1, Theorem1, Lemma2, Theorem2, Theorem3 };

std::string to_string(Construction c);
Construction parse_construction(const std::string& name);

/// Binary CCC seed: g = Q + sum d_i z_i + d + alpha + beta over m1 variables.
struct Lemma1Params {
    int m1 = 5;
    Gbf quadratic = Gbf::zero(1, 2);  // Q over m1 - 4 variables, q = 2
    BitVector d_vec;                  // length m1 - 4
    int d = 0;
    std::vector<int> deleted;  // p_0 < ... < p_{k-1}
    int beta1 = 0;             // path end vertex multiplying the beta term
    BitOrder bit_order = BitOrder::Lsb;
};

/// R-block extension shared by the first two ZCCS constructions.
struct BlockParams {
    int l = 1;
    int R = 2;
    std::vector<BitVector> s_r;  // empty: first R vectors of length l ascending
};

struct Theorem1Params {
    Lemma1Params base;
    BlockParams blocks;
};

/// q-ary CCC seed f over m2 variables (degree <= 2, plain literals).
struct Lemma2Params {
    int q = 2;
    int m2 = 1;
    Gbf f = Gbf::zero(1, 2);
    std::vector<int> deleted;
    int beta1 = 0;
    BitOrder bit_order = BitOrder::Lsb;
};

struct Theorem2Params {
    Lemma2Params base;
    BlockParams blocks;
};

using ConstructionParams = std::variant<Lemma1Params, Theorem1Params, Lemma2Params, Theorem2Params>;

struct Provenance {
    Construction construction;
    ConstructionParams params;
};

struct CodeSet {
    int q = 2;
    std::vector<Code> codes;
    Dimensions declared;
    std::optional<Provenance> provenance;

    /// Dimensions read off the stored data (Z taken from `declared`).
    Dimensions measured() const;
    /// Throws std::invalid_argument if the stored data disagrees with `declared`.
    void check_shape() const;
};

/// Non-power-of-two block length 2^{m1-1} + 2^{m1-3}.
std::size_t gamma_length(int m1);

/// Validated view of Lemma1Params.
struct Lemma1Layout {
    PathCertificate path;
    int offset_vertex = 0;  // carries the a * z term: path end opposite beta1
    std::size_t gamma = 0;
    std::vector<std::string> warnings;
};

struct Lemma2Layout {
    PathCertificate path;
    std::vector<std::string> warnings;
};

struct BlockLayout {
    std::vector<BitVector> s_r;
    std::vector<std::string> warnings;
};

Lemma1Layout resolve(const Lemma1Params& p);
Lemma2Layout resolve(const Lemma2Params& p);
BlockLayout resolve(const BlockParams& b);

std::vector<BitVector> default_s_r(int l, int R);

/// Row t of a code as a = (a_0, ..., a_{k-1}, a), lexicographic in t.
BitVector a_vec_for_row(int k, std::uint64_t t);

Gbf build_g(const Lemma1Params& p);

Gbf build_g_an(const Gbf& g, std::span<const int> deleted, int offset_vertex,
               std::span<const int> a_vec, std::uint64_t n);
Gbf build_s_an(const Gbf& g, std::span<const int> deleted, int offset_vertex,
               std::span<const int> a_vec, std::uint64_t n);
Gbf build_g_an(const Gbf& g, const Lemma1Params& p, std::span<const int> a_vec, std::uint64_t n);
Gbf build_s_an(const Gbf& g, const Lemma1Params& p, std::span<const int> a_vec, std::uint64_t n);

Gbf build_f_an(const Lemma2Params& p, std::span<const int> a_vec, std::uint64_t n);
Gbf build_h_an(const Lemma2Params& p, std::span<const int> a_vec, std::uint64_t n);

CodeSet lemma1_ccc(const Lemma1Params& p);
CodeSet theorem1_zccs(const Theorem1Params& p);
CodeSet lemma2_ccc(const Lemma2Params& p);
CodeSet theorem2_zccs(const Theorem2Params& p);
CodeSet theorem3_zccs(const Lemma1Params& p);

/// Dispatch on a provenance record.
CodeSet generate(const Provenance& provenance);

/// Warnings raised while resolving a provenance record's parameters.
std::vector<std::string> parameter_warnings(const Provenance& provenance);

/// Q = sum of weight * z_u z_v over `vertices` variables.
Gbf quadratic_form(int vertices, int q, std::span<const Edge> edges);

}  // namespace zccs
