#pragma once

// Generalized Boolean functions {0,1}^m -> Z_q and their phase sequences.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace zccs {

/// Which bit of the integer index r maps to variable z_0.
enum class BitOrder { Lsb, Msb };

std::string to_string(BitOrder order);
BitOrder parse_bit_order(const std::string& text);

struct Literal {
    int var = 0;
    bool complemented = false;  // z̄ = 1 - z

    auto operator<=>(const Literal&) const = default;
};

/// coefficient * product of literals; an empty product is the constant 1.
struct Term {
    int coefficient = 0;
    std::vector<Literal> literals;

    int degree() const { return static_cast<int>(literals.size()); }
    bool operator==(const Term&) const = default;
};

/// A generalized Boolean function, kept as a sum of products of possibly
/// complemented literals. Construction normalizes: literals are sorted and
/// deduplicated, a product containing both z_i and z̄_i is dropped, like
/// terms are merged and coefficients are reduced mod q (zeros dropped).
class Gbf {
public:
    Gbf(int m, int q, std::vector<Term> terms = {});

    static Gbf zero(int m, int q) { return Gbf(m, q); }
    static Gbf constant(int m, int q, int value);
    static Gbf variable(int m, int q, int var, bool complemented = false);

    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const;

    int eval(std::span<const std::uint8_t> point) const;

    /// Same function viewed over `new_m >= m` variables.
    Gbf extended(int new_m) const;
    Gbf scaled(int factor) const;

    friend Gbf operator+(const Gbf& a, const Gbf& b);
    friend Gbf operator*(const Gbf& a, const Gbf& b);
    friend bool operator==(const Gbf&, const Gbf&) = default;

private:
    int m_;
    int q_;
    std::vector<Term> terms_;
};

std::string to_string(const Gbf& f);

/// A length-L vector of Z_q phases; entry t stands for omega_q^{phases[t]}.
class PhaseSequence {
public:
    PhaseSequence(int q, std::vector<int> phases);

    int q() const { return q_; }
    std::size_t size() const { return phases_.size(); }
    const std::vector<int>& phases() const { return phases_; }
    int operator[](std::size_t t) const { return phases_[t]; }

    friend bool operator==(const PhaseSequence&, const PhaseSequence&) = default;

private:
    int q_;
    std::vector<int> phases_;
};

int eval_gbf(const Gbf& f, std::span<const std::uint8_t> point);

std::vector<std::uint8_t> index_to_bits(std::uint64_t r, int m, BitOrder order = BitOrder::Lsb);

PhaseSequence psi(const Gbf& f, BitOrder order = BitOrder::Lsb);
/// First j entries of psi(f).
PhaseSequence psi_prefix(const Gbf& f, std::size_t j, BitOrder order = BitOrder::Lsb);
/// Last j entries of psi(f).
PhaseSequence psi_suffix(const Gbf& f, std::size_t j, BitOrder order = BitOrder::Lsb);

/// g(z̄_0, ..., z̄_{m-1}): toggles every literal.
Gbf substitute_complement(const Gbf& f);

// Sequence helpers used by the constructions.
PhaseSequence conjugate(const PhaseSequence& s);
PhaseSequence add_phase(const PhaseSequence& s, int offset);
PhaseSequence concat(std::span<const PhaseSequence> parts);

}  // namespace zccs
