#include "zccs/gbf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace zccs {

namespace {

int mod(long long v, int q) {
    long long r = v % q;
    return static_cast<int>(r < 0 ? r + q : r);
}

// Returns false when the product vanishes identically (z_i * z̄_i).
bool normalize_literals(std::vector<Literal>& lits) {
    std::sort(lits.begin(), lits.end());
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    for (std::size_t i = 1; i < lits.size(); ++i) {
        if (lits[i].var == lits[i - 1].var) return false;
    }
    return true;
}

}  // namespace

std::string to_string(BitOrder order) { return order == BitOrder::Lsb ? "lsb" : "msb"; }

BitOrder parse_bit_order(const std::string& text) {
    if (text == "lsb") return BitOrder::Lsb;
    if (text == "msb") return BitOrder::Msb;
    throw std::invalid_argument("bit order must be 'lsb' or 'msb', got '" + text + "'");
}

Gbf::Gbf(int m, int q, std::vector<Term> terms) : m_(m), q_(q) {
    if (m < 0) throw std::invalid_argument("GBF variable count must be non-negative");
    if (q < 1) throw std::invalid_argument("GBF modulus must be positive");

    std::map<std::vector<Literal>, long long> merged;
    for (auto& t : terms) {
        for (const auto& lit : t.literals) {
            if (lit.var < 0 || lit.var >= m) {
                throw std::invalid_argument("literal z" + std::to_string(lit.var) +
                                            " outside a GBF of " + std::to_string(m) + " variables");
            }
        }
        if (!normalize_literals(t.literals)) continue;
        merged[t.literals] += t.coefficient;
    }
    for (auto& [lits, coeff] : merged) {
        int c = mod(coeff, q);
        if (c != 0) terms_.push_back(Term{c, lits});
    }
    // Sort by degree, then literal order, for a stable canonical form.
    std::stable_sort(terms_.begin(), terms_.end(),
                     [](const Term& a, const Term& b) { return a.degree() < b.degree(); });
}

Gbf Gbf::constant(int m, int q, int value) { return Gbf(m, q, {Term{value, {}}}); }

Gbf Gbf::variable(int m, int q, int var, bool complemented) {
    return Gbf(m, q, {Term{1, {Literal{var, complemented}}}});
}

int Gbf::degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.degree());
    return d;
}

int Gbf::eval(std::span<const std::uint8_t> point) const {
    if (point.size() != static_cast<std::size_t>(m_)) {
        throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                    " coordinates, GBF has " + std::to_string(m_) + " variables");
    }
    long long acc = 0;
    for (const auto& t : terms_) {
        bool one = true;
        for (const auto& lit : t.literals) {
            int z = point[lit.var] ? 1 : 0;
            if ((lit.complemented ? 1 - z : z) == 0) {
                one = false;
                break;
            }
        }
        if (one) acc += t.coefficient;
    }
    return mod(acc, q_);
}

Gbf Gbf::extended(int new_m) const {
    if (new_m < m_) throw std::invalid_argument("cannot shrink a GBF's variable count");
    return Gbf(new_m, q_, terms_);
}

Gbf Gbf::scaled(int factor) const {
    auto ts = terms_;
    for (auto& t : ts) t.coefficient = mod(static_cast<long long>(t.coefficient) * factor, q_);
    return Gbf(m_, q_, std::move(ts));
}

Gbf operator+(const Gbf& a, const Gbf& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("cannot add GBFs over different moduli");
    auto ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return Gbf(std::max(a.m_, b.m_), a.q_, std::move(ts));
}

Gbf operator*(const Gbf& a, const Gbf& b) {
    if (a.q_ != b.q_) throw std::invalid_argument("cannot multiply GBFs over different moduli");
    std::vector<Term> ts;
    ts.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Term t{static_cast<int>(static_cast<long long>(x.coefficient) * y.coefficient % a.q_),
                   x.literals};
            t.literals.insert(t.literals.end(), y.literals.begin(), y.literals.end());
            ts.push_back(std::move(t));
        }
    }
    return Gbf(std::max(a.m_, b.m_), a.q_, std::move(ts));
}

std::string to_string(const Gbf& f) {
    if (f.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms()) {
        if (!first) out << " + ";
        first = false;
        if (t.coefficient != 1 || t.literals.empty()) out << t.coefficient;
        for (const auto& lit : t.literals) out << (lit.complemented ? "~z" : "z") << lit.var;
    }
    return out.str();
}

PhaseSequence::PhaseSequence(int q, std::vector<int> phases) : q_(q), phases_(std::move(phases)) {
    if (q < 1) throw std::invalid_argument("phase modulus must be positive");
    for (int p : phases_) {
        if (p < 0 || p >= q) {
            throw std::invalid_argument("phase " + std::to_string(p) + " outside Z_" +
                                        std::to_string(q));
        }
    }
}

int eval_gbf(const Gbf& f, std::span<const std::uint8_t> point) { return f.eval(point); }

std::vector<std::uint8_t> index_to_bits(std::uint64_t r, int m, BitOrder order) {
    if (m < 0 || m > 63 || r >= (std::uint64_t{1} << m)) {
        throw std::out_of_range("index " + std::to_string(r) + " does not fit in " +
                                std::to_string(m) + " bits");
    }
    std::vector<std::uint8_t> bits(m);
    for (int i = 0; i < m; ++i) {
        int shift = order == BitOrder::Lsb ? i : m - 1 - i;
        bits[i] = static_cast<std::uint8_t>((r >> shift) & 1U);
    }
    return bits;
}

namespace {

PhaseSequence psi_range(const Gbf& f, std::uint64_t first, std::uint64_t count, BitOrder order) {
    std::vector<int> phases;
    phases.reserve(count);
    for (std::uint64_t r = first; r < first + count; ++r) {
        phases.push_back(f.eval(index_to_bits(r, f.m(), order)));
    }
    return PhaseSequence(f.q(), std::move(phases));
}

std::uint64_t full_length(const Gbf& f) { return std::uint64_t{1} << f.m(); }

void check_truncation(const Gbf& f, std::size_t j) {
    if (j < 1 || j > full_length(f)) {
        throw std::out_of_range("truncation length " + std::to_string(j) + " outside [1, 2^" +
                                std::to_string(f.m()) + "]");
    }
}

}  // namespace

PhaseSequence psi(const Gbf& f, BitOrder order) { return psi_range(f, 0, full_length(f), order); }

PhaseSequence psi_prefix(const Gbf& f, std::size_t j, BitOrder order) {
    check_truncation(f, j);
    return psi_range(f, 0, j, order);
}

PhaseSequence psi_suffix(const Gbf& f, std::size_t j, BitOrder order) {
    check_truncation(f, j);
    return psi_range(f, full_length(f) - j, j, order);
}

Gbf substitute_complement(const Gbf& f) {
    auto ts = f.terms();
    for (auto& t : ts) {
        for (auto& lit : t.literals) lit.complemented = !lit.complemented;
    }
    return Gbf(f.m(), f.q(), std::move(ts));
}

PhaseSequence conjugate(const PhaseSequence& s) {
    std::vector<int> out(s.phases());
    for (int& p : out) p = mod(-p, s.q());
    return PhaseSequence(s.q(), std::move(out));
}

PhaseSequence add_phase(const PhaseSequence& s, int offset) {
    std::vector<int> out(s.phases());
    for (int& p : out) p = mod(static_cast<long long>(p) + offset, s.q());
    return PhaseSequence(s.q(), std::move(out));
}

PhaseSequence concat(std::span<const PhaseSequence> parts) {
    if (parts.empty()) throw std::invalid_argument("cannot concatenate zero sequences");
    std::vector<int> out;
    for (const auto& p : parts) {
        if (p.q() != parts.front().q()) throw std::invalid_argument("mixed moduli in concatenation");
        out.insert(out.end(), p.phases().begin(), p.phases().end());
    }
    return PhaseSequence(parts.front().q(), std::move(out));
}

}  // namespace zccs
