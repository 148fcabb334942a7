#pragma once

// Aperiodic correlation of Z_q phase sequences and ZCCS verification.
//
// For q in {1, 2, 4} every correlation is a Gaussian integer and is computed
// exactly. Other moduli are evaluated in complex doubles and compared to zero
// with an absolute tolerance of 1e-6 * N * L.

#include <complex>
#include <cstdint>
#include <vector>

#include "zccs/constructions.hpp"
#include "zccs/gbf.hpp"

namespace zccs {

class CorrelationValue {
public:
    CorrelationValue() = default;
    static CorrelationValue exact(std::int64_t re, std::int64_t im);
    static CorrelationValue approximate(std::complex<double> value);

    bool is_exact() const { return exact_; }
    std::int64_t re() const { return re_; }  // meaningful only when exact
    std::int64_t im() const { return im_; }
    std::complex<double> to_complex() const;

    bool is_zero(double tolerance) const;
    bool equals(std::int64_t target, double tolerance) const;

    bool operator==(const CorrelationValue&) const = default;

private:
    bool exact_ = true;
    std::int64_t re_ = 0;
    std::int64_t im_ = 0;
    std::complex<double> approx_{};
};

std::string to_string(const CorrelationValue& v);

/// True when correlations over Z_q can be held as exact Gaussian integers.
bool exact_modulus(int q);

/// Aperiodic cross-correlation sum; zero for |tau| >= L.
CorrelationValue accs(const PhaseSequence& u, const PhaseSequence& v, long tau);
/// Row-wise sum of accs over two codes of equal shape.
CorrelationValue set_accs(const Code& ci, const Code& cj, long tau);

/// Complex-double evaluation of the same sums, for cross-checking the exact path.
std::complex<double> accs_float(const PhaseSequence& u, const PhaseSequence& v, long tau);
std::complex<double> set_accs_float(const Code& ci, const Code& cj, long tau);

/// set_accs for every tau in (-L, L); element t holds tau = t - (L - 1).
std::vector<CorrelationValue> set_profile(const Code& ci, const Code& cj);

struct PairProfile {
    std::size_t i = 0;
    std::size_t j = 0;
    std::vector<CorrelationValue> values;  // tau = index - (L - 1)

    const CorrelationValue& at(long tau) const;
};

struct Violation {
    std::size_t i = 0;
    std::size_t j = 0;
    long tau = 0;
    CorrelationValue value;
};

struct CorrelationReport {
    Dimensions dims;          // measured M, N, L and the tested Z
    bool exact = true;        // zero tests done in integer arithmetic
    std::vector<PairProfile> profiles;  // all i <= j when requested
    std::size_t measured_zcz = 0;
    CorrelationValue peak;    // Theta(C_0, C_0)(0)
    bool zccs_ok = false;     // every zero-zone condition holds at dims.Z
    bool optimal = false;     // zccs_ok and M = N * floor(L / Z)
    std::vector<Violation> violations;  // in-zone failures, capped at max_violations
    std::size_t violation_count = 0;
};

struct VerifyOptions {
    bool keep_profiles = true;
    std::size_t max_violations = 1000;
    unsigned threads = 0;  // 0: hardware concurrency
};

/// Checks the ZCCS conditions at zone width Z over every code pair. Failures
/// are reported, not thrown; Z outside [1, L] throws std::invalid_argument.
CorrelationReport verify_zccs(const CodeSet& set, std::size_t Z, const VerifyOptions& options = {});

/// Largest Z in [1, L] at which verify_zccs passes, 0 if none.
std::size_t measure_zcz(const CodeSet& set);

bool is_optimal(std::size_t M, std::size_t N, std::size_t L, std::size_t Z);

}  // namespace zccs
