#include "zccs/correlation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zccs {

namespace {

// Correlation terms u_k conj(v_k') are omega^{p - p'}, so a sum is fully
// described by how often each phase difference occurs.
class DifferenceCounts {
public:
    explicit DifferenceCounts(int q) : q_(q), counts_(q, 0) {}

    void add(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
        const std::size_t n = a.size();
        if (q_ == 1) {
            counts_[0] += static_cast<std::int64_t>(n);
        } else if (q_ == 2) {
            std::int64_t diff = 0;
            for (std::size_t t = 0; t < n; ++t) diff += a[t] ^ b[t];
            counts_[1] += diff;
            counts_[0] += static_cast<std::int64_t>(n) - diff;
        } else if ((q_ & (q_ - 1)) == 0) {
            const int mask = q_ - 1;
            for (std::size_t t = 0; t < n; ++t) ++counts_[(a[t] - b[t]) & mask];
        } else {
            for (std::size_t t = 0; t < n; ++t) ++counts_[(a[t] + q_ - b[t]) % q_];
        }
    }

    void add_wide(std::span<const int> a, std::span<const int> b) {
        for (std::size_t t = 0; t < a.size(); ++t) ++counts_[((a[t] - b[t]) % q_ + q_) % q_];
    }

    CorrelationValue value() const {
        switch (q_) {
            case 1: return CorrelationValue::exact(counts_[0], 0);
            case 2: return CorrelationValue::exact(counts_[0] - counts_[1], 0);
            case 4: return CorrelationValue::exact(counts_[0] - counts_[2], counts_[1] - counts_[3]);
            default: break;
        }
        std::complex<double> sum{};
        for (int r = 0; r < q_; ++r) {
            if (counts_[r] == 0) continue;
            const double angle = 2.0 * std::numbers::pi * r / q_;
            sum += static_cast<double>(counts_[r]) * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return CorrelationValue::approximate(sum);
    }

private:
    int q_;
    std::vector<std::int64_t> counts_;
};

// Overlapping windows of u and v for shift tau.
struct Window {
    std::size_t u_begin = 0;
    std::size_t v_begin = 0;
    std::size_t length = 0;
};

Window window(std::size_t L, long tau) {
    const std::size_t shift = static_cast<std::size_t>(tau < 0 ? -tau : tau);
    if (shift >= L) return {};
    if (tau >= 0) return {0, shift, L - shift};
    return {shift, 0, L - shift};
}

// Phase rows narrowed to bytes when q <= 256.
struct PreparedCode {
    int q = 2;
    std::size_t L = 0;
    std::vector<std::vector<std::uint8_t>> narrow;
    const Code* wide = nullptr;
};

PreparedCode prepare(const Code& code) {
    PreparedCode p;
    p.wide = &code;
    if (code.empty()) return p;
    p.q = code.front().q();
    p.L = code.front().size();
    if (p.q <= 256) {
        for (const auto& row : code) p.narrow.emplace_back(row.phases().begin(), row.phases().end());
    }
    return p;
}

CorrelationValue prepared_accs(const PreparedCode& a, const PreparedCode& b, long tau) {
    DifferenceCounts counts(a.q);
    const auto w = window(a.L, tau);
    if (w.length == 0) return counts.value();
    if (!a.narrow.empty()) {
        for (std::size_t r = 0; r < a.narrow.size(); ++r) {
            counts.add(std::span(a.narrow[r]).subspan(w.u_begin, w.length),
                       std::span(b.narrow[r]).subspan(w.v_begin, w.length));
        }
    } else {
        for (std::size_t r = 0; r < a.wide->size(); ++r) {
            counts.add_wide(std::span((*a.wide)[r].phases()).subspan(w.u_begin, w.length),
                            std::span((*b.wide)[r].phases()).subspan(w.v_begin, w.length));
        }
    }
    return counts.value();
}

void check_pair(const Code& ci, const Code& cj) {
    if (ci.size() != cj.size() || ci.empty()) throw std::invalid_argument("codes differ in sequence count");
    const std::size_t L = ci.front().size();
    const int q = ci.front().q();
    for (std::size_t r = 0; r < ci.size(); ++r) {
        if (ci[r].size() != L || cj[r].size() != L) throw std::invalid_argument("sequence lengths differ");
        if (ci[r].q() != q || cj[r].q() != q) throw std::invalid_argument("sequence moduli differ");
    }
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    }
}

}  // namespace

CorrelationValue CorrelationValue::exact(std::int64_t re, std::int64_t im) {
    CorrelationValue v;
    v.exact_ = true;
    v.re_ = re;
    v.im_ = im;
    v.approx_ = {static_cast<double>(re), static_cast<double>(im)};
    return v;
}

CorrelationValue CorrelationValue::approximate(std::complex<double> value) {
    CorrelationValue v;
    v.exact_ = false;
    v.approx_ = value;
    return v;
}

std::complex<double> CorrelationValue::to_complex() const { return approx_; }

bool CorrelationValue::is_zero(double tolerance) const {
    if (exact_) return re_ == 0 && im_ == 0;
    return std::abs(approx_) <= tolerance;
}

bool CorrelationValue::equals(std::int64_t target, double tolerance) const {
    if (exact_) return re_ == target && im_ == 0;
    return std::abs(approx_ - std::complex<double>(static_cast<double>(target), 0.0)) <= tolerance;
}

std::string to_string(const CorrelationValue& v) {
    std::ostringstream out;
    if (v.is_exact()) {
        out << v.re();
        if (v.im() != 0) out << (v.im() < 0 ? "-" : "+") << std::llabs(v.im()) << "i";
    } else {
        out.precision(12);
        out << v.to_complex().real() << (v.to_complex().imag() < 0 ? "" : "+") << v.to_complex().imag() << "i";
    }
    return out.str();
}

bool exact_modulus(int q) { return q == 1 || q == 2 || q == 4; }

CorrelationValue accs(const PhaseSequence& u, const PhaseSequence& v, long tau) {
    return set_accs(Code{u}, Code{v}, tau);
}

CorrelationValue set_accs(const Code& ci, const Code& cj, long tau) {
    check_pair(ci, cj);
    return prepared_accs(prepare(ci), prepare(cj), tau);
}

std::complex<double> accs_float(const PhaseSequence& u, const PhaseSequence& v, long tau) {
    if (u.size() != v.size()) throw std::invalid_argument("sequence lengths differ");
    if (u.q() != v.q()) throw std::invalid_argument("sequence moduli differ");
    const auto w = window(u.size(), tau);
    const double step = 2.0 * std::numbers::pi / u.q();
    std::complex<double> sum{};
    for (std::size_t t = 0; t < w.length; ++t) {
        sum += std::polar(1.0, step * u[w.u_begin + t]) * std::conj(std::polar(1.0, step * v[w.v_begin + t]));
    }
    return sum;
}

std::complex<double> set_accs_float(const Code& ci, const Code& cj, long tau) {
    check_pair(ci, cj);
    std::complex<double> sum{};
    for (std::size_t r = 0; r < ci.size(); ++r) sum += accs_float(ci[r], cj[r], tau);
    return sum;
}

std::vector<CorrelationValue> set_profile(const Code& ci, const Code& cj) {
    check_pair(ci, cj);
    const auto a = prepare(ci);
    const auto b = prepare(cj);
    const long L = static_cast<long>(a.L);
    std::vector<CorrelationValue> out;
    out.reserve(2 * a.L - 1);
    for (long tau = -(L - 1); tau <= L - 1; ++tau) out.push_back(prepared_accs(a, b, tau));
    return out;
}

const CorrelationValue& PairProfile::at(long tau) const {
    const long offset = static_cast<long>(values.size() / 2);
    return values.at(static_cast<std::size_t>(tau + offset));
}

bool is_optimal(std::size_t M, std::size_t N, std::size_t L, std::size_t Z) {
    if (Z == 0 || Z > L) throw std::invalid_argument("optimality needs 1 <= Z <= L");
    return M == N * (L / Z);
}

CorrelationReport verify_zccs(const CodeSet& set, std::size_t Z, const VerifyOptions& options) {
    if (set.codes.empty()) throw std::invalid_argument("empty code set");
    for (const auto& code : set.codes) check_pair(set.codes.front(), code);

    CorrelationReport report;
    report.dims = set.measured();
    report.dims.Z = Z;
    const std::size_t M = report.dims.M;
    const std::size_t N = report.dims.N;
    const std::size_t L = report.dims.L;
    if (Z < 1 || Z > L) {
        throw std::invalid_argument("Z = " + std::to_string(Z) + " outside [1, L = " + std::to_string(L) + "]");
    }
    const int q = set.codes.front().front().q();
    report.exact = exact_modulus(q);
    const double tolerance = 1e-6 * static_cast<double>(N * L);
    const auto energy = static_cast<std::int64_t>(N * L);

    std::vector<PreparedCode> prepared;
    prepared.reserve(M);
    for (const auto& code : set.codes) prepared.push_back(prepare(code));

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < M; ++i) {
        for (std::size_t j = i; j < M; ++j) pairs.emplace_back(i, j);
    }
    std::vector<PairProfile> profiles(pairs.size());
    parallel_for(pairs.size(), options.threads, [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        auto& prof = profiles[idx];
        prof.i = i;
        prof.j = j;
        prof.values.reserve(2 * L - 1);
        const long Ls = static_cast<long>(L);
        for (long tau = -(Ls - 1); tau <= Ls - 1; ++tau) {
            prof.values.push_back(prepared_accs(prepared[i], prepared[j], tau));
        }
    });

    // Profiles of (j, i) are conjugate mirrors of (i, j), so i <= j covers every
    // ordered pair. The smallest failing |tau| bounds the measured zone.
    std::size_t zone = L;
    for (const auto& prof : profiles) {
        const long Ls = static_cast<long>(L);
        for (long tau = -(Ls - 1); tau <= Ls - 1; ++tau) {
            const auto& v = prof.at(tau);
            const bool ok = (prof.i == prof.j && tau == 0) ? v.equals(energy, tolerance) : v.is_zero(tolerance);
            if (ok) continue;
            const auto shift = static_cast<std::size_t>(tau < 0 ? -tau : tau);
            zone = std::min(zone, shift);
            if (shift < Z) {
                ++report.violation_count;
                if (report.violations.size() < options.max_violations) {
                    report.violations.push_back({prof.i, prof.j, tau, v});
                }
            }
        }
    }
    report.measured_zcz = zone;
    report.peak = profiles.front().at(0);
    report.zccs_ok = report.violation_count == 0;
    report.optimal = report.zccs_ok && is_optimal(M, N, L, Z);
    if (options.keep_profiles) report.profiles = std::move(profiles);
    return report;
}

std::size_t measure_zcz(const CodeSet& set) {
    if (set.codes.empty()) throw std::invalid_argument("empty code set");
    VerifyOptions opts;
    opts.keep_profiles = false;
    opts.max_violations = 0;
    return verify_zccs(set, 1, opts).measured_zcz;
}

}  // namespace zccs
