// zccs: generate, verify and inspect GBF-based ZCCS / CCC code sets.
//
// Exit codes: 0 success, 1 verification failure, 2 inadmissible parameters
// or arguments, 3 I/O or format error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zccs/constructions.hpp"
#include "zccs/correlation.hpp"
#include "zccs/graph.hpp"
#include "zccs/io.hpp"
#include "zccs/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadParameters = 2;
constexpr int kIoError = 3;

struct GenerateArgs {
    std::string construction;
    int m1 = 5;
    int m2 = 1;
    int q = 2;
    int l = 1;
    int R = 2;
    std::string quadratic;
    std::string d_vec;
    int d = 0;
    std::string deleted;
    std::optional<int> beta1;
    std::string s_r;
    std::string linear;
    std::string bit_order = "lsb";
    std::string out;
};

struct VerifyArgs {
    std::string file;
    std::optional<std::size_t> z;
    std::string report;
    bool check_provenance = false;
};

struct EnumerateArgs {
    std::string quadratic;
    int k = 0;
    std::optional<int> vertices;
    int q = 2;
};

struct ExportArgs {
    std::string file;
    std::string out;
};

int pick_end(const zccs::LabeledGraph& g, const std::vector<int>& deleted, std::optional<int> weight,
             std::optional<int> beta1) {
    auto cert = zccs::validate_deletion_path(g, deleted, weight);
    return beta1 ? *beta1 : cert.end_vertices.front();
}

zccs::Lemma1Params lemma1_params(const GenerateArgs& a) {
    zccs::Lemma1Params p;
    p.m1 = a.m1;
    if (p.m1 < 5) throw zccs::ParameterError("--m1 must be at least 5");
    const int nq = p.m1 - 4;
    p.quadratic = zccs::quadratic_form(nq, 2, zccs::parse_edge_list(a.quadratic, 1));
    p.d_vec = a.d_vec.empty() ? std::vector<int>(nq, 0) : zccs::parse_int_list(a.d_vec);
    p.d = a.d;
    p.deleted = zccs::parse_int_list(a.deleted);
    p.bit_order = zccs::parse_bit_order(a.bit_order);
    p.beta1 = pick_end(zccs::graph_of_quadratic(p.quadratic), p.deleted, std::nullopt, a.beta1);
    return p;
}

zccs::Lemma2Params lemma2_params(const GenerateArgs& a) {
    zccs::Lemma2Params p;
    p.q = a.q;
    p.m2 = a.m2;
    if (p.q < 2 || p.q % 2) throw zccs::ParameterError("--q must be an even integer >= 2");
    if (p.m2 < 1) throw zccs::ParameterError("--m2 must be at least 1");
    zccs::Gbf f = zccs::quadratic_form(p.m2, p.q, zccs::parse_edge_list(a.quadratic, p.q / 2));
    const auto linear = zccs::parse_int_list(a.linear);
    if (static_cast<int>(linear.size()) > p.m2) throw zccs::ParameterError("--linear has more than m2 entries");
    for (std::size_t i = 0; i < linear.size(); ++i) {
        f = f + zccs::Gbf::variable(p.m2, p.q, static_cast<int>(i)).scaled(linear[i]);
    }
    p.f = f + zccs::Gbf::constant(p.m2, p.q, a.d);
    p.deleted = zccs::parse_int_list(a.deleted);
    p.bit_order = zccs::parse_bit_order(a.bit_order);
    p.beta1 = pick_end(zccs::graph_of_quadratic(p.f), p.deleted, p.q / 2, a.beta1);
    return p;
}

zccs::Provenance provenance_from(const GenerateArgs& a) {
    using zccs::Construction;
    const auto c = zccs::parse_construction(a.construction);
    zccs::BlockParams blocks{a.l, a.R, zccs::parse_bit_vectors(a.s_r)};
    switch (c) {
        case Construction::Lemma1:
        case Construction::Theorem3: return {c, lemma1_params(a)};
        case Construction::Theorem1: return {c, zccs::Theorem1Params{lemma1_params(a), blocks}};
        case Construction::Lemma2: return {c, lemma2_params(a)};
        case Construction::Theorem2: return {c, zccs::Theorem2Params{lemma2_params(a), blocks}};
    }
    throw zccs::ParameterError("unknown construction");
}

int run_generate(const GenerateArgs& a) {
    const auto prov = provenance_from(a);
    for (const auto& w : zccs::parameter_warnings(prov)) std::cerr << "warning: " << w << "\n";
    const auto set = zccs::generate(prov);
    zccs::write_code_set(a.out, set);
    const auto& d = set.declared;
    std::cout << a.construction << ": (M, N, L, Z) = " << zccs::to_string(d) << "\n";
    std::cout << "optimal: " << (zccs::is_optimal(d.M, d.N, d.L, d.Z) ? "true" : "false") << "\n";
    std::cout << "wrote " << a.out << "\n";
    return kOk;
}

zccs::CorrelationReport verify_file(const zccs::CodeSet& set, std::optional<std::size_t> z) {
    const std::size_t Z = z.value_or(set.declared.Z);
    if (Z < 1 || Z > set.declared.L) {
        throw zccs::ParameterError("--z " + std::to_string(Z) + " outside [1, L = " + std::to_string(set.declared.L) + "]");
    }
    return zccs::verify_zccs(set, Z);
}

void print_summary(const zccs::CorrelationReport& r) {
    std::cout << "dimensions: " << zccs::to_string(r.dims) << "\n"
              << "exact: " << (r.exact ? "true" : "false") << "\n"
              << "peak: " << zccs::to_string(r.peak) << "\n"
              << "measured_zcz: " << r.measured_zcz << "\n"
              << "zccs_ok: " << (r.zccs_ok ? "true" : "false") << "\n"
              << "optimal: " << (r.optimal ? "true" : "false") << "\n"
              << "violations: " << r.violation_count << "\n";
    const std::size_t shown = std::min<std::size_t>(r.violations.size(), 10);
    for (std::size_t n = 0; n < shown; ++n) {
        const auto& v = r.violations[n];
        std::cout << "  violation i=" << v.i << " j=" << v.j << " tau=" << v.tau << " value=" << zccs::to_string(v.value)
                  << "\n";
    }
}

int run_verify(const VerifyArgs& a, bool report_required) {
    const auto set = zccs::read_code_set(a.file);
    const auto report = verify_file(set, a.z);
    print_summary(report);
    if (!a.report.empty()) zccs::write_text_file(a.report, zccs::format_report(report));
    else if (report_required) throw zccs::FormatError("report needs --out");
    bool ok = report.zccs_ok;
    if (a.check_provenance) {
        const auto mismatches = zccs::compare_sets(set, zccs::oracle_regenerate(set));
        std::cout << "oracle mismatches: " << mismatches.size() << "\n";
        ok = ok && mismatches.empty();
    }
    return ok ? kOk : kVerifyFailed;
}

int run_enumerate(const EnumerateArgs& a) {
    const int weight = a.q > 2 ? a.q / 2 : 1;
    const auto edges = zccs::parse_edge_list(a.quadratic, weight);
    int n = a.vertices.value_or(0);
    if (!a.vertices) {
        for (const auto& e : edges) n = std::max({n, e.u + 1, e.v + 1});
        n = std::max(n, 1);
    }
    const zccs::LabeledGraph g(n, edges);
    std::optional<int> required;
    if (a.q > 2) required = a.q / 2;
    for (const auto& cert : zccs::enumerate_admissible_deletions(g, a.k, required)) {
        std::cout << "delete {";
        for (std::size_t i = 0; i < cert.deleted.size(); ++i) std::cout << (i ? "," : "") << cert.deleted[i];
        std::cout << "}, ends {";
        for (std::size_t i = 0; i < cert.end_vertices.size(); ++i) std::cout << (i ? "," : "") << cert.end_vertices[i];
        std::cout << "}, path";
        for (int v : cert.path_order) std::cout << " " << v;
        std::cout << "\n";
    }
    return kOk;
}

int run_export(const ExportArgs& a) {
    const auto csv = zccs::export_csv(zccs::read_code_set(a.file));
    if (a.out.empty()) std::cout << csv;
    else zccs::write_text_file(a.out, csv);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate and verify Z-complementary code sets built from generalized Boolean functions"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "build a code set and write it as JSON");
    generate->add_option("construction", gen.construction, "lemma1 | thm1 | lemma2 | thm2 | thm3")->required();
    generate->add_option("--m1", gen.m1, "variables of the binary seed g (>= 5)");
    generate->add_option("--m2", gen.m2, "variables of the q-ary seed f (>= 1)");
    generate->add_option("--q", gen.q, "alphabet size for lemma2/thm2 (even)");
    generate->add_option("--l", gen.l, "block index bits");
    generate->add_option("--R", gen.R, "number of blocks (even, <= 2^l)");
    generate->add_option("--quadratic", gen.quadratic, "edge list 'u-v[:w],...' of the quadratic part");
    generate->add_option("--d-vec", gen.d_vec, "linear coefficients d_0..d_{m1-5}");
    generate->add_option("--d", gen.d, "constant term");
    generate->add_option("--linear", gen.linear, "linear coefficients of f (lemma2/thm2)");
    generate->add_option("--delete", gen.deleted, "deleted vertices p_0<...<p_{k-1}");
    generate->add_option("--beta1", gen.beta1, "path end vertex (default: smallest end)");
    generate->add_option("--s-r", gen.s_r, "explicit S_R as bit strings c_0..c_{l-1}, comma separated");
    generate->add_option("--bit-order", gen.bit_order, "lsb | msb");
    generate->add_option("--out", gen.out, "output code-set file")->required();

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "check the ZCCS conditions of a code-set file");
    verify->add_option("file", ver.file)->required();
    verify->add_option("--z", ver.z, "zone width (default: declared Z)");
    verify->add_option("--report", ver.report, "write the full correlation report here");
    verify->add_flag("--check-provenance", ver.check_provenance, "also regenerate from metadata and compare");

    VerifyArgs rep;
    auto* report = app.add_subcommand("report", "write the full correlation report of a code-set file");
    report->add_option("file", rep.file)->required();
    report->add_option("--z", rep.z, "zone width (default: declared Z)");
    report->add_option("--out", rep.report, "report path")->required();

    EnumerateArgs en;
    auto* enumerate = app.add_subcommand("enumerate", "list deletion sets that leave a path");
    enumerate->add_option("--quadratic", en.quadratic, "edge list 'u-v[:w],...'")->required();
    enumerate->add_option("--k", en.k, "number of deleted vertices")->required();
    enumerate->add_option("--vertices", en.vertices, "vertex count (default: largest label + 1)");
    enumerate->add_option("--q", en.q, "alphabet size; q > 2 requires path edges of weight q/2");

    ExportArgs ex;
    auto* exp = app.add_subcommand("export", "write a code-set file as CSV");
    exp->add_option("file", ex.file)->required();
    exp->add_option("--out", ex.out, "CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadParameters;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*verify) return run_verify(ver, false);
        if (*report) return run_verify(rep, true);
        if (*enumerate) return run_enumerate(en);
        if (*exp) return run_export(ex);
    } catch (const zccs::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadParameters;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadParameters;
    }
    return kBadParameters;
}
