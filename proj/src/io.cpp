#include "zccs/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zccs {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

ordered_json edges_to_json(const Gbf& quadratic) {
    ordered_json out = ordered_json::array();
    for (const auto& t : quadratic.terms()) {
        if (t.degree() == 2) out.push_back({t.literals[0].var, t.literals[1].var});
    }
    return out;
}

ordered_json terms_to_json(const Gbf& f) {
    ordered_json out = ordered_json::array();
    for (const auto& t : f.terms()) {
        ordered_json vars = ordered_json::array();
        for (const auto& lit : t.literals) vars.push_back(lit.var);
        out.push_back({{"c", t.coefficient}, {"z", vars}});
    }
    return out;
}

ordered_json blocks_to_json(const BlockParams& b) {
    return {{"l", b.l}, {"R", b.R}, {"S_R", resolve(b).s_r}};
}

void lemma1_to_json(ordered_json& meta, const Lemma1Params& p) {
    meta["m1"] = p.m1;
    meta["quadratic"] = edges_to_json(p.quadratic);
    meta["d_vec"] = p.d_vec;
    meta["d"] = p.d;
    meta["deleted"] = p.deleted;
    meta["beta1"] = p.beta1;
}

void lemma2_to_json(ordered_json& meta, const Lemma2Params& p) {
    meta["m2"] = p.m2;
    meta["f"] = terms_to_json(p.f);
    meta["deleted"] = p.deleted;
    meta["beta1"] = p.beta1;
}

ordered_json metadata(const CodeSet& set) {
    ordered_json meta;
    meta["construction"] = set.provenance ? to_string(set.provenance->construction) : "external";
    meta["q"] = set.q;
    meta["M"] = set.declared.M;
    meta["N"] = set.declared.N;
    meta["L"] = set.declared.L;
    meta["Z"] = set.declared.Z;
    if (!set.provenance) return meta;
    std::visit(
        [&meta](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Lemma1Params>) {
                meta["bit_order"] = to_string(p.bit_order);
                lemma1_to_json(meta, p);
            } else if constexpr (std::is_same_v<T, Theorem1Params>) {
                meta["bit_order"] = to_string(p.base.bit_order);
                lemma1_to_json(meta, p.base);
                meta.update(blocks_to_json(p.blocks));
            } else if constexpr (std::is_same_v<T, Lemma2Params>) {
                meta["bit_order"] = to_string(p.bit_order);
                lemma2_to_json(meta, p);
            } else {
                meta["bit_order"] = to_string(p.base.bit_order);
                lemma2_to_json(meta, p.base);
                meta.update(blocks_to_json(p.blocks));
            }
        },
        set.provenance->params);
    return meta;
}

template <class T>
T field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw FormatError(std::string("metadata is missing '") + key + "'");
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw FormatError(std::string("metadata field '") + key + "' has the wrong type");
    }
}

Lemma1Params lemma1_from_json(const json& meta) {
    Lemma1Params p;
    p.m1 = field<int>(meta, "m1");
    if (p.m1 < 5 || p.m1 > 24) throw FormatError("metadata m1 out of range");
    std::vector<Edge> edges;
    for (const auto& e : field<std::vector<std::vector<int>>>(meta, "quadratic")) {
        if (e.size() != 2) throw FormatError("quadratic edges must be [u, v] pairs");
        edges.push_back({e[0], e[1], 1});
    }
    p.quadratic = quadratic_form(p.m1 - 4, 2, edges);
    p.d_vec = field<std::vector<int>>(meta, "d_vec");
    p.d = field<int>(meta, "d");
    p.deleted = field<std::vector<int>>(meta, "deleted");
    p.beta1 = field<int>(meta, "beta1");
    p.bit_order = parse_bit_order(field<std::string>(meta, "bit_order"));
    return p;
}

Lemma2Params lemma2_from_json(const json& meta, int q) {
    Lemma2Params p;
    p.q = q;
    p.m2 = field<int>(meta, "m2");
    if (p.m2 < 1 || p.m2 > 24) throw FormatError("metadata m2 out of range");
    std::vector<Term> terms;
    if (!meta.contains("f") || !meta["f"].is_array()) throw FormatError("metadata is missing 'f'");
    for (const auto& t : meta["f"]) {
        Term term{field<int>(t, "c"), {}};
        for (int v : field<std::vector<int>>(t, "z")) term.literals.push_back({v, false});
        terms.push_back(std::move(term));
    }
    p.f = Gbf(p.m2, q, std::move(terms));
    p.deleted = field<std::vector<int>>(meta, "deleted");
    p.beta1 = field<int>(meta, "beta1");
    p.bit_order = parse_bit_order(field<std::string>(meta, "bit_order"));
    return p;
}

BlockParams blocks_from_json(const json& meta) {
    BlockParams b;
    b.l = field<int>(meta, "l");
    b.R = field<int>(meta, "R");
    b.s_r = field<std::vector<BitVector>>(meta, "S_R");
    return b;
}

std::optional<Provenance> provenance_from_json(const json& meta, int q) {
    const auto name = field<std::string>(meta, "construction");
    if (name == "external") return std::nullopt;
    Construction c;
    try {
        c = parse_construction(name);
    } catch (const ParameterError& e) {
        throw FormatError(e.what());
    }
    try {
        switch (c) {
            case Construction::Lemma1:
            case Construction::Theorem3: return Provenance{c, lemma1_from_json(meta)};
            case Construction::Theorem1: return Provenance{c, Theorem1Params{lemma1_from_json(meta), blocks_from_json(meta)}};
            case Construction::Lemma2: return Provenance{c, lemma2_from_json(meta, q)};
            case Construction::Theorem2:
                return Provenance{c, Theorem2Params{lemma2_from_json(meta, q), blocks_from_json(meta)}};
        }
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("invalid construction parameters: ") + e.what());
    }
    return std::nullopt;
}

std::string csv_header(const CodeSet& set) {
    std::ostringstream out;
    out << "# construction=" << (set.provenance ? to_string(set.provenance->construction) : "external")
        << " q=" << set.q << " M=" << set.declared.M << " N=" << set.declared.N << " L=" << set.declared.L
        << " Z=" << set.declared.Z << "\n";
    return out.str();
}

int to_int(std::string_view s, const char* what) {
    int v = 0;
    auto trimmed = s;
    while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
    while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\r')) trimmed.remove_suffix(1);
    if (!trimmed.empty() && trimmed.front() == '+') trimmed.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), v);
    if (ec != std::errc{} || ptr != trimmed.data() + trimmed.size() || trimmed.empty()) {
        throw ParameterError(std::string("malformed ") + what + " '" + std::string(s) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string value_columns(const CorrelationValue& v) {
    std::ostringstream out;
    if (v.is_exact()) {
        out << v.re() << "," << v.im();
    } else {
        out.precision(12);
        out << v.to_complex().real() << "," << v.to_complex().imag();
    }
    return out.str();
}

}  // namespace

std::string serialize_code_set(const CodeSet& set) {
    std::ostringstream out;
    out << "{\n  \"format_version\": " << kFormatVersion << ",\n";
    out << "  \"metadata\": {";
    bool first = true;
    const auto meta = metadata(set);
    for (const auto& [key, value] : meta.items()) {
        out << (first ? "\n    " : ",\n    ") << ordered_json(key).dump() << ": " << value.dump();
        first = false;
    }
    out << "\n  },\n";
    out << "  \"codes\": [";
    for (std::size_t c = 0; c < set.codes.size(); ++c) {
        out << (c ? ",\n    [" : "\n    [");
        for (std::size_t r = 0; r < set.codes[c].size(); ++r) {
            out << (r ? ",\n      [" : "\n      [");
            const auto& phases = set.codes[c][r].phases();
            for (std::size_t t = 0; t < phases.size(); ++t) out << (t ? "," : "") << phases[t];
            out << "]";
        }
        out << "\n    ]";
    }
    out << (set.codes.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

CodeSet parse_code_set(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("code-set file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("code-set file must be a JSON object");
    if (field<int>(doc, "format_version") != kFormatVersion) {
        throw FormatError("unsupported format_version");
    }
    if (!doc.contains("metadata") || !doc["metadata"].is_object()) throw FormatError("missing metadata object");
    const auto& meta = doc["metadata"];

    CodeSet set;
    set.q = field<int>(meta, "q");
    if (set.q < 1) throw FormatError("q must be positive");
    set.declared = {field<std::size_t>(meta, "M"), field<std::size_t>(meta, "N"), field<std::size_t>(meta, "L"),
                    field<std::size_t>(meta, "Z")};
    set.provenance = provenance_from_json(meta, set.q);

    std::vector<std::vector<std::vector<int>>> raw;
    try {
        raw = doc.at("codes").get<decltype(raw)>();
    } catch (const json::exception&) {
        throw FormatError("'codes' must be an M x N x L integer array");
    }
    try {
        for (auto& code : raw) {
            Code c;
            for (auto& row : code) c.emplace_back(set.q, std::move(row));
            set.codes.push_back(std::move(c));
        }
        set.check_shape();
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("code data inconsistent with metadata: ") + e.what());
    }
    if (set.declared.Z < 1) throw FormatError("declared Z must be at least 1");
    return set;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out) throw FormatError("failed writing '" + path.string() + "'");
}

void write_code_set(const std::filesystem::path& path, const CodeSet& set) {
    write_text_file(path, serialize_code_set(set));
}

CodeSet read_code_set(const std::filesystem::path& path) { return parse_code_set(read_text_file(path)); }

std::string export_csv(const CodeSet& set) {
    std::ostringstream out;
    out << csv_header(set);
    for (const auto& code : set.codes) {
        for (const auto& row : code) {
            for (std::size_t t = 0; t < row.size(); ++t) {
                if (t) out << ',';
                if (set.q == 2) {
                    out << (row[t] == 0 ? "1" : "-1");
                } else {
                    out << row[t];
                }
            }
            out << '\n';
        }
    }
    return out.str();
}

CodeSet import_csv(std::string_view text) {
    CodeSet set;
    std::vector<std::vector<int>> rows;
    bool have_header = false;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (line.front() == '#') {
            for (auto tok : split(line.substr(1), ' ')) {
                auto eq = tok.find('=');
                if (eq == std::string_view::npos) continue;
                auto key = tok.substr(0, eq);
                auto val = tok.substr(eq + 1);
                try {
                    if (key == "q") set.q = to_int(val, "q");
                    if (key == "M") set.declared.M = to_int(val, "M");
                    if (key == "N") set.declared.N = to_int(val, "N");
                    if (key == "L") set.declared.L = to_int(val, "L");
                    if (key == "Z") set.declared.Z = to_int(val, "Z");
                } catch (const ParameterError& e) {
                    throw FormatError(e.what());
                }
            }
            have_header = true;
            continue;
        }
        std::vector<int> row;
        for (auto cell : split(line, ',')) {
            int v;
            try {
                v = to_int(cell, "CSV entry");
            } catch (const ParameterError& e) {
                throw FormatError(e.what());
            }
            if (set.q == 2) {
                if (v != 1 && v != -1) throw FormatError("binary CSV entries must be +1 or -1");
                v = v == 1 ? 0 : 1;
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (!have_header || set.declared.N == 0) throw FormatError("CSV lacks the metadata header");
    if (rows.size() != set.declared.M * set.declared.N) throw FormatError("CSV row count disagrees with M * N");
    try {
        for (std::size_t c = 0; c < set.declared.M; ++c) {
            Code code;
            for (std::size_t r = 0; r < set.declared.N; ++r) code.emplace_back(set.q, std::move(rows[c * set.declared.N + r]));
            set.codes.push_back(std::move(code));
        }
        set.check_shape();
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    return set;
}

std::string format_report(const CorrelationReport& report) {
    std::ostringstream out;
    const auto& d = report.dims;
    out << "[summary]\n";
    out << "M," << d.M << "\nN," << d.N << "\nL," << d.L << "\nZ," << d.Z << "\n";
    out << "exact," << (report.exact ? "true" : "false") << "\n";
    out << "measured_zcz," << report.measured_zcz << "\n";
    out << "peak," << to_string(report.peak) << "\n";
    out << "zccs_ok," << (report.zccs_ok ? "true" : "false") << "\n";
    out << "optimal," << (report.optimal ? "true" : "false") << "\n";
    out << "violations," << report.violation_count << "\n";
    out << "[violations]\ni,j,tau,re,im\n";
    for (const auto& v : report.violations) {
        out << v.i << ',' << v.j << ',' << v.tau << ',' << value_columns(v.value) << '\n';
    }
    out << "[profile]\ni,j,tau,re,im\n";
    for (const auto& prof : report.profiles) {
        const long half = static_cast<long>(prof.values.size() / 2);
        for (long tau = -half; tau <= half; ++tau) {
            out << prof.i << ',' << prof.j << ',' << tau << ',' << value_columns(prof.at(tau)) << '\n';
        }
    }
    return out.str();
}

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (auto tok : split(text, ',')) out.push_back(to_int(tok, "integer"));
    return out;
}

std::vector<Edge> parse_edge_list(std::string_view text, int default_weight) {
    std::vector<Edge> out;
    if (text.empty()) return out;
    for (auto tok : split(text, ',')) {
        int weight = default_weight;
        auto colon = tok.find(':');
        if (colon != std::string_view::npos) {
            weight = to_int(tok.substr(colon + 1), "edge weight");
            tok = tok.substr(0, colon);
        }
        auto dash = tok.find('-');
        if (dash == std::string_view::npos) throw ParameterError("edge '" + std::string(tok) + "' must look like u-v");
        out.push_back({to_int(tok.substr(0, dash), "edge endpoint"), to_int(tok.substr(dash + 1), "edge endpoint"), weight});
    }
    return out;
}

std::vector<BitVector> parse_bit_vectors(std::string_view text) {
    std::vector<BitVector> out;
    if (text.empty()) return out;
    for (auto tok : split(text, ',')) {
        BitVector c;
        for (char ch : tok) {
            if (ch != '0' && ch != '1') throw ParameterError("S_R entries must be bit strings, got '" + std::string(tok) + "'");
            c.push_back(ch - '0');
        }
        if (c.empty()) throw ParameterError("empty S_R entry");
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace zccs
