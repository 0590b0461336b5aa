// Command-line front end: reproduce the reference tables from the embedded
// fixtures, run every verification, export structures, search isomorphisms.
//
// Exit codes: 0 pass, 1 verification failure, 2 not isomorphic, 3 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "klein/conwell.hpp"
#include "klein/fixtures.hpp"
#include "klein/gf2.hpp"
#include "klein/grassmannian.hpp"
#include "klein/io.hpp"
#include "klein/verify.hpp"

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        klein::raise(klein::errc::io_failure, std::string("expected an integer ") + what +
                                                  ", got '" + s + "'");
    }
}

// "table1:5:110001" | "table2:1:1,4,10" | "bijection:27:1,8"
void apply_perturbation(klein::PaperFixtures& fx, const std::string& spec) {
    auto parts = split(spec, ':');
    if (parts.size() != 3)
        klein::raise(klein::errc::io_failure, "perturbation must be table:row:value, got '" + spec + "'");
    int row = to_int(parts[1], "row");
    const std::string& val = parts[2];
    if (parts[0] == "table1") {
        if (row < 1 || row > 28 || val.size() != 6)
            klein::raise(klein::errc::io_failure, "table1 rows are 1..28 with 6 bits");
        for (int i = 0; i < 6; ++i) fx.table1[row - 1][i] = val[i] == '1';
    } else if (parts[0] == "table2") {
        auto nums = split(val, ',');
        if (row < 1 || row > 56 || nums.size() != 3)
            klein::raise(klein::errc::io_failure, "table2 rows are 1..56 with 3 indices");
        for (int i = 0; i < 3; ++i) fx.table2[row - 1][i] = to_int(nums[i], "point index");
    } else if (parts[0] == "bijection") {
        auto nums = split(val, ',');
        if (row < 1 || row > 28 || nums.size() != 2)
            klein::raise(klein::errc::io_failure, "bijection rows are 1..28 with 2 marks");
        for (int i = 0; i < 2; ++i) fx.bijection[row - 1][i] = to_int(nums[i], "mark");
    } else {
        klein::raise(klein::errc::io_failure, "unknown table '" + parts[0] + "'");
    }
}

struct NamedStructure {
    klein::IncidenceStructure structure;
    std::string name;
    long long vacuous_line_size = 0;
    std::map<std::string, json> tags;
};

NamedStructure make_off_structure() {
    NamedStructure out;
    out.structure = klein::off_quadric_structure(klein::QuadraticForm::canonical_hyperbolic());
    out.name = "off-structure";
    out.vacuous_line_size = 3;
    const auto& fx = klein::paper_fixtures();
    for (const auto& lbl : out.structure.point_labels()) {
        klein::ProjPoint p(static_cast<unsigned>(std::stoul(lbl)));
        out.tags[lbl] = json{{"coords", p.coord_string()},
                             {"row", klein::fixture_row_of_code(fx, p.code())}};
    }
    return out;
}

NamedStructure make_grassmannian(int k, int n) {
    NamedStructure out;
    out.structure = klein::build_grassmannian(k, n);
    out.name = "G_" + std::to_string(k) + "(" + std::to_string(n) + ")";
    out.vacuous_line_size = k + 1;
    for (const auto& lbl : out.structure.point_labels())
        out.tags[lbl] = json{{"marks", klein::parse_subset_label(lbl)}};
    return out;
}

// Consumes one structure spec from tokens[i...]: "off-structure",
// "grassmannian K N" (also "grassmannian:K:N"), or a JSON file path.
NamedStructure parse_structure_spec(const std::vector<std::string>& tokens, std::size_t& i) {
    if (i >= tokens.size())
        klein::raise(klein::errc::unknown_selector, "missing structure selector");
    std::string tok = tokens[i++];
    if (tok == "off-structure") return make_off_structure();
    if (tok == "grassmannian" || tok.rfind("grassmannian:", 0) == 0) {
        int k, n;
        if (tok == "grassmannian") {
            if (i + 2 > tokens.size())
                klein::raise(klein::errc::unknown_selector, "grassmannian needs K and N");
            k = to_int(tokens[i], "K");
            n = to_int(tokens[i + 1], "N");
            i += 2;
        } else {
            auto parts = split(tok, ':');
            if (parts.size() != 3)
                klein::raise(klein::errc::unknown_selector, "use grassmannian:K:N");
            k = to_int(parts[1], "K");
            n = to_int(parts[2], "N");
        }
        return make_grassmannian(k, n);
    }
    if (tok.find('.') != std::string::npos || tok.find('/') != std::string::npos) {
        std::ifstream in(tok);
        if (!in) klein::raise(klein::errc::io_failure, "cannot open '" + tok + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            klein::raise(klein::errc::io_failure, "cannot parse '" + tok + "': " + e.what());
        }
        NamedStructure out;
        out.structure = klein::structure_from_json(j);
        out.name = j.contains("meta") && j["meta"].contains("name") && j["meta"]["name"].is_string()
                       ? j["meta"]["name"].get<std::string>()
                       : tok;
        return out;
    }
    klein::raise(klein::errc::unknown_selector, "unknown selector '" + tok + "'");
}

// Writes to the --out file when given, else to stdout.
void emit(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) klein::raise(klein::errc::io_failure, "cannot write '" + out_path + "'");
    out << payload;
    if (!out) klein::raise(klein::errc::io_failure, "write failed for '" + out_path + "'");
}

json suites_json(const klein::VerifyReport& rep, std::uint64_t seed) {
    json suites = json::array();
    for (const auto& s : rep.suites)
        suites.push_back(json{{"name", s.name}, {"passed", s.passed()}, {"failures", s.failures}});
    return json{{"command", "verify-all"},
                {"passed", rep.all_passed()},
                {"seed", seed},
                {"off_params",
                 {rep.off_params.num_points, rep.off_params.point_degree,
                  rep.off_params.num_lines, rep.off_params.line_size}},
                {"failures", rep.failures()},
                {"suites", suites}};
}

int cmd_verify_all(const std::vector<std::string>& perturbs, std::uint64_t seed,
                   int random_orders, bool quiet) {
    klein::PaperFixtures fx = klein::paper_fixtures();
    for (const auto& spec : perturbs) apply_perturbation(fx, spec);

    klein::VerifyOptions opt;
    opt.seed = seed;
    opt.random_orders = random_orders;
    auto rep = klein::verify_all(fx, opt);

    if (!quiet) {
        for (const auto& s : rep.suites) {
            if (s.passed()) {
                std::cout << "PASS " << s.name << ": " << s.summary << "\n";
            } else {
                std::cout << "FAIL " << s.name << ": ";
                for (std::size_t i = 0; i < s.failures.size(); ++i)
                    std::cout << (i ? "; " : "") << s.failures[i];
                std::cout << "\n";
            }
        }
    }
    std::cout << suites_json(rep, seed).dump() << "\n";
    return rep.all_passed() ? 0 : 1;
}

json heptads_json() {
    auto form = klein::QuadraticForm::canonical_hyperbolic();
    klein::CollinearityGraph g(klein::off_quadric_points(form), klein::external_lines(form));
    auto heptads = klein::find_heptads(g);
    klein::heptad_pair_intersections(heptads);
    const auto& fx = klein::paper_fixtures();
    auto marks = klein::heptads_vs_marks(heptads, klein::bijection_certificate(fx));

    json arr = json::array();
    for (std::size_t i = 0; i < heptads.size(); ++i) {
        json rows = json::array(), pts = json::array();
        for (klein::ProjPoint p : heptads[i].points) {
            pts.push_back(p.label());
            rows.push_back(klein::fixture_row_of_code(fx, p.code()));
        }
        arr.push_back(json{{"points", pts}, {"rows", rows}, {"mark", marks[i]}});
    }
    return json{{"name", "heptads"}, {"count", heptads.size()}, {"heptads", arr}};
}

int cmd_heptads(const std::string& format, const std::string& out_path) {
    json j = heptads_json();
    if (format == "json") {
        emit(out_path, j.dump(2) + "\n");
        return 0;
    }
    if (format != "text")
        klein::raise(klein::errc::unsupported_format, "heptads formats: text, json");
    std::ostringstream os;
    os << j["count"].get<int>() << " Conwell heptads (7-cliques of the external-collinearity graph)\n";
    for (const auto& h : j["heptads"]) {
        os << "  points";
        for (const auto& p : h["points"]) os << ' ' << p.get<std::string>();
        os << "  (table rows";
        for (const auto& r : h["rows"]) os << ' ' << r.get<int>();
        os << ")  mark " << h["mark"].get<int>() << "\n";
    }
    os << "pairwise intersections all 1; every point covered twice; marks 1..8\n";
    emit(out_path, os.str());
    return 0;
}

json sequence_json(const std::vector<int>& order, const json& seed) {
    auto form = klein::QuadraticForm::canonical_hyperbolic();
    auto off = klein::off_quadric_structure(form);
    klein::CollinearityGraph g(klein::off_quadric_points(form), klein::external_lines(form));
    auto heptads = klein::find_heptads(g);
    auto steps = klein::removal_sequence(off, heptads, order);
    const auto& fx = klein::paper_fixtures();

    json arr = json::array();
    for (const auto& rec : steps) {
        json step{{"step", rec.step},
                  {"params",
                   {rec.params.num_points, rec.params.point_degree, rec.params.num_lines,
                    rec.params.line_size}},
                  {"grassmannian", rec.grassmannian},
                  {"remark", fx.nested[rec.step].remark},
                  {"removed", rec.removed},
                  {"structure",
                   klein::structure_to_json(rec.structure, "after-" + std::to_string(rec.step), 3)}};
        step["certificate"] =
            rec.certificate ? klein::certificate_to_json(*rec.certificate) : json(nullptr);
        arr.push_back(std::move(step));
    }
    return json{{"name", "sequence"}, {"order", order}, {"seed", seed}, {"steps", arr}};
}

int cmd_sequence(bool seeded, std::uint64_t seed, const std::string& format,
                 const std::string& out_path) {
    std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7};
    if (seeded) order = klein::seeded_permutation(8, seed);
    json j = sequence_json(order, seeded ? json(seed) : json(nullptr));
    if (format == "json") {
        emit(out_path, j.dump(2) + "\n");
        return 0;
    }
    if (format != "text")
        klein::raise(klein::errc::unsupported_format, "sequence formats: text, json");
    std::ostringstream os;
    os << "heptad removal order:";
    for (int i : order) os << ' ' << i;
    os << "\n";
    for (const auto& step : j["steps"]) {
        auto p = step["params"];
        os << "step " << step["step"].get<int>() << ": (" << p[0] << "_" << p[1] << ", " << p[2]
           << "_" << p[3] << ")";
        if (!step["grassmannian"].get<std::string>().empty())
            os << "  " << step["grassmannian"].get<std::string>()
               << (step["certificate"].is_null() ? "  NO CERTIFICATE" : "  certificate ok");
        if (!step["remark"].get<std::string>().empty())
            os << "  [" << step["remark"].get<std::string>() << "]";
        os << "\n";
    }
    emit(out_path, os.str());
    return 0;
}

int cmd_export(const std::vector<std::string>& selector, const std::string& format,
               const std::string& out_path) {
    std::size_t i = 0;
    if (selector.empty())
        klein::raise(klein::errc::unknown_selector, "export needs a selector");
    if (selector[0] == "heptads") {
        if (format != "json")
            klein::raise(klein::errc::unsupported_format, "heptads export supports json");
        emit(out_path, heptads_json().dump(2) + "\n");
        return 0;
    }
    if (selector[0] == "sequence") {
        if (format != "json")
            klein::raise(klein::errc::unsupported_format, "sequence export supports json");
        std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7};
        emit(out_path, sequence_json(order, nullptr).dump(2) + "\n");
        return 0;
    }

    NamedStructure ns = parse_structure_spec(selector, i);
    if (i != selector.size())
        klein::raise(klein::errc::unknown_selector, "trailing selector tokens");
    if (format == "json") {
        emit(out_path,
             klein::structure_to_json(ns.structure, ns.name, ns.vacuous_line_size, ns.tags)
                     .dump(2) +
                 "\n");
    } else if (format == "dot") {
        std::ostringstream os;
        klein::write_levi_dot(os, ns.structure, ns.name);
        emit(out_path, os.str());
    } else if (format == "csv") {
        std::ostringstream os;
        if (ns.name == "off-structure")
            klein::write_off_structure_csv(os, ns.structure, klein::paper_fixtures());
        else
            klein::write_incidence_csv(os, ns.structure);
        emit(out_path, os.str());
    } else {
        klein::raise(klein::errc::unsupported_format, "formats: json, dot, csv");
    }
    return 0;
}

int cmd_iso(const std::vector<std::string>& specs, const std::string& out_path, bool quiet) {
    std::size_t i = 0;
    NamedStructure a = parse_structure_spec(specs, i);
    NamedStructure b = parse_structure_spec(specs, i);
    if (i != specs.size())
        klein::raise(klein::errc::unknown_selector, "trailing selector tokens");

    auto cert = klein::find_isomorphism(a.structure, b.structure);
    if (!cert) {
        if (!quiet) std::cout << "not isomorphic: " << a.name << " vs " << b.name << "\n";
        return 2;
    }
    if (!klein::verify_certificate(a.structure, b.structure, *cert))
        klein::raise(klein::errc::property_violated, "search produced an invalid certificate");

    json j = klein::certificate_to_json(*cert);
    j["a"] = a.name;
    j["b"] = b.name;
    j["verified"] = true;
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        emit(out_path, j.dump(2) + "\n");
        if (!quiet)
            std::cout << "isomorphic: " << a.name << " ~ " << b.name << " (certificate in "
                      << out_path << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"off-quadric geometry of PG(5,2), combinatorial Grassmannians, Conwell heptads"};
    app.require_subcommand(1);

    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress human-readable output");
    app.fallthrough();

    auto* verify = app.add_subcommand("verify-all", "run every verification suite");
    std::uint64_t seed = 0;
    int random_orders = 5;
    std::vector<std::string> perturbs;
    verify->add_option("--seed", seed, "seed for the randomized removal orders");
    verify->add_option("--random-orders", random_orders, "number of random removal orders")
        ->check(CLI::Range(0, 1000));
    verify->add_option("--perturb", perturbs,
                       "fault injection, e.g. table2:1:1,4,10 (repeatable)");

    auto* exp = app.add_subcommand("export", "write a structure as json, dot or csv");
    std::vector<std::string> selector;
    std::string format = "json", out_path;
    exp->add_option("selector", selector,
                    "off-structure | grassmannian K N | heptads | sequence")
        ->required();
    exp->add_option("--format", format, "json | dot | csv")->capture_default_str();
    exp->add_option("--out", out_path, "output file (default stdout)");

    auto* iso = app.add_subcommand("iso", "search for an isomorphism between two structures");
    std::vector<std::string> iso_specs;
    std::string iso_out;
    iso->add_option("structures", iso_specs,
                    "two of: off-structure | grassmannian K N | file.json")
        ->required();
    iso->add_option("--out", iso_out, "write the certificate here");

    auto* hep = app.add_subcommand("heptads", "list the Conwell heptads and their marks");
    std::string hep_format = "text", hep_out;
    hep->add_option("--format", hep_format, "text | json")->capture_default_str();
    hep->add_option("--out", hep_out, "output file (default stdout)");

    auto* seq = app.add_subcommand("sequence", "replay the nested heptad-removal sequence");
    std::string seq_format = "text", seq_out;
    std::uint64_t seq_seed = 0;
    auto* seq_seed_opt = seq->add_option("--seed", seq_seed, "shuffle the removal order");
    seq->add_option("--format", seq_format, "text | json")->capture_default_str();
    seq->add_option("--out", seq_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (verify->parsed()) return cmd_verify_all(perturbs, seed, random_orders, quiet);
        if (exp->parsed()) return cmd_export(selector, format, out_path);
        if (iso->parsed()) return cmd_iso(iso_specs, iso_out, quiet);
        if (hep->parsed()) return cmd_heptads(hep_format, hep_out);
        if (seq->parsed())
            return cmd_sequence(seq_seed_opt->count() > 0, seq_seed, seq_format, seq_out);
    } catch (const klein::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
