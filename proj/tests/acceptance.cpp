// Acceptance suite: runs the nine gate criteria end to end and prints one
// PASS/FAIL line per criterion. argv[1] must be the CLI binary (used by
// criterion 9). Exit code 0 iff everything passed.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "klein/conwell.hpp"
#include "klein/fixtures.hpp"
#include "klein/gf2.hpp"
#include "klein/grassmannian.hpp"
#include "klein/io.hpp"
#include "klein/verify.hpp"

namespace fs = std::filesystem;
using namespace klein;
using nlohmann::json;

namespace {

std::string g_cli;
fs::path g_tmp;

struct failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
    if (!ok) throw failure(msg);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    fs::path cap = g_tmp / "cli_output.txt";
    std::string cmd = "\"" + g_cli + "\" " + args + " > \"" + cap.string() + "\" 2>&1";
    int rc = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(cap);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    if (rc == -1) throw failure("could not spawn CLI");
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

const QuadraticForm& canon() {
    static const QuadraticForm f = QuadraticForm::canonical_hyperbolic();
    return f;
}

// 1. off_quadric_points(canonical) = table 1 as a set of 28 points
void criterion_off_enumeration() {
    auto off = off_quadric_points(canon());
    require(off.size() == 28, "expected 28 off-quadric points, got " + std::to_string(off.size()));
    const auto& fx = paper_fixtures();
    std::set<unsigned> fixture_codes, computed;
    for (int row = 1; row <= 28; ++row) fixture_codes.insert(fixture_point_code(fx, row));
    for (auto p : off) computed.insert(p.code());
    require(fixture_codes.size() == 28, "fixture rows are not distinct");
    require(computed == fixture_codes, "off-quadric set differs from table 1");
}

// 2. external_lines = table 2 as index triples under the fixture ordering
void criterion_external_lines() {
    auto ext = external_lines(canon());
    require(ext.size() == 56, "expected 56 external lines, got " + std::to_string(ext.size()));
    const auto& fx = paper_fixtures();
    std::set<std::array<int, 3>> fixture_rows(fx.table2.begin(), fx.table2.end());
    require(fixture_rows.size() == 56, "fixture rows are not distinct");
    std::set<std::array<int, 3>> computed;
    for (const Line& l : ext) {
        std::array<int, 3> tri{};
        int t = 0;
        for (auto code : l.codes()) {
            int row = fixture_row_of_code(fx, code);
            require(row != 0, "external line point " + std::to_string(code) + " not in table 1");
            tri[t++] = row;
        }
        std::sort(tri.begin(), tri.end());
        computed.insert(tri);
    }
    require(computed == fixture_rows, "external line set differs from table 2");
}

// 3. measured parameters of the off-structure are (28_6, 56_3)
void criterion_configuration() {
    auto params = measure_params(off_quadric_structure(canon()));
    require(params == ConfigParams{28, 6, 56, 3},
            "off-structure parameters " + to_string(params));
}

// 4. the reference bijection verifies, and the search finds its own
void criterion_isomorphism() {
    auto t0 = std::chrono::steady_clock::now();
    auto off = off_quadric_structure(canon());
    auto g28 = build_grassmannian(2, 8);
    require(verify_certificate(off, g28, bijection_certificate(paper_fixtures())),
            "reference bijection rejected");
    auto cert = find_isomorphism(off, g28);
    require(cert.has_value(), "isomorphism search failed");
    require(verify_certificate(off, g28, *cert), "search certificate rejected");
    double dt = seconds_since(t0);
    require(dt < 1.0, "isomorphism work took " + std::to_string(dt) + "s (budget 1s)");
}

// 5. eight heptads, pairwise intersections 1, coverage 2, rows 22..28 -> mark 8
void criterion_heptads() {
    const auto& fx = paper_fixtures();
    CollinearityGraph g(off_quadric_points(canon()), external_lines(canon()));
    auto heptads = find_heptads(g);
    require(heptads.size() == 8, "expected 8 heptads, got " + std::to_string(heptads.size()));
    heptad_pair_intersections(heptads);  // raises on any violation

    std::vector<ProjPoint> tail;
    for (int row = 22; row <= 28; ++row) tail.emplace_back(fixture_point_code(fx, row));
    Heptad last(tail);
    auto it = std::find(heptads.begin(), heptads.end(), last);
    require(it != heptads.end(), "heptad of table rows 22..28 not found");

    auto marks = heptads_vs_marks(heptads, bijection_certificate(fx));
    require(marks[it - heptads.begin()] == 8, "rows 22..28 heptad not mapped to mark 8");
    require(std::set<int>(marks.begin(), marks.end()) == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8},
            "heptad marks are not a bijection onto 1..8");
}

// 6. nested removal sequence for the identity and five seeded orders
void criterion_removal_sequence() {
    const auto& fx = paper_fixtures();
    auto off = off_quadric_structure(canon());
    CollinearityGraph g(off_quadric_points(canon()), external_lines(canon()));
    auto heptads = find_heptads(g);

    std::vector<std::vector<int>> orders{{0, 1, 2, 3, 4, 5, 6, 7}};
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
        orders.push_back(seeded_permutation(8, seed));

    for (const auto& order : orders) {
        auto steps = removal_sequence(off, heptads, order);
        require(steps.size() == 8, "expected 8 step records");
        for (const auto& rec : steps) {
            require(rec.params == fx.nested[rec.step].params,
                    "step " + std::to_string(rec.step) + " params " + to_string(rec.params) +
                        " != " + to_string(fx.nested[rec.step].params));
            if (rec.step <= 6) {
                require(rec.certificate.has_value(),
                        "step " + std::to_string(rec.step) + " has no certificate");
                require(verify_certificate(rec.structure, build_grassmannian(2, 8 - rec.step),
                                           *rec.certificate),
                        "step " + std::to_string(rec.step) + " certificate rejected");
            }
        }
        require(steps.back().structure.num_points() == 0, "final structure not empty");
    }
}

// 7. property suite: closure, partition, flags, parameter formula, mark autos
void criterion_properties() {
    auto lines = all_lines();
    require(lines.size() == 651, "expected 651 lines");
    for (const Line& l : lines) {
        auto c = l.codes();
        require((c[0] ^ c[1]) == c[2], "line not closed under GF(2) sum");
    }

    int off = 0;
    for (auto p : enumerate_points()) off += canon()(p);
    require(off == 28 && 63 - off == 35, "partition 35 + 28 = 63 violated");

    auto check_flags = [](const IncidenceStructure& s) {
        long long by_points = 0, by_lines = 0;
        for (int i = 0; i < s.num_points(); ++i) by_points += s.degree(i);
        for (const auto& l : s.lines()) by_lines += static_cast<long long>(l.size());
        require(by_points == by_lines, "flag-count identity violated");
    };
    check_flags(off_quadric_structure(canon()));

    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            auto built = build_grassmannian(k, n);
            check_flags(built);
            require(measure_params(built, k + 1) == grassmannian_params(k, n),
                    "G_" + std::to_string(k) + "(" + std::to_string(n) +
                        ") measured != formula");
        }

    for (int n = 4; n <= 8; ++n) {
        auto gr = build_grassmannian(2, n);
        for (int t = 0; t < 20; ++t) {
            auto perm = seeded_permutation(n, 7000 + 100 * n + t);
            IsoCertificate cert;
            for (const auto& lbl : gr.point_labels()) {
                auto marks = parse_subset_label(lbl);
                std::vector<int> img{perm[marks[0] - 1] + 1, perm[marks[1] - 1] + 1};
                std::sort(img.begin(), img.end());
                cert.mapping[lbl] = subset_label(img);
            }
            require(verify_certificate(gr, gr, cert),
                    "mark permutation is not an automorphism of G_2(" + std::to_string(n) + ")");
        }
    }
}

// 8. automorphism counts, cross-checked against mark-permutation induction
void criterion_automorphisms() {
    auto t0 = std::chrono::steady_clock::now();
    for (int n : {4, 5}) {
        auto gr = build_grassmannian(2, n);
        long long want = 1;
        for (int i = 2; i <= n; ++i) want *= i;

        // oracle: the n! induced mark permutations are pairwise distinct
        std::vector<int> marks(n);
        std::iota(marks.begin(), marks.end(), 1);
        std::set<std::vector<int>> induced;
        do {
            std::vector<int> img;
            for (const auto& lbl : gr.point_labels()) {
                auto pm = parse_subset_label(lbl);
                int a = marks[pm[0] - 1], b = marks[pm[1] - 1];
                if (a > b) std::swap(a, b);
                img.push_back(gr.index_of(subset_label({a, b})));
            }
            induced.insert(std::move(img));
        } while (std::next_permutation(marks.begin(), marks.end()));
        require(static_cast<long long>(induced.size()) == want,
                "induced mark permutations of G_2(" + std::to_string(n) + ") not distinct");

        long long got = count_automorphisms(gr, 100000);
        require(got == want, "count_automorphisms(G_2(" + std::to_string(n) + ")) = " +
                                 std::to_string(got) + ", expected " + std::to_string(want));
    }
    double dt = seconds_since(t0);
    require(dt < 5.0, "automorphism counting took " + std::to_string(dt) + "s (budget 5s)");
}

// 9. CLI contract: exit codes, perturbed fixtures, JSON round trip
void criterion_cli() {
    require(!g_cli.empty(), "CLI path not supplied (argv[1])");
    std::string out;

    require(run_cli("verify-all --quiet") == 0, "verify-all should exit 0");

    int rc = run_cli("verify-all --quiet --perturb table2:1:1,4,10", &out);
    require(rc == 1, "perturbed verify-all should exit 1, got " + std::to_string(rc));
    require(out.find("table2 row 1") != std::string::npos,
            "perturbed verify-all must name 'table2 row 1'");

    rc = run_cli("iso grassmannian 2 4 grassmannian 2 5 --quiet", &out);
    require(rc == 2, "iso on mismatched Grassmannians should exit 2, got " + std::to_string(rc));

    rc = run_cli("iso off-structure grassmannian 2 8 --quiet --out \"" +
                 (g_tmp / "cert.json").string() + "\"");
    require(rc == 0, "iso off-structure vs G_2(8) should exit 0");
    std::ifstream certin(g_tmp / "cert.json");
    json certj;
    certin >> certj;
    auto cert = certificate_from_json(certj);
    require(verify_certificate(off_quadric_structure(canon()), build_grassmannian(2, 8), cert),
            "CLI certificate rejected");

    require(run_cli("iso nonsense 2>\"/dev/null\"") == 3, "bad selector should exit 3");

    fs::path off_json = g_tmp / "off.json";
    require(run_cli("export off-structure --format json --out \"" + off_json.string() + "\"") == 0,
            "export off-structure failed");
    std::ifstream in(off_json);
    json j;
    in >> j;
    auto reloaded = structure_from_json(j);
    require(reloaded == off_quadric_structure(canon()), "JSON round trip changed the structure");
    require(j["points"].size() == 28 && j["lines"].size() == 56, "off-structure JSON shape");

    rc = run_cli("iso \"" + off_json.string() + "\" grassmannian 2 8 --quiet");
    require(rc == 0, "iso from reloaded JSON should exit 0");

    require(run_cli("export grassmannian 2 8 --format json", &out) == 0, "export G_2(8) failed");
    json jg = json::parse(out);
    require(jg["points"].size() == 28 && jg["lines"].size() == 56, "G_2(8) JSON shape");

    require(run_cli("export sequence --format json", &out) == 0, "export sequence failed");
    json js = json::parse(out);
    require(js["steps"].size() == 8, "sequence export must have 8 step records");
    require(js["steps"].back()["structure"]["points"].empty(),
            "sequence must end in an empty structure");

    require(run_cli("export off-structure --format csv", &out) == 0, "export csv failed");
    std::size_t plus = 0;
    for (char c : out) plus += c == '+';
    require(plus == 168, "off-structure CSV must have 168 '+' cells");

    // determinism: byte-identical reruns
    std::string before = out;
    require(run_cli("export off-structure --format csv", &out) == 0, "export csv rerun failed");
    require(out == before, "export output not deterministic");
    std::string seq1, seq2;
    run_cli("sequence --seed 42 --format json", &seq1);
    run_cli("sequence --seed 42 --format json", &seq2);
    require(seq1 == seq2, "seeded sequence output not deterministic");
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli = argv[1];
    g_tmp = fs::temp_directory_path() / "klein-acceptance";
    fs::create_directories(g_tmp);

    struct Criterion {
        const char* name;
        std::function<void()> fn;
    };
    const std::vector<Criterion> criteria{
        {"1 off-quadric enumeration (28 points = table 1)", criterion_off_enumeration},
        {"2 external lines (56 lines = table 2)", criterion_external_lines},
        {"3 configuration parameters (28_6, 56_3)", criterion_configuration},
        {"4 isomorphism certificate + search (< 1s)", criterion_isomorphism},
        {"5 heptads (8, intersections 1, coverage 2, mark 8)", criterion_heptads},
        {"6 removal sequence (identity + 5 seeded orders)", criterion_removal_sequence},
        {"7 property suite (closure, partition, flags, formula, autos)", criterion_properties},
        {"8 automorphism counts (24, 120; < 5s)", criterion_automorphisms},
        {"9 CLI contract (exit codes, perturbation, round trip)", criterion_cli},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        try {
            c.fn();
            std::cout << "PASS " << c.name << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "FAIL " << c.name << ": " << e.what() << "\n";
        }
    }
    if (failed) std::cout << failed << " criterion(s) failed\n";
    return failed ? 1 : 0;
}
