#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "klein/conwell.hpp"
#include "klein/fixtures.hpp"
#include "klein/grassmannian.hpp"
#include "klein/incidence.hpp"

using namespace klein;

namespace {

IncidenceStructure triangle() {
    return IncidenceStructure({"a", "b", "c"}, {{"a", "b", "c"}});
}

} // namespace

TEST_CASE("construction validation") {
    CHECK_THROWS_AS(IncidenceStructure({"a", "a"}, {}), error);
    CHECK_THROWS_AS(IncidenceStructure({"a"}, {{"a", "b"}}), error);
    CHECK_THROWS_AS(IncidenceStructure({"a", "b"}, {{"a", "a"}}), error);
    CHECK_THROWS_AS(IncidenceStructure({"a", "b"}, {{"a", "b"}, {"b", "a"}}), error);
    CHECK_THROWS_AS(IncidenceStructure({"a"}, {{}}), error);
    CHECK_THROWS_AS(triangle().index_of("z"), error);
}

TEST_CASE("measure_params") {
    auto off = off_quadric_structure(QuadraticForm::canonical_hyperbolic());
    CHECK(measure_params(off) == ConfigParams{28, 6, 56, 3});

    CHECK(measure_params(IncidenceStructure({"a"}, {}), 3) == ConfigParams{1, 0, 0, 3});
    CHECK(measure_params(IncidenceStructure({}, {}), 3) == ConfigParams{0, 0, 0, 3});
    CHECK(measure_params(IncidenceStructure({"a"}, {})) == ConfigParams{1, 0, 0, 0});

    IncidenceStructure bad({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
    CHECK_THROWS_AS(measure_params(bad), error);
    try {
        measure_params(bad);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_configuration);
        CHECK(std::string(e.what()).find("'b'") != std::string::npos);
    }
}

TEST_CASE("flag-count identity across constructed structures") {
    auto check_flags = [](const IncidenceStructure& s) {
        long long by_points = 0, by_lines = 0;
        for (int i = 0; i < s.num_points(); ++i) by_points += s.degree(i);
        for (const auto& l : s.lines()) by_lines += static_cast<long long>(l.size());
        CHECK(by_points == by_lines);
    };
    check_flags(off_quadric_structure(QuadraticForm::canonical_hyperbolic()));
    for (int n = 2; n <= 8; ++n) check_flags(build_grassmannian(2, n));
    check_flags(build_grassmannian(4, 8));
}

TEST_CASE("partial linear space check") {
    CHECK(off_quadric_structure(QuadraticForm::canonical_hyperbolic()).is_partial_linear());
    CHECK(build_grassmannian(2, 8).is_partial_linear());
    IncidenceStructure doubled({"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b"}});
    CHECK(!doubled.is_partial_linear());
}

TEST_CASE("find_isomorphism: identity and small negatives") {
    auto g25 = build_grassmannian(2, 5);
    auto cert = find_isomorphism(g25, g25);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(g25, g25, *cert));

    IncidenceStructure no_lines({"a", "b", "c"}, {});
    CHECK(!find_isomorphism(no_lines, triangle()).has_value());
    CHECK(!find_isomorphism(triangle(), no_lines).has_value());
    CHECK(!find_isomorphism(build_grassmannian(2, 4), build_grassmannian(2, 5)).has_value());

    // G_2(4) with line {12,13,23} replaced by {12,13,24}: degrees go
    // non-uniform, so the pair is rejected on invariants alone
    IncidenceStructure mod24(build_grassmannian(2, 4).point_labels(),
                             {{"{1,2}", "{1,3}", "{2,4}"},
                              {"{1,2}", "{1,4}", "{2,4}"},
                              {"{1,3}", "{1,4}", "{3,4}"},
                              {"{2,3}", "{2,4}", "{3,4}"}});
    CHECK(!find_isomorphism(build_grassmannian(2, 4), mod24).has_value());

    // hexagon vs two triangles (2-point lines): identical local invariants,
    // so only the exhaustive search can tell them apart
    IncidenceStructure hexagon({"a", "b", "c", "d", "e", "f"},
                               {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}});
    IncidenceStructure triangles({"a", "b", "c", "d", "e", "f"},
                                 {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"d", "e"}, {"e", "f"}, {"f", "d"}});
    CHECK(!find_isomorphism(hexagon, triangles).has_value());
    CHECK(!find_isomorphism(triangles, hexagon).has_value());
    CHECK(measure_params(hexagon) == measure_params(triangles));

    auto empty = IncidenceStructure({}, {});
    auto id_empty = find_isomorphism(empty, empty);
    REQUIRE(id_empty.has_value());
    CHECK(id_empty->mapping.empty());
}

TEST_CASE("find_isomorphism: off-structure vs G_2(8), both directions") {
    auto off = off_quadric_structure(QuadraticForm::canonical_hyperbolic());
    auto g28 = build_grassmannian(2, 8);

    auto cert = find_isomorphism(off, g28);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(off, g28, *cert));

    auto back = find_isomorphism(g28, off);
    REQUIRE(back.has_value());
    CHECK(verify_certificate(g28, off, *back));

    // parameters are isomorphism-invariant
    CHECK(measure_params(off) == measure_params(g28));
}

TEST_CASE("verify_certificate: the reference bijection") {
    const auto& fx = paper_fixtures();
    auto off = off_quadric_structure(QuadraticForm::canonical_hyperbolic());
    auto g28 = build_grassmannian(2, 8);

    auto cert = bijection_certificate(fx);
    CHECK(verify_certificate(off, g28, cert));

    // swapping the images of rows 27 and 28 must break some line image;
    // the first broken one is row 36 = {1, 26, 27}
    auto swapped = cert;
    std::swap(swapped.mapping[std::to_string(fixture_point_code(fx, 27))],
              swapped.mapping[std::to_string(fixture_point_code(fx, 28))]);
    CHECK(!verify_certificate(off, g28, swapped));

    std::set<std::string> image36;
    for (int row : {1, 26, 27})
        image36.insert(swapped.mapping[std::to_string(fixture_point_code(fx, row))]);
    std::set<int> marks;
    for (const auto& lbl : image36)
        for (int m : parse_subset_label(lbl)) marks.insert(m);
    CHECK(marks.size() == 4);  // not the 2-subsets of any 3-set, so not a line
}

TEST_CASE("verify_certificate: domain and bijection failures") {
    auto t = triangle();
    IsoCertificate ident{{{"a", "a"}, {"b", "b"}, {"c", "c"}}};
    CHECK(verify_certificate(t, t, ident));

    IsoCertificate missing{{{"a", "a"}, {"b", "b"}}};
    CHECK_THROWS_AS(verify_certificate(t, t, missing), error);
    IsoCertificate wrong_key{{{"a", "a"}, {"b", "b"}, {"z", "c"}}};
    CHECK_THROWS_AS(verify_certificate(t, t, wrong_key), error);

    IsoCertificate not_injective{{{"a", "a"}, {"b", "a"}, {"c", "c"}}};
    CHECK(!verify_certificate(t, t, not_injective));
    IsoCertificate outside{{{"a", "a"}, {"b", "b"}, {"c", "z"}}};
    CHECK(!verify_certificate(t, t, outside));
}

TEST_CASE("induced_substructure") {
    auto off = off_quadric_structure(QuadraticForm::canonical_hyperbolic());
    CHECK(induced_substructure(off, off.point_labels()) == off);

    const auto& fx = paper_fixtures();
    std::vector<std::string> first21;
    for (int row = 1; row <= 21; ++row)
        first21.push_back(std::to_string(fixture_point_code(fx, row)));
    auto sub = induced_substructure(off, first21);
    CHECK(sub.num_points() == 21);
    CHECK(sub.num_lines() == 35);
    CHECK(measure_params(sub, 3) == ConfigParams{21, 5, 35, 3});

    CHECK(induced_substructure(build_grassmannian(2, 3), {}).num_points() == 0);
    CHECK_THROWS_AS(induced_substructure(off, {"nope"}), error);
}

TEST_CASE("count_automorphisms: single line") {
    CHECK(count_automorphisms(triangle(), 100) == 6);
    CHECK_THROWS_AS(count_automorphisms(triangle(), 5), error);
    CHECK(count_automorphisms(triangle(), 6) == 6);
    CHECK_THROWS_AS(count_automorphisms(triangle(), 0), error);
}

TEST_CASE("count_automorphisms: G_2(4) equals the S_6 brute force") {
    auto g24 = build_grassmannian(2, 4);
    REQUIRE(g24.num_points() == 6);

    // brute force: try all 720 permutations of the 6 points
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    int brute = 0;
    do {
        bool ok = true;
        for (const auto& l : g24.lines()) {
            std::vector<int> img;
            for (int p : l) img.push_back(perm[p]);
            std::sort(img.begin(), img.end());
            if (!g24.has_line(img)) {
                ok = false;
                break;
            }
        }
        brute += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(brute == 24);
    CHECK(count_automorphisms(g24, 1000) == 24);
}

TEST_CASE("count_automorphisms: G_2(5) equals the S_10 brute force") {
    auto g25 = build_grassmannian(2, 5);
    REQUIRE(g25.num_points() == 10);

    std::vector<int> perm(10);
    std::iota(perm.begin(), perm.end(), 0);
    long long brute = 0;
    do {
        bool ok = true;
        for (const auto& l : g25.lines()) {
            std::vector<int> img;
            for (int p : l) img.push_back(perm[p]);
            std::sort(img.begin(), img.end());
            if (!g25.has_line(img)) {
                ok = false;
                break;
            }
        }
        brute += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(brute == 120);
    CHECK(count_automorphisms(g25, 1000) == 120);
}

TEST_CASE("count_automorphisms: G_2(N) matches the induced mark permutations") {
    // S_N acts faithfully on pairs for N >= 3; for N = 2 the action collapses
    CHECK(count_automorphisms(build_grassmannian(2, 2), 10) == 1);
    long long factorial = 1;
    for (int n = 3; n <= 5; ++n) {
        factorial = 1;
        for (int i = 2; i <= n; ++i) factorial *= i;
        CHECK(count_automorphisms(build_grassmannian(2, n), 10000) == factorial);
    }
}

TEST_CASE("count_automorphisms: G_2(8) = 8!" * doctest::timeout(30)) {
    auto g28 = build_grassmannian(2, 8);

    // oracle: the 8! mark permutations induce pairwise distinct automorphisms
    std::vector<int> marks(8);
    std::iota(marks.begin(), marks.end(), 1);
    std::set<std::vector<int>> induced;
    std::vector<std::vector<int>> point_marks;
    for (const auto& lbl : g28.point_labels()) point_marks.push_back(parse_subset_label(lbl));
    do {
        std::vector<int> img;
        for (const auto& pm : point_marks) {
            int a = marks[pm[0] - 1], b = marks[pm[1] - 1];
            if (a > b) std::swap(a, b);
            img.push_back(g28.index_of(subset_label({a, b})));
        }
        induced.insert(std::move(img));
    } while (std::next_permutation(marks.begin(), marks.end()));
    CHECK(induced.size() == 40320);

    CHECK(count_automorphisms(g28, 100000) == 40320);
}

TEST_CASE("seeded_permutation is deterministic and valid") {
    auto a = seeded_permutation(8, 17);
    auto b = seeded_permutation(8, 17);
    CHECK(a == b);
    CHECK(seeded_permutation(8, 18) != a);
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}
