#include "klein/fixtures.hpp"

#include "klein/gf2.hpp"
#include "klein/grassmannian.hpp"

namespace klein {

static PaperFixtures make_fixtures() {
    PaperFixtures fx;

    fx.table1 = {{
        {1, 1, 1, 0, 0, 0},  //  1
        {1, 1, 0, 0, 1, 0},  //  2
        {1, 1, 0, 0, 0, 1},  //  3
        {1, 1, 0, 1, 0, 0},  //  4
        {1, 1, 1, 0, 1, 0},  //  5
        {1, 1, 1, 0, 0, 1},  //  6
        {1, 1, 0, 1, 1, 0},  //  7
        {1, 1, 0, 1, 0, 1},  //  8
        {0, 0, 1, 1, 0, 0},  //  9
        {0, 0, 1, 1, 1, 0},  // 10
        {0, 0, 1, 1, 0, 1},  // 11
        {0, 1, 1, 1, 0, 0},  // 12
        {1, 0, 1, 1, 1, 0},  // 13
        {1, 0, 1, 1, 0, 1},  // 14
        {0, 0, 0, 0, 1, 1},  // 15
        {1, 0, 0, 0, 1, 1},  // 16
        {0, 0, 1, 0, 1, 1},  // 17
        {0, 0, 0, 1, 1, 1},  // 18
        {0, 1, 1, 0, 1, 1},  // 19
        {0, 1, 0, 1, 1, 1},  // 20
        {1, 1, 1, 1, 1, 1},  // 21
        {1, 1, 0, 0, 0, 0},  // 22
        {1, 0, 1, 1, 0, 0},  // 23
        {0, 1, 1, 1, 1, 0},  // 24
        {0, 1, 1, 1, 0, 1},  // 25
        {0, 1, 0, 0, 1, 1},  // 26
        {1, 0, 1, 0, 1, 1},  // 27
        {1, 0, 0, 1, 1, 1},  // 28
    }};

    fx.table2 = {{
        {1, 4, 9},    {1, 7, 10},   {1, 8, 11},   {1, 16, 19},  {1, 18, 21},
        {2, 3, 15},   {2, 6, 17},   {2, 8, 18},   {2, 11, 21},  {2, 12, 13},
        {3, 5, 17},   {3, 7, 18},   {3, 10, 21},  {3, 12, 14},  {4, 5, 10},
        {4, 6, 11},   {4, 16, 20},  {4, 17, 21},  {5, 6, 15},   {5, 7, 9},
        {5, 14, 20},  {6, 8, 9},    {6, 13, 20},  {7, 8, 15},   {7, 14, 19},
        {8, 13, 19},  {9, 17, 18},  {9, 19, 20},  {10, 11, 15}, {10, 14, 16},
        {11, 13, 16}, {12, 16, 21}, {12, 17, 20}, {12, 18, 19}, {13, 14, 15},
        {1, 26, 27},  {2, 23, 24},  {3, 23, 25},  {4, 26, 28},  {5, 25, 28},
        {6, 24, 28},  {7, 25, 27},  {8, 24, 27},  {9, 27, 28},  {10, 25, 26},
        {11, 24, 26}, {12, 22, 23}, {13, 22, 24}, {14, 22, 25}, {15, 24, 25},
        {16, 22, 26}, {17, 23, 28}, {18, 23, 27}, {19, 22, 27}, {20, 22, 28},
        {21, 23, 26},
    }};

    fx.bijection = {{
        {1, 4}, {3, 5}, {2, 5}, {4, 6}, {2, 6}, {3, 6}, {1, 2},
        {1, 3}, {1, 6}, {2, 4}, {3, 4}, {5, 7}, {3, 7}, {2, 7},
        {2, 3}, {4, 7}, {5, 6}, {1, 5}, {1, 7}, {6, 7}, {4, 5},
        {7, 8}, {5, 8}, {3, 8}, {2, 8}, {4, 8}, {1, 8}, {6, 8},
    }};

    fx.nested = {{
        {0, {28, 6, 56, 3}, "G_2(8)", ""},
        {1, {21, 5, 35, 3}, "G_2(7)", ""},
        {2, {15, 4, 20, 3}, "G_2(6)", "Cayley-Salmon"},
        {3, {10, 3, 10, 3}, "G_2(5)", "Desargues"},
        {4, {6, 2, 4, 3}, "G_2(4)", "Pasch"},
        {5, {3, 1, 1, 3}, "G_2(3)", "single line"},
        {6, {1, 0, 0, 3}, "G_2(2)", "single point"},
        {7, {0, 0, 0, 3}, "", "empty set"},
    }};

    return fx;
}

const PaperFixtures& paper_fixtures() {
    static const PaperFixtures fx = make_fixtures();
    return fx;
}

unsigned fixture_point_code(const PaperFixtures& fx, int row) {
    if (row < 1 || row > 28)
        raise(errc::unknown_point, "table1 row must be in 1..28, got " + std::to_string(row));
    unsigned code = 0;
    for (int i = 0; i < 6; ++i) code |= static_cast<unsigned>(fx.table1[row - 1][i]) << i;
    return code;
}

int fixture_row_of_code(const PaperFixtures& fx, unsigned code) {
    for (int row = 1; row <= 28; ++row)
        if (fixture_point_code(fx, row) == code) return row;
    return 0;
}

IsoCertificate bijection_certificate(const PaperFixtures& fx) {
    IsoCertificate cert;
    for (int row = 1; row <= 28; ++row) {
        const auto& pr = fx.bijection[row - 1];
        cert.mapping[std::to_string(fixture_point_code(fx, row))] =
            subset_label({pr[0], pr[1]});
    }
    return cert;
}

} // namespace klein
