#pragma once

// The four reference tables, embedded verbatim. They are the ground truth
// every verification suite checks against: the 28 off-quadric points of the
// canonical hyperbolic quadric, the 56 external lines (as triples of table-1
// row indices), the point <-> mark-pair bijection onto G_2(8), and the
// expected parameters of the nested heptad-removal sequence.

#include <array>
#include <string>

#include "klein/incidence.hpp"

namespace klein {

struct NestedRow {
    int removed;            // number of heptads removed
    ConfigParams params;    // expected (n_r, m_k)
    std::string cg;         // "G_2(8)" .. "G_2(2)", empty for the final row
    std::string remark;     // "Desargues", "Pasch", ...
};

struct PaperFixtures {
    std::array<std::array<int, 6>, 28> table1;   // bits x1..x6, rows 1..28
    std::array<std::array<int, 3>, 56> table2;   // 1-based table1 row indices
    std::array<std::array<int, 2>, 28> bijection;  // mark pair of row i+1
    std::array<NestedRow, 8> nested;             // 0..7 heptads removed
};

const PaperFixtures& paper_fixtures();

// 6-bit code of table-1 row (1-based).
unsigned fixture_point_code(const PaperFixtures& fx, int row);

// Inverse lookup: 1-based row of a point code, or 0 when absent.
int fixture_row_of_code(const PaperFixtures& fx, unsigned code);

// The fixture bijection as a certificate from off-quadric point labels
// (decimal codes) to G_2(8) subset labels.
IsoCertificate bijection_certificate(const PaperFixtures& fx);

} // namespace klein
