#pragma once

#include <string>

namespace klein {

// Parameters of an (n_r, m_k)-configuration: n points each on r lines,
// m lines each with k points. Flag double counting forces n*r = m*k.
struct ConfigParams {
    long long num_points = 0;
    long long point_degree = 0;
    long long num_lines = 0;
    long long line_size = 0;

    bool operator==(const ConfigParams&) const = default;
    bool flag_identity() const { return num_points * point_degree == num_lines * line_size; }
};

// "(28_6, 56_3)"
std::string to_string(const ConfigParams& p);

long long binomial(int n, int k);

} // namespace klein
