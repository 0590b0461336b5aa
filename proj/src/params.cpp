#include "klein/params.hpp"

namespace klein {

std::string to_string(const ConfigParams& p) {
    return "(" + std::to_string(p.num_points) + "_" + std::to_string(p.point_degree) +
           ", " + std::to_string(p.num_lines) + "_" + std::to_string(p.line_size) + ")";
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace klein
