#include "klein/grassmannian.hpp"

#include <algorithm>
#include <cctype>

namespace klein {

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (k == 0) out.assign(1, {});
    return out;
}

std::string subset_label(const std::vector<int>& marks) {
    std::string s = "{";
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(marks[i]);
    }
    s += '}';
    return s;
}

std::vector<int> parse_subset_label(const std::string& label) {
    std::vector<int> marks;
    int cur = -1;
    for (char ch : label) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur = (cur < 0 ? 0 : cur * 10) + (ch - '0');
        } else if (cur >= 0) {
            marks.push_back(cur);
            cur = -1;
        }
    }
    if (cur >= 0) marks.push_back(cur);
    if (marks.empty())
        raise(errc::invalid_structure, "no marks in subset label '" + label + "'");
    for (std::size_t i = 1; i < marks.size(); ++i)
        if (marks[i] <= marks[i - 1])
            raise(errc::invalid_structure, "marks not strictly increasing in '" + label + "'");
    return marks;
}

static void check_arity(int k, int n) {
    if (k < 1 || k > n)
        raise(errc::invalid_arity, "need 1 <= k <= N, got k=" + std::to_string(k) +
                                       ", N=" + std::to_string(n));
}

IncidenceStructure build_grassmannian(int k, int n) {
    check_arity(k, n);
    std::vector<std::string> points;
    for (const auto& s : k_subsets(n, k)) points.push_back(subset_label(s));

    std::vector<std::vector<std::string>> lines;
    for (const auto& l : k_subsets(n, k + 1)) {
        // points on the line = the k-subsets of the (k+1)-set
        std::vector<std::string> members;
        std::vector<int> sub(l.size() - 1);
        for (std::size_t skip = 0; skip < l.size(); ++skip) {
            std::size_t t = 0;
            for (std::size_t i = 0; i < l.size(); ++i)
                if (i != skip) sub[t++] = l[i];
            members.push_back(subset_label(sub));
        }
        lines.push_back(std::move(members));
    }
    return IncidenceStructure(std::move(points), lines);
}

ConfigParams grassmannian_params(int k, int n) {
    check_arity(k, n);
    return ConfigParams{binomial(n, k), n - k, binomial(n, k + 1), k + 1};
}

} // namespace klein
