#include "klein/io.hpp"

#include <algorithm>
#include <ostream>

namespace klein {

using nlohmann::json;

json structure_to_json(const IncidenceStructure& s, const std::string& name,
                       std::optional<long long> vacuous_line_size,
                       const std::map<std::string, json>& tags) {
    json points = json::array();
    for (const auto& lbl : s.point_labels()) {
        json pt{{"id", lbl}};
        auto it = tags.find(lbl);
        pt["tags"] = it == tags.end() ? json::object() : it->second;
        points.push_back(std::move(pt));
    }
    json lines = json::array();
    for (int li = 0; li < s.num_lines(); ++li) lines.push_back(s.line_labels(li));

    json params;
    try {
        ConfigParams p = measure_params(s, vacuous_line_size);
        params = json::array({p.num_points, p.point_degree, p.num_lines, p.line_size});
    } catch (const error&) {
        params = nullptr;  // not a configuration
    }
    return json{{"points", points},
                {"lines", lines},
                {"meta", {{"params", params}, {"name", name}}}};
}

IncidenceStructure structure_from_json(const json& j) {
    try {
        std::vector<std::string> points;
        for (const auto& pt : j.at("points")) points.push_back(pt.at("id").get<std::string>());
        std::vector<std::vector<std::string>> lines;
        for (const auto& l : j.at("lines")) lines.push_back(l.get<std::vector<std::string>>());
        return IncidenceStructure(std::move(points), lines);
    } catch (const json::exception& e) {
        raise(errc::io_failure, std::string("bad structure JSON: ") + e.what());
    }
}

json certificate_to_json(const IsoCertificate& cert) {
    json mapping = json::object();
    for (const auto& [k, v] : cert.mapping) mapping[k] = v;
    return json{{"mapping", mapping}};
}

IsoCertificate certificate_from_json(const json& j) {
    try {
        IsoCertificate cert;
        for (const auto& [k, v] : j.at("mapping").items()) cert.mapping[k] = v.get<std::string>();
        return cert;
    } catch (const json::exception& e) {
        raise(errc::io_failure, std::string("bad certificate JSON: ") + e.what());
    }
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_levi_dot(std::ostream& os, const IncidenceStructure& s, const std::string& name) {
    os << "graph " << dot_quote(name) << " {\n";
    os << "  // " << s.num_points() << " points (circles), " << s.num_lines()
       << " lines (boxes)\n";
    os << "  node [shape=circle];\n";
    for (int i = 0; i < s.num_points(); ++i)
        os << "  p" << i << " [label=" << dot_quote(s.label(i)) << "];\n";
    os << "  node [shape=box];\n";
    for (int li = 0; li < s.num_lines(); ++li) os << "  l" << li + 1 << " [label=\"l" << li + 1 << "\"];\n";
    for (int li = 0; li < s.num_lines(); ++li)
        for (int p : s.lines()[li]) os << "  p" << p << " -- l" << li + 1 << ";\n";
    os << "}\n";
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_incidence_csv(std::ostream& os, const IncidenceStructure& s) {
    os << "line";
    for (const auto& lbl : s.point_labels()) os << ',' << csv_quote(lbl);
    os << '\n';
    for (int li = 0; li < s.num_lines(); ++li) {
        const auto& l = s.lines()[li];
        os << "l" << li + 1;
        for (int p = 0; p < s.num_points(); ++p)
            os << ',' << (std::binary_search(l.begin(), l.end(), p) ? "+" : "");
        os << '\n';
    }
}

void write_off_structure_csv(std::ostream& os, const IncidenceStructure& off,
                             const PaperFixtures& fx) {
    os << "line";
    for (int col = 1; col <= 28; ++col) os << ',' << col;
    os << '\n';
    for (int row = 1; row <= 56; ++row) {
        const auto& tri = fx.table2[row - 1];
        // the emitted matrix is cross-checked against the structure itself
        std::vector<int> idx;
        for (int t : tri) idx.push_back(off.index_of(std::to_string(fixture_point_code(fx, t))));
        std::sort(idx.begin(), idx.end());
        if (!off.has_line(idx))
            raise(errc::inconsistent_input,
                  "fixture line " + std::to_string(row) + " is not a line of the structure");
        os << row;
        for (int col = 1; col <= 28; ++col)
            os << ',' << (tri[0] == col || tri[1] == col || tri[2] == col ? "+" : "");
        os << '\n';
    }
}

} // namespace klein
