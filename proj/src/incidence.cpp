#include "klein/incidence.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace klein {

IncidenceStructure::IncidenceStructure(std::vector<std::string> points,
                                       const std::vector<std::vector<std::string>>& lines)
    : labels_(std::move(points)) {
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            raise(errc::invalid_structure, "repeated point label '" + labels_[i] + "'");
    }
    lines_.reserve(lines.size());
    point_lines_.resize(labels_.size());
    for (const auto& line : lines) {
        if (line.empty()) raise(errc::invalid_structure, "empty line");
        std::vector<int> idx;
        idx.reserve(line.size());
        for (const auto& lbl : line) {
            auto it = index_.find(lbl);
            if (it == index_.end())
                raise(errc::invalid_structure, "line mentions unknown point '" + lbl + "'");
            idx.push_back(it->second);
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            raise(errc::invalid_structure, "line repeats a point");
        if (!line_set_.insert(idx).second)
            raise(errc::invalid_structure, "repeated line");
        int li = static_cast<int>(lines_.size());
        for (int p : idx) point_lines_[p].push_back(li);
        lines_.push_back(std::move(idx));
    }
}

int IncidenceStructure::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) raise(errc::unknown_point, "unknown point '" + label + "'");
    return it->second;
}

std::vector<std::string> IncidenceStructure::line_labels(int line) const {
    std::vector<std::string> out;
    out.reserve(lines_[line].size());
    for (int p : lines_[line]) out.push_back(labels_[p]);
    return out;
}

bool IncidenceStructure::has_line(std::vector<int> sorted_points) const {
    return line_set_.count(sorted_points) > 0;
}

bool IncidenceStructure::is_partial_linear() const {
    std::map<std::pair<int, int>, int> pair_count;
    for (const auto& l : lines_)
        for (std::size_t i = 0; i < l.size(); ++i)
            for (std::size_t j = i + 1; j < l.size(); ++j)
                if (++pair_count[{l[i], l[j]}] > 1) return false;
    return true;
}

ConfigParams measure_params(const IncidenceStructure& s,
                            std::optional<long long> vacuous_line_size) {
    ConfigParams p;
    p.num_points = s.num_points();
    p.num_lines = s.num_lines();

    if (s.num_points() > 0) {
        p.point_degree = s.degree(0);
        for (int i = 1; i < s.num_points(); ++i)
            if (s.degree(i) != p.point_degree)
                raise(errc::not_a_configuration,
                      "point '" + s.label(i) + "' has degree " + std::to_string(s.degree(i)) +
                          ", expected " + std::to_string(p.point_degree));
    }
    if (s.num_lines() > 0) {
        p.line_size = static_cast<long long>(s.lines()[0].size());
        for (int i = 1; i < s.num_lines(); ++i)
            if (static_cast<long long>(s.lines()[i].size()) != p.line_size)
                raise(errc::not_a_configuration,
                      "line " + std::to_string(i) + " has size " +
                          std::to_string(s.lines()[i].size()) + ", expected " +
                          std::to_string(p.line_size));
    } else if (vacuous_line_size) {
        p.line_size = *vacuous_line_size;
    }
    return p;
}

namespace {

// Precomputed search model: collinearity multiplicities and a per-point
// refinement invariant. Two points can correspond only if their signatures
// agree.
struct Profile {
    const IncidenceStructure* s = nullptr;
    int n = 0;
    std::vector<std::vector<int>> coll;  // coll[i][j] = #lines containing both
    std::vector<std::string> sigs;

    explicit Profile(const IncidenceStructure& str) : s(&str), n(str.num_points()) {
        coll.assign(n, std::vector<int>(n, 0));
        for (const auto& l : str.lines())
            for (std::size_t i = 0; i < l.size(); ++i)
                for (std::size_t j = i + 1; j < l.size(); ++j) {
                    ++coll[l[i]][l[j]];
                    ++coll[l[j]][l[i]];
                }
        sigs.resize(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> sizes;
            for (int li : str.lines_of_point(i))
                sizes.push_back(static_cast<int>(str.lines()[li].size()));
            std::sort(sizes.begin(), sizes.end());
            // (multiplicity, co-point degree) profile at distance 1
            std::vector<std::pair<int, int>> nbr;
            for (int j = 0; j < n; ++j)
                if (j != i && coll[i][j] > 0) nbr.emplace_back(coll[i][j], str.degree(j));
            std::sort(nbr.begin(), nbr.end());
            std::ostringstream os;
            os << str.degree(i) << '|';
            for (int v : sizes) os << v << ',';
            os << '|';
            for (auto [m, d] : nbr) os << m << ':' << d << ',';
            sigs[i] = os.str();
        }
    }
};

struct Searcher {
    const Profile& a;
    const Profile& b;
    std::vector<std::vector<int>> cand;   // signature-compatible images, ascending
    std::vector<int> order;               // processing order of a's points
    std::vector<int> mapped;              // a-point -> b-point or -1
    std::vector<char> used;               // b-point taken
    std::vector<int> remaining;           // unmapped points left per a-line
    long long limit = 0;                  // counting mode bound, 0 = find-first
    long long count = 0;
    bool found = false;

    Searcher(const Profile& pa, const Profile& pb) : a(pa), b(pb) {
        mapped.assign(a.n, -1);
        used.assign(b.n, 0);
        remaining.resize(a.s->lines().size());
        for (std::size_t i = 0; i < remaining.size(); ++i)
            remaining[i] = static_cast<int>(a.s->lines()[i].size());
    }

    bool prepare() {
        if (a.n != b.n || a.s->num_lines() != b.s->num_lines()) return false;
        auto sa = a.sigs, sb = b.sigs;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;

        cand.assign(a.n, {});
        for (int i = 0; i < a.n; ++i) {
            for (int j = 0; j < b.n; ++j)
                if (a.sigs[i] == b.sigs[j]) cand[i].push_back(j);
            if (cand[i].empty()) return false;
        }

        // Greedy connected order: always extend next to the point most
        // constrained by what is already placed.
        order.clear();
        std::vector<char> chosen(a.n, 0);
        std::vector<int> placed_nbrs(a.n, 0);
        for (int step = 0; step < a.n; ++step) {
            int best = -1;
            for (int i = 0; i < a.n; ++i) {
                if (chosen[i]) continue;
                if (best == -1 || placed_nbrs[i] > placed_nbrs[best] ||
                    (placed_nbrs[i] == placed_nbrs[best] &&
                     cand[i].size() < cand[best].size()))
                    best = i;
            }
            chosen[best] = 1;
            order.push_back(best);
            for (int j = 0; j < a.n; ++j)
                if (!chosen[j] && a.coll[best][j] > 0) ++placed_nbrs[j];
        }
        return true;
    }

    bool consistent(int pa, int pb) const {
        for (int pe : order) {
            if (pe == pa) break;
            if (a.coll[pa][pe] != b.coll[pb][mapped[pe]]) return false;
        }
        return true;
    }

    // Lines of a that became fully mapped must land on lines of b.
    bool lines_ok(int pa) const {
        std::vector<int> img;
        for (int li : a.s->lines_of_point(pa)) {
            if (remaining[li] != 0) continue;
            const auto& l = a.s->lines()[li];
            img.clear();
            for (int p : l) img.push_back(mapped[p]);
            std::sort(img.begin(), img.end());
            if (!b.s->has_line(img)) return false;
        }
        return true;
    }

    // Returns true to stop the whole search (find-first mode succeeded).
    bool run(int depth) {
        if (depth == a.n) {
            if (limit == 0) {
                found = true;
                return true;
            }
            if (++count > limit)
                raise(errc::limit_exceeded,
                      "automorphism count exceeds limit " + std::to_string(limit));
            return false;
        }
        int pa = order[depth];
        for (int pb : cand[pa]) {
            if (used[pb] || !consistent(pa, pb)) continue;
            mapped[pa] = pb;
            used[pb] = 1;
            for (int li : a.s->lines_of_point(pa)) --remaining[li];
            if (lines_ok(pa) && run(depth + 1)) return true;
            for (int li : a.s->lines_of_point(pa)) ++remaining[li];
            mapped[pa] = -1;
            used[pb] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<IsoCertificate> find_isomorphism(const IncidenceStructure& a,
                                               const IncidenceStructure& b) {
    Profile pa(a), pb(b);
    Searcher sr(pa, pb);
    if (!sr.prepare()) return std::nullopt;
    if (!sr.run(0)) return std::nullopt;
    IsoCertificate cert;
    for (int i = 0; i < pa.n; ++i) cert.mapping[a.label(i)] = b.label(sr.mapped[i]);
    return cert;
}

bool verify_certificate(const IncidenceStructure& a, const IncidenceStructure& b,
                        const IsoCertificate& cert) {
    if (static_cast<int>(cert.mapping.size()) != a.num_points())
        raise(errc::domain_mismatch, "mapping has " + std::to_string(cert.mapping.size()) +
                                         " keys, structure has " +
                                         std::to_string(a.num_points()) + " points");
    for (const auto& [k, v] : cert.mapping)
        if (!a.has_point(k)) raise(errc::domain_mismatch, "mapping key '" + k + "' is not a point of a");

    if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return false;

    std::vector<int> image(a.num_points(), -1);
    std::vector<char> hit(b.num_points(), 0);
    for (const auto& [k, v] : cert.mapping) {
        if (!b.has_point(v)) return false;
        int bi = b.index_of(v);
        if (hit[bi]) return false;  // not injective
        hit[bi] = 1;
        image[a.index_of(k)] = bi;
    }

    // Distinct a-lines have distinct images under a bijection, so mapping the
    // line set into b's line set implies a bijection of lines.
    std::vector<int> img;
    for (const auto& l : a.lines()) {
        img.clear();
        for (int p : l) img.push_back(image[p]);
        std::sort(img.begin(), img.end());
        if (!b.has_line(img)) return false;
    }
    return true;
}

IncidenceStructure induced_substructure(const IncidenceStructure& s,
                                        const std::vector<std::string>& keep_points) {
    std::vector<char> keep(s.num_points(), 0);
    for (const auto& lbl : keep_points) keep[s.index_of(lbl)] = 1;

    std::vector<std::string> pts;
    for (int i = 0; i < s.num_points(); ++i)
        if (keep[i]) pts.push_back(s.label(i));

    std::vector<std::vector<std::string>> lines;
    for (int li = 0; li < s.num_lines(); ++li) {
        const auto& l = s.lines()[li];
        if (std::all_of(l.begin(), l.end(), [&](int p) { return keep[p]; }))
            lines.push_back(s.line_labels(li));
    }
    return IncidenceStructure(std::move(pts), lines);
}

long long count_automorphisms(const IncidenceStructure& s, long long limit) {
    if (limit < 1)
        raise(errc::limit_exceeded, "every structure has the identity automorphism");
    Profile p(s);
    Searcher sr(p, p);
    if (!sr.prepare()) return 0;  // unreachable: a structure matches itself
    sr.limit = limit;
    sr.run(0);
    return sr.count;
}

std::vector<int> seeded_permutation(int n, std::uint64_t seed) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::mt19937_64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(v[i], v[j]);
    }
    return v;
}

} // namespace klein
