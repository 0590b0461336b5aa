#include "klein/conwell.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "klein/grassmannian.hpp"

namespace klein {

CollinearityGraph::CollinearityGraph(const std::vector<ProjPoint>& off_points,
                                     const std::vector<Line>& ext_lines)
    : verts_(off_points) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    if (verts_.size() > 32)
        raise(errc::inconsistent_input, "graph supports at most 32 vertices");
    adj_.assign(verts_.size(), 0);
    for (const Line& l : ext_lines) {
        int idx[3];
        for (int i = 0; i < 3; ++i) {
            auto it = std::lower_bound(verts_.begin(), verts_.end(), l.points()[i]);
            if (it == verts_.end() || *it != l.points()[i])
                raise(errc::inconsistent_input,
                      "line contains point " + l.points()[i].label() +
                          " outside the vertex set");
            idx[i] = static_cast<int>(it - verts_.begin());
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                adj_[idx[i]] |= std::uint32_t{1} << idx[j];
                adj_[idx[j]] |= std::uint32_t{1} << idx[i];
            }
    }
}

long long CollinearityGraph::num_edges() const {
    long long twice = 0;
    for (std::uint32_t m : adj_) twice += std::popcount(m);
    return twice / 2;
}

int CollinearityGraph::degree(int v) const { return std::popcount(adj_[v]); }

int CollinearityGraph::vertex_index(ProjPoint p) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
    if (it == verts_.end() || *it != p)
        raise(errc::unknown_point, "point " + p.label() + " is not a vertex");
    return static_cast<int>(it - verts_.begin());
}

namespace {

std::array<ProjPoint, 7> seven(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 7)
        raise(errc::inconsistent_input,
              "a heptad has 7 points, got " + std::to_string(pts.size()));
    return {pts[0], pts[1], pts[2], pts[3], pts[4], pts[5], pts[6]};
}

} // namespace

Heptad::Heptad(const std::vector<ProjPoint>& pts) : points(seven(pts)) {
    std::sort(points.begin(), points.end());
    if (std::adjacent_find(points.begin(), points.end()) != points.end())
        raise(errc::inconsistent_input, "heptad points must be distinct");
}

bool Heptad::contains(ProjPoint p) const {
    return std::find(points.begin(), points.end(), p) != points.end();
}

std::vector<std::string> Heptad::labels() const {
    std::vector<std::string> out;
    out.reserve(7);
    for (ProjPoint p : points) out.push_back(p.label());
    return out;
}

namespace {

// Bron-Kerbosch with pivoting on bitmask vertex sets.
void bron_kerbosch(const CollinearityGraph& g, std::uint32_t r, std::uint32_t p,
                   std::uint32_t x, std::vector<std::uint32_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    // pivot: vertex of p|x with the most neighbors in p
    int pivot = -1, best = -1;
    for (std::uint32_t m = p | x; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int cnt = std::popcount(p & g.neighbor_mask(v));
        if (cnt > best) best = cnt, pivot = v;
    }
    for (std::uint32_t m = p & ~g.neighbor_mask(pivot); m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        std::uint32_t bit = std::uint32_t{1} << v;
        bron_kerbosch(g, r | bit, p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<Heptad> find_heptads(const CollinearityGraph& g) {
    std::vector<std::uint32_t> cliques;
    std::uint32_t all = g.num_vertices() == 32
                            ? ~std::uint32_t{0}
                            : (std::uint32_t{1} << g.num_vertices()) - 1;
    bron_kerbosch(g, 0, all, 0, cliques);

    std::vector<Heptad> heptads;
    for (std::uint32_t c : cliques) {
        int size = std::popcount(c);
        if (size > 7)
            raise(errc::property_violated,
                  "maximal clique of size " + std::to_string(size) + " found");
        if (size != 7) continue;
        std::vector<ProjPoint> pts;
        for (std::uint32_t m = c; m; m &= m - 1) pts.push_back(g.vertex(std::countr_zero(m)));
        heptads.emplace_back(pts);
    }
    std::sort(heptads.begin(), heptads.end());
    return heptads;
}

HeptadReport heptad_pair_intersections(const std::vector<Heptad>& heptads) {
    HeptadReport rep;
    int n = static_cast<int>(heptads.size());
    rep.pair_intersection.assign(n, std::vector<int>(n, 7));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int common = 0;
            for (ProjPoint p : heptads[i].points) common += heptads[j].contains(p);
            rep.pair_intersection[i][j] = rep.pair_intersection[j][i] = common;
            if (common != 1)
                raise(errc::property_violated,
                      "heptads " + std::to_string(i) + " and " + std::to_string(j) +
                          " share " + std::to_string(common) + " points");
        }
    for (const Heptad& h : heptads)
        for (ProjPoint p : h.points) ++rep.point_coverage[p.code()];
    for (const auto& [code, mult] : rep.point_coverage)
        if (mult != 2)
            raise(errc::property_violated, "point " + std::to_string(code) + " lies in " +
                                               std::to_string(mult) + " heptads");
    return rep;
}

std::vector<int> heptads_vs_marks(const std::vector<Heptad>& heptads,
                                  const IsoCertificate& cert) {
    std::vector<int> marks;
    for (std::size_t hi = 0; hi < heptads.size(); ++hi) {
        std::set<int> common;
        bool first = true;
        for (ProjPoint p : heptads[hi].points) {
            auto it = cert.mapping.find(p.label());
            if (it == cert.mapping.end())
                raise(errc::domain_mismatch, "certificate has no image for point " + p.label());
            auto pair = parse_subset_label(it->second);
            std::set<int> ms(pair.begin(), pair.end());
            if (first) {
                common = ms;
                first = false;
            } else {
                std::set<int> inter;
                std::set_intersection(common.begin(), common.end(), ms.begin(), ms.end(),
                                      std::inserter(inter, inter.begin()));
                common = std::move(inter);
            }
        }
        if (common.size() != 1)
            raise(errc::no_common_mark, "heptad " + std::to_string(hi) + " images share " +
                                            std::to_string(common.size()) + " marks");
        marks.push_back(*common.begin());
    }
    std::set<int> distinct(marks.begin(), marks.end());
    if (distinct.size() != heptads.size() ||
        (heptads.size() == 8 && (*distinct.begin() != 1 || *distinct.rbegin() != 8)))
        raise(errc::property_violated, "heptad marks are not a bijection onto the mark set");
    return marks;
}

IncidenceStructure off_quadric_structure(const QuadraticForm& f) {
    std::vector<std::string> points;
    for (ProjPoint p : off_quadric_points(f)) points.push_back(p.label());
    std::vector<std::vector<std::string>> lines;
    for (const Line& l : external_lines(f)) {
        lines.push_back({l.points()[0].label(), l.points()[1].label(), l.points()[2].label()});
    }
    return IncidenceStructure(std::move(points), lines);
}

IncidenceStructure remove_heptad(const IncidenceStructure& s, const Heptad& h) {
    std::set<std::string> gone;
    for (ProjPoint p : h.points) {
        if (!s.has_point(p.label()))
            raise(errc::unknown_point, "heptad point " + p.label() + " not in structure");
        gone.insert(p.label());
    }
    std::vector<std::string> keep;
    for (const auto& lbl : s.point_labels())
        if (!gone.count(lbl)) keep.push_back(lbl);
    return induced_substructure(s, keep);
}

std::vector<RemovalStep> removal_sequence(const IncidenceStructure& s,
                                          const std::vector<Heptad>& heptads,
                                          const std::vector<int>& order) {
    if (heptads.size() != 8)
        raise(errc::inconsistent_input,
              "expected 8 heptads, got " + std::to_string(heptads.size()));
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.size() != 8 ||
        !std::equal(sorted.begin(), sorted.end(), std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}.begin()))
        raise(errc::inconsistent_input, "order must be a permutation of 0..7");

    auto step_record = [](int step, const IncidenceStructure& cur,
                          std::vector<std::string> removed) {
        RemovalStep rec;
        rec.step = step;
        rec.params = measure_params(cur, 3);
        rec.removed = std::move(removed);
        rec.structure = cur;
        if (step <= 6) {
            rec.grassmannian = "G_2(" + std::to_string(8 - step) + ")";
            rec.certificate = find_isomorphism(cur, build_grassmannian(2, 8 - step));
        }
        return rec;
    };

    std::vector<RemovalStep> out;
    IncidenceStructure cur = s;
    out.push_back(step_record(0, cur, {}));
    for (int t = 1; t <= 7; ++t) {
        const Heptad& h = heptads[order[t - 1]];
        std::set<std::string> gone;
        for (ProjPoint p : h.points) gone.insert(p.label());
        std::vector<std::string> keep, removed;
        for (const auto& lbl : cur.point_labels()) {
            if (gone.count(lbl))
                removed.push_back(lbl);
            else
                keep.push_back(lbl);
        }
        cur = induced_substructure(cur, keep);
        out.push_back(step_record(t, cur, std::move(removed)));
    }
    return out;
}

} // namespace klein
