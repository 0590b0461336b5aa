#pragma once

// Conwell heptads: 7-cliques of the external-collinearity graph on the 28
// off-quadric points, their intersection/covering properties, the heptad <->
// mark correspondence, and the nested heptad-removal sequence.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klein/gf2.hpp"
#include "klein/incidence.hpp"

namespace klein {

// Vertices are the off-quadric points (ascending code); {p,q} is an edge iff
// the joining line is external. For the canonical form: 28 vertices, 168
// edges, regular of degree 12. Adjacency is kept as 32-bit masks.
class CollinearityGraph {
public:
    CollinearityGraph(const std::vector<ProjPoint>& off_points,
                      const std::vector<Line>& ext_lines);

    int num_vertices() const { return static_cast<int>(verts_.size()); }
    long long num_edges() const;
    int degree(int v) const;
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    std::uint32_t neighbor_mask(int v) const { return adj_[v]; }
    ProjPoint vertex(int v) const { return verts_[v]; }
    int vertex_index(ProjPoint p) const;  // raises unknown_point

private:
    std::vector<ProjPoint> verts_;
    std::vector<std::uint32_t> adj_;
};

// Seven off-quadric points, pairwise joined by external lines; kept sorted.
struct Heptad {
    std::array<ProjPoint, 7> points;

    // Requires exactly seven distinct points.
    explicit Heptad(const std::vector<ProjPoint>& pts);

    bool contains(ProjPoint p) const;
    std::vector<std::string> labels() const;

    auto operator<=>(const Heptad&) const = default;
};

// Exhaustive Bron-Kerbosch maximal-clique enumeration filtered to size 7,
// in lexicographic order of the sorted point codes. Raises property_violated
// if a maximal clique larger than 7 shows up.
std::vector<Heptad> find_heptads(const CollinearityGraph& g);

struct HeptadReport {
    std::vector<std::vector<int>> pair_intersection;  // |H_i & H_j|
    std::map<unsigned, int> point_coverage;           // point code -> #heptads
};

// Asserts |H_i & H_j| = 1 for i != j and that every point of the heptads'
// union lies in exactly two of them; raises property_violated with the
// counterexample otherwise.
HeptadReport heptad_pair_intersections(const std::vector<Heptad>& heptads);

// For each heptad the seven image pairs under cert must share exactly one
// mark (else no_common_mark); the resulting heptad -> mark map must be a
// bijection onto {1..8} (else property_violated). Returns the mark of each
// heptad, in input order.
std::vector<int> heptads_vs_marks(const std::vector<Heptad>& heptads,
                                  const IsoCertificate& cert);

// The off-quadric points together with the external lines, as a labeled
// incidence structure (point labels are decimal 6-bit codes).
IncidenceStructure off_quadric_structure(const QuadraticForm& f);

// induced_substructure(s, s.points minus h.points); requires every heptad
// point to be present (unknown_point otherwise).
IncidenceStructure remove_heptad(const IncidenceStructure& s, const Heptad& h);

struct RemovalStep {
    int step = 0;                          // heptads removed so far
    ConfigParams params;                   // measured with vacuous line size 3
    std::string grassmannian;              // "G_2(8-step)", empty after step 7
    std::optional<IsoCertificate> certificate;  // onto G_2(8-step), steps 0..6
    std::vector<std::string> removed;      // labels removed at this step
    IncidenceStructure structure;          // what survives after this step
};

// Replays the nested removal: step t deletes the still-present points of
// heptad order[t-1] (later heptads overlap earlier ones, so fewer than 7
// points go). `order` must be a permutation of {0..7}; only the first seven
// entries are consumed. Returns records for steps 0..7.
std::vector<RemovalStep> removal_sequence(const IncidenceStructure& s,
                                          const std::vector<Heptad>& heptads,
                                          const std::vector<int>& order);

} // namespace klein
