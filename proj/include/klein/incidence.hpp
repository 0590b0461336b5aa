#pragma once

// Abstract labeled incidence structures, configuration-parameter measurement
// and isomorphism search with explicit certificates.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "klein/errors.hpp"
#include "klein/params.hpp"

namespace klein {

// Points are opaque string labels; lines are sets of point labels, kept as
// sorted index vectors. Construction rejects unknown labels, repeated labels,
// empty lines and repeated lines. Immutable after construction.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    IncidenceStructure(std::vector<std::string> points,
                       const std::vector<std::vector<std::string>>& lines);

    int num_points() const { return static_cast<int>(labels_.size()); }
    int num_lines() const { return static_cast<int>(lines_.size()); }

    const std::vector<std::string>& point_labels() const { return labels_; }
    const std::string& label(int point) const { return labels_[point]; }
    bool has_point(const std::string& label) const { return index_.count(label) > 0; }
    int index_of(const std::string& label) const;  // raises unknown_point

    const std::vector<std::vector<int>>& lines() const { return lines_; }
    std::vector<std::string> line_labels(int line) const;
    bool has_line(std::vector<int> sorted_points) const;

    const std::vector<int>& lines_of_point(int point) const { return point_lines_[point]; }
    int degree(int point) const { return static_cast<int>(point_lines_[point].size()); }

    // Partial-linear-space check: any two points on at most one common line.
    bool is_partial_linear() const;

    bool operator==(const IncidenceStructure& o) const {
        return labels_ == o.labels_ && line_set_ == o.line_set_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> lines_;
    std::vector<std::vector<int>> point_lines_;
    std::set<std::vector<int>> line_set_;
};

// Point bijection from a's points onto b's points witnessing isomorphism.
struct IsoCertificate {
    std::map<std::string, std::string> mapping;
};

// Measures (n_r, m_k); raises not_a_configuration (naming the offending point
// or line) when degrees or sizes are non-uniform. A structure with no lines
// has an unconstrained line size, reported as vacuous_line_size when given.
ConfigParams measure_params(const IncidenceStructure& s,
                            std::optional<long long> vacuous_line_size = std::nullopt);

// Backtracking search over points ordered by a refinement invariant (degree,
// line-size multiset, co-point degree profile) with forward checking on
// partial line images. Returns a verified certificate, or nullopt after an
// exhaustive search.
std::optional<IsoCertificate> find_isomorphism(const IncidenceStructure& a,
                                               const IncidenceStructure& b);

// True iff cert.mapping is a bijection carrying the line set of a exactly
// onto the line set of b. Raises domain_mismatch when the keys are not
// precisely a's point set.
bool verify_certificate(const IncidenceStructure& a, const IncidenceStructure& b,
                        const IsoCertificate& cert);

// Keeps the given points (set semantics) and exactly those lines all of whose
// points are kept. Raises unknown_point for labels not in s.
IncidenceStructure induced_substructure(const IncidenceStructure& s,
                                        const std::vector<std::string>& keep_points);

// Exact number of self-isomorphisms; raises limit_exceeded as soon as the
// count would pass `limit`.
long long count_automorphisms(const IncidenceStructure& s, long long limit);

// Deterministic Fisher-Yates shuffle of {0,..,n-1}; identical output on every
// platform for a given seed (std::shuffle is not portable).
std::vector<int> seeded_permutation(int n, std::uint64_t seed);

} // namespace klein
