#pragma once

// Exact arithmetic and enumeration in PG(5,2): points, lines, quadric
// evaluation and external-line classification.
//
// PG(5,2) has 63 points (the nonzero 6-bit vectors; over GF(2) each nonzero
// vector is its own projective representative) and 651 lines of 3 points
// each, every line being closed under coordinate-wise XOR.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "klein/errors.hpp"

namespace klein {

// A point of PG(5,2), stored as the 6-bit code x1*1 + x2*2 + ... + x6*32.
class ProjPoint {
public:
    explicit ProjPoint(unsigned code);
    static ProjPoint from_coords(const std::array<int, 6>& x);

    unsigned code() const noexcept { return code_; }
    int coord(int i) const;            // x_i, i in 1..6
    std::array<int, 6> coords() const;
    std::string label() const;         // decimal code, used as the point id
    std::string coord_string() const;  // "111000"

    auto operator<=>(const ProjPoint&) const = default;

private:
    std::uint8_t code_;
};

// GF(2) sum of two distinct points; p ^ p would be the zero vector.
ProjPoint gf2_sum(ProjPoint p, ProjPoint q);

// A quadratic form over GF(2) given by upper-triangular coefficients:
// entry (i,j) with i <= j is the coefficient of the monomial x_i x_j.
class QuadraticForm {
public:
    QuadraticForm() = default;  // the zero form
    static QuadraticForm canonical_hyperbolic();  // x1x2 + x3x4 + x5x6
    static QuadraticForm from_terms(const std::vector<std::pair<int, int>>& terms);

    int coeff(int i, int j) const;  // 1-based; 0 whenever i > j
    int operator()(ProjPoint p) const;

private:
    std::uint64_t mask_ = 0;  // bit 6*(i-1)+(j-1) set iff coeff(i,j) = 1
};

inline int eval_form(const QuadraticForm& f, ProjPoint p) { return f(p); }

// An unordered collinear triple, stored sorted by code. The GF(2) sum of any
// two member points is the third.
class Line {
public:
    Line(ProjPoint a, ProjPoint b, ProjPoint c);

    const std::array<ProjPoint, 3>& points() const noexcept { return pts_; }
    bool contains(ProjPoint p) const;
    std::array<unsigned, 3> codes() const;

    auto operator<=>(const Line&) const = default;

private:
    std::array<ProjPoint, 3> pts_;
};

enum class LineClass { external, tangent, secant, fully_contained };

std::string to_string(LineClass c);

// All 63 points, ascending code order.
std::vector<ProjPoint> enumerate_points();

// All 651 lines, each listed once, sorted by code triple.
std::vector<Line> all_lines();

// Points with f(p) = 1, ascending code order. 28 for the canonical form.
std::vector<ProjPoint> off_quadric_points(const QuadraticForm& f);

// The unique line {p, q, p+q}; raises equal_points when p = q.
Line line_through(ProjPoint p, ProjPoint q);

// Classifies by the number of zeros of f on the line:
// 0 -> external, 1 -> tangent, 2 -> secant, 3 -> fully_contained.
LineClass classify_line(const QuadraticForm& f, const Line& l);

// All external lines, sorted. 56 for the canonical form.
std::vector<Line> external_lines(const QuadraticForm& f);

} // namespace klein
