#include "klein/gf2.hpp"

#include <algorithm>
#include <bit>

namespace klein {

ProjPoint::ProjPoint(unsigned code) : code_(static_cast<std::uint8_t>(code)) {
    if (code == 0 || code > 63)
        raise(errc::invalid_point, "point code must be in 1..63, got " + std::to_string(code));
}

ProjPoint ProjPoint::from_coords(const std::array<int, 6>& x) {
    unsigned code = 0;
    for (int i = 0; i < 6; ++i) {
        if (x[i] != 0 && x[i] != 1)
            raise(errc::invalid_point, "coordinates must be bits");
        code |= static_cast<unsigned>(x[i]) << i;
    }
    return ProjPoint(code);
}

int ProjPoint::coord(int i) const {
    if (i < 1 || i > 6) raise(errc::invalid_point, "coordinate index must be in 1..6");
    return (code_ >> (i - 1)) & 1;
}

std::array<int, 6> ProjPoint::coords() const {
    std::array<int, 6> x{};
    for (int i = 0; i < 6; ++i) x[i] = (code_ >> i) & 1;
    return x;
}

std::string ProjPoint::label() const { return std::to_string(code_); }

std::string ProjPoint::coord_string() const {
    std::string s(6, '0');
    for (int i = 0; i < 6; ++i)
        if ((code_ >> i) & 1) s[i] = '1';
    return s;
}

ProjPoint gf2_sum(ProjPoint p, ProjPoint q) {
    if (p == q) raise(errc::equal_points, "GF(2) sum of equal points is the zero vector");
    return ProjPoint(p.code() ^ q.code());
}

QuadraticForm QuadraticForm::canonical_hyperbolic() {
    return from_terms({{1, 2}, {3, 4}, {5, 6}});
}

QuadraticForm QuadraticForm::from_terms(const std::vector<std::pair<int, int>>& terms) {
    QuadraticForm f;
    for (auto [i, j] : terms) {
        if (i < 1 || j < 1 || i > 6 || j > 6)
            raise(errc::invalid_form, "form indices must be in 1..6");
        if (i > j)
            raise(errc::invalid_form, "lower-triangular coefficient (" + std::to_string(i) +
                                          "," + std::to_string(j) + ")");
        f.mask_ ^= std::uint64_t{1} << (6 * (i - 1) + (j - 1));
    }
    return f;
}

int QuadraticForm::coeff(int i, int j) const {
    if (i < 1 || j < 1 || i > 6 || j > 6)
        raise(errc::invalid_form, "form indices must be in 1..6");
    if (i > j) return 0;
    return static_cast<int>((mask_ >> (6 * (i - 1) + (j - 1))) & 1);
}

int QuadraticForm::operator()(ProjPoint p) const {
    unsigned c = p.code();
    int acc = 0;
    std::uint64_t m = mask_;
    while (m) {
        int bit = std::countr_zero(m);
        m &= m - 1;
        int i = bit / 6, j = bit % 6;
        acc ^= ((c >> i) & 1) & ((c >> j) & 1);
    }
    return acc;
}

Line::Line(ProjPoint a, ProjPoint b, ProjPoint c) : pts_{a, b, c} {
    std::sort(pts_.begin(), pts_.end());
    if (pts_[0] == pts_[1] || pts_[1] == pts_[2])
        raise(errc::invalid_structure, "line points must be distinct");
    if ((pts_[0].code() ^ pts_[1].code()) != pts_[2].code())
        raise(errc::invalid_structure, "line is not closed under GF(2) sum");
}

bool Line::contains(ProjPoint p) const {
    return p == pts_[0] || p == pts_[1] || p == pts_[2];
}

std::array<unsigned, 3> Line::codes() const {
    return {pts_[0].code(), pts_[1].code(), pts_[2].code()};
}

std::string to_string(LineClass c) {
    switch (c) {
        case LineClass::external: return "external";
        case LineClass::tangent: return "tangent";
        case LineClass::secant: return "secant";
        case LineClass::fully_contained: return "fully-contained";
    }
    return "?";
}

std::vector<ProjPoint> enumerate_points() {
    std::vector<ProjPoint> pts;
    pts.reserve(63);
    for (unsigned c = 1; c <= 63; ++c) pts.emplace_back(c);
    return pts;
}

std::vector<Line> all_lines() {
    // A line {a,b,c} with a<b<c arises exactly once from the pair (a,b).
    std::vector<Line> lines;
    lines.reserve(651);
    for (unsigned a = 1; a <= 63; ++a)
        for (unsigned b = a + 1; b <= 63; ++b) {
            unsigned c = a ^ b;
            if (c > b) lines.emplace_back(ProjPoint(a), ProjPoint(b), ProjPoint(c));
        }
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::vector<ProjPoint> off_quadric_points(const QuadraticForm& f) {
    std::vector<ProjPoint> pts;
    for (unsigned c = 1; c <= 63; ++c) {
        ProjPoint p(c);
        if (f(p) == 1) pts.push_back(p);
    }
    return pts;
}

Line line_through(ProjPoint p, ProjPoint q) {
    return Line(p, q, gf2_sum(p, q));
}

LineClass classify_line(const QuadraticForm& f, const Line& l) {
    int zeros = 0;
    for (ProjPoint p : l.points()) zeros += 1 - f(p);
    switch (zeros) {
        case 0: return LineClass::external;
        case 1: return LineClass::tangent;
        case 2: return LineClass::secant;
        default: return LineClass::fully_contained;
    }
}

std::vector<Line> external_lines(const QuadraticForm& f) {
    std::vector<Line> ext;
    for (const Line& l : all_lines())
        if (classify_line(f, l) == LineClass::external) ext.push_back(l);
    return ext;
}

} // namespace klein
