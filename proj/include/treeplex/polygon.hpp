#ifndef TREEPLEX_POLYGON_HPP
#define TREEPLEX_POLYGON_HPP

#include <utility>
#include <vector>

#include "treeplex/error.hpp"
#include "treeplex/rational.hpp"
#include "treeplex/tree.hpp"

namespace treeplex {

struct Point {
    Rat x;
    Rat y;
};

// A convex polygon with exact rational corners q_1..q_n in counterclockwise
// cyclic order, no three corners collinear. All areas derived from it are
// exact rationals.
struct PolygonSpec {
    int n = 0;
    std::vector<Point> corners; // corners[j-1] is q_j
    Rat total_area;

    const Point& corner(int j) const { return corners[j - 1]; } // j is 1-based
};

// Twice the signed area of the triangle (a, b, c); positive iff the triple
// turns counterclockwise.
inline Rat cross2(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline Rat triangle_area(const Point& a, const Point& b, const Point& c) {
    Rat s = cross2(a, b, c);
    if (s < 0) s = -s;
    return s / 2;
}

// Shoelace area of a counterclockwise corner cycle.
inline Rat shoelace_area(const std::vector<Point>& pts) {
    Rat twice = 0;
    const std::size_t m = pts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& p = pts[i];
        const Point& q = pts[(i + 1) % m];
        twice += p.x * q.y - p.y * q.x;
    }
    return twice / 2;
}

// Builds a polygon from explicit corner coordinates. Rejects any collinear
// corner triple first, then any ordering that is not strictly convex
// counterclockwise (checked as: every corner strictly left of every directed
// boundary edge).
inline PolygonSpec build_polygon(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3) throw Error(ErrorCode::RangeViolation, "a polygon needs at least 3 corners");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (cross2(pts[i], pts[j], pts[k]) == 0)
                    throw Error(ErrorCode::CollinearTriple,
                                "corners " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    "," + std::to_string(k + 1) + " are collinear");
    for (int i = 0; i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        for (int k = 0; k < n; ++k) {
            if (k == i || k == (i + 1) % n) continue;
            if (cross2(a, b, pts[k]) <= 0)
                throw Error(ErrorCode::NonConvex,
                            "corners are not in strictly convex counterclockwise position");
        }
    }
    PolygonSpec poly;
    poly.n = n;
    poly.corners = pts;
    poly.total_area = shoelace_area(pts);
    return poly;
}

// The default polygon: corners on the parabola, q_j = (j, j^2). Convexity and
// general position are automatic, and all areas have small denominators.
inline PolygonSpec build_polygon_parabola(int n) {
    if (n < 3) throw Error(ErrorCode::RangeViolation, "a polygon needs at least 3 corners");
    std::vector<Point> pts;
    pts.reserve(n);
    for (int j = 1; j <= n; ++j) pts.push_back(Point{Rat(j), Rat(j) * j});
    return build_polygon(pts);
}

// Area of one face of a subdivision (its corners are ascending, hence a
// counterclockwise sub-cycle).
inline Rat face_area(const PolygonSpec& poly, const Face& f) {
    std::vector<Point> pts;
    pts.reserve(f.corners.size());
    for (int c : f.corners) pts.push_back(poly.corner(c));
    return shoelace_area(pts);
}

// Area of the subpolygon on one side of an edge (side_id must be one of
// component_ids(e)). The single-position side of an external edge is a
// boundary segment of area zero.
inline Rat side_area(const PolygonSpec& poly, EdgeId e, int side_id) {
    auto ids = component_ids(e);
    if (e.is_side()) return side_id == ids.first ? Rat(0) : poly.total_area;
    std::vector<Point> pts;
    if (side_id == ids.first) {
        for (int c = e.a; c <= e.b; ++c) pts.push_back(poly.corner(c));
    } else {
        for (int c = e.b; c <= poly.n; ++c) pts.push_back(poly.corner(c));
        for (int c = 1; c <= e.a; ++c) pts.push_back(poly.corner(c));
    }
    return shoelace_area(pts);
}

} // namespace treeplex

#endif
