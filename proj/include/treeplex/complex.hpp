#ifndef TREEPLEX_COMPLEX_HPP
#define TREEPLEX_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "treeplex/enumerate.hpp"
#include "treeplex/error.hpp"
#include "treeplex/geometry.hpp"
#include "treeplex/linalg.hpp"
#include "treeplex/polygon.hpp"
#include "treeplex/rational.hpp"
#include "treeplex/signature.hpp"
#include "treeplex/tree.hpp"

namespace treeplex {

struct CellRecord {
    AlphaTree tree;
    int dim = 0;
    std::vector<int> facets;     // ids of the codimension-one faces, ascending
    std::vector<int> vertex_ids; // ids of the dimension-zero faces in the closure, ascending
    RatVec v, w;                 // coordinates, filled for dimension-zero cells only
};

struct CellComplex {
    Signature sig;
    PolygonSpec poly;           // meaningful only when has_polygon is set
    bool has_polygon = false;
    std::vector<CellRecord> cells; // ordered by the canonical tree order; id = index
    int top_cell = -1;             // -1 when there is no unique maximal cell
    std::vector<long> f_vector;    // cell counts by dimension, starting at zero
};

// Assembles the full cell complex of a signature over a convex polygon:
// one cell per tree, facet ids from the one-step expansions, vertex sets
// accumulated bottom-up, and exact coordinates on the dimension-zero cells.
inline CellComplex build_complex(const Signature& s, const PolygonSpec& poly) {
    CellComplex c;
    c.sig = s;
    if (s.n() == 2) {
        CellRecord r;
        r.tree = corolla(s);
        r.dim = 0;
        r.vertex_ids = {0};
        c.cells.push_back(std::move(r));
        c.top_cell = 0;
        c.f_vector = {1};
        return c;
    }
    detail::require_matching_polygon(s, poly);
    c.poly = poly;
    c.has_polygon = true;

    std::vector<AlphaTree> trees = enumerate_cells(s);
    std::map<std::string, int> id_of;
    for (std::size_t i = 0; i < trees.size(); ++i) id_of.emplace(encode_tree(trees[i]), static_cast<int>(i));

    c.cells.resize(trees.size());
    int top_dim = 0;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        CellRecord& r = c.cells[i];
        r.tree = std::move(trees[i]);
        r.dim = dimension(r.tree);
        top_dim = std::max(top_dim, r.dim);
        for (const AlphaTree& f : one_step_expansions(r.tree)) {
            auto it = id_of.find(encode_tree(f));
            if (it == id_of.end()) throw std::logic_error("expansion missing from enumeration");
            r.facets.push_back(it->second);
        }
        std::sort(r.facets.begin(), r.facets.end());
        if (r.dim == 0) {
            r.v = star_area_vector(r.tree, poly);
            r.w = subpolygon_area_vector(r.tree, poly);
        }
    }

    std::vector<int> by_dim(c.cells.size());
    for (std::size_t i = 0; i < by_dim.size(); ++i) by_dim[i] = static_cast<int>(i);
    std::sort(by_dim.begin(), by_dim.end(),
              [&](int a, int b) { return c.cells[a].dim != c.cells[b].dim ? c.cells[a].dim < c.cells[b].dim : a < b; });
    for (int id : by_dim) {
        CellRecord& r = c.cells[id];
        if (r.dim == 0) {
            r.vertex_ids = {id};
            continue;
        }
        for (int f : r.facets) {
            const auto& sub = c.cells[f].vertex_ids;
            r.vertex_ids.insert(r.vertex_ids.end(), sub.begin(), sub.end());
        }
        std::sort(r.vertex_ids.begin(), r.vertex_ids.end());
        r.vertex_ids.erase(std::unique(r.vertex_ids.begin(), r.vertex_ids.end()), r.vertex_ids.end());
    }

    c.f_vector.assign(top_dim + 1, 0);
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        ++c.f_vector[c.cells[i].dim];
        if (c.cells[i].dim == top_dim) {
            if (c.top_cell != -1) throw std::logic_error("maximal cell is not unique");
            c.top_cell = static_cast<int>(i);
        }
    }
    return c;
}

// Convenience form over the parabola polygon with one corner per side.
inline CellComplex build_complex(const Signature& s) {
    if (s.n() == 2) return build_complex(s, PolygonSpec{});
    return build_complex(s, build_polygon_parabola(s.n()));
}

inline long euler_characteristic(const CellComplex& c) {
    long chi = 0;
    for (std::size_t d = 0; d < c.f_vector.size(); ++d)
        chi += (d % 2 == 0) ? c.f_vector[d] : -c.f_vector[d];
    return chi;
}

// The complex of all proper faces of the top cell. A zero-dimensional
// complex has an empty boundary.
inline CellComplex boundary_subcomplex(const CellComplex& c) {
    CellComplex b;
    b.sig = c.sig;
    b.poly = c.poly;
    b.has_polygon = c.has_polygon;
    if (c.top_cell < 0) throw std::logic_error("boundary of a complex without a top cell");
    if (c.cells[c.top_cell].dim == 0) return b; // single point: empty boundary
    auto remap = [&](int id) { return id > c.top_cell ? id - 1 : id; };
    int top_dim = 0;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (static_cast<int>(i) == c.top_cell) continue;
        CellRecord r = c.cells[i];
        for (int& f : r.facets) f = remap(f);
        for (int& vtx : r.vertex_ids) vtx = remap(vtx);
        top_dim = std::max(top_dim, r.dim);
        b.cells.push_back(std::move(r));
    }
    b.f_vector.assign(top_dim + 1, 0);
    for (const CellRecord& r : b.cells) ++b.f_vector[r.dim];
    return b;
}

// Every cell two dimensions below the top must be a facet of exactly two
// cells one dimension below the top; returns the offending cell ids of the
// full complex. Vacuous below top dimension two.
inline std::vector<int> pseudomanifold_violations(const CellComplex& c) {
    std::vector<int> bad;
    if (c.top_cell < 0) throw std::logic_error("pseudomanifold check needs a top cell");
    int d = c.cells[c.top_cell].dim;
    if (d <= 1) return bad;
    std::vector<int> count(c.cells.size(), 0);
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (c.cells[i].dim != d - 1) continue;
        for (int f : c.cells[i].facets) ++count[f];
    }
    for (std::size_t i = 0; i < c.cells.size(); ++i)
        if (c.cells[i].dim == d - 2 && count[i] != 2) bad.push_back(static_cast<int>(i));
    return bad;
}

// Ids of cells whose vertex coordinates do not affinely span the cell's
// stated dimension. Vertex coordinates live in the product space: the star
// vector concatenated with the subpolygon area vector.
inline std::vector<int> geometric_dimension_violations(const CellComplex& c) {
    std::vector<int> bad;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        std::vector<RatVec> pts;
        for (int vid : c.cells[i].vertex_ids) {
            const CellRecord& vtx = c.cells[vid];
            RatVec p = vtx.v;
            p.insert(p.end(), vtx.w.begin(), vtx.w.end());
            pts.push_back(std::move(p));
        }
        if (affine_rank(pts) != c.cells[i].dim) bad.push_back(static_cast<int>(i));
    }
    return bad;
}

// Whether all dimension-zero cells carry pairwise distinct coordinates.
inline bool distinct_vertex_coordinates(const CellComplex& c) {
    std::vector<RatVec> pts;
    for (const CellRecord& r : c.cells) {
        if (r.dim != 0) continue;
        RatVec p = r.v;
        p.insert(p.end(), r.w.begin(), r.w.end());
        pts.push_back(std::move(p));
    }
    std::sort(pts.begin(), pts.end());
    return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

// Ids of cells with a facet whose dimension is not exactly one lower.
inline std::vector<int> facet_dimension_violations(const CellComplex& c) {
    std::vector<int> bad;
    for (std::size_t i = 0; i < c.cells.size(); ++i)
        for (int f : c.cells[i].facets)
            if (c.cells[f].dim != c.cells[i].dim - 1) {
                bad.push_back(static_cast<int>(i));
                break;
            }
    return bad;
}

// Whether two complexes have identical face posets: same cell count and,
// id for id, equal dimensions and facet lists. Complexes built from the
// same signature share the canonical cell order, so ids are comparable.
inline bool poset_equal(const CellComplex& a, const CellComplex& b) {
    if (a.cells.size() != b.cells.size()) return false;
    if (a.top_cell != b.top_cell) return false;
    if (a.f_vector != b.f_vector) return false;
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].dim != b.cells[i].dim) return false;
        if (a.cells[i].facets != b.cells[i].facets) return false;
    }
    return true;
}

// Relabelling the polygon corners by a rotation must carry the complex of s
// to the complex of the rotated signature cell by cell, preserving
// dimensions and the facet relation.
inline bool rotation_isomorphism_check(const Signature& s, int r) {
    CellComplex a = build_complex(s);
    CellComplex b = build_complex(rotate_signature(s, r));
    if (a.cells.size() != b.cells.size()) return false;
    std::map<std::string, int> id_in_b;
    for (std::size_t i = 0; i < b.cells.size(); ++i) id_in_b.emplace(encode_tree(b.cells[i].tree), static_cast<int>(i));
    std::vector<int> image(a.cells.size(), -1);
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        auto it = id_in_b.find(encode_tree(rotate_tree(a.cells[i].tree, r)));
        if (it == id_in_b.end()) return false;
        image[i] = it->second;
    }
    std::vector<bool> hit(b.cells.size(), false);
    for (int im : image) {
        if (hit[im]) return false; // not injective
        hit[im] = true;
    }
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        if (a.cells[i].dim != b.cells[image[i]].dim) return false;
        std::vector<int> mapped;
        for (int f : a.cells[i].facets) mapped.push_back(image[f]);
        std::sort(mapped.begin(), mapped.end());
        if (mapped != b.cells[image[i]].facets) return false;
    }
    return true;
}

// The distinct subpolygon area vectors of the dimension-zero cells must
// fill out the standard simplex scaled by the polygon area: membership on
// every value, all scaled unit corners attained, and affine span of
// dimension one less than the number of outgoing sides. Together these pin
// the convex hull to the simplex exactly.
inline bool area_simplex_check(const CellComplex& c) {
    if (!c.has_polygon) throw Error(ErrorCode::RangeViolation, "no polygon attached to the complex");
    const int k = c.sig.k();
    const Rat total = c.poly.total_area;
    std::vector<RatVec> pts;
    for (const CellRecord& r : c.cells)
        if (r.dim == 0) pts.push_back(r.w);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const RatVec& p : pts) {
        Rat sum = 0;
        for (const Rat& x : p) {
            if (x < 0) return false;
            sum += x;
        }
        if (sum != total) return false;
    }
    for (int i = 0; i < k; ++i) {
        RatVec corner(k, Rat(0));
        corner[i] = total;
        if (!std::binary_search(pts.begin(), pts.end(), corner)) return false;
    }
    return affine_rank(pts) == k - 1;
}

// Same simplex structure for the classical-weight drain vectors: values in
// the simplex of total binom(n-1, 2), every scaled corner attained, affine
// dimension one less than the number of outgoing sides. Membership plus the
// corners force the hull to be the simplex, so its extreme points are
// exactly the corners.
inline bool loday_simplex_check(const Signature& s) {
    const int n = s.n();
    const int k = s.k();
    if (n < 3) throw Error(ErrorCode::RangeViolation, "need at least three sides");
    const Rat total = Rat(binomial(n - 1, 2));
    std::vector<RatVec> pts;
    for (const AlphaTree& t : enumerate_max_expanded(s)) pts.push_back(loday_w(t));
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (const RatVec& p : pts) {
        Rat sum = 0;
        for (const Rat& x : p) {
            if (x < 0) return false;
            sum += x;
        }
        if (sum != total) return false;
    }
    for (int i = 0; i < k; ++i) {
        RatVec corner(k, Rat(0));
        corner[i] = total;
        if (!std::binary_search(pts.begin(), pts.end(), corner)) return false;
    }
    return affine_rank(pts) == k - 1;
}

// Exhaustive convex-hull confirmation that every star vector of a
// triangulation is an extreme point among all of them. Exponential cost
// caps the polygon size.
inline bool star_vectors_all_extreme(int n, int cap = 7) {
    if (n < 3) throw Error(ErrorCode::RangeViolation, "need at least three sides");
    if (n > cap) throw Error(ErrorCode::CapExceeded, "hull check limited to small polygons");
    PolygonSpec poly = build_polygon_parabola(n);
    Signature s{std::string(static_cast<std::size_t>(n), 'o')};
    std::vector<RatVec> stars;
    for_each_subdivision(n, [&](const std::vector<std::pair<int, int>>& diags) {
        if (static_cast<int>(diags.size()) != n - 3) return;
        AlphaTree t;
        t.sig = s;
        t.diagonals = diags;
        stars.push_back(star_area_vector(t, poly));
    });
    for (const RatVec& p : stars)
        if (!is_extreme_point(stars, p)) return false;
    return true;
}

} // namespace treeplex

#endif
