#ifndef TREEPLEX_GEOMETRY_HPP
#define TREEPLEX_GEOMETRY_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "treeplex/error.hpp"
#include "treeplex/polygon.hpp"
#include "treeplex/rational.hpp"
#include "treeplex/tree.hpp"

namespace treeplex {

// Sum of the areas of the triangles at each corner of a full triangulation:
// coordinate j is the area of the star of q_j. Coordinates add up to three
// times the polygon area, one count per triangle corner.
namespace detail {

inline void require_matching_polygon(const Signature& sig, const PolygonSpec& poly) {
    if (poly.n != sig.n())
        throw Error(ErrorCode::DimensionMismatch, "polygon corner count must match the signature length");
}

} // namespace detail

inline RatVec star_area_vector(const AlphaTree& t, const PolygonSpec& poly) {
    detail::require_matching_polygon(t.sig, poly);
    const int n = t.sig.n();
    if (static_cast<int>(t.diagonals.size()) != n - 3)
        throw Error(ErrorCode::NotATriangulation, "star areas need a full triangulation");
    RatVec v(n, Rat(0));
    for (const Face& f : subdivision_faces(n, t.diagonals)) {
        Rat a = face_area(poly, f);
        for (int c : f.corners) v[c - 1] += a;
    }
    return v;
}

namespace detail {

// Faces of t grouped into the pieces obtained by cutting the polygon along
// every two-sided spine edge. pieces[i] lists the faces whose area drains to
// the i-th Out position; the list is empty exactly when that position's
// external edge is two-sided (a degenerate zero-area piece).
inline std::vector<std::vector<int>> drain_pieces(const AlphaTree& t) {
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    const int nf = static_cast<int>(info.faces.size());

    // union faces across every edge that is not a two-sided cut
    std::vector<int> parent(nf);
    for (int i = 0; i < nf; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

    std::map<EdgeId, std::vector<int>> faces_of_edge;
    for (int fi = 0; fi < nf; ++fi)
        for (EdgeId e : info.faces[fi].edges) faces_of_edge[e].push_back(fi);

    for (const auto& d : t.diagonals) {
        EdgeId e = EdgeId::diag(d.first, d.second);
        auto it = t.labels.find(e);
        if (it != t.labels.end() && it->second.is_both()) continue;
        const auto& fs = faces_of_edge.at(e);
        parent[find(fs[0])] = find(fs[1]);
    }

    std::vector<std::vector<int>> pieces(info.k);
    for (int j : t.sig.out_positions()) {
        auto it = t.labels.find(EdgeId::side(j));
        if (it == t.labels.end())
            throw Error(ErrorCode::SpineMismatch, "Out position carries no label");
        if (it->second.is_both()) continue; // degenerate segment, stays empty
        int root = find(faces_of_edge.at(EdgeId::side(j)).front());
        auto& mine = pieces[t.sig.out_index(j)];
        for (int fi = 0; fi < nf; ++fi)
            if (find(fi) == root) mine.push_back(fi);
    }
    return pieces;
}

} // namespace detail

// Areas of the pieces cut along the two-sided spine edges, one coordinate per
// Out position (zero for a two-sided external edge). Well-defined exactly
// when every internal spine vertex has out-degree one, so that each piece
// drains to a single Out.
inline RatVec subpolygon_area_vector(const AlphaTree& t, const PolygonSpec& poly) {
    detail::require_matching_polygon(t.sig, poly);
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    for (int fi : info.spine_faces)
        if (face_out_degree(info, t, fi) != 1)
            throw Error(ErrorCode::AmbiguousFlow,
                        "piece areas need out-degree one at every internal spine vertex");
    RatVec w(info.k, Rat(0));
    auto pieces = detail::drain_pieces(t);
    for (int i = 0; i < info.k; ++i)
        for (int fi : pieces[i]) w[i] += face_area(poly, info.faces[fi]);
    return w;
}

// One linear condition over the Out coordinates: sum of the named coordinates
// compared against an exact right-hand side. source identifies the spine edge
// it came from; the global simplex conditions carry the null edge (0,0).
struct Constraint {
    std::vector<int> coords;  // 0-based OutSpace indices with coefficient 1
    Rat rhs;
    bool is_equality = false; // otherwise: sum >= rhs
    EdgeId source;
};

struct ConstraintSystem {
    int k = 0;
    Rat total_area;
    std::vector<Constraint> constraints;
};

// The constraint system cutting out the tree's region in the Out simplex:
// the global conditions (coordinates sum to the polygon area and are
// nonnegative), plus one condition per spine edge — an equality pinning the
// arc side's coordinates to the arc area for a two-sided label, and a lower
// bound on the head side's coordinates for a directed label.
inline ConstraintSystem lambda_constraints(const AlphaTree& t, const PolygonSpec& poly) {
    detail::require_matching_polygon(t.sig, poly);
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    ConstraintSystem cs;
    cs.k = info.k;
    cs.total_area = poly.total_area;

    Constraint all;
    for (int i = 0; i < info.k; ++i) all.coords.push_back(i);
    all.rhs = poly.total_area;
    all.is_equality = true;
    cs.constraints.push_back(all);
    for (int i = 0; i < info.k; ++i)
        cs.constraints.push_back(Constraint{{i}, Rat(0), false, EdgeId{0, 0}});

    for (const auto& [e, lab] : t.labels) {
        int side_id = lab.is_both() ? component_ids(e).first : lab.toward;
        Constraint c;
        for (int p : component_positions(info.n, e, side_id))
            if (t.sig.is_out(p)) c.coords.push_back(t.sig.out_index(p));
        c.rhs = side_area(poly, e, side_id);
        c.is_equality = lab.is_both();
        c.source = e;
        cs.constraints.push_back(c);
    }
    return cs;
}

inline bool lambda_contains(const ConstraintSystem& cs, const RatVec& w) {
    if (static_cast<int>(w.size()) != cs.k)
        throw Error(ErrorCode::DimensionMismatch, "point has the wrong number of Out coordinates");
    for (const Constraint& c : cs.constraints) {
        Rat sum = 0;
        for (int i : c.coords) sum += w[i];
        if (c.is_equality ? sum != c.rhs : sum < c.rhs) return false;
    }
    return true;
}

namespace detail {

// The unique edge through which a face with no spine edges sends its area:
// the one whose far side contains the Out positions.
inline EdgeId drain_edge(const Signature& sig, const Face& f) {
    for (EdgeId e : f.edges) {
        auto ids = component_ids(e);
        int far = face_on_component(f, e, ids.first) ? ids.second : ids.first;
        for (int p : component_positions(sig.n(), e, far))
            if (sig.is_out(p)) return e;
    }
    throw Error(ErrorCode::NoOutgoingLabel, "face has no route to an Out position");
}

} // namespace detail

// Pushes the face areas down the directed tree and returns the Out
// coordinates they accumulate to. Each internal spine vertex contributes one
// simplex point (coords[i] for the i-th spine face, ascending) that says in
// which proportions its accumulated area leaves along its outgoing spine
// edges, taken in canonical edge order; faces without spine edges forward
// their area wholesale toward the Outs, and two-sided edges are walls.
inline RatVec h_forward(const AlphaTree& t, const PolygonSpec& poly,
                        const std::vector<RatVec>& coords) {
    detail::require_matching_polygon(t.sig, poly);
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    const int nf = static_cast<int>(info.faces.size());
    if (coords.size() != info.spine_faces.size())
        throw Error(ErrorCode::DimensionMismatch, "one simplex point per internal spine vertex");

    std::map<EdgeId, std::vector<int>> faces_of_edge;
    for (int fi = 0; fi < nf; ++fi)
        for (EdgeId e : info.faces[fi].edges) faces_of_edge[e].push_back(fi);
    auto face_across = [&](EdgeId e, int fi) {
        const auto& fs = faces_of_edge.at(e);
        return fs[0] == fi ? fs[1] : fs[0];
    };

    struct Arrow {
        int target;   // face index, or -(out index + 1)
        Rat weight;
    };
    std::vector<std::vector<Arrow>> arrows(nf);
    std::vector<int> indegree(nf, 0);
    auto add_arrow = [&](int from, EdgeId e, Rat weight) {
        const auto& fs = faces_of_edge.at(e);
        if (fs.size() == 1) {
            arrows[from].push_back(Arrow{-(t.sig.out_index(e.a) + 1), std::move(weight)});
        } else {
            int to = face_across(e, from);
            arrows[from].push_back(Arrow{to, std::move(weight)});
            ++indegree[to];
        }
    };

    std::vector<bool> is_spine_face(nf, false);
    for (std::size_t i = 0; i < info.spine_faces.size(); ++i) {
        int fi = info.spine_faces[i];
        is_spine_face[fi] = true;
        std::vector<EdgeId> out_edges;
        for (EdgeId e : info.face_edges.at(fi))
            if (edge_outgoing_from_face(info.faces[fi], e, t.labels.at(e))) out_edges.push_back(e);
        if (coords[i].size() != out_edges.size())
            throw Error(ErrorCode::DimensionMismatch,
                        "simplex point size must match the vertex out-degree");
        Rat sum = 0;
        for (const Rat& c : coords[i]) {
            if (c < 0) throw Error(ErrorCode::NotInSimplex, "negative simplex coordinate");
            sum += c;
        }
        if (sum != 1) throw Error(ErrorCode::NotInSimplex, "simplex coordinates must sum to 1");
        for (std::size_t j = 0; j < out_edges.size(); ++j) add_arrow(fi, out_edges[j], coords[i][j]);
    }
    for (int fi = 0; fi < nf; ++fi)
        if (!is_spine_face[fi]) add_arrow(fi, detail::drain_edge(t.sig, info.faces[fi]), Rat(1));

    // accumulate areas in topological order of the face-to-face arrows
    RatVec area_plus(nf);
    for (int fi = 0; fi < nf; ++fi) area_plus[fi] = face_area(poly, info.faces[fi]);
    RatVec x(info.k, Rat(0));
    std::queue<int> ready;
    for (int fi = 0; fi < nf; ++fi)
        if (indegree[fi] == 0) ready.push(fi);
    while (!ready.empty()) {
        int fi = ready.front();
        ready.pop();
        for (const Arrow& ar : arrows[fi]) {
            Rat part = ar.weight * area_plus[fi];
            if (ar.target < 0) {
                x[-ar.target - 1] += part;
            } else {
                area_plus[ar.target] += part;
                if (--indegree[ar.target] == 0) ready.push(ar.target);
            }
        }
    }
    return x;
}

// Recovers the simplex coordinates from a point of the tree's region. The
// share flowing through a directed edge is forced: the head side must end up
// with its Out coordinates, it owns its own area, and the difference is what
// crosses the edge. Dividing the shares at a vertex by their total (its
// accumulated area) gives back the simplex point. The total is positive for
// every point of the region, so the zero check is purely defensive.
inline std::vector<RatVec> h_inverse(const AlphaTree& t, const PolygonSpec& poly, const RatVec& w) {
    detail::require_matching_polygon(t.sig, poly);
    if (!lambda_contains(lambda_constraints(t, poly), w))
        throw Error(ErrorCode::NotInLambda, "point lies outside the tree's region");
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    std::vector<RatVec> coords;
    coords.reserve(info.spine_faces.size());
    for (int fi : info.spine_faces) {
        RatVec flows;
        for (EdgeId e : info.face_edges.at(fi)) {
            SpineLabel lab = t.labels.at(e);
            if (!edge_outgoing_from_face(info.faces[fi], e, lab)) continue;
            Rat flow = -side_area(poly, e, lab.toward);
            for (int p : component_positions(info.n, e, lab.toward))
                if (t.sig.is_out(p)) flow += w[t.sig.out_index(p)];
            flows.push_back(std::move(flow));
        }
        Rat total = 0;
        for (const Rat& f : flows) total += f;
        if (total == 0)
            throw Error(ErrorCode::ZeroDenominator, "vertex receives no area at this point");
        for (Rat& f : flows) f /= total;
        coords.push_back(std::move(flows));
    }
    return coords;
}

// Reads the labels off a point of the Out simplex for a fixed subdivision:
// per spine edge, the arc side's coordinates reach exactly the arc area for
// a two-sided label and overshoot it in the direction of the arrow. This is
// the unique labeling whose region contains the point.
inline AlphaTree spine_labels_from_point(const Signature& sig,
                                         const std::vector<std::pair<int, int>>& diagonals,
                                         const PolygonSpec& poly, const RatVec& w) {
    detail::require_matching_polygon(sig, poly);
    const int n = sig.n();
    std::vector<std::pair<int, int>> diags = diagonals;
    std::sort(diags.begin(), diags.end());
    for (std::size_t i = 0; i < diags.size(); ++i) {
        if (!valid_diagonal(n, diags[i])) throw Error(ErrorCode::CrossingDiagonals, "invalid diagonal");
        for (std::size_t j = i + 1; j < diags.size(); ++j)
            if (diagonals_cross(diags[i], diags[j]))
                throw Error(ErrorCode::CrossingDiagonals, "diagonals cross");
    }
    if (static_cast<int>(w.size()) != sig.k())
        throw Error(ErrorCode::DimensionMismatch, "point has the wrong number of Out coordinates");
    Rat sum = 0;
    for (const Rat& c : w) {
        if (c < 0) throw Error(ErrorCode::NotInSimplex, "negative Out coordinate");
        sum += c;
    }
    if (sum != poly.total_area)
        throw Error(ErrorCode::NotInSimplex, "Out coordinates must sum to the polygon area");

    const SpineInfo& info = spine_info_cached(sig, diags);
    AlphaTree t;
    t.sig = sig;
    t.diagonals = diags;
    for (EdgeId e : info.spine) {
        auto ids = component_ids(e);
        Rat arc_sum = 0;
        for (int p : component_positions(n, e, ids.first))
            if (sig.is_out(p)) arc_sum += w[sig.out_index(p)];
        Rat arc_area = side_area(poly, e, ids.first);
        if (arc_sum == arc_area) t.labels[e] = SpineLabel::both();
        else if (arc_sum > arc_area) t.labels[e] = SpineLabel::directed(ids.first);
        else t.labels[e] = SpineLabel::directed(ids.second);
    }
    return t;
}

// Weight of each triangle of a full triangulation: leaf count on one side of
// its middle corner times the leaf count on the other, the classical
// realization of the associahedron. Coordinate i is the weight of the
// triangle whose middle corner is i+2 (internal vertices left to right).
inline RatVec loday_vector(const AlphaTree& t) {
    const int n = t.sig.n();
    if (n < 3) throw Error(ErrorCode::RangeViolation, "weights need at least 3 positions");
    if (!is_max_expanded(t))
        throw Error(ErrorCode::NotMaxExpanded, "weights are defined for maximally expanded trees");
    RatVec v(n - 2, Rat(0));
    for (const Face& f : subdivision_faces(n, t.diagonals)) {
        int u = f.corners[0], m = f.corners[1], w = f.corners[2];
        v[m - 2] = Rat(m - u) * (w - m);
    }
    return v;
}

// Sums the triangle weights over the pieces cut at two-sided spine edges, one
// coordinate per Out position. Purely combinatorial: no polygon is involved.
inline RatVec loday_w(const AlphaTree& t) {
    if (t.sig.n() < 3) throw Error(ErrorCode::RangeViolation, "weights need at least 3 positions");
    if (!is_max_expanded(t))
        throw Error(ErrorCode::NotMaxExpanded, "weights are defined for maximally expanded trees");
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    RatVec weights = loday_vector(t);
    RatVec w(info.k, Rat(0));
    auto pieces = detail::drain_pieces(t);
    for (int i = 0; i < info.k; ++i)
        for (int fi : pieces[i]) w[i] += weights[info.faces[fi].corners[1] - 2];
    return w;
}

} // namespace treeplex

#endif
