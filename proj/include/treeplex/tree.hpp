#ifndef TREEPLEX_TREE_HPP
#define TREEPLEX_TREE_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "treeplex/error.hpp"
#include "treeplex/signature.hpp"

namespace treeplex {

// ---------------------------------------------------------------------------
// A directed planar tree on a signature is stored through its polygon model:
// the undirected shape is a subdivision of a convex n-gon by pairwise
// non-crossing diagonals (equivalently a planar tree whose vertices are the
// subdivision faces plus one exterior leaf per boundary position), and the
// directions live as labels on the "spine" — the subtree spanned by the
// exterior leaves that carry an Out letter. A spine edge is labeled either
// with one of its two orientations or with the two-sided symbol (Both).
//
// Position <-> polygon-side convention, fixed once for the whole library:
//   position 1     <-> the base side (corner 1, corner n)
//   position j >= 2 <-> the side (corner j-1, corner j)
// A diagonal (a,b), 1 <= a < b <= n, b-a >= 2, (a,b) != (1,n), splits the
// boundary positions into the arc {a+1,...,b} and its complement (which
// always contains position 1). An external edge at position j splits them
// into {j} and its complement.
// ---------------------------------------------------------------------------

// Identifies one edge of the tree: an external edge (side of the polygon) is
// encoded as (j, j); an internal edge (diagonal) as its corner pair (a, b)
// with a < b. The ordering (a, b) lexicographic is the canonical edge order.
struct EdgeId {
    int a = 0;
    int b = 0;

    static EdgeId side(int j) { return EdgeId{j, j}; }
    static EdgeId diag(int a, int b) { return a < b ? EdgeId{a, b} : EdgeId{b, a}; }

    bool is_side() const { return a == b; }
    bool is_diag() const { return a < b; }

    bool operator==(const EdgeId& o) const { return a == o.a && b == o.b; }
    bool operator!=(const EdgeId& o) const { return !(*this == o); }
    bool operator<(const EdgeId& o) const { return a != o.a ? a < o.a : b < o.b; }
};

// Label on a spine edge. toward == 0 means the two-sided symbol; otherwise
// toward is the canonical id of the component the edge points into, namely
// the smallest boundary position found in that component. For an external
// edge at an Out position j the only legal direction is outward (toward j).
struct SpineLabel {
    int toward = 0;

    static SpineLabel both() { return SpineLabel{0}; }
    static SpineLabel directed(int component_min_pos) { return SpineLabel{component_min_pos}; }

    bool is_both() const { return toward == 0; }

    bool operator==(const SpineLabel& o) const { return toward == o.toward; }
    bool operator<(const SpineLabel& o) const { return toward < o.toward; }
};

// The full object: signature + subdivision + spine labels. Two trees are
// equal iff all three parts are equal, which makes equality of cells a plain
// structural comparison.
struct AlphaTree {
    Signature sig;
    std::vector<std::pair<int, int>> diagonals; // sorted ascending
    std::map<EdgeId, SpineLabel> labels;        // keyed by the spine edges

    bool operator==(const AlphaTree& o) const {
        return sig == o.sig && diagonals == o.diagonals && labels == o.labels;
    }
    bool operator!=(const AlphaTree& o) const { return !(*this == o); }
};

// Deterministic total order used for enumeration output: first the sorted
// diagonal set, then the label map read in canonical edge order.
inline bool tree_less(const AlphaTree& x, const AlphaTree& y) {
    if (x.sig.word != y.sig.word) return x.sig.word < y.sig.word;
    if (x.diagonals != y.diagonals) return x.diagonals < y.diagonals;
    auto it = x.labels.begin();
    auto jt = y.labels.begin();
    for (; it != x.labels.end() && jt != y.labels.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        if (it->second.toward != jt->second.toward) return it->second.toward < jt->second.toward;
    }
    return x.labels.size() < y.labels.size();
}

// Compact unique string form, used as a hash key when relating cells.
inline std::string encode_tree(const AlphaTree& t) {
    std::string s = t.sig.word;
    s += ";";
    for (const auto& d : t.diagonals)
        s += std::to_string(d.first) + "," + std::to_string(d.second) + ";";
    s += "|";
    for (const auto& [e, lab] : t.labels)
        s += std::to_string(e.a) + "," + std::to_string(e.b) + ":" + std::to_string(lab.toward) + ";";
    return s;
}

// Standard chord-crossing test on the cyclic corner order.
inline bool diagonals_cross(std::pair<int, int> d1, std::pair<int, int> d2) {
    int a = d1.first, b = d1.second, c = d2.first, d = d2.second;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

inline bool valid_diagonal(int n, std::pair<int, int> d) {
    int a = d.first, b = d.second;
    return 1 <= a && a < b && b <= n && b - a >= 2 && !(a == 1 && b == n);
}

// All candidate diagonals of the n-gon in canonical order.
inline std::vector<std::pair<int, int>> all_diagonals(int n) {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) out.emplace_back(a, b);
    return out;
}

// The two canonical component ids of an edge: the smallest position on each
// side of the split. Returned as {id of the arc side, id of the complement}.
// For a diagonal (a,b) the arc side is {a+1..b} (id a+1) and the complement
// contains position 1. For an external edge at j the arc side is {j}.
inline std::pair<int, int> component_ids(EdgeId e) {
    if (e.is_side()) return {e.a, e.a == 1 ? 2 : 1};
    return {e.a + 1, 1};
}

// The boundary positions of the component of the given id (which must be one
// of component_ids(e)).
inline std::vector<int> component_positions(int n, EdgeId e, int side_id) {
    auto ids = component_ids(e);
    std::vector<int> out;
    if (e.is_side()) {
        if (side_id == ids.first) {
            out.push_back(e.a);
        } else {
            for (int j = 1; j <= n; ++j)
                if (j != e.a) out.push_back(j);
        }
    } else {
        if (side_id == ids.first) {
            for (int j = e.a + 1; j <= e.b; ++j) out.push_back(j);
        } else {
            for (int j = 1; j <= e.a; ++j) out.push_back(j);
            for (int j = e.b + 1; j <= n; ++j) out.push_back(j);
        }
    }
    return out;
}

// One face of the polygon subdivision: its corners in ascending order and
// its boundary edges in canonical edge order.
struct Face {
    std::vector<int> corners;
    std::vector<EdgeId> edges;
};

namespace detail {

// Recursively split an ascending corner list (a sub-polygon in cyclic order)
// by the first applicable diagonal; leaves become faces.
inline void split_faces(int n, std::vector<int> corners,
                        std::vector<std::pair<int, int>> diags,
                        std::vector<Face>& faces) {
    if (!diags.empty()) {
        auto [a, b] = diags.front();
        std::vector<int> seg, rest;
        for (int c : corners) {
            if (a <= c && c <= b) seg.push_back(c);
            if (c <= a || c >= b) rest.push_back(c);
        }
        std::vector<std::pair<int, int>> seg_d, rest_d;
        for (std::size_t i = 1; i < diags.size(); ++i) {
            auto d = diags[i];
            if (a <= d.first && d.second <= b) seg_d.push_back(d);
            else rest_d.push_back(d);
        }
        split_faces(n, std::move(seg), std::move(seg_d), faces);
        split_faces(n, std::move(rest), std::move(rest_d), faces);
        return;
    }
    Face f;
    f.corners = std::move(corners);
    int m = static_cast<int>(f.corners.size());
    for (int i = 0; i < m; ++i) {
        int u = f.corners[i];
        int v = f.corners[(i + 1) % m];
        if (i + 1 < m) {
            f.edges.push_back(v == u + 1 ? EdgeId::side(v) : EdgeId::diag(u, v));
        } else {
            // wrap pair: largest corner u back to smallest corner v
            f.edges.push_back((v == 1 && u == n) ? EdgeId::side(1) : EdgeId::diag(v, u));
        }
    }
    std::sort(f.edges.begin(), f.edges.end());
    faces.push_back(std::move(f));
}

} // namespace detail

// Splits the polygon along the given non-crossing diagonals and returns the
// faces sorted by their corner lists. Assumes the diagonal set is valid.
inline std::vector<Face> subdivision_faces(int n, const std::vector<std::pair<int, int>>& diagonals) {
    std::vector<Face> faces;
    std::vector<int> corners(n);
    for (int i = 0; i < n; ++i) corners[i] = i + 1;
    detail::split_faces(n, std::move(corners), diagonals, faces);
    std::sort(faces.begin(), faces.end(),
              [](const Face& x, const Face& y) { return x.corners < y.corners; });
    return faces;
}

// Whether the face lies in the component of the given id when the polygon is
// split along edge e. Works for faces not incident to e as well: a face is
// on the arc side of a diagonal (a,b) iff it has a corner strictly between a
// and b; the single-position side of an external edge holds no face at all.
inline bool face_on_component(const Face& f, EdgeId e, int side_id) {
    auto ids = component_ids(e);
    if (e.is_side()) return side_id == ids.second; // every face is on the complement
    bool on_arc = false;
    for (int c : f.corners)
        if (e.a < c && c < e.b) { on_arc = true; break; }
    return side_id == ids.first ? on_arc : !on_arc;
}

// Everything derivable from (signature, diagonal set): the subdivision faces,
// the spine edge set, and the faces that serve as internal spine vertices.
// The spine is the subtree spanned by the Out leaves: an edge belongs to it
// iff both of its sides contain an Out position. When there is a single Out,
// the spine degenerates to that one external edge and the face carrying it.
struct SpineInfo {
    int n = 0;
    int k = 0;
    std::vector<Face> faces;
    std::vector<EdgeId> spine;                      // canonical edge order
    std::vector<int> spine_faces;                   // ascending face indices
    std::map<int, std::vector<EdgeId>> face_edges;  // spine edges per spine face

    bool is_spine(EdgeId e) const {
        return std::binary_search(spine.begin(), spine.end(), e);
    }
};

inline SpineInfo compute_spine(const Signature& sig, const std::vector<std::pair<int, int>>& diagonals) {
    SpineInfo info;
    info.n = sig.n();
    info.k = sig.k();
    info.faces = subdivision_faces(info.n, diagonals);

    auto side_has_out = [&](EdgeId e, int side_id) {
        for (int p : component_positions(info.n, e, side_id))
            if (sig.is_out(p)) return true;
        return false;
    };

    std::set<EdgeId> spine_set;
    if (info.k == 1) {
        spine_set.insert(EdgeId::side(sig.out_positions().front()));
    } else {
        for (int j = 1; j <= info.n; ++j) {
            EdgeId e = EdgeId::side(j);
            auto ids = component_ids(e);
            if (side_has_out(e, ids.first) && side_has_out(e, ids.second)) spine_set.insert(e);
        }
        for (const auto& d : diagonals) {
            EdgeId e = EdgeId::diag(d.first, d.second);
            auto ids = component_ids(e);
            if (side_has_out(e, ids.first) && side_has_out(e, ids.second)) spine_set.insert(e);
        }
    }
    info.spine.assign(spine_set.begin(), spine_set.end());

    for (int fi = 0; fi < static_cast<int>(info.faces.size()); ++fi) {
        std::vector<EdgeId> mine;
        for (EdgeId e : info.faces[fi].edges)
            if (spine_set.count(e)) mine.push_back(e);
        if (!mine.empty()) {
            info.spine_faces.push_back(fi);
            info.face_edges[fi] = std::move(mine);
        }
    }
    return info;
}

// Validation and enumeration probe many label maps over few distinct
// subdivisions, so the subdivision-dependent data is cached. Entries are
// immutable once inserted; the map is guarded for concurrent callers.
inline const SpineInfo& spine_info_cached(const Signature& sig,
                                          const std::vector<std::pair<int, int>>& diagonals) {
    static std::unordered_map<std::string, std::unique_ptr<SpineInfo>> cache;
    static std::mutex mutex;
    std::string key = sig.word + ";";
    for (const auto& d : diagonals)
        key += std::to_string(d.first) + "," + std::to_string(d.second) + ";";
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(std::move(key), std::make_unique<SpineInfo>(compute_spine(sig, diagonals))).first;
    return *it->second;
}

// Whether the labeled edge e points away from face f (i.e. f is on the tail
// side). Two-sided labels point nowhere.
inline bool edge_outgoing_from_face(const Face& f, EdgeId e, SpineLabel lab) {
    if (lab.is_both()) return false;
    return !face_on_component(f, e, lab.toward);
}

// Number of outgoing directed spine edges at the given spine face.
inline int face_out_degree(const SpineInfo& info, const AlphaTree& t, int face_idx) {
    int deg = 0;
    auto it = info.face_edges.find(face_idx);
    if (it == info.face_edges.end()) return 0;
    for (EdgeId e : it->second) {
        auto lt = t.labels.find(e);
        if (lt != t.labels.end() && edge_outgoing_from_face(info.faces[face_idx], e, lt->second)) ++deg;
    }
    return deg;
}

// Full structural validation. Checks, in order: diagonal well-formedness and
// pairwise non-crossing; that the label map is keyed by exactly the spine
// edges; that every label names a genuine component of its edge, external
// edges only outward or two-sided; and that no internal spine vertex is left
// without an outgoing edge.
inline ErrorCode validate(const AlphaTree& t) {
    const int n = t.sig.n();
    if (n == 2) { // the one-point object: no diagonals, no labels
        return (t.diagonals.empty() && t.labels.empty()) ? ErrorCode::None : ErrorCode::SpineMismatch;
    }
    for (std::size_t i = 0; i < t.diagonals.size(); ++i) {
        if (!valid_diagonal(n, t.diagonals[i])) return ErrorCode::CrossingDiagonals;
        if (i > 0 && !(t.diagonals[i - 1] < t.diagonals[i])) return ErrorCode::CrossingDiagonals;
        for (std::size_t j = i + 1; j < t.diagonals.size(); ++j)
            if (diagonals_cross(t.diagonals[i], t.diagonals[j])) return ErrorCode::CrossingDiagonals;
    }

    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    if (t.labels.size() != info.spine.size()) return ErrorCode::SpineMismatch;
    for (EdgeId e : info.spine)
        if (!t.labels.count(e)) return ErrorCode::SpineMismatch;

    for (const auto& [e, lab] : t.labels) {
        if (lab.is_both()) continue;
        auto ids = component_ids(e);
        if (lab.toward != ids.first && lab.toward != ids.second) return ErrorCode::SpineMismatch;
        if (e.is_side() && lab.toward != e.a) return ErrorCode::BadExternalLabel;
    }

    for (int fi : info.spine_faces)
        if (face_out_degree(info, t, fi) == 0) return ErrorCode::SinkVertex;

    return ErrorCode::None;
}

// Cell dimension: the subdivision contributes its distance from a full
// triangulation, and every internal spine vertex contributes one less than
// its out-degree (the freedom of splitting flow among its outgoing edges).
inline int dimension(const AlphaTree& t) {
    const int n = t.sig.n();
    if (n == 2) return 0;
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    int d = (n - 3) - static_cast<int>(t.diagonals.size());
    for (int fi : info.spine_faces) d += face_out_degree(info, t, fi) - 1;
    return d;
}

// A tree is maximally expanded iff it admits no further one-step expansion:
// the subdivision is a full triangulation and every internal spine vertex
// has out-degree exactly one. Equivalently its cell has dimension zero.
inline bool is_max_expanded(const AlphaTree& t) {
    const int n = t.sig.n();
    if (n == 2) return true;
    if (static_cast<int>(t.diagonals.size()) != n - 3) return false;
    const SpineInfo& info = spine_info_cached(t.sig, t.diagonals);
    for (int fi : info.spine_faces)
        if (face_out_degree(info, t, fi) != 1) return false;
    return true;
}

// The undivided polygon with every Out external edge directed outward: the
// unique cell of maximal dimension.
inline AlphaTree corolla(const Signature& sig) {
    AlphaTree t;
    t.sig = sig;
    if (sig.n() == 2) return t;
    const SpineInfo& info = spine_info_cached(sig, {});
    for (EdgeId e : info.spine) t.labels[e] = SpineLabel::directed(e.a);
    return t;
}

// Relabels all positions by a cyclic rotation: the letter at old position
// p moves to position p - r (mod n), matching rotate_signature. Component
// ids of directed labels are re-canonicalized in the new numbering.
inline AlphaTree rotate_tree(const AlphaTree& t, int r) {
    const int n = t.sig.n();
    AlphaTree out;
    out.sig = rotate_signature(t.sig, r);
    if (n == 2) return out;
    auto mp = [&](int p) { return ((p - 1 - r) % n + n) % n + 1; };
    for (auto d : t.diagonals) {
        int a = mp(d.first), b = mp(d.second);
        if (a > b) std::swap(a, b);
        out.diagonals.emplace_back(a, b);
    }
    std::sort(out.diagonals.begin(), out.diagonals.end());
    for (const auto& [e, lab] : t.labels) {
        EdgeId me = e.is_side() ? EdgeId::side(mp(e.a)) : EdgeId::diag(mp(e.a), mp(e.b));
        if (lab.is_both()) {
            out.labels[me] = SpineLabel::both();
        } else {
            // the image of the old head component is the new head component;
            // its canonical id is the minimum of the mapped positions
            int new_id = n + 1;
            for (int p : component_positions(n, e, lab.toward)) new_id = std::min(new_id, mp(p));
            out.labels[me] = SpineLabel::directed(new_id);
        }
    }
    return out;
}

} // namespace treeplex

#endif
