#ifndef TREEPLEX_ENUMERATE_HPP
#define TREEPLEX_ENUMERATE_HPP

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "treeplex/error.hpp"
#include "treeplex/signature.hpp"
#include "treeplex/tree.hpp"

namespace treeplex {

// Calls fn once for every set of pairwise non-crossing diagonals of the
// n-gon (including the empty set), by backtracking over the candidate list
// in canonical order.
inline void for_each_subdivision(int n, const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
    std::vector<std::pair<int, int>> all = all_diagonals(n);
    std::vector<std::pair<int, int>> current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == all.size()) {
            fn(current);
            return;
        }
        rec(i + 1); // skip candidate i
        for (const auto& d : current)
            if (diagonals_cross(d, all[i])) return;
        current.push_back(all[i]);
        rec(i + 1);
        current.pop_back();
    };
    rec(0);
}

namespace detail {

// Emits every valid label map for the given subdivision. Each spine edge
// gets one of its allowed labels (external: outward or two-sided; internal:
// either direction or two-sided); assignments leaving some internal spine
// vertex without an outgoing edge are pruned.
inline void enumerate_labelings(const Signature& sig, const SpineInfo& info,
                                const std::vector<std::pair<int, int>>& diagonals,
                                std::vector<AlphaTree>& out) {
    const std::size_t m = info.spine.size();

    // spine faces incident to each spine edge, and whether directing the
    // edge toward a given component id makes it outgoing from that face
    struct EdgeSlot {
        EdgeId e;
        std::vector<int> faces;          // indices into info.spine_faces
        std::vector<int> choices;        // 0 = both, otherwise a component id
    };
    std::vector<int> face_pos(info.faces.size(), -1);
    for (std::size_t i = 0; i < info.spine_faces.size(); ++i) face_pos[info.spine_faces[i]] = static_cast<int>(i);

    std::vector<EdgeSlot> slots;
    slots.reserve(m);
    for (EdgeId e : info.spine) {
        EdgeSlot s;
        s.e = e;
        for (int fi : info.spine_faces)
            for (EdgeId fe : info.face_edges.at(fi))
                if (fe == e) s.faces.push_back(face_pos[fi]);
        auto ids = component_ids(e);
        if (e.is_side()) {
            s.choices = {ids.first, 0}; // outward, then two-sided
        } else {
            s.choices = {0, ids.first, ids.second};
            std::sort(s.choices.begin() + 1, s.choices.end());
        }
        slots.push_back(std::move(s));
    }

    // prune state per spine face: directed-outgoing count and edges not yet assigned
    std::vector<int> out_deg(info.spine_faces.size(), 0);
    std::vector<int> unassigned(info.spine_faces.size(), 0);
    for (const auto& s : slots)
        for (int f : s.faces) ++unassigned[f];

    AlphaTree t;
    t.sig = sig;
    t.diagonals = diagonals;

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == m) {
            out.push_back(t);
            return;
        }
        const EdgeSlot& s = slots[i];
        for (int choice : s.choices) {
            SpineLabel lab{choice};
            bool ok = true;
            for (int f : s.faces) {
                --unassigned[f];
                if (choice != 0 &&
                    edge_outgoing_from_face(info.faces[info.spine_faces[f]], s.e, lab))
                    ++out_deg[f];
                if (out_deg[f] == 0 && unassigned[f] == 0) ok = false;
            }
            if (ok) {
                t.labels[s.e] = lab;
                rec(i + 1);
                t.labels.erase(s.e);
            }
            for (int f : s.faces) {
                ++unassigned[f];
                if (choice != 0 &&
                    edge_outgoing_from_face(info.faces[info.spine_faces[f]], s.e, lab))
                    --out_deg[f];
            }
        }
    };
    rec(0);
}

} // namespace detail

// Every directed tree on the signature, exactly once, sorted by the
// deterministic order (diagonal set, then labels in canonical edge order).
// The two-letter word "oo" yields its single sentinel tree; "oi" admits no
// tree at all and is rejected.
inline std::vector<AlphaTree> enumerate_cells(const Signature& sig) {
    if (sig.n() == 2) {
        if (sig.word != "oo")
            throw Error(ErrorCode::RangeViolation,
                        "the two-letter word with an incoming label has no trees");
        return {corolla(sig)};
    }
    std::vector<AlphaTree> out;
    for_each_subdivision(sig.n(), [&](const std::vector<std::pair<int, int>>& diags) {
        const SpineInfo& info = spine_info_cached(sig, diags);
        detail::enumerate_labelings(sig, info, diags, out);
    });
    std::sort(out.begin(), out.end(), tree_less);
    return out;
}

// Exactly the maximally expanded trees: full triangulations with every
// internal spine vertex of out-degree one. Enumerated directly by letting
// each spine face choose its unique outgoing edge (a choice function);
// an internal edge claimed from both ends is contradictory, unchosen spine
// edges become two-sided.
inline std::vector<AlphaTree> enumerate_max_expanded(const Signature& sig) {
    if (sig.n() == 2) {
        if (sig.word != "oo")
            throw Error(ErrorCode::RangeViolation,
                        "the two-letter word with an incoming label has no trees");
        return {corolla(sig)};
    }
    const int n = sig.n();
    std::vector<AlphaTree> out;
    for_each_subdivision(n, [&](const std::vector<std::pair<int, int>>& diags) {
        if (static_cast<int>(diags.size()) != n - 3) return;
        const SpineInfo& info = spine_info_cached(sig, diags);

        const std::size_t nf = info.spine_faces.size();
        std::vector<int> chosen(info.spine.size(), -1); // spine edge idx -> choosing face pos, or -1
        auto edge_idx = [&](EdgeId e) {
            return static_cast<int>(std::lower_bound(info.spine.begin(), info.spine.end(), e) - info.spine.begin());
        };

        AlphaTree t;
        t.sig = sig;
        t.diagonals = diags;

        std::function<void(std::size_t)> rec = [&](std::size_t fi) {
            if (fi == nf) {
                for (std::size_t ei = 0; ei < info.spine.size(); ++ei) {
                    EdgeId e = info.spine[ei];
                    if (chosen[ei] < 0) {
                        t.labels[e] = SpineLabel::both();
                    } else {
                        const Face& f = info.faces[info.spine_faces[chosen[ei]]];
                        auto ids = component_ids(e);
                        // direct away from the choosing face
                        int head = face_on_component(f, e, ids.first) ? ids.second : ids.first;
                        t.labels[e] = SpineLabel::directed(head);
                    }
                }
                out.push_back(t);
                t.labels.clear();
                return;
            }
            int face = info.spine_faces[fi];
            for (EdgeId e : info.face_edges.at(face)) {
                int ei = edge_idx(e);
                if (chosen[ei] >= 0) continue; // already claimed by the other side
                chosen[ei] = static_cast<int>(fi);
                rec(fi + 1);
                chosen[ei] = -1;
            }
        };
        rec(0);
    });
    std::sort(out.begin(), out.end(), tree_less);
    return out;
}

// All trees reachable from t by exactly one expansion move: relabeling one
// directed spine edge to two-sided, or inserting one new diagonal — with a
// direction when the new edge lands on the spine (each valid direction gives
// its own output), label-free otherwise. Every result is one dimension
// lower. Sorted deterministically.
inline std::vector<AlphaTree> one_step_expansions(const AlphaTree& t) {
    std::vector<AlphaTree> out;
    const int n = t.sig.n();
    if (n == 2) return out;

    // move 1: soften one directed edge to two-sided
    for (const auto& [e, lab] : t.labels) {
        if (lab.is_both()) continue;
        AlphaTree t2 = t;
        t2.labels[e] = SpineLabel::both();
        if (validate(t2) == ErrorCode::None) out.push_back(std::move(t2));
    }

    // moves 2 and 3: insert one diagonal
    for (const auto& d : all_diagonals(n)) {
        bool usable = !std::binary_search(t.diagonals.begin(), t.diagonals.end(), d);
        for (const auto& existing : t.diagonals)
            if (diagonals_cross(existing, d)) { usable = false; break; }
        if (!usable) continue;

        std::vector<std::pair<int, int>> diags = t.diagonals;
        diags.insert(std::lower_bound(diags.begin(), diags.end(), d), d);
        EdgeId e = EdgeId::diag(d.first, d.second);
        const SpineInfo& info = spine_info_cached(t.sig, diags);

        if (!info.is_spine(e)) {
            AlphaTree t2;
            t2.sig = t.sig;
            t2.diagonals = std::move(diags);
            t2.labels = t.labels;
            if (validate(t2) == ErrorCode::None) out.push_back(std::move(t2));
        } else {
            auto ids = component_ids(e);
            for (int head : {std::min(ids.first, ids.second), std::max(ids.first, ids.second)}) {
                AlphaTree t2;
                t2.sig = t.sig;
                t2.diagonals = diags;
                t2.labels = t.labels;
                t2.labels[e] = SpineLabel::directed(head);
                if (validate(t2) == ErrorCode::None) out.push_back(std::move(t2));
            }
        }
    }
    std::sort(out.begin(), out.end(), tree_less);
    return out;
}

// Whether t2 is reachable from t by one or more expansion moves. Strict:
// a tree is not an expansion of itself.
inline bool is_expansion(const AlphaTree& t, const AlphaTree& t2) {
    if (t.sig != t2.sig) throw Error(ErrorCode::SignatureMismatch, "trees live on different signatures");
    int target_dim = dimension(t2);
    if (target_dim >= dimension(t)) return false;
    std::unordered_set<std::string> seen;
    std::queue<AlphaTree> queue;
    queue.push(t);
    seen.insert(encode_tree(t));
    while (!queue.empty()) {
        AlphaTree cur = std::move(queue.front());
        queue.pop();
        for (AlphaTree& nxt : one_step_expansions(cur)) {
            if (nxt == t2) return true;
            if (dimension(nxt) <= target_dim) continue; // too deep already
            if (seen.insert(encode_tree(nxt)).second) queue.push(std::move(nxt));
        }
    }
    return false;
}

// The maximally expanded trees in the expansion closure of t (t itself
// included when already maximal). Sorted deterministically.
inline std::vector<AlphaTree> max_expansions_of(const AlphaTree& t) {
    std::vector<AlphaTree> out;
    std::unordered_set<std::string> seen;
    std::queue<AlphaTree> queue;
    queue.push(t);
    seen.insert(encode_tree(t));
    while (!queue.empty()) {
        AlphaTree cur = std::move(queue.front());
        queue.pop();
        if (is_max_expanded(cur)) {
            out.push_back(cur);
            continue;
        }
        for (AlphaTree& nxt : one_step_expansions(cur))
            if (seen.insert(encode_tree(nxt)).second) queue.push(std::move(nxt));
    }
    std::sort(out.begin(), out.end(), tree_less);
    return out;
}

} // namespace treeplex

#endif
