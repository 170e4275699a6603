#ifndef TREEPLEX_LINALG_HPP
#define TREEPLEX_LINALG_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "treeplex/error.hpp"
#include "treeplex/rational.hpp"

namespace treeplex {

// Rank of a rational matrix by Gaussian elimination; rows are consumed.
inline int matrix_rank(std::vector<RatVec> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Dimension of the affine hull of a point set: -1 for no points, 0 for a
// single point, else the rank of the differences against the first point.
inline int affine_rank(const std::vector<RatVec>& points) {
    if (points.empty()) return -1;
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return matrix_rank(std::move(diffs));
}

// One linear inequality sum_j coeffs[j] * a_j >= rhs over unknowns a.
struct Inequality {
    RatVec coeffs;
    Rat rhs;
};

namespace detail {

// Reduces the matrix to reduced row echelon form in place and returns the
// pivot columns. Pivots are scaled to one and cleared above and below, so
// any row-space member has basis coordinates equal to its pivot entries.
inline std::vector<std::size_t> rref_pivots(std::vector<RatVec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        Rat f = rows[r][c];
        for (std::size_t j = c; j < cols; ++j) rows[r][j] /= f;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat g = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= g * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

} // namespace detail

// Decides by variable elimination whether a system of weak linear
// inequalities has a solution. Growth is kept in check three ways: rows
// derived from more than one-plus-the-eliminated-count of the original rows
// are provably implied by the rest and dropped; identical left-hand sides
// keep only their strongest right-hand side; and each round eliminates the
// variable with the fewest sign-pair combinations.
inline bool fm_feasible(std::vector<Inequality> system) {
    if (system.empty()) return true;
    const std::size_t vars = system[0].coeffs.size();
    for (const Inequality& q : system)
        if (q.coeffs.size() != vars) throw Error(ErrorCode::DimensionMismatch, "ragged inequality system");

    struct Row {
        RatVec c;
        Rat rhs;
        std::vector<std::uint64_t> hist; // bitmask over original row indices
    };
    const std::size_t words = (system.size() + 63) / 64;
    auto popcount = [&](const std::vector<std::uint64_t>& h) {
        int total = 0;
        for (std::uint64_t w : h) total += std::popcount(w);
        return total;
    };

    bool infeasible = false;
    // Coefficient pattern -> strongest row with that pattern. Patterns are
    // canonical: scaled so the first nonzero coefficient has absolute value one.
    std::map<RatVec, Row> best;
    auto push = [&](Row q) {
        if (infeasible) return;
        std::size_t lead = 0;
        while (lead < vars && q.c[lead] == 0) ++lead;
        if (lead == vars) {
            if (q.rhs > 0) infeasible = true; // constant row 0 >= rhs > 0
            return;
        }
        Rat f = q.c[lead] < 0 ? Rat(-q.c[lead]) : q.c[lead];
        for (Rat& x : q.c) x /= f;
        q.rhs /= f;
        auto it = best.find(q.c);
        if (it == best.end()) {
            best.emplace(q.c, std::move(q));
        } else if (q.rhs > it->second.rhs ||
                   (q.rhs == it->second.rhs && popcount(q.hist) < popcount(it->second.hist))) {
            it->second = std::move(q);
        }
    };

    for (std::size_t i = 0; i < system.size(); ++i) {
        Row q{std::move(system[i].coeffs), std::move(system[i].rhs),
              std::vector<std::uint64_t>(words, 0)};
        q.hist[i / 64] |= std::uint64_t(1) << (i % 64);
        push(std::move(q));
        if (infeasible) return false;
    }

    int eliminated = 0;
    while (!best.empty()) {
        // Pick the variable whose elimination creates the fewest combinations.
        std::vector<std::size_t> pos_count(vars, 0), neg_count(vars, 0);
        for (const auto& [c, row] : best)
            for (std::size_t v = 0; v < vars; ++v) {
                if (c[v] > 0) ++pos_count[v];
                else if (c[v] < 0) ++neg_count[v];
            }
        std::size_t v = vars;
        std::size_t best_cost = 0;
        for (std::size_t u = 0; u < vars; ++u) {
            if (pos_count[u] + neg_count[u] == 0) continue;
            std::size_t cost = pos_count[u] * neg_count[u];
            if (v == vars || cost < best_cost) {
                v = u;
                best_cost = cost;
            }
        }
        if (v == vars) break; // no variable left anywhere (map must be empty)

        std::vector<Row> pos, neg, rest;
        for (auto& [c, row] : best) {
            Row q = std::move(row);
            if (q.c[v] > 0) {
                Rat f = q.c[v];
                for (Rat& x : q.c) x /= f;
                q.rhs /= f;
                pos.push_back(std::move(q));
            } else if (q.c[v] < 0) {
                Rat f = -q.c[v];
                for (Rat& x : q.c) x /= f;
                q.rhs /= f;
                neg.push_back(std::move(q));
            } else {
                rest.push_back(std::move(q));
            }
        }
        best.clear();
        ++eliminated;
        // One-sided variables are unbounded in the satisfying direction, so
        // their rows impose nothing on the remainder and are simply dropped.
        if (!pos.empty() && !neg.empty()) {
            for (const Row& p : pos)
                for (const Row& m : neg) {
                    Row q;
                    q.c.resize(vars);
                    for (std::size_t j = 0; j < vars; ++j) q.c[j] = p.c[j] + m.c[j];
                    q.rhs = p.rhs + m.rhs;
                    q.hist.resize(words);
                    for (std::size_t w = 0; w < words; ++w) q.hist[w] = p.hist[w] | m.hist[w];
                    if (popcount(q.hist) > eliminated + 1) continue; // implied by the others
                    push(std::move(q));
                    if (infeasible) return false;
                }
        }
        for (Row& q : rest) push(std::move(q));
        if (infeasible) return false;
    }
    return !infeasible;
}

// Whether pt is a vertex of the convex hull of the set: some linear
// functional must exceed its value on every other point by a unit margin
// (any positive margin can be scaled to one). The difference vectors are
// first rewritten in a basis of their span so elimination runs over the
// smallest possible number of unknowns.
inline bool is_extreme_point(const std::vector<RatVec>& points, const RatVec& pt) {
    std::vector<RatVec> diffs;
    for (const RatVec& u : points) {
        if (u == pt) continue;
        if (u.size() != pt.size()) throw Error(ErrorCode::DimensionMismatch, "point size mismatch");
        RatVec d(pt.size());
        for (std::size_t j = 0; j < pt.size(); ++j) d[j] = pt[j] - u[j];
        diffs.push_back(std::move(d));
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    if (diffs.empty()) return true;

    std::vector<RatVec> basis = diffs;
    std::vector<std::size_t> pivots = detail::rref_pivots(basis);
    std::vector<Inequality> system;
    for (const RatVec& d : diffs) {
        Inequality q;
        q.coeffs.reserve(pivots.size());
        for (std::size_t p : pivots) q.coeffs.push_back(d[p]);
        q.rhs = 1;
        system.push_back(std::move(q));
    }
    return fm_feasible(std::move(system));
}

// The subset of distinct points that are vertices of the convex hull.
inline std::vector<RatVec> extreme_points(std::vector<RatVec> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<RatVec> out;
    for (const RatVec& p : points)
        if (is_extreme_point(points, p)) out.push_back(p);
    return out;
}

} // namespace treeplex

#endif
