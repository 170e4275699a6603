#ifndef TREEPLEX_JSON_IO_HPP
#define TREEPLEX_JSON_IO_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "treeplex/complex.hpp"
#include "treeplex/error.hpp"
#include "treeplex/polygon.hpp"
#include "treeplex/rational.hpp"
#include "treeplex/tree.hpp"

namespace treeplex {

using ordered_json = nlohmann::ordered_json;

inline ordered_json rat_vec_to_json(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

inline RatVec rat_vec_from_json(const ordered_json& a) {
    if (!a.is_array()) throw Error(ErrorCode::IoError, "expected an array of rationals");
    RatVec v;
    for (const auto& x : a) {
        if (x.is_string()) v.push_back(rat_from_string(x.get<std::string>()));
        else if (x.is_number_integer()) v.push_back(Rat(x.get<long long>()));
        else throw Error(ErrorCode::IoError, "rational entries must be strings or integers");
    }
    return v;
}

// {"alpha":"oioi","diagonals":[[1,3]],"labels":[{"edge":{"side":1},"label":"out"},
//  {"edge":{"diag":[1,3]},"label":"both"},...]}; directed internal labels are
// {"toward_position": p} and "out" marks an external edge pointing outward.
inline ordered_json tree_to_json(const AlphaTree& t) {
    ordered_json j;
    j["alpha"] = t.sig.word;
    ordered_json diags = ordered_json::array();
    for (const auto& [a, b] : t.diagonals) diags.push_back({a, b});
    j["diagonals"] = std::move(diags);
    ordered_json labels = ordered_json::array();
    for (const auto& [e, lab] : t.labels) {
        ordered_json entry;
        if (e.is_side()) entry["edge"] = ordered_json{{"side", e.a}};
        else entry["edge"] = ordered_json{{"diag", {e.a, e.b}}};
        if (lab.is_both()) entry["label"] = "both";
        else if (e.is_side() && lab.toward == e.a) entry["label"] = "out";
        else entry["label"] = ordered_json{{"toward_position", lab.toward}};
        labels.push_back(std::move(entry));
    }
    j["labels"] = std::move(labels);
    return j;
}

inline AlphaTree tree_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("alpha") || !j["alpha"].is_string())
        throw Error(ErrorCode::IoError, "tree object needs an alpha string");
    AlphaTree t;
    t.sig = parse_signature(j["alpha"].get<std::string>());
    if (j.contains("diagonals")) {
        if (!j["diagonals"].is_array()) throw Error(ErrorCode::IoError, "diagonals must be an array");
        for (const auto& d : j["diagonals"]) {
            if (!d.is_array() || d.size() != 2 || !d[0].is_number_integer() || !d[1].is_number_integer())
                throw Error(ErrorCode::IoError, "each diagonal must be a pair of corner indices");
            t.diagonals.emplace_back(d[0].get<int>(), d[1].get<int>());
        }
        std::sort(t.diagonals.begin(), t.diagonals.end());
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw Error(ErrorCode::IoError, "labels must be an array");
        for (const auto& entry : j["labels"]) {
            if (!entry.is_object() || !entry.contains("edge") || !entry.contains("label"))
                throw Error(ErrorCode::IoError, "each label entry needs edge and label");
            const auto& ej = entry["edge"];
            EdgeId e;
            if (ej.is_object() && ej.contains("side") && ej["side"].is_number_integer()) {
                e = EdgeId::side(ej["side"].get<int>());
            } else if (ej.is_object() && ej.contains("diag") && ej["diag"].is_array() && ej["diag"].size() == 2) {
                e = EdgeId::diag(ej["diag"][0].get<int>(), ej["diag"][1].get<int>());
            } else {
                throw Error(ErrorCode::IoError, "edge must be {\"side\":j} or {\"diag\":[a,b]}");
            }
            const auto& lj = entry["label"];
            SpineLabel lab;
            if (lj.is_string() && lj.get<std::string>() == "both") {
                lab = SpineLabel::both();
            } else if (lj.is_string() && lj.get<std::string>() == "out") {
                if (!e.is_side()) throw Error(ErrorCode::IoError, "\"out\" applies to external edges only");
                lab = SpineLabel::directed(e.a);
            } else if (lj.is_object() && lj.contains("toward_position") && lj["toward_position"].is_number_integer()) {
                lab = SpineLabel::directed(lj["toward_position"].get<int>());
            } else {
                throw Error(ErrorCode::IoError, "label must be \"out\", \"both\", or {\"toward_position\":p}");
            }
            t.labels[e] = lab;
        }
    }
    ErrorCode code = validate(t);
    if (code != ErrorCode::None) throw Error(code, "decoded tree is not valid");
    return t;
}

// {"alpha":..., "polygon":..., "vertices":[{"tree":..., "v":[...], "w":[...]}]}
inline ordered_json vertex_export_json(const CellComplex& c, const std::string& polygon_scheme) {
    ordered_json j;
    j["alpha"] = c.sig.word;
    j["polygon"] = polygon_scheme;
    ordered_json verts = ordered_json::array();
    for (const CellRecord& r : c.cells) {
        if (r.dim != 0) continue;
        ordered_json entry;
        entry["tree"] = tree_to_json(r.tree);
        entry["v"] = rat_vec_to_json(r.v);
        entry["w"] = rat_vec_to_json(r.w);
        verts.push_back(std::move(entry));
    }
    j["vertices"] = std::move(verts);
    return j;
}

// Full poset with a coordinate table for the dimension-zero cells.
inline ordered_json complex_to_json(const CellComplex& c, const std::string& polygon_scheme) {
    ordered_json j;
    j["alpha"] = c.sig.word;
    j["polygon"] = polygon_scheme;
    j["top_cell"] = c.top_cell;
    j["f_vector"] = c.f_vector;
    ordered_json cells = ordered_json::array();
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        const CellRecord& r = c.cells[i];
        ordered_json entry;
        entry["id"] = static_cast<int>(i);
        entry["tree"] = tree_to_json(r.tree);
        entry["dim"] = r.dim;
        entry["facets"] = r.facets;
        entry["vertices"] = r.vertex_ids;
        cells.push_back(std::move(entry));
    }
    j["cells"] = std::move(cells);
    ordered_json table = ordered_json::array();
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        const CellRecord& r = c.cells[i];
        if (r.dim != 0) continue;
        ordered_json entry;
        entry["id"] = static_cast<int>(i);
        entry["v"] = rat_vec_to_json(r.v);
        entry["w"] = rat_vec_to_json(r.w);
        table.push_back(std::move(entry));
    }
    j["vertex_coordinates"] = std::move(table);
    return j;
}

// Convex polygon input: {"corners":[["0","0"],["3","0"],...]} with rational
// strings (or plain integers), corners in counterclockwise order.
inline PolygonSpec polygon_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("corners") || !j["corners"].is_array())
        throw Error(ErrorCode::IoError, "polygon file needs a corners array");
    std::vector<Point> pts;
    for (const auto& c : j["corners"]) {
        if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::IoError, "each corner must be a pair");
        auto coord = [](const ordered_json& x) -> Rat {
            if (x.is_string()) return rat_from_string(x.get<std::string>());
            if (x.is_number_integer()) return Rat(x.get<long long>());
            throw Error(ErrorCode::IoError, "corner coordinates must be strings or integers");
        };
        pts.push_back(Point{coord(c[0]), coord(c[1])});
    }
    return build_polygon(pts);
}

inline PolygonSpec load_polygon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open polygon file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorCode::IoError, std::string("polygon file is not valid JSON: ") + e.what());
    }
    return polygon_from_json(j);
}

namespace detail {

inline std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Orthogonal projection of the vertex coordinates onto an orthonormal basis
// of their affine hull, padded to three output coordinates. Display only.
inline std::vector<std::array<double, 3>> project_vertices(const std::vector<RatVec>& pts) {
    std::vector<std::vector<double>> d;
    for (const RatVec& p : pts) {
        std::vector<double> row;
        for (const Rat& x : p) row.push_back(rat_to_double(x));
        d.push_back(std::move(row));
    }
    std::vector<std::array<double, 3>> out(pts.size(), {0.0, 0.0, 0.0});
    if (d.empty()) return out;
    const std::size_t dimc = d[0].size();
    std::vector<std::vector<double>> basis;
    for (std::size_t i = 1; i < d.size() && basis.size() < 3; ++i) {
        std::vector<double> v(dimc);
        for (std::size_t j = 0; j < dimc; ++j) v[j] = d[i][j] - d[0][j];
        for (const auto& b : basis) {
            double dot = 0;
            for (std::size_t j = 0; j < dimc; ++j) dot += v[j] * b[j];
            for (std::size_t j = 0; j < dimc; ++j) v[j] -= dot * b[j];
        }
        double norm = 0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        if (norm < 1e-9) continue;
        for (double& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t bidx = 0; bidx < basis.size(); ++bidx) {
            double dot = 0;
            for (std::size_t j = 0; j < dimc; ++j) dot += (d[i][j] - d[0][j]) * basis[bidx][j];
            out[i][bidx] = dot;
        }
    return out;
}

} // namespace detail

// Text of an OFF file for complexes of top dimension at most three: the
// dimension-zero cells as 3D points (projected to their affine hull) and
// the two-dimensional cells as polygons with a consistent cyclic order.
inline std::string off_export(const CellComplex& c) {
    if (c.top_cell < 0) throw std::logic_error("export needs a top cell");
    const int top_dim = c.cells[c.top_cell].dim;
    if (top_dim > 3) throw Error(ErrorCode::FormatUnsupported, "OFF export needs top dimension at most three");

    std::vector<int> vertex_cells;
    std::vector<int> vertex_index(c.cells.size(), -1);
    std::vector<RatVec> coords;
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        if (c.cells[i].dim != 0) continue;
        vertex_index[i] = static_cast<int>(vertex_cells.size());
        vertex_cells.push_back(static_cast<int>(i));
        RatVec p = c.cells[i].v;
        p.insert(p.end(), c.cells[i].w.begin(), c.cells[i].w.end());
        coords.push_back(std::move(p));
    }
    auto proj = detail::project_vertices(coords);

    long edges = c.f_vector.size() > 1 ? c.f_vector[1] : 0;
    std::vector<std::vector<int>> faces;
    for (const CellRecord& r : c.cells) {
        if (r.dim != 2) continue;
        // order the face's vertices by angle around the centroid inside the
        // face's own plane; cells are convex so this is a valid cycle
        std::vector<int> ids;
        for (int vid : r.vertex_ids) ids.push_back(vertex_index[vid]);
        std::vector<std::array<double, 3>> pl;
        std::vector<RatVec> sub;
        for (int vid : r.vertex_ids) {
            RatVec p = c.cells[vid].v;
            p.insert(p.end(), c.cells[vid].w.begin(), c.cells[vid].w.end());
            sub.push_back(std::move(p));
        }
        pl = detail::project_vertices(sub);
        double cx = 0, cy = 0;
        for (const auto& p : pl) {
            cx += p[0];
            cy += p[1];
        }
        cx /= static_cast<double>(pl.size());
        cy /= static_cast<double>(pl.size());
        std::vector<std::pair<double, int>> order;
        for (std::size_t i = 0; i < pl.size(); ++i)
            order.emplace_back(std::atan2(pl[i][1] - cy, pl[i][0] - cx), ids[i]);
        std::sort(order.begin(), order.end());
        std::vector<int> cycle;
        for (const auto& [angle, id] : order) cycle.push_back(id);
        faces.push_back(std::move(cycle));
    }

    std::ostringstream out;
    out << "OFF\n";
    out << vertex_cells.size() << " " << faces.size() << " " << edges << "\n";
    for (const auto& p : proj)
        out << detail::format_float(p[0]) << " " << detail::format_float(p[1]) << " "
            << detail::format_float(p[2]) << "\n";
    for (const auto& f : faces) {
        out << f.size();
        for (int id : f) out << " " << id;
        out << "\n";
    }
    return out.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::IoError, "cannot open output file: " + path);
    out << text;
    if (!out) throw Error(ErrorCode::IoError, "failed writing output file: " + path);
}

} // namespace treeplex

#endif
