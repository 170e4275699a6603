// Command-line driver: counting, exact realization, complex export, and
// invariant verification for tree complexes over convex polygons.

#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treeplex/treeplex.hpp"

namespace {

using namespace treeplex;

struct PolygonChoice {
    std::string scheme = "parabola"; // "parabola" or a file path
    bool from_file = false;
};

PolygonChoice parse_polygon_option(const std::vector<std::string>& values) {
    PolygonChoice choice;
    if (values.empty()) return choice;
    if (values[0] == "parabola") {
        if (values.size() != 1) throw CLI::ValidationError("--polygon parabola takes no path");
        return choice;
    }
    if (values[0] == "file") {
        if (values.size() != 2) throw CLI::ValidationError("--polygon file needs a path");
        choice.scheme = values[1];
        choice.from_file = true;
        return choice;
    }
    throw CLI::ValidationError("--polygon expects 'parabola' or 'file PATH'");
}

PolygonSpec resolve_polygon(const PolygonChoice& choice, int n) {
    if (choice.from_file) return load_polygon_file(choice.scheme);
    return build_polygon_parabola(n);
}

CellComplex build_for(const Signature& s, const PolygonChoice& choice) {
    if (s.n() == 2) return build_complex(s);
    return build_complex(s, resolve_polygon(choice, s.n()));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    write_text_file(out_path, text);
}

// Whether the closed-form count applies: zero or one incoming gap pattern,
// i.e. at most two outgoing sides.
bool closed_form_applies(const Signature& s) { return s.k() <= 2; }

Int closed_form_count(const Signature& s) {
    Signature c = canonical_rotation(s).first;
    if (c.k() == 1) return catalan(c.n() - 2);
    // canonical two-out word is o i^a o i^b
    std::size_t second = c.word.find('o', 1);
    long a = static_cast<long>(second - 1);
    long b = static_cast<long>(c.word.size() - second - 1);
    return c_pair_closed(a, b);
}

int cmd_count(const std::string& alpha, const std::string& method, int cap) {
    Signature s = parse_signature(alpha);
    std::cout << "alpha: " << s.word << "\n";
    std::vector<Int> seen;
    bool brute_skipped = false;
    if (method == "recursion" || method == "all") {
        Int r = count_recursive(s);
        std::cout << "recursion: " << r.str() << "\n";
        seen.push_back(r);
    }
    if (method == "closed" || method == "all") {
        if (closed_form_applies(s)) {
            Int r = closed_form_count(s);
            std::cout << "closed: " << r.str() << "\n";
            seen.push_back(r);
        } else if (method == "closed") {
            throw Error(ErrorCode::RangeViolation, "closed form covers at most two outgoing sides");
        } else {
            std::cout << "closed: n/a\n";
        }
    }
    if (method == "brute" || method == "all") {
        if (s.n() <= cap) {
            Int r = count_bruteforce(s, cap);
            std::cout << "brute: " << r.str() << "\n";
            seen.push_back(r);
        } else if (method == "brute") {
            throw Error(ErrorCode::CapExceeded, "brute force is capped; raise --cap to proceed");
        } else {
            std::cout << "brute: skipped (over cap)\n";
            brute_skipped = true;
        }
    }
    if (method == "all") {
        bool agree = true;
        for (const Int& x : seen) agree = agree && x == seen[0];
        std::cout << "agreement: " << (agree ? "yes" : "NO") << (brute_skipped ? " (brute skipped)" : "") << "\n";
        if (!agree) return 1;
    }
    return 0;
}

int cmd_realize(const std::string& alpha, const PolygonChoice& poly, const std::string& out_path) {
    Signature s = parse_signature(alpha);
    CellComplex c = build_for(s, poly);
    emit(vertex_export_json(c, poly.scheme).dump(2) + "\n", out_path);
    return 0;
}

int cmd_complex(const std::string& alpha, const PolygonChoice& poly, const std::string& out_path) {
    Signature s = parse_signature(alpha);
    CellComplex c = build_for(s, poly);
    emit(complex_to_json(c, poly.scheme).dump(2) + "\n", out_path);
    return 0;
}

int cmd_export(const std::string& alpha, const PolygonChoice& poly, const std::string& format,
               const std::string& out_path) {
    Signature s = parse_signature(alpha);
    CellComplex c = build_for(s, poly);
    if (format == "off") {
        emit(off_export(c), out_path);
        return 0;
    }
    if (format == "json") {
        emit(complex_to_json(c, poly.scheme).dump(2) + "\n", out_path);
        return 0;
    }
    throw Error(ErrorCode::FormatUnsupported, "export supports formats off and json");
}

struct SuiteReport {
    bool all_pass = true;

    void line(const std::string& name, bool pass, const std::string& detail) {
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        all_pass = all_pass && pass;
    }
};

void suite_euler(const CellComplex& c, SuiteReport& rep) {
    long chi = euler_characteristic(c);
    std::ostringstream d;
    d << "chi=" << chi << " over " << c.cells.size() << " cells";
    rep.line("euler", chi == 1, d.str());
    int expected_dim = c.sig.n() + c.sig.k() - 4;
    rep.line("top-cell", c.top_cell >= 0 && c.cells[c.top_cell].dim == expected_dim,
             "unique maximal cell of dimension " + std::to_string(expected_dim));
}

void suite_boundary(const CellComplex& c, SuiteReport& rep) {
    int d = c.cells[c.top_cell].dim;
    CellComplex b = boundary_subcomplex(c);
    long chi = euler_characteristic(b);
    long expected = d == 0 ? 0 : 1 + ((d - 1) % 2 == 0 ? 1 : -1);
    std::ostringstream s1;
    s1 << "chi=" << chi << " expected " << expected << " over " << b.cells.size() << " cells";
    rep.line("boundary-euler", chi == expected, s1.str());
    auto pm = pseudomanifold_violations(c);
    rep.line("pseudomanifold", pm.empty(),
             pm.empty() ? "every ridge borders exactly two boundary facets"
                        : std::to_string(pm.size()) + " violating ridges");
    auto fd = facet_dimension_violations(c);
    rep.line("facet-dims", fd.empty(), "facets drop dimension by exactly one");
}

void suite_dims(const CellComplex& c, SuiteReport& rep) {
    auto bad = geometric_dimension_violations(c);
    rep.line("affine-dims", bad.empty(),
             bad.empty() ? "every cell spans its stated dimension"
                         : std::to_string(bad.size()) + " cells with wrong affine span");
    rep.line("distinct-vertices", distinct_vertex_coordinates(c), "vertex coordinates pairwise distinct");
    Int expected = count_recursive(c.sig);
    long got = c.f_vector.empty() ? 0 : c.f_vector[0];
    rep.line("vertex-count", Int(got) == expected,
             std::to_string(got) + " vertices, formula gives " + expected.str());
    if (c.has_polygon) {
        rep.line("area-simplex", area_simplex_check(c), "subpolygon vectors fill the area simplex");
        rep.line("weight-simplex", loday_simplex_check(c.sig), "classical weights fill their simplex");
    }
}

void suite_ht(const CellComplex& c, SuiteReport& rep) {
    if (!c.has_polygon) {
        rep.line("point-roundtrip", true, "no geometry on two sides; nothing to test");
        return;
    }
    const CellRecord& top = c.cells[c.top_cell];
    const AlphaTree& t = top.tree;
    SpineInfo info = compute_spine(t.sig, t.diagonals);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(1, 50);
    int trials = 25, good = 0;
    for (int it = 0; it < trials; ++it) {
        std::vector<RatVec> coords;
        for (int fi : info.spine_faces) {
            int deg = face_out_degree(info, t, fi);
            RatVec row(deg);
            Int total = 0;
            std::vector<int> raw(deg);
            for (int& x : raw) { x = pick(rng); total += x; }
            for (int i = 0; i < deg; ++i) row[i] = Rat(Int(raw[i]), total);
            coords.push_back(std::move(row));
        }
        RatVec x = h_forward(t, c.poly, coords);
        bool ok = lambda_contains(lambda_constraints(t, c.poly), x);
        auto back = h_inverse(t, c.poly, x);
        ok = ok && back == coords;
        AlphaTree located = spine_labels_from_point(t.sig, t.diagonals, c.poly, x);
        ok = ok && encode_tree(located) == encode_tree(t);
        if (ok) ++good;
    }
    rep.line("point-roundtrip", good == trials,
             std::to_string(good) + "/" + std::to_string(trials) + " interior points round-trip");
}

void suite_rotation(const Signature& s, SuiteReport& rep) {
    int n = s.n(), good = 0;
    for (int r = 0; r < n; ++r)
        if (rotation_isomorphism_check(s, r)) ++good;
    rep.line("rotation", good == n,
             std::to_string(good) + "/" + std::to_string(n) + " rotations preserve the poset");
}

void suite_hull(const Signature& s, SuiteReport& rep) {
    bool ok = star_vectors_all_extreme(s.n());
    rep.line("hull", ok, "every triangulation star vector is an extreme point");
}

int cmd_verify(const std::string& alpha, const std::string& suite, const PolygonChoice& poly) {
    Signature s = parse_signature(alpha);
    SuiteReport rep;
    bool need_complex = suite == "all" || suite == "euler" || suite == "boundary" || suite == "dims" || suite == "hT";
    CellComplex c;
    if (need_complex) c = build_for(s, poly);
    if (suite == "all" || suite == "euler") suite_euler(c, rep);
    if (suite == "all" || suite == "boundary") suite_boundary(c, rep);
    if (suite == "all" || suite == "dims") suite_dims(c, rep);
    if (suite == "all" || suite == "hT") suite_ht(c, rep);
    if (suite == "all" || suite == "rotation") suite_rotation(s, rep);
    if (suite == "hull") suite_hull(s, rep); // expensive: only on explicit request
    return rep.all_pass ? 0 : 1;
}

int cmd_table(int bound, const std::string& format, const std::string& out_path) {
    if (bound < 0) throw Error(ErrorCode::NegativeInput, "table bound must be nonnegative");
    bool agree_all = true;
    std::ostringstream tsv;
    ordered_json rows = ordered_json::array();
    tsv << "l\tm\tclosed\trecursion\tagree\n";
    for (int l = 0; l <= bound; ++l)
        for (int m = 0; m <= bound; ++m) {
            Int closed = c_pair_closed(l, m);
            Int rec = count_recursive(Signature{gaps_signature({l, m})});
            bool agree = closed == rec;
            agree_all = agree_all && agree;
            tsv << l << "\t" << m << "\t" << closed.str() << "\t" << rec.str() << "\t"
                << (agree ? "yes" : "NO") << "\n";
            ordered_json row;
            row["l"] = l;
            row["m"] = m;
            row["closed"] = closed.str();
            row["recursion"] = rec.str();
            row["agree"] = agree;
            rows.push_back(std::move(row));
        }
    if (format == "tsv") emit(tsv.str(), out_path);
    else if (format == "json") emit(rows.dump(2) + "\n", out_path);
    else throw Error(ErrorCode::FormatUnsupported, "table supports formats tsv and json");
    return agree_all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tree complexes over convex polygons"};
    app.require_subcommand(1);

    std::string alpha, method = "all", format, out_path, suite = "all";
    int cap = 9;
    std::vector<std::string> polygon_values;

    auto add_polygon = [&](CLI::App* cmd) {
        cmd->add_option("--polygon", polygon_values, "parabola (default) or: file PATH")->expected(1, 2);
    };

    CLI::App* count = app.add_subcommand("count", "count the dimension-zero cells");
    count->add_option("--alpha", alpha, "label word, e.g. oioi")->required();
    count->add_option("--method", method, "recursion|closed|brute|all")
        ->check(CLI::IsMember({"recursion", "closed", "brute", "all"}));
    count->add_option("--cap", cap, "size cap for brute-force enumeration");

    CLI::App* realize = app.add_subcommand("realize", "emit exact vertex coordinates as JSON");
    realize->add_option("--alpha", alpha, "label word")->required();
    add_polygon(realize);
    realize->add_option("--out", out_path, "output path (stdout when absent)");

    CLI::App* complex_cmd = app.add_subcommand("complex", "emit the full face poset as JSON");
    complex_cmd->add_option("--alpha", alpha, "label word")->required();
    add_polygon(complex_cmd);
    complex_cmd->add_option("--out", out_path, "output path (stdout when absent)");

    CLI::App* export_cmd = app.add_subcommand("export", "emit OFF (top dimension at most three) or JSON");
    export_cmd->add_option("--alpha", alpha, "label word")->required();
    add_polygon(export_cmd);
    export_cmd->add_option("--format", format, "off|json")->default_val("off");
    export_cmd->add_option("--out", out_path, "output path (stdout when absent)");

    CLI::App* verify = app.add_subcommand("verify", "run invariant suites and report pass/fail");
    verify->add_option("--alpha", alpha, "label word")->required();
    verify->add_option("--suite", suite, "all|euler|boundary|dims|hT|rotation|hull (hull only on request)")
        ->check(CLI::IsMember({"all", "euler", "boundary", "dims", "hT", "rotation", "hull"}));
    verify->add_option("--cap", cap, "unused reserve for expensive suites");
    add_polygon(verify);

    CLI::App* table = app.add_subcommand("table", "pair-count matrix with a methods-agreement column");
    table->add_option("--cap", cap, "largest gap bound in the matrix")->default_val(5);
    table->add_option("--format", format, "tsv|json")->default_val("tsv");
    table->add_option("--out", out_path, "output path (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        PolygonChoice poly = parse_polygon_option(polygon_values);
        if (count->parsed()) return cmd_count(alpha, method, cap);
        if (realize->parsed()) return cmd_realize(alpha, poly, out_path);
        if (complex_cmd->parsed()) return cmd_complex(alpha, poly, out_path);
        if (export_cmd->parsed()) return cmd_export(alpha, poly, format, out_path);
        if (verify->parsed()) return cmd_verify(alpha, suite, poly);
        if (table->parsed()) return cmd_table(cap, format.empty() ? "tsv" : format, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const treeplex::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
