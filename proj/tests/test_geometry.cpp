#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "treeplex/enumerate.hpp"
#include "treeplex/geometry.hpp"

#include "helpers.hpp"

using namespace treeplex;

namespace {

AlphaTree make_tree(const std::string& word, std::vector<std::pair<int, int>> diags,
                    std::vector<std::pair<EdgeId, SpineLabel>> labels) {
    AlphaTree t;
    t.sig = parse_signature(word);
    t.diagonals = std::move(diags);
    std::sort(t.diagonals.begin(), t.diagonals.end());
    for (auto& [e, lab] : labels) t.labels[e] = lab;
    REQUIRE(validate(t) == ErrorCode::None);
    return t;
}

// Seeded interior simplex points: one per internal spine vertex.
std::vector<RatVec> random_simplex_coords(const AlphaTree& t, std::mt19937& rng) {
    SpineInfo info = compute_spine(t.sig, t.diagonals);
    std::uniform_int_distribution<int> pick(1, 40);
    std::vector<RatVec> coords;
    for (int fi : info.spine_faces) {
        int deg = face_out_degree(info, t, fi);
        std::vector<int> raw(deg);
        Int total = 0;
        for (int& x : raw) {
            x = pick(rng);
            total += x;
        }
        RatVec row(deg);
        for (int i = 0; i < deg; ++i) row[i] = Rat(Int(raw[i]), total);
        coords.push_back(std::move(row));
    }
    return coords;
}

} // namespace

TEST_CASE("star vectors list triangle areas gathered at each corner") {
    PolygonSpec p = build_polygon_parabola(4);
    AlphaTree a = make_tree("oioi", {{1, 3}},
                            {{EdgeId::side(1), SpineLabel::directed(1)},
                             {EdgeId::diag(1, 3), SpineLabel::both()},
                             {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(star_area_vector(a, p) == rvec({4, 1, 4, 3}));
    AlphaTree b = make_tree("oioi", {{2, 4}},
                            {{EdgeId::side(1), SpineLabel::directed(1)},
                             {EdgeId::diag(2, 4), SpineLabel::both()},
                             {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(star_area_vector(b, p) == rvec({3, 4, 1, 4}));
    PolygonSpec p3 = build_polygon_parabola(3);
    AlphaTree c = corolla(parse_signature("ooo"));
    CHECK(star_area_vector(c, p3) == rvec({1, 1, 1}));

    // sum is three times the polygon area for every triangulation
    for (const AlphaTree& t : enumerate_max_expanded(parse_signature("ooooo"))) {
        RatVec v = star_area_vector(t, build_polygon_parabola(5));
        Rat sum = 0;
        for (const Rat& x : v) sum += x;
        CHECK(sum == 3 * build_polygon_parabola(5).total_area);
    }

    CHECK_THROWS_MATCHES(star_area_vector(corolla(parse_signature("oioi")), p), Error,
                         ErrorCodeIs(ErrorCode::NotATriangulation));
    CHECK_THROWS_MATCHES(star_area_vector(a, build_polygon_parabola(5)), Error,
                         ErrorCodeIs(ErrorCode::DimensionMismatch));
}

TEST_CASE("subpolygon areas cut at two-sided edges and drain to the outs") {
    PolygonSpec p = build_polygon_parabola(4);
    AlphaTree both = make_tree("oioi", {{1, 3}},
                               {{EdgeId::side(1), SpineLabel::directed(1)},
                                {EdgeId::diag(1, 3), SpineLabel::both()},
                                {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(subpolygon_area_vector(both, p) == rvec({3, 1}));
    AlphaTree wall = make_tree("oioi", {{1, 3}},
                               {{EdgeId::side(1), SpineLabel::directed(1)},
                                {EdgeId::diag(1, 3), SpineLabel::directed(1)},
                                {EdgeId::side(3), SpineLabel::both()}});
    CHECK(subpolygon_area_vector(wall, p) == rvec({4, 0}));
    AlphaTree other = make_tree("oioi", {{2, 4}},
                                {{EdgeId::side(1), SpineLabel::directed(1)},
                                 {EdgeId::diag(2, 4), SpineLabel::both()},
                                 {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(subpolygon_area_vector(other, p) == rvec({3, 1}));
    CHECK_THROWS_MATCHES(subpolygon_area_vector(corolla(parse_signature("oioi")), p), Error,
                         ErrorCodeIs(ErrorCode::AmbiguousFlow));
}

TEST_CASE("the constraint system matches the golden membership pattern") {
    PolygonSpec p = build_polygon_parabola(4);
    AlphaTree top = corolla(parse_signature("oioi"));
    ConstraintSystem cs = lambda_constraints(top, p);
    CHECK(cs.total_area == 4);
    CHECK(lambda_contains(cs, rvec({2, 2})));
    CHECK(!lambda_contains(cs, {Rat(5), Rat(-1)}));
    AlphaTree both = make_tree("oioi", {{1, 3}},
                               {{EdgeId::side(1), SpineLabel::directed(1)},
                                {EdgeId::diag(1, 3), SpineLabel::both()},
                                {EdgeId::side(3), SpineLabel::directed(3)}});
    ConstraintSystem cs2 = lambda_constraints(both, p);
    CHECK(lambda_contains(cs2, rvec({3, 1})));
    CHECK(!lambda_contains(cs2, rvec({4, 0})));
    CHECK_THROWS_MATCHES(lambda_contains(cs2, rvec({1, 1, 2})), Error,
                         ErrorCodeIs(ErrorCode::DimensionMismatch));
}

TEST_CASE("the area flow map hits its golden values and round-trips") {
    PolygonSpec p = build_polygon_parabola(4);
    AlphaTree top = corolla(parse_signature("oioi"));
    CHECK(h_forward(top, p, {{Rat(1, 2), Rat(1, 2)}}) == rvec({2, 2}));
    CHECK(h_inverse(top, p, rvec({4, 0})) == std::vector<RatVec>{{Rat(1), Rat(0)}});
    std::vector<RatVec> third = {{Rat(1, 3), Rat(2, 3)}};
    RatVec img = h_forward(top, p, third);
    CHECK(img == RatVec{Rat(4, 3), Rat(8, 3)});
    CHECK(h_inverse(top, p, img) == third);

    CHECK_THROWS_MATCHES(h_forward(top, p, {{Rat(1, 2), Rat(1, 3)}}), Error,
                         ErrorCodeIs(ErrorCode::NotInSimplex));
    CHECK_THROWS_MATCHES(h_inverse(top, p, rvec({5, -1})), Error,
                         ErrorCodeIs(ErrorCode::NotInLambda));

    std::mt19937 rng(2024);
    for (std::string w : {"oioi", "ooio", "ooioi"}) {
        Signature s = parse_signature(w);
        PolygonSpec poly = build_polygon_parabola(s.n());
        for (const AlphaTree& t : enumerate_cells(s)) {
            auto coords = random_simplex_coords(t, rng);
            RatVec x = h_forward(t, poly, coords);
            CHECK(lambda_contains(lambda_constraints(t, poly), x));
            CHECK(h_inverse(t, poly, x) == coords);
        }
    }
}

TEST_CASE("vertices of a cell satisfy the cell's constraint system") {
    for (std::string w : {"oioi", "ooio"}) {
        Signature s = parse_signature(w);
        PolygonSpec poly = build_polygon_parabola(s.n());
        for (const AlphaTree& t : enumerate_cells(s)) {
            ConstraintSystem cs = lambda_constraints(t, poly);
            for (const AlphaTree& v : max_expansions_of(t))
                CHECK(lambda_contains(cs, subpolygon_area_vector(v, poly)));
        }
    }
}

TEST_CASE("point location recovers the label pattern from coordinates") {
    PolygonSpec p = build_polygon_parabola(4);
    Signature s = parse_signature("oioi");
    std::vector<std::pair<int, int>> diag = {{1, 3}};
    AlphaTree a = spine_labels_from_point(s, diag, p, rvec({3, 1}));
    CHECK(a.labels.at(EdgeId::diag(1, 3)).is_both());
    AlphaTree b = spine_labels_from_point(s, diag, p, {Rat(7, 2), Rat(1, 2)});
    CHECK(b.labels.at(EdgeId::diag(1, 3)).toward == 1);
    CHECK(dimension(b) == 1);
    AlphaTree c = spine_labels_from_point(s, diag, p, rvec({4, 0}));
    CHECK(c.labels.at(EdgeId::diag(1, 3)).toward == 1);
    CHECK(c.labels.at(EdgeId::side(3)).is_both());
    CHECK(dimension(c) == 0);
    CHECK_THROWS_MATCHES(spine_labels_from_point(s, diag, p, rvec({5, -1})), Error,
                         ErrorCodeIs(ErrorCode::NotInSimplex));

    // locating the image of a max-expanded tree's own coordinates finds a
    // tree the vertex expands from
    for (const AlphaTree& v : enumerate_max_expanded(s)) {
        AlphaTree located = spine_labels_from_point(s, v.diagonals, p, subpolygon_area_vector(v, p));
        CHECK(encode_tree(located) == encode_tree(v));
    }
}

TEST_CASE("classical weights multiply leaf counts on both sides") {
    AlphaTree left = make_tree("oiii", {{1, 3}}, {{EdgeId::side(1), SpineLabel::directed(1)}});
    CHECK(loday_vector(left) == rvec({1, 2}));
    AlphaTree right = make_tree("oiii", {{2, 4}}, {{EdgeId::side(1), SpineLabel::directed(1)}});
    CHECK(loday_vector(right) == rvec({2, 1}));
    CHECK(loday_w(left) == rvec({3}));
    CHECK(loday_w(right) == rvec({3}));
    CHECK_THROWS_MATCHES(loday_vector(corolla(parse_signature("oioi"))), Error,
                         ErrorCodeIs(ErrorCode::NotMaxExpanded));

    // weights always sum to the triangle count choose two
    for (const AlphaTree& t : enumerate_max_expanded(parse_signature("ooioi"))) {
        RatVec v = loday_vector(t);
        Rat sum = 0;
        for (const Rat& x : v) sum += x;
        CHECK(sum == binomial(4, 2));
        RatVec w = loday_w(t);
        Rat wsum = 0;
        for (const Rat& x : w) wsum += x;
        CHECK(wsum == sum);
    }
}
