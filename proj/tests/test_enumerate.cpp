#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "treeplex/counting.hpp"
#include "treeplex/enumerate.hpp"

#include "helpers.hpp"

using namespace treeplex;

TEST_CASE("cell enumeration hits the golden counts") {
    CHECK(enumerate_cells(parse_signature("oo")).size() == 1);
    CHECK(enumerate_cells(parse_signature("oii")).size() == 1);
    CHECK(enumerate_cells(parse_signature("ooi")).size() == 3);
    CHECK(enumerate_cells(parse_signature("ooo")).size() == 7);
    CHECK(enumerate_cells(parse_signature("oiii")).size() == 3);
    CHECK(enumerate_cells(parse_signature("oioi")).size() == 13);
    CHECK(enumerate_cells(parse_signature("oooo")).size() == 81);
    CHECK(enumerate_cells(parse_signature("ooioi")).size() == 179);
}

TEST_CASE("every enumerated cell is valid, distinct, and sorted") {
    for (std::string w : {"oioi", "ooio", "ooi", "oiii"}) {
        auto cells = enumerate_cells(parse_signature(w));
        std::set<std::string> seen;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            CHECK(validate(cells[i]) == ErrorCode::None);
            CHECK(seen.insert(encode_tree(cells[i])).second);
            if (i + 1 < cells.size()) CHECK(tree_less(cells[i], cells[i + 1]));
        }
    }
}

TEST_CASE("maximally expanded enumeration matches the recursion") {
    for (std::string w : {"oo", "oii", "ooi", "ooo", "oioi", "oiii", "oooo", "ooioi", "oioioi"}) {
        Signature s = parse_signature(w);
        auto verts = enumerate_max_expanded(s);
        CHECK(Int(static_cast<long>(verts.size())) == count_recursive(s));
        for (const AlphaTree& t : verts) {
            CHECK(validate(t) == ErrorCode::None);
            CHECK(is_max_expanded(t));
            CHECK(dimension(t) == 0);
        }
    }
}

TEST_CASE("one-step expansions drop the dimension by exactly one") {
    Signature s = parse_signature("oioi");
    AlphaTree top = corolla(s);
    auto exps = one_step_expansions(top);
    CHECK(exps.size() == 6);
    for (std::string w : {"oioi", "ooio", "ooi"}) {
        for (const AlphaTree& t : enumerate_cells(parse_signature(w))) {
            for (const AlphaTree& e : one_step_expansions(t)) {
                CHECK(validate(e) == ErrorCode::None);
                CHECK(dimension(e) == dimension(t) - 1);
                CHECK(is_expansion(t, e));
            }
        }
    }
}

TEST_CASE("expansion reachability is strict and transitive down to vertices") {
    Signature s = parse_signature("oioi");
    AlphaTree top = corolla(s);
    CHECK(!is_expansion(top, top));
    auto verts = max_expansions_of(top);
    CHECK(verts.size() == 6);
    for (const AlphaTree& v : verts) CHECK(is_expansion(top, v));
    CHECK_THROWS_MATCHES(is_expansion(top, corolla(parse_signature("ooo"))), Error,
                         ErrorCodeIs(ErrorCode::SignatureMismatch));
}

TEST_CASE("the two-sided sentinel only admits its corolla") {
    auto cells = enumerate_cells(parse_signature("oo"));
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].diagonals.empty());
    CHECK(cells[0].labels.empty());
    CHECK(dimension(cells[0]) == 0);
    CHECK_THROWS_MATCHES(enumerate_cells(parse_signature("oi")), Error,
                         ErrorCodeIs(ErrorCode::RangeViolation));
}
