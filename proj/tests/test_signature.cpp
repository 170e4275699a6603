#include <catch2/catch_amalgamated.hpp>

#include "treeplex/signature.hpp"

#include "helpers.hpp"

using namespace treeplex;

TEST_CASE("parsing accepts both letter cases and validates the alphabet") {
    Signature s = parse_signature("oIoi");
    CHECK(s.word == "oioi");
    CHECK(s.n() == 4);
    CHECK(s.k() == 2);
    CHECK(s.l() == 2);
    CHECK(s.out_positions() == std::vector<int>{1, 3});
    CHECK(s.out_index(1) == 0);
    CHECK(s.out_index(3) == 1);
    CHECK(s.out_index(2) == -1);

    CHECK_THROWS_MATCHES(parse_signature(""), Error, ErrorCodeIs(ErrorCode::EmptyInput));
    CHECK_THROWS_MATCHES(parse_signature("oxo"), Error, ErrorCodeIs(ErrorCode::IllegalCharacter));
    CHECK_THROWS_MATCHES(parse_signature("o"), Error, ErrorCodeIs(ErrorCode::TooShort));
    CHECK_THROWS_MATCHES(parse_signature("iii"), Error, ErrorCodeIs(ErrorCode::NoOutgoingLabel));
}

TEST_CASE("rotation moves position 1 to the front") {
    Signature s{"oiio"};
    CHECK(rotate_signature(s, 0).word == "oiio");
    CHECK(rotate_signature(s, 1).word == "iioo");
    CHECK(rotate_signature(s, 3).word == "ooii");
}

TEST_CASE("canonical rotation minimizes with out-labels ranked first") {
    auto [c, r] = canonical_rotation(Signature{"iioo"});
    CHECK(c.word == "ooii");
    CHECK(r == 2);
    auto [c2, r2] = canonical_rotation(Signature{"oioi"});
    CHECK(c2.word == "oioi");
    CHECK(r2 == 0);
    // the two-out family canonicalizes to o i^a o i^b
    auto [c3, r3] = canonical_rotation(Signature{"ioio"});
    CHECK(c3.word == "oioi");
}
