#include <catch2/catch_amalgamated.hpp>

#include "treeplex/tree.hpp"

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
    return t;
}

} // namespace

TEST_CASE("edge identities order sides before their diagonals") {
    CHECK(EdgeId::side(2) == EdgeId::diag(2, 2));
    CHECK(EdgeId::diag(3, 1) == EdgeId::diag(1, 3));
    CHECK(EdgeId::side(1) < EdgeId::diag(1, 3));
    CHECK(EdgeId::diag(1, 3) < EdgeId::side(2));
}

TEST_CASE("component ids name each side of an edge by its least position") {
    auto ids = component_ids(EdgeId::diag(1, 3));
    CHECK(ids.first == 2);  // arc side: positions {2,3}
    CHECK(ids.second == 1); // complement holds position 1
    CHECK(component_positions(4, EdgeId::diag(1, 3), 2) == std::vector<int>{2, 3});
    CHECK(component_positions(4, EdgeId::diag(1, 3), 1) == std::vector<int>{1, 4});
    auto side = component_ids(EdgeId::side(3));
    CHECK(side.first == 3);
    CHECK(side.second == 1);
    auto side1 = component_ids(EdgeId::side(1));
    CHECK(side1.first == 1);
    CHECK(side1.second == 2);
}

TEST_CASE("subdivision faces split along the diagonals") {
    auto faces = subdivision_faces(4, {{1, 3}});
    REQUIRE(faces.size() == 2);
    CHECK(faces[0].corners == std::vector<int>{1, 2, 3});
    CHECK(faces[1].corners == std::vector<int>{1, 3, 4});
    auto whole = subdivision_faces(5, {});
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].corners == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("spine edges are those with outgoing labels beyond both sides") {
    SpineInfo info = compute_spine(parse_signature("oioi"), {});
    CHECK(info.spine == std::vector<EdgeId>{EdgeId::side(1), EdgeId::side(3)});
    SpineInfo with_diag = compute_spine(parse_signature("oioi"), {{1, 3}});
    CHECK(with_diag.spine ==
          std::vector<EdgeId>{EdgeId::side(1), EdgeId::diag(1, 3), EdgeId::side(3)});
    // single out: the spine is just that external edge
    SpineInfo single = compute_spine(parse_signature("oii"), {});
    CHECK(single.spine == std::vector<EdgeId>{EdgeId::side(1)});
}

TEST_CASE("validation accepts the top cell and rejects broken labelings") {
    AlphaTree top = corolla(parse_signature("oioi"));
    CHECK(validate(top) == ErrorCode::None);

    AlphaTree sink = make_tree("oioi", {}, {{EdgeId::side(1), SpineLabel::both()},
                                            {EdgeId::side(3), SpineLabel::both()}});
    CHECK(validate(sink) == ErrorCode::SinkVertex);

    AlphaTree crossing = make_tree("ooooo", {{1, 3}, {2, 4}}, {});
    CHECK(validate(crossing) == ErrorCode::CrossingDiagonals);

    AlphaTree offspine = make_tree("oioi", {{1, 3}},
                                   {{EdgeId::side(1), SpineLabel::directed(1)},
                                    {EdgeId::side(2), SpineLabel::both()},
                                    {EdgeId::diag(1, 3), SpineLabel::both()},
                                    {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(validate(offspine) == ErrorCode::SpineMismatch);

    AlphaTree missing = make_tree("oioi", {{1, 3}},
                                  {{EdgeId::side(1), SpineLabel::directed(1)},
                                   {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(validate(missing) == ErrorCode::SpineMismatch);

    AlphaTree inward = make_tree("oioi", {},
                                 {{EdgeId::side(1), SpineLabel::directed(2)},
                                  {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(validate(inward) == ErrorCode::BadExternalLabel);

    AlphaTree sentinel;
    sentinel.sig = parse_signature("oo");
    CHECK(validate(sentinel) == ErrorCode::None);
}

TEST_CASE("dimension counts missing diagonals plus surplus out-degrees") {
    Signature s = parse_signature("oioi");
    CHECK(dimension(corolla(s)) == 2); // n + k - 4
    AlphaTree edge = make_tree("oioi", {{1, 3}},
                               {{EdgeId::side(1), SpineLabel::directed(1)},
                                {EdgeId::diag(1, 3), SpineLabel::directed(1)},
                                {EdgeId::side(3), SpineLabel::directed(3)}});
    REQUIRE(validate(edge) == ErrorCode::None);
    CHECK(dimension(edge) == 1);
    AlphaTree vertex = make_tree("oioi", {{1, 3}},
                                 {{EdgeId::side(1), SpineLabel::directed(1)},
                                  {EdgeId::diag(1, 3), SpineLabel::both()},
                                  {EdgeId::side(3), SpineLabel::directed(3)}});
    REQUIRE(validate(vertex) == ErrorCode::None);
    CHECK(dimension(vertex) == 0);
    CHECK(is_max_expanded(vertex));
    CHECK(!is_max_expanded(edge));
}

TEST_CASE("encoding is unique per tree and stable under map order") {
    AlphaTree a = make_tree("oioi", {{1, 3}},
                            {{EdgeId::side(3), SpineLabel::directed(3)},
                             {EdgeId::side(1), SpineLabel::directed(1)},
                             {EdgeId::diag(1, 3), SpineLabel::both()}});
    AlphaTree b = make_tree("oioi", {{1, 3}},
                            {{EdgeId::side(1), SpineLabel::directed(1)},
                             {EdgeId::diag(1, 3), SpineLabel::both()},
                             {EdgeId::side(3), SpineLabel::directed(3)}});
    CHECK(encode_tree(a) == encode_tree(b));
    CHECK(!tree_less(a, b));
    CHECK(!tree_less(b, a));
}

TEST_CASE("rotation relabels positions and re-canonicalizes directions") {
    AlphaTree t = make_tree("oioi", {{1, 3}},
                            {{EdgeId::side(1), SpineLabel::directed(1)},
                             {EdgeId::diag(1, 3), SpineLabel::both()},
                             {EdgeId::side(3), SpineLabel::directed(3)}});
    AlphaTree r = rotate_tree(t, 2);
    CHECK(r.sig.word == "oioi");
    CHECK(validate(r) == ErrorCode::None);
    // rotating all the way around restores the original
    AlphaTree back = rotate_tree(r, 2);
    CHECK(encode_tree(back) == encode_tree(t));
    for (int rr = 0; rr < 4; ++rr) {
        AlphaTree once = rotate_tree(t, rr);
        CHECK(once.sig.word == rotate_signature(t.sig, rr).word);
        CHECK(validate(once) == ErrorCode::None);
        CHECK(dimension(once) == dimension(t));
    }
}
