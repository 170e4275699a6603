#include <map>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "treeplex/linalg.hpp"

#include "helpers.hpp"

using namespace treeplex;

namespace {

// Reference eliminator without any pruning, for cross-checking: combines
// every positive/negative pair in fixed variable order.
bool naive_feasible(std::vector<Inequality> system) {
    if (system.empty()) return true;
    const std::size_t vars = system[0].coeffs.size();
    for (std::size_t v = 0; v < vars; ++v) {
        std::vector<Inequality> pos, neg, rest;
        for (Inequality& q : system) {
            if (q.coeffs[v] > 0) pos.push_back(q);
            else if (q.coeffs[v] < 0) neg.push_back(q);
            else rest.push_back(q);
        }
        system = rest;
        for (const Inequality& p : pos)
            for (const Inequality& m : neg) {
                Inequality q;
                q.coeffs.resize(vars);
                Rat a = p.coeffs[v], b = -m.coeffs[v];
                for (std::size_t j = 0; j < vars; ++j)
                    q.coeffs[j] = p.coeffs[j] / a + m.coeffs[j] / b;
                q.rhs = p.rhs / a + m.rhs / b;
                system.push_back(std::move(q));
            }
    }
    for (const Inequality& q : system)
        if (q.rhs > 0) return false;
    return true;
}

} // namespace

TEST_CASE("matrix and affine ranks") {
    CHECK(matrix_rank({}) == 0);
    CHECK(matrix_rank({rvec({1, 0}), rvec({0, 1})}) == 2);
    CHECK(matrix_rank({rvec({1, 2}), rvec({2, 4})}) == 1);
    CHECK(matrix_rank({rvec({0, 0}), rvec({0, 0})}) == 0);
    CHECK(affine_rank({}) == -1);
    CHECK(affine_rank({rvec({5})}) == 0);
    CHECK(affine_rank({rvec({0, 0}), rvec({1, 0}), rvec({0, 1}), rvec({1, 1})}) == 2);
    CHECK(affine_rank({rvec({0, 0}), rvec({1, 1}), rvec({2, 2})}) == 1);
}

TEST_CASE("feasibility of small hand-built systems") {
    CHECK(fm_feasible({}));
    // a >= 1, -a >= 0 has no solution
    CHECK(!fm_feasible({{rvec({1}), Rat(1)}, {rvec({-1}), Rat(0)}}));
    CHECK(fm_feasible({{rvec({1}), Rat(1)}, {rvec({-1}), Rat(-2)}}));
    // constant contradiction
    CHECK(!fm_feasible({{rvec({0}), Rat(1)}}));
    CHECK(fm_feasible({{rvec({0}), Rat(0)}}));
    // 2D wedge: x >= 1, y >= 1, -(x+y) >= -2 forces x = y = 1
    CHECK(fm_feasible({{rvec({1, 0}), Rat(1)}, {rvec({0, 1}), Rat(1)}, {rvec({-1, -1}), Rat(-2)}}));
    CHECK(!fm_feasible({{rvec({1, 0}), Rat(1)}, {rvec({0, 1}), Rat(1)}, {rvec({-1, -1}), Rat(-1)}}));
    CHECK_THROWS_MATCHES(fm_feasible({{rvec({1, 0}), Rat(0)}, {rvec({1}), Rat(0)}}), Error,
                         ErrorCodeIs(ErrorCode::DimensionMismatch));
}

TEST_CASE("pruned elimination agrees with the unpruned reference") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> rows(1, 6);
    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Inequality> sys;
        int m = rows(rng);
        for (int i = 0; i < m; ++i) {
            Inequality q;
            for (int j = 0; j < 3; ++j) q.coeffs.push_back(Rat(coeff(rng)));
            q.rhs = Rat(coeff(rng));
            sys.push_back(std::move(q));
        }
        bool expected = naive_feasible(sys);
        (expected ? feasible_seen : infeasible_seen)++;
        CHECK(fm_feasible(sys) == expected);
    }
    // the sample must exercise both outcomes to mean anything
    CHECK(feasible_seen > 20);
    CHECK(infeasible_seen > 20);
}

TEST_CASE("extreme points of simple hulls") {
    std::vector<RatVec> square = {rvec({0, 0}), rvec({1, 0}), rvec({0, 1}), rvec({1, 1}),
                                  {Rat(1, 2), Rat(1, 2)}};
    CHECK(extreme_points(square).size() == 4);
    CHECK(!is_extreme_point(square, {Rat(1, 2), Rat(1, 2)}));
    CHECK(is_extreme_point(square, rvec({1, 1})));
    std::vector<RatVec> segment = {rvec({0}), rvec({1}), rvec({2})};
    auto ext = extreme_points(segment);
    REQUIRE(ext.size() == 2);
    CHECK(ext[0] == rvec({0}));
    CHECK(ext[1] == rvec({2}));
    // single point and duplicates
    CHECK(extreme_points({rvec({3, 4}), rvec({3, 4})}).size() == 1);
    // points on a hyperplane in a bigger space still resolve
    std::vector<RatVec> tri = {rvec({2, 0, 0}), rvec({0, 2, 0}), rvec({0, 0, 2}),
                               {Rat(2, 3), Rat(2, 3), Rat(2, 3)}};
    CHECK(extreme_points(tri).size() == 3);
}
