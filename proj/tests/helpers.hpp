#ifndef TREEPLEX_TESTS_HELPERS_HPP
#define TREEPLEX_TESTS_HELPERS_HPP

#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "treeplex/error.hpp"
#include "treeplex/rational.hpp"

// Matcher for the typed error codes thrown across the library.
struct ErrorCodeIs : Catch::Matchers::MatcherGenericBase {
    treeplex::ErrorCode expected;

    explicit ErrorCodeIs(treeplex::ErrorCode c) : expected(c) {}

    bool match(const treeplex::Error& e) const { return e.code() == expected; }

    std::string describe() const override {
        return std::string("has error code ") + treeplex::error_name(expected);
    }
};

// Shorthand for exact rational vectors in golden values.
inline treeplex::RatVec rvec(std::initializer_list<long> xs) {
    treeplex::RatVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

#endif
