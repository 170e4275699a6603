#ifndef TREEPLEX_RATIONAL_HPP
#define TREEPLEX_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "treeplex/error.hpp"

namespace treeplex {

// All arithmetic is exact: unbounded integers for the counting formulas and
// unbounded rationals for every geometric predicate. No floating point is
// used anywhere except in display-only file export.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

// Renders "p" for integers and "p/q" otherwise (q > 0, fully reduced).
inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

inline std::string int_to_string(const Int& n) {
    return n.str();
}

// Parses "p" or "p/q" with optional leading '-'. Rejects q = 0 and garbage.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::EmptyInput, "empty rational literal");
    auto digits_only = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-') ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        if (!digits_only(s)) throw Error(ErrorCode::IllegalCharacter, "bad rational literal '" + s + "'");
        return Rat(Int(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den))
        throw Error(ErrorCode::IllegalCharacter, "bad rational literal '" + s + "'");
    Int d(den);
    if (d == 0) throw Error(ErrorCode::ZeroDenominator, "rational literal with zero denominator");
    return Rat(Int(num), d);
}

// Exact binomial coefficient; the running product is divisible at each step.
inline Int binomial(long n, long k) {
    if (n < 0 || k < 0) throw Error(ErrorCode::NegativeInput, "binomial with negative argument");
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;
    }
    return result;
}

} // namespace treeplex

#endif
