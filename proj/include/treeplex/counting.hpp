#ifndef TREEPLEX_COUNTING_HPP
#define TREEPLEX_COUNTING_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "treeplex/enumerate.hpp"
#include "treeplex/error.hpp"
#include "treeplex/rational.hpp"
#include "treeplex/signature.hpp"

namespace treeplex {

inline Int catalan(long n) {
    if (n < 0) throw Error(ErrorCode::NegativeInput, "Catalan numbers need a nonnegative index");
    return binomial(2 * n, n) / (n + 1);
}

// The signature with k Outs separated by the given runs of Ins: gaps[i] is
// the number of In labels after the (i+1)-th Out.
inline Signature gaps_signature(const std::vector<long>& gaps) {
    std::string word;
    for (long g : gaps) {
        if (g < 0) throw Error(ErrorCode::NegativeInput, "gap lengths must be nonnegative");
        word += 'o';
        word.append(static_cast<std::size_t>(g), 'i');
    }
    return parse_signature(word);
}

// Number of maximally expanded trees, by the recursion on the root edge of
// the word rotated to start with an Out: the root is either two-sided
// (equivalent to replacing the first label by In) or directed outward
// (splitting the tree in two at each possible boundary position). Single-Out
// words count polygon triangulations, a Catalan number; the two-letter
// double-Out word counts its one sentinel tree. Memoized over canonical
// rotations, under which the count is invariant.
inline Int count_recursive(const Signature& s) {
    static std::map<std::string, Int> memo;
    static std::mutex mutex;

    std::string w = canonical_rotation(s).first.word;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
    }
    Int result;
    Signature cs{w};
    if (cs.k() == 1) {
        result = catalan(cs.n() - 2);
    } else if (w == "oo") {
        result = 1;
    } else {
        const int n = cs.n();
        result = count_recursive(Signature{"i" + w.substr(1)});
        for (int j = 2; j <= n - 1; ++j)
            result += count_recursive(Signature{w.substr(0, j)}) *
                      count_recursive(Signature{"o" + w.substr(j)});
    }
    std::lock_guard<std::mutex> lock(mutex);
    return memo.emplace(std::move(w), std::move(result)).first->second;
}

inline Int count_bruteforce(const Signature& s, int cap = 9) {
    if (s.n() > cap)
        throw Error(ErrorCode::CapExceeded,
                    "word length " + std::to_string(s.n()) + " exceeds the brute-force cap " +
                        std::to_string(cap));
    return Int(enumerate_max_expanded(s).size());
}

// Closed form for the double-Out counts, a product of two central binomials
// with an exactly dividing rational factor. The division is checked: a
// remainder would mean the implementation, not the formula, is broken.
inline Int b_value(long l, long m) {
    if (l < 0 || m < 0) throw Error(ErrorCode::NegativeInput, "indices must be nonnegative");
    Int num = binomial(2 * (l + 1), l + 1) * binomial(2 * (m + 1), m + 1) * (l + 1) * (m + 1);
    Int den = Int(2) * (l + m + 1) * (l + m + 2);
    if (num % den != 0)
        throw Error(ErrorCode::NonIntegerResult, "closed form did not divide exactly");
    return num / den;
}

inline Int c_pair_closed(long l, long m) { return b_value(l, m); }

// Checks the partial sum identity
//   sum_{j=0}^{p} C_j C_{N-j} = (C_{N+1} + b_{N-p,p} - b_{N-p-1,p+1}) / 2
// by exact evaluation of both sides.
inline bool partial_catalan_check(long N, long p) {
    if (p < 0 || p > N - 1)
        throw Error(ErrorCode::RangeViolation, "the identity needs 0 <= p <= N-1");
    Int lhs = 0;
    for (long j = 0; j <= p; ++j) lhs += catalan(j) * catalan(N - j);
    Int rhs2 = catalan(N + 1) + b_value(N - p, p) - b_value(N - p - 1, p + 1);
    return rhs2 % 2 == 0 && lhs == rhs2 / 2;
}

// Candidate closed form for the triple-Out counts with gaps (l, 1, 0). This
// is a conjecture to be audited against brute force, not established fact;
// a non-dividing evaluation would refute it and is reported as such.
inline Int c_l10_conjecture(long l) {
    if (l < 0) throw Error(ErrorCode::NegativeInput, "index must be nonnegative");
    Int num = catalan(l + 1) * (l + 1) * 12 * (7 * l * l + 38 * l + 50);
    Int den = Int(l + 3) * (l + 4) * (l + 5);
    if (num % den != 0)
        throw Error(ErrorCode::NonIntegerResult, "conjectured formula did not divide exactly");
    return num / den;
}

} // namespace treeplex

#endif
