#ifndef TREEPLEX_SIGNATURE_HPP
#define TREEPLEX_SIGNATURE_HPP

#include <string>
#include <utility>
#include <vector>

#include "treeplex/error.hpp"

namespace treeplex {

// A signature is a cyclic word over {Out, In} attached to the boundary
// positions 1..n of a convex polygon: position j carries the j-th letter.
// Stored as a lowercase string of 'o' (Out) and 'i' (In) characters.
// At least one letter must be Out and the word must have length >= 2.
struct Signature {
    std::string word; // word[j-1] is the letter at position j

    int n() const { return static_cast<int>(word.size()); }

    bool is_out(int pos) const { return word[pos - 1] == 'o'; } // pos is 1-based

    int k() const {
        int c = 0;
        for (char ch : word) c += (ch == 'o');
        return c;
    }

    int l() const { return n() - k(); }

    // Ascending list of the positions carrying an Out label.
    std::vector<int> out_positions() const {
        std::vector<int> out;
        for (int j = 1; j <= n(); ++j)
            if (is_out(j)) out.push_back(j);
        return out;
    }

    // Index (0-based) of an Out position within out_positions(), or -1.
    int out_index(int pos) const {
        int idx = 0;
        for (int j = 1; j <= n(); ++j) {
            if (is_out(j)) {
                if (j == pos) return idx;
                ++idx;
            }
        }
        return -1;
    }

    bool operator==(const Signature& o) const { return word == o.word; }
    bool operator!=(const Signature& o) const { return word != o.word; }
    bool operator<(const Signature& o) const { return word < o.word; }
};

// Accepts any mix of 'o'/'O' and 'i'/'I'. Rejects other characters, words
// shorter than 2 letters, and words without a single Out.
inline Signature parse_signature(const std::string& text) {
    if (text.empty()) throw Error(ErrorCode::EmptyInput, "signature text is empty");
    std::string word;
    word.reserve(text.size());
    for (char c : text) {
        if (c == 'o' || c == 'O') word.push_back('o');
        else if (c == 'i' || c == 'I') word.push_back('i');
        else throw Error(ErrorCode::IllegalCharacter,
                         std::string("signature letter must be 'o' or 'i', got '") + c + "'");
    }
    if (word.size() < 2) throw Error(ErrorCode::TooShort, "signature needs at least 2 letters");
    if (word.find('o') == std::string::npos)
        throw Error(ErrorCode::NoOutgoingLabel, "signature has no outgoing label");
    return Signature{std::move(word)};
}

// Rotating left by r moves the letter at position r+1 to position 1.
inline Signature rotate_signature(const Signature& s, int r) {
    int n = s.n();
    r = ((r % n) + n) % n;
    return Signature{s.word.substr(r) + s.word.substr(0, r)};
}

// Letters are ordered Out < In when choosing the minimal rotation (note this
// is *not* ASCII order: 'o' ranks below 'i').
inline bool rotation_less(const std::string& a, const std::string& b) {
    auto rank = [](char c) { return c == 'o' ? 0 : 1; };
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (rank(a[i]) != rank(b[i])) return rank(a[i]) < rank(b[i]);
    }
    return false;
}

// The lexicographically minimal rotation (Out < In) together with the offset
// r that produces it. Used as the memoization key for counting: the count is
// invariant under rotation. Idempotent: re-canonicalizing returns offset 0.
inline std::pair<Signature, int> canonical_rotation(const Signature& s) {
    Signature best = s;
    int best_r = 0;
    for (int r = 1; r < s.n(); ++r) {
        Signature cand = rotate_signature(s, r);
        if (rotation_less(cand.word, best.word)) {
            best = cand;
            best_r = r;
        }
    }
    return {best, best_r};
}

} // namespace treeplex

#endif
