#ifndef DRH_PWORD_HPP
#define DRH_PWORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drh/kterm.hpp"

namespace drh {

// Symbol of a well-parenthesized word over an indexed alphabet: a letter with
// an optional position index, or a parenthesis carrying an integer exponent.
struct PSym {
    enum class Kind : uint8_t { Lit, Open, Close };

    Kind kind = Kind::Lit;
    char letter = 0;   // Lit only; from a-z plus '0'/'#'
    int32_t val = -1;  // Lit: index (-1 = unindexed); Open/Close: exponent q

    static PSym lit(char c, int32_t idx = -1) { return {Kind::Lit, c, idx}; }
    static PSym open(int32_t q) { return {Kind::Open, 0, q}; }
    static PSym close(int32_t q) { return {Kind::Close, 0, q}; }

    bool operator==(const PSym&) const = default;
};

// Well-parenthesized word: matched parentheses with equal exponents and no
// immediately-empty group. The matching table is computed on construction and
// the value is immutable afterwards.
class PWord {
public:
    PWord() = default;
    explicit PWord(std::vector<PSym> syms);

    const std::vector<PSym>& syms() const { return syms_; }
    size_t size() const { return syms_.size(); }
    bool empty() const { return syms_.empty(); }
    const PSym& operator[](size_t i) const { return syms_[i]; }
    // For parentheses, position of the matching parenthesis; -1 for letters.
    const std::vector<int32_t>& match() const { return match_; }

    LetterSet letter_content() const;                    // c_A over the whole word
    LetterSet letter_content(size_t b, size_t e) const;  // c_A over [b,e)
    bool has_index(int32_t i) const;                     // i in c_N
    bool has_index(size_t b, size_t e, int32_t i) const;
    std::vector<int32_t> indices() const;                // c_N, ascending

    bool operator==(const PWord& o) const { return syms_ == o.syms_; }

    static PWord concat(const PWord& a, const PWord& b);

private:
    std::vector<PSym> syms_;
    std::vector<int32_t> match_;
};

struct Marker {
    char letter = 0;
    int32_t idx = -1;
    bool operator==(const Marker&) const = default;
};

// Encoding of a kappa-bar term: letters map to themselves and x^(omega+q)
// maps to [^q <x> ]^q. Unindexed output.
PWord word_encoding(const KTermPtr& w);

// Assigns consecutive indices 1,2,... to the letters, left to right;
// parentheses are unchanged. Input must be unindexed.
PWord annotate(const PWord& x);

// 0_0 followed by the annotated encoding of w#. The '#' letter carries the
// largest index.
PWord build_overline(const KTermPtr& w);

// Tail from position i. Blocks left of the first block containing i are
// dropped; a group containing i contributes its own tail followed by a copy
// of the group with exponent decremented. Empty when i does not occur.
PWord tail(const PWord& x, int32_t i);

// Prefix until the first occurrence of letter a; the whole word when a does
// not occur.
PWord prefix(const PWord& x, char a);

// factor(x, i, a) = prefix(tail(x, i), a).
PWord factor(const PWord& x, int32_t i, char a);

// First occurrence of each letter, in occurrence order. The last entry is the
// principal marker.
std::vector<Marker> first_occurrences(const PWord& x);
Marker principal_marker(const PWord& x);  // throws on the empty word

// Rewrites every [^-2 y ]^-2 group into two [^-1 y ]^-1 copies, innermost
// first. Exponents other than -1/-2 are rejected.
PWord expand(const PWord& x);

// Word over A u A^-1 with the free-group value of the term eta(x) denotes:
// letters map to themselves and a -1 group maps to the reversed inverses of
// its body. Exponents other than -1/-2 are rejected. Encoded as +c / -c.
std::vector<int16_t> linearize(const PWord& x);

// Reads the word back as a kappa-bar term, ignoring indices: groups become
// powers, letter runs become concatenations.
KTermPtr eta(const PWord& x);

// Nested scaffold words: mu_0 = x_0 y_0, mu_{n+1} = x_{n+1} [^{q_n} mu_n ]^{q_n} y_{n+1},
// xi_n = [^{q_n - 1} mu_n ]^{q_n - 1} y_{n+1}. Missing x/y entries default to
// the empty word; qs must provide q_0..q_n. Indices must be pairwise distinct
// across the used entries and x_0 y_0 must be nonempty.
std::pair<PWord, PWord> mu_xi(const std::vector<PWord>& xs, const std::vector<PWord>& ys,
                              const std::vector<int>& qs, int n);

// Each index occurs under at most one letter.
bool index_unique(const PWord& x);

// Debug text form: letters as "a1", "#3", the 0-marker as "0", parentheses as
// "[q" / "]q" with signed q, separated by spaces.
std::string to_debug_string(const PWord& x);
PWord parse_debug_pword(const std::string& text);

}  // namespace drh

#endif
