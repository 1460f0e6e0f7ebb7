#ifndef DRH_KTERM_HPP
#define DRH_KTERM_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace drh {

// Set of letters drawn from a-z plus the reserved markers '0' and '#'.
// Cheap value type backed by a bitmask.
class LetterSet {
public:
    LetterSet() = default;

    static int bit_of(char c) {
        if (c >= 'a' && c <= 'z') return c - 'a';
        if (c == '0') return 26;
        if (c == '#') return 27;
        throw std::invalid_argument(std::string("letter out of range: ") + c);
    }

    void add(char c) { bits_ |= (1u << bit_of(c)); }
    bool contains(char c) const { return (bits_ >> bit_of(c)) & 1u; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcount(bits_); }
    uint32_t mask() const { return bits_; }

    LetterSet united(LetterSet o) const { return LetterSet(bits_ | o.bits_); }
    LetterSet intersect(LetterSet o) const { return LetterSet(bits_ & o.bits_); }
    bool subset_of(LetterSet o) const { return (bits_ & ~o.bits_) == 0; }

    std::vector<char> letters() const;
    std::string to_string() const;  // "{a,b,#}"

    bool operator==(const LetterSet&) const = default;

private:
    explicit LetterSet(uint32_t bits) : bits_(bits) {}
    uint32_t bits_ = 0;
};

// Abstract syntax of kappa-bar terms: letters, flattened concatenation and
// (omega+q)-powers. A term is a plain kappa term when every power has q = -1.
struct KTerm;
using KTermPtr = std::shared_ptr<const KTerm>;

struct KTerm {
    enum class Kind { Empty, Letter, Concat, Power };

    Kind kind = Kind::Empty;
    char letter = 0;                // Kind::Letter
    std::vector<KTermPtr> parts;    // Kind::Concat, size >= 2, no Empty/Concat members
    KTermPtr base;                  // Kind::Power, never Empty
    int power_q = 0;                // Kind::Power, exponent offset q in x^(omega+q)
};

KTermPtr make_empty();
KTermPtr make_letter(char c);
// Flattens nested concats and drops empty parts; returns Empty / the single
// part when fewer than two parts remain.
KTermPtr make_concat(std::vector<KTermPtr> parts);
KTermPtr make_power(KTermPtr base, int q);

bool equal_terms(const KTermPtr& a, const KTermPtr& b);
bool is_kappa(const KTermPtr& t);  // every power exponent is -1

LetterSet content(const KTermPtr& t);

// Node count of the left-associated binary tree representation, plus one.
// A single letter has length 2.
long length(const KTermPtr& t);

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

// Grammar: term := "I" | factor+ ; factor := atom power* ;
// atom := LETTER | "(" term ")" ; power := "^w" | "^(w" SIGN INT ")".
// Letters are a-z; '0' and '#' are reserved and rejected. Unless kbar is set,
// only q = -1 powers are accepted.
KTermPtr parse_kterm(const std::string& text, bool kbar = false);

// Deterministic rendering; parse_kterm(print_kterm(t), true) == t structurally.
std::string print_kterm(const KTermPtr& t);

}  // namespace drh

#endif
