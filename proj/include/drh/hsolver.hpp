#ifndef DRH_HSOLVER_HPP
#define DRH_HSOLVER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "drh/kterm.hpp"
#include "drh/pword.hpp"

namespace drh {

enum class Variety { Trivial, Abelian, FreeGroup };

const char* variety_name(Variety v);
Variety parse_variety(const std::string& s);  // "triv" | "ab" | "g"

// Value of a term in (free kappa-group over H)^I. The adjoined identity I is
// kept distinct from the group identity: only the empty term projects to I,
// while e.g. a a^(w-1) projects to the group identity.
struct HElement {
    Variety variety = Variety::Trivial;
    bool adjoined = true;                 // the adjoined identity I
    std::map<char, long long> exps;       // Abelian payload, no zero entries
    std::vector<int16_t> word;            // FreeGroup payload, reduced; +c / -c

    static HElement identity(Variety v) { return HElement{v, true, {}, {}}; }

    bool operator==(const HElement&) const = default;

    LetterSet letters() const;
    // Canonical serialization; equal under equal_h iff keys match.
    std::string key() const;
};

class HSolver {
public:
    explicit HSolver(Variety v) : variety_(v) {}

    Variety variety() const { return variety_; }

    // Projection of a kappa-bar term: homomorphic on concatenation, powers map
    // to group powers x^(omega+q) -> x^q. Empty maps to I.
    HElement eval_h(const KTermPtr& w) const;

    // Projection of a well-parenthesized word; agrees with eval_h(eta(x)).
    // Group exponents are evaluated for arbitrary integers.
    HElement eval_h_pword(const PWord& x) const;

    // Equality in (free kappa-group over H)^I. Throws on variety mismatch.
    bool equal_h(const HElement& a, const HElement& b) const;

    // Canonical kappa-term rendering: I maps to the empty term, inverse
    // letters to a^(w-1), abelian exponents in alphabetical letter order.
    KTermPtr cf_h(const HElement& e) const;

    HElement multiply(const HElement& a, const HElement& b) const;
    HElement power(const HElement& e, long long q) const;

    // Stack reduction of a word over A u A^-1; linear time.
    static std::vector<int16_t> reduce(const std::vector<int16_t>& w);

private:
    Variety variety_;
};

}  // namespace drh

#endif
