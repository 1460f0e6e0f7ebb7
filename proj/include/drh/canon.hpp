#ifndef DRH_CANON_HPP
#define DRH_CANON_HPP

#include <vector>

#include "drh/drhgraph.hpp"
#include "drh/hsolver.hpp"
#include "drh/kterm.hpp"

namespace drh {

// Quotient of an automaton by equivalence of state unfoldings, together with
// the class map. No two distinct states of the quotient are equivalent.
struct WrappedAutomaton {
    DrhAutomaton automaton;
    std::vector<int> class_of;  // original state -> quotient state
};

// Partition refinement: the initial partition keys on (terminal flag, letter
// label, H-label key) and is refined by successor classes to a fixpoint.
WrappedAutomaton wrap(const DrhAutomaton& a, const HSolver& h);

// Canonical term of the automaton value. Finite 1-path: the product of
// 0-side canonical terms, H-label canonical forms and letter labels down the
// 1-path. Infinite: the same product up to the regularity index, then an
// omega-power wrapping the stretch up to the least 1-cycle entry and an inner
// omega-power of the cycle product.
KTermPtr pi_cf(const WrappedAutomaton& a, const HSolver& h);

// Canonical form: pi_cf of the wrapped graph of w, concatenated with the
// H-canonical form of the projection of the regular part of w.
KTermPtr canonical_form(const KTermPtr& w, const HSolver& h);

// Rewrites every x^w into x^(w-1) x, producing a plain kappa term.
KTermPtr strict_kappa(const KTermPtr& t);

}  // namespace drh

#endif
