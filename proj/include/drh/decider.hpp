#ifndef DRH_DECIDER_HPP
#define DRH_DECIDER_HPP

#include <optional>
#include <string>

#include "drh/drhgraph.hpp"
#include "drh/hsolver.hpp"
#include "drh/kterm.hpp"

namespace drh {

struct Verdict {
    bool equal = false;
    std::optional<std::string> witness;  // present iff !equal

    static Verdict yes() { return {true, std::nullopt}; }
    static Verdict no(std::string w) { return {false, std::move(w)}; }
};

// Equivalence of the tree unfoldings: both labels must agree at every
// address. Product breadth-first search over reachable state pairs; the
// witness is the shortest mismatching address (lexicographically least among
// those), or "H-projection mismatch at <address>".
Verdict equivalent(const DrhAutomaton& a1, const DrhAutomaton& a2, const HSolver& h);

// Single-state-marking variant: each state is marked visited once and
// revisited pairs only compare labels. Kept for cross-validation against the
// pair-marking search.
bool equivalent_per_state(const DrhAutomaton& a1, const DrhAutomaton& a2, const HSolver& h);

// u equals v over DRH iff their graphs are equivalent and their H-projections
// agree. A content mismatch short-circuits.
Verdict equal_drh(const KTermPtr& u, const KTermPtr& v, const HSolver& h);

}  // namespace drh

#endif
