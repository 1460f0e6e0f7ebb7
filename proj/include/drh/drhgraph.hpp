#ifndef DRH_DRHGRAPH_HPP
#define DRH_DRHGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drh/hsolver.hpp"
#include "drh/kterm.hpp"
#include "drh/pword.hpp"

namespace drh {

// Finite deterministic automaton over {0,1} with a letter label and an
// H-label per state. The terminal state carries the empty label and no
// outgoing transitions; every other state has both transitions.
struct DrhAutomaton {
    struct State {
        int t0 = -1;
        int t1 = -1;
        char label = 0;  // 0 encodes the empty label of the terminal state
        HElement label_h;
        // Factor key when the automaton was built from a term; -1/0 otherwise.
        int key_i = -1;
        char key_a = 0;
    };

    std::vector<State> states;
    int root = 0;
    Variety variety = Variety::Trivial;

    bool is_terminal(int v) const { return states[v].label == 0; }
    size_t size() const { return states.size(); }

    static DrhAutomaton trivial(Variety v);
};

// norm is the number of 1-steps until the terminal state (no value when the
// 1-path cycles); regi is the least depth from which the reachable letter
// sets along the 1-path stay constant (no value when norm is finite); cum is
// that stable letter set (empty when norm is finite).
struct Measures {
    std::optional<long> norm;
    std::optional<long> regi;
    LetterSet cum;
};

Measures measures(const DrhAutomaton& a, int v);

// Letters of all states reachable from each state (terminal label excluded).
std::vector<LetterSet> reachable_letters(const DrhAutomaton& a);

// Per-state 1-step distance to the terminal state; no value on a 1-cycle.
std::vector<std::optional<long>> norms(const DrhAutomaton& a);

// Regular part locator on factors of wbar: walks principal markers from
// position i until the factor empties (result: no value, the regular part is
// empty) or an index repeats; in the latter case returns the least k on the
// marker walk from i whose factor content equals the cumulative content.
// Requires factor(wbar, i, a) to be nonempty.
std::optional<int> regular_part(const PWord& wbar, int32_t i, char a);

// Memo table dump of a graph construction: (i, a) -> factor, in pword debug
// syntax, sorted by (i, a).
struct BuildTrace {
    std::vector<std::pair<std::pair<int, char>, std::string>> factors;
};

// Builds the graph of factors of w: the state for (i,a) is labelled with the
// principal marker letter b of factor(i,a), its 0-successor is the state of
// (i,b), its 1-successor the state of (k,a) for the marker index k, and its
// H-label is the projection of the regular part of the 0-side factor.
// Unreached factors get no state; empty factors collapse to the terminal.
DrhAutomaton build_graph(const KTermPtr& w, const HSolver& h, BuildTrace* trace = nullptr);

// Structural validity: terminal labelling and finality, totality of
// transitions outside the terminal, disjoint letter decomposition along the
// 0-edge, H-label emptiness synchronized with finiteness of the 0-side norm,
// H-label content within the 0-side cumulative content, and reachability.
struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

ValidationReport validate(const DrhAutomaton& a);

// Graphviz rendering; one node per state captioned "i,a | letter | H-label",
// edges labelled 0/1, deterministic ordering.
std::string to_dot(const DrhAutomaton& a);

}  // namespace drh

#endif
