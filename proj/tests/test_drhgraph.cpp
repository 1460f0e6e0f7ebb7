#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "drh/decider.hpp"
#include "drh/drhgraph.hpp"
#include "drh/randterm.hpp"
#include "test_util.hpp"

using namespace drh;
using drh::test::T;

namespace {

// State lookup by factor key.
int state_of(const DrhAutomaton& a, int i, char c) {
    for (size_t v = 0; v < a.size(); ++v)
        if (a.states[v].key_i == i && a.states[v].key_a == c) return static_cast<int>(v);
    return -1;
}

size_t letter_count(const PWord& w) {
    size_t n = 0;
    for (const PSym& s : w.syms())
        if (s.kind == PSym::Kind::Lit) ++n;
    return n;
}

}  // namespace

TEST_CASE("measures") {
    HSolver g(Variety::FreeGroup);

    DrhAutomaton ab = build_graph(T("a b"), g);
    Measures m = measures(ab, ab.root);
    CHECK(m.norm == 1);
    CHECK_FALSE(m.regi.has_value());
    CHECK(m.cum.empty());

    DrhAutomaton loop = build_graph(T("(a b)^(w-1)"), g);
    m = measures(loop, loop.root);
    CHECK_FALSE(m.norm.has_value());
    CHECK(m.regi == 0);
    CHECK(m.cum.to_string() == "{a,b}");

    DrhAutomaton one = DrhAutomaton::trivial(Variety::FreeGroup);
    m = measures(one, one.root);
    CHECK(m.norm == 0);
    CHECK_FALSE(m.regi.has_value());
    CHECK(m.cum.empty());
}

TEST_CASE("regularity index counts the irregular prefix") {
    HSolver g(Variety::FreeGroup);
    // c (ab)^(w-1): the 1-path sheds c after one step.
    DrhAutomaton a = build_graph(T("c (a b)^(w-1)"), g);
    Measures m = measures(a, a.root);
    CHECK_FALSE(m.norm.has_value());
    CHECK(m.regi == 1);
    CHECK(m.cum.to_string() == "{a,b}");
}

TEST_CASE("regular_part") {
    PWord w1 = build_overline(T("(a b)^(w-1)"));
    CHECK(regular_part(w1, 0, '#') == 0);

    PWord w2 = build_overline(T("a b"));
    CHECK_FALSE(regular_part(w2, 0, '#').has_value());

    PWord w3 = build_overline(T("a^(w-1) b"));
    CHECK_FALSE(regular_part(w3, 0, '#').has_value());

    // Precondition: the factor must be nonempty.
    CHECK_THROWS(regular_part(w2, 2, '#'));

    // c (ab)^(w-1): the regular part starts past the c.
    PWord w4 = build_overline(T("c (a b)^(w-1)"));
    auto k = regular_part(w4, 0, '#');
    REQUIRE(k.has_value());
    CHECK(factor(w4, *k, '#').letter_content().to_string() == "{a,b}");
}

TEST_CASE("graph of a single letter") {
    HSolver g(Variety::FreeGroup);
    DrhAutomaton a = build_graph(T("a"), g);
    REQUIRE(a.size() == 2);
    int root = a.root;
    CHECK(a.states[static_cast<size_t>(root)].label == 'a');
    CHECK(a.states[static_cast<size_t>(root)].label_h.adjoined);
    int t0 = a.states[static_cast<size_t>(root)].t0;
    int t1 = a.states[static_cast<size_t>(root)].t1;
    CHECK(a.is_terminal(t0));
    CHECK(a.is_terminal(t1));
}

TEST_CASE("graph of (ab)^(w-1)") {
    HSolver g(Variety::FreeGroup);
    DrhAutomaton a = build_graph(T("(a b)^(w-1)"), g);
    CHECK(a.size() == 5);

    int q0 = state_of(a, 0, '#');
    int q2 = state_of(a, 2, '#');
    int q0b = state_of(a, 0, 'b');
    int q2b = state_of(a, 2, 'b');
    REQUIRE(q0 >= 0);
    REQUIRE(q2 >= 0);
    REQUIRE(q0b >= 0);
    REQUIRE(q2b >= 0);

    CHECK(a.root == q0);
    CHECK(a.states[static_cast<size_t>(q0)].label == 'b');
    CHECK(a.states[static_cast<size_t>(q2)].label == 'b');
    CHECK(a.states[static_cast<size_t>(q0b)].label == 'a');
    CHECK(a.states[static_cast<size_t>(q2b)].label == 'a');
    CHECK(a.states[static_cast<size_t>(q0)].t0 == q0b);
    CHECK(a.states[static_cast<size_t>(q0)].t1 == q2);
    CHECK(a.states[static_cast<size_t>(q2)].t0 == q2b);
    CHECK(a.states[static_cast<size_t>(q2)].t1 == q2);  // 1-self-loop
}

TEST_CASE("H-label of the root of a^(w-1) b") {
    HSolver g(Variety::FreeGroup);
    DrhAutomaton a = build_graph(T("a^(w-1) b"), g);
    const HElement& lh = a.states[static_cast<size_t>(a.root)].label_h;
    CHECK_FALSE(lh.adjoined);
    REQUIRE(lh.word.size() == 1);
    CHECK(lh.word[0] == -static_cast<int16_t>('a'));

    HSolver tr(Variety::Trivial);
    DrhAutomaton atr = build_graph(T("a^(w-1) b"), tr);
    CHECK_FALSE(atr.states[static_cast<size_t>(atr.root)].label_h.adjoined);
}

TEST_CASE("empty term gives the one-state automaton") {
    HSolver g(Variety::FreeGroup);
    DrhAutomaton a = build_graph(make_empty(), g);
    CHECK(a.size() == 1);
    CHECK(a.is_terminal(a.root));
    CHECK(validate(a).ok);
}

TEST_CASE("to_dot") {
    HSolver g(Variety::FreeGroup);
    CHECK(to_dot(DrhAutomaton::trivial(Variety::FreeGroup)) ==
          "digraph drh {\n  rankdir=LR;\n  n0 [shape=doublecircle,label=\"&epsilon;\"];\n}\n");
    std::string dot = to_dot(build_graph(T("a"), g));
    CHECK(dot.find("0,# | a | I") != std::string::npos);
    std::string loop = to_dot(build_graph(T("(a b)^(w-1)"), g));
    CHECK(loop.find("-> n") != std::string::npos);
    // Deterministic output.
    CHECK(loop == to_dot(build_graph(T("(a b)^(w-1)"), g)));
}

TEST_CASE("validator flags broken automata") {
    HSolver g(Variety::FreeGroup);
    DrhAutomaton a = build_graph(T("(a b)^(w-1)"), g);
    CHECK(validate(a).ok);

    DrhAutomaton broken = a;
    broken.states[static_cast<size_t>(broken.root)].label = 'a';  // breaks A.4 disjointness
    CHECK_FALSE(validate(broken).ok);

    DrhAutomaton wrong_h = a;
    wrong_h.states[static_cast<size_t>(wrong_h.root)].label_h =
        HSolver(Variety::FreeGroup).eval_h(T("a"));  // root 0-side norm is finite
    CHECK_FALSE(validate(wrong_h).ok);
}

TEST_CASE("graphs over the corpus validate with the state bound") {
    std::mt19937_64 rng(51);
    auto corpus = random_corpus(99, 120, 40, 4);
    for (Variety v : {Variety::Trivial, Variety::Abelian, Variety::FreeGroup}) {
        HSolver h(v);
        for (const auto& t : corpus) {
            DrhAutomaton a = build_graph(t, h);
            ValidationReport rep = validate(a);
            CHECK(rep.ok);
            if (!rep.ok)
                for (auto& msg : rep.violations) MESSAGE(print_kterm(t), ": ", msg);
            size_t bound = letter_count(build_overline(t)) *
                               static_cast<size_t>(std::max(1, content(t).size())) +
                           1;
            CHECK(a.size() <= bound);
        }
    }
}

TEST_CASE("factor coherence at every state") {
    auto corpus = random_corpus(52, 40, 30, 3);
    HSolver g(Variety::FreeGroup);
    for (const auto& t : corpus) {
        PWord wbar = build_overline(t);
        DrhAutomaton a = build_graph(t, g);
        for (size_t v = 0; v < a.size(); ++v) {
            if (a.is_terminal(static_cast<int>(v))) continue;
            int i = a.states[v].key_i;
            char c = a.states[v].key_a;
            PWord f = factor(wbar, i, c);
            Marker pm = principal_marker(f);
            CHECK(pm.letter == a.states[v].label);
            // The prefix until the marker letter is the factor keyed (i, b).
            CHECK(prefix(f, pm.letter) == factor(wbar, i, pm.letter));
            // The middle letter of the left basic factorization, read off the
            // re-encoded term, matches the state label.
            KTermPtr term = eta(f);
            PWord fresh = annotate(word_encoding(term));
            CHECK(principal_marker(fresh).letter == pm.letter);
        }
    }
}

TEST_CASE("tail of a factor is graph-equivalent to the 1-side factor") {
    auto corpus = random_corpus(53, 25, 24, 3);
    for (Variety variety : {Variety::Trivial, Variety::FreeGroup}) {
        HSolver h(variety);
        for (const auto& t : corpus) {
            PWord wbar = build_overline(t);
            DrhAutomaton a = build_graph(t, h);
            for (size_t v = 0; v < a.size(); ++v) {
                if (a.is_terminal(static_cast<int>(v))) continue;
                int i = a.states[v].key_i;
                char c = a.states[v].key_a;
                PWord f = factor(wbar, i, c);
                Marker pm = principal_marker(f);
                KTermPtr lhs = eta(tail(f, pm.idx));
                KTermPtr rhs = eta(factor(wbar, pm.idx, c));
                CHECK(equivalent(build_graph(lhs, h), build_graph(rhs, h), h).equal);
            }
        }
    }
}

TEST_CASE("marker walk in the regular-part search visits each index once") {
    auto corpus = random_corpus(54, 60, 30, 3);
    for (const auto& t : corpus) {
        PWord wbar = build_overline(t);
        // Exercise the walk from every nonempty factor position (i, #).
        for (int32_t i : wbar.indices()) {
            if (factor(wbar, i, '#').empty()) continue;
            CHECK_NOTHROW(regular_part(wbar, i, '#'));
        }
    }
}
