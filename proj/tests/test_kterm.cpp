#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "drh/kterm.hpp"
#include "drh/randterm.hpp"
#include "test_util.hpp"

using namespace drh;
using drh::test::T;

TEST_CASE("parsing atoms and powers") {
    KTermPtr t = parse_kterm("(a b)^(w-1)");
    REQUIRE(t->kind == KTerm::Kind::Power);
    CHECK(t->power_q == -1);
    REQUIRE(t->base->kind == KTerm::Kind::Concat);
    CHECK(t->base->parts.size() == 2);
    CHECK(t->base->parts[0]->letter == 'a');
    CHECK(t->base->parts[1]->letter == 'b');

    KTermPtr a = parse_kterm("a");
    CHECK(a->kind == KTerm::Kind::Letter);
    CHECK(a->letter == 'a');

    CHECK(parse_kterm("I")->kind == KTerm::Kind::Empty);
    CHECK(equal_terms(parse_kterm("ab"), parse_kterm("a b")));
}

TEST_CASE("parsing the two-factor product term") {
    // ((b^(w-1)) a c) ((a b (a^(w-1)))^(w-1)) flattens to four concat parts.
    KTermPtr t = parse_kterm("((b^(w-1)) a c) ((a b (a^(w-1)))^(w-1))");
    REQUIRE(t->kind == KTerm::Kind::Concat);
    REQUIRE(t->parts.size() == 4);
    CHECK(t->parts[0]->kind == KTerm::Kind::Power);
    CHECK(t->parts[0]->base->letter == 'b');
    CHECK(t->parts[1]->letter == 'a');
    CHECK(t->parts[2]->letter == 'c');
    const KTermPtr& last = t->parts[3];
    REQUIRE(last->kind == KTerm::Kind::Power);
    REQUIRE(last->base->kind == KTerm::Kind::Concat);
    REQUIRE(last->base->parts.size() == 3);
    CHECK(last->base->parts[2]->kind == KTerm::Kind::Power);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_kterm("a^("), ParseError);
    CHECK_THROWS_AS(parse_kterm("(a b"), ParseError);
    CHECK_THROWS_AS(parse_kterm(""), ParseError);
    CHECK_THROWS_AS(parse_kterm("a0b"), ParseError);
    CHECK_THROWS_AS(parse_kterm("a#"), ParseError);
    CHECK_THROWS_AS(parse_kterm("aXb"), ParseError);
    // Exponents other than -1 need the kbar flag.
    CHECK_THROWS_AS(parse_kterm("a^w"), ParseError);
    CHECK_THROWS_AS(parse_kterm("a^(w-2)"), ParseError);
    CHECK_THROWS_AS(parse_kterm("a^(w+1)"), ParseError);
    CHECK(parse_kterm("a^w", true)->power_q == 0);
    CHECK(parse_kterm("a^(w-2)", true)->power_q == -2);
    CHECK(parse_kterm("a^(w+3)", true)->power_q == 3);
    // Position is reported.
    try {
        parse_kterm("ab 0c");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 3);
    }
}

TEST_CASE("printing") {
    CHECK(print_kterm(make_power(make_letter('a'), -1)) == "a^(w-1)");
    CHECK(print_kterm(make_power(make_letter('a'), 0)) == "a^w");
    CHECK(print_kterm(make_concat({make_letter('a'), make_power(make_letter('b'), -2)})) ==
          "a b^(w-2)");
    CHECK(print_kterm(make_empty()) == "I");
    CHECK(print_kterm(T("(a b)^(w-1)")) == "(a b)^(w-1)");
    CHECK(print_kterm(make_power(make_power(make_letter('a'), -1), -1)) == "(a^(w-1))^(w-1)");
}

TEST_CASE("round trip on random terms") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 500; ++i) {
        TermGenOptions opt;
        opt.target_nodes = 1 + static_cast<int>(rng() % 40);
        opt.kbar = (i % 2) == 1;
        KTermPtr t = random_kterm(rng, opt);
        CHECK(equal_terms(parse_kterm(print_kterm(t), true), t));
    }
}

TEST_CASE("content") {
    CHECK(content(make_empty()).empty());
    CHECK(content(T("(a b)^(w-1)")).to_string() == "{a,b}");
    CHECK(content(T("((b^(w-1)) a c) ((a b (a^(w-1)))^(w-1))")).to_string() == "{a,b,c}");
}

TEST_CASE("content is a homomorphism into unions") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 200; ++i) {
        TermGenOptions opt;
        opt.target_nodes = 1 + static_cast<int>(rng() % 20);
        KTermPtr x = random_kterm(rng, opt);
        KTermPtr y = random_kterm(rng, opt);
        CHECK(content(make_concat({x, y})) == content(x).united(content(y)));
        CHECK(content(make_power(x, -1)) == content(x));
    }
}

namespace {

// Independent node counter: explicit binary-tree recursion.
long binary_nodes(const KTermPtr& t) {
    switch (t->kind) {
        case KTerm::Kind::Empty: return 0;
        case KTerm::Kind::Letter: return 1;
        case KTerm::Kind::Power: return 1 + binary_nodes(t->base);
        case KTerm::Kind::Concat: {
            // Left-associate: ((p1 p2) p3) ...
            long acc = binary_nodes(t->parts[0]);
            for (size_t i = 1; i < t->parts.size(); ++i) acc += 1 + binary_nodes(t->parts[i]);
            return acc;
        }
    }
    return 0;
}

}  // namespace

TEST_CASE("length") {
    CHECK(length(make_letter('a')) == 2);
    CHECK(length(make_power(make_letter('a'), -1)) == 3);
    // The four-part product term: 6 letters, 3 powers, 5 binary concat nodes.
    KTermPtr fig = T("((b^(w-1)) a c) ((a b (a^(w-1)))^(w-1))");
    CHECK(binary_nodes(fig) == 14);
    CHECK(length(fig) == 15);
}

TEST_CASE("length matches the binary tree count and is monotone") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 200; ++i) {
        TermGenOptions opt;
        opt.target_nodes = 1 + static_cast<int>(rng() % 30);
        opt.kbar = true;
        KTermPtr t = random_kterm(rng, opt);
        CHECK(length(t) == binary_nodes(t) + 1);
        // Strictly monotone under subterm embedding.
        CHECK(length(make_power(t, -1)) > length(t));
        KTermPtr other = random_kterm(rng, opt);
        CHECK(length(make_concat({t, other})) > length(t));
    }
}
