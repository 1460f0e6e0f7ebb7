#ifndef DRH_RANDTERM_HPP
#define DRH_RANDTERM_HPP

#include <random>
#include <vector>

#include "drh/kterm.hpp"

namespace drh {

struct TermGenOptions {
    int target_nodes = 20;       // node count of the generated tree
    int alphabet = 3;            // letters a, b, ...
    double power_density = 0.3;  // chance of a power node when room remains
    int max_power_depth = 6;
    int max_power_nodes = 0;     // > 0 caps the size of power bases
    bool kbar = false;           // admit exponents other than -1
};

KTermPtr random_kterm(std::mt19937_64& rng, const TermGenOptions& opt);

std::vector<KTermPtr> random_corpus(uint64_t seed, int count, int max_nodes, int alphabet);

// Applies 1..rounds value-preserving rewrites at random power subterms:
// x^(w-1) <-> x^(w-1) x^(w-1) x and x^(w-1) <-> ((x^(w-1))^(w-1))^(w-1).
// The result denotes the same element over every DRH.
KTermPtr random_equal_variant(std::mt19937_64& rng, const KTermPtr& t, int rounds = 2);

// Replaces one random letter occurrence; usually changes the value.
KTermPtr random_mutation(std::mt19937_64& rng, const KTermPtr& t, int alphabet);

}  // namespace drh

#endif
