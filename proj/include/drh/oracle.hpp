#ifndef DRH_ORACLE_HPP
#define DRH_ORACLE_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drh/hsolver.hpp"
#include "drh/kterm.hpp"

namespace drh {

// Finite semigroup given by its Cayley table; associativity is validated on
// construction.
class FiniteSemigroup {
public:
    static FiniteSemigroup from_table(std::vector<std::vector<int>> table,
                                      std::vector<std::string> names = {});

    int size() const { return n_; }
    int mul(int a, int b) const { return table_[static_cast<size_t>(a) * n_ + b]; }
    const std::string& name(int e) const { return names_[e]; }

    // Element acting as a two-sided identity, if any.
    std::optional<int> identity() const;

private:
    FiniteSemigroup() = default;
    int n_ = 0;
    std::vector<int> table_;
    std::vector<std::string> names_;
};

// Text format: first token n, then n*n entries row by row; '#'-comment lines
// are skipped except "# names: ..." which supplies element names.
FiniteSemigroup load_semigroup(std::istream& in);
FiniteSemigroup load_semigroup_text(const std::string& text);

using Assignment = std::map<char, int>;

// Homomorphic evaluation; x^(omega+q) maps s to s^(M+q) where M is a multiple
// of the period of <s> at least index + |q| + period. The empty term requires
// element 0 to be an identity.
int eval_term(const FiniteSemigroup& s, const KTermPtr& w, const Assignment& asg);

// Partition into Green's R-classes: a R b iff a S^1 = b S^1.
std::vector<std::vector<int>> r_classes(const FiniteSemigroup& s);

// Elements x with xyx = x for some y.
std::vector<int> regular_elements(const FiniteSemigroup& s);

// Every regular R-class is a subsemigroup forming a group of the given kind:
// singleton for Trivial, abelian group for Abelian, any group for FreeGroup.
bool is_in_drh(const FiniteSemigroup& s, Variety variety);

// Enumerates assignments of content(u) u content(v) into s in lexicographic
// (letter, element) order, up to budget many, and returns the first one where
// the evaluations differ. Rejects semigroups outside the variety.
std::optional<Assignment> find_counterexample(const FiniteSemigroup& s, const KTermPtr& u,
                                              const KTermPtr& v, Variety variety, long budget);

// Built-in battery of small semigroups, with names.
const std::vector<std::pair<std::string, FiniteSemigroup>>& battery();

}  // namespace drh

#endif
