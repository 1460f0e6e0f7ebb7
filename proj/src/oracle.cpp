#include "drh/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drh {

FiniteSemigroup FiniteSemigroup::from_table(std::vector<std::vector<int>> table,
                                            std::vector<std::string> names) {
    FiniteSemigroup s;
    s.n_ = static_cast<int>(table.size());
    if (s.n_ == 0) throw std::invalid_argument("semigroup must be nonempty");
    s.table_.reserve(static_cast<size_t>(s.n_) * s.n_);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != s.n_)
            throw std::invalid_argument("Cayley table is not square");
        for (int e : row) {
            if (e < 0 || e >= s.n_) throw std::invalid_argument("Cayley entry out of range");
            s.table_.push_back(e);
        }
    }
    for (int a = 0; a < s.n_; ++a)
        for (int b = 0; b < s.n_; ++b)
            for (int c = 0; c < s.n_; ++c)
                if (s.mul(s.mul(a, b), c) != s.mul(a, s.mul(b, c)))
                    throw std::invalid_argument(
                        "not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                        "," + std::to_string(c) + ")");
    if (names.empty())
        for (int e = 0; e < s.n_; ++e) names.push_back("s" + std::to_string(e));
    if (static_cast<int>(names.size()) != s.n_)
        throw std::invalid_argument("wrong number of element names");
    s.names_ = std::move(names);
    return s;
}

std::optional<int> FiniteSemigroup::identity() const {
    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int x = 0; x < n_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
        if (ok) return e;
    }
    return std::nullopt;
}

FiniteSemigroup load_semigroup(std::istream& in) {
    std::vector<std::string> names;
    std::string line;
    std::string numbers;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') {
            std::istringstream ls(line.substr(1));
            std::string word;
            ls >> word;
            if (word == "names:")
                while (ls >> word) names.push_back(word);
            continue;
        }
        numbers += line + " ";
    }
    std::istringstream ns(numbers);
    int n;
    if (!(ns >> n) || n <= 0) throw std::invalid_argument("expected the semigroup size");
    std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n)));
    for (auto& row : table)
        for (int& e : row)
            if (!(ns >> e)) throw std::invalid_argument("truncated Cayley table");
    int extra;
    if (ns >> extra) throw std::invalid_argument("trailing data after the Cayley table");
    return FiniteSemigroup::from_table(std::move(table), std::move(names));
}

FiniteSemigroup load_semigroup_text(const std::string& text) {
    std::istringstream in(text);
    return load_semigroup(in);
}

namespace {

int power_of(const FiniteSemigroup& s, int base, long e) {
    // e >= 1; repeated multiplication is fine at these sizes.
    int acc = base;
    for (long i = 1; i < e; ++i) acc = s.mul(acc, base);
    return acc;
}

// Index and period of the monogenic subsemigroup generated by x.
std::pair<long, long> index_period(const FiniteSemigroup& s, int x) {
    std::vector<int> seen_at(static_cast<size_t>(s.size()), -1);
    int cur = x;
    long e = 1;
    while (seen_at[static_cast<size_t>(cur)] < 0) {
        seen_at[static_cast<size_t>(cur)] = static_cast<int>(e);
        cur = s.mul(cur, x);
        ++e;
    }
    long index = seen_at[static_cast<size_t>(cur)];
    long period = e - index;
    return {index, period};
}

}  // namespace

int eval_term(const FiniteSemigroup& s, const KTermPtr& w, const Assignment& asg) {
    switch (w->kind) {
        case KTerm::Kind::Empty: {
            auto id = s.identity();
            if (!id || *id != 0)
                throw std::invalid_argument(
                    "the empty term needs element 0 to be an identity");
            return 0;
        }
        case KTerm::Kind::Letter: {
            auto it = asg.find(w->letter);
            if (it == asg.end())
                throw std::invalid_argument(std::string("no assignment for letter ") + w->letter);
            return it->second;
        }
        case KTerm::Kind::Concat: {
            int acc = -1;
            for (auto& p : w->parts) {
                int v = eval_term(s, p, asg);
                acc = acc < 0 ? v : s.mul(acc, v);
            }
            return acc;
        }
        case KTerm::Kind::Power: {
            int base = eval_term(s, w->base, asg);
            long q = w->power_q;
            auto [index, period] = index_period(s, base);
            // Multiple of the period at least index + |q| + period, so the
            // shifted exponent stays in the cyclic kernel.
            long m = period * ((index + std::labs(q) + period + period - 1) / period);
            return power_of(s, base, m + q);
        }
    }
    throw std::logic_error("eval_term: unreachable");
}

std::vector<std::vector<int>> r_classes(const FiniteSemigroup& s) {
    int n = s.size();
    // a R b iff a S^1 = b S^1.
    std::vector<std::set<int>> ideal(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
        ideal[static_cast<size_t>(a)].insert(a);
        for (int x = 0; x < n; ++x) ideal[static_cast<size_t>(a)].insert(s.mul(a, x));
    }
    std::vector<std::vector<int>> classes;
    std::vector<int> cls(static_cast<size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
        if (cls[static_cast<size_t>(a)] >= 0) continue;
        classes.push_back({a});
        cls[static_cast<size_t>(a)] = static_cast<int>(classes.size()) - 1;
        for (int b = a + 1; b < n; ++b)
            if (cls[static_cast<size_t>(b)] < 0 &&
                ideal[static_cast<size_t>(a)] == ideal[static_cast<size_t>(b)]) {
                classes.back().push_back(b);
                cls[static_cast<size_t>(b)] = cls[static_cast<size_t>(a)];
            }
    }
    return classes;
}

std::vector<int> regular_elements(const FiniteSemigroup& s) {
    std::vector<int> out;
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (s.mul(s.mul(x, y), x) == x) {
                out.push_back(x);
                break;
            }
    return out;
}

namespace {

// The class must be closed, contain exactly one idempotent acting as its
// identity, and have inverses within the class.
bool class_is_group(const FiniteSemigroup& s, const std::vector<int>& cls, bool need_abelian) {
    std::set<int> members(cls.begin(), cls.end());
    for (int a : cls)
        for (int b : cls)
            if (!members.count(s.mul(a, b))) return false;
    int idempotent = -1;
    for (int a : cls)
        if (s.mul(a, a) == a) {
            if (idempotent >= 0) return false;
            idempotent = a;
        }
    if (idempotent < 0) return false;
    for (int a : cls)
        if (s.mul(idempotent, a) != a || s.mul(a, idempotent) != a) return false;
    for (int a : cls) {
        bool has_inverse = false;
        for (int b : cls)
            if (s.mul(a, b) == idempotent && s.mul(b, a) == idempotent) {
                has_inverse = true;
                break;
            }
        if (!has_inverse) return false;
    }
    if (need_abelian)
        for (int a : cls)
            for (int b : cls)
                if (s.mul(a, b) != s.mul(b, a)) return false;
    return true;
}

}  // namespace

bool is_in_drh(const FiniteSemigroup& s, Variety variety) {
    auto regular = regular_elements(s);
    std::set<int> reg_set(regular.begin(), regular.end());
    for (const auto& cls : r_classes(s)) {
        bool has_regular = false;
        for (int a : cls) has_regular = has_regular || reg_set.count(a);
        if (!has_regular) continue;
        switch (variety) {
            case Variety::Trivial:
                if (cls.size() != 1) return false;
                break;
            case Variety::Abelian:
                if (!class_is_group(s, cls, true)) return false;
                break;
            case Variety::FreeGroup:
                if (!class_is_group(s, cls, false)) return false;
                break;
        }
    }
    return true;
}

std::optional<Assignment> find_counterexample(const FiniteSemigroup& s, const KTermPtr& u,
                                              const KTermPtr& v, Variety variety, long budget) {
    if (!is_in_drh(s, variety))
        throw std::invalid_argument("semigroup is not in the selected variety");
    LetterSet ls = content(u).united(content(v));
    std::vector<char> letters = ls.letters();
    size_t k = letters.size();
    if (k == 0) {
        // Closed terms: a single (empty) assignment.
        if (budget <= 0) return std::nullopt;
        Assignment empty;
        return eval_term(s, u, empty) != eval_term(s, v, empty) ? std::optional(empty)
                                                                : std::nullopt;
    }
    std::vector<int> odo(k, 0);
    long used = 0;
    while (used < budget) {
        Assignment asg;
        for (size_t i = 0; i < k; ++i) asg[letters[i]] = odo[i];
        if (eval_term(s, u, asg) != eval_term(s, v, asg)) return asg;
        ++used;
        // Advance the odometer; the last letter varies fastest.
        size_t i = k;
        while (i > 0) {
            --i;
            if (++odo[i] < s.size()) break;
            odo[i] = 0;
            if (i == 0) return std::nullopt;  // wrapped around: exhausted
        }
    }
    return std::nullopt;
}

namespace {

FiniteSemigroup cyclic_group(int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g" + std::to_string(a)));
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    }
    return FiniteSemigroup::from_table(std::move(t), std::move(names));
}

FiniteSemigroup left_zero(int n) {
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back("l" + std::to_string(a));
        for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = a;
    }
    return FiniteSemigroup::from_table(std::move(t), std::move(names));
}

FiniteSemigroup symmetric3() {
    // Permutations of {0,1,2} listed by their image tuples.
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw std::logic_error("permutation lookup");
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp{};
            for (int x = 0; x < 3; ++x)
                comp[static_cast<size_t>(x)] =
                    perms[static_cast<size_t>(a)][static_cast<size_t>(
                        perms[static_cast<size_t>(b)][static_cast<size_t>(x)])];
            t[static_cast<size_t>(a)][static_cast<size_t>(b)] = find(comp);
        }
    return FiniteSemigroup::from_table(
        std::move(t), {"e", "s12", "s01", "r120", "r201", "s02"});
}

FiniteSemigroup direct_product(const FiniteSemigroup& a, const FiniteSemigroup& b) {
    int n = a.size() * b.size();
    std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    std::vector<std::string> names;
    auto id = [&](int x, int y) { return x * b.size() + y; };
    for (int x1 = 0; x1 < a.size(); ++x1)
        for (int y1 = 0; y1 < b.size(); ++y1) {
            names.push_back(a.name(x1) + "." + b.name(y1));
            for (int x2 = 0; x2 < a.size(); ++x2)
                for (int y2 = 0; y2 < b.size(); ++y2)
                    t[static_cast<size_t>(id(x1, y1))][static_cast<size_t>(id(x2, y2))] =
                        id(a.mul(x1, x2), b.mul(y1, y2));
        }
    return FiniteSemigroup::from_table(std::move(t), std::move(names));
}

}  // namespace

const std::vector<std::pair<std::string, FiniteSemigroup>>& battery() {
    static const std::vector<std::pair<std::string, FiniteSemigroup>> instance = [] {
        std::vector<std::pair<std::string, FiniteSemigroup>> b;
        b.emplace_back("trivial", FiniteSemigroup::from_table({{0}}, {"e"}));
        b.emplace_back("C2", cyclic_group(2));
        b.emplace_back("C3", cyclic_group(3));
        b.emplace_back("C4", cyclic_group(4));
        b.emplace_back("S3", symmetric3());
        b.emplace_back("LZ2", left_zero(2));
        b.emplace_back("LZ2xC3", direct_product(left_zero(2), cyclic_group(3)));
        return b;
    }();
    return instance;
}

}  // namespace drh
