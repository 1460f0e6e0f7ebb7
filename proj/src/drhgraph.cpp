#include "drh/drhgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_map>

namespace drh {

DrhAutomaton DrhAutomaton::trivial(Variety v) {
    DrhAutomaton a;
    a.variety = v;
    State t;
    t.label_h = HElement::identity(v);
    a.states.push_back(std::move(t));
    a.root = 0;
    return a;
}

std::vector<std::optional<long>> norms(const DrhAutomaton& a) {
    // Distance to the terminal along 1-edges; cycles give no value.
    size_t n = a.size();
    std::vector<std::optional<long>> out(n);
    std::vector<int8_t> state(n, 0);  // 0 fresh, 1 on stack, 2 done
    for (size_t start = 0; start < n; ++start) {
        if (state[start] == 2) continue;
        std::vector<int> path;
        int cur = static_cast<int>(start);
        bool cyclic = false;
        while (true) {
            if (state[cur] == 2) break;
            if (state[cur] == 1) {  // closed a 1-cycle within this walk
                cyclic = true;
                break;
            }
            state[cur] = 1;
            path.push_back(cur);
            if (a.is_terminal(cur)) {
                out[cur] = 0;
                state[cur] = 2;
                path.pop_back();
                break;
            }
            cur = a.states[static_cast<size_t>(cur)].t1;
        }
        bool known_inf = cyclic || (state[cur] == 2 && !out[cur].has_value());
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            if (known_inf)
                out[*it] = std::nullopt;
            else
                out[*it] = *out[a.states[static_cast<size_t>(*it)].t1] + 1;
            state[*it] = 2;
        }
    }
    return out;
}

std::vector<LetterSet> reachable_letters(const DrhAutomaton& a) {
    size_t n = a.size();
    std::vector<uint32_t> mask(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < n; ++v) {
            if (a.is_terminal(static_cast<int>(v))) continue;
            uint32_t m = mask[v];
            m |= 1u << LetterSet::bit_of(a.states[v].label);
            m |= mask[static_cast<size_t>(a.states[v].t0)];
            m |= mask[static_cast<size_t>(a.states[v].t1)];
            if (m != mask[v]) {
                mask[v] = m;
                changed = true;
            }
        }
    }
    std::vector<LetterSet> out(n);
    static const std::string universe = "abcdefghijklmnopqrstuvwxyz0#";
    for (size_t v = 0; v < n; ++v) {
        LetterSet s;
        for (char c : universe)
            if (mask[v] & (1u << LetterSet::bit_of(c))) s.add(c);
        out[v] = s;
    }
    return out;
}

Measures measures(const DrhAutomaton& a, int v) {
    Measures m;
    auto letters = reachable_letters(a);

    // Walk the 1-path; either the terminal is reached or a state repeats.
    std::unordered_map<int, long> seen;
    std::vector<int> path;
    int cur = v;
    while (true) {
        if (a.is_terminal(cur)) {
            m.norm = static_cast<long>(path.size());
            m.regi = std::nullopt;
            return m;
        }
        auto [it, fresh] = seen.emplace(cur, static_cast<long>(path.size()));
        if (!fresh) break;
        path.push_back(cur);
        cur = a.states[static_cast<size_t>(cur)].t1;
    }
    m.norm = std::nullopt;
    LetterSet stable = letters[static_cast<size_t>(cur)];  // content on the cycle
    long regi = 0;
    for (size_t k = 0; k < path.size(); ++k) {
        if (letters[static_cast<size_t>(path[k])] == stable) {
            regi = static_cast<long>(k);
            break;
        }
        regi = static_cast<long>(k + 1);
    }
    m.regi = regi;
    m.cum = stable;
    return m;
}

namespace {

constexpr size_t kWordMemoLimit = 512;  // |wbar| above which factor words are not cached

struct FactorFacts {
    bool empty = true;
    char pm_letter = 0;
    int32_t pm_idx = -1;
    LetterSet content;
};

int64_t fact_key(int32_t i, char a) { return static_cast<int64_t>(i) * 256 + a; }

class GraphBuilder {
public:
    GraphBuilder(PWord wbar, const HSolver& h, bool memo_words)
        : wbar_(std::move(wbar)), solver_(h), memo_words_(memo_words || wbar_.size() <= kWordMemoLimit) {}

    PWord factor_word(int32_t i, char a) {
        if (memo_words_) {
            auto it = words_.find(fact_key(i, a));
            if (it != words_.end()) return it->second;
        }
        PWord f = factor(wbar_, i, a);
        if (memo_words_) words_.emplace(fact_key(i, a), f);
        return f;
    }

    const FactorFacts& facts(int32_t i, char a) {
        auto [it, fresh] = facts_.try_emplace(fact_key(i, a));
        FactorFacts& f = it->second;
        if (!fresh) return f;
        PWord w = factor_word(i, a);
        f.empty = w.empty();
        f.content = w.letter_content();
        if (!f.empty) {
            Marker pm = principal_marker(w);
            f.pm_letter = pm.letter;
            f.pm_idx = pm.idx;
        }
        return f;
    }

    // Walks principal markers from i; empty factor means the regular part is
    // empty, a repeated index means the content there is the cumulative
    // content, and the answer is the first factor on the walk carrying it.
    std::optional<int32_t> regular_part(int32_t i, char a) {
        if (facts(i, a).empty)
            throw std::invalid_argument("regular_part: factor is empty");
        std::set<int32_t> visited;
        int32_t j = i;
        while (!visited.count(j) && !facts(j, a).empty) {
            visited.insert(j);
            j = facts(j, a).pm_idx;
        }
        if (facts(j, a).empty) return std::nullopt;
        LetterSet cum = facts(j, a).content;
        int32_t k = i;
        size_t guard = 0;
        while (!(facts(k, a).content == cum)) {
            k = facts(k, a).pm_idx;
            if (++guard > wbar_.size() + 2)
                throw std::logic_error("regular_part: marker walk did not stabilize");
        }
        return k;
    }

    DrhAutomaton build(BuildTrace* trace) {
        DrhAutomaton a;
        a.variety = solver_.variety();
        if (facts(0, '#').empty) {
            a = DrhAutomaton::trivial(solver_.variety());
            return a;
        }

        std::unordered_map<int64_t, int> ids;
        int terminal = -1;
        std::deque<std::pair<int32_t, char>> queue;
        auto state_of = [&](int32_t i, char c) -> int {
            if (facts(i, c).empty) {
                if (terminal < 0) {
                    terminal = static_cast<int>(a.states.size());
                    DrhAutomaton::State t;
                    t.label_h = HElement::identity(solver_.variety());
                    a.states.push_back(std::move(t));
                }
                return terminal;
            }
            auto [it, fresh] = ids.emplace(fact_key(i, c), static_cast<int>(a.states.size()));
            if (fresh) {
                DrhAutomaton::State s;
                s.key_i = i;
                s.key_a = c;
                s.label_h = HElement::identity(solver_.variety());
                a.states.push_back(std::move(s));
                queue.emplace_back(i, c);
            }
            return it->second;
        };

        a.root = state_of(0, '#');
        while (!queue.empty()) {
            auto [i, c] = queue.front();
            queue.pop_front();
            int id = ids.at(fact_key(i, c));
            const FactorFacts f = facts(i, c);
            char b = f.pm_letter;
            int32_t k = f.pm_idx;
            int t0 = state_of(i, b);
            int t1 = state_of(k, c);
            HElement lh = HElement::identity(solver_.variety());
            if (!facts(i, b).empty) {
                auto reg = regular_part(i, b);
                if (reg) lh = solver_.eval_h_pword(factor_word(*reg, b));
            }
            DrhAutomaton::State& s = a.states[static_cast<size_t>(id)];
            s.t0 = t0;
            s.t1 = t1;
            s.label = b;
            s.label_h = std::move(lh);
        }

        if (trace) {
            std::vector<std::pair<std::pair<int, char>, std::string>> rows;
            for (auto& [key, word] : words_) {
                int32_t i = static_cast<int32_t>(key / 256);
                char c = static_cast<char>(key % 256);
                rows.push_back({{i, c}, to_debug_string(word)});
            }
            std::sort(rows.begin(), rows.end());
            trace->factors = std::move(rows);
        }
        return a;
    }

private:
    PWord wbar_;
    const HSolver& solver_;
    bool memo_words_;
    std::unordered_map<int64_t, FactorFacts> facts_;
    std::unordered_map<int64_t, PWord> words_;
};

}  // namespace

std::optional<int> regular_part(const PWord& wbar, int32_t i, char a) {
    HSolver h(Variety::Trivial);
    GraphBuilder b(wbar, h, false);
    auto r = b.regular_part(i, a);
    if (!r) return std::nullopt;
    return static_cast<int>(*r);
}

DrhAutomaton build_graph(const KTermPtr& w, const HSolver& h, BuildTrace* trace) {
    if (w->kind == KTerm::Kind::Empty) return DrhAutomaton::trivial(h.variety());
    GraphBuilder b(build_overline(w), h, trace != nullptr);
    return b.build(trace);
}

ValidationReport validate(const DrhAutomaton& a) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    size_t n = a.size();
    if (n == 0) {
        fail("no states");
        return rep;
    }

    auto letters = reachable_letters(a);
    auto norm = norms(a);

    std::vector<bool> reached(n, false);
    std::deque<int> queue{a.root};
    reached[static_cast<size_t>(a.root)] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (a.is_terminal(v)) continue;
        for (int t : {a.states[static_cast<size_t>(v)].t0, a.states[static_cast<size_t>(v)].t1}) {
            if (t < 0 || t >= static_cast<int>(n)) continue;
            if (!reached[static_cast<size_t>(t)]) {
                reached[static_cast<size_t>(t)] = true;
                queue.push_back(t);
            }
        }
    }
    for (size_t v = 0; v < n; ++v)
        if (!reached[v]) fail("state " + std::to_string(v) + " unreachable (trim)");

    for (size_t v = 0; v < n; ++v) {
        const auto& s = a.states[v];
        std::string sv = std::to_string(v);
        if (a.is_terminal(static_cast<int>(v))) {
            if (!s.label_h.adjoined) fail("A.1: terminal state " + sv + " has a nonempty H-label");
            if (s.t0 >= 0 || s.t1 >= 0) fail("A.2: terminal state " + sv + " has outgoing transitions");
            continue;
        }
        if (s.label < 'a' || s.label > 'z')
            fail("A.1: state " + sv + " carries a label outside the alphabet");
        if (s.t0 < 0 || s.t1 < 0 || s.t0 >= static_cast<int>(n) || s.t1 >= static_cast<int>(n)) {
            fail("A.3: state " + sv + " lacks a transition");
            continue;
        }
        LetterSet left = letters[static_cast<size_t>(s.t0)];
        if (left.contains(s.label))
            fail("A.4: label of state " + sv + " occurs in its 0-subautomaton");
        LetterSet expect = left;
        expect.add(s.label);
        if (!(letters[v] == expect))
            fail("A.4: letter decomposition fails at state " + sv);
        bool finite0 = norm[static_cast<size_t>(s.t0)].has_value();
        if (s.label_h.adjoined != finite0)
            fail("A.5: H-label emptiness disagrees with 0-side norm at state " + sv);
        if (!finite0) {
            Measures m0 = measures(a, s.t0);
            if (!s.label_h.letters().subset_of(m0.cum))
                fail("A.6: H-label letters escape the 0-side cumulative content at state " + sv);
        }
    }
    return rep;
}

std::string to_dot(const DrhAutomaton& a) {
    HSolver h(a.variety);
    std::ostringstream out;
    out << "digraph drh {\n  rankdir=LR;\n";
    for (size_t v = 0; v < a.size(); ++v) {
        const auto& s = a.states[v];
        out << "  n" << v << " [";
        if (a.is_terminal(static_cast<int>(v))) {
            out << "shape=doublecircle,label=\"&epsilon;\"";
        } else {
            out << "shape=box,label=\"";
            if (s.key_i >= 0) out << s.key_i << "," << s.key_a << " | ";
            out << s.label << " | " << (s.label_h.adjoined ? "I" : print_kterm(h.cf_h(s.label_h)))
                << "\"";
        }
        out << "];\n";
    }
    for (size_t v = 0; v < a.size(); ++v) {
        if (a.is_terminal(static_cast<int>(v))) continue;
        out << "  n" << v << " -> n" << a.states[v].t0 << " [label=\"0\"];\n";
        out << "  n" << v << " -> n" << a.states[v].t1 << " [label=\"1\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace drh
