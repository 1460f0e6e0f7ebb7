#include "drh/canon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace drh {

WrappedAutomaton wrap(const DrhAutomaton& a, const HSolver& h) {
    size_t n = a.size();
    // Initial partition: terminal flag, letter label and H-label key.
    std::vector<int> cls(n);
    {
        std::map<std::string, int> buckets;
        for (size_t v = 0; v < n; ++v) {
            const auto& s = a.states[v];
            std::string key = a.is_terminal(static_cast<int>(v))
                                  ? std::string("T")
                                  : std::string(1, s.label) + "|" + s.label_h.key();
            auto [it, fresh] = buckets.emplace(key, static_cast<int>(buckets.size()));
            cls[v] = it->second;
        }
    }
    // Refine by successor classes until stable.
    while (true) {
        std::map<std::tuple<int, int, int>, int> buckets;
        std::vector<int> next(n);
        for (size_t v = 0; v < n; ++v) {
            const auto& s = a.states[v];
            std::tuple<int, int, int> key =
                a.is_terminal(static_cast<int>(v))
                    ? std::make_tuple(cls[v], -1, -1)
                    : std::make_tuple(cls[v], cls[static_cast<size_t>(s.t0)],
                                      cls[static_cast<size_t>(s.t1)]);
            auto [it, fresh] = buckets.emplace(key, static_cast<int>(buckets.size()));
            next[v] = it->second;
        }
        if (next == cls) break;
        cls = std::move(next);
    }

    // Quotient states numbered by first appearance in original state order.
    std::vector<int> renumber(n, -1);
    int classes = 0;
    for (size_t v = 0; v < n; ++v)
        if (renumber[static_cast<size_t>(cls[v])] < 0)
            renumber[static_cast<size_t>(cls[v])] = classes++;
    for (size_t v = 0; v < n; ++v) cls[v] = renumber[static_cast<size_t>(cls[v])];

    WrappedAutomaton w;
    w.class_of = cls;
    w.automaton.variety = a.variety;
    w.automaton.states.resize(static_cast<size_t>(classes));
    std::vector<bool> done(static_cast<size_t>(classes), false);
    for (size_t v = 0; v < n; ++v) {
        int c = cls[v];
        if (done[static_cast<size_t>(c)]) {
            // Label coherence: members of one class agree on both labels.
            const auto& have = w.automaton.states[static_cast<size_t>(c)];
            if (have.label != a.states[v].label ||
                !h.equal_h(have.label_h, a.states[v].label_h))
                throw std::logic_error("wrap: labels differ inside an equivalence class");
            continue;
        }
        done[static_cast<size_t>(c)] = true;
        DrhAutomaton::State s;
        s.label = a.states[v].label;
        s.label_h = a.states[v].label_h;
        if (!a.is_terminal(static_cast<int>(v))) {
            s.t0 = cls[static_cast<size_t>(a.states[v].t0)];
            s.t1 = cls[static_cast<size_t>(a.states[v].t1)];
        }
        w.automaton.states[static_cast<size_t>(c)] = std::move(s);
    }
    w.automaton.root = cls[static_cast<size_t>(a.root)];
    return w;
}

namespace {

class PiCf {
public:
    PiCf(const DrhAutomaton& a, const HSolver& h) : a_(a), h_(h) {}

    KTermPtr run(int v) {
        auto it = memo_.find(v);
        if (it != memo_.end()) return it->second;
        KTermPtr t = compute(v);
        memo_.emplace(v, t);
        return t;
    }

private:
    // Product of the 0-side canonical term, the H-label rendering and the
    // letter label of one state on the 1-path.
    KTermPtr slice(int v) {
        const auto& s = a_.states[static_cast<size_t>(v)];
        return make_concat({run(s.t0), h_.cf_h(s.label_h), make_letter(s.label)});
    }

    KTermPtr compute(int v) {
        if (a_.is_terminal(v)) return make_empty();
        // Walk the 1-path until the terminal or the first repeated state.
        std::vector<int> path;
        std::unordered_map<int, size_t> pos;
        int cur = v;
        while (!a_.is_terminal(cur)) {
            auto [it, fresh] = pos.emplace(cur, path.size());
            if (!fresh) {
                // Cycle entered at offset pos[cur].
                size_t entry = it->second;
                Measures m = measures(a_, v);
                size_t regi = static_cast<size_t>(*m.regi);
                size_t ell = std::max(regi, entry);
                std::vector<KTermPtr> head, mid, cyc;
                for (size_t i = 0; i < regi; ++i) head.push_back(slice(path[i]));
                for (size_t i = regi; i < ell; ++i) mid.push_back(slice(path[i]));
                for (size_t i = ell; i < path.size(); ++i) cyc.push_back(slice(path[i]));
                KTermPtr inner = make_power(make_concat(std::move(cyc)), 0);
                mid.push_back(std::move(inner));
                head.push_back(make_power(make_concat(std::move(mid)), 0));
                return make_concat(std::move(head));
            }
            path.push_back(cur);
            cur = a_.states[static_cast<size_t>(cur)].t1;
        }
        std::vector<KTermPtr> parts;
        for (int p : path) parts.push_back(slice(p));
        return make_concat(std::move(parts));
    }

    const DrhAutomaton& a_;
    const HSolver& h_;
    std::unordered_map<int, KTermPtr> memo_;
};

}  // namespace

KTermPtr pi_cf(const WrappedAutomaton& a, const HSolver& h) {
    return PiCf(a.automaton, h).run(a.automaton.root);
}

KTermPtr canonical_form(const KTermPtr& w, const HSolver& h) {
    WrappedAutomaton wrapped = wrap(build_graph(w, h), h);
    KTermPtr head = pi_cf(wrapped, h);
    PWord wbar = build_overline(w);
    if (factor(wbar, 0, '#').empty()) return head;
    auto reg = regular_part(wbar, 0, '#');
    if (!reg) return head;
    KTermPtr tail_cf = h.cf_h(h.eval_h_pword(factor(wbar, *reg, '#')));
    return make_concat({std::move(head), std::move(tail_cf)});
}

KTermPtr strict_kappa(const KTermPtr& t) {
    switch (t->kind) {
        case KTerm::Kind::Empty:
        case KTerm::Kind::Letter: return t;
        case KTerm::Kind::Concat: {
            std::vector<KTermPtr> parts;
            for (auto& p : t->parts) parts.push_back(strict_kappa(p));
            return make_concat(std::move(parts));
        }
        case KTerm::Kind::Power: {
            KTermPtr base = strict_kappa(t->base);
            if (t->power_q != 0) return make_power(std::move(base), t->power_q);
            return make_concat({make_power(base, -1), base});
        }
    }
    return t;
}

}  // namespace drh
