#include "drh/decider.hpp"

#include <deque>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace drh {

namespace {

std::vector<std::string> h_keys(const DrhAutomaton& a) {
    std::vector<std::string> keys;
    keys.reserve(a.size());
    for (const auto& s : a.states) keys.push_back(s.label_h.key());
    return keys;
}

std::string show_address(const std::string& alpha) { return alpha.empty() ? "epsilon" : alpha; }

}  // namespace

Verdict equivalent(const DrhAutomaton& a1, const DrhAutomaton& a2, const HSolver&) {
    auto k1 = h_keys(a1);
    auto k2 = h_keys(a2);

    std::set<std::pair<int, int>> visited;
    std::deque<std::tuple<int, int, std::string>> queue;
    queue.emplace_back(a1.root, a2.root, "");
    visited.insert({a1.root, a2.root});
    while (!queue.empty()) {
        auto [v1, v2, alpha] = queue.front();
        queue.pop_front();
        bool term1 = a1.is_terminal(v1);
        bool term2 = a2.is_terminal(v2);
        if (term1 != term2 || a1.states[static_cast<size_t>(v1)].label !=
                                  a2.states[static_cast<size_t>(v2)].label) {
            std::string l1 = term1 ? "<end>" : std::string(1, a1.states[static_cast<size_t>(v1)].label);
            std::string l2 = term2 ? "<end>" : std::string(1, a2.states[static_cast<size_t>(v2)].label);
            return Verdict::no("label mismatch at " + show_address(alpha) + " (" + l1 + " vs " +
                               l2 + ")");
        }
        if (k1[static_cast<size_t>(v1)] != k2[static_cast<size_t>(v2)])
            return Verdict::no("H-projection mismatch at " + show_address(alpha));
        if (term1) continue;
        const auto& s1 = a1.states[static_cast<size_t>(v1)];
        const auto& s2 = a2.states[static_cast<size_t>(v2)];
        if (visited.insert({s1.t0, s2.t0}).second) queue.emplace_back(s1.t0, s2.t0, alpha + "0");
        if (visited.insert({s1.t1, s2.t1}).second) queue.emplace_back(s1.t1, s2.t1, alpha + "1");
    }
    return Verdict::yes();
}

namespace {

bool per_state_rec(const DrhAutomaton& a1, const DrhAutomaton& a2, int v1, int v2,
                   const std::vector<std::string>& k1, const std::vector<std::string>& k2,
                   std::vector<char>& seen1, std::vector<char>& seen2) {
    if (a1.is_terminal(v1) || a2.is_terminal(v2))
        return a1.is_terminal(v1) && a2.is_terminal(v2);
    bool labels_match =
        a1.states[static_cast<size_t>(v1)].label == a2.states[static_cast<size_t>(v2)].label &&
        k1[static_cast<size_t>(v1)] == k2[static_cast<size_t>(v2)];
    if (!seen1[static_cast<size_t>(v1)] || !seen2[static_cast<size_t>(v2)]) {
        seen1[static_cast<size_t>(v1)] = 1;
        seen2[static_cast<size_t>(v2)] = 1;
        if (!labels_match) return false;
        const auto& s1 = a1.states[static_cast<size_t>(v1)];
        const auto& s2 = a2.states[static_cast<size_t>(v2)];
        return per_state_rec(a1, a2, s1.t0, s2.t0, k1, k2, seen1, seen2) &&
               per_state_rec(a1, a2, s1.t1, s2.t1, k1, k2, seen1, seen2);
    }
    return labels_match;
}

}  // namespace

bool equivalent_per_state(const DrhAutomaton& a1, const DrhAutomaton& a2, const HSolver&) {
    auto k1 = h_keys(a1);
    auto k2 = h_keys(a2);
    std::vector<char> seen1(a1.size(), 0), seen2(a2.size(), 0);
    return per_state_rec(a1, a2, a1.root, a2.root, k1, k2, seen1, seen2);
}

Verdict equal_drh(const KTermPtr& u, const KTermPtr& v, const HSolver& h) {
    LetterSet cu = content(u);
    LetterSet cv = content(v);
    if (!(cu == cv))
        return Verdict::no("content mismatch (" + cu.to_string() + " vs " + cv.to_string() + ")");
    Verdict graphs = equivalent(build_graph(u, h), build_graph(v, h), h);
    if (!graphs.equal) return graphs;
    if (!h.equal_h(h.eval_h(u), h.eval_h(v))) return Verdict::no("H-projection mismatch");
    return Verdict::yes();
}

}  // namespace drh
