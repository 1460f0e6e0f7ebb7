#include "drh/randterm.hpp"

#include <functional>

namespace drh {

namespace {

KTermPtr gen(std::mt19937_64& rng, const TermGenOptions& opt, int nodes, int power_depth) {
    if (nodes <= 1) {
        std::uniform_int_distribution<int> pick(0, opt.alphabet - 1);
        return make_letter(static_cast<char>('a' + pick(rng)));
    }
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    bool can_power = power_depth < opt.max_power_depth &&
                     (opt.max_power_nodes <= 0 || nodes - 1 <= opt.max_power_nodes);
    if (can_power && (nodes == 2 || coin(rng) < opt.power_density)) {
        int q = -1;
        if (opt.kbar) {
            std::uniform_int_distribution<int> qs(-2, 1);
            q = qs(rng);
        }
        return make_power(gen(rng, opt, nodes - 1, power_depth + 1), q);
    }
    if (nodes == 2) return gen(rng, opt, 1, power_depth);
    std::uniform_int_distribution<int> split(1, nodes - 2);
    int left = split(rng);
    return make_concat(
        {gen(rng, opt, left, power_depth), gen(rng, opt, nodes - 1 - left, power_depth)});
}

}  // namespace

KTermPtr random_kterm(std::mt19937_64& rng, const TermGenOptions& opt) {
    return gen(rng, opt, std::max(1, opt.target_nodes), 0);
}

std::vector<KTermPtr> random_corpus(uint64_t seed, int count, int max_nodes, int alphabet) {
    std::mt19937_64 rng(seed);
    std::vector<KTermPtr> out;
    out.reserve(static_cast<size_t>(count));
    std::uniform_int_distribution<int> size_pick(2, max_nodes);
    std::uniform_int_distribution<int> alpha_pick(1, alphabet);
    for (int i = 0; i < count; ++i) {
        TermGenOptions opt;
        opt.target_nodes = size_pick(rng);
        opt.alphabet = alpha_pick(rng);
        out.push_back(random_kterm(rng, opt));
    }
    return out;
}

namespace {

void collect_power_paths(const KTermPtr& t, std::vector<const KTerm*>& powers) {
    switch (t->kind) {
        case KTerm::Kind::Empty:
        case KTerm::Kind::Letter: return;
        case KTerm::Kind::Concat:
            for (auto& p : t->parts) collect_power_paths(p, powers);
            return;
        case KTerm::Kind::Power:
            if (t->power_q == -1) powers.push_back(t.get());
            collect_power_paths(t->base, powers);
            return;
    }
}

KTermPtr replace_node(const KTermPtr& t, const KTerm* target, const KTermPtr& replacement) {
    if (t.get() == target) return replacement;
    switch (t->kind) {
        case KTerm::Kind::Empty:
        case KTerm::Kind::Letter: return t;
        case KTerm::Kind::Concat: {
            std::vector<KTermPtr> parts;
            for (auto& p : t->parts) parts.push_back(replace_node(p, target, replacement));
            return make_concat(std::move(parts));
        }
        case KTerm::Kind::Power: {
            KTermPtr base = replace_node(t->base, target, replacement);
            return base == t->base ? t : make_power(std::move(base), t->power_q);
        }
    }
    return t;
}

}  // namespace

KTermPtr random_equal_variant(std::mt19937_64& rng, const KTermPtr& t, int rounds) {
    KTermPtr cur = t;
    for (int r = 0; r < rounds; ++r) {
        std::vector<const KTerm*> powers;
        collect_power_paths(cur, powers);
        if (powers.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, powers.size() - 1);
        const KTerm* chosen = powers[pick(rng)];
        KTermPtr p = make_power(chosen->base, chosen->power_q);
        KTermPtr replacement;
        if (rng() & 1) {
            // x^(w-1) = x^(w-1) x^(w-1) x
            replacement = make_concat({p, p, chosen->base});
        } else {
            // x^(w-1) = ((x^(w-1))^(w-1))^(w-1)
            replacement = make_power(make_power(p, -1), -1);
        }
        cur = replace_node(cur, chosen, replacement);
    }
    return cur;
}

KTermPtr random_mutation(std::mt19937_64& rng, const KTermPtr& t, int alphabet) {
    std::vector<const KTerm*> letters;
    std::function<void(const KTermPtr&)> collect = [&](const KTermPtr& u) {
        switch (u->kind) {
            case KTerm::Kind::Letter: letters.push_back(u.get()); break;
            case KTerm::Kind::Concat:
                for (auto& p : u->parts) collect(p);
                break;
            case KTerm::Kind::Power: collect(u->base); break;
            case KTerm::Kind::Empty: break;
        }
    };
    collect(t);
    if (letters.empty()) return t;
    std::uniform_int_distribution<size_t> pick(0, letters.size() - 1);
    std::uniform_int_distribution<int> letter_pick(0, alphabet - 1);
    const KTerm* chosen = letters[pick(rng)];
    char fresh = static_cast<char>('a' + letter_pick(rng));
    if (fresh == chosen->letter) fresh = static_cast<char>('a' + (fresh - 'a' + 1) % alphabet);
    return replace_node(t, chosen, make_letter(fresh));
}

}  // namespace drh
