#ifndef DRH_TEST_UTIL_HPP
#define DRH_TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "drh/kterm.hpp"
#include "drh/pword.hpp"

namespace drh::test {

inline KTermPtr T(const std::string& s) { return parse_kterm(s, true); }

struct PWordGenOptions {
    int max_blocks = 6;
    int max_depth = 3;
    int alphabet = 3;
    std::vector<int> qs = {-2, -1, 0, 1};
    double group_density = 0.35;
};

// Random well-parenthesized word over A x N with distinct indices.
class PWordGen {
public:
    PWordGen(std::mt19937_64& rng, PWordGenOptions opt) : rng_(rng), opt_(std::move(opt)) {}

    PWord word() {
        next_index_ = 1;
        std::vector<PSym> syms;
        forest(syms, 0, true);
        return PWord(std::move(syms));
    }

    // Word over letters only with exponents from the given set.
    static PWord with_qs(std::mt19937_64& rng, std::vector<int> qs, int max_blocks, int max_depth,
                         int alphabet = 3) {
        PWordGenOptions opt;
        opt.qs = std::move(qs);
        opt.max_blocks = max_blocks;
        opt.max_depth = max_depth;
        opt.alphabet = alphabet;
        PWordGen g(rng, opt);
        return g.word();
    }

private:
    void forest(std::vector<PSym>& out, int depth, bool force_nonempty) {
        std::uniform_int_distribution<int> nblocks(force_nonempty ? 1 : 0, opt_.max_blocks);
        int n = nblocks(rng_);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        std::uniform_int_distribution<int> letter(0, opt_.alphabet - 1);
        std::uniform_int_distribution<size_t> qpick(0, opt_.qs.size() - 1);
        for (int b = 0; b < n; ++b) {
            if (depth < opt_.max_depth && coin(rng_) < opt_.group_density) {
                out.push_back(PSym::open(opt_.qs[qpick(rng_)]));
                size_t open_at = out.size() - 1;
                forest(out, depth + 1, true);
                out.push_back(PSym::close(out[open_at].val));
            } else {
                out.push_back(PSym::lit(static_cast<char>('a' + letter(rng_)), next_index_++));
            }
        }
    }

    std::mt19937_64& rng_;
    PWordGenOptions opt_;
    int32_t next_index_ = 1;
};

// u_{2n+1}: the nested scaffold with x = (a_1, e, e, ...), y = (e, ...),
// q = (-1, -1, ...); an odd-length word whose tail from 1 has the extremal
// expansion length.
inline PWord u_odd(int n) {
    std::vector<PWord> xs = {PWord({PSym::lit('a', 1)})};
    std::vector<PWord> ys;
    std::vector<int> qs(static_cast<size_t>(n) + 1, -1);
    return mu_xi(xs, ys, qs, n).first;
}

// Fixpoint cancellation: repeatedly delete adjacent inverse pairs in full
// left-to-right passes until no change. Independent of the stack reduction.
inline std::vector<int16_t> naive_reduce(std::vector<int16_t> w) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int16_t> next;
        next.reserve(w.size());
        size_t i = 0;
        while (i < w.size()) {
            if (i + 1 < w.size() && w[i] == -w[i + 1]) {
                i += 2;
                changed = true;
            } else {
                next.push_back(w[i]);
                ++i;
            }
        }
        w = std::move(next);
    }
    return w;
}

}  // namespace drh::test

#endif
