#include "drh/hsolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace drh {

const char* variety_name(Variety v) {
    switch (v) {
        case Variety::Trivial: return "triv";
        case Variety::Abelian: return "ab";
        case Variety::FreeGroup: return "g";
    }
    return "?";
}

Variety parse_variety(const std::string& s) {
    if (s == "triv") return Variety::Trivial;
    if (s == "ab") return Variety::Abelian;
    if (s == "g") return Variety::FreeGroup;
    throw std::invalid_argument("unknown variety: " + s + " (expected triv, ab or g)");
}

LetterSet HElement::letters() const {
    LetterSet s;
    if (adjoined) return s;
    for (auto& [c, k] : exps) s.add(c);
    for (int16_t w : word) s.add(static_cast<char>(std::abs(w)));
    return s;
}

std::string HElement::key() const {
    if (adjoined) return "I";
    switch (variety) {
        case Variety::Trivial: return "1";
        case Variety::Abelian: {
            std::string k = "ab:";
            for (auto& [c, e] : exps) k += std::string(1, c) + "^" + std::to_string(e) + ";";
            return k;
        }
        case Variety::FreeGroup: {
            std::string k = "fg:";
            for (int16_t w : word) {
                if (w < 0) k += '-';
                k += static_cast<char>(std::abs(w));
            }
            return k;
        }
    }
    return "?";
}

std::vector<int16_t> HSolver::reduce(const std::vector<int16_t>& w) {
    std::vector<int16_t> out;
    out.reserve(w.size());
    for (int16_t s : w) {
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

HElement HSolver::multiply(const HElement& a, const HElement& b) const {
    if (a.variety != variety_ || b.variety != variety_)
        throw std::invalid_argument("multiply: variety mismatch");
    if (a.adjoined) return b;
    if (b.adjoined) return a;
    HElement out{variety_, false, {}, {}};
    switch (variety_) {
        case Variety::Trivial: break;
        case Variety::Abelian: {
            out.exps = a.exps;
            for (auto& [c, e] : b.exps) {
                long long v = (out.exps[c] += e);
                if (v == 0) out.exps.erase(c);
            }
            break;
        }
        case Variety::FreeGroup: {
            out.word = a.word;
            for (int16_t s : b.word) {
                if (!out.word.empty() && out.word.back() == -s)
                    out.word.pop_back();
                else
                    out.word.push_back(s);
            }
            break;
        }
    }
    return out;
}

HElement HSolver::power(const HElement& e, long long q) const {
    if (e.variety != variety_) throw std::invalid_argument("power: variety mismatch");
    if (e.adjoined) return e;
    HElement out{variety_, false, {}, {}};
    switch (variety_) {
        case Variety::Trivial: break;
        case Variety::Abelian:
            for (auto& [c, k] : e.exps)
                if (k * q != 0) out.exps[c] = k * q;
            break;
        case Variety::FreeGroup: {
            std::vector<int16_t> base = e.word;
            if (q < 0) {
                std::vector<int16_t> inv;
                inv.reserve(base.size());
                for (auto it = base.rbegin(); it != base.rend(); ++it)
                    inv.push_back(static_cast<int16_t>(-*it));
                base = std::move(inv);
                q = -q;
            }
            for (long long c = 0; c < q; ++c)
                for (int16_t s : base) {
                    if (!out.word.empty() && out.word.back() == -s)
                        out.word.pop_back();
                    else
                        out.word.push_back(s);
                }
            break;
        }
    }
    return out;
}

HElement HSolver::eval_h(const KTermPtr& w) const {
    switch (w->kind) {
        case KTerm::Kind::Empty: return HElement::identity(variety_);
        case KTerm::Kind::Letter: {
            HElement e{variety_, false, {}, {}};
            if (variety_ == Variety::Abelian) e.exps[w->letter] = 1;
            if (variety_ == Variety::FreeGroup)
                e.word.push_back(static_cast<int16_t>(w->letter));
            return e;
        }
        case KTerm::Kind::Concat: {
            HElement e = HElement::identity(variety_);
            for (auto& p : w->parts) e = multiply(e, eval_h(p));
            return e;
        }
        case KTerm::Kind::Power: return power(eval_h(w->base), w->power_q);
    }
    return HElement::identity(variety_);
}

namespace {

size_t block_end(const PWord& x, size_t p) {
    return x[p].kind == PSym::Kind::Open ? static_cast<size_t>(x.match()[p]) + 1 : p + 1;
}

// Free-group value of a range, emitted with stack cancellation. sign < 0
// evaluates the inverse (reversed blocks, inverted letters, negated group
// exponents).
void fg_emit(const PWord& x, size_t b, size_t e, int sign, std::vector<int16_t>& acc) {
    auto push = [&](int16_t s) {
        if (!acc.empty() && acc.back() == -s)
            acc.pop_back();
        else
            acc.push_back(s);
    };
    std::vector<std::pair<size_t, size_t>> blocks;
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        blocks.emplace_back(p, q);
        p = q;
    }
    if (sign < 0) std::reverse(blocks.begin(), blocks.end());
    for (auto [bb, be] : blocks) {
        if (x[bb].kind == PSym::Kind::Lit) {
            push(static_cast<int16_t>(sign * x[bb].letter));
        } else {
            int64_t q = static_cast<int64_t>(sign) * x[bb].val;
            int inner_sign = q >= 0 ? 1 : -1;
            for (int64_t c = 0; c < std::llabs(q); ++c)
                fg_emit(x, bb + 1, be - 1, inner_sign, acc);
        }
    }
}

void ab_accumulate(const PWord& x, size_t b, size_t e, long long mult,
                   std::map<char, long long>& acc) {
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        if (x[p].kind == PSym::Kind::Lit)
            acc[x[p].letter] += mult;
        else
            ab_accumulate(x, p + 1, q - 1, mult * x[p].val, acc);
        p = q;
    }
}

}  // namespace

HElement HSolver::eval_h_pword(const PWord& x) const {
    if (x.empty()) return HElement::identity(variety_);
    HElement out{variety_, false, {}, {}};
    switch (variety_) {
        case Variety::Trivial: break;
        case Variety::Abelian: {
            std::map<char, long long> acc;
            ab_accumulate(x, 0, x.size(), 1, acc);
            for (auto& [c, e] : acc)
                if (e != 0) out.exps[c] = e;
            break;
        }
        case Variety::FreeGroup: fg_emit(x, 0, x.size(), 1, out.word); break;
    }
    return out;
}

bool HSolver::equal_h(const HElement& a, const HElement& b) const {
    if (a.variety != b.variety || a.variety != variety_)
        throw std::invalid_argument("equal_h: variety mismatch");
    return a == b;
}

KTermPtr HSolver::cf_h(const HElement& e) const {
    if (e.adjoined) return make_empty();
    std::vector<KTermPtr> parts;
    switch (variety_) {
        case Variety::Trivial: break;  // the single group element renders as I
        case Variety::Abelian:
            for (auto& [c, k] : e.exps) {
                if (k > 0)
                    for (long long i = 0; i < k; ++i) parts.push_back(make_letter(c));
                else
                    for (long long i = 0; i < -k; ++i)
                        parts.push_back(make_power(make_letter(c), -1));
            }
            break;
        case Variety::FreeGroup:
            for (int16_t w : e.word) {
                if (w > 0)
                    parts.push_back(make_letter(static_cast<char>(w)));
                else
                    parts.push_back(make_power(make_letter(static_cast<char>(-w)), -1));
            }
            break;
    }
    return make_concat(std::move(parts));
}

}  // namespace drh
