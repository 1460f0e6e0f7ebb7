#include "drh/pword.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace drh {

PWord::PWord(std::vector<PSym> syms) : syms_(std::move(syms)) {
    match_.assign(syms_.size(), -1);
    std::vector<size_t> stack;
    for (size_t i = 0; i < syms_.size(); ++i) {
        const PSym& s = syms_[i];
        switch (s.kind) {
            case PSym::Kind::Lit: break;
            case PSym::Kind::Open: stack.push_back(i); break;
            case PSym::Kind::Close: {
                if (stack.empty()) throw std::invalid_argument("unmatched closing parenthesis");
                size_t open = stack.back();
                stack.pop_back();
                if (syms_[open].val != s.val)
                    throw std::invalid_argument("parenthesis exponents do not match");
                if (open + 1 == i) throw std::invalid_argument("empty parenthesized group");
                match_[open] = static_cast<int32_t>(i);
                match_[i] = static_cast<int32_t>(open);
                break;
            }
        }
    }
    if (!stack.empty()) throw std::invalid_argument("unmatched opening parenthesis");
}

LetterSet PWord::letter_content() const { return letter_content(0, syms_.size()); }

LetterSet PWord::letter_content(size_t b, size_t e) const {
    LetterSet s;
    for (size_t i = b; i < e; ++i)
        if (syms_[i].kind == PSym::Kind::Lit) s.add(syms_[i].letter);
    return s;
}

bool PWord::has_index(int32_t i) const { return has_index(0, syms_.size(), i); }

bool PWord::has_index(size_t b, size_t e, int32_t i) const {
    if (i < 0) return false;  // unindexed letters carry -1
    for (size_t p = b; p < e; ++p)
        if (syms_[p].kind == PSym::Kind::Lit && syms_[p].val == i) return true;
    return false;
}

std::vector<int32_t> PWord::indices() const {
    std::set<int32_t> s;
    for (const PSym& sym : syms_)
        if (sym.kind == PSym::Kind::Lit && sym.val >= 0) s.insert(sym.val);
    return {s.begin(), s.end()};
}

PWord PWord::concat(const PWord& a, const PWord& b) {
    std::vector<PSym> syms = a.syms_;
    syms.insert(syms.end(), b.syms_.begin(), b.syms_.end());
    return PWord(std::move(syms));
}

PWord word_encoding(const KTermPtr& w) {
    std::vector<PSym> out;
    auto rec = [&](auto&& self, const KTermPtr& t) -> void {
        switch (t->kind) {
            case KTerm::Kind::Empty: break;
            case KTerm::Kind::Letter: out.push_back(PSym::lit(t->letter)); break;
            case KTerm::Kind::Concat:
                for (auto& p : t->parts) self(self, p);
                break;
            case KTerm::Kind::Power:
                out.push_back(PSym::open(t->power_q));
                self(self, t->base);
                out.push_back(PSym::close(t->power_q));
                break;
        }
    };
    rec(rec, w);
    return PWord(std::move(out));
}

PWord annotate(const PWord& x) {
    std::vector<PSym> out = x.syms();
    int32_t next = 1;
    for (PSym& s : out) {
        if (s.kind != PSym::Kind::Lit) continue;
        if (s.val >= 0) throw std::invalid_argument("annotate requires an unindexed word");
        s.val = next++;
    }
    return PWord(std::move(out));
}

PWord build_overline(const KTermPtr& w) {
    PWord enc = word_encoding(w);
    std::vector<PSym> syms = enc.syms();
    syms.push_back(PSym::lit('#'));
    PWord annotated = annotate(PWord(std::move(syms)));
    std::vector<PSym> out;
    out.reserve(annotated.size() + 1);
    out.push_back(PSym::lit('0', 0));
    out.insert(out.end(), annotated.syms().begin(), annotated.syms().end());
    return PWord(std::move(out));
}

namespace {

size_t block_end(const PWord& x, size_t p) {
    return x[p].kind == PSym::Kind::Open ? static_cast<size_t>(x.match()[p]) + 1 : p + 1;
}

void append_range(const PWord& x, size_t b, size_t e, std::vector<PSym>& out) {
    out.insert(out.end(), x.syms().begin() + static_cast<long>(b),
               x.syms().begin() + static_cast<long>(e));
}

void tail_rec(const PWord& x, size_t b, size_t e, int32_t i, std::vector<PSym>& out) {
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        if (x.has_index(p, q, i)) {
            if (x[p].kind == PSym::Kind::Lit) {
                append_range(x, p + 1, e, out);
            } else {
                tail_rec(x, p + 1, q - 1, i, out);
                out.push_back(PSym::open(x[p].val - 1));
                append_range(x, p + 1, q - 1, out);
                out.push_back(PSym::close(x[p].val - 1));
                append_range(x, q, e, out);
            }
            return;
        }
        p = q;
    }
    // i does not occur: the tail is empty.
}

void prefix_rec(const PWord& x, size_t b, size_t e, char a, std::vector<PSym>& out) {
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        bool found = false;
        for (size_t j = p; j < q && !found; ++j)
            found = x[j].kind == PSym::Kind::Lit && x[j].letter == a;
        if (found) {
            if (x[p].kind == PSym::Kind::Open) prefix_rec(x, p + 1, q - 1, a, out);
            return;  // a letter block containing a contributes nothing
        }
        append_range(x, p, q, out);
        p = q;
    }
}

}  // namespace

PWord tail(const PWord& x, int32_t i) {
    std::vector<PSym> out;
    out.reserve(x.size());
    tail_rec(x, 0, x.size(), i, out);
    return PWord(std::move(out));
}

PWord prefix(const PWord& x, char a) {
    std::vector<PSym> out;
    out.reserve(x.size());
    prefix_rec(x, 0, x.size(), a, out);
    return PWord(std::move(out));
}

PWord factor(const PWord& x, int32_t i, char a) { return prefix(tail(x, i), a); }

std::vector<Marker> first_occurrences(const PWord& x) {
    std::vector<Marker> out;
    LetterSet seen;
    for (const PSym& s : x.syms()) {
        if (s.kind != PSym::Kind::Lit || seen.contains(s.letter)) continue;
        seen.add(s.letter);
        out.push_back({s.letter, s.val});
    }
    return out;
}

Marker principal_marker(const PWord& x) {
    auto occ = first_occurrences(x);
    if (occ.empty()) throw std::invalid_argument("principal marker of the empty word");
    return occ.back();
}

namespace {

void expand_rec(const PWord& x, size_t b, size_t e, std::vector<PSym>& out) {
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        if (x[p].kind == PSym::Kind::Lit) {
            out.push_back(x[p]);
        } else {
            int32_t qv = x[p].val;
            if (qv != -1 && qv != -2)
                throw std::invalid_argument("expand: exponent outside {-1,-2}");
            std::vector<PSym> inner;
            expand_rec(x, p + 1, q - 1, inner);
            int copies = qv == -2 ? 2 : 1;
            for (int c = 0; c < copies; ++c) {
                out.push_back(PSym::open(-1));
                out.insert(out.end(), inner.begin(), inner.end());
                out.push_back(PSym::close(-1));
            }
        }
        p = q;
    }
}

void check_b2(const PWord& x) {
    for (const PSym& s : x.syms())
        if (s.kind != PSym::Kind::Lit && s.val != -1 && s.val != -2)
            throw std::invalid_argument("linearize: exponent outside {-1,-2}");
}

void lin_forward(const PWord& x, size_t b, size_t e, std::vector<int16_t>& out);
void lin_inverse(const PWord& x, size_t b, size_t e, std::vector<int16_t>& out);

void lin_power(const PWord& x, size_t b, size_t e, int64_t q, std::vector<int16_t>& out) {
    if (q >= 0)
        for (int64_t c = 0; c < q; ++c) lin_forward(x, b, e, out);
    else
        for (int64_t c = 0; c < -q; ++c) lin_inverse(x, b, e, out);
}

void lin_forward(const PWord& x, size_t b, size_t e, std::vector<int16_t>& out) {
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        if (x[p].kind == PSym::Kind::Lit)
            out.push_back(static_cast<int16_t>(x[p].letter));
        else
            lin_power(x, p + 1, q - 1, x[p].val, out);
        p = q;
    }
}

// Inverse of a product is the reversed product of inverses.
void lin_inverse(const PWord& x, size_t b, size_t e, std::vector<int16_t>& out) {
    std::vector<std::pair<size_t, size_t>> blocks;
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        blocks.emplace_back(p, q);
        p = q;
    }
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
        auto [bb, be] = *it;
        if (x[bb].kind == PSym::Kind::Lit)
            out.push_back(static_cast<int16_t>(-x[bb].letter));
        else
            lin_power(x, bb + 1, be - 1, -static_cast<int64_t>(x[bb].val), out);
    }
}

}  // namespace

PWord expand(const PWord& x) {
    std::vector<PSym> out;
    out.reserve(x.size());
    expand_rec(x, 0, x.size(), out);
    return PWord(std::move(out));
}

std::vector<int16_t> linearize(const PWord& x) {
    check_b2(x);
    std::vector<int16_t> out;
    lin_forward(x, 0, x.size(), out);
    return out;
}

namespace {

KTermPtr eta_rec(const PWord& x, size_t b, size_t e) {
    std::vector<KTermPtr> parts;
    size_t p = b;
    while (p < e) {
        size_t q = block_end(x, p);
        if (x[p].kind == PSym::Kind::Lit)
            parts.push_back(make_letter(x[p].letter));
        else
            parts.push_back(make_power(eta_rec(x, p + 1, q - 1), x[p].val));
        p = q;
    }
    return make_concat(std::move(parts));
}

}  // namespace

KTermPtr eta(const PWord& x) { return eta_rec(x, 0, x.size()); }

std::pair<PWord, PWord> mu_xi(const std::vector<PWord>& xs, const std::vector<PWord>& ys,
                              const std::vector<int>& qs, int n) {
    if (n < 0) throw std::invalid_argument("mu_xi: n must be nonnegative");
    if (static_cast<int>(qs.size()) < n + 1)
        throw std::invalid_argument("mu_xi: need q_0..q_n");
    static const PWord kEmpty;
    auto at = [](const std::vector<PWord>& v, int k) -> const PWord& {
        return k < static_cast<int>(v.size()) ? v[static_cast<size_t>(k)] : kEmpty;
    };

    std::set<int32_t> seen;
    auto check_indices = [&](const PWord& w) {
        for (const PSym& s : w.syms()) {
            if (s.kind != PSym::Kind::Lit || s.val < 0) continue;
            if (!seen.insert(s.val).second)
                throw std::invalid_argument("mu_xi: index occurs more than once");
        }
    };
    for (int k = 0; k <= n; ++k) check_indices(at(xs, k));
    for (int k = 0; k <= n + 1; ++k) check_indices(at(ys, k));

    PWord mu = PWord::concat(at(xs, 0), at(ys, 0));
    if (mu.empty()) throw std::invalid_argument("mu_xi: x_0 y_0 must be nonempty");
    for (int k = 1; k <= n; ++k) {
        std::vector<PSym> syms = at(xs, k).syms();
        syms.push_back(PSym::open(qs[static_cast<size_t>(k - 1)]));
        append_range(mu, 0, mu.size(), syms);
        syms.push_back(PSym::close(qs[static_cast<size_t>(k - 1)]));
        PWord next(std::move(syms));
        mu = PWord::concat(next, at(ys, k));
    }
    std::vector<PSym> xi_syms;
    xi_syms.push_back(PSym::open(qs[static_cast<size_t>(n)] - 1));
    append_range(mu, 0, mu.size(), xi_syms);
    xi_syms.push_back(PSym::close(qs[static_cast<size_t>(n)] - 1));
    PWord xi = PWord::concat(PWord(std::move(xi_syms)), at(ys, n + 1));
    return {mu, xi};
}

bool index_unique(const PWord& x) {
    std::map<int32_t, char> by_index;
    for (const PSym& s : x.syms()) {
        if (s.kind != PSym::Kind::Lit || s.val < 0) continue;
        auto [it, inserted] = by_index.emplace(s.val, s.letter);
        if (!inserted && it->second != s.letter) return false;
    }
    return true;
}

std::string to_debug_string(const PWord& x) {
    std::string out;
    for (const PSym& s : x.syms()) {
        if (!out.empty()) out += ' ';
        switch (s.kind) {
            case PSym::Kind::Lit:
                if (s.letter == '0')
                    out += '0';
                else {
                    out += s.letter;
                    if (s.val >= 0) out += std::to_string(s.val);
                }
                break;
            case PSym::Kind::Open: out += '[' + std::to_string(s.val); break;
            case PSym::Kind::Close: out += ']' + std::to_string(s.val); break;
        }
    }
    return out;
}

PWord parse_debug_pword(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<PSym> out;
    while (in >> tok) {
        if (tok[0] == '[' || tok[0] == ']') {
            int32_t q = static_cast<int32_t>(std::stol(tok.substr(1)));
            out.push_back(tok[0] == '[' ? PSym::open(q) : PSym::close(q));
            continue;
        }
        char c = tok[0];
        if (!((c >= 'a' && c <= 'z') || c == '0' || c == '#'))
            throw std::invalid_argument("bad pword token: " + tok);
        if (tok.size() == 1)
            out.push_back(PSym::lit(c, c == '0' ? 0 : -1));
        else
            out.push_back(PSym::lit(c, static_cast<int32_t>(std::stol(tok.substr(1)))));
    }
    return PWord(std::move(out));
}

}  // namespace drh
