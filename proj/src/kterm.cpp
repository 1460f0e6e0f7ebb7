#include "drh/kterm.hpp"

#include <cctype>

namespace drh {

std::vector<char> LetterSet::letters() const {
    std::vector<char> out;
    for (char c = 'a'; c <= 'z'; ++c)
        if (contains(c)) out.push_back(c);
    if (contains('0')) out.push_back('0');
    if (contains('#')) out.push_back('#');
    return out;
}

std::string LetterSet::to_string() const {
    std::string s = "{";
    bool first = true;
    for (char c : letters()) {
        if (!first) s += ',';
        s += c;
        first = false;
    }
    return s + "}";
}

KTermPtr make_empty() {
    static const KTermPtr instance = std::make_shared<KTerm>();
    return instance;
}

KTermPtr make_letter(char c) {
    auto t = std::make_shared<KTerm>();
    t->kind = KTerm::Kind::Letter;
    t->letter = c;
    return t;
}

KTermPtr make_concat(std::vector<KTermPtr> parts) {
    std::vector<KTermPtr> flat;
    for (auto& p : parts) {
        if (!p || p->kind == KTerm::Kind::Empty) continue;
        if (p->kind == KTerm::Kind::Concat)
            flat.insert(flat.end(), p->parts.begin(), p->parts.end());
        else
            flat.push_back(std::move(p));
    }
    if (flat.empty()) return make_empty();
    if (flat.size() == 1) return flat.front();
    auto t = std::make_shared<KTerm>();
    t->kind = KTerm::Kind::Concat;
    t->parts = std::move(flat);
    return t;
}

KTermPtr make_power(KTermPtr base, int q) {
    if (!base || base->kind == KTerm::Kind::Empty)
        throw std::invalid_argument("power of the empty term");
    auto t = std::make_shared<KTerm>();
    t->kind = KTerm::Kind::Power;
    t->base = std::move(base);
    t->power_q = q;
    return t;
}

bool equal_terms(const KTermPtr& a, const KTermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case KTerm::Kind::Empty: return true;
        case KTerm::Kind::Letter: return a->letter == b->letter;
        case KTerm::Kind::Power:
            return a->power_q == b->power_q && equal_terms(a->base, b->base);
        case KTerm::Kind::Concat: {
            if (a->parts.size() != b->parts.size()) return false;
            for (size_t i = 0; i < a->parts.size(); ++i)
                if (!equal_terms(a->parts[i], b->parts[i])) return false;
            return true;
        }
    }
    return false;
}

bool is_kappa(const KTermPtr& t) {
    switch (t->kind) {
        case KTerm::Kind::Empty:
        case KTerm::Kind::Letter: return true;
        case KTerm::Kind::Power: return t->power_q == -1 && is_kappa(t->base);
        case KTerm::Kind::Concat:
            for (auto& p : t->parts)
                if (!is_kappa(p)) return false;
            return true;
    }
    return true;
}

LetterSet content(const KTermPtr& t) {
    LetterSet s;
    switch (t->kind) {
        case KTerm::Kind::Empty: break;
        case KTerm::Kind::Letter: s.add(t->letter); break;
        case KTerm::Kind::Power: s = content(t->base); break;
        case KTerm::Kind::Concat:
            for (auto& p : t->parts) s = s.united(content(p));
            break;
    }
    return s;
}

namespace {

long node_count(const KTermPtr& t) {
    switch (t->kind) {
        case KTerm::Kind::Empty: return 0;
        case KTerm::Kind::Letter: return 1;
        case KTerm::Kind::Power: return 1 + node_count(t->base);
        case KTerm::Kind::Concat: {
            // n-ary concatenation stands for the left-associated binary tree.
            long n = static_cast<long>(t->parts.size()) - 1;
            for (auto& p : t->parts) n += node_count(p);
            return n;
        }
    }
    return 0;
}

}  // namespace

long length(const KTermPtr& t) { return node_count(t) + 1; }

namespace {

class Parser {
public:
    Parser(const std::string& text, bool kbar) : text_(text), kbar_(kbar) {}

    KTermPtr parse() {
        skip_ws();
        if (peek() == 'I') {
            ++pos_;
            skip_ws();
            if (pos_ != text_.size()) throw ParseError("trailing input after I", pos_);
            return make_empty();
        }
        KTermPtr t = parse_term();
        if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
        return t;
    }

private:
    KTermPtr parse_term() {
        std::vector<KTermPtr> parts;
        skip_ws();
        while (pos_ < text_.size() && peek() != ')') {
            parts.push_back(parse_factor());
            skip_ws();
        }
        if (parts.empty()) throw ParseError("expected a term", pos_);
        return make_concat(std::move(parts));
    }

    KTermPtr parse_factor() {
        KTermPtr t = parse_atom();
        skip_ws();
        while (pos_ < text_.size() && peek() == '^') {
            int q = parse_exponent();
            if (!kbar_ && q != -1)
                throw ParseError("exponent w" + signed_str(q) + " needs the kbar flag", pos_);
            if (t->kind == KTerm::Kind::Empty)
                throw ParseError("power of the empty term", pos_);
            t = make_power(std::move(t), q);
            skip_ws();
        }
        return t;
    }

    KTermPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = peek();
        if (c == '(') {
            size_t open = pos_++;
            skip_ws();
            KTermPtr inner;
            if (peek() == 'I') {
                ++pos_;
                inner = make_empty();
                skip_ws();
            } else {
                inner = parse_term();
            }
            if (pos_ >= text_.size() || peek() != ')')
                throw ParseError("unclosed parenthesis", open);
            ++pos_;
            return inner;
        }
        if (c == '0' || c == '#')
            throw ParseError(std::string("reserved letter '") + c + "'", pos_);
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            return make_letter(c);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // "^w" or "^(w" SIGN DIGITS ")"
    int parse_exponent() {
        ++pos_;  // '^'
        if (pos_ < text_.size() && peek() == 'w') {
            ++pos_;
            return 0;
        }
        if (pos_ >= text_.size() || peek() != '(')
            throw ParseError("expected w or (w...) after ^", pos_);
        ++pos_;
        if (pos_ >= text_.size() || peek() != 'w') throw ParseError("expected w", pos_);
        ++pos_;
        if (pos_ >= text_.size() || (peek() != '+' && peek() != '-'))
            throw ParseError("expected + or - in exponent", pos_);
        int sign = peek() == '-' ? -1 : 1;
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected digits in exponent", pos_);
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) throw ParseError("exponent too large", pos_);
            ++pos_;
        }
        if (pos_ >= text_.size() || peek() != ')') throw ParseError("expected )", pos_);
        ++pos_;
        return static_cast<int>(sign * v);
    }

    static std::string signed_str(int q) {
        return (q >= 0 ? "+" : "") + std::to_string(q);
    }

    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    bool kbar_;
    size_t pos_ = 0;
};

void print_rec(const KTermPtr& t, std::string& out) {
    switch (t->kind) {
        case KTerm::Kind::Empty: out += 'I'; break;
        case KTerm::Kind::Letter: out += t->letter; break;
        case KTerm::Kind::Concat:
            for (size_t i = 0; i < t->parts.size(); ++i) {
                if (i) out += ' ';
                print_rec(t->parts[i], out);
            }
            break;
        case KTerm::Kind::Power: {
            if (t->base->kind == KTerm::Kind::Letter) {
                print_rec(t->base, out);
            } else {
                out += '(';
                print_rec(t->base, out);
                out += ')';
            }
            int q = t->power_q;
            if (q == 0)
                out += "^w";
            else if (q < 0)
                out += "^(w-" + std::to_string(-static_cast<long>(q)) + ")";
            else
                out += "^(w+" + std::to_string(q) + ")";
            break;
        }
    }
}

}  // namespace

KTermPtr parse_kterm(const std::string& text, bool kbar) { return Parser(text, kbar).parse(); }

std::string print_kterm(const KTermPtr& t) {
    std::string out;
    print_rec(t, out);
    return out;
}

}  // namespace drh
