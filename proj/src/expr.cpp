#include "braidties/expr.hpp"

#include <cctype>
#include <limits>

namespace braidties {

namespace {

class Parser {
public:
    Parser(std::string_view text, int n) : s_(text), n_(n) {}

    Element parse() {
        Element e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    long integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) {
            pos_ = start;
            fail("integer too large");
        }
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    int index(long i, std::size_t at) const {
        if (i < 1 || i > n_ - 1) throw ParseError("generator index " + std::to_string(i) + " out of range for n = " + std::to_string(n_), at);
        return static_cast<int>(i);
    }

    Element expr() {
        Element acc(n_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        for (;;) {
            Element t = term();
            if (negate)
                acc -= t;
            else
                acc += t;
            if (accept('+'))
                negate = false;
            else if (accept('-'))
                negate = true;
            else
                return acc;
        }
    }

    Element term() {
        Element acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Element d = factor();
                if (!d.is_scalar()) throw ParseError("divisor must be a scalar", at);
                const RatFunc c = scalar_of(d);
                if (c.is_zero()) throw ParseError("division by zero", at);
                acc *= c.inverse();
            } else {
                return acc;
            }
        }
    }

    RatFunc scalar_of(const Element& x) const {
        return x.is_zero() ? RatFunc() : x.terms().begin()->second;
    }

    Element factor() {
        Element base = atom();
        if (!accept('^')) return base;
        const bool neg = accept('-');
        const std::size_t at = pos_;
        const long k = integer();
        if (neg) {
            base = invert(base, at);
        }
        Element r = Element::one(n_);
        for (long i = 0; i < k; ++i) r = r * base;
        return r;
    }

    Element invert(const Element& x, std::size_t at) const {
        if (x.is_scalar()) {
            const RatFunc c = scalar_of(x);
            if (c.is_zero()) throw ParseError("division by zero", at);
            return Element::scalar(n_, c.inverse());
        }
        if (x.terms().size() == 1 && x.terms().begin()->first.A.is_bottom()) {
            const auto& [key, c] = *x.terms().begin();
            return t_inverse_element(key.w) * c.inverse();
        }
        throw ParseError("negative powers need a scalar or c*T_w base", at);
    }

    Element atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        const std::size_t at = pos_;
        if (c == '(') {
            ++pos_;
            Element e = expr();
            expect(')');
            return e;
        }
        if (c == 'u') {
            ++pos_;
            return Element::scalar(n_, RatFunc::u());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Element::scalar(n_, RatFunc(Rational(integer())));
        if (c == 'T') {
            ++pos_;
            return gen(GenKind::T, index(integer(), at), n_);
        }
        if (c == 'E') {
            ++pos_;
            if (accept('{')) return tie_set(at);
            return gen(GenKind::E, index(integer(), at), n_);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Element tie_set(std::size_t at) {
        std::vector<int> elems;
        do {
            const std::size_t p = pos_;
            const long v = integer();
            if (v < 1 || v > n_) throw ParseError("element " + std::to_string(v) + " out of range for n = " + std::to_string(n_), p);
            elems.push_back(static_cast<int>(v));
        } while (accept(','));
        expect('}');
        if (elems.size() < 2) throw ParseError("E{...} needs at least two elements", at);
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t k = 1; k < elems.size(); ++k) pairs.emplace_back(elems[0], elems[k]);
        const auto A = SetPartition::closure(pairs, n_);
        if (A.num_blocks() != n_ - static_cast<int>(elems.size()) + 1) throw ParseError("repeated element in E{...}", at);
        if (elems.size() == 2) {
            const int i = std::min(elems[0], elems[1]);
            const int j = std::max(elems[0], elems[1]);
            return e_pair(i, j, n_);
        }
        return e_set(A);
    }

    std::string_view s_;
    int n_;
    std::size_t pos_ = 0;
};

std::string key_text(const BasisKey& k) {
    std::string s;
    for (const auto& block : k.A.blocks()) {
        if (block.size() < 2) continue;
        if (!s.empty()) s += "*";
        s += "E{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(block[i]);
        }
        s += "}";
    }
    for (int i : k.w.reduced_word()) {
        if (!s.empty()) s += "*";
        s += "T" + std::to_string(i);
    }
    return s;
}

}  // namespace

Element parse_word(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("parse_word: n must be >= 1");
    return Parser(text, n).parse();
}

std::string to_text(const Element& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c0] : x.terms()) {
        RatFunc c = c0;
        const bool negative = c.num().leading().sign() < 0;
        if (negative) c = -c;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const std::string key = key_text(k);
        if (key.empty()) {
            out += c.needs_parens() || (!c.den().is_one()) ? "(" + c.to_string() + ")" : c.to_string();
        } else if (c.is_one()) {
            out += key;
        } else {
            const std::string cs = c.to_string();
            out += (c.needs_parens() ? "(" + cs + ")" : cs) + "*" + key;
        }
    }
    return out;
}

}  // namespace braidties
