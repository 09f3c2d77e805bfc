// Expression parsing for exact homogeneous forms.
//
// Grammar (explicit '*' between factors):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' nonneg-integer)?
//   atom   := literal | variable | '(' expr ')'
// Literals: integers, rationals p/q, Gaussian units ("i", "2i", "3/4i").
// Variables: x0..x9, with x and y as aliases for x0 and x1.
#pragma once

#include <array>
#include <cctype>
#include <map>
#include <stdexcept>
#include <string>

#include "waring_eig/nform.hpp"

namespace waring_eig {

struct ParseError : std::runtime_error {
    std::size_t pos;
    ParseError(const std::string& msg, std::size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

namespace detail {

constexpr unsigned kMaxVars = 10;

// not-necessarily-homogeneous scratch polynomial used while parsing
struct Poly10 {
    std::map<std::array<unsigned, kMaxVars>, GaussRat> t;

    static Poly10 constant(const GaussRat& c) {
        Poly10 p;
        if (!c.is_zero()) p.t.emplace(std::array<unsigned, kMaxVars>{}, c);
        return p;
    }
    static Poly10 variable(unsigned idx) {
        Poly10 p;
        std::array<unsigned, kMaxVars> e{};
        e[idx] = 1;
        p.t.emplace(e, GaussRat(1));
        return p;
    }
    void add_in(const std::array<unsigned, kMaxVars>& e, const GaussRat& c) {
        auto it = t.find(e);
        if (it == t.end()) {
            if (!c.is_zero()) t.emplace(e, c);
            return;
        }
        it->second = it->second + c;
        if (it->second.is_zero()) t.erase(it);
    }
    Poly10 operator+(const Poly10& o) const {
        Poly10 r = *this;
        for (const auto& [e, c] : o.t) r.add_in(e, c);
        return r;
    }
    Poly10 operator-() const {
        Poly10 r;
        for (const auto& [e, c] : t) r.t.emplace(e, -c);
        return r;
    }
    Poly10 operator-(const Poly10& o) const { return *this + (-o); }
    Poly10 operator*(const Poly10& o) const {
        Poly10 r;
        for (const auto& [ea, ca] : t)
            for (const auto& [eb, cb] : o.t) {
                std::array<unsigned, kMaxVars> e;
                for (unsigned i = 0; i < kMaxVars; ++i) e[i] = ea[i] + eb[i];
                r.add_in(e, ca * cb);
            }
        return r;
    }
    Poly10 pow(unsigned e) const {
        Poly10 r = constant(GaussRat(1));
        for (unsigned j = 0; j < e; ++j) r = r * (*this);
        return r;
    }
};

class FormParser {
public:
    explicit FormParser(const std::string& s) : s_(s), p_(0) {}

    Poly10 run() {
        Poly10 r = expr();
        skip_ws();
        if (p_ != s_.size()) throw ParseError("unexpected character", p_);
        return r;
    }

private:
    const std::string& s_;
    std::size_t p_;

    void skip_ws() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip_ws();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return p_ < s_.size() ? s_[p_] : '\0';
    }

    Poly10 expr() {
        Poly10 r = term();
        for (;;) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }
    Poly10 term() {
        Poly10 r = unary();
        while (eat('*')) r = r * unary();
        return r;
    }
    Poly10 unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    Poly10 power() {
        Poly10 b = atom();
        if (!eat('^')) return b;
        skip_ws();
        std::size_t at = p_;
        unsigned long e = read_uint("expected a nonnegative integer exponent");
        if (e > 64) throw ParseError("exponent too large", at);
        return b.pow(static_cast<unsigned>(e));
    }
    Poly10 atom() {
        char c = peek();
        std::size_t at = p_;
        if (c == '(') {
            ++p_;
            Poly10 r = expr();
            if (!eat(')')) throw ParseError("expected ')'", p_);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return literal();
        if (c == 'i') {
            ++p_;
            return Poly10::constant(GaussRat::i());
        }
        if (c == 'x') {
            ++p_;
            if (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
                unsigned idx = static_cast<unsigned>(s_[p_] - '0');
                ++p_;
                return Poly10::variable(idx);
            }
            return Poly10::variable(0);
        }
        if (c == 'y') {
            ++p_;
            return Poly10::variable(1);
        }
        throw ParseError("expected a literal, variable, or '('", at);
    }
    unsigned long read_uint(const char* what) {
        skip_ws();
        std::size_t at = p_;
        if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_])))
            throw ParseError(what, at);
        unsigned long v = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            v = v * 10 + static_cast<unsigned long>(s_[p_] - '0');
            if (v > 1000000000ul) throw ParseError("integer literal too large", at);
            ++p_;
        }
        return v;
    }
    Poly10 literal() {
        std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        std::size_t num_end = p_;
        if (p_ < s_.size() && s_[p_] == '/') {
            std::size_t slash = p_;
            ++p_;
            if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_])))
                throw ParseError("expected digits after '/'", p_);
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            (void)slash;
            num_end = p_;
        }
        Rat v = rat_from_string(s_.substr(start, num_end - start));
        if (p_ < s_.size() && s_[p_] == 'i') {
            ++p_;
            return Poly10::constant(GaussRat(Rat(0), v));
        }
        return Poly10::constant(GaussRat(v));
    }
};

}  // namespace detail

/// Parse a homogeneous form.  The variable count is one past the highest
/// index mentioned (at least two, so binary conventions apply to constants).
inline NForm parse_form(const std::string& s) {
    detail::Poly10 p = detail::FormParser(s).run();
    unsigned maxvar = 1;
    for (const auto& [e, c] : p.t)
        for (unsigned i = 0; i < detail::kMaxVars; ++i)
            if (e[i] > 0 && i > maxvar) maxvar = i;
    unsigned nv = maxvar + 1;
    if (p.t.empty()) return NForm(nv, 0);
    unsigned deg = 0;
    bool first = true;
    for (const auto& [e, c] : p.t) {
        unsigned total = 0;
        for (unsigned i = 0; i < detail::kMaxVars; ++i) total += e[i];
        if (first) {
            deg = total;
            first = false;
        } else if (total != deg) {
            throw ParseError("expression is not homogeneous", s.size());
        }
    }
    NForm f(nv, deg);
    for (const auto& [e, c] : p.t) f.add_term(Expo(e.begin(), e.begin() + nv), c);
    return f;
}

inline BForm parse_bform(const std::string& s) {
    NForm f = parse_form(s);
    if (f.nvars() > 2) throw ParseError("expected a binary form", s.size());
    return to_bform(f);
}

inline LinForm parse_linform(const std::string& s) {
    NForm f = parse_form(s);
    if (f.degree() != 1) throw ParseError("expected a linear form", s.size());
    std::vector<GaussRat> coords(f.nvars(), GaussRat(0));
    for (const auto& [e, c] : f.terms())
        for (unsigned i = 0; i < f.nvars(); ++i)
            if (e[i] == 1) coords[i] = c;
    return LinForm(coords);
}

}  // namespace waring_eig
