#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>

#include "qgauss/rat_func.hpp"

namespace qgauss {

enum class OutputFormat { plain, latex, json, csv };

inline OutputFormat output_format_from_string(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "latex") return OutputFormat::latex;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format: " + name);
}

struct PlainOptions {
    bool use_q = false;  // render even s-powers as q^k
};

namespace detail {

inline bool negative_led(const GaussRat& c) {
    return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

inline std::string plain_coeff(const GaussRat& c) {
    if (c.is_real()) return rational_to_string(c.re());
    if (sgn(c.re()) == 0) {
        if (c.im() == 1) return "i";
        if (c.im() == -1) return "-i";
        return rational_to_string(c.im()) + "*i";
    }
    std::string im_part = (c.im() == 1 || c.im() == -1) ? "i" : rational_to_string(abs(c.im())) + "*i";
    return "(" + rational_to_string(c.re()) + (sgn(c.im()) < 0 ? "-" : "+") + im_part + ")";
}

inline std::string plain_power(long e, const PlainOptions& opts) {
    if (opts.use_q && e % 2 == 0) {
        long k = e / 2;
        return k == 1 ? "q" : "q^" + std::to_string(k);
    }
    return e == 1 ? "s" : "s^" + std::to_string(e);
}

inline std::string plain_term(const GaussRat& c, long e, const PlainOptions& opts) {
    if (e == 0) return plain_coeff(c);
    std::string pw = plain_power(e, opts);
    if (c.is_one()) return pw;
    if (c == GaussRat(-1)) return "-" + pw;
    return plain_coeff(c) + "*" + pw;
}

}  // namespace detail

inline std::string to_plain(const SPoly& p, const PlainOptions& opts = {}) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            out = detail::plain_term(c, e, opts);
            first = false;
            continue;
        }
        if (detail::negative_led(c))
            out += " - " + detail::plain_term(-c, e, opts);
        else
            out += " + " + detail::plain_term(c, e, opts);
    }
    return out;
}

inline std::string to_plain(const RatFunc& f, const PlainOptions& opts = {}) {
    if (f.den() == SPoly(1)) return to_plain(f.num(), opts);
    std::string num = to_plain(f.num(), opts);
    if (f.num().terms().size() > 1) num = "(" + num + ")";
    return num + "/(" + to_plain(f.den(), opts) + ")";
}

// ---------------------------------------------------------------------------
// Plain-format parser: expressions over + - * / ^ ( ) with atoms
// integer, i, s, q evaluated directly in Q(i)(s).  Accepts everything
// to_plain emits, so plain output re-parses to the same canonical value.
// ---------------------------------------------------------------------------

namespace detail {

class PlainParser {
public:
    explicit PlainParser(std::string_view text) : text_(text) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            skip_ws();
            if (consume('+'))
                v += term();
            else if (consume('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            skip_ws();
            if (consume('*'))
                v *= unary();
            else if (consume('/'))
                v /= unary();
            else
                return v;
        }
    }

    RatFunc unary() {
        skip_ws();
        if (consume('-')) return -unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = primary();
        skip_ws();
        if (consume('^')) {
            skip_ws();
            bool neg = consume('-');
            long e = integer();
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    RatFunc primary() {
        skip_ws();
        if (consume('(')) {
            RatFunc v = expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (peek_digit()) return RatFunc(GaussRat(Rational(integer())));
        if (consume('i')) return RatFunc::i();
        if (consume('s')) return RatFunc::s();
        if (consume('q')) return RatFunc::q();
        fail("expected value");
    }

    long integer() {
        if (!peek_digit()) fail("expected integer");
        long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool peek_digit() const {
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_rat_func(const std::string& text) {
    return detail::PlainParser(text).parse();
}

// ---------------------------------------------------------------------------
// LaTeX rendering (display only; checked syntactically, never re-parsed)
// ---------------------------------------------------------------------------

namespace detail {

inline std::string latex_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    std::string sign = sgn(r) < 0 ? "-" : "";
    Rational a = abs(r);
    return sign + "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

inline std::string latex_coeff(const GaussRat& c) {
    if (c.is_real()) return latex_rational(c.re());
    if (sgn(c.re()) == 0) {
        if (c.im() == 1) return "i";
        if (c.im() == -1) return "-i";
        return latex_rational(c.im()) + "\\,i";
    }
    std::string im = (c.im() == 1) ? "i" : (c.im() == -1 ? "-i" : latex_rational(c.im()) + "\\,i");
    if (!im.empty() && im[0] != '-') im = "+" + im;
    return "\\left(" + latex_rational(c.re()) + im + "\\right)";
}

inline std::string latex_power(long e) {
    // even powers of s are integer powers of q, odd ones are half-integer
    if (e % 2 == 0) {
        long k = e / 2;
        if (k == 1) return "q";
        return "q^{" + std::to_string(k) + "}";
    }
    std::string frac = "\\frac{" + std::to_string(std::abs(e)) + "}{2}";
    return "q^{" + std::string(e < 0 ? "-" : "") + frac + "}";
}

inline std::string latex_term(const GaussRat& c, long e) {
    if (e == 0) return latex_coeff(c);
    std::string pw = latex_power(e);
    if (c.is_one()) return pw;
    if (c == GaussRat(-1)) return "-" + pw;
    return latex_coeff(c) + "\\," + pw;
}

}  // namespace detail

inline std::string to_latex(const SPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            out = detail::latex_term(c, e);
            first = false;
            continue;
        }
        if (detail::negative_led(c))
            out += "-" + detail::latex_term(-c, e);
        else
            out += "+" + detail::latex_term(c, e);
    }
    return out;
}

inline std::string to_latex(const RatFunc& f) {
    if (f.den() == SPoly(1)) return to_latex(f.num());
    return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

/// Shallow syntactic validation: balanced braces, balanced \left/\right,
/// and only known control sequences.
inline bool latex_syntax_ok(const std::string& text) {
    long depth = 0;
    long left_right = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c == '{') ++depth;
        if (c == '}') {
            if (--depth < 0) return false;
        }
        if (c == '\\') {
            std::size_t j = k + 1;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            std::string cmd = text.substr(k + 1, j - k - 1);
            if (cmd.empty()) {
                if (j >= text.size() || text[j] != ',') return false;
                k = j;
                continue;
            }
            if (cmd == "left" || cmd == "right") left_right += (cmd == "left") ? 1 : -1;
            else if (cmd != "frac") return false;
            k = j - 1;
        }
    }
    return depth == 0 && left_right == 0;
}

}  // namespace qgauss
