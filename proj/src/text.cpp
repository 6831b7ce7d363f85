#include "hx/text.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

namespace hx {

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

double parse_number(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty number");
    const char* first = tok.c_str();
    char* last = nullptr;
    errno = 0;
    double v = std::strtod(first, &last);
    if (last != first + tok.size()) throw ParseError("bad number '" + tok + "'");
    return v;
}

int clamp_precision(int precision) {
    if (precision < 1) return 1;
    if (precision > 17) return 17;
    return precision;
}

}  // namespace

std::string format_real(double v, int precision) {
    if (v == 0.0) v = 0.0;  // fold -0 into 0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", clamp_precision(precision), v);
    return buf;
}

std::string format_complex(cplx z, int precision) {
    double re = z.real();
    double im = z.imag();
    if (im == 0.0) return format_real(re, precision);
    std::string im_part = format_real(im, precision) + "i";
    if (re == 0.0) return im_part;
    return format_real(re, precision) + (im > 0.0 ? "+" : "") + im_part;
}

cplx parse_complex(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.empty()) throw ParseError("empty complex literal");

    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char c = s[i];
        char prev = s[i - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) throw ParseError("too many terms in complex literal '" + raw + "'");

    double re = 0.0, im = 0.0;
    bool have_re = false, have_im = false;
    for (const std::string& tok : terms) {
        if (tok.back() == 'i' || tok.back() == 'I') {
            if (have_im) throw ParseError("two imaginary parts in '" + raw + "'");
            std::string coef = tok.substr(0, tok.size() - 1);
            if (coef.empty() || coef == "+") {
                im = 1.0;
            } else if (coef == "-") {
                im = -1.0;
            } else {
                im = parse_number(coef);
            }
            have_im = true;
        } else {
            if (have_re) throw ParseError("two real parts in '" + raw + "'");
            re = parse_number(tok);
            have_re = true;
        }
    }
    return {re, im};
}

Hypercomplex parse_hypercomplex(const std::string& raw) {
    std::string s = strip_spaces(raw);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
        throw ParseError("expected '(a, b)' literal, got '" + raw + "'");
    }
    std::string inner = s.substr(1, s.size() - 2);
    std::size_t comma = inner.find(',');
    if (comma == std::string::npos || inner.find(',', comma + 1) != std::string::npos) {
        throw ParseError("expected exactly one comma in '" + raw + "'");
    }
    return {parse_complex(inner.substr(0, comma)), parse_complex(inner.substr(comma + 1))};
}

std::string format_hypercomplex(const Hypercomplex& x, int precision) {
    return "(" + format_complex(x.a, precision) + ", " + format_complex(x.b, precision) + ")";
}

StarWord parse_star_word(const std::string& s) {
    if (s.empty()) throw ParseError("empty word");
    StarWord w;
    w.letters.reserve(s.size());
    for (char c : s) {
        if (c == '1') {
            w.letters.push_back(Letter::plain);
        } else if (c == '*') {
            w.letters.push_back(Letter::star);
        } else {
            throw ParseError(std::string("bad word character '") + c + "' (use '1' and '*')");
        }
    }
    return w;
}

std::string to_string(const StarWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w.letters) s.push_back(l == Letter::plain ? '1' : '*');
    return s;
}

std::string to_json(const Hypercomplex& x) {
    nlohmann::json j;
    j["a"] = {x.a.real(), x.a.imag()};
    j["b"] = {x.b.real(), x.b.imag()};
    return j.dump();
}

std::string to_json(const Matrix2C& M) {
    auto entry = [](cplx z) { return nlohmann::json::array({z.real(), z.imag()}); };
    nlohmann::json j = nlohmann::json::array({
        nlohmann::json::array({entry(M.m11), entry(M.m12)}),
        nlohmann::json::array({entry(M.m21), entry(M.m22)}),
    });
    return j.dump();
}

std::string to_json(const SpectralValue& sv) {
    cplx v = sv.value();
    cplx c = sv.symbolic_conjugate().value();
    nlohmann::json j;
    j["x"] = sv.x;
    j["R"] = sv.R;
    j["value"] = {v.real(), v.imag()};
    j["conjugate"] = {c.real(), c.imag()};
    return j.dump();
}

Hypercomplex hypercomplex_from_json(const std::string& s) {
    try {
        nlohmann::json j = nlohmann::json::parse(s);
        if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
            throw ParseError("expected object with \"a\" and \"b\" arrays");
        }
        auto get = [](const nlohmann::json& e) -> cplx {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
                throw ParseError("component must be a [re, im] number pair");
            }
            return {e[0].get<double>(), e[1].get<double>()};
        };
        return {get(j["a"]), get(j["b"])};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad json: ") + e.what());
    }
}

namespace {

std::size_t find_close(const std::string& s, std::size_t open) {
    int depth = 0;
    for (std::size_t i = open; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            if (--depth == 0) return i;
        }
    }
    throw ParseError("unbalanced parentheses");
}

// A parenthesized span is a pair literal when a comma sits at depth one.
bool is_literal_span(const std::string& s, std::size_t open, std::size_t close) {
    int depth = 0;
    for (std::size_t i = open; i <= close; ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        } else if (s[i] == ',' && depth == 1) {
            return true;
        }
    }
    return false;
}

struct ExprParser {
    const std::string& s;
    double t;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    Hypercomplex factor() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression");
        if (s.compare(pos, 3, "inv") == 0) {
            std::size_t k = pos + 3;
            while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k]))) ++k;
            if (k >= s.size() || s[k] != '(') throw ParseError("expected '(' after inv");
            pos = k + 1;
            Hypercomplex v = expr();
            if (!eat(')')) throw ParseError("expected ')' closing inv");
            return inverse(t, v);
        }
        if (s[pos] == '(') {
            std::size_t close = find_close(s, pos);
            if (is_literal_span(s, pos, close)) {
                Hypercomplex v = parse_hypercomplex(s.substr(pos, close - pos + 1));
                pos = close + 1;
                return v;
            }
            ++pos;
            Hypercomplex v = expr();
            if (!eat(')')) throw ParseError("expected ')'");
            return v;
        }
        throw ParseError("expected a '(a, b)' literal, a group, or inv(...) at offset " +
                         std::to_string(pos));
    }

    Hypercomplex term() {
        Hypercomplex v = factor();
        while (eat('*')) v = mul(t, v, factor());
        return v;
    }

    Hypercomplex expr() {
        Hypercomplex v = term();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                v = add(v, term());
            } else if (pos < s.size() && s[pos] == '-') {
                ++pos;
                Hypercomplex w = term();
                v = add(v, {-w.a, -w.b});
            } else {
                return v;
            }
        }
    }
};

}  // namespace

Hypercomplex eval_expression(double t, const std::string& expr) {
    ExprParser p{expr, t};
    Hypercomplex v = p.expr();
    p.skip_ws();
    if (p.pos != expr.size()) {
        throw ParseError("trailing input at offset " + std::to_string(p.pos));
    }
    return v;
}

}  // namespace hx
