#include "pbv/parse.hpp"

#include <cctype>

namespace pbv {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    std::optional<int> period;
    const std::set<std::string>* allowed;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) throw SyntaxError(std::string("expected ") + what, pos);
    }

    mpz_class read_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SyntaxError("expected integer", pos);
        return mpz_class(s.substr(start, pos - start));
    }

    long read_int() {
        skip_ws();
        bool neg = accept('-');
        mpz_class v = read_uint();
        if (!v.fits_slong_p()) throw SyntaxError("index out of range", pos);
        long x = v.get_si();
        return neg ? -x : x;
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        if (pos == start) throw SyntaxError("expected identifier", pos);
        return s.substr(start, pos - start);
    }

    int32_t wrap_abs(long i) {
        if (period) return wrap_index(i, *period);
        if (i < INT32_MIN || i > INT32_MAX) throw SyntaxError("index out of range", pos);
        return static_cast<int32_t>(i);
    }

    RationalFunction parse_var(const std::string& fam, size_t fam_pos) {
        if (allowed && !allowed->count(fam)) throw UnknownFamily(fam);
        if (!accept('[')) {
            // bare scalar identifier
            return RationalFunction::variable(var_scalar(fam));
        }
        skip_ws();
        VarRef v;
        if (peek() == 'k' && !std::isalnum(static_cast<unsigned char>(pos + 1 < s.size() ? s[pos + 1] : '\0'))) {
            ++pos;  // consume k
            long off = 0;
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                char op = s[pos++];
                mpz_class c = read_uint();
                if (!c.fits_slong_p()) throw SyntaxError("offset out of range", pos);
                off = op == '+' ? c.get_si() : -c.get_si();
            }
            v = VarRef{families::intern(fam), static_cast<int32_t>(off), kNoIndex, true};
        } else {
            long i = read_int();
            if (accept(',')) {
                long j = read_int();
                v = VarRef{families::intern(fam), static_cast<int32_t>(i), static_cast<int32_t>(j), false};
                if (v.i == v.j && fam == "pair") {
                    expect(']', "]");
                    return RationalFunction(Rat(0));  // xx = 0 in the swapping ring
                }
            } else {
                v = VarRef{families::intern(fam), wrap_abs(i), kNoIndex, false};
            }
        }
        expect(']', "]");
        (void)fam_pos;
        return RationalFunction::variable(v);
    }

    RationalFunction parse_primary() {
        skip_ws();
        if (pos >= s.size()) throw SyntaxError("expected expression", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RationalFunction e = parse_expr_inner();
            expect(')', ")");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = read_uint();
            return RationalFunction(Rat(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t fam_pos = pos;
            std::string fam = read_ident();
            if (fam == "k") throw SyntaxError("k is reserved for cyclic indices", fam_pos);
            return parse_var(fam, fam_pos);
        }
        throw SyntaxError("expected expression", pos);
    }

    int parse_exponent() {
        skip_ws();
        bool paren = accept('(');
        bool neg = false;
        skip_ws();
        if (peek() == '-') {
            ++pos;
            neg = true;
        }
        skip_ws();
        size_t at = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) {
            if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '('))
                throw NonIntegerExponent();
            throw SyntaxError("expected integer exponent", at);
        }
        mpz_class v = read_uint();
        if (peek() == '/' || peek() == '.') throw NonIntegerExponent();
        if (paren) expect(')', ")");
        if (!v.fits_sint_p()) throw SyntaxError("exponent out of range", at);
        int e = static_cast<int>(v.get_si());
        return neg ? -e : e;
    }

    RationalFunction parse_unary() {
        int sgn = 1;
        while (true) {
            char c = peek();
            if (c == '-') {
                sgn = -sgn;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        RationalFunction v = parse_primary();
        if (peek() == '^') {
            ++pos;
            v = v.pow(parse_exponent());
        }
        return sgn < 0 ? -v : v;
    }

    RationalFunction parse_term() {
        RationalFunction v = parse_unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos;
                v *= parse_unary();
            } else if (c == '/') {
                ++pos;
                v /= parse_unary();
            } else {
                break;
            }
        }
        return v;
    }

    RationalFunction parse_expr_inner() {
        RationalFunction v = parse_term();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                v += parse_term();
            } else if (c == '-') {
                ++pos;
                v -= parse_term();
            } else {
                break;
            }
        }
        return v;
    }

    RationalFunction run() {
        RationalFunction v = parse_expr_inner();
        skip_ws();
        if (pos != s.size()) throw SyntaxError("unexpected trailing input", pos);
        return v;
    }
};

std::string print_mono(const Monomial& m) {
    std::string out;
    for (auto& [v, e] : m.factors) {
        if (!out.empty()) out += "*";
        out += to_string(v);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

RationalFunction parse_expr(const std::string& text, std::optional<int> period,
                            const std::set<std::string>* allowed_families) {
    Parser p{text, 0, period, allowed_families};
    return p.run();
}

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coeff;
        bool neg = sign(c) < 0;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        first = false;
        Rat a = abs(c);
        std::string ms = print_mono(t.mono);
        if (ms.empty()) {
            out += rat_to_string(a);
        } else if (a == 1) {
            out += ms;
        } else {
            out += rat_to_string(a) + "*" + ms;
        }
    }
    return out;
}

std::string print_expr(const RationalFunction& f) {
    if (f.den().is_constant() && f.den().constant_value() == 1) return print_poly(f.num());
    return "(" + print_poly(f.num()) + ")/(" + print_poly(f.den()) + ")";
}

RationalFunction instantiate_at(const RationalFunction& f, int k, int N) {
    return f.map_variables([&](const VarRef& v) {
        if (!v.relative) return v;
        return VarRef{v.family, wrap_index(static_cast<int64_t>(k) + v.i, N), v.j, false};
    });
}

}  // namespace pbv
