#include <cctype>
#include <sstream>

#include "ucp/errors.hpp"
#include "ucp/poly.hpp"

namespace ucp {

namespace {

constexpr std::size_t kMaxExponent = 1u << 24; // dense storage cap

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw PolyParseError(what + " at offset " + std::to_string(pos), pos);
    }
};

mpz_class parse_integer(Cursor& c) {
    std::size_t start = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == start) c.fail("expected digit");
    return mpz_class(std::string(c.text.substr(start, c.pos - start)), 10);
}

std::size_t parse_exponent(Cursor& c) {
    std::size_t start = c.pos;
    mpz_class e = parse_integer(c);
    if (e > kMaxExponent)
        throw PolyParseError("exponent overflow at offset " + std::to_string(start), start);
    return static_cast<std::size_t>(e.get_ui());
}

// term := INT ('*'? 'x' ('^' UINT)?)? | 'x' ('^' UINT)?
void parse_term(Cursor& c, int sign, std::vector<mpz_class>& acc) {
    mpz_class coeff(1);
    bool have_coeff = false;
    if (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = parse_integer(c);
        have_coeff = true;
    }
    c.skip_ws();
    std::size_t exp = 0;
    bool have_x = false;
    if (!c.done() && (c.peek() == '*' || c.peek() == 'x')) {
        if (c.peek() == '*') {
            if (!have_coeff) c.fail("unexpected '*'");
            ++c.pos;
            c.skip_ws();
            if (c.done() || c.peek() != 'x') c.fail("expected 'x'");
        }
        ++c.pos; // consume 'x'
        have_x = true;
        exp = 1;
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
                c.fail("expected exponent");
            exp = parse_exponent(c);
        }
    }
    if (!have_coeff && !have_x) c.fail("expected term");
    if (sign < 0) coeff = -coeff;
    if (acc.size() < exp + 1) acc.resize(exp + 1, mpz_class(0));
    acc[exp] += coeff;
}

IntPoly parse_expr(Cursor& c) {
    std::vector<mpz_class> acc;
    c.skip_ws();
    int sign = 1;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        sign = c.peek() == '-' ? -1 : 1;
        ++c.pos;
        c.skip_ws();
    }
    parse_term(c, sign, acc);
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != '+' && c.peek() != '-') c.fail("expected '+' or '-'");
        sign = c.peek() == '-' ? -1 : 1;
        ++c.pos;
        c.skip_ws();
        parse_term(c, sign, acc);
    }
    return IntPoly(std::move(acc));
}

IntPoly parse_coeff_list(Cursor& c) {
    ++c.pos; // consume '['
    std::vector<mpz_class> acc;
    c.skip_ws();
    if (!c.done() && c.peek() == ']') {
        ++c.pos;
    } else {
        for (;;) {
            c.skip_ws();
            int sign = 1;
            if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
                sign = c.peek() == '-' ? -1 : 1;
                ++c.pos;
            }
            if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
                c.fail("expected integer");
            mpz_class v = parse_integer(c);
            acc.push_back(sign < 0 ? mpz_class(-v) : v);
            c.skip_ws();
            if (!c.done() && c.peek() == ',') {
                ++c.pos;
                continue;
            }
            if (!c.done() && c.peek() == ']') {
                ++c.pos;
                break;
            }
            c.fail("expected ',' or ']'");
        }
    }
    c.skip_ws();
    if (!c.done()) c.fail("trailing input");
    return IntPoly(std::move(acc));
}

} // namespace

IntPoly parse_poly(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) c.fail("empty input");
    if (c.peek() == '[') return parse_coeff_list(c);
    return parse_expr(c);
}

std::string format_poly(const IntPoly& p, PolyStyle style) {
    std::ostringstream out;
    if (style == PolyStyle::coeff_list) {
        out << '[';
        const auto& c = p.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out << ", ";
            out << c[i];
        }
        out << ']';
        return out.str();
    }
    if (p.is_zero()) return "0";
    const auto& c = p.coeffs();
    bool first = true;
    for (std::size_t j = c.size(); j-- > 0;) {
        if (c[j] == 0) continue;
        mpz_class a = c[j];
        if (first) {
            if (a < 0) {
                out << '-';
                a = -a;
            }
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (j == 0) {
            out << a;
        } else {
            if (a != 1) out << a << '*';
            out << 'x';
            if (j != 1) out << '^' << j;
        }
    }
    return out.str();
}

} // namespace ucp
