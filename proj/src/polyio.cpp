#include "pfol/polyio.hpp"

#include <cctype>

namespace pfol {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;

    explicit Cursor(const std::string& t) : s(t) {}

    void advance() {
        if (s[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    }
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) advance();
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        char c = s[i];
        advance();
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) {
        raise_input("parse error at line " + std::to_string(line) + ", column " +
                    std::to_string(col) + ": " + msg);
    }
    u64 nat(u64 p) {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected a number");
        u64 v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = (v * 10 + u64(s[i] - '0')) % p;
            advance();
        }
        return v;
    }
    unsigned exponent() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            fail("expected an exponent");
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + unsigned(s[i] - '0');
            if (v > 60000) fail("exponent too large");
            advance();
        }
        return unsigned(v);
    }
};

FieldElement parse_bracket(Cursor& c, const Field& f) {
    c.take(); // '['
    std::vector<u64> limbs(f.k(), 0);
    size_t idx = 0;
    while (true) {
        if (idx >= f.k()) c.fail("coefficient list longer than the extension degree");
        limbs[idx++] = c.nat(f.p());
        char ch = c.peek();
        if (ch == ',') {
            c.take();
            continue;
        }
        if (ch == ']') {
            c.take();
            break;
        }
        c.fail("expected ',' or ']' in coefficient list");
    }
    return FieldElement(f, std::move(limbs));
}

FieldElement parse_g_power(Cursor& c, const Field& f) {
    c.take(); // 'g'
    if (f.k() == 1) c.fail("'g' is only meaningful over an extension field");
    unsigned e = 1;
    if (c.peek() == '^') {
        c.take();
        e = c.exponent();
    }
    std::vector<u64> limbs(f.k(), 0);
    limbs[1] = 1;
    return FieldElement(f, std::move(limbs)).pow(e);
}

} // namespace

MultiPoly parse_poly(const std::string& text, const Field& f, int nvars) {
    Cursor c(text);
    MultiPoly::Builder b(f, nvars);
    bool any = false;
    while (!c.eof()) {
        bool neg = false;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            neg = (ch == '-');
            c.take();
        } else if (any) {
            c.fail("expected '+' or '-' between terms");
        }
        // one term: at least one factor
        FieldElement coeff = FieldElement::one(f);
        Monomial m;
        bool got_factor = false;
        while (true) {
            char fc = c.peek();
            if (fc == '*') {
                if (!got_factor) c.fail("'*' without a preceding factor");
                c.take();
                fc = c.peek();
            }
            if (std::isdigit(static_cast<unsigned char>(fc))) {
                coeff = coeff * FieldElement::from_int(f, (long long)c.nat(f.p()));
                got_factor = true;
            } else if (fc == 'g') {
                coeff = coeff * parse_g_power(c, f);
                got_factor = true;
            } else if (fc == '[') {
                coeff = coeff * parse_bracket(c, f);
                got_factor = true;
            } else if (fc == 'x' || fc == 'y' || fc == 'z') {
                int var = fc == 'x' ? 0 : fc == 'y' ? 1 : 2;
                if (var >= nvars) c.fail(std::string("variable '") + fc + "' out of range");
                c.take();
                unsigned e = 1;
                if (c.peek() == '^') {
                    c.take();
                    e = c.exponent();
                }
                unsigned cur = m.e[size_t(var)];
                if (cur + e > 60000) c.fail("exponent too large");
                m.e[size_t(var)] = uint16_t(cur + e);
                got_factor = true;
            } else {
                break;
            }
        }
        if (!got_factor) c.fail("expected a term");
        if (neg) coeff = -coeff;
        b.add(m, coeff);
        any = true;
    }
    if (!any) c.fail("empty polynomial");
    return b.build();
}

FieldElement parse_element(const std::string& text, const Field& f) {
    Cursor c(text);
    char ch = c.peek();
    bool neg = false;
    if (ch == '-' || ch == '+') {
        neg = ch == '-';
        c.take();
        ch = c.peek();
    }
    FieldElement r = FieldElement::zero(f);
    if (std::isdigit(static_cast<unsigned char>(ch)))
        r = FieldElement::from_int(f, (long long)c.nat(f.p()));
    else if (ch == 'g')
        r = parse_g_power(c, f);
    else if (ch == '[')
        r = parse_bracket(c, f);
    else
        c.fail("expected a field element");
    if (!c.eof()) c.fail("trailing characters after field element");
    return neg ? -r : r;
}

std::string element_to_string(const FieldElement& e) { return e.to_string(); }

std::string modulus_to_string(const Field& f) {
    if (f.k() == 1) return "";
    const auto& m = f.modulus();
    std::string out;
    for (int i = int(m.size()) - 1; i >= 0; --i) {
        u64 c = m[size_t(i)];
        if (!c) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += "g";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace pfol
