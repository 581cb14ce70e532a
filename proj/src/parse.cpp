#include "monoalg/parse.hpp"

#include <cctype>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

constexpr std::uint64_t kMaxExponent = 1'000'000;

class Parser {
public:
    Parser(const std::string& text, FieldPtr field) : text_(text), field_(std::move(field)) {}

    Polynomial run() {
        skip_ws();
        Polynomial r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool starts_factor(char c) const { return c == 'X' || c == 'a' || c == '('; }

    Polynomial expr() {
        Polynomial r = product();
        skip_ws();
        while (peek() == '+') {
            ++pos_;
            skip_ws();
            r = r + product();
            skip_ws();
        }
        return r;
    }

    Polynomial product() {
        Polynomial r = factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                r = r * factor();
            } else if (starts_factor(peek())) {
                r = r * factor();  // implicit multiplication, e.g. "2X" or "X(X+1)"
            } else {
                return r;
            }
        }
    }

    Polynomial factor() {
        Polynomial b = base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::uint64_t e = integer();
            if (e > kMaxExponent) fail("exponent too large");
            return pow(b, e);
        }
        return b;
    }

    Polynomial base() {
        skip_ws();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c == 'X') {
            ++pos_;
            return Polynomial::x(field_);
        }
        if (c == 'a') {
            if (field_->degree() == 1) fail("the symbol 'a' is undefined over a prime field");
            ++pos_;
            return Polynomial::constant(field_->gen());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::from_residues(field_, {integer_mod_p()});
        fail("expected a coefficient, 'X', 'a' or '('");
    }

    std::uint64_t integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        unsigned __int128 v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
            if (v > UINT64_MAX) fail("integer literal too large");
            ++pos_;
        }
        return static_cast<std::uint64_t>(v);
    }

    Residue integer_mod_p() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        Residue v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = (v * 10 + static_cast<Residue>(text_[pos_] - '0')) % field_->p();
            ++pos_;
        }
        return v;
    }

    const std::string& text_;
    FieldPtr field_;
    std::size_t pos_ = 0;
};

std::string power_string(const char* var, std::uint32_t e) {
    if (e == 0) return "1";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const FieldPtr& field) {
    return Parser(text, field).run();
}

std::string to_string(const FieldElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (std::uint32_t i = x.field().degree(); i-- > 0;) {
        const Residue c = x.coeff(i);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
        } else if (c == 1) {
            out += power_string("a", i);
        } else {
            out += std::to_string(c) + "*" + power_string("a", i);
        }
    }
    return out;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::uint32_t i = static_cast<std::uint32_t>(f.degree()) + 1; i-- > 0;) {
        const FieldElement c = f.coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        const std::string cs = to_string(c);
        if (i == 0) {
            out += cs;
        } else if (c.is_one()) {
            out += power_string("X", i);
        } else if (cs.find(' ') != std::string::npos) {
            out += "(" + cs + ")*" + power_string("X", i);
        } else {
            out += cs + "*" + power_string("X", i);
        }
    }
    return out;
}

}  // namespace monoalg
