#include "conifold/weightpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace conifold {

WeightPoly affine(int n) {
    if (n < 0) throw std::invalid_argument("affine: negative dimension");
    return WeightPoly::term(2 * n, 1);
}

WeightPoly projective(int n) {
    if (n < 0) throw std::invalid_argument("projective: negative dimension");
    WeightPoly p;
    for (int k = 0; k <= n; ++k) p.add_term(2 * k, 1);
    return p;
}

WeightPoly elliptic_curve() {
    WeightPoly p;
    p.add_term(0, 1);
    p.add_term(1, -2);
    p.add_term(2, 1);
    return p;
}

WeightPoly torus_gm() { return difference(affine(1), WeightPoly::one()); }

WeightPoly sum(const WeightPoly& x, const WeightPoly& y) { return x + y; }
WeightPoly product(const WeightPoly& x, const WeightPoly& y) { return x * y; }
WeightPoly difference(const WeightPoly& x, const WeightPoly& y) { return x - y; }

WeightPoly blowup_point(const WeightPoly& x) {
    return x - WeightPoly::one() + projective(1);
}

WeightPoly tate_twist(const WeightPoly& x, int i) { return x.shifted(-i); }

WeightPoly shift(const WeightPoly& x, int j) { return j % 2 == 0 ? x : -x; }

namespace {

constexpr long long kMaxLiteral = 1000000;

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    WeightPoly run() {
        WeightPoly result = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("expected end of input");
        return result;
    }

private:
    std::string_view text_;
    size_t pos_ = 0;

    // Offsets in messages are 1-based.
    [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, size_t at) const {
        std::ostringstream os;
        os << msg << " at offset " << (at + 1);
        throw ParseError(os.str(), at + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_ws();
        const size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected name");
        return std::string(text_.substr(start, pos_ - start));
    }

    long long integer(bool allow_sign) {
        skip_ws();
        const size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            neg = text_[pos_] == '-';
            ++pos_;
        }
        long long value = 0;
        size_t digits = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxLiteral) fail_at("integer literal too large", start);
            ++pos_;
            ++digits;
        }
        if (digits == 0) fail("expected integer");
        return neg ? -value : value;
    }

    WeightPoly expr() {
        skip_ws();
        const size_t start = pos_;
        const std::string name = word();
        if (name == "sum" || name == "product" || name == "difference") {
            expect('(');
            WeightPoly a = expr();
            expect(',');
            WeightPoly b = expr();
            expect(')');
            if (name == "sum") return sum(a, b);
            if (name == "product") return product(a, b);
            return difference(a, b);
        }
        if (name == "blowup") {
            expect('(');
            WeightPoly a = expr();
            expect(')');
            return blowup_point(a);
        }
        if (name == "twist" || name == "shift") {
            expect('(');
            WeightPoly a = expr();
            expect(',');
            const long long k = integer(true);
            expect(')');
            return name == "twist" ? tate_twist(a, static_cast<int>(k))
                                   : shift(a, static_cast<int>(k));
        }
        if (name == "A" || name == "P") {
            const long long n = integer(false);
            return name == "A" ? affine(static_cast<int>(n)) : projective(static_cast<int>(n));
        }
        if (name == "Gm") return torus_gm();
        if (name == "E") return elliptic_curve();
        if (name == "pt") return WeightPoly::one();
        fail_at("unknown atom '" + name + "'", start);
    }
};

} // namespace

WeightPoly parse_weight_expr(std::string_view text) { return Parser(text).run(); }

} // namespace conifold
