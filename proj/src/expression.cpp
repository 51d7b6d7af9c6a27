#include "tangency/expression.hpp"

#include <cctype>
#include <string>

namespace tangency {

namespace {

class Parser {
   public:
    Parser(std::string_view text, int n, int arity) : text_(text), n_(n), arity_(arity) {}

    FlagElt parse() {
        FlagElt value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PreconditionError("expression parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w) {
        skip_space();
        if (text_.substr(pos_, w.size()) != w) return false;
        const std::size_t end = pos_ + w.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        return true;
    }

    BigInt integer() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer() {
        BigInt v = integer();
        if (v > 1000) fail("integer too large here");
        return v.convert_to<int>();
    }

    FlagElt constant(const DPoly& c) const { return FlagElt(SchubertElt(n_, Partition{0, 0}, c), arity_); }
    FlagElt schubert(int a, int b) const { return FlagElt(SchubertElt(n_, Partition{a, b}), arity_); }

    FlagElt expr() {
        FlagElt acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    // Juxtaposition multiplies too, so "3 (d - 2) d" and "120 d^2" parse.
    bool starts_atom() {
        skip_space();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'd' || c == 's' || c == 'H';
    }

    FlagElt term() {
        FlagElt acc = unary();
        for (;;) {
            if (accept('*'))
                acc = mult_flag(acc, unary());
            else if (starts_atom())
                acc = mult_flag(acc, unary());
            else
                return acc;
        }
    }

    FlagElt unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        FlagElt base = atom();
        if (accept('^')) base = power(base, small_integer());
        return base;
    }

    FlagElt atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(DPoly(integer()));
        if (accept('(')) {
            FlagElt inner = expr();
            expect(')');
            return inner;
        }
        if (accept_word("d")) return constant(DPoly::d());
        if (accept_word("H1")) return FlagElt(SchubertElt::one(n_), arity_, 1, 0);
        if (accept_word("H2")) {
            if (arity_ != 2) fail("H2 needs arity 2");
            return FlagElt(SchubertElt::one(n_), arity_, 0, 1);
        }
        // Digit shorthand: s1, s2, s11, s22, s33, ... (one digit per row).
        if (c == 's' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            std::size_t end = pos_ + 1;
            while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
            const std::string_view word = text_.substr(pos_ + 1, end - pos_ - 1);
            if (word.size() > 2 || !std::isdigit(static_cast<unsigned char>(word.back())))
                fail("bad Schubert shorthand 's" + std::string(word) + "'; use s[a,b]");
            const int a = word[0] - '0';
            const int b = word.size() == 2 ? word[1] - '0' : 0;
            if (b > a) fail("partition must satisfy a >= b");
            pos_ = end;
            return schubert(a, b);
        }
        if (text_.substr(pos_, 2) == "s[") {
            pos_ += 2;
            const int a = small_integer();
            int b = 0;
            if (accept(',')) b = small_integer();
            expect(']');
            if (b > a) fail("partition must satisfy a >= b");
            return schubert(a, b);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int n_;
    int arity_;
};

}  // namespace

FlagElt parse_flag_expression(std::string_view text, int n, int arity) { return Parser(text, n, arity).parse(); }

SchubertElt parse_schubert_expression(std::string_view text, int n) {
    FlagElt x = parse_flag_expression(text, n, 1);
    for (const auto& [e, c] : x.terms())
        if (e.first != 0 || e.second != 0) throw PreconditionError("expression contains H factors");
    return x.coeff(0, 0);
}

DPoly parse_dpoly(std::string_view text) {
    if (text.find_first_of("sH") != std::string_view::npos)
        throw PreconditionError("expected a polynomial in d only");
    return parse_schubert_expression(text, 2).coeff(Partition{0, 0});
}

}  // namespace tangency
