#include "planebranch/parse.hpp"

#include <cctype>

#include "planebranch/error.hpp"

namespace planebranch {

namespace {

// Tiny recursive-descent scanner over sums of terms. Terms are products
// of an optional rational coefficient and variable powers.
class Scanner {
public:
    explicit Scanner(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw error(errc::parse_error, msg + " at position " + std::to_string(pos_) +
                                           " in \"" + s_ + "\"");
    }

    long natural() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a number");
        return std::stol(s_.substr(start, pos_ - start));
    }

    bool at_digit() {
        skip_ws();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    // signed p or p/q
    Rat rational(int sign) {
        long num = natural();
        long den = 1;
        if (accept('/')) den = natural();
        if (den == 0) fail("zero denominator");
        return make_rat(sign * num, den);
    }

    // leading + / - of a term; returns the accumulated sign
    int term_sign(bool first) {
        int sign = 1;
        bool seen = false;
        for (;;) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '+') { ++pos_; seen = true; continue; }
            if (pos_ < s_.size() && s_[pos_] == '-') { ++pos_; sign = -sign; seen = true; continue; }
            break;
        }
        if (!first && !seen) fail("expected '+' or '-' between terms");
        return sign;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

std::map<long, Rat> parse_series(const std::string& text) {
    Scanner sc(text);
    std::map<long, Rat> out;
    bool first = true;
    while (!sc.done()) {
        int sign = sc.term_sign(first);
        first = false;
        Rat coeff(1);
        bool have_coeff = false;
        if (sc.at_digit()) {
            coeff = sc.rational(1);
            have_coeff = true;
        }
        long exp = 0;
        if (have_coeff && !sc.accept('*')) {
            // bare constant term
        } else {
            if (sc.peek() != 'T') sc.fail("expected 'T'");
            sc.accept('T');
            exp = sc.accept('^') ? sc.natural() : 1;
        }
        Rat value = coeff * sign;
        if (out.count(exp))
            throw error(errc::duplicate_exponent, "exponent " + std::to_string(exp) +
                                                      " appears twice in \"" + text + "\"");
        out[exp] = value;
    }
    if (out.empty()) throw error(errc::parse_error, "empty series expression");
    return out;
}

BiPoly parse_poly(const std::string& text) {
    Scanner sc(text);
    BiPoly out;
    bool first = true;
    bool any = false;
    while (!sc.done()) {
        int sign = sc.term_sign(first);
        first = false;
        any = true;
        Rat coeff(sign);
        bool have_factor = false;
        if (sc.at_digit()) {
            coeff = sc.rational(sign);
            have_factor = true;
            if (!sc.accept('*')) {
                out.add_term(0, 0, coeff);
                continue;
            }
            have_factor = false;
        }
        long i = 0, j = 0;
        for (;;) {
            char c = sc.peek();
            if (c != 'X') {
                if (!have_factor) sc.fail("expected 'X1' or 'X2'");
                break;
            }
            sc.accept('X');
            char which = sc.peek();
            if (which != '1' && which != '2') sc.fail("expected 'X1' or 'X2'");
            sc.accept(which);
            long e = sc.accept('^') ? sc.natural() : 1;
            if (which == '1') i += e;
            else j += e;
            have_factor = true;
            if (!sc.accept('*')) break;
        }
        out.add_term(i, j, coeff);
    }
    if (!any) throw error(errc::parse_error, "empty polynomial expression");
    return out;
}

Rat parse_rat(const std::string& text) {
    Scanner sc(text);
    int sign = 1;
    for (;;) {
        if (sc.accept('+')) continue;
        if (sc.accept('-')) { sign = -sign; continue; }
        break;
    }
    Rat r = sc.rational(sign);
    if (!sc.done()) sc.fail("trailing characters after rational");
    return r;
}

}  // namespace planebranch
