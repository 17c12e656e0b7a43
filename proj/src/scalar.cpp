#include "g2c/scalar.hpp"

#include <cctype>

namespace g2c {

namespace {

// Appends a signed rational followed by an optional suffix ("*i").
void append_term(std::string& out, const Rational& q, const char* suffix, bool leading) {
    Int num = numerator(q);
    Int den = denominator(q);
    if (num < 0) {
        out += '-';
        num = -num;
    } else if (!leading) {
        out += '+';
    }
    out += num.str();
    if (den != 1) {
        out += '/';
        out += den.str();
    }
    out += suffix;
}

}  // namespace

std::string rational_str(const Rational& q) {
    std::string out;
    append_term(out, q, "", true);
    return out;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (re_ != 0) append_term(out, re_, "", true);
    if (im_ != 0) append_term(out, im_, "*i", re_ == 0);
    return out;
}

namespace {

// Reads one rational term starting at pos: [sign] digits [/ digits].
Rational read_rational(const std::string& s, size_t& pos) {
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = (s[pos] == '-');
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw std::invalid_argument("Scalar::parse: expected digits in '" + s + "'");
    Int num(s.substr(digits, pos - digits));
    if (negative) num = -num;
    Int den = 1;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw std::invalid_argument("Scalar::parse: expected denominator in '" + s + "'");
        den = Int(s.substr(dstart, pos - dstart));
        if (den == 0) throw std::invalid_argument("Scalar::parse: zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    size_t pos = 0;
    Rational q = read_rational(s, pos);
    if (pos != s.size()) throw std::invalid_argument("parse_rational: trailing input in '" + text + "'");
    return q;
}

Scalar Scalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("Scalar::parse: empty input");

    Rational re = 0, im = 0;
    size_t pos = 0;
    while (pos < s.size()) {
        // Bare "i" / "+i" / "-i".
        size_t sign_len = (s[pos] == '+' || s[pos] == '-') ? 1 : 0;
        if (pos + sign_len < s.size() && s[pos + sign_len] == 'i' &&
            (pos + sign_len + 1 == s.size())) {
            im += (sign_len && s[pos] == '-') ? -1 : 1;
            pos += sign_len + 1;
            continue;
        }
        Rational q = read_rational(s, pos);
        if (pos < s.size() && (s[pos] == '*' || s[pos] == 'i')) {
            if (s[pos] == '*') ++pos;
            if (pos >= s.size() || s[pos] != 'i')
                throw std::invalid_argument("Scalar::parse: expected 'i' in '" + text + "'");
            ++pos;
            im += q;
        } else {
            re += q;
        }
    }
    return Scalar(re, im);
}

bool scalar_less(const Scalar& a, const Scalar& b) {
    Rational na = a.norm2(), nb = b.norm2();
    if (na != nb) return na < nb;
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

std::optional<Rational> sqrt_exact(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    Int num = numerator(q), den = denominator(q);
    Int rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

std::optional<Scalar> sqrt_exact(const Scalar& s) {
    if (s.is_zero()) return Scalar(0);
    if (s.is_real()) {
        if (s.re() > 0) {
            auto r = sqrt_exact(s.re());
            if (!r) return std::nullopt;
            return Scalar(*r);
        }
        auto r = sqrt_exact(static_cast<Rational>(-s.re()));
        if (!r) return std::nullopt;
        return Scalar(Rational(0), *r);  // principal: sqrt(-x) = i*sqrt(x)
    }
    // x^2 - y^2 = re, 2xy = im; requires |s| and (re + |s|)/2 to be squares.
    auto mod = sqrt_exact(s.norm2());
    if (!mod) return std::nullopt;
    auto x = sqrt_exact(static_cast<Rational>((s.re() + *mod) / 2));
    if (!x || *x == 0) return std::nullopt;
    Rational y = static_cast<Rational>(s.im() / (2 * (*x)));
    // principal branch has positive real part when im != 0
    return Scalar(*x, y);
}

}  // namespace g2c
