#include "surd/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace surd {

namespace {

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer pow10(std::size_t d) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, d);
    return p;
}

}  // namespace

Fraction::Fraction(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("undefined fraction: zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Integer Fraction::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    return q;
}

Fraction Fraction::operator-() const {
    Fraction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Fraction& Fraction::operator+=(const Fraction& o) {
    return *this = Fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Fraction& Fraction::operator-=(const Fraction& o) {
    return *this = Fraction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Fraction& Fraction::operator*=(const Fraction& o) {
    return *this = Fraction(num_ * o.num_, den_ * o.den_);
}

Fraction& Fraction::operator/=(const Fraction& o) {
    if (o.num_ == 0) {
        throw std::domain_error("division by zero fraction");
    }
    return *this = Fraction(num_ * o.den_, den_ * o.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Fraction::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

Fraction square(const Fraction& f) { return f * f; }

Fraction abs(const Fraction& f) { return f.is_negative() ? -f : f; }

Fraction mediant(const Fraction& f1, const Fraction& f2) {
    return Fraction(f1.num() + f2.num(), f1.den() + f2.den());
}

Integer sqrt_residual(const Fraction& f, const Fraction& c) {
    return f.num() * f.num() * c.den() - c.num() * f.den() * f.den();
}

SqrtCmp cmp_sqrt(const Fraction& f, const Fraction& c) {
    if (f.is_negative() || c.is_negative()) {
        throw std::domain_error("cmp_sqrt requires non-negative arguments");
    }
    int s = sgn(sqrt_residual(f, c));
    if (s < 0) return SqrtCmp::Below;
    if (s > 0) return SqrtCmp::Above;
    return SqrtCmp::Equal;
}

Natural isqrt(const Natural& n) {
    if (n < 0) {
        throw std::domain_error("isqrt of a negative number");
    }
    if (n == 0) return 0;
    // Newton iteration from a power-of-two overestimate; monotone decreasing
    // until it lands on floor(sqrt(n)).
    std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Natural x = Natural(1) << static_cast<unsigned long>((bits + 1) / 2);
    for (;;) {
        Natural y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

bool is_perfect_square(const Natural& n) {
    if (n < 0) return false;
    Natural r = isqrt(n);
    return r * r == n;
}

std::string to_decimal(const Fraction& f, std::size_t digits) {
    if (f.is_negative()) {
        throw std::domain_error("to_decimal requires a non-negative value");
    }
    Integer scaled = (f.num() * pow10(digits)) / f.den();
    std::string s = scaled.get_str();
    if (digits == 0) return s;
    if (s.size() <= digits) {
        s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, 1, '.');
    return s;
}

Fraction MixedNumber::to_fraction() const {
    return Fraction(whole * frac_den + frac_num, frac_den);
}

MixedNumber to_mixed(const Fraction& f) {
    MixedNumber m;
    m.whole = f.floor();
    m.frac_num = f.num() - m.whole * f.den();
    m.frac_den = f.den();
    return m;
}

std::string format_mixed(const Fraction& f) {
    if (f.is_negative()) return "-" + format_mixed(-f);
    MixedNumber m = to_mixed(f);
    if (m.frac_num == 0) return m.whole.get_str();
    std::string frac = m.frac_num.get_str() + "/" + m.frac_den.get_str();
    if (m.whole == 0) return frac;
    return m.whole.get_str() + " " + frac;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_fraction(std::string_view text) {
    throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
}

// Base-10 always; the mpz_class string constructor would otherwise treat a
// leading zero as octal.
Integer decimal_integer(std::string_view digits) {
    return Integer(std::string(digits), 10);
}

// Parses "p" or "p/q" made of plain digits.
Fraction parse_simple(std::string_view tok, std::string_view whole_text) {
    auto slash = tok.find('/');
    if (slash == std::string_view::npos) {
        if (!all_digits(tok)) bad_fraction(whole_text);
        return Fraction(decimal_integer(tok));
    }
    std::string_view p = tok.substr(0, slash);
    std::string_view q = tok.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) bad_fraction(whole_text);
    Integer den = decimal_integer(q);
    if (den == 0) bad_fraction(whole_text);
    return Fraction(decimal_integer(p), den);
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_fraction(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = (s.front() == '-');
        s.remove_prefix(1);
        if (s.empty()) bad_fraction(text);
    }

    Fraction value;
    auto space = s.find(' ');
    if (space == std::string_view::npos) {
        value = parse_simple(s, text);
    } else {
        // Mixed number "W p/q": sign applies to the whole value.
        std::string_view whole = s.substr(0, space);
        std::string_view frac = s.substr(space + 1);
        while (!frac.empty() && frac.front() == ' ') frac.remove_prefix(1);
        if (!all_digits(whole) || frac.find('/') == std::string_view::npos) bad_fraction(text);
        value = Fraction(decimal_integer(whole)) + parse_simple(frac, text);
    }
    return negative ? -value : value;
}

}  // namespace surd
