// Exact rational arithmetic on arbitrary-precision integers, plus the
// square-root comparison primitive everything else is built on.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace surd {

// Arbitrary-precision integers. Natural is the same type by alias; operations
// that require non-negative input check it themselves.
using Integer = mpz_class;
using Natural = mpz_class;

/// Reduced fraction: gcd(|num|, den) == 1 and den >= 1, always.
class Fraction {
  public:
    Fraction() : num_(0), den_(1) {}
    Fraction(const Integer& n) : num_(n), den_(1) {}
    Fraction(long n) : num_(n), den_(1) {}
    Fraction(int n) : num_(n), den_(1) {}

    // Reduces on construction. Throws std::domain_error on a zero denominator.
    Fraction(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Integer floor() const;

    Fraction operator-() const;
    Fraction& operator+=(const Fraction& o);
    Fraction& operator-=(const Fraction& o);
    Fraction& operator*=(const Fraction& o);
    Fraction& operator/=(const Fraction& o);  // throws on division by zero

    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
    friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const;

  private:
    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

// Spec spelling of the constructor: the unique reduced representation with a
// positive denominator.
inline Fraction reduce(const Integer& num, const Integer& den) { return Fraction(num, den); }

Fraction square(const Fraction& f);
Fraction abs(const Fraction& f);

/// Mediant (v+y)/(u+x) of the stored reduced representations. Strictly
/// between its arguments whenever they differ.
Fraction mediant(const Fraction& f1, const Fraction& f2);

/// Position of a non-negative fraction relative to sqrt(c), decided exactly
/// by cross-multiplied squaring: sign of num_f^2*den_c - num_c*den_f^2.
enum class SqrtCmp { Below, Equal, Above };

SqrtCmp cmp_sqrt(const Fraction& f, const Fraction& c);

/// Exact integer residual num_f^2*den_c - num_c*den_f^2; for integer c and
/// f = a/b this is a^2 - c*b^2. Negative iff f < sqrt(c).
Integer sqrt_residual(const Fraction& f, const Fraction& c);

/// floor(sqrt(n)) by Newton iteration; r*r <= n < (r+1)*(r+1).
Natural isqrt(const Natural& n);

bool is_perfect_square(const Natural& n);

/// Decimal expansion truncated (floored) to `digits` fractional digits.
/// Every emitted digit is a digit of the exact value. Requires f >= 0.
std::string to_decimal(const Fraction& f, std::size_t digits);

/// Presentation form whole + frac_num/frac_den with 0 <= frac_num < frac_den.
struct MixedNumber {
    Integer whole;
    Natural frac_num;
    Natural frac_den;

    Fraction to_fraction() const;
};

MixedNumber to_mixed(const Fraction& f);

// "591 1/8" for mixed values, "591" for integers, "49/64" for pure fractions.
// Negative values are rendered sign-then-magnitude ("-591 1/8").
std::string format_mixed(const Fraction& f);

// Accepts "p/q", "W p/q" and plain integers, with an optional leading sign.
// Throws std::invalid_argument on anything else.
Fraction parse_fraction(std::string_view text);

}  // namespace surd
