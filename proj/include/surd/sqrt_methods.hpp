// Square-root approximation procedures: brute-force residual scan,
// the sqrt(2) Pell recurrence, mediant interpolation, continued fractions,
// Hero's method and dyadic bisection. All arithmetic is exact.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "surd/rational.hpp"

namespace surd {

enum class Side { Lower, Upper };

/// Certified bracket lo < sqrt(c) < hi. Construction checks both endpoints
/// by exact squaring and throws std::domain_error naming the offending one.
/// An exact hit is never an Enclosure; algorithms return it separately.
struct Enclosure {
    Fraction c;
    Fraction lo;
    Fraction hi;

    Enclosure(Fraction radicand, Fraction lower, Fraction upper);

    Fraction width() const { return hi - lo; }
};

// ---------------------------------------------------------------------------
// Incremental squares and the brute-force residual scan

struct SquaresRow {
    Natural n;
    Natural square;    // n^2
    Natural multiple;  // multiplier * n^2
};

/// Squares n^2 and multiplier*n^2 for n in [start, end], computed
/// incrementally from (n+1)^2 = n^2 + 2n + 1. Every row with n % 10 == 0 is
/// re-verified by direct multiplication.
std::vector<SquaresRow> squares_table(const Natural& start, const Natural& end,
                                      const Natural& multiplier);

struct ResidualRecord {
    Natural a;
    Natural b;
    Integer residual;  // a^2 - c*b^2, never zero for non-square c
    Side side;         // Lower iff residual < 0
};

/// Scans b = 1..max_b, taking for each b the nearest integers a around
/// sqrt(c*b^2), and emits the pair whenever its |residual| is no larger than
/// every earlier record on the same side. Ties emit: equal residuals at
/// larger b are strictly better approximations. Throws std::domain_error
/// ("exact root") when c is a perfect square.
std::vector<ResidualRecord> brute_force_scan(const Natural& c, const Natural& max_b);

// ---------------------------------------------------------------------------
// Mediant interpolation

struct InterpolateStepResult {
    Fraction mediant;
    SqrtCmp cmp;
    std::optional<Enclosure> next;  // empty iff cmp == Equal (mediant is the root)
};

/// One interpolation step: replace the endpoint on the mediant's side of
/// sqrt(c). The new enclosure is strictly narrower.
InterpolateStepResult interpolate_step(const Enclosure& e);

class StopRule {
  public:
    static StopRule steps(std::size_t n);
    static StopRule width(Fraction max_width);
    static StopRule max_denominator(Integer bound);

    enum class Kind { Steps, Width, MaxDenominator };
    Kind kind() const { return kind_; }
    std::size_t step_count() const { return steps_; }
    const Fraction& max_width() const { return width_; }
    const Integer& denominator_bound() const { return max_den_; }

  private:
    StopRule() = default;
    Kind kind_ = Kind::Steps;
    std::size_t steps_ = 0;
    Fraction width_;
    Integer max_den_;
};

struct InterpolateRecord {
    std::size_t step;  // 1-based
    Fraction lo;       // enclosure after this step
    Fraction hi;
    Fraction mediant;
    Integer residual;  // exact residual of the mediant against c
    SqrtCmp cmp;
};

struct InterpolateResult {
    Fraction c;
    Fraction initial_lo;
    Fraction initial_hi;
    std::vector<InterpolateRecord> steps;
    std::optional<Fraction> exact;  // set when a mediant hit sqrt(c) exactly

    Fraction lo() const { return steps.empty() ? initial_lo : steps.back().lo; }
    Fraction hi() const { return steps.empty() ? initial_hi : steps.back().hi; }

    // initial_lo, initial_hi, then each step's mediant: every fraction the
    // method ever produced, in order of first appearance.
    std::vector<Fraction> endpoints() const;
};

/// Repeated mediant interpolation from a valid bracket until the stop rule
/// fires (steps counts mediant applications). Terminates early on an exact
/// root. Invalid initial brackets throw std::domain_error naming the
/// offending endpoint.
InterpolateResult interpolate(const Fraction& c, const Fraction& lo0, const Fraction& hi0,
                              const StopRule& stop);

// ---------------------------------------------------------------------------
// Pell recurrence for sqrt(2)

struct PellPair {
    Natural a;
    Natural b;
    int sign;  // a^2 - 2b^2, always +1 or -1

    Integer residual() const { return Integer(a * a - 2 * b * b); }
};

/// (a, b, s) -> (a + 2b, a + b, -s); the new pair satisfies the identity
/// (a+2b)^2 - 2(a+b)^2 = -(a^2 - 2b^2).
PellPair pell2_step(const PellPair& p);

/// First n pairs starting from (1, 1, -1); a/b alternates below/above sqrt(2).
std::vector<PellPair> pell2_iterate(std::size_t n);

// ---------------------------------------------------------------------------
// Continued fractions

/// First n_terms partial quotients of sqrt(c) by the quadratic-surd
/// recurrence with exact integer state. Throws std::domain_error ("exact
/// root") when c is a perfect square.
std::vector<Natural> cf_expansion(const Natural& c, std::size_t n_terms);

/// Convergents by the standard recurrence p_k = a_k p_{k-1} + p_{k-2};
/// consecutive results satisfy |p*q' - p'*q| = 1.
std::vector<Fraction> convergents(const std::vector<Natural>& terms);

// ---------------------------------------------------------------------------
// Hero's method

/// (a + c/a) / 2. Strictly above sqrt(c) unless a is the exact root.
Fraction hero_step(const Fraction& a, const Fraction& c);

/// c/a: the harmonic mean of the pair (x, c/x) whose arithmetic mean is a.
Fraction harmonic_partner(const Fraction& a, const Fraction& c);

struct Theorem1Report {
    Fraction x;
    Fraction am;  // arithmetic mean of (x, 3/x)
    Fraction hm;  // harmonic mean, equals 3/am
    bool product_is_three;
    bool hm_below;
    bool am_above;
    bool numerator_divisible_by_three;

    bool all_pass() const {
        return product_is_three && hm_below && am_above && numerator_divisible_by_three;
    }
};

/// Checks the arithmetic/harmonic mean pair of (x, 3/x): their product is 3,
/// they bracket sqrt(3), and the reduced numerator of the harmonic mean is
/// divisible by 3. Requires x > 0.
Theorem1Report theorem1_check(const Fraction& x);

struct HeathStep {
    std::string label;
    Fraction value;
    SqrtCmp vs_sqrt3;
};

struct HeathResult {
    std::vector<HeathStep> steps;
    Fraction third_iterate;  // 97/56, three Hero steps from 1
    Fraction partner;        // 168/97
    Fraction lower_bound;    // 265/153, the mediant of the pair
    Fraction upper_bound;    // 1351/780, two Hero steps from 5/3
};

/// Heath's mixed strategy for the classical sqrt(3) bounds: Hero iterates
/// from 1, the harmonic partner, their mediant (certified a lower bound),
/// then Hero again from 5/3 for the upper bound.
HeathResult heath_mixed();

// ---------------------------------------------------------------------------
// Dyadic bisection

struct DyadicLine {
    std::optional<Fraction> value;  // empty for the leading radicand line
    Fraction square;                // the radicand itself, or value^2
};

struct DyadicTrace {
    Fraction radicand;
    std::vector<DyadicLine> lines;  // radicand, integer checks, one midpoint per bisection
    Fraction lower;
    Fraction upper;
    std::optional<Fraction> exact;

    Fraction bound(Side side) const;
};

/// Bisects [floor(sqrt(N)), floor(sqrt(N))+1] `depth` times, choosing the
/// half containing sqrt(N) by exact midpoint squaring (squares are carried
/// along, each midpoint square costs one application of midpoint_square).
/// Results have denominator dividing 2^depth. Exact roots short-circuit.
DyadicTrace dyadic_sqrt_trace(const Fraction& N, std::size_t depth);

Fraction dyadic_sqrt_bound(const Fraction& N, std::size_t depth, Side side);

/// ((a+b)/2)^2 computed as (a^2+b^2)/2 - ((a-b)/2)^2 from cached squares.
Fraction midpoint_square(const Fraction& a, const Fraction& b, const Fraction& a_sq,
                         const Fraction& b_sq);

const char* side_name(Side side);
const char* cmp_name(SqrtCmp cmp);

}  // namespace surd
