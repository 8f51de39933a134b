// Archimedes' 96-gon computation: the angle-halving recurrence with directed
// rational square-root bounds, rescaling, and exact certification of the
// resulting enclosure of pi.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surd/rational.hpp"
#include "surd/sqrt_methods.hpp"

namespace surd {

/// LowerChain: circumscribed polygon, every surd replaced by a rational at or
/// below its true value (yields the upper bound on pi). UpperChain: inscribed
/// polygon, surds bounded from above (yields the lower bound).
enum class Direction { LowerChain, UpperChain };

const char* direction_name(Direction d);

/// Right triangle (a, c, b) with c fixed along a chain between rescalings and
/// b a directed bound on sqrt(a^2 + c^2). The implied internal angle is
/// 30 degrees / 2^doublings_done.
struct TriangleState {
    Fraction a;
    Fraction c;
    Fraction b;
    Direction direction;
    unsigned doublings_done = 0;
};

/// Root policy for the chains. Dyadic(depth) bisects every root to the given
/// depth. archimedes_recorded() is depth 3 plus the two historically recorded
/// inscribed-chain values (1838 9/11 and 1009 1/6) and the two rescalings
/// that produce the 1823/240 and 1007/66 states. Overrides are validated
/// against the direction inequality on use, never trusted.
class SqrtPolicy {
  public:
    static SqrtPolicy dyadic(std::size_t depth);
    static SqrtPolicy archimedes_recorded();

    std::size_t depth() const { return depth_; }
    const std::string& name() const { return name_; }

    void set_override(Direction dir, unsigned step, Fraction value);
    void clear_override(Direction dir, unsigned step);
    void set_rescale(Direction dir, unsigned step, Fraction factor);

    std::optional<Fraction> override_for(Direction dir, unsigned step) const;
    std::optional<Fraction> rescale_for(Direction dir, unsigned step) const;

  private:
    SqrtPolicy() = default;
    std::size_t depth_ = 3;
    std::string name_;
    std::map<std::pair<int, unsigned>, Fraction> overrides_;
    std::map<std::pair<int, unsigned>, Fraction> rescales_;
};

/// One angle halving: a' = a + b, then the policy's rescale for this step (if
/// any) is applied to the whole state, then b' is the directed bound on
/// sqrt(a'^2 + c^2) (policy override or dyadic bisection). The direction
/// inequality on b' is re-validated exactly; a violating override throws
/// std::domain_error naming the step.
TriangleState halve_angle(const TriangleState& s, const SqrtPolicy& policy);

/// Multiplies a, b, c by a positive factor. The chain's eventual pi bound is
/// a ratio, so the state is scale-free.
TriangleState rescale(const TriangleState& s, const Fraction& factor);

struct ChainStep {
    unsigned step;  // 1-based
    Fraction a;
    Fraction c;
    Fraction b;
    Fraction radicand;  // a^2 + c^2 after the a-update and any rescale
    std::string decision;
    bool overridden;
    std::optional<Fraction> rescale_factor;
};

struct ChainResult {
    Fraction bound;
    std::vector<ChainStep> steps;
    TriangleState seed;
    TriangleState final_state;
};

/// Circumscribed chain from (a, c, b) = (265, 153, 306): a is the classical
/// lower bound on sqrt(3) = cot 30 scaled by c, and b = 2c exactly because
/// csc 30 = 2. After `doublings` halvings the upper bound on pi is
/// (6*2^doublings) * c / a.
ChainResult circumscribed_chain(unsigned doublings, const SqrtPolicy& policy);

/// Inscribed chain from (1351, 780, 1560), the upper bound on sqrt(3); the
/// lower bound on pi is (6*2^doublings) * c / b.
ChainResult inscribed_chain(unsigned doublings, const SqrtPolicy& policy);

/// Either chain seeded from an arbitrary directed bound p/q on sqrt(3):
/// state (p, q, 2q). Used with tight interpolated bounds for the exact
/// polygon limits.
ChainResult run_chain(Direction dir, unsigned doublings, const SqrtPolicy& policy,
                      const Fraction& sqrt3_bound);

enum class Verdict { Pass, Fail, Indeterminate };

const char* verdict_name(Verdict v);

struct PiEnclosure {
    Fraction lower;
    Fraction upper;
};

/// Rational enclosure of pi of width below 2^-precision, from deep chains
/// with interpolated sqrt(3) seeds.
PiEnclosure pi_reference(std::size_t precision);

/// Checks a claimed one-sided bound on pi against a reference enclosure,
/// doubling the precision a bounded number of times if the reference cannot
/// separate the claim.
Verdict verify_bound(const Fraction& claimed, Side side, std::size_t precision);

struct PiBoundsResult {
    Fraction lower;
    Fraction upper;
    ChainResult inscribed;
    ChainResult circumscribed;
    Verdict lower_verdict;
    Verdict upper_verdict;
};

/// Runs both chains with doublings = 4 and certifies lower < pi < upper via
/// verify_bound.
PiBoundsResult run_archimedes(const SqrtPolicy& policy);

struct PolygonBounds {
    Fraction lower;
    Fraction upper;
    std::string lower_decimal;  // floored to 6 digits
    std::string upper_decimal;
};

/// Bounds from the 6*2^doublings-gon computed so accurately (Dyadic(precision)
/// roots, interpolated sqrt(3) seeds) that the only remaining error is the
/// polygon's own. precision >= 32.
PolygonBounds exact_polygon_bounds(std::size_t precision, unsigned doublings);

/// The 96-gon case of exact_polygon_bounds.
PolygonBounds exact_96gon_bounds(std::size_t precision);

}  // namespace surd
