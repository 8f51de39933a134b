#include "surd/pi_bounds.hpp"

#include <stdexcept>
#include <utility>

namespace surd {

const char* direction_name(Direction d) {
    return d == Direction::LowerChain ? "circumscribed" : "inscribed";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

SqrtPolicy SqrtPolicy::dyadic(std::size_t depth) {
    SqrtPolicy p;
    p.depth_ = depth;
    p.name_ = "dyadic:" + std::to_string(depth);
    return p;
}

SqrtPolicy SqrtPolicy::archimedes_recorded() {
    SqrtPolicy p;
    p.depth_ = 3;
    p.name_ = "archimedes";
    // The two recorded inscribed-chain roots that are not plain depth-3
    // dyadic bounds, and the two simplifications that precede them.
    p.set_rescale(Direction::UpperChain, 2, Fraction(4, 13));
    p.set_override(Direction::UpperChain, 2, parse_fraction("1838 9/11"));
    p.set_rescale(Direction::UpperChain, 3, Fraction(11, 40));
    p.set_override(Direction::UpperChain, 3, parse_fraction("1009 1/6"));
    return p;
}

void SqrtPolicy::set_override(Direction dir, unsigned step, Fraction value) {
    overrides_[{static_cast<int>(dir), step}] = std::move(value);
}

void SqrtPolicy::clear_override(Direction dir, unsigned step) {
    overrides_.erase({static_cast<int>(dir), step});
}

void SqrtPolicy::set_rescale(Direction dir, unsigned step, Fraction factor) {
    rescales_[{static_cast<int>(dir), step}] = std::move(factor);
}

std::optional<Fraction> SqrtPolicy::override_for(Direction dir, unsigned step) const {
    auto it = overrides_.find({static_cast<int>(dir), step});
    if (it == overrides_.end()) return std::nullopt;
    return it->second;
}

std::optional<Fraction> SqrtPolicy::rescale_for(Direction dir, unsigned step) const {
    auto it = rescales_.find({static_cast<int>(dir), step});
    if (it == rescales_.end()) return std::nullopt;
    return it->second;
}

namespace {

Side root_side(Direction d) {
    return d == Direction::LowerChain ? Side::Lower : Side::Upper;
}

void check_direction(const Fraction& b, const Fraction& radicand, Direction dir,
                     unsigned step) {
    bool ok = dir == Direction::LowerChain ? square(b) <= radicand : square(b) >= radicand;
    if (!(b > Fraction(0)) || !ok) {
        throw std::domain_error(std::string("override at ") + direction_name(dir) + " step " +
                                std::to_string(step) + " violates the " +
                                (dir == Direction::LowerChain ? "lower" : "upper") +
                                "-bound requirement: " + b.str() + "^2 vs " + radicand.str());
    }
}

}  // namespace

TriangleState rescale(const TriangleState& s, const Fraction& factor) {
    if (!(factor > Fraction(0))) {
        throw std::domain_error("rescale factor must be positive");
    }
    return {s.a * factor, s.c * factor, s.b * factor, s.direction, s.doublings_done};
}

TriangleState halve_angle(const TriangleState& s, const SqrtPolicy& policy) {
    unsigned step = s.doublings_done + 1;
    TriangleState next{s.a + s.b, s.c, s.b, s.direction, step};
    if (auto factor = policy.rescale_for(s.direction, step)) {
        next = rescale(next, *factor);
    }
    Fraction radicand = square(next.a) + square(next.c);
    if (auto ov = policy.override_for(s.direction, step)) {
        check_direction(*ov, radicand, s.direction, step);
        next.b = *ov;
    } else {
        next.b = dyadic_sqrt_bound(radicand, policy.depth(), root_side(s.direction));
        check_direction(next.b, radicand, s.direction, step);
    }
    return next;
}

ChainResult run_chain(Direction dir, unsigned doublings, const SqrtPolicy& policy,
                      const Fraction& sqrt3_bound) {
    if (doublings < 1) {
        throw std::invalid_argument("chain needs at least one doubling");
    }
    // Hexagon seed: a/c is the directed bound on sqrt(3) = cot 30, and
    // b = 2c exactly because csc 30 = 2.
    TriangleState state{Fraction(sqrt3_bound.num()), Fraction(sqrt3_bound.den()),
                        Fraction(2 * sqrt3_bound.den()), dir, 0};
    ChainResult result;
    result.seed = state;
    for (unsigned k = 1; k <= doublings; ++k) {
        auto factor = policy.rescale_for(dir, k);
        auto ov = policy.override_for(dir, k);
        state = halve_angle(state, policy);
        std::string decision;
        if (factor) decision = "rescale " + factor->str() + "; ";
        decision += ov ? "override" : "dyadic(" + std::to_string(policy.depth()) + ")";
        result.steps.push_back({k, state.a, state.c, state.b,
                                square(state.a) + square(state.c), decision,
                                ov.has_value(), factor});
    }
    result.final_state = state;
    Integer edges = Integer(6) << doublings;
    // Circumscribed: pi < edges * tan(theta) = edges * c / a.
    // Inscribed:     pi > edges * sin(theta) = edges * c / b.
    result.bound = dir == Direction::LowerChain ? Fraction(edges) * state.c / state.a
                                                : Fraction(edges) * state.c / state.b;
    return result;
}

ChainResult circumscribed_chain(unsigned doublings, const SqrtPolicy& policy) {
    return run_chain(Direction::LowerChain, doublings, policy, Fraction(265, 153));
}

ChainResult inscribed_chain(unsigned doublings, const SqrtPolicy& policy) {
    return run_chain(Direction::UpperChain, doublings, policy, Fraction(1351, 780));
}

namespace {

Fraction two_pow_inverse(std::size_t bits) { return Fraction(1, Integer(1) << bits); }

// Directed sqrt(3) bounds tight enough that seeding error is negligible at
// the requested dyadic depth.
std::pair<Fraction, Fraction> sqrt3_enclosure(std::size_t bits) {
    auto r = interpolate(Fraction(3), Fraction(1), Fraction(2), StopRule::width(two_pow_inverse(bits)));
    return {r.lo(), r.hi()};
}

}  // namespace

PiEnclosure pi_reference(std::size_t precision) {
    // The polygon gap shrinks by 4 per doubling; d halvings leave a gap of
    // about 1.7e-3 * 4^(4-d), so d = precision/2 + 2 over-delivers, and the
    // root depth leaves bisection error far below the gap.
    unsigned doublings = static_cast<unsigned>(precision / 2 + 2);
    std::size_t depth = precision + doublings + 8;
    auto [lo3, hi3] = sqrt3_enclosure(depth);
    SqrtPolicy policy = SqrtPolicy::dyadic(depth);
    ChainResult circ = run_chain(Direction::LowerChain, doublings, policy, lo3);
    ChainResult insc = run_chain(Direction::UpperChain, doublings, policy, hi3);
    return {insc.bound, circ.bound};
}

Verdict verify_bound(const Fraction& claimed, Side side, std::size_t precision) {
    constexpr int kMaxRetries = 4;
    std::size_t p = precision;
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt, p *= 2) {
        PiEnclosure ref = pi_reference(p);
        if (side == Side::Lower) {
            if (claimed <= ref.lower) return Verdict::Pass;
            if (claimed >= ref.upper) return Verdict::Fail;
        } else {
            if (claimed >= ref.upper) return Verdict::Pass;
            if (claimed <= ref.lower) return Verdict::Fail;
        }
        // claimed lies inside the reference enclosure: tighten and retry.
    }
    return Verdict::Indeterminate;
}

PiBoundsResult run_archimedes(const SqrtPolicy& policy) {
    PiBoundsResult r{Fraction(), Fraction(), {}, {}, Verdict::Indeterminate,
                     Verdict::Indeterminate};
    r.circumscribed = circumscribed_chain(4, policy);
    r.inscribed = inscribed_chain(4, policy);
    r.lower = r.inscribed.bound;
    r.upper = r.circumscribed.bound;
    if (!(r.lower < r.upper)) {
        throw std::logic_error("pi bounds out of order: " + r.lower.str() +
                               " !< " + r.upper.str());
    }
    r.lower_verdict = verify_bound(r.lower, Side::Lower, 64);
    r.upper_verdict = verify_bound(r.upper, Side::Upper, 64);
    return r;
}

PolygonBounds exact_polygon_bounds(std::size_t precision, unsigned doublings) {
    if (precision < 32) {
        throw std::invalid_argument("exact_polygon_bounds needs precision >= 32");
    }
    auto [lo3, hi3] = sqrt3_enclosure(precision + 8);
    SqrtPolicy policy = SqrtPolicy::dyadic(precision);
    ChainResult circ = run_chain(Direction::LowerChain, doublings, policy, lo3);
    ChainResult insc = run_chain(Direction::UpperChain, doublings, policy, hi3);
    return {insc.bound, circ.bound, to_decimal(insc.bound, 6), to_decimal(circ.bound, 6)};
}

PolygonBounds exact_96gon_bounds(std::size_t precision) {
    return exact_polygon_bounds(precision, 4);
}

}  // namespace surd
