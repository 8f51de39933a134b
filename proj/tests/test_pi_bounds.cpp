#include "surd/pi_bounds.hpp"

#include <stdexcept>

#include "doctest.h"
#include "test_support.hpp"

using namespace surd;
using surd::testing::make_rng;
using surd::testing::random_positive_fraction;

TEST_CASE("halve_angle extends the leg and bounds the new hypotenuse") {
    SqrtPolicy policy = SqrtPolicy::archimedes_recorded();
    TriangleState s{Fraction(265), Fraction(153), Fraction(306), Direction::LowerChain, 0};
    TriangleState next = halve_angle(s, policy);
    CHECK(next.a == Fraction(571));
    CHECK(next.c == Fraction(153));
    CHECK(next.b == parse_fraction("591 1/8"));
    CHECK(next.doublings_done == 1);
    // Lower direction: b'^2 <= a'^2 + c^2, exactly.
    CHECK(square(next.b) <= square(next.a) + square(next.c));

    // Depth-0 roots fall back to the integer part: sqrt(80) in [8, 9).
    TriangleState t{Fraction(3), Fraction(4), Fraction(5), Direction::LowerChain, 0};
    TriangleState u = halve_angle(t, SqrtPolicy::dyadic(0));
    CHECK(u.a == Fraction(8));
    CHECK(u.b == Fraction(8));
}

TEST_CASE("rescale multiplies the state and preserves direction") {
    TriangleState s{parse_fraction("5924 3/4"), Fraction(780), parse_fraction("3013 3/4"),
                    Direction::UpperChain, 1};
    TriangleState r = rescale(s, Fraction(4, 13));
    CHECK(r.a == Fraction(1823));
    CHECK(r.c == Fraction(240));

    TriangleState id = rescale(s, Fraction(1));
    CHECK(id.a == s.a);
    CHECK(id.b == s.b);
    CHECK(id.c == s.c);

    TriangleState s2{parse_fraction("3661 9/11"), Fraction(240), Fraction(1), Direction::UpperChain, 2};
    TriangleState r2 = rescale(s2, Fraction(11, 40));
    CHECK(r2.a == Fraction(1007));
    CHECK(r2.c == Fraction(66));

    CHECK_THROWS_AS(rescale(s, Fraction(0)), std::domain_error);
    CHECK_THROWS_AS(rescale(s, Fraction(-1, 2)), std::domain_error);
}

TEST_CASE("circumscribed chain reproduces the recorded 96-gon values") {
    auto r = circumscribed_chain(4, SqrtPolicy::archimedes_recorded());
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0].a == Fraction(571));
    CHECK(r.steps[0].b == parse_fraction("591 1/8"));
    CHECK(r.steps[1].a == parse_fraction("1162 1/8"));
    CHECK(r.steps[1].b == parse_fraction("1172 1/8"));
    CHECK(r.steps[2].a == parse_fraction("2334 1/4"));
    CHECK(r.steps[2].b == parse_fraction("2339 1/4"));
    CHECK(r.steps[3].a == parse_fraction("4673 1/2"));
    CHECK(r.bound == Fraction(29376, 9347));

    // Exact cross-multiplication: 29376/9347 < 22/7.
    CHECK(Integer(29376) * 7 == 205632);
    CHECK(Integer(22) * 9347 == 205634);
    CHECK(r.bound < Fraction(22, 7));

    // One doubling bounds pi from the 12-gon; compare with a precise run.
    auto coarse = circumscribed_chain(1, SqrtPolicy::dyadic(3));
    CHECK(coarse.bound == Fraction(12 * 153, 571));
    auto precise = exact_polygon_bounds(64, 1);
    CHECK(coarse.bound >= precise.upper);
}

TEST_CASE("inscribed chain uses the recorded exceptional roots and rescales") {
    auto r = inscribed_chain(4, SqrtPolicy::archimedes_recorded());
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0].a == Fraction(2911));
    CHECK(r.steps[0].c == Fraction(780));
    CHECK(r.steps[0].b == parse_fraction("3013 3/4"));
    CHECK(!r.steps[0].overridden);

    CHECK(r.steps[1].rescale_factor.has_value());
    CHECK(*r.steps[1].rescale_factor == Fraction(4, 13));
    CHECK(r.steps[1].a == Fraction(1823));
    CHECK(r.steps[1].c == Fraction(240));
    CHECK(r.steps[1].b == parse_fraction("1838 9/11"));
    CHECK(r.steps[1].overridden);

    CHECK(*r.steps[2].rescale_factor == Fraction(11, 40));
    CHECK(r.steps[2].a == Fraction(1007));
    CHECK(r.steps[2].c == Fraction(66));
    CHECK(r.steps[2].b == parse_fraction("1009 1/6"));

    CHECK(r.steps[3].a == parse_fraction("2016 1/6"));
    CHECK(r.steps[3].b == parse_fraction("2017 1/4"));
    CHECK(!r.steps[3].overridden);

    CHECK(r.bound == Fraction(25344, 8069));
    CHECK(r.bound == Fraction(96 * 66) / parse_fraction("2017 1/4"));

    // Exact cross-multiplication: 25344/8069 > 223/71.
    CHECK(Integer(25344) * 71 == 1799424);
    CHECK(Integer(223) * 8069 == 1799387);
    CHECK(r.bound > Fraction(223, 71));

    // Upper direction holds exactly at every step.
    for (const auto& s : r.steps) {
        CHECK(square(s.b) >= s.radicand);
    }
}

TEST_CASE("the recorded alpha root is coarser than plain bisection") {
    // Plain depth-3 bisection of sqrt(1823^2 + 240^2) gives 1838 3/4; the
    // recorded value 1838 9/11 is above it but still a valid upper bound.
    Fraction radicand = square(Fraction(1823)) + square(Fraction(240));
    CHECK(radicand == Fraction(3380929));
    CHECK(dyadic_sqrt_bound(radicand, 3, Side::Upper) == parse_fraction("1838 3/4"));
    CHECK(parse_fraction("1838 9/11") > parse_fraction("1838 3/4"));
    CHECK(square(parse_fraction("1838 9/11")) >= radicand);
}

TEST_CASE("beta step variants") {
    // Without the recorded override the bisection itself yields 1009 1/4.
    SqrtPolicy plain = SqrtPolicy::archimedes_recorded();
    plain.clear_override(Direction::UpperChain, 3);
    auto cleared = inscribed_chain(4, plain);
    CHECK(cleared.steps[2].b == parse_fraction("1009 1/4"));

    // Forcing 1009 1/4 explicitly is identical.
    SqrtPolicy forced = SqrtPolicy::archimedes_recorded();
    forced.set_override(Direction::UpperChain, 3, parse_fraction("1009 1/4"));
    auto what_if = inscribed_chain(4, forced);
    CHECK(what_if.bound == cleared.bound);

    // Either way the final bound clears 3 9/64.
    CHECK(what_if.bound > parse_fraction("3 9/64"));
    // The recorded 1009 1/6 gives the strictly better bound.
    auto recorded = inscribed_chain(4, SqrtPolicy::archimedes_recorded());
    CHECK(recorded.bound > what_if.bound);
}

TEST_CASE("overrides violating the direction inequality are rejected") {
    SqrtPolicy bad = SqrtPolicy::archimedes_recorded();
    bad.set_override(Direction::UpperChain, 2, parse_fraction("1838 1/2"));
    CHECK_THROWS_WITH_AS(inscribed_chain(4, bad), doctest::Contains("inscribed step 2"),
                         std::domain_error);

    SqrtPolicy bad_low = SqrtPolicy::dyadic(3);
    bad_low.set_override(Direction::LowerChain, 1, Fraction(592));  // 592^2 > 349450
    CHECK_THROWS_WITH_AS(circumscribed_chain(4, bad_low), doctest::Contains("circumscribed step 1"),
                         std::domain_error);
}

TEST_CASE("direction soundness after every step, any depth") {
    for (std::size_t depth : {0u, 1u, 2u, 3u, 5u, 9u}) {
        SqrtPolicy policy = SqrtPolicy::dyadic(depth);
        for (auto dir : {Direction::LowerChain, Direction::UpperChain}) {
            auto r = dir == Direction::LowerChain ? circumscribed_chain(5, policy)
                                                  : inscribed_chain(5, policy);
            for (const auto& s : r.steps) {
                if (dir == Direction::LowerChain) {
                    CHECK(square(s.b) <= s.radicand);
                } else {
                    CHECK(square(s.b) >= s.radicand);
                }
                CHECK(s.b > Fraction(0));
            }
        }
    }
}

TEST_CASE("chain bounds stay outside the true polygon limits") {
    // References computed so precisely that the polygon error dominates.
    auto ref96 = exact_polygon_bounds(128, 4);
    Fraction margin(1, Integer(1) << 100);

    auto rng = make_rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t depth = static_cast<std::size_t>(trial % 6);
        SqrtPolicy policy = SqrtPolicy::dyadic(depth);
        if (trial % 3 == 1) {
            // Replace one root by a differently-deep dyadic bound of the same
            // radicand: still a valid directed bound.
            unsigned step = 1 + static_cast<unsigned>(trial % 4);
            auto base_c = circumscribed_chain(4, policy);
            policy.set_override(Direction::LowerChain, step,
                                dyadic_sqrt_bound(base_c.steps[step - 1].radicand,
                                                  depth + 7, Side::Lower));
            auto base_i = inscribed_chain(4, policy);
            policy.set_override(Direction::UpperChain, step,
                                dyadic_sqrt_bound(base_i.steps[step - 1].radicand,
                                                  depth + 7, Side::Upper));
        }
        if (trial % 4 == 2) {
            Fraction factor = random_positive_fraction(rng, 40);
            policy.set_rescale(Direction::UpperChain, 2, factor);
            policy.set_rescale(Direction::LowerChain, 3, factor);
        }
        auto circ = circumscribed_chain(4, policy);
        auto insc = inscribed_chain(4, policy);
        CHECK(circ.bound >= ref96.upper - margin);
        CHECK(insc.bound <= ref96.lower + margin);
        CHECK(insc.bound < circ.bound);
    }
}

TEST_CASE("the pi bound is a scale-free ratio") {
    auto rng = make_rng(32);
    for (auto dir : {Direction::LowerChain, Direction::UpperChain}) {
        auto r = dir == Direction::LowerChain ? circumscribed_chain(4, SqrtPolicy::dyadic(4))
                                              : inscribed_chain(4, SqrtPolicy::dyadic(4));
        for (int i = 0; i < 10; ++i) {
            TriangleState scaled = rescale(r.final_state, random_positive_fraction(rng, 1000));
            Fraction edges(96);
            Fraction rebound = dir == Direction::LowerChain ? edges * scaled.c / scaled.a
                                                            : edges * scaled.c / scaled.b;
            CHECK(rebound == r.bound);
        }
    }
}

TEST_CASE("pi_reference encloses pi tightly") {
    PiEnclosure ref = pi_reference(64);
    CHECK(ref.lower < ref.upper);
    CHECK(ref.upper - ref.lower <= Fraction(1, Integer(1) << 64));
    CHECK(ref.lower > Fraction(314159265, 100000000));
    CHECK(ref.upper < Fraction(314159266, 100000000));
}

TEST_CASE("verify_bound certifies one-sided claims") {
    CHECK(verify_bound(Fraction(223, 71), Side::Lower, 64) == Verdict::Pass);
    CHECK(verify_bound(Fraction(22, 7), Side::Upper, 64) == Verdict::Pass);
    CHECK(verify_bound(Fraction(63, 20), Side::Lower, 64) == Verdict::Fail);
    CHECK(verify_bound(Fraction(3), Side::Upper, 64) == Verdict::Fail);
    CHECK(verify_bound(Fraction(25344, 8069), Side::Lower, 64) == Verdict::Pass);
    CHECK(verify_bound(Fraction(29376, 9347), Side::Upper, 64) == Verdict::Pass);
}

TEST_CASE("run_archimedes returns the certified classical bounds") {
    auto r = run_archimedes(SqrtPolicy::archimedes_recorded());
    CHECK(r.lower == Fraction(25344, 8069));
    CHECK(r.upper == Fraction(29376, 9347));
    CHECK(r.lower_verdict == Verdict::Pass);
    CHECK(r.upper_verdict == Verdict::Pass);
    CHECK(to_decimal(r.upper, 6) == "3.142826");
    CHECK(to_decimal(Fraction(223, 71), 6) == "3.140845");
    CHECK(to_decimal(Fraction(22, 7), 6) == "3.142857");

    // Integer square-root bounds only: still a valid, coarse enclosure.
    auto coarse = run_archimedes(SqrtPolicy::dyadic(0));
    CHECK(coarse.lower < coarse.upper);
    CHECK(coarse.lower_verdict == Verdict::Pass);
    CHECK(coarse.upper_verdict == Verdict::Pass);

    // High precision shrinks the enclosure to the true 96-gon window.
    auto fine = run_archimedes(SqrtPolicy::dyadic(64));
    CHECK(fine.upper - fine.lower < Fraction(17, 10000));
    CHECK(fine.lower_verdict == Verdict::Pass);
    CHECK(fine.upper_verdict == Verdict::Pass);
}

TEST_CASE("exact 96-gon bounds floor to the known six digits") {
    auto b = exact_96gon_bounds(64);
    CHECK(b.lower_decimal == "3.141031");
    CHECK(b.upper_decimal == "3.142714");
    CHECK(b.lower < b.upper);
    CHECK_THROWS_AS(exact_polygon_bounds(16, 4), std::invalid_argument);
}

TEST_CASE("each doubling cuts both errors by about four") {
    PiEnclosure ref = pi_reference(128);
    Fraction pi_mid = (ref.lower + ref.upper) / Fraction(2);

    auto gon48 = exact_polygon_bounds(64, 3);
    auto gon96 = exact_polygon_bounds(64, 4);

    Fraction upper_ratio = (gon48.upper - pi_mid) / (gon96.upper - pi_mid);
    Fraction lower_ratio = (pi_mid - gon48.lower) / (pi_mid - gon96.lower);
    CHECK(upper_ratio >= Fraction(39, 10));
    CHECK(upper_ratio <= Fraction(41, 10));
    CHECK(lower_ratio >= Fraction(39, 10));
    CHECK(lower_ratio <= Fraction(41, 10));

    // The upper-chain error runs about twice the lower-chain error.
    Fraction side_ratio = (gon96.upper - pi_mid) / (pi_mid - gon96.lower);
    CHECK(side_ratio >= Fraction(9, 5));
    CHECK(side_ratio <= Fraction(11, 5));
}
