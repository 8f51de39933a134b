#include "surd/sqrt_methods.hpp"

#include <stdexcept>
#include <utility>

namespace surd {

const char* side_name(Side side) { return side == Side::Lower ? "lower" : "upper"; }

const char* cmp_name(SqrtCmp cmp) {
    switch (cmp) {
        case SqrtCmp::Below: return "below";
        case SqrtCmp::Equal: return "equal";
        case SqrtCmp::Above: return "above";
    }
    return "?";
}

Enclosure::Enclosure(Fraction radicand, Fraction lower, Fraction upper)
    : c(std::move(radicand)), lo(std::move(lower)), hi(std::move(upper)) {
    if (cmp_sqrt(lo, c) != SqrtCmp::Below) {
        throw std::domain_error("invalid bracket: lower endpoint " + lo.str() +
                                " is not below sqrt(" + c.str() + ")");
    }
    if (cmp_sqrt(hi, c) != SqrtCmp::Above) {
        throw std::domain_error("invalid bracket: upper endpoint " + hi.str() +
                                " is not above sqrt(" + c.str() + ")");
    }
}

// ---------------------------------------------------------------------------

std::vector<SquaresRow> squares_table(const Natural& start, const Natural& end,
                                      const Natural& multiplier) {
    if (start > end) {
        throw std::invalid_argument("squares_table: start exceeds end");
    }
    if (start < 0) {
        throw std::invalid_argument("squares_table: negative start");
    }
    std::vector<SquaresRow> rows;
    Natural n = start;
    Natural sq = start * start;  // only the first square is a multiplication
    Natural msq = multiplier * sq;
    for (;;) {
        if (n % 10 == 0) {
            // The incremental chain is self-checking at multiples of ten.
            Natural direct = n * n;
            if (direct != sq || multiplier * direct != msq) {
                throw std::logic_error("squares_table: incremental check failed at n=" +
                                       n.get_str());
            }
        }
        rows.push_back({n, sq, msq});
        if (n == end) break;
        Natural inc = 2 * n + 1;  // (n+1)^2 = n^2 + 2n + 1
        sq += inc;
        msq += multiplier * inc;
        n += 1;
    }
    return rows;
}

std::vector<ResidualRecord> brute_force_scan(const Natural& c, const Natural& max_b) {
    if (max_b < 1) {
        throw std::invalid_argument("brute_force_scan: max_b must be at least 1");
    }
    if (c <= 0 || is_perfect_square(c)) {
        throw std::domain_error("exact root: " + c.get_str() + " is a perfect square");
    }
    std::vector<ResidualRecord> out;
    std::optional<Natural> best_lower, best_upper;  // smallest |residual| so far per side
    for (Natural b = 1; b <= max_b; b += 1) {
        Natural cb2 = c * b * b;
        Natural a = isqrt(cb2);  // best a from below; a+1 is best from above
        Integer r_lo = Integer(a * a) - cb2;
        Natural abs_lo = -r_lo;
        if (!best_lower || abs_lo <= *best_lower) {
            out.push_back({a, b, r_lo, Side::Lower});
            best_lower = abs_lo;
        }
        Natural a_hi = a + 1;
        Integer r_hi = Integer(a_hi * a_hi) - cb2;
        if (!best_upper || Natural(r_hi) <= *best_upper) {
            out.push_back({a_hi, b, r_hi, Side::Upper});
            best_upper = Natural(r_hi);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

InterpolateStepResult interpolate_step(const Enclosure& e) {
    Fraction m = mediant(e.lo, e.hi);
    SqrtCmp c = cmp_sqrt(m, e.c);
    InterpolateStepResult r{m, c, std::nullopt};
    if (c == SqrtCmp::Below) {
        r.next = Enclosure(e.c, m, e.hi);
    } else if (c == SqrtCmp::Above) {
        r.next = Enclosure(e.c, e.lo, m);
    }
    return r;
}

StopRule StopRule::steps(std::size_t n) {
    StopRule s;
    s.kind_ = Kind::Steps;
    s.steps_ = n;
    return s;
}

StopRule StopRule::width(Fraction max_width) {
    StopRule s;
    s.kind_ = Kind::Width;
    s.width_ = std::move(max_width);
    return s;
}

StopRule StopRule::max_denominator(Integer bound) {
    StopRule s;
    s.kind_ = Kind::MaxDenominator;
    s.max_den_ = std::move(bound);
    return s;
}

std::vector<Fraction> InterpolateResult::endpoints() const {
    std::vector<Fraction> out{initial_lo, initial_hi};
    for (const auto& s : steps) out.push_back(s.mediant);
    return out;
}

InterpolateResult interpolate(const Fraction& c, const Fraction& lo0, const Fraction& hi0,
                              const StopRule& stop) {
    Enclosure e(c, lo0, hi0);  // validates the bracket
    InterpolateResult result{c, lo0, hi0, {}, std::nullopt};
    std::size_t k = 0;
    for (;;) {
        switch (stop.kind()) {
            case StopRule::Kind::Steps:
                if (k >= stop.step_count()) return result;
                break;
            case StopRule::Kind::Width:
                if (e.width() <= stop.max_width()) return result;
                break;
            case StopRule::Kind::MaxDenominator:
                // Stop before a mediant whose denominator would exceed the bound.
                if (e.lo.den() + e.hi.den() > stop.denominator_bound()) return result;
                break;
        }
        InterpolateStepResult step = interpolate_step(e);
        ++k;
        if (step.cmp == SqrtCmp::Equal) {
            result.steps.push_back({k, step.mediant, step.mediant, step.mediant,
                                    sqrt_residual(step.mediant, c), step.cmp});
            result.exact = step.mediant;
            return result;
        }
        e = *step.next;
        result.steps.push_back({k, e.lo, e.hi, step.mediant,
                                sqrt_residual(step.mediant, c), step.cmp});
    }
}

// ---------------------------------------------------------------------------

PellPair pell2_step(const PellPair& p) {
    if (p.residual() != p.sign || (p.sign != 1 && p.sign != -1)) {
        throw std::domain_error("pell2_step: invalid pair (" + p.a.get_str() + ", " +
                                p.b.get_str() + ")");
    }
    return {p.a + 2 * p.b, p.a + p.b, -p.sign};
}

std::vector<PellPair> pell2_iterate(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("pell2_iterate: need at least one iteration");
    }
    std::vector<PellPair> out;
    out.reserve(n);
    out.push_back({1, 1, -1});
    while (out.size() < n) out.push_back(pell2_step(out.back()));
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Natural> cf_expansion(const Natural& c, std::size_t n_terms) {
    if (c <= 0 || is_perfect_square(c)) {
        throw std::domain_error("exact root: " + c.get_str() + " is a perfect square");
    }
    std::vector<Natural> terms;
    terms.reserve(n_terms);
    // Surd recurrence over (m, d, a): sqrt(c) = a0 + 1/(a1 + 1/(...)), with
    // m' = d*a - m, d' = (c - m'^2)/d, a' = floor((a0 + m')/d'). d always
    // divides c - m'^2 exactly.
    Natural a0 = isqrt(c);
    Natural m = 0, d = 1, a = a0;
    for (std::size_t i = 0; i < n_terms; ++i) {
        terms.push_back(a);
        Natural m2 = d * a - m;
        Natural d2 = (c - m2 * m2) / d;
        a = (a0 + m2) / d2;
        m = m2;
        d = d2;
    }
    return terms;
}

std::vector<Fraction> convergents(const std::vector<Natural>& terms) {
    std::vector<Fraction> out;
    out.reserve(terms.size());
    Integer p_prev = 1, q_prev = 0;  // virtual convergent p_{-1}/q_{-1}
    Integer p = 0, q = 1;
    bool first = true;
    for (const Natural& t : terms) {
        if (t < (first ? 0 : 1)) {
            throw std::invalid_argument("convergents: partial quotients must be positive");
        }
        Integer p_next = t * p + p_prev;
        Integer q_next = t * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = p_next;
        q = q_next;
        out.emplace_back(p, q);
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------------------

Fraction hero_step(const Fraction& a, const Fraction& c) {
    if (!(a > Fraction(0))) {
        throw std::domain_error("hero_step requires a positive iterate");
    }
    return (a + c / a) / Fraction(2);
}

Fraction harmonic_partner(const Fraction& a, const Fraction& c) {
    if (a.is_zero()) {
        throw std::domain_error("harmonic_partner of zero");
    }
    return c / a;
}

Theorem1Report theorem1_check(const Fraction& x) {
    if (!(x > Fraction(0))) {
        throw std::domain_error("theorem1_check requires x > 0");
    }
    const Fraction three(3);
    Fraction am = hero_step(x, three);
    Fraction hm = harmonic_partner(am, three);  // harmonic mean of (x, 3/x)
    Theorem1Report r;
    r.x = x;
    r.am = am;
    r.hm = hm;
    r.product_is_three = (am * hm == three);
    r.hm_below = (cmp_sqrt(hm, three) == SqrtCmp::Below);
    r.am_above = (cmp_sqrt(am, three) == SqrtCmp::Above);
    r.numerator_divisible_by_three = (hm.num() % 3 == 0);
    return r;
}

HeathResult heath_mixed() {
    const Fraction three(3);
    HeathResult r;
    auto log = [&](std::string label, const Fraction& v) {
        r.steps.push_back({std::move(label), v, cmp_sqrt(v, three)});
    };
    Fraction a(1);
    for (int i = 1; i <= 3; ++i) {
        a = hero_step(a, three);
        log("hero step " + std::to_string(i) + " from 1", a);
    }
    r.third_iterate = a;  // 97/56
    r.partner = harmonic_partner(a, three);
    log("harmonic partner", r.partner);  // 168/97
    r.lower_bound = mediant(a, r.partner);
    log("mediant of the pair", r.lower_bound);  // 265/153
    if (cmp_sqrt(r.lower_bound, three) != SqrtCmp::Below) {
        throw std::logic_error("heath_mixed: mediant is not a lower bound");
    }
    Fraction u(5, 3);
    for (int i = 1; i <= 2; ++i) {
        u = hero_step(u, three);
        log("hero step " + std::to_string(i) + " from 5/3", u);
    }
    r.upper_bound = u;  // 1351/780
    return r;
}

// ---------------------------------------------------------------------------

Fraction midpoint_square(const Fraction& a, const Fraction& b, const Fraction& a_sq,
                         const Fraction& b_sq) {
    const Fraction two(2);
    Fraction half_diff = (a - b) / two;
    return (a_sq + b_sq) / two - half_diff * half_diff;
}

Fraction DyadicTrace::bound(Side side) const {
    if (exact) return *exact;
    return side == Side::Lower ? lower : upper;
}

DyadicTrace dyadic_sqrt_trace(const Fraction& N, std::size_t depth) {
    if (!(N > Fraction(0))) {
        throw std::domain_error("dyadic square root of a non-positive number");
    }
    DyadicTrace t;
    t.radicand = N;
    t.lines.push_back({std::nullopt, N});

    // Integer part. floor(sqrt(floor(N))) brackets sqrt(N) in [g, g+1] for
    // every non-square N; the verification squares go into the trace.
    Natural g = isqrt(N.floor());
    Fraction lo(g), hi(Integer(g + 1));
    if (g >= 1) t.lines.push_back({lo - Fraction(1), square(lo - Fraction(1))});
    t.lines.push_back({hi, square(hi)});
    Fraction lo_sq = square(lo);
    t.lines.push_back({lo, lo_sq});
    if (lo_sq == N) {
        t.exact = lo;
        t.lower = t.upper = lo;
        return t;
    }
    Fraction hi_sq = square(hi);

    for (std::size_t i = 0; i < depth; ++i) {
        Fraction mid = (lo + hi) / Fraction(2);
        Fraction mid_sq = midpoint_square(lo, hi, lo_sq, hi_sq);
        t.lines.push_back({mid, mid_sq});
        if (mid_sq == N) {
            t.exact = mid;
            t.lower = t.upper = mid;
            return t;
        }
        if (mid_sq < N) {
            lo = mid;
            lo_sq = mid_sq;
        } else {
            hi = mid;
            hi_sq = mid_sq;
        }
    }
    t.lower = lo;
    t.upper = hi;
    return t;
}

Fraction dyadic_sqrt_bound(const Fraction& N, std::size_t depth, Side side) {
    return dyadic_sqrt_trace(N, depth).bound(side);
}

}  // namespace surd
