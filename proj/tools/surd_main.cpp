// Command-line front end: every algorithm, the four reference tables, and
// machine-readable traces.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "surd/pi_bounds.hpp"
#include "surd/rational.hpp"
#include "surd/sqrt_methods.hpp"
#include "surd/tables.hpp"
#include "surd/trace.hpp"

namespace {

using namespace surd;

struct CommonOpts {
    std::string format = "text";
    std::size_t digits = 6;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: text, csv or jsonl")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    cmd->add_option("--digits", opts.digits, "Truncated decimal digits in output");
}

void print(const Table& t, const CommonOpts& opts) {
    std::cout << render(t, parse_format(opts.format));
}

Side parse_side(const std::string& s) {
    if (s == "lower") return Side::Lower;
    if (s == "upper") return Side::Upper;
    throw std::invalid_argument("--side expects 'lower' or 'upper', got '" + s + "'");
}

SqrtPolicy parse_policy(const std::string& s) {
    if (s == "archimedes") return SqrtPolicy::archimedes_recorded();
    if (s.rfind("dyadic:", 0) == 0) {
        return SqrtPolicy::dyadic(std::stoul(s.substr(7)));
    }
    throw std::invalid_argument("--policy expects 'archimedes' or 'dyadic:N', got '" + s + "'");
}

// "STEP=VALUE" or "CHAIN:STEP=VALUE" with CHAIN in {circumscribed, inscribed};
// a bare STEP applies to the inscribed chain, where the recorded exceptions
// live.
void apply_override(SqrtPolicy& policy, const std::string& spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
        throw std::invalid_argument("malformed override '" + spec +
                                    "': expected [chain:]step=value");
    }
    std::string where = spec.substr(0, eq);
    Fraction value = parse_fraction(spec.substr(eq + 1));
    Direction dir = Direction::UpperChain;
    auto colon = where.find(':');
    if (colon != std::string::npos) {
        std::string chain = where.substr(0, colon);
        if (chain == "circumscribed" || chain == "circ") {
            dir = Direction::LowerChain;
        } else if (chain == "inscribed" || chain == "insc") {
            dir = Direction::UpperChain;
        } else {
            throw std::invalid_argument("unknown chain '" + chain + "' in override '" + spec +
                                        "'");
        }
        where = where.substr(colon + 1);
    }
    unsigned step = static_cast<unsigned>(std::stoul(where));
    policy.set_override(dir, step, value);
}

int run(int argc, char** argv) {
    CLI::App app{"Exact rational square-root enclosures and Archimedes' pi bounds"};
    app.require_subcommand(1);

    // --- sqrt-enclose -------------------------------------------------------
    auto* enclose = app.add_subcommand("sqrt-enclose",
                                       "Mediant interpolation enclosure of sqrt(c)");
    std::string enc_c, enc_lo, enc_hi, enc_width;
    std::size_t enc_steps = 0;
    std::string enc_max_den;
    CommonOpts enc_opts;
    enclose->add_option("c", enc_c, "Radicand (integer or fraction)")->required();
    enclose->add_option("--lo", enc_lo, "Initial lower endpoint");
    enclose->add_option("--hi", enc_hi, "Initial upper endpoint");
    enclose->add_option("--steps", enc_steps, "Stop after N mediant steps");
    enclose->add_option("--width", enc_width, "Stop once the enclosure width is at most p/q");
    enclose->add_option("--max-den", enc_max_den, "Stop before a mediant denominator exceeds N");
    add_common(enclose, enc_opts);

    // --- brute-table --------------------------------------------------------
    auto* brute = app.add_subcommand("brute-table", "Record-setting residual pairs for sqrt(c)");
    std::string brute_c;
    std::string brute_max_b = "780";
    CommonOpts brute_opts;
    brute->add_option("c", brute_c, "Non-square radicand")->required();
    brute->add_option("--max-b", brute_max_b, "Scan denominators up to this bound");
    add_common(brute, brute_opts);

    // --- squares ------------------------------------------------------------
    auto* squares = app.add_subcommand("squares", "Incremental table of n^2 and m*n^2");
    std::string sq_start = "120", sq_end = "124", sq_mult = "3";
    CommonOpts sq_opts;
    squares->add_option("--start", sq_start, "First n");
    squares->add_option("--end", sq_end, "Last n");
    squares->add_option("--mult", sq_mult, "Multiplier m");
    add_common(squares, sq_opts);

    // --- pell2 ---------------------------------------------------------------
    auto* pell = app.add_subcommand("pell2", "The sqrt(2) recurrence a'=a+2b, b'=a+b");
    std::size_t pell_n = 10;
    CommonOpts pell_opts;
    pell->add_option("--iterations", pell_n, "Number of pairs");
    add_common(pell, pell_opts);

    // --- cf -------------------------------------------------------------------
    auto* cf = app.add_subcommand("cf", "Continued fraction of sqrt(c) with convergents");
    std::string cf_c;
    std::size_t cf_terms = 12;
    CommonOpts cf_opts;
    cf->add_option("c", cf_c, "Non-square radicand")->required();
    cf->add_option("--terms", cf_terms, "Number of partial quotients");
    add_common(cf, cf_opts);

    // --- hero -----------------------------------------------------------------
    auto* hero = app.add_subcommand("hero", "Hero iterates (a + c/a)/2");
    std::string hero_a, hero_c = "3";
    std::size_t hero_steps = 2;
    CommonOpts hero_opts;
    hero->add_option("start", hero_a, "Starting value")->required();
    hero->add_option("c", hero_c, "Radicand");
    hero->add_option("--steps", hero_steps, "Number of iterations");
    add_common(hero, hero_opts);

    // --- heath-mixed ------------------------------------------------------------
    auto* heath = app.add_subcommand("heath-mixed",
                                     "Heath's mixed Hero/mediant derivation of the sqrt(3) bounds");
    CommonOpts heath_opts;
    add_common(heath, heath_opts);

    // --- theorem1 -----------------------------------------------------------------
    auto* thm = app.add_subcommand("theorem1",
                                   "Mean-pair check for (x, 3/x): product, bracketing, divisibility");
    std::string thm_x;
    CommonOpts thm_opts;
    thm->add_option("x", thm_x, "Positive rational")->required();
    add_common(thm, thm_opts);

    // --- dyadic-sqrt -----------------------------------------------------------
    auto* dyadic = app.add_subcommand("dyadic-sqrt", "Dyadic bisection bound on sqrt(N)");
    std::string dy_n, dy_side = "lower";
    std::size_t dy_depth = 3;
    bool dy_work = false;
    CommonOpts dy_opts;
    dyadic->add_option("N", dy_n, "Radicand (rational)")->required();
    dyadic->add_option("--depth", dy_depth, "Number of bisections");
    dyadic->add_option("--side", dy_side, "lower or upper");
    dyadic->add_flag("--show-work", dy_work, "Print the bisection squares in text mode");
    add_common(dyadic, dy_opts);

    // --- pi -----------------------------------------------------------------------
    auto* pi = app.add_subcommand("pi", "Both polygon chains and the certified pi enclosure");
    std::string pi_policy = "archimedes";
    std::vector<std::string> pi_overrides;
    CommonOpts pi_opts;
    pi->add_option("--policy", pi_policy, "archimedes or dyadic:N");
    pi->add_option("--override", pi_overrides,
                   "Replace a chain root: [chain:]step=value (repeatable)");
    add_common(pi, pi_opts);

    // --- verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Certify a one-sided rational bound on pi");
    std::string ver_claim, ver_side = "lower";
    std::size_t ver_precision = 64;
    verify->add_option("claimed", ver_claim, "Claimed bound")->required();
    verify->add_option("--side", ver_side, "lower or upper");
    verify->add_option("--precision", ver_precision, "Reference enclosure precision (bits)");

    // --- tables ----------------------------------------------------------------
    for (int which = 1; which <= 4; ++which) {
        app.add_subcommand("table" + std::to_string(which),
                           "Reference table " + std::to_string(which));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage error
    }

    if (enclose->parsed()) {
        Fraction c = parse_fraction(enc_c);
        Fraction lo, hi;
        if (!enc_lo.empty() || !enc_hi.empty()) {
            if (enc_lo.empty() || enc_hi.empty()) {
                throw std::invalid_argument("--lo and --hi must be given together");
            }
            lo = parse_fraction(enc_lo);
            hi = parse_fraction(enc_hi);
        } else {
            Natural g = isqrt(c.floor());
            lo = Fraction(g);
            hi = Fraction(Integer(g + 1));
            if (square(lo) == c) {
                std::cout << "sqrt(" << c.str() << ") = " << lo.str() << "\n";
                return 0;
            }
        }
        StopRule stop = StopRule::steps(enc_steps ? enc_steps : 15);
        if (!enc_width.empty()) stop = StopRule::width(parse_fraction(enc_width));
        if (!enc_max_den.empty()) stop = StopRule::max_denominator(parse_fraction(enc_max_den).num());
        print(interpolate_table(interpolate(c, lo, hi, stop)), enc_opts);
        return 0;
    }
    if (brute->parsed()) {
        Natural c = parse_fraction(brute_c).num();
        Natural max_b = parse_fraction(brute_max_b).num();
        print(brute_scan_table(brute_force_scan(c, max_b), c, brute_opts.digits), brute_opts);
        return 0;
    }
    if (squares->parsed()) {
        Natural mult = parse_fraction(sq_mult).num();
        auto rows = squares_table(parse_fraction(sq_start).num(), parse_fraction(sq_end).num(), mult);
        print(squares_rows_table(rows, mult), sq_opts);
        return 0;
    }
    if (pell->parsed()) {
        print(pell_table(pell2_iterate(pell_n), pell_opts.digits), pell_opts);
        return 0;
    }
    if (cf->parsed()) {
        Natural c = parse_fraction(cf_c).num();
        print(cf_table(c, cf_expansion(c, cf_terms), cf_opts.digits), cf_opts);
        return 0;
    }
    if (hero->parsed()) {
        print(hero_iterates_table(parse_fraction(hero_a), parse_fraction(hero_c), hero_steps,
                                  hero_opts.digits),
              hero_opts);
        return 0;
    }
    if (heath->parsed()) {
        print(heath_table(heath_mixed()), heath_opts);
        return 0;
    }
    if (thm->parsed()) {
        print(theorem1_table(theorem1_check(parse_fraction(thm_x))), thm_opts);
        return 0;
    }
    if (dyadic->parsed()) {
        DyadicTrace trace = dyadic_sqrt_trace(parse_fraction(dy_n), dy_depth);
        OutputFormat fmt = parse_format(dy_opts.format);
        if (fmt == OutputFormat::Text) {
            if (dy_work) std::cout << render(dyadic_table(trace), fmt);
            std::cout << format_mixed(trace.bound(parse_side(dy_side))) << "\n";
        } else {
            std::cout << render(dyadic_table(trace), fmt);
        }
        return 0;
    }
    if (pi->parsed()) {
        SqrtPolicy policy = parse_policy(pi_policy);
        for (const auto& spec : pi_overrides) apply_override(policy, spec);
        PiBoundsResult result = run_archimedes(policy);
        OutputFormat fmt = parse_format(pi_opts.format);
        Table t = pi_table(result, pi_opts.digits);
        std::cout << render(t, fmt);
        if (fmt == OutputFormat::Jsonl) {
            std::cout << "{\"record\":\"result\",\"lower\":\"" << result.lower.str()
                      << "\",\"upper\":\"" << result.upper.str() << "\",\"lower_verdict\":\""
                      << verdict_name(result.lower_verdict) << "\",\"upper_verdict\":\""
                      << verdict_name(result.upper_verdict) << "\"}\n";
        }
        if (result.lower_verdict != Verdict::Pass || result.upper_verdict != Verdict::Pass) {
            return 3;
        }
        return 0;
    }
    if (verify->parsed()) {
        Fraction claimed = parse_fraction(ver_claim);
        Side side = parse_side(ver_side);
        Verdict v = verify_bound(claimed, side, ver_precision);
        std::cout << verdict_name(v) << ": " << claimed.str() << " as " << side_name(side)
                  << " bound on pi\n";
        return v == Verdict::Pass ? 0 : 3;
    }
    for (int which = 1; which <= 4; ++which) {
        if (app.get_subcommand("table" + std::to_string(which))->parsed()) {
            std::cout << emit_paper_table(which);
            return 0;
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
