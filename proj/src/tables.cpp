#include "surd/tables.hpp"

#include <stdexcept>
#include <string>

namespace surd {

namespace {

// UTF-8 glyphs used in text renderings only; csv/jsonl stay plain ASCII.
constexpr const char* kSquared = "²";   // superscript two
constexpr const char* kTimes = "×";     // multiplication sign
constexpr const char* kMinus = "−";     // minus sign
constexpr const char* kSim = "∼";       // tilde operator
constexpr const char* kRoot = "√";      // square root
constexpr const char* kGamma = "γ";
constexpr const char* kPi = "π";

std::string pretty_int(const Integer& n) {
    if (n < 0) return kMinus + Integer(-n).get_str();
    return n.get_str();
}

std::string root_of(const Fraction& c) {
    if (c.is_integer()) return kRoot + c.str();
    return kRoot + ("(" + c.str() + ")");
}

// "= 1.75" when the expansion terminates within `digits` places, otherwise
// the truncated "~ 1.732050" form.
std::string paper_decimal(const Fraction& f, std::size_t digits) {
    std::string dec = to_decimal(f, digits);
    Integer scaled = f.num();
    for (std::size_t i = 0; i < digits; ++i) scaled *= 10;
    if (scaled % f.den() == 0) {
        while (dec.back() == '0') dec.pop_back();
        if (dec.back() == '.') dec.pop_back();
        return std::string("= ") + dec;
    }
    return std::string(kSim) + " " + dec;
}

std::string enclosure_line(const Fraction& lo, const Fraction& c, const Fraction& hi) {
    return lo.str() + " < " + root_of(c) + " < " + hi.str();
}

// Display width: code points, not bytes (the glyphs used here are all
// single-column).
std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++w;
    }
    return w;
}

std::string pad(std::string s, std::size_t width) {
    std::size_t w = display_width(s);
    if (w < width) s.append(width - w, ' ');
    return s;
}

}  // namespace

Table interpolate_table(const InterpolateResult& r) {
    Table t;
    t.columns = {"step", "lo", "hi", "mediant", "residual"};
    t.text_lines.push_back(enclosure_line(r.initial_lo, r.c, r.initial_hi));
    for (const auto& s : r.steps) {
        t.rows.push_back({std::to_string(s.step), s.lo.str(), s.hi.str(), s.mediant.str(),
                          s.residual.get_str()});
        if (s.cmp == SqrtCmp::Equal) {
            t.text_lines.push_back(root_of(r.c) + " = " + s.mediant.str());
        } else {
            t.text_lines.push_back(enclosure_line(s.lo, r.c, s.hi));
        }
    }
    return t;
}

Table brute_scan_table(const std::vector<ResidualRecord>& records, const Natural& c,
                       std::size_t digits) {
    Table t;
    t.columns = {"b", "a", "residual", "side", "approx"};
    std::vector<std::string> identities;
    std::size_t width = 0;
    for (const auto& rec : records) {
        Fraction f(rec.a, rec.b);
        t.rows.push_back({rec.b.get_str(), rec.a.get_str(), rec.residual.get_str(),
                          side_name(rec.side), to_decimal(f, digits)});
        std::string id = rec.a.get_str() + kSquared + " " + kMinus + " " + c.get_str() +
                         kTimes + rec.b.get_str() + kSquared + " = " +
                         pretty_int(rec.residual) + ",";
        identities.push_back(id);
        width = std::max(width, display_width(id));
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        Fraction f(rec.a, rec.b);
        std::string line = pad(identities[i], width + 2);
        if (rec.side == Side::Upper) line += "  ";  // upper bounds sit right
        line += rec.a.get_str() + "/" + rec.b.get_str() + " " + paper_decimal(f, digits);
        t.text_lines.push_back(line);
    }
    return t;
}

Table squares_rows_table(const std::vector<SquaresRow>& rows, const Natural& multiplier) {
    Table t;
    t.columns = {"n", "square", "multiple"};
    std::vector<std::string> left, right;
    std::size_t width = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        left.push_back(r.n.get_str() + kSquared + " = " + r.square.get_str());
        right.push_back(multiplier.get_str() + kTimes + r.n.get_str() + kSquared + " = " +
                        r.multiple.get_str());
        if (i + 1 < rows.size()) {
            Natural inc = 2 * r.n + 1;
            left.push_back("  +" + inc.get_str());
            right.push_back("  +" + Natural(multiplier * inc).get_str());
        }
        t.rows.push_back({r.n.get_str(), r.square.get_str(), r.multiple.get_str()});
    }
    for (const auto& s : left) width = std::max(width, display_width(s));
    for (std::size_t i = 0; i < left.size(); ++i) {
        t.text_lines.push_back(pad(left[i], width + 4) + right[i]);
    }
    return t;
}

Table pell_table(const std::vector<PellPair>& pairs, std::size_t digits) {
    Table t;
    t.columns = {"step", "a", "b", "sign", "approx"};
    std::size_t k = 0;
    for (const auto& p : pairs) {
        ++k;
        Fraction f(p.a, p.b);
        t.rows.push_back({std::to_string(k), p.a.get_str(), p.b.get_str(),
                          std::to_string(p.sign), to_decimal(f, digits)});
        t.text_lines.push_back(p.a.get_str() + kSquared + " " + kMinus + " 2" + kTimes +
                               p.b.get_str() + kSquared + " = " + pretty_int(p.sign) + ",  " +
                               p.a.get_str() + "/" + p.b.get_str() + " " +
                               paper_decimal(f, digits));
    }
    return t;
}

Table cf_table(const Natural& c, const std::vector<Natural>& terms, std::size_t digits) {
    Table t;
    t.columns = {"step", "term", "convergent", "position", "approx"};
    std::vector<Fraction> conv = convergents(terms);
    std::string head = "terms:";
    for (const auto& a : terms) head += " " + a.get_str();
    t.text_lines.push_back(head);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        SqrtCmp cmp = cmp_sqrt(conv[i], Fraction(c));
        t.rows.push_back({std::to_string(i + 1), terms[i].get_str(), conv[i].str(),
                          cmp_name(cmp), to_decimal(conv[i], digits)});
        t.text_lines.push_back(std::to_string(i + 1) + ": " + conv[i].str() + "  (" +
                               cmp_name(cmp) + " " + root_of(Fraction(c)) + ", " +
                               paper_decimal(conv[i], digits) + ")");
    }
    return t;
}

Table hero_iterates_table(const Fraction& start, const Fraction& c, std::size_t steps,
                          std::size_t digits) {
    Table t;
    t.columns = {"step", "value", "position", "approx"};
    t.text_lines.push_back("start: " + format_mixed(start) + "  (" +
                           cmp_name(cmp_sqrt(start, c)) + " " + root_of(c) + ")");
    Fraction a = start;
    for (std::size_t k = 1; k <= steps; ++k) {
        a = hero_step(a, c);
        SqrtCmp cmp = cmp_sqrt(a, c);
        t.rows.push_back({std::to_string(k), a.str(), cmp_name(cmp), to_decimal(a, digits)});
        t.text_lines.push_back(std::to_string(k) + ": " + a.str() + "  (" + cmp_name(cmp) +
                               " " + root_of(c) + ", " + paper_decimal(a, digits) + ")");
    }
    return t;
}

Table heath_table(const HeathResult& r) {
    Table t;
    t.columns = {"step", "label", "value", "position"};
    std::size_t k = 0;
    for (const auto& s : r.steps) {
        ++k;
        t.rows.push_back({std::to_string(k), s.label, s.value.str(), cmp_name(s.vs_sqrt3)});
        t.text_lines.push_back(s.label + ": " + s.value.str() + "  (" + cmp_name(s.vs_sqrt3) +
                               " " + kRoot + "3)");
    }
    t.text_lines.push_back("lower bound " + r.lower_bound.str() + ", upper bound " +
                           r.upper_bound.str());
    return t;
}

Table theorem1_table(const Theorem1Report& r) {
    Table t;
    t.columns = {"x",       "arithmetic_mean", "harmonic_mean", "product_is_three",
                 "hm_below", "am_above",        "num_divisible_by_three", "verdict"};
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    t.rows.push_back({r.x.str(), r.am.str(), r.hm.str(), yn(r.product_is_three),
                      yn(r.hm_below), yn(r.am_above), yn(r.numerator_divisible_by_three),
                      r.all_pass() ? "pass" : "fail"});
    t.text_lines.push_back("x = " + r.x.str());
    t.text_lines.push_back("arithmetic mean a = " + r.am.str() + "  (" +
                           cmp_name(cmp_sqrt(r.am, Fraction(3))) + " " + kRoot + "3)");
    t.text_lines.push_back("harmonic mean h = " + r.hm.str() + "  (" +
                           cmp_name(cmp_sqrt(r.hm, Fraction(3))) + " " + kRoot + "3)");
    t.text_lines.push_back(std::string("a") + kTimes + "h = 3: " + yn(r.product_is_three));
    t.text_lines.push_back("3 divides numerator of h: " +
                           std::string(yn(r.numerator_divisible_by_three)));
    t.text_lines.push_back(std::string("verdict: ") + (r.all_pass() ? "pass" : "fail"));
    return t;
}

Table dyadic_table(const DyadicTrace& t) {
    Table out;
    out.columns = {"value", "square"};
    for (const auto& line : t.lines) {
        out.rows.push_back({line.value ? line.value->str() : "", line.square.str()});
        if (line.value) {
            std::string v = format_mixed(*line.value);
            if (!line.value->is_integer()) v = "(" + v + ")";
            out.text_lines.push_back(v + kSquared + " = " + format_mixed(line.square));
        } else {
            out.text_lines.push_back("N = " + format_mixed(line.square));
        }
    }
    return out;
}

Table chain_table(const ChainResult& r, Direction dir) {
    Table t;
    t.columns = {"chain", "step", "a", "c", "b", "radicand", "decision", "override"};
    for (const auto& s : r.steps) {
        t.rows.push_back({direction_name(dir), std::to_string(s.step), s.a.str(), s.c.str(),
                          s.b.str(), s.radicand.str(), s.decision,
                          s.overridden ? s.b.str() : ""});
        t.text_lines.push_back("step " + std::to_string(s.step) + ": a = " +
                               format_mixed(s.a) + ", c = " + format_mixed(s.c) + ", b = " +
                               format_mixed(s.b) + "  [" + s.decision + "]");
    }
    return t;
}

Table pi_table(const PiBoundsResult& r, std::size_t digits) {
    Table t;
    t.columns = {"chain", "step", "a", "c", "b", "radicand", "decision", "override"};
    Table circ = chain_table(r.circumscribed, Direction::LowerChain);
    Table insc = chain_table(r.inscribed, Direction::UpperChain);
    t.text_lines.push_back("circumscribed chain (upper bound):");
    for (auto& line : circ.text_lines) t.text_lines.push_back("  " + line);
    t.text_lines.push_back("inscribed chain (lower bound):");
    for (auto& line : insc.text_lines) t.text_lines.push_back("  " + line);
    for (auto& row : circ.rows) t.rows.push_back(std::move(row));
    for (auto& row : insc.rows) t.rows.push_back(std::move(row));
    t.text_lines.push_back(std::string(kPi) + " > " + r.lower.str() + " " +
                           paper_decimal(r.lower, digits) + "  [verified: " +
                           verdict_name(r.lower_verdict) + "]");
    t.text_lines.push_back(std::string(kPi) + " < " + r.upper.str() + " " +
                           paper_decimal(r.upper, digits) + "  [verified: " +
                           verdict_name(r.upper_verdict) + "]");
    return t;
}

std::string emit_paper_table(int which) {
    switch (which) {
        case 1: {
            Table t = squares_rows_table(squares_table(120, 124, 3), 3);
            return render(t, OutputFormat::Text);
        }
        case 2: {
            // The classical selection: the scan's integer seeds at b = 1 are
            // dropped, everything else is the record list for c = 3.
            auto records = brute_force_scan(3, 780);
            std::vector<ResidualRecord> selection;
            for (const auto& rec : records) {
                if (rec.b > 1) selection.push_back(rec);
            }
            Table t = brute_scan_table(selection, 3, 6);
            return render(t, OutputFormat::Text);
        }
        case 3: {
            auto r = interpolate(Fraction(3), Fraction(1), Fraction(2), StopRule::steps(15));
            Table t = interpolate_table(r);
            return render(t, OutputFormat::Text);
        }
        case 4: {
            // The first circumscribed halving: a = 265 + 306 = 571, so the
            // hypotenuse bound is the dyadic lower bound on sqrt(571^2+153^2).
            SqrtPolicy policy = SqrtPolicy::archimedes_recorded();
            ChainResult chain = circumscribed_chain(1, policy);
            const Fraction& a = chain.steps[0].a;
            const Fraction& c = chain.steps[0].c;
            DyadicTrace trace = dyadic_sqrt_trace(chain.steps[0].radicand, policy.depth());
            Table t = dyadic_table(trace);
            t.text_lines[0] = std::string(kGamma) + kSquared + " = " + a.str() + kSquared +
                              " + " + c.str() + kSquared + " = " + format_mixed(trace.radicand);
            t.text_lines.push_back(std::string(kGamma) + " > " +
                                   format_mixed(trace.bound(Side::Lower)));
            return render(t, OutputFormat::Text);
        }
        default:
            throw std::invalid_argument("no such table: " + std::to_string(which));
    }
}

}  // namespace surd
