// Builders that turn algorithm traces into Tables, plus the four classical
// reference tables regenerated from the algorithms (never from literals).

#pragma once

#include <cstddef>
#include <vector>

#include "surd/pi_bounds.hpp"
#include "surd/rational.hpp"
#include "surd/sqrt_methods.hpp"
#include "surd/trace.hpp"

namespace surd {

Table interpolate_table(const InterpolateResult& r);
Table brute_scan_table(const std::vector<ResidualRecord>& records, const Natural& c,
                       std::size_t digits);
Table squares_rows_table(const std::vector<SquaresRow>& rows, const Natural& multiplier);
Table pell_table(const std::vector<PellPair>& pairs, std::size_t digits);
Table cf_table(const Natural& c, const std::vector<Natural>& terms, std::size_t digits);
Table hero_iterates_table(const Fraction& start, const Fraction& c, std::size_t steps,
                          std::size_t digits);
Table heath_table(const HeathResult& r);
Table theorem1_table(const Theorem1Report& r);
Table dyadic_table(const DyadicTrace& t);

/// Chain steps with a leading chain-name column; includes every rescale and
/// override decision.
Table chain_table(const ChainResult& r, Direction dir);

/// Both chains plus a final result record (jsonl emits it as
/// {"record":"result","lower":...,"upper":...}).
Table pi_table(const PiBoundsResult& r, std::size_t digits);

/// The four reference tables, text layout, regenerated from the algorithms:
/// 1 incremental squares, 2 brute-force records, 3 the interpolation
/// enclosures of sqrt(3), 4 the dyadic determination of sqrt(349450).
std::string emit_paper_table(int which);

}  // namespace surd
