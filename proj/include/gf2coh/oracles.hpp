#ifndef GF2COH_ORACLES_HPP
#define GF2COH_ORACLES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gf2coh/gf2.hpp"

namespace gf2coh::oracles {

// Independent reference implementations used to cross-check the main code
// paths. They deliberately avoid Gaussian elimination and the bitwise
// binomial rule, trading speed for obviousness.

/// Rank via exhaustive span enumeration: log2 of the number of distinct
/// XOR combinations of the rows. Only sensible for small row counts.
std::size_t span_rank(const BooleanMatrix& m);

/// Whether v is an XOR combination of the columns of m, by enumeration.
bool in_column_span(const BooleanMatrix& m, const BooleanVector& v);

/// C(top, bottom) mod 2 through exact arithmetic (128-bit intermediates);
/// valid for 0 <= top <= 64.
int binom_parity_exact(int top, int bottom);

/// Number of partitions of total into exactly `parts` positive parts, by
/// recursive enumeration of nonincreasing part lists.
long long count_partitions(long long total, int parts);

/// Number of strictly increasing index tuples of the given length within
/// [min_index, max_index] summing to `degree`, by subset enumeration.
long long count_index_tuples(int length, int degree, int min_index, int max_index);

} // namespace gf2coh::oracles

#endif
