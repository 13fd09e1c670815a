#ifndef GF2COH_COMBINATORICS_HPP
#define GF2COH_COMBINATORICS_HPP

namespace gf2coh {

/// Binomial coefficient C(top, bottom) modulo 2, total on all integers with
/// the convention C(N, t) = 0 for t < 0 or t > N. For 0 <= t <= N the value
/// is 1 exactly when every binary digit of t also appears in N.
int binom_mod2(long long top, long long bottom);

/// Number of partitions of `total` into exactly `parts` positive parts.
/// Returns 0 for total <= 0 or total < parts.
long long partitions_exact(long long total, int parts);

struct Pow2Split {
    int p;
    long long m;   // n = 2^p + m with 0 < m <= 2^p
};

/// The unique decomposition n = 2^p + m, 0 < m <= 2^p. Requires n >= 2.
Pow2Split split_pow2(long long n);

} // namespace gf2coh

#endif
