#include "gf2coh/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace gf2coh {

int binom_mod2(long long top, long long bottom) {
    if (bottom < 0 || bottom > top) return 0;
    // C(N,t) is odd iff the bits of t are a subset of the bits of N
    return ((bottom & ~top) == 0) ? 1 : 0;
}

long long partitions_exact(long long total, int parts) {
    if (total <= 0 || parts <= 0 || total < parts) return 0;
    // p[k][q] = partitions of k into exactly q positive parts,
    // p[k][q] = p[k-1][q-1] + p[k-q][q]
    std::vector<std::vector<long long>> p(static_cast<std::size_t>(total) + 1,
                                          std::vector<long long>(static_cast<std::size_t>(parts) + 1, 0));
    p[0][0] = 1;
    for (long long k = 1; k <= total; ++k)
        for (int q = 1; q <= parts && q <= k; ++q) {
            long long value = p[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(q - 1)];
            if (k - q >= 0) value += p[static_cast<std::size_t>(k - q)][static_cast<std::size_t>(q)];
            p[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = value;
        }
    return p[static_cast<std::size_t>(total)][static_cast<std::size_t>(parts)];
}

Pow2Split split_pow2(long long n) {
    if (n < 2) throw std::invalid_argument("split_pow2: need n >= 2");
    int p = 0;
    while ((1LL << (p + 1)) < n) ++p;
    return {p, n - (1LL << p)};
}

} // namespace gf2coh
