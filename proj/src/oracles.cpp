#include "gf2coh/oracles.hpp"

#include <set>
#include <stdexcept>

namespace gf2coh::oracles {

namespace {

std::vector<bool> to_bools(const BooleanVector& v) {
    std::vector<bool> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i);
    return out;
}

void xor_into(std::vector<bool>& acc, const std::vector<bool>& v) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] != v[i];
}

} // namespace

std::size_t span_rank(const BooleanMatrix& m) {
    if (m.rows() > 20) throw std::invalid_argument("span_rank: too many rows to enumerate");
    std::set<std::vector<bool>> combos;
    const std::size_t total = std::size_t{1} << m.rows();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<bool> acc(m.cols(), false);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if ((mask >> r) & 1) xor_into(acc, to_bools(m.row(r)));
        combos.insert(acc);
    }
    std::size_t rank = 0;
    while ((std::size_t{1} << rank) < combos.size()) ++rank;
    return rank;
}

bool in_column_span(const BooleanMatrix& m, const BooleanVector& v) {
    if (m.cols() > 20) throw std::invalid_argument("in_column_span: too many columns to enumerate");
    const std::size_t total = std::size_t{1} << m.cols();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<bool> acc(m.rows(), false);
        for (std::size_t c = 0; c < m.cols(); ++c)
            if ((mask >> c) & 1)
                for (std::size_t r = 0; r < m.rows(); ++r) acc[r] = acc[r] != m.get(r, c);
        bool match = true;
        for (std::size_t r = 0; r < m.rows() && match; ++r) match = (acc[r] == v.get(r));
        if (match) return true;
    }
    return false;
}

int binom_parity_exact(int top, int bottom) {
    if (top < 0 || top > 64) throw std::invalid_argument("binom_parity_exact: need 0 <= top <= 64");
    if (bottom < 0 || bottom > top) return 0;
    unsigned __int128 value = 1;
    for (int i = 1; i <= bottom; ++i) {
        value *= static_cast<unsigned __int128>(top - bottom + i);
        value /= static_cast<unsigned __int128>(i);
    }
    return static_cast<int>(value & 1);
}

namespace {
// nondecreasing part lists: each later part is at least min_part
long long count_partitions_rec(long long remaining, int parts, long long min_part) {
    if (parts == 0) return remaining == 0 ? 1 : 0;
    long long count = 0;
    for (long long part = min_part; part * parts <= remaining; ++part)
        count += count_partitions_rec(remaining - part, parts - 1, part);
    return count;
}

long long count_tuples_rec(int remaining_len, int remaining_sum, int next, int hi) {
    if (remaining_len == 0) return remaining_sum == 0 ? 1 : 0;
    long long count = 0;
    for (int i = next; i <= hi; ++i) {
        if (i > remaining_sum) break;
        count += count_tuples_rec(remaining_len - 1, remaining_sum - i, i + 1, hi);
    }
    return count;
}
} // namespace

long long count_partitions(long long total, int parts) {
    if (total <= 0 || parts <= 0) return 0;
    return count_partitions_rec(total, parts, 1);
}

long long count_index_tuples(int length, int degree, int min_index, int max_index) {
    if (length < 0) return 0;
    return count_tuples_rec(length, degree, min_index, max_index);
}

} // namespace gf2coh::oracles
