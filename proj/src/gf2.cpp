#include "gf2coh/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace gf2coh {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
} // namespace

BooleanVector::BooleanVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BooleanVector BooleanVector::from_bits(const std::vector<int>& bits) {
    BooleanVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i] & 1) v.set(i, true);
    return v;
}

bool BooleanVector::get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BooleanVector::set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BooleanVector::flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

bool BooleanVector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t BooleanVector::popcount() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BooleanVector::leading() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi]) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[wi]));
    return len_;
}

void BooleanVector::xor_with(const BooleanVector& other) {
    if (other.len_ != len_) throw std::invalid_argument("BooleanVector::xor_with: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool BooleanVector::dot(const BooleanVector& other) const {
    if (other.len_ != len_) throw std::invalid_argument("BooleanVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BooleanMatrix::BooleanMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), data_(rows * wpr_, 0) {}

BooleanMatrix BooleanMatrix::identity(std::size_t n) {
    BooleanMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BooleanMatrix BooleanMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    BooleanMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("BooleanMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j)
            if (rows[i][j] & 1) m.set(i, j, true);
    }
    return m;
}

bool BooleanMatrix::get(std::size_t r, std::size_t c) const {
    return (data_[r * wpr_ + c / kWordBits] >> (c % kWordBits)) & 1u;
}

void BooleanMatrix::set(std::size_t r, std::size_t c, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (value)
        data_[r * wpr_ + c / kWordBits] |= mask;
    else
        data_[r * wpr_ + c / kWordBits] &= ~mask;
}

BooleanVector BooleanMatrix::row(std::size_t r) const {
    BooleanVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

void BooleanMatrix::set_row(std::size_t r, const BooleanVector& v) {
    if (v.size() != cols_) throw std::invalid_argument("BooleanMatrix::set_row: length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

void BooleanMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t w = 0; w < wpr_; ++w) data_[dst * wpr_ + w] ^= data_[src * wpr_ + w];
}

BooleanVector operator*(const BooleanMatrix& m, const BooleanVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix*vector: dimension mismatch");
    BooleanVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        out.set(r, m.row(r).dot(v));
    return out;
}

BooleanMatrix operator*(const BooleanMatrix& a, const BooleanMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix*matrix: dimension mismatch");
    BooleanMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BooleanVector acc(b.cols());
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(r, k)) acc.xor_with(b.row(k));
        out.set_row(r, acc);
    }
    return out;
}

EchelonForm echelon(const BooleanMatrix& m) {
    EchelonForm e{m, {}};
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && !e.mat.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != next_row) {
            // swap via three xors to stay within row ops
            e.mat.xor_row_into(pivot, next_row);
            e.mat.xor_row_into(next_row, pivot);
            e.mat.xor_row_into(pivot, next_row);
        }
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && e.mat.get(r, c)) e.mat.xor_row_into(next_row, r);
        e.pivot_cols.push_back(c);
        ++next_row;
    }
    return e;
}

std::size_t rank(const BooleanMatrix& m) { return echelon(m).pivot_cols.size(); }

std::vector<BooleanVector> kernel_basis(const BooleanMatrix& m) {
    const EchelonForm e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<BooleanVector> basis;
    basis.reserve(m.cols() - e.pivot_cols.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BooleanVector v(m.cols());
        v.set(f, true);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            if (e.mat.get(r, f)) v.set(e.pivot_cols[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BooleanVector> solve(const BooleanMatrix& m, const BooleanVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length != row count");
    BooleanMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, m.cols(), b.get(r));
    }
    const EchelonForm e = echelon(aug);
    for (auto c : e.pivot_cols)
        if (c == m.cols()) return std::nullopt;   // pivot in the rhs column
    BooleanVector x(m.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x.set(e.pivot_cols[r], e.mat.get(r, m.cols()));
    return x;
}

bool in_span(const std::vector<BooleanVector>& basis, const BooleanVector& v) {
    RowSpace space(v.size());
    for (const auto& b : basis) {
        if (b.size() != v.size()) throw std::invalid_argument("in_span: length mismatch");
        space.insert(b);
    }
    return space.contains(v);
}

BooleanVector RowSpace::reduce(BooleanVector v) const {
    if (v.size() != width_) throw std::invalid_argument("RowSpace::reduce: length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v.xor_with(rows_[i]);
    return v;
}

bool RowSpace::insert(BooleanVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    const std::size_t p = v.leading();
    // keep the stored rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(p)) rows_[i].xor_with(v);
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

bool RowSpace::contains(const BooleanVector& v) const { return reduce(v).is_zero(); }

} // namespace gf2coh
