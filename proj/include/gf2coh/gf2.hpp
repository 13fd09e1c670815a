#ifndef GF2COH_GF2_HPP
#define GF2COH_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gf2coh {

/// Dense vector over GF(2), bits packed into 64-bit words.
class BooleanVector {
public:
    BooleanVector() = default;
    explicit BooleanVector(std::size_t len);
    static BooleanVector from_bits(const std::vector<int>& bits);

    std::size_t size() const { return len_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);
    bool is_zero() const;
    std::size_t popcount() const;
    /// Index of the first set bit; size() when the vector is zero.
    std::size_t leading() const;

    void xor_with(const BooleanVector& other);
    /// Parity of the bitwise AND (inner product over GF(2)).
    bool dot(const BooleanVector& other) const;

    friend bool operator==(const BooleanVector&, const BooleanVector&) = default;

private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense matrix over GF(2), row-major, rows packed into 64-bit words.
/// The shape is fixed at construction; elimination routines work on copies.
class BooleanMatrix {
public:
    BooleanMatrix() = default;
    BooleanMatrix(std::size_t rows, std::size_t cols);
    static BooleanMatrix identity(std::size_t n);
    static BooleanMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);
    BooleanVector row(std::size_t r) const;
    void set_row(std::size_t r, const BooleanVector& v);
    void xor_row_into(std::size_t src, std::size_t dst);

    friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

BooleanVector operator*(const BooleanMatrix& m, const BooleanVector& v);
BooleanMatrix operator*(const BooleanMatrix& a, const BooleanMatrix& b);

struct EchelonForm {
    BooleanMatrix mat;                     // reduced row echelon form
    std::vector<std::size_t> pivot_cols;   // ascending; pivot i sits in row i
};

/// Reduced row echelon form with deterministic pivoting: columns are scanned
/// left to right and the first available row with a 1 becomes the pivot.
EchelonForm echelon(const BooleanMatrix& m);

std::size_t rank(const BooleanMatrix& m);

/// Basis of the right nullspace {v : Mv = 0}. The basis is the canonical one
/// read off the reduced echelon form (one vector per free column, ascending),
/// so repeated runs give identical output.
std::vector<BooleanVector> kernel_basis(const BooleanMatrix& m);

/// Some solution of Mx = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero. Throws std::invalid_argument on a
/// dimension mismatch.
std::optional<BooleanVector> solve(const BooleanMatrix& m, const BooleanVector& b);

/// Whether v lies in the GF(2) span of the given vectors (all same length).
bool in_span(const std::vector<BooleanVector>& basis, const BooleanVector& v);

/// Incrementally maintained row space in reduced echelon form. Used to build
/// coboundary spaces and to pick canonical coset representatives: reduce()
/// returns the unique vector in v + span with zeros in all pivot positions.
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    std::size_t width() const { return width_; }
    std::size_t rank() const { return rows_.size(); }
    BooleanVector reduce(BooleanVector v) const;
    /// Adds v to the span; returns false when v was already in it.
    bool insert(BooleanVector v);
    bool contains(const BooleanVector& v) const;

private:
    std::size_t width_;
    std::vector<std::size_t> pivots_;   // ascending
    std::vector<BooleanVector> rows_;   // rows_[i] leads at pivots_[i]
};

} // namespace gf2coh

#endif
