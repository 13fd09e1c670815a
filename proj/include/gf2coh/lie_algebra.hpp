#ifndef GF2COH_LIE_ALGEBRA_HPP
#define GF2COH_LIE_ALGEBRA_HPP

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gf2coh {

struct GradingViolation {
    int i, j, k;   // target k of [e_i, e_j] with k != i + j
};

struct JacobiViolation {
    int i, j, l;                 // triple with nonzero Jacobi sum
    std::vector<int> residual;   // basis indices with odd coefficient in the sum
};

struct ValidationReport {
    std::vector<GradingViolation> grading;
    std::vector<JacobiViolation> jacobi;
    bool ok() const { return grading.empty() && jacobi.empty(); }
};

/// Finite-dimensional Lie algebra over GF(2) with basis e_1, ..., e_n, given
/// by structure constants. Only pairs i < j are stored; [x, y] = [y, x] in
/// characteristic 2 and [x, x] = 0. Immutable after construction.
class LieAlgebra {
public:
    /// [e_1, e_i] = e_{i+1} for 2 <= i <= n-1. Requires n >= 3.
    static LieAlgebra m0(int n);
    /// m0(n) relations plus [e_2, e_j] = e_{j+2} for 3 <= j <= n-2. Requires n >= 5.
    static LieAlgebra m2(int n);
    /// Brackets keyed by (i, j) with i < j; values are the target indices k
    /// with c_{ij}^k = 1. Indices out of 1..n are rejected.
    static LieAlgebra from_brackets(std::string name, int n,
                                    const std::map<std::pair<int, int>, std::vector<int>>& brackets);

    int dim() const { return n_; }
    const std::string& name() const { return name_; }

    /// [e_i, e_j] as a sorted list of target indices; empty when zero.
    std::vector<int> bracket(int i, int j) const;
    /// Pairs (i, j), i < j, with c_{ij}^target = 1.
    const std::vector<std::pair<int, int>>& bracket_sources(int target) const;

    /// True when every bracket satisfies deg(output) = deg(inputs) summed.
    bool is_graded() const { return graded_; }

    /// Exhaustive check of the grading and of the Jacobi identity mod 2.
    ValidationReport validate() const;

    /// Line-oriented text format; load_algebra() parses it back.
    std::string save() const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
        return a.n_ == b.n_ && a.brackets_ == b.brackets_;
    }

private:
    LieAlgebra(std::string name, int n, std::map<std::pair<int, int>, std::vector<int>> brackets);

    std::string name_;
    int n_ = 0;
    std::map<std::pair<int, int>, std::vector<int>> brackets_;
    std::vector<std::vector<std::pair<int, int>>> sources_;   // indexed by target 0..n
    bool graded_ = true;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what), line(line_number) {}
};

/// Parses the algebra file format:
///   # comment
///   dim N
///   i j : k1 k2 ...
/// Whitespace-separated integers, one bracket per line, 1 <= i < j <= N.
/// Throws ParseError on malformed input or out-of-range indices. The returned
/// report carries grading/Jacobi findings; parsing itself does not reject them.
std::pair<LieAlgebra, ValidationReport> load_algebra(std::istream& in, const std::string& name = "file");

} // namespace gf2coh

#endif
