#ifndef GF2COH_MAXCLASS_HPP
#define GF2COH_MAXCLASS_HPP

#include <vector>

#include "gf2coh/cohomology.hpp"
#include "gf2coh/exterior.hpp"
#include "gf2coh/gf2.hpp"
#include "gf2coh/lie_algebra.hpp"

namespace gf2coh {

enum class Family { m0, m2 };

/// Truncation of the chosen family with at least `min_dim` basis vectors
/// (never below the smallest valid dimension of the family). On forms of
/// degree <= min_dim the truncated differential agrees with the infinite one,
/// which is how all infinite-algebra computations are carried out here.
LieAlgebra truncation(Family family, int min_dim);

/// The index-lowering derivation D on forms over e^2, e^3, ...:
/// D e^2 = 0, D e^i = e^{i-1}, extended by the Leibniz rule. It lowers degree
/// by one, preserves rank, and satisfies d(w) = e^1 ∧ D(w) in the m0 family.
/// Throws when a monomial contains index 1.
Form apply_D(const Form& f);

/// The extension of D to all forms with D1 e^1 = D1 e^2 = 0.
Form apply_D1(const Form& f);

/// The series F(w, i) = sum over l >= 0 of D^l(w) ∧ e^{i+1+l}; finite because
/// D is nilpotent. Requires i >= 2 and w over indices >= 2. Satisfies
/// D(F(w, i)) = w ∧ e^i, so F(w, i) is a D-cocycle exactly when w ∧ e^i = 0.
Form series_F(const Form& omega, int i);

/// Basis of ker D on the rank/degree component of forms over e^2, e^3, ...
/// (no upper bound on indices): all F(e^{i1..iq}, i_q) with
/// 2 <= i1 < ... < iq and i_q + 1 + sum(i_j) = degree, where q = rank - 1.
/// Requires rank >= 2. Ordered by the generator monomial, lexicographically.
std::vector<Form> kernel_D_basis(int rank, int degree);

/// Basis of ker D on the rank/degree component over e^2, ..., e^n, computed
/// as the nullspace of the D block matrix. Requires rank >= 2, n >= 3.
std::vector<Form> kernel_D_basis_truncated(int rank, int degree, int n);

/// Matrix of D restricted to forms of the given rank and degree over
/// e^2, ..., e^n (columns) into degree-1 (rows), bases in canonical order.
CochainBlock D_block(int rank, int degree, int n);

/// Linear system deciding whether e^n ∧ F(e^k, e^k) extends to a D-cocycle
/// of m0(n) by a correction supported on indices < n: solvable over GF(2)
/// exactly when k <= m, where n = 2^p + m.
struct ObstructionSystem {
    int n = 0, k = 0;
    int a = 0, b = 0;          // column j corresponds to r = a + j - 1, a <= r <= b
    BooleanMatrix matrix;      // (k-1) x (b-a+1)
    BooleanVector rhs;         // (1, 0, ..., 0)
};

/// Requires n >= 4 and 2 <= k <= n/2. Entry (i, j), 1-based, is
/// C(n-(a+j-1)+2(i-1), (a+j-1)+(i-1)-k) mod 2.
ObstructionSystem obstruction_system(int n, int k);

/// Closed-form solution x of the obstruction system, defined for
/// 2 <= k <= m: x_j = sum over s < p of C(m-k, n-(a+j-1)-2^s) mod 2.
BooleanVector obstruction_solution(int n, int k);

/// For k > m: the left nullvector (C(k-m-1,0), ..., C(k-m-1,k-m-1), 0, ...)
/// annihilating the obstruction matrix, which rules out a solution.
BooleanVector obstruction_row_dependency(int n, int k);

/// First three Betti numbers of m0(n) in closed form (q in {1, 2, 3}):
/// b1 = 2, b2 = floor((n+1)/2),
/// b3 = (2^p-1)(2^{p-1}-1)/3 + m(m-1)/2 + floor((n-1)/2) with n = 2^p + m.
long long closed_form_betti(int n, int q);

/// Cocycle bases for H^2: e^{1,n} followed by F(e^i, i) for
/// 2 <= i <= (n+1)/2; the m2 variant replaces e^{1,n} by e^{1,n} + e^{2,n-1}.
std::vector<Form> h2_basis_m0(int n);
std::vector<Form> h2_basis_m2(int n);

/// Cocycle basis for H^3(m0(n)), n >= 4: the forms e^{1,i-1,i} for
/// 2 + floor(n/2) <= i <= n, followed, for each 4 <= t <= n and each
/// 2 <= k <= m(t), by sum over a(t,k) <= r <= b(t,k) of
/// x_r(t, k) * F(e^{t+2k-2r, r}, r) with coefficients from
/// obstruction_solution. Each element lies in ker D of m0(t) ⊆ m0(n).
std::vector<Form> h3_basis_m0(int n);

/// The elements h3_basis_m0 contributes at dimension t (one per
/// 2 <= k <= m(t)): the part of ker D|Λ^3 new to m0(t). Requires t >= 4.
std::vector<Form> h3_basis_m0_block(int t);

/// Involution image of h3_basis_m0(n); a cocycle basis for H^3(m2(n)).
std::vector<Form> h3_basis_m2(int n);

/// Unique splitting w = e^1 ∧ xi + e^2 ∧ eta + zeta with xi over indices
/// >= 2 and eta, zeta over indices >= 3. Requires uniform rank >= 2.
struct Split12 {
    Form xi, eta, zeta;
};
Split12 split_e1_e2(const Form& omega);

/// The rank- and degree-preserving involution that exchanges the
/// differentials of the two families: identity on one-forms, and
/// e^1∧xi + e^2∧eta + zeta  ->  e^1∧xi + e^2∧(eta + D1 xi) + zeta
/// on each rank component of rank >= 2.
Form apply_involution(const Form& omega);

/// Cocycles whose classes form a basis of the cohomology of the infinite
/// algebra up to the degree cap: for q = 1 the forms e^1, e^2; for q >= 2
/// all F(e^{i1..i_{q-1}}, i_{q-1}) of degree <= max_degree, in ascending
/// degree. The list is the same for both families.
std::vector<Form> infinite_cohomology_basis(Family family, int q, int max_degree);

} // namespace gf2coh

#endif
