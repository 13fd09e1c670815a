#ifndef GF2COH_COHOMOLOGY_HPP
#define GF2COH_COHOMOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "gf2coh/exterior.hpp"
#include "gf2coh/gf2.hpp"
#include "gf2coh/lie_algebra.hpp"

namespace gf2coh {

/// The differential restricted to one homogeneous component: matrix of
/// d : Λ^q_k -> Λ^{q+1}_k with columns indexed by `domain` and rows by
/// `codomain`, both in the canonical (lexicographic) monomial order.
struct CochainBlock {
    int q = 0;
    int degree = 0;
    std::vector<Monomial> domain;
    std::vector<Monomial> codomain;
    BooleanMatrix matrix;
};

struct BettiReport {
    std::string algebra;
    int q = 0;
    std::optional<int> degree;      // set for graded computations
    std::size_t dim_ker = 0;        // dim ker(d : Λ^q -> Λ^{q+1}), restricted to the degree if set
    std::size_t dim_im_prev = 0;    // dim im(d : Λ^{q-1} -> Λ^q), likewise
    std::size_t betti = 0;          // dim_ker - dim_im_prev
    std::optional<std::vector<Form>> representatives;
};

/// The differential with trivial coefficients: on a dual basis element e^k it
/// is the sum of e^{ij} over brackets with [e_i, e_j] hitting e_k, extended
/// to the exterior algebra as a derivation (no signs in characteristic 2).
/// Monomial indices must not exceed dim(g).
Form d_apply(const LieAlgebra& g, const Form& f);

/// Requires 0 <= q <= dim(g) and a graded algebra.
CochainBlock block(const LieAlgebra& g, int q, int degree);

/// Smallest and largest degree of a nonzero component of Λ^q.
std::pair<int, int> degree_range(const LieAlgebra& g, int q);

/// Betti number b_q, computed blockwise over the degree decomposition.
/// Requires 1 <= q <= dim(g) and a graded algebra.
BettiReport betti(const LieAlgebra& g, int q, bool with_representatives = false);
/// dim H^q_k for one degree block.
BettiReport betti_graded(const LieAlgebra& g, int q, int degree, bool with_representatives = false);

/// Canonical cohomology representatives: per degree block, the coboundary
/// row space is completed to the cocycle space in reduced echelon order, so
/// the output is deterministic. Count equals betti(g, q).
std::vector<Form> cohomology_basis(const LieAlgebra& g, int q);

/// f must have uniform rank (the zero form qualifies).
bool is_cocycle(const LieAlgebra& g, const Form& f);
bool is_coboundary(const LieAlgebra& g, const Form& f);

/// The unique element of f + im(d) with zeros at the coboundary pivot
/// coordinates of each degree block. Requires a cocycle.
Form canonical_representative(const LieAlgebra& g, const Form& f);

/// Product on cohomology: wedge of representatives, reduced to the canonical
/// representative of its class. Both inputs must be cocycles.
Form cup_product(const LieAlgebra& g, const Form& a, const Form& b);

} // namespace gf2coh

#endif
