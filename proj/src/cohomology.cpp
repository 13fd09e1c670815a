#include "gf2coh/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf2coh {

namespace {

void require_graded(const LieAlgebra& g, const char* where) {
    if (!g.is_graded())
        throw std::invalid_argument(std::string(where) + ": algebra is not graded, no degree decomposition");
}

Form d_monomial(const LieAlgebra& g, const Monomial& mono) {
    Form out;
    // derivation: substitute each factor by its differential in place
    for (std::size_t pos = 0; pos < mono.indices.size(); ++pos) {
        Monomial rest;
        rest.indices.reserve(mono.indices.size() - 1);
        for (std::size_t t = 0; t < mono.indices.size(); ++t)
            if (t != pos) rest.indices.push_back(mono.indices[t]);
        for (const auto& [i, j] : g.bracket_sources(mono.indices[pos])) {
            Monomial pair{{i, j}};
            if (auto prod = merge_disjoint(pair, rest)) out.toggle(*prod);
        }
    }
    return out;
}

/// Coboundary space of Λ^q_k as a row space (image of the previous block).
RowSpace coboundary_space(const LieAlgebra& g, int q, int degree, std::size_t width) {
    RowSpace space(width);
    if (q >= 1) {
        const CochainBlock prev = block(g, q - 1, degree);
        for (std::size_t c = 0; c < prev.matrix.cols(); ++c) {
            BooleanVector image(width);
            for (std::size_t r = 0; r < width; ++r)
                if (prev.matrix.get(r, c)) image.set(r, true);
            space.insert(std::move(image));
        }
    }
    return space;
}

} // namespace

Form d_apply(const LieAlgebra& g, const Form& f) {
    if (f.max_index() > g.dim()) throw std::invalid_argument("d_apply: monomial index exceeds dim");
    Form out;
    for (const auto& mono : f.monomials()) out += d_monomial(g, mono);
    return out;
}

CochainBlock block(const LieAlgebra& g, int q, int degree) {
    if (q < 0 || q > g.dim()) throw std::invalid_argument("block: rank out of range");
    require_graded(g, "block");
    CochainBlock blk;
    blk.q = q;
    blk.degree = degree;
    blk.domain = enumerate_basis(q, degree, 1, g.dim());
    blk.codomain = enumerate_basis(q + 1, degree, 1, g.dim());
    blk.matrix = BooleanMatrix(blk.codomain.size(), blk.domain.size());
    for (std::size_t c = 0; c < blk.domain.size(); ++c) {
        const Form image = d_apply(g, Form{{blk.domain[c]}});
        const BooleanVector coords = to_coords(image, blk.codomain);
        for (std::size_t r = 0; r < blk.codomain.size(); ++r)
            if (coords.get(r)) blk.matrix.set(r, c, true);
    }
    return blk;
}

std::pair<int, int> degree_range(const LieAlgebra& g, int q) {
    if (q < 0 || q > g.dim()) throw std::invalid_argument("degree_range: rank out of range");
    if (q == 0) return {0, 0};
    const int n = g.dim();
    const int lo = q * (q + 1) / 2;                  // 1 + 2 + ... + q
    const int hi = q * (2 * n - q + 1) / 2;          // n + (n-1) + ... + (n-q+1)
    return {lo, hi};
}

BettiReport betti(const LieAlgebra& g, int q, bool with_representatives) {
    if (q < 1 || q > g.dim()) throw std::invalid_argument("betti: rank out of range");
    require_graded(g, "betti");
    BettiReport report;
    report.algebra = g.name();
    report.q = q;
    if (with_representatives) report.representatives.emplace();
    const auto [lo, hi] = degree_range(g, q);
    for (int k = lo; k <= hi; ++k) {
        const BettiReport blockwise = betti_graded(g, q, k, with_representatives);
        report.dim_ker += blockwise.dim_ker;
        report.dim_im_prev += blockwise.dim_im_prev;
        report.betti += blockwise.betti;
        if (with_representatives)
            report.representatives->insert(report.representatives->end(),
                                           blockwise.representatives->begin(),
                                           blockwise.representatives->end());
    }
    return report;
}

BettiReport betti_graded(const LieAlgebra& g, int q, int degree, bool with_representatives) {
    if (q < 1 || q > g.dim()) throw std::invalid_argument("betti_graded: rank out of range");
    require_graded(g, "betti_graded");
    BettiReport report;
    report.algebra = g.name();
    report.q = q;
    report.degree = degree;

    const CochainBlock blk = block(g, q, degree);
    const std::vector<BooleanVector> cocycles = kernel_basis(blk.matrix);
    RowSpace coboundaries = coboundary_space(g, q, degree, blk.domain.size());

    report.dim_ker = cocycles.size();
    report.dim_im_prev = coboundaries.rank();
    if (report.dim_im_prev > report.dim_ker)
        throw std::invalid_argument("betti_graded: image exceeds kernel, the Jacobi identity must fail");
    report.betti = report.dim_ker - report.dim_im_prev;

    if (with_representatives) {
        report.representatives.emplace();
        for (const auto& z : cocycles) {
            BooleanVector reduced = coboundaries.reduce(z);
            if (reduced.is_zero()) continue;
            report.representatives->push_back(from_coords(reduced, blk.domain));
            coboundaries.insert(std::move(reduced));
        }
    }
    return report;
}

std::vector<Form> cohomology_basis(const LieAlgebra& g, int q) {
    const BettiReport report = betti(g, q, /*with_representatives=*/true);
    return *report.representatives;
}

bool is_cocycle(const LieAlgebra& g, const Form& f) {
    if (f.is_zero()) return true;
    if (!f.uniform_rank()) throw std::invalid_argument("is_cocycle: form must have uniform rank");
    return d_apply(g, f).is_zero();
}

bool is_coboundary(const LieAlgebra& g, const Form& f) {
    if (f.is_zero()) return true;
    const auto q = f.uniform_rank();
    if (!q) throw std::invalid_argument("is_coboundary: form must have uniform rank");
    if (f.max_index() > g.dim()) throw std::invalid_argument("is_coboundary: monomial index exceeds dim");
    if (*q == 0) return false;   // nothing maps into the scalars
    require_graded(g, "is_coboundary");
    for (const auto& [k, part] : split_by_degree(f)) {
        const std::vector<Monomial> basis = enumerate_basis(*q, k, 1, g.dim());
        RowSpace coboundaries = coboundary_space(g, *q, k, basis.size());
        if (!coboundaries.contains(to_coords(part, basis))) return false;
    }
    return true;
}

Form canonical_representative(const LieAlgebra& g, const Form& f) {
    if (f.is_zero()) return f;
    const auto q = f.uniform_rank();
    if (!q) throw std::invalid_argument("canonical_representative: form must have uniform rank");
    if (!is_cocycle(g, f)) throw std::invalid_argument("canonical_representative: input is not a cocycle");
    require_graded(g, "canonical_representative");
    Form out;
    for (const auto& [k, part] : split_by_degree(f)) {
        const std::vector<Monomial> basis = enumerate_basis(*q, k, 1, g.dim());
        RowSpace coboundaries = coboundary_space(g, *q, k, basis.size());
        out += from_coords(coboundaries.reduce(to_coords(part, basis)), basis);
    }
    return out;
}

Form cup_product(const LieAlgebra& g, const Form& a, const Form& b) {
    if (!is_cocycle(g, a) || !is_cocycle(g, b))
        throw std::invalid_argument("cup_product: inputs must be cocycles");
    const Form product = wedge(a, b);
    if (product.is_zero()) return product;
    return canonical_representative(g, product);
}

} // namespace gf2coh
