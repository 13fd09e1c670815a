#include "gf2coh/maxclass.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2coh/combinatorics.hpp"

namespace gf2coh {

namespace {

bool touches_index_one(const Form& f) {
    for (const auto& m : f.monomials())
        if (!m.indices.empty() && m.indices.front() == 1) return true;
    return false;
}

// lower one factor of the monomial; e^1 and e^2 are killed, i -> i-1 otherwise
void toggle_lowered_terms(const Monomial& mono, Form& out) {
    for (std::size_t pos = 0; pos < mono.indices.size(); ++pos) {
        const int idx = mono.indices[pos];
        if (idx <= 2) continue;
        if (pos > 0 && mono.indices[pos - 1] == idx - 1) continue;   // repeated factor
        Monomial lowered = mono;
        lowered.indices[pos] = idx - 1;
        out.toggle(lowered);
    }
}

std::pair<int, int> obstruction_bounds(int n, int k) {
    const int a = (n + 2 * k + 1 + 2) / 3;   // ceil((n+2k+1)/3)
    const int b = n / 2 + k - 1;
    return {a, b};
}

} // namespace

LieAlgebra truncation(Family family, int min_dim) {
    switch (family) {
    case Family::m0: return LieAlgebra::m0(std::max(3, min_dim));
    case Family::m2: return LieAlgebra::m2(std::max(5, min_dim));
    }
    throw std::invalid_argument("truncation: unknown family");
}

Form apply_D(const Form& f) {
    if (touches_index_one(f)) throw std::invalid_argument("apply_D: form must not contain index 1");
    Form out;
    for (const auto& mono : f.monomials()) toggle_lowered_terms(mono, out);
    return out;
}

Form apply_D1(const Form& f) {
    Form out;
    for (const auto& mono : f.monomials()) toggle_lowered_terms(mono, out);
    return out;
}

Form series_F(const Form& omega, int i) {
    if (i < 2) throw std::invalid_argument("series_F: need i >= 2");
    if (touches_index_one(omega)) throw std::invalid_argument("series_F: form must not contain index 1");
    Form out;
    Form power = omega;
    for (int l = 0; !power.is_zero(); ++l) {
        out += wedge(power, Form::unit(i + 1 + l));
        power = apply_D(power);
    }
    return out;
}

std::vector<Form> kernel_D_basis(int rank, int degree) {
    if (rank < 2) throw std::invalid_argument("kernel_D_basis: need rank >= 2");
    const int q = rank - 1;
    // generators e^{i1..iq} with i_q + 1 + sum(i_j) = degree
    std::vector<Monomial> generators;
    for (int t = 2; 2 * t + 1 <= degree; ++t) {
        const int prefix_sum = degree - 1 - 2 * t;
        for (const auto& prefix : enumerate_basis(q - 1, prefix_sum, 2, t - 1)) {
            Monomial gen = prefix;
            gen.indices.push_back(t);
            generators.push_back(std::move(gen));
        }
    }
    std::sort(generators.begin(), generators.end());
    std::vector<Form> basis;
    basis.reserve(generators.size());
    for (const auto& gen : generators)
        basis.push_back(series_F(Form{{gen}}, gen.indices.back()));
    return basis;
}

CochainBlock D_block(int rank, int degree, int n) {
    if (n < 3) throw std::invalid_argument("D_block: need n >= 3");
    CochainBlock blk;
    blk.q = rank;
    blk.degree = degree;
    blk.domain = enumerate_basis(rank, degree, 2, n);
    blk.codomain = enumerate_basis(rank, degree - 1, 2, n);
    blk.matrix = BooleanMatrix(blk.codomain.size(), blk.domain.size());
    for (std::size_t c = 0; c < blk.domain.size(); ++c) {
        const BooleanVector coords = to_coords(apply_D(Form{{blk.domain[c]}}), blk.codomain);
        for (std::size_t r = 0; r < blk.codomain.size(); ++r)
            if (coords.get(r)) blk.matrix.set(r, c, true);
    }
    return blk;
}

std::vector<Form> kernel_D_basis_truncated(int rank, int degree, int n) {
    if (rank < 2) throw std::invalid_argument("kernel_D_basis_truncated: need rank >= 2");
    const CochainBlock blk = D_block(rank, degree, n);
    std::vector<Form> basis;
    for (const auto& v : kernel_basis(blk.matrix)) basis.push_back(from_coords(v, blk.domain));
    return basis;
}

ObstructionSystem obstruction_system(int n, int k) {
    if (n < 4) throw std::invalid_argument("obstruction_system: need n >= 4");
    if (k < 2 || k > n / 2) throw std::invalid_argument("obstruction_system: need 2 <= k <= n/2");
    ObstructionSystem sys;
    sys.n = n;
    sys.k = k;
    std::tie(sys.a, sys.b) = obstruction_bounds(n, k);
    const int cols = std::max(0, sys.b - sys.a + 1);
    sys.matrix = BooleanMatrix(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(cols));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= cols; ++j) {
            const int r = sys.a + j - 1;
            if (binom_mod2(n - r + 2 * (i - 1), r + (i - 1) - k))
                sys.matrix.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), true);
        }
    sys.rhs = BooleanVector(static_cast<std::size_t>(k - 1));
    sys.rhs.set(0, true);
    return sys;
}

BooleanVector obstruction_solution(int n, int k) {
    const auto [p, m] = split_pow2(n);
    if (k < 2 || k > m) throw std::invalid_argument("obstruction_solution: need 2 <= k <= m");
    const auto [a, b] = obstruction_bounds(n, k);
    BooleanVector x(static_cast<std::size_t>(std::max(0, b - a + 1)));
    for (int j = 1; j <= b - a + 1; ++j) {
        int bit = 0;
        for (int s = 0; s < p; ++s) bit ^= binom_mod2(m - k, n - (a + j - 1) - (1LL << s));
        if (bit) x.set(static_cast<std::size_t>(j - 1), true);
    }
    return x;
}

BooleanVector obstruction_row_dependency(int n, int k) {
    const auto [p, m] = split_pow2(n);
    if (k <= m || k > n / 2) throw std::invalid_argument("obstruction_row_dependency: need m < k <= n/2");
    BooleanVector y(static_cast<std::size_t>(k - 1));
    for (int i = 1; i <= k - 1; ++i)
        if (binom_mod2(k - m - 1, i - 1)) y.set(static_cast<std::size_t>(i - 1), true);
    return y;
}

long long closed_form_betti(int n, int q) {
    if (n < 3) throw std::invalid_argument("closed_form_betti: need n >= 3");
    switch (q) {
    case 1: return 2;
    case 2: return (n + 1) / 2;
    case 3: {
        if (n == 3) return 1;
        const auto [p, m] = split_pow2(n);
        const long long pow_p = 1LL << p;
        return (pow_p - 1) * (pow_p / 2 - 1) / 3 + m * (m - 1) / 2 + (n - 1) / 2;
    }
    default: throw std::invalid_argument("closed_form_betti: only q = 1, 2, 3");
    }
}

std::vector<Form> h2_basis_m0(int n) {
    if (n < 3) throw std::invalid_argument("h2_basis_m0: need n >= 3");
    std::vector<Form> basis{Form{{Monomial{{1, n}}}}};
    for (int i = 2; 2 * i <= n + 1; ++i) basis.push_back(series_F(Form::unit(i), i));
    return basis;
}

std::vector<Form> h2_basis_m2(int n) {
    if (n < 5) throw std::invalid_argument("h2_basis_m2: need n >= 5");
    std::vector<Form> basis = h2_basis_m0(n);
    basis[0] = Form{{Monomial{{1, n}}, Monomial{{2, n - 1}}}};
    return basis;
}

std::vector<Form> h3_basis_m0_block(int t) {
    if (t < 4) throw std::invalid_argument("h3_basis_m0_block: need t >= 4");
    const auto [p, m] = split_pow2(t);
    std::vector<Form> elements;
    for (int k = 2; k <= m; ++k) {
        const auto [a, b] = obstruction_bounds(t, k);
        const BooleanVector x = obstruction_solution(t, k);
        Form element;
        for (int j = 1; j <= b - a + 1; ++j) {
            if (!x.get(static_cast<std::size_t>(j - 1))) continue;
            const int r = a + j - 1;
            element += series_F(Form{{Monomial{{t + 2 * k - 2 * r, r}}}}, r);
        }
        elements.push_back(std::move(element));
    }
    return elements;
}

std::vector<Form> h3_basis_m0(int n) {
    if (n < 4) throw std::invalid_argument("h3_basis_m0: need n >= 4");
    std::vector<Form> basis;
    for (int i = 2 + n / 2; i <= n; ++i) basis.push_back(Form{{Monomial{{1, i - 1, i}}}});
    for (int t = 4; t <= n; ++t)
        for (auto& element : h3_basis_m0_block(t)) basis.push_back(std::move(element));
    return basis;
}

std::vector<Form> h3_basis_m2(int n) {
    std::vector<Form> basis = h3_basis_m0(n);
    for (auto& f : basis) f = apply_involution(f);
    return basis;
}

Split12 split_e1_e2(const Form& omega) {
    Split12 out;
    if (omega.is_zero()) return out;
    const auto rank = omega.uniform_rank();
    if (!rank || *rank < 2) throw std::invalid_argument("split_e1_e2: need uniform rank >= 2");
    for (const auto& mono : omega.monomials()) {
        if (mono.indices.front() == 1) {
            Monomial rest{std::vector<int>(mono.indices.begin() + 1, mono.indices.end())};
            out.xi.toggle(rest);
        } else if (mono.indices.front() == 2) {
            Monomial rest{std::vector<int>(mono.indices.begin() + 1, mono.indices.end())};
            out.eta.toggle(rest);
        } else {
            out.zeta.toggle(mono);
        }
    }
    return out;
}

Form apply_involution(const Form& omega) {
    Form out;
    for (const auto& [rank, part] : split_by_rank(omega)) {
        if (rank <= 1) {
            out += part;
            continue;
        }
        const Split12 s = split_e1_e2(part);
        out += wedge(Form::unit(1), s.xi);
        out += wedge(Form::unit(2), s.eta + apply_D1(s.xi));
        out += s.zeta;
    }
    return out;
}

std::vector<Form> infinite_cohomology_basis(Family family, int q, int max_degree) {
    (void)family;   // the same cocycles represent a basis for both families
    if (q < 1) throw std::invalid_argument("infinite_cohomology_basis: need q >= 1");
    std::vector<Form> basis;
    if (q == 1) {
        if (max_degree >= 1) basis.push_back(Form::unit(1));
        if (max_degree >= 2) basis.push_back(Form::unit(2));
        return basis;
    }
    for (int k = 1; k <= max_degree; ++k)
        for (auto& f : kernel_D_basis(q, k)) basis.push_back(std::move(f));
    return basis;
}

} // namespace gf2coh
