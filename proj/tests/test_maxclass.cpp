#include <doctest.h>

#include <map>
#include <random>

#include "gf2coh/combinatorics.hpp"
#include "gf2coh/maxclass.hpp"
#include "gf2coh/oracles.hpp"

using namespace gf2coh;

namespace {

Form form_of(const std::vector<std::vector<int>>& index_lists) {
    std::vector<Monomial> monos;
    for (const auto& idx : index_lists) monos.push_back(Monomial{idx});
    return Form(std::move(monos));
}

// random form over e^2, ..., e^max_index
Form random_h_form(std::mt19937& rng, int max_index, int max_rank) {
    std::uniform_int_distribution<int> rank(1, max_rank), coin(0, 1);
    for (;;) {
        const int q = rank(rng);
        std::uniform_int_distribution<int> deg(q * (q + 3) / 2, q * max_index);
        const auto pool = enumerate_basis(q, deg(rng), 2, max_index);
        if (pool.empty()) continue;
        Form f;
        for (const auto& m : pool)
            if (coin(rng)) f.toggle(m);
        if (!f.is_zero()) return f;
    }
}

std::size_t kernel_D_dim_rank3(int n) {
    std::size_t total = 0;
    for (int k = 9; k <= 3 * n - 3; ++k) total += kernel_D_basis_truncated(3, k, n).size();
    return total;
}

} // namespace

TEST_CASE("index-lowering derivation D") {
    CHECK(apply_D(form_of({{3, 4}})) == form_of({{2, 4}}));
    CHECK(apply_D(Form::unit(2)).is_zero());
    CHECK(apply_D(form_of({{2, 3, 4}})).is_zero());
    CHECK_THROWS_AS(apply_D(form_of({{1, 3}})), std::invalid_argument);
}

TEST_CASE("extension D1 of the derivation to all forms") {
    CHECK(apply_D1(Form::unit(1)).is_zero());
    CHECK(apply_D1(Form::unit(2)).is_zero());
    CHECK(apply_D1(Form::unit(4)) == Form::unit(3));
    CHECK(apply_D1(form_of({{1, 4}})) == form_of({{1, 3}}));
    CHECK(apply_D1(form_of({{3, 4}})) == apply_D(form_of({{3, 4}})));
}

TEST_CASE("series F") {
    CHECK(series_F(Form::unit(2), 2) == form_of({{2, 3}}));
    CHECK(series_F(Form::unit(3), 3) == form_of({{3, 4}, {2, 5}}));
    CHECK(series_F(form_of({{3, 4}}), 4) == form_of({{3, 4, 5}, {2, 4, 6}, {2, 3, 7}}));
    CHECK(series_F(Form{}, 5).is_zero());
    CHECK_THROWS_AS(series_F(Form::unit(2), 1), std::invalid_argument);
    CHECK_THROWS_AS(series_F(form_of({{1, 2}}), 3), std::invalid_argument);
}

TEST_CASE("factorization d = e^1 ∧ D in the m0 family") {
    std::mt19937 rng(555);
    const LieAlgebra g = LieAlgebra::m0(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Form omega = random_h_form(rng, 11, 4);
        CHECK(d_apply(g, omega) == wedge(Form::unit(1), apply_D(omega)));
    }
}

TEST_CASE("D applied to F(w, i) gives w ∧ e^i") {
    std::mt19937 rng(556);
    std::uniform_int_distribution<int> i_dist(2, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const Form omega = random_h_form(rng, 10, 3);
        const int i = i_dist(rng);
        CHECK(apply_D(series_F(omega, i)) == wedge(omega, Form::unit(i)));
    }
}

TEST_CASE("kernel basis of D, unbounded indices") {
    CHECK(kernel_D_basis(2, 5) == std::vector<Form>{form_of({{2, 3}})});
    CHECK(kernel_D_basis(2, 6).empty());   // degree 2i+1 is odd
    CHECK(kernel_D_basis(3, 9) == std::vector<Form>{form_of({{2, 3, 4}})});
    CHECK_THROWS_AS(kernel_D_basis(1, 5), std::invalid_argument);
}

TEST_CASE("kernel basis of D spans the brute-force kernel") {
    for (int rank_q = 2; rank_q <= 5; ++rank_q)
        for (int k = 1; k <= 25; ++k) {
            const auto structured = kernel_D_basis(rank_q, k);
            const CochainBlock blk = D_block(rank_q, k, std::max(3, k));
            const auto brute = kernel_basis(blk.matrix);
            REQUIRE(structured.size() == brute.size());
            RowSpace span(blk.domain.size());
            for (const auto& f : structured) CHECK(span.insert(to_coords(f, blk.domain)));
            for (const auto& v : brute) CHECK(span.contains(v));
        }
}

TEST_CASE("D is surjective degree by degree") {
    for (int rank_q = 1; rank_q <= 4; ++rank_q)
        for (int k = 2; k <= 25; ++k) {
            const CochainBlock blk = D_block(rank_q, k, std::max(3, k));
            CHECK(rank(blk.matrix) == blk.codomain.size());
        }
}

TEST_CASE("kernel basis of D, truncated") {
    CHECK(kernel_D_basis_truncated(2, 7, 7) == std::vector<Form>{form_of({{2, 5}, {3, 4}})});
    CHECK(kernel_D_basis_truncated(3, 9, 4) == std::vector<Form>{form_of({{2, 3, 4}})});
    CHECK(kernel_D_dim_rank3(7) == 4);
}

TEST_CASE("truncated rank-2 kernels match the F(e^i, i) description") {
    for (int n = 4; n <= 14; ++n)
        for (int k = 4; k <= 2 * n - 1; ++k) {
            const auto brute = kernel_D_basis_truncated(2, k, n);
            // expected spanning set: F(e^i, i) of degree 2i+1 with 2 <= i <= (n+1)/2
            std::vector<Form> expected;
            if (k % 2 == 1 && k >= 5) {
                const int i = (k - 1) / 2;
                if (i >= 2 && 2 * i <= n + 1) expected.push_back(series_F(Form::unit(i), i));
            }
            REQUIRE(brute.size() == expected.size());
            if (!expected.empty()) CHECK(brute[0] == expected[0]);
        }
}

TEST_CASE("kernel dimension recurrence over the dimension") {
    for (int n = 5; n <= 26; ++n) {
        const auto [p, m] = split_pow2(n);
        CHECK(kernel_D_dim_rank3(n) == kernel_D_dim_rank3(n - 1) + static_cast<std::size_t>(m) - 1);
    }
}

TEST_CASE("obstruction system entries and shapes") {
    const ObstructionSystem small = obstruction_system(7, 2);
    CHECK(small.a == 4);
    CHECK(small.b == 4);
    REQUIRE(small.matrix.rows() == 1);
    REQUIRE(small.matrix.cols() == 1);
    CHECK(small.matrix.get(0, 0));   // C(3,2) = 3 is odd

    const ObstructionSystem eight = obstruction_system(8, 2);
    CHECK(eight.a == 5);
    CHECK(eight.b == 5);
    CHECK(eight.matrix.get(0, 0));   // C(3,3) = 1

    const ObstructionSystem empty = obstruction_system(5, 2);
    CHECK(empty.matrix.cols() == 0);   // no unknowns: unsolvable since rhs != 0
    CHECK_FALSE(solve(empty.matrix, empty.rhs).has_value());

    CHECK_THROWS_AS(obstruction_system(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(obstruction_system(8, 5), std::invalid_argument);
}

TEST_CASE("obstruction solvability boundary and explicit solution") {
    for (int n = 4; n <= 20; ++n) {
        const auto [p, m] = split_pow2(n);
        for (int k = 2; k <= n / 2; ++k) {
            const ObstructionSystem sys = obstruction_system(n, k);
            CHECK(solve(sys.matrix, sys.rhs).has_value() == (k <= m));
        }
    }
    const ObstructionSystem seven = obstruction_system(7, 2);
    CHECK(obstruction_solution(7, 2) == BooleanVector::from_bits({1}));
    CHECK(seven.matrix * obstruction_solution(7, 2) == seven.rhs);
    const auto solved = solve(seven.matrix, seven.rhs);
    REQUIRE(solved.has_value());
    CHECK(*solved == BooleanVector::from_bits({1}));
    for (int k : {2, 3}) {
        const ObstructionSystem sys = obstruction_system(12, k);
        CHECK(sys.matrix * obstruction_solution(12, k) == sys.rhs);
    }
    CHECK_THROWS_AS(obstruction_solution(12, 5), std::invalid_argument);   // 12 = 8 + 4, k > m
    CHECK_THROWS_AS(obstruction_row_dependency(12, 3), std::invalid_argument);
}

TEST_CASE("closed-form Betti numbers") {
    CHECK(closed_form_betti(7, 3) == 7);
    CHECK(closed_form_betti(16, 3) == 42);
    CHECK(closed_form_betti(20, 2) == 10);
    CHECK(closed_form_betti(3, 3) == 1);
    CHECK(closed_form_betti(9, 1) == 2);
    CHECK_THROWS_AS(closed_form_betti(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(closed_form_betti(10, 4), std::invalid_argument);
}

TEST_CASE("midpoint recurrence for b3 at odd dimensions") {
    for (int n = 5; n <= 25; n += 2)
        CHECK(2 * closed_form_betti(n, 3) ==
              closed_form_betti(n - 1, 3) + closed_form_betti(n + 1, 3));
}

TEST_CASE("H^2 bases") {
    const auto m0_basis = h2_basis_m0(7);
    REQUIRE(m0_basis.size() == 4);
    CHECK(m0_basis[0] == form_of({{1, 7}}));
    CHECK(m0_basis[1] == form_of({{2, 3}}));
    CHECK(m0_basis[2] == form_of({{3, 4}, {2, 5}}));
    CHECK(m0_basis[3] == form_of({{4, 5}, {3, 6}, {2, 7}}));

    const auto m2_basis = h2_basis_m2(7);
    CHECK(m2_basis[0] == form_of({{1, 7}, {2, 6}}));
    CHECK(m2_basis[1] == m0_basis[1]);

    for (int n : {5, 8, 13}) {
        const LieAlgebra g0 = LieAlgebra::m0(n);
        const LieAlgebra g2 = LieAlgebra::m2(n);
        CHECK(static_cast<long long>(h2_basis_m0(n).size()) == closed_form_betti(n, 2));
        for (const auto& f : h2_basis_m0(n)) {
            CHECK(is_cocycle(g0, f));
            CHECK_FALSE(is_coboundary(g0, f));
        }
        for (const auto& f : h2_basis_m2(n)) {
            CHECK(is_cocycle(g2, f));
            CHECK_FALSE(is_coboundary(g2, f));
        }
    }
}

TEST_CASE("H^3 basis blocks and cardinality") {
    CHECK(h3_basis_m0_block(4) == std::vector<Form>{form_of({{2, 3, 4}})});
    CHECK(h3_basis_m0_block(5).empty());
    CHECK(h3_basis_m0_block(7) ==
          std::vector<Form>{form_of({{3, 4, 5}, {2, 4, 6}, {2, 3, 7}}),
                            form_of({{3, 5, 6}, {2, 5, 7}, {3, 4, 7}})});
    for (int n = 4; n <= 16; ++n) {
        const auto basis = h3_basis_m0(n);
        CHECK(static_cast<long long>(basis.size()) == closed_form_betti(n, 3));
        for (const auto& f : basis) CHECK(f.max_index() <= n);
    }
}

TEST_CASE("involution image of the H^3 basis is a basis for the other family") {
    for (int n = 5; n <= 14; ++n) {
        const LieAlgebra g2 = LieAlgebra::m2(n);
        const auto m0_basis = h3_basis_m0(n);
        const auto m2_basis = h3_basis_m2(n);
        REQUIRE(m2_basis.size() == m0_basis.size());
        CHECK(static_cast<long long>(m2_basis.size()) == closed_form_betti(n, 3));

        std::map<int, std::vector<const Form*>> by_degree;
        for (const auto& f : m2_basis) {
            CHECK(is_cocycle(g2, f));
            by_degree[*f.uniform_degree()].push_back(&f);
        }
        for (const auto& [k, elements] : by_degree) {
            const auto domain = enumerate_basis(3, k, 1, n);
            RowSpace space(domain.size());
            const CochainBlock prev = block(g2, 2, k);
            for (std::size_t c = 0; c < prev.matrix.cols(); ++c) {
                BooleanVector image(domain.size());
                for (std::size_t r = 0; r < domain.size(); ++r)
                    if (prev.matrix.get(r, c)) image.set(r, true);
                space.insert(std::move(image));
            }
            for (const Form* f : elements) CHECK(space.insert(to_coords(*f, domain)));
        }

        // the involution moves exactly the e^{1,i-1,i} elements with i >= 5:
        // they pick up e^{2,i-2,i}, and that difference is not a d2-coboundary
        for (std::size_t i = 0; i < m0_basis.size(); ++i) {
            const Form diff = m0_basis[i] + m2_basis[i];
            if (m0_basis[i].max_index() >= 5 && m0_basis[i].monomials().size() == 1 &&
                m0_basis[i].monomials()[0].contains(1)) {
                const int top = m0_basis[i].max_index();
                CHECK(diff == form_of({{2, top - 2, top}}));
                CHECK_FALSE(is_coboundary(g2, diff));
            } else {
                CHECK(diff.is_zero());
            }
        }
    }
}

TEST_CASE("splitting off the e^1 and e^2 factors") {
    const Split12 a = split_e1_e2(form_of({{1, 4}}));
    CHECK(a.xi == Form::unit(4));
    CHECK(a.eta.is_zero());
    CHECK(a.zeta.is_zero());

    const Split12 b = split_e1_e2(form_of({{2, 3}}));
    CHECK(b.eta == Form::unit(3));

    const Split12 c = split_e1_e2(form_of({{3, 4, 5}}));
    CHECK(c.zeta == form_of({{3, 4, 5}}));

    CHECK_THROWS_AS(split_e1_e2(Form::unit(3)), std::invalid_argument);
    CHECK_THROWS_AS(split_e1_e2(form_of({{1, 2}, {1, 2, 3}})), std::invalid_argument);

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        const auto pool = enumerate_basis(3, 14, 1, 8);
        Form omega;
        for (const auto& m : pool)
            if (coin(rng)) omega.toggle(m);
        if (omega.is_zero()) continue;
        const Split12 s = split_e1_e2(omega);
        CHECK(wedge(Form::unit(1), s.xi) + wedge(Form::unit(2), s.eta) + s.zeta == omega);
        for (const auto& m : s.xi.monomials()) CHECK(m.indices.front() >= 2);
        for (const auto& m : s.eta.monomials()) CHECK(m.indices.front() >= 3);
        for (const auto& m : s.zeta.monomials()) CHECK(m.indices.front() >= 3);
    }
}

TEST_CASE("involution fixed cases") {
    CHECK(apply_involution(form_of({{1, 4}})) == form_of({{1, 4}, {2, 3}}));
    CHECK(apply_involution(form_of({{3, 4, 5}})) == form_of({{3, 4, 5}}));
    CHECK(apply_involution(Form::unit(7)) == Form::unit(7));
    CHECK(apply_involution(Form{}).is_zero());
}

TEST_CASE("involution properties on random forms") {
    std::mt19937 rng(888);
    std::uniform_int_distribution<int> terms(1, 6), rank(1, 4), index(1, 12), coin(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        Form omega;
        for (int t = terms(rng); t > 0; --t) {
            std::vector<int> idx;
            const int q = rank(rng);
            while (static_cast<int>(idx.size()) < q) {
                const int i = index(rng);
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
            }
            std::sort(idx.begin(), idx.end());
            omega.toggle(Monomial{idx});
        }
        const Form image = apply_involution(omega);
        CHECK(apply_involution(image) == omega);
        // rank and degree components are preserved
        auto ranks = split_by_rank(omega);
        auto image_ranks = split_by_rank(image);
        CHECK(ranks.size() == image_ranks.size());
        for (const auto& [r, part] : image_ranks) {
            CHECK(ranks.count(r) == 1);
            CHECK(split_by_degree(part).size() == split_by_degree(ranks[r]).size());
        }
    }
}

TEST_CASE("involution interweaves the two differentials") {
    const LieAlgebra g0 = LieAlgebra::m0(40);
    const LieAlgebra g2 = LieAlgebra::m2(40);
    std::mt19937 rng(999);
    std::uniform_int_distribution<int> index(1, 10), rank(1, 4);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<int> idx;
        const int q = rank(rng);
        while (static_cast<int>(idx.size()) < q) {
            const int i = index(rng);
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        const Form omega = form_of({idx});
        CHECK(apply_involution(d_apply(g0, omega)) == d_apply(g2, apply_involution(omega)));
        CHECK(apply_involution(d_apply(g2, omega)) == d_apply(g0, apply_involution(omega)));
    }
}

TEST_CASE("infinite-family cohomology basis") {
    CHECK(infinite_cohomology_basis(Family::m0, 1, 30) ==
          std::vector<Form>{Form::unit(1), Form::unit(2)});
    CHECK(infinite_cohomology_basis(Family::m0, 2, 7) ==
          std::vector<Form>{form_of({{2, 3}}), form_of({{3, 4}, {2, 5}})});
    CHECK(infinite_cohomology_basis(Family::m0, 3, 9) == std::vector<Form>{form_of({{2, 3, 4}})});
    CHECK(infinite_cohomology_basis(Family::m2, 2, 7) == infinite_cohomology_basis(Family::m0, 2, 7));

    // every element is a nontrivial class for both families
    for (int q : {2, 3})
        for (const auto& f : infinite_cohomology_basis(Family::m0, q, 12)) {
            const int deg = *f.uniform_degree();
            for (Family family : {Family::m0, Family::m2}) {
                const LieAlgebra g = truncation(family, deg);
                CHECK(is_cocycle(g, f));
                CHECK_FALSE(is_coboundary(g, f));
            }
        }
}

TEST_CASE("graded dimensions of the infinite family follow the partition rule") {
    for (int q = 2; q <= 4; ++q) {
        const auto basis = infinite_cohomology_basis(Family::m0, q, 24);
        const int offset = q * (q + 1) / 2;
        for (int k = 1; k <= 24; ++k) {
            long long count = 0;
            for (const auto& f : basis)
                if (*f.uniform_degree() == k) ++count;
            CHECK(count == partitions_exact(k - offset, q) - partitions_exact(k - offset - 1, q));
        }
    }
}
