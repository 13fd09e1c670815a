#include <doctest.h>

#include <random>

#include "gf2coh/exterior.hpp"
#include "gf2coh/oracles.hpp"
#include "gf2coh/report.hpp"

using namespace gf2coh;

namespace {

Form form_of(const std::vector<std::vector<int>>& index_lists) {
    std::vector<Monomial> monos;
    for (const auto& idx : index_lists) monos.push_back(Monomial{idx});
    return Form(std::move(monos));
}

Form random_form(std::mt19937& rng, int max_index, int max_rank, int max_terms) {
    std::uniform_int_distribution<int> terms(0, max_terms), rank(0, max_rank), index(1, max_index);
    Form f;
    for (int t = terms(rng); t > 0; --t) {
        std::vector<int> idx;
        const int q = rank(rng);
        while (static_cast<int>(idx.size()) < q) {
            const int i = index(rng);
            if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        f.toggle(Monomial{idx});
    }
    return f;
}

} // namespace

TEST_CASE("addition is symmetric difference") {
    const Form e23 = form_of({{2, 3}});
    const Form e45 = form_of({{4, 5}});
    CHECK((e23 + e23).is_zero());
    CHECK(e23 + e45 == form_of({{2, 3}, {4, 5}}));
    CHECK((e23 + e45) + e45 == e23);
}

TEST_CASE("wedge on monomials") {
    CHECK(wedge(Form::unit(2), Form::unit(3)) == form_of({{2, 3}}));
    CHECK(wedge(Form::unit(2), Form::unit(2)).is_zero());
    const Form sum = form_of({{2, 3}, {4, 5}});
    CHECK(wedge(sum, sum).is_zero());   // squares vanish, cross terms cancel in pairs
}

TEST_CASE("wedge is associative and commutative, squares vanish") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 50; ++trial) {
        const Form a = random_form(rng, 8, 3, 3);
        const Form b = random_form(rng, 8, 3, 3);
        const Form c = random_form(rng, 8, 3, 3);
        CHECK(wedge(a, b) == wedge(b, a));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
    for (int trial = 0; trial < 50; ++trial) {
        Form a = random_form(rng, 9, 4, 4);
        if (a.contains(Monomial{})) a.toggle(Monomial{});   // drop any scalar part
        CHECK(wedge(a, a).is_zero());
    }
}

TEST_CASE("wedge adds rank and degree on homogeneous forms") {
    const Form a = form_of({{2, 5}, {3, 4}});   // rank 2, degree 7
    const Form b = form_of({{6}});
    const Form p = wedge(a, b);
    CHECK(p.uniform_rank() == 3);
    CHECK(p.uniform_degree() == 13);
}

TEST_CASE("enumerate_basis: fixed cases") {
    CHECK(enumerate_basis(2, 7, 1, 6) ==
          std::vector<Monomial>{Monomial{{1, 6}}, Monomial{{2, 5}}, Monomial{{3, 4}}});
    CHECK(enumerate_basis(2, 7, 2, 6) == std::vector<Monomial>{Monomial{{2, 5}}, Monomial{{3, 4}}});
    CHECK(enumerate_basis(3, 5, 1, 9).empty());   // minimum degree of a rank-3 monomial is 6
    CHECK(enumerate_basis(0, 0, 1, 5) == std::vector<Monomial>{Monomial{}});
    CHECK(enumerate_basis(0, 1, 1, 5).empty());
}

TEST_CASE("enumerate_basis counts match subset enumeration") {
    for (int n = 2; n <= 14; n += 3)
        for (int q = 1; q <= 4; ++q)
            for (int k = 1; k <= 3 * n; k += 2)
                CHECK(static_cast<long long>(enumerate_basis(q, k, 2, n).size()) ==
                      oracles::count_index_tuples(q, k, 2, n));
}

TEST_CASE("enumerate_basis output is strictly increasing lexicographically") {
    const auto basis = enumerate_basis(3, 18, 1, 10);
    for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i - 1] < basis[i]);
}

TEST_CASE("coordinates round-trip") {
    const std::vector<Monomial> basis{Monomial{{1, 6}}, Monomial{{2, 5}}, Monomial{{3, 4}}};
    CHECK(to_coords(Form{}, basis) == BooleanVector(3));
    CHECK(to_coords(form_of({{2, 5}, {3, 4}}), basis) == BooleanVector::from_bits({0, 1, 1}));
    CHECK_THROWS_AS(to_coords(form_of({{1, 2}}), basis), std::invalid_argument);

    std::mt19937 rng(707);
    const auto big = enumerate_basis(3, 15, 1, 9);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        Form f;
        for (const auto& m : big)
            if (coin(rng)) f.toggle(m);
        CHECK(from_coords(to_coords(f, big), big) == f);
    }
}

TEST_CASE("monomial and form validity") {
    CHECK_THROWS_AS((Form{{Monomial{{3, 2}}}}), std::invalid_argument);
    CHECK_THROWS_AS((Form{{Monomial{{2, 2}}}}), std::invalid_argument);
    CHECK_THROWS_AS((Form{{Monomial{{0, 1}}}}), std::invalid_argument);
    CHECK(Form::unit(0).is_zero());   // e^0 = 0
    CHECK_THROWS_AS(Form::unit(-1), std::invalid_argument);
    CHECK(Form({Monomial{{2, 3}}, Monomial{{2, 3}}}).is_zero());
}

TEST_CASE("rank and degree accessors") {
    const Form mixed = form_of({{1}, {2, 3}});
    CHECK_FALSE(mixed.uniform_rank().has_value());
    CHECK(form_of({{1, 4}, {2, 3}}).uniform_rank() == 2);
    CHECK(form_of({{1, 4}, {2, 3}}).uniform_degree() == 5);
    CHECK_FALSE(Form{}.uniform_rank().has_value());
    CHECK(split_by_rank(mixed).size() == 2);
    CHECK(split_by_degree(form_of({{1, 4}, {2, 3}})).size() == 1);
}

TEST_CASE("text rendering") {
    CHECK(to_string(Monomial{{2, 4, 10}}) == "e{2,4,10}");
    CHECK(to_string(Monomial{}) == "1");
    CHECK(to_string(Form{}) == "0");
    CHECK(to_string(form_of({{2, 3}, {2, 5}})) == "e{2,3}+e{2,5}");
}

TEST_CASE("JSON round-trip of forms") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 50; ++trial) {
        const Form f = random_form(rng, 11, 4, 5);
        const auto j = nlohmann::json::parse(form_to_json(f).dump());
        CHECK(form_from_json(j) == f);
    }
}
