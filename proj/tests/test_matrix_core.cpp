#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qweyl/float_linalg.hpp"
#include "qweyl/intertwiner.hpp"
#include "qweyl/matrix.hpp"
#include "qweyl/matrix_series.hpp"

using namespace qweyl;

namespace {

std::mt19937 rng(7);

Matrix<Rat> random_rat_matrix(int n) {
    std::uniform_int_distribution<int> c(-5, 5);
    Matrix<Rat> m(n, n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(c(rng));
    return m;
}

}  // namespace

TEST_CASE("tensor and leg placement") {
    Matrix<Rat> i2 = Matrix<Rat>::identity(2, Rat(0), Rat(1));
    Matrix<Rat> i3 = Matrix<Rat>::identity(3, Rat(0), Rat(1));
    CHECK(tensor(i2, i3) == Matrix<Rat>::identity(6, Rat(0), Rat(1)));

    Matrix<Rat> x = random_rat_matrix(2);
    CHECK(place_on_leg(x, 1, {2}) == x);
    Legs legs{2, 3, 2};
    Matrix<Rat> a = place_on_leg(x, 1, legs), b = place_on_leg(x, 3, legs);
    CHECK(commutator(a, b).is_zero());  // disjoint legs commute
}

TEST_CASE("permute_legs composes like the permutation group") {
    Legs legs{2, 2, 2};
    std::vector<std::vector<int>> perms = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                           {2, 0, 1}, {1, 2, 0}, {2, 1, 0}};
    CHECK(permute_legs(perms[0], legs, Rat(0), Rat(1)) ==
          Matrix<Rat>::identity(8, Rat(0), Rat(1)));
    std::uniform_int_distribution<size_t> pick(0, perms.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = perms[pick(rng)];
        auto t = perms[pick(rng)];
        std::vector<int> st(3);
        for (int i = 0; i < 3; ++i) st[i] = s[t[i]];
        auto ps = permute_legs(s, legs, Rat(0), Rat(1));
        auto pt = permute_legs(t, legs, Rat(0), Rat(1));
        CHECK(ps * pt == permute_legs(st, legs, Rat(0), Rat(1)));
    }
}

TEST_CASE("commutator basics") {
    Matrix<Rat> a = random_rat_matrix(3);
    CHECK(commutator(a, a).is_zero());
    CHECK(commutator(a, Matrix<Rat>::identity(3, Rat(0), Rat(1))).is_zero());
    // [E, F] = diag(1, -1) for the standard 2x2 pair
    Matrix<Rat> e(2, 2, Rat(0)), f(2, 2, Rat(0));
    e.at(0, 1) = Rat(1);
    f.at(1, 0) = Rat(1);
    Matrix<Rat> h = commutator(e, f);
    CHECK(h.at(0, 0) == Rat(1));
    CHECK(h.at(1, 1) == Rat(-1));
    CHECK(h.at(0, 1) == Rat(0));
}

TEST_CASE("inverse over exact rings") {
    for (int trial = 0; trial < 5; ++trial) {
        Matrix<Rat> a = random_rat_matrix(4);
        bool invertible = true;
        Matrix<Rat> inv;
        try {
            inv = a.inverse();
        } catch (const std::domain_error&) {
            invertible = false;
        }
        if (invertible) CHECK(a * inv == Matrix<Rat>::identity(4, Rat(0), Rat(1)));
    }
    CHECK_THROWS_AS(Matrix<Rat>(2, 2, Rat(0)).inverse(), std::domain_error);
}

TEST_CASE("matrix series log: trivial and first-order cases") {
    Matrix<Rat> z(3, 3, Rat(0));
    std::vector<Matrix<Rat>> zeros(4, z);
    auto logz = matrix_series_log(zeros);
    for (const auto& m : logz) CHECK(m.is_zero());

    Matrix<Rat> a = random_rat_matrix(3);
    auto l1 = matrix_series_log(std::vector<Matrix<Rat>>{a});
    CHECK(l1.size() == 1);
    CHECK(l1[0] == a);
}

TEST_CASE("matrix series exp/log round trip on noncommuting input") {
    std::vector<Matrix<Rat>> psi;
    for (int r = 0; r < 4; ++r) psi.push_back(random_rat_matrix(3));
    auto lg = matrix_series_log(psi);
    auto back = matrix_series_exp(lg);
    REQUIRE(back.size() == psi.size());
    for (size_t i = 0; i < psi.size(); ++i) CHECK(back[i] == psi[i]);
    // and the other composition order
    auto ex = matrix_series_exp(psi);
    auto back2 = matrix_series_log(ex);
    for (size_t i = 0; i < psi.size(); ++i) CHECK(back2[i] == psi[i]);
}

TEST_CASE("solve_columns solves consistent full-column-rank systems") {
    Matrix<Rat> e(4, 2, Rat(0));
    e.at(0, 0) = Rat(1);
    e.at(1, 1) = Rat(2);
    e.at(2, 0) = Rat(3);
    e.at(3, 1) = Rat(-1);
    Matrix<Rat> x(2, 3, Rat(0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) x.at(i, j) = Rat(i + 2 * j - 1);
    CHECK(solve_columns(e, e * x) == x);
    Matrix<Rat> bad = e * x;
    bad.at(3, 0) += Rat(1);
    CHECK_THROWS_AS(solve_columns(e, bad), std::domain_error);
}

TEST_CASE("intertwiner: identity, swap, and none") {
    Matrix<Rat> a = random_rat_matrix(3);
    auto x = solve_intertwiner<Rat>({a}, {a});
    REQUIRE(x.has_value());
    CHECK(rank_exact(*x) == 3);
    CHECK(*x * a == a * *x);

    Matrix<Rat> d12(2, 2, Rat(0)), d21(2, 2, Rat(0));
    d12.at(0, 0) = Rat(1);
    d12.at(1, 1) = Rat(2);
    d21.at(0, 0) = Rat(2);
    d21.at(1, 1) = Rat(1);
    auto swap = solve_intertwiner<Rat>({d12}, {d21});
    REQUIRE(swap.has_value());
    // the swap matrix up to scale
    CHECK(swap->at(0, 0) == Rat(0));
    CHECK(swap->at(1, 1) == Rat(0));
    CHECK(!swap->at(0, 1).is_zero());
    CHECK(!swap->at(1, 0).is_zero());

    Matrix<Rat> d34(2, 2, Rat(0));
    d34.at(0, 0) = Rat(3);
    d34.at(1, 1) = Rat(4);
    CHECK(!solve_intertwiner<Rat>({d12}, {d34}).has_value());
}

TEST_CASE("intertwiner residual is exactly zero on exact rings") {
    Matrix<Rat> a = random_rat_matrix(3);
    Matrix<Rat> g = random_rat_matrix(3);
    while (rank_exact(g) < 3) g = random_rat_matrix(3);
    Matrix<Rat> b = g * a * g.inverse();
    auto x = solve_intertwiner<Rat>({a}, {b});
    REQUIRE(x.has_value());
    CHECK((*x * a - b * *x).is_zero());
    CHECK(rank_exact(*x) == 3);
}

TEST_CASE("float intertwiner with SVD rank decisions") {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Matrix<Cplx> a(3, 3, Cplx(0, 0)), g(3, 3, Cplx(0, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a.at(i, j) = Cplx(d(rng), d(rng));
            g.at(i, j) = Cplx(d(rng), d(rng));
        }
    Matrix<Cplx> b = g * a * g.inverse();
    auto x = solve_intertwiner_float({a}, {b});
    REQUIRE(x.has_value());
    CHECK(max_abs(*x * a - b * *x) <= 1e-10);
    CHECK(rank_float(*x) == 3);
    CHECK(condition_number(*x) < 1e6);
}
