#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fd2p/linalg.hpp"

using namespace fd2p;

namespace {

Matrix make(const Field& f, const std::vector<std::vector<int64_t>>& rows) {
    Matrix m(&f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            m.set(i, j, f.from_int(rows[i][j]));
    return m;
}

Vec vec(const Field& f, const std::vector<int64_t>& v) {
    Vec out;
    for (int64_t c : v) out.push_back(f.from_int(c));
    return out;
}

Matrix random_matrix(const Field& f, Rng& rng, size_t rows, size_t cols) {
    Matrix m(&f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            m.set_rep(i, j, rng.below(f.order()));
    return m;
}

} // namespace

TEST_CASE("matrix product and transpose") {
    Field f(5, 1);
    Matrix a = make(f, {{1, 2}, {3, 4}});
    Matrix s = make(f, {{0, 1}, {1, 0}});
    CHECK(a * s == make(f, {{2, 1}, {4, 3}}));
    CHECK(s * a == make(f, {{3, 4}, {1, 2}}));
    CHECK(a.transposed().transposed() == a);
    CHECK((a * s).transposed() == s.transposed() * a.transposed());
    CHECK(a.apply(vec(f, {1, 0})) == vec(f, {1, 3}));
}

TEST_CASE("rref and rank, frozen cases") {
    Field f(5, 1);
    CHECK(rank(make(f, {{1, 2}, {3, 4}})) == 2);
    CHECK(rref(make(f, {{1, 2}, {3, 4}})) == make(f, {{1, 0}, {0, 1}}));
    CHECK(rank(make(f, {{1, 2}, {2, 4}})) == 1);
    CHECK(rref(make(f, {{1, 2}, {2, 4}})) == make(f, {{1, 2}, {0, 0}}));
    CHECK(rank(make(f, {{0, 0}, {0, 0}})) == 0);
    // wide and tall
    CHECK(rank(make(f, {{1, 2, 3}})) == 1);
    CHECK(rank(make(f, {{1}, {2}, {3}})) == 1);
}

TEST_CASE("solve, frozen cases") {
    Field f(5, 1);
    Matrix a = make(f, {{1, 2}, {3, 4}});
    auto x = solve(a, vec(f, {1, 0}));
    REQUIRE(x.has_value());
    CHECK(*x == vec(f, {3, 4}));

    Matrix sing = make(f, {{1, 2}, {2, 4}});
    CHECK_FALSE(solve(sing, vec(f, {1, 1})).has_value());
    auto y = solve(sing, vec(f, {1, 2}));
    REQUIRE(y.has_value());
    CHECK(sing.apply(*y) == vec(f, {1, 2}));
}

TEST_CASE("kernel, frozen case") {
    Field f(5, 1);
    Subspace k = kernel(make(f, {{1, 2}, {2, 4}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(vec(f, {3, 1})));
    CHECK_FALSE(k.contains(vec(f, {1, 0})));
}

TEST_CASE("rank-nullity and verification on seeded matrices") {
    Field f(7, 1);
    Rng rng(2024);
    for (int t = 0; t < 50; ++t) {
        size_t rows = 1 + rng.below(6);
        size_t cols = 1 + rng.below(8);
        Matrix m = random_matrix(f, rng, rows, cols);
        CHECK(rank(m) == rank(m.transposed()));
        Subspace k = kernel(m);
        CHECK(k.dim() + rank(m) == cols);
        for (size_t r = 0; r < k.dim(); ++r) {
            Vec img = m.apply(k.basis().row(r));
            for (const auto& c : img) CHECK(c.is_zero());
        }
        Vec w;
        for (size_t j = 0; j < cols; ++j) w.push_back(f.element(rng.below(7)));
        Vec rhs = m.apply(w);
        auto sol = solve(m, rhs);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == rhs);
    }
}

TEST_CASE("seeded matrices over an extension field") {
    Field f(3, 2);
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        Matrix m = random_matrix(f, rng, 4, 5);
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(kernel(m).dim() + rank(m) == 5);
    }
}

TEST_CASE("subspace span and membership") {
    Field f(7, 1);
    Subspace s = Subspace::span(&f, 3, {vec(f, {1, 2, 3}), vec(f, {2, 4, 6}), vec(f, {0, 1, 1})});
    CHECK(s.dim() == 2);
    CHECK(s.contains(vec(f, {1, 3, 4})));
    CHECK_FALSE(s.contains(vec(f, {1, 0, 0})));
    CHECK(s.contains(Subspace::span(&f, 3, {vec(f, {2, 4, 6})})));
    CHECK(Subspace::span(&f, 2, {vec(f, {1, 1})}) == Subspace::span(&f, 2, {vec(f, {2, 2})}));
    Subspace zero(&f, 3);
    CHECK(zero.dim() == 0);
    CHECK(s.contains(zero));
}

TEST_CASE("sum and intersection") {
    Field f(5, 1);
    Subspace s = Subspace::span(&f, 3, {vec(f, {1, 0, 0}), vec(f, {0, 1, 0})});
    Subspace t = Subspace::span(&f, 3, {vec(f, {0, 1, 0}), vec(f, {0, 0, 1})});
    CHECK(sum(s, t).dim() == 3);
    Subspace meet = intersect(s, t);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(vec(f, {0, 1, 0})));

    // dim formula on seeded spans
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> sv, tv;
        for (int r = 0; r < 3; ++r) {
            Vec v1, v2;
            for (int c = 0; c < 5; ++c) {
                v1.push_back(f.element(rng.below(5)));
                v2.push_back(f.element(rng.below(5)));
            }
            sv.push_back(v1);
            tv.push_back(v2);
        }
        Subspace ss = Subspace::span(&f, 5, sv);
        Subspace tt = Subspace::span(&f, 5, tv);
        CHECK(sum(ss, tt).dim() + intersect(ss, tt).dim() == ss.dim() + tt.dim());
        CHECK(ss.contains(intersect(ss, tt)));
        CHECK(sum(ss, tt).contains(ss));
    }
}
