#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "fd2p/algebra.hpp"

using namespace fd2p;

namespace {

AlgebraElement random_element(const AlgebraContext& ctx, Rng& rng) {
    AlgebraElement x = ctx.zero();
    for (size_t idx = 0; idx < ctx.dim(); ++idx)
        x.set_rep(idx, rng.below(ctx.field().order()));
    return x;
}

// Independent model of D_2p as permutations of Z_p: a^i b^j acts by
// v -> v + i (j = 0) or v -> i - v (j = 1). The map is a faithful
// homomorphism, so composing permutations gives the group law.
struct Perm {
    std::vector<uint64_t> img;
    bool operator==(const Perm& o) const { return img == o.img; }
};

Perm perm_of(uint64_t p, uint64_t i, uint64_t j) {
    Perm out;
    for (uint64_t v = 0; v < p; ++v)
        out.img.push_back(j == 0 ? (v + i) % p : (i + p - v % p) % p);
    return out;
}

Perm compose(const Perm& f, const Perm& g) { // f after g
    Perm out;
    for (uint64_t v : g.img) out.img.push_back(f.img[v]);
    return out;
}

} // namespace

TEST_CASE("group law matches the permutation model") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        AlgebraContext ctx(p, 1);
        for (uint64_t i = 0; i < p; ++i)
            for (uint64_t j = 0; j < 2; ++j)
                for (uint64_t r = 0; r < p; ++r)
                    for (uint64_t s = 0; s < 2; ++s) {
                        AlgebraElement prod =
                            ctx.group_element(i, j) * ctx.group_element(r, s);
                        Perm expect = compose(perm_of(p, i, j), perm_of(p, r, s));
                        // decode the product: must be a single basis element
                        size_t hits = 0, at = 0;
                        for (size_t idx = 0; idx < ctx.dim(); ++idx)
                            if (prod.rep(idx) != 0) {
                                ++hits;
                                at = idx;
                                CHECK(prod.rep(idx) == 1);
                            }
                        REQUIRE(hits == 1);
                        uint64_t pi = at % p, pj = at / p;
                        CHECK(perm_of(p, pi, pj) == expect);
                    }
    }
}

TEST_CASE("group relations") {
    AlgebraContext ctx(7, 1);
    AlgebraElement a = ctx.a(), b = ctx.b();
    CHECK(a.pow(7) == ctx.one());
    CHECK(b * b == ctx.one());
    CHECK(b * a * b == a.pow(6));
    CHECK(ctx.a(-1) == a.pow(6));
    CHECK(ctx.a(9) == a * a);
}

TEST_CASE("ring structure on seeded elements") {
    AlgebraContext ctx(5, 2);
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        AlgebraElement x = random_element(ctx, rng);
        AlgebraElement y = random_element(ctx, rng);
        AlgebraElement z = random_element(ctx, rng);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(z * (x + y) == z * x + z * y);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x - x == ctx.zero());
        CHECK(ctx.one() * x == x);
        FieldElement c = ctx.field().element(rng.below(ctx.field().order()));
        CHECK(c * (x * y) == (c * x) * y);
    }
}

TEST_CASE("frozen products") {
    AlgebraContext ctx(3, 1);
    const Field& f = ctx.field();
    AlgebraElement one_b = ctx.one() + ctx.b();
    CHECK(one_b * one_b == f.from_int(2) * one_b); // (1+b)^2 = 2 + 2b
    CHECK(circle(ctx.a() - ctx.one(), ctx.a(2) - ctx.one()) == ctx.zero());
}

TEST_CASE("involution") {
    AlgebraContext ctx(5, 2);
    CHECK(involution(ctx.a()) == ctx.a(4));
    CHECK(involution(ctx.a(2) * ctx.b()) == ctx.a(2) * ctx.b());
    CHECK(involution(ctx.b()) == ctx.b());
    CHECK(involution(ctx.one()) == ctx.one());
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        AlgebraElement x = random_element(ctx, rng);
        AlgebraElement y = random_element(ctx, rng);
        CHECK(involution(involution(x)) == x);
        CHECK(involution(x * y) == involution(y) * involution(x));
        CHECK(involution(x + y) == involution(x) + involution(y));
    }
}

TEST_CASE("augmentation and theta") {
    AlgebraContext ctx(5, 1);
    const Field& f = ctx.field();
    CHECK(augmentation(ctx.a(3)) == f.one());
    CHECK(augmentation(ctx.a_hat()) == f.from_int(5));
    AlgebraElement x = f.from_int(2) * ctx.one() + ctx.a() + f.from_int(3) * (ctx.a() * ctx.b());
    QuotientElement t = theta(x);
    CHECK(t.c0() == f.from_int(3));
    CHECK(t.c1() == f.from_int(3));
    CHECK(chi(x) == augmentation(x));

    Rng rng(17);
    for (int t2 = 0; t2 < 100; ++t2) {
        AlgebraElement u = random_element(ctx, rng);
        AlgebraElement v = random_element(ctx, rng);
        CHECK(augmentation(u * v) == augmentation(u) * augmentation(v));
        CHECK(theta(u * v) == theta(u) * theta(v));
        CHECK(theta(u + v) == theta(u) + theta(v));
    }
}

TEST_CASE("psi is a section of theta") {
    AlgebraContext ctx(3, 2);
    const Field& f = ctx.field();
    for (uint64_t r0 = 0; r0 < 9; ++r0)
        for (uint64_t r1 = 0; r1 < 9; ++r1) {
            QuotientElement e(&ctx, f.element(r0), f.element(r1));
            CHECK(theta(psi(e)) == e);
        }
    CHECK(psi(QuotientElement(&ctx, f.one(), f.one())) == ctx.one() + ctx.b());
}

TEST_CASE("gamma membership") {
    AlgebraContext ctx(5, 1);
    CHECK(in_gamma_A(ctx.a() - ctx.one()));
    CHECK(in_gamma_A((ctx.a() - ctx.one()) * ctx.b()));
    CHECK(in_gamma_A(ctx.zero()));
    CHECK_FALSE(in_gamma_A(ctx.a() - ctx.b())); // theta = 1 - x
    CHECK_FALSE(in_gamma_A(ctx.one()));
    CHECK(in_fa(ctx.a(2) + ctx.one()));
    CHECK_FALSE(in_fa(ctx.b()));
}

TEST_CASE("left regular matrix columns") {
    AlgebraContext ctx(5, 1);
    Rng rng(23);
    AlgebraElement x = random_element(ctx, rng);
    Matrix m = left_regular_matrix(x);
    REQUIRE(m.rows() == ctx.dim());
    REQUIRE(m.cols() == ctx.dim());
    for (uint64_t j = 0; j < 2; ++j)
        for (uint64_t i = 0; i < 5; ++i) {
            Vec col_expect = to_field_vector(x * ctx.group_element(i, j));
            size_t c = ctx.index_of(i, j);
            for (size_t r = 0; r < ctx.dim(); ++r) CHECK(m.at(r, c) == col_expect[r]);
        }
    // matrix form is multiplicative
    AlgebraElement y = random_element(ctx, rng);
    CHECK(left_regular_matrix(x * y) == left_regular_matrix(x) * left_regular_matrix(y));
}

TEST_CASE("units and inversion") {
    AlgebraContext ctx(3, 1);
    CHECK(is_unit(ctx.a()));
    CHECK(invert_unit(ctx.a()) == ctx.a(2));
    CHECK_FALSE(is_unit(ctx.one() + ctx.b()));
    CHECK_THROWS_AS(invert_unit(ctx.one() + ctx.b()), NotAUnitError);
    CHECK_THROWS_AS(invert_unit(ctx.zero()), NotAUnitError);

    // exhaustive unit count over F_3 D_6: (q-1)^2 * q^{4l} = 4 * 81 = 324
    uint64_t units = 0;
    for (uint64_t idx = 0; idx < 729; ++idx) {
        AlgebraElement x = ctx.from_index(idx);
        if (is_unit(x)) {
            ++units;
            AlgebraElement inv = invert_unit(x);
            CHECK(inv * x == ctx.one());
            CHECK(x * inv == ctx.one());
        }
    }
    CHECK(units == 324);
}

TEST_CASE("inversion fast path agrees on 1+Gamma") {
    AlgebraContext ctx(7, 1);
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        // force an element of 1 + Gamma(A)
        AlgebraElement g = random_element(ctx, rng);
        QuotientElement th = theta(g);
        g = g - psi(th); // now theta(g) = 0
        AlgebraElement v = ctx.one() + g;
        AlgebraElement inv = invert_unit(v);
        CHECK(inv == v.pow(6));
        CHECK(inv * v == ctx.one());
    }
}

TEST_CASE("unitary and symmetric predicates") {
    AlgebraContext ctx(3, 1);
    CHECK(is_unitary(ctx.a()));
    CHECK(is_unitary(ctx.b()));
    CHECK(is_unitary(-ctx.one()));
    CHECK_FALSE(is_unitary(ctx.one() + ctx.b()));       // not a unit
    CHECK_FALSE(is_unitary(ctx.one() + ctx.a()));       // unit, u*u != 1
    CHECK(is_symmetric(ctx.c_hat(1)));                  // a + a^2
    CHECK_FALSE(is_symmetric(ctx.a()));                 // a* = a^2 != a
}

TEST_CASE("quotient element arithmetic") {
    AlgebraContext ctx(5, 1);
    const Field& f = ctx.field();
    QuotientElement x(&ctx, f.zero(), f.one());
    CHECK(x * x == QuotientElement(&ctx, f.one(), f.zero()));
    CHECK((x * x).is_one());
    QuotientElement bad(&ctx, f.one(), f.one());
    CHECK_FALSE(bad.is_unit());
    CHECK_THROWS_AS(bad.inverse(), NotAUnitError);
    uint64_t units = 0, unitary = 0;
    for (uint64_t r0 = 0; r0 < 5; ++r0)
        for (uint64_t r1 = 0; r1 < 5; ++r1) {
            QuotientElement e(&ctx, f.element(r0), f.element(r1));
            if (e.is_unit()) {
                ++units;
                CHECK(e * e.inverse() == QuotientElement(&ctx, f.one(), f.zero()));
            }
            if (e.is_unitary()) ++unitary;
        }
    CHECK(units == 16); // (q-1)^2
    CHECK(unitary == 4);
}

TEST_CASE("index map and from_index") {
    AlgebraContext ctx(3, 1);
    CHECK(ctx.index_of(0, 0) == 0);
    CHECK(ctx.index_of(2, 0) == 2);
    CHECK(ctx.index_of(0, 1) == 3);
    CHECK(ctx.index_of(2, 1) == 5);
    AlgebraElement x = ctx.from_index(5); // digits base 3: 2,1,0,...
    CHECK(x.rep(0) == 2);
    CHECK(x.rep(1) == 1);
    CHECK(x == ctx.field().from_int(2) * ctx.one() + ctx.a());
}

TEST_CASE("serialization and rendering") {
    AlgebraContext ctx(3, 1);
    CHECK(ctx.a().serialize() == "[[0],[1],[0],[0],[0],[0]]");
    CHECK(ctx.a().human() == "a");
    CHECK(ctx.one().human() == "1");
    CHECK(ctx.zero().human() == "0");
    const Field& f = ctx.field();
    AlgebraElement x = f.from_int(2) * ctx.one() + f.from_int(2) * ctx.b();
    CHECK(x.human() == "2 + 2*b");
    CHECK((f.from_int(2) * (ctx.a(2) * ctx.b())).human() == "2*a^2*b");

    AlgebraContext e(3, 2);
    AlgebraElement y = (e.field().one() + e.field().alpha()) * e.a();
    CHECK(y.human() == "(1 + alpha)*a");
    CHECK(y.serialize() == "[[0,0],[1,1],[0,0],[0,0],[0,0],[0,0]]");
}

TEST_CASE("ordering is a strict total order on distinct elements") {
    AlgebraContext ctx(3, 1);
    AlgebraElement a = ctx.a(), b = ctx.b();
    CHECK((a < b) != (b < a));
    CHECK_FALSE(a < a);
    std::set<AlgebraElement> s{a, b, a, ctx.one()};
    CHECK(s.size() == 3);
}

TEST_CASE("vector roundtrips") {
    AlgebraContext ctx(5, 2);
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        AlgebraElement x = random_element(ctx, rng);
        CHECK(from_field_vector(&ctx, to_field_vector(x)) == x);
        CHECK(from_prime_vector(&ctx, to_prime_vector(x)) == x);
        CHECK(to_prime_vector(x).size() == ctx.prime_dim());
    }
}

TEST_CASE("context mismatch detection") {
    AlgebraContext c3(3, 1), c5(5, 1);
    CHECK_THROWS_AS(c3.one() + c5.one(), ContextMismatchError);
    AlgebraContext c3b(3, 1);
    CHECK(c3.one() + c3b.one() == c3.from_index(2)); // same params, ok
}
