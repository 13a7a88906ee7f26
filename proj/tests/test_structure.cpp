#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fd2p/structure.hpp"

using namespace fd2p;

TEST_CASE("closure basics") {
    AlgebraContext ctx(3, 1);
    SubgroupHandle h = closure("<a>", {ctx.a()}, 1000, 3);
    CHECK(h.enumeration_complete);
    CHECK(h.order() == 3);
    std::vector<AlgebraElement> expect{ctx.one(), ctx.a(), ctx.a(2)};
    std::sort(expect.begin(), expect.end());
    CHECK(h.elements == expect);
    CHECK(std::is_sorted(h.elements.begin(), h.elements.end()));

    SubgroupHandle hb = closure("<b,-1>", {ctx.b(), -ctx.one()}, 1000, 4);
    CHECK(hb.order() == 4);

    CHECK_THROWS_AS(closure("bad", {ctx.one() + ctx.b()}, 1000), std::invalid_argument);
    CHECK_THROWS_AS(closure("<a>", {ctx.a()}, 1000, 5), std::logic_error);

    SubgroupHandle partial = closure("<a>", {ctx.a()}, 2);
    CHECK_FALSE(partial.enumeration_complete);
    CHECK(partial.partial_count >= 2);
}

TEST_CASE("closure of the full unitary group at p=3") {
    AlgebraContext ctx(3, 1);
    std::vector<AlgebraElement> gens{ctx.a(), ctx.b(), -ctx.one()};
    SubgroupHandle h = closure("U_*", gens, 1000, 12);
    CHECK(h.order() == 12);
    for (const auto& u : h.elements) CHECK(is_unitary(u));
}

TEST_CASE("enumerate_f_span") {
    AlgebraContext ctx(3, 1);
    std::vector<AlgebraElement> basis{ctx.one(), ctx.b()};
    std::vector<AlgebraElement> span = enumerate_f_span(ctx, basis);
    CHECK(span.size() == 9);
    std::set<AlgebraElement> dedup(span.begin(), span.end());
    CHECK(dedup.size() == 9);
    CHECK(dedup.count(ctx.one() + ctx.b()) == 1);
    CHECK(enumerate_f_span(ctx, {}).size() == 1); // just zero
}

TEST_CASE("unitary units of 1+Gamma at p=3 by brute force") {
    AlgebraContext ctx(3, 1);
    SubgroupHandle h = enumerate_unitary_in_one_plus_gamma(ctx, 1'000'000);
    CHECK(h.enumeration_complete);
    CHECK(h.order() == 3);
    std::vector<AlgebraElement> expect{ctx.one(), ctx.a(), ctx.a(2)};
    std::sort(expect.begin(), expect.end());
    CHECK(h.elements == expect);

    SubgroupHandle partial = enumerate_unitary_in_one_plus_gamma(ctx, 10);
    CHECK_FALSE(partial.enumeration_complete);
}

TEST_CASE("unitary decomposition frozen at p=3") {
    AlgebraContext ctx(3, 1);
    const Field& f = ctx.field();
    AlgebraElement u = f.from_int(2) * (ctx.a(2) * ctx.b());
    REQUIRE(is_unitary(u));
    UnitaryDecomposition d = unitary_decompose(u);
    CHECK(d.v == ctx.a(2));
    CHECK(d.eps == 1);
    CHECK(d.delta == 1);

    UnitaryDecomposition id = unitary_decompose(ctx.one());
    CHECK(id.v == ctx.one());
    CHECK(id.eps == 0);
    CHECK(id.delta == 0);

    UnitaryDecomposition db = unitary_decompose(ctx.b());
    CHECK(db.v == ctx.one());
    CHECK(db.eps == 1);
    CHECK(db.delta == 0);

    CHECK_THROWS_AS(unitary_decompose(ctx.one() + ctx.a()), std::invalid_argument);
}

TEST_CASE("decomposition roundtrip over the enumerated group") {
    AlgebraContext ctx(3, 1);
    SubgroupHandle h = closure("U_*", {ctx.a(), ctx.b(), -ctx.one()}, 1000, 12);
    std::set<std::string> triples;
    for (const auto& u : h.elements) {
        UnitaryDecomposition d = unitary_decompose(u);
        AlgebraElement back = d.v;
        if (d.eps) back = back * ctx.b();
        if (d.delta) back = -back;
        CHECK(back == u);
        CHECK(in_fa(d.v));
        triples.insert(d.v.serialize() + std::to_string(d.eps) + std::to_string(d.delta));
    }
    CHECK(triples.size() == 12);
}

TEST_CASE("quotient unitary units") {
    AlgebraContext ctx(5, 1);
    std::vector<QuotientElement> units = quotient_unitary_units(ctx, 1000);
    CHECK(units.size() == 4);
    const Field& f = ctx.field();
    for (const auto& u : units) {
        CHECK(u.is_unitary());
        bool scalar_pm = u.c1().is_zero() && (u.c0() == f.one() || u.c0() == -f.one());
        bool x_pm = u.c0().is_zero() && (u.c1() == f.one() || u.c1() == -f.one());
        CHECK((scalar_pm || x_pm));
    }
    CHECK_THROWS_AS(quotient_unitary_units(ctx, 10), std::length_error);
}

TEST_CASE("center of 1+Gamma at p=3") {
    AlgebraContext ctx(3, 1);
    SubgroupHandle z = center_of_one_plus_gamma(ctx, 1'000'000);
    CHECK(z.enumeration_complete);
    CHECK(z.order() == 9);
    const Field& f = ctx.field();
    AlgebraElement s = f.from_int(2) * ctx.a() + f.from_int(2) * ctx.a(2);
    AlgebraElement t = ctx.one() + ctx.a_hat() * ctx.b();
    CHECK(std::binary_search(z.elements.begin(), z.elements.end(), s));
    CHECK(std::binary_search(z.elements.begin(), z.elements.end(), t));
    // every element commutes with all of 1+Gamma: spot-check generators
    for (const auto& v : z.elements) {
        CHECK(v * (ctx.one() + omega(ctx, 1)) == (ctx.one() + omega(ctx, 1)) * v);
        CHECK(v * (ctx.one() + omega_prime(ctx, 1)) == (ctx.one() + omega_prime(ctx, 1)) * v);
    }
}

TEST_CASE("center log subspace dimension on a grid") {
    for (uint64_t p : {3ull, 5ull, 7ull}) {
        for (uint32_t n : {1u, 2u}) {
            AlgebraContext ctx(p, n);
            CHECK(center_log_subspace(ctx).dim() == ctx.l() + 1);
            CHECK(centralizer_log_subspace(ctx).dim() == p);
        }
    }
}

TEST_CASE("centralizer of a at p=3") {
    AlgebraContext ctx(3, 1);
    SubgroupHandle c = centralizer_of_a(ctx, 1'000'000);
    CHECK(c.enumeration_complete);
    CHECK(c.order() == 27); // p^{np}
    CHECK(std::binary_search(c.elements.begin(), c.elements.end(), ctx.a()));
    for (const auto& v : c.elements) CHECK(v * ctx.a() == ctx.a() * v);
    // abelian
    for (const auto& v : c.elements)
        for (const auto& w : c.elements) CHECK(v * w == w * v);
}

TEST_CASE("pavesic factorization, pure cases at p=5") {
    AlgebraContext ctx(5, 1);
    AlgebraElement vU = ctx.one() + omega(ctx, 1); // omega_i span U
    FactorizationTriple f = pavesic_factorize(vU);
    CHECK(f.l_part == ctx.one());
    CHECK(f.d_part == ctx.one());
    CHECK(f.u_part == vU);

    AlgebraElement vL = ctx.one() + omega_prime(ctx, 2);
    f = pavesic_factorize(vL);
    CHECK(f.l_part == vL);
    CHECK(f.d_part == ctx.one());
    CHECK(f.u_part == ctx.one());

    AlgebraElement vD = ctx.one() + omega(ctx, 1) * omega_prime(ctx, 1);
    f = pavesic_factorize(vD);
    CHECK(f.l_part == ctx.one());
    CHECK(f.d_part == vD);
    CHECK(f.u_part == ctx.one());

    // a staged product is recovered factor by factor
    AlgebraElement lpart = ctx.one() + omega_prime(ctx, 1);
    AlgebraElement dpart = ctx.one() + omega_prime(ctx, 2) * omega(ctx, 2);
    AlgebraElement upart = ctx.one() + omega(ctx, 2);
    f = pavesic_factorize(lpart * dpart * upart);
    CHECK(f.l_part == lpart);
    CHECK(f.d_part == dpart);
    CHECK(f.u_part == upart);

    CHECK_THROWS_AS(pavesic_factorize(ctx.b()), std::invalid_argument);
}

TEST_CASE("pavesic factorization, seeded roundtrips at p=7") {
    AlgebraContext ctx(7, 1);
    BasisCatalog cat = build_catalog(ctx);
    LduSubspaces ldu = ldu_subspaces(ctx);
    Rng rng(123);
    for (int t = 0; t < 200; ++t) {
        AlgebraElement g = ctx.zero();
        for (const auto& w : cat.gamma)
            g = g + ctx.field().element(rng.below(7)) * w.elem;
        AlgebraElement v = ctx.one() + g;
        FactorizationTriple f = pavesic_factorize(v);
        CHECK(f.l_part * f.d_part * f.u_part == v);
        CHECK(ldu.L.contains(to_field_vector(f.l_part - ctx.one())));
        CHECK(ldu.D.contains(to_field_vector(f.d_part - ctx.one())));
        CHECK(ldu.U.contains(to_field_vector(f.u_part - ctx.one())));
    }
}

TEST_CASE("pavesic factorization, exhaustive and unique at p=3") {
    AlgebraContext ctx(3, 1);
    BasisCatalog cat = build_catalog(ctx);
    std::vector<AlgebraElement> basis;
    for (const auto& g : cat.gamma) basis.push_back(g.elem);
    std::set<std::string> triples;
    uint64_t count = 0;
    for (const auto& x : enumerate_f_span(ctx, basis)) {
        AlgebraElement v = ctx.one() + x;
        FactorizationTriple f = pavesic_factorize(v);
        CHECK(f.l_part * f.d_part * f.u_part == v);
        triples.insert(f.l_part.serialize() + f.d_part.serialize() + f.u_part.serialize());
        ++count;
    }
    CHECK(count == 81);
    CHECK(triples.size() == 81);
}

TEST_CASE("general product records at p=3") {
    AlgebraContext ctx(3, 1);
    std::vector<CheckRecord> recs = general_product_check(ctx, 1'000'000);
    REQUIRE(recs.size() == 4);
    for (const auto& r : recs) {
        INFO(r.check_id << ": " << r.reason);
        CHECK(r.status == "pass");
        CHECK(r.paper_ref == "Theorem 9");
    }
}

TEST_CASE("general product records at p=7 skip the coverage scan") {
    AlgebraContext ctx(7, 1);
    std::vector<CheckRecord> recs = general_product_check(ctx, 1'000'000);
    REQUIRE(recs.size() == 4);
    int skipped = 0;
    for (const auto& r : recs) {
        if (r.status == "skipped")
            ++skipped;
        else
            CHECK(r.status == "pass");
    }
    CHECK(skipped == 1);
}

TEST_CASE("global split records at p=3") {
    AlgebraContext ctx(3, 1);
    Rng rng(0);
    std::vector<CheckRecord> recs = verify_global_split(ctx, rng, 10'000'000);
    REQUIRE(recs.size() == 2);
    for (const auto& r : recs) {
        INFO(r.check_id << ": " << r.reason);
        CHECK(r.status == "pass");
    }
    // the exhaustive unit count is 4 * 81
    bool found = false;
    for (const auto& r : recs)
        if (r.check_id == "split.unit_count") {
            found = true;
            CHECK(r.actual.find("324") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("global split skips the scan at p=7") {
    AlgebraContext ctx(7, 1);
    Rng rng(0);
    std::vector<CheckRecord> recs = verify_global_split(ctx, rng, 10'000'000);
    REQUIRE(recs.size() == 2);
    int skipped = 0;
    for (const auto& r : recs)
        if (r.status == "skipped") ++skipped;
    CHECK(skipped == 1);
}
