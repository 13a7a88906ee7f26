#include "fd2p/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fd2p {

namespace {

/// Matrix of the linear map x -> sum-position-wise image, columns indexed by
/// group elements: column k is image(g_k).
template <typename F>
Matrix map_matrix(const AlgebraContext& ctx, F&& image) {
    Matrix m(ctx.field_ptr(), ctx.dim(), ctx.dim());
    for (size_t k = 0; k < ctx.dim(); ++k) {
        const AlgebraElement g = ctx.group_element(k % ctx.p(), k / ctx.p());
        const AlgebraElement img = image(g);
        for (size_t r = 0; r < ctx.dim(); ++r) m.set_rep(r, k, img.rep(r));
    }
    return m;
}

std::vector<AlgebraElement> subspace_elements(const AlgebraContext& ctx,
                                              const Subspace& s) {
    std::vector<AlgebraElement> basis;
    for (size_t r = 0; r < s.basis().rows(); ++r) {
        basis.push_back(from_field_vector(&ctx, s.basis().row(r)));
    }
    return enumerate_f_span(ctx, basis);
}

std::vector<AlgebraElement> one_plus(const AlgebraContext& ctx,
                                     std::vector<AlgebraElement> xs) {
    for (AlgebraElement& x : xs) x = ctx.one() + x;
    std::sort(xs.begin(), xs.end());
    return xs;
}

/// F_p-flattening of an F-subspace of F^{2p}: spanned by the alpha-power
/// multiples of its basis, inside F_p^{2pn}.
Subspace as_prime_subspace(const AlgebraContext& ctx, const Subspace& s) {
    std::vector<Vec> rows;
    for (size_t r = 0; r < s.basis().rows(); ++r) {
        const AlgebraElement x = from_field_vector(&ctx, s.basis().row(r));
        FieldElement scale = ctx.field().one();
        for (uint32_t d = 0; d < ctx.n(); ++d) {
            rows.push_back(to_prime_vector(ctx.scalar(scale) * x));
            scale = scale * ctx.field().alpha();
        }
    }
    return Subspace::span(ctx.prime_field_ptr(), ctx.prime_dim(), rows);
}

Subspace prime_log_span(const AlgebraContext& ctx,
                        const std::vector<AlgebraElement>& family) {
    std::vector<Vec> logs;
    for (const AlgebraElement& v : family) {
        logs.push_back(to_prime_vector(truncated_log(v)));
    }
    return Subspace::span(ctx.prime_field_ptr(), ctx.prime_dim(), logs);
}

std::vector<AlgebraElement> elements_of(const std::vector<LabeledElement>& fam) {
    std::vector<AlgebraElement> out;
    out.reserve(fam.size());
    for (const LabeledElement& e : fam) out.push_back(e.elem);
    return out;
}

CheckRecord base_record(const AlgebraContext& ctx, std::string check_id,
                        std::string paper_ref) {
    CheckRecord r;
    r.check_id = std::move(check_id);
    r.paper_ref = std::move(paper_ref);
    r.p = ctx.p();
    r.n = ctx.n();
    r.poly = poly_to_string(ctx.field().modulus());
    return r;
}

void resolve(CheckRecord& r, bool ok, std::string expected, std::string actual) {
    r.status = ok ? "pass" : "fail";
    r.expected = std::move(expected);
    r.actual = std::move(actual);
    if (!ok && r.reason.empty()) r.reason = "mismatch";
}

} // namespace

SubgroupHandle closure(const std::string& label,
                       const std::vector<AlgebraElement>& generators,
                       uint64_t order_bound, uint64_t predicted_order) {
    if (generators.empty()) {
        throw std::invalid_argument("closure: need at least one generator");
    }
    const AlgebraContext& ctx = generators.front().context();
    for (const AlgebraElement& g : generators) {
        check_same_context(ctx, g.context());
        if (!is_unit(g)) throw std::invalid_argument("closure: generators must be units");
    }
    SubgroupHandle h;
    h.label = label;
    h.generators = generators;
    h.predicted_order = predicted_order;

    std::set<AlgebraElement> seen;
    std::vector<AlgebraElement> queue;
    seen.insert(ctx.one());
    queue.push_back(ctx.one());
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        for (const AlgebraElement& g : generators) {
            AlgebraElement y = queue[qi] * g;
            if (seen.insert(y).second) {
                if (seen.size() > order_bound) {
                    h.partial_count = seen.size();
                    return h;
                }
                queue.push_back(std::move(y));
            }
        }
    }
    h.elements.assign(seen.begin(), seen.end());
    h.enumeration_complete = true;
    if (predicted_order != 0 && predicted_order != h.elements.size()) {
        throw std::logic_error("closure: enumerated order " +
                               std::to_string(h.elements.size()) +
                               " contradicts prediction " +
                               std::to_string(predicted_order));
    }
    return h;
}

std::vector<AlgebraElement> enumerate_f_span(
    const AlgebraContext& ctx, const std::vector<AlgebraElement>& basis) {
    const uint64_t q = ctx.field().order();
    std::vector<AlgebraElement> out;
    std::vector<uint64_t> digit(basis.size(), 0);
    while (true) {
        AlgebraElement acc = ctx.zero();
        for (size_t i = 0; i < basis.size(); ++i) {
            if (digit[i] == 0) continue;
            acc = acc + ctx.scalar(ctx.field().element(digit[i])) * basis[i];
        }
        out.push_back(std::move(acc));
        size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == q) digit[pos++] = 0;
        if (pos == digit.size()) break;
    }
    return out;
}

SubgroupHandle enumerate_unitary_in_one_plus_gamma(const AlgebraContext& ctx,
                                                   uint64_t bound) {
    const uint64_t q = ctx.field().order();
    const uint64_t nl = ctx.n() * ctx.l();
    SubgroupHandle h;
    h.label = "V_*";
    h.generators = elements_of(unitary_basis(ctx));
    h.predicted_order = saturating_pow(ctx.p(), nl, UINT64_MAX);

    if (saturating_pow(q, 4 * ctx.l(), bound + 1) > bound) {
        return h;
    }
    std::set<AlgebraElement> found;
    uint64_t scanned = 0;
    for (const AlgebraElement& x : enumerate_f_span(ctx, elements_of(gamma_free_basis(ctx)))) {
        const AlgebraElement v = ctx.one() + x;
        ++scanned;
        if (is_unitary(v)) found.insert(v);
    }
    h.partial_count = scanned;
    h.elements.assign(found.begin(), found.end());
    h.enumeration_complete = true;

    const SubgroupHandle gen = closure("V_*", h.generators, bound, 0);
    if (!gen.enumeration_complete ||
        gen.elements != h.elements) {
        throw std::logic_error(
            "unitary units of 1 + Gamma(A) differ from the closure of the "
            "unitary basis");
    }
    if (h.elements.size() != h.predicted_order) {
        throw std::logic_error("V_* order differs from p^{n(p-1)/2}");
    }
    return h;
}

UnitaryDecomposition unitary_decompose(const AlgebraElement& u) {
    if (!is_unitary(u)) {
        throw std::invalid_argument("unitary_decompose: input is not a unitary unit");
    }
    const AlgebraContext& ctx = u.context();
    const Field& f = ctx.field();
    const QuotientElement t = theta(u);
    const uint64_t one = f.one().rep();
    const uint64_t minus = f.neg_rep(one);
    int eps, delta;
    if (t.c0().rep() == one && t.c1().rep() == 0) {
        eps = 0, delta = 0;
    } else if (t.c0().rep() == minus && t.c1().rep() == 0) {
        eps = 0, delta = 1;
    } else if (t.c0().rep() == 0 && t.c1().rep() == one) {
        eps = 1, delta = 0;
    } else if (t.c0().rep() == 0 && t.c1().rep() == minus) {
        eps = 1, delta = 1;
    } else {
        throw std::logic_error(
            "unitary_decompose: theta(u) is outside {1, -1, x, -x}");
    }
    AlgebraElement h = eps == 1 ? ctx.b() : ctx.one();
    if (delta == 1) h = -h;
    const AlgebraElement v = u * h;   // h is its own inverse
    if (!in_fa(v) || !theta(v).is_one() || !is_unitary(v)) {
        throw std::logic_error("unitary_decompose: v-part is not in V_*(FA)");
    }
    return {v, eps, delta};
}

std::vector<QuotientElement> quotient_unitary_units(const AlgebraContext& ctx,
                                                    uint64_t bound) {
    const uint64_t q = ctx.field().order();
    if (saturating_pow(q, 2, bound + 1) > bound) {
        throw std::length_error("quotient_unitary_units: p^{2n} exceeds bound");
    }
    std::vector<QuotientElement> out;
    for (uint64_t r0 = 0; r0 < q; ++r0) {
        for (uint64_t r1 = 0; r1 < q; ++r1) {
            const QuotientElement u(&ctx, ctx.field().element(r0),
                                    ctx.field().element(r1));
            if (u.is_unitary()) out.push_back(u);
        }
    }
    return out;
}

Subspace center_log_subspace(const AlgebraContext& ctx) {
    const std::vector<LabeledElement> basis = gamma_free_basis(ctx);
    Matrix stacked(ctx.field_ptr(), basis.size() * ctx.dim(), ctx.dim());
    for (size_t t = 0; t < basis.size(); ++t) {
        const AlgebraElement& g = basis[t].elem;
        const Matrix m = map_matrix(ctx, [&](const AlgebraElement& x) { return x * g - g * x; });
        for (size_t r = 0; r < ctx.dim(); ++r) {
            for (size_t c = 0; c < ctx.dim(); ++c) {
                stacked.set_rep(t * ctx.dim() + r, c, m.rep_at(r, c));
            }
        }
    }
    return intersect(kernel(stacked), gamma_subspace(ctx));
}

Subspace centralizer_log_subspace(const AlgebraContext& ctx) {
    const AlgebraElement a = ctx.a(1);
    const Matrix m = map_matrix(ctx, [&](const AlgebraElement& x) { return x * a - a * x; });
    return intersect(kernel(m), gamma_subspace(ctx));
}

SubgroupHandle center_of_one_plus_gamma(const AlgebraContext& ctx, uint64_t bound) {
    const Subspace z = center_log_subspace(ctx);
    const uint64_t l = ctx.l();
    if (z.dim() != l + 1) {
        throw std::logic_error("center of 1 + Gamma(A) has dimension " +
                               std::to_string(z.dim()) + " over F, expected l+1");
    }

    std::vector<Vec> shape;
    const AlgebraElement two = ctx.scalar(ctx.field().from_int(2));
    for (uint64_t i = 1; i <= l; ++i) {
        shape.push_back(to_field_vector(ctx.c_hat(i) - two));
    }
    shape.push_back(to_field_vector(ctx.a_hat() * ctx.b()));
    if (!(Subspace::span(ctx.field_ptr(), ctx.dim(), shape) == z)) {
        throw std::logic_error(
            "center is not spanned by {C_i-hat - 2, A-hat b}");
    }

    SubgroupHandle h;
    h.label = "Z";
    h.generators = elements_of(center_basis(ctx));
    h.predicted_order = saturating_pow(ctx.p(), ctx.n() * (l + 1), UINT64_MAX);

    for (const AlgebraElement& g : h.generators) {
        if (!z.contains(to_field_vector(g - ctx.one()))) {
            throw std::logic_error("center basis element falls outside the center");
        }
    }
    if (log_rank_prime(h.generators) != ctx.n() * (l + 1)) {
        throw std::logic_error("center basis logs are not independent over F_p");
    }

    if (saturating_pow(ctx.field().order(), l + 1, bound + 1) <= bound) {
        h.elements = one_plus(ctx, subspace_elements(ctx, z));
        h.enumeration_complete = true;
    }
    return h;
}

SubgroupHandle centralizer_of_a(const AlgebraContext& ctx, uint64_t bound) {
    const Subspace c = centralizer_log_subspace(ctx);
    if (c.dim() != ctx.p()) {
        throw std::logic_error("centralizer of a has dimension " +
                               std::to_string(c.dim()) + " over F, expected p");
    }
    const Subspace c_p = as_prime_subspace(ctx, c);

    const std::vector<AlgebraElement> zs = elements_of(unitary_basis(ctx));
    const std::vector<AlgebraElement> centers = elements_of(center_basis(ctx));
    const Subspace v_span = prime_log_span(ctx, zs);
    const Subspace z_span = prime_log_span(ctx, centers);
    const uint64_t n = ctx.n(), l = ctx.l();
    if (v_span.dim() != n * l || z_span.dim() != n * (l + 1)) {
        throw std::logic_error("centralizer factors have unexpected log ranks");
    }
    if (intersect(v_span, z_span).dim() != 0 ||
        sum(v_span, z_span).dim() != n * ctx.p() ||
        !c_p.contains(v_span) || !c_p.contains(z_span)) {
        throw std::logic_error(
            "centralizer of a is not the direct product V_*(FA) x Z(1 + Gamma(A))");
    }

    SubgroupHandle h;
    h.label = "C(a)";
    h.generators = zs;
    h.generators.insert(h.generators.end(), centers.begin(), centers.end());
    h.predicted_order = saturating_pow(ctx.p(), n * ctx.p(), UINT64_MAX);
    if (saturating_pow(ctx.field().order(), ctx.p(), bound + 1) <= bound) {
        h.elements = one_plus(ctx, subspace_elements(ctx, c));
        h.enumeration_complete = true;
    }
    return h;
}

FactorizationTriple pavesic_factorize(const AlgebraElement& v) {
    const AlgebraContext& ctx = v.context();
    const AlgebraElement m = v - ctx.one();
    if (!in_gamma_A(m)) {
        throw std::invalid_argument("pavesic_factorize: v must lie in 1 + Gamma(A)");
    }
    const IdempotentPair e = idempotents(ctx);
    const AlgebraElement m11 = e.e1 * m * e.e1;
    const AlgebraElement m12 = e.e1 * m * e.e2;
    const AlgebraElement m21 = e.e2 * m * e.e1;
    const AlgebraElement m22 = e.e2 * m * e.e2;

    // (e2 + m22)^{-1} inside the corner: e2 - m22 + m22^2 - ...
    AlgebraElement inv = e.e2;
    AlgebraElement term = e.e2;
    for (uint64_t k = 1; k <= ctx.p() - 1; ++k) {
        term = -(term * m22);
        inv = inv + term;
    }

    const AlgebraElement u = inv * m21;
    const AlgebraElement l = m12 * inv;
    const AlgebraElement d = m11 - m12 * inv * m21 + m22;

    if (l != e.e1 * l * e.e2 || u != e.e2 * u * e.e1 ||
        d != e.e1 * d * e.e1 + e.e2 * d * e.e2) {
        throw std::logic_error("pavesic_factorize: parts violate the Peirce conditions");
    }
    if ((ctx.one() + l) * (ctx.one() + d) * (ctx.one() + u) != v) {
        throw std::logic_error("pavesic_factorize: reconstruction mismatch");
    }
    return {ctx.one() + l, ctx.one() + d, ctx.one() + u};
}

std::vector<CheckRecord> general_product_check(const AlgebraContext& ctx,
                                               uint64_t group_bound) {
    std::vector<CheckRecord> out;
    const uint64_t n = ctx.n(), l = ctx.l();
    const IdempotentPair e = idempotents(ctx);

    const Matrix corner =
        map_matrix(ctx, [&](const AlgebraElement& x) { return e.e2 * x * e.e1; });
    const Subspace w_log = intersect(kernel(corner), gamma_subspace(ctx));
    const Subspace c_log = centralizer_log_subspace(ctx);
    const Subspace z_log = center_log_subspace(ctx);

    {
        CheckRecord r = base_record(ctx, "theorem9.w_order", "Theorem 9");
        resolve(r, w_log.dim() == 3 * l,
                "dim_F W-log = 3l = " + std::to_string(3 * l),
                std::to_string(w_log.dim()));
        out.push_back(r);
    }
    {
        CheckRecord r = base_record(ctx, "theorem9.w_cap_centralizer", "Theorem 9");
        const Subspace cap = intersect(w_log, c_log);
        resolve(r, cap == z_log, "W intersect C(a) = Z(1 + Gamma(A))",
                cap == z_log ? "equal"
                             : "intersection dim " + std::to_string(cap.dim()) +
                                   ", center dim " + std::to_string(z_log.dim()));
        out.push_back(r);
    }
    {
        CheckRecord r = base_record(ctx, "theorem9.order_equation", "Theorem 9");
        const uint64_t lhs = n * w_log.dim() + n * c_log.dim();
        const uint64_t rhs = n * z_log.dim() + 4 * n * l;
        resolve(r, lhs == rhs,
                "exponents: 3nl + np = n(l+1) + 4nl = " + std::to_string(rhs),
                std::to_string(lhs));
        out.push_back(r);
    }
    {
        CheckRecord r = base_record(ctx, "theorem9.coverage", "Theorem 9");
        const uint64_t q = ctx.field().order();
        if (saturating_pow(q, 4 * l, group_bound + 1) > group_bound) {
            r.status = "skipped";
            r.reason = "p^{4nl} exceeds group enumeration bound";
            out.push_back(r);
        } else {
            const std::vector<AlgebraElement> w_set =
                one_plus(ctx, subspace_elements(ctx, w_log));
            const std::vector<AlgebraElement> c_set =
                one_plus(ctx, subspace_elements(ctx, c_log));
            std::set<AlgebraElement> products;
            for (const AlgebraElement& w : w_set) {
                for (const AlgebraElement& c : c_set) products.insert(w * c);
            }
            const std::vector<AlgebraElement> full =
                one_plus(ctx, subspace_elements(ctx, gamma_subspace(ctx)));
            const bool ok =
                std::vector<AlgebraElement>(products.begin(), products.end()) == full;
            resolve(r, ok,
                    "W * C(a) covers all " + std::to_string(full.size()) +
                        " elements of 1 + Gamma(A)",
                    std::to_string(products.size()) + " products");
            out.push_back(r);
        }
    }
    return out;
}

std::vector<CheckRecord> verify_global_split(const AlgebraContext& ctx, Rng& rng,
                                             uint64_t algebra_bound) {
    std::vector<CheckRecord> out;
    const uint64_t q = ctx.field().order();
    constexpr int kSamples = 256;

    {
        CheckRecord r = base_record(ctx, "split.random_units", "unit group section");
        int good = 0;
        for (int s = 0; s < kSamples; ++s) {
            AlgebraElement u = ctx.zero();
            while (true) {
                for (size_t k = 0; k < ctx.dim(); ++k) u.set_rep(k, rng.below(q));
                if (is_unit(u)) break;
            }
            const QuotientElement t = theta(u);
            if (!t.is_unit()) continue;
            if (theta(psi(t)) != t) continue;
            const AlgebraElement w = u * invert_unit(psi(t));
            if (theta(w).is_one()) ++good;
        }
        resolve(r, good == kSamples,
                std::to_string(kSamples) + "/" + std::to_string(kSamples) +
                    " units split through theta and psi",
                std::to_string(good) + "/" + std::to_string(kSamples));
        out.push_back(r);
    }
    {
        CheckRecord r = base_record(ctx, "split.unit_count", "unit group section");
        if (saturating_pow(q, ctx.dim(), algebra_bound + 1) > algebra_bound) {
            r.status = "skipped";
            r.reason = "|F|^{2p} exceeds algebra enumeration bound";
            out.push_back(r);
        } else {
            uint64_t total = 1;
            for (size_t k = 0; k < ctx.dim(); ++k) total *= q;
            uint64_t units = 0;
            for (uint64_t idx = 0; idx < total; ++idx) {
                if (is_unit(ctx.from_index(idx))) ++units;
            }
            const uint64_t expected =
                (q - 1) * (q - 1) * saturating_pow(ctx.p(), 4 * ctx.n() * ctx.l(), UINT64_MAX);
            resolve(r, units == expected,
                    "(q-1)^2 * p^{4nl} = " + std::to_string(expected) + " units",
                    std::to_string(units));
            out.push_back(r);
        }
    }
    return out;
}

} // namespace fd2p
