#include "fd2p/constructions.hpp"

#include <stdexcept>

namespace fd2p {

namespace {

void check_omega_index(const AlgebraContext& ctx, uint64_t i) {
    if (i < 1 || i > ctx.l()) {
        throw std::out_of_range("omega index must satisfy 1 <= i <= l");
    }
}

} // namespace

AlgebraElement omega(const AlgebraContext& ctx, uint64_t i) {
    check_omega_index(ctx, i);
    const auto d = static_cast<int64_t>(i);
    return (ctx.a(d) - ctx.a(-d)) * (ctx.one() + ctx.b());
}

AlgebraElement omega_prime(const AlgebraContext& ctx, uint64_t i) {
    check_omega_index(ctx, i);
    const auto d = static_cast<int64_t>(i);
    return (ctx.a(d) - ctx.a(-d)) * (ctx.one() - ctx.b());
}

AlgebraElement omega_ext(const AlgebraContext& ctx, int64_t i) {
    return (ctx.a(i) - ctx.a(-i)) * (ctx.one() + ctx.b());
}

AlgebraElement omega_prime_ext(const AlgebraContext& ctx, int64_t i) {
    return (ctx.a(i) - ctx.a(-i)) * (ctx.one() - ctx.b());
}

AlgebraElement u_elem(const AlgebraContext& ctx, uint64_t i, uint64_t k) {
    if (i >= ctx.n()) throw std::out_of_range("u_elem: require 0 <= i <= n-1");
    if (k < 1 || k > ctx.p() - 1) {
        throw std::out_of_range("u_elem: require 1 <= k <= p-1");
    }
    const FieldElement ai = ctx.field().alpha().pow(i);
    return ctx.one() + ctx.scalar(ai) * (ctx.a(1) - ctx.one()).pow(k);
}

std::vector<LabeledElement> unitary_basis(const AlgebraContext& ctx) {
    std::vector<LabeledElement> out;
    for (uint64_t k = 1; k <= ctx.p() - 1; k += 2) {
        for (uint64_t i = 0; i < ctx.n(); ++i) {
            const AlgebraElement u = u_elem(ctx, i, k);
            out.push_back({i, k, 0, involution(u) * invert_unit(u)});
        }
    }
    return out;
}

std::vector<LabeledElement> symmetric_basis(const AlgebraContext& ctx) {
    std::vector<LabeledElement> out;
    for (uint64_t k = 2; k <= ctx.p() - 1; k += 2) {
        for (uint64_t i = 0; i < ctx.n(); ++i) {
            const AlgebraElement u = u_elem(ctx, i, k);
            out.push_back({i, k, 0, involution(u) * u});
        }
    }
    return out;
}

std::vector<LabeledElement> center_basis(const AlgebraContext& ctx) {
    std::vector<LabeledElement> out = symmetric_basis(ctx);
    const AlgebraElement ahat_b = ctx.a_hat() * ctx.b();
    for (uint64_t i = 0; i < ctx.n(); ++i) {
        const FieldElement ai = ctx.field().alpha().pow(i);
        out.push_back({i, 0, 0, ctx.one() + ctx.scalar(ai) * ahat_b});
    }
    return out;
}

std::vector<LabeledElement> d_block_basis(const AlgebraContext& ctx) {
    std::vector<LabeledElement> out;
    const AlgebraElement s = ctx.a(1) - ctx.a(-1);
    for (uint64_t k = 1; k <= ctx.l(); ++k) {
        const AlgebraElement sk = s.pow(2 * k);
        for (uint64_t i = 0; i < ctx.n(); ++i) {
            const FieldElement ai = ctx.field().alpha().pow(i);
            const AlgebraElement core = ctx.scalar(ai) * sk;
            out.push_back({i, k, -1, ctx.one() + core * (ctx.one() - ctx.b())});
            out.push_back({i, k, +1, ctx.one() + core * (ctx.one() + ctx.b())});
        }
    }
    return out;
}

std::vector<LabeledElement> gamma_free_basis(const AlgebraContext& ctx) {
    std::vector<LabeledElement> out;
    const uint64_t l = ctx.l();
    for (uint64_t i = 1; i <= l; ++i) out.push_back({i, 0, 0, omega(ctx, i)});
    for (uint64_t i = 1; i <= l; ++i) out.push_back({i, 1, 0, omega_prime(ctx, i)});
    for (uint64_t i = 1; i <= l; ++i) {
        out.push_back({i, 2, 0, omega(ctx, i) * omega_prime(ctx, i)});
    }
    for (uint64_t i = 1; i <= l; ++i) {
        out.push_back({i, 3, 0, omega_prime(ctx, i) * omega(ctx, i)});
    }
    return out;
}

BasisCatalog build_catalog(const AlgebraContext& ctx) {
    std::vector<LabeledElement> om, omp;
    for (uint64_t i = 1; i <= ctx.l(); ++i) {
        om.push_back({i, 0, 0, omega(ctx, i)});
        omp.push_back({i, 0, 0, omega_prime(ctx, i)});
    }
    return {std::move(om),        std::move(omp),       unitary_basis(ctx),
            symmetric_basis(ctx), center_basis(ctx),    d_block_basis(ctx),
            gamma_free_basis(ctx)};
}

IdempotentPair idempotents(const AlgebraContext& ctx) {
    const FieldElement half = ctx.field().from_int(2).inverse();
    return {ctx.scalar(half) * (ctx.one() + ctx.b()),
            ctx.scalar(half) * (ctx.one() - ctx.b())};
}

ChangeOfBasis change_of_basis(const AlgebraContext& ctx, uint64_t t) {
    const uint64_t p = ctx.p();
    const uint64_t l = ctx.l();
    if (t < 1 || t > p - 1) {
        throw std::out_of_range("change_of_basis: require 1 <= t <= p-1");
    }
    const Field& f = ctx.field();
    const FieldElement quarter = f.from_int(4).inverse();
    const FieldElement eighth = f.from_int(8).inverse();

    uint64_t i, idx;
    FieldElement c4 = quarter;
    if (t % 2 == 0) {
        i = t / 2;
        if (t <= l) {
            idx = t;
        } else {
            idx = p - t;
            c4 = -quarter;
        }
    } else {
        i = (p - t) / 2;
        if (p - t <= l) {
            idx = p - t;
            c4 = -quarter;
        } else {
            idx = t;
        }
    }

    ChangeOfBasis cb{std::vector<FieldElement>(4 * l, f.zero()),
                     std::vector<FieldElement>(4 * l, f.zero())};
    cb.plain[idx - 1] = c4;
    cb.plain[l + idx - 1] = c4;
    cb.plain[2 * l + i - 1] = eighth;
    cb.plain[3 * l + i - 1] = eighth;
    cb.bpart[idx - 1] = c4;
    cb.bpart[l + idx - 1] = -c4;
    cb.bpart[2 * l + i - 1] = -eighth;
    cb.bpart[3 * l + i - 1] = eighth;
    return cb;
}

AlgebraElement combine_gamma_basis(const AlgebraContext& ctx,
                                   const std::vector<FieldElement>& coeffs) {
    const std::vector<LabeledElement> basis = gamma_free_basis(ctx);
    if (coeffs.size() != basis.size()) {
        throw std::invalid_argument("combine_gamma_basis: need 4l coefficients");
    }
    AlgebraElement acc = ctx.zero();
    for (size_t k = 0; k < basis.size(); ++k) {
        acc = acc + ctx.scalar(coeffs[k]) * basis[k].elem;
    }
    return acc;
}

Subspace gamma_subspace(const AlgebraContext& ctx) {
    Matrix m(ctx.field_ptr(), 2, ctx.dim());
    const uint64_t one = ctx.field().one().rep();
    for (uint64_t i = 0; i < ctx.p(); ++i) {
        m.set_rep(0, ctx.index_of(i, 0), one);
        m.set_rep(1, ctx.index_of(i, 1), one);
    }
    return kernel(m);
}

LduSubspaces ldu_subspaces(const AlgebraContext& ctx) {
    std::vector<Vec> lv, dv, uv;
    for (uint64_t i = 1; i <= ctx.l(); ++i) {
        const AlgebraElement w = omega(ctx, i);
        const AlgebraElement wp = omega_prime(ctx, i);
        lv.push_back(to_field_vector(wp));
        uv.push_back(to_field_vector(w));
        dv.push_back(to_field_vector(w * wp));
        dv.push_back(to_field_vector(wp * w));
    }
    const Field* f = ctx.field_ptr();
    return {Subspace::span(f, ctx.dim(), lv), Subspace::span(f, ctx.dim(), dv),
            Subspace::span(f, ctx.dim(), uv)};
}

AlgebraElement truncated_log(const AlgebraElement& v) {
    const AlgebraContext& ctx = v.context();
    const Field& f = ctx.field();
    const AlgebraElement x = v - ctx.one();
    AlgebraElement term = x;
    AlgebraElement acc = ctx.zero();
    for (uint64_t k = 1; k <= ctx.p() - 1; ++k) {
        FieldElement c = f.from_int(static_cast<int64_t>(k)).inverse();
        if (k % 2 == 0) c = -c;
        acc = acc + ctx.scalar(c) * term;
        term = term * x;
    }
    if (!term.is_zero()) {
        throw std::domain_error("truncated_log: v - 1 is not nilpotent of index <= p");
    }
    return acc;
}

AlgebraElement truncated_exp(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    const Field& f = ctx.field();
    AlgebraElement acc = ctx.one();
    AlgebraElement term = x;
    FieldElement fact = f.one();
    for (uint64_t k = 1; k <= ctx.p() - 1; ++k) {
        fact = fact * f.from_int(static_cast<int64_t>(k));
        acc = acc + ctx.scalar(fact.inverse()) * term;
        term = term * x;
    }
    if (!term.is_zero()) {
        throw std::domain_error("truncated_exp: x is not nilpotent of index <= p");
    }
    return acc;
}

size_t log_rank_prime(const std::vector<AlgebraElement>& family) {
    if (family.empty()) return 0;
    const AlgebraContext& ctx = family.front().context();
    for (size_t i = 0; i < family.size(); ++i) {
        for (size_t j = i + 1; j < family.size(); ++j) {
            if (family[i] * family[j] != family[j] * family[i]) {
                throw std::domain_error("log_rank_prime: family is not commuting");
            }
        }
    }
    std::vector<Vec> logs;
    logs.reserve(family.size());
    for (const AlgebraElement& v : family) {
        logs.push_back(to_prime_vector(truncated_log(v)));
    }
    return Subspace::span(ctx.prime_field_ptr(), ctx.prime_dim(), logs).dim();
}

std::vector<std::vector<uint64_t>> pascal_mod_p(uint64_t nmax, uint64_t p) {
    std::vector<std::vector<uint64_t>> rows(nmax + 1);
    for (uint64_t r = 0; r <= nmax; ++r) {
        rows[r].assign(r + 1, 1);
        for (uint64_t j = 1; j < r; ++j) {
            rows[r][j] = (rows[r - 1][j - 1] + rows[r - 1][j]) % p;
        }
    }
    return rows;
}

} // namespace fd2p
