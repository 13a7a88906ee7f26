#include "fd2p/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>

#include "fd2p/constructions.hpp"
#include "fd2p/structure.hpp"

namespace fd2p {
namespace {

using Clock = std::chrono::steady_clock;

std::string big_pow_str(uint64_t base, uint64_t exp) {
    // Decimal string of base^exp, digits stored little-endian.
    std::vector<uint32_t> digits{1};
    for (uint64_t e = 0; e < exp; ++e) {
        uint64_t carry = 0;
        for (auto& d : digits) {
            uint64_t v = d * base + carry;
            d = static_cast<uint32_t>(v % 10);
            carry = v / 10;
        }
        while (carry) {
            digits.push_back(static_cast<uint32_t>(carry % 10));
            carry /= 10;
        }
    }
    std::string s;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        s += static_cast<char>('0' + *it);
    return s;
}

class Runner {
public:
    Runner(const AlgebraContext& ctx, CheckReport& report) : ctx_(ctx), report_(report) {}

    void run(const std::string& id, const std::string& paper_ref,
             const std::function<void(CheckRecord&)>& body) {
        CheckRecord rec;
        rec.check_id = id;
        rec.paper_ref = paper_ref;
        rec.p = ctx_.p();
        rec.n = ctx_.n();
        rec.poly = poly_to_string(ctx_.field().modulus());
        auto t0 = Clock::now();
        try {
            body(rec);
        } catch (const std::exception& e) {
            rec.status = "fail";
            rec.reason = e.what();
        }
        rec.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        if (rec.status.empty()) {
            rec.status = "fail";
            rec.reason = "check produced no verdict";
        }
        report_.checks.push_back(std::move(rec));
    }

private:
    const AlgebraContext& ctx_;
    CheckReport& report_;
};

void verdict(CheckRecord& rec, bool ok, const std::string& expected, const std::string& actual) {
    rec.status = ok ? "pass" : "fail";
    rec.expected = expected;
    rec.actual = actual;
}

void skip(CheckRecord& rec, const std::string& reason) {
    rec.status = "skipped";
    rec.reason = reason;
}

FieldElement random_field_element(const Field& f, Rng& rng) {
    return f.element(rng.below(f.order()));
}

AlgebraElement random_element(const AlgebraContext& ctx, Rng& rng) {
    AlgebraElement x = ctx.zero();
    for (size_t idx = 0; idx < ctx.dim(); ++idx)
        x.set_rep(idx, rng.below(ctx.field().order()));
    return x;
}

AlgebraElement random_gamma_element(const AlgebraContext& ctx,
                                    const std::vector<LabeledElement>& basis, Rng& rng) {
    AlgebraElement x = ctx.zero();
    for (const auto& g : basis)
        x = x + random_field_element(ctx.field(), rng) * g.elem;
    return x;
}

} // namespace

CheckReport run_suite(const SuiteConfig& cfg) {
    auto ctx = cfg.poly ? std::make_shared<AlgebraContext>(cfg.p, cfg.n, *cfg.poly)
                        : std::make_shared<AlgebraContext>(cfg.p, cfg.n);
    const Field& F = ctx->field();
    const uint64_t p = ctx->p();
    const uint64_t q = F.order();
    const uint64_t l = ctx->l();
    const uint64_t n = ctx->n();

    CheckReport report;
    report.seed = cfg.seed;
    report.group_bound = cfg.group_bound;
    report.algebra_bound = cfg.algebra_bound;

    Rng rng(cfg.seed);
    Runner runner(*ctx, report);
    const BasisCatalog cat = build_catalog(*ctx);

    // ---------------- field layer ----------------

    runner.run("field.fermat", "artifact", [&](CheckRecord& rec) {
        bool ok = true;
        uint64_t tested = 0;
        if (q <= 10'000) {
            for (uint64_t i = 1; i < q && ok; ++i) {
                ok = F.element(i).pow(q - 1) == F.one();
                ++tested;
            }
        } else {
            for (int t = 0; t < 256 && ok; ++t) {
                FieldElement x = F.element(1 + rng.below(q - 1));
                ok = x.pow(q - 1) == F.one();
                ++tested;
            }
        }
        verdict(rec, ok, "x^(q-1) = 1 for all tested nonzero x",
                std::to_string(tested) + " elements verified");
    });

    runner.run("field.ring_axioms", "artifact", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 256 && ok; ++t) {
            FieldElement x = random_field_element(F, rng);
            FieldElement y = random_field_element(F, rng);
            FieldElement z = random_field_element(F, rng);
            ok = x * y == y * x && x + y == y + x && (x * y) * z == x * (y * z) &&
                 (x + y) + z == x + (y + z) && x * (y + z) == x * y + x * z;
            if (ok && !x.is_zero()) ok = x * x.inverse() == F.one();
        }
        verdict(rec, ok, "field axioms on 256 seeded triples", ok ? "all hold" : "violation found");
    });

    runner.run("field.irreducible_stable", "artifact", [&](CheckRecord& rec) {
        auto f1 = find_irreducible(p, n);
        auto f2 = find_irreducible(p, n);
        bool ok = f1 == f2 && is_irreducible(f1, p);
        verdict(rec, ok, "find_irreducible deterministic and irreducible",
                poly_to_string(f1));
    });

    // ---------------- linear algebra layer ----------------

    runner.run("linalg.rank_transpose", "artifact", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 16 && ok; ++t) {
            size_t rows = 1 + rng.below(6);
            size_t cols = 1 + rng.below(8);
            Matrix m(&F, rows, cols);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j)
                    m.set_rep(i, j, rng.below(q));
            ok = rank(m) == rank(m.transposed());
        }
        verdict(rec, ok, "rank(m) = rank(m^T) on 16 seeded matrices",
                ok ? "all match" : "mismatch found");
    });

    runner.run("linalg.kernel_solve", "artifact", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 16 && ok; ++t) {
            size_t rows = 1 + rng.below(6);
            size_t cols = 1 + rng.below(8);
            Matrix m(&F, rows, cols);
            for (size_t i = 0; i < rows; ++i)
                for (size_t j = 0; j < cols; ++j)
                    m.set_rep(i, j, rng.below(q));
            Subspace ker = kernel(m);
            ok = ker.dim() + rank(m) == cols;
            for (size_t r = 0; r < ker.dim() && ok; ++r) {
                auto img = m.apply(ker.basis().row(r));
                for (const auto& c : img) ok = ok && c.is_zero();
            }
            if (ok) {
                std::vector<FieldElement> w;
                for (size_t j = 0; j < cols; ++j) w.push_back(random_field_element(F, rng));
                auto rhs = m.apply(w);
                auto sol = solve(m, rhs);
                ok = sol.has_value() && m.apply(*sol) == rhs;
            }
        }
        verdict(rec, ok, "kernel vectors map to zero; solve reproduces rhs",
                ok ? "all hold" : "violation found");
    });

    // ---------------- algebra layer ----------------

    runner.run("algebra.involution", "unit group section", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 256 && ok; ++t) {
            AlgebraElement x = random_element(*ctx, rng);
            AlgebraElement y = random_element(*ctx, rng);
            ok = involution(involution(x)) == x &&
                 involution(x * y) == involution(y) * involution(x) &&
                 involution(x + y) == involution(x) + involution(y);
        }
        verdict(rec, ok, "* is an anti-automorphism of order 2 on 256 seeded pairs",
                ok ? "all hold" : "violation found");
    });

    runner.run("algebra.theta_hom", "unit group section", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 256 && ok; ++t) {
            AlgebraElement x = random_element(*ctx, rng);
            AlgebraElement y = random_element(*ctx, rng);
            ok = theta(x * y) == theta(x) * theta(y) && theta(x + y) == theta(x) + theta(y);
        }
        verdict(rec, ok, "theta is a ring homomorphism on 256 seeded pairs",
                ok ? "all hold" : "violation found");
    });

    runner.run("algebra.theta_psi_section", "unit group section", [&](CheckRecord& rec) {
        bool ok = true;
        uint64_t tested = 0;
        if (q * q <= 10'000) {
            for (uint64_t r0 = 0; r0 < q && ok; ++r0)
                for (uint64_t r1 = 0; r1 < q && ok; ++r1) {
                    QuotientElement e(ctx.get(), F.element(r0), F.element(r1));
                    ok = theta(psi(e)) == e;
                    ++tested;
                }
        } else {
            for (int t = 0; t < 256 && ok; ++t) {
                QuotientElement e(ctx.get(), F.element(rng.below(q)), F.element(rng.below(q)));
                ok = theta(psi(e)) == e;
                ++tested;
            }
        }
        verdict(rec, ok, "theta(psi(x)) = x", std::to_string(tested) + " elements verified");
    });

    runner.run("algebra.gamma_kernel", "unit group section", [&](CheckRecord& rec) {
        bool ok = gamma_subspace(*ctx).dim() == 4 * l;
        for (int t = 0; t < 128 && ok; ++t) {
            AlgebraElement x = random_element(*ctx, rng);
            ok = in_gamma_A(x) == (theta(x).c0().is_zero() && theta(x).c1().is_zero());
            AlgebraElement g = random_gamma_element(*ctx, cat.gamma, rng);
            ok = ok && in_gamma_A(g) && theta(g).c0().is_zero() && theta(g).c1().is_zero();
        }
        verdict(rec, ok, "Gamma(A) = ker theta, dimension " + std::to_string(4 * l),
                ok ? "confirmed" : "violation found");
    });

    runner.run("algebra.gamma_nilpotent", "unit group section", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 64 && ok; ++t) {
            AlgebraElement prod = ctx->one();
            for (uint64_t k = 0; k < p; ++k)
                prod = prod * random_gamma_element(*ctx, cat.gamma, rng);
            ok = prod.is_zero();
        }
        verdict(rec, ok, "any product of p elements of Gamma(A) is 0",
                ok ? "64 seeded products vanish" : "nonzero product found");
    });

    runner.run("algebra.exponent_p", "unit group section", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 256 && ok; ++t) {
            AlgebraElement v = ctx->one() + random_gamma_element(*ctx, cat.gamma, rng);
            ok = v.pow(p) == ctx->one();
        }
        verdict(rec, ok, "v^p = 1 for v in 1+Gamma(A)",
                ok ? "256 seeded elements verified" : "counterexample found");
    });

    runner.run("algebra.invert_unit", "artifact", [&](CheckRecord& rec) {
        bool ok = true;
        int inverted = 0;
        for (int t = 0; t < 128 && ok; ++t) {
            AlgebraElement x = random_element(*ctx, rng);
            if (!is_unit(x)) continue;
            AlgebraElement inv = invert_unit(x);
            ok = inv * x == ctx->one() && x * inv == ctx->one();
            ++inverted;
        }
        bool threw = false;
        try {
            invert_unit(ctx->one() + ctx->b());
        } catch (const NotAUnitError&) {
            threw = true;
        }
        ok = ok && threw;
        verdict(rec, ok, "two-sided inverses for units; NotAUnitError for 1+b",
                std::to_string(inverted) + " units inverted");
    });

    // ---------------- construction layer ----------------

    runner.run("lemma6.omega_products", "Lemma 6", [&](CheckRecord& rec) {
        bool ok = true;
        for (uint64_t i = 1; i <= l && ok; ++i)
            for (uint64_t j = 1; j <= l && ok; ++j)
                ok = (omega(*ctx, i) * omega(*ctx, j)).is_zero() &&
                     (omega_prime(*ctx, i) * omega_prime(*ctx, j)).is_zero();
        verdict(rec, ok, "omega_i*omega_j = 0 and omega_i'*omega_j' = 0 for all pairs",
                ok ? "all " + std::to_string(2 * l * l) + " products vanish" : "nonzero product");
    });

    runner.run("lemma6.omega_closed_forms", "Lemma 6", [&](CheckRecord& rec) {
        bool ok = true;
        FieldElement two = F.from_int(2);
        for (uint64_t i = 1; i <= l && ok; ++i) {
            AlgebraElement core =
                ctx->a(2 * static_cast<int64_t>(i)) + ctx->a(-2 * static_cast<int64_t>(i)) -
                ctx->scalar(two);
            AlgebraElement minus = two * (core * (ctx->one() - ctx->b()));
            AlgebraElement plus = two * (core * (ctx->one() + ctx->b()));
            ok = omega(*ctx, i) * omega_prime(*ctx, i) == minus &&
                 omega_prime(*ctx, i) * omega(*ctx, i) == plus;
        }
        verdict(rec, ok, "omega_i*omega_i' = 2(a^2i+a^-2i-2)(1-b) and primed mirror",
                ok ? "all indices verified" : "mismatch");
    });

    runner.run("lemma6.gamma_rank", "Lemma 6", [&](CheckRecord& rec) {
        std::vector<std::vector<FieldElement>> rows;
        for (const auto& g : cat.gamma) rows.push_back(to_field_vector(g.elem));
        uint64_t r = rank(Matrix::from_rows(&F, rows));
        verdict(rec, r == 4 * l, "free basis of Gamma(A) has rank " + std::to_string(4 * l),
                "rank " + std::to_string(r));
    });

    runner.run("lemma6.change_of_basis", "Lemma 6", [&](CheckRecord& rec) {
        bool ok = true;
        for (uint64_t t = 1; t < p && ok; ++t) {
            ChangeOfBasis cb = change_of_basis(*ctx, t);
            ok = combine_gamma_basis(*ctx, cb.plain) ==
                     ctx->a(static_cast<int64_t>(t)) - ctx->one() &&
                 combine_gamma_basis(*ctx, cb.bpart) ==
                     (ctx->a(static_cast<int64_t>(t)) - ctx->one()) * ctx->b();
        }
        verdict(rec, ok, "a^t-1 and (a^t-1)b expand over the omega basis for t = 1..p-1",
                ok ? "all exponents verified" : "expansion mismatch");
    });

    runner.run("theorem7.omega_identities", "Theorem 7", [&](CheckRecord& rec) {
        bool ok = true;
        auto ww = [&](int64_t m) { return omega_ext(*ctx, m) * omega_prime_ext(*ctx, m); };
        auto wpw = [&](int64_t m) { return omega_prime_ext(*ctx, m) * omega_ext(*ctx, m); };
        for (uint64_t i = 1; i <= l && ok; ++i) {
            AlgebraElement lhs1 = omega(*ctx, 1) * omega_prime(*ctx, i);
            AlgebraElement lhs2 = omega_prime(*ctx, i) * omega(*ctx, 1);
            if (i % 2 == 1) {
                int64_t k = static_cast<int64_t>((i - 1) / 2);
                ok = lhs1 == ww(k + 1) - ww(k) && lhs2 == wpw(k + 1) - wpw(k);
            } else {
                int64_t k = static_cast<int64_t>(i / 2);
                int64_t L = static_cast<int64_t>(l);
                ok = lhs1 == ww(L - k) - ww(L - k + 1) && lhs2 == wpw(L - k) - wpw(L - k + 1);
            }
        }
        verdict(rec, ok, "omega_1*omega_i' and omega_i'*omega_1 reduce to diagonal pairs",
                ok ? "all indices verified" : "identity fails");
    });

    runner.run("theorem7.triple_products", "Theorem 7", [&](CheckRecord& rec) {
        bool ok = true;
        FieldElement four = F.from_int(4);
        FieldElement eight = F.from_int(8);
        auto w = [&](int64_t m) { return omega_ext(*ctx, m); };
        int64_t L = static_cast<int64_t>(l);
        for (int64_t j = 1; j <= L && ok; ++j) {
            AlgebraElement lhs = omega(*ctx, 1) * omega_prime(*ctx, j) * omega(*ctx, j);
            AlgebraElement rhs = ctx->zero();
            if (j == L) {
                rhs = four * w(2) - eight * w(1);
            } else if (L % 2 == 1 && j == (L + 1) / 2) {
                rhs = ctx->zero() - four * w(L - 1) - four * w(L) - eight * w(1);
            } else if (L % 2 == 0 && j == L / 2) {
                rhs = ctx->zero() - four * w(L) - four * w(L - 1) - eight * w(1);
            } else if (2 * j < L) {
                rhs = four * w(2 * j + 1) - four * w(2 * j - 1) - eight * w(1);
            } else {
                rhs = four * w(2 * L - 2 * j + 2) - four * w(2 * L - 2 * j) - eight * w(1);
            }
            ok = lhs == rhs;
        }
        verdict(rec, ok, "omega_1*omega_j'*omega_j lands in the span of the omega_i",
                ok ? "all indices verified" : "identity fails");
    });

    runner.run("lemma10.expansion", "Lemma 10", [&](CheckRecord& rec) {
        bool ok = true;
        auto pascal = pascal_mod_p(2 * l, p);
        FieldElement half = F.from_int(2).inverse();
        AlgebraElement core = ctx->a(1) - ctx->a(-1);
        for (uint64_t k = 1; k <= l && ok; ++k) {
            AlgebraElement lhs = core.pow(2 * k) * (ctx->one() - ctx->b());
            AlgebraElement rhs = ctx->zero();
            for (uint64_t j = 0; j < k; ++j) {
                FieldElement c = half * F.from_int(pascal[2 * k][j]);
                if (j % 2 == 1) c = -c;
                rhs = rhs + c * (omega(*ctx, k - j) * omega_prime(*ctx, k - j));
            }
            ok = lhs == rhs;
        }
        verdict(rec, ok, "(a-a^-1)^2k(1-b) expands with alternating binomial weights",
                ok ? "k = 1.." + std::to_string(l) + " verified" : "expansion mismatch");
    });

    runner.run("lemma3.unitary_basis", "Lemma 3", [&](CheckRecord& rec) {
        bool ok = cat.unitary.size() == n * l;
        for (const auto& z : cat.unitary)
            ok = ok && is_unitary(z.elem) && in_gamma_A(z.elem - ctx->one());
        verdict(rec, ok,
                std::to_string(n * l) + " elements z_ik, all unitary, all in 1+Gamma(A)",
                ok ? std::to_string(cat.unitary.size()) + " elements verified" : "violation");
    });

    runner.run("lemma3.log_rank", "Lemma 3", [&](CheckRecord& rec) {
        std::vector<AlgebraElement> fam;
        for (const auto& z : cat.unitary) fam.push_back(z.elem);
        uint64_t r = log_rank_prime(fam);
        verdict(rec, r == n * l,
                "logs of the z_ik span an F_p-space of dimension " + std::to_string(n * l),
                "rank " + std::to_string(r));
    });

    runner.run("lemma5.symmetric_basis", "Lemma 5", [&](CheckRecord& rec) {
        bool ok = cat.symmetric.size() == n * l;
        for (const auto& s : cat.symmetric)
            ok = ok && is_symmetric(s.elem) && in_gamma_A(s.elem - ctx->one()) &&
                 in_fa(s.elem);
        verdict(rec, ok,
                std::to_string(n * l) + " elements s_ik, all symmetric units in 1+Gamma(A)",
                ok ? std::to_string(cat.symmetric.size()) + " elements verified" : "violation");
    });

    runner.run("lemma5.log_rank", "Lemma 5", [&](CheckRecord& rec) {
        std::vector<AlgebraElement> fam;
        for (const auto& s : cat.symmetric) fam.push_back(s.elem);
        uint64_t r = log_rank_prime(fam);
        verdict(rec, r == n * l,
                "logs of the s_ik span an F_p-space of dimension " + std::to_string(n * l),
                "rank " + std::to_string(r));
    });

    runner.run("lemma10.d_block", "Lemma 10", [&](CheckRecord& rec) {
        LduSubspaces ldu = ldu_subspaces(*ctx);
        bool ok = cat.d_block.size() == 2 * n * l;
        for (const auto& d : cat.d_block)
            ok = ok && in_gamma_A(d.elem - ctx->one()) &&
                 ldu.D.contains(to_field_vector(d.elem - ctx->one()));
        verdict(rec, ok, std::to_string(2 * n * l) + " diagonal generators inside 1+D",
                ok ? std::to_string(cat.d_block.size()) + " elements verified" : "violation");
    });

    runner.run("constructions.log_exp", "artifact", [&](CheckRecord& rec) {
        bool ok = truncated_log(ctx->one()).is_zero() &&
                  truncated_exp(ctx->zero()) == ctx->one();
        for (int t = 0; t < 128 && ok; ++t) {
            AlgebraElement g = random_gamma_element(*ctx, cat.gamma, rng);
            AlgebraElement v = ctx->one() + g;
            ok = truncated_exp(truncated_log(v)) == v &&
                 truncated_log(truncated_exp(g)) == g;
        }
        bool threw = false;
        try {
            truncated_log(ctx->b());
        } catch (const std::domain_error&) {
            threw = true;
        }
        ok = ok && threw;
        verdict(rec, ok, "log/exp are mutually inverse on 1+Gamma(A); log(1+x) rejects x^p != 0",
                ok ? "128 seeded roundtrips verified" : "violation");
    });

    runner.run("theorem8.idempotents", "Theorem 8", [&](CheckRecord& rec) {
        IdempotentPair e = idempotents(*ctx);
        bool ok = e.e1 * e.e1 == e.e1 && e.e2 * e.e2 == e.e2 &&
                  (e.e1 * e.e2).is_zero() && (e.e2 * e.e1).is_zero() &&
                  e.e1 + e.e2 == ctx->one();
        verdict(rec, ok, "e1, e2 are orthogonal idempotents summing to 1",
                ok ? "confirmed" : "violation");
    });

    runner.run("theorem9.ldu_dims", "Theorem 9", [&](CheckRecord& rec) {
        LduSubspaces ldu = ldu_subspaces(*ctx);
        Subspace g = gamma_subspace(*ctx);
        bool ok = ldu.L.dim() == l && ldu.U.dim() == l && ldu.D.dim() == 2 * l;
        ok = ok && intersect(ldu.L, ldu.U).dim() == 0 &&
             intersect(ldu.L, ldu.D).dim() == 0 && intersect(ldu.U, ldu.D).dim() == 0;
        ok = ok && sum(sum(ldu.L, ldu.D), ldu.U) == g;
        verdict(rec, ok, "Gamma(A) = L + D + U with dims l, 2l, l",
                ok ? "direct sum confirmed" : "violation");
    });

    runner.run("theorem9.ldu_blocks", "Theorem 9", [&](CheckRecord& rec) {
        IdempotentPair e = idempotents(*ctx);
        LduSubspaces ldu = ldu_subspaces(*ctx);
        bool ok = true;
        auto block_ok = [&](const Subspace& s, auto pred) {
            for (size_t r = 0; r < s.dim(); ++r) {
                AlgebraElement m = from_field_vector(ctx.get(), s.basis().row(r));
                if (!pred(m)) return false;
            }
            return true;
        };
        ok = block_ok(ldu.L, [&](const AlgebraElement& m) {
            return e.e1 * m * e.e2 == m && (e.e2 * m).is_zero() && (m * e.e1).is_zero();
        });
        ok = ok && block_ok(ldu.U, [&](const AlgebraElement& m) {
            return e.e2 * m * e.e1 == m && (e.e1 * m).is_zero() && (m * e.e2).is_zero();
        });
        ok = ok && block_ok(ldu.D, [&](const AlgebraElement& m) {
            return e.e1 * m * e.e1 + e.e2 * m * e.e2 == m;
        });
        verdict(rec, ok, "L = e1*Gamma*e2, U = e2*Gamma*e1, D diagonal",
                ok ? "Peirce blocks confirmed" : "violation");
    });

    // ---------------- structure layer ----------------

    runner.run("lemma2.rank_certificate", "Lemma 2", [&](CheckRecord& rec) {
        std::vector<AlgebraElement> fam;
        for (const auto& z : cat.unitary) fam.push_back(z.elem);
        uint64_t r = log_rank_prime(fam);
        bool ok = r == n * l;
        for (const auto& z : cat.unitary) ok = ok && in_fa(z.elem);
        verdict(rec, ok,
                "z_ik lie in FA and generate an elementary abelian group of order p^" +
                    std::to_string(n * l),
                ok ? "log rank " + std::to_string(r) + ", all generators in FA" : "violation");
    });

    runner.run("lemma2.exhaustive", "Lemma 2", [&](CheckRecord& rec) {
        if (saturating_pow(q, 4 * l, cfg.group_bound + 1) > cfg.group_bound) {
            skip(rec, "|1+Gamma(A)| = " + big_pow_str(p, 4 * n * l) +
                          " exceeds group enumeration bound");
            return;
        }
        SubgroupHandle h = enumerate_unitary_in_one_plus_gamma(*ctx, cfg.group_bound);
        bool ok = h.enumeration_complete && h.order() == saturating_pow(p, n * l, UINT64_MAX);
        for (const auto& v : h.elements) ok = ok && in_fa(v);
        verdict(rec, ok,
                "unitary units of 1+Gamma(A) all lie in FA, count p^" + std::to_string(n * l),
                "count " + std::to_string(h.order()));
    });

    runner.run("theorem1.roundtrip", "Theorem 1", [&](CheckRecord& rec) {
        bool ok = true;
        for (int t = 0; t < 64 && ok; ++t) {
            AlgebraElement v = ctx->one();
            for (const auto& z : cat.unitary) v = v * z.elem.pow(rng.below(p));
            int eps = static_cast<int>(rng.below(2));
            int delta = static_cast<int>(rng.below(2));
            AlgebraElement u = v;
            if (eps) u = u * ctx->b();
            if (delta) u = ctx->zero() - u;
            ok = is_unitary(u);
            if (!ok) break;
            UnitaryDecomposition d = unitary_decompose(u);
            ok = d.v == v && d.eps == eps && d.delta == delta;
        }
        verdict(rec, ok, "u = v*b^eps*(-1)^delta recovered uniquely from u",
                ok ? "64 seeded roundtrips verified" : "violation");
    });

    runner.run("theorem1.exhaustive", "Theorem 1", [&](CheckRecord& rec) {
        uint64_t order = saturating_pow(p, n * l, cfg.group_bound);
        if (order >= cfg.group_bound || 4 * order > cfg.group_bound) {
            skip(rec, "|U_*| = 4*" + big_pow_str(p, n * l) + " exceeds group enumeration bound");
            return;
        }
        std::vector<AlgebraElement> gens;
        for (const auto& z : cat.unitary) gens.push_back(z.elem);
        gens.push_back(ctx->b());
        gens.push_back(ctx->zero() - ctx->one());
        SubgroupHandle h = closure("U_*", gens, cfg.group_bound, 4 * order);
        bool ok = h.enumeration_complete && h.order() == 4 * order;
        std::set<std::string> seen;
        for (const auto& u : h.elements) {
            if (!ok) break;
            ok = is_unitary(u);
            if (!ok) break;
            UnitaryDecomposition d = unitary_decompose(u);
            AlgebraElement back = d.v;
            if (d.eps) back = back * ctx->b();
            if (d.delta) back = ctx->zero() - back;
            ok = back == u && in_fa(d.v) && is_unitary(d.v);
            seen.insert(d.v.serialize() + "|" + std::to_string(d.eps) + std::to_string(d.delta));
        }
        ok = ok && seen.size() == h.order();
        verdict(rec, ok, "U_* has order 4p^" + std::to_string(n * l) +
                             " and splits as V_* x <b> x <-1>",
                "order " + std::to_string(h.order()) + ", " + std::to_string(seen.size()) +
                    " distinct triples");
    });

    runner.run("lemma4.quotient_units", "Lemma 4", [&](CheckRecord& rec) {
        if (q * q > cfg.group_bound) {
            skip(rec, "quotient has " + std::to_string(q) + "^2 elements, over group bound");
            return;
        }
        std::vector<QuotientElement> units = quotient_unitary_units(*ctx, cfg.group_bound);
        QuotientElement one(ctx.get(), F.one(), F.zero());
        QuotientElement mone(ctx.get(), -F.one(), F.zero());
        QuotientElement x(ctx.get(), F.zero(), F.one());
        QuotientElement mx(ctx.get(), F.zero(), -F.one());
        bool ok = units.size() == 4;
        auto found = [&](const QuotientElement& e) {
            return std::find(units.begin(), units.end(), e) != units.end();
        };
        ok = ok && found(one) && found(mone) && found(x) && found(mx);
        verdict(rec, ok, "unitary units of FC_2 are exactly {1, -1, x, -x}",
                std::to_string(units.size()) + " unitary units found");
    });

    runner.run("theorem7.center", "Theorem 7", [&](CheckRecord& rec) {
        SubgroupHandle z = center_of_one_plus_gamma(*ctx, cfg.group_bound);
        uint64_t predicted = saturating_pow(p, n * (l + 1), UINT64_MAX);
        bool ok = z.predicted_order == predicted;
        if (z.enumeration_complete) ok = ok && z.order() == predicted;
        verdict(rec, ok,
                "Z(1+Gamma(A)) has order p^" + std::to_string(n * (l + 1)) +
                    " with basis {s_ik} u {1+alpha^i*Ahat*b}",
                z.enumeration_complete ? "enumerated order " + std::to_string(z.order())
                                       : "certified by log rank");
    });

    runner.run("theorem7.center_exhaustive", "Theorem 7", [&](CheckRecord& rec) {
        if (saturating_pow(q, 4 * l, 1'001) > 1'000) {
            skip(rec, "pairwise commutation scan requires |1+Gamma(A)| <= 1000");
            return;
        }
        Subspace g = gamma_subspace(*ctx);
        std::vector<AlgebraElement> all;
        {
            std::vector<AlgebraElement> basis;
            for (size_t r = 0; r < g.dim(); ++r)
                basis.push_back(from_field_vector(ctx.get(), g.basis().row(r)));
            all = enumerate_f_span(*ctx, basis);
            for (auto& v : all) v = ctx->one() + v;
        }
        std::set<AlgebraElement> brute;
        for (const auto& v : all) {
            bool central = true;
            for (const auto& w : all)
                if (v * w != w * v) {
                    central = false;
                    break;
                }
            if (central) brute.insert(v);
        }
        SubgroupHandle z = center_of_one_plus_gamma(*ctx, cfg.group_bound);
        bool ok = z.enumeration_complete &&
                  brute == std::set<AlgebraElement>(z.elements.begin(), z.elements.end());

        // Z = S_*(FA) x (1 + F*Ahat*b), verified as a set product.
        std::vector<AlgebraElement> sgens;
        for (const auto& s : cat.symmetric) sgens.push_back(s.elem);
        SubgroupHandle sstar = closure("S_*(FA)", sgens, cfg.group_bound,
                                       saturating_pow(p, n * l, UINT64_MAX));
        AlgebraElement ahat_b = ctx->a_hat() * ctx->b();
        std::set<AlgebraElement> product;
        for (const auto& s : sstar.elements)
            for (uint64_t c = 0; c < q; ++c)
                product.insert(s * (ctx->one() + F.element(c) * ahat_b));
        ok = ok && product == brute;
        verdict(rec, ok, "brute-force center equals catalog center and S_*(FA) x (1+F*Ahat*b)",
                std::to_string(brute.size()) + " central elements");
    });

    runner.run("theorem9.centralizer", "Theorem 9", [&](CheckRecord& rec) {
        SubgroupHandle c = centralizer_of_a(*ctx, cfg.group_bound);
        uint64_t predicted = saturating_pow(p, n * p, UINT64_MAX);
        bool ok = c.predicted_order == predicted;
        if (c.enumeration_complete) ok = ok && c.order() == predicted;
        verdict(rec, ok,
                "C(a) in 1+Gamma(A) is abelian of order p^" + std::to_string(n * p) +
                    ", equal to V_* x Z",
                c.enumeration_complete ? "enumerated order " + std::to_string(c.order())
                                       : "certified by log rank");
    });

    runner.run("theorem8.factorize_random", "Theorem 8", [&](CheckRecord& rec) {
        LduSubspaces ldu = ldu_subspaces(*ctx);
        bool ok = true;
        for (int t = 0; t < 1000 && ok; ++t) {
            AlgebraElement v = ctx->one() + random_gamma_element(*ctx, cat.gamma, rng);
            FactorizationTriple f = pavesic_factorize(v);
            ok = ldu.L.contains(to_field_vector(f.l_part - ctx->one())) &&
                 ldu.D.contains(to_field_vector(f.d_part - ctx->one())) &&
                 ldu.U.contains(to_field_vector(f.u_part - ctx->one())) &&
                 f.l_part * f.d_part * f.u_part == v;
        }
        verdict(rec, ok, "v = (1+l)(1+d)(1+u) with factors in 1+L, 1+D, 1+U",
                ok ? "1000 seeded factorizations verified" : "violation");
    });

    runner.run("theorem8.factorize_exhaustive", "Theorem 8", [&](CheckRecord& rec) {
        if (saturating_pow(q, 4 * l, 10'001) > 10'000) {
            skip(rec, "exhaustive factorization scan requires |1+Gamma(A)| <= 10^4");
            return;
        }
        Subspace g = gamma_subspace(*ctx);
        std::vector<AlgebraElement> basis;
        for (size_t r = 0; r < g.dim(); ++r)
            basis.push_back(from_field_vector(ctx.get(), g.basis().row(r)));
        std::set<std::string> triples;
        bool ok = true;
        uint64_t count = 0;
        for (const auto& x : enumerate_f_span(*ctx, basis)) {
            AlgebraElement v = ctx->one() + x;
            FactorizationTriple f = pavesic_factorize(v);
            ok = f.l_part * f.d_part * f.u_part == v;
            if (!ok) break;
            triples.insert(f.l_part.serialize() + "|" + f.d_part.serialize() + "|" +
                           f.u_part.serialize());
            ++count;
        }
        ok = ok && triples.size() == count;
        verdict(rec, ok, "factorization exists and is unique on all of 1+Gamma(A)",
                std::to_string(count) + " elements, " + std::to_string(triples.size()) +
                    " distinct triples");
    });

    runner.run("theorem9.normalizer", "Theorem 9", [&](CheckRecord& rec) {
        LduSubspaces ldu = ldu_subspaces(*ctx);
        bool ok = true;
        for (const auto& d : cat.d_block) {
            AlgebraElement dinv = invert_unit(d.elem);
            for (size_t r = 0; r < ldu.L.dim() && ok; ++r) {
                AlgebraElement lel =
                    ctx->one() + from_field_vector(ctx.get(), ldu.L.basis().row(r));
                AlgebraElement conj = d.elem * lel * dinv;
                ok = ldu.L.contains(to_field_vector(conj - ctx->one()));
            }
            if (!ok) break;
        }
        verdict(rec, ok, "1+D normalizes 1+L",
                ok ? "all generator conjugates stay in 1+L" : "violation");
    });

    for (auto& rec : general_product_check(*ctx, cfg.group_bound))
        report.checks.push_back(std::move(rec));
    for (auto& rec : verify_global_split(*ctx, rng, cfg.algebra_bound))
        report.checks.push_back(std::move(rec));

    runner.run("structure.subgroup_orders", "artifact", [&](CheckRecord& rec) {
        SubgroupHandle ha = closure("<a>", {ctx->a(1)}, cfg.group_bound, p);
        SubgroupHandle hb =
            closure("<b,-1>", {ctx->b(), ctx->zero() - ctx->one()}, cfg.group_bound, 4);
        bool ok = ha.enumeration_complete && ha.order() == p &&
                  hb.enumeration_complete && hb.order() == 4;
        verdict(rec, ok, "closure matches predicted orders for <a> and <b,-1>",
                ok ? "orders " + std::to_string(ha.order()) + ", " + std::to_string(hb.order())
                   : "mismatch");
    });

    runner.run("algebra_center.basis", "intro", [&](CheckRecord& rec) {
        // Z(FD) against commutation with both group generators.
        std::vector<std::vector<FieldElement>> rows;
        AlgebraElement gen_a = ctx->a(1);
        AlgebraElement gen_b = ctx->b();
        for (size_t idx = 0; idx < ctx->dim(); ++idx) {
            AlgebraElement e = ctx->zero();
            e.set_rep(idx, 1);
            rows.push_back(to_field_vector(e * gen_a - gen_a * e));
        }
        Matrix ma = Matrix::from_rows(&F, rows).transposed();
        rows.clear();
        for (size_t idx = 0; idx < ctx->dim(); ++idx) {
            AlgebraElement e = ctx->zero();
            e.set_rep(idx, 1);
            rows.push_back(to_field_vector(e * gen_b - gen_b * e));
        }
        Matrix mb = Matrix::from_rows(&F, rows).transposed();
        Subspace center = intersect(kernel(ma), kernel(mb));
        std::vector<std::vector<FieldElement>> basis;
        basis.push_back(to_field_vector(ctx->one()));
        for (uint64_t i = 1; i <= l; ++i) basis.push_back(to_field_vector(ctx->c_hat(i)));
        AlgebraElement bhat = ctx->zero();
        for (uint64_t i = 0; i < p; ++i) {
            AlgebraElement e = ctx->zero();
            e.set_rep(ctx->index_of(i, 1), 1);
            bhat = bhat + e;
        }
        basis.push_back(to_field_vector(bhat));
        Subspace expected = Subspace::span(&F, ctx->dim(), basis);
        bool ok = center.dim() == l + 2 && center == expected;
        verdict(rec, ok, "Z(FD) = span{1, Chat_1..Chat_l, Bhat}, dimension " +
                             std::to_string(l + 2),
                "dimension " + std::to_string(center.dim()));
    });

    return report;
}

} // namespace fd2p
