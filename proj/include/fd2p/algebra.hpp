#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fd2p/common.hpp"
#include "fd2p/fields.hpp"
#include "fd2p/linalg.hpp"

namespace fd2p {

class AlgebraElement;
class QuotientElement;

/// The group algebra FD_{2p} over F = F_{p^n}, p an odd prime. Group elements
/// a^i b^j are indexed j*p + i; an element is a dense vector of 2p field
/// coefficients in that order. Also owns F_p as the prime field for residue
/// flattening.
class AlgebraContext {
public:
    AlgebraContext(uint64_t p, uint32_t n);
    AlgebraContext(uint64_t p, uint32_t n, const std::vector<uint64_t>& modulus);

    AlgebraContext(const AlgebraContext&) = delete;
    AlgebraContext& operator=(const AlgebraContext&) = delete;

    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_.get(); }
    const Field& prime_field() const { return *prime_; }
    const Field* prime_field_ptr() const { return prime_.get(); }

    uint64_t p() const { return p_; }
    uint32_t n() const { return field_->degree(); }
    uint64_t l() const { return (p_ - 1) / 2; }

    /// Dimension 2p of the algebra over F.
    size_t dim() const { return static_cast<size_t>(2 * p_); }
    /// Dimension 2pn over the prime field.
    size_t prime_dim() const { return dim() * n(); }

    size_t index_of(uint64_t i, uint64_t j) const { return (j % 2) * p_ + (i % p_); }

    AlgebraElement zero() const;
    AlgebraElement one() const;
    AlgebraElement a(int64_t i = 1) const;
    AlgebraElement b() const;
    AlgebraElement group_element(uint64_t i, uint64_t j) const;
    AlgebraElement scalar(const FieldElement& c) const;
    /// Sum of all p rotations a^0 + ... + a^{p-1}.
    AlgebraElement a_hat() const;
    /// Class sum a^i + a^{-i} for 1 <= i <= l (2 at i = 0).
    AlgebraElement c_hat(uint64_t i) const;
    /// Element whose coefficient vector is idx written base |F|, least
    /// significant digit on index 0. Valid for idx < |F|^{2p}; only meaningful
    /// at exhaustive-scan scale.
    AlgebraElement from_index(uint64_t idx) const;

private:
    std::shared_ptr<const Field> field_;
    std::shared_ptr<const Field> prime_;
    uint64_t p_;
};

/// Element of FD_{2p}: 2p coefficients, stored as raw field representations.
class AlgebraElement {
public:
    explicit AlgebraElement(const AlgebraContext* ctx)
        : ctx_(ctx), c_(ctx->dim(), 0) {}

    const AlgebraContext& context() const { return *ctx_; }
    const AlgebraContext* context_ptr() const { return ctx_; }

    FieldElement coeff(size_t idx) const {
        return FieldElement(ctx_->field_ptr(), c_[idx]);
    }
    FieldElement coeff(uint64_t i, uint64_t j) const {
        return coeff(ctx_->index_of(i, j));
    }
    void set_coeff(size_t idx, const FieldElement& v) {
        check_same_field(ctx_->field(), v.field());
        c_[idx] = v.rep();
    }
    void set_coeff(uint64_t i, uint64_t j, const FieldElement& v) {
        set_coeff(ctx_->index_of(i, j), v);
    }
    uint64_t rep(size_t idx) const { return c_[idx]; }
    void set_rep(size_t idx, uint64_t rep) { c_[idx] = rep; }

    bool is_zero() const;

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement pow(uint64_t e) const;

    bool operator==(const AlgebraElement& o) const;
    bool operator!=(const AlgebraElement& o) const { return !(*this == o); }
    /// Total order on same-context elements (coefficient vectors); for
    /// deterministic sets and sorted enumeration output.
    bool operator<(const AlgebraElement& o) const;

    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
    friend AlgebraElement operator*(const FieldElement& c, const AlgebraElement& x);

    /// Canonical serialization: [[r0,...,r_{n-1}],...] with 2p coefficient
    /// groups in index order, residues constant-term first.
    std::string serialize() const;
    /// Rendering like "1 + 2*a^2*b"; "(1 + alpha)*a" for extension scalars.
    std::string human() const;

private:
    const AlgebraContext* ctx_;
    std::vector<uint64_t> c_;
};

/// Element a_0 + a_1 x of FC_2 = FD_{2p} / Gamma(A).
class QuotientElement {
public:
    QuotientElement(const AlgebraContext* ctx, const FieldElement& c0,
                    const FieldElement& c1);

    const AlgebraContext& context() const { return *ctx_; }
    FieldElement c0() const { return FieldElement(ctx_->field_ptr(), r0_); }
    FieldElement c1() const { return FieldElement(ctx_->field_ptr(), r1_); }

    QuotientElement operator+(const QuotientElement& o) const;
    QuotientElement operator*(const QuotientElement& o) const;
    bool operator==(const QuotientElement& o) const;
    bool operator!=(const QuotientElement& o) const { return !(*this == o); }

    bool is_one() const;
    /// (c0 + c1)(c0 - c1) != 0.
    bool is_unit() const;
    /// The involution induced on FC_2 is the identity, so unitary means
    /// u*u = 1 with u a unit.
    bool is_unitary() const;
    QuotientElement inverse() const;

    std::string human() const;

private:
    const AlgebraContext* ctx_;
    uint64_t r0_, r1_;
};

inline void check_same_context(const AlgebraContext& a, const AlgebraContext& b) {
    if (&a == &b) return;
    if (a.p() != b.p() || !a.field().same_params(b.field())) {
        throw ContextMismatchError("algebra elements from different contexts");
    }
}

/// Canonical involution: a^i -> a^{p-i}, a^i b -> a^i b, extended linearly.
AlgebraElement involution(const AlgebraElement& x);

/// Sum of all 2p coefficients.
FieldElement augmentation(const AlgebraElement& x);

/// Same value as augmentation; named separately because it is applied to
/// FA-components on their own.
FieldElement chi(const AlgebraElement& x);

/// Projection onto FC_2: (sum of a-part) + (sum of b-part) x.
QuotientElement theta(const AlgebraElement& x);

/// Section of theta: a_0 + a_1 x -> a_0 + a_1 b.
AlgebraElement psi(const QuotientElement& q);

/// Membership in Gamma(A) = ker theta.
bool in_gamma_A(const AlgebraElement& x);

/// True when the b-part is identically zero (the FA subalgebra).
bool in_fa(const AlgebraElement& x);

/// x + y + xy.
AlgebraElement circle(const AlgebraElement& x, const AlgebraElement& y);

/// Column k is the coefficient vector of x * g_k.
Matrix left_regular_matrix(const AlgebraElement& x);

/// Inverse of a unit; x^{p-1} when x lies in 1 + Gamma(A), otherwise a
/// left-regular-representation solve. Throws NotAUnitError.
AlgebraElement invert_unit(const AlgebraElement& x);

/// Full-rank test of the left regular representation.
bool is_unit(const AlgebraElement& x);

bool is_unitary(const AlgebraElement& u);
bool is_symmetric(const AlgebraElement& u);

/// Coefficient vector over F, length 2p.
Vec to_field_vector(const AlgebraElement& x);
AlgebraElement from_field_vector(const AlgebraContext* ctx, const Vec& v);

/// Residue vector over F_p, length 2pn, constant-term-first within each
/// coefficient.
Vec to_prime_vector(const AlgebraElement& x);
AlgebraElement from_prime_vector(const AlgebraContext* ctx, const Vec& v);

} // namespace fd2p
