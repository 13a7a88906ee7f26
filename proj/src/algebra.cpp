#include "fd2p/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace fd2p {

AlgebraContext::AlgebraContext(uint64_t p, uint32_t n)
    : field_(std::make_shared<Field>(p, n)),
      prime_(std::make_shared<Field>(p, 1)),
      p_(p) {}

AlgebraContext::AlgebraContext(uint64_t p, uint32_t n,
                               const std::vector<uint64_t>& modulus)
    : field_(std::make_shared<Field>(p, n, modulus)),
      prime_(std::make_shared<Field>(p, 1)),
      p_(p) {}

AlgebraElement AlgebraContext::zero() const { return AlgebraElement(this); }

AlgebraElement AlgebraContext::one() const { return group_element(0, 0); }

AlgebraElement AlgebraContext::a(int64_t i) const {
    const int64_t m = static_cast<int64_t>(p_);
    return group_element(static_cast<uint64_t>(((i % m) + m) % m), 0);
}

AlgebraElement AlgebraContext::b() const { return group_element(0, 1); }

AlgebraElement AlgebraContext::group_element(uint64_t i, uint64_t j) const {
    AlgebraElement x(this);
    x.set_rep(index_of(i, j), field_->one().rep());
    return x;
}

AlgebraElement AlgebraContext::scalar(const FieldElement& c) const {
    check_same_field(*field_, c.field());
    AlgebraElement x(this);
    x.set_rep(0, c.rep());
    return x;
}

AlgebraElement AlgebraContext::a_hat() const {
    AlgebraElement x(this);
    for (uint64_t i = 0; i < p_; ++i) x.set_rep(index_of(i, 0), field_->one().rep());
    return x;
}

AlgebraElement AlgebraContext::c_hat(uint64_t i) const {
    return a(static_cast<int64_t>(i)) + a(-static_cast<int64_t>(i));
}

AlgebraElement AlgebraContext::from_index(uint64_t idx) const {
    AlgebraElement x(this);
    const uint64_t q = field_->order();
    for (size_t k = 0; k < dim(); ++k) {
        x.set_rep(k, idx % q);
        idx /= q;
    }
    return x;
}

bool AlgebraElement::is_zero() const {
    for (uint64_t r : c_) {
        if (r != 0) return false;
    }
    return true;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    const Field& f = ctx_->field();
    AlgebraElement r(ctx_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = f.add_rep(c_[k], o.c_[k]);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    const Field& f = ctx_->field();
    AlgebraElement r(ctx_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = f.sub_rep(c_[k], o.c_[k]);
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    const Field& f = ctx_->field();
    AlgebraElement r(ctx_);
    for (size_t k = 0; k < c_.size(); ++k) r.c_[k] = f.neg_rep(c_[k]);
    return r;
}

AlgebraElement AlgebraElement::pow(uint64_t e) const {
    AlgebraElement base = *this;
    AlgebraElement acc = ctx_->one();
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    return c_ == o.c_;
}

bool AlgebraElement::operator<(const AlgebraElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    return c_ < o.c_;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
    check_same_context(*x.ctx_, *y.ctx_);
    const AlgebraContext& ctx = *x.ctx_;
    const Field& f = ctx.field();
    const uint64_t p = ctx.p();
    AlgebraElement r(x.ctx_);
    for (uint64_t j1 = 0; j1 < 2; ++j1) {
        for (uint64_t i1 = 0; i1 < p; ++i1) {
            const uint64_t c1 = x.c_[j1 * p + i1];
            if (c1 == 0) continue;
            for (uint64_t j2 = 0; j2 < 2; ++j2) {
                for (uint64_t i2 = 0; i2 < p; ++i2) {
                    const uint64_t c2 = y.c_[j2 * p + i2];
                    if (c2 == 0) continue;
                    const uint64_t i = j1 == 0 ? (i1 + i2) % p : (i1 + p - i2) % p;
                    const uint64_t j = j1 ^ j2;
                    const size_t k = j * p + i;
                    r.c_[k] = f.add_rep(r.c_[k], f.mul_rep(c1, c2));
                }
            }
        }
    }
    return r;
}

AlgebraElement operator*(const FieldElement& c, const AlgebraElement& x) {
    check_same_field(x.ctx_->field(), c.field());
    const Field& f = x.ctx_->field();
    AlgebraElement r(x.ctx_);
    for (size_t k = 0; k < x.c_.size(); ++k) r.c_[k] = f.mul_rep(c.rep(), x.c_[k]);
    return r;
}

namespace {

std::string scalar_human(const Field& f, uint64_t rep, bool needs_factor) {
    FieldElement e(&f, rep);
    const std::vector<uint64_t> res = e.residues();
    std::vector<std::string> monos;
    for (size_t d = 0; d < res.size(); ++d) {
        if (res[d] == 0) continue;
        std::ostringstream m;
        if (res[d] != 1 || d == 0) m << res[d];
        if (d > 0) {
            if (res[d] != 1) m << "*";
            m << "alpha";
            if (d > 1) m << "^" << d;
        }
        monos.push_back(m.str());
    }
    if (monos.empty()) return "0";
    std::string body = monos[0];
    for (size_t t = 1; t < monos.size(); ++t) body += " + " + monos[t];
    if (monos.size() > 1 && needs_factor) return "(" + body + ")";
    return body;
}

} // namespace

std::string AlgebraElement::serialize() const {
    std::ostringstream out;
    out << "[";
    for (size_t k = 0; k < c_.size(); ++k) {
        if (k > 0) out << ",";
        const std::vector<uint64_t> res = coeff(k).residues();
        out << "[";
        for (size_t d = 0; d < res.size(); ++d) {
            if (d > 0) out << ",";
            out << res[d];
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string AlgebraElement::human() const {
    const Field& f = ctx_->field();
    const uint64_t p = ctx_->p();
    std::vector<std::string> terms;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const uint64_t i = k % p;
        const uint64_t j = k / p;
        std::ostringstream g;
        if (i > 0) {
            g << "a";
            if (i > 1) g << "^" << i;
        }
        if (j == 1) {
            if (i > 0) g << "*";
            g << "b";
        }
        const std::string group = g.str();
        const bool one_coeff = c_[k] == f.one().rep();
        std::string term;
        if (group.empty()) {
            term = scalar_human(f, c_[k], false);
        } else if (one_coeff) {
            term = group;
        } else {
            term = scalar_human(f, c_[k], true) + "*" + group;
        }
        terms.push_back(term);
    }
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (size_t t = 1; t < terms.size(); ++t) out += " + " + terms[t];
    return out;
}

QuotientElement::QuotientElement(const AlgebraContext* ctx, const FieldElement& c0,
                                 const FieldElement& c1)
    : ctx_(ctx), r0_(c0.rep()), r1_(c1.rep()) {
    check_same_field(ctx->field(), c0.field());
    check_same_field(ctx->field(), c1.field());
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    const Field& f = ctx_->field();
    return {ctx_, FieldElement(&f, f.add_rep(r0_, o.r0_)),
            FieldElement(&f, f.add_rep(r1_, o.r1_))};
}

QuotientElement QuotientElement::operator*(const QuotientElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    const Field& f = ctx_->field();
    const uint64_t c0 = f.add_rep(f.mul_rep(r0_, o.r0_), f.mul_rep(r1_, o.r1_));
    const uint64_t c1 = f.add_rep(f.mul_rep(r0_, o.r1_), f.mul_rep(r1_, o.r0_));
    return {ctx_, FieldElement(&f, c0), FieldElement(&f, c1)};
}

bool QuotientElement::operator==(const QuotientElement& o) const {
    check_same_context(*ctx_, *o.ctx_);
    return r0_ == o.r0_ && r1_ == o.r1_;
}

bool QuotientElement::is_one() const {
    return r0_ == ctx_->field().one().rep() && r1_ == 0;
}

bool QuotientElement::is_unit() const {
    const Field& f = ctx_->field();
    return f.mul_rep(f.add_rep(r0_, r1_), f.sub_rep(r0_, r1_)) != 0;
}

bool QuotientElement::is_unitary() const {
    if (!is_unit()) return false;
    const QuotientElement sq = *this * *this;
    return sq.is_one();
}

QuotientElement QuotientElement::inverse() const {
    const Field& f = ctx_->field();
    const uint64_t det = f.mul_rep(f.add_rep(r0_, r1_), f.sub_rep(r0_, r1_));
    if (det == 0) throw NotAUnitError("quotient element is not a unit");
    const uint64_t di = f.inv_rep(det);
    return {ctx_, FieldElement(&f, f.mul_rep(r0_, di)),
            FieldElement(&f, f.neg_rep(f.mul_rep(r1_, di)))};
}

std::string QuotientElement::human() const {
    const Field& f = ctx_->field();
    std::vector<std::string> terms;
    if (r0_ != 0) terms.push_back(scalar_human(f, r0_, false));
    if (r1_ != 0) {
        terms.push_back(r1_ == f.one().rep() ? "x" : scalar_human(f, r1_, true) + "*x");
    }
    if (terms.empty()) return "0";
    std::string out = terms[0];
    for (size_t t = 1; t < terms.size(); ++t) out += " + " + terms[t];
    return out;
}

AlgebraElement involution(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    const uint64_t p = ctx.p();
    AlgebraElement r(&ctx);
    for (uint64_t i = 0; i < p; ++i) {
        r.set_rep(ctx.index_of((p - i) % p, 0), x.rep(ctx.index_of(i, 0)));
        r.set_rep(ctx.index_of(i, 1), x.rep(ctx.index_of(i, 1)));
    }
    return r;
}

FieldElement augmentation(const AlgebraElement& x) {
    const Field& f = x.context().field();
    uint64_t acc = 0;
    for (size_t k = 0; k < x.context().dim(); ++k) acc = f.add_rep(acc, x.rep(k));
    return FieldElement(&f, acc);
}

FieldElement chi(const AlgebraElement& x) { return augmentation(x); }

QuotientElement theta(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    const Field& f = ctx.field();
    uint64_t s0 = 0, s1 = 0;
    for (uint64_t i = 0; i < ctx.p(); ++i) {
        s0 = f.add_rep(s0, x.rep(ctx.index_of(i, 0)));
        s1 = f.add_rep(s1, x.rep(ctx.index_of(i, 1)));
    }
    return {&ctx, FieldElement(&f, s0), FieldElement(&f, s1)};
}

AlgebraElement psi(const QuotientElement& q) {
    const AlgebraContext& ctx = q.context();
    AlgebraElement r(&ctx);
    r.set_rep(ctx.index_of(0, 0), q.c0().rep());
    r.set_rep(ctx.index_of(0, 1), q.c1().rep());
    return r;
}

bool in_gamma_A(const AlgebraElement& x) {
    const QuotientElement t = theta(x);
    return t.c0().is_zero() && t.c1().is_zero();
}

bool in_fa(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    for (uint64_t i = 0; i < ctx.p(); ++i) {
        if (x.rep(ctx.index_of(i, 1)) != 0) return false;
    }
    return true;
}

AlgebraElement circle(const AlgebraElement& x, const AlgebraElement& y) {
    return x + y + x * y;
}

Matrix left_regular_matrix(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    const uint64_t p = ctx.p();
    Matrix m(ctx.field_ptr(), ctx.dim(), ctx.dim());
    for (uint64_t s = 0; s < 2; ++s) {
        for (uint64_t r = 0; r < p; ++r) {
            const size_t col = ctx.index_of(r, s);
            for (uint64_t j = 0; j < 2; ++j) {
                for (uint64_t i = 0; i < p; ++i) {
                    const uint64_t c = x.rep(ctx.index_of(i, j));
                    if (c == 0) continue;
                    const uint64_t ri = j == 0 ? (i + r) % p : (i + p - r) % p;
                    m.set_rep(ctx.index_of(ri, j ^ s), col,
                              ctx.field().add_rep(m.rep_at(ctx.index_of(ri, j ^ s), col), c));
                }
            }
        }
    }
    return m;
}

AlgebraElement invert_unit(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    if (theta(x).is_one()) {
        return x.pow(ctx.p() - 1);
    }
    const Matrix m = left_regular_matrix(x);
    Vec rhs(ctx.dim(), ctx.field().zero());
    rhs[0] = ctx.field().one();
    const std::optional<Vec> y = solve(m, rhs);
    if (!y) throw NotAUnitError("element is not a unit");
    const AlgebraElement inv = from_field_vector(&ctx, *y);
    if (inv * x != ctx.one()) throw NotAUnitError("element has no two-sided inverse");
    return inv;
}

bool is_unit(const AlgebraElement& x) {
    return rank(left_regular_matrix(x)) == x.context().dim();
}

bool is_unitary(const AlgebraElement& u) {
    const AlgebraElement star = involution(u);
    const AlgebraElement one = u.context().one();
    return star * u == one && u * star == one;
}

bool is_symmetric(const AlgebraElement& u) {
    return involution(u) == u && is_unit(u);
}

Vec to_field_vector(const AlgebraElement& x) {
    const Field* f = x.context().field_ptr();
    Vec v;
    v.reserve(x.context().dim());
    for (size_t k = 0; k < x.context().dim(); ++k) v.emplace_back(f, x.rep(k));
    return v;
}

AlgebraElement from_field_vector(const AlgebraContext* ctx, const Vec& v) {
    if (v.size() != ctx->dim()) {
        throw ContextMismatchError("from_field_vector: wrong length");
    }
    AlgebraElement x(ctx);
    for (size_t k = 0; k < v.size(); ++k) x.set_coeff(k, v[k]);
    return x;
}

Vec to_prime_vector(const AlgebraElement& x) {
    const AlgebraContext& ctx = x.context();
    const Field* fp = ctx.prime_field_ptr();
    Vec v;
    v.reserve(ctx.prime_dim());
    for (size_t k = 0; k < ctx.dim(); ++k) {
        for (uint64_t r : x.coeff(k).residues()) v.emplace_back(fp, r);
    }
    return v;
}

AlgebraElement from_prime_vector(const AlgebraContext* ctx, const Vec& v) {
    if (v.size() != ctx->prime_dim()) {
        throw ContextMismatchError("from_prime_vector: wrong length");
    }
    AlgebraElement x(ctx);
    const uint32_t n = ctx->n();
    for (size_t k = 0; k < ctx->dim(); ++k) {
        std::vector<uint64_t> res(n);
        for (uint32_t d = 0; d < n; ++d) {
            check_same_field(ctx->prime_field(), v[k * n + d].field());
            res[d] = v[k * n + d].rep();
        }
        x.set_coeff(k, ctx->field().from_residues(res));
    }
    return x;
}

} // namespace fd2p
