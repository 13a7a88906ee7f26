#include "fd2p/linalg.hpp"

#include <stdexcept>

namespace fd2p {

Matrix Matrix::from_rows(const Field* field, const std::vector<Vec>& rows) {
    const size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("Matrix::from_rows: ragged rows");
        }
        for (size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Vec Matrix::row(size_t r) const {
    Vec v;
    v.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) v.push_back(at(r, c));
    return v;
}

Matrix Matrix::transposed() const {
    Matrix t(field_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) t.set_rep(c, r, rep_at(r, c));
    }
    return t;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vec out(rows_, field_->zero());
    for (size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (size_t c = 0; c < cols_; ++c) {
            acc = field_->add_rep(acc, field_->mul_rep(rep_at(r, c), v[c].rep()));
        }
        out[r] = FieldElement(field_, acc);
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    check_same_field(*a.field_, *b.field_);
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: dimension mismatch");
    Matrix r(a.field_, a.rows_, b.cols_);
    const Field& f = *a.field_;
    for (size_t i = 0; i < a.rows_; ++i) {
        for (size_t k = 0; k < a.cols_; ++k) {
            const uint64_t aik = a.rep_at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                r.set_rep(i, j, f.add_rep(r.rep_at(i, j), f.mul_rep(aik, b.rep_at(k, j))));
            }
        }
    }
    return r;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<size_t> reduce(Matrix& m) {
    const Field& f = m.field();
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t pr = r;
        while (pr < m.rows() && m.rep_at(pr, c) == 0) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r) {
            for (size_t j = 0; j < m.cols(); ++j) {
                uint64_t t = m.rep_at(r, j);
                m.set_rep(r, j, m.rep_at(pr, j));
                m.set_rep(pr, j, t);
            }
        }
        const uint64_t inv = f.inv_rep(m.rep_at(r, c));
        for (size_t j = c; j < m.cols(); ++j) {
            m.set_rep(r, j, f.mul_rep(inv, m.rep_at(r, j)));
        }
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const uint64_t factor = m.rep_at(i, c);
            if (factor == 0) continue;
            for (size_t j = c; j < m.cols(); ++j) {
                m.set_rep(i, j, f.sub_rep(m.rep_at(i, j), f.mul_rep(factor, m.rep_at(r, j))));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

Matrix rref(const Matrix& m) {
    Matrix r = m;
    reduce(r);
    return r;
}

size_t rank(const Matrix& m) {
    Matrix r = m;
    return reduce(r).size();
}

std::optional<Vec> solve(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    const Field& f = m.field();
    Matrix aug(m.field_ptr(), m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug.set_rep(r, c, m.rep_at(r, c));
        check_same_field(f, rhs[r].field());
        aug.set_rep(r, m.cols(), rhs[r].rep());
    }
    const std::vector<size_t> pivots = reduce(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols(), f.zero());
    for (size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = aug.at(i, m.cols());
    }
    return x;
}

Subspace kernel(const Matrix& m) {
    Matrix r = m;
    const std::vector<size_t> pivots = reduce(r);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols(), f.zero());
        v[c] = f.one();
        for (size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -r.at(i, c);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.field_ptr(), m.cols(), basis);
}

Subspace Subspace::span(const Field* field, size_t ambient, const std::vector<Vec>& vectors) {
    Matrix m(field, vectors.size(), ambient);
    for (size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient) {
            throw std::invalid_argument("Subspace::span: vector length mismatch");
        }
        for (size_t c = 0; c < ambient; ++c) m.set(r, c, vectors[r][c]);
    }
    const size_t rk = reduce(m).size();
    Matrix basis(field, rk, ambient);
    for (size_t r = 0; r < rk; ++r) {
        for (size_t c = 0; c < ambient; ++c) basis.set_rep(r, c, m.rep_at(r, c));
    }
    return Subspace(std::move(basis));
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient()) throw ContextMismatchError("Subspace::contains: ambient mismatch");
    const Field& f = field();
    Vec w = v;
    for (size_t r = 0; r < basis_.rows(); ++r) {
        size_t pc = 0;
        while (pc < ambient() && basis_.rep_at(r, pc) == 0) ++pc;
        if (pc == ambient()) continue;
        const FieldElement factor = w[pc];
        if (factor.is_zero()) continue;
        for (size_t c = pc; c < ambient(); ++c) {
            w[c] = w[c] - factor * basis_.at(r, c);
        }
    }
    for (const auto& x : w) {
        if (!x.is_zero()) return false;
    }
    (void)f;
    return true;
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient() != ambient()) throw ContextMismatchError("Subspace::contains: ambient mismatch");
    for (size_t r = 0; r < o.basis_.rows(); ++r) {
        if (!contains(o.basis_.row(r))) return false;
    }
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    if (ambient() != o.ambient() || !field().same_params(o.field())) {
        throw ContextMismatchError("Subspace::==: ambient or field mismatch");
    }
    return basis_ == o.basis_;
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw ContextMismatchError("sum: ambient mismatch");
    std::vector<Vec> rows;
    for (size_t r = 0; r < s.basis().rows(); ++r) rows.push_back(s.basis().row(r));
    for (size_t r = 0; r < t.basis().rows(); ++r) rows.push_back(t.basis().row(r));
    return Subspace::span(s.basis().field_ptr(), s.ambient(), rows);
}

// Zassenhaus: rref of [[S S],[T 0]]; rows with zero left half carry an
// intersection basis in the right half.
Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw ContextMismatchError("intersect: ambient mismatch");
    const size_t d = s.ambient();
    const Field* f = s.basis().field_ptr();
    Matrix m(f, s.dim() + t.dim(), 2 * d);
    for (size_t r = 0; r < s.dim(); ++r) {
        for (size_t c = 0; c < d; ++c) {
            m.set_rep(r, c, s.basis().rep_at(r, c));
            m.set_rep(r, d + c, s.basis().rep_at(r, c));
        }
    }
    for (size_t r = 0; r < t.dim(); ++r) {
        for (size_t c = 0; c < d; ++c) m.set_rep(s.dim() + r, c, t.basis().rep_at(r, c));
    }
    reduce(m);
    std::vector<Vec> inter_rows;
    for (size_t r = 0; r < m.rows(); ++r) {
        bool left_zero = true;
        for (size_t c = 0; c < d && left_zero; ++c) left_zero = m.rep_at(r, c) == 0;
        if (!left_zero) continue;
        Vec v;
        v.reserve(d);
        bool nonzero = false;
        for (size_t c = 0; c < d; ++c) {
            v.push_back(m.at(r, d + c));
            nonzero = nonzero || m.rep_at(r, d + c) != 0;
        }
        if (nonzero) inter_rows.push_back(std::move(v));
    }
    return Subspace::span(f, d, inter_rows);
}

} // namespace fd2p
