#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fd2p/fields.hpp"

namespace fd2p {

using Vec = std::vector<FieldElement>;

/// Dense matrix over one field. Entries are stored as raw representations so
/// the shared-field invariant holds by construction.
class Matrix {
public:
    Matrix(const Field* field, size_t rows, size_t cols)
        : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix from_rows(const Field* field, const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return *field_; }
    const Field* field_ptr() const { return field_; }

    FieldElement at(size_t r, size_t c) const { return {field_, e_[r * cols_ + c]}; }
    void set(size_t r, size_t c, const FieldElement& v) {
        check_same_field(*field_, v.field());
        e_[r * cols_ + c] = v.rep();
    }
    uint64_t rep_at(size_t r, size_t c) const { return e_[r * cols_ + c]; }
    void set_rep(size_t r, size_t c, uint64_t rep) { e_[r * cols_ + c] = rep; }

    Vec row(size_t r) const;
    Matrix transposed() const;
    /// Matrix-vector product m*v.
    Vec apply(const Vec& v) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_->same_params(*o.field_) &&
               e_ == o.e_;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    const Field* field_;
    size_t rows_, cols_;
    std::vector<uint64_t> e_;
};

/// Reduced row-echelon form (Gauss-Jordan with exact division).
Matrix rref(const Matrix& m);
size_t rank(const Matrix& m);

/// One solution of m*x = rhs (echelon particular solution, free variables 0),
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& rhs);

/// A linear subspace of F^ambient, held as an RREF basis matrix with no zero
/// rows; rank equals the basis row count.
class Subspace {
public:
    /// Zero subspace.
    Subspace(const Field* field, size_t ambient) : basis_(field, 0, ambient) {}

    static Subspace span(const Field* field, size_t ambient, const std::vector<Vec>& vectors);

    size_t ambient() const { return basis_.cols(); }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

private:
    explicit Subspace(Matrix rref_basis) : basis_(std::move(rref_basis)) {}
    friend Subspace kernel(const Matrix&);
    friend Subspace sum(const Subspace&, const Subspace&);
    friend Subspace intersect(const Subspace&, const Subspace&);

    Matrix basis_;
};

/// Null space {v : m*v = 0}; dim(kernel) + rank(m) = cols(m).
Subspace kernel(const Matrix& m);

Subspace sum(const Subspace& s, const Subspace& t);
Subspace intersect(const Subspace& s, const Subspace& t);

} // namespace fd2p
