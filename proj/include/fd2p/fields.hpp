#pragma once

#include <cstdint>
#include <vector>

#include "fd2p/common.hpp"

namespace fd2p {

bool is_prime(uint64_t m);

/// Monic irreducible polynomial of degree n over F_p with the smallest
/// coefficient sequence, where sequences (c_0, ..., c_{n-1}, 1) are ordered
/// by the value of c_0 + c_1*p + ... + c_{n-1}*p^{n-1}. Deterministic.
/// Coefficients are listed constant term first, leading 1 included.
std::vector<uint64_t> find_irreducible(uint64_t p, uint32_t n);

/// Irreducibility over F_p of a monic polynomial given constant term first.
/// Degree 1 is always irreducible; degrees 2 and 3 are decided by the absence
/// of roots; higher degrees by the Frobenius-power gcd criterion.
bool is_irreducible(const std::vector<uint64_t>& poly, uint64_t p);

/// "[c0,c1,...]" rendering of a coefficient list, constant term first.
std::string poly_to_string(const std::vector<uint64_t>& poly);

/// Parse "[c0,c1,...]" or a bare comma list "c0,c1,...".
std::vector<uint64_t> poly_from_string(const std::string& s);

class Field;

/// Element of F_{p^n}, stored as the base-p digit encoding of its coefficient
/// vector c_0 + c_1*alpha + ... + c_{n-1}*alpha^{n-1} (constant term first).
/// Immutable; operations are pure.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(const Field* field, uint64_t rep) : field_(field), rep_(rep) {}

    const Field& field() const { return *field_; }
    uint64_t rep() const { return rep_; }
    bool is_zero() const { return rep_ == 0; }

    /// Residues c_0..c_{n-1}, constant term first.
    std::vector<uint64_t> residues() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    const Field* field_ = nullptr;
    uint64_t rep_ = 0;
};

/// The finite field F_{p^n} = F_p[x]/<f(x)> for an odd prime p. Also serves
/// as the prime field itself (n = 1). Construction validates primality,
/// monicity and irreducibility. Immutable after construction.
class Field {
public:
    /// Uses find_irreducible(p, n) as the modulus.
    Field(uint64_t p, uint32_t n);

    /// Explicit modulus, constant term first with leading 1 included.
    Field(uint64_t p, uint32_t n, std::vector<uint64_t> modulus);

    uint64_t characteristic() const { return p_; }
    uint32_t degree() const { return n_; }
    uint64_t order() const { return order_; }
    const std::vector<uint64_t>& modulus() const { return f_; }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    /// Residue class of x modulo the defining polynomial.
    FieldElement alpha() const;
    FieldElement from_int(int64_t v) const;
    FieldElement from_residues(const std::vector<uint64_t>& c) const;
    /// The element whose digit encoding is index; index < order().
    FieldElement element(uint64_t index) const;

    bool same_params(const Field& o) const {
        return p_ == o.p_ && n_ == o.n_ && f_ == o.f_;
    }

    // Raw-representation arithmetic; used by FieldElement and by hot loops.
    uint64_t add_rep(uint64_t a, uint64_t b) const;
    uint64_t sub_rep(uint64_t a, uint64_t b) const;
    uint64_t neg_rep(uint64_t a) const;
    uint64_t mul_rep(uint64_t a, uint64_t b) const;
    uint64_t inv_rep(uint64_t a) const;
    uint64_t pow_rep(uint64_t a, uint64_t e) const;

private:
    void validate() const;

    uint64_t p_ = 0;
    uint32_t n_ = 0;
    std::vector<uint64_t> f_;     // monic modulus, constant first
    std::vector<uint64_t> ppow_;  // p^0..p^n
    uint64_t order_ = 0;          // p^n
};

inline void check_same_field(const Field& a, const Field& b) {
    if (&a != &b && !a.same_params(b)) {
        throw ContextMismatchError("field elements come from different fields");
    }
}

} // namespace fd2p
