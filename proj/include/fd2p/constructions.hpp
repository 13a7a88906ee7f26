#pragma once

#include <vector>

#include "fd2p/algebra.hpp"

namespace fd2p {

/// A family member together with its (i, k) indices; sign distinguishes the
/// (1-b) / (1+b) halves of the d-block family and is 0 elsewhere.
struct LabeledElement {
    uint64_t i = 0;
    uint64_t k = 0;
    int sign = 0;
    AlgebraElement elem;
};

/// omega_i = (a^i - a^{-i})(1 + b), 1 <= i <= l.
AlgebraElement omega(const AlgebraContext& ctx, uint64_t i);
/// omega_i' = (a^i - a^{-i})(1 - b), 1 <= i <= l.
AlgebraElement omega_prime(const AlgebraContext& ctx, uint64_t i);

/// omega with the index convention extended to any integer: the defining
/// formula gives omega_0 = 0 and omega_{p-t} = -omega_t.
AlgebraElement omega_ext(const AlgebraContext& ctx, int64_t i);
AlgebraElement omega_prime_ext(const AlgebraContext& ctx, int64_t i);

/// u_{i,k} = 1 + alpha^i (a-1)^k, 0 <= i <= n-1, 1 <= k <= p-1.
AlgebraElement u_elem(const AlgebraContext& ctx, uint64_t i, uint64_t k);

/// z_{i,k} = u_{i,k}* u_{i,k}^{-1} for odd k; n(p-1)/2 unitary units,
/// ordered by (k, i).
std::vector<LabeledElement> unitary_basis(const AlgebraContext& ctx);

/// s_{i,k} = u_{i,k}* u_{i,k} for even k; nl symmetric units, ordered by (k, i).
std::vector<LabeledElement> symmetric_basis(const AlgebraContext& ctx);

/// {s_{i,k} (k even)} followed by {1 + alpha^i A-hat b}; n(l+1) elements.
std::vector<LabeledElement> center_basis(const AlgebraContext& ctx);

/// {1 + alpha^i (a - a^{-1})^{2k} (1 -/+ b)}; 2nl elements ordered by
/// (k, i, sign) with the (1-b) member first.
std::vector<LabeledElement> d_block_basis(const AlgebraContext& ctx);

/// The 4l-element free basis of Gamma(A):
/// omega_1..omega_l, omega'_1..omega'_l, omega_i omega_i', omega_i' omega_i.
std::vector<LabeledElement> gamma_free_basis(const AlgebraContext& ctx);

/// All families bundled.
struct BasisCatalog {
    std::vector<LabeledElement> omega;
    std::vector<LabeledElement> omega_prime;
    std::vector<LabeledElement> unitary;
    std::vector<LabeledElement> symmetric;
    std::vector<LabeledElement> center;
    std::vector<LabeledElement> d_block;
    std::vector<LabeledElement> gamma;
};
BasisCatalog build_catalog(const AlgebraContext& ctx);

/// e_1 = (1+b)/2, e_2 = (1-b)/2.
struct IdempotentPair {
    AlgebraElement e1;
    AlgebraElement e2;
};
IdempotentPair idempotents(const AlgebraContext& ctx);

/// Coefficients over the gamma_free_basis order expressing (a^t - 1) and
/// (a^t - 1)b, 1 <= t <= p-1; entries are 0 or +-1/4, +-1/8.
struct ChangeOfBasis {
    std::vector<FieldElement> plain;
    std::vector<FieldElement> bpart;
};
ChangeOfBasis change_of_basis(const AlgebraContext& ctx, uint64_t t);

/// Linear combination over gamma_free_basis (coefficients in that order).
AlgebraElement combine_gamma_basis(const AlgebraContext& ctx,
                                   const std::vector<FieldElement>& coeffs);

/// Gamma(A) = ker theta as a 4l-dimensional subspace of F^{2p}.
Subspace gamma_subspace(const AlgebraContext& ctx);

/// L = span{omega_i'}, U = span{omega_i}, D = span{omega_i omega_i',
/// omega_i' omega_i}, each inside F^{2p}.
struct LduSubspaces {
    Subspace L;
    Subspace D;
    Subspace U;
};
LduSubspaces ldu_subspaces(const AlgebraContext& ctx);

/// log(1+x) truncated at degree p-1; requires (v-1)^p = 0.
AlgebraElement truncated_log(const AlgebraElement& v);
/// exp(x) truncated at degree p-1; requires x^p = 0.
AlgebraElement truncated_exp(const AlgebraElement& x);

/// Rank over F_p of the flattened truncated logs of a pairwise-commuting
/// family of 1 + Gamma(A) elements; certifies independence of the generated
/// elementary abelian group. Throws std::domain_error on a non-commuting pair.
size_t log_rank_prime(const std::vector<AlgebraElement>& family);

/// C(r, j) mod p for 0 <= j <= r <= nmax via Pascal's triangle (row r has
/// r+1 entries). Factorial-free: mod-p factorials vanish for r >= p.
std::vector<std::vector<uint64_t>> pascal_mod_p(uint64_t nmax, uint64_t p);

} // namespace fd2p
