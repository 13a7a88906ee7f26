#pragma once

#include <string>
#include <vector>

#include "fd2p/constructions.hpp"
#include "fd2p/report.hpp"

namespace fd2p {

/// A subgroup given by generators, with the full element set attached when
/// enumeration completed within its bound. Elements are kept sorted by
/// coefficient vector for deterministic comparison and output.
struct SubgroupHandle {
    std::string label;
    std::vector<AlgebraElement> generators;
    uint64_t predicted_order = 0;        // 0 when no prediction
    bool enumeration_complete = false;
    uint64_t partial_count = 0;          // progress when the bound was hit
    std::vector<AlgebraElement> elements;

    uint64_t order() const { return elements.size(); }
};

/// Breadth-first product closure of the generated group. Generators must be
/// units. Exceeding order_bound is a soft failure: enumeration_complete stays
/// false and partial_count carries how far it got. A nonzero predicted_order
/// that disagrees with a completed enumeration throws std::logic_error.
SubgroupHandle closure(const std::string& label,
                       const std::vector<AlgebraElement>& generators,
                       uint64_t order_bound, uint64_t predicted_order = 0);

/// All |F|^k elements spanned over F by k basis elements. The caller is
/// responsible for bound-checking |F|^k.
std::vector<AlgebraElement> enumerate_f_span(
    const AlgebraContext& ctx, const std::vector<AlgebraElement>& basis);

/// Brute force over all of 1 + Gamma(A), filtering unitary units; completes
/// only when p^{4nl} <= bound. On completion, asserts the result equals the
/// closure of the unitary basis (that is, V_*(FA)).
SubgroupHandle enumerate_unitary_in_one_plus_gamma(const AlgebraContext& ctx,
                                                   uint64_t bound);

/// u = v * b^eps * (-1)^delta with v in V_*(FA).
struct UnitaryDecomposition {
    AlgebraElement v;
    int eps = 0;
    int delta = 0;
};

/// Decompose a unitary unit of the full algebra. Non-unitary input throws
/// std::invalid_argument; theta(u) outside {1, -1, x, -x} would contradict
/// the quotient structure and throws std::logic_error.
UnitaryDecomposition unitary_decompose(const AlgebraElement& u);

/// Brute force over all p^{2n} elements of FC_2 under the induced (identity)
/// involution. Throws std::length_error when p^{2n} > bound.
std::vector<QuotientElement> quotient_unitary_units(const AlgebraContext& ctx,
                                                    uint64_t bound);

/// {x in Gamma(A) : x g = g x for the whole Gamma(A) basis}, over F.
Subspace center_log_subspace(const AlgebraContext& ctx);

/// {x in Gamma(A) : x a = a x}, over F.
Subspace centralizer_log_subspace(const AlgebraContext& ctx);

/// Z(1 + Gamma(A)) = 1 + center_log_subspace. Verifies the dimension, the
/// claimed element shape (span of C_i-hat - 2 and A-hat b), and generator
/// agreement with center_basis; enumerates when p^{n(l+1)} <= bound.
SubgroupHandle center_of_one_plus_gamma(const AlgebraContext& ctx, uint64_t bound);

/// C_{1+Gamma(A)}(a) = 1 + centralizer_log_subspace. Verifies order p^{np}
/// and the internal direct product V_*(FA) x Z(1 + Gamma(A)); enumerates when
/// p^{np} <= bound.
SubgroupHandle centralizer_of_a(const AlgebraContext& ctx, uint64_t bound);

/// v = l_part * d_part * u_part with l_part in 1 + L, d_part in 1 + D and
/// u_part in 1 + U.
struct FactorizationTriple {
    AlgebraElement l_part;
    AlgebraElement d_part;
    AlgebraElement u_part;
};

/// Peirce-resolve v - 1 against e_1, e_2 and rebuild the three factors; the
/// corner inverse is the finite geometric series. Requires v in 1 + Gamma(A).
FactorizationTriple pavesic_factorize(const AlgebraElement& v);

/// W = (1+L)(1+D) order, W intersect C(a) = Z, and the order equation
/// |W||C(a)|/|Z| = p^{4nl}; exhaustive W*C(a) coverage at small scale.
std::vector<CheckRecord> general_product_check(const AlgebraContext& ctx,
                                               uint64_t group_bound);

/// Seeded random units decompose through theta/psi into (1 + Gamma(A)) times
/// a quotient unit; exhaustive unit count when |F|^{2p} <= algebra_bound.
std::vector<CheckRecord> verify_global_split(const AlgebraContext& ctx, Rng& rng,
                                             uint64_t algebra_bound);

} // namespace fd2p
