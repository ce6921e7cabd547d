#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewinc/algebra.hpp"

namespace skewinc {

/// Invertibility criterion: an element is a (two-sided) unit exactly when
/// every diagonal coefficient is a unit of the coefficient ring.
bool is_unit_elem(const SkewElement& f);

/// Two-sided inverse, computed by back-substitution up the pair lattice:
/// the diagonal inverts entrywise, and for i < j the value at (i, j) is
///   -f(i,i)^{-1} * sum over i < k <= j of f(i,k) * sigma^(k-i)(g(k,j)).
/// Throws NotAUnit (with the offending element index attached) when a
/// diagonal coefficient is not a unit.
SkewElement invert_elem(const SkewElement& f);

/// Same inverse computed by the mirrored recursion (accumulating from the
/// left); exposed so the two constructions can be checked against each
/// other. Throws NotAUnit under the same condition as invert_elem.
SkewElement left_inverse_elem(const SkewElement& f);

/// Jacobson radical membership: every diagonal coefficient lies in the
/// radical of the coefficient ring.
bool jacobson_member_elem(const SkewElement& f);

bool is_idempotent_elem(const SkewElement& f);

/// Conjugation data for an idempotent f: a unit h with h*f = diagonal*h,
/// so f = h^{-1} * diagonal * h and diagonal is the diagonal part of f.
struct Diagonalization {
  SkewElement diagonal;
  SkewElement conjugator;
  SkewElement conjugator_inverse;
};

/// Pre: f idempotent (InvalidArgument otherwise). The conjugator is
/// delta + (2*diag(f) - delta) * (f - diag(f)), which is always a unit.
Diagonalization diagonalize_idempotent(const SkewElement& f);

/// Analysis of an element as a candidate primitive idempotent. A nonzero
/// idempotent is primitive exactly when its diagonalization is supported on
/// a single element x with a primitive idempotent coefficient a; then the
/// element is conjugate to a*e[x].
struct PrimitiveAnalysis {
  bool idempotent = false;
  bool primitive = false;
  int element = -1;                    // x, when primitive (always unique)
  std::optional<RingElem> value;       // a, when primitive
  /// The coefficient a is pinned down only when the ring is commutative or
  /// has no idempotents besides 0 and 1; otherwise it is one representative
  /// of possibly several conjugation-equivalent choices.
  bool value_canonical = false;
  std::optional<Diagonalization> diag; // present when idempotent
};
PrimitiveAnalysis analyze_primitive(const SkewElement& f);
bool is_primitive_idempotent_elem(const SkewElement& f);

/// Center membership: diagonal, every entry central in the coefficient
/// ring, and f(i,i) = sigma^(j-i)(f(j,j)) for every comparable pair i <= j.
bool center_member_elem(const SkewElement& f);

/// All center elements, as diagonal assignments over the ring's center
/// filtered by the comparable-pair condition; deterministic order. Refuses
/// (UnsupportedQuery) when |Z(R)|^n exceeds `bound`.
std::vector<SkewElement> center_enumerate(const ContextPtr& ctx,
                                          std::uint64_t bound = std::uint64_t(1)
                                                                << 16);

/// Consequence of the center condition, checkable per connected component:
/// sigma^i(f(i,i)) = sigma^j(f(j,j)) for all i, j in one component.
bool center_component_invariant(const SkewElement& f);

}  // namespace skewinc
