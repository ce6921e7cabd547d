#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewinc/errors.hpp"

namespace skewinc {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Element of a coefficient ring. The payload is a fixed-width word vector
/// interpreted by the owning ring and kept in canonical form, so equality is
/// plain word comparison. Elements of different rings compare unequal;
/// arithmetic between them throws a SpecMismatch error.
class RingElem {
 public:
  RingElem() = default;
  RingElem(RingPtr ring, std::vector<std::int64_t> words)
      : ring_(std::move(ring)), words_(std::move(words)) {}

  const RingPtr& ring() const { return ring_; }
  std::span<const std::int64_t> words() const { return words_; }
  bool valid() const { return ring_ != nullptr; }

  bool operator==(const RingElem& other) const;
  bool operator!=(const RingElem& other) const { return !(*this == other); }

  RingElem operator+(const RingElem& other) const;
  RingElem operator-(const RingElem& other) const;
  RingElem operator*(const RingElem& other) const;
  RingElem operator-() const;

 private:
  RingPtr ring_;
  std::vector<std::int64_t> words_;
};

/// An associative unital ring R together with a unital endomorphism sigma.
/// Concrete rings provide the primitive operations; the base class supplies
/// the generic exhaustive queries (units, idempotents, radical membership,
/// center membership), which concrete rings may override with closed forms.
///
/// Rings are immutable after construction and all operations are pure, so a
/// Ring may be shared freely across threads.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  /// Canonical spec string ("zmod:4", "gf:2:2:frobenius", ...). Two rings
  /// with equal keys are interchangeable; the key is the ring's identity.
  virtual std::string key() const = 0;
  virtual std::string describe() const = 0;

  virtual bool finite() const = 0;
  /// nullopt means "unknown" (permitted for user-supplied rings).
  virtual std::optional<bool> commutative() const = 0;
  /// Number of elements; pre: finite().
  virtual std::uint64_t size() const = 0;
  /// Width of the canonical word encoding.
  virtual std::size_t word_count() const = 0;

  RingElem zero() const { return make(zero_words()); }
  RingElem one() const { return make(one_words()); }

  virtual RingElem add(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem mul(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem neg(const RingElem& a) const = 0;
  RingElem sub(const RingElem& a, const RingElem& b) const;

  /// The endomorphism sigma. Guaranteed unital: sigma(1) = 1.
  virtual RingElem sigma(const RingElem& a) const = 0;
  /// sigma applied k times; sigma^0 is the identity. Pre: k >= 0.
  RingElem sigma_pow(int k, const RingElem& a) const;

  /// Deterministic enumeration; element_at(i) for i in [0, size()).
  virtual RingElem element_at(std::uint64_t index) const = 0;
  virtual std::uint64_t index_of(const RingElem& a) const = 0;
  /// All elements in enumeration order; throws UnsupportedQuery if infinite.
  std::vector<RingElem> enumerate() const;

  /// Unit test and inverse. Default: exhaustive search over a finite ring.
  /// Field-like rings override with closed forms.
  virtual bool is_unit(const RingElem& a) const;
  virtual RingElem inverse(const RingElem& a) const;

  bool is_idempotent(const RingElem& a) const;
  /// a != 0, a^2 = a, and every idempotent f with af = fa = f is 0 or a.
  /// Requires a finite ring (the quantifier is exhaustive).
  bool is_primitive_idempotent(const RingElem& a) const;
  /// True iff 1 - x*a*y is a unit for all x, y. Requires a finite ring.
  bool jacobson_member(const RingElem& a) const;
  /// True iff a commutes with everything. Decidable when the ring is known
  /// commutative or is finite.
  bool center_member(const RingElem& a) const;

  /// Literal syntax is ring-specific; see the catalog constructors.
  virtual std::string format(const RingElem& a) const = 0;
  /// Throws a Parse error on malformed input.
  virtual RingElem parse(std::string_view text) const = 0;

  /// Throws SpecMismatch unless the elements belong to this ring.
  void check_operands(const RingElem& a, const RingElem& b) const;
  void check_operand(const RingElem& a) const;

 protected:
  virtual std::vector<std::int64_t> zero_words() const = 0;
  virtual std::vector<std::int64_t> one_words() const = 0;

  RingElem make(std::vector<std::int64_t> words) const {
    return RingElem(shared_from_this(), std::move(words));
  }
  void require_finite(const char* what) const;
};

/// Structural ring identity: equal keys.
bool same_ring(const Ring& a, const Ring& b);

// Catalog of concrete finite rings.
//
// Together these cover the three shapes of sigma the structural results
// depend on: the identity, a nontrivial automorphism (Frobenius, swap), and
// a genuinely non-injective endomorphism (projection, t -> t^2).

/// Integers modulo n (n >= 2), identity endomorphism.
RingPtr make_zmod(std::int64_t n);
/// Galois field GF(p^k), Frobenius endomorphism x -> x^p (identity for k=1).
/// The modulus is the lexicographically smallest monic irreducible of
/// degree k over F_p (coefficient tuples ordered as base-p integers).
RingPtr make_gf(std::int64_t p, int k);
/// Product ring R0 x R0 with the swap automorphism (a,b) -> (b,a).
RingPtr make_prod_swap(RingPtr inner);
/// Product ring R0 x R0 with the projection endomorphism (a,b) -> (a,a).
RingPtr make_prod_proj(RingPtr inner);
/// Truncated polynomial ring (Z/n)[t]/(t^m) with substitution t -> t^2.
RingPtr make_trunc_poly(std::int64_t n, int m);

/// Ring-spec DSL: "zmod:<n>", "gf:<p>:<k>:frobenius", "prodswap:<inner>",
/// "prodproj:<inner>", "trunc:<n>:<m>:tsq".
RingPtr parse_ring_spec(std::string_view spec);

}  // namespace skewinc
