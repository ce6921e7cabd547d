#pragma once

// Brute-force reference implementations for the test suite. Everything here
// quantifies exhaustively over enumerated elements and deliberately avoids
// the closed-form criteria under test, so the two can be compared.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "skewinc/algebra.hpp"
#include "skewinc/errors.hpp"
#include "skewinc/poset.hpp"
#include "skewinc/ring.hpp"
#include "skewinc/structure.hpp"

namespace skewinc::testing {

// Run `fn`, swallow a library Error, and report which kind (if any) was
// thrown.  Lets assertions pin the error taxonomy, not just "it threw".
template <typename Fn>
std::optional<ErrorKind> thrown_kind(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

template <typename Fn>
std::string thrown_message(Fn&& fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

inline std::vector<SkewElement> all_elements(const ContextPtr& ctx) {
  return ctx->enumerate(std::uint64_t(1) << 20);
}

/// Two-sided inverse by scanning the whole algebra; nullopt when none.
inline std::optional<SkewElement> exhaustive_inverse(
    const SkewElement& f, const std::vector<SkewElement>& all) {
  const ContextPtr& ctx = f.context();
  const SkewElement delta = ctx->delta();
  for (const SkewElement& g : all) {
    if (ctx->multiply(f, g) == delta && ctx->multiply(g, f) == delta)
      return g;
  }
  return std::nullopt;
}

inline bool is_unit_exhaustive(const SkewElement& f,
                               const std::vector<SkewElement>& all) {
  return exhaustive_inverse(f, all).has_value();
}

inline std::vector<SkewElement> idempotents_exhaustive(
    const ContextPtr& ctx, const std::vector<SkewElement>& all) {
  std::vector<SkewElement> out;
  for (const SkewElement& f : all)
    if (ctx->multiply(f, f) == f) out.push_back(f);
  return out;
}

inline std::vector<SkewElement> center_exhaustive(
    const ContextPtr& ctx, const std::vector<SkewElement>& all) {
  std::vector<SkewElement> out;
  for (const SkewElement& f : all) {
    bool central = true;
    for (const SkewElement& g : all) {
      if (ctx->multiply(f, g) != ctx->multiply(g, f)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(f);
  }
  return out;
}

/// The definition of primitivity, quantified over a precomputed idempotent
/// list: nonzero, idempotent, and absorbing only 0 and itself.
inline bool primitive_definitional(const SkewElement& f,
                                   const std::vector<SkewElement>& idems) {
  const ContextPtr& ctx = f.context();
  if (f.is_zero() || ctx->multiply(f, f) != f) return false;
  for (const SkewElement& g : idems) {
    if (ctx->multiply(f, g) == g && ctx->multiply(g, f) == g) {
      if (!g.is_zero() && g != f) return false;
    }
  }
  return true;
}

/// Reference product of the plain (untwisted) incidence ring, computed from
/// the interval sums directly rather than through AlgebraContext::multiply.
inline SkewElement untwisted_product(const SkewElement& f,
                                     const SkewElement& g) {
  const ContextPtr& ctx = f.context();
  const Ring& ring = *ctx->ring();
  std::vector<std::pair<int, RingElem>> coeffs;
  for (std::size_t p = 0; p < ctx->pairs().size(); ++p) {
    auto [i, j] = ctx->pair_at(static_cast<int>(p));
    RingElem acc = ring.zero();
    for (int k : ctx->poset().interval(i, j))
      acc = ring.add(acc, ring.mul(f.at(i, k), g.at(k, j)));
    if (acc != ring.zero())
      coeffs.emplace_back(static_cast<int>(p), std::move(acc));
  }
  return SkewElement(ctx, std::move(coeffs));
}

/// Order of sigma as a permutation of the (finite) ring, or 0 when sigma is
/// not bijective.
inline int sigma_order(const RingPtr& ring) {
  const std::uint64_t n = ring->size();
  std::vector<std::uint64_t> perm(n);
  std::vector<char> hit(n, 0);
  for (std::uint64_t t = 0; t < n; ++t) {
    perm[t] = ring->index_of(ring->sigma(ring->element_at(t)));
    hit[perm[t]] = 1;
  }
  for (char c : hit)
    if (!c) return 0;
  std::vector<std::uint64_t> cur = perm;
  int order = 1;
  auto identity = [&] {
    for (std::uint64_t t = 0; t < n; ++t)
      if (cur[t] != t) return false;
    return true;
  };
  while (!identity()) {
    for (std::uint64_t t = 0; t < n; ++t) cur[t] = perm[cur[t]];
    ++order;
  }
  return order;
}

/// sigma^(-k) for an automorphism, realized as a forward power via the
/// permutation order.
inline RingElem sigma_pow_neg(const RingPtr& ring, int order, int k,
                              const RingElem& r) {
  const int e = (order - k % order) % order;
  return ring->sigma_pow(e, r);
}

/// Infinite commutative ring (plain 64-bit integers, identity sigma), used
/// to exercise the refusal paths of every exhaustive query.
class IntegerRing : public Ring {
 public:
  std::string key() const override { return "int"; }
  std::string describe() const override { return "integers (test only)"; }
  bool finite() const override { return false; }
  std::optional<bool> commutative() const override { return true; }
  std::uint64_t size() const override {
    fail(ErrorKind::UnsupportedQuery, "infinite ring has no size");
  }
  std::size_t word_count() const override { return 1; }
  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    return make({a.words()[0] + b.words()[0]});
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    return make({a.words()[0] * b.words()[0]});
  }
  RingElem neg(const RingElem& a) const override {
    check_operand(a);
    return make({-a.words()[0]});
  }
  RingElem sigma(const RingElem& a) const override {
    check_operand(a);
    return a;
  }
  RingElem element_at(std::uint64_t) const override {
    fail(ErrorKind::UnsupportedQuery, "infinite ring is not enumerable");
  }
  std::uint64_t index_of(const RingElem&) const override {
    fail(ErrorKind::UnsupportedQuery, "infinite ring is not enumerable");
  }
  bool is_unit(const RingElem& a) const override {
    check_operand(a);
    return a.words()[0] == 1 || a.words()[0] == -1;
  }
  RingElem inverse(const RingElem& a) const override {
    if (!is_unit(a))
      fail(ErrorKind::NotAUnit, "not a unit: " + format(a));
    return a;
  }
  std::string format(const RingElem& a) const override {
    return std::to_string(a.words()[0]);
  }
  RingElem parse(std::string_view text) const override {
    return make({std::stoll(std::string(text))});
  }

  static RingPtr create() { return std::make_shared<IntegerRing>(); }

 protected:
  std::vector<std::int64_t> zero_words() const override { return {0}; }
  std::vector<std::int64_t> one_words() const override { return {1}; }
};

inline ContextPtr make_context(const Poset& p, const RingPtr& r) {
  return AlgebraContext::create(p, r);
}

inline Poset chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel).poset;
}

inline Poset antichain(int n) { return Poset::from_relations(n, {}).poset; }

/// 0 < 2 and 1 < 2 — the smallest poset with a nontrivial automorphism that
/// moves labels the twist exponent depends on.
inline Poset vee() { return Poset::from_relations(3, {{0, 2}, {1, 2}}).poset; }

}  // namespace skewinc::testing
