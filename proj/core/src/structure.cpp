#include "skewinc/structure.hpp"

#include <algorithm>

namespace skewinc {

namespace {

/// Comparable pairs ordered by label difference (diagonal first), the order
/// in which the inverse recursions are well-founded.
std::vector<int> pairs_by_span(const AlgebraContext& ctx) {
  std::vector<int> order(ctx.pairs().size());
  for (std::size_t p = 0; p < order.size(); ++p) order[p] = static_cast<int>(p);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    auto [ai, aj] = ctx.pair_at(a);
    auto [bi, bj] = ctx.pair_at(b);
    return aj - ai < bj - bi;
  });
  return order;
}

SkewElement from_dense(const ContextPtr& ctx, const std::vector<RingElem>& v) {
  const RingElem zero = ctx->ring()->zero();
  std::vector<std::pair<int, RingElem>> coeffs;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v[p] != zero) coeffs.emplace_back(static_cast<int>(p), v[p]);
  }
  return SkewElement(ctx, std::move(coeffs));
}

std::vector<RingElem> diagonal_inverses(const SkewElement& f) {
  const auto& ctx = *f.context();
  const auto& ring = *ctx.ring();
  std::vector<RingElem> inv;
  inv.reserve(ctx.poset().size());
  for (int i = 0; i < ctx.poset().size(); ++i) {
    RingElem d = f.at(i, i);
    if (!ring.is_unit(d)) {
      throw std::move(Error(ErrorKind::NotAUnit,
                            "diagonal coefficient at element " +
                                std::to_string(i + 1) + " is not a unit: " +
                                ring.format(d))
                          .with_index(i));
    }
    inv.push_back(ring.inverse(d));
  }
  return inv;
}

}  // namespace

bool is_unit_elem(const SkewElement& f) {
  const auto& ctx = *f.context();
  ctx.check_element(f);
  for (int i = 0; i < ctx.poset().size(); ++i) {
    if (!ctx.ring()->is_unit(f.at(i, i))) return false;
  }
  return true;
}

SkewElement invert_elem(const SkewElement& f) {
  const ContextPtr ctx = f.context();
  ctx->check_element(f);
  const auto& ring = *ctx->ring();
  const std::vector<RingElem> inv_diag = diagonal_inverses(f);

  std::vector<RingElem> g(ctx->pairs().size(), ring.zero());
  for (int p : pairs_by_span(*ctx)) {
    auto [i, j] = ctx->pair_at(p);
    if (i == j) {
      g[p] = inv_diag[i];
      continue;
    }
    RingElem sum = ring.zero();
    for (int k : ctx->poset().interval(i, j)) {
      if (k == i) continue;
      RingElem fk = f.at(i, k);
      if (fk == ring.zero()) continue;
      sum = ring.add(sum,
                     ring.mul(fk, ctx->twist(k - i, g[ctx->pair_index(k, j)])));
    }
    g[p] = ring.neg(ring.mul(inv_diag[i], sum));
  }

  SkewElement result = from_dense(ctx, g);
  const SkewElement id = ctx->delta();
  if (ctx->multiply(f, result) != id || ctx->multiply(result, f) != id) {
    fail(ErrorKind::InvariantViolation,
         "inverse recursion produced a non-inverse");
  }
  return result;
}

SkewElement left_inverse_elem(const SkewElement& f) {
  const ContextPtr ctx = f.context();
  ctx->check_element(f);
  const auto& ring = *ctx->ring();
  const std::vector<RingElem> inv_diag = diagonal_inverses(f);

  std::vector<RingElem> h(ctx->pairs().size(), ring.zero());
  for (int p : pairs_by_span(*ctx)) {
    auto [i, j] = ctx->pair_at(p);
    if (i == j) {
      h[p] = inv_diag[i];
      continue;
    }
    RingElem sum = ring.zero();
    for (int k : ctx->poset().interval(i, j)) {
      if (k == j) continue;
      RingElem hk = h[ctx->pair_index(i, k)];
      if (hk == ring.zero()) continue;
      sum = ring.add(sum, ring.mul(hk, ctx->twist(k - i, f.at(k, j))));
    }
    h[p] = ring.neg(ring.mul(sum, ctx->twist(j - i, inv_diag[j])));
  }

  SkewElement result = from_dense(ctx, h);
  const SkewElement id = ctx->delta();
  if (ctx->multiply(result, f) != id || ctx->multiply(f, result) != id) {
    fail(ErrorKind::InvariantViolation,
         "left-inverse recursion produced a non-inverse");
  }
  return result;
}

bool jacobson_member_elem(const SkewElement& f) {
  const auto& ctx = *f.context();
  ctx.check_element(f);
  for (int i = 0; i < ctx.poset().size(); ++i) {
    if (!ctx.ring()->jacobson_member(f.at(i, i))) return false;
  }
  return true;
}

bool is_idempotent_elem(const SkewElement& f) {
  const auto& ctx = *f.context();
  ctx.check_element(f);
  return ctx.multiply(f, f) == f;
}

Diagonalization diagonalize_idempotent(const SkewElement& f) {
  const ContextPtr ctx = f.context();
  if (!is_idempotent_elem(f)) {
    fail(ErrorKind::InvalidArgument, "diagonalization requires an idempotent");
  }
  const SkewElement e = ctx->restrict_diagonal(f);
  const SkewElement g = ctx->sub(f, e);
  const SkewElement id = ctx->delta();
  // delta + (2e - delta) * g: diagonal is identically 1, hence a unit.
  const SkewElement h =
      ctx->add(id, ctx->multiply(ctx->sub(ctx->add(e, e), id), g));
  SkewElement h_inv = invert_elem(h);
  if (ctx->multiply(h, f) != ctx->multiply(e, h)) {
    fail(ErrorKind::InvariantViolation,
         "conjugation identity failed during diagonalization");
  }
  return Diagonalization{e, h, std::move(h_inv)};
}

PrimitiveAnalysis analyze_primitive(const SkewElement& f) {
  const ContextPtr ctx = f.context();
  PrimitiveAnalysis out;
  out.idempotent = is_idempotent_elem(f);
  if (!out.idempotent || f.is_zero()) return out;
  out.diag = diagonalize_idempotent(f);
  const auto& coeffs = out.diag->diagonal.coeffs();
  if (coeffs.size() != 1) return out;  // orthogonal split across elements
  const auto [p, value] = coeffs.front();
  if (!ctx->ring()->is_primitive_idempotent(value)) return out;
  out.primitive = true;
  out.element = ctx->pair_at(p).first;
  out.value = value;
  const RingPtr& ring = ctx->ring();
  if (ring->commutative() == std::optional<bool>(true)) {
    out.value_canonical = true;
  } else if (ring->finite()) {
    // Canonical as well when the ring has no idempotents besides 0 and 1.
    bool trivial_only = true;
    for (std::uint64_t t = 0; t < ring->size() && trivial_only; ++t) {
      RingElem r = ring->element_at(t);
      if (ring->is_idempotent(r) && r != ring->zero() && r != ring->one())
        trivial_only = false;
    }
    out.value_canonical = trivial_only;
  }
  return out;
}

bool is_primitive_idempotent_elem(const SkewElement& f) {
  return analyze_primitive(f).primitive;
}

bool center_member_elem(const SkewElement& f) {
  const auto& ctx = *f.context();
  ctx.check_element(f);
  if (!ctx.is_diagonal(f)) return false;
  const int n = ctx.poset().size();
  for (int i = 0; i < n; ++i) {
    if (!ctx.ring()->center_member(f.at(i, i))) return false;
  }
  for (auto [i, j] : ctx.pairs()) {
    if (i == j) continue;
    if (f.at(i, i) != ctx.twist(j - i, f.at(j, j))) return false;
  }
  return true;
}

std::vector<SkewElement> center_enumerate(const ContextPtr& ctx,
                                          std::uint64_t bound) {
  const auto& ring = *ctx->ring();
  std::vector<RingElem> central;
  for (const RingElem& r : ring.enumerate()) {
    if (ring.center_member(r)) central.push_back(r);
  }
  const int n = ctx->poset().size();
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    if (count > (std::uint64_t(1) << 40) / central.size()) {
      count = std::uint64_t(1) << 62;
      break;
    }
    count *= central.size();
  }
  if (count > bound) {
    fail(ErrorKind::UnsupportedQuery,
         "center search space exceeds bound " + std::to_string(bound));
  }

  std::vector<SkewElement> out;
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    bool ok = true;
    for (auto [i, j] : ctx->pairs()) {
      if (i == j) continue;
      if (central[digits[i]] != ctx->twist(j - i, central[digits[j]])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      std::vector<std::pair<int, RingElem>> coeffs;
      for (int i = 0; i < n; ++i) {
        if (central[digits[i]] != ring.zero()) {
          coeffs.emplace_back(ctx->pair_index(i, i), central[digits[i]]);
        }
      }
      out.push_back(SkewElement(ctx, std::move(coeffs)));
    }
    int pos = 0;
    while (pos < n && ++digits[pos] == central.size()) digits[pos++] = 0;
    if (pos == n) break;
  }
  return out;
}

bool center_component_invariant(const SkewElement& f) {
  const auto& ctx = *f.context();
  ctx.check_element(f);
  for (const auto& comp : ctx.poset().components()) {
    for (std::size_t a = 0; a + 1 < comp.size(); ++a) {
      int i = comp[a], j = comp[a + 1];
      if (ctx.twist(i, f.at(i, i)) != ctx.twist(j, f.at(j, j))) return false;
    }
  }
  return true;
}

}  // namespace skewinc
