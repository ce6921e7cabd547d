#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewinc/algebra.hpp"
#include "skewinc/errors.hpp"
#include "skewinc/poset.hpp"
#include "skewinc/ring.hpp"

namespace skewinc {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

AxiomReport check_axioms(const ContextPtr& ctx, std::uint64_t samples,
                         std::uint64_t seed) {
  if (!ctx) fail(ErrorKind::InvalidArgument, "check_axioms requires a context");
  const Ring& ring = *ctx->ring();
  if (!ring.finite())
    fail(ErrorKind::UnsupportedQuery,
         "axiom checking requires a finite coefficient ring");

  AxiomReport report;
  std::uint64_t state = seed;
  const std::uint64_t ring_size = ring.size();
  const int pair_count = static_cast<int>(ctx->pairs().size());

  auto random_ring_elem = [&] {
    return ring.element_at(splitmix64(state) % ring_size);
  };
  auto random_elem = [&] {
    std::vector<std::pair<int, RingElem>> coeffs;
    for (int p = 0; p < pair_count; ++p) {
      RingElem c = random_ring_elem();
      if (c != ring.zero()) coeffs.emplace_back(p, std::move(c));
    }
    return SkewElement(ctx, std::move(coeffs));
  };
  auto flunk = [&](std::string what) {
    report.ok = false;
    report.failure = std::move(what);
  };

  // Products of spanning elements r*e[i,j] and s*e[k,l]: zero unless j == k,
  // in which case the coefficients multiply with the right factor twisted
  // (j - i) times. Exhaustive over ring pairs for small rings, else sampled.
  {
    std::vector<std::pair<RingElem, RingElem>> ring_pairs;
    if (ring_size * ring_size <= 4096) {
      for (std::uint64_t a = 0; a < ring_size; ++a)
        for (std::uint64_t b = 0; b < ring_size; ++b)
          ring_pairs.emplace_back(ring.element_at(a), ring.element_at(b));
    } else {
      for (int t = 0; t < 256; ++t)
        ring_pairs.emplace_back(random_ring_elem(), random_ring_elem());
    }
    for (const auto& [r, s] : ring_pairs) {
      for (int p = 0; p < pair_count && report.ok; ++p) {
        auto [i, j] = ctx->pair_at(p);
        for (int q = 0; q < pair_count; ++q) {
          auto [k, l] = ctx->pair_at(q);
          SkewElement got =
              ctx->multiply(ctx->term(r, i, j), ctx->term(s, k, l));
          SkewElement want =
              (j == k) ? ctx->term(ring.mul(r, ctx->twist(j - i, s)), i, l)
                       : ctx->zero();
          ++report.checks;
          if (got != want) {
            flunk("spanning product law failed at (" + ring.format(r) +
                  ")*e[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  "] times (" + ring.format(s) + ")*e[" +
                  std::to_string(k + 1) + "," + std::to_string(l + 1) + "]");
            break;
          }
        }
      }
      if (!report.ok) return report;
    }
  }

  // Kronecker identity on the basis: e[i,j]*e[k,l] = e[i,l] when j == k,
  // zero otherwise.
  for (int p = 0; p < pair_count; ++p) {
    auto [i, j] = ctx->pair_at(p);
    for (int q = 0; q < pair_count; ++q) {
      auto [k, l] = ctx->pair_at(q);
      SkewElement got = ctx->multiply(ctx->basis(i, j), ctx->basis(k, l));
      SkewElement want = (j == k) ? ctx->basis(i, l) : ctx->zero();
      ++report.checks;
      if (got != want) {
        flunk("basis product failed at e[" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + "] times e[" + std::to_string(k + 1) +
              "," + std::to_string(l + 1) + "]");
        return report;
      }
    }
  }

  std::uint64_t count = 0;
  bool exhaustive = false;
  try {
    count = ctx->element_count();
    exhaustive = count <= 16;
  } catch (const Error&) {
    exhaustive = false;  // too many elements to even count; sample
  }

  std::vector<SkewElement> pool;
  if (exhaustive) {
    for (std::uint64_t t = 0; t < count; ++t) pool.push_back(ctx->element_at(t));
  } else {
    std::uint64_t pool_size = samples < 64 ? (samples < 2 ? 2 : samples) : 64;
    for (std::uint64_t t = 0; t < pool_size; ++t) pool.push_back(random_elem());
  }

  // Sandwich identity: e[x]*f*e[y] picks out f's coefficient at (x, y) as
  // f(x,y)*e[x,y], and vanishes when x and y are incomparable. Also checks
  // that delta is a two-sided identity and that coefficient-wise left
  // scaling agrees with multiplication by the scalar's diagonal embedding.
  const int n = ctx->poset().size();
  for (const SkewElement& f : pool) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        SkewElement got =
            ctx->multiply(ctx->multiply(ctx->basis(x, x), f), ctx->basis(y, y));
        SkewElement want = ctx->poset().leq(x, y)
                               ? ctx->term(f.at(x, y), x, y)
                               : ctx->zero();
        ++report.checks;
        if (got != want) {
          flunk("corner extraction failed at x" + std::to_string(x + 1) +
                ", x" + std::to_string(y + 1) + " for f = " + ctx->format(f));
          return report;
        }
      }
    }
    ++report.checks;
    if (ctx->multiply(ctx->delta(), f) != f ||
        ctx->multiply(f, ctx->delta()) != f) {
      flunk("delta is not a two-sided identity on f = " + ctx->format(f));
      return report;
    }
    RingElem r = random_ring_elem();
    ++report.checks;
    if (ctx->scale(r, f) != ctx->multiply(ctx->embed(r), f)) {
      flunk("left scaling disagrees with diagonal embedding for r = " +
            ring.format(r) + ", f = " + ctx->format(f));
      return report;
    }
  }

  // Diagonal multiplicativity plus pairwise additive laws.
  for (std::size_t a = 0; a < pool.size(); ++a) {
    const SkewElement& f = pool[a];
    const SkewElement& g = pool[(a * 31 + 7) % pool.size()];
    SkewElement fg = ctx->multiply(f, g);
    for (int x = 0; x < n; ++x) {
      ++report.checks;
      if (fg.at(x, x) != ring.mul(f.at(x, x), g.at(x, x))) {
        flunk("diagonal of a product is not the product of diagonals at x" +
              std::to_string(x + 1) + " for f = " + ctx->format(f) +
              ", g = " + ctx->format(g));
        return report;
      }
    }
    ++report.checks;
    if (ctx->add(f, g) != ctx->add(g, f) ||
        ctx->add(f, ctx->neg(f)) != ctx->zero() ||
        ctx->sub(f, g) != ctx->add(f, ctx->neg(g))) {
      flunk("additive group law failed for f = " + ctx->format(f) +
            ", g = " + ctx->format(g));
      return report;
    }
  }

  // Associativity and distributivity over triples: exhaustive for tiny
  // algebras, seeded random otherwise.
  auto check_triple = [&](const SkewElement& f, const SkewElement& g,
                          const SkewElement& h) {
    ++report.checks;
    if (ctx->multiply(ctx->multiply(f, g), h) !=
        ctx->multiply(f, ctx->multiply(g, h))) {
      flunk("associativity failed for f = " + ctx->format(f) +
            ", g = " + ctx->format(g) + ", h = " + ctx->format(h));
      return false;
    }
    if (ctx->multiply(f, ctx->add(g, h)) !=
            ctx->add(ctx->multiply(f, g), ctx->multiply(f, h)) ||
        ctx->multiply(ctx->add(f, g), h) !=
            ctx->add(ctx->multiply(f, h), ctx->multiply(g, h))) {
      flunk("distributivity failed for f = " + ctx->format(f) +
            ", g = " + ctx->format(g) + ", h = " + ctx->format(h));
      return false;
    }
    RingElem r = random_ring_elem();
    if (ctx->multiply(ctx->scale(r, f), g) != ctx->scale(r, ctx->multiply(f, g))) {
      flunk("left scalar does not pass through products for r = " +
            ring.format(r) + ", f = " + ctx->format(f) +
            ", g = " + ctx->format(g));
      return false;
    }
    return true;
  };

  if (exhaustive) {
    for (const SkewElement& f : pool)
      for (const SkewElement& g : pool)
        for (const SkewElement& h : pool)
          if (!check_triple(f, g, h)) return report;
  } else {
    for (std::uint64_t t = 0; t < samples; ++t)
      if (!check_triple(random_elem(), random_elem(), random_elem()))
        return report;
  }

  return report;
}

}  // namespace skewinc
