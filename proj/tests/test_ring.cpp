#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "skewinc/errors.hpp"
#include "skewinc/ring.hpp"
#include "support/oracles.hpp"

using namespace skewinc;
using testing::thrown_kind;
using testing::thrown_message;

namespace {

// Every coefficient ring the command-line surface accepts, small enough for
// exhaustive loops.  Sizes: 2, 4, 8, 4, 8, 9, 9, 4, 8.
const std::vector<std::string> kCatalog = {
    "zmod:2",          "zmod:4",         "zmod:8",
    "gf:2:2:frobenius", "gf:2:3:frobenius", "gf:3:2:frobenius",
    "prodswap:zmod:3", "prodproj:zmod:2", "trunc:2:3:tsq",
};

std::vector<RingPtr> catalog() {
  std::vector<RingPtr> out;
  for (const auto& spec : kCatalog) out.push_back(parse_ring_spec(spec));
  return out;
}

}  // namespace

TEST_CASE("modular arithmetic matches hand values") {
  auto z4 = make_zmod(4);
  CHECK(z4->add(z4->parse("2"), z4->parse("3")) == z4->parse("1"));
  CHECK(z4->mul(z4->parse("2"), z4->parse("3")) == z4->parse("2"));
  CHECK(z4->neg(z4->parse("1")) == z4->parse("3"));
  CHECK(z4->neg(z4->zero()) == z4->zero());
  CHECK(z4->sub(z4->parse("1"), z4->parse("3")) == z4->parse("2"));
  // Parsing normalizes representatives into [0, n).
  CHECK(z4->parse("-1") == z4->parse("3"));
  CHECK(z4->parse("7") == z4->parse("3"));
  CHECK(z4->format(z4->parse("-1")) == "3");
}

TEST_CASE("finite field arithmetic satisfies the defining relation") {
  auto gf4 = make_gf(2, 2);
  const RingElem w = gf4->parse("w");
  CHECK(gf4->mul(w, w) == gf4->parse("w+1"));
  CHECK(gf4->format(gf4->mul(w, w)) == "w+1");
  CHECK(gf4->size() == 4);
  // The twist is the Frobenius a -> a^p.
  CHECK(gf4->sigma(w) == gf4->mul(w, w));
  CHECK(gf4->sigma(gf4->one()) == gf4->one());

  auto gf8 = make_gf(2, 3);
  CHECK(gf8->size() == 8);
  for (const RingElem& a : gf8->enumerate()) {
    CHECK(gf8->sigma(a) == gf8->mul(a, a));
  }
  auto gf9 = make_gf(3, 2);
  CHECK(gf9->size() == 9);
  for (const RingElem& a : gf9->enumerate()) {
    CHECK(gf9->sigma(a) == gf9->mul(gf9->mul(a, a), a));
  }
}

TEST_CASE("ring axioms hold exhaustively on the catalog") {
  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    const std::vector<RingElem> all = ring->enumerate();
    REQUIRE(all.size() == ring->size());
    for (const RingElem& a : all) {
      CHECK(ring->add(ring->zero(), a) == a);
      CHECK(ring->add(a, ring->neg(a)) == ring->zero());
      CHECK(ring->mul(ring->one(), a) == a);
      CHECK(ring->mul(a, ring->one()) == a);
    }
    for (const RingElem& a : all) {
      for (const RingElem& b : all) {
        CHECK(ring->add(a, b) == ring->add(b, a));
        if (ring->commutative() == std::optional<bool>(true)) {
          CHECK(ring->mul(a, b) == ring->mul(b, a));
        }
        for (const RingElem& c : all) {
          CHECK(ring->add(ring->add(a, b), c) == ring->add(a, ring->add(b, c)));
          CHECK(ring->mul(ring->mul(a, b), c) == ring->mul(a, ring->mul(b, c)));
          CHECK(ring->mul(a, ring->add(b, c)) ==
                ring->add(ring->mul(a, b), ring->mul(a, c)));
          CHECK(ring->mul(ring->add(a, b), c) ==
                ring->add(ring->mul(a, c), ring->mul(b, c)));
        }
      }
    }
  }
}

TEST_CASE("the twist is a unital additive multiplicative endomorphism") {
  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    const std::vector<RingElem> all = ring->enumerate();
    CHECK(ring->sigma(ring->zero()) == ring->zero());
    CHECK(ring->sigma(ring->one()) == ring->one());
    for (const RingElem& a : all) {
      for (const RingElem& b : all) {
        CHECK(ring->sigma(ring->add(a, b)) ==
              ring->add(ring->sigma(a), ring->sigma(b)));
        CHECK(ring->sigma(ring->mul(a, b)) ==
              ring->mul(ring->sigma(a), ring->sigma(b)));
      }
    }
  }
}

TEST_CASE("twist powers iterate the twist") {
  auto proj = parse_ring_spec("prodproj:zmod:2");
  const RingElem ab = proj->parse("(1,0)");
  CHECK(proj->sigma_pow(0, ab) == ab);
  CHECK(proj->sigma_pow(1, ab) == proj->parse("(1,1)"));
  CHECK(proj->sigma_pow(2, ab) == proj->parse("(1,1)"));

  auto swap = parse_ring_spec("prodswap:zmod:3");
  const RingElem xy = swap->parse("(1,2)");
  CHECK(swap->sigma_pow(1, xy) == swap->parse("(2,1)"));
  CHECK(swap->sigma_pow(2, xy) == xy);

  auto gf4 = make_gf(2, 2);
  for (const RingElem& a : gf4->enumerate()) {
    CHECK(gf4->sigma_pow(2, a) == a);
  }

  auto tr = make_trunc_poly(2, 3);
  const RingElem t = tr->parse("t");
  CHECK(tr->sigma(t) == tr->parse("t^2"));
  CHECK(tr->sigma_pow(2, t) == tr->zero());  // t^4 vanishes past degree 2

  CHECK(thrown_kind([&] { (void)gf4->sigma_pow(-1, gf4->one()); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("units and inverses in small rings") {
  auto z4 = make_zmod(4);
  CHECK(z4->is_unit(z4->parse("3")));
  CHECK(z4->inverse(z4->parse("3")) == z4->parse("3"));
  CHECK_FALSE(z4->is_unit(z4->parse("2")));
  CHECK(thrown_kind([&] { (void)z4->inverse(z4->parse("2")); }) ==
        ErrorKind::NotAUnit);

  auto gf4 = make_gf(2, 2);
  CHECK(gf4->inverse(gf4->parse("w")) == gf4->parse("w+1"));
  CHECK(thrown_message([&] { (void)gf4->inverse(gf4->zero()); }) ==
        "not a unit: 0");
}

TEST_CASE("unit detection agrees with exhaustive search") {
  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    const std::vector<RingElem> all = ring->enumerate();
    for (const RingElem& a : all) {
      bool invertible = false;
      for (const RingElem& b : all) {
        if (ring->mul(a, b) == ring->one() && ring->mul(b, a) == ring->one()) {
          invertible = true;
          break;
        }
      }
      CHECK(ring->is_unit(a) == invertible);
      if (invertible) {
        const RingElem inv = ring->inverse(a);
        CHECK(ring->mul(a, inv) == ring->one());
        CHECK(ring->mul(inv, a) == ring->one());
      }
    }
  }
}

TEST_CASE("twist powers map units to units") {
  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    const int n = static_cast<int>(ring->size());
    for (const RingElem& a : ring->enumerate()) {
      if (!ring->is_unit(a)) continue;
      for (int k = 0; k <= n; ++k) {
        CHECK(ring->is_unit(ring->sigma_pow(k, a)));
      }
    }
  }
}

TEST_CASE("idempotents and primitivity in product rings") {
  auto proj = parse_ring_spec("prodproj:zmod:2");
  CHECK(proj->is_idempotent(proj->parse("(1,0)")));
  CHECK(proj->is_primitive_idempotent(proj->parse("(1,0)")));
  CHECK(proj->is_primitive_idempotent(proj->parse("(0,1)")));
  CHECK(proj->is_idempotent(proj->parse("(1,1)")));
  CHECK_FALSE(proj->is_primitive_idempotent(proj->parse("(1,1)")));
  CHECK_FALSE(proj->is_primitive_idempotent(proj->zero()));

  auto z4 = make_zmod(4);
  for (const RingElem& a : z4->enumerate()) {
    CHECK(z4->is_idempotent(a) == (a == z4->zero() || a == z4->one()));
  }
  auto gf4 = make_gf(2, 2);
  for (const RingElem& a : gf4->enumerate()) {
    CHECK(gf4->is_idempotent(a) == (a == gf4->zero() || a == gf4->one()));
    CHECK(gf4->is_primitive_idempotent(a) == (a == gf4->one()));
  }
}

TEST_CASE("radical membership matches hand values and is an ideal") {
  auto z4 = make_zmod(4);
  CHECK(z4->jacobson_member(z4->parse("2")));
  CHECK(z4->jacobson_member(z4->zero()));
  CHECK_FALSE(z4->jacobson_member(z4->one()));
  CHECK_FALSE(z4->jacobson_member(z4->parse("3")));

  auto gf4 = make_gf(2, 2);
  for (const RingElem& a : gf4->enumerate()) {
    CHECK(gf4->jacobson_member(a) == (a == gf4->zero()));
  }

  // Truncated polynomials are local: the radical is exactly the elements
  // with zero constant term.
  auto tr = make_trunc_poly(2, 3);
  int members = 0;
  for (const RingElem& a : tr->enumerate()) {
    const bool no_constant = !tr->is_unit(a);
    CHECK(tr->jacobson_member(a) == no_constant);
    if (tr->jacobson_member(a)) ++members;
  }
  CHECK(members == 4);

  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    CHECK(ring->jacobson_member(ring->zero()));
    CHECK_FALSE(ring->jacobson_member(ring->one()));
    std::vector<RingElem> rad;
    const std::vector<RingElem> all = ring->enumerate();
    for (const RingElem& a : all) {
      if (ring->jacobson_member(a)) rad.push_back(a);
    }
    for (const RingElem& a : rad) {
      for (const RingElem& b : rad) {
        CHECK(ring->jacobson_member(ring->add(a, b)));
      }
      for (const RingElem& r : all) {
        CHECK(ring->jacobson_member(ring->mul(r, a)));
        CHECK(ring->jacobson_member(ring->mul(a, r)));
      }
    }
  }
}

TEST_CASE("center membership on commutative rings") {
  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    for (const RingElem& a : ring->enumerate()) {
      CHECK(ring->center_member(a));
    }
  }
  // Commutativity short-circuits enumeration, so this works on an infinite
  // ring too.
  auto z = testing::IntegerRing::create();
  CHECK(z->center_member(z->parse("42")));
}

TEST_CASE("enumeration indexes every element exactly once") {
  auto z4 = make_zmod(4);
  std::vector<std::string> got;
  for (const RingElem& a : z4->enumerate()) got.push_back(z4->format(a));
  CHECK(got == std::vector<std::string>{"0", "1", "2", "3"});

  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    const std::vector<RingElem> all = ring->enumerate();
    CHECK(all.size() == ring->size());
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < all.size(); ++i) {
      CHECK(ring->index_of(all[i]) == i);
      CHECK(ring->element_at(i) == all[i]);
      seen.insert(ring->format(all[i]));
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("format and parse round trip on the whole catalog") {
  for (const RingPtr& ring : catalog()) {
    CAPTURE(ring->key());
    for (const RingElem& a : ring->enumerate()) {
      CHECK(ring->parse(ring->format(a)) == a);
    }
  }
}

TEST_CASE("literal syntax details") {
  auto z8 = make_zmod(8);
  CHECK(z8->parse("-5") == z8->parse("3"));

  auto gf4 = make_gf(2, 2);
  CHECK(gf4->parse("w^2") == gf4->parse("w+1"));  // reduced by the modulus
  CHECK(gf4->parse("1*w+1") == gf4->parse("w+1"));
  CHECK(gf4->parse(" w + 1 ") == gf4->parse("w+1"));

  auto tr = make_trunc_poly(2, 3);
  CHECK(tr->parse("t^5") == tr->zero());  // truncated away
  CHECK(tr->parse("2*t") == tr->zero());  // coefficient reduced mod 2
  CHECK(tr->parse("t^2+t+1") == tr->parse("1+t+t^2"));
  CHECK(tr->format(tr->parse("1+t^2")) == "t^2+1");

  auto nested = parse_ring_spec("prodswap:prodproj:zmod:2");
  const RingElem pair = nested->parse("((1,0),(0,1))");
  CHECK(nested->format(pair) == "((1,0),(0,1))");
  CHECK(nested->sigma(pair) == nested->parse("((0,1),(1,0))"));

  CHECK(thrown_kind([&] { (void)gf4->parse(""); }) == ErrorKind::Parse);
  CHECK(thrown_kind([&] { (void)gf4->parse("1++1"); }) == ErrorKind::Parse);
  CHECK(thrown_kind([&] { (void)gf4->parse("w**2"); }) == ErrorKind::Parse);
  CHECK(thrown_kind([&] { (void)gf4->parse("-1*w"); }) == ErrorKind::Parse);
  CHECK(thrown_kind([&] { (void)z8->parse("x"); }) == ErrorKind::Parse);

  auto gf5 = make_gf(5, 1);
  CHECK(gf5->parse("3") == gf5->element_at(3));
  CHECK(thrown_message([&] { (void)gf5->parse("w"); }) ==
        "no generator w in GF(5); use integer literals");
}

TEST_CASE("operands must belong to the ring") {
  auto z4 = make_zmod(4);
  auto gf4 = make_gf(2, 2);
  CHECK(thrown_kind([&] { (void)z4->add(z4->one(), gf4->one()); }) ==
        ErrorKind::SpecMismatch);
  CHECK(thrown_kind([&] { (void)gf4->neg(z4->one()); }) ==
        ErrorKind::SpecMismatch);

  // Two independently constructed handles to the same ring interoperate.
  auto z4b = make_zmod(4);
  CHECK(same_ring(*z4, *z4b));
  CHECK(z4->add(z4->parse("3"), z4b->parse("2")) == z4b->parse("1"));
}

TEST_CASE("ring spec strings") {
  CHECK(parse_ring_spec("zmod:4")->key() == "zmod:4");
  CHECK(parse_ring_spec("gf:2:2:frobenius")->key() == "gf:2:2:frobenius");
  CHECK(parse_ring_spec("prodswap:zmod:3")->key() == "prodswap:zmod:3");
  CHECK(parse_ring_spec("prodproj:zmod:2")->key() == "prodproj:zmod:2");
  CHECK(parse_ring_spec("trunc:2:3:tsq")->key() == "trunc:2:3:tsq");
  CHECK(parse_ring_spec("prodswap:prodproj:zmod:2")->size() == 16);

  for (const char* bad : {"zmod:1", "gf:4:1:frobenius", "gf:2:25:frobenius",
                          "trunc:2:0:tsq", "frob:2", "zmod:", ""}) {
    CAPTURE(bad);
    CHECK(thrown_kind([&] { (void)parse_ring_spec(bad); }) == ErrorKind::Parse);
  }
  const std::string msg =
      thrown_message([] { (void)parse_ring_spec("zmod:1"); });
  CHECK(msg.find("bad ring spec 'zmod:1'") == 0);
  const std::string unknown =
      thrown_message([] { (void)parse_ring_spec("frob:2"); });
  CHECK(unknown.find("unknown ring spec") == 0);
}

TEST_CASE("queries that need enumeration refuse infinite rings") {
  auto z = testing::IntegerRing::create();
  CHECK(z->is_unit(z->one()));
  CHECK(z->is_unit(z->parse("-1")));
  CHECK_FALSE(z->is_unit(z->parse("2")));
  CHECK(thrown_kind([&] { (void)z->enumerate(); }) ==
        ErrorKind::UnsupportedQuery);
  CHECK(thrown_kind([&] { (void)z->jacobson_member(z->zero()); }) ==
        ErrorKind::UnsupportedQuery);
  CHECK(thrown_kind([&] { (void)z->is_primitive_idempotent(z->one()); }) ==
        ErrorKind::UnsupportedQuery);
}
