#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "skewinc/errors.hpp"
#include "skewinc/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace skewinc;
using testing::thrown_kind;
using testing::thrown_message;

namespace {

ContextPtr ctx_of(const Poset& p, const char* ring_spec) {
  return AlgebraContext::create(p, parse_ring_spec(ring_spec));
}

std::filesystem::path write_temp_poset(const std::string& name,
                                       const Poset& p) {
  const auto dir = std::filesystem::temp_directory_path() / "skewinc_wtest";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream out(path);
  out << format_poset(p);
  return path;
}

}  // namespace

TEST_CASE("identity and endomorphism-power ring maps") {
  auto gf4 = make_gf(2, 2);
  RingIso id = ring_iso_identity(gf4);
  CHECK_FALSE(ring_iso_defect(id).has_value());
  const RingElem w = gf4->parse("w");
  CHECK(id.apply(w) == w);

  RingIso frob = ring_iso_sigma(gf4);
  CHECK_FALSE(ring_iso_defect(frob).has_value());
  CHECK(frob.apply(w) == gf4->parse("w+1"));
  CHECK(ring_iso_sigma(gf4, 0).table == id.table);
  CHECK(ring_iso_sigma(gf4, 2).table == id.table);

  // A non-bijective endomorphism is reported, not silently accepted.
  auto proj = parse_ring_spec("prodproj:zmod:2");
  auto defect = ring_iso_defect(ring_iso_sigma(proj));
  REQUIRE(defect.has_value());
  CHECK(defect->find("not injective") == 0);

  CHECK(thrown_kind([&] { (void)ring_iso_sigma(gf4, -1); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("transport witnesses verify and act multiplicatively") {
  auto src = ctx_of(testing::chain(2), "gf:2:2:frobenius");
  auto tgt = ctx_of(testing::chain(2), "gf:2:2:frobenius");
  RingIsoWitness w =
      build_psi(src, tgt, {0, 1}, ring_iso_identity(src->ring()));
  CHECK(w.target_relabel == std::vector<int>{0, 1});
  CHECK(verify_ring_iso(w).ok);
  CHECK(apply_witness(w, src->delta()) == w.target->delta());

  const auto all = testing::all_elements(src);
  for (const SkewElement& f : all) {
    for (const SkewElement& g : all) {
      CHECK(apply_witness(w, src->multiply(f, g)) ==
            w.target->multiply(apply_witness(w, f), apply_witness(w, g)));
    }
  }
}

TEST_CASE("a twist-power transport maps coefficients pointwise") {
  auto src = ctx_of(testing::chain(3), "gf:2:2:frobenius");
  auto tgt = ctx_of(testing::chain(3), "gf:2:2:frobenius");
  const RingIso frob = ring_iso_sigma(src->ring());
  RingIsoWitness w = build_psi(src, tgt, {0, 1, 2}, frob);
  CHECK(verify_ring_iso(w).ok);
  for (const RingElem& r : src->ring()->enumerate()) {
    for (auto [i, j] : src->pairs()) {
      CHECK(apply_witness(w, src->term(r, i, j)) ==
            w.target->term(frob.apply(r), i, j));
    }
  }
}

TEST_CASE("alpha must be an order isomorphism") {
  auto src = ctx_of(testing::chain(2), "zmod:2");
  auto tgt = ctx_of(testing::chain(2), "zmod:2");
  const RingIso id = ring_iso_identity(src->ring());
  CHECK(thrown_message([&] { (void)build_psi(src, tgt, {0}, id); }) ==
        "alpha has the wrong arity");
  CHECK(thrown_message([&] { (void)build_psi(src, tgt, {0, 0}, id); }) ==
        "alpha is not a bijection");
  CHECK(thrown_kind([&] { (void)build_psi(src, tgt, {1, 0}, id); }) ==
        ErrorKind::InvalidArgument);

  auto vee = ctx_of(testing::vee(), "zmod:2");
  auto c3 = ctx_of(testing::chain(3), "zmod:2");
  CHECK(thrown_kind([&] { (void)build_psi(c3, vee, {0, 1, 2}, id); }) ==
        ErrorKind::InvalidArgument);

  auto z4 = ctx_of(testing::chain(2), "zmod:4");
  CHECK(thrown_kind([&] { (void)build_psi(src, z4, {0, 1}, id); }) ==
        ErrorKind::SpecMismatch);
}

TEST_CASE("phi must be an isomorphism that intertwines the twists") {
  // Same underlying product ring, opposite endomorphisms: the identity is a
  // perfectly good ring isomorphism yet fails to intertwine.
  auto swap = ctx_of(testing::chain(2), "prodswap:zmod:2");
  auto proj = ctx_of(testing::chain(2), "prodproj:zmod:2");
  RingIso cross = ring_iso_identity(swap->ring());
  cross.target = proj->ring();
  CHECK_FALSE(ring_iso_defect(cross).has_value());
  const std::string msg =
      thrown_message([&] { (void)build_psi(swap, proj, {0, 1}, cross); });
  CHECK(msg.find("phi does not intertwine the endomorphisms") == 0);
  CHECK(msg.find("witnessing element") != std::string::npos);
  CHECK(thrown_kind([&] { (void)build_psi(swap, proj, {0, 1}, cross); }) ==
        ErrorKind::HypothesisViolation);

  // A non-bijective phi is refused up front.
  const std::string bad = thrown_message(
      [&] { (void)build_psi(proj, proj, {0, 1}, ring_iso_sigma(proj->ring())); });
  CHECK(bad.find("phi is not a ring isomorphism") == 0);
}

TEST_CASE("verification rejects corrupted witnesses") {
  auto src = ctx_of(testing::chain(2), "gf:2:2:frobenius");
  auto tgt = ctx_of(testing::chain(2), "gf:2:2:frobenius");
  RingIsoWitness good =
      build_psi(src, tgt, {0, 1}, ring_iso_identity(src->ring()));
  REQUIRE(verify_ring_iso(good).ok);

  RingIsoWitness broken = good;
  broken.basis_images[src->pair_index(0, 0)] = broken.target->zero();
  VerifyReport rep = verify_ring_iso(broken);
  CHECK_FALSE(rep.ok);
  CHECK(rep.failure == "image of delta is not delta");

  // Rescaling e[1,2] by a unit is conjugation by a diagonal unit — a real
  // automorphism — so verification must accept it...
  RingIsoWitness rescaled = good;
  const int off = src->pair_index(0, 1);
  rescaled.basis_images[off] =
      rescaled.target->term(tgt->ring()->parse("w"), 0, 1);
  CHECK(verify_ring_iso(rescaled).ok);

  // ...whereas sending a nilpotent to the identity breaks multiplicativity.
  RingIsoWitness twisted = good;
  twisted.basis_images[off] = twisted.target->delta();
  VerifyReport rep2 = verify_ring_iso(twisted);
  CHECK_FALSE(rep2.ok);
  CHECK_FALSE(rep2.failure.empty());

  // Collapsing e[1,2] to zero stays multiplicative but is not injective.
  RingIsoWitness collapsed = good;
  collapsed.basis_images[off] = collapsed.target->zero();
  VerifyReport rep3 = verify_ring_iso(collapsed);
  CHECK_FALSE(rep3.ok);
  CHECK(rep3.failure.find("injective") != std::string::npos);

  RingIsoWitness scalars = good;
  scalars.scalar_images[src->ring()->index_of(src->ring()->parse("w"))] =
      scalars.target->delta();
  CHECK_FALSE(verify_ring_iso(scalars).ok);
}

TEST_CASE("poset map recovery returns the original isomorphism") {
  // Every automorphism of every 3-element poset, over Z/2.
  for (const Poset& p : enumerate_posets(3)) {
    auto src = AlgebraContext::create(p, make_zmod(2));
    auto tgt = AlgebraContext::create(p, make_zmod(2));
    for (const auto& alpha : poset_isomorphisms(p, p)) {
      RingIsoWitness w =
          build_psi(src, tgt, alpha, ring_iso_identity(src->ring()));
      REQUIRE(verify_ring_iso(w).ok);
      PosetMapResult r = recover_poset_map(w);
      CHECK(r.alpha == alpha);
      CHECK_FALSE(r.exploratory);
      CHECK(r.notes.empty());
      // Each certificate conjugates the recovered slot onto the image.
      for (int x = 0; x < p.size(); ++x) {
        const SkewElement& h = r.certificates[x];
        CHECK(is_unit_elem(h));
        const SkewElement image = w.basis_images[src->pair_index(x, x)];
        const int ax = r.alpha_internal[x];
        CHECK(w.target->multiply(h, image) ==
              w.target->multiply(w.target->basis(ax, ax), h));
      }
    }
  }

  // Distinct but isomorphic posets: a chain plus an isolated point, labeled
  // two different ways.
  const Poset p = parse_poset_text("elements 3\n1 < 2\n").poset;
  const Poset q = parse_poset_text("elements 3\n2 < 3\n").poset;
  auto src = AlgebraContext::create(p, make_zmod(2));
  auto tgt = AlgebraContext::create(q, make_zmod(2));
  const std::vector<int> alpha = {1, 2, 0};
  RingIsoWitness w = build_psi(src, tgt, alpha, ring_iso_identity(src->ring()));
  CHECK(recover_poset_map(w).alpha == alpha);

  // With a genuine coefficient twist on a poset with a flip.
  auto gsrc = ctx_of(testing::vee(), "gf:2:2:frobenius");
  auto gtgt = ctx_of(testing::vee(), "gf:2:2:frobenius");
  const std::vector<int> flip = {1, 0, 2};
  RingIsoWitness gw =
      build_psi(gsrc, gtgt, flip, ring_iso_sigma(gsrc->ring()));
  REQUIRE(verify_ring_iso(gw).ok);
  CHECK(recover_poset_map(gw).alpha == flip);
}

TEST_CASE("recovery refuses rings with a nontrivial idempotent") {
  auto src = ctx_of(testing::chain(2), "prodproj:zmod:2");
  auto tgt = ctx_of(testing::chain(2), "prodproj:zmod:2");
  RingIsoWitness w =
      build_psi(src, tgt, {0, 1}, ring_iso_identity(src->ring()));
  REQUIRE(verify_ring_iso(w).ok);
  CHECK(thrown_message([&] { (void)recover_poset_map(w); }) ==
        "recovery requires coefficient rings with only trivial idempotents; "
        "ring prodproj:zmod:2 has nontrivial idempotent (0,1)");
  CHECK(thrown_kind([&] { (void)recover_poset_map(w); }) ==
        ErrorKind::HypothesisViolation);

  // Research mode records the refusal and presses on.
  PosetMapResult r = recover_poset_map(w, true);
  CHECK(r.exploratory);
  REQUIRE_FALSE(r.notes.empty());
  CHECK(r.notes[0].find("continuing exploratorily") != std::string::npos);
  CHECK(r.alpha == std::vector<int>{0, 1});
}

TEST_CASE("comparable pairs are witnessed by corner products") {
  for (const Poset& p :
       {testing::vee(), testing::chain(3), testing::antichain(2)}) {
    auto ctx = AlgebraContext::create(p, make_zmod(2));
    const auto all = testing::all_elements(ctx);
    for (int x = 0; x < p.size(); ++x) {
      for (int y = 0; y < p.size(); ++y) {
        auto witness = comparable_pair_witness(ctx, x, y);
        CHECK(witness.has_value() == p.leq(x, y));
        if (witness) {
          CHECK_FALSE(ctx->sandwich(*witness, x, y).is_zero());
        } else {
          for (const SkewElement& f : all) {
            CHECK(ctx->sandwich(f, x, y).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("fingerprints count the structural invariants") {
  auto ctx = ctx_of(testing::chain(3), "zmod:2");
  Fingerprint fp = fingerprint(ctx);
  CHECK(fp.total == 64);
  CHECK(fp.units == 8);
  CHECK(fp.idempotents == 26);
  CHECK(fp.center == 2);
  CHECK(fp.radical == 8);
  CHECK(fp.ring_key == "zmod:2");
  CHECK(format_fingerprint(fp) ==
        "units=8 idempotents=26 center=2 radical=8 total=64");

  CHECK(fingerprint(ctx_of(testing::chain(2), "zmod:2")) ==
        fingerprint(ctx_of(testing::chain(2), "zmod:2")));
  CHECK(fingerprint(ctx_of(testing::chain(2), "zmod:4")) !=
        fingerprint(ctx_of(testing::chain(2), "gf:2:2:frobenius")));

  // A disconnected poset: chain plus isolated point.
  auto mixed = AlgebraContext::create(
      parse_poset_text("elements 3\n1 < 2\n").poset, make_zmod(2));
  Fingerprint mfp = fingerprint(mixed);
  CHECK(mfp.total == 16);
  CHECK(mfp.units == 2);
  CHECK(mfp.idempotents == 12);
  CHECK(mfp.center == 4);
  CHECK(mfp.radical == 2);
}

TEST_CASE("inverse witnesses compose to the identity") {
  auto src = ctx_of(testing::vee(), "gf:2:2:frobenius");
  auto tgt = ctx_of(testing::vee(), "gf:2:2:frobenius");
  RingIsoWitness w =
      build_psi(src, tgt, {1, 0, 2}, ring_iso_sigma(src->ring()));
  RingIsoWitness inv = inverse_witness(w);
  CHECK(verify_ring_iso(inv).ok);
  for (const SkewElement& f : src->enumerate(1 << 12)) {
    CHECK(apply_witness(inv, apply_witness(w, f)) == f);
  }
  CHECK(thrown_kind([&] { (void)inverse_witness(w, 4); }) ==
        ErrorKind::UnsupportedQuery);
}

TEST_CASE("witness files round trip") {
  const Poset v = testing::vee();
  const auto src_path = write_temp_poset("vsource.txt", v);
  const auto tgt_path = write_temp_poset("vtarget.txt", v);

  auto src = ctx_of(v, "gf:2:2:frobenius");
  auto tgt = ctx_of(v, "gf:2:2:frobenius");
  RingIsoWitness w =
      build_psi(src, tgt, {1, 0, 2}, ring_iso_sigma(src->ring()));
  const std::string text =
      format_witness(w, src_path.string(), tgt_path.string());
  CHECK(text.find("source-ring gf:2:2:frobenius") != std::string::npos);
  CHECK(text.find("target-relabel 2 1 3") != std::string::npos);

  RingIsoWitness back =
      parse_witness_text(text, src_path.parent_path().string());
  CHECK(back.source->same_as(*w.source));
  CHECK(back.target->same_as(*w.target));
  CHECK(back.target_relabel == w.target_relabel);
  CHECK(back.basis_images == w.basis_images);
  CHECK(back.scalar_images == w.scalar_images);
  CHECK(verify_ring_iso(back).ok);
  CHECK(recover_poset_map(back).alpha == std::vector<int>{1, 0, 2});
}

TEST_CASE("witness files close scalar images over the given generators") {
  const Poset c2 = testing::chain(2);
  const auto path = write_temp_poset("c2.txt", c2);
  const std::string base = path.parent_path().string();
  const std::string header =
      "source-poset c2.txt\n"
      "source-ring gf:2:2:frobenius\n"
      "target-poset c2.txt\n"
      "target-ring gf:2:2:frobenius\n"
      "e[1] -> 1*e[1]\n"
      "e[2] -> 1*e[2]\n"
      "e[1,2] -> 1*e[1,2]\n";

  // One generator image is enough: w generates GF(4) under + and *.
  RingIsoWitness w = parse_witness_text(header + "r(w) -> w*delta\n", base);
  CHECK(w.scalar_images.size() == 4);
  CHECK(verify_ring_iso(w).ok);

  const std::string incomplete = thrown_message(
      [&] { (void)parse_witness_text(header, base); });
  CHECK(incomplete.find("witness scalar images incomplete") == 0);
}

TEST_CASE("witness file parse errors") {
  const Poset c2 = testing::chain(2);
  const auto path = write_temp_poset("c2.txt", c2);
  const std::string base = path.parent_path().string();

  CHECK(thrown_kind([&] { (void)parse_witness_text("", base); }) ==
        ErrorKind::Parse);
  CHECK(thrown_kind([&] {
          (void)parse_witness_text("source-poset missing_file.txt\n"
                                   "source-ring zmod:2\n"
                                   "target-poset missing_file.txt\n"
                                   "target-ring zmod:2\n",
                                   base);
        }) == ErrorKind::Parse);

  const std::string header =
      "source-poset c2.txt\n"
      "source-ring zmod:2\n"
      "target-poset c2.txt\n"
      "target-ring zmod:2\n";
  CHECK(thrown_message([&] {
          (void)parse_witness_text(header + "e[1] -> 1*e[1]\n"
                                            "e[2] -> 1*e[2]\n"
                                            "r(1) -> delta\n",
                                   base);
        }) == "witness missing image for e[1,2]");
  CHECK(thrown_message([&] {
          (void)parse_witness_text(header + "target-relabel 1 1\n", base);
        }) == "target-relabel is not a permutation");
  CHECK(thrown_message([&] {
          (void)parse_witness_text(header + "target-relabel 1\n", base);
        }) == "target-relabel arity mismatch");
  const std::string dup = thrown_message([&] {
    (void)parse_witness_text(header + "e[1] -> 1*e[1]\ne[1] -> 1*e[2]\n",
                             base);
  });
  CHECK(dup.find("duplicate image for e[1]") != std::string::npos);
}
