#include "skewinc/isomorphism.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace skewinc {

namespace {

void require_finite_ring(const RingPtr& ring, const char* what) {
  if (!ring->finite()) {
    fail(ErrorKind::UnsupportedQuery,
         std::string(what) + " requires a finite ring (ring: " + ring->key() +
             ")");
  }
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Spanning element r*e[i,j] rendered for failure reports.
std::string spanning_name(const AlgebraContext& ctx, const RingElem& r, int p) {
  return ctx.format(ctx.term(r, ctx.pair_at(p).first, ctx.pair_at(p).second));
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring isomorphisms

RingIso ring_iso_identity(const RingPtr& ring) {
  require_finite_ring(ring, "tabulating a ring map");
  RingIso iso{ring, ring, {}};
  iso.table.resize(ring->size());
  for (std::uint64_t i = 0; i < ring->size(); ++i) iso.table[i] = i;
  return iso;
}

RingIso ring_iso_sigma(const RingPtr& ring, int power) {
  require_finite_ring(ring, "tabulating a ring map");
  if (power < 0) fail(ErrorKind::InvalidArgument, "sigma power must be >= 0");
  RingIso iso{ring, ring, {}};
  iso.table.resize(ring->size());
  for (std::uint64_t i = 0; i < ring->size(); ++i) {
    iso.table[i] = ring->index_of(ring->sigma_pow(power, ring->element_at(i)));
  }
  return iso;
}

std::optional<std::string> ring_iso_defect(const RingIso& iso) {
  const Ring& r = *iso.source;
  const Ring& s = *iso.target;
  if (r.size() != s.size()) return "rings have different cardinalities";
  if (iso.table.size() != r.size()) return "map table incomplete";
  std::vector<char> hit(s.size(), 0);
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    if (iso.table[i] >= s.size()) return "map table entry out of range";
    if (hit[iso.table[i]]) {
      return "not injective: " + r.format(r.element_at(i)) +
             " collides with an earlier element";
    }
    hit[iso.table[i]] = 1;
  }
  if (iso.apply(r.zero()) != s.zero()) return "does not map 0 to 0";
  if (iso.apply(r.one()) != s.one()) return "does not map 1 to 1";
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    const RingElem a = r.element_at(i);
    for (std::uint64_t j = 0; j < r.size(); ++j) {
      const RingElem b = r.element_at(j);
      if (iso.apply(r.add(a, b)) != s.add(iso.apply(a), iso.apply(b))) {
        return "not additive at (" + r.format(a) + ", " + r.format(b) + ")";
      }
      if (iso.apply(r.mul(a, b)) != s.mul(iso.apply(a), iso.apply(b))) {
        return "not multiplicative at (" + r.format(a) + ", " + r.format(b) +
               ")";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// build_psi

RingIsoWitness build_psi(const ContextPtr& source, const ContextPtr& target,
                         const std::vector<int>& alpha, const RingIso& phi) {
  const int n = source->poset().size();
  require_finite_ring(source->ring(), "building a transport witness");
  require_finite_ring(target->ring(), "building a transport witness");
  if (!same_ring(*phi.source, *source->ring()) ||
      !same_ring(*phi.target, *target->ring())) {
    fail(ErrorKind::SpecMismatch,
         "ring map endpoints do not match the algebra contexts");
  }

  // alpha must be an order isomorphism of the posets.
  if (static_cast<int>(alpha.size()) != n ||
      target->poset().size() != n) {
    fail(ErrorKind::InvalidArgument, "alpha has the wrong arity");
  }
  std::vector<char> hit(n, 0);
  for (int i = 0; i < n; ++i) {
    if (alpha[i] < 0 || alpha[i] >= n || hit[alpha[i]]) {
      fail(ErrorKind::InvalidArgument, "alpha is not a bijection");
    }
    hit[alpha[i]] = 1;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (source->poset().leq(i, j) !=
          target->poset().leq(alpha[i], alpha[j])) {
        fail(ErrorKind::InvalidArgument,
             "alpha is not an order isomorphism (fails at pair " +
                 std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
    }
  }

  if (auto defect = ring_iso_defect(phi)) {
    fail(ErrorKind::HypothesisViolation,
         "phi is not a ring isomorphism: " + *defect);
  }
  const Ring& r = *source->ring();
  const Ring& s = *target->ring();
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    const RingElem a = r.element_at(i);
    if (phi.apply(r.sigma(a)) != s.sigma(phi.apply(a))) {
      fail(ErrorKind::HypothesisViolation,
           "phi does not intertwine the endomorphisms; witnessing element " +
               r.format(a));
    }
  }

  // Transport the target labels through alpha: position i now carries the
  // target element alpha(i). Since alpha is an order isomorphism, the
  // transported relation coincides with the source poset's, which is exactly
  // the label compatibility the pairwise map needs.
  ContextPtr relabeled = AlgebraContext::create(source->poset(), target->ring());

  RingIsoWitness w;
  w.source = source;
  w.target = relabeled;
  w.target_relabel = alpha;
  w.basis_images.reserve(source->pairs().size());
  for (auto [i, j] : source->pairs()) {
    w.basis_images.push_back(relabeled->basis(i, j));
  }
  w.scalar_images.reserve(r.size());
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    w.scalar_images.push_back(relabeled->embed(phi.apply(r.element_at(i))));
  }
  return w;
}

SkewElement apply_witness(const RingIsoWitness& w, const SkewElement& f) {
  w.source->check_element(f);
  const Ring& r = *w.source->ring();
  SkewElement acc = w.target->zero();
  for (const auto& [p, c] : f.coeffs()) {
    acc = w.target->add(
        acc, w.target->multiply(w.scalar_images[r.index_of(c)],
                                w.basis_images[p]));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// verify_ring_iso

VerifyReport verify_ring_iso(const RingIsoWitness& w, std::uint64_t bound) {
  const AlgebraContext& src = *w.source;
  const AlgebraContext& tgt = *w.target;
  const Ring& r = *src.ring();
  require_finite_ring(src.ring(), "verifying a witness");

  if (w.scalar_images.size() != r.size() ||
      w.basis_images.size() != src.pairs().size()) {
    return {false, "witness tables incomplete"};
  }
  for (const SkewElement& image : w.basis_images) tgt.check_element(image);
  for (const SkewElement& image : w.scalar_images) tgt.check_element(image);

  if (w.scalar_images[r.index_of(r.zero())] != tgt.zero()) {
    return {false, "image of 0 is not 0"};
  }
  if (apply_witness(w, src.delta()) != tgt.delta()) {
    return {false, "image of delta is not delta"};
  }

  // The scalar images must form a coherent ring map.
  for (std::uint64_t i = 0; i < r.size(); ++i) {
    const RingElem a = r.element_at(i);
    for (std::uint64_t j = 0; j < r.size(); ++j) {
      const RingElem b = r.element_at(j);
      const SkewElement& ia = w.scalar_images[i];
      const SkewElement& ib = w.scalar_images[j];
      if (w.scalar_images[r.index_of(r.add(a, b))] != tgt.add(ia, ib)) {
        return {false, "scalar additivity fails at (" + r.format(a) + ", " +
                           r.format(b) + ")"};
      }
      if (w.scalar_images[r.index_of(r.mul(a, b))] != tgt.multiply(ia, ib)) {
        return {false, "scalar multiplicativity fails at (" + r.format(a) +
                           ", " + r.format(b) + ")"};
      }
    }
  }

  // Multiplicativity on every pair of spanning elements r*e_p, s*e_q.
  for (std::size_t p = 0; p < src.pairs().size(); ++p) {
    for (std::size_t q = 0; q < src.pairs().size(); ++q) {
      for (std::uint64_t i = 1; i < r.size(); ++i) {
        const SkewElement a =
            src.term(r.element_at(i), src.pair_at(static_cast<int>(p)).first,
                     src.pair_at(static_cast<int>(p)).second);
        for (std::uint64_t j = 1; j < r.size(); ++j) {
          const SkewElement b =
              src.term(r.element_at(j), src.pair_at(static_cast<int>(q)).first,
                       src.pair_at(static_cast<int>(q)).second);
          if (apply_witness(w, src.multiply(a, b)) !=
              tgt.multiply(apply_witness(w, a), apply_witness(w, b))) {
            return {false, "multiplicativity fails at (" + src.format(a) +
                               ", " + src.format(b) + ")"};
          }
        }
      }
    }
  }

  // Injectivity: element-by-element within the bound, else spanning-level.
  std::uint64_t count_src = 0, count_tgt = 0;
  bool enumerable = true;
  try {
    count_src = src.element_count();
    count_tgt = tgt.element_count();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedQuery) throw;
    enumerable = false;
  }
  if (enumerable && count_src <= bound && count_tgt <= bound) {
    if (count_src != count_tgt) {
      return {false, "algebra cardinalities differ"};
    }
    std::vector<std::int64_t> owner(count_tgt, -1);
    for (std::uint64_t idx = 0; idx < count_src; ++idx) {
      std::uint64_t image = tgt.index_of(apply_witness(w, src.element_at(idx)));
      if (owner[image] >= 0) {
        return {false,
                "not injective: " + src.format(src.element_at(owner[image])) +
                    " and " + src.format(src.element_at(idx)) +
                    " share an image"};
      }
      owner[image] = static_cast<std::int64_t>(idx);
    }
  } else {
    std::vector<std::pair<std::uint64_t, std::string>> seen;
    for (std::size_t p = 0; p < src.pairs().size(); ++p) {
      for (std::uint64_t i = 1; i < r.size(); ++i) {
        const RingElem a = r.element_at(i);
        const SkewElement image = apply_witness(
            w, src.term(a, src.pair_at(static_cast<int>(p)).first,
                        src.pair_at(static_cast<int>(p)).second));
        if (image.is_zero()) {
          return {false, "spanning element " +
                             spanning_name(src, a, static_cast<int>(p)) +
                             " maps to 0"};
        }
        std::uint64_t key = tgt.index_of(image);
        for (const auto& [other, name] : seen) {
          if (other == key) {
            return {false, "spanning images collide: " + name + " and " +
                               spanning_name(src, a, static_cast<int>(p))};
          }
        }
        seen.emplace_back(key, spanning_name(src, a, static_cast<int>(p)));
      }
    }
  }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// recover_poset_map

namespace {

/// First idempotent other than 0 and 1, if any.
std::optional<RingElem> nontrivial_idempotent(const Ring& ring) {
  const RingElem zero = ring.zero();
  const RingElem one = ring.one();
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    RingElem a = ring.element_at(i);
    if (ring.mul(a, a) == a && a != zero && a != one) return a;
  }
  return std::nullopt;
}

}  // namespace

PosetMapResult recover_poset_map(const RingIsoWitness& w, bool research,
                                 std::uint64_t bound) {
  PosetMapResult out;
  out.exploratory = research;
  auto assert_or_note = [&](bool condition, const std::string& message) {
    if (condition) return true;
    if (research) {
      out.notes.push_back(message);
      return false;
    }
    fail(ErrorKind::InvariantViolation,
         "recovery assertion failed: " + message +
             " — possible counterexample to the recovery guarantee or a "
             "library defect");
  };

  VerifyReport report = verify_ring_iso(w, bound);
  if (!report.ok) {
    fail(ErrorKind::HypothesisViolation,
         "witness fails verification: " + report.failure);
  }
  for (const RingPtr& ring : {w.source->ring(), w.target->ring()}) {
    if (auto bad = nontrivial_idempotent(*ring)) {
      std::string message =
          "recovery requires coefficient rings with only trivial idempotents; "
          "ring " +
          ring->key() + " has nontrivial idempotent " + ring->format(*bad);
      if (!research) fail(ErrorKind::HypothesisViolation, message);
      out.notes.push_back(message + " (continuing exploratorily)");
    }
  }

  const AlgebraContext& src = *w.source;
  const AlgebraContext& tgt = *w.target;
  const int n = src.poset().size();
  out.alpha_internal.assign(n, -1);
  out.certificates.assign(n, tgt.zero());

  for (int x = 0; x < n; ++x) {
    const std::string who = "image of e[" + std::to_string(x + 1) + "]";
    SkewElement image = apply_witness(w, src.basis(x, x));
    if (!assert_or_note(is_idempotent_elem(image), who + " is not idempotent"))
      continue;
    Diagonalization diag = diagonalize_idempotent(image);
    out.certificates[x] = diag.conjugator;
    const auto& support = diag.diagonal.coeffs();
    if (!assert_or_note(support.size() == 1,
                        who + " diagonalizes to support of size " +
                            std::to_string(support.size()))) {
      continue;
    }
    const auto& [p, value] = support.front();
    int y = tgt.pair_at(p).first;
    if (!assert_or_note(value == tgt.ring()->one(),
                        who + " diagonalizes to coefficient " +
                            tgt.ring()->format(value) + " at element " +
                            std::to_string(y + 1) + ", not 1")) {
      out.alpha_internal[x] = y;  // exploratory: still report the position
      continue;
    }
    out.alpha_internal[x] = y;
  }

  bool complete =
      std::none_of(out.alpha_internal.begin(), out.alpha_internal.end(),
                   [](int v) { return v < 0; });
  if (complete) {
    std::vector<char> hit(n, 0);
    bool bijective = true;
    for (int v : out.alpha_internal) {
      if (hit[v]) bijective = false;
      hit[v] = 1;
    }
    if (assert_or_note(bijective, "recovered map is not a bijection") &&
        complete) {
      const auto isos = poset_isomorphisms(src.poset(), tgt.poset());
      assert_or_note(std::find(isos.begin(), isos.end(), out.alpha_internal) !=
                         isos.end(),
                     "recovered map is not an order isomorphism");
    }
  } else {
    assert_or_note(false, "recovered map is incomplete");
  }

  out.alpha = out.alpha_internal;
  if (!w.target_relabel.empty()) {
    for (int x = 0; x < n; ++x) {
      if (out.alpha_internal[x] >= 0) {
        out.alpha[x] = w.target_relabel[out.alpha_internal[x]];
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small tools

std::optional<SkewElement> comparable_pair_witness(const ContextPtr& ctx,
                                                   int x, int y) {
  if (!ctx->poset().leq(x, y)) return std::nullopt;
  return ctx->basis(x, y);
}

Fingerprint fingerprint(const ContextPtr& ctx, std::uint64_t bound) {
  const Ring& ring = *ctx->ring();
  require_finite_ring(ctx->ring(), "fingerprinting");
  const std::uint64_t rs = ring.size();
  std::vector<char> unit(rs), radical(rs), central(rs);
  for (std::uint64_t i = 0; i < rs; ++i) {
    RingElem a = ring.element_at(i);
    unit[i] = ring.is_unit(a);
    radical[i] = ring.jacobson_member(a);
    central[i] = ring.center_member(a);
  }

  Fingerprint fp;
  fp.ring_key = ring.key();
  const int n = ctx->poset().size();
  for (const SkewElement& f : ctx->enumerate(bound)) {
    ++fp.total;
    bool all_unit = true, all_radical = true, all_central = true;
    for (int i = 0; i < n; ++i) {
      std::uint64_t d = ring.index_of(f.at(i, i));
      all_unit = all_unit && unit[d];
      all_radical = all_radical && radical[d];
      all_central = all_central && central[d];
    }
    if (all_unit) ++fp.units;
    if (ctx->multiply(f, f) == f) ++fp.idempotents;
    if (all_radical) ++fp.radical;
    if (all_central && ctx->is_diagonal(f)) {
      bool matches = true;
      for (auto [i, j] : ctx->pairs()) {
        if (i != j && f.at(i, i) != ctx->twist(j - i, f.at(j, j))) {
          matches = false;
          break;
        }
      }
      if (matches) ++fp.center;
    }
  }
  return fp;
}

std::string format_fingerprint(const Fingerprint& fp) {
  return "units=" + std::to_string(fp.units) +
         " idempotents=" + std::to_string(fp.idempotents) +
         " center=" + std::to_string(fp.center) +
         " radical=" + std::to_string(fp.radical) +
         " total=" + std::to_string(fp.total);
}

RingIsoWitness inverse_witness(const RingIsoWitness& w, std::uint64_t bound) {
  const AlgebraContext& src = *w.source;
  const AlgebraContext& tgt = *w.target;
  const std::uint64_t count_src = src.element_count();
  const std::uint64_t count_tgt = tgt.element_count();
  if (count_src > bound || count_tgt > bound) {
    fail(ErrorKind::UnsupportedQuery,
         "inverse derivation needs full enumeration within the bound");
  }
  if (count_src != count_tgt) {
    fail(ErrorKind::InvariantViolation,
         "cannot invert a map between algebras of different cardinalities");
  }
  std::vector<std::int64_t> owner(count_tgt, -1);
  for (std::uint64_t idx = 0; idx < count_src; ++idx) {
    std::uint64_t image = tgt.index_of(apply_witness(w, src.element_at(idx)));
    if (owner[image] >= 0) {
      fail(ErrorKind::InvariantViolation, "witness is not injective");
    }
    owner[image] = static_cast<std::int64_t>(idx);
  }

  RingIsoWitness inv;
  inv.source = w.target;
  inv.target = w.source;
  for (auto [i, j] : tgt.pairs()) {
    inv.basis_images.push_back(
        src.element_at(owner[tgt.index_of(tgt.basis(i, j))]));
  }
  const Ring& s = *tgt.ring();
  for (std::uint64_t i = 0; i < s.size(); ++i) {
    inv.scalar_images.push_back(
        src.element_at(owner[tgt.index_of(tgt.embed(s.element_at(i)))]));
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Witness files

namespace {

std::string join_path(const std::string& base, const std::string& path) {
  if (path.empty() || path.front() == '/' || base.empty()) return path;
  return base + "/" + path;
}

}  // namespace

RingIsoWitness parse_witness_text(std::string_view text,
                                  const std::string& base_dir) {
  std::string source_poset, source_ring, target_poset, target_ring;
  std::vector<int> relabel;
  struct Mapping {
    std::string lhs, rhs;
    int line_no;
  };
  std::vector<Mapping> mappings;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string line = trim(text.substr(
        pos, end == std::string_view::npos ? std::string_view::npos
                                           : end - pos));
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    std::size_t arrow = line.find("->");
    if (arrow != std::string::npos) {
      mappings.push_back(
          {trim(line.substr(0, arrow)), trim(line.substr(arrow + 2)), line_no});
      continue;
    }
    std::size_t space = line.find(' ');
    if (space == std::string::npos) {
      fail(ErrorKind::Parse, "witness line " + std::to_string(line_no) +
                                 ": expected 'key value' or a '->' mapping");
    }
    std::string key = line.substr(0, space);
    std::string value = trim(line.substr(space + 1));
    if (key == "source-poset") {
      source_poset = value;
    } else if (key == "source-ring") {
      source_ring = value;
    } else if (key == "target-poset") {
      target_poset = value;
    } else if (key == "target-ring") {
      target_ring = value;
    } else if (key == "target-relabel") {
      std::istringstream in(value);
      int v;
      while (in >> v) relabel.push_back(v - 1);
      if (!in.eof()) {
        fail(ErrorKind::Parse, "witness line " + std::to_string(line_no) +
                                   ": bad target-relabel entry");
      }
    } else {
      fail(ErrorKind::Parse, "witness line " + std::to_string(line_no) +
                                 ": unknown header '" + key + "'");
    }
  }
  if (source_poset.empty() || source_ring.empty() || target_poset.empty() ||
      target_ring.empty()) {
    fail(ErrorKind::Parse,
         "witness header incomplete: need source-poset, source-ring, "
         "target-poset, target-ring");
  }

  ContextPtr src = AlgebraContext::create(
      parse_poset_text(read_text_file(join_path(base_dir, source_poset))).poset,
      parse_ring_spec(source_ring));
  Poset target_parsed =
      parse_poset_text(read_text_file(join_path(base_dir, target_poset))).poset;
  RingPtr tring = parse_ring_spec(target_ring);

  ContextPtr tgt;
  if (!relabel.empty()) {
    const int n = target_parsed.size();
    if (static_cast<int>(relabel.size()) != n) {
      fail(ErrorKind::Parse, "target-relabel arity mismatch");
    }
    std::vector<char> hit(n, 0);
    for (int v : relabel) {
      if (v < 0 || v >= n || hit[v]) {
        fail(ErrorKind::Parse, "target-relabel is not a permutation");
      }
      hit[v] = 1;
    }
    std::vector<std::pair<int, int>> relations;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && target_parsed.leq(relabel[i], relabel[j])) {
          relations.emplace_back(i, j);
        }
      }
    }
    PosetBuild transported = Poset::from_relations(n, relations);
    if (transported.relabeled) {
      fail(ErrorKind::Parse,
           "target-relabel does not transport to a linear extension");
    }
    tgt = AlgebraContext::create(transported.poset, tring);
  } else {
    tgt = AlgebraContext::create(target_parsed, tring);
  }

  require_finite_ring(src->ring(), "loading a witness");
  require_finite_ring(tgt->ring(), "loading a witness");

  RingIsoWitness w;
  w.source = src;
  w.target = tgt;
  w.target_relabel = relabel;
  w.basis_images.assign(src->pairs().size(), tgt->zero());
  std::vector<char> have_basis(src->pairs().size(), 0);
  const Ring& ring = *src->ring();
  std::vector<std::optional<SkewElement>> scalars(ring.size());

  for (const auto& m : mappings) {
    const std::string where = "witness line " + std::to_string(m.line_no);
    SkewElement image = tgt->parse(m.rhs);
    if (m.lhs.size() > 2 && m.lhs.front() == 'r' && m.lhs[1] == '(' &&
        m.lhs.back() == ')') {
      RingElem r = ring.parse(
          std::string_view(m.lhs).substr(2, m.lhs.size() - 3));
      std::uint64_t idx = ring.index_of(r);
      if (scalars[idx]) {
        fail(ErrorKind::Parse,
             where + ": duplicate scalar image for " + ring.format(r));
      }
      scalars[idx] = image;
    } else if (!m.lhs.empty() && m.lhs.front() == 'e') {
      // Reuse the element grammar: the lhs must be a bare basis token.
      SkewElement basis = src->parse(m.lhs);
      if (basis.coeffs().size() != 1 ||
          basis.coeffs()[0].second != ring.one()) {
        fail(ErrorKind::Parse, where + ": left side must be e[i] or e[i,j]");
      }
      int p = basis.coeffs()[0].first;
      if (have_basis[p]) {
        fail(ErrorKind::Parse, where + ": duplicate image for " + m.lhs);
      }
      have_basis[p] = 1;
      w.basis_images[p] = image;
    } else {
      fail(ErrorKind::Parse,
           where + ": left side must be e[i], e[i,j], or r(<literal>)");
    }
  }

  for (std::size_t p = 0; p < have_basis.size(); ++p) {
    if (!have_basis[p]) {
      auto [i, j] = src->pair_at(static_cast<int>(p));
      fail(ErrorKind::Parse, "witness missing image for e[" +
                                 std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "]");
    }
  }

  // Close the scalar images under + and * (first derivation wins; any
  // incoherence surfaces in verify_ring_iso).
  if (!scalars[ring.index_of(ring.zero())]) {
    scalars[ring.index_of(ring.zero())] = tgt->zero();
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t i = 0; i < ring.size(); ++i) {
      if (!scalars[i]) continue;
      const RingElem a = ring.element_at(i);
      for (std::uint64_t j = 0; j < ring.size(); ++j) {
        if (!scalars[j]) continue;
        const RingElem b = ring.element_at(j);
        std::uint64_t sum = ring.index_of(ring.add(a, b));
        if (!scalars[sum]) {
          scalars[sum] = tgt->add(*scalars[i], *scalars[j]);
          grew = true;
        }
        std::uint64_t prod = ring.index_of(ring.mul(a, b));
        if (!scalars[prod]) {
          scalars[prod] = tgt->multiply(*scalars[i], *scalars[j]);
          grew = true;
        }
      }
    }
  }
  for (std::uint64_t i = 0; i < ring.size(); ++i) {
    if (!scalars[i]) {
      fail(ErrorKind::Parse,
           "witness scalar images incomplete: no image derivable for r(" +
               ring.format(ring.element_at(i)) + ")");
    }
    w.scalar_images.push_back(std::move(*scalars[i]));
  }
  return w;
}

std::string format_witness(const RingIsoWitness& w,
                           std::string_view source_poset_path,
                           std::string_view target_poset_path) {
  std::string out;
  out += "source-poset " + std::string(source_poset_path) + "\n";
  out += "source-ring " + w.source->ring()->key() + "\n";
  out += "target-poset " + std::string(target_poset_path) + "\n";
  out += "target-ring " + w.target->ring()->key() + "\n";
  if (!w.target_relabel.empty()) {
    out += "target-relabel";
    for (int v : w.target_relabel) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  for (std::size_t p = 0; p < w.basis_images.size(); ++p) {
    auto [i, j] = w.source->pair_at(static_cast<int>(p));
    std::string lhs = i == j ? "e[" + std::to_string(i + 1) + "]"
                             : "e[" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "]";
    out += lhs + " -> " + w.target->format(w.basis_images[p]) + "\n";
  }
  const Ring& ring = *w.source->ring();
  for (std::size_t i = 0; i < w.scalar_images.size(); ++i) {
    out += "r(" + ring.format(ring.element_at(i)) + ") -> " +
           w.target->format(w.scalar_images[i]) + "\n";
  }
  return out;
}

}  // namespace skewinc
