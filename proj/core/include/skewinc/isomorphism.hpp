#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewinc/algebra.hpp"
#include "skewinc/structure.hpp"

namespace skewinc {

/// A ring homomorphism between two finite rings, tabulated on element
/// indices. Candidate isomorphisms are validated by ring_iso_defect.
struct RingIso {
  RingPtr source;
  RingPtr target;
  std::vector<std::uint64_t> table;  // source index -> target index

  RingElem apply(const RingElem& r) const {
    return target->element_at(table[source->index_of(r)]);
  }
};

RingIso ring_iso_identity(const RingPtr& ring);
/// The ring's own endomorphism iterated `power` times, as a candidate
/// isomorphism (valid exactly when it is bijective).
RingIso ring_iso_sigma(const RingPtr& ring, int power = 1);

/// Empty when the table is a genuine ring isomorphism (bijective, unital,
/// additive, multiplicative); otherwise a description of the first defect.
std::optional<std::string> ring_iso_defect(const RingIso& iso);

/// Additive map between two algebras, determined by the images of the basis
/// elements e[i,j] and of the diagonal embeddings r*delta:
///   f = sum c_p * e_p  maps to  sum image(c_p * delta) * image(e_p).
/// Both spanning families are tabulated in full. When the witness was built
/// from a poset isomorphism alpha, the target context carries the labels
/// transported through alpha (the label-compatibility the pairwise transport
/// needs) and target_relabel[i] gives the label in the caller's original
/// target poset; empty means no relabeling was involved.
struct RingIsoWitness {
  ContextPtr source;
  ContextPtr target;
  std::vector<SkewElement> basis_images;   // per source pair index
  std::vector<SkewElement> scalar_images;  // per source ring element index
  std::vector<int> target_relabel;
};

/// The transported-coefficient map psi(f)(alpha(i), alpha(j)) = phi(f(i,j)),
/// packaged against the relabeled target context so that it is label
/// preserving. Pre: alpha an order isomorphism source -> target poset; phi a
/// ring isomorphism intertwining the two endomorphisms (phi o sigma = tau o
/// phi, checked exhaustively). Errors: HypothesisViolation with a witnessing
/// ring element on intertwining failure; InvalidArgument for a non-iso alpha.
RingIsoWitness build_psi(const ContextPtr& source, const ContextPtr& target,
                         const std::vector<int>& alpha, const RingIso& phi);

SkewElement apply_witness(const RingIsoWitness& w, const SkewElement& f);

struct VerifyReport {
  bool ok = false;
  std::string failure;  // first failing check, empty when ok
};

/// Checks that the witness is a unital ring isomorphism: image of delta is
/// delta, scalar images form a coherent ring map, multiplicativity holds on
/// all pairs of spanning elements, and the map is injective — element by
/// element when the algebras enumerate within `bound`, at spanning-set level
/// otherwise.
VerifyReport verify_ring_iso(const RingIsoWitness& w,
                             std::uint64_t bound = std::uint64_t(1) << 16);

struct PosetMapResult {
  /// Source element -> target element, in the caller's original target
  /// labels (composed with target_relabel when present).
  std::vector<int> alpha;
  /// Same map in the witness target context's own labels.
  std::vector<int> alpha_internal;
  /// Per-element conjugator h with h * image(e_x) = e_alpha(x) * h.
  std::vector<SkewElement> certificates;
  /// Set when run in research mode; notes collect per-element outcomes.
  bool exploratory = false;
  std::vector<std::string> notes;
};

/// Recovers the poset isomorphism underlying a verified ring-iso witness:
/// the image of each e_x diagonalizes to a single diagonal 1, whose position
/// is alpha(x). Pre: both coefficient rings have only trivial idempotents
/// (refused with HypothesisViolation otherwise) and the witness verifies.
/// Any failed recovery assertion is an InvariantViolation — a would-be
/// counterexample, surfaced loudly. With research = true the hypothesis
/// refusal and the assertions are downgraded to recorded notes.
PosetMapResult recover_poset_map(const RingIsoWitness& w,
                                 bool research = false,
                                 std::uint64_t bound = std::uint64_t(1) << 16);

/// e[x,y] when leq(x, y) — the element with e_x * f * e_y != 0 — none
/// otherwise (then e_x * f * e_y = 0 for every f).
std::optional<SkewElement> comparable_pair_witness(const ContextPtr& ctx,
                                                   int x, int y);

/// Cardinality invariants of a finite algebra; equality is necessary but
/// not sufficient for isomorphism.
struct Fingerprint {
  std::uint64_t total = 0;
  std::uint64_t units = 0;
  std::uint64_t idempotents = 0;
  std::uint64_t center = 0;
  std::uint64_t radical = 0;
  std::string ring_key;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const ContextPtr& ctx,
                        std::uint64_t bound = std::uint64_t(1) << 16);
/// "units=U idempotents=I center=C radical=J total=T"
std::string format_fingerprint(const Fingerprint& fp);

/// The inverse map, derived by enumerating the source algebra (requires both
/// algebras within `bound`; UnsupportedQuery otherwise, InvariantViolation
/// if the witness turns out not to be injective).
RingIsoWitness inverse_witness(const RingIsoWitness& w,
                               std::uint64_t bound = std::uint64_t(1) << 16);

/// Witness file format:
///   source-poset <path>
///   source-ring <spec>
///   target-poset <path>
///   target-ring <spec>
///   target-relabel <pi_1> ... <pi_n>    (optional, 1-based original labels)
///   e[i,j] -> <target element expression>
///   r(<source ring literal>) -> <target element expression>
/// '#' comments and blank lines are ignored. Scalar images may be given on
/// generators only; the loader closes them under + and * and reports any
/// ring element left without an image. Poset paths resolve against
/// `base_dir`. All labels refer to the canonicalized (relabeled) posets.
RingIsoWitness parse_witness_text(std::string_view text,
                                  const std::string& base_dir);

/// Serializes a witness in the file format, tabulating every basis image
/// and every scalar image. The poset paths are recorded as given.
std::string format_witness(const RingIsoWitness& w,
                           std::string_view source_poset_path,
                           std::string_view target_poset_path);

}  // namespace skewinc
