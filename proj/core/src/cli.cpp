#include "skewinc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "skewinc/algebra.hpp"
#include "skewinc/errors.hpp"
#include "skewinc/isomorphism.hpp"
#include "skewinc/poset.hpp"
#include "skewinc/ring.hpp"
#include "skewinc/structure.hpp"

namespace skewinc {
namespace {

struct Options {
  std::vector<std::string> posets;
  std::vector<std::string> rings;
  std::vector<std::string> elems;
  std::string witness;
  std::string alpha;
  std::string phi = "identity";
  std::string format = "text";
  std::uint64_t bound = std::uint64_t(1) << 16;
  std::uint64_t samples = 10000;
  bool research = false;
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_count(const std::vector<std::string>& got, std::size_t want,
                   const char* flag, const char* verb) {
  if (got.size() != want)
    fail(ErrorKind::Parse,
         std::string(verb) + " expects " + flag + " exactly " +
             std::to_string(want) + (want == 1 ? " time" : " times") +
             ", got " + std::to_string(got.size()));
}

/// Reads and canonicalizes a poset file; the relabeling permutation, when
/// one was applied, goes to the diagnostics stream.
ContextPtr load_context(const std::string& poset_path,
                        const std::string& ring_spec, std::ostream& err) {
  PosetBuild built = parse_poset_text(read_text_file(poset_path));
  if (built.relabeled) {
    err << "note: poset '" << poset_path << "' relabeled:";
    for (std::size_t k = 0; k < built.to_internal.size(); ++k)
      err << " " << (k + 1) << "->" << (built.to_internal[k] + 1);
    err << "\n";
  }
  return AlgebraContext::create(built.poset, parse_ring_spec(ring_spec));
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::vector<int> parse_alpha(const std::string& text) {
  if (text.empty())
    fail(ErrorKind::Parse,
         "build-psi requires --alpha <i1,i2,...> (1-based images)");
  std::vector<int> alpha;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, (comma == std::string::npos ? text.size() : comma) - pos);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad --alpha entry '" + tok + "'");
    }
    if (v < 1) fail(ErrorKind::Parse, "--alpha entries are 1-based, got '" + tok + "'");
    alpha.push_back(v - 1);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return alpha;
}

RingIso parse_phi(const std::string& spec, const RingPtr& ring) {
  if (spec == "identity") return ring_iso_identity(ring);
  if (spec == "sigma") return ring_iso_sigma(ring, 1);
  if (spec.rfind("sigma:", 0) == 0) {
    std::string tok = spec.substr(6);
    try {
      std::size_t used = 0;
      int k = std::stoi(tok, &used);
      if (used != tok.size() || k < 0) throw std::invalid_argument(tok);
      return ring_iso_sigma(ring, k);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "bad --phi power '" + tok + "'");
    }
  }
  fail(ErrorKind::Parse,
       "bad --phi '" + spec + "': expected identity, sigma, or sigma:<k>");
}

std::string witness_base_dir(const std::string& witness_path) {
  std::string dir = std::filesystem::path(witness_path).parent_path().string();
  return dir.empty() ? std::string(".") : dir;
}

int cmd_mul(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "mul");
  require_count(opt.rings, 1, "--ring", "mul");
  if (opt.elems.size() < 2)
    fail(ErrorKind::Parse, "mul expects at least two --elem inputs");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  std::vector<SkewElement> elems;
  for (const std::string& text : opt.elems) elems.push_back(ctx->parse(text));
  SkewElement result = elems[0];
  for (std::size_t k = 1; k < elems.size(); ++k)
    result = ctx->multiply(result, elems[k]);
  if (opt.format == "structured") {
    out << "verb=mul\nposet=" << opt.posets[0] << "\nring=" << opt.rings[0]
        << "\n";
    for (std::size_t k = 0; k < elems.size(); ++k)
      out << "elem." << (k + 1) << "=" << ctx->format(elems[k]) << "\n";
    out << "result=" << ctx->format(result) << "\n";
  } else {
    out << ctx->format(result) << "\n";
  }
  return 0;
}

int cmd_invert(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "invert");
  require_count(opt.rings, 1, "--ring", "invert");
  require_count(opt.elems, 1, "--elem", "invert");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  SkewElement f = ctx->parse(opt.elems[0]);
  const bool structured = opt.format == "structured";
  if (structured)
    out << "verb=invert\nposet=" << opt.posets[0] << "\nring=" << opt.rings[0]
        << "\nelem.1=" << ctx->format(f) << "\n";
  try {
    SkewElement g = invert_elem(f);
    if (structured)
      out << "result=" << ctx->format(g) << "\n";
    else
      out << ctx->format(g) << "\n";
    return 0;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAUnit && e.index()) {
      std::string line = "not a unit at x" + std::to_string(*e.index() + 1);
      if (structured)
        out << "error=" << line << "\n";
      else
        out << line << "\n";
      return 1;
    }
    throw;
  }
}

int cmd_predicate(const Options& opt, std::ostream& out, std::ostream& err,
                  const char* verb, bool (*pred)(const SkewElement&)) {
  require_count(opt.posets, 1, "--poset", verb);
  require_count(opt.rings, 1, "--ring", verb);
  require_count(opt.elems, 1, "--elem", verb);
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  SkewElement f = ctx->parse(opt.elems[0]);
  bool value = pred(f);
  if (opt.format == "structured") {
    out << "verb=" << verb << "\nposet=" << opt.posets[0]
        << "\nring=" << opt.rings[0] << "\nelem.1=" << ctx->format(f)
        << "\nresult=" << bool_str(value) << "\n";
  } else {
    out << bool_str(value) << "\n";
  }
  return 0;
}

int cmd_diagonalize(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "diagonalize");
  require_count(opt.rings, 1, "--ring", "diagonalize");
  require_count(opt.elems, 1, "--elem", "diagonalize");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  SkewElement f = ctx->parse(opt.elems[0]);
  Diagonalization d = diagonalize_idempotent(f);
  if (opt.format == "structured") {
    out << "verb=diagonalize\nposet=" << opt.posets[0]
        << "\nring=" << opt.rings[0] << "\nelem.1=" << ctx->format(f)
        << "\ndiagonal=" << ctx->format(d.diagonal)
        << "\nconjugator=" << ctx->format(d.conjugator)
        << "\nconjugator_inverse=" << ctx->format(d.conjugator_inverse)
        << "\n";
  } else {
    out << "diagonal: " << ctx->format(d.diagonal) << "\n"
        << "conjugator: " << ctx->format(d.conjugator) << "\n"
        << "conjugator inverse: " << ctx->format(d.conjugator_inverse) << "\n";
  }
  return 0;
}

int cmd_primitive(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "primitive-test");
  require_count(opt.rings, 1, "--ring", "primitive-test");
  require_count(opt.elems, 1, "--elem", "primitive-test");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  SkewElement f = ctx->parse(opt.elems[0]);
  PrimitiveAnalysis an = analyze_primitive(f);
  if (opt.format == "structured") {
    out << "verb=primitive-test\nposet=" << opt.posets[0]
        << "\nring=" << opt.rings[0] << "\nelem.1=" << ctx->format(f)
        << "\nresult=" << bool_str(an.primitive) << "\n";
    if (an.primitive)
      out << "element=" << (an.element + 1)
          << "\nvalue=" << ctx->ring()->format(*an.value)
          << "\nvalue.canonical=" << bool_str(an.value_canonical) << "\n";
  } else {
    out << bool_str(an.primitive) << "\n";
    if (an.primitive)
      out << "element x" << (an.element + 1) << "\n"
          << "value " << ctx->ring()->format(*an.value)
          << (an.value_canonical ? "" : " (representative only)") << "\n";
  }
  return 0;
}

int cmd_center_enum(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "center-enum");
  require_count(opt.rings, 1, "--ring", "center-enum");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  std::vector<SkewElement> zs = center_enumerate(ctx, opt.bound);
  if (opt.format == "structured") {
    out << "verb=center-enum\nposet=" << opt.posets[0]
        << "\nring=" << opt.rings[0] << "\nbound=" << opt.bound
        << "\ncount=" << zs.size() << "\n";
    for (std::size_t k = 0; k < zs.size(); ++k)
      out << "elem." << (k + 1) << "=" << ctx->format(zs[k]) << "\n";
  } else {
    for (const SkewElement& z : zs) out << ctx->format(z) << "\n";
  }
  return 0;
}

int cmd_fingerprint(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "fingerprint");
  require_count(opt.rings, 1, "--ring", "fingerprint");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  Fingerprint fp = fingerprint(ctx, opt.bound);
  if (opt.format == "structured") {
    out << "verb=fingerprint\nposet=" << opt.posets[0]
        << "\nring=" << opt.rings[0] << "\nbound=" << opt.bound
        << "\nunits=" << fp.units << "\nidempotents=" << fp.idempotents
        << "\ncenter=" << fp.center << "\nradical=" << fp.radical
        << "\ntotal=" << fp.total << "\nring.key=" << fp.ring_key << "\n";
  } else {
    out << format_fingerprint(fp) << "\n";
  }
  return 0;
}

int cmd_build_psi(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 2, "--poset", "build-psi");
  require_count(opt.rings, 2, "--ring", "build-psi");
  ContextPtr source = load_context(opt.posets[0], opt.rings[0], err);
  ContextPtr target = load_context(opt.posets[1], opt.rings[1], err);
  std::vector<int> alpha = parse_alpha(opt.alpha);
  RingIso phi = parse_phi(opt.phi, source->ring());
  RingIsoWitness w = build_psi(source, target, alpha, phi);
  if (opt.format == "structured") {
    out << "verb=build-psi\nposet.source=" << opt.posets[0]
        << "\nposet.target=" << opt.posets[1]
        << "\nring.source=" << opt.rings[0]
        << "\nring.target=" << opt.rings[1] << "\nalpha=" << opt.alpha
        << "\nphi=" << opt.phi << "\n";
  }
  std::string text = format_witness(w, opt.posets[0], opt.posets[1]);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
  return 0;
}

int cmd_recover(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.witness.empty())
    fail(ErrorKind::Parse, "recover requires --witness <file>");
  RingIsoWitness w = parse_witness_text(read_text_file(opt.witness),
                                        witness_base_dir(opt.witness));
  PosetMapResult res = recover_poset_map(w, opt.research, opt.bound);
  const ContextPtr& target = w.target;
  if (opt.format == "structured") {
    out << "verb=recover\nwitness=" << opt.witness
        << "\nresearch=" << bool_str(opt.research) << "\nbound=" << opt.bound
        << "\n";
    for (std::size_t i = 0; i < res.alpha.size(); ++i)
      out << "alpha." << (i + 1) << "=" << (res.alpha[i] + 1) << "\n";
    for (std::size_t i = 0; i < res.certificates.size(); ++i)
      out << "certificate." << (i + 1) << "="
          << target->format(res.certificates[i]) << "\n";
    out << "exploratory=" << bool_str(res.exploratory) << "\n";
    for (std::size_t k = 0; k < res.notes.size(); ++k)
      out << "note." << (k + 1) << "=" << res.notes[k] << "\n";
  } else {
    for (std::size_t i = 0; i < res.alpha.size(); ++i)
      out << (i + 1) << " -> " << (res.alpha[i] + 1) << "\n";
    for (const std::string& note : res.notes) out << "note: " << note << "\n";
  }
  return 0;
}

int cmd_verify_witness(const Options& opt, std::ostream& out, std::ostream&) {
  if (opt.witness.empty())
    fail(ErrorKind::Parse, "verify-witness requires --witness <file>");
  RingIsoWitness w = parse_witness_text(read_text_file(opt.witness),
                                        witness_base_dir(opt.witness));
  VerifyReport rep = verify_ring_iso(w, opt.bound);
  if (opt.format == "structured") {
    out << "verb=verify-witness\nwitness=" << opt.witness
        << "\nbound=" << opt.bound << "\nresult=" << bool_str(rep.ok) << "\n";
    if (!rep.ok) out << "failure=" << rep.failure << "\n";
  } else {
    out << bool_str(rep.ok) << "\n";
    if (!rep.ok) out << "failure: " << rep.failure << "\n";
  }
  return 0;
}

int cmd_check_axioms(const Options& opt, std::ostream& out, std::ostream& err) {
  require_count(opt.posets, 1, "--poset", "check-axioms");
  require_count(opt.rings, 1, "--ring", "check-axioms");
  ContextPtr ctx = load_context(opt.posets[0], opt.rings[0], err);
  AxiomReport rep = check_axioms(ctx, opt.samples);
  if (opt.format == "structured") {
    out << "verb=check-axioms\nposet=" << opt.posets[0]
        << "\nring=" << opt.rings[0] << "\nsamples=" << opt.samples
        << "\nresult=" << bool_str(rep.ok) << "\nchecks=" << rep.checks
        << "\n";
    if (!rep.ok) out << "failure=" << rep.failure << "\n";
  } else {
    if (rep.ok)
      out << "ok (" << rep.checks << " checks)\n";
    else
      out << "failure: " << rep.failure << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"calculator for twisted incidence algebras over finite posets"};
  app.name("skewinc");
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output mode: text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
  };
  auto add_context_flags = [&](CLI::App* sub) {
    sub->add_option("--poset", opt.posets, "poset description file");
    sub->add_option("--ring", opt.rings,
                    "coefficient ring spec (e.g. zmod:4, gf:2:3:frobenius, "
                    "prodswap:zmod:3, prodproj:zmod:2, trunc:2:3:tsq)");
  };
  auto add_elem = [&](CLI::App* sub) {
    sub->add_option("--elem", opt.elems,
                    "algebra element expression (repeatable)");
  };
  auto add_bound = [&](CLI::App* sub) {
    sub->add_option("--bound", opt.bound, "enumeration bound");
  };

  struct Verb {
    const char* name;
    int (*fn)(const Options&, std::ostream&, std::ostream&);
  };

  CLI::App* c;
  c = app.add_subcommand("mul", "multiply elements left to right");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("invert", "two-sided inverse of a unit");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("radical-test", "Jacobson radical membership");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("idempotent-test", "test f*f = f");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("diagonalize",
                         "conjugate an idempotent to its diagonal");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("primitive-test",
                         "test for a primitive idempotent");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("center", "center membership");
  add_context_flags(c), add_elem(c), add_format(c);
  c = app.add_subcommand("center-enum", "enumerate the center");
  add_context_flags(c), add_bound(c), add_format(c);
  c = app.add_subcommand("fingerprint",
                         "cardinality invariants of the algebra");
  add_context_flags(c), add_bound(c), add_format(c);
  c = app.add_subcommand("build-psi",
                         "construct an isomorphism witness from a poset map "
                         "and a coefficient-ring map");
  add_context_flags(c), add_format(c);
  c->add_option("--alpha", opt.alpha,
                "poset map as 1-based images, e.g. 2,1,3");
  c->add_option("--phi", opt.phi,
                "coefficient-ring map: identity, sigma, or sigma:<k>");
  c = app.add_subcommand("recover",
                         "recover the poset map behind a witness");
  c->add_option("--witness", opt.witness, "witness file");
  c->add_flag("--research", opt.research,
              "downgrade recovery assertions to recorded notes");
  add_bound(c), add_format(c);
  c = app.add_subcommand("verify-witness",
                         "check that a witness is a ring isomorphism");
  c->add_option("--witness", opt.witness, "witness file");
  add_bound(c), add_format(c);
  c = app.add_subcommand("check-axioms",
                         "verify the defining identities of the product");
  add_context_flags(c), add_format(c);
  c->add_option("--samples", opt.samples,
                "random triples when exhaustion is infeasible");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  static const Verb verbs[] = {
      {"mul", cmd_mul},
      {"invert", cmd_invert},
      {"diagonalize", cmd_diagonalize},
      {"primitive-test", cmd_primitive},
      {"center-enum", cmd_center_enum},
      {"fingerprint", cmd_fingerprint},
      {"build-psi", cmd_build_psi},
      {"recover", cmd_recover},
      {"verify-witness", cmd_verify_witness},
      {"check-axioms", cmd_check_axioms},
  };

  try {
    for (const Verb& v : verbs)
      if (app.got_subcommand(v.name)) return v.fn(opt, out, err);
    if (app.got_subcommand("radical-test"))
      return cmd_predicate(opt, out, err, "radical-test", jacobson_member_elem);
    if (app.got_subcommand("idempotent-test"))
      return cmd_predicate(opt, out, err, "idempotent-test",
                           is_idempotent_elem);
    if (app.got_subcommand("center"))
      return cmd_predicate(opt, out, err, "center", center_member_elem);
    fail(ErrorKind::InvalidArgument, "no verb selected");
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace skewinc
