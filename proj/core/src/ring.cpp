#include "skewinc/ring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace skewinc {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    fail(ErrorKind::Parse, std::string("invalid integer for ") + what + ": '" +
                               std::string(text) + "'");
  }
  return value;
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, int exp, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (std::uint64_t(1) << 62) / base) {
      fail(ErrorKind::InvalidArgument,
           std::string("cardinality overflow for ") + what);
    }
    r *= base;
  }
  return r;
}

// Coefficient-vector polynomial literal: sum of terms "c", "v", "v^e",
// "c*v", "c*v^e" over nonnegative integer coefficients, variable `var`.
// Terms with exponent >= out.size() are accumulated into `overflow` so the
// caller can decide (GF reduces them; truncated rings drop them).
void parse_poly_literal(std::string_view raw, char var,
                        std::vector<std::pair<std::int64_t, int>>& terms) {
  std::string text = strip_spaces(raw);
  if (text.empty()) fail(ErrorKind::Parse, "empty ring literal");
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find('+', pos);
    std::string term = text.substr(pos, next == std::string::npos
                                            ? std::string::npos
                                            : next - pos);
    pos = next == std::string::npos ? text.size() : next + 1;
    if (term.empty()) fail(ErrorKind::Parse, "empty term in ring literal");

    std::int64_t coeff = 1;
    std::string rest = term;
    std::size_t star = term.find('*');
    if (star != std::string::npos) {
      coeff = parse_int(term.substr(0, star), "ring literal coefficient");
      rest = term.substr(star + 1);
    }
    int exp = 0;
    if (!rest.empty() && rest[0] == var) {
      if (rest.size() == 1) {
        exp = 1;
      } else if (rest[1] == '^') {
        exp = static_cast<int>(parse_int(rest.substr(2), "exponent"));
        if (exp < 0) fail(ErrorKind::Parse, "negative exponent");
      } else {
        fail(ErrorKind::Parse, "malformed term '" + term + "'");
      }
    } else if (star == std::string::npos) {
      coeff = parse_int(rest, "ring literal");
      exp = 0;
    } else {
      fail(ErrorKind::Parse, "malformed term '" + term + "'");
    }
    if (coeff < 0) fail(ErrorKind::Parse, "negative coefficient");
    terms.emplace_back(coeff, exp);
  }
}

std::string format_poly(std::span<const std::int64_t> coeffs, char var) {
  std::string out;
  for (int e = static_cast<int>(coeffs.size()) - 1; e >= 0; --e) {
    std::int64_t c = coeffs[e];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) {
        out += std::to_string(c);
        out += '*';
      }
      out += var;
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingElem

bool RingElem::operator==(const RingElem& other) const {
  if (!ring_ || !other.ring_) return ring_ == other.ring_;
  if (ring_ != other.ring_ && !same_ring(*ring_, *other.ring_)) return false;
  return words_ == other.words_;
}

RingElem RingElem::operator+(const RingElem& other) const {
  return ring_->add(*this, other);
}
RingElem RingElem::operator-(const RingElem& other) const {
  return ring_->sub(*this, other);
}
RingElem RingElem::operator*(const RingElem& other) const {
  return ring_->mul(*this, other);
}
RingElem RingElem::operator-() const { return ring_->neg(*this); }

// ---------------------------------------------------------------------------
// Ring base

bool same_ring(const Ring& a, const Ring& b) {
  return &a == &b || a.key() == b.key();
}

void Ring::check_operand(const RingElem& a) const {
  if (!a.valid() || (!same_ring(*a.ring(), *this))) {
    fail(ErrorKind::SpecMismatch,
         "element does not belong to ring " + key());
  }
}

void Ring::check_operands(const RingElem& a, const RingElem& b) const {
  check_operand(a);
  if (!b.valid() || !same_ring(*b.ring(), *this)) {
    fail(ErrorKind::SpecMismatch, "elements belong to different rings: " +
                                      key() + " vs " +
                                      (b.valid() ? b.ring()->key() : "<none>"));
  }
}

void Ring::require_finite(const char* what) const {
  if (!finite()) {
    fail(ErrorKind::UnsupportedQuery,
         std::string(what) + " requires a finite ring (ring: " + key() + ")");
  }
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  return add(a, neg(b));
}

RingElem Ring::sigma_pow(int k, const RingElem& a) const {
  if (k < 0) {
    fail(ErrorKind::InvalidArgument, "sigma_pow requires k >= 0");
  }
  RingElem r = a;
  for (int i = 0; i < k; ++i) r = sigma(r);
  return r;
}

std::vector<RingElem> Ring::enumerate() const {
  require_finite("enumeration");
  const std::uint64_t n = size();
  if (n > (std::uint64_t(1) << 22)) {
    fail(ErrorKind::UnsupportedQuery, "ring too large to enumerate: " + key());
  }
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

bool Ring::is_unit(const RingElem& a) const {
  check_operand(a);
  require_finite("unit test");
  const RingElem id = one();
  const std::uint64_t n = size();
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElem s = element_at(i);
    if (mul(a, s) == id && mul(s, a) == id) return true;
  }
  return false;
}

RingElem Ring::inverse(const RingElem& a) const {
  check_operand(a);
  require_finite("inverse");
  const RingElem id = one();
  const std::uint64_t n = size();
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElem s = element_at(i);
    if (mul(a, s) == id && mul(s, a) == id) return s;
  }
  throw Error(ErrorKind::NotAUnit, "not a unit: " + format(a));
}

bool Ring::is_idempotent(const RingElem& a) const {
  check_operand(a);
  return mul(a, a) == a;
}

bool Ring::is_primitive_idempotent(const RingElem& a) const {
  check_operand(a);
  require_finite("primitivity test");
  const RingElem z = zero();
  if (a == z || !is_idempotent(a)) return false;
  const std::uint64_t n = size();
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElem f = element_at(i);
    if (!is_idempotent(f)) continue;
    if (mul(a, f) == f && mul(f, a) == f && f != z && f != a) return false;
  }
  return true;
}

bool Ring::jacobson_member(const RingElem& a) const {
  check_operand(a);
  require_finite("Jacobson radical membership");
  const RingElem id = one();
  const std::uint64_t n = size();
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElem x = element_at(i);
    RingElem xa = mul(x, a);
    for (std::uint64_t j = 0; j < n; ++j) {
      if (!is_unit(sub(id, mul(xa, element_at(j))))) return false;
    }
  }
  return true;
}

bool Ring::center_member(const RingElem& a) const {
  check_operand(a);
  if (commutative() == std::optional<bool>(true)) return true;
  if (!finite()) {
    fail(ErrorKind::UnsupportedQuery,
         "center membership undecidable for infinite ring of unknown "
         "commutativity: " +
             key());
  }
  const std::uint64_t n = size();
  for (std::uint64_t i = 0; i < n; ++i) {
    RingElem x = element_at(i);
    if (mul(a, x) != mul(x, a)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Integers modulo n

namespace {

class ZmodRing final : public Ring {
 public:
  explicit ZmodRing(std::int64_t n) : n_(n) {}

  std::string key() const override { return "zmod:" + std::to_string(n_); }
  std::string describe() const override {
    return "Z/" + std::to_string(n_) + " (sigma = identity)";
  }
  bool finite() const override { return true; }
  std::optional<bool> commutative() const override { return true; }
  std::uint64_t size() const override {
    return static_cast<std::uint64_t>(n_);
  }
  std::size_t word_count() const override { return 1; }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    return make({(a.words()[0] + b.words()[0]) % n_});
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    return make({(a.words()[0] * b.words()[0]) % n_});
  }
  RingElem neg(const RingElem& a) const override {
    check_operand(a);
    return make({(n_ - a.words()[0]) % n_});
  }
  RingElem sigma(const RingElem& a) const override {
    check_operand(a);
    return a;
  }
  RingElem element_at(std::uint64_t index) const override {
    return make({static_cast<std::int64_t>(index)});
  }
  std::uint64_t index_of(const RingElem& a) const override {
    check_operand(a);
    return static_cast<std::uint64_t>(a.words()[0]);
  }

  bool is_unit(const RingElem& a) const override {
    check_operand(a);
    return std::gcd(a.words()[0], n_) == 1;
  }
  RingElem inverse(const RingElem& a) const override {
    check_operand(a);
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = n_, newr = a.words()[0];
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (r != 1) throw Error(ErrorKind::NotAUnit, "not a unit: " + format(a));
    return make({((t % n_) + n_) % n_});
  }

  std::string format(const RingElem& a) const override {
    check_operand(a);
    return std::to_string(a.words()[0]);
  }
  RingElem parse(std::string_view text) const override {
    std::int64_t v = parse_int(strip_spaces(text), "Z/n literal");
    return make({((v % n_) + n_) % n_});
  }

 protected:
  std::vector<std::int64_t> zero_words() const override { return {0}; }
  std::vector<std::int64_t> one_words() const override { return {1 % n_}; }

 private:
  std::int64_t n_;
};

// ---------------------------------------------------------------------------
// GF(p^k) with the Frobenius endomorphism x -> x^p.

// Dense F_p[x] arithmetic on coefficient vectors, used only at ring
// construction (irreducible search) and inside GfRing operations.
using Poly = std::vector<std::int64_t>;

Poly poly_mul_mod_p(const Poly& a, const Poly& b, std::int64_t p) {
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
  }
  return c;
}

// Remainder of a modulo a monic divisor, coefficients mod p.
Poly poly_rem(Poly a, const Poly& monic, std::int64_t p) {
  const std::size_t d = monic.size() - 1;
  while (a.size() > d) {
    std::int64_t lead = a.back();
    std::size_t shift = a.size() - 1 - d;
    if (lead != 0) {
      for (std::size_t i = 0; i < monic.size(); ++i) {
        std::int64_t& slot = a[shift + i];
        slot = ((slot - lead * monic[i]) % p + p) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

// Monic candidates of degree d, enumerated by their base-p coefficient tuple.
Poly monic_at(std::uint64_t index, int d, std::int64_t p) {
  Poly f(d + 1, 0);
  for (int i = 0; i < d; ++i) {
    f[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  f[d] = 1;
  return f;
}

bool poly_irreducible(const Poly& f, std::int64_t p) {
  const int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = checked_pow(p, d, "irreducibility search");
    for (std::uint64_t i = 0; i < count; ++i) {
      if (poly_is_zero(poly_rem(f, monic_at(i, d, p), p))) return false;
    }
  }
  return true;
}

class GfRing final : public Ring {
 public:
  GfRing(std::int64_t p, int k) : p_(p), k_(k) {
    size_ = checked_pow(p, k, "gf");
    for (std::uint64_t i = 0;; ++i) {
      Poly candidate = monic_at(i, k, p);
      if (poly_irreducible(candidate, p)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
  }

  std::string key() const override {
    return "gf:" + std::to_string(p_) + ":" + std::to_string(k_) +
           ":frobenius";
  }
  std::string describe() const override {
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) +
           ") with modulus " + format_poly(modulus_, 'w') +
           " (sigma = Frobenius x -> x^" + std::to_string(p_) + ")";
  }
  bool finite() const override { return true; }
  std::optional<bool> commutative() const override { return true; }
  std::uint64_t size() const override { return size_; }
  std::size_t word_count() const override {
    return static_cast<std::size_t>(k_);
  }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    std::vector<std::int64_t> w(k_);
    for (int i = 0; i < k_; ++i) w[i] = (a.words()[i] + b.words()[i]) % p_;
    return make(std::move(w));
  }
  RingElem neg(const RingElem& a) const override {
    check_operand(a);
    std::vector<std::int64_t> w(k_);
    for (int i = 0; i < k_; ++i) w[i] = (p_ - a.words()[i]) % p_;
    return make(std::move(w));
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    Poly prod = poly_mul_mod_p(Poly(a.words().begin(), a.words().end()),
                               Poly(b.words().begin(), b.words().end()), p_);
    Poly rem = poly_rem(std::move(prod), modulus_, p_);
    rem.resize(k_, 0);
    return make(std::move(rem));
  }
  RingElem sigma(const RingElem& a) const override { return pow(a, p_); }

  RingElem element_at(std::uint64_t index) const override {
    std::vector<std::int64_t> w(k_);
    for (int i = 0; i < k_; ++i) {
      w[i] = static_cast<std::int64_t>(index % p_);
      index /= p_;
    }
    return make(std::move(w));
  }
  std::uint64_t index_of(const RingElem& a) const override {
    check_operand(a);
    std::uint64_t idx = 0;
    for (int i = k_ - 1; i >= 0; --i) {
      idx = idx * p_ + static_cast<std::uint64_t>(a.words()[i]);
    }
    return idx;
  }

  bool is_unit(const RingElem& a) const override {
    check_operand(a);
    return a != zero();
  }
  RingElem inverse(const RingElem& a) const override {
    check_operand(a);
    if (a == zero()) throw Error(ErrorKind::NotAUnit, "not a unit: 0");
    return pow(a, size_ - 2);
  }

  std::string format(const RingElem& a) const override {
    check_operand(a);
    return format_poly(a.words(), 'w');
  }
  RingElem parse(std::string_view text) const override {
    std::vector<std::pair<std::int64_t, int>> terms;
    parse_poly_literal(text, 'w', terms);
    RingElem acc = zero();
    const RingElem w = k_ > 1 ? element_at(static_cast<std::uint64_t>(p_))
                              : one();  // k=1: no generator, w would be 1*...
    for (auto [coeff, exp] : terms) {
      if (k_ == 1 && exp > 0) {
        fail(ErrorKind::Parse, "no generator w in GF(" + std::to_string(p_) +
                                   "); use integer literals");
      }
      RingElem term = scalar(coeff % p_);
      for (int e = 0; e < exp; ++e) term = mul(term, w);
      acc = add(acc, term);
    }
    return acc;
  }

 protected:
  std::vector<std::int64_t> zero_words() const override {
    return std::vector<std::int64_t>(k_, 0);
  }
  std::vector<std::int64_t> one_words() const override {
    std::vector<std::int64_t> w(k_, 0);
    w[0] = 1 % p_;
    return w;
  }

 private:
  RingElem scalar(std::int64_t c) const {
    std::vector<std::int64_t> w(k_, 0);
    w[0] = ((c % p_) + p_) % p_;
    return make(std::move(w));
  }
  RingElem pow(const RingElem& a, std::uint64_t e) const {
    RingElem result = one();
    RingElem base = a;
    while (e > 0) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  std::int64_t p_;
  int k_;
  std::uint64_t size_;
  Poly modulus_;
};

// ---------------------------------------------------------------------------
// Product ring R0 x R0 with swap or projection endomorphism.

class ProdRing final : public Ring {
 public:
  ProdRing(RingPtr inner, bool swap) : inner_(std::move(inner)), swap_(swap) {}

  std::string key() const override {
    return (swap_ ? "prodswap:" : "prodproj:") + inner_->key();
  }
  std::string describe() const override {
    return "(" + inner_->describe() + ")^2 with sigma = " +
           (swap_ ? std::string("swap (a,b) -> (b,a)")
                  : std::string("projection (a,b) -> (a,a)"));
  }
  bool finite() const override { return inner_->finite(); }
  std::optional<bool> commutative() const override {
    return inner_->commutative();
  }
  std::uint64_t size() const override {
    std::uint64_t n = inner_->size();
    if (n > (std::uint64_t(1) << 31)) {
      fail(ErrorKind::InvalidArgument, "product ring too large");
    }
    return n * n;
  }
  std::size_t word_count() const override { return 2 * inner_->word_count(); }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    return zip(a, b, [this](const RingElem& x, const RingElem& y) {
      return inner_->add(x, y);
    });
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    return zip(a, b, [this](const RingElem& x, const RingElem& y) {
      return inner_->mul(x, y);
    });
  }
  RingElem neg(const RingElem& a) const override {
    check_operand(a);
    auto [x, y] = split(a);
    return join(inner_->neg(x), inner_->neg(y));
  }
  RingElem sigma(const RingElem& a) const override {
    check_operand(a);
    auto [x, y] = split(a);
    return swap_ ? join(y, x) : join(x, x);
  }

  RingElem element_at(std::uint64_t index) const override {
    const std::uint64_t n = inner_->size();
    return join(inner_->element_at(index / n), inner_->element_at(index % n));
  }
  std::uint64_t index_of(const RingElem& a) const override {
    check_operand(a);
    auto [x, y] = split(a);
    return inner_->index_of(x) * inner_->size() + inner_->index_of(y);
  }

  std::string format(const RingElem& a) const override {
    check_operand(a);
    auto [x, y] = split(a);
    return "(" + inner_->format(x) + "," + inner_->format(y) + ")";
  }
  RingElem parse(std::string_view text) const override {
    std::string s = strip_spaces(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
      fail(ErrorKind::Parse, "product literal must look like (a,b)");
    }
    std::string_view body(s.data() + 1, s.size() - 2);
    int depth = 0;
    std::size_t comma = std::string::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      if (body[i] == ')') --depth;
      if (body[i] == ',' && depth == 0) {
        comma = i;
        break;
      }
    }
    if (comma == std::string::npos) {
      fail(ErrorKind::Parse, "product literal must look like (a,b)");
    }
    return join(inner_->parse(body.substr(0, comma)),
                inner_->parse(body.substr(comma + 1)));
  }

 protected:
  std::vector<std::int64_t> zero_words() const override {
    return join_words(inner_->zero(), inner_->zero());
  }
  std::vector<std::int64_t> one_words() const override {
    return join_words(inner_->one(), inner_->one());
  }

 private:
  std::pair<RingElem, RingElem> split(const RingElem& a) const {
    const std::size_t w = inner_->word_count();
    std::vector<std::int64_t> x(a.words().begin(), a.words().begin() + w);
    std::vector<std::int64_t> y(a.words().begin() + w, a.words().end());
    return {RingElem(inner_, std::move(x)), RingElem(inner_, std::move(y))};
  }
  static std::vector<std::int64_t> join_words(const RingElem& x,
                                              const RingElem& y) {
    std::vector<std::int64_t> w(x.words().begin(), x.words().end());
    w.insert(w.end(), y.words().begin(), y.words().end());
    return w;
  }
  RingElem join(const RingElem& x, const RingElem& y) const {
    return make(join_words(x, y));
  }
  template <typename F>
  RingElem zip(const RingElem& a, const RingElem& b, F&& op) const {
    auto [ax, ay] = split(a);
    auto [bx, by] = split(b);
    return join(op(ax, bx), op(ay, by));
  }

  RingPtr inner_;
  bool swap_;
};

// ---------------------------------------------------------------------------
// (Z/n)[t]/(t^m) with the substitution endomorphism t -> t^2.

class TruncPolyRing final : public Ring {
 public:
  TruncPolyRing(std::int64_t n, int m) : n_(n), m_(m) {
    size_ = checked_pow(static_cast<std::uint64_t>(n), m, "trunc");
  }

  std::string key() const override {
    return "trunc:" + std::to_string(n_) + ":" + std::to_string(m_) + ":tsq";
  }
  std::string describe() const override {
    return "(Z/" + std::to_string(n_) + ")[t]/(t^" + std::to_string(m_) +
           ") (sigma: t -> t^2)";
  }
  bool finite() const override { return true; }
  std::optional<bool> commutative() const override { return true; }
  std::uint64_t size() const override { return size_; }
  std::size_t word_count() const override {
    return static_cast<std::size_t>(m_);
  }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    std::vector<std::int64_t> w(m_);
    for (int i = 0; i < m_; ++i) w[i] = (a.words()[i] + b.words()[i]) % n_;
    return make(std::move(w));
  }
  RingElem neg(const RingElem& a) const override {
    check_operand(a);
    std::vector<std::int64_t> w(m_);
    for (int i = 0; i < m_; ++i) w[i] = (n_ - a.words()[i]) % n_;
    return make(std::move(w));
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_operands(a, b);
    std::vector<std::int64_t> w(m_, 0);
    for (int i = 0; i < m_; ++i) {
      if (a.words()[i] == 0) continue;
      for (int j = 0; i + j < m_; ++j) {
        w[i + j] = (w[i + j] + a.words()[i] * b.words()[j]) % n_;
      }
    }
    return make(std::move(w));
  }
  RingElem sigma(const RingElem& a) const override {
    check_operand(a);
    std::vector<std::int64_t> w(m_, 0);
    for (int i = 0; 2 * i < m_; ++i) w[2 * i] = a.words()[i];
    return make(std::move(w));
  }

  RingElem element_at(std::uint64_t index) const override {
    std::vector<std::int64_t> w(m_);
    for (int i = 0; i < m_; ++i) {
      w[i] = static_cast<std::int64_t>(index % n_);
      index /= n_;
    }
    return make(std::move(w));
  }
  std::uint64_t index_of(const RingElem& a) const override {
    check_operand(a);
    std::uint64_t idx = 0;
    for (int i = m_ - 1; i >= 0; --i) {
      idx = idx * n_ + static_cast<std::uint64_t>(a.words()[i]);
    }
    return idx;
  }

  std::string format(const RingElem& a) const override {
    check_operand(a);
    return format_poly(a.words(), 't');
  }
  RingElem parse(std::string_view text) const override {
    std::vector<std::pair<std::int64_t, int>> terms;
    parse_poly_literal(text, 't', terms);
    std::vector<std::int64_t> w(m_, 0);
    for (auto [coeff, exp] : terms) {
      if (exp < m_) w[exp] = (w[exp] + coeff % n_) % n_;  // t^e = 0 for e >= m
    }
    return make(std::move(w));
  }

 protected:
  std::vector<std::int64_t> zero_words() const override {
    return std::vector<std::int64_t>(m_, 0);
  }
  std::vector<std::int64_t> one_words() const override {
    std::vector<std::int64_t> w(m_, 0);
    w[0] = 1 % n_;
    return w;
  }

 private:
  std::int64_t n_;
  int m_;
  std::uint64_t size_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Catalog constructors and the ring-spec DSL.

RingPtr make_zmod(std::int64_t n) {
  if (n < 2) {
    fail(ErrorKind::InvalidArgument, "zmod modulus must be >= 2");
  }
  return std::make_shared<ZmodRing>(n);
}

RingPtr make_gf(std::int64_t p, int k) {
  if (!is_prime(p)) {
    fail(ErrorKind::InvalidArgument,
         "gf characteristic must be prime, got " + std::to_string(p));
  }
  if (k < 1 || checked_pow(p, k, "gf") > (std::uint64_t(1) << 20)) {
    fail(ErrorKind::InvalidArgument, "gf extension degree out of range");
  }
  return std::make_shared<GfRing>(p, k);
}

RingPtr make_prod_swap(RingPtr inner) {
  if (!inner) fail(ErrorKind::InvalidArgument, "null inner ring");
  return std::make_shared<ProdRing>(std::move(inner), /*swap=*/true);
}

RingPtr make_prod_proj(RingPtr inner) {
  if (!inner) fail(ErrorKind::InvalidArgument, "null inner ring");
  return std::make_shared<ProdRing>(std::move(inner), /*swap=*/false);
}

RingPtr make_trunc_poly(std::int64_t n, int m) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "trunc modulus must be >= 2");
  if (m < 1) fail(ErrorKind::InvalidArgument, "trunc degree must be >= 1");
  return std::make_shared<TruncPolyRing>(n, m);
}

RingPtr parse_ring_spec(std::string_view spec) {
  std::string s = strip_spaces(spec);
  auto take_prefix = [&s](std::string_view prefix) -> bool {
    if (s.size() > prefix.size() && s.compare(0, prefix.size(), prefix) == 0) {
      s.erase(0, prefix.size());
      return true;
    }
    return false;
  };
  auto split_colon = [](const std::string& body) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      std::size_t next = body.find(':', pos);
      parts.push_back(body.substr(pos, next - pos));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return parts;
  };

  try {
    if (take_prefix("zmod:")) {
      return make_zmod(parse_int(s, "zmod modulus"));
    }
    if (take_prefix("gf:")) {
      auto parts = split_colon(s);
      if (parts.size() != 3 || parts[2] != "frobenius") {
        fail(ErrorKind::Parse, "gf spec must be gf:<p>:<k>:frobenius");
      }
      return make_gf(parse_int(parts[0], "gf characteristic"),
                     static_cast<int>(parse_int(parts[1], "gf degree")));
    }
    if (take_prefix("prodswap:")) return make_prod_swap(parse_ring_spec(s));
    if (take_prefix("prodproj:")) return make_prod_proj(parse_ring_spec(s));
    if (take_prefix("trunc:")) {
      auto parts = split_colon(s);
      if (parts.size() != 3 || parts[2] != "tsq") {
        fail(ErrorKind::Parse, "trunc spec must be trunc:<n>:<m>:tsq");
      }
      return make_trunc_poly(parse_int(parts[0], "trunc modulus"),
                             static_cast<int>(parse_int(parts[1], "trunc degree")));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) {
      throw Error(ErrorKind::Parse, std::string("bad ring spec '") +
                                        std::string(spec) + "': " + e.what());
    }
    throw;
  }
  fail(ErrorKind::Parse,
       "unknown ring spec '" + std::string(spec) +
           "' (expected zmod:, gf:, prodswap:, prodproj:, trunc:)");
}

}  // namespace skewinc
