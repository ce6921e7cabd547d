#include "skewinc/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace skewinc {

namespace {

constexpr std::uint64_t kTwistTableCap = 4096;

std::string strip_ws(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

int parse_basis_index(std::string_view token, int n) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::Parse,
         "expected an element index, got '" + std::string(token) + "'");
  }
  if (v < 1 || v > n) {
    fail(ErrorKind::Parse, "basis index " + std::to_string(v) +
                               " out of range 1.." + std::to_string(n));
  }
  return v - 1;
}

/// True when the literal has a '+' or '*' outside all parentheses, in which
/// case it must be parenthesized to survive the element grammar.
bool needs_parens(std::string_view literal) {
  int depth = 0;
  for (char c : literal) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '*')) return true;
  }
  return false;
}

/// True when the whole string is wrapped by one matching pair of parens.
bool fully_parenthesized(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0) return false;  // closed before the end
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// SkewElement

RingElem SkewElement::at(int i, int j) const {
  if (!ctx_) fail(ErrorKind::InvalidArgument, "empty algebra element");
  int p = ctx_->pair_index(i, j);
  if (p < 0) {
    fail(ErrorKind::UnsupportedPair,
         "elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
             " are not comparable");
  }
  for (const auto& [idx, value] : coeffs_) {
    if (idx == p) return value;
  }
  return ctx_->ring()->zero();
}

bool SkewElement::operator==(const SkewElement& other) const {
  if (!ctx_ || !other.ctx_) return ctx_ == other.ctx_;
  if (ctx_ != other.ctx_ && !ctx_->same_as(*other.ctx_)) return false;
  return coeffs_ == other.coeffs_;
}

SkewElement SkewElement::operator+(const SkewElement& other) const {
  return ctx_->add(*this, other);
}
SkewElement SkewElement::operator-(const SkewElement& other) const {
  return ctx_->sub(*this, other);
}
SkewElement SkewElement::operator*(const SkewElement& other) const {
  return ctx_->multiply(*this, other);
}
SkewElement SkewElement::operator-() const { return ctx_->neg(*this); }

// ---------------------------------------------------------------------------
// AlgebraContext

AlgebraContext::AlgebraContext(Poset poset, RingPtr ring)
    : poset_(std::move(poset)), ring_(std::move(ring)) {
  const int n = poset_.size();
  pairs_ = poset_.comparable_pairs();
  pair_index_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    pair_index_[static_cast<std::size_t>(pairs_[p].first) * n +
                pairs_[p].second] = static_cast<int>(p);
  }
  if (ring_->finite() && ring_->size() <= kTwistTableCap && n > 1) {
    const std::uint64_t rs = ring_->size();
    twist_table_.resize(n);  // powers 0..n-1 are the only ones that occur
    twist_table_[0].resize(rs);
    for (std::uint64_t i = 0; i < rs; ++i) {
      twist_table_[0][i] = static_cast<std::uint32_t>(i);
    }
    for (int k = 1; k < n; ++k) {
      twist_table_[k].resize(rs);
      for (std::uint64_t i = 0; i < rs; ++i) {
        RingElem image = ring_->sigma(ring_->element_at(twist_table_[k - 1][i]));
        twist_table_[k][i] = static_cast<std::uint32_t>(ring_->index_of(image));
      }
    }
  }
}

ContextPtr AlgebraContext::create(Poset poset, RingPtr ring) {
  if (!ring) fail(ErrorKind::InvalidArgument, "null ring");
  return ContextPtr(new AlgebraContext(std::move(poset), std::move(ring)));
}

int AlgebraContext::pair_index(int i, int j) const {
  const int n = poset_.size();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    fail(ErrorKind::InvalidArgument, "element index out of range");
  }
  return pair_index_[static_cast<std::size_t>(i) * n + j];
}

RingElem AlgebraContext::twist(int k, const RingElem& r) const {
  if (k == 0) return r;
  if (!twist_table_.empty() && k < static_cast<int>(twist_table_.size())) {
    return ring_->element_at(twist_table_[k][ring_->index_of(r)]);
  }
  return ring_->sigma_pow(k, r);
}

bool AlgebraContext::same_as(const AlgebraContext& other) const {
  return this == &other ||
         (poset_ == other.poset_ && same_ring(*ring_, *other.ring_));
}

void AlgebraContext::check_element(const SkewElement& f) const {
  if (!f.valid() || !same_as(*f.context())) {
    fail(ErrorKind::SpecMismatch,
         "element does not belong to this algebra (ring " + ring_->key() + ")");
  }
}

void AlgebraContext::check_elements(const SkewElement& f,
                                    const SkewElement& g) const {
  check_element(f);
  check_element(g);
}

SkewElement AlgebraContext::normalized(
    std::vector<std::pair<int, RingElem>> coeffs) const {
  std::stable_sort(coeffs.begin(), coeffs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, RingElem>> out;
  out.reserve(coeffs.size());
  const RingElem zero = ring_->zero();
  for (auto& entry : coeffs) {
    if (!out.empty() && out.back().first == entry.first) {
      out.back().second = ring_->add(out.back().second, entry.second);
    } else {
      out.push_back(std::move(entry));
    }
  }
  std::erase_if(out, [&](const auto& e) { return e.second == zero; });
  return make(std::move(out));
}

SkewElement AlgebraContext::zero() const { return make({}); }

SkewElement AlgebraContext::delta() const { return embed(ring_->one()); }

SkewElement AlgebraContext::embed(const RingElem& r) const {
  ring_->check_operand(r);
  if (r == ring_->zero()) return zero();
  std::vector<std::pair<int, RingElem>> coeffs;
  for (int i = 0; i < poset_.size(); ++i) {
    coeffs.emplace_back(pair_index(i, i), r);
  }
  return make(std::move(coeffs));
}

SkewElement AlgebraContext::term(const RingElem& r, int i, int j) const {
  ring_->check_operand(r);
  int p = pair_index(i, j);
  if (p < 0) {
    fail(ErrorKind::UnsupportedPair,
         "e[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
             "]: elements are not comparable in this poset");
  }
  if (r == ring_->zero()) return zero();
  return make({{p, r}});
}

SkewElement AlgebraContext::add(const SkewElement& f,
                                const SkewElement& g) const {
  check_elements(f, g);
  std::vector<std::pair<int, RingElem>> coeffs = f.coeffs();
  coeffs.insert(coeffs.end(), g.coeffs().begin(), g.coeffs().end());
  return normalized(std::move(coeffs));
}

SkewElement AlgebraContext::neg(const SkewElement& f) const {
  check_element(f);
  std::vector<std::pair<int, RingElem>> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const auto& [p, value] : f.coeffs()) {
    coeffs.emplace_back(p, ring_->neg(value));
  }
  return make(std::move(coeffs));
}

SkewElement AlgebraContext::sub(const SkewElement& f,
                                const SkewElement& g) const {
  return add(f, neg(g));
}

SkewElement AlgebraContext::multiply(const SkewElement& f,
                                     const SkewElement& g) const {
  check_elements(f, g);
  std::vector<std::pair<int, RingElem>> coeffs;
  for (const auto& [p, fv] : f.coeffs()) {
    const auto [i, k] = pairs_[p];
    for (const auto& [q, gv] : g.coeffs()) {
      const auto [k2, j] = pairs_[q];
      if (k2 != k) continue;
      // f(x_i,x_k) * sigma^(k-i)(g(x_k,x_j)) contributes at (x_i,x_j).
      coeffs.emplace_back(pair_index(i, j), ring_->mul(fv, twist(k - i, gv)));
    }
  }
  return normalized(std::move(coeffs));
}

SkewElement AlgebraContext::scale(const RingElem& r, const SkewElement& f) const {
  check_element(f);
  ring_->check_operand(r);
  std::vector<std::pair<int, RingElem>> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const auto& [p, value] : f.coeffs()) {
    coeffs.emplace_back(p, ring_->mul(r, value));
  }
  return normalized(std::move(coeffs));
}

SkewElement AlgebraContext::restrict_diagonal(const SkewElement& f) const {
  check_element(f);
  std::vector<std::pair<int, RingElem>> coeffs;
  for (const auto& [p, value] : f.coeffs()) {
    if (pairs_[p].first == pairs_[p].second) coeffs.emplace_back(p, value);
  }
  return make(std::move(coeffs));
}

bool AlgebraContext::is_diagonal(const SkewElement& f) const {
  check_element(f);
  return std::all_of(f.coeffs().begin(), f.coeffs().end(), [&](const auto& e) {
    return pairs_[e.first].first == pairs_[e.first].second;
  });
}

SkewElement AlgebraContext::sandwich(const SkewElement& f, int x, int y) const {
  return multiply(multiply(basis(x, x), f), basis(y, y));
}

std::uint64_t AlgebraContext::element_count() const {
  if (!ring_->finite()) {
    fail(ErrorKind::UnsupportedQuery,
         "enumeration requires a finite ring (ring: " + ring_->key() + ")");
  }
  const std::uint64_t rs = ring_->size();
  std::uint64_t count = 1;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (rs != 0 && count > (std::uint64_t(1) << 62) / rs) {
      fail(ErrorKind::UnsupportedQuery, "algebra too large to enumerate");
    }
    count *= rs;
  }
  return count;
}

SkewElement AlgebraContext::element_at(std::uint64_t index) const {
  const std::uint64_t rs = ring_->size();
  std::vector<std::pair<int, RingElem>> coeffs;
  const RingElem zero = ring_->zero();
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    RingElem v = ring_->element_at(index % rs);
    index /= rs;
    if (v != zero) coeffs.emplace_back(static_cast<int>(p), v);
  }
  return make(std::move(coeffs));
}

std::uint64_t AlgebraContext::index_of(const SkewElement& f) const {
  check_element(f);
  const std::uint64_t rs = ring_->size();
  std::uint64_t index = 0;
  for (int p = static_cast<int>(pairs_.size()) - 1; p >= 0; --p) {
    std::uint64_t digit = 0;
    for (const auto& [q, value] : f.coeffs()) {
      if (q == p) digit = ring_->index_of(value);
    }
    index = index * rs + digit;
  }
  return index;
}

std::vector<SkewElement> AlgebraContext::enumerate(std::uint64_t bound) const {
  const std::uint64_t count = element_count();
  if (count > bound) {
    fail(ErrorKind::UnsupportedQuery,
         "algebra has " + std::to_string(count) +
             " elements, above the enumeration bound " + std::to_string(bound));
  }
  std::vector<SkewElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(element_at(i));
  return out;
}

std::string AlgebraContext::format(const SkewElement& f) const {
  check_element(f);
  if (f.is_zero()) return "0";
  std::vector<std::string> parts;
  auto render = [&](int p) {
    for (const auto& [q, value] : f.coeffs()) {
      if (q != p) continue;
      std::string lit = ring_->format(value);
      if (needs_parens(lit)) lit = "(" + lit + ")";
      const auto [i, j] = pairs_[p];
      std::string basis =
          i == j ? "e[" + std::to_string(i + 1) + "]"
                 : "e[" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                       "]";
      parts.push_back(lit + "*" + basis);
    }
  };
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (pairs_[p].first == pairs_[p].second) render(static_cast<int>(p));
  }
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    if (pairs_[p].first != pairs_[p].second) render(static_cast<int>(p));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

SkewElement AlgebraContext::parse(std::string_view text) const {
  std::string s = strip_ws(text);
  if (s.empty()) fail(ErrorKind::Parse, "empty element");
  if (s == "0") return zero();

  std::vector<std::pair<int, RingElem>> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    // Split at top-level '+'.
    int depth = 0;
    std::size_t end = pos;
    while (end < s.size() && (depth > 0 || s[end] != '+')) {
      if (s[end] == '(') ++depth;
      if (s[end] == ')') --depth;
      ++end;
    }
    std::string_view term(s.data() + pos, end - pos);
    pos = end < s.size() ? end + 1 : s.size();
    if (term.empty()) fail(ErrorKind::Parse, "empty term in element");

    // Separate the basis token from the optional coefficient.
    std::string_view coeff;
    bool is_delta = false;
    int bi = -1, bj = -1;
    auto take_coeff = [&](std::size_t basis_start) {
      if (basis_start == 0) {
        coeff = {};
      } else if (term[basis_start - 1] == '*') {
        coeff = term.substr(0, basis_start - 1);
      } else {
        fail(ErrorKind::Parse, "malformed term '" + std::string(term) + "'");
      }
    };
    if (term.size() >= 5 && term.substr(term.size() - 5) == "delta") {
      is_delta = true;
      take_coeff(term.size() - 5);
    } else if (term.back() == ']') {
      std::size_t open = term.rfind("e[");
      if (open == std::string_view::npos) {
        fail(ErrorKind::Parse, "malformed term '" + std::string(term) + "'");
      }
      std::string_view body = term.substr(open + 2, term.size() - open - 3);
      std::size_t comma = body.find(',');
      if (comma == std::string_view::npos) {
        bi = bj = parse_basis_index(body, poset_.size());
      } else {
        bi = parse_basis_index(body.substr(0, comma), poset_.size());
        bj = parse_basis_index(body.substr(comma + 1), poset_.size());
      }
      take_coeff(open);
    } else {
      fail(ErrorKind::Parse, "term '" + std::string(term) +
                                 "' must end in delta, e[i], or e[i,j]");
    }

    RingElem value = ring_->one();
    if (!coeff.empty()) {
      if (fully_parenthesized(coeff)) {
        // Try the raw literal first (product literals carry their own
        // parens); fall back to the stripped form.
        try {
          value = ring_->parse(coeff);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::Parse) throw;
          value = ring_->parse(coeff.substr(1, coeff.size() - 2));
        }
      } else {
        value = ring_->parse(coeff);
      }
    }

    if (is_delta) {
      for (int i = 0; i < poset_.size(); ++i) {
        coeffs.emplace_back(pair_index(i, i), value);
      }
    } else {
      int p = pair_index(bi, bj);
      if (p < 0) {
        fail(ErrorKind::UnsupportedPair,
             "e[" + std::to_string(bi + 1) + "," + std::to_string(bj + 1) +
                 "]: elements are not comparable in this poset");
      }
      coeffs.emplace_back(p, value);
    }
  }
  return normalized(std::move(coeffs));
}

}  // namespace skewinc
