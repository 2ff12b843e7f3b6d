#include "poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <sstream>

namespace theta2 {

int64_t Monomial::degree() const {
  int64_t d = 0;
  for (uint32_t x : e) d += x;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e.begin(), e.end(), [](uint32_t x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > other.e[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    const uint64_t s = static_cast<uint64_t>(a.e[i]) + b.e[i];
    if (s > std::numeric_limits<uint32_t>::max())
      throw Error(ErrorKind::kBudget, "monomial exponent overflow");
    out.e[i] = static_cast<uint32_t>(s);
  }
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    out.e[i] = a.e[i] - b.e[i];
  }
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) out.e[i] = std::max(a.e[i], b.e[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i) {
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  }
  return true;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  const int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // equal degree: the one with the smaller last nonzero difference wins
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), [](const Monomial& x, const Monomial& y) {
    return grevlex_cmp(x, y) > 0;
  });
  // cancel duplicate pairs (GF(2))
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(terms[i]);
    i = j;
  }
  Poly p(nvars);
  p.terms_ = std::move(out);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index_1based, uint32_t power) {
  if (index_1based < 1 || index_1based > nvars)
    throw Error(ErrorKind::kUsage, "variable index out of range");
  Monomial m(nvars);
  m.e[index_1based - 1] = power;
  Poly p(nvars);
  p.terms_.push_back(std::move(m));
  return p;
}

Poly Poly::constant_one(std::size_t nvars) {
  Poly p(nvars);
  p.terms_.emplace_back(nvars);
  return p;
}

const Monomial& Poly::leading() const {
  if (terms_.empty()) throw Error(ErrorKind::kInternal, "leading of zero");
  return terms_.front();
}

int64_t Poly::degree() const {
  int64_t d = -1;
  for (const auto& m : terms_) d = std::max(d, m.degree());
  return d;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly out(a.nvars_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end()) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end()) {
      out.terms_.push_back(*ib++);
    } else {
      const int c = grevlex_cmp(*ia, *ib);
      if (c > 0) {
        out.terms_.push_back(*ia++);
      } else if (c < 0) {
        out.terms_.push_back(*ib++);
      } else {
        ++ia;
        ++ib;  // cancellation
      }
    }
  }
  return out;
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(t * m);
  return out;  // multiplying by a monomial preserves the order
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.nvars_);
  for (const auto& t : b.terms_) {
    out = out + a.times_monomial(t);
  }
  return out;
}

Poly Poly::square() const {
  Poly out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(t * t);
  return out;
}

Poly Poly::pow(uint64_t e) const {
  if (e == 0) return constant_one(nvars_);
  Poly acc = *this;
  int top = 63 - std::countl_zero(e);
  for (int k = top - 1; k >= 0; --k) {
    acc = acc.square();
    if ((e >> k) & 1) acc = acc * (*this);
  }
  return acc;
}

bool operator<(const Poly& a, const Poly& b) {
  // term-by-term grevlex comparison; deterministic total order
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = grevlex_cmp(a.terms_[i], b.terms_[i]);
    if (c != 0) return c < 0;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : terms_) {
    if (!first) os << "+";
    first = false;
    if (m.is_one()) {
      os << "1";
      continue;
    }
    bool any = false;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (any) os << "*";
      os << "x" << (i + 1);
      if (m.e[i] != 1) os << "^" << m.e[i];
      any = true;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::size_t nvars, const std::string& text)
      : nvars_(nvars), text_(text) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw Error(ErrorKind::kUsage, "trailing input in polynomial");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  uint64_t parse_uint() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw Error(ErrorKind::kUsage, "expected number in polynomial");
    return std::stoull(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    while (peek('+')) {
      ++pos_;
      acc = acc + term();
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('x') || peek('(')) {
        acc = acc * factor();  // juxtaposition
      } else if (peek('1')) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek('^')) {
      ++pos_;
      base = base.pow(parse_uint());
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= text_.size())
      throw Error(ErrorKind::kUsage, "unexpected end of polynomial");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')'))
        throw Error(ErrorKind::kUsage, "expected ')' in polynomial");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const uint64_t idx = parse_uint();
      if (idx < 1 || idx > nvars_)
        throw Error(ErrorKind::kUsage, "variable index out of range");
      return Poly::variable(nvars_, idx);
    }
    if (c == '1') {
      ++pos_;
      return Poly::constant_one(nvars_);
    }
    if (c == '0') {
      ++pos_;
      return Poly(nvars_);
    }
    throw Error(ErrorKind::kUsage, "unexpected character in polynomial");
  }

  std::size_t nvars_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly poly_parse(std::size_t nvars, const std::string& text) {
  return PolyParser(nvars, text).parse();
}

}  // namespace theta2
