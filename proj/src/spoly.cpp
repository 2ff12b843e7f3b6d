#include "spoly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>

#include "error.hpp"

namespace theta2 {

namespace {

SMonomial mono_mul(const SMonomial& a, const SMonomial& b) {
  SMonomial out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  return out;
}

SMonomial mono_squared(const SMonomial& m) {
  SMonomial out = m;
  for (auto& [k, e] : out) e *= 2;
  return out;
}

bool mono_all_even(const SMonomial& m) {
  return std::all_of(m.begin(), m.end(),
                     [](const auto& p) { return p.second % 2 == 0; });
}

SMonomial mono_halved(const SMonomial& m) {
  SMonomial out;
  for (const auto& [k, e] : m) {
    if (e / 2 > 0) out.emplace_back(k, e / 2);
  }
  return out;
}

}  // namespace

SPoly SPoly::one(int64_t l) {
  SPoly p(l);
  p.toggle({});
  return p;
}

SPoly SPoly::generator(int64_t l, int64_t k) {
  const int64_t n = normalize_index(l, k);
  SPoly p(l);
  if (n == 0) {
    p.toggle({});
  } else {
    p.toggle({{n, 1}});
  }
  return p;
}

SPoly SPoly::from_monomial(int64_t l, SMonomial m) {
  SPoly p(l);
  p.toggle(m);
  return p;
}

int64_t SPoly::degree() const {
  int64_t d = 0;
  for (const auto& m : monomials_) {
    int64_t t = 0;
    for (const auto& [k, e] : m) t += e;
    d = std::max(d, t);
  }
  return d;
}

void SPoly::toggle(const SMonomial& m) {
  auto it = monomials_.find(m);
  if (it == monomials_.end()) {
    monomials_.insert(m);
  } else {
    monomials_.erase(it);
  }
}

SPoly SPoly::add(const SPoly& other) const {
  SPoly out = *this;
  for (const auto& m : other.monomials_) out.toggle(m);
  return out;
}

SPoly SPoly::mul(const SPoly& other) const {
  SPoly out(l_);
  for (const auto& a : monomials_) {
    for (const auto& b : other.monomials_) {
      out.toggle(mono_mul(a, b));
    }
  }
  return out;
}

SPoly SPoly::mul_monomial(const SMonomial& m) const {
  SPoly out(l_);
  for (const auto& a : monomials_) out.toggle(mono_mul(a, m));
  return out;
}

SPoly SPoly::square() const {
  SPoly out(l_);
  for (const auto& m : monomials_) out.toggle(mono_squared(m));
  return out;
}

SPoly SPoly::pow(uint64_t e) const {
  if (e == 0) return one(l_);
  SPoly acc = *this;
  int top = 63 - std::countl_zero(e);
  for (int k = top - 1; k >= 0; --k) {
    acc = acc.square();
    if ((e >> k) & 1) acc = acc.mul(*this);
  }
  return acc;
}

Series SPoly::eval(int64_t E) const {
  std::map<int64_t, Series> cache;
  auto theta_of = [&](int64_t k) -> const Series& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, theta_series(l_, k, E)).first;
    return it->second;
  };
  Series acc = Series::zero(E);
  for (const auto& m : monomials_) {
    Series term = Series::one(E);
    for (const auto& [k, e] : m) {
      term = term.mul(theta_of(k).pow(static_cast<uint64_t>(e)));
    }
    acc = acc.add(term);
  }
  return acc;
}

std::string SPoly::to_string() const {
  if (monomials_.empty()) return "0";
  std::ostringstream os;
  bool first_m = true;
  for (const auto& m : monomials_) {
    if (!first_m) os << "+";
    first_m = false;
    if (m.empty()) {
      os << "1";
      continue;
    }
    for (const auto& [k, e] : m) {
      os << "[" << k << "]";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

SPoly spoly_parse(int64_t l, const std::string& text) {
  SPoly out(l);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto parse_int = [&]() -> int64_t {
    skip_ws();
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start)
      throw Error(ErrorKind::kUsage, "expected integer in theta expression");
    return std::stoll(text.substr(start, pos - start));
  };

  bool expect_term = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '+') {
      ++pos;
      expect_term = true;
      continue;
    }
    if (!expect_term)
      throw Error(ErrorKind::kUsage, "expected '+' between theta terms");
    // one term: product of factors
    SMonomial mono;
    bool any_factor = false;
    while (true) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '1' &&
          (pos + 1 >= text.size() ||
           !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
        ++pos;  // the constant factor 1
        any_factor = true;
        continue;
      }
      if (pos >= text.size() || text[pos] != '[') break;
      ++pos;  // '['
      const int64_t raw = parse_int();
      skip_ws();
      if (pos >= text.size() || text[pos] != ']')
        throw Error(ErrorKind::kUsage, "expected ']' in theta expression");
      ++pos;
      int64_t e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = parse_int();
        if (e < 0) throw Error(ErrorKind::kUsage, "negative exponent");
      }
      const int64_t k = normalize_index(l, raw);
      if (k != 0 && e > 0) mono = mono_mul(mono, SMonomial{{k, e}});
      any_factor = true;
    }
    if (!any_factor)
      throw Error(ErrorKind::kUsage, "empty term in theta expression");
    out.toggle(mono);
    expect_term = false;
  }
  if (expect_term && !out.is_zero())
    throw Error(ErrorKind::kUsage, "dangling '+' in theta expression");
  return out;
}

namespace {

// Projection table of a single generator [k] (k normalized, nonzero) onto
// residues mod q, q in {2,4,8}: exponents n^2 split by the 2-adic valuation
// of n, and odd squares are 1 mod 8.
std::vector<SPoly> generator_table(int64_t l, int64_t k, uint64_t q) {
  const int64_t h = half_index(l, k);
  const int64_t h2 = half_index(l, h);
  std::vector<SPoly> tab(q, SPoly::zero(l));
  const SPoly odd =
      SPoly::generator(l, k).add(SPoly::generator(l, h).pow(4));
  switch (q) {
    case 2:
      tab[0] = SPoly::generator(l, h).pow(4);
      tab[1] = odd;
      break;
    case 4:
      tab[0] = SPoly::generator(l, h).pow(4);
      tab[1] = odd;
      break;
    case 8:
      tab[0] = SPoly::generator(l, h2).pow(16);
      tab[1] = odd;
      tab[4] = SPoly::generator(l, h).pow(4).add(
          SPoly::generator(l, h2).pow(16));
      break;
    default:
      throw Error(ErrorKind::kInternal, "bad generator table modulus");
  }
  return tab;
}

// All q projections of a monomial at once.
std::vector<SPoly> project_all(int64_t l, const SMonomial& m, uint64_t q) {
  if (q == 1) return {SPoly::from_monomial(l, m)};
  // m = A^2 * B with B squarefree (the odd-exponent generators)
  const SMonomial a = mono_halved(m);
  std::vector<int64_t> b;
  for (const auto& [k, e] : m) {
    if (e % 2 == 1) b.push_back(k);
  }

  // residue table of B via the product rule, one generator at a time
  std::vector<SPoly> tb(q, SPoly::zero(l));
  tb[0] = SPoly::one(l);
  for (int64_t k : b) {
    const std::vector<SPoly> gt = generator_table(l, k, q);
    std::vector<SPoly> next(q, SPoly::zero(l));
    for (uint64_t s = 0; s < q; ++s) {
      if (gt[s].is_zero()) continue;
      for (uint64_t t = 0; t < q; ++t) {
        if (tb[t].is_zero()) continue;
        const uint64_t j = (s + t) % q;
        next[j] = next[j].add(gt[s].mul(tb[t]));
      }
    }
    tb = std::move(next);
  }

  // combine with the square part: p_{q,2c}(A^2) = (p_{q/2,c}(A))^2
  const std::vector<SPoly> pa = project_all(l, a, q / 2);
  std::vector<SPoly> out(q, SPoly::zero(l));
  for (uint64_t c = 0; c < q / 2; ++c) {
    if (pa[c].is_zero()) continue;
    const SPoly sq = pa[c].square();
    for (uint64_t t = 0; t < q; ++t) {
      if (tb[t].is_zero()) continue;
      const uint64_t j = (2 * c + t) % q;
      out[j] = out[j].add(sq.mul(tb[t]));
    }
  }
  return out;
}

}  // namespace

SPoly symbolic_project(const SPoly& p, uint64_t q, uint64_t j) {
  if (q == 0 || (q & (q - 1)) != 0)
    throw Error(ErrorKind::kUsage, "projection modulus must be a power of 2");
  if (q > 8) throw Error(ErrorKind::kUsage, "use quotient ladder");
  if (j >= q) throw Error(ErrorKind::kUsage, "projection residue out of range");
  SPoly out = SPoly::zero(p.modulus());
  for (const auto& m : p.monomials()) {
    out = out.add(project_all(p.modulus(), m, q)[j]);
  }
  return out;
}

namespace {

// sqrt of the product of the odd parts of [b] and [b']: the sum/difference
// rewrite of the quintic relation.
SPoly pair_root(int64_t l, int64_t b, int64_t bp) {
  const int64_t h = half_index(l, b);
  const int64_t hp = half_index(l, bp);
  const SPoly sum_diff = SPoly::generator(l, h + hp).mul(SPoly::generator(l, h - hp));
  const SPoly sq =
      SPoly::generator(l, h).pow(2).mul(SPoly::generator(l, hp).pow(2));
  return sum_diff.add(sq);
}

}  // namespace

SPoly even_part_sqrt(const SPoly& w) {
  const int64_t l = w.modulus();
  SPoly acc = SPoly::zero(l);
  for (const auto& m : w.monomials()) {
    const SMonomial a = mono_halved(m);
    std::vector<int64_t> b;
    for (const auto& [k, e] : m) {
      if (e % 2 == 1) b.push_back(k);
    }
    const std::size_t n = b.size();
    SPoly inner = SPoly::zero(l);
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) % 2 != 0) continue;
      SPoly term = SPoly::one(l);
      std::vector<int64_t> chosen;
      for (std::size_t t = 0; t < n; ++t) {
        if ((mask >> t) & 1) {
          chosen.push_back(b[t]);
        } else {
          term = term.mul(SPoly::generator(l, half_index(l, b[t])).pow(2));
        }
      }
      for (std::size_t t = 0; t + 1 < chosen.size(); t += 2) {
        term = term.mul(pair_root(l, chosen[t], chosen[t + 1]));
      }
      inner = inner.add(term);
    }
    acc = acc.add(inner.mul_monomial(a));
  }
  return acc;
}

SPoly half_square_root(const SPoly& p) {
  const int64_t l = p.modulus();
  SPoly out = SPoly::zero(l);
  std::set<SMonomial> odd;
  for (const auto& m : p.monomials()) {
    if (mono_all_even(m)) {
      out.toggle(mono_halved(m));
    } else {
      odd.insert(m);
    }
  }
  while (!odd.empty()) {
    // look for the three-monomial pattern C*[b][b'] , C*[b][h']^4 , C*[h]^4[b']
    // led by a monomial with exactly two odd-exponent generators
    SMonomial m;
    std::vector<int64_t> odd_idx;
    bool found = false;
    for (const auto& cand : odd) {
      std::vector<int64_t> idx;
      for (const auto& [k, e] : cand) {
        if (e % 2 == 1) idx.push_back(k);
      }
      if (idx.size() == 2) {
        m = cand;
        odd_idx = idx;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::kUsage, "not a certified square");
    const int64_t b = odd_idx[0], bp = odd_idx[1];
    const int64_t h = half_index(l, b), hp = half_index(l, bp);
    // C = m / ([b][b'])
    SMonomial c;
    for (const auto& [k, e] : m) {
      const int64_t drop = (k == b || k == bp) ? 1 : 0;
      if (e - drop > 0) c.emplace_back(k, e - drop);
    }
    const SMonomial p2 =
        mono_mul(c, mono_mul(SMonomial{{b, 1}}, SMonomial{{normalize_index(l, hp), 4}}));
    const SMonomial p3 =
        mono_mul(c, mono_mul(SMonomial{{normalize_index(l, h), 4}}, SMonomial{{bp, 1}}));
    odd.erase(m);
    auto it2 = odd.find(p2);
    if (it2 == odd.end()) throw Error(ErrorKind::kUsage, "not a certified square");
    odd.erase(it2);
    auto it3 = odd.find(p3);
    if (it3 == odd.end()) throw Error(ErrorKind::kUsage, "not a certified square");
    odd.erase(it3);
    if (!mono_all_even(c))
      throw Error(ErrorKind::kUsage, "not a certified square");
    const SPoly root = SPoly::generator(l, h + hp)
                           .mul(SPoly::generator(l, h - hp))
                           .mul_monomial(mono_halved(c));
    out = out.add(root);
  }
  return out;
}

}  // namespace theta2
