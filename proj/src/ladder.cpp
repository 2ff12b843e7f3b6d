#include "ladder.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "groebner.hpp"
#include "theta.hpp"

namespace theta2 {

namespace {

int64_t mod_inverse(int64_t a, int64_t m) {
  int64_t t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    const int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw Error(ErrorKind::kUsage, "index not invertible mod l");
  return ((t % m) + m) % m;
}

}  // namespace

Poly spoly_to_poly(const SPoly& p, int64_t r) {
  const int64_t l = p.modulus();
  const int64_t m = l / 2;
  const int64_t rinv = mod_inverse(r, l);
  std::vector<Monomial> terms;
  for (const auto& mono : p.monomials()) {
    Monomial t(static_cast<std::size_t>(m));
    for (const auto& [k, e] : mono) {
      const int64_t var = normalize_index(l, rinv * k);
      if (var == 0)
        throw Error(ErrorKind::kInternal, "bracket index mapped to zero");
      if (e > std::numeric_limits<uint32_t>::max())
        throw Error(ErrorKind::kBudget, "monomial exponent overflow");
      t.e[static_cast<std::size_t>(var - 1)] += static_cast<uint32_t>(e);
    }
    terms.push_back(std::move(t));
  }
  return Poly::from_terms(static_cast<std::size_t>(m), std::move(terms));
}

LadderResult quotient_ladder(int64_t l, int64_t r, uint64_t q, uint64_t j,
                             int64_t check_window) {
  const int64_t rn = normalize_index(l, r);
  if (rn == 0 || std::gcd(rn, l) != 1)
    throw Error(ErrorKind::kUsage, "r must be prime to l");
  if (q == 0 || (q & (q - 1)) != 0)
    throw Error(ErrorKind::kUsage, "projection modulus must be a power of 2");
  if (j >= q) throw Error(ErrorKind::kUsage, "projection residue out of range");

  const SPoly a = SPoly::generator(l, rn);
  SPoly w = SPoly::one(l);
  uint64_t Q = q, J = j;
  int d = 0;
  while (Q > 8) {
    if (J % 2 != 0)
      throw Error(ErrorKind::kUsage, "no S-level ladder; not attempted");
    w = even_part_sqrt(w.mul(a));
    Q /= 2;
    J /= 2;
    ++d;
  }
  const SPoly u_sp = symbolic_project(w.mul(a.pow(Q - 1)), Q, J);

  LadderResult out{spoly_to_poly(u_sp, rn).pow(uint64_t{1} << d),
                   Poly::variable(static_cast<std::size_t>(l / 2), 1)
                       .pow(Q << d),
                   d};

  // numeric cross-check before handing the pair to any certificate
  const int64_t val_v = rn * rn * static_cast<int64_t>(Q << d);
  const int64_t E = check_window + 2 * val_v + 2 * rn * rn;
  const Series direct = theta_series(l, rn, E).inverse().project(q, j);
  const Series num = phi_r(out.u, l, rn, E);
  const Series den = phi_r(out.v, l, rn, E);
  const Series quotient = num.mul(den.inverse());
  if (auto diff = first_difference(direct, quotient)) {
    std::ostringstream os;
    os << "ladder cross-check failed at exponent " << *diff;
    throw Error(ErrorKind::kInternal, os.str());
  }
  return out;
}

}  // namespace theta2
