#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "theta.hpp"

namespace theta2 {

namespace {

// Exponent vectors packed into one 128-bit key whose integer order is
// grevlex: degree in the top field, then the complemented exponents from
// the last variable down.  Fits m <= 7 at 16 bits per field; reductions
// with larger exponents fall outside the certificates this engine runs.
using u128 = unsigned __int128;
constexpr uint32_t kFieldMax = 0xffffu;

u128 pack_key(const Monomial& m) {
  const int64_t deg = m.degree();
  if (deg > kFieldMax || m.nvars() > 7)
    throw Error(ErrorKind::kBudget, "monomial exponent overflow");
  u128 key = static_cast<u128>(deg);
  for (std::size_t i = m.e.size(); i-- > 0;) {
    key = (key << 16) | (kFieldMax - m.e[i]);
  }
  return key;
}

Monomial unpack_key(u128 key, std::size_t nvars) {
  Monomial m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    m.e[i] = kFieldMax - static_cast<uint32_t>(key & kFieldMax);
    key >>= 16;
  }
  return m;
}

using WorkSet = std::set<u128, std::greater<u128>>;

void toggle(WorkSet& w, u128 key) {
  auto it = w.find(key);
  if (it == w.end()) {
    w.insert(key);
  } else {
    w.erase(it);
  }
}

Poly normal_form_impl(const Poly& p, std::span<const Poly> basis,
                      std::ptrdiff_t skip) {
  const std::size_t nvars = p.nvars();
  WorkSet work;
  for (const Monomial& t : p.terms()) work.insert(pack_key(t));
  std::vector<Monomial> kept;
  // packed terms of each reducer plus its per-variable exponent maxima,
  // built on first use
  std::vector<std::vector<u128>> packed(basis.size());
  std::vector<Monomial> maxexp(basis.size(), Monomial(0));
  while (!work.empty()) {
    const Monomial lt = unpack_key(*work.begin(), nvars);
    const Poly* reducer = nullptr;
    std::size_t ri = 0;
    for (std::size_t gi = 0; gi < basis.size(); ++gi) {
      if (static_cast<std::ptrdiff_t>(gi) == skip) continue;
      const Poly& g = basis[gi];
      if (!g.is_zero() && g.leading().divides(lt)) {
        reducer = &g;
        ri = gi;
        break;
      }
    }
    if (reducer) {
      if (packed[ri].empty()) {
        packed[ri].reserve(reducer->size());
        Monomial mx(nvars);
        for (const Monomial& t : reducer->terms()) {
          packed[ri].push_back(pack_key(t));
          for (std::size_t i = 0; i < nvars; ++i)
            mx.e[i] = std::max(mx.e[i], t.e[i]);
        }
        maxexp[ri] = std::move(mx);
      }
      // multiplying by the quotient q adds q_i to each exponent: on the
      // packed form that subtracts q_i from the complemented field and adds
      // deg(q) to the degree field, provided no field overflows
      const Monomial q = lt / reducer->leading();
      u128 sub = 0;
      int64_t qdeg = 0;
      for (std::size_t i = nvars; i-- > 0;) {
        if (maxexp[ri].e[i] + static_cast<int64_t>(q.e[i]) > kFieldMax)
          throw Error(ErrorKind::kBudget, "monomial exponent overflow");
        sub = (sub << 16) | q.e[i];
        qdeg += q.e[i];
      }
      if (reducer->degree() + qdeg > kFieldMax)
        throw Error(ErrorKind::kBudget, "monomial exponent overflow");
      const u128 add = static_cast<u128>(qdeg) << (16 * nvars);
      for (const u128 kt : packed[ri]) {
        toggle(work, kt + add - sub);
      }
    } else {
      kept.push_back(lt);
      work.erase(work.begin());
    }
  }
  return Poly::from_terms(p.nvars(), std::move(kept));
}

}  // namespace

Poly normal_form(const Poly& p, std::span<const Poly> basis) {
  return normal_form_impl(p, basis, -1);
}

namespace {

struct PairKey {
  int64_t deg;
  Monomial lcm_m;
  std::size_t i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    const int c = grevlex_cmp(lcm_m, o.lcm_m);
    if (c != 0) return c < 0;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

// Canonical form: minimal generators, each fully tail-reduced, sorted.
std::vector<Poly> interreduce(std::vector<Poly> basis) {
  // drop elements whose leading term is divisible by another's
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (basis[j].leading().divides(basis[i].leading())) {
        if (grevlex_cmp(basis[j].leading(), basis[i].leading()) != 0 || j < i) {
          redundant = true;
          break;
        }
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // tail-reduce each against the others until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      Poly reduced = normal_form_impl(minimal[i], minimal,
                                      static_cast<std::ptrdiff_t>(i));
      if (!(reduced == minimal[i])) {
        minimal[i] = std::move(reduced);
        changed = true;
      }
    }
    minimal.erase(std::remove_if(minimal.begin(), minimal.end(),
                                 [](const Poly& p) { return p.is_zero(); }),
                  minimal.end());
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const Poly& a, const Poly& b) { return b < a; });
  return minimal;
}

}  // namespace

std::vector<Poly> buchberger(std::vector<Poly> gens, int64_t pair_budget,
                             GroebnerStats* stats) {
  std::vector<Poly> basis;
  for (auto& g : gens) {
    if (!g.is_zero()) basis.push_back(std::move(g));
  }
  if (basis.empty()) return {};

  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto push_pairs_for = [&](std::size_t nw) {
    for (std::size_t i = 0; i < nw; ++i) {
      const Monomial l = lcm(basis[i].leading(), basis[nw].leading());
      queue.insert({l.degree(), l, i, nw});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  st.pairs_processed = 0;

  while (!queue.empty()) {
    const PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    done.insert({pk.i, pk.j});

    const Poly& f = basis[pk.i];
    const Poly& g = basis[pk.j];
    if (coprime(f.leading(), g.leading())) continue;  // first criterion

    // chain criterion: some basis element k divides the lcm and both side
    // pairs were already treated
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j || basis[k].is_zero()) continue;
      if (!basis[k].leading().divides(pk.lcm_m)) continue;
      const auto p1 = std::minmax(pk.i, k);
      const auto p2 = std::minmax(pk.j, k);
      if (done.count({p1.first, p1.second}) && done.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    if (++st.pairs_processed > pair_budget) {
      st.basis_size = basis.size();
      std::ostringstream os;
      os << "groebner pair budget exceeded: " << st.pairs_processed
         << " pairs processed, basis size " << basis.size();
      throw Error(ErrorKind::kBudget, os.str());
    }

    const Poly spoly = f.times_monomial(pk.lcm_m / f.leading()) +
                       g.times_monomial(pk.lcm_m / g.leading());
    const Poly r = normal_form(spoly, basis);
    if (!r.is_zero()) {
      basis.push_back(r);
      const std::size_t t = basis.size() - 1;
      // discard queued pairs whose lcm the new leading term divides strictly
      const Monomial& lt_t = basis[t].leading();
      for (auto it = queue.begin(); it != queue.end();) {
        if (lt_t.divides(it->lcm_m) &&
            lcm(basis[it->i].leading(), lt_t) != it->lcm_m &&
            lcm(basis[it->j].leading(), lt_t) != it->lcm_m) {
          it = queue.erase(it);
        } else {
          ++it;
        }
      }
      push_pairs_for(t);
    }
  }

  auto reduced = interreduce(std::move(basis));
  st.basis_size = reduced.size();
  return reduced;
}

const std::vector<Poly>& IdealF2::reduced_basis(int64_t pair_budget) const {
  if (!cached_basis_) {
    cached_basis_ = buchberger(generators_, pair_budget);
  }
  return *cached_basis_;
}

bool IdealF2::contains(const Poly& p, int64_t pair_budget) const {
  return normal_form(p, reduced_basis(pair_budget)).is_zero();
}

bool ideal_member(const Poly& p, const IdealF2& ideal, const RunConfig& cfg) {
  return ideal.contains(p, cfg.pair_budget);
}

bool ideal_equal(const IdealF2& lhs, const IdealF2& rhs, const RunConfig& cfg) {
  auto subset_syntactic = [](const IdealF2& a, const IdealF2& b) {
    // every generator of a appears among b's generators
    for (const Poly& g : a.generators()) {
      if (std::find(b.generators().begin(), b.generators().end(), g) ==
          b.generators().end())
        return false;
    }
    return true;
  };
  auto subset_by_membership = [&](const IdealF2& a, const IdealF2& b) {
    for (const Poly& g : a.generators()) {
      if (!b.contains(g, cfg.pair_budget)) return false;
    }
    return true;
  };
  if (subset_syntactic(lhs, rhs)) return subset_by_membership(rhs, lhs);
  if (subset_syntactic(rhs, lhs)) return subset_by_membership(lhs, rhs);
  return subset_by_membership(lhs, rhs) && subset_by_membership(rhs, lhs);
}

std::vector<Poly> quintic_generators(int64_t l) {
  if (l < 3 || l % 2 == 0)
    throw Error(ErrorKind::kUsage, "l must be an odd integer >= 3");
  const int64_t m = l / 2;
  // fold indices 1..2m back into 1..m
  auto var = [&](int64_t k, uint32_t power) {
    if (k > m) k = l - k;
    if (k < 1 || k > m)
      throw Error(ErrorKind::kInternal, "quintic index folded out of range");
    return Poly::variable(static_cast<std::size_t>(m),
                          static_cast<std::size_t>(k), power);
  };
  std::vector<Poly> gens;
  for (int64_t i = 2; i <= m; ++i) {
    for (int64_t j = 1; j < i; ++j) {
      const Poly r = var(i, 4) * var(2 * j, 1) + var(j, 4) * var(2 * i, 1) +
                     var(2 * i, 1) * var(2 * j, 1) + var(i + j, 2) * var(i - j, 2);
      gens.push_back(r);
    }
  }
  return gens;
}

IdealF2 quintic_ideal(int64_t l) {
  const int64_t m = l / 2;
  return IdealF2(static_cast<std::size_t>(m), quintic_generators(l));
}

Series phi_r(const Poly& p, int64_t l, int64_t r, int64_t E) {
  if (std::gcd(normalize_index(l, r), l) != 1 || normalize_index(l, r) == 0)
    throw Error(ErrorKind::kUsage, "r must be prime to l");
  std::map<int64_t, Series> cache;
  auto theta_of = [&](int64_t k) -> const Series& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, theta_series(l, k, E)).first;
    return it->second;
  };
  Series acc = Series::zero(E);
  for (const Monomial& mono : p.terms()) {
    Series term = Series::one(E);
    for (std::size_t k = 0; k < mono.e.size(); ++k) {
      if (mono.e[k] == 0) continue;
      const int64_t idx = normalize_index(l, r * static_cast<int64_t>(k + 1));
      term = term.mul(theta_of(idx).pow(mono.e[k]));
    }
    acc = acc.add(term);
  }
  return acc;
}

bool certify_quotient(const Poly& u, const Poly& v, int64_t l,
                      const RunConfig& cfg) {
  const int64_t m = l / 2;
  std::vector<Poly> nv = quintic_generators(l);
  nv.push_back(v);
  std::vector<Poly> nuv = nv;
  nuv.push_back(u);
  return ideal_equal(IdealF2(static_cast<std::size_t>(m), std::move(nv)),
                     IdealF2(static_cast<std::size_t>(m), std::move(nuv)), cfg);
}

}  // namespace theta2
