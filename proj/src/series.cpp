#include "series.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>

#include "clmul.hpp"

namespace theta2 {

namespace {

inline size_t words_for(int64_t bits) {
  return bits <= 0 ? 0 : static_cast<size_t>((bits + 63) >> 6);
}

inline void set_bit(std::vector<uint64_t>& w, int64_t t) {
  w[static_cast<size_t>(t >> 6)] |= uint64_t{1} << (static_cast<uint64_t>(t) & 63);
}

inline int get_bit(const std::vector<uint64_t>& w, int64_t t) {
  return static_cast<int>((w[static_cast<size_t>(t >> 6)] >>
                           (static_cast<uint64_t>(t) & 63)) &
                          1);
}

// Clears bits at positions >= nbits in the last word.
inline void mask_tail(std::vector<uint64_t>& w, int64_t nbits) {
  if (w.empty()) return;
  const uint64_t rem = static_cast<uint64_t>(nbits) & 63;
  if (rem != 0) w.back() &= (uint64_t{1} << rem) - 1;
}

// Truncated carryless product: first `keep` bits of a*b, where a has abits
// valid bits and b has bbits.
std::vector<uint64_t> mul_trunc(const std::vector<uint64_t>& a, int64_t abits,
                                const std::vector<uint64_t>& b, int64_t bbits,
                                int64_t keep) {
  const int64_t ta = std::min(abits, keep);
  const int64_t tb = std::min(bbits, keep);
  std::vector<uint64_t> wa(a.begin(), a.begin() + words_for(ta));
  std::vector<uint64_t> wb(b.begin(), b.begin() + words_for(tb));
  mask_tail(wa, ta);
  mask_tail(wb, tb);
  std::vector<uint64_t> prod(wa.size() + wb.size(), 0);
  clmul_words(wa.data(), wa.size(), wb.data(), wb.size(), prod.data());
  prod.resize(words_for(keep));
  mask_tail(prod, keep);
  return prod;
}

const uint16_t* spread_table() {
  // byte b -> 16-bit word with the bits of b interleaved with zeros
  static uint16_t tab[256];
  static const bool init = [] {
    for (int v = 0; v < 256; ++v) {
      uint16_t s = 0;
      for (int k = 0; k < 8; ++k)
        if (v & (1 << k)) s |= static_cast<uint16_t>(1u << (2 * k));
      tab[v] = s;
    }
    return true;
  }();
  (void)init;
  return tab;
}

}  // namespace

Series Series::normalized(int64_t val, int64_t bound,
                          std::vector<uint64_t> bits) {
  const int64_t len = bound - val;
  if (len <= 0) return zero(bound);
  assert(static_cast<int64_t>(bits.size()) >= static_cast<int64_t>(words_for(len)));
  bits.resize(words_for(len));
  mask_tail(bits, len);
  int64_t t0 = -1;
  for (size_t w = 0; w < bits.size(); ++w) {
    if (bits[w] != 0) {
      t0 = static_cast<int64_t>(w) * 64 + std::countr_zero(bits[w]);
      break;
    }
  }
  if (t0 < 0) return zero(bound);
  if (t0 > 0) {
    const int64_t nlen = len - t0;
    std::vector<uint64_t> shifted(words_for(nlen), 0);
    const int64_t wshift = t0 >> 6;
    const uint64_t bshift = static_cast<uint64_t>(t0) & 63;
    for (size_t i = 0; i < shifted.size(); ++i) {
      const size_t s = i + static_cast<size_t>(wshift);
      uint64_t w = s < bits.size() ? (bits[s] >> bshift) : 0;
      if (bshift != 0 && s + 1 < bits.size()) w |= bits[s + 1] << (64 - bshift);
      shifted[i] = w;
    }
    mask_tail(shifted, nlen);
    bits = std::move(shifted);
    val += t0;
  }
  return Series(val, bound, std::move(bits));
}

Series Series::monomial(int64_t exponent, int64_t bound) {
  if (exponent >= bound)
    throw Error(ErrorKind::kUsage, "monomial exponent outside bound");
  std::vector<uint64_t> bits(words_for(bound - exponent), 0);
  bits[0] = 1;
  return Series(exponent, bound, std::move(bits));
}

Series Series::from_support(std::span<const int64_t> exponents, int64_t bound) {
  if (exponents.empty()) return zero(bound);
  int64_t lo = *std::min_element(exponents.begin(), exponents.end());
  std::vector<uint64_t> bits(words_for(bound - lo), 0);
  for (int64_t e : exponents) {
    if (e >= bound)
      throw Error(ErrorKind::kUsage, "support exponent outside bound");
    set_bit(bits, e - lo);
  }
  return normalized(lo, bound, std::move(bits));
}

int Series::coeff_at(int64_t n) const {
  if (n >= bound_)
    throw Error(ErrorKind::kPrecision, "outside precision window");
  if (n < val_) return 0;
  return bit(n - val_);
}

Series Series::add(const Series& other) const {
  const int64_t hi = std::min(bound_, other.bound_);
  const int64_t lo = std::min({val_, other.val_, hi});
  std::vector<uint64_t> bits(words_for(hi - lo), 0);
  auto xor_in = [&](const Series& s) {
    const int64_t from = s.val_;
    const int64_t to = std::min(s.bound_, hi);
    for (int64_t t = from; t < to; ++t) {
      if (s.bit(t - s.val_)) {
        bits[static_cast<size_t>((t - lo) >> 6)] ^=
            uint64_t{1} << (static_cast<uint64_t>(t - lo) & 63);
      }
    }
  };
  if (!is_zero()) xor_in(*this);
  if (!other.is_zero()) xor_in(other);
  return normalized(lo, hi, std::move(bits));
}

Series Series::mul(const Series& other) const {
  const int64_t bound = std::min(bound_ + other.val_, other.bound_ + val_);
  if (is_zero() || other.is_zero()) return zero(bound);
  const int64_t la = bound_ - val_;
  const int64_t lb = other.bound_ - other.val_;
  const int64_t keep = std::min(la, lb);
  std::vector<uint64_t> bits = mul_trunc(bits_, la, other.bits_, lb, keep);
  const int64_t val = val_ + other.val_;
  assert(bits[0] & 1);  // both operands normalized
  return Series(val, bound, std::move(bits));
}

Series Series::square() const {
  if (is_zero()) return zero(2 * bound_);
  const int64_t len = bound_ - val_;
  const int64_t nlen = 2 * len - 1;
  std::vector<uint64_t> bits(words_for(nlen), 0);
  const uint16_t* tab = spread_table();
  const uint16_t* src16 = nullptr;
  (void)src16;
  auto* dst = reinterpret_cast<unsigned char*>(bits.data());
  const auto* src = reinterpret_cast<const unsigned char*>(bits_.data());
  const size_t nbytes = (static_cast<size_t>(len) + 7) / 8;
  for (size_t i = 0; i < nbytes; ++i) {
    const uint16_t s = tab[src[i]];
    dst[2 * i] ^= static_cast<unsigned char>(s & 0xff);
    dst[2 * i + 1] ^= static_cast<unsigned char>(s >> 8);
  }
  mask_tail(bits, nlen);
  return Series(2 * val_, 2 * bound_, std::move(bits));
}

Series Series::inverse() const {
  if (is_zero())
    throw Error(ErrorKind::kDivisionByZero, "division by zero series");
  const int64_t n = bound_ - val_;  // bits of 1/f-hat we can certify
  std::vector<uint64_t> g(1, 1);
  int64_t gbits = 1;
  while (gbits < n) {
    const int64_t k2 = std::min(2 * gbits, n);
    // e = F*g + 1 mod x^k2  (valuation >= gbits)
    std::vector<uint64_t> e = mul_trunc(bits_, std::min(n, k2), g, gbits, k2);
    e[0] ^= 1;
    // g <- g + e*g mod x^k2
    std::vector<uint64_t> t = mul_trunc(e, k2, g, gbits, k2);
    g.resize(words_for(k2), 0);
    for (size_t i = 0; i < g.size(); ++i) g[i] ^= t[i];
    gbits = k2;
  }
  return Series(-val_, bound_ - 2 * val_, std::move(g));
}

Series Series::project(uint64_t q, uint64_t j) const {
  if (q == 0 || (q & (q - 1)) != 0)
    throw Error(ErrorKind::kUsage, "projection modulus must be a power of 2");
  if (j >= q) throw Error(ErrorKind::kUsage, "projection residue out of range");
  if (is_zero()) return zero(bound_);
  const int64_t qi = static_cast<int64_t>(q);
  const int64_t ji = static_cast<int64_t>(j);
  // first exponent >= val_ congruent to j mod q
  int64_t e0 = val_ + (((ji - val_) % qi) + qi) % qi;
  if (e0 >= bound_) return zero(bound_);
  std::vector<uint64_t> bits(words_for(bound_ - e0), 0);
  for (int64_t e = e0; e < bound_; e += qi) {
    if (bit(e - val_)) set_bit(bits, e - e0);
  }
  return normalized(e0, bound_, std::move(bits));
}

Series Series::shifted(int64_t k) const {
  Series s(*this);
  s.val_ += k;
  s.bound_ += k;
  return s;
}

Series Series::truncated(int64_t new_bound) const {
  if (new_bound >= bound_) return *this;
  if (new_bound <= val_) return zero(new_bound);
  std::vector<uint64_t> bits(bits_.begin(),
                             bits_.begin() + words_for(new_bound - val_));
  mask_tail(bits, new_bound - val_);
  return normalized(val_, new_bound, std::move(bits));
}

Series Series::pow(uint64_t e) const {
  if (e == 0) return one(bound_);
  Series acc = *this;
  // highest bit first square-and-multiply
  int top = 63 - std::countl_zero(e);
  for (int k = top - 1; k >= 0; --k) {
    acc = acc.square();
    if ((e >> k) & 1) acc = acc.mul(*this);
  }
  return acc;
}

std::vector<int64_t> Series::support(int64_t lo, int64_t hi) const {
  if (hi > bound_)
    throw Error(ErrorKind::kPrecision, "outside precision window");
  std::vector<int64_t> out;
  const int64_t from = std::max(lo, val_);
  for (int64_t e = from; e < hi; ++e) {
    if (bit(e - val_)) out.push_back(e);
  }
  return out;
}

int64_t Series::popcount_below(int64_t hi) const {
  if (hi > bound_)
    throw Error(ErrorKind::kPrecision, "outside precision window");
  int64_t n = 0;
  for (int64_t e = val_; e < hi; ++e) n += bit(e - val_);
  return n;
}

bool operator==(const Series& a, const Series& b) {
  return a.val_ == b.val_ && a.bound_ == b.bound_ && a.bits_ == b.bits_;
}

std::optional<int64_t> first_difference(const Series& a, const Series& b) {
  const int64_t hi = std::min(a.bound_, b.bound_);
  const int64_t lo = std::min(a.is_zero() ? hi : a.val_,
                              b.is_zero() ? hi : b.val_);
  for (int64_t e = lo; e < hi; ++e) {
    const int ba = (e < a.val_ || a.is_zero()) ? 0 : a.bit(e - a.val_);
    const int bb = (e < b.val_ || b.is_zero()) ? 0 : b.bit(e - b.val_);
    if (ba != bb) return e;
  }
  return std::nullopt;
}

std::string Series::dump() const {
  std::ostringstream os;
  os << "v=" << val_ << " E=" << bound_ << "\n";
  bool first = true;
  if (!is_zero()) {
    for (int64_t e = val_; e < bound_; ++e) {
      if (bit(e - val_)) {
        if (!first) os << ' ';
        os << e;
        first = false;
      }
    }
  }
  os << "\n";
  return os.str();
}

}  // namespace theta2
