#include "uhecke/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace uhk {

LaurentField::LaurentField(const DenseField& F, int default_prec)
    : F_(&F), default_prec_(default_prec) {
  require(default_prec >= 1, Err::ConstraintViolated, "precision must be positive");
  require(F.spec().degree % 2 == 0, Err::DegreeMismatch,
          "coefficient field needs an involution");
}

Laurent LaurentField::normalized(int val, int prec, std::vector<uint16_t> codes) const {
  // Trim to the window, drop leading zeros, collapse to canonical zero.
  if (val >= prec) return Laurent{prec, prec, {}};
  codes.resize(static_cast<size_t>(prec - val), 0);
  size_t lead = 0;
  while (lead < codes.size() && codes[lead] == 0) lead++;
  if (lead == codes.size()) return Laurent{prec, prec, {}};
  val += static_cast<int>(lead);
  codes.erase(codes.begin(), codes.begin() + static_cast<long>(lead));
  return Laurent{val, prec, std::move(codes)};
}

Laurent LaurentField::zero(int prec) const { return Laurent{prec, prec, {}}; }

Laurent LaurentField::monomial(int k, uint16_t code, int prec) const {
  if (code == 0 || k >= prec) return zero(prec);
  std::vector<uint16_t> codes(static_cast<size_t>(prec - k), 0);
  codes[0] = code;
  return Laurent{k, prec, std::move(codes)};
}

Laurent LaurentField::from_int(long v, int prec) const {
  return monomial(0, F_->from_int(v), prec);
}

Laurent LaurentField::make(int lo, const std::vector<uint16_t>& codes, int prec) const {
  std::vector<uint16_t> window(codes);
  if (static_cast<int>(window.size()) < prec - lo) {
    window.resize(static_cast<size_t>(prec - lo), 0);
  }
  return normalized(lo, prec, std::move(window));
}

Laurent LaurentField::add(const Laurent& a, const Laurent& b) const {
  int prec = std::min(a.prec, b.prec);
  int lo = std::min(a.val, b.val);
  if (lo >= prec) return zero(prec);
  std::vector<uint16_t> codes(static_cast<size_t>(prec - lo), 0);
  for (int k = a.val; k < std::min(a.prec, prec); k++) {
    codes[static_cast<size_t>(k - lo)] = a.c[static_cast<size_t>(k - a.val)];
  }
  for (int k = b.val; k < std::min(b.prec, prec); k++) {
    size_t i = static_cast<size_t>(k - lo);
    codes[i] = F_->add(codes[i], b.c[static_cast<size_t>(k - b.val)]);
  }
  return normalized(lo, prec, std::move(codes));
}

Laurent LaurentField::neg(const Laurent& a) const {
  Laurent r = a;
  for (auto& v : r.c) v = F_->neg(v);
  return r;
}

Laurent LaurentField::sub(const Laurent& a, const Laurent& b) const {
  return add(a, neg(b));
}

Laurent LaurentField::mul(const Laurent& a, const Laurent& b) const {
  // val and prec for zero operands coincide, so this formula covers them too.
  int prec = std::min(a.prec + b.val, b.prec + a.val);
  if (a.is_zero() || b.is_zero()) return zero(prec);
  int val = a.val + b.val;
  std::vector<uint16_t> codes(static_cast<size_t>(prec - val), 0);
  size_t ia_max = std::min(a.c.size(), codes.size());
  for (size_t i = 0; i < ia_max; i++) {
    if (!a.c[i]) continue;
    size_t lim = std::min(b.c.size(), codes.size() - i);
    for (size_t j = 0; j < lim; j++) {
      if (!b.c[j]) continue;
      size_t k = i + j;
      codes[k] = F_->add(codes[k], F_->mul(a.c[i], b.c[j]));
    }
  }
  return normalized(val, prec, std::move(codes));
}

Laurent LaurentField::scale(const Laurent& a, uint16_t code) const {
  if (code == 0) return zero(a.prec);
  Laurent r = a;
  for (auto& v : r.c) v = F_->mul(v, code);
  return r;
}

Laurent LaurentField::invert(const Laurent& a) const {
  require(!a.is_zero(), Err::NotInvertible,
          "cannot invert an element indistinguishable from zero");
  size_t m = a.c.size();
  std::vector<uint16_t> d(m, 0);
  uint16_t c0inv = F_->inv(a.c[0]);
  d[0] = c0inv;
  for (size_t k = 1; k < m; k++) {
    uint16_t s = 0;
    for (size_t j = 1; j <= k; j++) {
      if (a.c[j]) s = F_->add(s, F_->mul(a.c[j], d[k - j]));
    }
    d[k] = F_->neg(F_->mul(c0inv, s));
  }
  return normalized(-a.val, a.prec - 2 * a.val, std::move(d));
}

Laurent LaurentField::div(const Laurent& a, const Laurent& b) const {
  return mul(a, invert(b));
}

Laurent LaurentField::conj(const Laurent& a) const {
  Laurent r = a;
  for (auto& v : r.c) v = F_->conj(v);
  return r;
}

Laurent LaurentField::shift(const Laurent& a, int k) const {
  Laurent r = a;
  r.val += k;
  r.prec += k;
  return r;
}

Laurent LaurentField::truncate(const Laurent& a, int new_prec) const {
  require(new_prec <= a.prec, Err::InsufficientPrecision,
          "cannot raise precision by truncation");
  if (a.is_zero() || a.val >= new_prec) return zero(new_prec);
  std::vector<uint16_t> codes(a.c.begin(),
                              a.c.begin() + static_cast<long>(new_prec - a.val));
  return Laurent{a.val, new_prec, std::move(codes)};
}

bool LaurentField::eq(const Laurent& a, const Laurent& b) const {
  int prec = std::min(a.prec, b.prec);
  int lo = std::min(a.val, b.val);
  for (int k = lo; k < prec; k++) {
    uint16_t ca = (k >= a.val && k < a.prec) ? a.c[static_cast<size_t>(k - a.val)] : 0;
    uint16_t cb = (k >= b.val && k < b.prec) ? b.c[static_cast<size_t>(k - b.val)] : 0;
    if (ca != cb) return false;
  }
  return true;
}

int LaurentField::valuation(const Laurent& a) const {
  require(!a.is_zero(), Err::InsufficientPrecision,
          "valuation undetermined: element is zero to its precision");
  return a.val;
}

bool LaurentField::valuation_at_least(const Laurent& a, int cutoff) const {
  if (!a.is_zero()) return a.val >= cutoff;
  require(a.prec > cutoff, Err::InsufficientPrecision,
          "valuation bound undecidable at this precision");
  return true;
}

uint16_t LaurentField::coeff_at(const Laurent& a, int k) const {
  require(k < a.prec, Err::InsufficientPrecision, "coefficient beyond precision");
  if (a.is_zero() || k < a.val) return 0;
  return a.c[static_cast<size_t>(k - a.val)];
}

std::vector<uint16_t> LaurentField::residue(const Laurent& a, int level) const {
  require(a.prec >= level, Err::InsufficientPrecision, "residue beyond precision");
  if (!a.is_zero()) {
    require(a.val >= 0, Err::NegativeValuation, "residue of an element with a pole");
  }
  std::vector<uint16_t> out(static_cast<size_t>(level), 0);
  for (int k = 0; k < level; k++) {
    if (!a.is_zero() && k >= a.val && k < a.prec) {
      out[static_cast<size_t>(k)] = a.c[static_cast<size_t>(k - a.val)];
    }
  }
  return out;
}

Laurent LaurentField::random(Rng& rng, int val_lo, int val_hi, int prec) const {
  int v = val_lo + static_cast<int>(rng.below(static_cast<uint64_t>(val_hi - val_lo + 1)));
  if (v >= prec) return zero(prec);
  std::vector<uint16_t> codes(static_cast<size_t>(prec - v));
  for (auto& cc : codes) cc = static_cast<uint16_t>(rng.below(F_->q()));
  return normalized(v, prec, std::move(codes));
}

std::string LaurentField::str(const Laurent& a) const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < a.c.size(); i++) {
    if (!a.c[i]) continue;
    if (any) os << " + ";
    int k = a.val + static_cast<int>(i);
    os << "{" << a.c[i] << "}";
    if (k != 0) os << "t^" << k;
    any = true;
  }
  if (any) os << " + ";
  os << "O(t^" << a.prec << ")";
  return os.str();
}

}  // namespace uhk
