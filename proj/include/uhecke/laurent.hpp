#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uhecke/ff.hpp"
#include "uhecke/util.hpp"

namespace uhk {

// Truncated Laurent series over a finite coefficient field: the element is
// known on the window [val, prec) and is O(t^prec) beyond it.
//
// Invariants: coefficients are nonempty iff the element is nonzero to its
// precision; then c.front() != 0, c.size() == prec - val, and val is the exact
// valuation. A zero-to-precision element has empty c and val == prec.
struct Laurent {
  int val = 0;
  int prec = 0;
  std::vector<uint16_t> c;  // coefficient codes at t^val .. t^(prec-1)

  bool is_zero() const { return c.empty(); }
};

// Arithmetic context: coefficient field plus a default working precision.
// Conjugation acts coefficientwise through the field's involution.
class LaurentField {
 public:
  LaurentField(const DenseField& F, int default_prec);

  const DenseField& coeff() const { return *F_; }
  int default_prec() const { return default_prec_; }

  Laurent zero(int prec) const;
  Laurent one(int prec) const { return monomial(0, 1, prec); }
  Laurent monomial(int k, uint16_t code, int prec) const;
  Laurent from_int(long v, int prec) const;
  // Coefficient codes for t^lo, t^lo+1, ... with the given precision.
  Laurent make(int lo, const std::vector<uint16_t>& codes, int prec) const;

  Laurent add(const Laurent& a, const Laurent& b) const;
  Laurent sub(const Laurent& a, const Laurent& b) const;
  Laurent neg(const Laurent& a) const;
  Laurent mul(const Laurent& a, const Laurent& b) const;
  Laurent scale(const Laurent& a, uint16_t code) const;  // exact constant
  Laurent invert(const Laurent& a) const;                // NotInvertible on zero
  Laurent div(const Laurent& a, const Laurent& b) const;
  Laurent conj(const Laurent& a) const;
  Laurent shift(const Laurent& a, int k) const;  // multiply by t^k, exact
  Laurent truncate(const Laurent& a, int new_prec) const;

  bool eq(const Laurent& a, const Laurent& b) const;  // up to min precision
  // Exact valuation; errors with InsufficientPrecision when the element is
  // indistinguishable from zero.
  int valuation(const Laurent& a) const;
  // Decides val(a) >= cutoff. For a zero-to-precision element this is known
  // only when prec > cutoff; otherwise errors with InsufficientPrecision.
  bool valuation_at_least(const Laurent& a, int cutoff) const;
  // Coefficient of t^k; errors with InsufficientPrecision for k >= prec.
  uint16_t coeff_at(const Laurent& a, int k) const;
  // Codes of t^0 .. t^(level-1). Errors with NegativeValuation if the element
  // has a pole, InsufficientPrecision if prec < level.
  std::vector<uint16_t> residue(const Laurent& a, int level) const;

  Laurent random(Rng& rng, int val_lo, int val_hi, int prec) const;
  std::string str(const Laurent& a) const;

 private:
  const DenseField* F_;
  int default_prec_;

  Laurent normalized(int val, int prec, std::vector<uint16_t> codes) const;
};

}  // namespace uhk
