#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uhecke/errors.hpp"

namespace uhk {

// Presentation of F_{p^degree} as F_p[x]/(modulus). The modulus is the monic
// irreducible of the given degree whose coefficient vector is least when read
// as a base-p integer (constant term = least significant digit), so a
// (p, degree) pair always names the same field.
struct FieldSpec {
  int p = 0;
  int degree = 0;
  std::vector<uint8_t> modulus;  // c0..c_degree, monic

  uint64_t order() const {
    uint64_t n = 1;
    for (int i = 0; i < degree; i++) n *= static_cast<uint64_t>(p);
    return n;
  }
  bool operator==(const FieldSpec&) const = default;
};

FieldSpec make_field_spec(int p, int degree);

// Is c0..c_deg (monic, degree >= 1) irreducible over F_p? Deterministic trial
// division by all monic polynomials of degree <= deg/2.
bool poly_irreducible(int p, const std::vector<uint8_t>& poly);

// --- Polynomial-basis elements ---------------------------------------------
//
// Value type tied to a FieldSpec by pointer; the spec must outlive the
// element. Coefficient vector always has size == degree.
struct FFElem {
  const FieldSpec* spec = nullptr;
  std::vector<uint8_t> c;
};

FFElem ff_zero(const FieldSpec& s);
FFElem ff_one(const FieldSpec& s);
FFElem ff_from_int(const FieldSpec& s, long v);
FFElem ff_from_code(const FieldSpec& s, uint64_t code);  // base-p digit vector
uint64_t ff_code(const FFElem& a);
bool ff_is_zero(const FFElem& a);
bool ff_eq(const FFElem& a, const FFElem& b);

FFElem ff_add(const FFElem& a, const FFElem& b);
FFElem ff_sub(const FFElem& a, const FFElem& b);
FFElem ff_neg(const FFElem& a);
FFElem ff_mul(const FFElem& a, const FFElem& b);
FFElem ff_inv(const FFElem& a);  // NotInvertible on zero
FFElem ff_div(const FFElem& a, const FFElem& b);
FFElem ff_pow(const FFElem& a, uint64_t e);
FFElem ff_frobenius(const FFElem& a, int iters);  // x -> x^(p^iters)
uint64_t ff_mult_order(const FFElem& a);          // NotInvertible on zero

// x -> x^(p^(degree/2)). Errors with DegreeMismatch when degree is odd,
// because then this is not an involution over the prime field.
FFElem ff_conjugate(const FFElem& a);

// Least element (code order) of multiplicative order p^degree - 1.
FFElem ff_generator(const FieldSpec& s);

// Ring embedding src -> dst for src.degree | dst.degree, determined by
// sending x (mod src) to the least root (code order) of the src modulus in
// dst. Errors with NoEmbedding when the degrees are incompatible. Both specs
// must outlive the object.
class Embedding {
 public:
  Embedding(const FieldSpec& src, const FieldSpec& dst);
  FFElem apply(const FFElem& a) const;
  const FFElem& image_of_x() const { return image_of_x_; }

 private:
  const FieldSpec* src_;
  const FieldSpec* dst_;
  FFElem image_of_x_;
};

FFElem ff_embed(const FFElem& a, const FieldSpec& dst);

// y = a + z with conj(a) == a and conj(z) == -z; unique since p is odd.
// Errors with DegreeMismatch on odd-degree fields (no conjugation there).
std::pair<FFElem, FFElem> ff_decompose_trace(const FFElem& y);

std::string ff_str(const FFElem& a);

// --- Table-backed context ---------------------------------------------------
//
// Same field, different machinery: elements are base-p codes (uint16_t),
// multiplication runs on discrete logs and addition on Zech logarithms.
// Built independently of the FFElem routines except for sharing the modulus,
// so the two paths cross-check each other.
class DenseField {
 public:
  explicit DenseField(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  uint32_t q() const { return q_; }

  uint16_t add(uint16_t a, uint16_t b) const;
  uint16_t sub(uint16_t a, uint16_t b) const;
  uint16_t neg(uint16_t a) const;
  uint16_t mul(uint16_t a, uint16_t b) const;
  uint16_t inv(uint16_t a) const;  // NotInvertible on zero
  uint16_t div(uint16_t a, uint16_t b) const;
  uint16_t pow(uint16_t a, uint64_t e) const;
  uint16_t frob(uint16_t a, int iters) const;
  uint16_t conj(uint16_t a) const;  // DegreeMismatch on odd degree
  uint16_t from_int(long v) const;

  uint16_t generator() const { return gen_; }
  // Discrete log base generator(); NotInvertible on zero.
  uint32_t log(uint16_t a) const;
  uint16_t exp_of(uint64_t k) const;  // generator()^k
  uint64_t mult_order(uint16_t a) const;

  // Codes z with conj(z) == neg(z), ascending. Size p^(degree/2).
  std::vector<uint16_t> trace_zero_codes() const;

 private:
  FieldSpec spec_;
  uint32_t q_;
  uint16_t gen_;
  std::vector<uint32_t> log_;   // code -> log (q-1 means "zero")
  std::vector<uint16_t> exp_;   // log -> code, size q-1
  std::vector<uint32_t> zech_;  // k -> log(1 + g^k), q-1 when 1 + g^k == 0
  std::vector<uint16_t> frob1_; // code -> code^p
};

// Smallest k, a positive multiple of `multiple_of`, with n | p^k - 1.
// Errors with ScanExhausted past k = 64.
int least_ext_degree_with_order(int p, int multiple_of, uint64_t n);

}  // namespace uhk
