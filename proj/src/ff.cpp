#include "uhecke/ff.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace uhk {
namespace {

// Little-endian digit vectors over F_p; index = power of x.

int norm_deg(const std::vector<uint8_t>& a) {
  int d = static_cast<int>(a.size()) - 1;
  while (d >= 0 && a[d] == 0) d--;
  return d;
}

std::vector<uint8_t> poly_mul_raw(int p, const std::vector<uint8_t>& a,
                                  const std::vector<uint8_t>& b) {
  int da = norm_deg(a), db = norm_deg(b);
  if (da < 0 || db < 0) return {};
  std::vector<uint8_t> r(static_cast<size_t>(da + db + 1), 0);
  for (int i = 0; i <= da; i++) {
    if (!a[i]) continue;
    for (int j = 0; j <= db; j++) {
      r[static_cast<size_t>(i + j)] =
          static_cast<uint8_t>((r[static_cast<size_t>(i + j)] + a[i] * b[j]) % p);
    }
  }
  return r;
}

// Remainder of num by monic den.
std::vector<uint8_t> poly_rem(int p, std::vector<uint8_t> num,
                              const std::vector<uint8_t>& den) {
  int dd = norm_deg(den);
  require(dd >= 0 && den[dd] == 1, Err::Internal, "poly_rem wants a monic divisor");
  int dn = norm_deg(num);
  while (dn >= dd) {
    int lead = num[static_cast<size_t>(dn)];
    if (lead) {
      int shift = dn - dd;
      for (int i = 0; i <= dd; i++) {
        int v = num[static_cast<size_t>(i + shift)] - lead * den[static_cast<size_t>(i)];
        num[static_cast<size_t>(i + shift)] = static_cast<uint8_t>(((v % p) + p) % p);
      }
    }
    dn--;
  }
  num.resize(static_cast<size_t>(dd));
  return num;  // size dd, may have high zeros
}

std::vector<uint8_t> code_to_digits(int p, uint64_t code, int len) {
  std::vector<uint8_t> d(static_cast<size_t>(len), 0);
  for (int i = 0; i < len; i++) {
    d[static_cast<size_t>(i)] = static_cast<uint8_t>(code % static_cast<uint64_t>(p));
    code /= static_cast<uint64_t>(p);
  }
  require(code == 0, Err::Internal, "code out of range");
  return d;
}

uint64_t digits_to_code(int p, const std::vector<uint8_t>& d) {
  uint64_t c = 0;
  for (size_t i = d.size(); i-- > 0;) c = c * static_cast<uint64_t>(p) + d[i];
  return c;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
  std::vector<uint64_t> f;
  for (uint64_t d = 2; d * d <= n; d++) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

void check_same_field(const FFElem& a, const FFElem& b) {
  require(a.spec && b.spec && *a.spec == *b.spec, Err::DegreeMismatch,
          "operands live in different fields");
}

}  // namespace

bool poly_irreducible(int p, const std::vector<uint8_t>& poly) {
  int d = norm_deg(poly);
  require(d >= 1, Err::ConstraintViolated, "irreducibility needs degree >= 1");
  require(poly[static_cast<size_t>(d)] == 1, Err::ConstraintViolated,
          "irreducibility check wants a monic polynomial");
  for (int dd = 1; 2 * dd <= d; dd++) {
    uint64_t count = 1;
    for (int i = 0; i < dd; i++) count *= static_cast<uint64_t>(p);
    for (uint64_t code = 0; code < count; code++) {
      std::vector<uint8_t> den = code_to_digits(p, code, dd + 1);
      den[static_cast<size_t>(dd)] = 1;
      if (norm_deg(poly_rem(p, poly, den)) < 0) return false;
    }
  }
  return true;
}

FieldSpec make_field_spec(int p, int degree) {
  require(p >= 2 && degree >= 1, Err::ConstraintViolated, "need p >= 2, degree >= 1");
  uint64_t count = 1;
  for (int i = 0; i < degree; i++) count *= static_cast<uint64_t>(p);
  for (uint64_t code = 0; code < count; code++) {
    std::vector<uint8_t> cand = code_to_digits(p, code, degree + 1);
    cand[static_cast<size_t>(degree)] = 1;
    if (poly_irreducible(p, cand)) {
      FieldSpec s;
      s.p = p;
      s.degree = degree;
      s.modulus = std::move(cand);
      return s;
    }
  }
  fail(Err::ScanExhausted, "no irreducible polynomial found");
}

FFElem ff_zero(const FieldSpec& s) {
  return FFElem{&s, std::vector<uint8_t>(static_cast<size_t>(s.degree), 0)};
}

FFElem ff_one(const FieldSpec& s) { return ff_from_int(s, 1); }

FFElem ff_from_int(const FieldSpec& s, long v) {
  FFElem r = ff_zero(s);
  long m = ((v % s.p) + s.p) % s.p;
  r.c[0] = static_cast<uint8_t>(m);
  return r;
}

FFElem ff_from_code(const FieldSpec& s, uint64_t code) {
  return FFElem{&s, code_to_digits(s.p, code, s.degree)};
}

uint64_t ff_code(const FFElem& a) {
  require(a.spec != nullptr, Err::Internal, "unbound element");
  return digits_to_code(a.spec->p, a.c);
}

bool ff_is_zero(const FFElem& a) {
  return std::all_of(a.c.begin(), a.c.end(), [](uint8_t v) { return v == 0; });
}

bool ff_eq(const FFElem& a, const FFElem& b) {
  check_same_field(a, b);
  return a.c == b.c;
}

FFElem ff_add(const FFElem& a, const FFElem& b) {
  check_same_field(a, b);
  FFElem r = a;
  int p = a.spec->p;
  for (size_t i = 0; i < r.c.size(); i++) r.c[i] = static_cast<uint8_t>((r.c[i] + b.c[i]) % p);
  return r;
}

FFElem ff_neg(const FFElem& a) {
  FFElem r = a;
  int p = a.spec->p;
  for (auto& v : r.c) v = static_cast<uint8_t>((p - v) % p);
  return r;
}

FFElem ff_sub(const FFElem& a, const FFElem& b) { return ff_add(a, ff_neg(b)); }

FFElem ff_mul(const FFElem& a, const FFElem& b) {
  check_same_field(a, b);
  const FieldSpec& s = *a.spec;
  std::vector<uint8_t> prod = poly_mul_raw(s.p, a.c, b.c);
  if (prod.empty()) return ff_zero(s);
  std::vector<uint8_t> rem = poly_rem(s.p, std::move(prod), s.modulus);
  rem.resize(static_cast<size_t>(s.degree), 0);
  return FFElem{&s, std::move(rem)};
}

FFElem ff_pow(const FFElem& a, uint64_t e) {
  const FieldSpec& s = *a.spec;
  FFElem acc = ff_one(s);
  FFElem base = a;
  while (e) {
    if (e & 1) acc = ff_mul(acc, base);
    base = ff_mul(base, base);
    e >>= 1;
  }
  return acc;
}

FFElem ff_inv(const FFElem& a) {
  require(!ff_is_zero(a), Err::NotInvertible, "zero has no inverse");
  return ff_pow(a, a.spec->order() - 2);
}

FFElem ff_div(const FFElem& a, const FFElem& b) { return ff_mul(a, ff_inv(b)); }

FFElem ff_frobenius(const FFElem& a, int iters) {
  FFElem r = a;
  int d = a.spec->degree;
  int n = ((iters % d) + d) % d;
  for (int i = 0; i < n; i++) r = ff_pow(r, static_cast<uint64_t>(a.spec->p));
  return r;
}

uint64_t ff_mult_order(const FFElem& a) {
  require(!ff_is_zero(a), Err::NotInvertible, "zero has no multiplicative order");
  uint64_t n = a.spec->order() - 1;
  uint64_t ord = n;
  for (uint64_t f : prime_factors(n)) {
    while (ord % f == 0 && ff_eq(ff_pow(a, ord / f), ff_one(*a.spec))) ord /= f;
  }
  return ord;
}

FFElem ff_conjugate(const FFElem& a) {
  require(a.spec->degree % 2 == 0, Err::DegreeMismatch,
          "conjugation needs an even-degree field");
  return ff_frobenius(a, a.spec->degree / 2);
}

FFElem ff_generator(const FieldSpec& s) {
  uint64_t q = s.order();
  for (uint64_t code = 1; code < q; code++) {
    FFElem cand = ff_from_code(s, code);
    if (ff_mult_order(cand) == q - 1) return cand;
  }
  fail(Err::ScanExhausted, "no generator found");
}

Embedding::Embedding(const FieldSpec& src, const FieldSpec& dst)
    : src_(&src), dst_(&dst) {
  require(src.p == dst.p && src.degree >= 1 && dst.degree % src.degree == 0,
          Err::NoEmbedding, "no embedding between these fields");
  uint64_t qd = dst.order();
  for (uint64_t code = 0; code < qd; code++) {
    FFElem cand = ff_from_code(dst, code);
    // Evaluate the src modulus at cand with Horner's rule.
    FFElem acc = ff_zero(dst);
    for (size_t i = src.modulus.size(); i-- > 0;) {
      acc = ff_add(ff_mul(acc, cand), ff_from_int(dst, src.modulus[i]));
    }
    if (ff_is_zero(acc)) {
      image_of_x_ = cand;
      return;
    }
  }
  fail(Err::NoEmbedding, "src modulus has no root in dst");
}

FFElem Embedding::apply(const FFElem& a) const {
  require(a.spec && *a.spec == *src_, Err::NoEmbedding, "element not in source field");
  FFElem acc = ff_zero(*dst_);
  for (size_t i = a.c.size(); i-- > 0;) {
    acc = ff_add(ff_mul(acc, image_of_x_), ff_from_int(*dst_, a.c[i]));
  }
  return acc;
}

FFElem ff_embed(const FFElem& a, const FieldSpec& dst) {
  Embedding e(*a.spec, dst);
  return e.apply(a);
}

std::pair<FFElem, FFElem> ff_decompose_trace(const FFElem& y) {
  const FieldSpec& s = *y.spec;
  FFElem ybar = ff_conjugate(y);
  FFElem half = ff_inv(ff_from_int(s, 2));
  FFElem a = ff_mul(ff_add(y, ybar), half);
  FFElem z = ff_sub(y, a);
  require(ff_eq(ff_conjugate(a), a), Err::DecompositionFailed, "fixed part not fixed");
  require(ff_eq(ff_conjugate(z), ff_neg(z)), Err::DecompositionFailed,
          "skew part not skew");
  return {a, z};
}

std::string ff_str(const FFElem& a) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < a.c.size(); i++) {
    if (!a.c[i]) continue;
    if (any) os << " + ";
    if (i == 0 || a.c[i] != 1) os << static_cast<int>(a.c[i]);
    if (i > 0) {
      if (a.c[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

// --- DenseField --------------------------------------------------------------

DenseField::DenseField(const FieldSpec& spec) : spec_(spec) {
  uint64_t q = spec.order();
  require(q <= 65536, Err::ConstraintViolated, "table context supports q <= 65536");
  q_ = static_cast<uint32_t>(q);
  int p = spec.p;

  // Code-level multiply: digit vectors, schoolbook product, reduce by modulus.
  auto cmul = [&](uint16_t a, uint16_t b) -> uint16_t {
    std::vector<uint8_t> da = code_to_digits(p, a, spec.degree);
    std::vector<uint8_t> db = code_to_digits(p, b, spec.degree);
    std::vector<uint8_t> prod = poly_mul_raw(p, da, db);
    if (prod.empty()) return 0;
    std::vector<uint8_t> rem = poly_rem(p, std::move(prod), spec.modulus);
    return static_cast<uint16_t>(digits_to_code(p, rem));
  };
  auto cpow = [&](uint16_t a, uint64_t e) -> uint16_t {
    uint16_t acc = 1, base = a;
    while (e) {
      if (e & 1) acc = cmul(acc, base);
      base = cmul(base, base);
      e >>= 1;
    }
    return acc;
  };

  // Least generator: order test via the prime factorization of q-1.
  std::vector<uint64_t> fac = prime_factors(q_ - 1);
  gen_ = 0;
  for (uint32_t cand = 1; cand < q_; cand++) {
    bool ok = true;
    for (uint64_t f : fac) {
      if (cpow(static_cast<uint16_t>(cand), (q_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = static_cast<uint16_t>(cand);
      break;
    }
  }
  require(gen_ != 0, Err::ScanExhausted, "no generator found");

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, q_ - 1);  // q-1 marks "zero has no log"
  uint16_t cur = 1;
  for (uint32_t k = 0; k < q_ - 1; k++) {
    exp_[k] = cur;
    require(log_[cur] == q_ - 1, Err::CollisionDetected, "generator order too small");
    log_[cur] = k;
    cur = cmul(cur, gen_);
  }
  require(cur == 1, Err::CollisionDetected, "generator power table did not close");

  // Zech logs: zech_[k] = log(1 + g^k), with q-1 as the "no log" sentinel.
  // 1 + x on codes is a digit-wise add; no multiplicative structure involved.
  auto cadd_one = [&](uint16_t a) -> uint16_t {
    std::vector<uint8_t> d = code_to_digits(p, a, spec.degree);
    d[0] = static_cast<uint8_t>((d[0] + 1) % p);
    return static_cast<uint16_t>(digits_to_code(p, d));
  };
  zech_.assign(q_ - 1, q_ - 1);
  for (uint32_t k = 0; k < q_ - 1; k++) {
    uint16_t s = cadd_one(exp_[k]);
    zech_[k] = (s == 0) ? (q_ - 1) : log_[s];
  }

  frob1_.assign(q_, 0);
  for (uint32_t c = 0; c < q_; c++) {
    frob1_[c] = cpow(static_cast<uint16_t>(c), static_cast<uint64_t>(p));
  }
}

uint16_t DenseField::add(uint16_t a, uint16_t b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  uint32_t la = log_[a], lb = log_[b];
  uint32_t d = (lb + (q_ - 1) - la) % (q_ - 1);
  uint32_t z = zech_[d];
  if (z == q_ - 1) return 0;
  return exp_[(la + z) % (q_ - 1)];
}

uint16_t DenseField::neg(uint16_t a) const {
  if (a == 0) return 0;
  if (spec_.p == 2) return a;
  // -1 = g^((q-1)/2) for odd q.
  return exp_[(log_[a] + (q_ - 1) / 2) % (q_ - 1)];
}

uint16_t DenseField::sub(uint16_t a, uint16_t b) const { return add(a, neg(b)); }

uint16_t DenseField::mul(uint16_t a, uint16_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

uint16_t DenseField::inv(uint16_t a) const {
  require(a != 0, Err::NotInvertible, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

uint16_t DenseField::div(uint16_t a, uint16_t b) const { return mul(a, inv(b)); }

uint16_t DenseField::pow(uint16_t a, uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  uint64_t l = (static_cast<uint64_t>(log_[a]) % (q_ - 1)) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

uint16_t DenseField::frob(uint16_t a, int iters) const {
  int d = spec_.degree;
  int n = ((iters % d) + d) % d;
  uint16_t r = a;
  for (int i = 0; i < n; i++) r = frob1_[r];
  return r;
}

uint16_t DenseField::conj(uint16_t a) const {
  require(spec_.degree % 2 == 0, Err::DegreeMismatch,
          "conjugation needs an even-degree field");
  return frob(a, spec_.degree / 2);
}

uint16_t DenseField::from_int(long v) const {
  long m = ((v % spec_.p) + spec_.p) % spec_.p;
  return static_cast<uint16_t>(m);
}

uint32_t DenseField::log(uint16_t a) const {
  require(a != 0, Err::NotInvertible, "zero has no discrete log");
  return log_[a];
}

uint16_t DenseField::exp_of(uint64_t k) const { return exp_[k % (q_ - 1)]; }

uint64_t DenseField::mult_order(uint16_t a) const {
  require(a != 0, Err::NotInvertible, "zero has no multiplicative order");
  return (q_ - 1) / std::gcd<uint64_t>(q_ - 1, log_[a]);
}

std::vector<uint16_t> DenseField::trace_zero_codes() const {
  std::vector<uint16_t> out;
  for (uint32_t c = 0; c < q_; c++) {
    uint16_t cc = static_cast<uint16_t>(c);
    if (conj(cc) == neg(cc)) out.push_back(cc);
  }
  uint64_t expect = 1;
  for (int i = 0; i < spec_.degree / 2; i++) expect *= static_cast<uint64_t>(spec_.p);
  require(out.size() == expect, Err::ConstraintViolated, "trace-zero set has wrong size");
  return out;
}

int least_ext_degree_with_order(int p, int multiple_of, uint64_t n) {
  require(multiple_of >= 1 && n >= 1, Err::ConstraintViolated, "bad arguments");
  for (int k = multiple_of; k <= 64; k += multiple_of) {
    // p^k mod n via modular exponentiation.
    uint64_t r = 1 % n;
    for (int i = 0; i < k; i++) {
      r = (r * static_cast<uint64_t>(p)) % n;
    }
    if (r == 1 % n) return k;
  }
  fail(Err::ScanExhausted, "no extension degree <= 64 works");
}

}  // namespace uhk
