#include "uhecke/group.hpp"

#include <sstream>

namespace uhk {
namespace {

int ceil_div2(int k) { return k / 2 + (k > 0 && k % 2 != 0 ? 1 : 0); }

}  // namespace

GroupCtx::GroupCtx(const LaurentField& L) : L_(&L) {
  const DenseField& F = L.coeff();
  require(F.spec().p % 2 == 1, Err::ConstraintViolated,
          "odd residue characteristic required");
  inv2_ = F.inv(F.from_int(2));
  std::vector<uint16_t> tz = F.trace_zero_codes();
  require(tz.size() >= 2, Err::FieldTooSmall, "no nonzero trace-zero element");
  skew_unit_ = tz[1];
}

GroupElem GroupCtx::identity() const {
  int P = prec();
  GroupElem g;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) g.at(i, j) = (i == j) ? L_->one(P) : L_->zero(P);
  return g;
}

bool GroupCtx::in_G(const GroupElem& g) const {
  // M = g^T * beta * conj(g); beta reverses row order.
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      Laurent m = L_->zero(prec() * 4);
      for (int k = 0; k < 3; k++) {
        m = L_->add(m, L_->mul(g.at(k, i), L_->conj(g.at(2 - k, j))));
      }
      Laurent want = (i + j == 2) ? L_->one(m.prec) : L_->zero(m.prec);
      if (!L_->eq(m, want)) return false;
    }
  }
  return true;
}

GroupElem GroupCtx::from_entries(const std::array<Laurent, 9>& rows) const {
  GroupElem g{rows};
  require(in_G(g), Err::ConstraintViolated, "matrix does not preserve the form");
  return g;
}

GroupElem GroupCtx::make_n(const Laurent& x, const Laurent& y) const {
  Laurent lhs = L_->add(L_->mul(x, L_->conj(x)), L_->add(y, L_->conj(y)));
  require(L_->eq(lhs, L_->zero(lhs.prec)), Err::ConstraintViolated,
          "unipotent parameters violate x*conj(x) + y + conj(y) = 0");
  int P = prec();
  GroupElem g;
  g.at(0, 0) = L_->one(P);
  g.at(0, 1) = x;
  g.at(0, 2) = y;
  g.at(1, 0) = L_->zero(P);
  g.at(1, 1) = L_->one(P);
  g.at(1, 2) = L_->neg(L_->conj(x));
  g.at(2, 0) = L_->zero(P);
  g.at(2, 1) = L_->zero(P);
  g.at(2, 2) = L_->one(P);
  return g;
}

GroupElem GroupCtx::make_nprime(const Laurent& x, const Laurent& y) const {
  Laurent lhs = L_->add(L_->mul(x, L_->conj(x)), L_->add(y, L_->conj(y)));
  require(L_->eq(lhs, L_->zero(lhs.prec)), Err::ConstraintViolated,
          "unipotent parameters violate x*conj(x) + y + conj(y) = 0");
  int P = prec();
  GroupElem g;
  g.at(0, 0) = L_->one(P);
  g.at(0, 1) = L_->zero(P);
  g.at(0, 2) = L_->zero(P);
  g.at(1, 0) = x;
  g.at(1, 1) = L_->one(P);
  g.at(1, 2) = L_->zero(P);
  g.at(2, 0) = y;
  g.at(2, 1) = L_->neg(L_->conj(x));
  g.at(2, 2) = L_->one(P);
  return g;
}

GroupElem GroupCtx::make_h(const Laurent& x) const {
  Laurent xc = L_->conj(x);
  Laurent xinv = L_->invert(x);
  int P = prec();
  GroupElem g;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) g.at(i, j) = L_->zero(P);
  g.at(0, 0) = x;
  g.at(1, 1) = L_->neg(L_->mul(xc, xinv));
  g.at(2, 2) = L_->invert(xc);
  return g;
}

GroupElem GroupCtx::make_diag(const Laurent& a, const Laurent& u) const {
  Laurent norm = L_->mul(u, L_->conj(u));
  require(L_->eq(norm, L_->one(norm.prec)), Err::ConstraintViolated,
          "middle diagonal entry must have norm 1");
  int P = prec();
  GroupElem g;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) g.at(i, j) = L_->zero(P);
  g.at(0, 0) = a;
  g.at(1, 1) = u;
  g.at(2, 2) = L_->invert(L_->conj(a));
  return g;
}

GroupElem GroupCtx::alpha_pow(int k) const {
  int P = prec();
  GroupElem g;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) g.at(i, j) = L_->zero(P);
  g.at(0, 0) = L_->monomial(-k, 1, P);
  g.at(1, 1) = L_->one(P);
  g.at(2, 2) = L_->monomial(k, 1, P);
  return g;
}

GroupElem GroupCtx::beta() const {
  int P = prec();
  GroupElem g;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) g.at(i, j) = (i + j == 2) ? L_->one(P) : L_->zero(P);
  return g;
}

GroupElem GroupCtx::beta_prime() const {
  int P = prec();
  GroupElem g;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) g.at(i, j) = L_->zero(P);
  g.at(0, 2) = L_->monomial(-1, 1, P);
  g.at(1, 1) = L_->one(P);
  g.at(2, 0) = L_->monomial(1, 1, P);
  return g;
}

GroupElem GroupCtx::mul(const GroupElem& g, const GroupElem& h) const {
  GroupElem r;
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      Laurent s = L_->mul(g.at(i, 0), h.at(0, j));
      s = L_->add(s, L_->mul(g.at(i, 1), h.at(1, j)));
      s = L_->add(s, L_->mul(g.at(i, 2), h.at(2, j)));
      r.at(i, j) = std::move(s);
    }
  }
  return r;
}

GroupElem GroupCtx::inverse(const GroupElem& g) const {
  // g^-1 = beta * conj(g)^T * beta, entrywise conj(g[2-j][2-i]).
  GroupElem r;
  for (int i = 0; i < 3; i++)
    for (int j = 0; j < 3; j++) r.at(i, j) = L_->conj(g.at(2 - j, 2 - i));
  return r;
}

bool GroupCtx::eq(const GroupElem& g, const GroupElem& h) const {
  for (int i = 0; i < 9; i++) {
    if (!L_->eq(g.a[static_cast<size_t>(i)], h.a[static_cast<size_t>(i)])) return false;
  }
  return true;
}

bool GroupCtx::is_identity(const GroupElem& g) const { return eq(g, identity()); }

bool GroupCtx::entry_val_at_least(const GroupElem& g, int i, int j, int c) const {
  return L_->valuation_at_least(g.at(i, j), c);
}

bool GroupCtx::shape_n(const GroupElem& g, bool prime) const {
  auto is1 = [&](int i, int j) {
    const Laurent& e = g.at(i, j);
    return L_->eq(e, L_->one(e.prec));
  };
  if (!(is1(0, 0) && is1(1, 1) && is1(2, 2))) return false;
  static const int zi[3][2] = {{1, 0}, {2, 0}, {2, 1}};
  static const int pi[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  const int(*zeros)[2] = prime ? pi : zi;
  for (int t = 0; t < 3; t++) {
    if (!g.at(zeros[t][0], zeros[t][1]).is_zero()) return false;
  }
  // Remaining corner ties to the x slot by conjugation.
  const Laurent& x = prime ? g.at(1, 0) : g.at(0, 1);
  const Laurent& mxbar = prime ? g.at(2, 1) : g.at(1, 2);
  return L_->eq(mxbar, L_->neg(L_->conj(x)));
}

bool GroupCtx::is_member(const GroupElem& g, const SubgroupTag& tag) const {
  using Kind = SubgroupTag::Kind;
  // Entry valuation floors for the maximal compacts.
  static const int k0_pat[9] = {0, 0, 0, 0, 0, 0, 0, 0, 0};
  static const int k1_pat[9] = {0, 0, -1, 1, 0, 0, 1, 1, 0};
  auto in_K = [&](Vertex v) {
    const int* pat = (v == Vertex::K0) ? k0_pat : k1_pat;
    for (int i = 0; i < 3; i++)
      for (int j = 0; j < 3; j++)
        if (!entry_val_at_least(g, i, j, pat[3 * i + j])) return false;
    return true;
  };
  switch (tag.kind) {
    case Kind::K:
      return in_K(tag.vertex);
    case Kind::KProP: {
      if (!in_K(tag.vertex)) return false;
      // Congruence condition: diagonal 1 mod t, off-diagonal floors one
      // deeper than the compact's pattern (for K1, the corner slots the
      // finite reduction reads get the extra depth).
      const int* off = nullptr;
      static const int k0_off[9] = {0, 1, 1, 1, 0, 1, 1, 1, 0};
      static const int k1_off[9] = {0, 0, 0, 1, 0, 0, 2, 1, 0};
      off = (tag.vertex == Vertex::K0) ? k0_off : k1_off;
      for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
          if (i == j) {
            Laurent d = L_->sub(g.at(i, i), L_->one(g.at(i, i).prec));
            if (!L_->valuation_at_least(d, 1)) return false;
          } else if (!entry_val_at_least(g, i, j, off[3 * i + j])) {
            return false;
          }
        }
      }
      return true;
    }
    case Kind::IwahoriUpper:
    case Kind::IwahoriLower:
    case Kind::ProPIwahoriUpper:
    case Kind::ProPIwahoriLower: {
      if (!in_K(tag.vertex)) return false;
      std::array<uint16_t, 9> r = residue_form(g, tag.vertex);
      bool lower = tag.kind == Kind::IwahoriLower || tag.kind == Kind::ProPIwahoriLower;
      bool unip = tag.kind == Kind::ProPIwahoriUpper || tag.kind == Kind::ProPIwahoriLower;
      if (tag.vertex == Vertex::K0) {
        if (lower ? (r[1] || r[2] || r[5]) : (r[3] || r[6] || r[7])) return false;
      } else {
        if (lower ? (r[2] != 0) : (r[6] != 0)) return false;
      }
      if (unip && !(r[0] == 1 && r[4] == 1 && r[8] == 1)) return false;
      return true;
    }
    case Kind::NLevel:
      return shape_n(g, false) && L_->valuation_at_least(g.at(0, 2), tag.level);
    case Kind::NprimeLevel:
      return shape_n(g, true) && L_->valuation_at_least(g.at(2, 0), tag.level);
    case Kind::HTorus:
      for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++)
          if (i != j && !g.at(i, j).is_zero()) return false;
      return true;
    case Kind::BUpper:
      return g.at(1, 0).is_zero() && g.at(2, 0).is_zero() && g.at(2, 1).is_zero();
    case Kind::BprimeLower:
      return g.at(0, 1).is_zero() && g.at(0, 2).is_zero() && g.at(1, 2).is_zero();
  }
  fail(Err::Internal, "unhandled subgroup tag");
}

std::array<uint16_t, 9> GroupCtx::residue_form(const GroupElem& g, Vertex v) const {
  std::array<uint16_t, 9> out{};
  if (v == Vertex::K0) {
    for (int i = 0; i < 3; i++) {
      for (int j = 0; j < 3; j++) {
        require(L_->valuation_at_least(g.at(i, j), 0), Err::NotInK,
                "entry has a pole; not in the compact subgroup");
        out[static_cast<size_t>(3 * i + j)] = L_->coeff_at(g.at(i, j), 0);
      }
    }
    return out;
  }
  static const int pat[9] = {0, 0, -1, 1, 0, 0, 1, 1, 0};
  for (int i = 0; i < 3; i++) {
    for (int j = 0; j < 3; j++) {
      require(L_->valuation_at_least(g.at(i, j), pat[3 * i + j]), Err::NotInK,
              "valuation pattern fails; not in the compact subgroup");
    }
  }
  // Graded action on the lattice chain: a 2x2 block on the corner slots plus
  // a scalar in the middle; other slots are identically zero.
  out[0] = L_->coeff_at(g.at(0, 0), 0);
  out[2] = L_->coeff_at(g.at(0, 2), -1);
  out[4] = L_->coeff_at(g.at(1, 1), 0);
  out[6] = L_->coeff_at(g.at(2, 0), 1);
  out[8] = L_->coeff_at(g.at(2, 2), 0);
  return out;
}

uint32_t GroupCtx::residue_code(const GroupElem& g, Vertex v) const {
  std::array<uint16_t, 9> r = residue_form(g, v);
  uint32_t q = L_->coeff().q();
  uint32_t code = 0;
  for (size_t i = 9; i-- > 0;) code = code * q + r[i];
  return code;
}

std::vector<GroupElem> GroupCtx::level_generators(bool prime, int k) const {
  int P = prec();
  int xv = ceil_div2(k);
  std::vector<GroupElem> out;
  for (uint16_t c : {static_cast<uint16_t>(1), skew_unit_}) {
    Laurent x = L_->monomial(xv, c, P);
    Laurent y = L_->scale(L_->neg(L_->mul(x, L_->conj(x))), inv2_);
    out.push_back(prime ? make_nprime(x, y) : make_n(x, y));
  }
  Laurent z = L_->monomial(k, skew_unit_, P);
  out.push_back(prime ? make_nprime(L_->zero(P), z) : make_n(L_->zero(P), z));
  return out;
}

std::pair<int, int> GroupCtx::compute_nK_mK(Vertex v) const {
  SubgroupTag i1 = SubgroupTag::pro_p_iwahori_upper(v);
  auto level_inside = [&](bool prime, int k) {
    for (const GroupElem& g : level_generators(prime, k)) {
      if (!is_member(g, i1)) return false;
    }
    return true;
  };
  auto scan = [&](bool prime) {
    for (int k = -3; k <= 3; k++) {
      if (level_inside(prime, k)) {
        require(!level_inside(prime, k - 1), Err::ScanExhausted,
                "filtration scan found no boundary");
        return k;
      }
    }
    fail(Err::ScanExhausted, "no filtration level in the scan window");
  };
  return {scan(false), scan(true)};
}

uint64_t GroupCtx::quotient_size(int a, int b) const {
  require(a <= b, Err::ConstraintViolated, "levels out of order");
  const DenseField& F = L_->coeff();
  uint64_t q2 = F.q();
  uint64_t q = 1;
  for (int i = 0; i < F.spec().degree / 2; i++) q *= static_cast<uint64_t>(F.spec().p);
  uint64_t n = 1;
  for (int i = 0; i < ceil_div2(b) - ceil_div2(a); i++) n *= q2;
  for (int i = 0; i < b - a; i++) n *= q;
  return n;
}

std::vector<NQuotParam> GroupCtx::enumerate_quotient_params(bool prime, int a,
                                                            int b) const {
  require(a <= b, Err::ConstraintViolated, "levels out of order");
  const DenseField& F = L_->coeff();
  uint32_t q2 = F.q();
  std::vector<uint16_t> tz = F.trace_zero_codes();
  uint32_t q = static_cast<uint32_t>(tz.size());
  size_t nx = static_cast<size_t>(ceil_div2(b) - ceil_div2(a));
  size_t nz = static_cast<size_t>(b - a);
  uint64_t total = quotient_size(a, b);
  std::vector<NQuotParam> out;
  out.reserve(total);
  for (uint64_t idx = 0; idx < total; idx++) {
    NQuotParam par;
    par.prime = prime;
    par.a = a;
    par.b = b;
    par.xdig.assign(nx, 0);
    par.zdig.assign(nz, 0);
    uint64_t rest = idx;
    // Least significant digit last: z slots from the back, then x slots.
    for (size_t i = nz; i-- > 0;) {
      par.zdig[i] = static_cast<uint8_t>(rest % q);
      rest /= q;
    }
    for (size_t i = nx; i-- > 0;) {
      par.xdig[i] = static_cast<uint16_t>(rest % q2);
      rest /= q2;
    }
    out.push_back(std::move(par));
  }
  return out;
}

GroupElem GroupCtx::elem_of_param(const NQuotParam& par) const {
  const DenseField& F = L_->coeff();
  std::vector<uint16_t> tz = F.trace_zero_codes();
  int P = prec();
  Laurent x = L_->make(ceil_div2(par.a), par.xdig, P);
  std::vector<uint16_t> zc(par.zdig.size());
  for (size_t i = 0; i < par.zdig.size(); i++) zc[i] = tz[par.zdig[i]];
  Laurent z = L_->make(par.a, zc, P);
  Laurent y = L_->add(L_->scale(L_->neg(L_->mul(x, L_->conj(x))), inv2_), z);
  return par.prime ? make_nprime(x, y) : make_n(x, y);
}

std::vector<GroupElem> GroupCtx::enumerate_N_quotient(int a, int b) const {
  std::vector<GroupElem> out;
  for (const NQuotParam& par : enumerate_quotient_params(false, a, b)) {
    out.push_back(elem_of_param(par));
  }
  return out;
}

std::vector<GroupElem> GroupCtx::enumerate_Nprime_quotient(int a, int b) const {
  std::vector<GroupElem> out;
  for (const NQuotParam& par : enumerate_quotient_params(true, a, b)) {
    out.push_back(elem_of_param(par));
  }
  return out;
}

bool GroupCtx::verify_bruhat_cell_identity(const Laurent& x, const Laurent& y) const {
  Laurent yinv = L_->invert(y);
  Laurent ycinv = L_->invert(L_->conj(y));
  GroupElem lhs = mul(beta(), make_n(x, y));
  GroupElem n1 = make_n(L_->mul(ycinv, x), yinv);
  GroupElem h = make_h(ycinv);
  GroupElem n2 = make_nprime(L_->neg(L_->mul(ycinv, L_->conj(x))), yinv);
  GroupElem rhs = mul(n1, mul(h, n2));
  return eq(lhs, rhs);
}

std::vector<GroupElem> GroupCtx::generators_of_K(Vertex v) const {
  const DenseField& F = L_->coeff();
  auto [nk, mk] = compute_nK_mK(v);
  int P = prec();
  std::vector<GroupElem> out;
  out.push_back(make_h(L_->monomial(0, F.generator(), P)));
  uint64_t q = 1;
  for (int i = 0; i < F.spec().degree / 2; i++) q *= static_cast<uint64_t>(F.spec().p);
  uint16_t u = F.exp_of((F.q() - 1) / (q + 1));  // generates the norm-one circle
  out.push_back(make_diag(L_->one(P), L_->monomial(0, u, P)));
  for (GroupElem& g : level_generators(false, nk)) out.push_back(std::move(g));
  for (GroupElem& g : level_generators(true, mk - 1)) out.push_back(std::move(g));
  out.push_back(beta_of(v));
  return out;
}

GroupElem GroupCtx::random_element(Rng& rng, int words) const {
  const DenseField& F = L_->coeff();
  std::vector<uint16_t> tz = F.trace_zero_codes();
  int P = prec();
  GroupElem g = identity();
  for (int w = 0; w < words; w++) {
    switch (rng.below(5)) {
      case 0:
      case 1: {
        bool prime = rng.below(2) == 0;
        int lo = prime ? 0 : -1;
        Laurent x = L_->random(rng, lo, lo + 2, P);
        std::vector<uint16_t> zc(4);
        for (auto& c : zc) c = tz[rng.below(tz.size())];
        Laurent z = L_->make(2 * lo, zc, P);
        Laurent y = L_->add(L_->scale(L_->neg(L_->mul(x, L_->conj(x))), inv2_), z);
        g = mul(g, prime ? make_nprime(x, y) : make_n(x, y));
        break;
      }
      case 2: {
        int e = static_cast<int>(rng.below(3)) - 1;
        uint16_t unit = static_cast<uint16_t>(1 + rng.below(F.q() - 1));
        uint64_t qq = 1;
        for (int i = 0; i < F.spec().degree / 2; i++) qq *= static_cast<uint64_t>(F.spec().p);
        uint16_t u = F.pow(F.exp_of((F.q() - 1) / (qq + 1)), rng.below(qq + 1));
        g = mul(g, make_diag(L_->monomial(e, unit, P), L_->monomial(0, u, P)));
        break;
      }
      case 3:
        g = mul(g, alpha_pow(rng.below(2) == 0 ? 1 : -1));
        break;
      default:
        g = mul(g, beta());
        break;
    }
  }
  return g;
}

std::string GroupCtx::str(const GroupElem& g) const {
  std::ostringstream os;
  for (int i = 0; i < 3; i++) {
    os << "[ ";
    for (int j = 0; j < 3; j++) {
      os << L_->str(g.at(i, j));
      if (j < 2) os << " | ";
    }
    os << " ]";
    if (i < 2) os << "\n";
  }
  return os.str();
}

}  // namespace uhk
