#pragma once
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "uhecke/laurent.hpp"

namespace uhk {

// The two conjugacy classes of maximal compact subgroups, named by the
// standard lattices they stabilize.
enum class Vertex { K0, K1 };

inline const char* vertex_name(Vertex v) { return v == Vertex::K0 ? "K0" : "K1"; }

// 3x3 matrix over the Laurent field, row-major. Only matrices satisfying the
// unitary relation g^T * beta * conj(g) = beta are handed out by the
// constructors below.
struct GroupElem {
  std::array<Laurent, 9> a;

  const Laurent& at(int i, int j) const { return a[static_cast<size_t>(3 * i + j)]; }
  Laurent& at(int i, int j) { return a[static_cast<size_t>(3 * i + j)]; }
};

struct SubgroupTag {
  enum class Kind {
    K,                 // maximal compact at `vertex`
    KProP,             // its principal congruence kernel
    IwahoriUpper,      // preimage of the upper Borel of the finite quotient
    IwahoriLower,
    ProPIwahoriUpper,  // preimage of the upper unipotent
    ProPIwahoriLower,
    NLevel,            // upper unipotent subgroup at filtration level `level`
    NprimeLevel,
    HTorus,
    BUpper,
    BprimeLower
  };
  Kind kind;
  Vertex vertex = Vertex::K0;
  int level = 0;

  static SubgroupTag K(Vertex v) { return {Kind::K, v, 0}; }
  static SubgroupTag pro_p(Vertex v) { return {Kind::KProP, v, 0}; }
  static SubgroupTag iwahori_upper(Vertex v) { return {Kind::IwahoriUpper, v, 0}; }
  static SubgroupTag iwahori_lower(Vertex v) { return {Kind::IwahoriLower, v, 0}; }
  static SubgroupTag pro_p_iwahori_upper(Vertex v) {
    return {Kind::ProPIwahoriUpper, v, 0};
  }
  static SubgroupTag pro_p_iwahori_lower(Vertex v) {
    return {Kind::ProPIwahoriLower, v, 0};
  }
  static SubgroupTag n_level(int k) { return {Kind::NLevel, Vertex::K0, k}; }
  static SubgroupTag nprime_level(int k) { return {Kind::NprimeLevel, Vertex::K0, k}; }
  static SubgroupTag torus() { return {Kind::HTorus, Vertex::K0, 0}; }
  static SubgroupTag b_upper() { return {Kind::BUpper, Vertex::K0, 0}; }
  static SubgroupTag bprime_lower() { return {Kind::BprimeLower, Vertex::K0, 0}; }
};

// Coset parameters for N_a/N_b (or the lower-triangular mirror): x runs over
// a window of coefficient digits, z over trace-zero digits, and the second
// unipotent coordinate is y = -x*conj(x)/2 + z. Enumeration order is the
// odometer over (xdig, zdig) with earlier slots most significant.
struct NQuotParam {
  bool prime = false;
  int a = 0, b = 0;
  std::vector<uint16_t> xdig;  // codes at t^ceil(a/2) .. t^(ceil(b/2)-1)
  std::vector<uint8_t> zdig;   // indices into the trace-zero code list, t^a .. t^(b-1)
};

class GroupCtx {
 public:
  explicit GroupCtx(const LaurentField& L);

  const LaurentField& laurent() const { return *L_; }
  const DenseField& coeff() const { return L_->coeff(); }
  int prec() const { return L_->default_prec(); }

  // --- constructors (all verify the unitary relation) ---
  GroupElem identity() const;
  GroupElem from_entries(const std::array<Laurent, 9>& rows) const;
  GroupElem make_n(const Laurent& x, const Laurent& y) const;
  GroupElem make_nprime(const Laurent& x, const Laurent& y) const;
  GroupElem make_h(const Laurent& x) const;
  GroupElem make_diag(const Laurent& a, const Laurent& u) const;
  GroupElem alpha() const { return alpha_pow(1); }
  GroupElem alpha_pow(int k) const;
  GroupElem beta() const;
  GroupElem beta_prime() const;
  GroupElem beta_of(Vertex v) const { return v == Vertex::K0 ? beta() : beta_prime(); }

  // --- arithmetic ---
  GroupElem mul(const GroupElem& g, const GroupElem& h) const;
  GroupElem inverse(const GroupElem& g) const;  // beta * conj(g)^T * beta
  bool eq(const GroupElem& g, const GroupElem& h) const;
  bool is_identity(const GroupElem& g) const;
  bool in_G(const GroupElem& g) const;

  // --- membership and reductions ---
  bool is_member(const GroupElem& g, const SubgroupTag& tag) const;
  // Image in the finite quotient of K_v, as 9 coefficient codes (row-major
  // with zeros in the slots the reduction does not read). Errors with NotInK
  // if g fails the valuation pattern of K_v.
  std::array<uint16_t, 9> residue_form(const GroupElem& g, Vertex v) const;
  uint32_t residue_code(const GroupElem& g, Vertex v) const;

  // Filtration levels where the unipotent subgroups meet the upper
  // pro-p-Iwahori: scans levels in [-3, 3] both ways.
  std::pair<int, int> compute_nK_mK(Vertex v) const;

  // --- unipotent quotient enumeration ---
  uint64_t quotient_size(int a, int b) const;
  std::vector<NQuotParam> enumerate_quotient_params(bool prime, int a, int b) const;
  GroupElem elem_of_param(const NQuotParam& par) const;
  std::vector<GroupElem> enumerate_N_quotient(int a, int b) const;
  std::vector<GroupElem> enumerate_Nprime_quotient(int a, int b) const;

  // beta * n(x,y) = n(x/conj(y), 1/y) * h(1/conj(y)) * nprime(-conj(x)/conj(y), 1/y):
  // checks the two sides multiply out equal. NotInvertible when y is zero to
  // precision.
  bool verify_bruhat_cell_identity(const Laurent& x, const Laurent& y) const;

  // The standard topological generator set of K_v used everywhere downstream:
  // h(g), diag(1,u,1), the three level-n_K upper gens, the three
  // level-(m_K - 1) lower gens, and beta_K. Order is fixed.
  std::vector<GroupElem> generators_of_K(Vertex v) const;
  // Upper/lower unipotent generator triples at a given level: two x-gens
  // (x = c*t^ceil(k/2), c in {1, least non-rational unit}) and one z-gen
  // (n(0, z0 * t^k) with z0 the least nonzero trace-zero code).
  std::vector<GroupElem> level_generators(bool prime, int k) const;

  GroupElem random_element(Rng& rng, int words) const;
  std::string str(const GroupElem& g) const;

 private:
  const LaurentField* L_;
  uint16_t inv2_;       // 1/2 in the coefficient field
  uint16_t skew_unit_;  // least nonzero trace-zero code (the "i" of the field)

  bool entry_val_at_least(const GroupElem& g, int i, int j, int c) const;
  bool shape_n(const GroupElem& g, bool prime) const;
};

}  // namespace uhk
