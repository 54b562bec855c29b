#pragma once
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uhecke/group.hpp"

namespace uhk {

// A full-rank span over the power-series ring, stored as its column Hermite
// normal form: upper triangular, pivot i equal to t^piv[i], entries above a
// pivot reduced to windows below it. The HNF is unique per span, so lattices
// compare and hash by their serialized form.
struct Lattice {
  std::array<Laurent, 9> h;  // row-major
  std::array<int, 3> piv;
};

// Canonical coset label: Plus(m, u) is the coset u*alpha^-m*K with u a
// representative of N_{n_K}/N_{n_K+2m}; Minus(n, u') is u'*alpha^n*K with u'
// representing N'_{m_K}/N'_{m_K+2n-1} (n >= 1). Plus(0, -) is the base coset.
struct CosetRep {
  enum class Side : uint8_t { Plus, Minus };
  Side side = Side::Plus;
  int radius = 0;
  NQuotParam u;
};

class TreeCtx {
 public:
  TreeCtx(const GroupCtx& G, Vertex v);

  const GroupCtx& group() const { return *G_; }
  Vertex vertex() const { return v_; }
  int level_n() const { return nK_; }
  int level_m() const { return mK_; }

  Lattice standard_lattice() const;
  // The lattice spanned by the columns of g applied to the standard one.
  Lattice vertex_of(const GroupElem& g) const;
  Lattice hnf_from_columns(std::vector<std::array<Laurent, 3>> cols) const;
  Lattice dual(const Lattice& L) const;
  Lattice scale_lattice(const Lattice& L, int k) const;  // multiply by t^k
  bool lattice_contains(const Lattice& outer, const Lattice& inner) const;
  bool lattice_eq(const Lattice& a, const Lattice& b) const;
  // t*L <= dual(L) <= L, the defining sandwich for tree vertices.
  bool is_vertex_lattice(const Lattice& L) const;
  std::string lattice_key(const Lattice& L) const;

  // (side, radius) straight from the lattice: radius from the elementary
  // divisors of the standard-basis coordinate matrix, side from the bottom
  // HNF pivot. Needs no ball.
  std::pair<CosetRep::Side, int> classify_lattice(const Lattice& L) const;

  // Number of adjacent tree vertices, counted by enumerating intermediate
  // spans in both containment directions and testing the sandwich.
  int degree(const Lattice& L) const;

  GroupElem elem_of_rep(const CosetRep& r) const;
  std::pair<CosetRep::Side, int> classify(const CosetRep& r) const {
    return {r.side, r.radius};
  }

 private:
  const GroupCtx* G_;
  Vertex v_;
  int nK_, mK_;

  std::array<Laurent, 9> standard_basis() const;    // B_K
  std::array<Laurent, 9> standard_basis_inv() const;
};

// Dictionary of every canonical coset with radius <= R, keyed by lattice.
class Ball {
 public:
  Ball(const TreeCtx& T, int R);

  const TreeCtx& tree() const { return *T_; }
  int radius() const { return R_; }
  uint32_t size() const { return static_cast<uint32_t>(info_.size()); }
  const std::vector<uint64_t>& shell_sizes() const { return shells_; }
  uint32_t shell_start(int s) const { return shell_start_[static_cast<size_t>(s)]; }
  // Cosets on each side within one shell (Plus block first).
  uint64_t plus_count(int s) const { return plus_count_[static_cast<size_t>(s)]; }

  CosetRep::Side side_of(uint32_t idx) const;
  int radius_of(uint32_t idx) const;
  CosetRep rep_of(uint32_t idx) const;
  GroupElem elem_of(uint32_t idx) const;
  GroupElem inv_elem_of(uint32_t idx) const;

  uint32_t index_of(const Lattice& L) const;  // OutOfBall when absent
  uint32_t index_of_elem(const GroupElem& g) const;
  // g = elem_of(idx) * k with k in K; MembershipFailed if the residue is not
  // in K (which would signal an enumeration or precision bug).
  std::pair<uint32_t, GroupElem> normal_form(const GroupElem& g) const;
  // g = k1 * alpha^n * k2.
  std::tuple<GroupElem, int, GroupElem> cartan_factor(const GroupElem& g) const;

 private:
  const TreeCtx* T_;
  int R_;
  struct Info {
    uint8_t side;
    uint8_t radius;
    uint16_t xlen, zlen;
    uint64_t off;
  };
  std::vector<Info> info_;
  std::vector<uint8_t> arena_;
  std::unordered_map<std::string, uint32_t> dict_;
  std::vector<uint64_t> shells_;
  std::vector<uint64_t> plus_count_;
  std::vector<uint32_t> shell_start_;
};

}  // namespace uhk
