#pragma once

// Permutation modules M(mu) = x_mu H and the signed modules M(k|n-k) = x_{(k|n-k)} H,
// in the basis x T_d, d a distinguished right coset representative.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "specht/coxeter.hpp"
#include "specht/hecke.hpp"
#include "specht/qlaurent.hpp"
#include "specht/tableaux.hpp"

namespace specht::gram {

using coxeter::Composition;
using coxeter::Perm;
using qlaurent::CoeffRing;
using qlaurent::LaurentPoly;

// Dense coordinates in the basis of a PermModule; zero coordinates are zero polynomials.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(std::size_t dim, CoeffRing ring) : ring_(ring), coords_(dim, LaurentPoly(ring)) {}

  std::size_t dim() const { return coords_.size(); }
  const CoeffRing& ring() const { return ring_; }
  const LaurentPoly& operator[](std::size_t i) const { return coords_[i]; }
  LaurentPoly& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<LaurentPoly>& coords() const { return coords_; }
  std::size_t support_size() const;
  bool is_zero() const { return support_size() == 0; }

  ModuleVector& operator+=(const ModuleVector& o);
  ModuleVector& operator-=(const ModuleVector& o);
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) { return a += b; }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) { return a -= b; }
  ModuleVector scaled(const LaurentPoly& c) const;
  friend bool operator==(const ModuleVector& a, const ModuleVector& b) {
    return a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

 private:
  CoeffRing ring_ = CoeffRing::integers();
  std::vector<LaurentPoly> coords_;
};

class PermModule {
 public:
  // M(mu): every block of S_mu acts trivially.
  static PermModule young(const Composition& mu, CoeffRing ring = CoeffRing::integers());
  // M(k|n-k): S_k acts by the sign character, S_{(1^k,n-k)} trivially. Basis
  // vectors correspond to standard pair tableaux (a|b), a = {d(1), ..., d(k)}.
  static PermModule signed_pair(int k, int n, CoeffRing ring = CoeffRing::integers());

  int n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const CoeffRing& ring() const { return ring_; }
  const Composition& composition() const { return mu_; }
  bool is_signed() const { return signed_; }
  const std::vector<Perm>& basis() const { return basis_; }
  const std::vector<int>& lengths() const { return lengths_; }
  std::size_t index_of(const Perm& d) const;
  // Index of the pair tableau (a|b) in a signed module.
  std::size_t index_of(const tableaux::PairTableau& ab) const;

  ModuleVector zero() const { return ModuleVector(dim(), ring_); }
  // x T_d.
  ModuleVector basis_vector(std::size_t index) const;
  // The generator x itself (d = 1).
  ModuleVector generator() const { return basis_vector(0); }

  ModuleVector apply_gen(const ModuleVector& v, int i) const;
  ModuleVector apply_word(const ModuleVector& v, const coxeter::Word& word) const;
  ModuleVector apply_basis(const ModuleVector& v, const Perm& w) const;
  ModuleVector apply(const ModuleVector& v, const hecke::HeckeElt& h) const;
  // v x_nu and v y_nu for a composition nu of n, through coset-sum factors.
  ModuleVector apply_x(const ModuleVector& v, const Composition& nu) const;
  ModuleVector apply_y(const ModuleVector& v, const Composition& nu) const;

  // <x T_a, x T_b> = delta_{ab} q^{len a}.
  LaurentPoly form(const ModuleVector& u, const ModuleVector& v) const;

 private:
  // ScaleQ / Negate: d r_i = r_j d with r_j in S_mu, acting by q or by the sign.
  enum class Step : std::uint8_t { ScaleQ, Negate, Up, Down };
  struct Action {
    Step step;
    std::uint32_t target;
  };

  PermModule(Composition mu, bool is_signed, CoeffRing ring);
  ModuleVector apply_coset_factors(const ModuleVector& v, const Composition& nu, bool sign) const;

  int n_ = 0;
  Composition mu_;
  bool signed_ = false;
  CoeffRing ring_ = CoeffRing::integers();
  std::vector<Perm> basis_;
  std::vector<int> lengths_;
  std::unordered_map<Perm, std::size_t, coxeter::PermHash> index_;
  // actions_[idx * (n - 1) + (i - 1)]
  std::vector<Action> actions_;
};

}  // namespace specht::gram
