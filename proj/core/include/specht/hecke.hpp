#pragma once

// The Iwahori-Hecke algebra H of S_n in the T_w basis, with (T_i - q)(T_i + 1) = 0.

#include <map>
#include <string>

#include "specht/coxeter.hpp"
#include "specht/qlaurent.hpp"
#include "specht/tableaux.hpp"

namespace specht::hecke {

using coxeter::Composition;
using coxeter::Perm;
using qlaurent::CoeffRing;
using qlaurent::LaurentPoly;

class HeckeElt {
 public:
  using Terms = std::map<Perm, LaurentPoly>;

  explicit HeckeElt(int n = 0, CoeffRing ring = CoeffRing::integers()) : n_(n), ring_(ring) {}

  static HeckeElt zero(int n, CoeffRing ring = CoeffRing::integers()) { return HeckeElt(n, ring); }
  static HeckeElt one(int n, CoeffRing ring = CoeffRing::integers());
  static HeckeElt basis(const Perm& w, CoeffRing ring = CoeffRing::integers());
  static HeckeElt generator(int i, int n, CoeffRing ring = CoeffRing::integers());
  // T_{i_1} ... T_{i_k}, not necessarily reduced.
  static HeckeElt word(const coxeter::Word& w, int n, CoeffRing ring = CoeffRing::integers());

  int n() const { return n_; }
  const CoeffRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const Perm& w) const;

  void add_term(const Perm& w, const LaurentPoly& c);

  HeckeElt operator-() const;
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h);
  friend bool operator==(const HeckeElt& a, const HeckeElt& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  // h T_i.
  HeckeElt times_generator(int i) const;
  // h T_w, one generator at a time along a reduced word of w.
  HeckeElt times_basis(const Perm& w) const;

  std::string to_string() const;

 private:
  void check_compatible(const HeckeElt& o) const;

  int n_;
  CoeffRing ring_;
  Terms terms_;
};

// T_w -> T_{w^-1}, extended linearly; an anti-automorphism.
HeckeElt star(const HeckeElt& h);
// The automorphism with T_i -> (q - 1) - T_i, i.e. T_w -> (-q)^{len w} (T_{w^-1})^{-1}.
HeckeElt hash(const HeckeElt& h);
// T_w^{-1} = T_{i_k}^{-1} ... T_{i_1}^{-1} with T_i^{-1} = q^{-1} T_i + (q^{-1} - 1).
HeckeElt invert_basis_element(const Perm& w, CoeffRing ring = CoeffRing::integers());

// sum over S_mu of T_w.
HeckeElt x_mu(const Composition& mu, CoeffRing ring = CoeffRing::integers());
// sum over S_mu of (-q)^{-len w} T_w.
HeckeElt y_mu(const Composition& mu, CoeffRing ring = CoeffRing::integers());
// x_lambda T_{w_lambda} y_{lambda'}.
HeckeElt z_lambda(const tableaux::Partition& lambda, CoeffRing ring = CoeffRing::integers());
// T_{i,j} = T_{r_{i,j}}.
HeckeElt t_ij(int i, int j, int n, CoeffRing ring = CoeffRing::integers());
// y'_{k+1} = 1 + sum_{j=1}^k (-q)^{j-k-1} T_{k,j}, inside H(S_n).
HeckeElt y_prime(int k, int n, CoeffRing ring = CoeffRing::integers());
// x_{n-k} = sum_{j=0}^{n-k-1} T_{1,j}.
HeckeElt x_tail(int k, int n, CoeffRing ring = CoeffRing::integers());
// x_{(k|n-k)} = y_{(k,1^{n-k})} x_{(1^k,n-k)}.
HeckeElt x_pair(int k, int n, CoeffRing ring = CoeffRing::integers());

}  // namespace specht::hecke
