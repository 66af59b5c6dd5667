#pragma once

// Compact Laurent polynomials over F_p, p < 2^31, and factorization into
// irreducibles for the small degrees that occur in cyclotomic reductions.

#include <cstdint>
#include <utility>
#include <vector>

#include "specht/qlaurent.hpp"

namespace specht::snf {

class FpPoly {
 public:
  using Exponent = std::int64_t;

  explicit FpPoly(std::uint32_t p = 2) : p_(p) {}
  // Coefficients of q^low, q^{low+1}, ...
  FpPoly(std::uint32_t p, Exponent low, std::vector<std::uint32_t> coeffs);
  static FpPoly from_laurent(const qlaurent::LaurentPoly& f);
  static FpPoly constant(std::uint32_t p, std::uint32_t c) { return FpPoly(p, 0, {c % p}); }
  static FpPoly monomial(std::uint32_t p, Exponent e) { return FpPoly(p, e, {1}); }

  qlaurent::LaurentPoly to_laurent() const;

  std::uint32_t p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return low_ == 0 && c_.size() == 1 && c_[0] == 1; }
  Exponent low() const { return low_; }
  Exponent span() const { return static_cast<Exponent>(c_.size()) - 1; }
  // Degree as an ordinary polynomial; requires low() >= 0.
  Exponent degree() const { return low_ + span(); }
  std::uint32_t leading() const { return c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  std::uint32_t coeff(Exponent e) const;

  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.low_ == b.low_ && a.c_ == b.c_;
  }
  FpPoly scaled(std::uint32_t s) const;
  FpPoly shifted(Exponent k) const;

  // *this -= m * b.
  void sub_mul(const FpPoly& m, const FpPoly& b);
  // Laurent division: *this = quot * d + rem with span(rem) < span(d).
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  // Ordinary polynomial remainder; both operands must have low() >= 0.
  FpPoly poly_mod(const FpPoly& d) const;
  // Lowest exponent 0 and monic.
  FpPoly canonical() const;

 private:
  void trim();

  std::uint32_t p_;
  Exponent low_ = 0;
  std::vector<std::uint32_t> c_;
};

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b);

struct FpFactor {
  FpPoly factor;  // monic irreducible, low() == 0
  int multiplicity;
};

// Monic irreducible factorization of a nonzero ordinary polynomial (low() >= 0,
// powers of q are dropped). Deterministic: factors sorted by degree, then coefficients.
std::vector<FpFactor> factor_fp(const FpPoly& f);

}  // namespace specht::snf
