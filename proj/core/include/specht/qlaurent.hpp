#pragma once

// Exact Laurent polynomials in one variable q over Z, Q and F_p.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace specht::tableaux {
class Partition;
}

namespace specht::qlaurent {

class CoeffRing {
 public:
  enum class Kind { Integer, Rational, PrimeField };

  static CoeffRing integers() { return CoeffRing(Kind::Integer, 0); }
  static CoeffRing rationals() { return CoeffRing(Kind::Rational, 0); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static CoeffRing prime_field(std::uint64_t p);

  // Accepts "Z", "Q" and "Fp:<p>".
  static CoeffRing parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integer; }
  std::string to_string() const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

 private:
  CoeffRing(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// A Laurent polynomial sum_e c_e q^e with coefficients in a CoeffRing.
///
/// Storage is dense between the lowest and highest nonzero exponent. Over Q the
/// coefficients are kept as integer numerators over a single positive common
/// denominator in lowest terms; over Z and F_p that denominator is always 1.
/// Over F_p the numerators are reduced into [0, p).
class LaurentPoly {
 public:
  using Exponent = std::int64_t;

  explicit LaurentPoly(CoeffRing ring = CoeffRing::integers()) : ring_(ring) {}

  static LaurentPoly constant(const mpq_class& c, CoeffRing ring = CoeffRing::integers());
  static LaurentPoly monomial(const mpq_class& c, Exponent e,
                              CoeffRing ring = CoeffRing::integers());
  static LaurentPoly q_power(Exponent e, CoeffRing ring = CoeffRing::integers()) {
    return monomial(1, e, ring);
  }
  // Builds from (exponent, coefficient) pairs; repeated exponents accumulate.
  static LaurentPoly from_terms(const std::vector<std::pair<Exponent, mpq_class>>& terms,
                                CoeffRing ring = CoeffRing::integers());

  const CoeffRing& ring() const { return ring_; }
  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  // Units: nonzero monomials over a field, +-q^a over Z.
  bool is_unit() const;
  bool is_monomial() const;

  Exponent low() const { return low_; }
  Exponent high() const { return low_ + static_cast<Exponent>(num_.size()) - 1; }
  // high - low; the Euclidean size of a nonzero Laurent polynomial.
  Exponent span() const { return static_cast<Exponent>(num_.size()) - 1; }

  mpq_class coeff(Exponent e) const;
  mpq_class leading_coeff() const;
  mpq_class trailing_coeff() const;
  std::vector<std::pair<Exponent, mpq_class>> terms() const;
  std::size_t term_count() const;

  // Raw integer numerators and common denominator (see class comment).
  const std::vector<mpz_class>& numerators() const { return num_; }
  const mpz_class& denominator() const { return den_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly shifted(Exponent k) const;  // multiply by q^k
  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly pow(unsigned e) const;

  // this += a * b * q^shift, without temporaries when coefficients are integral.
  void add_product(const LaurentPoly& a, const LaurentPoly& b, Exponent shift = 0);

  // Long division in the Laurent ring over a field (or by a divisor whose
  // leading coefficient is +-1 over Z): *this = quot * d + rem with
  // span(rem) < span(d) or rem == 0.
  std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& d) const;
  // Quotient when d divides *this in the Laurent ring over the coefficient ring.
  std::optional<LaurentPoly> exact_divide(const LaurentPoly& d) const;
  bool divides(const LaurentPoly& other) const { return other.exact_divide(*this).has_value(); }

  // Coefficient-ring change: Z -> Q, Z -> F_p, Q -> Z (throws if not integral), Q -> F_p
  // (throws if a denominator vanishes mod p).
  LaurentPoly to_ring(CoeffRing target) const;

  mpq_class evaluate(const mpq_class& x) const;

  std::string to_string() const;

 private:
  void trim();
  void normalize_denominator();
  void reduce_mod_p();
  void assert_same_ring(const LaurentPoly& o) const;

  CoeffRing ring_;
  Exponent low_ = 0;
  std::vector<mpz_class> num_;
  mpz_class den_ = 1;
};

// Canonical representative of f up to units of the Laurent ring: lowest exponent
// 0, then monic over a field or positive leading coefficient over Z (with the
// content kept, since integers other than +-1 are not units of Z[q,q^-1]).
LaurentPoly canonical(const LaurentPoly& f);
bool associates(const LaurentPoly& a, const LaurentPoly& b);

// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0.
LaurentPoly quantum_integer(std::int64_t k, CoeffRing ring = CoeffRing::integers());
// [k]_q^! = [1]_q ... [k]_q; [0]_q^! = 1.
LaurentPoly quantum_factorial(std::int64_t k, CoeffRing ring = CoeffRing::integers());
// The m-th cyclotomic polynomial over Z.
LaurentPoly cyclotomic(std::int64_t m);
// prod over the nodes of [lambda] of [hook length]_q.
LaurentPoly hook_polynomial(const tableaux::Partition& lambda,
                            CoeffRing ring = CoeffRing::integers());

struct CycloFactor {
  std::int64_t m;
  int exponent;
  friend bool operator==(const CycloFactor&, const CycloFactor&) = default;
};

// f = unit * q^unit_exp * prod Phi_m^e * remainder. Over Z the unit is +-1 and the
// remainder keeps the integer content; over a field the unit is the leading
// coefficient and the remainder is monic.
struct CycloDisplay {
  mpq_class unit = 1;
  LaurentPoly::Exponent unit_exp = 0;
  std::vector<CycloFactor> factors;
  LaurentPoly remainder;

  bool fully_factored() const { return remainder.is_one(); }
  LaurentPoly reassemble() const;
  // Unit-free rendering such as "Φ2^2Φ4"; "1" for the empty product.
  std::string factor_string() const;
};

// Trial division by Phi_m reduced into f's ring, m = 2..max_m and finally m = 1,
// each divided out as often as it goes. Requires f != 0.
CycloDisplay cyclo_display(const LaurentPoly& f, std::int64_t max_m);

// q -> 1. Requires ring Z or Q.
mpq_class specialize_at_one(const LaurentPoly& f);
// Coefficientwise reduction Z -> F_p.
LaurentPoly reduce_mod(const LaurentPoly& f, std::uint32_t p);

// Canonical gcd over a field coefficient ring. gcd(f, 0) = canonical(f).
LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace specht::qlaurent
