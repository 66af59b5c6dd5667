#pragma once

// Modular building blocks for Smith forms of square polynomial matrices:
// dense F_p polynomials, determinants by evaluation and interpolation, and
// elimination over the local rings F_p[q]/(g^N).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "specht/matrix.hpp"

namespace specht::snf::detail {

// Coefficients from degree 0 upwards, no trailing zeros; {} is zero.
using Dense = std::vector<std::uint32_t>;

class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p) : p_(p) {}
  std::uint32_t p() const { return p_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + (p_ - b); }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t reduce(const mpz_class& v) const;

  Dense multiply(const Dense& a, const Dense& b) const;
  Dense subtract(Dense a, const Dense& b) const;
  // ordinary polynomial division, b != 0
  std::pair<Dense, Dense> divmod(Dense a, const Dense& b) const;
  Dense mod(Dense a, const Dense& b) const;
  Dense monic(Dense a) const;
  Dense gcd(Dense a, Dense b) const;
  // s with s a = 1 mod m, if gcd(a, m) = 1
  std::optional<Dense> inverse_mod(const Dense& a, const Dense& m) const;
  Dense power(const Dense& g, int k) const;
  // largest k <= cap with g^k | a; cap for a = 0
  int valuation(const Dense& a, const Dense& g, int cap) const;

 private:
  std::uint32_t p_;
};

void trim(Dense& a);

// Rows multiplied by powers of q so that every entry is an ordinary integer
// polynomial with some entry of each row having a constant term.
struct IntegerPolyMatrix {
  std::vector<std::vector<std::vector<mpz_class>>> c;
  std::int64_t shift_total = 0;  // det of the original = q^shift_total det of this
  std::size_t degree_bound = 0;  // sum of row degrees
};

// Requires a square matrix over Z without zero rows.
std::optional<IntegerPolyMatrix> to_integer_poly(const PolyMatrix& m);
std::vector<std::vector<Dense>> reduce(const IntegerPolyMatrix& m, const PrimeField& f);
// Requires p > degree_bound.
Dense determinant_mod(const IntegerPolyMatrix& m, const PrimeField& f);
mpz_class determinant_at(const IntegerPolyMatrix& m, long x);

struct LocalOutcome {
  std::vector<int> valuations;  // nondecreasing, one per row, capped
  Dense split;                  // nonempty: a proper monic factor of g was met
};

// Valuations at g of the invariant factors of a over F_p[q]/(g^cap), where g is
// monic and squarefree with g(0) != 0. Stops early with a split when a pivot
// is a zero divisor that is not a power of g times a unit.
LocalOutcome local_valuations(std::vector<std::vector<Dense>> a, const Dense& g, int cap, const PrimeField& f);

}  // namespace specht::snf::detail
