#pragma once

// Smith normal form over the Euclidean rings F[q, q^-1] (F = Q or F_p) and Z.

#include <memory>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "specht/edlist.hpp"
#include "specht/matrix.hpp"

namespace specht::snf {

// Entries must all be over the same field ring (Q or F_p). Over Q the rows are
// cleared of denominators and handed to SmithSession. The Euclidean engine picks
// pivots of minimal span, ties broken by position (row first); over Q it keeps
// integer polynomials and divides every modified row or column by its content.
EDList smith_field_laurent(const PolyMatrix& m);

EDList smith_integer(const std::vector<std::vector<mpz_class>>& m);

// Elementary divisors of one matrix over Z[q, q^-1] in several target rings,
// sharing intermediate results. "Z" means the specialization q -> 1.
//
// A square matrix whose determinant is a nonzero integer times a power of q times
// cyclotomic polynomials is handled locally: the determinant is found modulo a
// large prime by interpolation, and for each cyclotomic factor g the valuations
// of the invariant factors come from elimination over F_p[q]/(g^N), accepted only
// when they add up to the valuation of the determinant. Over Q the valuations
// at Phi_m are read off modulo large primes until two primes agree. Any other
// matrix goes to the Euclidean engine.
class SmithSession {
 public:
  explicit SmithSession(PolyMatrix m_over_z);

  const PolyMatrix& matrix() const { return m_; }
  const EDList& over_q();
  const EDList& over_z();
  EDList over(const CoeffRing& target);

  // det m = c q^a prod Phi_m^e over Z; empty unless the matrix has that shape.
  std::optional<LaurentPoly> integer_determinant();

 private:
  struct Analysis;
  Analysis* analysis();

  PolyMatrix m_;
  std::optional<EDList> q_;
  std::optional<EDList> z_;
  bool analysis_done_ = false;
  std::shared_ptr<Analysis> analysis_;
};

// Convenience dispatch for a single target ring.
EDList smith_over(const PolyMatrix& m_over_z, const CoeffRing& target);

}  // namespace specht::snf
