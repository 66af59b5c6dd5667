#pragma once

// Checks built on top of the Smith form: triangular certificates of divisible
// diagonalizability, minor ideals, determinants and conjugate duality.

#include <cstdint>
#include <optional>
#include <string>

#include "specht/edlist.hpp"
#include "specht/matrix.hpp"
#include "specht/tableaux.hpp"

namespace specht::snf {

struct Certificate {
  bool accepted = false;
  // First failing hypothesis (row, column), when refused.
  std::optional<std::pair<std::size_t, std::size_t>> offending;
  std::string reason;
  // Canonical diagonal d_1, ..., d_m when accepted.
  EDList divisors;
};

// Upper triangular T with d_1 | d_2 | ... | d_m on the diagonal and d_i dividing
// every entry of row i. Works over any coefficient ring, including Z[q, q^-1].
Certificate divisible_diag_certificate(const PolyMatrix& t);

struct MinorCheck {
  bool holds = false;
  bool exhaustive = false;  // every k x k minor was evaluated
  LaurentPoly minor_gcd;    // canonical gcd found
  LaurentPoly expected;     // canonical d_1 ... d_k
};

struct MinorOptions {
  std::size_t max_exhaustive_minors = 4000;
  int samples = 4;
  std::uint64_t seed = 1;
};

// gcd of the k x k minors of m (field coefficients) against d_1 ... d_k. Beyond
// max_exhaustive_minors the minors are sampled through random compressions
// det(P m Q) (Cauchy-Binet): each sample lies in the minor ideal, so a mismatch
// in divisibility is definitive while agreement of the gcd is probabilistic.
MinorCheck minor_ideal_check(const PolyMatrix& m, const EDList& e, std::size_t k, const MinorOptions& opts = {});

// det over the field coefficient ring versus prod d_i, up to a unit c q^a.
bool determinant_matches(const PolyMatrix& m, const EDList& e);

struct DualityCheck {
  bool holds = false;
  std::optional<std::size_t> failing_index;  // 0-based
  EDList lambda_eds;
  EDList conjugate_eds;
};

// d_i(lambda) d_{m+1-i}(lambda') equals h_lambda(q) up to a unit, over Q[q, q^-1].
DualityCheck conjugate_duality_check(const tableaux::Partition& lambda);
// Same check with precomputed elementary divisor lists over Q.
DualityCheck conjugate_duality_check(const tableaux::Partition& lambda, const EDList& lambda_eds,
                                     const EDList& conjugate_eds);

}  // namespace specht::snf
