#pragma once

// Elementary divisor lists and their jump notation.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "specht/qlaurent.hpp"

namespace specht::snf {

using qlaurent::CoeffRing;
using qlaurent::LaurentPoly;

// d_1 | d_2 | ... | d_m, each canonical; zero divisors come last. For ring Z the
// divisors are positive integer constants (Smith form of the q = 1 specialization).
struct EDList {
  CoeffRing ring = CoeffRing::rationals();
  std::vector<LaurentPoly> divisors;

  std::size_t size() const { return divisors.size(); }
  std::size_t rank() const;
  bool chain_holds() const;
  friend bool operator==(const EDList&, const EDList&) = default;
};

// Entrywise equality up to units. Lists over Z and Q are compared over Q when
// their rings differ; F_p lists only match lists over the same field.
bool same_up_to_units(const EDList& a, const EDList& b);

// Builds an EDList from arbitrary nonzero-or-zero diagonal entries by replacing
// pairs with (gcd, lcm) until the divisibility chain holds.
EDList normalize_diagonal(std::vector<LaurentPoly> diag, CoeffRing ring);

struct JumpStep {
  LaurentPoly factor;  // d_{i+1} / d_i, or d_1 for the first step
  std::size_t multiplicity;
  friend bool operator==(const JumpStep&, const JumpStep&) = default;
};

struct JumpNotation {
  CoeffRing ring = CoeffRing::rationals();
  std::vector<JumpStep> steps;
  friend bool operator==(const JumpNotation&, const JumpNotation&) = default;
};

// Throws std::invalid_argument on zero divisors and std::domain_error when the
// chain is violated.
JumpNotation jump_format(const EDList& e);
EDList expand(const JumpNotation& j);

// "Φ2^2Φ4", "1", or for integers "2^3", "3·5".
std::string factor_label(const LaurentPoly& f, std::int64_t max_m);
// "-[Φ2^2]-> 1 -[Φ4]-> 20 ..."
std::string render(const JumpNotation& j, std::int64_t max_m);
// Parses a rendered chain back into (label, multiplicity) pairs.
std::vector<std::pair<std::string, std::size_t>> parse_rendered(const std::string& text);

// Prime factorization string of a positive integer: "1", "2^3", "3·5".
std::string integer_factor_string(const mpz_class& v);

}  // namespace specht::snf
