#pragma once

// Hook shapes (n-k, 1^k): the bases v'_t and w'_t of the image of S(lambda) in the
// signed module M(k|n-k), their Gram matrices and the predicted elementary divisors.

#include <vector>

#include "specht/edlist.hpp"
#include "specht/gram.hpp"
#include "specht/perm_module.hpp"
#include "specht/tableaux.hpp"

namespace specht::gram {

// The signed module M(k|n-k) for a hook lambda = (n-k, 1^k).
PermModule hook_module(const Partition& lambda, CoeffRing ring = CoeffRing::integers());

// v'_t as the sum over (a|b) preceding t of (-1)^{k+1-I_t(a|b)} q^{len d(t') - len d(a|b)} x_{(a|b)}.
// Valid for standard t only; throws std::invalid_argument otherwise.
ModuleVector v_prime_closed(const PermModule& m, const Tableau& t);
// v'_t = x_{(k|n-k)} y'_{k+1} T_{d(t')} by acting on the generator, for any t of shape lambda.
ModuleVector v_prime_recursive(const PermModule& m, const Tableau& t);
// w'_t = v'_{t(1,n)} when n lies in the first row of t, else v'_{t^lambda} x_{n-k} T_{d(t)}.
ModuleVector w_prime(const PermModule& m, const Tableau& t);

std::vector<ModuleVector> v_primes(const PermModule& m, const std::vector<Tableau>& order);
std::vector<ModuleVector> w_primes(const PermModule& m, const std::vector<Tableau>& order);

// (<v'_s, v'_t>) over Std(lambda).
PolyMatrix gram_prime(const Partition& lambda);
// (<w'_s, v'_t>), rows s and columns t over Std(lambda).
GramMatrix mixed_gram(const Partition& lambda);

struct ScalingConstant {
  LaurentPoly c;       // G(lambda) = c G'(lambda)
  int sign = 1;        // c = sign q^exponent [k]_q^!
  std::int64_t exponent = 0;
};

// Finds c with G(lambda) = c G'(lambda) entrywise and checks c = +-q^a [k]_q^!.
// Throws std::logic_error if either fails.
ScalingConstant pi_scaling_check(const Partition& lambda);

// binom(n-2, k) copies of [k]_q^! followed by binom(n-2, k-1) copies of [k]_q^! [n]_q.
// Ring Z gives the q = 1 values k! and k! n.
snf::EDList hook_elementary_divisors(int n, int k, CoeffRing ring = CoeffRing::rationals());

// The rank binom(n-2, k) of G(lambda) when [k]! != 0 and [n] = 0 at the specialization.
std::size_t hook_simple_dimension(int n, int k);

}  // namespace specht::gram
