#pragma once

// Specht vectors v_t = z_lambda T_{d(t')} inside M(lambda) and the Gram matrix G(lambda).

#include <optional>
#include <string>
#include <vector>

#include "specht/matrix.hpp"
#include "specht/perm_module.hpp"
#include "specht/tableaux.hpp"

namespace specht::gram {

using tableaux::Partition;
using tableaux::Tableau;

// Bumped whenever the order of Std(lambda) changes.
inline constexpr int kBasisOrderVersion = 1;

struct GramMatrix {
  enum class Kind { Plain, Mixed };

  Partition lambda;
  std::vector<Tableau> order;
  Kind kind = Kind::Plain;
  PolyMatrix entries;

  std::size_t size() const { return order.size(); }
  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;
};

// z_lambda = x_lambda T_{w_lambda} y_{lambda'} as a vector of M(lambda).
ModuleVector z_vector(const PermModule& m, const Partition& lambda);

ModuleVector specht_vector(const Partition& lambda, const Tableau& t);

// All v_t in the order of standard_tableaux(lambda), sharing work between
// common prefixes of the reduced words of d(t').
std::vector<ModuleVector> specht_vectors(const PermModule& m, const Partition& lambda,
                                         const std::vector<Tableau>& order);

GramMatrix gram_matrix(const Partition& lambda);

// For vectors in a common basis, a pivot coordinate for each vector such that
// ordering the vectors suitably makes the pivot submatrix triangular with unit
// (+-q^a) diagonal. Empty if no such arrangement is found by peeling columns
// whose only remaining nonzero entry is a unit.
std::optional<std::vector<std::size_t>> unitriangular_pivots(const std::vector<ModuleVector>& vectors);

// Rank of G(lambda) over a field after q -> q0; with q0 absent, the rank over
// the field of rational functions.
std::size_t gram_rank_at(const Partition& lambda, qlaurent::CoeffRing field,
                         const std::optional<mpq_class>& q0);
std::size_t matrix_rank_at(const PolyMatrix& m, qlaurent::CoeffRing field, const std::optional<mpq_class>& q0);

}  // namespace specht::gram
