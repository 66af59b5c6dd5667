#pragma once

// Dense matrices of Laurent polynomials and their scalar specializations.

#include <vector>

#include <gmpxx.h>

#include "specht/qlaurent.hpp"

namespace specht {

using PolyMatrix = std::vector<std::vector<qlaurent::LaurentPoly>>;
using ScalarMatrix = std::vector<std::vector<mpq_class>>;

PolyMatrix matrix_to_ring(const PolyMatrix& m, qlaurent::CoeffRing ring);
PolyMatrix matrix_multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix matrix_transpose(const PolyMatrix& m);
PolyMatrix diagonal_matrix(const std::vector<qlaurent::LaurentPoly>& diag, qlaurent::CoeffRing ring);
bool is_symmetric(const PolyMatrix& m);

// Entrywise evaluation at q = q0, reduced into the field when it is F_p.
ScalarMatrix specialize_matrix(const PolyMatrix& m, const mpq_class& q0, qlaurent::CoeffRing field);
// Entrywise q -> 1 over Z; throws if an entry is not integral.
std::vector<std::vector<mpz_class>> specialize_at_one(const PolyMatrix& m);
// Rank by Gaussian elimination over Q or F_p.
std::size_t scalar_rank(ScalarMatrix m, qlaurent::CoeffRing field);

// Fraction-free (Bareiss) determinant of a square matrix. Over Z the exact
// divisions stay inside Z[q, q^-1].
qlaurent::LaurentPoly determinant(const PolyMatrix& m);

}  // namespace specht
