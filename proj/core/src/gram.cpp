#include "specht/gram.hpp"

#include <map>
#include <stdexcept>

#include "specht/smith.hpp"

namespace specht::gram {

ModuleVector z_vector(const PermModule& m, const Partition& lambda) {
  ModuleVector v = m.apply_basis(m.generator(), coxeter::w_lambda(lambda));
  return m.apply_y(v, lambda.conjugate().parts());
}

ModuleVector specht_vector(const Partition& lambda, const Tableau& t) {
  if (!(t.shape() == lambda) || !t.is_standard()) {
    throw std::invalid_argument("specht_vector needs a standard tableau of shape " + lambda.to_string());
  }
  const PermModule m = PermModule::young(lambda.parts());
  return m.apply_basis(z_vector(m, lambda), tableaux::d_of_tableau(t.transpose()));
}

std::vector<ModuleVector> specht_vectors(const PermModule& m, const Partition& lambda,
                                         const std::vector<Tableau>& order) {
  std::map<Perm, ModuleVector> memo;
  const Perm id = Perm::identity(lambda.n());
  memo.emplace(id, z_vector(m, lambda));
  // v(w) = v(w r_i) T_i for the last letter i of the reduced word of w
  auto vector_for = [&](const Perm& w) -> const ModuleVector& {
    const auto word = coxeter::reduced_word(w);
    Perm prefix = id;
    const ModuleVector* cur = &memo.at(id);
    for (int i : word) {
      prefix = prefix.times_simple(i);
      auto it = memo.find(prefix);
      if (it == memo.end()) it = memo.emplace(prefix, m.apply_gen(*cur, i)).first;
      cur = &it->second;
    }
    return *cur;
  };
  std::vector<ModuleVector> out;
  out.reserve(order.size());
  for (const auto& t : order) out.push_back(vector_for(tableaux::d_of_tableau(t.transpose())));
  return out;
}

GramMatrix gram_matrix(const Partition& lambda) {
  GramMatrix g;
  g.lambda = lambda;
  g.kind = GramMatrix::Kind::Plain;
  g.order = tableaux::standard_tableaux(lambda);
  const PermModule m = PermModule::young(lambda.parts());
  const auto vs = specht_vectors(m, lambda, g.order);
  const std::size_t sz = vs.size();
  g.entries.assign(sz, std::vector<LaurentPoly>(sz));
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = i; j < sz; ++j) {
      g.entries[i][j] = m.form(vs[i], vs[j]);
      if (j != i) g.entries[j][i] = g.entries[i][j];
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> unitriangular_pivots(const std::vector<ModuleVector>& vectors) {
  const std::size_t count = vectors.size();
  if (count == 0) return std::vector<std::size_t>{};
  const std::size_t dim = vectors.front().dim();
  std::vector<std::size_t> pivot(count, dim);
  std::vector<bool> done(count, false);
  std::vector<bool> used(dim, false);
  std::size_t remaining = count;
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (std::size_t c = 0; c < dim; ++c) {
      if (used[c]) continue;
      std::size_t holder = count;
      int nonzero = 0;
      for (std::size_t v = 0; v < count; ++v) {
        if (done[v] || vectors[v][c].is_zero()) continue;
        ++nonzero;
        holder = v;
      }
      if (nonzero != 1 || !vectors[holder][c].is_unit()) continue;
      pivot[holder] = c;
      done[holder] = true;
      used[c] = true;
      --remaining;
      progress = true;
    }
  }
  if (remaining > 0) return std::nullopt;
  return pivot;
}

std::size_t matrix_rank_at(const PolyMatrix& m, qlaurent::CoeffRing field, const std::optional<mpq_class>& q0) {
  if (!field.is_field()) throw std::invalid_argument("rank needs field coefficients");
  if (q0) return scalar_rank(specialize_matrix(m, *q0, field), field);
  const auto eds = snf::smith_field_laurent(matrix_to_ring(m, field));
  std::size_t r = 0;
  for (const auto& d : eds.divisors) r += d.is_zero() ? 0 : 1;
  return r;
}

std::size_t gram_rank_at(const Partition& lambda, qlaurent::CoeffRing field, const std::optional<mpq_class>& q0) {
  return matrix_rank_at(gram_matrix(lambda).entries, field, q0);
}

}  // namespace specht::gram
