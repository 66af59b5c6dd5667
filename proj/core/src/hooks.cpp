#include "specht/hooks.hpp"

#include <stdexcept>

#include "specht/hecke.hpp"

namespace specht::gram {

namespace {

int require_hook(const Partition& lambda) {
  if (!lambda.is_hook()) throw std::invalid_argument(lambda.to_string() + " is not a hook");
  return lambda.hook_leg();
}

std::size_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

PermModule hook_module(const Partition& lambda, CoeffRing ring) {
  return PermModule::signed_pair(require_hook(lambda), lambda.n(), ring);
}

ModuleVector v_prime_closed(const PermModule& m, const Tableau& t) {
  const int k = require_hook(t.shape());
  if (!m.is_signed() || m.n() != t.n()) throw std::invalid_argument("v_prime needs the matching signed module");
  if (!t.is_standard()) throw std::invalid_argument("closed form of v' needs a standard tableau");
  const int len_t = coxeter::Perm(tableaux::d_of_tableau(t.transpose())).length();
  ModuleVector v = m.zero();
  const auto col = t.first_column();
  // (a|b) precedes t exactly when a is col with one entry removed
  for (std::size_t skip = 0; skip < col.size(); ++skip) {
    std::vector<int> a;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (i != skip) a.push_back(col[i]);
    }
    const auto ab = tableaux::pair_from_subset(std::move(a), t.n());
    const auto prec = tableaux::precedes_and_index(ab, t);
    if (!prec) throw std::logic_error("pair built from the first column does not precede the tableau");
    const int sign = ((k + 1 - prec->index) % 2 == 0) ? 1 : -1;
    v[m.index_of(ab)] += LaurentPoly::monomial(sign, len_t - tableaux::pair_length(ab), m.ring());
  }
  return v;
}

ModuleVector v_prime_recursive(const PermModule& m, const Tableau& t) {
  const int k = require_hook(t.shape());
  if (!m.is_signed() || m.n() != t.n()) throw std::invalid_argument("v_prime needs the matching signed module");
  const ModuleVector base = m.apply(m.generator(), hecke::y_prime(k, t.n(), m.ring()));
  return m.apply_basis(base, tableaux::d_of_tableau(t.transpose()));
}

ModuleVector w_prime(const PermModule& m, const Tableau& t) {
  const int k = require_hook(t.shape());
  const int n = t.n();
  if (t.row_of(n) == 1) return v_prime_recursive(m, tableaux::t_star(t));
  const ModuleVector top = v_prime_recursive(m, Tableau::initial(t.shape()));
  const ModuleVector tail = m.apply(top, hecke::x_tail(k, n, m.ring()));
  return m.apply_basis(tail, tableaux::d_of_tableau(t));
}

std::vector<ModuleVector> v_primes(const PermModule& m, const std::vector<Tableau>& order) {
  std::vector<ModuleVector> out;
  out.reserve(order.size());
  for (const auto& t : order) out.push_back(v_prime_recursive(m, t));
  return out;
}

std::vector<ModuleVector> w_primes(const PermModule& m, const std::vector<Tableau>& order) {
  std::vector<ModuleVector> out;
  out.reserve(order.size());
  for (const auto& t : order) out.push_back(w_prime(m, t));
  return out;
}

PolyMatrix gram_prime(const Partition& lambda) {
  const PermModule m = hook_module(lambda);
  const auto vs = v_primes(m, tableaux::standard_tableaux(lambda));
  PolyMatrix g(vs.size(), std::vector<LaurentPoly>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      g[i][j] = m.form(vs[i], vs[j]);
      if (i != j) g[j][i] = g[i][j];
    }
  }
  return g;
}

GramMatrix mixed_gram(const Partition& lambda) {
  GramMatrix g;
  g.lambda = lambda;
  g.kind = GramMatrix::Kind::Mixed;
  g.order = tableaux::standard_tableaux(lambda);
  const PermModule m = hook_module(lambda);
  const auto ws = w_primes(m, g.order);
  const auto vs = v_primes(m, g.order);
  g.entries.assign(ws.size(), std::vector<LaurentPoly>(vs.size()));
  for (std::size_t i = 0; i < ws.size(); ++i) {
    for (std::size_t j = 0; j < vs.size(); ++j) g.entries[i][j] = m.form(ws[i], vs[j]);
  }
  return g;
}

ScalingConstant pi_scaling_check(const Partition& lambda) {
  const int k = require_hook(lambda);
  const PolyMatrix g = gram_matrix(lambda).entries;
  const PolyMatrix gp = gram_prime(lambda);
  std::optional<LaurentPoly> c;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (gp[i][j].is_zero()) {
        if (!g[i][j].is_zero()) throw std::logic_error("G is not a multiple of G' at a zero entry");
        continue;
      }
      if (!c) {
        auto quot = g[i][j].exact_divide(gp[i][j]);
        if (!quot) throw std::logic_error("G entry is not divisible by the G' entry");
        c = *quot;
      } else if (!(*c * gp[i][j] == g[i][j])) {
        throw std::logic_error("G is not proportional to G'");
      }
    }
  }
  if (!c) throw std::logic_error("G' vanishes");
  ScalingConstant s;
  s.c = *c;
  auto unit = c->exact_divide(qlaurent::quantum_factorial(k));
  if (!unit || !unit->is_unit()) throw std::logic_error("scaling constant is not a unit times [k]!: " + c->to_string());
  s.exponent = unit->low();
  s.sign = unit->leading_coeff() > 0 ? 1 : -1;
  return s;
}

snf::EDList hook_elementary_divisors(int n, int k, CoeffRing ring) {
  if (k < 0 || k >= n) throw std::invalid_argument("hook_elementary_divisors needs 0 <= k < n");
  snf::EDList e;
  e.ring = ring;
  const std::size_t low = n == 1 ? 1 : binomial(n - 2, k);
  const std::size_t high = n == 1 ? 0 : binomial(n - 2, k - 1);
  LaurentPoly a, b;
  if (ring.kind() == CoeffRing::Kind::Integer) {
    const mpq_class f = qlaurent::specialize_at_one(qlaurent::quantum_factorial(k));
    a = LaurentPoly::constant(f, ring);
    b = LaurentPoly::constant(f * n, ring);
  } else {
    a = qlaurent::quantum_factorial(k).to_ring(ring);
    b = a * qlaurent::quantum_integer(n).to_ring(ring);
  }
  std::vector<LaurentPoly> diag(low, a);
  diag.insert(diag.end(), high, b);
  return snf::normalize_diagonal(std::move(diag), ring);
}

std::size_t hook_simple_dimension(int n, int k) { return n == 1 ? 1 : binomial(n - 2, k); }

}  // namespace specht::gram
