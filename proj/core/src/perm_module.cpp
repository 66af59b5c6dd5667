#include "specht/perm_module.hpp"

#include <stdexcept>

namespace specht::gram {

std::size_t ModuleVector::support_size() const {
  std::size_t s = 0;
  for (const auto& c : coords_) s += c.is_zero() ? 0 : 1;
  return s;
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("module vectors of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] += o.coords_[i];
  }
  return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& o) {
  if (o.dim() != dim()) throw std::invalid_argument("module vectors of different dimension");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!o.coords_[i].is_zero()) coords_[i] -= o.coords_[i];
  }
  return *this;
}

ModuleVector ModuleVector::scaled(const LaurentPoly& c) const {
  ModuleVector r(dim(), ring_);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) r.coords_[i] = coords_[i] * c;
  }
  return r;
}

// ---------------------------------------------------------------------------

PermModule::PermModule(Composition mu, bool is_signed, CoeffRing ring)
    : n_(coxeter::composition_size(mu)), mu_(std::move(mu)), signed_(is_signed), ring_(ring) {
  basis_ = coxeter::distinguished_reps(mu_);
  lengths_.reserve(basis_.size());
  for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
    lengths_.push_back(basis_[idx].length());
    index_.emplace(basis_[idx], idx);
  }
  std::vector<int> block(static_cast<std::size_t>(n_));
  {
    int pos = 0;
    for (std::size_t b = 0; b < mu_.size(); ++b) {
      for (int j = 0; j < mu_[b]; ++j) block[static_cast<std::size_t>(pos++)] = static_cast<int>(b);
    }
  }
  const int gens = std::max(n_ - 1, 0);
  actions_.resize(basis_.size() * static_cast<std::size_t>(gens));
  for (std::size_t idx = 0; idx < basis_.size(); ++idx) {
    const Perm& d = basis_[idx];
    const Perm dinv = d.inverse();
    for (int i = 1; i < n_; ++i) {
      Action& a = actions_[idx * static_cast<std::size_t>(gens) + static_cast<std::size_t>(i - 1)];
      const Perm dr = d.times_simple(i);
      if (d.has_right_descent(i)) {
        a = {Step::Down, static_cast<std::uint32_t>(index_.at(dr))};
      } else if (auto it = index_.find(dr); it != index_.end()) {
        a = {Step::Up, static_cast<std::uint32_t>(it->second)};
      } else {
        // values i, i+1 sit in adjacent positions of one block
        const int b = block[static_cast<std::size_t>(dinv(i) - 1)];
        a = {signed_ && b == 0 ? Step::Negate : Step::ScaleQ, static_cast<std::uint32_t>(idx)};
      }
    }
  }
}

PermModule PermModule::young(const Composition& mu, CoeffRing ring) { return PermModule(mu, false, ring); }

PermModule PermModule::signed_pair(int k, int n, CoeffRing ring) {
  if (k < 0 || k > n) throw std::invalid_argument("M(k|n-k) needs 0 <= k <= n");
  return PermModule({k, n - k}, true, ring);
}

std::size_t PermModule::index_of(const Perm& d) const {
  auto it = index_.find(d);
  if (it == index_.end()) throw std::out_of_range("not a distinguished coset representative: " + d.to_string());
  return it->second;
}

std::size_t PermModule::index_of(const tableaux::PairTableau& ab) const {
  if (!signed_ || ab.k() != mu_[0] || ab.n() != n_) throw std::invalid_argument("pair tableau does not index this module");
  return index_of(tableaux::d_of_pair(ab));
}

ModuleVector PermModule::basis_vector(std::size_t index) const {
  ModuleVector v = zero();
  v[index] = LaurentPoly::constant(1, ring_);
  return v;
}

ModuleVector PermModule::apply_gen(const ModuleVector& v, int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("generator index out of range");
  if (v.dim() != dim()) throw std::invalid_argument("vector does not belong to this module");
  const auto gens = static_cast<std::size_t>(n_ - 1);
  ModuleVector r = zero();
  for (std::size_t idx = 0; idx < v.dim(); ++idx) {
    const LaurentPoly& c = v[idx];
    if (c.is_zero()) continue;
    const Action a = actions_[idx * gens + static_cast<std::size_t>(i - 1)];
    switch (a.step) {
      case Step::ScaleQ:
        r[idx] += c.shifted(1);
        break;
      case Step::Negate:
        r[idx] -= c;
        break;
      case Step::Up:
        r[a.target] += c;
        break;
      case Step::Down:
        r[a.target] += c.shifted(1);
        r[idx] += c.shifted(1);
        r[idx] -= c;
        break;
    }
  }
  return r;
}

ModuleVector PermModule::apply_word(const ModuleVector& v, const coxeter::Word& word) const {
  ModuleVector r = v;
  for (int i : word) r = apply_gen(r, i);
  return r;
}

ModuleVector PermModule::apply_basis(const ModuleVector& v, const Perm& w) const {
  return apply_word(v, coxeter::reduced_word(w));
}

ModuleVector PermModule::apply(const ModuleVector& v, const hecke::HeckeElt& h) const {
  ModuleVector r = zero();
  for (const auto& [w, c] : h.terms()) r += apply_basis(v, w).scaled(c.to_ring(ring_));
  return r;
}

ModuleVector PermModule::apply_coset_factors(const ModuleVector& v, const Composition& nu, bool sign) const {
  if (coxeter::composition_size(nu) != n_) throw std::invalid_argument("composition does not match module degree");
  const LaurentPoly step = sign ? LaurentPoly::monomial(-1, -1, ring_) : LaurentPoly::constant(1, ring_);
  ModuleVector r = v;
  int start = 0;
  for (int m : nu) {
    for (int j = 1; j < m; ++j) {
      // r * (1 + c T_{s+j} + c^2 T_{s+j} T_{s+j-1} + ... ), c = 1 or (-q)^{-1}
      ModuleVector acc = r;
      ModuleVector u = r;
      for (int g = start + j; g > start; --g) {
        u = apply_gen(u, g).scaled(step);
        acc += u;
      }
      r = std::move(acc);
    }
    start += m;
  }
  return r;
}

ModuleVector PermModule::apply_x(const ModuleVector& v, const Composition& nu) const {
  return apply_coset_factors(v, nu, false);
}

ModuleVector PermModule::apply_y(const ModuleVector& v, const Composition& nu) const {
  return apply_coset_factors(v, nu, true);
}

LaurentPoly PermModule::form(const ModuleVector& u, const ModuleVector& v) const {
  if (u.dim() != dim() || v.dim() != dim()) throw std::invalid_argument("vectors do not belong to this module");
  LaurentPoly r(ring_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero() || v[i].is_zero()) continue;
    r.add_product(u[i], v[i], lengths_[i]);
  }
  return r;
}

}  // namespace specht::gram
