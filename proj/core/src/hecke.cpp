#include "specht/hecke.hpp"

#include <sstream>
#include <stdexcept>

namespace specht::hecke {

namespace {

LaurentPoly q_pow(LaurentPoly::Exponent e, CoeffRing ring) { return LaurentPoly::q_power(e, ring); }

// (-q)^e for any integer e.
LaurentPoly neg_q_pow(LaurentPoly::Exponent e, CoeffRing ring) {
  return LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, e, ring);
}

}  // namespace

HeckeElt HeckeElt::one(int n, CoeffRing ring) { return basis(Perm::identity(n), ring); }

HeckeElt HeckeElt::basis(const Perm& w, CoeffRing ring) {
  HeckeElt h(w.degree(), ring);
  h.terms_.emplace(w, LaurentPoly::constant(1, ring));
  return h;
}

HeckeElt HeckeElt::generator(int i, int n, CoeffRing ring) {
  return basis(Perm::simple_reflection(i, n), ring);
}

HeckeElt HeckeElt::word(const coxeter::Word& w, int n, CoeffRing ring) {
  HeckeElt h = one(n, ring);
  for (int i : w) h = h.times_generator(i);
  return h;
}

LaurentPoly HeckeElt::coeff(const Perm& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly(ring_) : it->second;
}

void HeckeElt::add_term(const Perm& w, const LaurentPoly& c) {
  if (w.degree() != n_) throw std::invalid_argument("degree mismatch in Hecke term");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElt::check_compatible(const HeckeElt& o) const {
  if (n_ != o.n_) throw std::invalid_argument("Hecke elements of different degree");
  if (!(ring_ == o.ring_)) throw std::invalid_argument("Hecke elements over different rings");
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  check_compatible(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) { return *this += -o; }

HeckeElt operator*(const LaurentPoly& c, const HeckeElt& h) {
  HeckeElt r(h.n_, h.ring_);
  if (c.is_zero()) return r;
  for (const auto& [w, a] : h.terms_) r.terms_.emplace(w, c * a);
  return r;
}

HeckeElt HeckeElt::times_generator(int i) const {
  if (i < 1 || i >= n_) throw std::out_of_range("generator index out of range");
  HeckeElt r(n_, ring_);
  const LaurentPoly q = q_pow(1, ring_);
  const LaurentPoly qm1 = q - LaurentPoly::constant(1, ring_);
  for (const auto& [w, c] : terms_) {
    const Perm wr = w.times_simple(i);
    if (!w.has_right_descent(i)) {
      r.add_term(wr, c);
    } else {
      r.add_term(wr, c.shifted(1));
      r.add_term(w, qm1 * c);
    }
  }
  return r;
}

HeckeElt HeckeElt::times_basis(const Perm& w) const {
  HeckeElt r = *this;
  for (int i : coxeter::reduced_word(w)) r = r.times_generator(i);
  return r;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  a.check_compatible(b);
  HeckeElt r(a.n_, a.ring_);
  for (const auto& [w, c] : b.terms_) r += c * a.times_basis(w);
  return r;
}

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    os << (first ? "" : " + ") << "(" << c.to_string() << ")T" << w.to_string();
    first = false;
  }
  return os.str();
}

HeckeElt star(const HeckeElt& h) {
  HeckeElt r(h.n(), h.ring());
  for (const auto& [w, c] : h.terms()) r.add_term(w.inverse(), c);
  return r;
}

HeckeElt hash(const HeckeElt& h) {
  const int n = h.n();
  const CoeffRing ring = h.ring();
  HeckeElt r(n, ring);
  for (const auto& [w, c] : h.terms()) {
    HeckeElt img = HeckeElt::one(n, ring);
    for (int i : coxeter::reduced_word(w)) {
      // img * ((q - 1) - T_i)
      HeckeElt t = img.times_generator(i);
      img = (q_pow(1, ring) - LaurentPoly::constant(1, ring)) * img - t;
    }
    r += c * img;
  }
  return r;
}

HeckeElt invert_basis_element(const Perm& w, CoeffRing ring) {
  const int n = w.degree();
  const auto word = coxeter::reduced_word(w);
  const LaurentPoly qinv = q_pow(-1, ring);
  const LaurentPoly c0 = qinv - LaurentPoly::constant(1, ring);
  HeckeElt r = HeckeElt::one(n, ring);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    r = qinv * r.times_generator(*it) + c0 * r;
  }
  return r;
}

HeckeElt x_mu(const Composition& mu, CoeffRing ring) {
  HeckeElt r(coxeter::composition_size(mu), ring);
  for (const auto& w : coxeter::young_subgroup(mu)) r.add_term(w, LaurentPoly::constant(1, ring));
  return r;
}

HeckeElt y_mu(const Composition& mu, CoeffRing ring) {
  HeckeElt r(coxeter::composition_size(mu), ring);
  for (const auto& w : coxeter::young_subgroup(mu)) r.add_term(w, neg_q_pow(-w.length(), ring));
  return r;
}

HeckeElt z_lambda(const tableaux::Partition& lambda, CoeffRing ring) {
  const Composition mu = lambda.parts();
  const Composition conj = lambda.conjugate().parts();
  return x_mu(mu, ring).times_basis(coxeter::w_lambda(lambda)) * y_mu(conj, ring);
}

HeckeElt t_ij(int i, int j, int n, CoeffRing ring) {
  return HeckeElt::basis(coxeter::r_ij(i, j, n), ring);
}

HeckeElt y_prime(int k, int n, CoeffRing ring) {
  if (k < 0 || k >= n) throw std::invalid_argument("y' needs 0 <= k < n");
  HeckeElt r = HeckeElt::one(n, ring);
  for (int j = 1; j <= k; ++j) r += neg_q_pow(j - k - 1, ring) * t_ij(k, j, n, ring);
  return r;
}

HeckeElt x_tail(int k, int n, CoeffRing ring) {
  if (k < 0 || k >= n) throw std::invalid_argument("x_{n-k} needs 0 <= k < n");
  HeckeElt r(n, ring);
  for (int j = 0; j <= n - k - 1; ++j) r += t_ij(1, j, n, ring);
  return r;
}

HeckeElt x_pair(int k, int n, CoeffRing ring) {
  if (k < 0 || k > n) throw std::invalid_argument("x_{(k|n-k)} needs 0 <= k <= n");
  Composition sign_part{k};
  Composition triv_part;
  for (int i = 0; i < k; ++i) triv_part.push_back(1);
  for (int i = 0; i < n - k; ++i) sign_part.push_back(1);
  triv_part.push_back(n - k);
  return y_mu(sign_part, ring) * x_mu(triv_part, ring);
}

}  // namespace specht::hecke
