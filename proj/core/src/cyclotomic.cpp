#include <map>
#include <mutex>
#include <stdexcept>

#include "specht/qlaurent.hpp"
#include "specht/tableaux.hpp"

namespace specht::qlaurent {

LaurentPoly cyclotomic(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("cyclotomic needs m >= 1");
  static std::mutex mu;
  static std::map<std::int64_t, LaurentPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  // q^m - 1 = prod_{d | m} Phi_d
  LaurentPoly r = LaurentPoly::from_terms({{m, 1}, {0, -1}});
  for (std::int64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto quot = r.exact_divide(cyclotomic(d));
    if (!quot) throw std::logic_error("cyclotomic recurrence failed");
    r = std::move(*quot);
  }
  std::lock_guard lock(mu);
  cache.emplace(m, r);
  return r;
}

LaurentPoly hook_polynomial(const tableaux::Partition& lambda, CoeffRing ring) {
  LaurentPoly r = LaurentPoly::constant(1, ring);
  for (const auto& row : tableaux::hook_lengths(lambda)) {
    for (int h : row) r *= quantum_integer(h, ring);
  }
  return r;
}

LaurentPoly CycloDisplay::reassemble() const {
  const CoeffRing ring = remainder.ring();
  LaurentPoly r = LaurentPoly::monomial(unit, unit_exp, ring);
  for (const auto& f : factors) {
    LaurentPoly phi = cyclotomic(f.m).to_ring(ring);
    r *= phi.pow(static_cast<unsigned>(f.exponent));
  }
  return r * remainder;
}

std::string CycloDisplay::factor_string() const {
  std::string s;
  for (const auto& f : factors) {
    s += "Φ" + std::to_string(f.m);
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  if (!remainder.is_one()) s += "(" + remainder.to_string() + ")";
  return s.empty() ? "1" : s;
}

CycloDisplay cyclo_display(const LaurentPoly& f, std::int64_t max_m) {
  if (f.is_zero()) throw std::invalid_argument("cyclo_display of the zero polynomial");
  const CoeffRing ring = f.ring();
  CycloDisplay out;
  out.unit_exp = f.low();
  LaurentPoly g = f.shifted(-f.low());

  auto strip = [&](std::int64_t m) {
    const LaurentPoly phi = cyclotomic(m).to_ring(ring);
    int e = 0;
    while (g.span() >= phi.span()) {
      auto quot = g.exact_divide(phi);
      if (!quot) break;
      g = std::move(*quot);
      ++e;
    }
    if (e > 0) out.factors.push_back({m, e});
  };
  // Phi_1 last: over F_2 it coincides with Phi_2, which is the name we report.
  for (std::int64_t m = 2; m <= max_m; ++m) strip(m);
  if (max_m >= 1) strip(1);

  const mpq_class lc = g.leading_coeff();
  if (ring.is_field()) {
    out.unit = lc;
    g = canonical(g);
  } else {
    out.unit = lc < 0 ? -1 : 1;
    if (lc < 0) g = -g;
  }
  out.remainder = std::move(g);
  return out;
}

}  // namespace specht::qlaurent
