#include "specht/edlist.hpp"

#include <regex>
#include <stdexcept>

namespace specht::snf {

namespace {

bool is_integer_list(const CoeffRing& ring) { return ring.kind() == CoeffRing::Kind::Integer; }

mpz_class as_integer(const LaurentPoly& f) {
  if (f.is_zero()) return 0;
  if (!f.is_monomial() || f.low() != 0) throw std::invalid_argument("integer divisor expected, got " + f.to_string());
  return f.leading_coeff().get_num();
}

LaurentPoly gcd_of(const LaurentPoly& a, const LaurentPoly& b, const CoeffRing& ring) {
  if (is_integer_list(ring)) {
    mpz_class g;
    const mpz_class x = as_integer(a), y = as_integer(b);
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return LaurentPoly::constant(g, ring);
  }
  return qlaurent::gcd(a, b);
}

LaurentPoly canonical_of(const LaurentPoly& f, const CoeffRing& ring) {
  if (is_integer_list(ring)) return LaurentPoly::constant(abs(as_integer(f)), ring);
  return qlaurent::canonical(f);
}

}  // namespace

std::size_t EDList::rank() const {
  std::size_t r = 0;
  for (const auto& d : divisors) r += d.is_zero() ? 0 : 1;
  return r;
}

bool EDList::chain_holds() const {
  for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
    if (divisors[i].is_zero()) {
      if (!divisors[i + 1].is_zero()) return false;
      continue;
    }
    if (divisors[i + 1].is_zero()) continue;
    if (is_integer_list(ring)) {
      if (as_integer(divisors[i + 1]) % as_integer(divisors[i]) != 0) return false;
    } else if (!divisors[i].divides(divisors[i + 1])) {
      return false;
    }
  }
  return true;
}

bool same_up_to_units(const EDList& a, const EDList& b) {
  if (a.size() != b.size()) return false;
  const bool same_ring = a.ring == b.ring;
  if (!same_ring && (a.ring.kind() == CoeffRing::Kind::PrimeField || b.ring.kind() == CoeffRing::Kind::PrimeField)) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    LaurentPoly x = a.divisors[i], y = b.divisors[i];
    if (!same_ring) {
      x = x.to_ring(CoeffRing::rationals());
      y = y.to_ring(CoeffRing::rationals());
    }
    if (x.is_zero() || y.is_zero()) {
      if (!(x.is_zero() && y.is_zero())) return false;
      continue;
    }
    if (!qlaurent::associates(x, y)) return false;
  }
  return true;
}

EDList normalize_diagonal(std::vector<LaurentPoly> diag, CoeffRing ring) {
  std::vector<LaurentPoly> nonzero;
  std::size_t zeros = 0;
  for (auto& d : diag) {
    if (d.is_zero()) {
      ++zeros;
    } else {
      nonzero.push_back(canonical_of(d.to_ring(ring), ring));
    }
  }
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (nonzero[i].is_one()) break;
      const LaurentPoly g = gcd_of(nonzero[i], nonzero[j], ring);
      if (g == nonzero[i]) continue;
      auto l = (nonzero[i] * nonzero[j]).exact_divide(g);
      if (!l) throw std::logic_error("lcm division failed");
      nonzero[i] = g;
      nonzero[j] = canonical_of(*l, ring);
    }
  }
  EDList e;
  e.ring = ring;
  e.divisors = std::move(nonzero);
  e.divisors.insert(e.divisors.end(), zeros, LaurentPoly(ring));
  return e;
}

JumpNotation jump_format(const EDList& e) {
  JumpNotation j;
  j.ring = e.ring;
  LaurentPoly prev = LaurentPoly::constant(1, e.ring);
  for (const auto& d : e.divisors) {
    if (d.is_zero()) throw std::invalid_argument("jump notation needs nonzero divisors");
    auto quot = d.exact_divide(prev);
    if (!quot) throw std::domain_error("divisibility chain violated at " + d.to_string());
    LaurentPoly f = canonical_of(*quot, e.ring);
    if (!j.steps.empty() && f.is_one()) {
      ++j.steps.back().multiplicity;
    } else {
      j.steps.push_back({std::move(f), 1});
    }
    prev = d;
  }
  return j;
}

EDList expand(const JumpNotation& j) {
  EDList e;
  e.ring = j.ring;
  LaurentPoly cur = LaurentPoly::constant(1, j.ring);
  for (const auto& s : j.steps) {
    cur = canonical_of(cur * s.factor, j.ring);
    for (std::size_t k = 0; k < s.multiplicity; ++k) e.divisors.push_back(cur);
  }
  return e;
}

std::string integer_factor_string(const mpz_class& v) {
  if (v <= 0) throw std::invalid_argument("integer_factor_string needs a positive integer");
  if (v == 1) return "1";
  std::string s;
  mpz_class rest = v;
  auto emit = [&](const mpz_class& prime, int e) {
    if (!s.empty()) s += "·";
    s += prime.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  };
  for (mpz_class d = 2; d * d <= rest; ++d) {
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e) emit(d, e);
  }
  if (rest > 1) emit(rest, 1);
  return s;
}

std::string factor_label(const LaurentPoly& f, std::int64_t max_m) {
  if (is_integer_list(f.ring())) return integer_factor_string(as_integer(f));
  const auto disp = qlaurent::cyclo_display(f, max_m);
  return disp.factor_string();
}

std::string render(const JumpNotation& j, std::int64_t max_m) {
  std::string s;
  for (const auto& step : j.steps) {
    if (!s.empty()) s += " ";
    s += "-[" + factor_label(step.factor, max_m) + "]-> " + std::to_string(step.multiplicity);
  }
  return s;
}

std::vector<std::pair<std::string, std::size_t>> parse_rendered(const std::string& text) {
  static const std::regex step(R"(-\[([^\]]*)\]->\s*([0-9]+))");
  std::vector<std::pair<std::string, std::size_t>> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), step); it != std::sregex_iterator(); ++it) {
    out.emplace_back((*it)[1].str(), static_cast<std::size_t>(std::stoull((*it)[2].str())));
  }
  return out;
}

}  // namespace specht::snf
