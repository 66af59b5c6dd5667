#include "specht/qlaurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace specht::qlaurent {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CoeffRing CoeffRing::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw std::invalid_argument("prime field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return CoeffRing(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

CoeffRing CoeffRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:") || text.starts_with("F:")) {
    auto digits = text.substr(text.find(':') + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
      throw std::invalid_argument("bad prime in ring spec '" + std::string(text) + "'");
    }
    return prime_field(std::stoull(std::string(digits)));
  }
  throw std::invalid_argument("unknown coefficient ring '" + std::string(text) + "'");
}

std::string CoeffRing::to_string() const {
  switch (kind_) {
    case Kind::Integer:
      return "Z";
    case Kind::Rational:
      return "Q";
    case Kind::PrimeField:
      return "Fp:" + std::to_string(p_);
  }
  return "?";
}

// ---------------------------------------------------------------------------

LaurentPoly LaurentPoly::constant(const mpq_class& c, CoeffRing ring) {
  return monomial(c, 0, ring);
}

LaurentPoly LaurentPoly::monomial(const mpq_class& c, Exponent e, CoeffRing ring) {
  return from_terms({{e, c}}, ring);
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<Exponent, mpq_class>>& terms,
                                    CoeffRing ring) {
  LaurentPoly r(ring);
  if (terms.empty()) return r;
  Exponent lo = terms.front().first, hi = lo;
  mpz_class den = 1;
  for (const auto& [e, c] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  if (ring.kind() == CoeffRing::Kind::Integer && den != 1) {
    throw std::invalid_argument("non-integral coefficient for a polynomial over Z");
  }
  r.low_ = lo;
  r.num_.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : terms) {
    mpz_class scaled = c.get_num() * (den / c.get_den());
    if (ring.kind() == CoeffRing::Kind::PrimeField) {
      mpz_class d = c.get_den() % ring.characteristic();
      if (d == 0) throw std::invalid_argument("denominator vanishes in prime field");
      mpz_class inv;
      mpz_class p = ring.characteristic();
      mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), p.get_mpz_t());
      scaled = c.get_num() * inv;
    }
    r.num_[static_cast<std::size_t>(e - lo)] += scaled;
  }
  r.den_ = ring.kind() == CoeffRing::Kind::Rational ? den : mpz_class(1);
  r.reduce_mod_p();
  r.trim();
  r.normalize_denominator();
  return r;
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < num_.size() && num_[front] == 0) ++front;
  if (front == num_.size()) {
    num_.clear();
    low_ = 0;
    den_ = 1;
    return;
  }
  std::size_t back = num_.size();
  while (num_[back - 1] == 0) --back;
  if (front > 0 || back < num_.size()) {
    num_.erase(num_.begin() + static_cast<std::ptrdiff_t>(back), num_.end());
    num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(front));
    low_ += static_cast<Exponent>(front);
  }
}

void LaurentPoly::normalize_denominator() {
  if (den_ == 1) return;
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void LaurentPoly::reduce_mod_p() {
  if (ring_.kind() != CoeffRing::Kind::PrimeField) return;
  const unsigned long p = ring_.characteristic();
  for (auto& c : num_) mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), p);
}

void LaurentPoly::assert_same_ring(const LaurentPoly& o) const {
  if (!(ring_ == o.ring_)) {
    throw std::invalid_argument("coefficient ring mismatch: " + ring_.to_string() + " vs " +
                                o.ring_.to_string());
  }
}

bool LaurentPoly::is_one() const {
  return num_.size() == 1 && low_ == 0 && num_[0] == 1 && den_ == 1;
}

bool LaurentPoly::is_monomial() const { return num_.size() == 1; }

bool LaurentPoly::is_unit() const {
  if (num_.size() != 1) return false;
  if (ring_.is_field()) return true;
  return abs(num_[0]) == 1;
}

mpq_class LaurentPoly::coeff(Exponent e) const {
  if (num_.empty() || e < low_ || e > high()) return 0;
  mpq_class r(num_[static_cast<std::size_t>(e - low_)], den_);
  r.canonicalize();
  return r;
}

mpq_class LaurentPoly::leading_coeff() const { return num_.empty() ? mpq_class(0) : coeff(high()); }
mpq_class LaurentPoly::trailing_coeff() const { return num_.empty() ? mpq_class(0) : coeff(low_); }

std::vector<std::pair<LaurentPoly::Exponent, mpq_class>> LaurentPoly::terms() const {
  std::vector<std::pair<Exponent, mpq_class>> out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    mpq_class c(num_[i], den_);
    c.canonicalize();
    out.emplace_back(low_ + static_cast<Exponent>(i), c);
  }
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(num_.begin(), num_.end(), [](const mpz_class& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.num_) c = -c;
  r.reduce_mod_p();
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  assert_same_ring(o);
  if (o.num_.empty()) return *this;
  if (num_.empty()) return *this = o;
  const Exponent lo = std::min(low_, o.low_);
  const Exponent hi = std::max(high(), o.high());
  if (den_ == o.den_) {
    if (lo < low_) {
      num_.insert(num_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
      low_ = lo;
    }
    if (static_cast<Exponent>(num_.size()) < hi - lo + 1) num_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < o.num_.size(); ++i) {
      num_[static_cast<std::size_t>(o.low_ - lo) + i] += o.num_[i];
    }
  } else {
    std::vector<mpz_class> res(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < num_.size(); ++i) {
      mpz_mul(res[static_cast<std::size_t>(low_ - lo) + i].get_mpz_t(), num_[i].get_mpz_t(),
              o.den_.get_mpz_t());
    }
    for (std::size_t i = 0; i < o.num_.size(); ++i) {
      mpz_addmul(res[static_cast<std::size_t>(o.low_ - lo) + i].get_mpz_t(), o.num_[i].get_mpz_t(),
                 den_.get_mpz_t());
    }
    num_ = std::move(res);
    low_ = lo;
    den_ *= o.den_;
  }
  reduce_mod_p();
  trim();
  normalize_denominator();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.assert_same_ring(b);
  LaurentPoly r(a.ring_);
  if (a.num_.empty() || b.num_.empty()) return r;
  r.low_ = a.low_ + b.low_;
  r.num_.assign(a.num_.size() + b.num_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      mpz_addmul(r.num_[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  r.den_ = a.den_ * b.den_;
  r.reduce_mod_p();
  r.trim();
  r.normalize_denominator();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.ring_ == b.ring_ && a.low_ == b.low_ && a.den_ == b.den_ && a.num_ == b.num_;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly r = *this;
  if (!r.num_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  return *this * LaurentPoly::constant(c, ring_);
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(1, ring_);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b, Exponent shift) {
  assert_same_ring(a);
  assert_same_ring(b);
  if (a.num_.empty() || b.num_.empty()) return;
  if (den_ != 1 || a.den_ != 1 || b.den_ != 1) {
    *this += (a * b).shifted(shift);
    return;
  }
  const Exponent plo = a.low_ + b.low_ + shift;
  const Exponent phi = plo + static_cast<Exponent>(a.num_.size() + b.num_.size()) - 2;
  if (num_.empty()) {
    low_ = plo;
    num_.assign(static_cast<std::size_t>(phi - plo + 1), mpz_class(0));
  } else {
    if (plo < low_) {
      num_.insert(num_.begin(), static_cast<std::size_t>(low_ - plo), mpz_class(0));
      low_ = plo;
    }
    if (high() < phi) num_.resize(static_cast<std::size_t>(phi - low_ + 1));
  }
  const auto base = static_cast<std::size_t>(plo - low_);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      mpz_addmul(num_[base + i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  reduce_mod_p();
  trim();
}

std::pair<LaurentPoly, LaurentPoly> LaurentPoly::divmod(const LaurentPoly& d) const {
  assert_same_ring(d);
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  LaurentPoly quot(ring_);
  if (is_zero()) return {quot, LaurentPoly(ring_)};

  const bool fp = ring_.kind() == CoeffRing::Kind::PrimeField;
  if (ring_.kind() == CoeffRing::Kind::Integer && abs(d.num_.back()) != 1) {
    throw std::domain_error("divmod over Z needs a divisor with leading coefficient +-1");
  }
  // Numerators only; the denominators factor out of the quotient as den_d/den_a
  // and out of the remainder as 1/den_a.
  std::vector<mpz_class> rem = num_;
  const std::vector<mpz_class>& dv = d.num_;
  const std::size_t dn = dv.size();
  if (rem.size() < dn) return {quot, *this};

  std::vector<mpz_class> qv(rem.size() - dn + 1);
  std::vector<mpq_class> qq;  // rational quotient (Q only)
  const mpz_class p = ring_.characteristic();
  mpz_class lc_inv;
  if (fp) mpz_invert(lc_inv.get_mpz_t(), dv.back().get_mpz_t(), p.get_mpz_t());

  if (ring_.kind() == CoeffRing::Kind::Rational) {
    std::vector<mpq_class> r(rem.begin(), rem.end());
    qq.assign(qv.size(), 0);
    for (std::size_t i = r.size(); i-- >= dn;) {
      if (r[i] == 0) continue;
      mpq_class c = r[i] / mpq_class(dv.back());
      qq[i - (dn - 1)] = c;
      for (std::size_t j = 0; j < dn; ++j) r[i - (dn - 1) + j] -= c * dv[j];
    }
    std::vector<std::pair<Exponent, mpq_class>> qt, rt;
    for (std::size_t i = 0; i < qq.size(); ++i) {
      if (qq[i] != 0) qt.emplace_back(low_ - d.low_ + static_cast<Exponent>(i), qq[i] * d.den_ / den_);
    }
    for (std::size_t i = 0; i + 1 < dn && i < r.size(); ++i) {
      if (r[i] != 0) rt.emplace_back(low_ + static_cast<Exponent>(i), r[i] / den_);
    }
    return {from_terms(qt, ring_), from_terms(rt, ring_)};
  }

  for (std::size_t i = rem.size(); i-- >= dn;) {
    if (rem[i] == 0) continue;
    mpz_class c = fp ? mpz_class((rem[i] * lc_inv) % p) : mpz_class(rem[i] * dv.back());
    qv[i - (dn - 1)] = c;
    for (std::size_t j = 0; j < dn; ++j) {
      mpz_submul(rem[i - (dn - 1) + j].get_mpz_t(), c.get_mpz_t(), dv[j].get_mpz_t());
      if (fp) mpz_fdiv_r(rem[i - (dn - 1) + j].get_mpz_t(), rem[i - (dn - 1) + j].get_mpz_t(),
                         p.get_mpz_t());
    }
  }
  quot.low_ = low_ - d.low_;
  quot.num_ = std::move(qv);
  quot.reduce_mod_p();
  quot.trim();
  LaurentPoly r(ring_);
  r.low_ = low_;
  rem.resize(dn - 1);
  r.num_ = std::move(rem);
  r.reduce_mod_p();
  r.trim();
  return {quot, r};
}

std::optional<LaurentPoly> LaurentPoly::exact_divide(const LaurentPoly& d) const {
  assert_same_ring(d);
  if (d.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly(ring_);
  if (ring_.kind() == CoeffRing::Kind::Integer) {
    if (abs(d.num_.back()) == 1) {
      auto [q, r] = divmod(d);
      if (!r.is_zero()) return std::nullopt;
      return q;
    }
    auto [q, r] = to_ring(CoeffRing::rationals()).divmod(d.to_ring(CoeffRing::rationals()));
    if (!r.is_zero() || q.den_ != 1) return std::nullopt;
    return q.to_ring(ring_);
  }
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

LaurentPoly LaurentPoly::to_ring(CoeffRing target) const {
  if (target == ring_) return *this;
  if (target.kind() == CoeffRing::Kind::Integer && den_ != 1) {
    throw std::domain_error("polynomial has non-integral coefficients");
  }
  if (ring_.kind() == CoeffRing::Kind::PrimeField && target.kind() != CoeffRing::Kind::PrimeField) {
    throw std::domain_error("cannot lift a polynomial over F_p to characteristic zero");
  }
  if (ring_.kind() == CoeffRing::Kind::PrimeField) {
    throw std::domain_error("cannot change between prime fields of different characteristic");
  }
  return from_terms(terms(), target);
}

mpq_class LaurentPoly::evaluate(const mpq_class& x) const {
  if (num_.empty()) return 0;
  if (x == 0 && low_ < 0) throw std::domain_error("evaluating a negative power at 0");
  mpq_class acc = 0;
  for (std::size_t i = num_.size(); i-- > 0;) acc = acc * x + num_[i];
  mpq_class xl = 1;
  mpq_class base = low_ < 0 ? mpq_class(1 / x) : x;
  for (Exponent k = 0; k < (low_ < 0 ? -low_ : low_); ++k) xl *= base;
  mpq_class r = acc * xl / den_;
  r.canonicalize();
  if (ring_.kind() == CoeffRing::Kind::PrimeField) {
    mpz_class p = ring_.characteristic();
    mpz_class inv;
    mpz_class den = r.get_den();
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class v = (r.get_num() * inv) % p;
    if (v < 0) v += p;
    return v;
  }
  return r;
}

std::string LaurentPoly::to_string() const {
  if (num_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = num_.size(); i-- > 0;) {
    if (num_[i] == 0) continue;
    mpq_class c(num_[i], den_);
    c.canonicalize();
    const Exponent e = low_ + static_cast<Exponent>(i);
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    mpq_class a = abs(c);
    if (e == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

LaurentPoly canonical(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  LaurentPoly g = f.shifted(-f.low());
  const mpq_class lc = g.leading_coeff();
  if (f.ring().is_field()) {
    if (lc != 1) {
      if (f.ring().kind() == CoeffRing::Kind::PrimeField) {
        mpz_class p = f.ring().characteristic();
        mpz_class inv;
        mpz_class num = lc.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        g = g.scaled(mpq_class(inv));
      } else {
        g = g.scaled(1 / lc);
      }
    }
  } else if (lc < 0) {
    g = -g;
  }
  return g;
}

bool associates(const LaurentPoly& a, const LaurentPoly& b) { return canonical(a) == canonical(b); }

LaurentPoly quantum_integer(std::int64_t k, CoeffRing ring) {
  if (k < 0) throw std::invalid_argument("quantum_integer needs k >= 0");
  std::vector<std::pair<LaurentPoly::Exponent, mpq_class>> t;
  for (std::int64_t i = 0; i < k; ++i) t.emplace_back(i, 1);
  return LaurentPoly::from_terms(t, ring);
}

LaurentPoly quantum_factorial(std::int64_t k, CoeffRing ring) {
  if (k < 0) throw std::invalid_argument("quantum_factorial needs k >= 0");
  LaurentPoly r = LaurentPoly::constant(1, ring);
  for (std::int64_t i = 2; i <= k; ++i) r *= quantum_integer(i, ring);
  return r;
}

mpq_class specialize_at_one(const LaurentPoly& f) {
  if (f.ring().kind() == CoeffRing::Kind::PrimeField) {
    throw std::invalid_argument("q -> 1 specialization is defined over Z or Q here");
  }
  mpz_class s = 0;
  for (const auto& c : f.numerators()) s += c;
  mpq_class r(s, f.denominator());
  r.canonicalize();
  return r;
}

LaurentPoly reduce_mod(const LaurentPoly& f, std::uint32_t p) {
  if (f.ring().kind() != CoeffRing::Kind::Integer) {
    throw std::invalid_argument("reduction mod p needs a polynomial over Z");
  }
  return f.to_ring(CoeffRing::prime_field(p));
}

LaurentPoly gcd(const LaurentPoly& f, const LaurentPoly& g) {
  if (!f.ring().is_field()) throw std::invalid_argument("gcd needs field coefficients");
  if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
  LaurentPoly a = f, b = g;
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return canonical(a);
}

}  // namespace specht::qlaurent
