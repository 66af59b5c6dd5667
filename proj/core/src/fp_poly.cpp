#include "specht/fp_poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <gmpxx.h>

namespace specht::snf {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  const std::uint64_t s = static_cast<std::uint64_t>(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

}  // namespace

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    const std::int64_t quo = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - quo * newt);
    std::tie(r, newr) = std::make_pair(newr, r - quo * newr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpPoly::FpPoly(std::uint32_t p, Exponent low, std::vector<std::uint32_t> coeffs)
    : p_(p), low_(low), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void FpPoly::trim() {
  std::size_t front = 0;
  while (front < c_.size() && c_[front] == 0) ++front;
  if (front == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  while (c_.back() == 0) c_.pop_back();
  if (front > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(front));
    low_ += static_cast<Exponent>(front);
  }
}

FpPoly FpPoly::from_laurent(const qlaurent::LaurentPoly& f) {
  if (f.ring().kind() != qlaurent::CoeffRing::Kind::PrimeField) {
    throw std::invalid_argument("FpPoly needs a polynomial over F_p");
  }
  const std::uint32_t p = f.ring().characteristic();
  std::vector<std::uint32_t> c;
  c.reserve(f.numerators().size());
  for (const auto& x : f.numerators()) c.push_back(static_cast<std::uint32_t>(x.get_ui()));
  return FpPoly(p, f.low(), std::move(c));
}

qlaurent::LaurentPoly FpPoly::to_laurent() const {
  std::vector<std::pair<qlaurent::LaurentPoly::Exponent, mpq_class>> terms;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) terms.emplace_back(low_ + static_cast<Exponent>(i), mpq_class(static_cast<unsigned long>(c_[i])));
  }
  return qlaurent::LaurentPoly::from_terms(terms, qlaurent::CoeffRing::prime_field(p_));
}

std::uint32_t FpPoly::coeff(Exponent e) const {
  if (c_.empty() || e < low_ || e > low_ + span()) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

FpPoly FpPoly::operator-() const {
  FpPoly r = *this;
  for (auto& c : r.c_) c = c == 0 ? 0 : p_ - c;
  return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const Exponent lo = std::min(low_, o.low_);
  const Exponent hi = std::max(low_ + span(), o.low_ + o.span());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), 0U);
    low_ = lo;
  }
  if (static_cast<Exponent>(c_.size()) < hi - lo + 1) c_.resize(static_cast<std::size_t>(hi - lo + 1), 0U);
  const auto off = static_cast<std::size_t>(o.low_ - low_);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[off + i] = addmod(c_[off + i], o.c_[i], p_);
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) { return *this += -o; }

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.p_);
  if (a.c_.empty() || b.c_.empty()) return r;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  const std::uint64_t p = a.p_;
  // p < 2^31, so each product is < 2^62 and four can be summed before reducing.
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      std::uint64_t& s = acc[i + j];
      s += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
      if (s >= (1ULL << 63)) s %= p;
    }
  }
  std::vector<std::uint32_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint32_t>(acc[i] % p);
  return FpPoly(a.p_, a.low_ + b.low_, std::move(c));
}

FpPoly FpPoly::scaled(std::uint32_t s) const {
  FpPoly r = *this;
  for (auto& c : r.c_) c = mulmod(c, s % p_, p_);
  r.trim();
  return r;
}

FpPoly FpPoly::shifted(Exponent k) const {
  FpPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

void FpPoly::sub_mul(const FpPoly& m, const FpPoly& b) {
  if (m.c_.empty() || b.c_.empty()) return;
  if (m.c_.size() == 1) {
    // common case: monomial multiplier
    const Exponent sh = m.low_;
    const std::uint32_t s = m.c_[0];
    const Exponent blo = b.low_ + sh;
    const Exponent bhi = blo + b.span();
    if (c_.empty()) {
      low_ = blo;
      c_.assign(b.c_.size(), 0U);
    } else {
      if (blo < low_) {
        c_.insert(c_.begin(), static_cast<std::size_t>(low_ - blo), 0U);
        low_ = blo;
      }
      if (low_ + span() < bhi) c_.resize(static_cast<std::size_t>(bhi - low_ + 1), 0U);
    }
    const auto off = static_cast<std::size_t>(blo - low_);
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[off + i] = submod(c_[off + i], mulmod(s, b.c_[i], p_), p_);
    trim();
    return;
  }
  *this -= m * b;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.c_.empty()) throw std::domain_error("division by the zero polynomial");
  FpPoly quot(p_);
  if (c_.empty() || c_.size() < d.c_.size()) return {quot, *this};
  std::vector<std::uint32_t> rem = c_;
  const std::size_t dn = d.c_.size();
  std::vector<std::uint32_t> qv(rem.size() - dn + 1, 0U);
  const std::uint32_t inv = fp_inverse(d.c_.back(), p_);
  for (std::size_t i = rem.size(); i-- >= dn;) {
    if (rem[i] == 0) continue;
    const std::uint32_t c = mulmod(rem[i], inv, p_);
    qv[i - (dn - 1)] = c;
    for (std::size_t j = 0; j < dn; ++j) {
      std::uint32_t& t = rem[i - (dn - 1) + j];
      t = submod(t, mulmod(c, d.c_[j], p_), p_);
    }
  }
  rem.resize(dn - 1);
  return {FpPoly(p_, low_ - d.low_, std::move(qv)), FpPoly(p_, low_, std::move(rem))};
}

FpPoly FpPoly::poly_mod(const FpPoly& d) const {
  if (low_ < 0 || d.low_ < 0) throw std::invalid_argument("poly_mod needs ordinary polynomials");
  // Work with dense coefficient vectors starting at exponent 0.
  std::vector<std::uint32_t> a(static_cast<std::size_t>(degree() + 1), 0U);
  if (c_.empty()) return FpPoly(p_);
  std::copy(c_.begin(), c_.end(), a.begin() + low_);
  std::vector<std::uint32_t> b(static_cast<std::size_t>(d.degree() + 1), 0U);
  std::copy(d.c_.begin(), d.c_.end(), b.begin() + d.low_);
  FpPoly A(p_, 0, std::move(a));
  FpPoly B(p_, 0, std::move(b));
  if (A.degree() < B.degree()) return A;
  const std::size_t dn = static_cast<std::size_t>(B.degree()) + 1;
  std::vector<std::uint32_t> rem(static_cast<std::size_t>(A.degree()) + 1, 0U);
  for (std::size_t i = 0; i < A.c_.size(); ++i) rem[static_cast<std::size_t>(A.low_) + i] = A.c_[i];
  std::vector<std::uint32_t> bb(dn, 0U);
  for (std::size_t i = 0; i < B.c_.size(); ++i) bb[static_cast<std::size_t>(B.low_) + i] = B.c_[i];
  const std::uint32_t inv = fp_inverse(bb.back(), p_);
  for (std::size_t i = rem.size(); i-- >= dn;) {
    if (rem[i] == 0) continue;
    const std::uint32_t c = mulmod(rem[i], inv, p_);
    for (std::size_t j = 0; j < dn; ++j) {
      std::uint32_t& t = rem[i - (dn - 1) + j];
      t = submod(t, mulmod(c, bb[j], p_), p_);
    }
  }
  rem.resize(dn - 1);
  return FpPoly(p_, 0, std::move(rem));
}

FpPoly FpPoly::canonical() const {
  if (c_.empty()) return *this;
  FpPoly r(p_, 0, c_);
  return r.scaled(fp_inverse(r.leading(), p_));
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.canonical();
}

// ---------------------------------------------------------------------------

namespace {

FpPoly exact_quotient(const FpPoly& a, const FpPoly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw std::logic_error("expected exact division over F_p");
  return q;
}

FpPoly derivative(const FpPoly& f) {
  const std::uint32_t p = f.p();
  std::vector<std::uint32_t> c;
  for (FpPoly::Exponent e = 1; e <= f.degree(); ++e) {
    c.push_back(static_cast<std::uint32_t>(static_cast<std::uint64_t>(f.coeff(e)) * static_cast<std::uint64_t>(e % p) % p));
  }
  return FpPoly(p, 0, std::move(c));
}

// f(q) = g(q^p) -> g (valid when f' = 0; over F_p the p-th root of a coefficient is itself).
FpPoly pth_root(const FpPoly& f) {
  const std::uint32_t p = f.p();
  std::vector<std::uint32_t> c;
  for (FpPoly::Exponent e = 0; e <= f.degree(); e += p) c.push_back(f.coeff(e));
  return FpPoly(p, 0, std::move(c));
}

FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return (a * b).poly_mod(m); }

FpPoly pow_mod(FpPoly base, const mpz_class& e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(m.p(), 1);
  base = base.poly_mod(m);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul_mod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mul_mod(r, base, m);
  }
  return r;
}

// Square-free decomposition in characteristic p: pairs (square-free part, multiplicity).
void squarefree(const FpPoly& f, int scale, std::vector<std::pair<FpPoly, int>>& out) {
  if (f.degree() == 0) return;
  const std::uint32_t p = f.p();
  const FpPoly df = derivative(f);
  if (df.is_zero()) {
    squarefree(pth_root(f), scale * static_cast<int>(p), out);
    return;
  }
  FpPoly c = fp_gcd(f, df);
  FpPoly w = exact_quotient(f, c).canonical();
  int i = 1;
  while (w.degree() > 0) {
    FpPoly y = fp_gcd(w, c);
    FpPoly fac = exact_quotient(w, y).canonical();
    if (fac.degree() > 0) out.emplace_back(fac, i * scale);
    w = y;
    c = exact_quotient(c, y).canonical();
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c), scale * static_cast<int>(p), out);
}

void equal_degree(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.canonical());
    return;
  }
  const std::uint32_t p = f.p();
  std::uniform_int_distribution<std::uint32_t> coin(0, p - 1);
  for (;;) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& x : c) x = coin(rng);
    FpPoly a(p, 0, std::move(c));
    if (a.degree() < 1) continue;
    FpPoly b(p);
    if (p == 2) {
      FpPoly t = a;
      b = a;
      for (int j = 1; j < d; ++j) {
        t = mul_mod(t, t, f);
        b += t;
      }
    } else {
      mpz_class e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = pow_mod(a, e, f) - FpPoly::constant(p, 1);
    }
    FpPoly g = fp_gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(exact_quotient(f, g).canonical(), d, rng, out);
      return;
    }
  }
}

void distinct_degree(FpPoly f, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  const std::uint32_t p = f.p();
  const FpPoly x = FpPoly::monomial(p, 1);
  FpPoly h = x.poly_mod(f);
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = pow_mod(h, mpz_class(p), f);
    FpPoly g = fp_gcd(f, h - x);
    if (g.degree() > 0) {
      equal_degree(g, d, rng, out);
      f = exact_quotient(f, g).canonical();
      h = h.poly_mod(f);
    }
  }
  if (f.degree() > 0) out.push_back(f.canonical());
}

}  // namespace

std::vector<FpFactor> factor_fp(const FpPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_fp of zero");
  const FpPoly g = f.canonical();
  std::vector<std::pair<FpPoly, int>> parts;
  squarefree(g, 1, parts);
  std::mt19937_64 rng(0x5eed);
  std::vector<FpFactor> out;
  for (const auto& [part, mult] : parts) {
    std::vector<FpPoly> irr;
    distinct_degree(part, rng, irr);
    for (auto& h : irr) {
      auto it = std::find_if(out.begin(), out.end(), [&](const FpFactor& x) { return x.factor == h; });
      if (it != out.end()) {
        it->multiplicity += mult;
      } else {
        out.push_back({std::move(h), mult});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coeffs() < b.factor.coeffs();
  });
  return out;
}

}  // namespace specht::snf
