#include "specht/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "specht/tableaux.hpp"

namespace specht::coxeter {

Perm Perm::identity(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::from_one_line(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(images.size() + 1, false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Perm(std::move(images));
}

Perm Perm::simple_reflection(int i, int n) {
  if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
  return identity(n).times_simple(i);
}

Perm Perm::from_word(const Word& word, int n) {
  Perm w = identity(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    w = w.times_simple(i);
  }
  return w;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Perm(std::move(inv));
}

Perm operator*(const Perm& u, const Perm& v) {
  if (u.degree() != v.degree()) throw std::invalid_argument("degree mismatch in product");
  std::vector<int> im(u.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = v(u.images_[i]);
  return Perm(std::move(im));
}

int Perm::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    for (std::size_t j = i + 1; j < images_.size(); ++j) {
      if (images_[i] > images_[j]) ++inv;
    }
  }
  return inv;
}

bool Perm::has_right_descent(int i) const {
  for (int v : images_) {
    if (v == i) return false;
    if (v == i + 1) return true;
  }
  return false;
}

bool Perm::has_left_descent(int i) const { return (*this)(i) > (*this)(i + 1); }

Perm Perm::times_simple(int i) const {
  Perm r = *this;
  for (int& v : r.images_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return r;
}

Perm Perm::simple_times(int i) const {
  Perm r = *this;
  std::swap(r.images_[static_cast<std::size_t>(i - 1)], r.images_[static_cast<std::size_t>(i)]);
  return r;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ")";
  return os.str();
}

std::uint64_t Perm::code() const {
  std::uint64_t c = 0;
  for (int v : images_) c = (c << 4U) | static_cast<std::uint64_t>(v - 1);
  return c ^ (static_cast<std::uint64_t>(images_.size()) << 60U);
}

LengthAndWord length_and_reduced_word(const Perm& w) {
  Word rev;
  Perm cur = w;
  const int n = w.degree();
  for (;;) {
    int descent = 0;
    for (int i = 1; i < n; ++i) {
      if (cur.has_right_descent(i)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    rev.push_back(descent);
    cur = cur.times_simple(descent);
  }
  std::reverse(rev.begin(), rev.end());
  return {static_cast<int>(rev.size()), std::move(rev)};
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

int composition_size(const Composition& mu) {
  int n = 0;
  for (int part : mu) {
    if (part < 0) throw std::invalid_argument("negative part in composition");
    n += part;
  }
  return n;
}

namespace {

// Block index of each point 1..n (0-based vector).
std::vector<int> block_of(const Composition& mu) {
  std::vector<int> b;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    for (int j = 0; j < mu[k]; ++j) b.push_back(static_cast<int>(k));
  }
  return b;
}

}  // namespace

bool in_young_subgroup(const Perm& w, const Composition& mu) {
  const auto blocks = block_of(mu);
  if (static_cast<int>(blocks.size()) != w.degree()) throw std::invalid_argument("degree mismatch");
  for (int i = 1; i <= w.degree(); ++i) {
    if (blocks[static_cast<std::size_t>(i - 1)] != blocks[static_cast<std::size_t>(w(i) - 1)]) return false;
  }
  return true;
}

std::vector<Perm> young_subgroup(const Composition& mu) {
  const int n = composition_size(mu);
  std::vector<std::vector<int>> parts{{}};
  int start = 1;
  for (int m : mu) {
    std::vector<int> block(static_cast<std::size_t>(m));
    std::iota(block.begin(), block.end(), start);
    std::vector<std::vector<int>> next;
    for (const auto& prefix : parts) {
      std::vector<int> b = block;
      do {
        auto p = prefix;
        p.insert(p.end(), b.begin(), b.end());
        next.push_back(std::move(p));
      } while (std::next_permutation(b.begin(), b.end()));
    }
    parts = std::move(next);
    start += m;
  }
  std::vector<Perm> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Perm::from_one_line(std::move(p)));
  (void)n;
  return out;
}

Perm longest_element(const Composition& mu) {
  std::vector<int> im;
  int start = 1;
  for (int m : mu) {
    for (int j = m - 1; j >= 0; --j) im.push_back(start + j);
    start += m;
  }
  return Perm::from_one_line(std::move(im));
}

bool is_distinguished(const Perm& d, const Composition& mu) {
  const auto blocks = block_of(mu);
  for (int i = 1; i < d.degree(); ++i) {
    if (blocks[static_cast<std::size_t>(i - 1)] == blocks[static_cast<std::size_t>(i)] &&
        d.has_left_descent(i)) {
      return false;
    }
  }
  return true;
}

std::vector<Perm> distinguished_reps(const Composition& mu) {
  const int n = composition_size(mu);
  const auto blocks = block_of(mu);
  std::vector<Perm> out;
  std::vector<int> line(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);

  // Depth-first in increasing value order gives lexicographic output.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.push_back(Perm::from_one_line(line));
      return;
    }
    const bool continues_block = pos > 0 && blocks[static_cast<std::size_t>(pos)] ==
                                                blocks[static_cast<std::size_t>(pos - 1)];
    const int floor = continues_block ? line[static_cast<std::size_t>(pos - 1)] : 0;
    int rest_of_block = 0;
    for (int j = pos; j < n && blocks[static_cast<std::size_t>(j)] == blocks[static_cast<std::size_t>(pos)]; ++j) {
      ++rest_of_block;
    }
    for (int v = floor + 1; v <= n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      int larger_free = 0;
      for (int u = v + 1; u <= n; ++u) larger_free += used[static_cast<std::size_t>(u)] ? 0 : 1;
      if (larger_free < rest_of_block - 1) break;
      used[static_cast<std::size_t>(v)] = true;
      line[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

Word r_ij_word(int i, int j) {
  Word w;
  if (i == 0 || j == 0) return w;
  if (i <= j) {
    for (int k = i; k <= j; ++k) w.push_back(k);
  } else {
    for (int k = i; k >= j; --k) w.push_back(k);
  }
  return w;
}

Perm r_ij(int i, int j, int n) { return Perm::from_word(r_ij_word(i, j), n); }

Perm w_ab(int a, int b, int n) {
  if (a < 0 || b < 0 || a + b > n) throw std::invalid_argument("w_ab needs a, b >= 0 and a + b <= n");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int img = i;
    if (a > 0 && b > 0) {
      if (i <= a) {
        img = b + i;
      } else if (i <= a + b) {
        img = i - a;
      }
    }
    im[static_cast<std::size_t>(i - 1)] = img;
  }
  return Perm::from_one_line(std::move(im));
}

Perm w_lambda(const tableaux::Partition& lambda) {
  return tableaux::d_of_tableau(tableaux::Tableau::terminal(lambda));
}

}  // namespace specht::coxeter
