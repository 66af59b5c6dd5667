#include "specht/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace specht::tableaux {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    int v = std::stoi(cur, &used);
    if (used != cur.size()) throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    parts.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else {
      throw std::invalid_argument("bad partition '" + std::string(text) + "'");
    }
  }
  flush();
  if (parts.empty()) throw std::invalid_argument("empty partition");
  return Partition(std::move(parts));
}

Partition Partition::hook(int n, int k) {
  if (k < 0 || k >= n) throw std::invalid_argument("hook needs 0 <= k < n");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  if (parts_.empty()) return Partition();
  for (int j = 1; j <= parts_.front(); ++j) {
    int cnt = 0;
    for (int p : parts_) cnt += p >= j ? 1 : 0;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

bool Partition::is_hook() const {
  return !parts_.empty() && std::all_of(parts_.begin() + 1, parts_.end(), [](int p) { return p == 1; });
}

int Partition::hook_leg() const {
  if (!is_hook()) throw std::invalid_argument("partition " + to_string() + " is not a hook");
  return length() - 1;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  std::vector<std::vector<int>> h;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<int> row;
    for (int j = 1; j <= lambda[i - 1]; ++j) row.push_back((lambda[i - 1] - j) + (conj[j - 1] - i) + 1);
    h.push_back(std::move(row));
  }
  return h;
}

int alpha(const Partition& lambda) {
  int a = 0;
  for (int i = 0; i < lambda.length(); ++i) a += i * lambda[i];
  return a;
}

// ---------------------------------------------------------------------------

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  shape_ = Partition(parts);
  if (shape_.length() != static_cast<int>(rows_.size())) throw std::invalid_argument("empty tableau row");
  std::vector<bool> seen(static_cast<std::size_t>(shape_.n()) + 1, false);
  for (const auto& r : rows_) {
    for (int e : r) {
      if (e < 1 || e > shape_.n() || seen[static_cast<std::size_t>(e)]) {
        throw std::invalid_argument("tableau entries must be 1..n, each once");
      }
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
}

Tableau Tableau::initial(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int p : lambda.parts()) {
    std::vector<int> r(static_cast<std::size_t>(p));
    std::iota(r.begin(), r.end(), next);
    next += p;
    rows.push_back(std::move(r));
  }
  return Tableau(std::move(rows));
}

Tableau Tableau::terminal(const Partition& lambda) { return initial(lambda.conjugate()).transpose(); }

Tableau Tableau::from_perm(const Partition& lambda, const Perm& d) { return initial(lambda).act(d); }

int Tableau::row_of(int entry) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (std::find(rows_[i].begin(), rows_[i].end(), entry) != rows_[i].end()) return static_cast<int>(i) + 1;
  }
  throw std::out_of_range("entry not in tableau");
}

std::vector<int> Tableau::first_column() const {
  std::vector<int> c;
  for (const auto& r : rows_) c.push_back(r.front());
  return c;
}

bool Tableau::is_row_standard() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const auto& r) { return std::is_sorted(r.begin(), r.end()) &&
                                                std::adjacent_find(r.begin(), r.end()) == r.end(); });
}

bool Tableau::is_standard() const {
  if (!is_row_standard()) return false;
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (rows_[i][j] <= rows_[i - 1][j]) return false;
    }
  }
  return true;
}

Tableau Tableau::transpose() const {
  const Partition conj = shape_.conjugate();
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < conj.length(); ++j) {
    std::vector<int> c;
    for (int i = 0; i < conj[j]; ++i) c.push_back(rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    cols.push_back(std::move(c));
  }
  return Tableau(std::move(cols));
}

Tableau Tableau::act(const Perm& w) const {
  if (w.degree() != n()) throw std::invalid_argument("degree mismatch acting on tableau");
  auto rows = rows_;
  for (auto& r : rows) {
    for (int& e : r) e = w(e);
  }
  return Tableau(std::move(rows));
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

Perm d_of_tableau(const Tableau& t) {
  std::vector<int> line;
  for (const auto& r : t.rows()) line.insert(line.end(), r.begin(), r.end());
  return Perm::from_one_line(std::move(line));
}

namespace {

void fill_standard(const Partition& lambda, std::vector<std::vector<int>>& rows, int next,
                   std::vector<Tableau>& out) {
  if (next > lambda.n()) {
    out.emplace_back(rows);
    return;
  }
  for (int i = 0; i < lambda.length(); ++i) {
    auto& r = rows[static_cast<std::size_t>(i)];
    const int len = static_cast<int>(r.size());
    if (len >= lambda[i]) continue;
    if (i > 0 && static_cast<int>(rows[static_cast<std::size_t>(i - 1)].size()) <= len) continue;
    r.push_back(next);
    fill_standard(lambda, rows, next + 1, out);
    rows[static_cast<std::size_t>(i)].pop_back();
  }
}

}  // namespace

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.length()));
  std::vector<Tableau> out;
  fill_standard(lambda, rows, 1, out);
  const int n = lambda.n();
  if (lambda.is_hook()) {
    auto key = [n](const Tableau& t) { return std::make_pair(t.row_of(n) != 1, t.first_column()); };
    std::stable_sort(out.begin(), out.end(), [&](const Tableau& a, const Tableau& b) { return key(a) < key(b); });
  } else {
    std::vector<std::pair<coxeter::Word, Tableau>> keyed;
    keyed.reserve(out.size());
    for (auto& t : out) keyed.emplace_back(coxeter::reduced_word(d_of_tableau(t)), std::move(t));
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& kt : keyed) out.push_back(std::move(kt.second));
  }
  return out;
}

std::size_t count_standard_tableaux(const Partition& lambda) {
  // n! / prod hooks, exact in 64 bits for n <= 20.
  unsigned long long num = 1;
  for (int i = 2; i <= lambda.n(); ++i) num *= static_cast<unsigned long long>(i);
  for (const auto& row : hook_lengths(lambda)) {
    for (int h : row) num /= static_cast<unsigned long long>(h);
  }
  return static_cast<std::size_t>(num);
}

// ---------------------------------------------------------------------------

bool PairTableau::is_standard() const {
  return std::is_sorted(a.begin(), a.end()) && std::is_sorted(b.begin(), b.end());
}

std::string PairTableau::to_string() const {
  std::ostringstream os;
  const bool wide = n() >= 10;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (wide && i ? "," : "") << a[i];
  os << "|";
  for (std::size_t i = 0; i < b.size(); ++i) os << (wide && i ? "," : "") << b[i];
  os << ")";
  return os.str();
}

PairTableau pair_from_subset(std::vector<int> a, int n) {
  std::sort(a.begin(), a.end());
  std::vector<int> b;
  for (int v = 1; v <= n; ++v) {
    if (!std::binary_search(a.begin(), a.end(), v)) b.push_back(v);
  }
  return {std::move(a), std::move(b)};
}

Perm d_of_pair(const PairTableau& ab) {
  std::vector<int> line = ab.a;
  line.insert(line.end(), ab.b.begin(), ab.b.end());
  return Perm::from_one_line(std::move(line));
}

int pair_length(const PairTableau& ab) {
  int len = 0;
  for (int i : ab.a) {
    for (int j : ab.b) len += i > j ? 1 : 0;
  }
  return len;
}

std::vector<PairInfo> pair_standard_tableaux(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("pair tableaux need 0 <= k <= n");
  std::vector<PairInfo> out;
  std::vector<int> a;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(a.size()) == k) {
      PairTableau ab = pair_from_subset(a, n);
      Perm d = d_of_pair(ab);
      const int len = pair_length(ab);
      out.push_back({std::move(ab), std::move(d), len});
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(a.size())) + 1; ++v) {
      a.push_back(v);
      self(self, v + 1);
      a.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::optional<Precedence> precedes_and_index(const PairTableau& ab, const Tableau& t) {
  const int k = t.shape().hook_leg();
  if (ab.k() != k || ab.n() != t.n()) throw std::invalid_argument("pair tableau does not match hook shape");
  const auto col = t.first_column();
  for (int v : ab.a) {
    if (std::find(col.begin(), col.end(), v) == col.end()) return std::nullopt;
  }
  int index = 0;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (std::find(ab.a.begin(), ab.a.end(), col[i]) == ab.a.end()) {
      index = static_cast<int>(i) + 1;
      break;
    }
  }
  const bool before_n = std::find(ab.b.begin(), ab.b.end(), t.n()) != ab.b.end();
  return Precedence{index, before_n};
}

PairTableau a_plus(const Partition& lambda) {
  const int k = lambda.hook_leg();
  const int n = lambda.n();
  std::vector<int> a;
  for (int v = n - k + 1; v <= n; ++v) a.push_back(v);
  return pair_from_subset(std::move(a), n);
}

Tableau t_star(const Tableau& t) {
  const int n = t.n();
  if (n == 1) return t;
  std::vector<int> line(static_cast<std::size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::swap(line.front(), line.back());
  return t.act(Perm::from_one_line(std::move(line)));
}

PairTableau star_pair(const Tableau& t) {
  const Tableau ts = t_star(t);
  const int n = t.n();
  std::vector<int> a;
  for (int v : ts.first_column()) {
    if (v != n) a.push_back(v);
  }
  if (static_cast<int>(a.size()) != t.shape().hook_leg()) {
    throw std::invalid_argument("t(1,n) has an unexpected first column for " + t.to_string());
  }
  return pair_from_subset(std::move(a), n);
}

}  // namespace specht::tableaux
