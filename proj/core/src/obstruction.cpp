#include "specht/obstruction.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

#include "specht/fp_poly.hpp"

namespace specht::snf {

std::string ObstructionReport::status_text() const {
  switch (status) {
    case Status::Obstructed:
      return "Obstructed";
    case Status::NoObstruction:
      return "no obstruction found by this test";
    case Status::Inconclusive:
      break;
  }
  return "Inconclusive";
}

namespace {

struct TimedOut {};

bool hall_holds(const std::map<int, int>& assigned, const std::map<int, int>& target) {
  // #{a >= x} <= #{t >= x} for every threshold x
  long have = 0;
  auto t = target.rbegin();
  long avail = 0;
  for (auto a = assigned.rbegin(); a != assigned.rend(); ++a) {
    if (a->second == 0) continue;
    have += a->second;
    while (t != target.rend() && t->first >= a->first) {
      avail += t->second;
      ++t;
    }
    if (have > avail) return false;
  }
  return true;
}

class Search {
 public:
  Search(const ValuationProblem& pr, double budget)
      : pr_(pr), deadline_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                                  std::chrono::duration<double>(budget))) {
    const std::size_t nf = pr_.f_counts.size();
    values_.resize(nf);
    for (std::size_t f = 0; f < nf; ++f) {
      for (const auto& [v, c] : pr_.f_counts[f]) {
        if (c > 0) values_[f].push_back(v);
      }
    }
    std::vector<int> cur(nf);
    enumerate(0, cur);
    f_res_ = pr_.f_counts;
    if (pr_.dominance) {
      g_res_.assign(pr_.g_counts.size(), {});
    } else {
      g_res_ = pr_.g_counts;
    }
    counts_.assign(patterns_.size(), 0);
  }

  SearchResult run() {
    SearchResult r;
    try {
      r.outcome = dfs(0) ? SearchOutcome::Feasible : SearchOutcome::Infeasible;
    } catch (const TimedOut&) {
      r.outcome = SearchOutcome::TimedOut;
      return r;
    }
    if (r.outcome == SearchOutcome::Feasible) {
      for (std::size_t i = 0; i < patterns_.size(); ++i) {
        for (int c = 0; c < solution_[i]; ++c) r.assignment.push_back(patterns_[i]);
      }
    }
    return r;
  }

 private:
  void enumerate(std::size_t f, std::vector<int>& cur) {
    if (f == cur.size()) {
      std::vector<int> derived(pr_.weights.size(), 0);
      for (std::size_t g = 0; g < pr_.weights.size(); ++g) {
        for (std::size_t j = 0; j < cur.size(); ++j) derived[g] += pr_.weights[g][j] * cur[j];
      }
      patterns_.push_back(cur);
      derived_.push_back(std::move(derived));
      return;
    }
    for (int v : values_[f]) {
      cur[f] = v;
      enumerate(f + 1, cur);
    }
  }

  static int lookup(const std::map<int, int>& m, int key) {
    auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
  }

  std::string state_key(std::size_t i) const {
    std::string key = std::to_string(i);
    auto dump = [&](const std::vector<std::map<int, int>>& ms) {
      for (const auto& m : ms) {
        key += '|';
        for (const auto& [v, c] : m) {
          if (c) key += std::to_string(v) + ':' + std::to_string(c) + ',';
        }
      }
    };
    dump(f_res_);
    dump(g_res_);
    return key;
  }

  bool f_exhausted() const {
    for (const auto& m : f_res_) {
      for (const auto& [v, c] : m) {
        if (c) return false;
      }
    }
    return true;
  }

  bool leaf_ok() const {
    for (std::size_t g = 0; g < g_res_.size(); ++g) {
      if (pr_.dominance) {
        if (!hall_holds(g_res_[g], pr_.g_counts[g])) return false;
      } else {
        for (const auto& [v, c] : g_res_[g]) {
          if (c) return false;
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t i) {
    if (++nodes_ % 1024 == 0 && std::chrono::steady_clock::now() > deadline_) throw TimedOut{};
    if (f_exhausted()) {
      if (!leaf_ok()) return false;
      solution_ = counts_;
      return true;
    }
    if (i == patterns_.size()) return false;
    std::string key = state_key(i);
    if (failed_.count(key)) return false;

    const auto& pat = patterns_[i];
    const auto& der = derived_[i];
    int cap = static_cast<int>(pr_.rows);
    for (std::size_t f = 0; f < pat.size(); ++f) cap = std::min(cap, lookup(f_res_[f], pat[f]));
    if (!pr_.dominance) {
      for (std::size_t g = 0; g < der.size(); ++g) cap = std::min(cap, lookup(g_res_[g], der[g]));
    }
    for (int c = cap; c >= 0; --c) {
      apply(i, c, -1);
      bool ok = true;
      if (pr_.dominance && c > 0) {
        for (std::size_t g = 0; g < g_res_.size() && ok; ++g) ok = hall_holds(g_res_[g], pr_.g_counts[g]);
      }
      if (ok && dfs(i + 1)) return true;
      apply(i, c, +1);
    }
    failed_.insert(std::move(key));
    return false;
  }

  // sign -1 takes c rows of pattern i, +1 gives them back
  void apply(std::size_t i, int c, int sign) {
    if (c == 0) return;
    const auto& pat = patterns_[i];
    const auto& der = derived_[i];
    for (std::size_t f = 0; f < pat.size(); ++f) f_res_[f][pat[f]] += sign * c;
    for (std::size_t g = 0; g < der.size(); ++g) {
      // residual targets in exact mode, assigned values in dominance mode
      g_res_[g][der[g]] += pr_.dominance ? -sign * c : sign * c;
    }
    counts_[i] -= sign * c;
  }

  const ValuationProblem& pr_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::vector<int>> values_;
  std::vector<std::vector<int>> patterns_;
  std::vector<std::vector<int>> derived_;
  std::vector<std::map<int, int>> f_res_;
  std::vector<std::map<int, int>> g_res_;
  std::vector<int> counts_;
  std::vector<int> solution_;
  std::unordered_set<std::string> failed_;
  std::uint64_t nodes_ = 0;
};

std::map<int, int> multiset(const std::vector<int>& xs) {
  std::map<int, int> m;
  for (int x : xs) ++m[x];
  return m;
}

bool is_power_of(std::int64_t m, std::uint32_t p) {
  if (m < static_cast<std::int64_t>(p)) return false;
  while (m % p == 0) m /= p;
  return m == 1;
}

struct CycloColumns {
  std::vector<std::int64_t> ms;
  std::vector<std::vector<int>> vals;  // [f][row]
};

// Valuations of the Q divisors at each cyclotomic factor; empty optional when a
// divisor is not a product of cyclotomic polynomials.
std::optional<CycloColumns> cyclo_columns(const EDList& ed_q, std::int64_t max_m) {
  std::map<std::int64_t, std::vector<int>> by_m;
  const std::size_t rows = ed_q.size();
  for (std::size_t r = 0; r < rows; ++r) {
    const auto disp = qlaurent::cyclo_display(ed_q.divisors[r], max_m);
    if (!disp.fully_factored()) return std::nullopt;
    for (const auto& f : disp.factors) {
      auto& col = by_m[f.m];
      col.resize(rows, 0);
      col[r] += f.exponent;
    }
  }
  CycloColumns c;
  for (auto& [m, col] : by_m) {
    col.resize(rows, 0);
    c.ms.push_back(m);
    c.vals.push_back(std::move(col));
  }
  return c;
}

std::string phi_label(std::int64_t m) { return "Φ" + std::to_string(m); }

ObstructionReport inconclusive(std::uint32_t p, std::string reason) {
  ObstructionReport r;
  r.status = ObstructionReport::Status::Inconclusive;
  r.p = p;
  r.reason = std::move(reason);
  return r;
}

ObstructionReport finish(ObstructionReport r, double budget) {
  const auto res = solve_valuation_problem(r.problem, budget);
  switch (res.outcome) {
    case SearchOutcome::Feasible:
      r.status = ObstructionReport::Status::NoObstruction;
      r.assignment = res.assignment;
      r.reason = "a consistent valuation assignment exists";
      break;
    case SearchOutcome::Infeasible:
      r.status = ObstructionReport::Status::Obstructed;
      r.reason = "no valuation assignment is consistent with both lists";
      break;
    case SearchOutcome::TimedOut:
      r.status = ObstructionReport::Status::Inconclusive;
      r.reason = "time budget exceeded";
      break;
  }
  return r;
}

void check_sizes(const EDList& a, const EDList& b) {
  if (a.size() != b.size()) throw std::invalid_argument("elementary divisor lists differ in size");
}

}  // namespace

SearchResult solve_valuation_problem(const ValuationProblem& problem, double time_budget_seconds) {
  if (problem.f_counts.size() != problem.f_labels.size() || problem.weights.size() != problem.g_counts.size()) {
    throw std::invalid_argument("malformed valuation problem");
  }
  for (const auto& w : problem.weights) {
    if (w.size() != problem.f_counts.size()) throw std::invalid_argument("malformed valuation weights");
  }
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                               std::chrono::duration<double>(time_budget_seconds));
  const std::size_t nf = problem.f_counts.size();
  const std::size_t ng = problem.g_counts.size();

  // Factors and derived quantities that share no weight are independent, and
  // rows of independent parts can be paired arbitrarily.
  std::vector<std::size_t> parent(nf + ng);
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t g = 0; g < ng; ++g) {
    for (std::size_t f = 0; f < nf; ++f) {
      if (problem.weights[g][f] != 0) parent[find(nf + g)] = find(f);
    }
  }
  std::map<std::size_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> parts;
  for (std::size_t f = 0; f < nf; ++f) parts[find(f)].first.push_back(f);
  for (std::size_t g = 0; g < ng; ++g) parts[find(nf + g)].second.push_back(g);

  std::vector<std::pair<std::size_t, ValuationProblem>> subs;  // (pattern count, problem)
  std::vector<std::vector<std::size_t>> sub_fs;
  for (const auto& [root, members] : parts) {
    const auto& [fs, gs] = members;
    ValuationProblem sub;
    sub.rows = problem.rows;
    sub.dominance = problem.dominance;
    for (std::size_t f : fs) {
      sub.f_labels.push_back(problem.f_labels[f]);
      sub.f_counts.push_back(problem.f_counts[f]);
    }
    for (std::size_t g : gs) {
      sub.g_labels.push_back(problem.g_labels[g]);
      sub.g_counts.push_back(problem.g_counts[g]);
      std::vector<int> w;
      for (std::size_t f : fs) w.push_back(problem.weights[g][f]);
      sub.weights.push_back(std::move(w));
    }
    if (fs.empty()) {
      // every row has derived value 0
      const std::vector<std::vector<int>> zeros(problem.rows);
      if (!assignment_satisfies(sub, zeros)) return {SearchOutcome::Infeasible, {}};
      continue;
    }
    if (sub.dominance) {
      // Dominance with equal totals forces equal multisets.
      bool tight = true;
      for (std::size_t g = 0; g < sub.g_counts.size(); ++g) {
        long derived = 0, target = 0;
        for (std::size_t f = 0; f < sub.f_counts.size(); ++f) {
          for (const auto& [v, c] : sub.f_counts[f]) derived += static_cast<long>(sub.weights[g][f]) * v * c;
        }
        for (const auto& [v, c] : sub.g_counts[g]) target += static_cast<long>(v) * c;
        if (derived > target) return {SearchOutcome::Infeasible, {}};
        tight = tight && derived == target;
      }
      if (tight) sub.dominance = false;
    }
    std::size_t patterns = 1;
    for (const auto& m : sub.f_counts) patterns *= std::max<std::size_t>(1, m.size());
    subs.emplace_back(patterns, std::move(sub));
    sub_fs.push_back(fs);
  }
  std::vector<std::size_t> order(subs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return subs[a].first < subs[b].first; });

  SearchResult result;
  result.outcome = SearchOutcome::Feasible;
  result.assignment.assign(problem.rows, std::vector<int>(nf, 0));
  bool timed_out = false;
  for (std::size_t idx : order) {
    const double left = std::chrono::duration<double>(deadline - std::chrono::steady_clock::now()).count();
    if (left <= 0) {
      timed_out = true;
      continue;
    }
    Search s(subs[idx].second, left);
    const SearchResult r = s.run();
    if (r.outcome == SearchOutcome::Infeasible) return {SearchOutcome::Infeasible, {}};
    if (r.outcome == SearchOutcome::TimedOut) {
      timed_out = true;
      continue;
    }
    for (std::size_t row = 0; row < problem.rows; ++row) {
      for (std::size_t j = 0; j < sub_fs[idx].size(); ++j) result.assignment[row][sub_fs[idx][j]] = r.assignment[row][j];
    }
  }
  if (timed_out) return {SearchOutcome::TimedOut, {}};
  return result;
}

bool assignment_satisfies(const ValuationProblem& pr, const std::vector<std::vector<int>>& assignment) {
  if (assignment.size() != pr.rows) return false;
  const std::size_t nf = pr.f_counts.size();
  for (std::size_t f = 0; f < nf; ++f) {
    std::vector<int> col;
    for (const auto& row : assignment) {
      if (row.size() != nf) return false;
      col.push_back(row[f]);
    }
    std::map<int, int> want;
    for (const auto& [v, c] : pr.f_counts[f]) {
      if (c) want[v] = c;
    }
    if (multiset(col) != want) return false;
  }
  for (std::size_t g = 0; g < pr.weights.size(); ++g) {
    std::vector<int> col;
    for (const auto& row : assignment) {
      int d = 0;
      for (std::size_t f = 0; f < nf; ++f) d += pr.weights[g][f] * row[f];
      col.push_back(d);
    }
    std::map<int, int> want;
    for (const auto& [v, c] : pr.g_counts[g]) {
      if (c) want[v] = c;
    }
    if (pr.dominance) {
      if (!hall_holds(multiset(col), want)) return false;
      long total = 0;
      for (const auto& [v, c] : want) total += c;
      if (total != static_cast<long>(col.size())) return false;
    } else if (multiset(col) != want) {
      return false;
    }
  }
  return true;
}

ObstructionReport nondiag_obstruction(const EDList& ed_q, const EDList& ed_p, std::uint32_t p,
                                      const ObstructionOptions& opts) {
  check_sizes(ed_q, ed_p);
  if (ed_q.ring.kind() != CoeffRing::Kind::Rational) throw std::invalid_argument("first list must be over Q");
  if (ed_p.ring.kind() != CoeffRing::Kind::PrimeField || ed_p.ring.characteristic() != p) {
    throw std::invalid_argument("second list must be over F_" + std::to_string(p));
  }
  if (ed_q.rank() != ed_q.size() || ed_p.rank() != ed_p.size()) return inconclusive(p, "zero elementary divisor");
  const auto cols = cyclo_columns(ed_q, opts.max_cyclotomic);
  if (!cols) return inconclusive(p, "a divisor over Q is not a product of cyclotomic polynomials");

  ObstructionReport r;
  r.p = p;
  ValuationProblem& pr = r.problem;
  pr.rows = ed_q.size();
  for (std::size_t f = 0; f < cols->ms.size(); ++f) {
    pr.f_labels.push_back(phi_label(cols->ms[f]));
    pr.f_counts.push_back(multiset(cols->vals[f]));
  }

  // Irreducible factors over F_p, keyed by coefficient vector, with e_{f,g}.
  std::map<std::vector<std::uint32_t>, std::size_t> g_index;
  std::vector<FpPoly> gs;
  auto index_of = [&](const FpPoly& g) {
    auto [it, fresh] = g_index.emplace(g.coeffs(), gs.size());
    if (fresh) {
      gs.push_back(g);
      pr.weights.emplace_back(cols->ms.size(), 0);
    }
    return it->second;
  };
  for (std::size_t f = 0; f < cols->ms.size(); ++f) {
    const auto phi = FpPoly::from_laurent(qlaurent::reduce_mod(qlaurent::cyclotomic(cols->ms[f]), p));
    for (const auto& fac : factor_fp(phi)) pr.weights[index_of(fac.factor)][f] += fac.multiplicity;
  }
  std::vector<std::vector<FpFactor>> ed_factors;
  for (const auto& d : ed_p.divisors) {
    ed_factors.push_back(factor_fp(FpPoly::from_laurent(d)));
    for (const auto& fac : ed_factors.back()) index_of(fac.factor);
  }
  for (std::size_t g = 0; g < gs.size(); ++g) {
    std::vector<int> col;
    for (const auto& facs : ed_factors) {
      int e = 0;
      for (const auto& fac : facs) {
        if (fac.factor == gs[g]) e = fac.multiplicity;
      }
      col.push_back(e);
    }
    pr.g_labels.push_back(gs[g].to_laurent().to_string());
    pr.g_counts.push_back(multiset(col));
  }
  return finish(std::move(r), opts.time_budget_seconds);
}

ObstructionReport q1_obstruction(const EDList& ed_q, const EDList& ed_z, std::uint32_t p,
                                 const ObstructionOptions& opts) {
  check_sizes(ed_q, ed_z);
  if (!qlaurent::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (ed_q.ring.kind() != CoeffRing::Kind::Rational) throw std::invalid_argument("first list must be over Q");
  if (ed_z.ring.kind() != CoeffRing::Kind::Integer) throw std::invalid_argument("second list must be over Z");
  if (ed_q.rank() != ed_q.size() || ed_z.rank() != ed_z.size()) return inconclusive(p, "zero elementary divisor");
  const auto cols = cyclo_columns(ed_q, opts.max_cyclotomic);
  if (!cols) return inconclusive(p, "a divisor over Q is not a product of cyclotomic polynomials");
  if (std::find(cols->ms.begin(), cols->ms.end(), 1) != cols->ms.end()) {
    return inconclusive(p, "Φ1 vanishes at q = 1");
  }

  ObstructionReport r;
  r.p = p;
  ValuationProblem& pr = r.problem;
  pr.rows = ed_q.size();
  pr.dominance = true;
  std::vector<int> w;
  for (std::size_t f = 0; f < cols->ms.size(); ++f) {
    pr.f_labels.push_back(phi_label(cols->ms[f]));
    pr.f_counts.push_back(multiset(cols->vals[f]));
    w.push_back(is_power_of(cols->ms[f], p) ? 1 : 0);
  }
  pr.weights.push_back(std::move(w));
  std::vector<int> target;
  const mpz_class pz = p;
  for (const auto& d : ed_z.divisors) {
    mpz_class v = d.leading_coeff().get_num();
    int e = 0;
    while (v % pz == 0) {
      v /= pz;
      ++e;
    }
    target.push_back(e);
  }
  pr.g_labels.push_back("v_" + std::to_string(p) + " at q = 1");
  pr.g_counts.push_back(multiset(target));
  return finish(std::move(r), opts.time_budget_seconds);
}

bool recheck_witness(const ObstructionReport& report, double time_budget_seconds) {
  switch (report.status) {
    case ObstructionReport::Status::Obstructed:
      return solve_valuation_problem(report.problem, time_budget_seconds).outcome == SearchOutcome::Infeasible;
    case ObstructionReport::Status::NoObstruction:
      return assignment_satisfies(report.problem, report.assignment);
    case ObstructionReport::Status::Inconclusive:
      break;
  }
  return true;
}

}  // namespace specht::snf
