#include <gtest/gtest.h>

#include "specht/gram.hpp"
#include "specht/obstruction.hpp"
#include "specht/serialize.hpp"
#include "specht/smith.hpp"

namespace {

using namespace specht::snf;
using Status = ObstructionReport::Status;
using specht::qlaurent::cyclotomic;
using specht::tableaux::Partition;

const CoeffRing Z = CoeffRing::integers();
const CoeffRing Q = CoeffRing::rationals();

LaurentPoly one(CoeffRing ring) { return LaurentPoly::constant(1, ring); }
LaurentPoly phi(int m, CoeffRing ring = Q) { return cyclotomic(m).to_ring(ring); }
LaurentPoly zc(long v) { return LaurentPoly::constant(v, Z); }

LaurentPoly power(const LaurentPoly& f, unsigned e) { return f.pow(e); }

TEST(Q1Obstruction, MatchingValuesLeaveNoObstruction) {
  const EDList ed_q{Q, {one(Q), phi(2)}};
  const EDList ed_z{Z, {zc(1), zc(2)}};
  const auto r = q1_obstruction(ed_q, ed_z, 2);
  EXPECT_EQ(r.status, Status::NoObstruction) << r.reason;
  EXPECT_TRUE(recheck_witness(r));
  EXPECT_EQ(r.assignment.size(), 2u);
}

TEST(Q1Obstruction, MissingPContentIsObstructed) {
  const EDList ed_q{Q, {one(Q), phi(2)}};
  const EDList ed_z{Z, {zc(1), zc(1)}};
  const auto r = q1_obstruction(ed_q, ed_z, 2);
  EXPECT_EQ(r.status, Status::Obstructed) << r.reason;
  EXPECT_TRUE(recheck_witness(r));
}

TEST(Q1Obstruction, ExtraPContentIsAllowed) {
  const EDList ed_q{Q, {one(Q), phi(3)}};
  const EDList ed_z{Z, {zc(1), zc(9)}};
  EXPECT_EQ(q1_obstruction(ed_q, ed_z, 3).status, Status::NoObstruction);
}

TEST(Q1Obstruction, InconclusiveCases) {
  const EDList with_phi1{Q, {one(Q), phi(1)}};
  EXPECT_EQ(q1_obstruction(with_phi1, EDList{Z, {zc(1), zc(1)}}, 2).status, Status::Inconclusive);
  const EDList not_cyclo{Q, {one(Q), LaurentPoly::from_terms({{0, 2}, {1, 1}}, Q)}};
  EXPECT_EQ(q1_obstruction(not_cyclo, EDList{Z, {zc(1), zc(3)}}, 3).status, Status::Inconclusive);
  EXPECT_THROW(q1_obstruction(with_phi1, EDList{Z, {zc(1)}}, 2), std::invalid_argument);
  EXPECT_THROW(q1_obstruction(with_phi1, EDList{Z, {zc(1), zc(1)}}, 4), std::invalid_argument);
}

TEST(NondiagObstruction, ReductionsOfPhi2AndPhi6) {
  const auto f3 = CoeffRing::prime_field(3);
  const LaurentPoly l = LaurentPoly::from_terms({{0, 1}, {1, 1}}, f3);
  const EDList ed_q{Q, {one(Q), phi(2), phi(2) * phi(6)}};
  // Mod 3 both Phi_2 and Phi_6 are powers of q + 1, with weights 1 and 2.
  const auto feasible = nondiag_obstruction(ed_q, EDList{f3, {l, l, power(l, 2)}}, 3);
  EXPECT_EQ(feasible.status, Status::NoObstruction) << feasible.reason;
  EXPECT_TRUE(recheck_witness(feasible));
  const auto blocked = nondiag_obstruction(ed_q, EDList{f3, {one(f3), power(l, 2), power(l, 2)}}, 3);
  EXPECT_EQ(blocked.status, Status::Obstructed) << blocked.reason;
  EXPECT_TRUE(recheck_witness(blocked));
  EXPECT_THROW(nondiag_obstruction(ed_q, EDList{CoeffRing::prime_field(2), {l, l, l}}, 3), std::invalid_argument);
}

TEST(Obstruction, HookShapeHasNone) {
  const auto g = specht::gram::gram_matrix(Partition({3, 1})).entries;
  SmithSession s(g);
  for (std::uint32_t p : {2u, 3u}) {
    const auto nd = nondiag_obstruction(s.over_q(), s.over(CoeffRing::prime_field(p)), p);
    EXPECT_EQ(nd.status, Status::NoObstruction) << "p=" << p << " " << nd.reason;
    EXPECT_TRUE(recheck_witness(nd));
    const auto q1 = q1_obstruction(s.over_q(), s.over_z(), p);
    EXPECT_EQ(q1.status, Status::NoObstruction) << "p=" << p << " " << q1.reason;
    EXPECT_TRUE(recheck_witness(q1));
  }
}

TEST(ValuationSearch, SmallProblems) {
  ValuationProblem pr;
  pr.rows = 2;
  pr.f_labels = {"a", "b"};
  pr.f_counts = {{{0, 1}, {1, 1}}, {{0, 1}, {1, 1}}};
  pr.g_labels = {"a+b"};
  pr.weights = {{1, 1}};
  pr.g_counts = {{{1, 2}}};
  const auto ok = solve_valuation_problem(pr, 5.0);
  ASSERT_EQ(ok.outcome, SearchOutcome::Feasible);
  EXPECT_TRUE(assignment_satisfies(pr, ok.assignment));
  EXPECT_FALSE(assignment_satisfies(pr, {{1, 1}, {0, 0}}));

  pr.g_counts = {{{1, 1}, {2, 1}}};
  EXPECT_EQ(solve_valuation_problem(pr, 5.0).outcome, SearchOutcome::Infeasible);
  pr.dominance = true;
  EXPECT_EQ(solve_valuation_problem(pr, 5.0).outcome, SearchOutcome::Feasible);

  pr.weights = {{1}};
  EXPECT_THROW(solve_valuation_problem(pr, 5.0), std::invalid_argument);
}

TEST(ObstructionReport, Json) {
  const auto r = q1_obstruction(EDList{Q, {one(Q), phi(2)}}, EDList{Z, {zc(1), zc(1)}}, 2);
  const auto j = specht::serialize::to_json(r);
  EXPECT_EQ(j.at("status"), "Obstructed");
  EXPECT_EQ(j.at("p"), 2);
  EXPECT_EQ(j.at("rows"), 2);
  EXPECT_TRUE(j.at("dominance").get<bool>());
}

}  // namespace
