#include "qramsey/shift_engine.hpp"

#include "qramsey/random_gen.hpp"

#include <doctest.h>

using namespace qramsey;

namespace {

const Coloring kVal2Parity = parse_coloring(R"({"kind":"val2_parity"})");

RatioIndex single_omega() { return RatioIndex({RatioPair{IndexSet::of({1}), IndexSet()}}); }

}  // namespace

TEST_CASE("make_poly shapes") {
  RatioIndex omega = single_omega();
  RatioWeights xi = RatioWeights(omega).set(omega[0], NonnegRational(1));

  GoodPolyVector mono = make_poly(xi, IndexSet());
  CHECK(mono.eval(5)[0] == NonnegRational(5));  // exponent |A|-|B|+|S| = 1

  RatioIndex omega2({RatioPair{IndexSet::of({2}), IndexSet::of({3})}});
  RatioWeights xi2 = RatioWeights(omega2).set(omega2[0], NonnegRational(2));
  GoodPolyVector p2 = make_poly(xi2, IndexSet::of({1}));
  CHECK(p2.eval(3)[0] == NonnegRational(6));  // exponent 1 - 1 + 1 = 1, coefficient 2

  CHECK(make_poly(RatioWeights(omega), IndexSet()).is_zero());

  RatioIndex bad({RatioPair{IndexSet::of({1}), IndexSet::of({2, 3})}});
  RatioWeights w = RatioWeights(bad).set(bad[0], NonnegRational(1));
  CHECK_THROWS_AS(make_poly(w, IndexSet()), std::invalid_argument);
  CHECK_THROWS_AS(ShiftTask(IndexSet(), bad, {}), std::invalid_argument);
}

TEST_CASE("phi homomorphism on generators") {
  RatioIndex omega = single_omega();
  PhiHom hom(RatVector::parse("2"), IndexSet(), omega);
  CHECK(hom.eval(LatticePoint{BigInt(1)}) == NonnegRational(2));
  CHECK(hom.eval(LatticePoint{BigInt(3)}) == NonnegRational(6));

  RatioIndex om2({RatioPair{IndexSet::of({2}), IndexSet()}});
  PhiHom hom2(RatVector::parse("2,3"), IndexSet::of({1}), om2);
  CHECK(hom2.eval(LatticePoint{BigInt(1)}) == NonnegRational(6));
}

TEST_CASE("homomorphism identity, worked instance") {
  // n=2, S = {}, Omega = {({1},{})}, u = (2), x = 1, delta = 3, xi = 1, d = 5
  RatioIndex omega = single_omega();
  RatVector u = RatVector::parse("2");
  RatioWeights delta = RatioWeights(omega).set(omega[0], NonnegRational(3));
  RatioWeights xi = RatioWeights(omega).set(omega[0], NonnegRational(1));
  CHECK(verify_homomorph_identity(u, PosRational(1), 5, delta, xi, IndexSet()));

  // both sides evaluate to 17
  PosRational lhs = (PosRational(1) + NonnegRational(3) * PosRational(2)) +
                    NonnegRational(1) * (PosRational(5) * PosRational(2));
  CHECK(lhs == PosRational(17));

  // degenerate: xi = 0, d = 1
  RatioWeights zero(omega);
  CHECK(verify_homomorph_identity(u, PosRational(1), 1, delta, zero, IndexSet()));
}

TEST_CASE("homomorphism identity on random instances") {
  RandomGen gen(61);
  for (int i = 0; i < 300; ++i) {
    int n = static_cast<int>(gen.int_in(2, 5));
    IndexSet s = gen.index_set(n, true);
    std::vector<RatioPair> pairs;
    while (pairs.size() < 2) {
      RatioPair p = gen.ratio_pair(n);
      if (p.a.size() + s.size() > p.b.size()) pairs.push_back(p);
    }
    RatioIndex omega(std::move(pairs));
    std::vector<NonnegRational> de;
    for (std::size_t t = 0; t < omega.size(); ++t) de.emplace_back(gen.int_in(0, 4));
    CHECK(verify_homomorph_identity(gen.rat_vector(static_cast<std::size_t>(n)),
                                    gen.pos_rational(), gen.int_in(1, 5),
                                    RatioWeights(omega, de), gen.weights(omega), s));
  }
}

TEST_CASE("pullback colorings") {
  RatioIndex omega = single_omega();

  SUBCASE("constant base pulls back constant") {
    auto c = pullback(parse_coloring(R"({"kind":"constant","r":2,"c":1})"), RatVector::parse("3"),
                      PosRational(5), IndexSet(), omega);
    for (long z = 0; z < 10; ++z) CHECK(*c(LatticePoint{BigInt(z)}) == BigInt(1));
  }

  SUBCASE("val2_parity worked values") {
    auto c = pullback(kVal2Parity, RatVector::parse("1"), PosRational(1), IndexSet(), omega);
    CHECK(*c(LatticePoint{BigInt(0)}) == BigInt(*kVal2Parity(PosRational(1))));
    CHECK(*c(LatticePoint{BigInt(1)}) == BigInt(*kVal2Parity(PosRational(2))));
  }
}

TEST_CASE("general_term_shift on the worked val2 instance") {
  RatioIndex omega = single_omega();
  RatioWeights xi = RatioWeights(omega).set(omega[0], NonnegRational(1));
  ShiftTask task(IndexSet(), omega, {xi});
  SearchBudget budget;
  auto res = general_term_shift(task, kVal2Parity, RatVector::parse("1"), PosRational(1), budget);
  REQUIRE(res.has_value());
  CHECK(res->d == 1);
  CHECK(res->delta.at(omega[0]) == NonnegRational(2));
  CHECK(res->x_prime == PosRational(3));
  CHECK(res->u_prime == RatVector::parse("1"));
  // C(3 + 1) = C(3): valuations 2 and 0, both even
  CHECK(*kVal2Parity(PosRational(4)) == *kVal2Parity(PosRational(3)));

  // S empty means no division: x' = x + delta . rho_u
  CHECK(res->x_prime == PosRational(1) + res->delta.dot(ratio_vector(RatVector::parse("1"), omega)));

  // the result as a perturbation reproduces (u', x')
  PointX moved = apply(res->as_perturbation(), PointX{RatVector::parse("1"), PosRational(1)});
  CHECK(moved.u == res->u_prime);
  CHECK(moved.x == res->x_prime);
}

TEST_CASE("constant coloring accepts the identity immediately") {
  RatioIndex omega = single_omega();
  RatioWeights xi = RatioWeights(omega).set(omega[0], NonnegRational(1));
  ShiftTask task(IndexSet(), omega, {xi});
  SearchBudget budget;
  auto res = general_term_shift(task, parse_coloring(R"({"kind":"constant","r":2,"c":1})"),
                                RatVector::parse("7"), PosRational(3), budget);
  REQUIRE(res.has_value());
  CHECK(res->d == 1);
  CHECK(res->delta.is_zero());
  CHECK(res->x_prime == PosRational(3));
}

TEST_CASE("enlarging Xi never invalidates the smaller result") {
  RatioIndex omega = single_omega();
  RatioWeights xi1 = RatioWeights(omega).set(omega[0], NonnegRational(1));
  RatioWeights xi2 = RatioWeights(omega).set(omega[0], NonnegRational(2));
  SearchBudget budget;

  ShiftTask big(IndexSet(), omega, {xi1, xi2});
  auto res = general_term_shift(big, kVal2Parity, RatVector::parse("1"), PosRational(1), budget);
  REQUIRE(res.has_value());
  // the result still verifies for the subset {xi1}
  CHECK(verify_shift_postcondition(widen(kVal2Parity), IndexSet(), res->u_prime, res->x_prime, xi1));
}

TEST_CASE("nonempty S divides exactly and keeps x' in Q_+") {
  RatioIndex omega({RatioPair{IndexSet::of({2}), IndexSet()}});
  RatioWeights xi = RatioWeights(omega).set(omega[0], NonnegRational(1));
  ShiftTask task(IndexSet::of({1}), omega, {xi});
  SearchBudget budget;
  auto res = general_term_shift(task, kVal2Parity, RatVector::parse("2,3"), PosRational(5), budget);
  REQUIRE(res.has_value());
  // postcondition holds through the wide verifier, independent of the search
  CHECK(verify_shift_postcondition(widen(kVal2Parity), IndexSet::of({1}), res->u_prime,
                                   res->x_prime, xi));
  CHECK(res->x_prime ==
        (PosRational(5) + res->delta.dot(ratio_vector(RatVector::parse("2,3"), omega))) /
            PosRational(res->d));
}
