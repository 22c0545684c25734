#include "qramsey/coloring.hpp"

#include "qramsey/random_gen.hpp"

#include <doctest.h>

using namespace qramsey;

namespace {
const Coloring kVal2Parity = parse_coloring(R"({"kind":"val2_parity"})");
}

TEST_CASE("val2_parity classes") {
  CHECK(*kVal2Parity(PosRational(12)) == 1);  // val2 = 2, even class
  CHECK(*kVal2Parity(PosRational(1)) == 1);
  CHECK(*kVal2Parity(PosRational(2)) == 2);
  CHECK(*kVal2Parity(PosRational(3, 8)) == 2);  // val2 = -3
}

TEST_CASE("the doubling adversary separates q from 2q") {
  RandomGen gen(11);
  for (int i = 0; i < 500; ++i) {
    PosRational q = gen.pos_rational(500);
    CHECK(*kVal2Parity(q) != *kVal2Parity(PosRational(2) * q));
  }
}

TEST_CASE("builtin specs") {
  Coloring c3 = parse_coloring(R"({"kind":"constant","r":3,"c":2})");
  RandomGen gen(3);
  for (int i = 0; i < 20; ++i) CHECK(*c3(gen.pos_rational()) == 2);

  Coloring num = parse_coloring(R"({"kind":"numerator_mod","m":3})");
  CHECK(*num(PosRational(7, 2)) == 2);  // 7 mod 3 = 1, color 2
  Coloring den = parse_coloring(R"({"kind":"denominator_mod","m":4})");
  CHECK(*den(PosRational(1, 6)) == 3);  // 6 mod 4 = 2, color 3

  Coloring prod = parse_coloring(R"({"kind":"product","parts":[{"kind":"val2_parity"},{"kind":"constant","r":3,"c":1}]})");
  CHECK(prod.range() == 6);

  CHECK_THROWS_AS(parse_coloring(R"({"kind":"no_such"})"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coloring(R"({"kind":"constant","r":2,"c":5})"), std::invalid_argument);
}

TEST_CASE("colorings are deterministic") {
  Coloring rnd = parse_coloring(R"({"kind":"random","r":4,"seed":42})");
  RandomGen gen(17);
  for (int i = 0; i < 1000; ++i) {
    PosRational q = gen.pos_rational(300);
    CHECK(*rnd(q) == *rnd(q));
    CHECK(*rnd(q) >= 1);
    CHECK(*rnd(q) <= 4);
  }
  Coloring same = parse_coloring(R"({"kind":"random","r":4,"seed":42})");
  Coloring other = parse_coloring(R"({"kind":"random","r":4,"seed":43})");
  bool differs = false;
  for (int i = 0; i < 50; ++i) {
    PosRational q = gen.pos_rational(300);
    CHECK(*rnd(q) == *same(q));
    if (*rnd(q) != *other(q)) differs = true;
  }
  CHECK(differs);
}

TEST_CASE("projection through pi_S") {
  PointColoring empty_s = project_coloring(kVal2Parity, IndexSet());
  PointX p{RatVector::parse("5,7"), PosRational(3)};
  CHECK(*empty_s(p) == *kVal2Parity(PosRational(3)));

  PointColoring s1 = project_coloring(kVal2Parity, IndexSet::of({1}));
  PointX p2{RatVector::parse("2"), PosRational(3)};
  CHECK(*s1(p2) == *kVal2Parity(PosRational(6)));  // val2(6) = 1, odd class
  CHECK(*s1(p2) == 2);
}

TEST_CASE("equal projections get equal colors on collision pairs") {
  PointColoring s1 = project_coloring(kVal2Parity, IndexSet::of({1}));
  RandomGen gen(23);
  for (int i = 0; i < 100; ++i) {
    PosRational u1 = gen.pos_rational(), x = gen.pos_rational();
    PointX a{RatVector(std::vector<PosRational>{u1}), x};
    PointX b{RatVector(std::vector<PosRational>{u1 / PosRational(2)}), PosRational(2) * x};
    CHECK(*s1(a) == *s1(b));
  }
}

TEST_CASE("auxiliary coloring refines along the dilation set") {
  PointColoring base = project_coloring(kVal2Parity, IndexSet::of({1}));

  SUBCASE("singleton identity keeps the partition") {
    PointColoring aux = auxiliary(base, {Dilation::identity()});
    CHECK(aux.range() == BigInt(2));
    RandomGen gen(31);
    for (int i = 0; i < 100; ++i) {
      PointX a{gen.rat_vector(1), gen.pos_rational()};
      PointX b{gen.rat_vector(1), gen.pos_rational()};
      CHECK((*aux(a) == *aux(b)) == (*base(a) == *base(b)));
    }
  }

  SUBCASE("constant base stays constant") {
    PointColoring c = project_coloring(parse_coloring(R"({"kind":"constant","r":2,"c":1})"), IndexSet());
    PointColoring aux = auxiliary(c, {Dilation::identity(), Dilation::uniform(PosRational(3))});
    RandomGen gen(37);
    auto first = aux(PointX{gen.rat_vector(1), gen.pos_rational()});
    for (int i = 0; i < 20; ++i)
      CHECK(*aux(PointX{gen.rat_vector(1), gen.pos_rational()}) == *first);
  }

  SUBCASE("two maps give range exactly r^2 and the definitional biconditional") {
    std::vector<Dilation> h{Dilation::identity(), Dilation(PosRational(2), PosRational(3))};
    PointColoring aux = auxiliary(base, h);
    CHECK(aux.range() == BigInt(4));
    RandomGen gen(41);
    for (int i = 0; i < 100; ++i) {
      PointX a{gen.rat_vector(1), gen.pos_rational()};
      PointX b{gen.rat_vector(1), gen.pos_rational()};
      bool all_equal = true;
      for (const auto& d : h)
        if (*base(apply(d, a)) != *base(apply(d, b))) all_equal = false;
      CHECK((*aux(a) == *aux(b)) == all_equal);
    }
  }

  SUBCASE("untagged colorings are rejected") {
    PointColoring arb = PointColoring::arbitrary(
        BigInt(2), [](const PointX&) { return std::optional<BigInt>(BigInt(1)); },
        Json{{"kind", "custom"}});
    CHECK_THROWS_AS(auxiliary(arb, {Dilation::identity()}), std::invalid_argument);
  }
}

TEST_CASE("family consistency predicate") {
  SUBCASE("single-part families are always consistent") {
    RandomGen gen(43);
    for (int i = 0; i < 30; ++i) {
      RatVector v = gen.rat_vector(3);
      CHECK(is_family_consistent(v, NFamily::parse(3, "1,2,3"), kVal2Parity));
      CHECK(is_family_consistent(v, NFamily::parse(3, "2,3"), kVal2Parity));
    }
  }
  SUBCASE("worked 2-dimensional cases") {
    CHECK(is_family_consistent(RatVector::parse("2,1"), NFamily::parse(2, "1|2"), kVal2Parity));
    CHECK_FALSE(is_family_consistent(RatVector::parse("1,1"), NFamily::parse(2, "1|2"), kVal2Parity));
  }
  SUBCASE("undefined colors read as inconsistent") {
    Coloring partial = kVal2Parity.restricted_to_height(BigInt(2));
    // phi = 3 exceeds the cutoff, so the equality is treated as false
    CHECK_FALSE(is_family_consistent(RatVector::parse("2,1"), NFamily::parse(2, "1|2"), partial));
  }
}

TEST_CASE("collection consistency with failing witness") {
  CHECK(is_X_consistent(RatVector::parse("5,9"), {}, kVal2Parity).consistent);

  auto lower2 = enumerate_lower(2);
  auto res = is_X_consistent(RatVector::parse("2,1"), lower2, kVal2Parity);
  CHECK(res.consistent);

  // at n = 2 the lower collection already is the full collection
  CHECK(enumerate_lower(2).size() == enumerate_families(2).size());
  CHECK(is_X_consistent(RatVector::parse("2,1"), enumerate_families(2), kVal2Parity).consistent);

  auto bad = is_X_consistent(RatVector::parse("1,1"), enumerate_families(2), kVal2Parity);
  CHECK_FALSE(bad.consistent);
  REQUIRE(bad.failing.has_value());
  CHECK(*bad.failing == NFamily::parse(2, "1|2"));
}

TEST_CASE("induced coloring of families") {
  SUBCASE("constant base") {
    FamilyColoring fc = family_coloring(parse_coloring(R"({"kind":"constant","r":2,"c":2})"),
                                        RatVector::parse("1,2"));
    for (const auto& f : enumerate_families(2)) CHECK(*fc(f) == 2);
  }
  SUBCASE("val2_parity at v = (1,2)") {
    FamilyColoring fc = family_coloring(kVal2Parity, RatVector::parse("1,2"));
    CHECK(*fc(NFamily::parse(2, "1|2")) == 1);  // C(3), even class
    CHECK(*fc(NFamily::parse(2, "2")) == 2);    // C(2), odd class
  }
}

TEST_CASE("structure tag soundness for projected colorings") {
  PointColoring s12 = project_coloring(kVal2Parity, IndexSet::of({1, 2}));
  RandomGen gen(47);
  for (int i = 0; i < 50; ++i) {
    RatVector u = gen.rat_vector(2);
    PosRational x = gen.pos_rational();
    PointX a{u, x};
    // swap mass between x and u_1 keeping the projection fixed
    PosRational f = gen.pos_rational();
    std::vector<PosRational> u2{u[0] * f, u[1]};
    PointX b{RatVector(u2), x / f};
    CHECK(s12.project(a) == s12.project(b));
    CHECK(*s12(a) == *s12(b));
  }
}
