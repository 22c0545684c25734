#include "qramsey/family.hpp"

#include "qramsey/random_gen.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace qramsey;

namespace {

NFamily fam(int ground, const std::string& text) { return NFamily::parse(ground, text); }

// Independent enumerator: every map [n] -> {0..n} (0 = unused) induces a
// family from its nonempty label classes; count the distinct outcomes.
std::size_t label_map_family_count(int n) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<int> labels(static_cast<std::size_t>(n), 0);
  while (true) {
    std::map<int, std::uint64_t> blocks;
    for (int i = 0; i < n; ++i)
      if (labels[static_cast<std::size_t>(i)] > 0)
        blocks[labels[static_cast<std::size_t>(i)]] |= 1ULL << i;
    if (!blocks.empty()) {
      std::vector<std::uint64_t> key;
      for (const auto& [label, mask] : blocks) key.push_back(mask);
      std::sort(key.begin(), key.end());
      seen.insert(key);
    }
    int i = n - 1;
    while (i >= 0 && labels[static_cast<std::size_t>(i)] == n) {
      labels[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++labels[static_cast<std::size_t>(i)];
  }
  return seen.size();
}

}  // namespace

TEST_CASE("phi sums products over the parts") {
  CHECK(phi(fam(2, "1,2"), RatVector::parse("2,3")) == PosRational(6));
  CHECK(phi(fam(3, "1|2,3"), RatVector::parse("1,2,3")) == PosRational(7));
  RandomGen gen(5);
  for (int i = 0; i < 50; ++i) {
    PosRational x = gen.pos_rational();
    RatVector v(std::vector<PosRational>{x, x});
    CHECK(phi(fam(2, "1|2"), v) == x + x);
  }
  CHECK_THROWS_AS(phi(fam(3, "1|2,3"), RatVector::parse("1,2")), std::invalid_argument);
}

TEST_CASE("leading part holds the maximum element") {
  CHECK(fam(3, "1|2,3").leading_part() == IndexSet::of({2, 3}));
  CHECK(fam(2, "1,2").leading_part() == IndexSet::of({1, 2}));
  CHECK(fam(3, "3|1,2").leading_part() == IndexSet::of({3}));
}

TEST_CASE("composition takes unions along the outer family") {
  std::vector<IndexSet> inner{IndexSet::of({1}), IndexSet::of({2, 3})};
  CHECK(compose(fam(2, "1,2"), inner, 3) == fam(3, "1,2,3"));
  CHECK(compose(fam(2, "1|2"), inner, 3) == fam(3, "1|2,3"));
  CHECK(compose(fam(2, "2"), {IndexSet::of({1}), IndexSet::of({3, 4})}, 4) == fam(4, "3,4"));
  std::vector<IndexSet> overlapping{IndexSet::of({1, 2}), IndexSet::of({2, 3})};
  CHECK_THROWS_AS(compose(fam(2, "1|2"), overlapping, 3), std::invalid_argument);
}

TEST_CASE("extreme and lower classification") {
  CHECK(fam(2, "1|2").is_extreme());
  CHECK(fam(3, "1,2,3").is_extreme());
  CHECK_FALSE(fam(3, "1|2,3").is_extreme());

  CHECK(fam(2, "1|2").is_lower());
  CHECK(fam(3, "3|1,2").is_lower());
  CHECK_FALSE(fam(3, "1|2,3").is_lower());
}

TEST_CASE("new families contain the ground element in the leading part") {
  CHECK(fam(2, "1|2").is_new());
  CHECK(NFamily(2, {IndexSet::of({2}), IndexSet::of({1})}).is_new());  // set semantics
  CHECK_FALSE(fam(2, "1").is_new());
}

TEST_CASE("newp extracts the generator pairs") {
  RatioIndex one = newp({fam(2, "1|2")});
  REQUIRE(one.size() == 1);
  CHECK(one[0] == RatioPair{IndexSet::of({1}), IndexSet()});

  RatioIndex two = newp({fam(3, "1|2,3")});
  REQUIRE(two.size() == 1);
  CHECK(two[0] == RatioPair{IndexSet::of({1}), IndexSet::of({2})});

  CHECK(newp({fam(2, "1,2")}).empty());
  CHECK_THROWS_AS(newp({fam(2, "1")}), std::invalid_argument);
}

TEST_CASE("newp pairs avoid the ground element and stay disjoint") {
  for (int n = 2; n <= 4; ++n) {
    auto pairs = newp(enumerate_all_new(n)).pairs();
    for (const auto& p : pairs) {
      CHECK(p.a.disjoint_with(p.b));
      CHECK_FALSE(p.a.contains(n));
      CHECK_FALSE(p.b.contains(n));
      CHECK_FALSE(p.a.empty());
    }
  }
}

TEST_CASE("enumeration counts match the independent label-map enumerator") {
  CHECK(enumerate_families(1).size() == 1);
  CHECK(enumerate_families(2).size() == 4);
  for (int n = 1; n <= 4; ++n)
    CHECK(enumerate_families(n).size() == label_map_family_count(n));
  // counts grow monotonically
  for (int n = 1; n < 4; ++n)
    CHECK(enumerate_families(n).size() < enumerate_families(n + 1).size());
}

TEST_CASE("enumerate_families(2) lists the four 2-families exactly once") {
  auto fams = enumerate_families(2);
  std::set<std::string> texts;
  for (const auto& f : fams) texts.insert(f.str());
  CHECK(texts == std::set<std::string>{"1", "2", "1,2", "1|2"});
}

TEST_CASE("every 2-family is extreme and lower") {
  CHECK(enumerate_extreme(2).size() == 4);
  CHECK(enumerate_lower(2).size() == 4);
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_families(7), std::invalid_argument);
  CHECK_NOTHROW(enumerate_families(7, 8));
}

TEST_CASE("family text literal round trip") {
  for (const auto& f : enumerate_families(4)) CHECK(NFamily::parse(4, f.str()) == f);
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(NFamily(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(NFamily(2, {IndexSet()}), std::invalid_argument);
  CHECK_THROWS_AS(NFamily(2, {IndexSet::of({3})}), std::invalid_argument);
  CHECK_THROWS_AS(NFamily(3, {IndexSet::of({1, 2}), IndexSet::of({2, 3})}), std::invalid_argument);
}
