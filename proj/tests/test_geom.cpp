#include <doctest.h>

#include "rectcolor/errors.hpp"
#include "rectcolor/geom.hpp"
#include "support.hpp"

using namespace rectcolor;
using support::rect;

TEST_CASE("parse_scalar accepts integers, fractions and decimals") {
  CHECK(parse_scalar("12") == 12);
  CHECK(parse_scalar("3/7") == Scalar(3, 7));
  CHECK(parse_scalar("6/14") == Scalar(3, 7));
  CHECK(parse_scalar("0.25") == Scalar(1, 4));
  CHECK(parse_scalar("-1.5") == Scalar(-3, 2));
  CHECK(parse_scalar("+2") == 2);
  CHECK_THROWS_AS(parse_scalar("3/-7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1.2.3"), std::invalid_argument);
}

TEST_CASE("to_string is canonical and round-trips") {
  CHECK(to_string(parse_scalar("10/4")) == "5/2");
  CHECK(to_string(parse_scalar("-6/3")) == "-2");
  CHECK(to_string(parse_scalar("2.50")) == "5/2");
  for (const char* s : {"0", "7", "-3/11", "123456789012345678901234567891/2"})
    CHECK(to_string(parse_scalar(s)) == std::string(s));
}

TEST_CASE("classify covers the four kinds") {
  const Rect wide = rect("w", 0, 4, 10, 6), tall = rect("t", 4, 0, 6, 10);
  CHECK(classify(wide, tall).kind == IntersectionKind::Crossing);
  CHECK(classify(wide, tall).vertical);

  const Rect a = rect("a", 0, 0, 2, 2), b = rect("b", 1, 1, 3, 3);
  CHECK(classify(a, b).kind == IntersectionKind::Corner);
  CHECK_FALSE(classify(a, b).vertical);

  const Rect outer = rect("o", 0, 0, 10, 10), inner = rect("i", 2, 2, 3, 3);
  CHECK(classify(outer, inner).kind == IntersectionKind::Containment);
  CHECK(classify(inner, outer).kind == IntersectionKind::Containment);

  const Rect far = rect("f", 20, 20, 21, 21);
  CHECK(classify(a, far).kind == IntersectionKind::Disjoint);
  CHECK_FALSE(intersects(a, far));
}

TEST_CASE("closed rectangles that touch intersect") {
  CHECK(intersects(rect("a", 0, 0, 1, 1), rect("b", 1, 0, 2, 1)));
  CHECK(intersects(rect("a", 0, 0, 1, 1), rect("b", 1, 1, 2, 2)));
  CHECK(contains(rect("a", 0, 0, 1, 1), Point{1, 1}));
  CHECK_FALSE(contains(rect("a", 0, 0, 1, 1), Point{Scalar(1), Scalar(3, 2)}));
}

TEST_CASE("Instance rejects bad input") {
  CHECK_THROWS_AS(Instance({rect("a", 0, 0, 1, 1), rect("a", 2, 2, 3, 3)}), ValidationError);
  Rect flat = rect("f", 0, 0, 1, 1);
  flat.y_hi = 0;
  CHECK_THROWS_AS(Instance({flat}), ValidationError);
}

TEST_CASE("rank space preserves adjacency and classify") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = support::random_family(seed, 25, 8);
    for (int i = 0; i < inst.size(); ++i)
      for (int j = 0; j < inst.size(); ++j) {
        if (i == j) continue;
        CHECK(inst.adjacent(i, j) == support::direct_intersect(inst.rect(i), inst.rect(j)));
        CHECK(crosses(inst.grid(i), inst.grid(j)) ==
              (classify(inst.rect(i), inst.rect(j)).kind == IntersectionKind::Crossing));
      }
  }
}

TEST_CASE("vertical and crossing sets") {
  // Tall t spans w vertically; w does not span t. c sits at w's corner.
  const Instance inst({rect("w", 0, 4, 10, 6), rect("t", 4, 0, 6, 10), rect("c", 9, 5, 12, 12)});
  CHECK(vertical_set(inst, 0) == std::vector<int>{1});
  CHECK(crossing_set(inst, 0) == std::vector<int>{1});
  CHECK(vertical_set(inst, 1).empty());
  CHECK(vertical_set(inst, 2).empty());
}

TEST_CASE("perturb stretches by multiples of the gap fraction") {
  const Instance inst({rect("a", 0, 0, 2, 1), rect("b", 3, 0, 5, 1)});
  CHECK_FALSE(inst.heights_distinct());
  const Instance p = perturb(inst);
  // gap 1, n = 2: delta = 1/24
  CHECK(p.rect(0).y_lo == Scalar(-1, 24));
  CHECK(p.rect(0).y_hi == Scalar(25, 24));
  CHECK(p.rect(1).y_lo == Scalar(-1, 12));
  CHECK(p.rect(1).y_hi == Scalar(13, 12));
  CHECK(p.heights_distinct());
  CHECK(p.perturbed());
}

TEST_CASE("perturb keeps ids, x-coordinates and the intersection graph") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const Instance inst = support::random_family(seed, 30, 6);
    const Instance p = perturb(inst);
    REQUIRE(p.size() == inst.size());
    CHECK(p.heights_distinct());
    std::vector<Scalar> ys;
    for (int i = 0; i < p.size(); ++i) {
      CHECK(p.rect(i).id == inst.rect(i).id);
      CHECK(p.rect(i).x_lo == inst.rect(i).x_lo);
      CHECK(p.rect(i).x_hi == inst.rect(i).x_hi);
      ys.push_back(p.rect(i).y_lo);
      ys.push_back(p.rect(i).y_hi);
      for (int j = 0; j < p.size(); ++j) CHECK(p.adjacent(i, j) == inst.adjacent(i, j));
    }
    std::sort(ys.begin(), ys.end());
    CHECK(std::adjacent_find(ys.begin(), ys.end()) == ys.end());
  }
}

TEST_CASE("height order is decreasing with index tie-break") {
  const Instance inst({rect("a", 0, 0, 1, 2), rect("b", 0, 0, 1, 3), rect("c", 5, 0, 6, 2)});
  CHECK(inst.height_order() == std::vector<int>{1, 0, 2});
  CHECK(inst.height_rank(2) == 2);
  CHECK_THROWS_AS(inst.require_distinct_heights("test"), PreconditionViolated);
}
