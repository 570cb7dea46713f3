#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "ospchar/partition.hpp"

using namespace ospchar;

// Independent count of partitions in an L x P box: binomial(L + P, L) via
// Pascal's rule, no partition code involved.
static long box_count(int len, int part) {
  int n = len + part, k = len;
  std::vector<long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

TEST_CASE("partition construction and normalization") {
  CHECK(Partition{}.empty());
  CHECK(Partition(std::vector<int>{3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK(Partition(std::vector<int>{0, 0}).empty());
  CHECK(Partition(std::vector<int>{2, 2, 1}).length() == 3);
  CHECK(Partition(std::vector<int>{2, 2, 1}).weight() == 5);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{-1}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(std::vector<int>{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("part accessor is 1-based with zero padding") {
  Partition p(std::vector<int>{4, 2});
  CHECK(p.part(1) == 4);
  CHECK(p.part(2) == 2);
  CHECK(p.part(3) == 0);
  CHECK(p.part(100) == 0);
  CHECK_THROWS_AS(p.part(0), std::invalid_argument);
}

TEST_CASE("rectangle and tail") {
  CHECK(Partition::rectangle(3, 2).parts() == std::vector<int>{3, 3});
  CHECK(Partition::rectangle(0, 5).empty());
  CHECK(Partition::rectangle(5, 0).empty());
  CHECK(Partition(std::vector<int>{3, 2, 1}).tail().parts() == std::vector<int>{2, 1});
  CHECK(Partition{}.tail().empty());
}

TEST_CASE("enumerate_bounded lists the box in weight order") {
  SECTION("box (2,1)") {
    auto got = enumerate_bounded(2, 1);
    REQUIRE(got.size() == 3);
    CHECK(got[0].empty());
    CHECK(got[1].parts() == std::vector<int>{1});
    CHECK(got[2].parts() == std::vector<int>{1, 1});
  }
  SECTION("degenerate boxes hold only the empty partition") {
    CHECK(enumerate_bounded(0, 5).size() == 1);
    CHECK(enumerate_bounded(4, 0).size() == 1);
  }
  SECTION("counts match the binomial oracle") {
    for (int len = 0; len <= 4; ++len)
      for (int part = 0; part <= 4; ++part)
        CHECK(static_cast<long>(enumerate_bounded(len, part).size()) == box_count(len, part));
  }
  SECTION("every entry fits the box, weights ascend, entries are distinct") {
    auto got = enumerate_bounded(3, 3);
    std::set<Partition> seen;
    long prev = -1;
    for (const auto& p : got) {
      CHECK(p.length() <= 3);
      CHECK(p.part(1) <= 3);
      CHECK(p.weight() >= prev);
      prev = p.weight();
      CHECK(seen.insert(p).second);
    }
  }
}

TEST_CASE("prepend_rect") {
  Partition lam(std::vector<int>{2, 1});
  CHECK(prepend_rect(3, 2, lam).parts() == std::vector<int>{3, 3, 2, 1});
  CHECK(prepend_rect(2, 0, lam).parts() == std::vector<int>{2, 1});
  CHECK(prepend_rect(2, 3, Partition{}).parts() == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(prepend_rect(1, 1, lam), std::invalid_argument);

  SECTION("weight adds the rectangle area") {
    for (const auto& p : enumerate_bounded(3, 2))
      CHECK(prepend_rect(2, 4, p).weight() == p.weight() + 8);
  }
}

TEST_CASE("index_set is the shifted staircase") {
  SECTION("worked example") {
    auto s = index_set(Partition(std::vector<int>{2, 1}), 3);
    CHECK(s.elements() == std::vector<int>{0, 2, 4});
  }
  SECTION("empty partition gives the staircase m-1 .. 0") {
    auto s = index_set(Partition{}, 4);
    CHECK(s.elements() == std::vector<int>{0, 1, 2, 3});
  }
  SECTION("length bound enforced") {
    CHECK_THROWS_AS(index_set(Partition(std::vector<int>{1, 1}), 1), std::invalid_argument);
  }
  SECTION("round-trips through sort-descending-and-subtract") {
    for (const auto& p : enumerate_bounded(3, 3)) {
      auto s = index_set(p, 3);
      std::vector<int> desc(s.elements().rbegin(), s.elements().rend());
      std::vector<int> back;
      for (int j = 1; j <= 3; ++j) back.push_back(desc[static_cast<std::size_t>(j - 1)] - (3 - j));
      CHECK(Partition(back) == p);
    }
  }
  SECTION("distinct across the box") {
    std::set<std::vector<int>> seen;
    for (const auto& p : enumerate_bounded(3, 3)) CHECK(seen.insert(index_set(p, 3).elements()).second);
  }
}

TEST_CASE("IndexSet validates") {
  CHECK_THROWS_AS(IndexSet(std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet(std::vector<int>{-1}), std::invalid_argument);
  CHECK(IndexSet(std::vector<int>{5, 2, 0}).elements() == std::vector<int>{0, 2, 5});
}

TEST_CASE("partition rendering") {
  CHECK(Partition{}.to_string() == "[]");
  CHECK(Partition(std::vector<int>{2, 1}).to_string() == "[2,1]");
}
