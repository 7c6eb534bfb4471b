#include <bipolar_lab/counting.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace bipolar_lab;

TEST_CASE("closed-form class counts at pinned values") {
  CHECK(count_T(2, 2) == 5);
  CHECK(count_T(1, 3) == 5);
  CHECK(count_T(0, 2) == 1);
  CHECK(count_T(1, 2) == 1);
  CHECK(count_T(0, 5) == 5);
  CHECK(count_T(1, 4) == 21);
  CHECK(count_S(1, 3) == 1);
  CHECK(count_S(2, 3) == 3);
  CHECK(count_S(0, 5) == 5);
  CHECK(count_B(0, 2, 3) == 3);
  CHECK(count_B(0, 1, 2) == 1);
}

TEST_CASE("count_B(0,1,j) = 1 for every j (the cycle dissection)") {
  for (long j = 2; j <= 20; ++j) CHECK(count_B(0, 1, j) == 1);
}

TEST_CASE("count_B(k,1,j) = 0 for k >= 1 (a single internal face forces a cycle)") {
  for (long k = 1; k <= 6; ++k)
    for (long j = 2; j <= 8; ++j) CHECK(count_B(k, 1, j) == 0);
}

TEST_CASE("Catalan base cases: T_{0,j} = S_{0,j} = Cat_{j-2}") {
  for (long j = 3; j <= 14; ++j) {
    CHECK(count_T(0, j) == catalan(j - 2));
    CHECK(count_S(0, j) == catalan(j - 2));
  }
}

TEST_CASE("Narayana base cases: B_{0,l,j} = Nar_{l,j-1}") {
  for (long l = 1; l <= 9; ++l)
    for (long j = 2; j <= 9; ++j) CHECK(count_B(0, l, j) == narayana(l, j - 1));
}

TEST_CASE("pinned identity instances") {
  // 2 * 5 = (1/3) * 6 * 5
  CHECK(identity_holds(Identity::QuasiTriGrowth, 2, 2));
  // 4 Cat_3 = 2 * 5 * Cat_2
  CHECK(identity_holds(Identity::RemyCatalan, 3));
  CHECK(identity_holds(Identity::NarayanaExchange, 2, 2));
  CHECK(narayana(3, 2) == 6);
  CHECK(narayana(2, 3) == 6);
}

TEST_CASE("growth identities hold exactly on the grid up to 20") {
  for (long k = 1; k <= 20; ++k)
    for (long j = 2; j <= 20; ++j) CHECK(identity_holds(Identity::QuasiTriGrowth, k, j));
  for (long k = 1; k <= 20; ++k)
    for (long l = 1; l <= 20; ++l)
      for (long j = 2; j <= 20; ++j) CHECK(identity_holds(Identity::BipolarGrowth, k, l, j));
  for (long k = 1; k <= 20; ++k)
    for (long j = 3; j <= 20; ++j) CHECK(identity_holds(Identity::SchnyderGrowth, k, j));
  for (long n = 1; n <= 20; ++n) CHECK(identity_holds(Identity::RemyCatalan, n));
  for (long a = 1; a <= 20; ++a)
    for (long b = 1; b <= 20; ++b) CHECK(identity_holds(Identity::NarayanaExchange, a, b));
}

TEST_CASE("hook lengths and contents on pinned shapes") {
  CHECK(hook_length_count(YoungShape({2, 2, 2})) == 5);
  CHECK(hook_length_count(YoungShape({})) == 1);
  CHECK(hook_content_count(YoungShape({1, 1}), 3) == 3);
  CHECK(syt_bruteforce(YoungShape({2, 2, 2})) == 5);
  CHECK(syt_bruteforce(YoungShape({})) == 1);
}

TEST_CASE("hook length formula matches the class counts") {
  for (long k = 0; k <= 8; ++k)
    for (long j = 2; j <= 10 - k; ++j)
      CHECK(hook_length_count(shape_for_class(k, j)) == count_T(k, j));
}

TEST_CASE("hook content formula matches the bipolar counts") {
  for (long k = 0; k <= 8; ++k)
    for (long j = 2; j <= 10 - k; ++j)
      for (long l = 1; l <= 8; ++l)
        CHECK(hook_content_count(shape_for_class(k, j), l + 1) == count_B(k, l, j));
}

TEST_CASE("standard tableau brute force agrees with the hook length formula") {
  // all partitions with at most 12 cells
  std::vector<std::vector<long>> shapes;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long left, long maxpart) {
    if (left == 0) {
      shapes.push_back(cur);
      return;
    }
    for (long p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  for (long n = 1; n <= 12; ++n) rec(n, n);
  for (const auto& rows : shapes) {
    YoungShape s{rows};
    CHECK(syt_bruteforce(s) == hook_length_count(s));
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(count_T(-1, 3), MapError);
  CHECK_THROWS_AS(count_S(0, 2), MapError);
  CHECK_THROWS_AS(count_B(0, 0, 3), MapError);
  CHECK_THROWS_AS(YoungShape({1, 2}), MapError);
}
