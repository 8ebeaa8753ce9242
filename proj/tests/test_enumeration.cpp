#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "numsemi/enumeration.hpp"
#include "numsemi/families.hpp"
#include "numsemi/gluing.hpp"
#include "numsemi/presentation.hpp"
#include "numsemi/version.hpp"
#include "support/bruteforce.hpp"

using namespace numsemi;

namespace {

using Lists = std::vector<std::vector<Int>>;

Lists lists_of(Enumerator& e, FamilyKind family, Int f) { return e.generator_lists(family, f); }

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("worked sets with Frobenius number 11 and 7") {
  Enumerator e;
  CHECK(lists_of(e, FamilyKind::CompleteIntersection, 11) ==
        Lists{{2, 13}, {3, 7}, {4, 5}, {4, 6, 9}});
  CHECK(lists_of(e, FamilyKind::CompleteIntersection, 7) == Lists{{2, 9}, {3, 5}, {4, 5, 6}});
}

TEST_CASE("edge inputs") {
  Enumerator e;
  CHECK(lists_of(e, FamilyKind::CompleteIntersection, -1) == Lists{{1}});
  CHECK(lists_of(e, FamilyKind::Free, -1) == Lists{{1}});
  CHECK(lists_of(e, FamilyKind::CompleteIntersection, 4).empty());
  CHECK(lists_of(e, FamilyKind::Planar, 0).empty());
  CHECK_THROWS_AS(e.count(FamilyKind::CompleteIntersection, -3), InvalidFrobeniusError);
}

TEST_CASE("planar count at Frobenius 23 (genus 12)") {
  Enumerator e;
  CHECK(e.count(FamilyKind::Planar, 23) == 5);
}

TEST_CASE("enumerate_by_genus") {
  Enumerator e;
  CHECK(e.enumerate_by_genus(FamilyKind::CompleteIntersection, 6).size() == 4);
  const auto frees = e.enumerate_by_genus(FamilyKind::Free, 0);
  REQUIRE(frees.size() == 1);
  CHECK(frees[0].generators() == std::vector<Int>{1});
  CHECK(e.enumerate_by_genus(FamilyKind::Telescopic, 4).size() == 2);
  CHECK_THROWS_AS(e.enumerate_by_genus(FamilyKind::Free, -1), DomainError);
}

TEST_CASE("count_table spot rows and ordering invariant") {
  Enumerator e;
  const auto rows = e.count_table(0, 20);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0] == CountRow{0, 1, 1, 1, 1});
  CHECK(rows[12] == CountRow{12, 11, 11, 8, 5});
  for (const auto& row : rows) {
    CHECK(row.pc <= row.tl);
    CHECK(row.tl <= row.fr);
    CHECK(row.fr <= row.ci);
  }
  CHECK_THROWS_AS(e.count_table(5, 4), DomainError);
}

TEST_CASE("embedding dimension histogram") {
  Enumerator e;
  const auto hist = e.embdim_histogram(FamilyKind::CompleteIntersection, 0, 2);
  CHECK(hist.at(1) == 1);  // N alone
  CHECK(hist.at(2) == 2);  // <2,3> and <2,5>
  CHECK(hist.size() == 2);
}

TEST_CASE("family inclusions as sets") {
  Enumerator e;
  for (Int f = -1; f <= 31; f += (f == -1 ? 2 : 2)) {
    const auto ci = lists_of(e, FamilyKind::CompleteIntersection, f);
    const auto fr = lists_of(e, FamilyKind::Free, f);
    const auto tl = lists_of(e, FamilyKind::Telescopic, f);
    const auto pc = lists_of(e, FamilyKind::Planar, f);
    CHECK(std::includes(ci.begin(), ci.end(), fr.begin(), fr.end()));
    CHECK(std::includes(fr.begin(), fr.end(), tl.begin(), tl.end()));
    CHECK(std::includes(tl.begin(), tl.end(), pc.begin(), pc.end()));
  }
}

TEST_CASE("every returned semigroup has the requested Frobenius number and passes its predicate") {
  Enumerator e;
  for (Int f : {-1, 1, 9, 15, 21, 27}) {
    for (const auto& s : e.enumerate(FamilyKind::CompleteIntersection, f)) {
      CHECK(s.frobenius() == f);
      CHECK(is_complete_intersection(s));
    }
    for (const auto& s : e.enumerate(FamilyKind::Free, f)) CHECK(is_free(s));
    for (const auto& s : e.enumerate(FamilyKind::Telescopic, f)) CHECK(is_telescopic(s));
    for (const auto& s : e.enumerate(FamilyKind::Planar, f)) CHECK(is_planar(s));
  }
}

TEST_CASE("results are duplicate-free and sorted") {
  Enumerator e;
  for (Int f : {11, 19, 25, 31}) {
    for (FamilyKind family : {FamilyKind::CompleteIntersection, FamilyKind::Free,
                              FamilyKind::Telescopic, FamilyKind::Planar}) {
      const auto lists = lists_of(e, family, f);
      for (std::size_t i = 0; i + 1 < lists.size(); ++i) CHECK(lists[i] < lists[i + 1]);
    }
  }
}

TEST_CASE("memoized and non-memoized runs agree") {
  EnumerationOptions no_memo;
  no_memo.memoize = false;
  Enumerator plain;
  Enumerator direct(no_memo);
  for (Int f = -1; f <= 15; f += 2) {
    for (FamilyKind family : {FamilyKind::CompleteIntersection, FamilyKind::Free,
                              FamilyKind::Telescopic, FamilyKind::Planar}) {
      CHECK(lists_of(plain, family, f) == lists_of(direct, family, f));
    }
  }
}

TEST_CASE("pruning modes produce identical sets") {
  EnumerationOptions none;
  none.pruning = Pruning::None;
  Enumerator pruned;
  Enumerator unpruned(none);
  for (Int f = 1; f <= 31; f += 2) {
    for (FamilyKind family : {FamilyKind::CompleteIntersection, FamilyKind::Free,
                              FamilyKind::Telescopic, FamilyKind::Planar}) {
      CHECK(lists_of(pruned, family, f) == lists_of(unpruned, family, f));
    }
  }
  // the bounds must make the search strictly cheaper at this size
  CHECK(pruned.nodes() < unpruned.nodes());
}

TEST_CASE("output is independent of the thread count") {
  EnumerationOptions four;
  four.threads = 4;
  Enumerator single;
  Enumerator parallel(four);
  CHECK(single.count_table(0, 25) == parallel.count_table(0, 25));
  CHECK(lists_of(single, FamilyKind::Free, 49) == lists_of(parallel, FamilyKind::Free, 49));
}

TEST_CASE("small Frobenius numbers against exhaustive search") {
  Enumerator e;
  for (Int f = 1; f <= 17; f += 2) {
    Lists expected;
    for (const auto& candidate : bruteforce::all_semigroups_with_frobenius(f)) {
      if (2 * candidate.genus != f + 1) continue;  // not symmetric
      const auto s = NumericalSemigroup::make(candidate.gens);
      if (is_ci_oracle(s)) expected.push_back(candidate.gens);
    }
    CHECK(lists_of(e, FamilyKind::CompleteIntersection, f) == expected);
  }
}

TEST_CASE("cache round trip and version invalidation") {
  const std::string path = "numsemi_test_cache.txt";
  {
    Enumerator e;
    e.count(FamilyKind::CompleteIntersection, 21);
    e.count(FamilyKind::Planar, 15);
    CHECK(e.save_cache(path));
  }
  {
    Enumerator e;
    CHECK(e.load_cache(path));
    CHECK(lists_of(e, FamilyKind::CompleteIntersection, 11) ==
          Lists{{2, 13}, {3, 7}, {4, 5}, {4, 6, 9}});
    CHECK(e.count(FamilyKind::Planar, 15) == Enumerator().count(FamilyKind::Planar, 15));
  }
  {
    // a stale version header silently invalidates the cache
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    content.replace(content.find(kVersion), std::string(kVersion).size(), "999.0.0");
    std::ofstream out(path, std::ios::trunc);
    out << content;
    out.close();
    Enumerator e;
    CHECK(!e.load_cache(path));
    CHECK(lists_of(e, FamilyKind::CompleteIntersection, 7) == Lists{{2, 9}, {3, 5}, {4, 5, 6}});
  }
  {
    // malformed records are rejected as a whole
    std::ofstream out(path, std::ios::trunc);
    out << "numsemi-cache 1 " << kVersion << "\nci 7 2,9|oops\n";
    out.close();
    Enumerator e;
    CHECK(!e.load_cache(path));
  }
  CHECK(!Enumerator().load_cache("does_not_exist.cache"));
  std::remove(path.c_str());
}

TEST_CASE("family names round trip") {
  for (FamilyKind family : {FamilyKind::CompleteIntersection, FamilyKind::Free,
                            FamilyKind::Telescopic, FamilyKind::Planar}) {
    CHECK(family_from_name(family_name(family)) == family);
  }
  CHECK(!family_from_name("nope").has_value());
}
}
