#include <thread>

#include "doctest.h"
#include "polarwt/oracle.hpp"
#include "polarwt/spectrum.hpp"

using namespace polarwt;

namespace {

InfoSet table_code(std::vector<std::uint64_t> rows, int m = 7) { return InfoSet::closure_of_rows(rows, m); }

const InfoSet& code_128_80() {
  static const InfoSet info = table_code({23, 44, 50, 70, 73});
  return info;
}

}  // namespace

TEST_CASE("lambda") {
  CHECK(lambda(std::vector{1, 2, 5, 7}) == 9);
  CHECK(lambda(std::vector{1, 4, 5, 7}) == 11);
  for (int r = 1; r <= 6; ++r) {
    std::vector<int> v;
    for (int i = 1; i <= r; ++i) v.push_back(i);
    CHECK(lambda(v) == r);
  }
  CHECK_THROWS(lambda(std::vector{3, 2}));
}

TEST_CASE("phi over index ranges") {
  std::vector<int> u{1, 2, 5, 7, 3, 4, 7};
  CHECK(phibar(u, 1, 1, 3) == 2);
  CHECK(phi(u, 2, 4, 7) == 2);
  CHECK(phi(u, 3, 2, 5) == 0);
  CHECK(phibar(u, 3, 2, 5) == 5);
  CHECK(phi(u, 1, 0, 4) == 0);
}

TEST_CASE("index tuples validate their shape") {
  CHECK_NOTHROW(IndexTuple::type_one(4, 2, {1, 7, 2, 5, 3, 4}));
  CHECK_THROWS(IndexTuple::type_one(4, 2, {1, 7, 2, 5, 3}));
  CHECK_THROWS(IndexTuple::type_one(4, 2, {1, 7, 5, 2, 3, 4}));  // h must sit below g
  CHECK_THROWS(IndexTuple::type_one(4, 2, {1, 7, 3, 5, 2, 4}));  // pair firsts ascend
  CHECK_NOTHROW(IndexTuple::type_two(4, 3, {1, 4, 5, 7, 4, 5, 7}));
  CHECK_THROWS(IndexTuple::type_two(4, 3, {1, 4, 5, 7, 4, 5}));
  auto v = IndexTuple::type_two(4, 3, {1, 4, 5, 7, 4, 5, 7});
  CHECK(v.identical_blocks());
  CHECK(v.leading().size() == 1);
  CHECK(v.belongs_to(code_128_80()));
}

TEST_CASE("minimum-weight count") {
  CHECK(count_min_weight(code_128_80()) == 5680);
  CHECK(count_min_weight(construct_rm(6, 3)) == 11160);
  CHECK(count_min_weight(InfoSet::closure(std::vector{Monomial(1)}, 1)) == 2);
  CHECK(count_min_weight(construct_rm(5, 2)) == 620);
}

TEST_CASE("alpha counts crossing pairs") {
  CHECK(alpha(IndexTuple::type_one(4, 2, {1, 7, 2, 5, 3, 4})) == 0);
  CHECK(alpha(IndexTuple::type_one(2, 2, {1, 3, 2, 4})) == 1);
  CHECK(alpha(IndexTuple::type_one(2, 2, {1, 2, 3, 4})) == 0);
}

TEST_CASE("beta and gamma") {
  CHECK(beta(IndexTuple::type_one(4, 2, {1, 7, 2, 5, 3, 4})) == 0);
  CHECK(beta(IndexTuple::type_one(2, 2, {1, 3, 4, 6})) == 2);
  CHECK(beta(IndexTuple::type_one(2, 2, {1, 2, 3, 4})) == 0);
  CHECK(gamma(IndexTuple::type_one(4, 2, {1, 7, 2, 5, 3, 4})) == 3);
  CHECK(gamma(IndexTuple::type_one(2, 2, {1, 2, 3, 4})) == 4);
  // a leading block covering 1..3 leaves ranks 1 and 2 to the pair firsts
  CHECK(gamma(IndexTuple::type_one(5, 2, {1, 2, 3, 4, 6, 5, 7})) == 1 + 2);
}

TEST_CASE("type-one contribution of the nested example") {
  CHECK(type1_contribution(IndexTuple::type_one(4, 2, {1, 7, 2, 5, 3, 4})) == 8192);
}

TEST_CASE("pairings of four indices") {
  auto s = collect_S(construct_rm(4, 2), 2);
  std::vector<IndexTuple> expect{IndexTuple::type_one(2, 2, {1, 2, 3, 4}), IndexTuple::type_one(2, 2, {1, 3, 2, 4}),
                                 IndexTuple::type_one(2, 2, {1, 4, 2, 3})};
  std::sort(s.begin(), s.end());
  std::sort(expect.begin(), expect.end());
  CHECK(s == expect);
  CHECK(collect_S(construct_rm(4, 2), 3).empty());
  CHECK(collect_S(construct_rm(6, 3), 3).empty());
}

TEST_CASE("single-pair tuples reproduce the minimum-weight count") {
  for (int m = 2; m <= 8; ++m)
    for (int r = 2; r <= m; ++r) {
      auto rm = construct_rm(m, r);
      // one tuple per top monomial
      std::uint64_t top = rm.top_degree().size();
      CHECK(collect_S(rm, 1).size() == top);
      CHECK(count_type1(rm, 1) == count_min_weight(rm));
    }
  CHECK(count_type1(code_128_80(), 1) == 5680);
}

TEST_CASE("type-one counts") {
  CHECK(count_type1(code_128_80(), 2) == 508672);
  CHECK(count_type1(construct_rm(4, 2), 2) == 448);
  CHECK(count_type1(construct_rm(4, 2), 3) == 0);
  CHECK(count_type1(construct_rm(6, 3), 3) == 0);
}

TEST_CASE("type-two thresholds and choices on the table code") {
  const auto& info = code_128_80();
  auto v = IndexTuple::type_two(4, 3, {1, 4, 5, 7, 4, 5, 7});
  CHECK(b_threshold(v, info, 1) == 2);
  CHECK(b_threshold(v, info, 2) == 3);
  CHECK(b_threshold(v, info, 3) == 6);

  auto u = IndexTuple::type_two(4, 3, {1, 2, 5, 7, 3, 4, 7});
  CHECK(u.belongs_to(info));
  CHECK(s_choices(u, info, 1) == 4);
  CHECK(s_choices(u, info, 2) == 4);
  CHECK(s_choices(u, info, 3) == 8);
  CHECK(type2_leading_exponent(u) == 9);
  CHECK(type2_contribution(u, info) == 65536);

  // the third slot has 2^4 - 2^3 choices by the choice formula
  CHECK(s_choices(v, info, 1) == 2);
  CHECK(s_choices(v, info, 2) == 4);
  CHECK(s_choices(v, info, 3) == 8);
  CHECK(type2_leading_exponent(v) == 11);
  CHECK(type2_contribution(v, info) == 65536);
}

TEST_CASE("threshold falls back to zero when no slot is admissible") {
  auto rm = construct_rm(6, 3);
  auto w = IndexTuple::type_two(3, 3, {1, 2, 3, 1, 2, 3});
  CHECK(b_threshold(w, rm, 1) == 6);
  auto tiny = InfoSet::closure_of_rows(std::vector<std::uint64_t>{56}, 6);  // x1x2x3 and below
  auto t = IndexTuple::type_two(3, 3, {1, 2, 3, 1, 2, 3});
  CHECK(b_threshold(t, tiny, 1) == 0);
  CHECK(b_threshold(t, tiny, 3) == 0);
}

TEST_CASE("type-two counts") {
  CHECK(count_type2(construct_rm(5, 2), 3) == 0);
  CHECK(count_type2(construct_rm(6, 3), 3) == 22855680);
  // verified against an independent census of pairs of flats
  CHECK(count_type2(code_128_80(), 3) == 1540096);
}

TEST_CASE("shaped weights") {
  CHECK(shaped_weight(7, 4, 1) == 8);
  CHECK(shaped_weight(7, 4, 2) == 12);
  CHECK(shaped_weight(7, 4, 3) == 14);
  CHECK(shaped_weight(8, 4, 4) == 30);
  CHECK_THROWS(shaped_weight(7, 4, 0));
  CHECK_THROWS(shaped_weight(7, 4, 5));
}

TEST_CASE("full spectrum of the table code") {
  auto s = full_spectrum(code_128_80());
  CHECK(s.k == 80);
  CHECK(s.w_min == 8);
  CHECK(s.count(8) == 5680);
  CHECK(s.count(12) == 508672);
  CHECK(s.count(14) == 1540096);
  CHECK(s.entries.at(14).type1 == 0);
  CHECK(s.entries.size() == 3);
}

TEST_CASE("full spectrum ranges") {
  auto rm52 = full_spectrum(construct_rm(5, 2));
  CHECK(rm52.count(8) == 620);
  CHECK(rm52.count(12) == 13888);
  CHECK_FALSE(rm52.entries.count(14));

  auto t2 = full_spectrum(InfoSet::closure_of_rows(std::vector<std::uint64_t>{63, 91, 103, 120, 204, 210, 225}, 8));
  CHECK(t2.count(16) == 1584);
  CHECK(t2.count(24) == 49920);
  CHECK(t2.entries.count(28));
  CHECK(t2.count(28) == 0);
  CHECK(t2.entries.count(30));
  CHECK(t2.count(30) == 0);

  auto only = full_spectrum(construct_rm(6, 3), 1, 2);
  CHECK(only.entries.size() == 1);
  CHECK(only.count(12) == 1749888);
}

TEST_CASE("counts for mu >= 2 are even") {
  for (const auto& info : all_decreasing_codes(5)) {
    auto s = full_spectrum(info);
    for (const auto& [w, e] : s.entries) {
      CHECK(e.type1 + e.type2 == e.total);
      if (e.mu >= 2) CHECK(e.total % 2 == 0);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  const auto& info = code_128_80();
  auto a = full_spectrum(info, 1);
  const unsigned hw = std::max(2u, std::thread::hardware_concurrency());
  for (unsigned t : {2u, 3u, hw}) {
    auto b = full_spectrum(info, t);
    REQUIRE(a.entries.size() == b.entries.size());
    for (const auto& [w, e] : a.entries) {
      CHECK(b.entries.at(w).type1 == e.type1);
      CHECK(b.entries.at(w).type2 == e.type2);
    }
  }
}

TEST_CASE("big counts print exactly and in scientific form") {
  CHECK(to_decimal(pow2(100)) == "1267650600228229401496703205376");
  CHECK(parse_decimal("1267650600228229401496703205376") == pow2(100));
  CHECK_THROWS(parse_decimal("-3"));
  CHECK_THROWS(parse_decimal("12a"));
  CHECK(to_scientific(BigCount(1835008)) == "1.835008e+06");
  CHECK(to_scientific(BigCount(0)) == "0.000000e+00");
}
