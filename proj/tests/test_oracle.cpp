#include <random>

#include "doctest.h"
#include "polarwt/oracle.hpp"

using namespace polarwt;

namespace {

InfoSet from_masks(std::vector<std::uint32_t> masks, int m) {
  std::vector<Monomial> g;
  for (auto s : masks) g.emplace_back(s);
  return decreasing_closure(g, m);
}

// bits in the column order of a Kronecker-power generator matrix, which
// runs over assignments from all-ones down to all-zeros
std::vector<int> columns(const EvalVector& v) {
  std::vector<int> out;
  for (std::size_t q = 0; q < v.length(); ++q) out.push_back(v.bit(v.length() - 1 - q));
  return out;
}

std::vector<std::uint8_t> select(const InfoSet& info, std::vector<Monomial> chosen) {
  std::vector<std::uint8_t> msg(info.size(), 0);
  for (std::size_t i = 0; i < info.size(); ++i)
    for (auto c : chosen)
      if (info.monomials()[i] == c) msg[i] = 1;
  return msg;
}

void check_same_tally(const WeightSpectrum& a, const WeightSpectrum& b) {
  REQUIRE(a.entries.size() == b.entries.size());
  for (const auto& [w, e] : a.entries) CHECK(b.count(w) == e.total);
}

}  // namespace

TEST_CASE("encoding selects generator rows") {
  auto info = construct_rm(3, 1);
  CHECK(encode(info, std::vector<std::uint8_t>(4, 0)).is_zero());
  auto x3 = encode(info, select(info, {Monomial(4)}));
  CHECK(columns(x3) == std::vector<int>{1, 1, 1, 1, 0, 0, 0, 0});
  auto x1x2 = encode(info, select(info, {Monomial(1), Monomial(2)}));
  // x2 row 1,1,0,0,1,1,0,0 plus x1 row 1,0,1,0,1,0,1,0
  CHECK(columns(x1x2) == std::vector<int>{0, 1, 1, 0, 0, 1, 1, 0});
  CHECK_THROWS_AS(encode(info, std::vector<std::uint8_t>(3, 0)), std::invalid_argument);
}

TEST_CASE("exhaustive tallies of small Reed-Muller codes") {
  auto a = brute_spectrum(construct_rm(3, 1), 8);
  CHECK(a.oracle);
  CHECK(a.entries.size() == 1);
  CHECK(a.count(4) == 14);

  auto b = brute_spectrum(construct_rm(4, 2), 8);
  CHECK(b.entries.size() == 2);
  CHECK(b.count(4) == 140);
  CHECK(b.count(6) == 448);
  CHECK(b.entries.at(6).mu == 2);
}

TEST_CASE("codes above the cap need an override") {
  auto rm = construct_rm(6, 3);  // K = 42
  CHECK_THROWS_AS(brute_spectrum(rm, 16), CapExceeded);
  auto k31 = from_masks({25, 38}, 6);
  REQUIRE(k31.size() == 31);
  CHECK_THROWS_AS(brute_spectrum(k31, 16), CapExceeded);
  CHECK_THROWS_AS(brute_spectrum(rm, 16, {41, 1}), std::invalid_argument);
}

TEST_CASE("m = 6 code with type-two words") {
  auto info = from_masks({28, 35}, 6);
  REQUIRE(info.size() == 30);
  auto s = brute_spectrum(info, 16, {kDefaultKCap, 4});
  CHECK(s.count(8) == 1304);
  CHECK(s.count(12) == 33152);
  CHECK(s.count(14) == 32768);
  CHECK(forms_census_type1(info, 3) == 0);
  CHECK(forms_census_type2(info, 3) == s.count(14) - forms_census_type1(info, 3));
  CHECK(flat_pair_census(info, 3) == 32768);
}

TEST_CASE("override admits a larger code") {
  auto info = from_masks({25, 38}, 6);
  auto s = brute_spectrum(info, 16, {31, 4});
  CHECK(s.count(8) == 920);
  CHECK(s.count(12) == 25472);
  CHECK(s.count(14) == 32768);
}

TEST_CASE("Gray-code walk matches re-encoding every message") {
  std::vector<InfoSet> codes;
  for (int m = 1; m <= 4; ++m) {
    auto all = all_decreasing_codes(m);
    codes.insert(codes.end(), all.begin(), all.end());
  }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) codes.push_back(random_decreasing_code(5 + i % 3, 12, rng));
  for (const auto& info : codes) {
    if (info.size() > 12) continue;
    auto naive = naive_weight_tally(info);
    auto gray = brute_spectrum(info, naive.size());
    for (std::size_t w = 1; w < naive.size(); ++w) CHECK(gray.count(w) == naive[w]);
  }
}

TEST_CASE("minimum-weight tally matches the closed form on small codes") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& info : all_decreasing_codes(m)) {
      if (info.size() > 24) continue;
      auto s = brute_spectrum(info, 2 * code_params(info).w_min);
      CHECK(s.count(code_params(info).w_min) == count_min_weight(info));
      CHECK(weight_shape_check(s, info.m(), info.max_degree()));
    }
}

TEST_CASE("thread count does not change the tally") {
  auto one = brute_spectrum(construct_rm(5, 2), 16, {kDefaultKCap, 1});
  for (unsigned t : {2u, 3u, 7u, 16u}) check_same_tally(one, brute_spectrum(construct_rm(5, 2), 16, {kDefaultKCap, t}));
  // fewer messages than segments
  check_same_tally(brute_spectrum(construct_rm(2, 1), 4, {kDefaultKCap, 1}),
                   brute_spectrum(construct_rm(2, 1), 4, {kDefaultKCap, 8}));
}

TEST_CASE("product-form census") {
  auto rm42 = construct_rm(4, 2);
  CHECK(forms_census_type1(rm42, 2) == 448);
  CHECK(forms_census_type1(rm42, 1) == 140);
  CHECK(forms_census_type1(rm42, 3) == 0);
  CHECK(forms_census_type2(construct_rm(5, 2), 3) == 0);
  CHECK_THROWS(forms_census_type1(construct_rm(6, 2), 2));
  CHECK_THROWS(forms_census_type2(construct_rm(7, 3), 3));
}

TEST_CASE("census agrees with the enumerator on every m <= 5 code") {
  for (int m = 3; m <= 5; ++m)
    for (const auto& info : all_decreasing_codes(m)) {
      const int r = info.max_degree();
      for (int mu = 1; mu <= m - r + 1; ++mu) {
        if (!type1_admissible(m, r, mu)) continue;
        BigCount expect = mu == 1 ? count_min_weight(info) : count_type1(info, mu);
        CHECK(forms_census_type1(info, mu) == expect);
      }
    }
}

TEST_CASE("weight shapes") {
  auto rm42 = brute_spectrum(construct_rm(4, 2), 8);
  CHECK(weight_shape_check(rm42, 4, 2));
  auto rm52 = brute_spectrum(construct_rm(5, 2), 16);
  CHECK(weight_shape_check(rm52, 5, 2));
  CHECK(rm52.count(8) == 620);
  CHECK(rm52.count(12) == 13888);
  CHECK(rm52.count(14) == 0);
  auto bad = rm42;
  bad.entries[5].total = 3;
  CHECK_FALSE(weight_shape_check(bad, 4, 2));
}
