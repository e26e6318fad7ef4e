#include <algorithm>
#include <random>

#include "doctest.h"
#include "polarwt/monomial_code.hpp"

using namespace polarwt;

namespace {

Monomial mono(std::initializer_list<int> vars) {
  std::vector<int> v(vars);
  return Monomial::from_vars(v);
}

std::uint64_t binom(int n, int k) {
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// x1..xm in every variable: all 2^m monomials
std::vector<Monomial> all_monomials(int m) {
  std::vector<Monomial> out;
  for (std::uint32_t s = 0; s < (1u << m); ++s) out.emplace_back(s);
  return out;
}

// leq via its definition on sorted index lists
bool leq_reference(Monomial a, Monomial b) {
  auto va = a.vars(), vb = b.vars();
  if (va.size() > vb.size()) return false;
  // compare with the |a| largest variables of b, both ascending
  const std::size_t off = vb.size() - va.size();
  for (std::size_t i = 0; i < va.size(); ++i)
    if (va[i] > vb[off + i]) return false;
  return true;
}

bool closed_by_brute_force(const InfoSet& info) {
  auto all = all_monomials(info.m());
  for (auto e2 : info.monomials())
    for (auto e : all)
      if (leq_reference(e, e2) && !info.contains(e)) return false;
  return true;
}

}  // namespace

TEST_CASE("row and monomial correspondence") {
  CHECK(monomial_from_row(23, 7) == mono({4, 6, 7}));
  CHECK(monomial_from_row(127, 7) == Monomial{});
  CHECK(monomial_from_row(0, 3) == mono({1, 2, 3}));
  for (std::uint64_t z = 0; z < 64; ++z) CHECK(row_from_monomial(monomial_from_row(z, 6), 6) == z);
  CHECK_THROWS_AS(monomial_from_row(8, 3), std::out_of_range);
}

TEST_CASE("partial order") {
  CHECK(leq(mono({1, 2}), mono({2, 3})));
  CHECK(leq(mono({2}), mono({1, 3})));
  CHECK_FALSE(leq(mono({1, 4}), mono({2, 3})));
  CHECK(leq(Monomial{}, mono({5})));
  CHECK_FALSE(leq(mono({3}), mono({1, 2})));
}

TEST_CASE("partial order matches its definition on all pairs for m = 6") {
  auto all = all_monomials(6);
  for (auto a : all)
    for (auto b : all) CHECK(leq(a, b) == leq_reference(a, b));
}

TEST_CASE("closure sizes") {
  std::vector<Monomial> gens{mono({4, 6, 7}), mono({1, 2, 5, 7}), mono({1, 3, 4, 7}), mono({1, 4, 5, 6}),
                             mono({2, 3, 5, 6})};
  auto info = decreasing_closure(gens, 7);
  CHECK(info.size() == 80);
  CHECK(is_decreasing(info.monomials(), 7).ok);

  auto one = decreasing_closure(std::vector{mono({1})}, 1);
  CHECK(one.size() == 2);
  CHECK(one.contains(Monomial{}));

  CHECK(decreasing_closure(std::vector{mono({1, 2, 3})}, 3).size() == 8);
}

TEST_CASE("table rows close to the expected sizes") {
  for (auto rows : {std::vector<std::uint64_t>{23, 44, 50, 70, 73}, {15, 28, 73}, {23, 38, 97}, {29, 39, 41}}) {
    auto info = InfoSet::closure_of_rows(rows, 7);
    CHECK(info.size() == 80);
    CHECK(code_params(info).w_min == 8);
  }
  CHECK(InfoSet::closure_of_rows(std::vector<std::uint64_t>{15, 21, 55}, 6).size() == 36);
}

TEST_CASE("decreasing check reports the first violating pair") {
  auto res = is_decreasing(std::vector{Monomial{}, mono({2})}, 2);
  CHECK_FALSE(res.ok);
  REQUIRE(res.violation);
  CHECK(res.violation->missing == mono({1}));
  CHECK(res.violation->present == mono({2}));
  CHECK_THROWS_AS(InfoSet(2, std::vector{Monomial{}, mono({2})}), NotDecreasingError);
  CHECK(is_decreasing(construct_rm(5, 2).monomials(), 5).ok);
}

TEST_CASE("code parameters") {
  auto p = code_params(InfoSet::closure_of_rows(std::vector<std::uint64_t>{23, 44, 50, 70, 73}, 7));
  CHECK(p.r == 4);
  CHECK(p.w_min == 8);
  CHECK(p.k == 80);

  for (int m = 1; m <= 8; ++m)
    for (int r = 0; r <= m; ++r) {
      auto q = code_params(construct_rm(m, r));
      std::uint64_t k = 0;
      for (int d = 0; d <= r; ++d) k += binom(m, d);
      CHECK(q.r == r);
      CHECK(q.w_min == (std::uint64_t{1} << (m - r)));
      CHECK(q.k == k);
    }

  auto small = code_params(decreasing_closure(std::vector{mono({4})}, 6));
  CHECK(small.r == 1);
  CHECK(small.w_min == 32);
  CHECK(small.k == 5);
}

TEST_CASE("constructions produce decreasing sets") {
  auto rm = construct_rm(3, 1);
  CHECK(rm.size() == 4);
  for (auto e : {Monomial{}, mono({1}), mono({2}), mono({3})}) CHECK(rm.contains(e));

  auto bec = construct_bec(3, 4, 0.5);
  CHECK(bec.size() == 4);
  CHECK(is_decreasing(bec.monomials(), 3).ok);

  auto pw = construct_pw(4, 8);
  CHECK(pw.size() == 8);
  CHECK(is_decreasing(pw.monomials(), 4).ok);

  for (int m = 2; m <= 8; ++m)
    for (std::size_t k = 1; k <= (std::size_t{1} << m); k += 3) {
      CHECK(is_decreasing(construct_bec(m, k, 0.5).monomials(), m).ok);
      CHECK(is_decreasing(construct_pw(m, k).monomials(), m).ok);
    }
}

TEST_CASE("every decreasing set for small m") {
  // counts of nonempty down-sets of the monomial order
  CHECK(all_decreasing_codes(3).size() == 9);
  CHECK(all_decreasing_codes(4).size() == 26);
  CHECK(all_decreasing_codes(5).size() == 118);
  for (const auto& info : all_decreasing_codes(4)) CHECK(closed_by_brute_force(info));
}

TEST_CASE("random codes are closed, bounded and reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 30; ++i) {
    auto x = random_decreasing_code(6, 22, a);
    auto y = random_decreasing_code(6, 22, b);
    CHECK(x.rows() == y.rows());
    CHECK(x.size() <= 22);
    CHECK(closed_by_brute_force(x));
  }
}

TEST_CASE("info set ordering and rows") {
  auto info = construct_rm(3, 1);
  CHECK(info.rows() == std::vector<std::uint64_t>{3, 5, 6, 7});
  CHECK(info.monomials().back() == Monomial{});
  auto same = InfoSet::from_rows(3, std::vector<std::uint64_t>{7, 6, 5, 3});
  CHECK(same.rows() == info.rows());
}
