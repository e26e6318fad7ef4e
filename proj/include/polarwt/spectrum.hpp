#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "polarwt/big_count.hpp"
#include "polarwt/monomial_code.hpp"

namespace polarwt {

enum class TupleKind { type_one, type_two };

// Variable-index pattern classifying one family of low-weight codewords.
//   type one: leading (r-2) | pairs (h_1,g_1)..(h_mu,g_mu)
//   type two: leading (r-mu) | first block (mu) | second block (mu)
class IndexTuple {
 public:
  // Check block shapes and orderings; membership in a particular code is
  // a separate question (belongs_to).
  static IndexTuple type_one(int r, int mu, std::vector<int> u);
  static IndexTuple type_two(int r, int mu, std::vector<int> u);

  TupleKind kind() const { return kind_; }
  int r() const { return r_; }
  int mu() const { return mu_; }
  const std::vector<int>& indices() const { return u_; }

  std::span<const int> leading() const;
  std::pair<int, int> pair(int t) const;  // t in [1, mu], type one only
  std::span<const int> first_block() const;
  std::span<const int> second_block() const;
  bool identical_blocks() const;

  bool belongs_to(const InfoSet& info) const;

  auto operator<=>(const IndexTuple&) const = default;

 private:
  IndexTuple(TupleKind kind, int r, int mu, std::vector<int> u) : kind_(kind), r_(r), mu_(mu), u_(std::move(u)) {}
  TupleKind kind_;
  int r_;
  int mu_;
  std::vector<int> u_;
};

// sum_t (i_t - t + 1) over a strictly ascending list
int lambda(std::span<const int> ascending);

// phi counts positions s..t (1-based, inclusive) of u holding an index
// below k; phibar = k - phi.
int phi(std::span<const int> u, int s, int t, int k);
int phibar(std::span<const int> u, int s, int t, int k);

BigCount count_min_weight(const InfoSet& info);

bool type1_admissible(int m, int r, int mu);
bool type2_admissible(int m, int r, int mu);

int alpha(const IndexTuple& u);
int beta(const IndexTuple& u);
int gamma(const IndexTuple& u);
BigCount type1_contribution(const IndexTuple& u);

using TupleSink = std::function<void(const IndexTuple&)>;

void enumerate_S(const InfoSet& info, int mu, const TupleSink& sink);
std::vector<IndexTuple> collect_S(const InfoSet& info, int mu);
BigCount count_type1(const InfoSet& info, int mu, unsigned threads = 1);

int b_threshold(const IndexTuple& u, const InfoSet& info, int k);
BigCount s_choices(const IndexTuple& u, const InfoSet& info, int k);
// log2 of the number of ways to pick the leading and first-block factors
int type2_leading_exponent(const IndexTuple& u);
BigCount type2_contribution(const IndexTuple& u, const InfoSet& info);

void enumerate_T(const InfoSet& info, int mu, const TupleSink& sink);
std::vector<IndexTuple> collect_T(const InfoSet& info, int mu);
BigCount count_type2(const InfoSet& info, int mu, unsigned threads = 1);

// The weight 2^(m-r+1) - 2^(m-r+1-mu).
std::uint64_t shaped_weight(int m, int r, int mu);

struct SpectrumEntry {
  int mu = 0;  // 0 when the weight has no admissible shape
  BigCount total;
  BigCount type1;
  BigCount type2;
  bool split = true;  // false for oracle tallies, which cannot attribute
};

struct WeightSpectrum {
  int m = 0;
  int r = 0;
  std::uint64_t w_min = 0;
  std::size_t k = 0;
  bool oracle = false;
  std::map<std::uint64_t, SpectrumEntry> entries;

  BigCount count(std::uint64_t weight) const;
};

WeightSpectrum full_spectrum(const InfoSet& info, unsigned threads = 1, std::optional<int> only_mu = std::nullopt);

}  // namespace polarwt
