#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polarwt/gf2_poly.hpp"

namespace polarwt {

// Row z of the m-fold Kronecker power of [[1,0],[1,1]] is the evaluation
// vector of the monomial whose exponent bits, x_1 lowest, spell 2^m-1-z.
Monomial monomial_from_row(std::uint64_t z, int m);
std::uint64_t row_from_monomial(Monomial e, int m);

// e precedes e2 in the reliability order: e can be obtained from e2 by
// dropping variables and lowering indices.
bool leq(Monomial e, Monomial e2);

struct Violation {
  Monomial missing;  // e, absent from the set
  Monomial present;  // e2 in the set with e <= e2
};

struct DecreasingCheck {
  bool ok = true;
  std::optional<Violation> violation;
  explicit operator bool() const { return ok; }
};

DecreasingCheck is_decreasing(std::span<const Monomial> monomials, int m);

class NotDecreasingError : public std::invalid_argument {
 public:
  explicit NotDecreasingError(const Violation& v);
  const Violation& violation() const { return v_; }

 private:
  Violation v_;
};

// A decreasing information set over x_1..x_m.  Monomials are held in
// ascending row order, the constant monomial last.
class InfoSet {
 public:
  InfoSet() = default;
  // Validates the decreasing property; throws NotDecreasingError.
  InfoSet(int m, std::span<const Monomial> monomials);

  static InfoSet from_rows(int m, std::span<const std::uint64_t> rows);
  static InfoSet closure(std::span<const Monomial> generators, int m);
  static InfoSet closure_of_rows(std::span<const std::uint64_t> rows, int m);

  int m() const { return m_; }
  std::size_t size() const { return monomials_.size(); }
  bool empty() const { return monomials_.empty(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::vector<std::uint64_t> rows() const;
  bool contains(Monomial e) const { return e.mask() < member_.size() && member_[e.mask()]; }
  int max_degree() const { return r_; }
  // Degree-r monomials, ascending by mask.
  std::vector<Monomial> top_degree() const;

 private:
  int m_ = 0;
  int r_ = 0;
  std::vector<Monomial> monomials_;
  std::vector<bool> member_;
};

InfoSet decreasing_closure(std::span<const Monomial> generators, int m);

struct CodeParams {
  int r = 0;
  std::uint64_t w_min = 0;
  std::size_t k = 0;
};

CodeParams code_params(const InfoSet& info);

InfoSet construct_rm(int m, int r);
InfoSet construct_bec(int m, std::size_t k, double erasure_prob);
InfoSet construct_pw(int m, std::size_t k);

// Every nonempty decreasing set over m <= 5 variables.
std::vector<InfoSet> all_decreasing_codes(int m);

// Closure of a few random generators, redrawn until K <= max_k.
InfoSet random_decreasing_code(int m, std::size_t max_k, std::mt19937_64& rng);

}  // namespace polarwt
