#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polarwt {

// Largest number of variables any polynomial may mention.  Evaluation
// vectors are capped lower (kMaxEvalVars) since they hold 2^m bits.
inline constexpr int kMaxVars = 32;
inline constexpr int kMaxEvalVars = 24;

// Squarefree product of variables x_1..x_32, stored as a bitmask where
// bit (i-1) stands for x_i.  The empty mask is the constant monomial 1.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(std::uint32_t mask) : mask_(mask) {}

  // Builds x_{v_1}...x_{v_k} from 1-based indices; duplicates collapse.
  static Monomial from_vars(std::span<const int> vars);

  constexpr std::uint32_t mask() const { return mask_; }
  int degree() const;
  bool contains(int var) const { return (mask_ >> (var - 1)) & 1u; }
  // Highest variable index, 0 for the constant monomial.
  int max_var() const;
  // Ascending 1-based indices.
  std::vector<int> vars() const;
  std::string to_string() const;

  Monomial operator*(Monomial o) const { return Monomial(mask_ | o.mask_); }
  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint32_t mask_ = 0;
};

// Degree-at-most-one polynomial c_0 + sum c_i x_i.
class LinearPoly {
 public:
  constexpr LinearPoly() = default;
  constexpr LinearPoly(std::uint32_t coeffs, bool constant) : coeffs_(coeffs), constant_(constant) {}

  static LinearPoly var(int i) { return LinearPoly(1u << (i - 1), false); }
  static LinearPoly one() { return LinearPoly(0, true); }

  std::uint32_t coeffs() const { return coeffs_; }
  bool constant() const { return constant_; }
  bool is_constant() const { return coeffs_ == 0; }
  bool has_var(int i) const { return (coeffs_ >> (i - 1)) & 1u; }

  // Index of the highest variable present.  Throws std::domain_error on a
  // constant polynomial, where it is undefined.
  int largest_term() const;

  LinearPoly operator+(const LinearPoly& o) const {
    return LinearPoly(coeffs_ ^ o.coeffs_, constant_ != o.constant_);
  }
  bool operator==(const LinearPoly&) const = default;
  std::string to_string() const;

 private:
  std::uint32_t coeffs_ = 0;
  bool constant_ = false;
};

// Truth table of a Boolean function on F_2^m.  Position p holds the value
// at the assignment b with b_i = bit (i-1) of p.
class EvalVector {
 public:
  EvalVector() = default;
  explicit EvalVector(int m);

  int num_vars() const { return m_; }
  std::size_t length() const { return std::size_t{1} << m_; }
  bool bit(std::size_t p) const { return (words_[p >> 6] >> (p & 63)) & 1u; }
  void set(std::size_t p, bool v);
  std::size_t weight() const;
  bool is_zero() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  EvalVector& operator^=(const EvalVector& o);
  EvalVector& operator&=(const EvalVector& o);
  friend EvalVector operator^(EvalVector a, const EvalVector& b) { return a ^= b; }
  friend EvalVector operator&(EvalVector a, const EvalVector& b) { return a &= b; }
  bool operator==(const EvalVector&) const = default;

 private:
  int m_ = 0;
  std::vector<std::uint64_t> words_;
};

// XOR-sum of monomials, kept canonical by toggling.
class MultilinearPoly {
 public:
  MultilinearPoly() = default;
  explicit MultilinearPoly(Monomial e) { terms_.insert(e); }
  explicit MultilinearPoly(const LinearPoly& g);

  static MultilinearPoly one() { return MultilinearPoly(Monomial{}); }

  const std::set<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Largest term degree; -1 for the zero polynomial.
  int degree() const;
  int max_var() const;
  bool mentions(int var) const;

  void toggle(Monomial e);
  MultilinearPoly& operator+=(const MultilinearPoly& o);
  friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly& b) { return a += b; }
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
  bool operator==(const MultilinearPoly&) const = default;
  std::string to_string() const;

 private:
  std::set<Monomial> terms_;
};

EvalVector eval_monomial(Monomial e, int m);
EvalVector eval_vector(const MultilinearPoly& f, int m);
EvalVector eval_vector(const LinearPoly& g, int m);

MultilinearPoly product(std::span<const LinearPoly> factors);

// Replaces x_t by (g + x_t + 1).  When F(g) = t the result no longer
// mentions x_t and g*h, g*h' share their evaluation vector.
MultilinearPoly substitute(const MultilinearPoly& h, int t, const LinearPoly& g);

struct RestrictedForm {
  std::vector<LinearPoly> factors;  // ascending largest terms
  MultilinearPoly residual;
};

// Unique factorization into independent linear factors times a residual
// with no linear factor.  Exhaustive over divisor candidates, so m <= 8.
RestrictedForm restricted_form(const MultilinearPoly& f, int m);

using LinearPair = std::pair<LinearPoly, LinearPoly>;

// Rewrites sum_t h_t g_t so that all 2*mu largest terms are distinct while
// keeping the evaluation vector.  Throws std::invalid_argument if the
// inputs are not linearly independent.
std::vector<LinearPair> normalize_pair_sum(std::vector<LinearPair> pairs);

bool linearly_independent(std::span<const LinearPoly> polys);

}  // namespace polarwt
