#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "polarwt/gf2_poly.hpp"
#include "polarwt/monomial_code.hpp"
#include "polarwt/spectrum.hpp"

namespace polarwt {

// One evaluation vector per monomial, in the information set's row order.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(const InfoSet& info);
  int m() const { return m_; }
  std::size_t k() const { return rows_.size(); }
  const std::vector<EvalVector>& rows() const { return rows_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

 private:
  int m_;
  std::vector<Monomial> monomials_;
  std::vector<EvalVector> rows_;
};

// message[i] selects the i-th monomial of info.monomials()
EvalVector encode(const InfoSet& info, std::span<const std::uint8_t> message);

inline constexpr unsigned kDefaultKCap = 30;
inline constexpr unsigned kMaxKCap = 40;

struct BruteOptions {
  unsigned k_cap = kDefaultKCap;  // raise up to kMaxKCap to allow larger codes
  unsigned threads = 1;
};

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive tally of all 2^K codewords, weights in (0, weight_cap).
WeightSpectrum brute_spectrum(const InfoSet& info, std::uint64_t weight_cap, BruteOptions opts = {});

// Full weight distribution by re-encoding every message from scratch
// (index = weight).  Slow reference for the Gray-code walk; K <= 24.
std::vector<std::uint64_t> naive_weight_tally(const InfoSet& info);

// Distinct codewords of the product-sum shapes, found by multiplying out
// independent affine factors and keeping words inside the code.
BigCount forms_census_type1(const InfoSet& info, int mu);  // m <= 5
BigCount forms_census_type2(const InfoSet& info, int mu);  // m <= 6, mu = 3

// Distinct words 1_X + 1_Y in the code, where X, Y are (m-r)-dimensional
// affine flats meeting in 2^(m-r-mu) points.  Reaches m = 7.
BigCount flat_pair_census(const InfoSet& info, int mu);

bool weight_shape_check(const WeightSpectrum& spectrum, int m, int r);

}  // namespace polarwt
