#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "polarwt/monomial_code.hpp"
#include "polarwt/spectrum.hpp"

namespace polarwt {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// {"m": M, "imin_rows": [...]} is closed under the order; {"m": M,
// "info_rows": [...]} must already be decreasing.
InfoSet parse_code_spec(std::string_view text);
std::string format_code_spec(const InfoSet& info);

std::string format_spectrum(const WeightSpectrum& spectrum);
WeightSpectrum parse_spectrum(std::string_view text);

}  // namespace polarwt
