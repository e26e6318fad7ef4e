#pragma once

#include <span>
#include <string>
#include <vector>

#include "polarwt/spectrum.hpp"

namespace polarwt {

// Gaussian tail probability P(Z > x).
double q_function(double x);

// BPSK with unit symbol energy: sigma^2 = 1 / (2 R Eb/N0).
double sigma_from_ebn0(double ebn0_db, double rate);
double ebn0_from_sigma(double sigma, double rate);

struct BoundPoint {
  double ebn0_db;
  double sigma;
  double bound;
};

// sum over weights d < 2 w_min of A_d Q(sqrt(d) / sigma)
double union_bound_at(const WeightSpectrum& spectrum, double sigma);

std::vector<BoundPoint> union_bound(const WeightSpectrum& spectrum, double rate, std::span<const double> ebn0_db);
std::vector<BoundPoint> union_bound_sigma(const WeightSpectrum& spectrum, double rate, std::span<const double> sigmas);

// "start:step:stop" (inclusive) or a comma list.
std::vector<double> parse_grid(const std::string& text);

std::string bound_csv(std::span<const BoundPoint> points);

}  // namespace polarwt
