#include "polarwt/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace polarwt {

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

void check_rate(double rate) {
  if (!(rate > 0.0 && rate <= 1.0)) throw std::invalid_argument("code rate must lie in (0, 1]");
}

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

double sigma_from_ebn0(double ebn0_db, double rate) {
  check_rate(rate);
  return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

double ebn0_from_sigma(double sigma, double rate) {
  check_rate(rate);
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  return 10.0 * std::log10(1.0 / (2.0 * rate * sigma * sigma));
}

double union_bound_at(const WeightSpectrum& spectrum, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  double sum = 0.0;
  for (const auto& [d, e] : spectrum.entries) {
    if (d >= 2 * spectrum.w_min) continue;
    sum += e.total.convert_to<double>() * q_function(std::sqrt(static_cast<double>(d)) / sigma);
  }
  return sum;
}

std::vector<BoundPoint> union_bound(const WeightSpectrum& spectrum, double rate, std::span<const double> ebn0_db) {
  std::vector<BoundPoint> out;
  for (double e : ebn0_db) {
    if (!std::isfinite(e)) throw std::invalid_argument("Eb/N0 grid values must be finite");
    const double s = sigma_from_ebn0(e, rate);
    out.push_back({e, s, union_bound_at(spectrum, s)});
  }
  return out;
}

std::vector<BoundPoint> union_bound_sigma(const WeightSpectrum& spectrum, double rate, std::span<const double> sigmas) {
  std::vector<BoundPoint> out;
  for (double s : sigmas) out.push_back({ebn0_from_sigma(s, rate), s, union_bound_at(spectrum, s)});
  return out;
}

std::vector<double> parse_grid(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw std::invalid_argument("bad grid value '" + s + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(text);
    for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(num(tok));
    if (parts.size() != 3 || !(parts[1] > 0) || parts[2] < parts[0])
      throw std::invalid_argument("grid must read start:step:stop with step > 0 and stop >= start");
    const auto n = static_cast<long>(std::floor((parts[2] - parts[0]) / parts[1] + 1e-9));
    for (long i = 0; i <= n; ++i) out.push_back(parts[0] + i * parts[1]);
    return out;
  }
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) out.push_back(num(tok));
  if (out.empty()) throw std::invalid_argument("empty grid");
  return out;
}

std::string bound_csv(std::span<const BoundPoint> points) {
  std::string out = "ebn0_db,sigma,union_bound\n";
  for (const auto& p : points) out += fmt10(p.ebn0_db) + "," + fmt10(p.sigma) + "," + fmt10(p.bound) + "\n";
  return out;
}

}  // namespace polarwt
