#include "polarwt/json_io.hpp"

#include <algorithm>

#include "json.hpp"

namespace polarwt {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw SpecError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw SpecError(std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

InfoSet parse_code_spec(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw SpecError("code spec must be a JSON object");
  const int m = field<int>(j, "m");
  if (m < 1 || m > 20) throw SpecError("m must lie in [1, 20]");
  const bool minimal = j.contains("imin_rows");
  if (minimal == j.contains("info_rows")) throw SpecError("code spec needs exactly one of 'imin_rows' and 'info_rows'");
  auto rows = field<std::vector<std::int64_t>>(j, minimal ? "imin_rows" : "info_rows");
  std::vector<std::uint64_t> clean;
  for (auto z : rows) {
    if (z < 0 || z >= (std::int64_t{1} << m))
      throw SpecError("row " + std::to_string(z) + " outside [0, 2^" + std::to_string(m) + ")");
    clean.push_back(static_cast<std::uint64_t>(z));
  }
  std::sort(clean.begin(), clean.end());
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  if (clean.empty()) throw SpecError("code spec lists no rows");
  if (minimal) return InfoSet::closure_of_rows(clean, m);
  return InfoSet::from_rows(m, clean);
}

std::string format_code_spec(const InfoSet& info) {
  Json j;
  j["m"] = info.m();
  auto rows = info.rows();
  std::sort(rows.begin(), rows.end());
  j["info_rows"] = rows;
  return j.dump();
}

std::string format_spectrum(const WeightSpectrum& s) {
  Json j;
  j["m"] = s.m;
  j["k"] = s.k;
  j["r"] = s.r;
  j["w_min"] = s.w_min;
  if (s.oracle) j["oracle"] = true;
  Json list = Json::array();
  for (const auto& [w, e] : s.entries) {
    Json row;
    row["weight"] = w;
    row["mu"] = e.mu;
    row["total"] = to_decimal(e.total);
    if (e.split) {
      row["type1"] = to_decimal(e.type1);
      row["type2"] = to_decimal(e.type2);
    }
    list.push_back(std::move(row));
  }
  j["spectrum"] = std::move(list);
  return j.dump();
}

WeightSpectrum parse_spectrum(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw SpecError("spectrum must be a JSON object");
  WeightSpectrum s;
  s.m = field<int>(j, "m");
  s.k = field<std::size_t>(j, "k");
  s.r = field<int>(j, "r");
  s.w_min = field<std::uint64_t>(j, "w_min");
  s.oracle = j.contains("oracle") && field<bool>(j, "oracle");
  if (!j.contains("spectrum") || !j["spectrum"].is_array()) throw SpecError("missing 'spectrum' array");
  for (const auto& row : j["spectrum"]) {
    SpectrumEntry e;
    const auto w = field<std::uint64_t>(row, "weight");
    e.mu = field<int>(row, "mu");
    try {
      e.total = parse_decimal(field<std::string>(row, "total"));
      e.split = row.contains("type1");
      if (e.split) {
        e.type1 = parse_decimal(field<std::string>(row, "type1"));
        e.type2 = parse_decimal(field<std::string>(row, "type2"));
        if (e.type1 + e.type2 != e.total) throw SpecError("weight " + std::to_string(w) + ": type counts do not add up");
      }
    } catch (const SpecError&) {
      throw;
    } catch (const std::invalid_argument& ex) {
      throw SpecError(ex.what());
    }
    s.entries[w] = std::move(e);
  }
  return s;
}

}  // namespace polarwt
