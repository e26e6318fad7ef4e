#include "polarwt/monomial_code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace polarwt {

namespace {

constexpr int kMaxCodeVars = 20;

void check_m(int m) {
  if (m < 1 || m > kMaxCodeVars)
    throw std::invalid_argument("number of variables must lie in [1, " + std::to_string(kMaxCodeVars) + "]");
}

std::uint32_t full_mask(int m) { return m >= 32 ? ~0u : (1u << m) - 1; }

// ascending row order == descending mask
void sort_rows(std::vector<Monomial>& v) {
  std::sort(v.begin(), v.end(), [](Monomial a, Monomial b) { return a.mask() > b.mask(); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

InfoSet from_ranked(int m, std::vector<std::uint64_t> order, std::size_t k, const char* what) {
  order.resize(k);
  std::vector<Monomial> mons;
  for (auto z : order) mons.push_back(monomial_from_row(z, m));
  auto check = is_decreasing(mons, m);
  if (!check) throw std::logic_error(std::string(what) + " produced a non-decreasing set");
  return InfoSet(m, mons);
}

}  // namespace

Monomial monomial_from_row(std::uint64_t z, int m) {
  check_m(m);
  const std::uint64_t n = std::uint64_t{1} << m;
  if (z >= n) throw std::out_of_range("row " + std::to_string(z) + " outside [0, " + std::to_string(n) + ")");
  return Monomial(static_cast<std::uint32_t>(n - 1 - z));
}

std::uint64_t row_from_monomial(Monomial e, int m) {
  check_m(m);
  if (e.max_var() > m) throw std::out_of_range("monomial " + e.to_string() + " exceeds m");
  return (std::uint64_t{1} << m) - 1 - e.mask();
}

bool leq(Monomial e, Monomial e2) {
  const auto a = e.vars();
  const auto b = e2.vars();
  if (a.size() > b.size()) return false;
  // the best divisor of e2 keeps its largest |e| variables
  const std::size_t off = b.size() - a.size();
  for (std::size_t l = 0; l < a.size(); ++l)
    if (a[l] > b[off + l]) return false;
  return true;
}

NotDecreasingError::NotDecreasingError(const Violation& v)
    : std::invalid_argument("information set is not decreasing: " + v.missing.to_string() + " precedes " +
                            v.present.to_string() + " but is missing"),
      v_(v) {}

DecreasingCheck is_decreasing(std::span<const Monomial> monomials, int m) {
  check_m(m);
  std::vector<bool> member(std::size_t{1} << m, false);
  for (auto e : monomials) {
    if (e.max_var() > m) throw std::invalid_argument("monomial " + e.to_string() + " exceeds m");
    member[e.mask()] = true;
  }
  std::vector<Monomial> sorted(monomials.begin(), monomials.end());
  sort_rows(sorted);
  // The order is generated by deleting one variable and by lowering one
  // index into a free slot, so closure under those moves is enough.
  for (auto e : sorted) {
    const std::uint32_t s = e.mask();
    for (int i = 1; i <= m; ++i) {
      const std::uint32_t bit = 1u << (i - 1);
      if (!(s & bit)) continue;
      if (i > 1 && !(s & (bit >> 1))) {
        const Monomial lower(s ^ bit ^ (bit >> 1));
        if (!member[lower.mask()]) return {false, Violation{lower, e}};
      }
      const Monomial dropped(s ^ bit);
      if (!member[dropped.mask()]) return {false, Violation{dropped, e}};
    }
  }
  return {};
}

InfoSet::InfoSet(int m, std::span<const Monomial> monomials) : m_(m), monomials_(monomials.begin(), monomials.end()) {
  check_m(m);
  sort_rows(monomials_);
  if (auto check = is_decreasing(monomials_, m); !check) throw NotDecreasingError(*check.violation);
  member_.assign(std::size_t{1} << m, false);
  for (auto e : monomials_) {
    member_[e.mask()] = true;
    r_ = std::max(r_, e.degree());
  }
}

InfoSet InfoSet::from_rows(int m, std::span<const std::uint64_t> rows) {
  std::vector<Monomial> mons;
  for (auto z : rows) mons.push_back(monomial_from_row(z, m));
  return InfoSet(m, mons);
}

InfoSet InfoSet::closure(std::span<const Monomial> generators, int m) { return decreasing_closure(generators, m); }

InfoSet InfoSet::closure_of_rows(std::span<const std::uint64_t> rows, int m) {
  std::vector<Monomial> gens;
  for (auto z : rows) gens.push_back(monomial_from_row(z, m));
  return decreasing_closure(gens, m);
}

std::vector<std::uint64_t> InfoSet::rows() const {
  std::vector<std::uint64_t> out;
  for (auto e : monomials_) out.push_back(row_from_monomial(e, m_));
  return out;
}

std::vector<Monomial> InfoSet::top_degree() const {
  std::vector<Monomial> out;
  for (auto e : monomials_)
    if (e.degree() == r_) out.push_back(e);
  std::sort(out.begin(), out.end());
  return out;
}

InfoSet decreasing_closure(std::span<const Monomial> generators, int m) {
  check_m(m);
  for (auto g : generators)
    if (g.max_var() > m) throw std::invalid_argument("generator " + g.to_string() + " exceeds m");
  std::vector<Monomial> out;
  for (std::uint32_t s = 0; s <= full_mask(m); ++s) {
    const Monomial e(s);
    if (std::any_of(generators.begin(), generators.end(), [e](Monomial g) { return leq(e, g); })) out.push_back(e);
  }
  return InfoSet(m, out);
}

CodeParams code_params(const InfoSet& info) {
  if (info.empty()) throw std::invalid_argument("empty information set");
  return {info.max_degree(), std::uint64_t{1} << (info.m() - info.max_degree()), info.size()};
}

InfoSet construct_rm(int m, int r) {
  check_m(m);
  if (r < 0 || r > m) throw std::invalid_argument("Reed-Muller order must lie in [0, m]");
  std::vector<Monomial> out;
  for (std::uint32_t s = 0; s <= full_mask(m); ++s)
    if (Monomial(s).degree() <= r) out.push_back(Monomial(s));
  return InfoSet(m, out);
}

InfoSet construct_bec(int m, std::size_t k, double erasure_prob) {
  check_m(m);
  const std::uint64_t n = std::uint64_t{1} << m;
  if (k < 1 || k > n) throw std::invalid_argument("K must lie in [1, 2^m]");
  if (!(erasure_prob > 0.0 && erasure_prob < 1.0)) throw std::invalid_argument("erasure probability must lie in (0, 1)");
  // Keep whichever of Z and 1 - Z is below one half so that values
  // crowding either end stay distinguishable.
  struct Side {
    bool complement;
    long double v;
  };
  std::vector<Side> z(n);
  for (std::uint64_t row = 0; row < n; ++row) {
    const std::uint64_t a = n - 1 - row;
    Side s{false, erasure_prob};
    if (erasure_prob > 0.5L) s = {true, 1.0L - erasure_prob};
    for (int i = m; i >= 1; --i) {
      // the upper branch 2Z - Z^2 is the lower branch on the complement
      const bool upper = ((a >> (i - 1)) & 1u) != s.complement;
      const long double v = upper ? 2 * s.v - s.v * s.v : s.v * s.v;
      s = v <= 0.5L ? Side{s.complement, v} : Side{!s.complement, 1.0L - v};
    }
    z[row] = s;
  }
  auto less_z = [&](std::uint64_t x, std::uint64_t y) {
    const Side& a = z[x];
    const Side& b = z[y];
    if (a.complement != b.complement) return !a.complement;
    if (a.v != b.v) return a.complement ? a.v > b.v : a.v < b.v;
    return x > y;  // smaller monomial first on exact ties
  };
  std::vector<std::uint64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), less_z);
  return from_ranked(m, std::move(order), k, "erasure-channel construction");
}

InfoSet construct_pw(int m, std::size_t k) {
  check_m(m);
  const std::uint64_t n = std::uint64_t{1} << m;
  if (k < 1 || k > n) throw std::invalid_argument("K must lie in [1, 2^m]");
  const long double beta = std::pow(2.0L, 0.25L);
  std::vector<long double> w(n, 0);
  for (std::uint64_t row = 0; row < n; ++row)
    for (int j = 0; j < m; ++j)
      if ((row >> j) & 1u) w[row] += std::pow(beta, static_cast<long double>(j));
  std::vector<std::uint64_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return w[x] != w[y] ? w[x] > w[y] : x > y; });
  return from_ranked(m, std::move(order), k, "polarization-weight construction");
}

std::vector<InfoSet> all_decreasing_codes(int m) {
  if (m < 1 || m > 5) throw std::invalid_argument("exhaustive corpus is limited to 1 <= m <= 5");
  // (degree, index sum) is a linear extension of the order
  std::vector<Monomial> order;
  for (std::uint32_t s = 0; s <= full_mask(m); ++s) order.push_back(Monomial(s));
  auto key = [](Monomial e) {
    const auto v = e.vars();
    return std::pair(e.degree(), std::accumulate(v.begin(), v.end(), 0));
  };
  std::stable_sort(order.begin(), order.end(), [&](Monomial a, Monomial b) { return key(a) < key(b); });

  std::vector<InfoSet> out;
  std::vector<bool> member(std::size_t{1} << m, false);
  std::vector<Monomial> chosen;
  auto admissible = [&](Monomial e) {
    const std::uint32_t s = e.mask();
    for (int i = 1; i <= m; ++i) {
      const std::uint32_t bit = 1u << (i - 1);
      if (!(s & bit)) continue;
      if (!member[s ^ bit]) return false;
      if (i > 1 && !(s & (bit >> 1)) && !member[s ^ bit ^ (bit >> 1)]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == order.size()) {
      if (!chosen.empty()) out.emplace_back(m, chosen);
      return;
    }
    self(self, i + 1);
    if (admissible(order[i])) {
      member[order[i].mask()] = true;
      chosen.push_back(order[i]);
      self(self, i + 1);
      chosen.pop_back();
      member[order[i].mask()] = false;
    }
  };
  rec(rec, 0);
  return out;
}

InfoSet random_decreasing_code(int m, std::size_t max_k, std::mt19937_64& rng) {
  check_m(m);
  if (max_k < 1) throw std::invalid_argument("max_k must be positive");
  std::uniform_int_distribution<int> gens_count(1, 4);
  std::uniform_int_distribution<std::uint32_t> pick(0, full_mask(m));
  for (;;) {
    std::vector<Monomial> gens(gens_count(rng));
    for (auto& g : gens) g = Monomial(pick(rng));
    auto info = decreasing_closure(gens, m);
    if (info.size() <= max_k) return info;
  }
}

}  // namespace polarwt
