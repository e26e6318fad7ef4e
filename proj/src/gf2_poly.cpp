#include "polarwt/gf2_poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace polarwt {

namespace {

// in-word truth tables of x_1..x_6 under the p -> b convention
constexpr std::array<std::uint64_t, 6> kLowVarPattern = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

void check_eval_vars(int m) {
  if (m < 0 || m > kMaxEvalVars)
    throw std::invalid_argument("evaluation vectors support 0 <= m <= " + std::to_string(kMaxEvalVars));
}

std::uint64_t tail_mask(int m) { return m >= 6 ? ~0ull : ((1ull << (1u << m)) - 1); }

}  // namespace

Monomial Monomial::from_vars(std::span<const int> vars) {
  std::uint32_t mask = 0;
  for (int v : vars) {
    if (v < 1 || v > kMaxVars) throw std::invalid_argument("variable index out of range: " + std::to_string(v));
    mask |= 1u << (v - 1);
  }
  return Monomial(mask);
}

int Monomial::degree() const { return std::popcount(mask_); }

int Monomial::max_var() const { return 32 - std::countl_zero(mask_); }

std::vector<int> Monomial::vars() const {
  std::vector<int> out;
  for (std::uint32_t w = mask_; w; w &= w - 1) out.push_back(std::countr_zero(w) + 1);
  return out;
}

std::string Monomial::to_string() const {
  if (mask_ == 0) return "1";
  std::string s;
  for (int v : vars()) s += "x" + std::to_string(v);
  return s;
}

int LinearPoly::largest_term() const {
  if (coeffs_ == 0) throw std::domain_error("largest term of a constant polynomial");
  return 32 - std::countl_zero(coeffs_);
}

std::string LinearPoly::to_string() const {
  std::string s;
  for (std::uint32_t w = coeffs_; w; w &= w - 1) {
    if (!s.empty()) s += "+";
    s += "x" + std::to_string(std::countr_zero(w) + 1);
  }
  if (constant_) s += s.empty() ? "1" : "+1";
  return s.empty() ? "0" : s;
}

EvalVector::EvalVector(int m) : m_(m) {
  check_eval_vars(m);
  words_.assign(m >= 6 ? std::size_t{1} << (m - 6) : 1, 0);
}

void EvalVector::set(std::size_t p, bool v) {
  const std::uint64_t b = 1ull << (p & 63);
  if (v) words_[p >> 6] |= b;
  else words_[p >> 6] &= ~b;
}

std::size_t EvalVector::weight() const {
  std::size_t w = 0;
  for (auto x : words_) w += std::popcount(x);
  return w;
}

bool EvalVector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t x) { return x == 0; });
}

EvalVector& EvalVector::operator^=(const EvalVector& o) {
  if (o.m_ != m_) throw std::invalid_argument("evaluation vectors of different lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

EvalVector& EvalVector::operator&=(const EvalVector& o) {
  if (o.m_ != m_) throw std::invalid_argument("evaluation vectors of different lengths");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

MultilinearPoly::MultilinearPoly(const LinearPoly& g) {
  for (std::uint32_t w = g.coeffs(); w; w &= w - 1) terms_.insert(Monomial(w & -w));
  if (g.constant()) terms_.insert(Monomial{});
}

bool MultilinearPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->mask() == 0);
}

int MultilinearPoly::degree() const {
  int d = -1;
  for (auto e : terms_) d = std::max(d, e.degree());
  return d;
}

int MultilinearPoly::max_var() const {
  std::uint32_t all = 0;
  for (auto e : terms_) all |= e.mask();
  return Monomial(all).max_var();
}

bool MultilinearPoly::mentions(int var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](Monomial e) { return e.contains(var); });
}

void MultilinearPoly::toggle(Monomial e) {
  auto [it, inserted] = terms_.insert(e);
  if (!inserted) terms_.erase(it);
}

MultilinearPoly& MultilinearPoly::operator+=(const MultilinearPoly& o) {
  for (auto e : o.terms_) toggle(e);
  return *this;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out;
  for (auto x : a.terms_)
    for (auto y : b.terms_) out.toggle(x * y);
  return out;
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto e : terms_) {
    if (!s.empty()) s += "+";
    s += e.to_string();
  }
  return s;
}

EvalVector eval_monomial(Monomial e, int m) {
  EvalVector out(m);
  if (e.max_var() > m) throw std::invalid_argument("monomial " + e.to_string() + " exceeds m = " + std::to_string(m));
  std::uint64_t low = tail_mask(m);
  for (int i = 1; i <= std::min(m, 6); ++i)
    if (e.contains(i)) low &= kLowVarPattern[i - 1];
  const std::uint32_t high = e.mask() >> 6;
  auto words = out.words();
  for (std::size_t w = 0; w < words.size(); ++w)
    words[w] = (static_cast<std::uint32_t>(w) & high) == high ? low : 0;
  return out;
}

EvalVector eval_vector(const MultilinearPoly& f, int m) {
  EvalVector out(m);
  for (auto e : f.terms()) out ^= eval_monomial(e, m);
  return out;
}

EvalVector eval_vector(const LinearPoly& g, int m) { return eval_vector(MultilinearPoly(g), m); }

MultilinearPoly product(std::span<const LinearPoly> factors) {
  MultilinearPoly out = MultilinearPoly::one();
  for (const auto& g : factors) out = out * MultilinearPoly(g);
  return out;
}

MultilinearPoly substitute(const MultilinearPoly& h, int t, const LinearPoly& g) {
  const MultilinearPoly repl(g + LinearPoly::var(t) + LinearPoly::one());
  const std::uint32_t bit = 1u << (t - 1);
  MultilinearPoly out;
  for (auto e : h.terms()) {
    if (e.mask() & bit) out += MultilinearPoly(Monomial(e.mask() & ~bit)) * repl;
    else out.toggle(e);
  }
  return out;
}

RestrictedForm restricted_form(const MultilinearPoly& f, int m) {
  if (m > 8) throw std::invalid_argument("restricted_form is limited to m <= 8");
  if (f.is_constant()) throw std::invalid_argument("restricted_form needs a non-constant, nonzero polynomial");
  const EvalVector fv = eval_vector(f, m);

  std::vector<EvalVector> var_ev;
  for (int i = 1; i <= m; ++i) var_ev.push_back(eval_monomial(Monomial(1u << (i - 1)), m));
  EvalVector ones = eval_monomial(Monomial{}, m);

  // Affine functions vanishing on supp(f), kept in reduced echelon form by
  // their highest variable.  Entry bit 0 is the constant, bit i is x_i.
  std::array<std::uint64_t, 33> basis{};
  for (std::uint32_t c = 1; c < (1u << m); ++c) {
    EvalVector gv(m);
    for (int i = 1; i <= m; ++i)
      if ((c >> (i - 1)) & 1u) gv ^= var_ev[i - 1];
    for (int k = 0; k < 2; ++k) {
      // g is a factor iff f = 0 wherever g = 0
      const EvalVector outside = fv & (gv ^ ones);
      if (outside.is_zero()) {
        std::uint64_t w = (std::uint64_t{c} << 1) | (k == 0 ? 1u : 0u);  // w = g + 1
        for (int p = m; p >= 1; --p)
          if (((w >> p) & 1u) && basis[p]) w ^= basis[p];
        if (w >> 1) {
          const int p = 63 - std::countl_zero(w);
          for (int q = m; q >= 1; --q)
            if (q != p && basis[q] && ((basis[q] >> p) & 1u)) basis[q] ^= w;
          basis[p] = w;
        }
      }
      gv ^= ones;
    }
  }

  RestrictedForm out;
  out.residual = f;
  for (int p = 1; p <= m; ++p) {
    if (!basis[p]) continue;
    const LinearPoly g(static_cast<std::uint32_t>(basis[p] >> 1), !(basis[p] & 1u));
    out.factors.push_back(g);
    out.residual = substitute(out.residual, p, g);
  }
  return out;
}

std::vector<LinearPair> normalize_pair_sum(std::vector<LinearPair> pairs) {
  {
    std::vector<LinearPoly> all;
    for (const auto& [h, g] : pairs) {
      all.push_back(h);
      all.push_back(g);
    }
    if (!linearly_independent(all)) throw std::invalid_argument("pair polynomials are not linearly independent");
  }
  auto slot = [&pairs](std::size_t i, int s) -> LinearPoly& { return s ? pairs[i].second : pairs[i].first; };
  auto F = [](const LinearPoly& g) { return g.largest_term(); };
  constexpr std::array<std::pair<int, int>, 4> kCases = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

  for (;;) {
    bool rewrote = false;
    for (auto& [h, g] : pairs) {
      if (F(h) == F(g)) {
        g = h + g + LinearPoly::one();  // h*g = h*(h+g+1)
        rewrote = true;
        break;
      }
    }
    for (std::size_t i = 0; i < pairs.size() && !rewrote; ++i) {
      for (std::size_t j = i + 1; j < pairs.size() && !rewrote; ++j) {
        for (auto [si, sj] : kCases) {
          if (F(slot(i, si)) != F(slot(j, sj))) continue;
          // p*q + p2*q2 = p*(q+q2) + (p+p2)*q2; the pair whose partner has
          // the larger top variable keeps its p so no index grows.
          LinearPoly& p = slot(i, si);
          LinearPoly& q = slot(i, 1 - si);
          LinearPoly& p2 = slot(j, sj);
          LinearPoly& q2 = slot(j, 1 - sj);
          const LinearPoly sum_q = q + q2;
          const LinearPoly sum_p = p + p2;
          if (F(q) >= F(q2)) {
            q = sum_q;
            p2 = sum_p;
          } else {
            q2 = sum_q;
            p = sum_p;
          }
          rewrote = true;
          break;
        }
      }
    }
    if (!rewrote) return pairs;
  }
}

bool linearly_independent(std::span<const LinearPoly> polys) {
  std::array<std::uint32_t, 32> basis{};
  for (const auto& g : polys) {
    std::uint32_t v = g.coeffs();
    while (v) {
      const int p = 31 - std::countl_zero(v);
      if (!basis[p]) {
        basis[p] = v;
        break;
      }
      v ^= basis[p];
    }
    if (!v) return false;
  }
  return true;
}

}  // namespace polarwt
