#include "polarwt/spectrum.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace polarwt {

BigCount parse_decimal(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw std::invalid_argument("not a nonnegative decimal integer: '" + s + "'");
  return BigCount(s);
}

std::string to_scientific(const BigCount& v, int significant) {
  using Float = boost::multiprecision::cpp_dec_float_50;
  std::ostringstream os;
  os << std::scientific << std::setprecision(std::max(0, significant - 1)) << Float(v);
  return os.str();
}

namespace {

std::uint32_t mask_of(std::span<const int> idx) {
  std::uint32_t s = 0;
  for (int i : idx) s |= 1u << (i - 1);
  return s;
}

bool strictly_ascending(std::span<const int> v) {
  return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

bool all_distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

// a <=_l b, compared from the last coordinate backward
bool block_leq(std::span<const int> a, std::span<const int> b) {
  return !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

// k-subsets of [1, m] in lexicographic order
std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i + 1;
  for (;;) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == m - k + i + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// All mu-subsets of pool, lexicographic.
std::vector<std::vector<int>> blocks_of(std::span<const int> pool, int mu) {
  std::vector<std::vector<int>> out;
  for (auto& c : combinations(static_cast<int>(pool.size()), mu)) {
    std::vector<int> b;
    for (int i : c) b.push_back(pool[i - 1]);
    out.push_back(std::move(b));
  }
  return out;
}

// Leading blocks spread round-robin over worker threads; each worker folds
// its own partial sum and partials are added in worker order.
template <class PerLead>
BigCount fold_leads(const std::vector<std::vector<int>>& leads, unsigned threads, PerLead per_lead) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(leads.size())));
  std::vector<BigCount> partial(threads);
  auto work = [&](unsigned w) {
    for (std::size_t i = w; i < leads.size(); i += threads) partial[w] += per_lead(leads[i]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  BigCount total = 0;
  for (auto& p : partial) total += p;
  return total;
}

}  // namespace

IndexTuple IndexTuple::type_one(int r, int mu, std::vector<int> u) {
  require(r >= 2 && mu >= 1, "type-one tuples need r >= 2 and mu >= 1");
  require(u.size() == static_cast<std::size_t>(r + 2 * mu - 2), "type-one tuple has the wrong length");
  require(std::all_of(u.begin(), u.end(), [](int i) { return i >= 1 && i <= kMaxVars; }), "index out of range");
  require(all_distinct(u), "type-one indices must be distinct");
  IndexTuple t(TupleKind::type_one, r, mu, std::move(u));
  require(strictly_ascending(t.leading()), "leading block must ascend");
  for (int k = 1; k <= mu; ++k) {
    auto [h, g] = t.pair(k);
    require(h < g, "each pair must ascend");
    if (k > 1) require(t.pair(k - 1).first < h, "pairs must be sorted by their first index");
  }
  return t;
}

IndexTuple IndexTuple::type_two(int r, int mu, std::vector<int> u) {
  require(mu >= 1 && r >= mu, "type-two tuples need r >= mu >= 1");
  require(u.size() == static_cast<std::size_t>(r + mu), "type-two tuple has the wrong length");
  require(std::all_of(u.begin(), u.end(), [](int i) { return i >= 1 && i <= kMaxVars; }), "index out of range");
  IndexTuple t(TupleKind::type_two, r, mu, std::move(u));
  auto lead = t.leading();
  auto a = t.first_block();
  auto b = t.second_block();
  require(strictly_ascending(lead) && strictly_ascending(a) && strictly_ascending(b), "blocks must ascend");
  std::vector<int> la(lead.begin(), lead.end()), lb = la;
  la.insert(la.end(), a.begin(), a.end());
  lb.insert(lb.end(), b.begin(), b.end());
  require(all_distinct(la) && all_distinct(lb), "leading block overlaps a product block");
  require(block_leq(a, b), "first block must not follow the second lexicographically");
  return t;
}

std::span<const int> IndexTuple::leading() const {
  const int n = kind_ == TupleKind::type_one ? r_ - 2 : r_ - mu_;
  return std::span<const int>(u_).first(n);
}

std::pair<int, int> IndexTuple::pair(int t) const {
  if (kind_ != TupleKind::type_one || t < 1 || t > mu_) throw std::out_of_range("pair index");
  const std::size_t base = r_ - 2 + 2 * (t - 1);
  return {u_[base], u_[base + 1]};
}

std::span<const int> IndexTuple::first_block() const {
  if (kind_ != TupleKind::type_two) throw std::logic_error("first block of a type-one tuple");
  return std::span<const int>(u_).subspan(r_ - mu_, mu_);
}

std::span<const int> IndexTuple::second_block() const {
  if (kind_ != TupleKind::type_two) throw std::logic_error("second block of a type-one tuple");
  return std::span<const int>(u_).subspan(r_, mu_);
}

bool IndexTuple::identical_blocks() const {
  auto a = first_block();
  auto b = second_block();
  return std::equal(a.begin(), a.end(), b.begin());
}

bool IndexTuple::belongs_to(const InfoSet& info) const {
  if (r_ != info.max_degree()) return false;
  if (*std::max_element(u_.begin(), u_.end()) > info.m()) return false;
  const std::uint32_t lead = mask_of(leading());
  if (kind_ == TupleKind::type_one) {
    // with a single pair, the split into leading and pair is fixed by
    // putting the pair above the leading block
    if (mu_ == 1 && !leading().empty() && leading().back() > pair(1).first) return false;
    for (int t = 1; t <= mu_; ++t) {
      auto [h, g] = pair(t);
      if (!info.contains(Monomial(lead | mask_of(std::array{h, g})))) return false;
    }
    return true;
  }
  if (identical_blocks()) return true;
  return info.contains(Monomial(lead | mask_of(first_block()))) && info.contains(Monomial(lead | mask_of(second_block())));
}

int lambda(std::span<const int> ascending) {
  require(strictly_ascending(ascending), "lambda needs a strictly ascending list");
  int s = 0;
  for (std::size_t t = 0; t < ascending.size(); ++t) s += ascending[t] - static_cast<int>(t);
  return s;
}

int phi(std::span<const int> u, int s, int t, int k) {
  int c = 0;
  for (int j = std::max(s, 1); j <= std::min<int>(t, static_cast<int>(u.size())); ++j)
    if (u[j - 1] < k) ++c;
  return c;
}

int phibar(std::span<const int> u, int s, int t, int k) { return k - phi(u, s, t, k); }

BigCount count_min_weight(const InfoSet& info) {
  BigCount total = 0;
  for (auto e : info.top_degree()) total += pow2(lambda(e.vars()));
  return total;
}

bool type1_admissible(int m, int r, int mu) {
  if (mu < 1 || 2 * mu > m - r + 2) return false;
  return r >= 2;
}

bool type2_admissible(int m, int r, int mu) { return mu >= 3 && mu <= std::min(r, m - r); }

int alpha(const IndexTuple& u) {
  int a = 0;
  for (int k = 1; k <= u.mu(); ++k)
    for (int t = k + 1; t <= u.mu(); ++t) {
      auto [hk, gk] = u.pair(k);
      auto [ht, gt] = u.pair(t);
      if (hk < ht && ht < gk && gk < gt) ++a;
    }
  return a;
}

int beta(const IndexTuple& u) {
  const auto& idx = u.indices();
  const int n = static_cast<int>(idx.size());
  int b = 0;
  for (int t = 1; t <= u.mu(); ++t) {
    auto [h, g] = u.pair(t);
    b += phibar(idx, 1, n, g) - phibar(idx, 1, n, h);
  }
  return b;
}

int gamma(const IndexTuple& u) {
  const auto& idx = u.indices();
  int c = 0;
  for (int t = 1; t <= u.mu(); ++t) c += phibar(idx, 1, u.r() - 2, u.pair(t).first);
  return c;
}

namespace {

int type1_exponent(const IndexTuple& u) { return lambda(u.leading()) + alpha(u) + beta(u) + 2 * gamma(u); }

// Visits S_mu restricted to one leading block.
void walk_pairs(const InfoSet& info, int mu, const std::vector<int>& lead, const TupleSink& sink) {
  const int m = info.m();
  const int r = info.max_degree();
  const std::uint32_t lead_mask = mask_of(lead);
  if (!info.contains(Monomial(lead_mask))) return;
  const int floor = (mu == 1 && !lead.empty()) ? lead.back() : 0;

  std::vector<int> u(lead);
  u.reserve(r + 2 * mu - 2);
  std::uint32_t used = lead_mask;
  auto rec = [&](auto&& self, int depth, int last_first) -> void {
    if (depth == mu) {
      sink(IndexTuple::type_one(r, mu, u));
      return;
    }
    for (int h = std::max(last_first, floor) + 1; h <= m; ++h) {
      if (used & (1u << (h - 1))) continue;
      for (int g = h + 1; g <= m; ++g) {
        if (used & (1u << (g - 1))) continue;
        if (!info.contains(Monomial(lead_mask | (1u << (h - 1)) | (1u << (g - 1))))) continue;
        used |= (1u << (h - 1)) | (1u << (g - 1));
        u.push_back(h);
        u.push_back(g);
        self(self, depth + 1, h);
        u.resize(u.size() - 2);
        used &= ~((1u << (h - 1)) | (1u << (g - 1)));
      }
    }
  };
  rec(rec, 0, 0);
}

void walk_blocks(const InfoSet& info, int mu, const std::vector<int>& lead, const TupleSink& sink) {
  const int m = info.m();
  const int r = info.max_degree();
  const std::uint32_t lead_mask = mask_of(lead);
  std::vector<int> pool;
  for (int i = 1; i <= m; ++i)
    if (!(lead_mask & (1u << (i - 1)))) pool.push_back(i);
  const auto blocks = blocks_of(pool, mu);
  std::vector<bool> in_code(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) in_code[i] = info.contains(Monomial(lead_mask | mask_of(blocks[i])));
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!block_leq(blocks[a], blocks[b])) continue;
      if (a != b && !(in_code[a] && in_code[b])) continue;
      std::vector<int> u(lead);
      u.insert(u.end(), blocks[a].begin(), blocks[a].end());
      u.insert(u.end(), blocks[b].begin(), blocks[b].end());
      sink(IndexTuple::type_two(r, mu, std::move(u)));
    }
  }
}

}  // namespace

BigCount type1_contribution(const IndexTuple& u) {
  if (u.kind() != TupleKind::type_one) throw std::invalid_argument("type-one contribution of a type-two tuple");
  return pow2(type1_exponent(u));
}

void enumerate_S(const InfoSet& info, int mu, const TupleSink& sink) {
  if (info.empty()) throw std::invalid_argument("empty information set");
  const int r = info.max_degree();
  if (!type1_admissible(info.m(), r, mu)) return;
  for (const auto& lead : combinations(info.m(), r - 2)) walk_pairs(info, mu, lead, sink);
}

std::vector<IndexTuple> collect_S(const InfoSet& info, int mu) {
  std::vector<IndexTuple> out;
  enumerate_S(info, mu, [&](const IndexTuple& u) { out.push_back(u); });
  return out;
}

BigCount count_type1(const InfoSet& info, int mu, unsigned threads) {
  if (info.empty()) return 0;
  const int r = info.max_degree();
  if (!type1_admissible(info.m(), r, mu)) return 0;
  return fold_leads(combinations(info.m(), r - 2), threads, [&](const std::vector<int>& lead) {
    // exponent histogram keeps the inner loop off big integers
    std::vector<std::uint64_t> hist;
    walk_pairs(info, mu, lead, [&](const IndexTuple& u) {
      const auto e = static_cast<std::size_t>(type1_exponent(u));
      if (e >= hist.size()) hist.resize(e + 1, 0);
      ++hist[e];
    });
    BigCount s = 0;
    for (std::size_t e = 0; e < hist.size(); ++e)
      if (hist[e]) s += BigCount(hist[e]) << e;
    return s;
  });
}

int b_threshold(const IndexTuple& u, const InfoSet& info, int k) {
  if (u.kind() != TupleKind::type_two || !u.identical_blocks())
    throw std::invalid_argument("b_threshold applies to type-two tuples with identical blocks");
  if (k < 1 || k > u.mu()) throw std::out_of_range("slot index");
  const auto second = u.second_block();
  const std::uint32_t lead = mask_of(u.leading());
  const std::uint32_t block = mask_of(second);
  const std::uint32_t rest = lead | (block & ~(1u << (second[k - 1] - 1)));
  for (int t = info.m(); t >= 1; --t) {
    const std::uint32_t bit = 1u << (t - 1);
    if ((block | lead) & bit) continue;
    if (info.contains(Monomial(rest | bit))) return t;
  }
  return 0;
}

BigCount s_choices(const IndexTuple& u, const InfoSet& info, int k) {
  if (u.kind() != TupleKind::type_two) throw std::invalid_argument("s_choices of a type-one tuple");
  if (k < 1 || k > u.mu()) throw std::out_of_range("slot index");
  const auto& idx = u.indices();
  const int r = u.r();
  const int mu = u.mu();
  const int j = u.second_block()[k - 1];
  if (!u.identical_blocks()) {
    const int e1 = phibar(idx, 1, r - mu, j) - k + 1;
    const auto first = u.first_block();
    if (std::find(first.begin(), first.end(), j) == first.end()) return pow2(e1);
    const int e2 = phi(idx, r - mu + 1, r, j) + 1;
    return e1 > e2 ? pow2(e1) - pow2(e2) : BigCount(0);
  }
  // Free positions of the k-th second-block factor: everything up to the
  // threshold, but never at or above its own top variable, outside the
  // leading and first blocks, plus the constant.
  const int cap = std::min(b_threshold(u, info, k), j - 1);
  const std::uint32_t taken = mask_of(std::span<const int>(idx).first(r));
  int e = 1;
  for (int s = 1; s <= cap; ++s)
    if (!(taken & (1u << (s - 1)))) ++e;
  return e > k ? pow2(e) - pow2(k) : BigCount(0);
}

int type2_leading_exponent(const IndexTuple& u) {
  if (u.kind() != TupleKind::type_two) throw std::invalid_argument("type-two exponent of a type-one tuple");
  // Leading factors may mention first-block variables below them, so each
  // first-block factor sees only the slots the leading block leaves free.
  const auto& idx = u.indices();
  const int nl = u.r() - u.mu();
  int e = lambda(u.leading());
  const auto first = u.first_block();
  for (int t = 1; t <= u.mu(); ++t) e += phibar(idx, 1, nl, first[t - 1]) - t + 1;
  return e;
}

BigCount type2_contribution(const IndexTuple& u, const InfoSet& info) {
  BigCount prod = 1;
  for (int k = 1; k <= u.mu() && prod != 0; ++k) prod *= s_choices(u, info, k);
  if (u.identical_blocks()) {
    if (prod % 2 != 0) throw std::logic_error("odd choice product for identical blocks");
    prod /= 2;
  }
  return prod << type2_leading_exponent(u);
}

void enumerate_T(const InfoSet& info, int mu, const TupleSink& sink) {
  if (info.empty()) throw std::invalid_argument("empty information set");
  const int r = info.max_degree();
  if (!type2_admissible(info.m(), r, mu)) return;
  for (const auto& lead : combinations(info.m(), r - mu)) walk_blocks(info, mu, lead, sink);
}

std::vector<IndexTuple> collect_T(const InfoSet& info, int mu) {
  std::vector<IndexTuple> out;
  enumerate_T(info, mu, [&](const IndexTuple& u) { out.push_back(u); });
  return out;
}

BigCount count_type2(const InfoSet& info, int mu, unsigned threads) {
  if (info.empty()) return 0;
  const int r = info.max_degree();
  if (!type2_admissible(info.m(), r, mu)) return 0;
  return fold_leads(combinations(info.m(), r - mu), threads, [&](const std::vector<int>& lead) {
    BigCount s = 0;
    walk_blocks(info, mu, lead, [&](const IndexTuple& u) { s += type2_contribution(u, info); });
    return s;
  });
}

std::uint64_t shaped_weight(int m, int r, int mu) {
  const int top = m - r + 1;
  if (mu < 1 || mu > top || top >= 64) throw std::out_of_range("no weight of that shape");
  return (std::uint64_t{1} << top) - (std::uint64_t{1} << (top - mu));
}

BigCount WeightSpectrum::count(std::uint64_t weight) const {
  auto it = entries.find(weight);
  return it == entries.end() ? BigCount(0) : it->second.total;
}

WeightSpectrum full_spectrum(const InfoSet& info, unsigned threads, std::optional<int> only_mu) {
  const auto params = code_params(info);
  WeightSpectrum out;
  out.m = info.m();
  out.r = params.r;
  out.w_min = params.w_min;
  out.k = params.k;
  const int m = info.m();
  const int r = params.r;
  for (int mu = 1; mu <= m - r + 1; ++mu) {
    if (only_mu && *only_mu != mu) continue;
    const bool t1 = type1_admissible(m, r, mu);
    const bool t2 = type2_admissible(m, r, mu);
    if (mu > 1 && !t1 && !t2) continue;
    SpectrumEntry e;
    e.mu = mu;
    e.type1 = mu == 1 ? count_min_weight(info) : (t1 ? count_type1(info, mu, threads) : BigCount(0));
    e.type2 = t2 ? count_type2(info, mu, threads) : BigCount(0);
    e.total = e.type1 + e.type2;
    out.entries[shaped_weight(m, r, mu)] = std::move(e);
  }
  return out;
}

}  // namespace polarwt
