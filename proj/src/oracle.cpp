#include "polarwt/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace polarwt {

GeneratorMatrix::GeneratorMatrix(const InfoSet& info) : m_(info.m()), monomials_(info.monomials()) {
  rows_.reserve(monomials_.size());
  for (auto e : monomials_) rows_.push_back(eval_monomial(e, m_));
}

EvalVector encode(const InfoSet& info, std::span<const std::uint8_t> message) {
  if (message.size() != info.size())
    throw std::invalid_argument("message length " + std::to_string(message.size()) + " != K = " +
                                std::to_string(info.size()));
  EvalVector c(info.m());
  const auto& mons = info.monomials();
  for (std::size_t i = 0; i < mons.size(); ++i)
    if (message[i]) c ^= eval_monomial(mons[i], info.m());
  return c;
}

namespace {

using Tally = std::vector<std::uint64_t>;

// Walks messages begin..end-1 of the Gray sequence over `rows`, counting
// the weight of every visited codeword.
template <int W>
void gray_walk(const std::vector<const std::uint64_t*>& rows, std::uint64_t begin, std::uint64_t end,
               const std::uint64_t* start, Tally& tally) {
  std::array<std::uint64_t, W> c;
  std::copy(start, start + W, c.begin());
  auto count = [&] {
    unsigned w = 0;
    for (int j = 0; j < W; ++j) w += std::popcount(c[j]);
    ++tally[w];
  };
  count();
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const std::uint64_t* r = rows[std::countr_zero(i)];
    for (int j = 0; j < W; ++j) c[j] ^= r[j];
    count();
  }
}

void gray_walk_any(const std::vector<const std::uint64_t*>& rows, std::size_t words, std::uint64_t begin,
                   std::uint64_t end, const std::uint64_t* start, Tally& tally) {
  std::vector<std::uint64_t> c(start, start + words);
  auto count = [&] {
    std::size_t w = 0;
    for (auto x : c) w += std::popcount(x);
    ++tally[w];
  };
  count();
  for (std::uint64_t i = begin + 1; i < end; ++i) {
    const std::uint64_t* r = rows[std::countr_zero(i)];
    for (std::size_t j = 0; j < words; ++j) c[j] ^= r[j];
    count();
  }
}

}  // namespace

WeightSpectrum brute_spectrum(const InfoSet& info, std::uint64_t weight_cap, BruteOptions opts) {
  const auto params = code_params(info);
  if (opts.k_cap > kMaxKCap) throw std::invalid_argument("k_cap above " + std::to_string(kMaxKCap));
  if (info.size() > opts.k_cap)
    throw CapExceeded("K = " + std::to_string(info.size()) + " exceeds the brute-force cap of " +
                      std::to_string(opts.k_cap));
  const int m = info.m();
  const std::size_t n = std::size_t{1} << m;

  // The constant monomial is always present; walking the other K-1 rows
  // and counting each word together with its complement covers the code.
  GeneratorMatrix gm(info);
  std::vector<const std::uint64_t*> rows;
  for (std::size_t i = 0; i < gm.k(); ++i)
    if (gm.monomials()[i].mask() != 0) rows.push_back(gm.rows()[i].words().data());
  const std::size_t words = gm.rows().front().words().size();
  const std::uint64_t steps = std::uint64_t{1} << rows.size();

  const unsigned threads = std::max(1u, opts.threads);
  const std::uint64_t segments = std::min<std::uint64_t>(steps, std::uint64_t{threads} * 8);
  std::vector<Tally> partial(segments, Tally(n + 1, 0));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    std::vector<std::uint64_t> start(words);
    for (std::uint64_t s; (s = next.fetch_add(1)) < segments;) {
      const std::uint64_t begin = steps / segments * s + std::min(s, steps % segments);
      const std::uint64_t end = begin + steps / segments + (s < steps % segments ? 1 : 0);
      std::fill(start.begin(), start.end(), 0);
      const std::uint64_t g = begin ^ (begin >> 1);
      for (std::size_t b = 0; b < rows.size(); ++b)
        if ((g >> b) & 1u)
          for (std::size_t j = 0; j < words; ++j) start[j] ^= rows[b][j];
      switch (words) {
        case 1: gray_walk<1>(rows, begin, end, start.data(), partial[s]); break;
        case 2: gray_walk<2>(rows, begin, end, start.data(), partial[s]); break;
        case 4: gray_walk<4>(rows, begin, end, start.data(), partial[s]); break;
        default: gray_walk_any(rows, words, begin, end, start.data(), partial[s]);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Tally half(n + 1, 0);
  for (const auto& p : partial)
    for (std::size_t w = 0; w <= n; ++w) half[w] += p[w];

  WeightSpectrum out;
  out.m = m;
  out.r = params.r;
  out.w_min = params.w_min;
  out.k = params.k;
  out.oracle = true;
  for (std::size_t w = 1; w <= n && w < weight_cap; ++w) {
    const std::uint64_t c = half[w] + half[n - w];
    if (!c) continue;
    SpectrumEntry e;
    e.split = false;
    for (int mu = 1; mu <= m - params.r + 1; ++mu)
      if (m - params.r + 1 < 64 && shaped_weight(m, params.r, mu) == w) e.mu = mu;
    e.total = c;
    out.entries[w] = std::move(e);
  }
  return out;
}

std::vector<std::uint64_t> naive_weight_tally(const InfoSet& info) {
  if (info.size() > 24) throw CapExceeded("naive tally is limited to K <= 24");
  const std::size_t n = std::size_t{1} << info.m();
  std::vector<std::uint64_t> tally(n + 1, 0);
  std::vector<std::uint8_t> msg(info.size());
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << info.size()); ++x) {
    for (std::size_t i = 0; i < msg.size(); ++i) msg[i] = (x >> i) & 1u;
    ++tally[encode(info, msg).weight()];
  }
  return tally;
}

namespace {

// ---- small-m truth tables packed in one word -----------------------------

constexpr std::array<std::uint64_t, 6> kVarWord = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};
constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

std::uint64_t full_word(int m) { return m >= 6 ? ~0ull : (1ull << (1u << m)) - 1; }

// truth table <-> algebraic normal form (the transform is an involution)
std::uint64_t mobius(std::uint64_t x, int m) {
  for (int i = 0; i < std::min(m, 6); ++i) x ^= (x & kLowHalf[i]) << (1u << i);
  return x;
}

std::uint64_t code_mask(const InfoSet& info) {
  std::uint64_t s = 0;
  for (auto e : info.monomials()) s |= 1ull << e.mask();
  return s;
}

struct XorBasis {
  std::array<std::uint32_t, 32> b{};
  bool insert(std::uint32_t v) {
    while (v) {
      const int p = 31 - std::countl_zero(v);
      if (!b[p]) {
        b[p] = v;
        return true;
      }
      v ^= b[p];
    }
    return false;
  }
};

// A product of independent affine factors: its truth table and the
// homogeneous parts of the factors.
struct Product {
  std::uint64_t ev;
  std::vector<std::uint32_t> dirs;
};

bool extend(XorBasis& basis, const Product& p) {
  for (auto d : p.dirs)
    if (!basis.insert(d)) return false;
  return true;
}

// Distinct products of exactly d independent nonconstant affine functions.
std::vector<Product> products_of(int m, int d) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> affine;
  for (std::uint32_t c = 1; c < (1u << m); ++c) {
    std::uint64_t ev = 0;
    for (int i = 0; i < m; ++i)
      if ((c >> i) & 1u) ev ^= kVarWord[i];
    ev &= full_word(m);
    affine.emplace_back(ev, c);
    affine.emplace_back(ev ^ full_word(m), c);
  }
  std::vector<Product> level{{full_word(m), {}}};
  for (int step = 0; step < d; ++step) {
    std::vector<Product> next;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& p : level) {
      XorBasis base;
      extend(base, p);
      for (auto [ev, dir] : affine) {
        XorBasis b = base;
        if (!b.insert(dir)) continue;
        const std::uint64_t prod = p.ev & ev;
        if (!seen.insert(prod).second) continue;
        Product q{prod, p.dirs};
        q.dirs.push_back(dir);
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

BigCount forms_census_type1(const InfoSet& info, int mu) {
  const int m = info.m();
  const int r = info.max_degree();
  if (!type1_admissible(m, r, mu)) return 0;
  if (m > 5) throw std::invalid_argument("type-one forms census is limited to m <= 5");
  const std::uint64_t allowed = code_mask(info);
  const auto leads = products_of(m, r - 2);
  const auto pairs = products_of(m, 2);
  std::unordered_set<std::uint64_t> words;
  for (const auto& lead : leads) {
    XorBasis base;
    extend(base, lead);
    auto rec = [&](auto&& self, std::size_t from, int depth, const XorBasis& basis, std::uint64_t sum) -> void {
      if (depth == mu) {
        const std::uint64_t w = lead.ev & sum;
        if ((mobius(w, m) & ~allowed) == 0) words.insert(w);
        return;
      }
      for (std::size_t i = from; i < pairs.size(); ++i) {
        XorBasis b = basis;
        if (!extend(b, pairs[i])) continue;
        self(self, i + 1, depth + 1, b, sum ^ pairs[i].ev);
      }
    };
    rec(rec, 0, 0, base, 0);
  }
  return words.size();
}

BigCount forms_census_type2(const InfoSet& info, int mu) {
  const int m = info.m();
  if (m > 6 || mu != 3) throw std::invalid_argument("type-two forms census is limited to m <= 6 and mu = 3");
  const int r = info.max_degree();
  if (!type2_admissible(m, r, mu)) return 0;
  const std::uint64_t allowed = code_mask(info);
  const auto leads = products_of(m, r - mu);
  const auto blocks = products_of(m, mu);
  std::unordered_set<std::uint64_t> words;
  for (const auto& lead : leads) {
    XorBasis base;
    extend(base, lead);
    // lead*A + lead*B lies in the code iff both halves share their
    // monomials outside the code, so only same-key halves are paired
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_key;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      XorBasis b = base;
      if (!extend(b, blocks[i])) continue;
      by_key[mobius(lead.ev & blocks[i].ev, m) & ~allowed].push_back(i);
    }
    for (const auto& [key, group] : by_key) {
      for (std::size_t x = 0; x < group.size(); ++x) {
        XorBasis bx = base;
        extend(bx, blocks[group[x]]);
        for (std::size_t y = x + 1; y < group.size(); ++y) {
          XorBasis b = bx;
          if (!extend(b, blocks[group[y]])) continue;
          words.insert(lead.ev & (blocks[group[x]].ev ^ blocks[group[y]].ev));
        }
      }
    }
  }
  return words.size();
}

namespace {

using Wide = std::array<std::uint64_t, 2>;  // truth table for m <= 7

struct WideHash {
  std::size_t operator()(const Wide& w) const { return std::hash<std::uint64_t>{}(w[0] * 0x9E3779B97F4A7C15ull ^ w[1]); }
};

Wide wide_mobius(Wide x, int m) {
  for (auto& w : x) w = mobius(w, m);
  if (m == 7) x[1] ^= x[0];
  return x;
}

// Calls emit(points) for every d-dimensional affine flat of F_2^m.
template <class Emit>
void for_each_flat(int m, int d, Emit emit) {
  // Reduced echelon bases: vector t has top bit pivot[t], zeros on the
  // other pivots, free bits on lower non-pivot positions.
  std::vector<int> pivot(d);
  auto pick_pivots = [&](auto&& self, int t, int lo) -> void {
    if (t == d) {
      std::uint32_t pivot_mask = 0;
      for (int p : pivot) pivot_mask |= 1u << p;
      std::vector<std::vector<int>> free(d);
      int free_total = 0;
      for (int t2 = 0; t2 < d; ++t2) {
        for (int q = 0; q < pivot[t2]; ++q)
          if (!((pivot_mask >> q) & 1u)) free[t2].push_back(q);
        free_total += static_cast<int>(free[t2].size());
      }
      std::vector<std::uint32_t> basis(d);
      for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << free_total); ++fill) {
        int bit = 0;
        for (int t2 = 0; t2 < d; ++t2) {
          basis[t2] = 1u << pivot[t2];
          for (int q : free[t2])
            if ((fill >> bit++) & 1u) basis[t2] |= 1u << q;
        }
        std::vector<std::uint32_t> span{0};
        for (auto v : basis) {
          const std::size_t sz = span.size();
          for (std::size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ v);
        }
        for (std::uint32_t c = 0; c < (1u << m); ++c) {
          if (c & pivot_mask) continue;
          Wide pts{};
          for (auto s : span) {
            const std::uint32_t p = s ^ c;
            pts[p >> 6] |= 1ull << (p & 63);
          }
          emit(pts);
        }
      }
      return;
    }
    for (int p = lo; p < m; ++p) {
      pivot[t] = p;
      self(self, t + 1, p + 1);
    }
  };
  pick_pivots(pick_pivots, 0, 0);
}

}  // namespace

BigCount flat_pair_census(const InfoSet& info, int mu) {
  const int m = info.m();
  if (m > 7) throw std::invalid_argument("flat-pair census is limited to m <= 7");
  const int r = info.max_degree();
  if (!type2_admissible(m, r, mu)) return 0;
  Wide allowed{};
  for (auto e : info.monomials()) allowed[e.mask() >> 6] |= 1ull << (e.mask() & 63);

  std::unordered_map<Wide, std::vector<Wide>, WideHash> by_key;
  for_each_flat(m, m - r, [&](const Wide& pts) {
    Wide key = wide_mobius(pts, m);
    key[0] &= ~allowed[0];
    key[1] &= ~allowed[1];
    by_key[key].push_back(pts);
  });
  const int meet = 1 << (m - r - mu);
  std::unordered_set<Wide, WideHash> words;
  for (const auto& [key, group] : by_key)
    for (std::size_t x = 0; x < group.size(); ++x)
      for (std::size_t y = x + 1; y < group.size(); ++y) {
        const auto& a = group[x];
        const auto& b = group[y];
        if (std::popcount(a[0] & b[0]) + std::popcount(a[1] & b[1]) == meet) words.insert({a[0] ^ b[0], a[1] ^ b[1]});
      }
  return words.size();
}

bool weight_shape_check(const WeightSpectrum& spectrum, int m, int r) {
  const int top = m - r + 1;
  for (const auto& [w, e] : spectrum.entries) {
    if (e.total == 0 || w >= (std::uint64_t{1} << top)) continue;
    bool shaped = false;
    for (int mu = 1; mu <= top && !shaped; ++mu) shaped = shaped_weight(m, r, mu) == w;
    if (!shaped) return false;
  }
  return true;
}

}  // namespace polarwt
