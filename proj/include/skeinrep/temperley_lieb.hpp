#pragma once

/// The Temperley-Lieb algebra T_n over K in its planar-diagram basis, with
/// Jones-Wenzl idempotents, traces, braiding and annulus closures.
///
/// A diagram on n strands is a planar perfect matching of the 2n boundary
/// points of a square: points 0..n-1 run along the top (left to right) and
/// points n..2n-1 along the bottom (left to right).  Products stack the left
/// factor above the right factor; every closed loop produced by a gluing
/// contributes the scalar delta = -A^2 - A^{-2}.

#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/polynomial.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skeinrep {

// gcc 11 misjudges the strand bound enforced by check_strands and reports
// impossible out-of-range writes into the fixed pairing array.
#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overflow"
#endif

class TLDiagram {
 public:
  static constexpr int kMaxStrands = 16;

  static TLDiagram identity(int n) {
    check_strands(n);
    TLDiagram d(n);
    for (int i = 0; i < n; ++i) {
      d.p_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + n);
      d.p_[static_cast<std::size_t>(i + n)] = static_cast<std::uint8_t>(i);
    }
    return d;
  }

  /// Cap generator e_i (1 <= i <= n-1): caps strands i, i+1 on top and bottom.
  static TLDiagram generator(int n, int i) {
    check_strands(n);
    if (i < 1 || i > n - 1) throw std::out_of_range("generator index");
    TLDiagram d = identity(n);
    d.link(i - 1, i);
    d.link(n + i - 1, n + i);
    return d;
  }

  static TLDiagram from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    check_strands(n);
    TLDiagram d(n);
    std::vector<bool> used(static_cast<std::size_t>(2 * n), false);
    if (static_cast<int>(pairs.size()) != n)
      throw std::invalid_argument("pairing must cover all 2n points");
    for (auto [u, v] : pairs) {
      if (u < 0 || v < 0 || u >= 2 * n || v >= 2 * n || u == v)
        throw std::invalid_argument("pairing endpoint out of range");
      if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)])
        throw std::invalid_argument("pairing endpoint repeated");
      used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
      d.link(u, v);
    }
    if (!d.is_planar()) throw std::invalid_argument("pairing is not planar");
    return d;
  }

  int strands() const { return n_; }

  int partner(int p) const {
    if (p < 0 || p >= 2 * n_) throw std::out_of_range("boundary point");
    return p_[static_cast<std::size_t>(p)];
  }

  /// Sorted list of pairs (u, v) with u < v.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < 2 * n_; ++u) {
      const int v = p_[static_cast<std::size_t>(u)];
      if (u < v) out.emplace_back(u, v);
    }
    return out;
  }

  friend bool operator==(const TLDiagram& a, const TLDiagram& b) {
    return a.n_ == b.n_ && std::memcmp(a.p_.data(), b.p_.data(), 2 * a.n_) == 0;
  }
  friend bool operator<(const TLDiagram& a, const TLDiagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::memcmp(a.p_.data(), b.p_.data(), 2 * a.n_) < 0;
  }

  struct Hash {
    std::size_t operator()(const TLDiagram& d) const {
      std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ d.n_;
      for (int i = 0; i < 2 * d.n_; ++i) {
        h ^= d.p_[static_cast<std::size_t>(i)];
        h *= 0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  /// Glues x (above) to y (below); returns the resulting diagram and the
  /// number of closed loops formed at the interface.
  static std::pair<TLDiagram, int> compose(const TLDiagram& x, const TLDiagram& y) {
    internal_check(x.n_ == y.n_, "compose strand mismatch");
    const int n = x.n_;
    TLDiagram out(n);
    std::array<bool, kMaxStrands> mid_seen{};
    // Walk from each result boundary point through alternating arcs.
    for (int start = 0; start < 2 * n; ++start) {
      if (out.p_[static_cast<std::size_t>(start)] != 0xff) continue;
      bool in_x = start < n;
      int cur = in_x ? x.p_[static_cast<std::size_t>(start)]
                     : y.p_[static_cast<std::size_t>(start)];
      int dest;
      while (true) {
        if (in_x) {
          if (cur < n) {
            dest = cur;  // landed on the result top
            break;
          }
          mid_seen[static_cast<std::size_t>(cur - n)] = true;
          cur = y.p_[static_cast<std::size_t>(cur - n)];
          in_x = false;
        } else {
          if (cur >= n) {
            dest = cur;  // landed on the result bottom
            break;
          }
          mid_seen[static_cast<std::size_t>(cur)] = true;
          cur = x.p_[static_cast<std::size_t>(cur + n)];
          in_x = true;
        }
      }
      out.link(start, dest);
    }
    // Remaining interface strands form closed loops.
    int loops = 0;
    for (int m = 0; m < n; ++m) {
      if (mid_seen[static_cast<std::size_t>(m)]) continue;
      ++loops;
      int cur = m;
      while (!mid_seen[static_cast<std::size_t>(cur)]) {
        mid_seen[static_cast<std::size_t>(cur)] = true;
        const int via_y = y.p_[static_cast<std::size_t>(cur)];
        mid_seen[static_cast<std::size_t>(via_y)] = true;
        cur = x.p_[static_cast<std::size_t>(via_y + n)] - n;
      }
    }
    return {out, loops};
  }

  /// Juxtaposition: x placed to the left of y.
  static TLDiagram juxtapose(const TLDiagram& x, const TLDiagram& y) {
    const int n = x.n_, m = y.n_;
    check_strands(n + m);
    TLDiagram out(n + m);
    auto map_x = [&](int p) { return p < n ? p : p + m; };
    auto map_y = [&](int q) { return q < m ? n + q : q + 2 * n; };
    for (int p = 0; p < 2 * n; ++p)
      out.p_[static_cast<std::size_t>(map_x(p))] =
          static_cast<std::uint8_t>(map_x(x.p_[static_cast<std::size_t>(p)]));
    for (int q = 0; q < 2 * m; ++q)
      out.p_[static_cast<std::size_t>(map_y(q))] =
          static_cast<std::uint8_t>(map_y(y.p_[static_cast<std::size_t>(q)]));
    return out;
  }

  /// Closes the last strand (top n-1 onto bottom 2n-1); the boolean is true
  /// when the closure produced a free loop.
  static std::pair<TLDiagram, bool> close_last(const TLDiagram& d) {
    const int n = d.n_;
    internal_check(n >= 1, "close_last needs a strand");
    const int t = n - 1, b = 2 * n - 1;
    TLDiagram out(n - 1);
    const bool loop = d.partner(t) == b;
    auto relabel = [&](int p) { return p < n ? p : p - 1; };
    for (int p = 0; p < 2 * n; ++p) {
      if (p == t || p == b) continue;
      int q = d.p_[static_cast<std::size_t>(p)];
      if (q == t) q = d.p_[static_cast<std::size_t>(b)];
      else if (q == b) q = d.p_[static_cast<std::size_t>(t)];
      if (p < q || out.p_[static_cast<std::size_t>(relabel(p))] == 0xff)
        out.link(relabel(p), relabel(q));
    }
    return {out, loop};
  }

  /// Loop statistics of the annular closure (top i glued to bottom i):
  /// first = contractible loops, second = loops parallel to the core.
  std::pair<int, int> closure_loops() const {
    const int n = n_;
    int contractible = 0, core = 0;
    std::array<bool, 2 * kMaxStrands> seen{};
    for (int s = 0; s < 2 * n; ++s) {
      if (seen[static_cast<std::size_t>(s)]) continue;
      int winding = 0;
      int cur = s;
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = true;
        const int q = p_[static_cast<std::size_t>(cur)];
        seen[static_cast<std::size_t>(q)] = true;
        // traverse the closure arc at q: top k joins bottom k+n
        if (q < n) {
          winding += 1;
          cur = q + n;
        } else {
          winding -= 1;
          cur = q - n;
        }
      }
      if (winding == 0) ++contractible;
      else ++core;
    }
    return {contractible, core};
  }

 private:
  explicit TLDiagram(int n) : n_(static_cast<std::uint8_t>(n)) { p_.fill(0xff); }

  static void check_strands(int n) {
    if (n < 0 || n > kMaxStrands) throw std::out_of_range("strand count out of range");
  }

  void link(int u, int v) {
    p_[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(v);
    p_[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(u);
  }

  // Points in cyclic boundary order: top left-to-right, then bottom
  // right-to-left.  A matching is planar iff no two chords cross.
  bool is_planar() const {
    auto circ = [&](int p) { return p < n_ ? p : 3 * n_ - 1 - p; };
    std::vector<std::pair<int, int>> chords;
    for (int u = 0; u < 2 * n_; ++u) {
      const int v = p_[static_cast<std::size_t>(u)];
      if (u < v) {
        int a = circ(u), b = circ(v);
        if (a > b) std::swap(a, b);
        chords.emplace_back(a, b);
      }
    }
    for (std::size_t i = 0; i < chords.size(); ++i) {
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        const auto [a, b] = chords[i];
        const auto [c, d] = chords[j];
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
      }
    }
    return true;
  }

  std::uint8_t n_;
  std::array<std::uint8_t, 2 * kMaxStrands> p_;
};

#if defined(__GNUC__) && !defined(__clang__)
#pragma GCC diagnostic pop
#endif

/// Enumerates all planar diagrams on n strands (Catalan(n) of them),
/// in a deterministic order.
inline std::vector<TLDiagram> all_diagrams(int n) {
  using Matching = std::vector<std::pair<int, int>>;
  // Noncrossing matchings of a run of circle positions: the first point
  // pairs at odd distance, splitting the rest into independent runs.
  auto gen = [](auto&& self, const std::vector<int>& pts) -> std::vector<Matching> {
    if (pts.empty()) return {Matching{}};
    std::vector<Matching> out;
    for (std::size_t k = 1; k < pts.size(); k += 2) {
      std::vector<int> inside(pts.begin() + 1, pts.begin() + static_cast<std::ptrdiff_t>(k));
      std::vector<int> outside(pts.begin() + static_cast<std::ptrdiff_t>(k) + 1, pts.end());
      for (const auto& im : self(self, inside)) {
        for (const auto& om : self(self, outside)) {
          Matching m;
          m.emplace_back(pts[0], pts[k]);
          m.insert(m.end(), im.begin(), im.end());
          m.insert(m.end(), om.begin(), om.end());
          out.push_back(std::move(m));
        }
      }
    }
    return out;
  };
  std::vector<int> points(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) points[static_cast<std::size_t>(i)] = i;
  auto uncirc = [&](int c) { return c < n ? c : 3 * n - 1 - c; };
  std::vector<TLDiagram> out;
  for (const auto& m : gen(gen, points)) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m.size());
    for (auto [a, b] : m) pairs.emplace_back(uncirc(a), uncirc(b));
    out.push_back(TLDiagram::from_pairs(n, pairs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A finite K-linear combination of diagrams on a common strand count.
class TLElement {
 public:
  using TermMap = std::map<TLDiagram, CycNum>;

  TLElement(const CycField& f, int n) : field_(&f), n_(n) {}

  static TLElement zero(const CycField& f, int n) { return TLElement(f, n); }

  static TLElement identity(const CycField& f, int n) {
    TLElement x(f, n);
    x.terms_.emplace(TLDiagram::identity(n), CycNum::one(f));
    return x;
  }

  static TLElement generator_e(const CycField& f, int n, int i) {
    TLElement x(f, n);
    x.terms_.emplace(TLDiagram::generator(n, i), CycNum::one(f));
    return x;
  }

  static TLElement single(const CycField& f, TLDiagram d, CycNum c) {
    TLElement x(f, d.strands());
    if (!c.is_zero()) x.terms_.emplace(std::move(d), std::move(c));
    return x;
  }

  const CycField& field() const { return *field_; }
  int strands() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CycNum coefficient(const TLDiagram& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? CycNum::zero(*field_) : it->second;
  }

  void add_term(const TLDiagram& d, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend TLElement operator+(const TLElement& a, const TLElement& b) {
    check_compatible(a, b);
    TLElement out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, c);
    return out;
  }

  friend TLElement operator-(const TLElement& a, const TLElement& b) {
    check_compatible(a, b);
    TLElement out = a;
    for (const auto& [d, c] : b.terms_) out.add_term(d, -c);
    return out;
  }

  friend TLElement operator*(const TLElement& a, const CycNum& s) {
    TLElement out(a.field(), a.n_);
    if (s.is_zero()) return out;
    for (const auto& [d, c] : a.terms_) out.terms_.emplace(d, c * s);
    return out;
  }
  friend TLElement operator*(const CycNum& s, const TLElement& a) { return a * s; }

  friend TLElement operator-(const TLElement& a) {
    TLElement out(a.field(), a.n_);
    for (const auto& [d, c] : a.terms_) out.terms_.emplace(d, -c);
    return out;
  }

  friend bool operator==(const TLElement& a, const TLElement& b) {
    check_compatible(a, b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TLElement& a, const TLElement& b) { return !(a == b); }

 private:
  static void check_compatible(const TLElement& a, const TLElement& b) {
    if (&a.field() != &b.field())
      throw std::invalid_argument("elements belong to different cyclotomic fields");
    if (a.n_ != b.n_) throw std::invalid_argument("strand count mismatch");
  }

  const CycField* field_;
  int n_;
  TermMap terms_;
};

namespace detail {

inline std::vector<CycNum> delta_powers(const CycField& f, int up_to) {
  std::vector<CycNum> out;
  out.push_back(CycNum::one(f));
  const CycNum d = kauffman_delta(f);
  for (int k = 1; k <= up_to; ++k) out.push_back(out.back() * d);
  return out;
}

inline TLElement tl_mul_generic(const TLElement& x, const TLElement& y) {
  const CycField& f = x.field();
  TLElement out(f, x.strands());
  const auto dpow = delta_powers(f, x.strands());
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      auto [d, loops] = TLDiagram::compose(dx, dy);
      CycNum c = cx * cy;
      if (loops > 0) c *= dpow[static_cast<std::size_t>(loops)];
      out.add_term(d, c);
    }
  }
  return out;
}

struct BucketKey {
  TLDiagram d;
  int loops;
  bool operator==(const BucketKey& o) const { return loops == o.loops && d == o.d; }
};
struct BucketKeyHash {
  std::size_t operator()(const BucketKey& k) const {
    return TLDiagram::Hash{}(k.d) * 1000003u + static_cast<std::size_t>(k.loops);
  }
};

// Machine-word product kernel.  Scales both factors to integer coordinate
// vectors over a shared denominator, accumulates unreduced convolutions in
// int128 buckets keyed by (diagram, loop count), and reduces each bucket
// once at the end.  Returns false when a magnitude bound cannot be
// guaranteed, in which case the caller falls back to the generic kernel.
inline bool tl_mul_fast(const TLElement& x, const TLElement& y, TLElement& out) {
  const CycField& f = x.field();
  if (!f.small_tables_ok()) return false;
  const int d = f.degree();
  if (2 * d - 1 > 64) return false;

  struct Flat {
    const TLDiagram* diag;
    std::array<std::int64_t, 32> c;
  };

  auto flatten = [&](const TLElement& e, std::vector<Flat>& flat, std::int64_t& den,
                     std::int64_t& maxabs) -> bool {
    den = 1;
    for (const auto& [diag, coeff] : e.terms()) {
      if (!coeff.is_small_repr()) return false;
      const Int128 l = Int128(den) / gcd64(den, coeff.small_denominator()) *
                       coeff.small_denominator();
      if (l > detail::kI64Max) return false;
      den = static_cast<std::int64_t>(l);
    }
    maxabs = 0;
    flat.reserve(e.terms().size());
    for (const auto& [diag, coeff] : e.terms()) {
      Flat fl;
      fl.diag = &diag;
      fl.c.fill(0);
      const std::int64_t scale = den / coeff.small_denominator();
      const auto& nums = coeff.small_numerators();
      for (int i = 0; i < d; ++i) {
        const Int128 v = Int128(nums[static_cast<std::size_t>(i)]) * scale;
        if (iabs128(v) > detail::kI64Max) return false;
        fl.c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v);
        maxabs = std::max(maxabs, fl.c[static_cast<std::size_t>(i)] < 0
                                      ? -fl.c[static_cast<std::size_t>(i)]
                                      : fl.c[static_cast<std::size_t>(i)]);
      }
      flat.push_back(fl);
    }
    return true;
  };

  std::vector<Flat> fx, fy;
  std::int64_t dx = 1, dy = 1, mx = 0, my = 0;
  if (!flatten(x, fx, dx, mx)) return false;
  if (!flatten(y, fy, dy, my)) return false;
  if (Int128(dx) * dy > detail::kI64Max) return false;
  if (mx == 0 || my == 0) {
    out = TLElement::zero(f, x.strands());
    return true;
  }

  // Magnitude budget: every pair could land in one bucket, each bucket is
  // then convolved with a delta power and reduced modulo the field polynomial.
  const int n = x.strands();
  const auto dpow = delta_powers(f, n);
  std::int64_t max_delta = 1;
  for (const auto& p : dpow) {
    for (const auto& v : p.small_numerators())
      max_delta = std::max(max_delta, v < 0 ? -v : v);
  }
  const Int128 pairs = Int128(fx.size()) * Int128(fy.size());
  Int128 budget = detail::kAccLimit;
  budget /= Int128(mx);
  budget /= Int128(my);
  budget /= Int128(d) * d;  // convolution width twice over
  budget /= Int128(max_delta);
  budget /= Int128(1) + Int128(f.max_table_entry()) * 4 * d;
  if (pairs > budget) return false;

  const int conv_len = 2 * d - 1;
  std::unordered_map<BucketKey, std::size_t, BucketKeyHash> index;
  std::vector<std::vector<Int128>> buckets;
  index.reserve(1024);

  for (const auto& ax : fx) {
    for (const auto& ay : fy) {
      auto [diag, loops] = TLDiagram::compose(*ax.diag, *ay.diag);
      BucketKey key{diag, loops};
      auto [it, inserted] = index.emplace(key, buckets.size());
      if (inserted) buckets.emplace_back(static_cast<std::size_t>(conv_len), Int128(0));
      auto& acc = buckets[it->second];
      for (int i = 0; i < d; ++i) {
        const std::int64_t xi = ax.c[static_cast<std::size_t>(i)];
        if (xi == 0) continue;
        for (int j = 0; j < d; ++j) {
          acc[static_cast<std::size_t>(i + j)] += Int128(xi) * ay.c[static_cast<std::size_t>(j)];
        }
      }
    }
  }

  const auto& rows = f.reduction64();
  auto reduce_in_place = [&](std::vector<Int128>& conv) {
    for (int k = 0; k + 1 < d; ++k) {
      const Int128 hi = conv[static_cast<std::size_t>(d + k)];
      if (hi == 0) continue;
      const auto& row = rows[static_cast<std::size_t>(k)];
      for (int j = 0; j < d; ++j) conv[static_cast<std::size_t>(j)] += hi * row[j];
    }
    conv.resize(static_cast<std::size_t>(d));
  };

  out = TLElement::zero(f, n);
  const std::int64_t den = dx * dy;
  for (const auto& [key, idx] : index) {
    auto conv = buckets[idx];
    if (key.loops > 0) {
      // convolve with the delta power, then reduce
      const auto& dp = dpow[static_cast<std::size_t>(key.loops)].small_numerators();
      std::vector<Int128> scaled(static_cast<std::size_t>(2 * conv_len - 1), Int128(0));
      for (int i = 0; i < conv_len; ++i) {
        if (conv[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
          if (dp[static_cast<std::size_t>(j)] != 0)
            scaled[static_cast<std::size_t>(i + j)] +=
                conv[static_cast<std::size_t>(i)] * dp[static_cast<std::size_t>(j)];
        }
      }
      // fold high powers down: x^m reduces to the power-basis row of A^m
      const auto& pows = f.powers64();
      const long order = f.root_order();
      for (int k = static_cast<int>(scaled.size()) - 1; k >= d; --k) {
        const Int128 hi = scaled[static_cast<std::size_t>(k)];
        if (hi == 0) continue;
        scaled[static_cast<std::size_t>(k)] = 0;
        const auto& row = pows[static_cast<std::size_t>(k % order)];
        for (int j = 0; j < d; ++j) scaled[static_cast<std::size_t>(j)] += hi * row[j];
      }
      scaled.resize(static_cast<std::size_t>(d));
      conv = std::move(scaled);
    } else {
      reduce_in_place(conv);
    }
    CycNum c = CycNum::from_exact_i128(f, conv, den);
    if (!c.is_zero()) out.add_term(key.d, c);
  }
  return true;
}

}  // namespace detail

/// Stacking product in T_n; closed loops contribute delta each.
inline TLElement tl_mul(const TLElement& x, const TLElement& y) {
  if (&x.field() != &y.field())
    throw std::invalid_argument("elements belong to different cyclotomic fields");
  if (x.strands() != y.strands()) throw std::invalid_argument("strand count mismatch");
  if (x.terms().size() * y.terms().size() >= 4096) {
    TLElement out(x.field(), x.strands());
    if (detail::tl_mul_fast(x, y, out)) return out;
  }
  return detail::tl_mul_generic(x, y);
}

inline TLElement operator*(const TLElement& x, const TLElement& y) { return tl_mul(x, y); }

/// Side-by-side juxtaposition T_n x T_m -> T_{n+m}; bilinear.
inline TLElement tensor(const TLElement& x, const TLElement& y) {
  if (&x.field() != &y.field())
    throw std::invalid_argument("elements belong to different cyclotomic fields");
  TLElement out(x.field(), x.strands() + y.strands());
  for (const auto& [dx, cx] : x.terms()) {
    for (const auto& [dy, cy] : y.terms()) {
      out.add_term(TLDiagram::juxtapose(dx, dy), cx * cy);
    }
  }
  return out;
}

/// Coefficient of the identity diagram; all other diagrams span the ideal I_n.
inline CycNum epsilon(const TLElement& x) {
  return x.coefficient(TLDiagram::identity(x.strands()));
}

/// Closes all strands around the side; each resulting loop contributes delta.
inline CycNum markov_trace(const TLElement& x) {
  const CycField& f = x.field();
  const auto dpow = detail::delta_powers(f, x.strands());
  CycNum acc = CycNum::zero(f);
  for (const auto& [d, c] : x.terms()) {
    const auto [contractible, core] = d.closure_loops();
    acc += c * dpow[static_cast<std::size_t>(contractible + core)];
  }
  return acc;
}

/// Closes only the last strand: T_{n+1} -> T_n.
inline TLElement partial_trace(const TLElement& x) {
  if (x.strands() < 1) throw std::invalid_argument("partial trace needs a strand");
  const CycField& f = x.field();
  TLElement out(f, x.strands() - 1);
  const CycNum delta = kauffman_delta(f);
  for (const auto& [d, c] : x.terms()) {
    auto [rd, loop] = TLDiagram::close_last(d);
    out.add_term(rd, loop ? c * delta : c);
  }
  return out;
}

/// Kauffman resolution of a crossing of strands i, i+1:
/// positive sign resolves to A 1_n + A^{-1} e_i, negative to the inverse.
inline TLElement braid_sigma(const CycField& f, int n, int i, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("braid sign must be +1 or -1");
  TLElement out(f, n);
  out.add_term(TLDiagram::identity(n), CycNum::a_power(f, sign));
  out.add_term(TLDiagram::generator(n, i), CycNum::a_power(f, -sign));
  return out;
}

/// Jones-Wenzl idempotent f_n, memoized per (r, n).  Requires n <= r-1.
inline const TLElement& jones_wenzl(const CycField& f, int n) {
  if (n < 0) throw std::invalid_argument("negative idempotent index");
  if (n > f.level() - 1)
    throw std::domain_error("Jones-Wenzl idempotent does not exist at this level");
  static std::mutex mu;
  static std::map<std::pair<long, int>, std::unique_ptr<const TLElement>>* cache =
      new std::map<std::pair<long, int>, std::unique_ptr<const TLElement>>();
  std::scoped_lock lock(mu);
  auto key = std::make_pair(f.level(), n);
  auto it = cache->find(key);
  if (it != cache->end()) return *it->second;

  // Build every level up to n inside the lock; the recursion is shallow.
  for (int m = 0; m <= n; ++m) {
    auto mkey = std::make_pair(f.level(), m);
    if (cache->count(mkey)) continue;
    TLElement fm(f, m);
    if (m == 0) {
      fm = TLElement::identity(f, 0);
    } else if (m == 1) {
      fm = TLElement::identity(f, 1);
    } else {
      const TLElement& prev = *cache->at(std::make_pair(f.level(), m - 1));
      TLElement g = tensor(prev, TLElement::identity(f, 1));
      const CycNum coeff = quantum_int(f, m - 1) * quantum_int(f, m).inv();
      TLElement ge = tl_mul(g, TLElement::generator_e(f, m, m - 1));
      fm = g + coeff * tl_mul(ge, g);
    }
    cache->emplace(mkey, std::make_unique<const TLElement>(std::move(fm)));
  }
  return *cache->at(key);
}

/// Wraps one circle around all n strands: the partial trace over an extra
/// strand carried around by a fixed positive braid word.
inline TLElement encircle(const TLElement& x) {
  const CycField& f = x.field();
  const int n = x.strands();
  // (sigma_n ... sigma_1)(sigma_1 ... sigma_n) (x tensor 1), rightmost factor first.
  TLElement w = tensor(x, TLElement::identity(f, 1));
  for (int i = n; i >= 1; --i) w = tl_mul(braid_sigma(f, n + 1, i, +1), w);
  for (int i = 1; i <= n; ++i) w = tl_mul(braid_sigma(f, n + 1, i, +1), w);
  return partial_trace(w);
}

/// The banded full twist on n strands: the pure-braid full twist word
/// (sigma_1 ... sigma_{n-1})^n together with one positive curl (-A^3) per
/// strand of the band.
inline TLElement full_twist(const TLElement& x) {
  const CycField& f = x.field();
  const int n = x.strands();
  TLElement out = x;
  for (int rep = 0; rep < n; ++rep) {
    for (int i = n - 1; i >= 1; --i) out = tl_mul(braid_sigma(f, n, i, +1), out);
  }
  const CycNum curl = -CycNum::a_power(f, 3);
  return cyc_pow(curl, static_cast<unsigned long>(n)) * out;
}

/// Chebyshev polynomials of the second kind: S_0 = 1, S_1 = z,
/// S_{n+1} = z S_n - S_{n-1}.
inline Polynomial chebyshev(const CycField& f, int n) {
  if (n < 0) throw std::invalid_argument("negative Chebyshev index");
  Polynomial s0 = Polynomial::constant(f, CycNum::one(f));
  if (n == 0) return s0;
  Polynomial z = Polynomial::variable(f);
  Polynomial s1 = z;
  for (int k = 2; k <= n; ++k) {
    Polynomial s2 = z * s1 - s0;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return s1;
}

/// Identifies top and bottom of the cube into the annulus.  Contractible
/// loops contribute delta; loops parallel to the core contribute z.
inline Polynomial annulus_closure(const TLElement& x) {
  const CycField& f = x.field();
  const auto dpow = detail::delta_powers(f, x.strands());
  Polynomial out(f);
  for (const auto& [d, c] : x.terms()) {
    const auto [contractible, core] = d.closure_loops();
    std::vector<CycNum> mono(static_cast<std::size_t>(core) + 1, CycNum::zero(f));
    mono.back() = c * dpow[static_cast<std::size_t>(contractible)];
    out = out + Polynomial::from_coeffs(f, std::move(mono));
  }
  return out;
}

/// Deterministic pseudorandom planar diagram (for randomized identities).
inline TLDiagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<int> circle(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < 2 * n; ++i) circle[static_cast<std::size_t>(i)] = i;
  std::vector<std::pair<int, int>> chords;
  auto rec = [&](auto&& self, std::vector<int> pts) -> void {
    while (!pts.empty()) {
      const std::size_t options = pts.size() / 2;
      const std::size_t pick = 1 + 2 * (rng() % options);
      chords.emplace_back(pts[0], pts[pick]);
      std::vector<int> inside(pts.begin() + 1, pts.begin() + static_cast<std::ptrdiff_t>(pick));
      std::vector<int> outside(pts.begin() + static_cast<std::ptrdiff_t>(pick) + 1, pts.end());
      self(self, std::move(inside));
      pts = std::move(outside);
    }
  };
  rec(rec, circle);
  auto uncirc = [&](int c) { return c < n ? c : 3 * n - 1 - c; };
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(chords.size());
  for (auto [a, b] : chords) pairs.emplace_back(uncirc(a), uncirc(b));
  return TLDiagram::from_pairs(n, pairs);
}

/// Deterministic pseudorandom element with small Laurent coefficients.
inline TLElement random_element(const CycField& f, int n, std::mt19937_64& rng,
                                int max_terms = 4) {
  TLElement out(f, n);
  const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < terms; ++t) {
    const long k = static_cast<long>(rng() % 19) - 9;
    const long e = static_cast<long>(rng() % static_cast<unsigned long>(4 * f.level()));
    if (k == 0) continue;
    out.add_term(random_diagram(n, rng), CycNum::a_power(f, e) * k);
  }
  return out;
}

}  // namespace skeinrep
