#pragma once

/// Exact arithmetic in the cyclotomic field K = Q[A]/(phi_{4r}(A)).
///
/// Elements are stored in the power basis 1, A, ..., A^{phi(4r)-1} with
/// rational coordinates.  Two representations coexist behind one type:
/// a fast one with int64 numerators over a shared int64 denominator, and
/// an arbitrary-precision fallback.  Promotion happens automatically when
/// a machine-word computation would overflow, so every operation is exact.

#include "skeinrep/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinrep {

using Int128 = __int128;

namespace detail {

inline constexpr std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();
// Leave four bits of headroom below the int128 limit for the kernels.
inline constexpr Int128 kAccLimit = (Int128(1)) << 123;

inline Int128 iabs128(Int128 v) { return v < 0 ? -v : v; }

inline BigInt bigint_from_i128(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt lo = static_cast<std::uint64_t>(u & 0xffffffffffffffffULL);
  BigInt out = (hi << 64) | lo;
  return neg ? -out : out;
}

inline long euler_totient(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// ---- integer polynomial helpers used only at field construction ----

using ZPoly = std::vector<BigInt>;  // coefficient k of x^k; no trailing zeros

inline void zpoly_trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division by a monic divisor.
inline ZPoly zpoly_div_monic(ZPoly num, const ZPoly& den) {
  internal_check(!den.empty() && den.back() == 1, "divisor must be monic");
  ZPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigInt(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt c = num[k + den.size() - 1];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (const BigInt& c : num) internal_check(c == 0, "non-exact polynomial division");
  zpoly_trim(quot);
  return quot;
}

inline ZPoly cyclotomic_polynomial(long n, std::map<long, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  ZPoly f(static_cast<std::size_t>(n) + 1, BigInt(0));
  f.front() = -1;
  f.back() = 1;  // x^n - 1
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) f = zpoly_div_monic(std::move(f), cyclotomic_polynomial(d, memo));
  }
  memo.emplace(n, f);
  return f;
}

// ---- rational polynomial helpers (inverse, resultant) ----

using QPoly = std::vector<BigRational>;

inline void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int qpoly_deg(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of num by den (den nonzero), in place arithmetic over Q.
inline QPoly qpoly_mod(QPoly num, const QPoly& den) {
  internal_check(!den.empty(), "polynomial modulus by zero");
  const BigRational lead = den.back();
  while (num.size() >= den.size()) {
    BigRational c = num.back() / lead;
    const std::size_t off = num.size() - den.size();
    if (c != 0) {
      for (std::size_t j = 0; j + 1 < den.size(); ++j) num[off + j] -= c * den[j];
    }
    num.pop_back();
    qpoly_trim(num);
    if (num.size() < den.size()) break;
  }
  return num;
}

inline QPoly qpoly_quot(QPoly num, const QPoly& den, QPoly* rem_out = nullptr) {
  internal_check(!den.empty(), "polynomial division by zero");
  const BigRational lead = den.back();
  QPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, BigRational(0));
  for (std::size_t k = quot.size(); k-- > 0;) {
    if (num.size() < den.size() + k) continue;
    BigRational c = (k + den.size() - 1 < num.size()) ? num[k + den.size() - 1] / lead
                                                      : BigRational(0);
    quot[k] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
  }
  qpoly_trim(num);
  qpoly_trim(quot);
  if (rem_out) *rem_out = std::move(num);
  return quot;
}

inline BigRational qpoly_resultant(QPoly f, QPoly g) {
  qpoly_trim(f);
  qpoly_trim(g);
  BigRational result(1);
  bool negate = false;
  while (true) {
    if (g.empty()) return f.size() <= 1 ? result : BigRational(0);
    if (g.size() == 1) {
      BigRational acc = result;
      for (int k = 0; k < qpoly_deg(f); ++k) acc *= g[0];
      return negate ? -acc : acc;
    }
    if (f.size() < g.size()) {
      if ((qpoly_deg(f) % 2) == 1 && (qpoly_deg(g) % 2) == 1) negate = !negate;
      std::swap(f, g);
      continue;
    }
    QPoly r = qpoly_mod(f, g);
    const int df = qpoly_deg(f), dg = qpoly_deg(g), dr = qpoly_deg(r);
    if ((df % 2) == 1 && (dg % 2) == 1) negate = !negate;
    BigRational lead = g.back();
    for (int k = 0; k < df - (r.empty() ? 0 : dr); ++k) result *= lead;
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace detail

/// The cyclotomic field K = Q[A]/(phi_{4r}(A)) for a fixed level r >= 2.
/// Instances are interned: CycField::get(r) returns a shared immutable object.
class CycField {
 public:
  static const CycField& get(long r) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycField>>* registry =
        new std::map<long, std::unique_ptr<CycField>>();
    std::scoped_lock lock(mu);
    auto it = registry->find(r);
    if (it == registry->end()) {
      it = registry->emplace(r, std::unique_ptr<CycField>(new CycField(r))).first;
    }
    return *it->second;
  }

  long level() const { return r_; }
  long root_order() const { return 4 * r_; }
  int degree() const { return degree_; }

  /// Monic integer coefficients of phi_{4r}, constant term first (size degree+1).
  const std::vector<BigInt>& modulus() const { return modulus_; }

  // Internal tables; exposed for the arithmetic kernels in this library.
  bool small_tables_ok() const { return small_ok_; }
  const std::vector<std::vector<std::int64_t>>& reduction64() const { return reduce64_; }
  const std::vector<std::vector<BigInt>>& reduction() const { return reduce_; }
  const std::vector<std::vector<std::int64_t>>& powers64() const { return apow64_; }
  const std::vector<std::vector<BigInt>>& powers() const { return apow_; }
  std::int64_t max_table_entry() const { return max_entry_; }

  bool operator==(const CycField& o) const { return this == &o; }

 private:
  explicit CycField(long r) : r_(r) {
    if (r < 2) throw std::invalid_argument("cyclotomic level must be >= 2");
    const long n = 4 * r;
    std::map<long, detail::ZPoly> memo;
    detail::ZPoly phi = detail::cyclotomic_polynomial(n, memo);
    degree_ = static_cast<int>(phi.size()) - 1;
    internal_check(degree_ == detail::euler_totient(n), "cyclotomic degree mismatch");
    modulus_ = std::move(phi);

    // x^{degree+k} mod phi for k = 0..degree-2, as rows of lower-degree coefficients.
    const int d = degree_;
    std::vector<BigInt> row(modulus_.begin(), modulus_.begin() + d);
    for (BigInt& c : row) c = -c;  // x^d = -(phi - x^d)
    reduce_.push_back(row);
    for (int k = 1; k + 1 < d; ++k) {
      std::vector<BigInt> next(d, BigInt(0));
      const BigInt carry = row[d - 1];
      for (int j = d - 1; j > 0; --j) next[j] = row[j - 1];
      if (carry != 0) {
        for (int j = 0; j < d; ++j) next[j] += carry * reduce_[0][j];
      }
      reduce_.push_back(next);
      row = std::move(next);
    }

    // Power table A^k for k = 0..4r-1.
    std::vector<BigInt> pw(d, BigInt(0));
    pw[0] = 1;
    apow_.push_back(pw);
    for (long k = 1; k < n; ++k) {
      std::vector<BigInt> next(d, BigInt(0));
      const BigInt carry = pw[d - 1];
      for (int j = d - 1; j > 0; --j) next[j] = pw[j - 1];
      if (carry != 0) {
        for (int j = 0; j < d; ++j) next[j] += carry * reduce_[0][j];
      }
      apow_.push_back(next);
      pw = std::move(next);
    }

    // Mirror the tables in int64 when every entry fits.
    max_entry_ = 0;
    small_ok_ = true;
    auto note = [&](const BigInt& v) {
      if (!small_ok_) return;
      if (v > detail::kI64Max || v < -BigInt(detail::kI64Max)) {
        small_ok_ = false;
        return;
      }
      const std::int64_t w = v.convert_to<std::int64_t>();
      max_entry_ = std::max(max_entry_, w < 0 ? -w : w);
    };
    for (const auto& c : modulus_) note(c);
    for (const auto& rrow : reduce_)
      for (const auto& c : rrow) note(c);
    for (const auto& prow : apow_)
      for (const auto& c : prow) note(c);
    if (small_ok_) {
      auto narrow_vec = [](const std::vector<BigInt>& v) {
        std::vector<std::int64_t> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].convert_to<std::int64_t>();
        return out;
      };
      modulus64_ = narrow_vec(modulus_);
      for (const auto& rrow : reduce_) reduce64_.push_back(narrow_vec(rrow));
      for (const auto& prow : apow_) apow64_.push_back(narrow_vec(prow));
    }
  }

  long r_;
  int degree_ = 0;
  std::vector<BigInt> modulus_;
  std::vector<std::int64_t> modulus64_;
  bool small_ok_ = false;
  std::int64_t max_entry_ = 0;
  std::vector<std::vector<BigInt>> reduce_;
  std::vector<std::vector<std::int64_t>> reduce64_;
  std::vector<std::vector<BigInt>> apow_;
  std::vector<std::vector<std::int64_t>> apow64_;
};

/// One element of K, immutable in spirit: operations return new values.
class CycNum {
 public:
  using SmallVec = boost::container::small_vector<std::int64_t, 24>;

  CycNum() = default;
  explicit CycNum(const CycField& f) : field_(&f), num_(f.degree(), 0), den_(1) {}

  static CycNum zero(const CycField& f) { return CycNum(f); }

  static CycNum from_integer(const CycField& f, long v) {
    CycNum x(f);
    x.num_[0] = v;
    return x;
  }

  static CycNum one(const CycField& f) { return from_integer(f, 1); }

  static CycNum from_rational(const CycField& f, const BigRational& q) {
    std::vector<BigRational> c(f.degree(), BigRational(0));
    c[0] = q;
    return from_coeffs(f, std::move(c));
  }

  /// Builds from canonical power-basis coordinates (length = degree).
  static CycNum from_coeffs(const CycField& f, std::vector<BigRational> c) {
    if (static_cast<int>(c.size()) != f.degree())
      throw std::invalid_argument("coefficient vector length must equal field degree");
    CycNum x;
    x.field_ = &f;
    x.big_ = std::move(c);
    x.try_demote();
    return x;
  }

  /// A^e for any integer exponent (A has multiplicative order 4r).
  static CycNum a_power(const CycField& f, long e) {
    const long n = f.root_order();
    long k = ((e % n) + n) % n;
    if (f.small_tables_ok()) {
      CycNum x(f);
      const auto& row = f.powers64()[static_cast<std::size_t>(k)];
      std::copy(row.begin(), row.end(), x.num_.begin());
      x.normalize_small();
      return x;
    }
    // Rare path for fields whose tables exceed int64.
    std::vector<BigRational> c(f.degree(), BigRational(0));
    const auto& prow = f.powers()[static_cast<std::size_t>(k)];
    for (int j = 0; j < f.degree(); ++j) c[j] = BigRational(prow[j]);
    return from_coeffs(f, std::move(c));
  }

  const CycField& field() const {
    internal_check(field_ != nullptr, "use of default-constructed CycNum");
    return *field_;
  }

  bool is_small_repr() const { return big_.empty(); }
  const SmallVec& small_numerators() const { return num_; }
  std::int64_t small_denominator() const { return den_; }

  bool is_zero() const {
    if (is_small_repr())
      return std::all_of(num_.begin(), num_.end(), [](std::int64_t v) { return v == 0; });
    return std::all_of(big_.begin(), big_.end(), [](const BigRational& v) { return v == 0; });
  }

  bool is_one() const {
    if (is_small_repr()) {
      if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
      return std::all_of(num_.begin() + 1, num_.end(), [](std::int64_t v) { return v == 0; });
    }
    if (big_[0] != 1) return false;
    return std::all_of(big_.begin() + 1, big_.end(), [](const BigRational& v) { return v == 0; });
  }

  /// Canonical rational coordinates in the power basis.
  std::vector<BigRational> coeffs() const {
    std::vector<BigRational> out;
    out.reserve(field().degree());
    if (is_small_repr()) {
      for (std::int64_t v : num_) out.emplace_back(BigInt(v), BigInt(den_));
    } else {
      out = big_;
    }
    return out;
  }

  BigRational coeff(int i) const {
    if (i < 0 || i >= field().degree()) throw std::out_of_range("coefficient index");
    if (is_small_repr()) return BigRational(BigInt(num_[i]), BigInt(den_));
    return big_[i];
  }

  friend CycNum operator-(const CycNum& x) {
    CycNum out = x;
    if (out.is_small_repr()) {
      for (auto& v : out.num_) v = -v;
    } else {
      for (auto& v : out.big_) v = -v;
    }
    return out;
  }

  friend CycNum operator+(const CycNum& x, const CycNum& y) { return add_sub(x, y, +1); }
  friend CycNum operator-(const CycNum& x, const CycNum& y) { return add_sub(x, y, -1); }

  friend CycNum operator*(const CycNum& x, const CycNum& y) {
    ensure_same_field(x, y);
    const CycField& f = x.field();
    if (x.is_small_repr() && y.is_small_repr() && f.small_tables_ok()) {
      CycNum out;
      if (mul_small(f, x, y, out)) return out;
    }
    return mul_big(f, x.coeffs(), y.coeffs());
  }

  CycNum& operator+=(const CycNum& y) { return *this = *this + y; }
  CycNum& operator-=(const CycNum& y) { return *this = *this - y; }
  CycNum& operator*=(const CycNum& y) { return *this = *this * y; }

  friend CycNum operator*(const CycNum& x, long s) {
    return x * from_integer(x.field(), s);
  }
  friend CycNum operator*(long s, const CycNum& x) { return x * s; }

  friend bool operator==(const CycNum& x, const CycNum& y) {
    ensure_same_field(x, y);
    if (x.is_small_repr() && y.is_small_repr())
      return x.den_ == y.den_ && x.num_ == y.num_;
    return x.coeffs() == y.coeffs();
  }
  friend bool operator!=(const CycNum& x, const CycNum& y) { return !(x == y); }

  /// Multiplicative inverse via the extended Euclidean algorithm in Q[x].
  CycNum inv() const {
    if (is_zero()) throw DivisionByZeroError();
    const CycField& f = field();
    detail::QPoly p;
    for (const auto& c : coeffs()) p.push_back(c);
    detail::qpoly_trim(p);
    detail::QPoly r0, r1 = p;
    for (const auto& c : f.modulus()) r0.emplace_back(c);
    detail::QPoly t0{}, t1{BigRational(1)};
    while (detail::qpoly_deg(r1) > 0) {
      detail::QPoly rem;
      detail::QPoly q = detail::qpoly_quot(r0, r1, &rem);
      r0 = std::move(r1);
      r1 = std::move(rem);
      // t_{k+1} = t_{k-1} - q t_k
      detail::QPoly qt(q.size() + t1.size(), BigRational(0));
      if (!q.empty() && !t1.empty()) {
        for (std::size_t i = 0; i < q.size(); ++i)
          for (std::size_t j = 0; j < t1.size(); ++j) qt[i + j] += q[i] * t1[j];
      }
      detail::QPoly tn(std::max(t0.size(), qt.size()), BigRational(0));
      for (std::size_t i = 0; i < t0.size(); ++i) tn[i] += t0[i];
      for (std::size_t i = 0; i < qt.size(); ++i) tn[i] -= qt[i];
      detail::qpoly_trim(tn);
      t0 = std::move(t1);
      t1 = std::move(tn);
    }
    internal_check(!r1.empty(), "inverse: gcd with irreducible modulus vanished");
    const BigRational unit = r1[0];
    std::vector<BigRational> c(f.degree(), BigRational(0));
    for (std::size_t i = 0; i < t1.size(); ++i) c[i] = t1[i] / unit;
    return from_coeffs(f, std::move(c));
  }

  friend CycNum operator/(const CycNum& x, const CycNum& y) { return x * y.inv(); }

  /// The Galois involution determined by A -> A^{-1}.
  friend CycNum conj(const CycNum& x) {
    const CycField& f = x.field();
    const long n = f.root_order();
    const int d = f.degree();
    if (x.is_small_repr() && f.small_tables_ok()) {
      std::int64_t maxv = 0;
      for (auto v : x.num_) maxv = std::max(maxv, v < 0 ? -v : v);
      const Int128 bound = Int128(maxv) * f.max_table_entry() * d;
      if (bound < detail::kAccLimit) {
        std::vector<Int128> acc(d, 0);
        for (int k = 0; k < d; ++k) {
          if (x.num_[k] == 0) continue;
          const auto& row = f.powers64()[static_cast<std::size_t>((n - k) % n)];
          for (int j = 0; j < d; ++j) acc[j] += Int128(x.num_[k]) * row[j];
        }
        return from_exact_i128(f, acc, x.den_);
      }
    }
    const auto xc = x.coeffs();
    std::vector<BigRational> c(d, BigRational(0));
    for (int k = 0; k < d; ++k) {
      if (xc[k] == 0) continue;
      const auto& row = f.powers()[static_cast<std::size_t>((n - k) % n)];
      for (int j = 0; j < d; ++j) c[j] += xc[k] * BigRational(row[j]);
    }
    return from_coeffs(f, std::move(c));
  }

  /// Builds a value from exact int128 numerators over an int64 denominator.
  static CycNum from_exact_i128(const CycField& f, const std::vector<Int128>& acc,
                                std::int64_t den) {
    bool fits = true;
    for (Int128 v : acc) {
      if (detail::iabs128(v) > detail::kI64Max) {
        fits = false;
        break;
      }
    }
    if (fits) {
      CycNum out;
      out.field_ = &f;
      out.num_.assign(acc.size(), 0);
      for (std::size_t i = 0; i < acc.size(); ++i)
        out.num_[i] = static_cast<std::int64_t>(acc[i]);
      out.den_ = den;
      out.normalize_small();
      return out;
    }
    std::vector<BigRational> c(acc.size());
    const BigInt d(den);
    for (std::size_t i = 0; i < acc.size(); ++i)
      c[i] = BigRational(detail::bigint_from_i128(acc[i]), d);
    return from_coeffs(f, std::move(c));
  }

 private:
  static void ensure_same_field(const CycNum& x, const CycNum& y) {
    if (&x.field() != &y.field())
      throw std::invalid_argument("operands belong to different cyclotomic fields");
  }

  void normalize_small() {
    internal_check(den_ > 0, "denominator sign invariant");
    std::int64_t g = den_;
    for (auto v : num_) {
      g = gcd64(g, v);
      if (g == 1) break;
    }
    if (g > 1) {
      den_ /= g;
      for (auto& v : num_) v /= g;
    }
    bool all_zero = std::all_of(num_.begin(), num_.end(), [](std::int64_t v) { return v == 0; });
    if (all_zero) den_ = 1;
  }

  void promote() {
    if (!is_small_repr()) return;
    big_.reserve(num_.size());
    for (auto v : num_) big_.emplace_back(BigInt(v), BigInt(den_));
    num_.clear();
    den_ = 1;
  }

  void try_demote() {
    if (is_small_repr()) return;
    BigInt common(1);
    for (const auto& q : big_) {
      const BigInt& d = boost::multiprecision::denominator(q);
      common = boost::multiprecision::lcm(common, d);
      if (common > detail::kI64Max) return;
    }
    std::vector<std::int64_t> scaled(big_.size());
    for (std::size_t i = 0; i < big_.size(); ++i) {
      BigInt v = boost::multiprecision::numerator(big_[i]) *
                 (common / boost::multiprecision::denominator(big_[i]));
      if (v > detail::kI64Max || v < -BigInt(detail::kI64Max)) return;
      scaled[i] = v.convert_to<std::int64_t>();
    }
    num_.assign(scaled.begin(), scaled.end());
    den_ = common.convert_to<std::int64_t>();
    big_.clear();
    normalize_small();
  }

  static CycNum add_sub(const CycNum& x, const CycNum& y, int sign) {
    ensure_same_field(x, y);
    const CycField& f = x.field();
    if (x.is_small_repr() && y.is_small_repr()) {
      const std::int64_t g = gcd64(x.den_, y.den_);
      const Int128 mx = y.den_ / g, my = x.den_ / g;
      const Int128 den = Int128(x.den_) * mx;
      if (den <= detail::kI64Max) {
        std::vector<Int128> acc(f.degree(), 0);
        for (int i = 0; i < f.degree(); ++i) {
          acc[i] = Int128(x.num_[i]) * mx + Int128(sign) * Int128(y.num_[i]) * my;
        }
        return from_exact_i128(f, acc, static_cast<std::int64_t>(den));
      }
    }
    auto xc = x.coeffs();
    const auto yc = y.coeffs();
    for (std::size_t i = 0; i < xc.size(); ++i)
      xc[i] += sign > 0 ? yc[i] : -yc[i];
    return from_coeffs(f, std::move(xc));
  }

  // Schoolbook product with reduction, entirely in machine words.
  // Returns false when a magnitude bound would be violated.
  static bool mul_small(const CycField& f, const CycNum& x, const CycNum& y, CycNum& out) {
    const int d = f.degree();
    if (2 * d - 1 > 64) return false;
    std::int64_t maxx = 0, maxy = 0;
    for (auto v : x.num_) maxx = std::max(maxx, v < 0 ? -v : v);
    for (auto v : y.num_) maxy = std::max(maxy, v < 0 ? -v : v);
    if (maxx == 0 || maxy == 0) {
      out = CycNum(f);
      return true;
    }
    const Int128 prod = Int128(maxx) * Int128(maxy);
    if (prod > detail::kAccLimit / d) return false;
    const Int128 conv_bound = prod * d;
    // reduction adds at most (d-1) carried rows scaled by the table maximum.
    const Int128 factor = Int128(1) + Int128(f.max_table_entry()) * d;
    if (conv_bound > detail::kAccLimit / factor) return false;
    const Int128 den = Int128(x.den_) * Int128(y.den_);
    if (den > detail::kI64Max) return false;

    Int128 conv[64] = {};
    for (int i = 0; i < d; ++i) {
      const std::int64_t xi = x.num_[i];
      if (xi == 0) continue;
      for (int j = 0; j < d; ++j) conv[i + j] += Int128(xi) * y.num_[j];
    }
    std::vector<Int128> acc(conv, conv + d);
    const auto& rows = f.reduction64();
    for (int k = 0; k + 1 < d; ++k) {
      const Int128 hi = conv[d + k];
      if (hi == 0) continue;
      const auto& row = rows[static_cast<std::size_t>(k)];
      for (int j = 0; j < d; ++j) acc[j] += hi * row[j];
    }
    out = from_exact_i128(f, acc, static_cast<std::int64_t>(den));
    return true;
  }

  static CycNum mul_big(const CycField& f, const std::vector<BigRational>& a,
                        const std::vector<BigRational>& b) {
    const int d = f.degree();
    std::vector<BigRational> conv(2 * d - 1, BigRational(0));
    for (int i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < d; ++j) {
        if (b[j] != 0) conv[i + j] += a[i] * b[j];
      }
    }
    const auto& rows = f.reduction();
    std::vector<BigRational> acc(conv.begin(), conv.begin() + d);
    for (int k = 0; k + 1 < d; ++k) {
      if (conv[d + k] == 0) continue;
      const auto& row = rows[static_cast<std::size_t>(k)];
      for (int j = 0; j < d; ++j) {
        if (row[j] != 0) acc[j] += conv[d + k] * BigRational(row[j]);
      }
    }
    return from_coeffs(f, std::move(acc));
  }

  const CycField* field_ = nullptr;
  SmallVec num_;
  std::int64_t den_ = 1;
  std::vector<BigRational> big_;
};

/// Quantum integer [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}) written as the
/// expanded Laurent sum, so no division is performed: [n] = sum A^{2n-2-4k}.
inline CycNum quantum_int(const CycField& f, long n) {
  if (n == 0) return CycNum::zero(f);
  const bool neg = n < 0;
  const long m = neg ? -n : n;
  CycNum acc = CycNum::zero(f);
  for (long k = 0; k < m; ++k) acc += CycNum::a_power(f, 2 * m - 2 - 4 * k);
  return neg ? -acc : acc;
}

/// [n]! = [n][n-1]...[1]; [0]! = 1.
inline CycNum quantum_factorial(const CycField& f, long n) {
  if (n < 0) throw std::invalid_argument("quantum factorial of a negative integer");
  CycNum acc = CycNum::one(f);
  for (long k = 2; k <= n; ++k) acc *= quantum_int(f, k);
  return acc;
}

/// The loop scalar delta = -A^2 - A^{-2}.
inline CycNum kauffman_delta(const CycField& f) {
  return -(CycNum::a_power(f, 2) + CycNum::a_power(f, -2));
}

inline CycNum cyc_pow(const CycNum& x, unsigned long e) {
  CycNum base = x;
  CycNum acc = CycNum::one(x.field());
  while (e != 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return acc;
}

/// Numerical embedding sending A to exp(i pi m / (2r)); requires gcd(m,4r)=1.
inline std::complex<double> complex_embedding(const CycNum& x, long m) {
  const CycField& f = x.field();
  const long n = f.root_order();
  if (std::gcd((m % n + n) % n, n) != 1)
    throw std::invalid_argument("embedding index must be coprime to 4r");
  const double theta = M_PI * static_cast<double>(m) / static_cast<double>(2 * f.level());
  std::complex<double> acc(0.0, 0.0);
  const auto c = x.coeffs();
  for (int k = 0; k < f.degree(); ++k) {
    if (c[k] == 0) continue;
    const double ck = c[k].convert_to<double>();
    acc += ck * std::polar(1.0, theta * k);
  }
  return acc;
}

/// Field norm: the product of x over all complex embeddings, computed exactly
/// as the resultant of the coordinate polynomial with the modulus.
inline BigRational field_norm(const CycNum& x) {
  if (x.is_zero()) return BigRational(0);
  const CycField& f = x.field();
  detail::QPoly phi, p;
  for (const auto& c : f.modulus()) phi.emplace_back(c);
  for (const auto& c : x.coeffs()) p.push_back(c);
  detail::qpoly_trim(p);
  return detail::qpoly_resultant(std::move(phi), std::move(p));
}

/// True iff every power-basis coordinate is a rational integer.  Z[A] is the
/// full ring of integers of a cyclotomic field, so this is the membership
/// test for O.
inline bool is_algebraic_integer(const CycNum& x) {
  if (x.is_small_repr()) return x.small_denominator() == 1;
  for (const auto& c : x.coeffs()) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

}  // namespace skeinrep
