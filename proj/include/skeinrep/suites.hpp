#pragma once

/// Named verification suites over the whole library, shared by the check
/// subcommand and the acceptance tests.  Every check is an exact identity.

#include "skeinrep/colorings.hpp"
#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/pairing.hpp"
#include "skeinrep/representation.hpp"
#include "skeinrep/temperley_lieb.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace skeinrep {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool is_odd_prime(long r) {
  if (r < 3 || r % 2 == 0) return false;
  for (long d = 3; d * d <= r; d += 2) {
    if (r % d == 0) return false;
  }
  return true;
}

namespace detail {

inline CheckResult tally(std::string name, long failures, long cases) {
  std::ostringstream os;
  os << cases << " cases";
  if (failures > 0) os << ", " << failures << " failed";
  return CheckResult{std::move(name), failures == 0, os.str()};
}

}  // namespace detail

/// f_n^2 = f_n, e_i f_n = f_n e_i = 0, eps(f_n) = 1, tr f_n = (-1)^n [n+1].
inline std::vector<CheckResult> suite_jones_wenzl(long r, int max_n = 9) {
  const CycField& f = CycField::get(r);
  long idem_fail = 0, kill_fail = 0, eps_fail = 0, trace_fail = 0, cases = 0;
  const int top = std::min<long>(max_n, r - 1);
  for (int n = 0; n <= top; ++n) {
    const TLElement& fn = jones_wenzl(f, n);
    ++cases;
    if (!(tl_mul(fn, fn) == fn)) ++idem_fail;
    for (int i = 1; i <= n - 1; ++i) {
      const TLElement ei = TLElement::generator_e(f, n, i);
      if (!tl_mul(ei, fn).is_zero() || !tl_mul(fn, ei).is_zero()) ++kill_fail;
    }
    if (!epsilon(fn).is_one()) ++eps_fail;
    CycNum want = quantum_int(f, n + 1);
    if (n % 2 == 1) want = -want;
    if (!(markov_trace(fn) == want)) ++trace_fail;
  }
  return {detail::tally("jones-wenzl/idempotent", idem_fail, cases),
          detail::tally("jones-wenzl/killed-by-caps", kill_fail, cases),
          detail::tally("jones-wenzl/epsilon-one", eps_fail, cases),
          detail::tally("jones-wenzl/trace", trace_fail, cases)};
}

/// eps(partial_trace f_{n+1}) = -[n+2]/[n+1], eps(encircle f_n) =
/// -A^{2n+2}-A^{-2n-2}, eps(full_twist f_n) = (-1)^n A^{n(n+2)}.
inline std::vector<CheckResult> suite_epsilon_values(long r, int max_n = 6) {
  const CycField& f = CycField::get(r);
  long pt_fail = 0, en_fail = 0, tw_fail = 0, pt_cases = 0, cases = 0;
  for (int n = 0; n <= std::min<long>(max_n, r - 2); ++n) {
    ++pt_cases;
    const CycNum eps = epsilon(partial_trace(jones_wenzl(f, n + 1)));
    if (!(eps == -(quantum_int(f, n + 2) * quantum_int(f, n + 1).inv()))) ++pt_fail;
  }
  for (int n = 0; n <= std::min<long>(max_n, r - 1); ++n) {
    ++cases;
    const TLElement& fn = jones_wenzl(f, n);
    if (!(epsilon(encircle(fn)) ==
          -(CycNum::a_power(f, 2 * n + 2) + CycNum::a_power(f, -2 * n - 2))))
      ++en_fail;
    CycNum want = CycNum::a_power(f, static_cast<long>(n) * (n + 2));
    if (n % 2 == 1) want = -want;
    if (!(epsilon(full_twist(fn)) == want)) ++tw_fail;
  }
  return {detail::tally("epsilon/partial-trace", pt_fail, pt_cases),
          detail::tally("epsilon/encircle", en_fail, cases),
          detail::tally("epsilon/full-twist", tw_fail, cases)};
}

/// tr(f_{r-1} x) = 0 for pseudorandom x.
inline std::vector<CheckResult> suite_vanishing(long r, int samples = 100,
                                                std::uint64_t seed = 0x5eed) {
  if (r - 1 > TLDiagram::kMaxStrands)
    throw std::invalid_argument("vanishing suite exceeds the strand limit");
  const CycField& f = CycField::get(r);
  const TLElement& top = jones_wenzl(f, static_cast<int>(r - 1));
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(r));
  long fail = 0;
  for (int t = 0; t < samples; ++t) {
    const TLElement x = random_element(f, static_cast<int>(r - 1), rng);
    if (!markov_trace(tl_mul(top, x)).is_zero()) ++fail;
  }
  return {detail::tally("vanishing/trace-top-idempotent", fail, samples)};
}

/// annulus_closure(f_n) = S_n(z), plus the evaluation identity of S_j at the
/// encircling nodes.
inline std::vector<CheckResult> suite_chebyshev(long r, int max_n = 8) {
  const CycField& f = CycField::get(r);
  long fail = 0, cases = 0;
  for (int n = 0; n <= std::min<long>(max_n, r - 1); ++n) {
    ++cases;
    if (!(annulus_closure(jones_wenzl(f, n)) == chebyshev(f, n))) ++fail;
  }
  long eval_fail = 0, eval_cases = 0;
  for (long i = 0; i <= r - 2; ++i) {
    for (long j = 0; j <= r - 2; ++j) {
      ++eval_cases;
      const CycNum lhs = chebyshev(f, static_cast<int>(j)).eval(encircling_eigenvalue(f, i));
      CycNum rhs = quantum_int(f, (i + 1) * (j + 1)) * quantum_int(f, i + 1).inv();
      if (j % 2 == 1) rhs = -rhs;
      if (!(lhs == rhs)) ++eval_fail;
    }
  }
  return {detail::tally("chebyshev/closure", fail, cases),
          detail::tally("chebyshev/node-evaluation", eval_fail, eval_cases)};
}

/// Dimension formula against exact enumeration for genus 1..3.
inline std::vector<CheckResult> suite_verlinde(long r) {
  long fail = 0, cases = 0;
  std::ostringstream os;
  for (int g = 1; g <= 3; ++g) {
    ++cases;
    long v = 0;
    try {
      v = verlinde_dim(g, r);  // internally cross-checked against enumeration
    } catch (const std::logic_error&) {
      ++fail;
      continue;
    }
    if (g == 1 && v != r - 1) ++fail;
    os << "g=" << g << ":" << v << " ";
  }
  return {CheckResult{"verlinde/formula-vs-enumeration", fail == 0, os.str()}};
}

/// Pi symmetric, conj-invariant, and Pi^2 = (-2r/(A^2-A^{-2})^2) Id.
inline std::vector<CheckResult> suite_hopf(long r) {
  const CycField& f = CycField::get(r);
  const HopfMatrix H = hopf_matrix(r);
  const int n = H.entries.rows();
  long sym_fail = 0, conj_fail = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(H.entries.at(i, j) == H.entries.at(j, i))) ++sym_fail;
      if (!(conj(H.entries.at(i, j)) == H.entries.at(i, j))) ++conj_fail;
    }
  }
  const CycNum a22 = CycNum::a_power(f, 2) - CycNum::a_power(f, -2);
  const CycNum scale = CycNum::from_integer(f, -2 * r) * (a22 * a22).inv();
  const bool square_ok = H.entries * H.entries == scale * Matrix::identity(f, n);
  return {detail::tally("hopf/symmetric", sym_fail, static_cast<long>(n) * n),
          detail::tally("hopf/conj-invariant", conj_fail, static_cast<long>(n) * n),
          CheckResult{"hopf/square-identity", square_ok, "Pi^2 = -2r/(A^2-A^-2)^2 Id"}};
}

/// Genus-1: characteristic polynomial, Gram unitarity, braid relation, and
/// the sixth-power relation, projectively.
inline std::vector<CheckResult> suite_genus1(long r) {
  const CycField& f = CycField::get(r);
  std::vector<CheckResult> out;
  const RepMatrix op = curve_operator_genus1(r);
  out.push_back(CheckResult{"genus1/char-poly",
                            char_poly_tridiagonal(op.mat) == node_product(r),
                            "char poly = prod (x - x_n)"});
  const auto [ta, tb] = genus1_rep(r);
  const GramForm gram = gram_form(standard_graph(1), r);
  out.push_back(CheckResult{"genus1/beta-unitary", is_gram_unitary(tb.mat, gram), ""});
  out.push_back(CheckResult{"genus1/braid-relation",
                            projective_equal(ta.mat * tb.mat * ta.mat, tb.mat * ta.mat * tb.mat),
                            "projective"});
  Matrix p = Matrix::identity(f, ta.mat.rows());
  const Matrix ab = ta.mat * tb.mat;
  for (int k = 0; k < 6; ++k) p = p * ab;
  out.push_back(CheckResult{"genus1/sixth-power",
                            projective_equal(p, Matrix::identity(f, ta.mat.rows())),
                            "(T_a T_b)^6 = Id projectively"});
  return out;
}

/// Genus-2: self-adjointness of the curve operator, spectrum containment,
/// Gram unitarity of all five twists, braid and commutation relations.
inline std::vector<CheckResult> suite_genus2(long r) {
  const CycField& f = CycField::get(r);
  std::vector<CheckResult> out;
  const GramForm gram = gram_form(standard_graph(2), r);
  const RepMatrix op_ab = curve_operator_genus2(r);
  const RepMatrix op_bc = curve_operator_genus2_bc(r);
  out.push_back(CheckResult{"genus2/self-adjoint",
                            is_gram_self_adjoint(op_ab.mat, gram) &&
                                is_gram_self_adjoint(op_bc.mat, gram),
                            "curve operators vs Gram form"});
  auto spectrum_ok = [&](const Matrix& m) {
    Matrix prod = Matrix::identity(f, m.rows());
    for (long n = 0; n <= r - 2; ++n) {
      Matrix shifted = m;
      const CycNum xn = encircling_eigenvalue(f, n);
      for (int i = 0; i < m.rows(); ++i) shifted.at(i, i) -= xn;
      prod = prod * shifted;
    }
    return prod.is_zero();
  };
  out.push_back(CheckResult{"genus2/min-poly-divides",
                            spectrum_ok(op_ab.mat) && spectrum_ok(op_bc.mat),
                            "prod (Phi - x_n) = 0"});
  const auto mats = genus2_rep(r);
  long unit_fail = 0;
  for (const auto& m : mats) {
    if (!is_gram_unitary(m.mat, gram)) ++unit_fail;
  }
  out.push_back(detail::tally("genus2/twists-unitary", unit_fail, 5));
  out.push_back(CheckResult{
      "genus2/braid-relation",
      projective_equal(mats[0].mat * mats[3].mat * mats[0].mat,
                       mats[3].mat * mats[0].mat * mats[3].mat),
      "t_a vs Q(Phi_ab), projective"});
  out.push_back(CheckResult{"genus2/disjoint-commute",
                            projective_equal(mats[3].mat * mats[2].mat,
                                             mats[2].mat * mats[3].mat),
                            "Q(Phi_ab) vs t_c, projective"});
  return out;
}

/// Commutant dimension 1 in genus 1 and 2, plus twist-eigenvalue
/// distinctness; the assertions hold for odd prime levels.
inline std::vector<CheckResult> suite_irreducibility(long r) {
  if (!is_odd_prime(r))
    throw std::invalid_argument("irreducibility suite requires an odd prime level");
  const CycField& f = CycField::get(r);
  std::vector<CheckResult> out;
  long distinct_fail = 0, pairs = 0;
  for (long n = 0; n <= r - 2; ++n) {
    for (long m = n + 1; m <= r - 2; ++m) {
      ++pairs;
      if (twist_eigenvalue(f, n) == twist_eigenvalue(f, m)) ++distinct_fail;
    }
  }
  out.push_back(detail::tally("irreducibility/eigenvalue-distinct", distinct_fail, pairs));
  const auto [ta, tb] = genus1_rep(r);
  const long d1 = commutant_dimension({ta.mat, tb.mat});
  out.push_back(CheckResult{"irreducibility/genus1-commutant", d1 == 1,
                            "dim = " + std::to_string(d1)});
  const auto mats = genus2_rep(r);
  std::vector<Matrix> mm;
  for (const auto& m : mats) mm.push_back(m.mat);
  const long d2 = commutant_dimension(mm);
  out.push_back(CheckResult{"irreducibility/genus2-commutant", d2 == 1,
                            "dim = " + std::to_string(d2)});
  return out;
}

/// Quantum integers are units of O and the idempotent coefficients are
/// algebraic integers; both hold at odd prime levels.
inline std::vector<CheckResult> suite_integrality(long r) {
  if (!is_odd_prime(r))
    throw std::invalid_argument("integrality suite requires an odd prime level");
  const CycField& f = CycField::get(r);
  long unit_fail = 0;
  for (long n = 1; n <= r - 1; ++n) {
    const BigRational nm = field_norm(quantum_int(f, n));
    if (!(nm == 1 || nm == -1)) ++unit_fail;
  }
  long coeff_fail = 0, coeff_cases = 0;
  const int top = std::min<long>(r - 1, TLDiagram::kMaxStrands);
  for (int n = 0; n <= top; ++n) {
    for (const auto& [d, c] : jones_wenzl(f, n).terms()) {
      ++coeff_cases;
      if (!is_algebraic_integer(c)) ++coeff_fail;
    }
  }
  return {detail::tally("integrality/quantum-integer-units", unit_fail, r - 1),
          detail::tally("integrality/idempotent-coefficients", coeff_fail, coeff_cases)};
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "jones-wenzl", "epsilon",  "vanishing", "chebyshev",       "verlinde",
      "hopf",        "genus1",   "genus2",    "irreducibility",  "integrality"};
  return names;
}

/// True when the named suite's assertions apply at this level.
inline bool suite_applicable(const std::string& name, long r) {
  if (name == "irreducibility" || name == "integrality") return is_odd_prime(r);
  if (name == "vanishing") return r - 1 <= TLDiagram::kMaxStrands;
  return true;
}

inline std::vector<CheckResult> run_suite(const std::string& name, long r) {
  if (name == "jones-wenzl") return suite_jones_wenzl(r);
  if (name == "epsilon") return suite_epsilon_values(r);
  if (name == "vanishing") return suite_vanishing(r);
  if (name == "chebyshev") return suite_chebyshev(r);
  if (name == "verlinde") return suite_verlinde(r);
  if (name == "hopf") return suite_hopf(r);
  if (name == "genus1") return suite_genus1(r);
  if (name == "genus2") return suite_genus2(r);
  if (name == "irreducibility") return suite_irreducibility(r);
  if (name == "integrality") return suite_integrality(r);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace skeinrep
