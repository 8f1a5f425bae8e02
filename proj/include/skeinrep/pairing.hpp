#pragma once

/// Theta coefficients, loop values, the diagonal Hermitian Gram form on the
/// coloring basis, the Hopf pairing matrix, annulus dual elements, and the
/// signature of the form under a complex embedding.

#include "skeinrep/colorings.hpp"
#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/matrix.hpp"
#include "skeinrep/polynomial.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skeinrep {

/// <n> = tr f_n = (-1)^n [n+1]; defined and nonzero for 0 <= n <= r-2.
inline CycNum loop_value(const CycField& f, long n) {
  if (n < 0 || n > f.level() - 2) throw std::out_of_range("loop color out of range");
  CycNum v = quantum_int(f, n + 1);
  return (n % 2 == 0) ? v : -v;
}

/// Closed-form theta coefficient
///   <a,b,c> = (-1)^{i+j+k} [i+j+k+1]! [i]! [j]! [k]! / ([a]! [b]! [c]!)
/// for an admissible vertex triple; always nonzero.
inline CycNum theta(const CycField& f, int a, int b, int c) {
  if (!triple_admissible(a, b, c, f.level()))
    throw std::invalid_argument("theta of an inadmissible triple");
  const auto ijk = *internal_colors(a, b, c);
  const int i = ijk[0], j = ijk[1], k = ijk[2];
  CycNum num = quantum_factorial(f, i + j + k + 1) * quantum_factorial(f, i) *
               quantum_factorial(f, j) * quantum_factorial(f, k);
  CycNum den = quantum_factorial(f, a) * quantum_factorial(f, b) * quantum_factorial(f, c);
  CycNum out = num * den.inv();
  return ((i + j + k) % 2 == 0) ? out : -out;
}

/// Diagonal Hermitian form on the admissible-coloring basis of a graph.
struct GramForm {
  long r = 0;
  std::vector<Coloring> basis;
  std::vector<CycNum> norms;
};

/// Norm of a basis vector: product of theta coefficients over trivalent
/// vertices divided by the loop value of every edge color.  A vertexless loop
/// contributes its loop value to both numerator and denominator, hence
/// nothing: cutting it once costs 1/<c> and the reconnected circle restores
/// <c>.
inline GramForm gram_form(const TrivalentGraph& g, long r) {
  const CycField& f = CycField::get(r);
  GramForm out;
  out.r = r;
  out.basis = enumerate_admissible(g, r);
  out.norms.reserve(out.basis.size());
  const int ne = static_cast<int>(g.edges().size());
  for (const auto& c : out.basis) {
    CycNum norm = CycNum::one(f);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!g.is_trivalent_vertex(v)) continue;
      const auto& inc = g.incidence()[static_cast<std::size_t>(v)];
      norm *= theta(f, c.values[static_cast<std::size_t>(inc[0])],
                    c.values[static_cast<std::size_t>(inc[1])],
                    c.values[static_cast<std::size_t>(inc[2])]);
    }
    for (int e = 0; e < ne; ++e) {
      norm = norm * loop_value(f, c.values[static_cast<std::size_t>(e)]).inv();
    }
    internal_check(!norm.is_zero(), "Gram norm vanished");
    out.norms.push_back(std::move(norm));
  }
  return out;
}

/// The Hopf pairing matrix Pi_{ij} = (-1)^{i+j} [(i+1)(j+1)], i,j = 0..r-2.
struct HopfMatrix {
  long r = 0;
  Matrix entries;
};

inline HopfMatrix hopf_matrix(long r) {
  const CycField& f = CycField::get(r);
  const int n = static_cast<int>(r - 1);
  HopfMatrix out{r, Matrix(f, n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CycNum v = quantum_int(f, static_cast<long>(i + 1) * (j + 1));
      out.entries.at(i, j) = ((i + j) % 2 == 0) ? v : -v;
    }
  }
  return out;
}

/// Eigenvalue nodes x_j = -A^{2j+2} - A^{-2j-2} of encircling by the core.
inline CycNum encircling_eigenvalue(const CycField& f, long j) {
  return -(CycNum::a_power(f, 2 * j + 2) + CycNum::a_power(f, -2 * j - 2));
}

/// Annulus element t_i: the polynomial in z whose encircling eigenvalues are
/// t_i(x_j) = delta_{ij}, by Lagrange interpolation at the r-1 nodes.
inline Polynomial annulus_dual(const CycField& f, long i) {
  const long r = f.level();
  if (i < 0 || i > r - 2) throw std::out_of_range("annulus dual index");
  Polynomial t = Polynomial::constant(f, CycNum::one(f));
  const CycNum xi = encircling_eigenvalue(f, i);
  const Polynomial z = Polynomial::variable(f);
  for (long j = 0; j <= r - 2; ++j) {
    if (j == i) continue;
    const CycNum xj = encircling_eigenvalue(f, j);
    const CycNum scale = (xi - xj).inv();
    t = t * ((z - Polynomial::constant(f, xj)) * scale);
  }
  return t;
}

/// Signature (p, q) of the Gram form under the embedding A -> exp(i pi m/2r):
/// counts of positive and negative embedded norms.  Norms are conj-invariant,
/// hence real; a norm numerically indistinguishable from zero is a precision
/// error because the exact norms never vanish.
inline std::pair<int, int> signature(const GramForm& gram, long m) {
  const CycField& f = CycField::get(gram.r);
  int pos = 0, neg = 0;
  for (const auto& norm : gram.norms) {
    const std::complex<double> v = complex_embedding(norm, m);
    internal_check(std::abs(v.imag()) < 1e-9, "Gram norm embedded off the real line");
    if (std::abs(v.real()) < 1e-9)
      throw std::runtime_error("embedded Gram norm too close to zero");
    if (v.real() > 0) ++pos;
    else ++neg;
  }
  return {pos, neg};
}

}  // namespace skeinrep
