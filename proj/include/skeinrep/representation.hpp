#pragma once

/// Dehn-twist matrices: diagonal twists along dual discs, curve operators in
/// genus 1 and 2, the twist interpolation polynomial, projective relation
/// checks, Gram unitarity, and commutant dimension.

#include "skeinrep/colorings.hpp"
#include "skeinrep/cyclotomic.hpp"
#include "skeinrep/matrix.hpp"
#include "skeinrep/pairing.hpp"
#include "skeinrep/polynomial.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace skeinrep {

/// Square matrix over K carrying its coloring basis labels.
struct RepMatrix {
  long r = 0;
  int genus = 0;
  std::vector<Coloring> basis;
  Matrix mat;
};

/// Twist eigenvalue on color n: (-1)^n A^{n(n+2)}.
inline CycNum twist_eigenvalue(const CycField& f, long n) {
  if (n < 0 || n > f.level() - 2) throw std::out_of_range("twist color out of range");
  CycNum v = CycNum::a_power(f, n * (n + 2));
  return (n % 2 == 0) ? v : -v;
}

/// The Dehn twist along the disc dual to one edge of the standard graph acts
/// diagonally on the coloring basis.
inline RepMatrix dehn_twist_dual(int genus, long r, int edge_slot) {
  const CycField& f = CycField::get(r);
  const TrivalentGraph g = standard_graph(genus);
  if (edge_slot < 0 || edge_slot >= g.color_slots())
    throw std::out_of_range("edge index out of range");
  RepMatrix out{r, genus, enumerate_admissible(g, r), Matrix(f, 0, 0)};
  const int n = static_cast<int>(out.basis.size());
  out.mat = Matrix(f, n, n);
  for (int i = 0; i < n; ++i) {
    out.mat.at(i, i) =
        twist_eigenvalue(f, out.basis[static_cast<std::size_t>(i)]
                                .values[static_cast<std::size_t>(edge_slot)]);
  }
  return out;
}

/// Unique polynomial of degree <= r-2 with Q(x_n) = (-1)^n A^{n(n+2)} at the
/// encircling nodes x_n = -A^{2n+2} - A^{-2n-2}, n = 0..r-2.
inline Polynomial interpolation_Q(long r) {
  const CycField& f = CycField::get(r);
  std::vector<CycNum> nodes;
  for (long n = 0; n <= r - 2; ++n) nodes.push_back(encircling_eigenvalue(f, n));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      internal_check(!(nodes[a] == nodes[b]), "coincident interpolation nodes");
  Polynomial q(f);
  const Polynomial z = Polynomial::variable(f);
  for (long n = 0; n <= r - 2; ++n) {
    Polynomial basis = Polynomial::constant(f, CycNum::one(f));
    for (long m = 0; m <= r - 2; ++m) {
      if (m == n) continue;
      const CycNum scale =
          (nodes[static_cast<std::size_t>(n)] - nodes[static_cast<std::size_t>(m)]).inv();
      basis = basis * ((z - Polynomial::constant(f, nodes[static_cast<std::size_t>(m)])) * scale);
    }
    q = q + basis * twist_eigenvalue(f, n);
  }
  return q;
}

/// Curve operator of the core curve on the solid-torus basis: the three-term
/// recursion with truncation, a 0/1 tridiagonal matrix.
inline RepMatrix curve_operator_genus1(long r) {
  const CycField& f = CycField::get(r);
  RepMatrix out{r, 1, enumerate_admissible(standard_graph(1), r), Matrix(f, 0, 0)};
  const int n = static_cast<int>(out.basis.size());
  out.mat = Matrix(f, n, n);
  for (int i = 0; i < n; ++i) {
    if (i > 0) out.mat.at(i - 1, i) = CycNum::one(f);
    if (i + 1 < n) out.mat.at(i + 1, i) = CycNum::one(f);
  }
  return out;
}

namespace detail {

/// Genus-2 curve operator through the edges in slots p and q of the theta
/// graph, with spectator slot s.  Terms whose target coloring is inadmissible
/// vanish, and terms that would lower a color-0 edge are omitted.
inline RepMatrix theta_curve_operator(long r, int p, int q, int s) {
  const CycField& f = CycField::get(r);
  const TrivalentGraph g = standard_graph(2);
  RepMatrix out{r, 2, enumerate_admissible(g, r), Matrix(f, 0, 0)};
  const int n = static_cast<int>(out.basis.size());
  out.mat = Matrix(f, n, n);
  std::map<Coloring, int> index;
  for (int i = 0; i < n; ++i) index.emplace(out.basis[static_cast<std::size_t>(i)], i);

  auto qi = [&](long v) { return quantum_int(f, v); };
  for (int col = 0; col < n; ++col) {
    const Coloring& c = out.basis[static_cast<std::size_t>(col)];
    const long a = c.values[static_cast<std::size_t>(p)];
    const long b = c.values[static_cast<std::size_t>(q)];
    const long cc = c.values[static_cast<std::size_t>(s)];
    auto emit = [&](long da, long db, const CycNum& coeff) {
      Coloring target = c;
      target.values[static_cast<std::size_t>(p)] = static_cast<int>(a + da);
      target.values[static_cast<std::size_t>(q)] = static_cast<int>(b + db);
      if (!is_r_admissible(g, target, r)) return;  // Gamma_d = 0 off the basis
      auto it = index.find(target);
      internal_check(it != index.end(), "admissible target missing from basis");
      out.mat.at(it->second, col) += coeff;
    };
    emit(+1, +1, CycNum::one(f));
    if (a >= 1) {
      const CycNum t = qi((cc + a - b) / 2);
      emit(-1, +1, -(t * t * (qi(a) * qi(a + 1)).inv()));
    }
    if (b >= 1) {
      const CycNum t = qi((cc + b - a) / 2);
      emit(+1, -1, -(t * t * (qi(b) * qi(b + 1)).inv()));
    }
    if (a >= 1 && b >= 1) {
      const CycNum u = qi((a + b + cc) / 2 + 1);
      const CycNum v = qi((a + b - cc) / 2);
      emit(-1, -1, u * u * v * v * (qi(a) * qi(a + 1) * qi(b) * qi(b + 1)).inv());
    }
  }
  return out;
}

}  // namespace detail

/// Curve operator of the curve passing along the first two edges of the
/// theta graph.
inline RepMatrix curve_operator_genus2(long r) { return detail::theta_curve_operator(r, 0, 1, 2); }

/// The relabeled companion curve along the second and third edges.
inline RepMatrix curve_operator_genus2_bc(long r) {
  return detail::theta_curve_operator(r, 1, 2, 0);
}

/// Twist matrix of a curve from its curve operator: verifies that the
/// minimal polynomial divides prod_n (x - x_n), then evaluates Q.
inline RepMatrix dehn_twist_via_Q(const RepMatrix& op, long r) {
  const CycField& f = CycField::get(r);
  Matrix prod = Matrix::identity(f, op.mat.rows());
  for (long n = 0; n <= r - 2; ++n) {
    Matrix shifted = op.mat;
    const CycNum xn = encircling_eigenvalue(f, n);
    for (int i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= xn;
    prod = prod * shifted;
  }
  if (!prod.is_zero())
    throw std::invalid_argument("curve operator spectrum escapes the node set");
  RepMatrix out{r, op.genus, op.basis, eval_at_matrix(interpolation_Q(r), op.mat)};
  return out;
}

/// Genus-1 pair: the diagonal twist along the dual disc of the core and the
/// twist of the once-intersecting curve obtained through Q.
inline std::pair<RepMatrix, RepMatrix> genus1_rep(long r) {
  return {dehn_twist_dual(1, r, 0), dehn_twist_via_Q(curve_operator_genus1(r), r)};
}

/// Genus-2 twist set over the theta-graph basis: dual twists on the three
/// edges plus the two curve-operator twists.
inline std::array<RepMatrix, 5> genus2_rep(long r) {
  return {dehn_twist_dual(2, r, 0), dehn_twist_dual(2, r, 1), dehn_twist_dual(2, r, 2),
          dehn_twist_via_Q(curve_operator_genus2(r), r),
          dehn_twist_via_Q(curve_operator_genus2_bc(r), r)};
}

/// Dimension over K of the joint commutant {X : XM = MX for all M}, via the
/// exact null space of the stacked commutator system.
inline long commutant_dimension(const std::vector<Matrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("commutant of an empty set");
  const int n = mats.front().rows();
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n)
      throw std::invalid_argument("commutant requires square matrices on a common basis");
  }
  std::vector<std::vector<std::pair<int, CycNum>>> rows;
  auto slot = [&](int i, int j) { return i * n + j; };
  for (const auto& m : mats) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        // sum_k X_{ik} M_{kj} - M_{ik} X_{kj} = 0
        std::map<int, CycNum> row;
        for (int k = 0; k < n; ++k) {
          const CycNum& mkj = m.at(k, j);
          if (!mkj.is_zero()) {
            auto [it, fresh] = row.emplace(slot(i, k), mkj);
            if (!fresh) it->second += mkj;
          }
          const CycNum& mik = m.at(i, k);
          if (!mik.is_zero()) {
            auto [it, fresh] = row.emplace(slot(k, j), -mik);
            if (!fresh) it->second -= mik;
          }
        }
        std::vector<std::pair<int, CycNum>> packed;
        for (auto& [colk, v] : row) {
          if (!v.is_zero()) packed.emplace_back(colk, std::move(v));
        }
        if (!packed.empty()) rows.push_back(std::move(packed));
      }
    }
  }
  return static_cast<long>(n) * n - sparse_rank(std::move(rows));
}

/// Equality in PGL: M = lambda N for a scalar found from the first nonzero
/// entry of N (row-major) and verified globally.
inline bool projective_equal(const Matrix& m, const Matrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols())
    throw std::invalid_argument("projective comparison shape mismatch");
  if (n.is_zero()) throw std::invalid_argument("projective comparison against zero");
  for (int i = 0; i < n.rows(); ++i) {
    for (int j = 0; j < n.cols(); ++j) {
      if (!n.at(i, j).is_zero()) {
        const CycNum lambda = m.at(i, j) * n.at(i, j).inv();
        return m == n * lambda;
      }
    }
  }
  return false;
}

inline Matrix gram_diagonal(const GramForm& gram) {
  const CycField& f = CycField::get(gram.r);
  Matrix h(f, static_cast<int>(gram.norms.size()), static_cast<int>(gram.norms.size()));
  for (std::size_t i = 0; i < gram.norms.size(); ++i)
    h.at(static_cast<int>(i), static_cast<int>(i)) = gram.norms[i];
  return h;
}

/// M^H h M = h, with M^H the conjugate transpose.
inline bool is_gram_unitary(const Matrix& m, const GramForm& gram) {
  const Matrix h = gram_diagonal(gram);
  return m.conj_transpose() * h * m == h;
}

/// M^H h = h M: self-adjointness with respect to the Gram form.
inline bool is_gram_self_adjoint(const Matrix& m, const GramForm& gram) {
  const Matrix h = gram_diagonal(gram);
  return m.conj_transpose() * h == h * m;
}

/// Characteristic polynomial of a tridiagonal matrix via the three-term
/// continuant recursion.
inline Polynomial char_poly_tridiagonal(const Matrix& m) {
  const CycField& f = m.field();
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j > i + 1 || i > j + 1)
        internal_check(m.at(i, j).is_zero(), "matrix is not tridiagonal");
  const Polynomial z = Polynomial::variable(f);
  Polynomial prev = Polynomial::constant(f, CycNum::one(f));
  if (n == 0) return prev;
  Polynomial cur = z - Polynomial::constant(f, m.at(0, 0));
  for (int k = 1; k < n; ++k) {
    Polynomial next = (z - Polynomial::constant(f, m.at(k, k))) * cur -
                      Polynomial::constant(f, m.at(k, k - 1) * m.at(k - 1, k)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// prod_{n=0}^{r-2} (x - x_n) over the encircling nodes.
inline Polynomial node_product(long r) {
  const CycField& f = CycField::get(r);
  Polynomial p = Polynomial::constant(f, CycNum::one(f));
  const Polynomial z = Polynomial::variable(f);
  for (long n = 0; n <= r - 2; ++n)
    p = p * (z - Polynomial::constant(f, encircling_eigenvalue(f, n)));
  return p;
}

}  // namespace skeinrep
