#pragma once

// Independent brute-force oracles used only by tests.  These deliberately
// avoid the library's own composition and evaluation paths.

#include "skeinrep/pairing.hpp"
#include "skeinrep/temperley_lieb.hpp"

#include <numeric>
#include <utility>
#include <vector>

namespace skeinrep::test {

// Diagram composition via union-find over the 3n points of the stacked
// picture: x's top, the glued interface, y's bottom.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

inline std::pair<TLDiagram, int> compose_oracle(const TLDiagram& x, const TLDiagram& y) {
  const int n = x.strands();
  // node ids: 0..n-1 x-top, n..2n-1 interface, 2n..3n-1 y-bottom
  UnionFind uf(3 * n);
  for (int p = 0; p < 2 * n; ++p) {
    const int q = x.partner(p);
    if (p < q) uf.unite(p, q);  // x points map to 0..2n-1 directly
  }
  for (int p = 0; p < 2 * n; ++p) {
    const int q = y.partner(p);
    const int a = p < n ? p + n : p + n;  // y-top -> interface, y-bottom -> 2n..3n-1
    const int b = q < n ? q + n : q + n;
    if (p < q) uf.unite(a, b);
  }
  // boundary nodes of the composite: x-top (0..n-1) and y-bottom (2n..3n-1)
  auto to_result = [&](int node) { return node < n ? node : node - n; };
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> reps;
  for (int p = 0; p < n; ++p) reps.push_back(p);
  for (int p = 2 * n; p < 3 * n; ++p) reps.push_back(p);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (uf.find(reps[i]) == uf.find(reps[j]))
        pairs.emplace_back(to_result(reps[i]), to_result(reps[j]));
    }
  }
  // loops: interface components containing no boundary node
  std::vector<int> loop_reps;
  for (int m = n; m < 2 * n; ++m) {
    const int root = uf.find(m);
    bool boundary = false;
    for (int b : reps) {
      if (uf.find(b) == root) {
        boundary = true;
        break;
      }
    }
    if (!boundary) {
      if (std::find(loop_reps.begin(), loop_reps.end(), root) == loop_reps.end())
        loop_reps.push_back(root);
    }
  }
  return {TLDiagram::from_pairs(n, pairs), static_cast<int>(loop_reps.size())};
}

// Theta network evaluated directly in the diagram algebra: three idempotents
// side by side, joined top and bottom by the planar triad pattern, closed.
inline CycNum theta_oracle(const CycField& f, int a, int b, int c) {
  const auto ijk = internal_colors(a, b, c);
  internal_check(ijk.has_value(), "theta oracle needs an admissible triple");
  const int i = (*ijk)[0], j = (*ijk)[1], k = (*ijk)[2];
  const int total = a + b + c;
  std::vector<std::pair<int, int>> top;
  for (int t = 0; t < k; ++t) top.emplace_back(a - 1 - t, a + t);
  for (int t = 0; t < i; ++t) top.emplace_back(a + b - 1 - t, a + b + t);
  for (int t = 0; t < j; ++t) top.emplace_back(t, total - 1 - t);
  std::vector<std::pair<int, int>> pairs = top;
  for (auto [u, v] : top) pairs.emplace_back(u + total, v + total);
  const TLDiagram wiring = TLDiagram::from_pairs(total, pairs);
  const TLElement net =
      tensor(tensor(jones_wenzl(f, a), jones_wenzl(f, b)), jones_wenzl(f, c));
  return markov_trace(tl_mul(net, TLElement::single(f, wiring, CycNum::one(f))));
}

// Catalan numbers for enumeration cross-checks.
inline long catalan(int n) {
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace skeinrep::test
