#pragma once

/// Trivalent graphs, admissible edge colorings, their enumeration, and the
/// dimension formula with an exact counting cross-check.

#include "skeinrep/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skeinrep {

/// Abstract graph whose vertices have valence 3 or 1.  Self-loops and multiple
/// edges are allowed; vertexless free circles are tracked by count.  Univalent
/// vertices are the boundary (marked points).
class TrivalentGraph {
 public:
  TrivalentGraph(int vertex_count, std::vector<std::pair<int, int>> edges,
                 int vertexless_loops = 0)
      : vertex_count_(vertex_count),
        edges_(std::move(edges)),
        loops_(vertexless_loops) {
    if (vertex_count_ < 0 || loops_ < 0) throw std::invalid_argument("negative graph data");
    incidence_.assign(static_cast<std::size_t>(vertex_count_), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        throw std::invalid_argument("edge endpoint out of range");
      incidence_[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
      incidence_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
    for (int v = 0; v < vertex_count_; ++v) {
      const auto valence = incidence_[static_cast<std::size_t>(v)].size();
      if (valence == 1) boundary_.push_back(v);
      else if (valence != 3)
        throw std::invalid_argument("vertex valence must be 1 or 3");
    }
  }

  int vertex_count() const { return vertex_count_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int vertexless_loops() const { return loops_; }
  const std::vector<int>& boundary() const { return boundary_; }

  /// Incident edge indices per vertex; a self-loop appears twice.
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

  /// Number of colorable slots: edges first, then vertexless loops.
  int color_slots() const { return static_cast<int>(edges_.size()) + loops_; }

  bool is_trivalent_vertex(int v) const {
    return incidence_[static_cast<std::size_t>(v)].size() == 3;
  }

  /// The unique edge at a univalent vertex.
  int boundary_edge(int v) const {
    const auto& inc = incidence_.at(static_cast<std::size_t>(v));
    internal_check(inc.size() == 1, "boundary edge of a trivalent vertex");
    return inc[0];
  }

 private:
  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  int loops_;
  std::vector<int> boundary_;
  std::vector<std::vector<int>> incidence_;
};

/// Edge-color assignment, in slot order (edges, then vertexless loops).
struct Coloring {
  std::vector<int> values;

  friend bool operator==(const Coloring& a, const Coloring& b) { return a.values == b.values; }
  friend bool operator<(const Coloring& a, const Coloring& b) { return a.values < b.values; }
};

/// Internal colors (i, j, k) of a vertex triple: a = j+k, b = i+k, c = i+j.
/// Empty when the triple is not even-sum triangular.
inline std::optional<std::array<int, 3>> internal_colors(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return std::nullopt;
  if ((a + b + c) % 2 != 0) return std::nullopt;
  const int i = (b + c - a) / 2;
  const int j = (a + c - b) / 2;
  const int k = (a + b - c) / 2;
  if (i < 0 || j < 0 || k < 0) return std::nullopt;
  return std::array<int, 3>{i, j, k};
}

/// A triple is admissible at level r when it is even-sum, triangular, and its
/// sum stays below 2r-2 (with every color in 0..r-2).
inline bool triple_admissible(int a, int b, int c, long r) {
  if (a < 0 || b < 0 || c < 0) return false;
  if (a > r - 2 || b > r - 2 || c > r - 2) return false;
  if (!internal_colors(a, b, c)) return false;
  return a + b + c < 2 * r - 2;
}

inline bool is_r_admissible(const TrivalentGraph& g, const Coloring& c, long r) {
  if (static_cast<int>(c.values.size()) != g.color_slots()) return false;
  for (int v : c.values) {
    if (v < 0 || v > r - 2) return false;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_trivalent_vertex(v)) continue;
    const auto& inc = g.incidence()[static_cast<std::size_t>(v)];
    if (!triple_admissible(c.values[static_cast<std::size_t>(inc[0])],
                           c.values[static_cast<std::size_t>(inc[1])],
                           c.values[static_cast<std::size_t>(inc[2])], r))
      return false;
  }
  return true;
}

/// All admissible colorings extending the boundary assignment, in
/// lexicographic slot order.  boundary_colors pairs with g.boundary() by
/// position; pass an empty vector for a closed graph.
inline std::vector<Coloring> enumerate_admissible(const TrivalentGraph& g, long r,
                                                  const std::vector<int>& boundary_colors = {}) {
  if (r < 2) throw std::invalid_argument("level must be >= 2");
  if (boundary_colors.size() != g.boundary().size())
    throw std::invalid_argument("boundary color count must match marked points");

  const int slots = g.color_slots();
  std::vector<int> fixed(static_cast<std::size_t>(slots), -1);
  for (std::size_t i = 0; i < boundary_colors.size(); ++i) {
    const int e = g.boundary_edge(g.boundary()[i]);
    fixed[static_cast<std::size_t>(e)] = boundary_colors[i];
  }

  // A vertex can be checked once its last incident edge has been colored.
  std::vector<std::vector<int>> check_at(static_cast<std::size_t>(slots));
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.is_trivalent_vertex(v)) continue;
    const auto& inc = g.incidence()[static_cast<std::size_t>(v)];
    const int last = std::max({inc[0], inc[1], inc[2]});
    check_at[static_cast<std::size_t>(last)].push_back(v);
  }

  std::vector<Coloring> out;
  std::vector<int> cur(static_cast<std::size_t>(slots), 0);
  auto rec = [&](auto&& self, int s) -> void {
    if (s == slots) {
      out.push_back(Coloring{cur});
      return;
    }
    const int lo = fixed[static_cast<std::size_t>(s)] < 0 ? 0 : fixed[static_cast<std::size_t>(s)];
    const int hi = fixed[static_cast<std::size_t>(s)] < 0 ? static_cast<int>(r - 2)
                                                          : fixed[static_cast<std::size_t>(s)];
    if (lo < 0 || hi > r - 2) return;
    for (int color = lo; color <= hi; ++color) {
      cur[static_cast<std::size_t>(s)] = color;
      bool ok = true;
      for (int v : check_at[static_cast<std::size_t>(s)]) {
        const auto& inc = g.incidence()[static_cast<std::size_t>(v)];
        if (!triple_admissible(cur[static_cast<std::size_t>(inc[0])],
                               cur[static_cast<std::size_t>(inc[1])],
                               cur[static_cast<std::size_t>(inc[2])], r)) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, s + 1);
    }
    cur[static_cast<std::size_t>(s)] = 0;
  };
  rec(rec, 0);
  return out;
}

/// Deterministic handlebody spine of a closed genus-g surface: a free circle
/// for genus 1, and for genus >= 2 a necklace of g-1 double-edge beads joined
/// cyclically (the theta graph at genus 2).
inline TrivalentGraph standard_graph(int genus) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (genus == 1) return TrivalentGraph(0, {}, 1);
  const int beads = genus - 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < beads; ++i) {
    edges.emplace_back(2 * i, 2 * i + 1);
    edges.emplace_back(2 * i, 2 * i + 1);
  }
  for (int i = 0; i < beads; ++i) {
    edges.emplace_back(2 * i + 1, 2 * ((i + 1) % beads));
  }
  return TrivalentGraph(2 * beads, std::move(edges));
}

/// Standard graph with k marked points.  Genus 1 uses a cycle of k trivalent
/// vertices with one leg each (the once-punctured torus at k = 1, where the
/// cycle degenerates to a self-loop).  Higher genus splits the first k edges
/// of the closed standard graph.
inline TrivalentGraph marked_standard_graph(int genus, int marked) {
  if (marked < 1) throw std::invalid_argument("marked point count must be >= 1");
  if (genus == 1) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < marked; ++i) edges.emplace_back(i, (i + 1) % marked);
    for (int i = 0; i < marked; ++i) edges.emplace_back(i, marked + i);
    return TrivalentGraph(2 * marked, std::move(edges));
  }
  TrivalentGraph base = standard_graph(genus);
  auto edges = base.edges();
  if (marked > static_cast<int>(edges.size()))
    throw std::invalid_argument("too many marked points for this genus");
  int next_vertex = base.vertex_count();
  std::vector<std::pair<int, int>> extra;
  for (int m = 0; m < marked; ++m) {
    const int w = next_vertex++;   // split vertex on edge m
    const int leg = next_vertex++;  // univalent end
    const auto [u, v] = edges[static_cast<std::size_t>(m)];
    edges[static_cast<std::size_t>(m)] = {u, w};
    extra.emplace_back(w, v);
    extra.emplace_back(w, leg);
  }
  edges.insert(edges.end(), extra.begin(), extra.end());
  return TrivalentGraph(next_vertex, std::move(edges));
}

namespace detail {

using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>>;

inline long verlinde_guard_bits() {
  if (const char* env = std::getenv("SKEINREP_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 64;
}

}  // namespace detail

/// High-precision evaluation of the dimension formula
/// (r/2)^{g-1} sum_j sin(pi j / r)^{2-2g}, rounded to the nearest integer.
inline long verlinde_formula_value(int genus, long r) {
  if (genus < 1) throw std::invalid_argument("genus must be >= 1");
  if (r < 2) throw std::invalid_argument("level must be >= 2");

  long log2r = 0;
  while ((1L << (log2r + 1)) <= r) ++log2r;
  const long bits = 2 * (genus * (log2r + 1) + detail::verlinde_guard_bits());
  const unsigned digits = static_cast<unsigned>(bits * 0.30103) + 4;

  using detail::HighFloat;
  const unsigned saved = HighFloat::default_precision();
  HighFloat::default_precision(digits);
  long long formula_value = 0;
  {
    const HighFloat pi = boost::math::constants::pi<HighFloat>();
    HighFloat sum = 0;
    for (long j = 1; j <= r - 1; ++j) {
      const HighFloat s = sin(pi * j / r);
      sum += pow(s, 2 - 2 * genus);
    }
    const HighFloat dim = pow(HighFloat(r) / 2, genus - 1) * sum;
    const HighFloat rounded = round(dim);
    internal_check(abs(dim - rounded) < 0.25, "dimension formula far from an integer");
    formula_value = rounded.convert_to<long long>();
  }
  HighFloat::default_precision(saved);
  return static_cast<long>(formula_value);
}

/// Dimension of the level-(r-2) space for a closed genus-g surface: the
/// formula value cross-checked against the admissible-coloring count of the
/// standard graph.  The two must agree.
inline long verlinde_dim(int genus, long r) {
  const long formula_value = verlinde_formula_value(genus, r);
  const auto basis = enumerate_admissible(standard_graph(genus), r);
  internal_check(static_cast<long>(basis.size()) == formula_value,
                 "dimension formula disagrees with coloring count");
  return formula_value;
}

}  // namespace skeinrep
