#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newton_certify/polytope.hpp"

namespace newton_certify {

/// 0-based permutation: perm[i] is the image of i.
using Permutation = std::vector<int>;

/// Symmetric n x n 0/1 matrix marking which e_i + e_j lie in a polytope.
class Stencil {
 public:
  explicit Stencil(int n);
  /// Row-major bits; throws Error unless symmetric with 0/1 entries.
  Stencil(int n, std::vector<std::uint8_t> bits);

  int n() const noexcept { return n_; }
  bool operator()(int i, int j) const { return bits_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  /// Sets both (i, j) and (j, i).
  void set(int i, int j, bool value = true);
  std::size_t ones() const;

  friend bool operator==(const Stencil&, const Stencil&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
};

/// bits(i, j) = 1 exactly when e_i + e_j lies in m. Throws Error unless m is
/// inside 2*Delta.
Stencil stencil_of(const LatticePolytope& m);

/// Maximum matching of rows to columns along 1-entries: a greedy pass, then
/// augmenting paths for the rows left over.
/// Rows and columns are scanned in increasing order, so the result is
/// deterministic. row_to_col[i] is -1 for unmatched rows.
std::vector<int> maximum_matching(const Stencil& s);

/// A permutation sigma with bits(i, sigma(i)) = 1 for every i, if one exists.
std::optional<Permutation> find_matching(const Stencil& s);

/// Rows I and columns J (0-based, ascending) such that every 1-entry (i, j)
/// has i in I or j in J.
struct VertexCover {
  std::vector<int> rows;
  std::vector<int> cols;

  std::size_t size() const noexcept { return rows.size() + cols.size(); }
};

/// Koenig cover read off the alternating-path reachability of a maximum
/// matching: I = rows not reached from unmatched rows, J = columns reached.
/// Its size equals the maximum matching size. Throws Error if s admits a
/// perfect matching (no cover smaller than n exists then).
VertexCover min_vertex_cover(const Stencil& s);

/// sum_{l in I} x_l + sum_{l in J} x_l >= 2. Excludes O, which is checked
/// before returning. Throws Error if |I| + |J| >= n.
Halfspace separating_halfspace(const VertexCover& cover, int n);

}  // namespace newton_certify
