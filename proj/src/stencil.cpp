#include "newton_certify/stencil.hpp"

#include <stdexcept>

#include "newton_certify/error.hpp"

namespace newton_certify {

Stencil::Stencil(int n) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw Error("negative stencil size");
}

Stencil::Stencil(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
  if (n < 0 || bits_.size() != static_cast<std::size_t>(n) * n)
    throw Error("stencil needs n*n entries");
  for (auto b : bits_)
    if (b > 1) throw Error("stencil entries must be 0 or 1");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((*this)(i, j) != (*this)(j, i)) throw Error("stencil is not symmetric");
}

void Stencil::set(int i, int j, bool value) {
  bits_[static_cast<std::size_t>(i) * n_ + j] = value;
  bits_[static_cast<std::size_t>(j) * n_ + i] = value;
}

std::size_t Stencil::ones() const {
  std::size_t c = 0;
  for (auto b : bits_) c += b;
  return c;
}

Stencil stencil_of(const LatticePolytope& m) {
  if (!inside_double_simplex(m)) throw Error("polytope is not contained in 2*Delta");
  Stencil s(m.n());
  for (const auto& p : double_simplex_lattice_points(m)) {
    int first = -1;
    int second = -1;
    for (int r = 0; r < m.n(); ++r) {
      if (p[r] == 2) first = second = r;
      if (p[r] == 1) (first < 0 ? first : second) = r;
    }
    s.set(first, second);
  }
  return s;
}

namespace {

bool augment(const Stencil& s, int row, std::vector<int>& col_owner, std::vector<int>& row_to_col,
             std::vector<char>& seen) {
  for (int c = 0; c < s.n(); ++c) {
    if (!s(row, c) || seen[c]) continue;
    seen[c] = 1;
    if (col_owner[c] < 0 || augment(s, col_owner[c], col_owner, row_to_col, seen)) {
      col_owner[c] = row;
      row_to_col[row] = c;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> maximum_matching(const Stencil& s) {
  const int n = s.n();
  std::vector<int> row_to_col(n, -1);
  std::vector<int> col_owner(n, -1);
  // Greedy pass first: each row takes its first free column.
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (s(r, c) && col_owner[c] < 0) {
        col_owner[c] = r;
        row_to_col[r] = c;
        break;
      }
  for (int r = 0; r < n; ++r) {
    if (row_to_col[r] >= 0) continue;
    std::vector<char> seen(n, 0);
    augment(s, r, col_owner, row_to_col, seen);
  }
  return row_to_col;
}

std::optional<Permutation> find_matching(const Stencil& s) {
  std::vector<int> m = maximum_matching(s);
  for (int c : m)
    if (c < 0) return std::nullopt;
  return m;
}

VertexCover min_vertex_cover(const Stencil& s) {
  const int n = s.n();
  const std::vector<int> row_to_col = maximum_matching(s);
  std::vector<int> col_owner(n, -1);
  std::size_t matched = 0;
  for (int r = 0; r < n; ++r)
    if (row_to_col[r] >= 0) {
      col_owner[row_to_col[r]] = r;
      ++matched;
    }
  if (matched == static_cast<std::size_t>(n)) throw Error("stencil has a perfect matching; no small cover exists");

  std::vector<char> row_reached(n, 0), col_reached(n, 0);
  std::vector<int> stack;
  for (int r = 0; r < n; ++r)
    if (row_to_col[r] < 0) {
      row_reached[r] = 1;
      stack.push_back(r);
    }
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (int c = 0; c < n; ++c) {
      if (!s(r, c) || col_reached[c]) continue;
      col_reached[c] = 1;
      int owner = col_owner[c];
      if (owner >= 0 && !row_reached[owner]) {
        row_reached[owner] = 1;
        stack.push_back(owner);
      }
    }
  }
  VertexCover cover;
  for (int i = 0; i < n; ++i) {
    if (!row_reached[i]) cover.rows.push_back(i);
    if (col_reached[i]) cover.cols.push_back(i);
  }
  if (cover.size() != matched) throw std::logic_error("Koenig cover size differs from matching size");
  return cover;
}

Halfspace separating_halfspace(const VertexCover& cover, int n) {
  if (n < 1) throw Error("dimension must be positive");
  if (static_cast<int>(cover.size()) >= n) throw Error("cover too large: |I| + |J| must be below n");
  Halfspace h;
  h.coeffs.assign(n, Rational(0));
  for (int i : cover.rows) {
    if (i < 0 || i >= n) throw Error("cover index out of range");
    h.coeffs[i] += 1;
  }
  for (int j : cover.cols) {
    if (j < 0 || j >= n) throw Error("cover index out of range");
    h.coeffs[j] += 1;
  }
  h.rhs = 2;
  if (h.contains(barycenter(n))) throw std::logic_error("half-space does not exclude O");
  return h;
}

}  // namespace newton_certify
