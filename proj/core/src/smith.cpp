#include "ricci_lab/smith.hpp"

#include <algorithm>

namespace ricci_lab {

namespace {

using boost::multiprecision::abs;

struct Workspace {
  IntegerMatrix u, a, v;
};

// Moves the entry of least nonzero magnitude in the trailing block to (t, t).
bool bring_pivot(Workspace& w, std::size_t t) {
  std::size_t bi = 0, bj = 0;
  bool found = false;
  Integer best;
  for (std::size_t i = t; i < w.a.rows(); ++i)
    for (std::size_t j = t; j < w.a.cols(); ++j) {
      const Integer& x = w.a(i, j);
      if (x == 0) continue;
      Integer ax = abs(x);
      if (!found || ax < best) {
        best = ax;
        bi = i;
        bj = j;
        found = true;
      }
    }
  if (!found) return false;
  w.a.swap_rows(t, bi);
  w.u.swap_rows(t, bi);
  w.a.swap_cols(t, bj);
  w.v.swap_cols(t, bj);
  return true;
}

// Reduces row and column t against the pivot; true when both are cleared.
bool clear_cross(Workspace& w, std::size_t t) {
  bool clean = true;
  const Integer p = w.a(t, t);
  for (std::size_t i = t + 1; i < w.a.rows(); ++i) {
    if (w.a(i, t) == 0) continue;
    Integer q = w.a(i, t) / p;
    w.a.add_row_multiple(i, t, -q);
    w.u.add_row_multiple(i, t, -q);
    if (w.a(i, t) != 0) clean = false;
  }
  for (std::size_t j = t + 1; j < w.a.cols(); ++j) {
    if (w.a(t, j) == 0) continue;
    Integer q = w.a(t, j) / p;
    w.a.add_col_multiple(j, t, -q);
    w.v.add_col_multiple(j, t, -q);
    if (w.a(t, j) != 0) clean = false;
  }
  return clean;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  Workspace w{IntegerMatrix::identity(a.rows()), a, IntegerMatrix::identity(a.cols())};
  const std::size_t steps = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < steps; ++t) {
    if (!bring_pivot(w, t)) break;
    for (;;) {
      if (!clear_cross(w, t)) {
        bring_pivot(w, t);
        continue;
      }
      // Divisibility: fold an offending row into row t and start over.
      bool divisible = true;
      for (std::size_t i = t + 1; i < w.a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < w.a.cols(); ++j)
          if (w.a(i, j) % w.a(t, t) != 0) {
            w.a.add_row_multiple(t, i, 1);
            w.u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (w.a(t, t) < 0) {
      w.a.negate_row(t);
      w.u.negate_row(t);
    }
  }
  return {std::move(w.u), std::move(w.a), std::move(w.v)};
}

IntegerMatrix integer_kernel_basis(const IntegerMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const std::size_t r = s.rank();
  IntegerMatrix basis(a.cols(), a.cols() - r);
  for (std::size_t j = r; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.cols(); ++i) basis(i, j - r) = s.V(i, j);
  return basis;
}

}  // namespace ricci_lab
