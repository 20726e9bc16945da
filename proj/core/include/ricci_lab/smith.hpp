#pragma once

#include "ricci_lab/integer_matrix.hpp"

#include <vector>

namespace ricci_lab {

// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... .
struct SmithDecomposition {
  IntegerMatrix U;
  IntegerMatrix D;
  IntegerMatrix V;

  std::vector<Integer> diagonal() const;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);

// Integer basis of {x in Z^n : A x = 0}, one vector per column of the result.
IntegerMatrix integer_kernel_basis(const IntegerMatrix& a);

}  // namespace ricci_lab
