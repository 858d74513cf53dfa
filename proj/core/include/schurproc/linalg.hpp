#pragma once

#include <vector>

namespace schurproc {

/// Determinant by dense LU with partial pivoting; intended for tiny matrices.
double matrix_det(std::vector<std::vector<double>> m);

}  // namespace schurproc
