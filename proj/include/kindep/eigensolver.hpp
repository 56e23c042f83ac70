#pragma once

#include <cstddef>
#include <vector>

namespace kindep {

// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by implicit-shift QL.
struct SymmetricEigen {
    int n = 0;
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row-major n x n, column j pairs with values[j]; empty unless requested

    double vector_entry(int row, int col) const
    {
        return vectors[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) + static_cast<std::size_t>(col)];
    }
};

// `matrix` is row-major n x n and must be symmetric; it is consumed.
// Throws Error{ConvergenceFailure} when QL exceeds its iteration cap.
SymmetricEigen symmetric_eigen(std::vector<double> matrix, int n, bool want_vectors = false);

} // namespace kindep
