#ifndef TORCUR_LINALG_HPP
#define TORCUR_LINALG_HPP

// Small exact linear algebra over the integers, sized for fan data
// (square matrices of rank <= ~10). Everything is computed with
// arbitrary-precision arithmetic and returned exactly.

#include <vector>

#include "torcur/rational.hpp"

namespace torcur {

using IntMat = std::vector<std::vector<Int>>;  // row major, square where stated

Int det(const IntMat& m);

// Inverse of a matrix with determinant +-1; throws std::domain_error otherwise.
IntMat inverse_unimodular(const IntMat& m);

IntMat mat_mul(const IntMat& a, const IntMat& b);
std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& v);

}  // namespace torcur

#endif
