#ifndef TORCUR_DEGREES_HPP
#define TORCUR_DEGREES_HPP

// Numerical data attached to a choice of genus and multi-degree: the
// completed degree vector, the ranks of the section bundles, and the
// dimensions of the spaces built from them.

#include <vector>

#include "torcur/fan.hpp"
#include "torcur/rational.hpp"

namespace torcur {

struct DegreeData {
    int g = 0;                    // genus
    std::vector<long long> d;     // degree per ray, length r
    std::vector<long long> N;     // rank per ray: d - (g-1)
    long long dim_mor = 0;        // dimension of the space of morphisms
    long long dim_W = 0;          // dimension of the big family over the full Jacobian power
    long long dim_V = 0;          // dimension of the compactified morphism space
    long long dim_Y = 0;          // dimension of the toric fibre
};

// Completes the free degrees (length l) through the relation matrix and
// derives ranks and dimensions. Throws Error("degrees", ...) when the
// smoothness bound d > 2g-1 fails at some ray.
DegreeData derive_degree_data(const Fan& fan, const std::vector<std::vector<long long>>& rel,
                              int genus, const std::vector<long long>& free_degrees);

// Euler characteristic of the toric fibre: sum over maximal cones of the
// product of the ranks of the surviving rays.
Int euler_char_fibre(const Fan& fan, const DegreeData& dd);

}  // namespace torcur

#endif
