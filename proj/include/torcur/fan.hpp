#ifndef TORCUR_FAN_HPP
#define TORCUR_FAN_HPP

// Combinatorics of a smooth projective toric fan: validated ray data,
// the relation matrix tying the free rays to the distinguished cone,
// primitive collections, dual bases of maximal cones, and the induced
// restriction relations among the ray classes.
//
// Convention: after validation the rays are reindexed so that the
// distinguished maximal cone occupies the last n positions; its rays
// form the lattice basis in which all dual-lattice vectors are stored
// (coordinate j of a dual-lattice vector m is the value of m on the
// j-th distinguished ray).

#include <string>
#include <vector>

#include "json.hpp"
#include "torcur/error.hpp"

namespace torcur {

struct Fan {
    int n = 0;  // ambient lattice rank
    int r = 0;  // number of rays
    int l = 0;  // r - n

    std::vector<std::vector<long long>> rays;  // reindexed, r vectors of length n
    std::vector<std::vector<int>> max_cones;   // 0-based ray ids, each sorted ascending
    int distinguished = 0;                     // index into max_cones
    std::vector<int> old_to_new;               // reindexing permutation on rays, 0-based

    // inverse of the distinguished ray matrix; maps ambient vectors to
    // coordinates in the distinguished basis
    std::vector<std::vector<long long>> dist_basis_inv;

    int cone_count() const { return static_cast<int>(max_cones.size()); }

    // does the (sorted, 0-based) ray subset span a cone of the fan?
    bool spans_cone(const std::vector<int>& subset) const;

    // coordinates of an ambient lattice vector in the distinguished basis
    std::vector<long long> to_distinguished_coords(const std::vector<long long>& v) const;

    // rays not in the given maximal cone, ascending
    std::vector<int> surviving_rays(int cone) const;
};

// Builds and fully validates a fan from raw input data (1-based cone
// indices, as in the input schema). Throws Error("fan", ...) naming the
// offending ray or cone in input indexing.
Fan make_fan(const std::vector<std::vector<long long>>& rays,
             const std::vector<std::vector<int>>& max_cones_1based, int distinguished_1based);

// Same, from a JSON object with keys "rays", "max_cones", "distinguished".
Fan parse_and_validate(const nlohmann::json& doc);

// Integer matrix A (l rows, n columns) with row f expressing the f-th free
// ray against the distinguished basis: e^f + sum_j A[f][j] e^{l+j} = 0.
// The defining identity is re-verified exactly before returning.
std::vector<std::vector<long long>> relation_matrix(const Fan& fan);

// All minimal non-face subsets of the ray set, each sorted, the list
// sorted lexicographically. 0-based ray ids.
std::vector<std::vector<int>> primitive_collections(const Fan& fan);

// Dual basis of the given maximal cone: one dual-lattice vector per cone
// member (in cone order), in distinguished-basis coordinates, satisfying
// <u_i, ray_j> = delta_ij within the cone.
std::vector<std::vector<long long>> dual_basis(const Fan& fan, int cone);

// For each ray of the cone (cone order), the integer coefficients
// expressing its class as a combination of the classes of the surviving
// rays (ascending order): class(rho) = sum_j row[j] * class(surviving[j]).
std::vector<std::vector<long long>> restriction_coeffs(const Fan& fan, int cone);

}  // namespace torcur

#endif
