#include "torcur/builtins.hpp"

namespace torcur {

Fan fan_line() { return make_fan({{-1}, {1}}, {{1}, {2}}, 2); }

Fan fan_product_lines() {
    return make_fan({{-1, 0}, {0, -1}, {1, 0}, {0, 1}}, {{3, 4}, {4, 1}, {1, 2}, {2, 3}}, 1);
}

Fan fan_blowup_plane() {
    return make_fan({{-1, 1}, {0, -1}, {1, 0}, {0, 1}}, {{3, 4}, {4, 1}, {1, 2}, {2, 3}}, 1);
}

Fan fan_projective_space(int n) {
    if (n < 1) throw Error("fan", "projective space needs n >= 1");
    std::vector<std::vector<long long>> rays;
    rays.push_back(std::vector<long long>(n, -1));
    for (int j = 0; j < n; ++j) {
        std::vector<long long> e(n, 0);
        e[j] = 1;
        rays.push_back(e);
    }
    // maximal cones: all n-subsets of the n+1 rays
    std::vector<std::vector<int>> cones;
    int distinguished = 0;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != skip) cone.push_back(i + 1);
        cones.push_back(cone);
        if (skip == 0) distinguished = static_cast<int>(cones.size());
    }
    return make_fan(rays, cones, distinguished);
}

}  // namespace torcur
