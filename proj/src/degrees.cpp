#include "torcur/degrees.hpp"

namespace torcur {

DegreeData derive_degree_data(const Fan& fan, const std::vector<std::vector<long long>>& rel,
                              int genus, const std::vector<long long>& free_degrees) {
    if (genus < 0) throw Error("degrees", "genus must be nonnegative");
    if (static_cast<int>(free_degrees.size()) != fan.l)
        throw Error("degrees", "expected " + std::to_string(fan.l) +
                                   " free degrees (one per ray outside the distinguished cone), got " +
                                   std::to_string(free_degrees.size()));

    DegreeData dd;
    dd.g = genus;
    dd.d.assign(fan.r, 0);
    for (int f = 0; f < fan.l; ++f) dd.d[f] = free_degrees[f];
    for (int j = 0; j < fan.n; ++j) {
        long long s = 0;
        for (int f = 0; f < fan.l; ++f) s += rel[f][j] * free_degrees[f];
        dd.d[fan.l + j] = s;
    }

    for (int i = 0; i < fan.r; ++i)
        if (dd.d[i] <= 2LL * genus - 1)
            throw Error("degrees", "degree bound violated: d = " + std::to_string(dd.d[i]) +
                                       " <= 2g-1 at ray " + std::to_string(i + 1));

    dd.N.assign(fan.r, 0);
    long long sum_d = 0, sum_N = 0;
    for (int i = 0; i < fan.r; ++i) {
        dd.N[i] = dd.d[i] - (genus - 1);
        sum_d += dd.d[i];
        sum_N += dd.N[i];
    }
    dd.dim_mor = sum_d - static_cast<long long>(fan.n) * (genus - 1);
    dd.dim_W = sum_d + fan.n;
    dd.dim_V = sum_N + static_cast<long long>(fan.l) * (genus - 1);
    dd.dim_Y = dd.dim_W - static_cast<long long>(fan.r) * genus;
    if (dd.dim_V != dd.dim_mor)
        throw Error("degrees", "dimension bookkeeping mismatch: dim_V != dim_mor");
    return dd;
}

Int euler_char_fibre(const Fan& fan, const DegreeData& dd) {
    Int chi(0);
    for (int c = 0; c < fan.cone_count(); ++c) {
        Int term(1);
        for (int id : fan.surviving_rays(c)) term *= Int(dd.N[id]);
        chi += term;
    }
    return chi;
}

}  // namespace torcur
