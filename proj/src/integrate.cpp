#include "torcur/integrate.hpp"

namespace torcur {

IntegrationResult integrate_morphism_space(const LocalizationEngine& engine, const std::vector<long long>& m) {
    const Fan& fan = engine.fan();
    const DegreeData& dd = engine.degree_data();
    if (static_cast<int>(m.size()) != fan.r)
        throw Error("jacobian", "exponent vector must have length " + std::to_string(fan.r));
    long long total = 0;
    for (long long e : m) total += e;
    if (total != dd.dim_V)
        throw Error("jacobian", "sum of exponents " + std::to_string(total) +
                                    " differs from the space dimension " + std::to_string(dd.dim_V));
    IntegrationResult res;
    res.pushforward = engine.pushforward_class(m);
    JacobianEmbedding emb(relation_matrix(fan), fan.n, dd.g);
    res.value = emb.pullback(res.pushforward).integral();
    return res;
}

}  // namespace torcur
