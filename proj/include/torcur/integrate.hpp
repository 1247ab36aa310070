#ifndef TORCUR_INTEGRATE_HPP
#define TORCUR_INTEGRATE_HPP

// The end-to-end pipeline: push the ray-class product forward to the
// full Jacobian power, pull back along the embedding of the small power,
// and integrate against the top exterior monomial.

#include <vector>

#include "torcur/exterior.hpp"
#include "torcur/localization.hpp"

namespace torcur {

struct IntegrationResult {
    Rat value;
    ThetaPoly pushforward;  // intermediate class on the full Jacobian power
};

// Requires sum(m) == dim of the compactified morphism space; throws
// Error("jacobian", ...) otherwise.
IntegrationResult integrate_morphism_space(const LocalizationEngine& engine, const std::vector<long long>& m);

}  // namespace torcur

#endif
