#ifndef TORCUR_LOCALIZATION_HPP
#define TORCUR_LOCALIZATION_HPP

// Torus localization over the fixed components of the compactified
// family: per-component equivariant terms restricted to a generic
// integer direction, exact summation with cancellation of all polar
// parts, constant-term extraction, the closed-form push-forward for
// normalized exponents, the relation classes attached to the linear
// equivalences and to primitive collections, and the vanishing test
// for exponents saturating a non-face.

#include <functional>
#include <string>
#include <vector>

#include "torcur/degrees.hpp"
#include "torcur/fan.hpp"
#include "torcur/laurent.hpp"
#include "torcur/theta.hpp"

namespace torcur {

// A direction in the distinguished cocharacter basis along which the
// equivariant parameters are restricted, together with the pairing of
// every dual-basis vector against it (aligned with cone member order).
// Validity requires every pairing to be nonzero.
struct Direction {
    std::vector<long long> v;
    std::vector<std::vector<long long>> pairings;
};

// Builds the pairing table for a caller-supplied direction and checks
// validity; throws Error("engine", ...) if some pairing vanishes.
Direction direction_from_vector(const Fan& fan, const std::vector<long long>& v);

// Deterministic search: tries v = (1, B, B^2, ...) for B = 1, 2, 3, ...
// and returns the first direction whose pairings are all nonzero and
// pairwise distinct within each cone.
Direction choose_direction(const Fan& fan);

struct VanishingCertificate {
    bool holds = false;
    bool spans_no_cone = false;
    bool exponents_large = false;
    std::string detail;
};

class LocalizationEngine {
  public:
    LocalizationEngine(const Fan& fan, const DegreeData& dd, Direction dir);
    LocalizationEngine(const Fan& fan, const DegreeData& dd);  // auto direction

    const Fan& fan() const { return fan_; }
    const DegreeData& degree_data() const { return dd_; }
    const Direction& direction() const { return dir_; }
    const FiberFrame& frame(int cone) const { return comps_[cone].frame; }

    // builds extra equivariant factors to multiply into the term of one
    // fixed component (used for the relation-annihilation checks)
    using MultiplierBuilder = std::function<std::vector<FiberSeries>(const LocalizationEngine&, int cone)>;

    // Laurent expansion of the localization term of one fixed component:
    // surviving classes kept, cone classes rewritten through the
    // restriction relations, all factors expanded and pushed forward.
    ThetaLaurent fixed_component_term(int cone, const std::vector<long long>& m,
                                      const std::vector<FiberSeries>& extra = {}) const;

    // sum of all fixed-component terms (zero coefficients dropped)
    ThetaLaurent summed_series(const std::vector<long long>& m,
                               const MultiplierBuilder& builder = nullptr) const;

    // The push-forward of the product of ray classes with the given
    // exponents: asserts that every negative power of t cancels exactly,
    // extracts the constant term, and checks its homogeneity.
    ThetaPoly pushforward_class(const std::vector<long long>& m) const;

    // same with extra per-component factors of the given homogeneous degree
    ThetaPoly pushforward_with_multipliers(const std::vector<long long>& m, const MultiplierBuilder& builder,
                                           long long multiplier_degree) const;

    // Closed-form push-forward for exponents in normalized position with
    // respect to the last ray: a has length r, positive entries, the first
    // r-1 summing to the last. No Laurent machinery is involved.
    ThetaPoly explicit_pushforward(const std::vector<long long>& a) const;
    std::vector<long long> explicit_exponents(const std::vector<long long>& a) const;

    // equivariant lift of a single ray class restricted to one component
    FiberSeries ray_class_factor(int cone, int ray) const;

    // lift of class(l+nu) - sum_f A[f][nu] class(f); pushes forward to zero
    FiberSeries linear_relation_factor(int cone, int nu) const;

    // Euler class of the bundle attached to a primitive collection,
    // restricted to one component; pushes forward to zero against any
    // cofactor. Homogeneous of degree sum of the ranks over the collection.
    FiberSeries euler_relation_factor(int cone, const std::vector<int>& pi) const;

    // true iff J spans no cone and m saturates the window bound on J;
    // then the push-forward of m vanishes identically
    VanishingCertificate vanishing_predicate(const std::vector<int>& J, const std::vector<long long>& m) const;

  private:
    struct Component {
        FiberFrame frame;
        std::vector<std::vector<long long>> restriction;  // per cone member, over surviving
        std::vector<long long> pairing;                   // per cone member
    };

    Fan fan_;
    DegreeData dd_;
    std::vector<std::vector<long long>> rel_;
    Direction dir_;
    std::vector<Component> comps_;

    void init_components();
    ThetaPoly push_with_theta(int cone, const FiberPoly& poly) const;
    void check_exponent_vector(const std::vector<long long>& m) const;
};

// Expansion of one weighted factor (c t + L)^p exp(theta / (c t + L))
// over the truncated ring of a fixed component. L is the linear
// combination of surviving classes with the given coefficients, theta is
// attached to the ray theta_ray. All series terminate through nilpotency
// and the frame caps. Throws on c = 0.
FiberSeries expand_weighted_factor(const FiberFrame& frame, long long p, long long c,
                                   const std::vector<long long>& combo, int theta_ray);

}  // namespace torcur

#endif
