#ifndef TORCUR_THETA_HPP
#define TORCUR_THETA_HPP

// Exact arithmetic in the subring of the cohomology of a power of the
// Jacobian generated by the theta classes: one nilpotent generator per
// ray, truncated above exponent g. Also the Segre-type push-forward
// that integrates ray-class monomials over a product of projectivized
// section bundles.

#include <map>
#include <vector>

#include "json.hpp"
#include "torcur/degrees.hpp"
#include "torcur/error.hpp"
#include "torcur/rational.hpp"

namespace torcur {

class ThetaPoly {
  public:
    ThetaPoly() = default;
    ThetaPoly(int r, int g) : r_(r), g_(g) {}

    static ThetaPoly constant(int r, int g, const Rat& c);
    static ThetaPoly generator(int r, int g, int ray, int power = 1);

    int rays() const { return r_; }
    int genus() const { return g_; }
    bool is_zero() const { return terms_.empty(); }

    // adds c * prod theta_i^{exps[i]}; silently drops exponents above g
    void add_term(const std::vector<int>& exps, const Rat& c);

    ThetaPoly& operator+=(const ThetaPoly& o);
    ThetaPoly& operator-=(const ThetaPoly& o);
    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
    ThetaPoly scaled(const Rat& c) const;

    friend bool operator==(const ThetaPoly& a, const ThetaPoly& b) {
        return a.r_ == b.r_ && a.g_ == b.g_ && a.terms_ == b.terms_;
    }

    // -1 for the zero polynomial, otherwise the common total exponent
    // degree if homogeneous, -2 if mixed
    long long homogeneous_degree() const;

    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    nlohmann::ordered_json to_json() const;  // canonical order by exponent vector
    std::string str() const;                 // human-readable, for diagnostics

  private:
    int r_ = 0;
    int g_ = 0;
    std::map<std::vector<int>, Rat> terms_;
};

// A monomial in the classes of the surviving rays of some fixed
// component: parallel arrays of ray ids (ascending) and exponents.
struct RayMonomial {
    std::vector<int> rays;
    std::vector<int> exponents;
};

// Push-forward of a surviving-ray monomial along the fibration by
// products of projective spaces: each exponent k contributes
// theta^{k-N+1}/(k-N+1)! when N-1 <= k <= N+g-1, and the whole
// push-forward is zero as soon as one exponent leaves that window.
ThetaPoly segre_pushforward(const RayMonomial& mono, const Fan& fan, const DegreeData& dd);

}  // namespace torcur

#endif
