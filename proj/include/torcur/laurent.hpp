#ifndef TORCUR_LAURENT_HPP
#define TORCUR_LAURENT_HPP

// Working rings for the localization computation, restricted to a fixed
// component and a generic direction: polynomials in the surviving ray
// classes and all theta classes (with hard truncation caps under which
// every dropped monomial provably pushes forward to zero), and finitely
// supported Laurent series in the direction parameter t over them.

#include <map>
#include <vector>

#include "torcur/error.hpp"
#include "torcur/rational.hpp"
#include "torcur/theta.hpp"

namespace torcur {

// Shape of the truncated ring on one fixed component.
struct FiberFrame {
    int r = 0;
    int g = 0;
    std::vector<int> surviving;  // ascending ray ids
    std::vector<int> caps;       // per surviving ray: N + g - 1

    int key_size() const { return static_cast<int>(surviving.size()) + r; }
    long long caps_total() const {
        long long s = 0;
        for (int c : caps) s += c;
        return s;
    }
};

// Monomial key: exponents of the surviving ray classes followed by the
// exponents of all r theta classes.
using FiberMono = std::vector<int>;

class FiberPoly {
  public:
    std::map<FiberMono, Rat> terms;

    bool is_zero() const { return terms.empty(); }

    static FiberPoly one(const FiberFrame& frame);

    // drops the term if a surviving exponent exceeds its cap or a theta
    // exponent exceeds g (both exact: such monomials push forward to zero,
    // and exponents only grow under multiplication)
    void add_term(const FiberFrame& frame, const FiberMono& key, const Rat& c);

    void add(const FiberPoly& o);
    FiberPoly scaled(const Rat& c) const;
    static FiberPoly mul(const FiberFrame& frame, const FiberPoly& a, const FiberPoly& b);
};

// Linear combination of surviving ray classes with the given coefficients
// (aligned with frame.surviving).
FiberPoly linear_combination(const FiberFrame& frame, const std::vector<long long>& coeffs);

// Finitely supported Laurent series in t; zero coefficients are not stored.
using FiberSeries = std::map<int, FiberPoly>;

FiberSeries series_mul(const FiberFrame& frame, const FiberSeries& a, const FiberSeries& b);
void series_add_scaled(FiberSeries& acc, const FiberSeries& o, const Rat& c);
FiberSeries series_pow(const FiberFrame& frame, const FiberSeries& base, int e);

// Laurent series in t with theta-ring coefficients: the shape of a
// localization term after push-forward to the Jacobian power.
using ThetaLaurent = std::map<int, ThetaPoly>;

void theta_laurent_add(ThetaLaurent& acc, const ThetaLaurent& o);

}  // namespace torcur

#endif
