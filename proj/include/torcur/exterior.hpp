#ifndef TORCUR_EXTERIOR_HPP
#define TORCUR_EXTERIOR_HPP

// Exterior-algebra model of the cohomology of a power of the Jacobian:
// 2g generators per factor, encoded as bit sets with transposition-count
// signs, in the fixed global ordering a_1^1, b_1^1, ..., a_g^1, b_g^1,
// a_1^2, ... . The top monomial in this ordering integrates to +1, which
// makes the g-th power of each theta class integrate to g!.

#include <cstdint>
#include <map>
#include <vector>

#include "torcur/error.hpp"
#include "torcur/rational.hpp"
#include "torcur/theta.hpp"

namespace torcur {

class ExteriorElement {
  public:
    ExteriorElement() = default;
    ExteriorElement(int g, int l);

    static ExteriorElement constant(int g, int l, const Rat& c);
    static ExteriorElement generator(int g, int l, int bit);
    // sum_i alpha_i^f wedge beta_i^f for one Jacobian factor f < l
    static ExteriorElement theta(int g, int l, int factor);

    int genus() const { return g_; }
    int factors() const { return l_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(uint64_t mask, const Rat& c);

    ExteriorElement& operator+=(const ExteriorElement& o);
    friend ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b);  // wedge
    ExteriorElement scaled(const Rat& c) const;

    friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
        return a.g_ == b.g_ && a.l_ == b.l_ && a.terms_ == b.terms_;
    }

    // coefficient of the full generator product in the global ordering;
    // all lower-degree terms integrate to zero
    Rat integral() const;

    const std::map<uint64_t, Rat>& terms() const { return terms_; }

  private:
    int g_ = 0;
    int l_ = 0;
    std::map<uint64_t, Rat> terms_;
};

// Ring map on theta generators induced by the relation matrix: the f-th
// theta class of a free factor maps to itself, the class of the j-th
// distinguished factor maps to the bilinear cross-term expansion with the
// j-th column of the relation matrix on both sides.
class JacobianEmbedding {
  public:
    JacobianEmbedding(const std::vector<std::vector<long long>>& rel, int n, int g);

    int small_factors() const { return l_; }
    ExteriorElement theta_image(int ray) const;  // ray < l + n
    ExteriorElement pullback(const ThetaPoly& p) const;

  private:
    std::vector<std::vector<long long>> rel_;  // l rows, n columns
    int l_ = 0;
    int n_ = 0;
    int g_ = 0;
};

}  // namespace torcur

#endif
