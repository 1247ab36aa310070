#include "torcur/exterior.hpp"

#include <bit>

namespace torcur {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("jacobian", msg); }

// sign of sorting the concatenation of two disjoint sorted bit sets
int merge_sign(uint64_t a, uint64_t b) {
    int swaps = 0;
    while (b) {
        const int bit = std::countr_zero(b);
        swaps += std::popcount(a >> (bit + 1));
        b &= b - 1;
    }
    return swaps % 2 ? -1 : 1;
}

}  // namespace

ExteriorElement::ExteriorElement(int g, int l) : g_(g), l_(l) {
    if (2LL * g * l > 62) fail("exterior algebra too large (2*g*l > 62)");
}

ExteriorElement ExteriorElement::constant(int g, int l, const Rat& c) {
    ExteriorElement e(g, l);
    e.add_term(0, c);
    return e;
}

ExteriorElement ExteriorElement::generator(int g, int l, int bit) {
    ExteriorElement e(g, l);
    if (bit < 0 || bit >= 2 * g * l) fail("generator index out of range");
    e.add_term(uint64_t(1) << bit, Rat(1));
    return e;
}

ExteriorElement ExteriorElement::theta(int g, int l, int factor) {
    ExteriorElement e(g, l);
    if (factor < 0 || factor >= l) fail("Jacobian factor out of range");
    for (int i = 0; i < g; ++i) {
        const int alpha = factor * 2 * g + 2 * i;
        e.add_term((uint64_t(1) << alpha) | (uint64_t(1) << (alpha + 1)), Rat(1));
    }
    return e;
}

void ExteriorElement::add_term(uint64_t mask, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
    if (o.is_zero()) return *this;
    if (g_ != o.g_ || l_ != o.l_) fail("parameter mismatch in exterior addition");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExteriorElement operator*(const ExteriorElement& a, const ExteriorElement& b) {
    if (a.g_ != b.g_ || a.l_ != b.l_) fail("parameter mismatch in wedge product");
    ExteriorElement out(a.g_, a.l_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb) continue;
            const Rat c = ca * cb;
            out.add_term(ma | mb, merge_sign(ma, mb) == 1 ? c : -c);
        }
    }
    return out;
}

ExteriorElement ExteriorElement::scaled(const Rat& c) const {
    ExteriorElement out(g_, l_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
    return out;
}

Rat ExteriorElement::integral() const {
    const int bits = 2 * g_ * l_;
    const uint64_t top = bits == 0 ? 0 : ((uint64_t(1) << bits) - 1);
    auto it = terms_.find(top);
    return it == terms_.end() ? Rat(0) : it->second;
}

JacobianEmbedding::JacobianEmbedding(const std::vector<std::vector<long long>>& rel, int n, int g)
    : rel_(rel), l_(static_cast<int>(rel.size())), n_(n), g_(g) {
    for (const auto& row : rel_)
        if (static_cast<int>(row.size()) != n_) fail("relation matrix has inconsistent rows");
}

ExteriorElement JacobianEmbedding::theta_image(int ray) const {
    if (ray < 0 || ray >= l_ + n_) fail("theta index out of range");
    if (ray < l_) return ExteriorElement::theta(g_, l_, ray);
    const int nu = ray - l_;
    ExteriorElement out(g_, l_);
    for (int i = 0; i < g_; ++i) {
        ExteriorElement alpha(g_, l_), beta(g_, l_);
        for (int f = 0; f < l_; ++f) {
            if (rel_[f][nu] == 0) continue;
            const int base = f * 2 * g_ + 2 * i;
            alpha += ExteriorElement::generator(g_, l_, base).scaled(Rat(rel_[f][nu]));
            beta += ExteriorElement::generator(g_, l_, base + 1).scaled(Rat(rel_[f][nu]));
        }
        out += alpha * beta;
    }
    return out;
}

ExteriorElement JacobianEmbedding::pullback(const ThetaPoly& p) const {
    if (p.rays() != l_ + n_ || p.genus() != g_)
        fail("theta polynomial does not match the embedding parameters");
    ExteriorElement out(g_, l_);
    for (const auto& [exps, coeff] : p.terms()) {
        ExteriorElement term = ExteriorElement::constant(g_, l_, coeff);
        for (int ray = 0; ray < l_ + n_ && !term.is_zero(); ++ray) {
            if (exps[ray] == 0) continue;
            const ExteriorElement image = theta_image(ray);
            for (int k = 0; k < exps[ray] && !term.is_zero(); ++k) term = term * image;
        }
        out += term;
    }
    return out;
}

}  // namespace torcur
