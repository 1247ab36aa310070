#include "torcur/theta.hpp"

#include <algorithm>

namespace torcur {

ThetaPoly ThetaPoly::constant(int r, int g, const Rat& c) {
    ThetaPoly p(r, g);
    p.add_term(std::vector<int>(r, 0), c);
    return p;
}

ThetaPoly ThetaPoly::generator(int r, int g, int ray, int power) {
    ThetaPoly p(r, g);
    std::vector<int> e(r, 0);
    e[ray] = power;
    p.add_term(e, Rat(1));
    return p;
}

void ThetaPoly::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(exps.size()) != r_) throw Error("theta", "exponent vector has wrong length");
    for (int e : exps) {
        if (e < 0) throw Error("theta", "negative theta exponent");
        if (e > g_) return;  // nilpotent truncation
    }
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ThetaPoly& ThetaPoly::operator+=(const ThetaPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && terms_.empty() && r_ == 0 && g_ == 0) {
        *this = o;  // adopt parameters of the first nonzero summand
        return *this;
    }
    if (r_ != o.r_ || g_ != o.g_) throw Error("theta", "parameter mismatch in addition");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ThetaPoly& ThetaPoly::operator-=(const ThetaPoly& o) {
    *this += o.scaled(Rat(-1));
    return *this;
}

ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b) {
    if (a.r_ != b.r_ || a.g_ != b.g_) throw Error("theta", "parameter mismatch in multiplication");
    ThetaPoly out(a.r_, a.g_);
    std::vector<int> e(a.r_, 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            bool dead = false;
            for (int i = 0; i < a.r_; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > a.g_) {
                    dead = true;
                    break;
                }
            }
            if (!dead) out.add_term(e, ca * cb);
        }
    }
    return out;
}

ThetaPoly ThetaPoly::scaled(const Rat& c) const {
    ThetaPoly out(r_, g_);
    if (c.is_zero()) return out;
    for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
    return out;
}

long long ThetaPoly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    long long deg = -1;
    for (const auto& [e, c] : terms_) {
        long long d = 0;
        for (int x : e) d += x;
        if (deg == -1)
            deg = d;
        else if (deg != d)
            return -2;
    }
    return deg;
}

nlohmann::ordered_json ThetaPoly::to_json() const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json rec;
        rec["exponents"] = e;
        rec["coeff"] = c.str();
        arr.push_back(rec);
    }
    return arr;
}

std::string ThetaPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        for (int i = 0; i < r_; ++i) {
            if (e[i] == 0) continue;
            s += "*th" + std::to_string(i + 1);
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

ThetaPoly segre_pushforward(const RayMonomial& mono, const Fan& fan, const DegreeData& dd) {
    if (mono.rays.size() != mono.exponents.size())
        throw Error("theta", "ray monomial arrays have mismatched lengths");
    ThetaPoly out(fan.r, dd.g);
    std::vector<int> e(fan.r, 0);
    Rat coeff(1);
    long long in_degree = 0, fibre_dim = 0;
    for (size_t i = 0; i < mono.rays.size(); ++i) {
        const int ray = mono.rays[i];
        const long long k = mono.exponents[i];
        const long long n_rank = dd.N[ray];
        in_degree += k;
        fibre_dim += n_rank - 1;
        if (k < n_rank - 1 || k > n_rank + dd.g - 1) return out;  // outside the window
        const long long shift = k - n_rank + 1;
        e[ray] = static_cast<int>(shift);
        coeff = coeff * Rat(Int(1), factorial(static_cast<unsigned long>(shift)));
    }
    out.add_term(e, coeff);
    // degree bookkeeping: the push-forward drops exactly the fibre dimension
    long long out_degree = out.homogeneous_degree();
    if (out_degree >= 0 && out_degree != in_degree - fibre_dim)
        throw Error("theta", "push-forward degree bookkeeping failed");
    return out;
}

}  // namespace torcur
