#include "torcur/laurent.hpp"

namespace torcur {

FiberPoly FiberPoly::one(const FiberFrame& frame) {
    FiberPoly p;
    p.terms.emplace(FiberMono(frame.key_size(), 0), Rat(1));
    return p;
}

void FiberPoly::add_term(const FiberFrame& frame, const FiberMono& key, const Rat& c) {
    if (c.is_zero()) return;
    const int l = static_cast<int>(frame.surviving.size());
    for (int j = 0; j < l; ++j)
        if (key[j] > frame.caps[j]) return;
    for (int i = 0; i < frame.r; ++i)
        if (key[l + i] > frame.g) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void FiberPoly::add(const FiberPoly& o) {
    for (const auto& [k, c] : o.terms) {
        auto it = terms.find(k);
        if (it == terms.end()) {
            terms.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
}

FiberPoly FiberPoly::scaled(const Rat& c) const {
    FiberPoly out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms) out.terms.emplace(k, v * c);
    return out;
}

FiberPoly FiberPoly::mul(const FiberFrame& frame, const FiberPoly& a, const FiberPoly& b) {
    FiberPoly out;
    const int sz = frame.key_size();
    FiberMono key(sz, 0);
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            for (int i = 0; i < sz; ++i) key[i] = ka[i] + kb[i];
            out.add_term(frame, key, ca * cb);
        }
    }
    return out;
}

FiberPoly linear_combination(const FiberFrame& frame, const std::vector<long long>& coeffs) {
    FiberPoly out;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j] == 0) continue;
        FiberMono key(frame.key_size(), 0);
        key[j] = 1;
        out.add_term(frame, key, Rat(coeffs[j]));
    }
    return out;
}

FiberSeries series_mul(const FiberFrame& frame, const FiberSeries& a, const FiberSeries& b) {
    FiberSeries out;
    for (const auto& [ea, pa] : a) {
        for (const auto& [eb, pb] : b) {
            FiberPoly prod = FiberPoly::mul(frame, pa, pb);
            if (prod.is_zero()) continue;
            auto it = out.find(ea + eb);
            if (it == out.end())
                out.emplace(ea + eb, std::move(prod));
            else
                it->second.add(prod);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

void series_add_scaled(FiberSeries& acc, const FiberSeries& o, const Rat& c) {
    if (c.is_zero()) return;
    for (const auto& [e, p] : o) {
        auto it = acc.find(e);
        if (it == acc.end()) {
            acc.emplace(e, p.scaled(c));
        } else {
            it->second.add(p.scaled(c));
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

FiberSeries series_pow(const FiberFrame& frame, const FiberSeries& base, int e) {
    FiberSeries out{{0, FiberPoly::one(frame)}};
    for (int i = 0; i < e; ++i) out = series_mul(frame, out, base);
    return out;
}

void theta_laurent_add(ThetaLaurent& acc, const ThetaLaurent& o) {
    for (const auto& [e, p] : o) {
        auto it = acc.find(e);
        if (it == acc.end()) {
            acc.emplace(e, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

}  // namespace torcur
