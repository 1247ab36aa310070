#include "torcur/localization.hpp"

#include <algorithm>

namespace torcur {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("engine", msg); }

Int int_pow(long long base, long long e) {
    Int out;
    Int b(base);
    mpz_pow_ui(out.raw(), b.raw(), static_cast<unsigned long>(e));
    return out;
}

// c^e as an exact rational, e of either sign
Rat scalar_pow(long long c, long long e) {
    if (e >= 0) return Rat(int_pow(c, e));
    return Rat(Int(1), int_pow(c, -e));
}

std::string vec_str(const std::vector<long long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

Direction direction_from_vector(const Fan& fan, const std::vector<long long>& v) {
    if (static_cast<int>(v.size()) != fan.n) fail("direction vector must have length n");
    Direction dir;
    dir.v = v;
    for (int c = 0; c < fan.cone_count(); ++c) {
        const auto duals = dual_basis(fan, c);
        std::vector<long long> row(fan.n, 0);
        for (int i = 0; i < fan.n; ++i) {
            long long s = 0;
            for (int j = 0; j < fan.n; ++j) s += duals[i][j] * v[j];
            if (s == 0)
                fail("direction " + vec_str(v) + " pairs to zero with a dual vector of cone " +
                     std::to_string(c + 1));
            row[i] = s;
        }
        dir.pairings.push_back(std::move(row));
    }
    return dir;
}

Direction choose_direction(const Fan& fan) {
    for (long long base = 1; base <= 10000; ++base) {
        std::vector<long long> v(fan.n);
        long long p = 1;
        bool overflow = false;
        for (int i = 0; i < fan.n; ++i) {
            v[i] = p;
            if (i + 1 < fan.n) {
                if (p > 4000000000000000000LL / base) {
                    overflow = true;
                    break;
                }
                p *= base;
            }
        }
        if (overflow) break;
        Direction dir;
        dir.v = v;
        bool ok = true;
        for (int c = 0; c < fan.cone_count() && ok; ++c) {
            const auto duals = dual_basis(fan, c);
            std::vector<long long> row(fan.n, 0);
            for (int i = 0; i < fan.n && ok; ++i) {
                long long s = 0;
                for (int j = 0; j < fan.n; ++j) s += duals[i][j] * v[j];
                if (s == 0) ok = false;
                row[i] = s;
            }
            // distinct pairings within the cone keep the restriction generic
            for (int i = 0; i < fan.n && ok; ++i)
                for (int j = 0; j < i; ++j)
                    if (row[i] == row[j]) ok = false;
            if (ok) dir.pairings.push_back(std::move(row));
        }
        if (ok) return dir;
    }
    fail("no valid direction found");
}

FiberSeries expand_weighted_factor(const FiberFrame& frame, long long p, long long c,
                                   const std::vector<long long>& combo, int theta_ray) {
    if (c == 0) fail("direction pairing is zero");
    const int l = static_cast<int>(frame.surviving.size());
    const int g = frame.g;
    const long long caps_total = frame.caps_total();

    // powers of the linear combination, computed on demand; once a power
    // dies under the caps all higher powers are dead too
    std::vector<FiberPoly> pow{FiberPoly::one(frame)};
    FiberPoly combo_poly = linear_combination(frame, combo);
    auto power = [&](long long e) -> const FiberPoly& {
        while (static_cast<long long>(pow.size()) <= e && !pow.back().is_zero())
            pow.push_back(FiberPoly::mul(frame, pow.back(), combo_poly));
        static const FiberPoly zero;
        return e < static_cast<long long>(pow.size()) ? pow[e] : zero;
    };

    auto theta_key = [&](const FiberMono& base, int a) {
        FiberMono key = base;
        key[l + theta_ray] += a;
        return key;
    };

    FiberSeries out;
    auto add_poly = [&](int t_exp, FiberPoly poly) {
        if (poly.is_zero()) return;
        auto it = out.find(t_exp);
        if (it == out.end())
            out.emplace(t_exp, std::move(poly));
        else
            it->second.add(poly);
    };

    if (p >= 0) {
        // polynomial part: sum_{k<=p} [ sum_{a<=k} binom(p-a,k-a) L^{k-a} th^a/a! ] (ct)^{p-k}
        for (long long k = 0; k <= p; ++k) {
            FiberPoly poly;
            for (long long a = 0; a <= std::min<long long>(k, g); ++a) {
                const FiberPoly& lp = power(k - a);
                if (lp.is_zero()) continue;
                Rat scale = Rat(binomial(p - a, k - a), factorial(static_cast<unsigned long>(a)));
                for (const auto& [key, v] : lp.terms)
                    poly.add_term(frame, theta_key(key, static_cast<int>(a)), v * scale);
            }
            add_poly(static_cast<int>(p - k), poly.scaled(scalar_pow(c, p - k)));
        }
        // polar part, prefactor th^{p+1}: dies entirely once p >= g
        if (p + 1 <= g) {
            const long long bmax_global = g - (p + 1);
            for (long long k = 0; k - bmax_global <= caps_total; ++k) {
                FiberPoly poly;
                for (long long b = 0; b <= std::min(k, bmax_global); ++b) {
                    const FiberPoly& lp = power(k - b);
                    if (lp.is_zero()) continue;
                    Rat scale = Rat((k - b) % 2 ? -binomial(k, k - b) : binomial(k, k - b),
                                    factorial(static_cast<unsigned long>(p + 1 + b)));
                    for (const auto& [key, v] : lp.terms)
                        poly.add_term(frame, theta_key(key, static_cast<int>(p + 1 + b)), v * scale);
                }
                add_poly(static_cast<int>(-(k + 1)), poly.scaled(scalar_pow(c, -(k + 1))));
            }
        }
    } else {
        // pure pole: sum_k [ sum_{b<=k} (-1)^{k-b} binom(q+k-1,k-b) L^{k-b} th^b/b! ] (ct)^{-q-k}
        const long long q = -p;
        for (long long k = 0; k - g <= caps_total; ++k) {
            FiberPoly poly;
            for (long long b = 0; b <= std::min<long long>(k, g); ++b) {
                const FiberPoly& lp = power(k - b);
                if (lp.is_zero()) continue;
                Rat scale = Rat((k - b) % 2 ? -binomial(q + k - 1, k - b) : binomial(q + k - 1, k - b),
                                factorial(static_cast<unsigned long>(b)));
                for (const auto& [key, v] : lp.terms)
                    poly.add_term(frame, theta_key(key, static_cast<int>(b)), v * scale);
            }
            add_poly(static_cast<int>(-(q + k)), poly.scaled(scalar_pow(c, -(q + k))));
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

LocalizationEngine::LocalizationEngine(const Fan& fan, const DegreeData& dd, Direction dir)
    : fan_(fan), dd_(dd), rel_(relation_matrix(fan)), dir_(std::move(dir)) {
    init_components();
}

LocalizationEngine::LocalizationEngine(const Fan& fan, const DegreeData& dd)
    : LocalizationEngine(fan, dd, choose_direction(fan)) {}

void LocalizationEngine::init_components() {
    if (static_cast<int>(dir_.pairings.size()) != fan_.cone_count())
        fail("direction pairing table does not match the fan");
    for (int c = 0; c < fan_.cone_count(); ++c) {
        Component comp;
        comp.frame.r = fan_.r;
        comp.frame.g = dd_.g;
        comp.frame.surviving = fan_.surviving_rays(c);
        for (int id : comp.frame.surviving)
            comp.frame.caps.push_back(static_cast<int>(dd_.N[id] + dd_.g - 1));
        comp.restriction = restriction_coeffs(fan_, c);
        comp.pairing = dir_.pairings[c];
        comps_.push_back(std::move(comp));
    }
}

void LocalizationEngine::check_exponent_vector(const std::vector<long long>& m) const {
    if (static_cast<int>(m.size()) != fan_.r)
        fail("exponent vector must have length " + std::to_string(fan_.r));
    for (long long e : m) {
        if (e < 0) fail("exponents must be nonnegative");
        if (e > 1000000) fail("exponent " + std::to_string(e) + " is out of the supported range");
    }
}

ThetaPoly LocalizationEngine::push_with_theta(int cone, const FiberPoly& poly) const {
    const auto& frame = comps_[cone].frame;
    const int l = static_cast<int>(frame.surviving.size());
    ThetaPoly out(fan_.r, dd_.g);
    for (const auto& [key, coeff] : poly.terms) {
        RayMonomial mono;
        mono.rays = frame.surviving;
        mono.exponents.assign(key.begin(), key.begin() + l);
        ThetaPoly pushed = segre_pushforward(mono, fan_, dd_);
        if (pushed.is_zero()) continue;
        ThetaPoly carried(fan_.r, dd_.g);
        carried.add_term(std::vector<int>(key.begin() + l, key.end()), coeff);
        out += pushed * carried;
    }
    return out;
}

ThetaLaurent LocalizationEngine::fixed_component_term(int cone, const std::vector<long long>& m,
                                                      const std::vector<FiberSeries>& extra) const {
    check_exponent_vector(m);
    const Component& comp = comps_[cone];
    const auto& frame = comp.frame;
    const auto& sigma = fan_.max_cones[cone];
    const int l = static_cast<int>(frame.surviving.size());

    FiberMono base_key(frame.key_size(), 0);
    for (int j = 0; j < l; ++j) {
        const long long e = m[frame.surviving[j]];
        if (e > frame.caps[j]) return {};  // every monomial leaves the window
        base_key[j] = static_cast<int>(e);
    }
    FiberPoly base;
    base.terms.emplace(base_key, Rat(1));
    FiberSeries series{{0, base}};

    for (int i = 0; i < fan_.n && !series.empty(); ++i) {
        const int ray = sigma[i];
        series = series_mul(frame, series,
                            expand_weighted_factor(frame, m[ray] - dd_.N[ray], comp.pairing[i],
                                                   comp.restriction[i], ray));
    }
    for (const auto& f : extra) {
        if (series.empty()) break;
        series = series_mul(frame, series, f);
    }

    if (extra.empty() && !series.empty()) {
        // coarse exponent bounds on the restricted term
        long long upper = 0, lower = 0;
        for (int i = 0; i < fan_.n; ++i) {
            const int ray = sigma[i];
            upper += std::max<long long>(0, m[ray] - dd_.N[ray]);
            lower -= std::max<long long>(0, dd_.N[ray] - m[ray]) + frame.caps_total() + dd_.g;
        }
        if (series.begin()->first < lower || series.rbegin()->first > upper)
            fail("Laurent exponent bounds violated on component " + std::to_string(cone + 1));
    }

    ThetaLaurent out;
    for (const auto& [t_exp, poly] : series) {
        ThetaPoly pushed = push_with_theta(cone, poly);
        if (!pushed.is_zero()) out.emplace(t_exp, std::move(pushed));
    }
    return out;
}

ThetaLaurent LocalizationEngine::summed_series(const std::vector<long long>& m,
                                               const MultiplierBuilder& builder) const {
    ThetaLaurent total;
    for (int c = 0; c < fan_.cone_count(); ++c) {
        std::vector<FiberSeries> extra;
        if (builder) extra = builder(*this, c);
        theta_laurent_add(total, fixed_component_term(c, m, extra));
    }
    return total;
}

ThetaPoly LocalizationEngine::pushforward_with_multipliers(const std::vector<long long>& m,
                                                           const MultiplierBuilder& builder,
                                                           long long multiplier_degree) const {
    ThetaLaurent total = summed_series(m, builder);
    for (const auto& [t_exp, poly] : total) {
        if (t_exp < 0 && !poly.is_zero())
            fail("noncancellation at t^" + std::to_string(t_exp) + ": " + poly.str());
    }
    ThetaPoly out(fan_.r, dd_.g);
    if (auto it = total.find(0); it != total.end()) out = it->second;
    if (!out.is_zero()) {
        long long sum_m = 0;
        for (long long e : m) sum_m += e;
        const long long want = sum_m + multiplier_degree - dd_.dim_Y;
        if (out.homogeneous_degree() != want)
            fail("constant term is not homogeneous of degree " + std::to_string(want) + ": " + out.str());
    }
    return out;
}

ThetaPoly LocalizationEngine::pushforward_class(const std::vector<long long>& m) const {
    return pushforward_with_multipliers(m, nullptr, 0);
}

std::vector<long long> LocalizationEngine::explicit_exponents(const std::vector<long long>& a) const {
    if (static_cast<int>(a.size()) != fan_.r)
        fail("normalized exponent data must have length " + std::to_string(fan_.r));
    long long head = 0;
    for (int i = 0; i < fan_.r; ++i) {
        if (a[i] <= 0) fail("normalized exponent data must be positive");
        if (i + 1 < fan_.r) head += a[i];
    }
    if (head != a[fan_.r - 1])
        fail("normalized exponent data must satisfy a_1 + ... + a_{r-1} = a_r");
    std::vector<long long> m(fan_.r, 0);
    for (int i = 0; i + 1 < fan_.r; ++i) m[i] = dd_.N[i] + dd_.g + a[i];
    m[fan_.r - 1] = dd_.N[fan_.r - 1] - static_cast<long long>(fan_.n - 1) * dd_.g - fan_.l - a[fan_.r - 1];
    if (m[fan_.r - 1] <= 0)
        fail("m_r not positive: the last degree is too small for the normalized exponents");
    return m;
}

ThetaPoly LocalizationEngine::explicit_pushforward(const std::vector<long long>& a) const {
    const std::vector<long long> m = explicit_exponents(a);
    const int last = fan_.r - 1;
    ThetaPoly out(fan_.r, dd_.g);
    for (int c = 0; c < fan_.cone_count(); ++c) {
        const Component& comp = comps_[c];
        const auto& frame = comp.frame;
        const auto& sigma = fan_.max_cones[c];
        if (std::binary_search(sigma.begin(), sigma.end(), last)) continue;  // negative total degree

        const int l = static_cast<int>(frame.surviving.size());
        FiberMono base_key(frame.key_size(), 0);
        bool dead = false;
        for (int j = 0; j < l; ++j) {
            const long long e = m[frame.surviving[j]];
            if (e > frame.caps[j]) {
                dead = true;
                break;
            }
            base_key[j] = static_cast<int>(e);
        }
        if (dead) continue;
        FiberPoly prod;
        prod.terms.emplace(base_key, Rat(1));

        for (int i = 0; i < fan_.n && !prod.is_zero(); ++i) {
            const int ray = sigma[i];
            const long long p = m[ray] - dd_.N[ray];  // >= g + 1 in normalized position
            FiberPoly combo = linear_combination(frame, comp.restriction[i]);
            std::vector<FiberPoly> powers{FiberPoly::one(frame)};
            auto power = [&](long long e) -> const FiberPoly& {
                while (static_cast<long long>(powers.size()) <= e && !powers.back().is_zero())
                    powers.push_back(FiberPoly::mul(frame, powers.back(), combo));
                static const FiberPoly zero;
                return e < static_cast<long long>(powers.size()) ? powers[e] : zero;
            };
            FiberPoly factor;
            for (long long b = 0; b <= std::min<long long>(p, dd_.g); ++b) {
                Rat scale(Int(1), factorial(static_cast<unsigned long>(b)));
                for (const auto& [key, v] : power(p - b).terms) {
                    FiberMono k2 = key;
                    k2[l + ray] += static_cast<int>(b);
                    factor.add_term(frame, k2, v * scale);
                }
            }
            prod = FiberPoly::mul(frame, prod, factor);
        }
        out += push_with_theta(c, prod);
    }
    return out;
}

FiberSeries LocalizationEngine::ray_class_factor(int cone, int ray) const {
    const Component& comp = comps_[cone];
    const auto& frame = comp.frame;
    const auto& sigma = fan_.max_cones[cone];
    FiberSeries out;
    auto pos = std::lower_bound(sigma.begin(), sigma.end(), ray);
    if (pos != sigma.end() && *pos == ray) {
        const int i = static_cast<int>(pos - sigma.begin());
        out.emplace(1, FiberPoly::one(frame).scaled(Rat(comp.pairing[i])));
        FiberPoly combo = linear_combination(frame, comp.restriction[i]);
        if (!combo.is_zero()) out.emplace(0, std::move(combo));
    } else {
        const auto& surv = frame.surviving;
        const int j = static_cast<int>(std::lower_bound(surv.begin(), surv.end(), ray) - surv.begin());
        FiberMono key(frame.key_size(), 0);
        key[j] = 1;
        FiberPoly p;
        p.terms.emplace(key, Rat(1));
        out.emplace(0, std::move(p));
    }
    return out;
}

FiberSeries LocalizationEngine::linear_relation_factor(int cone, int nu) const {
    if (nu < 0 || nu >= fan_.n) fail("relation index out of range");
    FiberSeries out = ray_class_factor(cone, fan_.l + nu);
    for (int f = 0; f < fan_.l; ++f)
        series_add_scaled(out, ray_class_factor(cone, f), Rat(-rel_[f][nu]));
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

FiberSeries LocalizationEngine::euler_relation_factor(int cone, const std::vector<int>& pi) const {
    const auto& frame = comps_[cone].frame;
    FiberSeries out{{0, FiberPoly::one(frame)}};
    for (int ray : pi) {
        FiberSeries eq = ray_class_factor(cone, ray);
        FiberSeries factor;
        FiberSeries eq_pow = series_pow(frame, eq, static_cast<int>(dd_.N[ray] - std::min<long long>(dd_.g, dd_.N[ray])));
        // powers eq^{N-a} for a = g..0, building upward to reuse multiplications
        for (long long a = std::min<long long>(dd_.g, dd_.N[ray]); a >= 0; --a) {
            FiberPoly theta_mono;
            FiberMono key(frame.key_size(), 0);
            key[static_cast<int>(frame.surviving.size()) + ray] = static_cast<int>(a);
            theta_mono.add_term(frame, key, Rat(a % 2 ? -1 : 1, 1) * Rat(Int(1), factorial(static_cast<unsigned long>(a))));
            FiberSeries term = series_mul(frame, eq_pow, FiberSeries{{0, theta_mono}});
            series_add_scaled(factor, term, Rat(1));
            if (a > 0) eq_pow = series_mul(frame, eq_pow, eq);
        }
        out = series_mul(frame, out, factor);
    }
    return out;
}

VanishingCertificate LocalizationEngine::vanishing_predicate(const std::vector<int>& J,
                                                             const std::vector<long long>& m) const {
    check_exponent_vector(m);
    std::vector<int> subset = J;
    std::sort(subset.begin(), subset.end());
    for (int id : subset)
        if (id < 0 || id >= fan_.r) fail("ray subset out of range");
    VanishingCertificate cert;
    cert.spans_no_cone = !fan_.spans_cone(subset);
    cert.exponents_large = true;
    std::string why;
    for (int id : subset) {
        if (m[id] < dd_.N[id] + dd_.g) {
            cert.exponents_large = false;
            why = "m_" + std::to_string(id + 1) + " = " + std::to_string(m[id]) + " < N+g = " +
                  std::to_string(dd_.N[id] + dd_.g);
            break;
        }
    }
    cert.holds = cert.spans_no_cone && cert.exponents_large;
    if (!cert.spans_no_cone)
        cert.detail = "the subset spans a cone of the fan";
    else if (!cert.exponents_large)
        cert.detail = why;
    else
        cert.detail = "subset spans no cone and all its exponents reach N+g";
    return cert;
}

}  // namespace torcur
