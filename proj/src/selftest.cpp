#include "torcur/selftest.hpp"

#include <functional>
#include <optional>

#include "torcur/builtins.hpp"
#include "torcur/integrate.hpp"
#include "torcur/rng.hpp"

namespace torcur {

namespace {

struct Instance {
    std::string name;
    Fan fan;
    int genus;
    std::vector<long long> free_degrees;
};

std::vector<Instance> instances() {
    std::vector<Instance> out;
    for (int g : {0, 1, 2}) {
        out.push_back({"line g=" + std::to_string(g), fan_line(), g, {2 * g + 2}});
        out.push_back({"product g=" + std::to_string(g), fan_product_lines(), g, {2 * g + 2, 2 * g + 3}});
        out.push_back(
            {"blowup g=" + std::to_string(g), fan_blowup_plane(), g, {2 * g + 2, 4 * g + 6}});
    }
    return out;
}

// surfaces at genus two make the full Laurent machinery noticeably heavier;
// the engine checks keep genus two on the line fan only
std::vector<Instance> engine_instances() {
    std::vector<Instance> out;
    for (const auto& inst : instances())
        if (inst.fan.n == 1 || inst.genus <= 1) out.push_back(inst);
    return out;
}

LocalizationEngine make_engine(const Instance& inst) {
    DegreeData dd = derive_degree_data(inst.fan, relation_matrix(inst.fan), inst.genus, inst.free_degrees);
    return LocalizationEngine(inst.fan, dd);
}

using Body = std::function<std::optional<std::string>()>;

void run(std::vector<CheckResult>& out, const std::string& name, const Body& body) {
    CheckResult res;
    res.name = name;
    try {
        auto detail = body();
        res.ok = !detail.has_value();
        if (detail) res.detail = *detail;
    } catch (const std::exception& e) {
        res.ok = false;
        res.detail = e.what();
    }
    out.push_back(res);
}

std::string show(const std::vector<long long>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// ---- fan checks -----------------------------------------------------------

std::optional<std::string> check_restriction_relations() {
    for (const auto& inst : instances()) {
        const Fan& fan = inst.fan;
        for (int c = 0; c < fan.cone_count(); ++c) {
            const auto rows = restriction_coeffs(fan, c);
            const auto& sigma = fan.max_cones[c];
            const auto surviving = fan.surviving_rays(c);
            // substitute the restriction into sum_rho <m, ray_rho> class_rho
            // for every standard dual vector m
            for (int j = 0; j < fan.n; ++j) {
                for (size_t s = 0; s < surviving.size(); ++s) {
                    long long coeff = fan.to_distinguished_coords(fan.rays[surviving[s]])[j];
                    for (int i = 0; i < fan.n; ++i)
                        coeff += fan.to_distinguished_coords(fan.rays[sigma[i]])[j] * rows[i][s];
                    if (coeff != 0)
                        return inst.name + ": nonzero residue in cone " + std::to_string(c + 1);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_reparse_stability() {
    for (const auto& inst : instances()) {
        std::vector<std::vector<int>> cones_1based;
        for (const auto& cone : inst.fan.max_cones) {
            std::vector<int> c;
            for (int id : cone) c.push_back(id + 1);
            cones_1based.push_back(c);
        }
        Fan again = make_fan(inst.fan.rays, cones_1based, inst.fan.distinguished + 1);
        if (relation_matrix(again) != relation_matrix(inst.fan))
            return inst.name + ": relation matrix changed on reparse";
    }
    return std::nullopt;
}

std::optional<std::string> check_primitive_collections() {
    for (const auto& inst : instances()) {
        const Fan& fan = inst.fan;
        for (const auto& pc : primitive_collections(fan)) {
            if (fan.spans_cone(pc)) return inst.name + ": collection spans a cone";
            for (size_t drop = 0; drop < pc.size(); ++drop) {
                std::vector<int> sub;
                for (size_t i = 0; i < pc.size(); ++i)
                    if (i != drop) sub.push_back(pc[i]);
                if (!fan.spans_cone(sub)) return inst.name + ": collection is not minimal";
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_dual_bases() {
    for (const auto& inst : instances()) {
        const Fan& fan = inst.fan;
        for (int c = 0; c < fan.cone_count(); ++c) {
            const auto duals = dual_basis(fan, c);
            const auto& sigma = fan.max_cones[c];
            for (int i = 0; i < fan.n; ++i) {
                for (int j = 0; j < fan.n; ++j) {
                    const auto coords = fan.to_distinguished_coords(fan.rays[sigma[j]]);
                    long long pairing = 0;
                    for (int k = 0; k < fan.n; ++k) pairing += duals[i][k] * coords[k];
                    if (pairing != (i == j ? 1 : 0))
                        return inst.name + ": dual basis fails in cone " + std::to_string(c + 1);
                }
            }
        }
    }
    return std::nullopt;
}

// ---- degree checks --------------------------------------------------------

std::optional<std::string> check_dimension_formulas() {
    for (const auto& inst : instances()) {
        DegreeData dd = derive_degree_data(inst.fan, relation_matrix(inst.fan), inst.genus, inst.free_degrees);
        if (dd.dim_V != dd.dim_mor) return inst.name + ": dimension formulas disagree";
        long long sum_d = 0;
        for (long long d : dd.d) sum_d += d;
        if (dd.dim_W != sum_d + inst.fan.n) return inst.name + ": total-space dimension wrong";
    }
    return std::nullopt;
}

std::optional<std::string> check_euler_char_relabel() {
    for (const auto& inst : instances()) {
        DegreeData dd = derive_degree_data(inst.fan, relation_matrix(inst.fan), inst.genus, inst.free_degrees);
        Int chi = euler_char_fibre(inst.fan, dd);
        if (!(Int(0) < chi)) return inst.name + ": Euler characteristic not positive";
        // relabel: any other maximal cone as the distinguished one; the
        // degrees transport through the divisor classes
        std::vector<std::vector<int>> cones_1based;
        for (const auto& cone : inst.fan.max_cones) {
            std::vector<int> c;
            for (int id : cone) c.push_back(id + 1);
            cones_1based.push_back(c);
        }
        for (int alt = 0; alt < inst.fan.cone_count(); ++alt) {
            Fan relabeled = make_fan(inst.fan.rays, cones_1based, alt + 1);
            // transport d: ray i of the relabeled fan is old ray perm^{-1}(i)
            std::vector<long long> d_new(relabeled.r, 0);
            for (int old = 0; old < relabeled.r; ++old)
                d_new[relabeled.old_to_new[old]] = dd.d[old];
            std::vector<long long> free_new(relabeled.l);
            for (int f = 0; f < relabeled.l; ++f) free_new[f] = d_new[f];
            DegreeData dd2 =
                derive_degree_data(relabeled, relation_matrix(relabeled), inst.genus, free_new);
            if (dd2.d != d_new) return inst.name + ": transported degrees are inconsistent";
            if (!(euler_char_fibre(relabeled, dd2) == chi))
                return inst.name + ": Euler characteristic depends on the distinguished cone";
        }
    }
    return std::nullopt;
}

// ---- theta checks ---------------------------------------------------------

std::optional<std::string> check_segre_linearity() {
    Fan fan = fan_line();
    DegreeData dd = derive_degree_data(fan, relation_matrix(fan), 2, {6});
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        RayMonomial m1{{0}, {static_cast<int>(dd.N[0] - 1 + rng.below(dd.g + 1))}};
        RayMonomial m2{{0}, {static_cast<int>(dd.N[0] - 1 + rng.below(dd.g + 1))}};
        Rat c1(rng.below(7) - 3), c2(rng.below(7) - 3);
        ThetaPoly combined = segre_pushforward(m1, fan, dd).scaled(c1);
        combined += segre_pushforward(m2, fan, dd).scaled(c2);
        ThetaPoly separate = segre_pushforward(m1, fan, dd).scaled(c1);
        ThetaPoly other = segre_pushforward(m2, fan, dd).scaled(c2);
        separate += other;
        if (!(combined == separate)) return std::string("termwise combination mismatch");
    }
    return std::nullopt;
}

std::optional<std::string> check_chern_segre_duality() {
    for (int g : {1, 2, 3, 4}) {
        Fan fan = fan_line();
        DegreeData dd = derive_degree_data(fan, relation_matrix(fan), g, {2 * g + 2});
        ThetaPoly segre_total(fan.r, g);
        for (int j = 0; j <= g; ++j) {
            RayMonomial mono{{0}, {static_cast<int>(dd.N[0] - 1 + j)}};
            segre_total += segre_pushforward(mono, fan, dd);
        }
        ThetaPoly chern_total(fan.r, g);
        for (int i = 0; i <= g; ++i) {
            Rat c = Rat(i % 2 ? -1 : 1, 1) * Rat(Int(1), factorial(i));
            chern_total += ThetaPoly::generator(fan.r, g, 0, i).scaled(c);
        }
        if (!(chern_total * segre_total == ThetaPoly::constant(fan.r, g, Rat(1))))
            return "duality fails at g=" + std::to_string(g);
    }
    return std::nullopt;
}

// ---- engine checks --------------------------------------------------------

std::vector<std::vector<long long>> sample_exponents(const Fan& fan, const DegreeData& dd, Rng& rng,
                                                     int count) {
    std::vector<std::vector<long long>> out;
    for (int i = 0; i < count; ++i) {
        long long total = dd.dim_V - 2 + rng.below(3);  // top degree and neighbours
        if (total < 0) total = 0;
        out.push_back(rng.composition(fan.r, total));
    }
    return out;
}

std::optional<std::string> check_cancellation_and_homogeneity() {
    Rng rng(23);
    for (const auto& inst : engine_instances()) {
        LocalizationEngine engine = make_engine(inst);
        const DegreeData& dd = engine.degree_data();
        for (const auto& m : sample_exponents(inst.fan, dd, rng, 4)) {
            ThetaLaurent total = engine.summed_series(m);
            long long sum_m = 0;
            for (long long e : m) sum_m += e;
            for (const auto& [t_exp, poly] : total) {
                if (poly.is_zero()) continue;
                if (t_exp < 0)
                    return inst.name + ": surviving pole at t^" + std::to_string(t_exp) + " for m=" +
                           show(m);
                if (poly.homogeneous_degree() != sum_m - dd.dim_Y - t_exp)
                    return inst.name + ": inhomogeneous coefficient at t^" + std::to_string(t_exp);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_direction_independence() {
    Rng rng(31);
    for (const auto& inst : engine_instances()) {
        LocalizationEngine engine = make_engine(inst);
        // a second valid direction, found by scanning increasing runs
        std::optional<Direction> alt;
        for (long long base = 2; base <= 40 && !alt; ++base) {
            std::vector<long long> v(inst.fan.n);
            for (int i = 0; i < inst.fan.n; ++i) v[i] = base + i;
            if (v == engine.direction().v) continue;
            try {
                alt = direction_from_vector(inst.fan, v);
            } catch (const Error&) {
            }
        }
        if (!alt) return inst.name + ": no alternative direction found";
        LocalizationEngine other(inst.fan, engine.degree_data(), *alt);
        for (const auto& m : sample_exponents(inst.fan, engine.degree_data(), rng, 3)) {
            if (!(engine.pushforward_class(m) == other.pushforward_class(m)))
                return inst.name + ": direction changes the answer for m=" + show(m);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_linear_relations_annihilate() {
    Rng rng(41);
    for (const auto& inst : engine_instances()) {
        LocalizationEngine engine = make_engine(inst);
        const Fan& fan = inst.fan;
        const DegreeData& dd = engine.degree_data();
        for (int nu = 0; nu < fan.n; ++nu) {
            for (int trial = 0; trial < 10; ++trial) {
                long long total = std::max<long long>(0, dd.dim_V - 1 - rng.below(3));
                std::vector<long long> m = rng.composition(fan.r, total);
                auto builder = [nu](const LocalizationEngine& e, int cone) {
                    return std::vector<FiberSeries>{e.linear_relation_factor(cone, nu)};
                };
                ThetaPoly out = engine.pushforward_with_multipliers(m, builder, 1);
                if (!out.is_zero())
                    return inst.name + ": linear relation " + std::to_string(nu + 1) +
                           " survives against m=" + show(m);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_euler_relations_annihilate() {
    Rng rng(43);
    for (const auto& inst : engine_instances()) {
        LocalizationEngine engine = make_engine(inst);
        const Fan& fan = inst.fan;
        const DegreeData& dd = engine.degree_data();
        for (const auto& pi : primitive_collections(fan)) {
            long long degree = 0;
            for (int ray : pi) degree += dd.N[ray];
            for (int trial = 0; trial < 10; ++trial) {
                long long total = std::max<long long>(0, dd.dim_V - degree);
                if (trial % 3 == 2) total = std::max<long long>(0, total - 1);
                std::vector<long long> m = rng.composition(fan.r, total);
                auto builder = [&pi](const LocalizationEngine& e, int cone) {
                    return std::vector<FiberSeries>{e.euler_relation_factor(cone, pi)};
                };
                ThetaPoly out = engine.pushforward_with_multipliers(m, builder, degree);
                if (!out.is_zero()) return inst.name + ": Euler relation survives against m=" + show(m);
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<long long>> admissible_normalized(const Fan& fan, const DegreeData& dd,
                                                          int limit) {
    // enumerate positive vectors a with a_1 + ... + a_{r-1} = a_r and the
    // induced last exponent positive
    std::vector<std::vector<long long>> out;
    const int head = fan.r - 1;
    std::vector<long long> a(fan.r, 1);
    std::function<void(int, long long)> rec = [&](int pos, long long sum) {
        if (static_cast<int>(out.size()) >= limit) return;
        if (pos == head) {
            a[head] = sum;
            const long long m_last =
                dd.N[head] - static_cast<long long>(fan.n - 1) * dd.g - fan.l - sum;
            if (m_last > 0) out.push_back(a);
            return;
        }
        for (long long v = 1; v <= 4; ++v) {
            a[pos] = v;
            rec(pos + 1, sum + v);
        }
    };
    rec(0, 0);
    return out;
}

std::optional<std::string> check_explicit_matches_general() {
    for (const auto& inst : engine_instances()) {
        LocalizationEngine engine = make_engine(inst);
        for (const auto& a : admissible_normalized(inst.fan, engine.degree_data(), 6)) {
            ThetaPoly closed = engine.explicit_pushforward(a);
            ThetaPoly general = engine.pushforward_class(engine.explicit_exponents(a));
            if (!(closed == general)) return inst.name + ": closed form differs for a=" + show(a);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_window_saturation() {
    for (const auto& inst : engine_instances()) {
        LocalizationEngine engine = make_engine(inst);
        const Fan& fan = inst.fan;
        const DegreeData& dd = engine.degree_data();
        for (int c = 0; c < fan.cone_count(); ++c) {
            const int ray = fan.surviving_rays(c).front();
            std::vector<long long> m(fan.r, 1);
            m[ray] = dd.N[ray] + dd.g;  // beyond the window for this component
            if (!engine.fixed_component_term(c, m).empty())
                return inst.name + ": saturated exponent fails to kill component " +
                       std::to_string(c + 1);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_vanishing_instances() {
    struct Case {
        Fan fan;
        int g;
        std::vector<long long> dfree;
        std::vector<int> J;
        std::vector<long long> m;
    };
    std::vector<Case> cases;
    cases.push_back({fan_blowup_plane(), 1, {4, 8}, {0, 2}, {5, 7, 5, 3}});
    cases.push_back({fan_blowup_plane(), 1, {4, 8}, {0, 2}, {5, 9, 5, 1}});
    cases.push_back({fan_blowup_plane(), 1, {4, 8}, {1, 3}, {3, 9, 3, 5}});
    cases.push_back({fan_product_lines(), 1, {2, 3}, {0, 2}, {3, 2, 3, 2}});
    cases.push_back({fan_product_lines(), 1, {2, 3}, {1, 3}, {1, 4, 1, 4}});
    cases.push_back({fan_product_lines(), 0, {2, 3}, {0, 2}, {4, 2, 3, 3}});
    for (const auto& tc : cases) {
        DegreeData dd = derive_degree_data(tc.fan, relation_matrix(tc.fan), tc.g, tc.dfree);
        LocalizationEngine engine(tc.fan, dd);
        auto cert = engine.vanishing_predicate(tc.J, tc.m);
        if (!cert.holds) return "predicate fails: " + cert.detail;
        long long total = 0;
        for (long long e : tc.m) total += e;
        if (total != dd.dim_V) return "test case is not top degree";
        Rat value = integrate_morphism_space(engine, tc.m).value;
        if (!value.is_zero()) return "saturated non-face integrates to " + value.str();
    }
    return std::nullopt;
}

// ---- jacobian checks ------------------------------------------------------

std::optional<std::string> check_theta_power_integrals() {
    for (int g = 0; g <= 4; ++g) {
        ExteriorElement theta = ExteriorElement::theta(g, 1, 0);
        ExteriorElement power = ExteriorElement::constant(g, 1, Rat(1));
        for (int i = 0; i < g; ++i) power = power * theta;
        if (!(power.integral() == Rat(factorial(g), Int(1))))
            return "theta^g integral wrong at g=" + std::to_string(g);
    }
    return std::nullopt;
}

ThetaPoly random_theta_poly(Rng& rng, int r, int g, int terms) {
    ThetaPoly p(r, g);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> exps(r, 0);
        for (int j = 0; j < r; ++j) exps[j] = static_cast<int>(rng.below(g + 1));
        p.add_term(exps, Rat(rng.below(9) - 4));
    }
    return p;
}

std::optional<std::string> check_pullback_ring_map() {
    Rng rng(61);
    Fan fan = fan_blowup_plane();
    auto rel = relation_matrix(fan);
    for (int g : {1, 2}) {
        JacobianEmbedding emb(rel, fan.n, g);
        for (int trial = 0; trial < 25; ++trial) {
            ThetaPoly p = random_theta_poly(rng, fan.r, g, 3);
            ThetaPoly q = random_theta_poly(rng, fan.r, g, 3);
            ExteriorElement lhs = emb.pullback(p * q);
            ExteriorElement rhs = emb.pullback(p) * emb.pullback(q);
            if (!(lhs == rhs)) return "pullback is not multiplicative at g=" + std::to_string(g);
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_pullback_nilpotency() {
    for (const auto& inst : instances()) {
        if (inst.genus == 0) continue;
        const Fan& fan = inst.fan;
        JacobianEmbedding emb(relation_matrix(fan), fan.n, inst.genus);
        for (int nu = 0; nu < fan.n; ++nu) {
            ExteriorElement image = emb.theta_image(fan.l + nu);
            ExteriorElement power = ExteriorElement::constant(inst.genus, fan.l, Rat(1));
            for (int i = 0; i <= inst.genus; ++i) power = power * image;
            if (!power.is_zero()) return inst.name + ": image of a distinguished theta is not nilpotent";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_split_invariance() {
    {
        Fan fan = fan_line();
        DegreeData dd = derive_degree_data(fan, relation_matrix(fan), 1, {2});
        LocalizationEngine engine(fan, dd);
        Rat expected = integrate_morphism_space(engine, {dd.dim_V, 0}).value;
        for (long long k = 1; k <= dd.dim_V; ++k) {
            Rat v = integrate_morphism_space(engine, {dd.dim_V - k, k}).value;
            if (!(v == expected)) return "line fan split (k=" + std::to_string(k) + ") differs";
        }
    }
    {
        Fan fan = fan_projective_space(2);
        DegreeData dd = derive_degree_data(fan, relation_matrix(fan), 1, {2});
        LocalizationEngine engine(fan, dd);
        Rat expected = integrate_morphism_space(engine, {dd.dim_V, 0, 0}).value;
        for (const auto& m : std::vector<std::vector<long long>>{
                 {4, 1, 1}, {2, 2, 2}, {0, 3, 3}, {1, 0, 5}}) {
            long long total = 0;
            for (long long e : m) total += e;
            if (total != dd.dim_V) return "bad plane split test data";
            if (!(integrate_morphism_space(engine, m).value == expected)) return "plane split differs";
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_projective_family() {
    struct Case {
        int n, g;
        long long d;
        long long expected;
    };
    for (const auto& tc : std::vector<Case>{{1, 0, 1, 1}, {1, 0, 2, 1}, {1, 1, 2, 2},
                                            {1, 2, 4, 4}, {2, 0, 1, 1}, {2, 1, 2, 3}}) {
        Fan fan = fan_projective_space(tc.n);
        DegreeData dd = derive_degree_data(fan, relation_matrix(fan), tc.g, {tc.d});
        LocalizationEngine engine(fan, dd);
        std::vector<long long> m(fan.r, 0);
        m[0] = dd.dim_V;
        Rat value = integrate_morphism_space(engine, m).value;
        if (!(value == Rat(tc.expected)))
            return "projective family (n=" + std::to_string(tc.n) + ",g=" + std::to_string(tc.g) +
                   ",d=" + std::to_string(tc.d) + ") gives " + value.str();
    }
    return std::nullopt;
}

std::optional<std::string> check_integral_off_top_degree() {
    for (int g : {1, 2}) {
        ExteriorElement theta = ExteriorElement::theta(g, 2, 0);
        if (!theta.integral().is_zero()) return "low-degree element integrates to nonzero";
    }
    return std::nullopt;
}

}  // namespace

std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out;
    run(out, "fan: restriction relations kill the global linear relations", check_restriction_relations);
    run(out, "fan: relation matrix is stable under reparsing", check_reparse_stability);
    run(out, "fan: primitive collections are minimal non-faces", check_primitive_collections);
    run(out, "fan: dual bases invert the cone ray matrices", check_dual_bases);
    run(out, "degrees: independent dimension formulas agree", check_dimension_formulas);
    run(out, "degrees: fibre Euler characteristic is positive and basis-independent",
        check_euler_char_relabel);
    run(out, "theta: push-forward acts termwise on combinations", check_segre_linearity);
    run(out, "theta: Chern/Segre duality holds to degree g", check_chern_segre_duality);
    run(out, "engine: polar parts cancel and coefficients are homogeneous",
        check_cancellation_and_homogeneity);
    run(out, "engine: the answer is direction independent", check_direction_independence);
    run(out, "engine: linear relations push forward to zero", check_linear_relations_annihilate);
    run(out, "engine: collection Euler classes push forward to zero", check_euler_relations_annihilate);
    run(out, "engine: closed form matches the general push-forward", check_explicit_matches_general);
    run(out, "engine: window saturation kills single components", check_window_saturation);
    run(out, "engine: saturated non-faces integrate to zero", check_vanishing_instances);
    run(out, "jacobian: theta powers integrate to factorials", check_theta_power_integrals);
    run(out, "jacobian: pullback is a ring map", check_pullback_ring_map);
    run(out, "jacobian: pullback preserves nilpotency", check_pullback_nilpotency);
    run(out, "jacobian: integrals are split invariant", check_split_invariance);
    run(out, "jacobian: projective family has the expected integrals", check_projective_family);
    run(out, "jacobian: integration vanishes off the top degree", check_integral_off_top_degree);
    return out;
}

}  // namespace torcur
