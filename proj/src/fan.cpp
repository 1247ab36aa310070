#include "torcur/fan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>

#include "torcur/linalg.hpp"

namespace torcur {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("fan", msg); }

std::string cone_str(const std::vector<int>& cone_0based) {
    std::string s = "{";
    for (size_t i = 0; i < cone_0based.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(cone_0based[i] + 1);
    }
    return s + "}";
}

long long checked_ll(const Int& v) {
    if (!v.fits_slong()) fail("integer overflow in fan data: " + v.str());
    return v.to_long();
}

IntMat ray_columns(const std::vector<std::vector<long long>>& rays, const std::vector<int>& ids) {
    const size_t n = rays[ids[0]].size();
    IntMat m(n, std::vector<Int>(ids.size(), Int(0)));
    for (size_t j = 0; j < ids.size(); ++j)
        for (size_t i = 0; i < n; ++i) m[i][j] = Int(rays[ids[j]][i]);
    return m;
}

void validate_combinatorics(const std::vector<std::vector<long long>>& rays,
                            const std::vector<std::vector<int>>& cones, int distinguished) {
    const int r = static_cast<int>(rays.size());
    const int n = static_cast<int>(rays[0].size());

    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rays[i].size()) != n) fail("ray " + std::to_string(i + 1) + " has wrong dimension");
        long long g = 0;
        for (long long c : rays[i]) g = std::gcd(g, c < 0 ? -c : c);
        if (g != 1) fail("ray " + std::to_string(i + 1) + " is not primitive (gcd " + std::to_string(g) + ")");
        for (int j = 0; j < i; ++j)
            if (rays[i] == rays[j])
                fail("rays " + std::to_string(j + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
    if (r <= n) fail("need more rays than the lattice rank for a complete fan (r=" + std::to_string(r) +
                     ", n=" + std::to_string(n) + ")");

    if (cones.empty()) fail("no maximal cones given");
    std::set<std::vector<int>> seen;
    for (const auto& cone : cones) {
        if (static_cast<int>(cone.size()) != n)
            fail("maximal cone " + cone_str(cone) + " does not have " + std::to_string(n) + " rays");
        std::set<int> members(cone.begin(), cone.end());
        if (static_cast<int>(members.size()) != n) fail("maximal cone " + cone_str(cone) + " repeats a ray");
        for (int id : cone)
            if (id < 0 || id >= r) fail("maximal cone " + cone_str(cone) + " references a ray out of range");
        if (!seen.insert(cone).second) fail("maximal cone " + cone_str(cone) + " is listed twice");
    }
    if (distinguished < 0 || distinguished >= static_cast<int>(cones.size()))
        fail("distinguished index " + std::to_string(distinguished + 1) + " is out of range");

    for (const auto& cone : cones) {
        Int d = det(ray_columns(rays, cone));
        if (!(d == Int(1) || d == Int(-1)))
            fail("maximal cone " + cone_str(cone) + " is not unimodular (det " + d.str() + ")");
    }

    std::vector<bool> covered(r, false);
    for (const auto& cone : cones)
        for (int id : cone) covered[id] = true;
    for (int i = 0; i < r; ++i)
        if (!covered[i]) fail("ray " + std::to_string(i + 1) + " belongs to no maximal cone");

    // facet pairing: every facet of a maximal cone must lie in exactly two
    // maximal cones (completeness proxy)
    std::set<std::vector<int>> facets;
    for (const auto& cone : cones) {
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> f;
            for (int k = 0; k < n; ++k)
                if (k != drop) f.push_back(cone[k]);
            facets.insert(f);
        }
    }
    for (const auto& f : facets) {
        int count = 0;
        for (const auto& cone : cones)
            if (std::includes(cone.begin(), cone.end(), f.begin(), f.end())) ++count;
        if (count != 2)
            fail("facet " + cone_str(f) + " lies in " + std::to_string(count) + " maximal cones, expected 2");
    }

    // connectivity of the facet-adjacency graph
    const int nc = static_cast<int>(cones.size());
    std::vector<bool> reached(nc, false);
    std::vector<int> stack{0};
    reached[0] = true;
    while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        for (int o = 0; o < nc; ++o) {
            if (reached[o]) continue;
            std::vector<int> common;
            std::set_intersection(cones[c].begin(), cones[c].end(), cones[o].begin(), cones[o].end(),
                                  std::back_inserter(common));
            if (static_cast<int>(common.size()) == n - 1) {
                reached[o] = true;
                stack.push_back(o);
            }
        }
    }
    for (int c = 0; c < nc; ++c)
        if (!reached[c]) fail("maximal cone " + cone_str(cones[c]) + " is disconnected from the rest of the fan");
}

}  // namespace

bool Fan::spans_cone(const std::vector<int>& subset) const {
    for (const auto& cone : max_cones)
        if (std::includes(cone.begin(), cone.end(), subset.begin(), subset.end())) return true;
    return false;
}

std::vector<long long> Fan::to_distinguished_coords(const std::vector<long long>& v) const {
    std::vector<long long> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += dist_basis_inv[i][j] * v[j];
    return out;
}

std::vector<int> Fan::surviving_rays(int cone) const {
    std::vector<int> out;
    const auto& sigma = max_cones[cone];
    for (int i = 0; i < r; ++i)
        if (!std::binary_search(sigma.begin(), sigma.end(), i)) out.push_back(i);
    return out;
}

Fan make_fan(const std::vector<std::vector<long long>>& rays_in,
             const std::vector<std::vector<int>>& max_cones_1based, int distinguished_1based) {
    if (rays_in.empty()) fail("no rays given");
    std::vector<std::vector<int>> cones;
    cones.reserve(max_cones_1based.size());
    for (const auto& cone : max_cones_1based) {
        std::vector<int> c;
        for (int id : cone) c.push_back(id - 1);
        std::sort(c.begin(), c.end());
        cones.push_back(std::move(c));
    }
    const int distinguished = distinguished_1based - 1;
    validate_combinatorics(rays_in, cones, distinguished);

    const int r = static_cast<int>(rays_in.size());
    const int n = static_cast<int>(rays_in[0].size());

    // reindex: rays of the distinguished cone go last, input order preserved
    // within both groups
    std::vector<bool> in_dist(r, false);
    for (int id : cones[distinguished]) in_dist[id] = true;
    std::vector<int> old_to_new(r, -1);
    int next = 0;
    for (int i = 0; i < r; ++i)
        if (!in_dist[i]) old_to_new[i] = next++;
    for (int i = 0; i < r; ++i)
        if (in_dist[i]) old_to_new[i] = next++;

    Fan fan;
    fan.n = n;
    fan.r = r;
    fan.l = r - n;
    fan.old_to_new = old_to_new;
    fan.rays.assign(r, {});
    for (int i = 0; i < r; ++i) fan.rays[old_to_new[i]] = rays_in[i];
    for (auto& cone : cones) {
        for (int& id : cone) id = old_to_new[id];
        std::sort(cone.begin(), cone.end());
    }
    fan.max_cones = std::move(cones);
    fan.distinguished = distinguished;

    std::vector<int> dist_ids(n);
    std::iota(dist_ids.begin(), dist_ids.end(), fan.l);
    IntMat inv = inverse_unimodular(ray_columns(fan.rays, dist_ids));
    fan.dist_basis_inv.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) fan.dist_basis_inv[i][j] = checked_ll(inv[i][j]);
    return fan;
}

Fan parse_and_validate(const nlohmann::json& doc) {
    if (!doc.is_object()) fail("input document is not an object");
    for (const char* key : {"rays", "max_cones", "distinguished"})
        if (!doc.contains(key)) fail(std::string("missing key \"") + key + "\"");

    const auto& jrays = doc.at("rays");
    if (!jrays.is_array() || jrays.empty()) fail("\"rays\" must be a non-empty array");
    std::vector<std::vector<long long>> rays;
    for (const auto& jr : jrays) {
        if (!jr.is_array() || jr.empty()) fail("each ray must be a non-empty array of integers");
        std::vector<long long> v;
        for (const auto& c : jr) {
            if (!c.is_number_integer()) fail("ray coordinates must be integers");
            v.push_back(c.get<long long>());
        }
        rays.push_back(std::move(v));
    }
    for (const auto& v : rays)
        if (v.size() != rays[0].size()) fail("rays have inconsistent dimensions");

    const auto& jcones = doc.at("max_cones");
    if (!jcones.is_array() || jcones.empty()) fail("\"max_cones\" must be a non-empty array");
    std::vector<std::vector<int>> cones;
    for (const auto& jc : jcones) {
        if (!jc.is_array()) fail("each maximal cone must be an array of 1-based ray indices");
        std::vector<int> c;
        for (const auto& id : jc) {
            if (!id.is_number_integer()) fail("cone entries must be integers");
            c.push_back(id.get<int>());
        }
        cones.push_back(std::move(c));
    }

    const auto& jdist = doc.at("distinguished");
    if (!jdist.is_number_integer()) fail("\"distinguished\" must be an integer index");

    return make_fan(rays, cones, jdist.get<int>());
}

std::vector<std::vector<long long>> relation_matrix(const Fan& fan) {
    std::vector<std::vector<long long>> a(fan.l, std::vector<long long>(fan.n, 0));
    for (int f = 0; f < fan.l; ++f) {
        std::vector<long long> coords = fan.to_distinguished_coords(fan.rays[f]);
        for (int j = 0; j < fan.n; ++j) a[f][j] = -coords[j];
    }
    // re-verify the defining identity exactly
    for (int f = 0; f < fan.l; ++f) {
        for (int i = 0; i < fan.n; ++i) {
            long long s = fan.rays[f][i];
            for (int j = 0; j < fan.n; ++j) s += a[f][j] * fan.rays[fan.l + j][i];
            if (s != 0) fail("relation identity failed for free ray " + std::to_string(f + 1));
        }
    }
    return a;
}

std::vector<std::vector<int>> primitive_collections(const Fan& fan) {
    if (fan.r > 24) fail("too many rays for exhaustive primitive-collection enumeration");
    const int r = fan.r;
    std::vector<uint32_t> cone_masks;
    for (const auto& cone : fan.max_cones) {
        uint32_t m = 0;
        for (int id : cone) m |= (1u << id);
        cone_masks.push_back(m);
    }
    auto is_face = [&](uint32_t s) {
        for (uint32_t cm : cone_masks)
            if ((s & cm) == s) return true;
        return false;
    };
    std::vector<std::vector<int>> out;
    for (uint32_t s = 1; s < (1u << r); ++s) {
        if (std::popcount(s) < 2 || is_face(s)) continue;
        bool minimal = true;
        for (int i = 0; i < r && minimal; ++i)
            if ((s >> i) & 1u)
                if (!is_face(s & ~(1u << i))) minimal = false;
        if (!minimal) continue;
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if ((s >> i) & 1u) subset.push_back(i);
        out.push_back(std::move(subset));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<long long>> dual_basis(const Fan& fan, int cone) {
    if (cone < 0 || cone >= fan.cone_count()) fail("cone index out of range");
    const auto& sigma = fan.max_cones[cone];
    // cone rays in distinguished-basis coordinates, as columns
    IntMat b(fan.n, std::vector<Int>(fan.n, Int(0)));
    for (int j = 0; j < fan.n; ++j) {
        std::vector<long long> coords = fan.to_distinguished_coords(fan.rays[sigma[j]]);
        for (int i = 0; i < fan.n; ++i) b[i][j] = Int(coords[i]);
    }
    IntMat u = inverse_unimodular(b);  // rows are the dual vectors
    std::vector<std::vector<long long>> out(fan.n, std::vector<long long>(fan.n, 0));
    for (int i = 0; i < fan.n; ++i)
        for (int j = 0; j < fan.n; ++j) out[i][j] = checked_ll(u[i][j]);
    return out;
}

std::vector<std::vector<long long>> restriction_coeffs(const Fan& fan, int cone) {
    const auto duals = dual_basis(fan, cone);
    const auto surviving = fan.surviving_rays(cone);
    std::vector<std::vector<long long>> rows(fan.n, std::vector<long long>(surviving.size(), 0));
    for (size_t j = 0; j < surviving.size(); ++j) {
        std::vector<long long> coords = fan.to_distinguished_coords(fan.rays[surviving[j]]);
        for (int i = 0; i < fan.n; ++i) {
            long long pairing = 0;
            for (int k = 0; k < fan.n; ++k) pairing += duals[i][k] * coords[k];
            rows[i][j] = -pairing;
        }
    }
    return rows;
}

}  // namespace torcur
