#include "torcur/problem.hpp"

#include <algorithm>
#include <set>

namespace torcur {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("cli", msg); }

std::vector<long long> int_array(const nlohmann::json& j, const std::string& key) {
    if (!j.is_array()) fail("\"" + key + "\" must be an array of integers");
    std::vector<long long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail("\"" + key + "\" must contain only integers");
        out.push_back(v.get<long long>());
    }
    return out;
}

}  // namespace

int ProblemDocument::require_genus() const {
    if (!genus) fail("this command needs the \"genus\" key");
    return *genus;
}

const std::vector<long long>& ProblemDocument::require_degrees() const {
    if (!degrees) fail("this command needs the \"degrees\" key");
    return *degrees;
}

const std::vector<long long>& ProblemDocument::require_exponents() const {
    if (!exponents) fail("this command needs the \"exponents\" key");
    return *exponents;
}

const std::vector<int>& ProblemDocument::require_ray_subset() const {
    if (!ray_subset) fail("this command needs the \"J\" key");
    return *ray_subset;
}

DegreeData ProblemDocument::derive() const {
    return derive_degree_data(fan, relation_matrix(fan), require_genus(), require_degrees());
}

ProblemDocument parse_problem(const nlohmann::json& doc) {
    if (!doc.is_object()) fail("input document must be a JSON object");
    static const std::set<std::string> allowed{"rays", "max_cones", "distinguished",
                                               "genus", "degrees",   "exponents",
                                               "J"};
    for (const auto& [key, value] : doc.items())
        if (!allowed.count(key)) fail("unknown key \"" + key + "\"");

    ProblemDocument p;
    p.fan = parse_and_validate(doc);

    if (doc.contains("genus")) {
        if (!doc["genus"].is_number_integer()) fail("\"genus\" must be an integer");
        const long long g = doc["genus"].get<long long>();
        if (g < 0) fail("\"genus\" must be nonnegative");
        p.genus = static_cast<int>(g);
    }
    if (doc.contains("degrees")) {
        auto d = int_array(doc["degrees"], "degrees");
        if (static_cast<int>(d.size()) != p.fan.l)
            fail("\"degrees\" must list exactly the " + std::to_string(p.fan.l) +
                 " free degrees; the remaining ones are determined by the relations");
        p.degrees = std::move(d);
    }
    if (doc.contains("exponents")) {
        auto e = int_array(doc["exponents"], "exponents");
        if (static_cast<int>(e.size()) != p.fan.r)
            fail("\"exponents\" must have one entry per ray (" + std::to_string(p.fan.r) + ")");
        for (long long v : e)
            if (v < 0) fail("\"exponents\" must be nonnegative");
        // input order -> canonical order
        std::vector<long long> reordered(p.fan.r, 0);
        for (int i = 0; i < p.fan.r; ++i) reordered[p.fan.old_to_new[i]] = e[i];
        p.exponents = std::move(reordered);
    }
    if (doc.contains("J")) {
        auto raw = int_array(doc["J"], "J");
        std::vector<int> subset;
        std::set<int> seen;
        for (long long v : raw) {
            if (v < 1 || v > p.fan.r) fail("\"J\" entries must be 1-based ray indices");
            const int mapped = p.fan.old_to_new[static_cast<int>(v) - 1];
            if (!seen.insert(mapped).second) fail("\"J\" repeats a ray");
            subset.push_back(mapped);
        }
        std::sort(subset.begin(), subset.end());
        p.ray_subset = std::move(subset);
    }
    return p;
}

ProblemDocument parse_problem_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(doc);
}

}  // namespace torcur
