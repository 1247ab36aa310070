#ifndef TORCUR_PROBLEM_HPP
#define TORCUR_PROBLEM_HPP

// One input document describes one problem instance: the fan, the genus
// and free degrees, and optionally the exponent vector and a ray subset
// for the vanishing test. Field names are part of the contract.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "torcur/degrees.hpp"
#include "torcur/fan.hpp"

namespace torcur {

struct ProblemDocument {
    Fan fan;
    std::optional<int> genus;
    std::optional<std::vector<long long>> degrees;    // free degrees, length l
    std::optional<std::vector<long long>> exponents;  // length r, post-reindexing order
    std::optional<std::vector<int>> ray_subset;       // "J", 0-based after parsing

    // derived data; throws if the needed fields are absent
    int require_genus() const;
    const std::vector<long long>& require_degrees() const;
    const std::vector<long long>& require_exponents() const;
    const std::vector<int>& require_ray_subset() const;
    DegreeData derive() const;
};

ProblemDocument parse_problem(const nlohmann::json& doc);
ProblemDocument parse_problem_text(const std::string& text);

}  // namespace torcur

#endif
