#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "choquet/classical.hpp"
#include "choquet/comonotone.hpp"
#include "choquet/family.hpp"
#include "choquet/quantum.hpp"

namespace choquet::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

/// Self-contained problem description. Complex numbers are [re, im] pairs;
/// indices in files are 1-based. Capacity values map decimal bitmask keys
/// (bit i-1 holds element i) to mu(A); omitted subsets default to 0.
struct Problem {
    int dimension = 0;
    std::vector<Vector> vectors;
    std::optional<std::vector<double>> probabilities;
    std::optional<Matrix> rho;
    std::optional<classical::Capacity> capacity;
    std::optional<std::uint64_t> seed;

    ReferenceSet reference_set(const Tolerances& tol = {}) const;

    /// Probabilities, measured from rho when given explicitly.
    quantum::ProbabilityVector probability_vector(const ReferenceSet& set) const;
};

Problem parse_problem(const json& j);
Problem parse_problem_file(const std::string& path);

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

json serialize_validation(const Problem& problem, const ValidationReport& report);
json serialize_report(const Problem& problem, const quantum::ChoquetReport& report);
json serialize_family(const Problem& problem, const family::AffineFamily& fam,
                      const family::PsdSampleReport& psd,
                      const family::ComparisonReport& cmp);

/// Four-decimal fixed-point text rendering for human consumption.
std::string format_report_text(const quantum::ChoquetReport& report);

} // namespace choquet::io
