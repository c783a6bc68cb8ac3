#include "choquet/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace choquet::io {

namespace {

Complex complex_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(where + ": complex numbers must be [re, im] pairs");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

std::vector<int> one_based(const std::vector<int>& sigma) {
    std::vector<int> out;
    out.reserve(sigma.size());
    for (int s : sigma) out.push_back(s + 1);
    return out;
}

} // namespace

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw ParseError("matrix rows must have equal length");
        }
        for (Eigen::Index c = 0; c < cols; ++c) {
            m(r, c) = complex_from_json(row[c], "matrix entry");
        }
    }
    return m;
}

Problem parse_problem(const json& j) {
    Problem p;
    if (!j.is_object()) throw ParseError("problem file must be a JSON object");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer()) {
        throw ParseError("missing integer field 'dimension'");
    }
    p.dimension = j["dimension"].get<int>();
    if (p.dimension < 1) throw ParseError("'dimension' must be >= 1");

    if (j.contains("vectors")) {
        const auto& jv = j["vectors"];
        if (!jv.is_array()) throw ParseError("'vectors' must be an array");
        for (std::size_t i = 0; i < jv.size(); ++i) {
            const auto& v = jv[i];
            if (!v.is_array() || static_cast<int>(v.size()) != p.dimension) {
                throw ParseError("vector " + std::to_string(i + 1) +
                                 " must have 'dimension' entries");
            }
            Vector vec(p.dimension);
            for (int k = 0; k < p.dimension; ++k) {
                vec(k) = complex_from_json(v[k], "vector " + std::to_string(i + 1));
            }
            p.vectors.push_back(std::move(vec));
        }
    }

    if (j.contains("probabilities")) {
        const auto& jp = j["probabilities"];
        if (!jp.is_array()) throw ParseError("'probabilities' must be an array");
        std::vector<double> probs;
        for (const auto& x : jp) {
            if (!x.is_number()) throw ParseError("'probabilities' entries must be numbers");
            probs.push_back(x.get<double>());
        }
        p.probabilities = std::move(probs);
    }

    if (j.contains("rho")) {
        p.rho = matrix_from_json(j["rho"]);
        if (p.rho->rows() != p.dimension || p.rho->cols() != p.dimension) {
            throw ParseError("'rho' must be dimension x dimension");
        }
    }
    if (p.probabilities && p.rho) {
        throw ParseError("exactly one of 'probabilities' and 'rho' may be present");
    }

    if (j.contains("capacity")) {
        const auto& jc = j["capacity"];
        if (!jc.is_object() || !jc.contains("n") || !jc.contains("values")) {
            throw ParseError("'capacity' needs fields 'n' and 'values'");
        }
        int n = jc["n"].get<int>();
        if (n < 1 || n > classical::kMaxElements) throw ParseError("capacity 'n' out of range");
        std::vector<double> values(std::size_t{1} << n, 0.0);
        for (const auto& [key, val] : jc["values"].items()) {
            std::size_t pos = 0;
            unsigned long mask = 0;
            try {
                mask = std::stoul(key, &pos);
            } catch (const std::exception&) {
                throw ParseError("capacity key '" + key + "' is not a bitmask");
            }
            if (pos != key.size() || mask >= values.size()) {
                throw ParseError("capacity key '" + key + "' out of range");
            }
            if (!val.is_number()) throw ParseError("capacity values must be numbers");
            values[mask] = val.get<double>();
        }
        try {
            p.capacity.emplace(n, std::move(values));
        } catch (const Error& e) {
            throw ParseError(std::string("invalid capacity: ") + e.what());
        }
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
            throw ParseError("'seed' must be an integer");
        }
        p.seed = j["seed"].get<std::uint64_t>();
    }
    return p;
}

Problem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_problem(j);
}

ReferenceSet Problem::reference_set(const Tolerances& tol) const {
    if (vectors.empty()) throw ParseError("problem has no 'vectors' section");
    return ReferenceSet(dimension, vectors, tol);
}

quantum::ProbabilityVector Problem::probability_vector(const ReferenceSet& set) const {
    if (probabilities) {
        if (static_cast<int>(probabilities->size()) != set.n()) {
            throw ParseError("'probabilities' must have one entry per vector");
        }
        return quantum::ProbabilityVector(*probabilities);
    }
    if (rho) {
        return quantum::measure(set, DensityMatrix(HermitianMatrix(*rho, set.tol()), set.tol()));
    }
    throw ParseError("problem needs 'probabilities' or 'rho'");
}

json serialize_validation(const Problem& problem, const ValidationReport& report) {
    json out;
    out["tool_version"] = kToolVersion;
    out["dimension"] = problem.dimension;
    out["n"] = problem.vectors.size();
    out["valid"] = report.valid;
    out["worst_singular_value"] = report.worst_singular_value;
    json certs = json::array();
    for (const auto& c : report.certificates) {
        certs.push_back({{"subset_mask", c.subset}, {"min_singular_value", c.min_singular_value}});
    }
    out["certificates"] = std::move(certs);
    out["warnings"] = report.warnings;
    return out;
}

json serialize_report(const Problem& problem, const quantum::ChoquetReport& report) {
    json out;
    out["tool_version"] = kToolVersion;
    out["dimension"] = problem.dimension;
    json vecs = json::array();
    for (const auto& v : problem.vectors) {
        json jv = json::array();
        for (Eigen::Index k = 0; k < v.size(); ++k) jv.push_back(complex_to_json(v(k)));
        vecs.push_back(std::move(jv));
    }
    out["vectors"] = std::move(vecs);
    out["p"] = report.p;
    out["ranking"] = one_based(report.ranking.sigma);
    json groups = json::array();
    for (const auto& g : report.ranking.tie_groups) groups.push_back(one_based(g));
    out["tie_groups"] = std::move(groups);
    out["C"] = matrix_to_json(report.C.mat());
    out["trace_C"] = report.traceC;
    out["R"] = matrix_to_json(report.R.mat());
    out["induced_probabilities"] = report.induced;
    out["error"] = report.error;
    out["bounds"] = {{"Q_min", report.e_min_q},
                     {"Q_max", report.e_max_q},
                     {"Q_sigma_min", report.e_min_sigma},
                     {"Q_sigma_max", report.e_max_sigma}};
    if (problem.seed) out["seed"] = *problem.seed;
    return out;
}

json serialize_family(const Problem& problem, const family::AffineFamily& fam,
                      const family::PsdSampleReport& psd,
                      const family::ComparisonReport& cmp) {
    json out;
    out["tool_version"] = kToolVersion;
    out["dimension"] = problem.dimension;
    out["free_dimension"] = fam.free_dimension();
    out["rank"] = fam.rank;
    out["particular"] = std::vector<double>(fam.particular.data(),
                                            fam.particular.data() + fam.particular.size());
    json basis = json::array();
    for (const auto& b : fam.basis) {
        basis.push_back(std::vector<double>(b.data(), b.data() + b.size()));
    }
    out["nullspace_basis"] = std::move(basis);
    out["psd"] = {{"samples", psd.samples},
                  {"psd_count", psd.psd_count},
                  {"fraction", psd.fraction}};
    json wits = json::array();
    for (const auto& w : psd.witnesses) wits.push_back(matrix_to_json(w));
    out["psd_witnesses"] = std::move(wits);
    out["weak_comonotonicity"] = {{"psd_samples", cmp.psd_samples},
                                  {"agreeing", cmp.weakly_comonotonic_count},
                                  {"fraction", cmp.agreement_fraction}};
    if (problem.seed) out["seed"] = *problem.seed;
    return out;
}

std::string format_report_text(const quantum::ChoquetReport& report) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4);
    auto print_matrix = [&](const char* name, const Matrix& m) {
        os << name << ":\n";
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            os << " ";
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                os << " " << std::setw(8) << m(r, c).real();
                if (std::abs(m(r, c).imag()) > 5e-5) {
                    os << (m(r, c).imag() >= 0 ? "+" : "") << m(r, c).imag() << "i";
                }
            }
            os << "\n";
        }
    };
    os << "ranking (ascending):";
    for (int s : report.ranking.sigma) os << " " << s + 1;
    os << "\n";
    print_matrix("C", report.C.mat());
    os << "Tr[C]: " << report.traceC << "\n";
    print_matrix("R = C / Tr[C]", report.R.mat());
    os << "induced probabilities:";
    for (double v : report.induced) os << " " << v;
    os << "\n";
    os << "error: " << report.error << "\n";
    os << "Q bounds: [" << report.e_min_q << ", " << report.e_max_q << "]\n";
    os << "Q_sigma bounds: [" << report.e_min_sigma << ", " << report.e_max_sigma << "]\n";
    return os.str();
}

} // namespace choquet::io
