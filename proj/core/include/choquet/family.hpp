#pragma once

#include <cstdint>
#include <vector>

#include "choquet/quantum.hpp"
#include "choquet/reference_set.hpp"

namespace choquet::family {

/// Real coordinates of a Hermitian trace-1 d x d matrix, length d^2 - 1.
/// Order: diagonal entries rho_11..rho_{d-1,d-1} (the last diagonal entry is
/// 1 minus their sum), then upper-triangle real parts row-major, then the
/// matching imaginary parts.
struct HermitianParameterization {
    int d;

    int size() const { return d * d - 1; }
    Matrix to_matrix(const Eigen::VectorXd& coords) const;
    Eigen::VectorXd from_matrix(const Matrix& m) const;
};

/// Affine solution family of the measurement constraints: every member is
/// particular + span(basis) in coordinate space.
struct AffineFamily {
    HermitianParameterization param;
    Eigen::VectorXd particular;            // least-norm solution
    std::vector<Eigen::VectorXd> basis;    // orthonormal nullspace directions
    int rank;

    int free_dimension() const { return static_cast<int>(basis.size()); }
    Matrix member(const Eigen::VectorXd& coeffs) const;
};

/// Solves p(i) = Tr[rho Pi({i})] over Hermitian trace-1 matrices.
/// Throws InconsistentSystem when no such matrix exists.
AffineFamily solve_family(const ReferenceSet& set, const quantum::ProbabilityVector& p);

struct PsdSampleReport {
    int samples;
    int psd_count;
    double fraction;
    std::vector<Matrix> witnesses; // up to 5 PSD members
};

/// Samples nullspace coefficients uniformly from [-1,1]^free and reports the
/// PSD fraction. Deterministic for a fixed seed.
PsdSampleReport psd_members(const AffineFamily& family, int samples,
                            std::uint64_t seed = 0, const Tolerances& tol = {});

struct ComparisonReport {
    int psd_samples;
    int weakly_comonotonic_count;
    double agreement_fraction;
};

/// For sampled PSD members, checks weak comonotonicity of their ranking
/// against the ranking of R(p).
ComparisonReport compare_with_choquet(const ReferenceSet& set,
                                      const quantum::ProbabilityVector& p,
                                      const AffineFamily& family, int samples,
                                      std::uint64_t seed = 0);

} // namespace choquet::family
