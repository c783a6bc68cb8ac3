#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "choquet/errors.hpp"
#include "choquet/tolerances.hpp"

namespace choquet {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Immutable complex d x d matrix certified Hermitian on construction.
class HermitianMatrix {
public:
    /// Validates |M - M^dagger|_max <= herm_tol and finiteness of all entries.
    explicit HermitianMatrix(Matrix m, const Tolerances& tol = {});

    static HermitianMatrix zero(Eigen::Index dim);
    static HermitianMatrix identity(Eigen::Index dim);

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }

    double trace() const { return mat_.trace().real(); }

    HermitianMatrix operator+(const HermitianMatrix& other) const;
    HermitianMatrix operator-(const HermitianMatrix& other) const;
    HermitianMatrix operator*(double s) const;

    double max_abs() const { return mat_.cwiseAbs().maxCoeff(); }

private:
    struct unchecked_tag {};
    HermitianMatrix(Matrix m, unchecked_tag) : mat_(std::move(m)) {}
    Matrix mat_;
};

/// Hermitian matrix additionally certified PSD with unit trace.
class DensityMatrix {
public:
    explicit DensityMatrix(HermitianMatrix base, const Tolerances& tol = {});

    const HermitianMatrix& base() const { return base_; }
    const Matrix& mat() const { return base_.mat(); }
    Eigen::Index dim() const { return base_.dim(); }

private:
    HermitianMatrix base_;
};

/// Eigenvalues (ascending, degeneracies merged) with eigenprojectors.
struct EigenSystem {
    std::vector<double> values;
    std::vector<HermitianMatrix> projectors;

    double min() const { return values.front(); }
    double max() const { return values.back(); }
};

/// Spectral decomposition with eigenvalues closer than degeneracy_tol merged
/// into a single eigenprojector.
EigenSystem eig_hermitian(const HermitianMatrix& m, const Tolerances& tol = {});

struct PsdWitness {
    bool psd;
    double min_eigenvalue;
};

PsdWitness is_psd(const HermitianMatrix& m, const Tolerances& tol = {});

/// Re(Tr[A B]); throws DimensionMismatch on unequal dims. The imaginary part
/// of the trace is checked to vanish for Hermitian inputs.
double trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

} // namespace choquet
