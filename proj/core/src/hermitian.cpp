#include "choquet/hermitian.hpp"

#include <cmath>

namespace choquet {

namespace {

bool all_finite(const Matrix& m) {
    return m.allFinite();
}

} // namespace

HermitianMatrix::HermitianMatrix(Matrix m, const Tolerances& tol) : mat_(std::move(m)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
        throw NonHermitianInput("matrix is not square");
    }
    if (!all_finite(mat_)) {
        throw NonHermitianInput("matrix has non-finite entries");
    }
    double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol.herm_tol) {
        throw NonHermitianInput("Hermiticity deviation " + std::to_string(dev));
    }
}

HermitianMatrix HermitianMatrix::zero(Eigen::Index dim) {
    return HermitianMatrix(Matrix::Zero(dim, dim), unchecked_tag{});
}

HermitianMatrix HermitianMatrix::identity(Eigen::Index dim) {
    return HermitianMatrix(Matrix::Identity(dim, dim), unchecked_tag{});
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& other) const {
    if (dim() != other.dim()) throw DimensionMismatch("operator+: unequal dims");
    return HermitianMatrix(mat_ + other.mat_, unchecked_tag{});
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& other) const {
    if (dim() != other.dim()) throw DimensionMismatch("operator-: unequal dims");
    return HermitianMatrix(mat_ - other.mat_, unchecked_tag{});
}

HermitianMatrix HermitianMatrix::operator*(double s) const {
    return HermitianMatrix(mat_ * s, unchecked_tag{});
}

DensityMatrix::DensityMatrix(HermitianMatrix base, const Tolerances& tol)
    : base_(std::move(base)) {
    auto w = is_psd(base_, tol);
    if (!w.psd) {
        throw NonHermitianInput("density matrix not PSD, min eigenvalue " +
                                std::to_string(w.min_eigenvalue));
    }
    double tr = base_.trace();
    if (std::abs(tr - 1.0) > tol.trace_tol) {
        throw NonHermitianInput("density matrix trace " + std::to_string(tr));
    }
}

EigenSystem eig_hermitian(const HermitianMatrix& m, const Tolerances& tol) {
    // Symmetrize before the solve; the constructor already bounded the deviation.
    Matrix sym = 0.5 * (m.mat() + m.mat().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym);
    if (es.info() != Eigen::Success) {
        throw Error("eigensolver failed");
    }
    const auto& vals = es.eigenvalues();
    const auto& vecs = es.eigenvectors();

    EigenSystem out;
    Eigen::Index d = m.dim();
    Eigen::Index start = 0;
    while (start < d) {
        Eigen::Index end = start + 1;
        while (end < d && vals(end) - vals(end - 1) < tol.degeneracy_tol) ++end;
        Matrix proj = Matrix::Zero(d, d);
        double mean = 0.0;
        for (Eigen::Index j = start; j < end; ++j) {
            proj += vecs.col(j) * vecs.col(j).adjoint();
            mean += vals(j);
        }
        mean /= static_cast<double>(end - start);
        out.values.push_back(mean);
        out.projectors.emplace_back(std::move(proj));
        start = end;
    }
    return out;
}

PsdWitness is_psd(const HermitianMatrix& m, const Tolerances& tol) {
    Matrix sym = 0.5 * (m.mat() + m.mat().adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    double min_ev = es.eigenvalues().minCoeff();
    return {min_ev >= -tol.psd_tol, min_ev};
}

double trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace_product: unequal dims");
    Complex tr = (a.mat() * b.mat()).trace();
    if (std::abs(tr.imag()) > 1e-10) {
        throw Error("trace_product: imaginary residue " + std::to_string(tr.imag()));
    }
    return tr.real();
}

} // namespace choquet
