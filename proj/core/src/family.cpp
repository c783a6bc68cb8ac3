#include "choquet/family.hpp"

#include <cmath>
#include <random>
#include <string>

namespace choquet::family {

namespace {

/// Traceless Hermitian basis matrix for coordinate k, matching the
/// documented ordering.
Matrix basis_matrix(int d, int k) {
    Matrix e = Matrix::Zero(d, d);
    if (k < d - 1) {
        e(k, k) = 1.0;
        e(d - 1, d - 1) = -1.0;
        return e;
    }
    int off = k - (d - 1);
    int n_off = d * (d - 1) / 2;
    bool imag = off >= n_off;
    if (imag) off -= n_off;
    int a = 0, b = 1;
    for (int r = 0; r < off; ++r) {
        if (++b == d) {
            ++a;
            b = a + 1;
        }
    }
    if (imag) {
        e(a, b) = Complex(0.0, 1.0);
        e(b, a) = Complex(0.0, -1.0);
    } else {
        e(a, b) = 1.0;
        e(b, a) = 1.0;
    }
    return e;
}

Matrix base_point(int d) {
    Matrix m = Matrix::Zero(d, d);
    m(d - 1, d - 1) = 1.0;
    return m;
}

} // namespace

Matrix HermitianParameterization::to_matrix(const Eigen::VectorXd& coords) const {
    if (coords.size() != size()) throw SizeMismatch("coordinate vector has wrong length");
    Matrix m = base_point(d);
    for (int k = 0; k < size(); ++k) m += coords(k) * basis_matrix(d, k);
    return m;
}

Eigen::VectorXd HermitianParameterization::from_matrix(const Matrix& m) const {
    if (m.rows() != d || m.cols() != d) throw DimensionMismatch("matrix has wrong dimension");
    Eigen::VectorXd coords(size());
    int k = 0;
    for (int i = 0; i < d - 1; ++i) coords(k++) = m(i, i).real();
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) coords(k++) = m(a, b).real();
    }
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) coords(k++) = m(a, b).imag();
    }
    return coords;
}

Matrix AffineFamily::member(const Eigen::VectorXd& coeffs) const {
    if (coeffs.size() != free_dimension()) {
        throw SizeMismatch("coefficient vector does not match the free dimension");
    }
    Eigen::VectorXd x = particular;
    for (int k = 0; k < free_dimension(); ++k) x += coeffs(k) * basis[k];
    return param.to_matrix(x);
}

AffineFamily solve_family(const ReferenceSet& set, const quantum::ProbabilityVector& p) {
    const int d = set.d();
    const int n = set.n();
    if (p.n() != n) throw SizeMismatch("p size differs from the set");
    if (n > d * d - 1) {
        throw Error("system is overdetermined beyond d^2-1 equations");
    }
    HermitianParameterization param{d};
    const int m = param.size();

    // p(i) = Tr[rho0 Pi_i] + sum_k x_k Tr[E_k Pi_i], all real.
    Eigen::MatrixXd sys(n, m);
    Eigen::VectorXd rhs(n);
    Matrix rho0 = base_point(d);
    for (int i = 0; i < n; ++i) {
        const Matrix& pi = set.projector(Mask{1} << i).mat();
        rhs(i) = p.at(i) - (rho0 * pi).trace().real();
        for (int k = 0; k < m; ++k) {
            sys(i, k) = (basis_matrix(d, k) * pi).trace().real();
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double cutoff = 1e-10 * std::max(1.0, sv.size() > 0 ? sv(0) : 1.0);
    int rank = 0;
    for (int k = 0; k < sv.size(); ++k) {
        if (sv(k) > cutoff) ++rank;
    }
    // Least-norm particular solution.
    Eigen::VectorXd uy = svd.matrixU().adjoint() * rhs;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
    for (int k = 0; k < rank; ++k) x += (uy(k) / sv(k)) * svd.matrixV().col(k);

    double residual = (sys * x - rhs).cwiseAbs().maxCoeff();
    if (residual > 1e-8) {
        throw InconsistentSystem("no Hermitian trace-1 matrix reproduces p (residual " +
                                 std::to_string(residual) + ")");
    }

    AffineFamily family{param, std::move(x), {}, rank};
    for (int k = rank; k < m; ++k) family.basis.push_back(svd.matrixV().col(k));
    return family;
}

PsdSampleReport psd_members(const AffineFamily& family, int samples, std::uint64_t seed,
                            const Tolerances& tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    PsdSampleReport rep{samples, 0, 0.0, {}};
    const int free = family.free_dimension();
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd coeffs(free);
        for (int k = 0; k < free; ++k) coeffs(k) = box(rng);
        Matrix member = family.member(coeffs);
        auto w = is_psd(HermitianMatrix(member, tol), tol);
        if (w.psd) {
            ++rep.psd_count;
            if (rep.witnesses.size() < 5) rep.witnesses.push_back(std::move(member));
        }
    }
    rep.fraction = samples > 0 ? static_cast<double>(rep.psd_count) / samples : 0.0;
    return rep;
}

ComparisonReport compare_with_choquet(const ReferenceSet& set,
                                      const quantum::ProbabilityVector& p,
                                      const AffineFamily& family, int samples,
                                      std::uint64_t seed) {
    auto report = quantum::choquet(set, p);
    auto r_ranking = quantum::ranking(quantum::ProbabilityVector(report.induced), set.tol());

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    const int free = family.free_dimension();
    int psd = 0, agree = 0;
    for (int s = 0; s < samples; ++s) {
        Eigen::VectorXd coeffs(free);
        for (int k = 0; k < free; ++k) coeffs(k) = box(rng);
        Matrix member = family.member(coeffs);
        HermitianMatrix h(member, set.tol());
        if (!is_psd(h, set.tol()).psd) continue;
        ++psd;
        auto member_p = quantum::measure(set, DensityMatrix(h, set.tol()));
        auto member_ranking = quantum::ranking(member_p, set.tol());
        if (quantum::weakly_comonotonic(member_ranking, r_ranking)) ++agree;
    }
    double frac = psd > 0 ? static_cast<double>(agree) / psd : 0.0;
    return {psd, agree, frac};
}

} // namespace choquet::family
