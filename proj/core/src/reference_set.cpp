#include "choquet/reference_set.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

namespace choquet {

namespace {

int popcount(Mask m) { return std::popcount(m); }

std::string mask_to_string(Mask m) {
    std::string s = "{";
    for (int i = 0; i < 32; ++i) {
        if (m & (Mask{1} << i)) {
            if (s.size() > 1) s += ",";
            s += std::to_string(i + 1); // 1-based in messages
        }
    }
    return s + "}";
}

} // namespace

ReferenceSet::ReferenceSet(int d, std::vector<Vector> vectors, Tolerances tol)
    : d_(d), tol_(tol) {
    int n = static_cast<int>(vectors.size());
    if (d < 1) throw Error("dimension must be positive");
    if (n < d) throw DegenerateSet("need n >= d vectors");
    if (n > 20) throw SubsetLimitExceeded("reference sets limited to n <= 20");
    columns_.resize(d, n);
    for (int i = 0; i < n; ++i) {
        if (vectors[i].size() != d) {
            throw DimensionMismatch("vector " + std::to_string(i + 1) + " has wrong dimension");
        }
        double norm = vectors[i].norm();
        if (std::abs(norm - 1.0) > tol_.unit_norm_tol) {
            throw Error("vector " + std::to_string(i + 1) + " is not a unit vector (norm " +
                        std::to_string(norm) + ")");
        }
        columns_.col(i) = vectors[i] / norm;
    }
}

ValidationReport ReferenceSet::validate() const {
    ValidationReport rep;
    rep.worst_singular_value = std::numeric_limits<double>::infinity();
    const int nn = n();
    if (nn > d_ * d_ - 1) {
        rep.warnings.push_back("n = " + std::to_string(nn) + " exceeds d^2-1 = " +
                               std::to_string(d_ * d_ - 1));
    }
    const Mask full = full_mask();
    for (Mask a = 1; a <= full; ++a) {
        if (popcount(a) != d_) continue;
        Matrix cols(d_, d_);
        int c = 0;
        for (int i = 0; i < nn; ++i) {
            if (a & (Mask{1} << i)) cols.col(c++) = columns_.col(i);
        }
        Eigen::JacobiSVD<Matrix> svd(cols);
        double smin = svd.singularValues().minCoeff();
        rep.certificates.push_back({a, smin});
        if (smin < rep.worst_singular_value) {
            rep.worst_singular_value = smin;
            rep.worst_subset = a;
        }
        if (smin < tol_.rank_warn && smin > tol_.rank_tol) {
            rep.warnings.push_back("subset " + mask_to_string(a) +
                                   " is ill-conditioned (sigma_min " + std::to_string(smin) + ")");
        }
    }
    if (rep.worst_singular_value <= tol_.rank_tol) {
        rep.valid = false;
        throw DegenerateSet("linearly dependent subset " + mask_to_string(rep.worst_subset) +
                            " (sigma_min " + std::to_string(rep.worst_singular_value) + ")");
    }
    return rep;
}

const HermitianMatrix& ReferenceSet::projector(Mask a) const {
    a &= full_mask();
    {
        std::shared_lock lock(memo_mutex_);
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
    }
    const int k = popcount(a);
    HermitianMatrix result = HermitianMatrix::zero(d_);
    if (k >= d_) {
        result = HermitianMatrix::identity(d_);
    } else if (k > 0) {
        Matrix cols(d_, k);
        int c = 0;
        for (int i = 0; i < n(); ++i) {
            if (a & (Mask{1} << i)) cols.col(c++) = columns_.col(i);
        }
        // Orthonormalize the columns instead of inverting the Gram matrix.
        Eigen::ColPivHouseholderQR<Matrix> qr(cols);
        qr.setThreshold(tol_.rank_tol);
        if (qr.rank() < k) {
            throw SingularGram("Gram matrix numerically singular for subset " + mask_to_string(a));
        }
        Matrix q = qr.householderQ() * Matrix::Identity(d_, k);
        result = HermitianMatrix(q * q.adjoint(), tol_);
    }
    // Trace law: Tr[Pi(A)] = min(|A|, d).
    if (std::abs(result.trace() - std::min(k, d_)) > 1e-9) {
        throw SingularGram("projector trace " + std::to_string(result.trace()) +
                           " deviates from rank for subset " + mask_to_string(a));
    }
    std::unique_lock lock(memo_mutex_);
    auto [it, inserted] = memo_.try_emplace(a, std::move(result));
    return it->second;
}

HermitianMatrix ReferenceSet::mobius_operator(Mask b) const {
    b &= full_mask();
    if (b == 0) throw Error("Moebius operator needs a nonempty subset");
    const int kb = popcount(b);
    Matrix acc = Matrix::Zero(d_, d_);
    for (Mask a = b;; a = (a - 1) & b) {
        if (a != 0) {
            double sign = ((kb - popcount(a)) % 2 == 0) ? 1.0 : -1.0;
            acc += sign * projector(a).mat();
        }
        if (a == 0) break;
    }
    return HermitianMatrix(acc, tol_);
}

double ReferenceSet::verify_resolution() const {
    Matrix acc = Matrix::Zero(d_, d_);
    const Mask full = full_mask();
    for (Mask b = 1; b <= full; ++b) {
        acc += mobius_operator(b).mat();
    }
    return (acc - Matrix::Identity(d_, d_)).cwiseAbs().maxCoeff();
}

double ReferenceSet::verify_commutator_identity(int i, int j) const {
    if (i == j) throw Error("commutator identity needs distinct indices");
    const Matrix& pi = projector(Mask{1} << i).mat();
    const Matrix& pj = projector(Mask{1} << j).mat();
    Matrix lhs = pi * pj - pj * pi;
    Matrix d2 = mobius_operator((Mask{1} << i) | (Mask{1} << j)).mat();
    Matrix rhs = d2 * (pi - pj);
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

HermitianMatrix ReferenceSet::frame_operator() const {
    Matrix acc = Matrix::Zero(d_, d_);
    for (int i = 0; i < n(); ++i) acc += projector(Mask{1} << i).mat();
    return HermitianMatrix(acc / static_cast<double>(n()), tol_);
}

} // namespace choquet
