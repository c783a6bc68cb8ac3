#pragma once

#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "choquet/hermitian.hpp"

namespace choquet {

using Mask = std::uint32_t;

struct SubsetCertificate {
    Mask subset;      // d-subset of {1..n}, bit k = vector k (0-based)
    double min_singular_value;
};

struct ValidationReport {
    bool valid = true;
    std::vector<SubsetCertificate> certificates; // one per d-subset
    std::vector<std::string> warnings;
    double worst_singular_value = 0.0;
    Mask worst_subset = 0;
};

/// A total set of n >= d unit vectors in C^d. Every d-subset must be
/// linearly independent. Projectors onto subset spans are memoized per
/// bitmask; the cache is safe for concurrent readers.
class ReferenceSet {
public:
    /// Vectors within unit_norm_tol of unit norm are renormalized,
    /// anything further off is rejected.
    ReferenceSet(int d, std::vector<Vector> vectors, Tolerances tol = {});

    ReferenceSet(const ReferenceSet& other)
        : d_(other.d_), columns_(other.columns_), tol_(other.tol_) {
        std::shared_lock lock(other.memo_mutex_);
        memo_ = other.memo_;
    }
    ReferenceSet& operator=(const ReferenceSet& other) {
        if (this != &other) {
            std::shared_lock lock(other.memo_mutex_);
            d_ = other.d_;
            columns_ = other.columns_;
            tol_ = other.tol_;
            memo_ = other.memo_;
        }
        return *this;
    }

    int d() const { return d_; }
    int n() const { return static_cast<int>(columns_.cols()); }
    Mask full_mask() const { return (Mask{1} << n()) - 1; }
    Vector vector(int i) const { return columns_.col(i); }
    const Tolerances& tol() const { return tol_; }

    /// Per-d-subset smallest singular values; throws DegenerateSet when any
    /// falls at or below rank_tol. Warns (without failing) for sets outside
    /// the d <= n <= d^2-1 range and for ill-conditioned subsets.
    ValidationReport validate() const;

    /// Projector onto the span of the vectors in A. Identity for |A| >= d,
    /// zero for the empty set.
    const HermitianMatrix& projector(Mask a) const;

    /// Moebius operator D(B) = sum over A subset of B of (-1)^{|B|-|A|} Pi(A).
    HermitianMatrix mobius_operator(Mask b) const;

    /// Max-norm residual of sum over nonempty B of D(B) minus the identity.
    double verify_resolution() const;

    /// Residual of [Pi({i}),Pi({j})] - D({i,j})(Pi({i})-Pi({j})). 0-based indices.
    double verify_commutator_identity(int i, int j) const;

    /// Q = (1/n) sum of the singleton projectors; a density matrix.
    HermitianMatrix frame_operator() const;

private:
    int d_;
    Matrix columns_; // d x n, unit columns
    Tolerances tol_;

    mutable std::unordered_map<Mask, HermitianMatrix> memo_;
    mutable std::shared_mutex memo_mutex_;
};

} // namespace choquet
