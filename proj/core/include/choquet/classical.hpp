#pragma once

#include <cstdint>
#include <vector>

#include "choquet/errors.hpp"

namespace choquet::classical {

/// Subsets of {1..n} are n-bit masks; bit k (0-based) holds element k+1.
using Mask = std::uint32_t;

inline constexpr int kMaxElements = 20; // 2^n dense storage guard

/// Monotone set function on subsets of a finite index set, mu(empty) = 0.
/// Normalization mu(Omega) = 1 is not required.
class Capacity {
public:
    /// values[mask] = mu(mask), size 2^n. Monotonicity is checked
    /// exhaustively for n <= 16 and on sampled chains above.
    Capacity(int n, std::vector<double> values);

    int n() const { return n_; }
    Mask full_mask() const { return (Mask{1} << n_) - 1; }
    double at(Mask a) const { return values_[a]; }
    double total() const { return values_.back(); }
    const std::vector<double>& values() const { return values_; }

    /// True when mu(A) = sum of singleton values for every A.
    bool is_additive(double tol = 1e-12) const;

private:
    int n_;
    std::vector<double> values_;
};

/// Non-negative function on {1..n} together with its ranking permutation
/// tau: f[tau(1)] <= ... <= f[tau(n)], ties broken by ascending index.
/// Permutation entries are 0-based internally.
class RankedFunction {
public:
    explicit RankedFunction(std::vector<double> values);

    int n() const { return static_cast<int>(values_.size()); }
    double at(int i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<int>& tau() const { return tau_; }

private:
    std::vector<double> values_;
    std::vector<int> tau_;
};

/// Signed set function produced by the Moebius transform of a capacity.
class MobiusTransform {
public:
    MobiusTransform(int n, std::vector<double> values);

    int n() const { return n_; }
    double at(Mask a) const { return values_[a]; }
    const std::vector<double>& values() const { return values_; }

    /// Inverse transform: mu(A) = sum_{B subset A} d(B).
    std::vector<double> inverse() const;

private:
    int n_;
    std::vector<double> values_;
};

/// Cumulative function m_sigma(k) = mu({sigma(k),...,sigma(n)}), k = 1..n
/// (returned 0-indexed). sigma is 0-based.
std::vector<double> cumulative(const Capacity& mu, const std::vector<int>& sigma);

/// Successive differences; last entry is m(n). The sum telescopes to mu(Omega).
std::vector<double> discrete_derivative(const std::vector<double>& m);

/// Choquet integral using the function's own ranking permutation.
double choquet_integral(const RankedFunction& f, const Capacity& mu);

MobiusTransform mobius(const Capacity& mu);

/// Moebius form of the integral: sum over subsets of d(A) * min of f on A.
double choquet_via_mobius(const RankedFunction& f, const MobiusTransform& mob);

/// True iff no pair is ordered oppositely by f and g.
bool are_comonotonic(const RankedFunction& f, const RankedFunction& g);

} // namespace choquet::classical
