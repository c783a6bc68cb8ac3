#include "choquet/classical.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace choquet::classical {

namespace {

constexpr double kMonoSlack = 1e-12;

void check_monotone_exhaustive(int n, const std::vector<double>& v) {
    for (Mask a = 0; a < v.size(); ++a) {
        for (int b = 0; b < n; ++b) {
            Mask bit = Mask{1} << b;
            if (a & bit) continue;
            if (v[a] > v[a | bit] + kMonoSlack) {
                throw Error("capacity not monotone at mask " + std::to_string(a) +
                            " vs " + std::to_string(a | bit));
            }
        }
    }
}

void check_monotone_sampled(int n, const std::vector<double>& v) {
    std::mt19937 rng(0x5eed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int chain = 0; chain < 4096; ++chain) {
        std::shuffle(order.begin(), order.end(), rng);
        Mask a = 0;
        double prev = v[0];
        for (int b : order) {
            a |= Mask{1} << b;
            if (v[a] + kMonoSlack < prev) {
                throw Error("capacity not monotone on sampled chain");
            }
            prev = v[a];
        }
    }
}

} // namespace

Capacity::Capacity(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (n < 1) throw Error("capacity needs n >= 1");
    if (n > kMaxElements) {
        throw SubsetLimitExceeded("capacity limited to n <= " + std::to_string(kMaxElements));
    }
    if (values_.size() != (std::size_t{1} << n)) {
        throw SizeMismatch("capacity values must have 2^n entries");
    }
    for (double v : values_) {
        if (!std::isfinite(v) || v < 0.0) throw Error("capacity values must be finite and non-negative");
    }
    if (values_[0] != 0.0) throw Error("capacity must satisfy mu(empty) = 0");
    if (n <= 16) {
        check_monotone_exhaustive(n, values_);
    } else {
        check_monotone_sampled(n, values_);
    }
}

bool Capacity::is_additive(double tol) const {
    for (Mask a = 0; a < values_.size(); ++a) {
        double s = 0.0;
        for (int b = 0; b < n_; ++b) {
            if (a & (Mask{1} << b)) s += values_[Mask{1} << b];
        }
        if (std::abs(values_[a] - s) > tol) return false;
    }
    return true;
}

RankedFunction::RankedFunction(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw Error("ranked function needs at least one value");
    for (double v : values_) {
        if (!std::isfinite(v) || v < 0.0) throw Error("ranked function values must be finite and non-negative");
    }
    tau_.resize(values_.size());
    std::iota(tau_.begin(), tau_.end(), 0);
    std::stable_sort(tau_.begin(), tau_.end(),
                     [&](int a, int b) { return values_[a] < values_[b]; });
}

MobiusTransform::MobiusTransform(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
    if (values_.size() != (std::size_t{1} << n)) {
        throw SizeMismatch("Moebius values must have 2^n entries");
    }
}

std::vector<double> MobiusTransform::inverse() const {
    // Zeta transform over the subset lattice.
    std::vector<double> mu = values_;
    for (int b = 0; b < n_; ++b) {
        Mask bit = Mask{1} << b;
        for (Mask a = 0; a < mu.size(); ++a) {
            if (a & bit) mu[a] += mu[a ^ bit];
        }
    }
    return mu;
}

std::vector<double> cumulative(const Capacity& mu, const std::vector<int>& sigma) {
    int n = mu.n();
    if (static_cast<int>(sigma.size()) != n) {
        throw InvalidPermutation("permutation size mismatch");
    }
    Mask seen = 0;
    for (int s : sigma) {
        if (s < 0 || s >= n || (seen & (Mask{1} << s))) {
            throw InvalidPermutation("not a bijection on {1..n}");
        }
        seen |= Mask{1} << s;
    }
    std::vector<double> m(n);
    Mask suffix = 0;
    for (int k = n - 1; k >= 0; --k) {
        suffix |= Mask{1} << sigma[k];
        m[k] = mu.at(suffix);
    }
    return m;
}

std::vector<double> discrete_derivative(const std::vector<double>& m) {
    std::vector<double> nu(m.size());
    for (std::size_t i = 0; i + 1 < m.size(); ++i) nu[i] = m[i] - m[i + 1];
    nu.back() = m.back();
    return nu;
}

double choquet_integral(const RankedFunction& f, const Capacity& mu) {
    if (f.n() != mu.n()) throw SizeMismatch("function and capacity size differ");
    auto m = cumulative(mu, f.tau());
    auto nu = discrete_derivative(m);
    double acc = 0.0;
    for (int i = 0; i < f.n(); ++i) acc += f.at(f.tau()[i]) * nu[i];
    return acc;
}

MobiusTransform mobius(const Capacity& mu) {
    // Moebius transform over the subset lattice, O(n 2^n).
    std::vector<double> d = mu.values();
    for (int b = 0; b < mu.n(); ++b) {
        Mask bit = Mask{1} << b;
        for (Mask a = 0; a < d.size(); ++a) {
            if (a & bit) d[a] -= d[a ^ bit];
        }
    }
    return MobiusTransform(mu.n(), std::move(d));
}

double choquet_via_mobius(const RankedFunction& f, const MobiusTransform& mob) {
    if (f.n() != mob.n()) throw SizeMismatch("function and transform size differ");
    double acc = 0.0;
    Mask full = (Mask{1} << f.n()) - 1;
    for (Mask a = 1; a <= full; ++a) {
        double mn = std::numeric_limits<double>::infinity();
        for (int i = 0; i < f.n(); ++i) {
            if (a & (Mask{1} << i)) mn = std::min(mn, f.at(i));
        }
        acc += mob.at(a) * mn;
    }
    return acc;
}

bool are_comonotonic(const RankedFunction& f, const RankedFunction& g) {
    if (f.n() != g.n()) throw SizeMismatch("comonotonicity needs equal sizes");
    for (int i = 0; i < f.n(); ++i) {
        for (int j = i + 1; j < f.n(); ++j) {
            if ((f.at(i) - f.at(j)) * (g.at(i) - g.at(j)) < 0.0) return false;
        }
    }
    return true;
}

} // namespace choquet::classical
