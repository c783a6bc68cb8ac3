#include "choquet/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace choquet::quantum {

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
    if (p_.empty()) throw Error("probability vector is empty");
    for (double v : p_) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0 + 1e-10) {
            throw Error("probability out of [0,1]: " + std::to_string(v));
        }
    }
}

bool RankingPermutation::has_ties() const {
    for (const auto& g : tie_groups) {
        if (g.size() > 1) return true;
    }
    return false;
}

RankingPermutation ranking(const ProbabilityVector& p, const Tolerances& tol) {
    RankingPermutation r;
    r.sigma.resize(p.n());
    std::iota(r.sigma.begin(), r.sigma.end(), 0);
    std::stable_sort(r.sigma.begin(), r.sigma.end(),
                     [&](int a, int b) { return p.at(a) < p.at(b); });
    std::vector<int> group{r.sigma[0]};
    for (int k = 1; k < p.n(); ++k) {
        if (p.at(r.sigma[k]) - p.at(r.sigma[k - 1]) <= tol.p_tie_tol) {
            group.push_back(r.sigma[k]);
        } else {
            r.tie_groups.push_back(std::move(group));
            group = {r.sigma[k]};
        }
    }
    r.tie_groups.push_back(std::move(group));
    return r;
}

CumulativeProjectorChain cumulative_chain(const ReferenceSet& set,
                                          const RankingPermutation& sigma) {
    const int n = set.n();
    const int d = set.d();
    if (static_cast<int>(sigma.sigma.size()) != n) {
        throw InvalidPermutation("ranking permutation does not match the set size");
    }
    CumulativeProjectorChain chain;
    chain.pi.reserve(n);
    Mask suffix = 0;
    std::vector<Mask> suffixes(n);
    for (int k = n - 1; k >= 0; --k) {
        suffix |= Mask{1} << sigma.sigma[k];
        suffixes[k] = suffix;
    }
    for (int k = 0; k < n; ++k) chain.pi.push_back(set.projector(suffixes[k]));

    chain.varpi.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) {
            chain.varpi.push_back(chain.pi[i] - chain.pi[i + 1]);
        } else {
            chain.varpi.push_back(chain.pi[i]);
        }
    }

    // Complete orthogonal family check on the last d derivatives.
    Matrix sum = Matrix::Zero(d, d);
    for (int i = n - d; i < n; ++i) sum += chain.varpi[i].mat();
    if ((sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8) {
        throw Error("cumulative chain: derivatives do not resolve the identity");
    }
    for (int i = n - d; i < n; ++i) {
        for (int j = n - d; j < n; ++j) {
            Matrix prod = chain.varpi[i].mat() * chain.varpi[j].mat();
            Matrix expect = (i == j) ? chain.varpi[i].mat() : Matrix::Zero(d, d);
            if ((prod - expect).cwiseAbs().maxCoeff() > 1e-8) {
                throw Error("cumulative chain: derivatives not mutually orthogonal");
            }
        }
    }
    return chain;
}

HermitianMatrix assemble_choquet(const ProbabilityVector& p,
                                 const RankingPermutation& sigma,
                                 const CumulativeProjectorChain& chain) {
    const int n = p.n();
    const int d = static_cast<int>(chain.pi.front().dim());
    Matrix acc = Matrix::Zero(d, d);
    for (int i = n - d; i < n; ++i) {
        acc += p.at(sigma.sigma[i]) * chain.varpi[i].mat();
    }
    return HermitianMatrix(acc);
}

ProbabilityVector measure(const ReferenceSet& set, const DensityMatrix& rho) {
    std::vector<double> p(set.n());
    for (int i = 0; i < set.n(); ++i) {
        p[i] = trace_product(rho.base(), set.projector(Mask{1} << i));
    }
    return ProbabilityVector(std::move(p));
}

DensityMatrix normalize(const HermitianMatrix& c, const Tolerances& tol) {
    double tr = c.trace();
    if (tr <= 1e-12) throw ZeroTrace("trace " + std::to_string(tr));
    return DensityMatrix(c * (1.0 / tr), tol);
}

std::vector<double> induced_probabilities(const ReferenceSet& set, const DensityMatrix& r) {
    std::vector<double> out(set.n());
    for (int j = 0; j < set.n(); ++j) {
        out[j] = trace_product(r.base(), set.projector(Mask{1} << j));
    }
    return out;
}

double approximation_error(const ProbabilityVector& p, const std::vector<double>& induced) {
    if (static_cast<int>(induced.size()) != p.n()) {
        throw SizeMismatch("induced probabilities size differs from p");
    }
    double acc = 0.0;
    for (int j = 0; j < p.n(); ++j) acc += induced[j] - p.at(j);
    return acc / p.n();
}

HermitianMatrix choquet_via_mobius_operators(const ReferenceSet& set,
                                             const ProbabilityVector& p) {
    if (p.n() != set.n()) throw SizeMismatch("p size differs from the set");
    const Mask full = set.full_mask();
    Matrix acc = Matrix::Zero(set.d(), set.d());
    for (Mask a = 1; a <= full; ++a) {
        double mn = std::numeric_limits<double>::infinity();
        for (int i = 0; i < set.n(); ++i) {
            if (a & (Mask{1} << i)) mn = std::min(mn, p.at(i));
        }
        acc += set.mobius_operator(a).mat() * mn;
    }
    return HermitianMatrix(acc);
}

bool weakly_comonotonic(const RankingPermutation& r1, const RankingPermutation& r2) {
    for (int a : r1.top_group()) {
        for (int b : r2.top_group()) {
            if (a == b) return true;
        }
    }
    return false;
}

ChoquetReport choquet(const ReferenceSet& set, const ProbabilityVector& p) {
    if (p.n() != set.n()) throw SizeMismatch("p size differs from the set");
    const int n = set.n();
    const int d = set.d();
    const Tolerances& tol = set.tol();

    auto sigma = ranking(p, tol);

    // Proposition 2: the mean of p must lie within the spectrum of Q.
    auto q_sys = eig_hermitian(set.frame_operator(), tol);
    double mean_p = std::accumulate(p.values().begin(), p.values().end(), 0.0) / n;
    if (mean_p < q_sys.min() - tol.bound_tol || mean_p > q_sys.max() + tol.bound_tol) {
        throw BoundViolation("mean p " + std::to_string(mean_p) + " outside [" +
                             std::to_string(q_sys.min()) + ", " + std::to_string(q_sys.max()) +
                             "]: data inconsistent with any density matrix");
    }

    auto chain = cumulative_chain(set, sigma);
    HermitianMatrix c = assemble_choquet(p, sigma, chain);

    // Telescoped form; both expressions must agree.
    Matrix tele = p.at(sigma.sigma[n - d]) * Matrix::Identity(d, d);
    for (int i = n - d + 1; i < n; ++i) {
        tele += (p.at(sigma.sigma[i]) - p.at(sigma.sigma[i - 1])) * chain.pi[i].mat();
    }
    if ((tele - c.mat()).cwiseAbs().maxCoeff() > tol.cross_check_tol) {
        throw Error("Choquet integral forms disagree beyond tolerance");
    }

    double trace_c = c.trace();

    // Trace bounds against Q_sigma built from the top-d subset.
    Mask top_mask = 0;
    for (int i = n - d; i < n; ++i) top_mask |= Mask{1} << sigma.sigma[i];
    Matrix q_sigma = Matrix::Zero(d, d);
    for (int i = n - d; i < n; ++i) {
        q_sigma += set.projector(Mask{1} << sigma.sigma[i]).mat();
    }
    auto qs_sys = eig_hermitian(HermitianMatrix(q_sigma / d, tol), tol);
    if (trace_c / d < qs_sys.min() - tol.bound_tol ||
        trace_c / d > qs_sys.max() + tol.bound_tol) {
        throw BoundViolation("Tr[C]/d " + std::to_string(trace_c / d) +
                             " violates the Q_sigma eigenvalue bounds");
    }

    DensityMatrix r = normalize(c, tol);
    auto induced = induced_probabilities(set, r);

    // Proposition 10: the top-ranked index carries the maximal induced probability.
    double top_val = -1.0;
    for (int idx : sigma.top_group()) top_val = std::max(top_val, induced[idx]);
    for (int j = 0; j < n; ++j) {
        if (induced[j] > top_val + 1e-9) {
            throw MaximalityViolation("induced probability " + std::to_string(induced[j]) +
                                      " at index " + std::to_string(j + 1) +
                                      " exceeds the top-ranked value");
        }
    }

    double err = approximation_error(p, induced);

    return ChoquetReport{std::move(c),    trace_c,       r,
                         std::move(sigma), p.values(),   std::move(induced),
                         err,             qs_sys.min(),  qs_sys.max(),
                         q_sys.min(),     q_sys.max()};
}

} // namespace choquet::quantum
