#pragma once

#include <optional>
#include <vector>

#include "choquet/hermitian.hpp"
#include "choquet/reference_set.hpp"

namespace choquet::quantum {

/// Probabilities p(i) = Tr[rho Pi({i})] against a reference set.
class ProbabilityVector {
public:
    explicit ProbabilityVector(std::vector<double> p);

    int n() const { return static_cast<int>(p_.size()); }
    double at(int i) const { return p_[i]; }
    const std::vector<double>& values() const { return p_; }

private:
    std::vector<double> p_;
};

/// Ascending ordering of p with stable tie-break by original index.
/// sigma is 0-based: p[sigma[0]] <= ... <= p[sigma[n-1]].
struct RankingPermutation {
    std::vector<int> sigma;
    std::vector<std::vector<int>> tie_groups; // contiguous groups of tied indices

    int top() const { return sigma.back(); }
    const std::vector<int>& top_group() const { return tie_groups.back(); }
    bool has_ties() const;
};

RankingPermutation ranking(const ProbabilityVector& p, const Tolerances& tol = {});

/// Cumulative projectors pi_sigma(k) = Pi({sigma(k),...,sigma(n)}) and their
/// discrete derivatives varpi, which form a complete orthogonal family.
struct CumulativeProjectorChain {
    std::vector<HermitianMatrix> pi;    // index k-1 holds pi_sigma(k), k = 1..n
    std::vector<HermitianMatrix> varpi; // index i-1 holds varpi_sigma(i), i = 1..n
};

CumulativeProjectorChain cumulative_chain(const ReferenceSet& set,
                                          const RankingPermutation& sigma);

/// Assembles C = sum p[sigma(i)] varpi_sigma(i) for a given chain. Exposed
/// separately so tie-swapped orderings can be compared.
HermitianMatrix assemble_choquet(const ProbabilityVector& p,
                                 const RankingPermutation& sigma,
                                 const CumulativeProjectorChain& chain);

struct ChoquetReport {
    HermitianMatrix C;
    double traceC;
    DensityMatrix R;
    RankingPermutation ranking;
    std::vector<double> p;
    std::vector<double> induced; // P(j) = Tr[R Pi({j})]
    double error;                // mean of P(j) - p(j)
    double e_min_sigma, e_max_sigma; // eigenvalue bounds of Q_sigma
    double e_min_q, e_max_q;         // eigenvalue bounds of Q
};

/// Full pipeline: ranking, Proposition 2 bound check, chain construction,
/// both integral forms cross-checked, trace bounds, normalization, induced
/// probabilities with the maximality check, and the error indicator.
ChoquetReport choquet(const ReferenceSet& set, const ProbabilityVector& p);

/// Convenience: measure p(i) = Tr[rho Pi({i})] from an explicit state.
ProbabilityVector measure(const ReferenceSet& set, const DensityMatrix& rho);

DensityMatrix normalize(const HermitianMatrix& c, const Tolerances& tol = {});

std::vector<double> induced_probabilities(const ReferenceSet& set, const DensityMatrix& r);

double approximation_error(const ProbabilityVector& p, const std::vector<double>& induced);

/// Moebius-operator expansion: sum over nonempty A of D(A) min_{i in A} p(i).
HermitianMatrix choquet_via_mobius_operators(const ReferenceSet& set,
                                             const ProbabilityVector& p);

/// True iff the top tie groups of the two rankings intersect.
bool weakly_comonotonic(const RankingPermutation& r1, const RankingPermutation& r2);

} // namespace choquet::quantum
