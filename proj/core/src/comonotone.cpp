#include "choquet/comonotone.hpp"

#include <cmath>
#include <string>

namespace choquet::comonotone {

ComonotonicityVerdict are_comonotonic_states(const quantum::ProbabilityVector& p1,
                                             const quantum::ProbabilityVector& p2,
                                             const Tolerances& tol) {
    if (p1.n() != p2.n()) throw SizeMismatch("probability vectors differ in size");
    auto r1 = quantum::ranking(p1, tol);
    auto r2 = quantum::ranking(p2, tol);
    bool boundary = r1.has_ties() || r2.has_ties();

    bool crossing = false;
    for (int i = 0; i < p1.n() && !crossing; ++i) {
        for (int j = i + 1; j < p1.n(); ++j) {
            double d1 = p1.at(i) - p1.at(j);
            double d2 = p2.at(i) - p2.at(j);
            if (std::abs(d1) <= tol.p_tie_tol || std::abs(d2) <= tol.p_tie_tol) continue;
            if (d1 * d2 < 0.0) {
                crossing = true;
                break;
            }
        }
    }
    if (!crossing) return {ComonotonicityKind::comonotonic, boundary};
    if (quantum::weakly_comonotonic(r1, r2)) return {ComonotonicityKind::weakly, boundary};
    return {ComonotonicityKind::neither, boundary};
}

std::uint64_t class_count(int n, int d) {
    if (d < 1 || n < d) throw Error("class_count needs n >= d >= 1");
    if (n > 20) throw SubsetLimitExceeded("class_count limited to n <= 20");
    std::uint64_t acc = 1;
    for (int k = n - d + 1; k <= n; ++k) acc *= static_cast<std::uint64_t>(k);
    return acc;
}

PreorderVerdict compare(const ReferenceSet& set,
                        const quantum::ProbabilityVector& p1,
                        const quantum::ProbabilityVector& p2) {
    auto r1 = quantum::ranking(p1, set.tol());
    auto r2 = quantum::ranking(p2, set.tol());
    if (r1.has_ties() || r2.has_ties()) {
        throw BoundaryInput("preorder comparison requires strictly ranked inputs");
    }
    if (r1.sigma != r2.sigma) {
        throw DifferentClass("inputs belong to different comonotone classes");
    }
    double t1 = quantum::choquet(set, p1).traceC;
    double t2 = quantum::choquet(set, p2).traceC;
    Relation rel = Relation::equivalent;
    if (t1 > t2 + 1e-12) rel = Relation::succeeds;
    else if (t2 > t1 + 1e-12) rel = Relation::precedes;
    return {t1, t2, rel};
}

} // namespace choquet::comonotone
