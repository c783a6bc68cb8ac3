#pragma once

#include <cstdint>

#include "choquet/quantum.hpp"

namespace choquet::comonotone {

enum class ComonotonicityKind { comonotonic, weakly, neither };

struct ComonotonicityVerdict {
    ComonotonicityKind kind;
    bool boundary; // either vector has tied probabilities
};

/// Rankings compare under a no-crossing criterion, so ties are compatible
/// with any order of the tied indices.
ComonotonicityVerdict are_comonotonic_states(const quantum::ProbabilityVector& p1,
                                             const quantum::ProbabilityVector& p2,
                                             const Tolerances& tol = {});

/// Number of comonotone equivalence classes: n! / (n-d)!.
std::uint64_t class_count(int n, int d);

enum class Relation { succeeds, precedes, equivalent };

struct PreorderVerdict {
    double left_trace;
    double right_trace;
    Relation relation;
};

/// "More aligned" comparison by Tr[C] inside one strict comonotone class.
/// Throws DifferentClass when rankings differ, BoundaryInput on ties.
PreorderVerdict compare(const ReferenceSet& set,
                        const quantum::ProbabilityVector& p1,
                        const quantum::ProbabilityVector& p2);

} // namespace choquet::comonotone
