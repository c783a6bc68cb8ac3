#pragma once

#include <string>

namespace choquet {

/// Numerical tolerances used across the library. The defaults correspond to
/// the "default" profile; a "strict" profile tightens the validation
/// thresholds by two orders of magnitude.
struct Tolerances {
    double herm_tol = 1e-10;        // max |M - M^dagger| entry for Hermitian inputs
    double psd_tol = 1e-9;          // slack on the minimum eigenvalue for PSD tests
    double trace_tol = 1e-10;       // |trace - 1| slack for density matrices
    double degeneracy_tol = 1e-8;   // eigenvalue gap below which projectors merge
    double rank_tol = 1e-8;         // smallest singular value separating degenerate sets
    double rank_warn = 1e-4;        // below this the set is flagged ill-conditioned
    double unit_norm_tol = 1e-6;    // vectors this close to unit norm are renormalized
    double p_tie_tol = 1e-9;        // probabilities within this are treated as tied
    double bound_tol = 1e-9;        // slack on Proposition-type bound checks
    double cross_check_tol = 1e-10; // agreement between the two integral forms

    static Tolerances profile(const std::string& name);

    /// Reads CHOQUET_TOL_PROFILE (default|strict); unset means default.
    static Tolerances from_env();
};

} // namespace choquet
