#include "choquet/tolerances.hpp"

#include <cstdlib>

#include "choquet/errors.hpp"

namespace choquet {

Tolerances Tolerances::profile(const std::string& name) {
    if (name.empty() || name == "default") return {};
    if (name == "strict") {
        Tolerances t;
        t.herm_tol = 1e-12;
        t.psd_tol = 1e-11;
        t.trace_tol = 1e-12;
        t.rank_tol = 1e-6;
        t.rank_warn = 1e-3;
        t.unit_norm_tol = 1e-9;
        return t;
    }
    throw Error("unknown tolerance profile: " + name);
}

Tolerances Tolerances::from_env() {
    const char* p = std::getenv("CHOQUET_TOL_PROFILE");
    return profile(p ? p : "default");
}

} // namespace choquet
