// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtime limits are wall-clock on the already-warm code paths.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "choquet/comonotone.hpp"
#include "choquet/family.hpp"
#include "choquet/quantum.hpp"
#include "test_support.hpp"

using namespace choquet;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const char* title, bool ok, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// 1. Classical worked example, both task orders, exact to 1e-12, < 1 ms.
void criterion_1() {
    auto mu = support::students_capacity();
    auto start = Clock::now();
    bool ok = true;
    for (double lam : {0.5, 1.0, 2.0, 2.9}) {
        double a = classical::choquet_integral(classical::RankedFunction({5, lam, 3}), mu);
        double b = classical::choquet_integral(classical::RankedFunction({5, 3, lam}), mu);
        ok = ok && std::abs(a - (0.85 + 0.05 * lam)) <= 1e-12;
        ok = ok && std::abs(b - (0.7 + 0.1 * lam)) <= 1e-12;
    }
    double elapsed = ms_since(start);
    ok = ok && elapsed < 1.0;
    report(1, "classical example integrals", ok,
           "8 integrals in " + std::to_string(elapsed) + " ms");
}

// 2. Quantum worked example: ranking, projector, C, Tr[C], induced, error, < 10 ms.
void criterion_2() {
    auto fresh = support::example_set();
    auto start = Clock::now();
    auto rep = quantum::choquet(fresh, support::example_p());
    double elapsed = ms_since(start);

    bool ok = rep.ranking.sigma == std::vector<int>{0, 2, 3, 1};

    Matrix pi42(3, 3);
    pi42 << 0.5, 0, 0.5, 0, 1, 0, 0.5, 0, 0.5;
    ok = ok && support::max_abs(fresh.projector(0b1010).mat() - pi42) <= 1e-10;

    Matrix c_expect(3, 3);
    c_expect << 0.55, 0, 0.15, 0, 0.50, 0, 0.15, 0, 0.55;
    ok = ok && support::max_abs(rep.C.mat() - c_expect) <= 1e-10;
    ok = ok && std::abs(rep.traceC - 1.6) <= 1e-10;

    const double expect_induced[4] = {0.34375, 0.4375, 0.328125, 0.4236111111};
    for (int i = 0; i < 4; ++i) {
        ok = ok && std::abs(rep.induced[i] - expect_induced[i]) <= 1e-8;
    }
    ok = ok && std::abs(rep.error + 0.07) <= 0.005;
    ok = ok && elapsed < 10.0;
    report(2, "quantum example pipeline", ok, std::to_string(elapsed) + " ms");
}

// 3. Eigenvalue bounds of Q and Q_sigma, and the two bound inequalities.
void criterion_3() {
    auto set = support::example_set();
    auto rep = quantum::choquet(set, support::example_p());
    bool ok = std::abs(rep.e_min_q - 0.04) <= 0.01 && std::abs(rep.e_max_q - 0.71) <= 0.005;
    ok = ok && std::abs(rep.e_min_sigma - 0.007) <= 0.001 &&
         std::abs(rep.e_max_sigma - 0.816) <= 0.001;
    double mean_p = 0.45;
    ok = ok && mean_p >= rep.e_min_q && mean_p <= rep.e_max_q;
    double trace_over_d = rep.traceC / 3.0;
    ok = ok && trace_over_d >= rep.e_min_sigma && trace_over_d <= rep.e_max_sigma;
    report(3, "spectral bounds", ok);
}

// 4. Property suite on 1000 random instances.
void criterion_4() {
    auto start = Clock::now();
    std::mt19937_64 rng(0xACCE);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n_max = std::min(8, d * d - 1);
        int n = d + static_cast<int>(rng() % (n_max - d + 1));
        auto set = support::random_reference_set(d, n, rng);
        auto p = support::random_strict_p(set, rng);
        auto sigma = quantum::ranking(p);
        auto chain = quantum::cumulative_chain(set, sigma);

        // varpi completeness and orthogonality.
        Matrix sum = Matrix::Zero(d, d);
        for (int i = n - d; i < n; ++i) sum += chain.varpi[i].mat();
        if (support::max_abs(sum - Matrix::Identity(d, d)) > 1e-8) {
            ok = false;
            detail = "varpi completeness";
            break;
        }
        for (int i = n - d; i < n && ok; ++i) {
            for (int j = n - d; j < n; ++j) {
                Matrix prod = chain.varpi[i].mat() * chain.varpi[j].mat();
                Matrix expect = (i == j) ? chain.varpi[i].mat() : Matrix::Zero(d, d);
                if (support::max_abs(prod - expect) > 1e-8) {
                    ok = false;
                    detail = "varpi orthogonality";
                    break;
                }
            }
        }
        if (!ok) break;

        // Direct vs telescoped form.
        auto c = quantum::assemble_choquet(p, sigma, chain);
        Matrix tele = p.at(sigma.sigma[n - d]) * Matrix::Identity(d, d);
        for (int i = n - d + 1; i < n; ++i) {
            tele += (p.at(sigma.sigma[i]) - p.at(sigma.sigma[i - 1])) * chain.pi[i].mat();
        }
        if (support::max_abs(tele - c.mat()) > 1e-10) {
            ok = false;
            detail = "integral form agreement";
            break;
        }

        // Tie-swap invariance: force a tie by duplicating one probability.
        {
            std::vector<double> tied = p.values();
            tied[sigma.sigma[1]] = tied[sigma.sigma[0]];
            quantum::ProbabilityVector pt(tied);
            auto rt = quantum::ranking(pt);
            auto ct1 = quantum::assemble_choquet(pt, rt, quantum::cumulative_chain(set, rt));
            auto rt2 = rt;
            std::swap(rt2.sigma[0], rt2.sigma[1]);
            auto ct2 = quantum::assemble_choquet(pt, rt2, quantum::cumulative_chain(set, rt2));
            if (support::max_abs(ct1.mat() - ct2.mat()) > 1e-10) {
                ok = false;
                detail = "tie-swap invariance";
                break;
            }
        }

        // Moebius-operator expansion equals the direct integral.
        auto via = quantum::choquet_via_mobius_operators(set, p);
        if (support::max_abs(via.mat() - c.mat()) > 1e-8) {
            ok = false;
            detail = "Moebius-operator expansion";
            break;
        }

        // Operator Moebius inverse roundtrip on a random subset.
        Mask a = (static_cast<Mask>(rng()) & set.full_mask());
        if (a == 0) a = set.full_mask();
        Matrix acc = Matrix::Zero(d, d);
        for (Mask b = a;; b = (b - 1) & a) {
            if (b != 0) acc += set.mobius_operator(b).mat();
            if (b == 0) break;
        }
        if (support::max_abs(acc - set.projector(a).mat()) > 1e-8) {
            ok = false;
            detail = "operator Moebius inverse";
            break;
        }
    }
    double elapsed = ms_since(start);
    ok = ok && elapsed < 60000.0;
    report(4, "random-instance property suite", ok,
           detail.empty() ? std::to_string(elapsed / 1000.0) + " s" : detail);
}

// 5. Comonotone properties on 500 random comonotonic pairs.
void criterion_5() {
    std::mt19937_64 rng(0xC0C0);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 500 && ok; ++trial) {
        int d = 2 + static_cast<int>(rng() % 2);
        int n = d + 1;
        auto set = support::random_reference_set(d, n, rng);
        auto p1 = support::random_strict_p(set, rng);
        auto sigma = quantum::ranking(p1).sigma;
        auto p2 = support::random_p_with_ranking(set, sigma, rng);

        auto c1 = quantum::choquet(set, p1).C;
        auto c2 = quantum::choquet(set, p2).C;

        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double lam = uni(rng);
        std::vector<double> mix(n);
        for (int i = 0; i < n; ++i) mix[i] = lam * p1.at(i) + (1 - lam) * p2.at(i);
        auto cm = quantum::choquet(set, quantum::ProbabilityVector(mix)).C;
        if (support::max_abs(cm.mat() - (lam * c1.mat() + (1 - lam) * c2.mat())) > 1e-10) {
            ok = false;
            detail = "comonotonic additivity";
            break;
        }
        if (support::max_abs(c1.mat() * c2.mat() - c2.mat() * c1.mat()) > 1e-9) {
            ok = false;
            detail = "commutation";
            break;
        }
    }

    // Convexity on density-matrix-generated pairs.
    for (int trial = 0; trial < 100 && ok; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        auto set = support::random_reference_set(d, d + 1, rng);
        auto r1 = support::random_density_matrix(d, rng);
        auto r2 = support::random_density_matrix(d, rng);
        double t1 = quantum::choquet(set, quantum::measure(set, r1)).traceC;
        double t2 = quantum::choquet(set, quantum::measure(set, r2)).traceC;
        for (double lam : {0.25, 0.5, 0.75}) {
            Matrix mix = lam * r1.mat() + (1 - lam) * r2.mat();
            double tm = quantum::choquet(set, quantum::measure(set, DensityMatrix(
                                                    HermitianMatrix(mix)))).traceC;
            if (tm > lam * t1 + (1 - lam) * t2 + 1e-9) {
                ok = false;
                detail = "trace convexity";
                break;
            }
        }
    }

    // Preorder preservation: betweenness and mixture monotonicity by traces.
    for (int trial = 0; trial < 100 && ok; ++trial) {
        auto set = support::random_reference_set(2, 3, rng);
        auto p1 = support::random_strict_p(set, rng);
        auto sigma = quantum::ranking(p1).sigma;
        auto p2 = support::random_p_with_ranking(set, sigma, rng);
        auto p3 = support::random_p_with_ranking(set, sigma, rng);
        double t1 = quantum::choquet(set, p1).traceC;
        double t2 = quantum::choquet(set, p2).traceC;
        if (t1 < t2) {
            std::swap(p1, p2);
            std::swap(t1, t2);
        }
        for (double lam : {0.3, 0.7}) {
            std::vector<double> between(3), m1(3), m2(3);
            for (int i = 0; i < 3; ++i) {
                between[i] = lam * p1.at(i) + (1 - lam) * p2.at(i);
                m1[i] = lam * p1.at(i) + (1 - lam) * p3.at(i);
                m2[i] = lam * p2.at(i) + (1 - lam) * p3.at(i);
            }
            double tb = quantum::choquet(set, quantum::ProbabilityVector(between)).traceC;
            if (!(t1 >= tb - 1e-12 && tb >= t2 - 1e-12)) {
                ok = false;
                detail = "betweenness";
                break;
            }
            double tm1 = quantum::choquet(set, quantum::ProbabilityVector(m1)).traceC;
            double tm2 = quantum::choquet(set, quantum::ProbabilityVector(m2)).traceC;
            if (tm1 < tm2 - 1e-12) {
                ok = false;
                detail = "mixture preservation";
                break;
            }
        }
    }
    report(5, "comonotone class properties", ok, detail);
}

// 6. Proposition 10 maximality and the equality case.
void criterion_6() {
    std::mt19937_64 rng(0xF00D);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int d = 2 + static_cast<int>(rng() % 3);
        int n_max = std::min(8, d * d - 1);
        int n = d + static_cast<int>(rng() % (n_max - d + 1));
        auto set = support::random_reference_set(d, n, rng);
        auto p = support::random_strict_p(set, rng);
        auto rep = quantum::choquet(set, p);
        double top = rep.induced[rep.ranking.top()];
        double max_all = *std::max_element(rep.induced.begin(), rep.induced.end());
        if (top < max_all - 1e-9) {
            ok = false;
            detail = "maximality";
            break;
        }
        double eq = trace_product(rep.C, set.projector(Mask{1} << rep.ranking.top()));
        if (std::abs(eq - p.at(rep.ranking.top())) > 1e-10) {
            ok = false;
            detail = "equality case";
            break;
        }
    }
    report(6, "induced-probability maximality", ok, detail);
}

// 7. Family solver on the worked example.
void criterion_7() {
    auto set = support::example_set();
    auto p = support::example_p();
    auto fam = family::solve_family(set, p);
    bool ok = fam.free_dimension() == 4;
    std::mt19937_64 rng(0xFA41);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int s = 0; s < 2 && ok; ++s) {
        Eigen::VectorXd coeffs(fam.free_dimension());
        for (int k = 0; k < coeffs.size(); ++k) coeffs(k) = uni(rng);
        Matrix m = fam.member(coeffs);
        double rho22 = m(1, 1).real();
        ok = ok && std::abs(m(0, 0).real() - 0.2) <= 1e-9;
        ok = ok && std::abs(m(1, 2).real()) <= 1e-9;
        ok = ok && std::abs(m(0, 1).real() + (1.1 + rho22) / 4.0) <= 1e-9;
        ok = ok && std::abs(m(0, 2).real() - (0.4 + rho22) / 2.0) <= 1e-9;
        for (int i = 0; i < set.n(); ++i) {
            double tr = (m * set.projector(Mask{1} << i).mat()).trace().real();
            ok = ok && std::abs(tr - p.at(i)) <= 1e-9;
        }
    }
    report(7, "family solver constraints", ok);
}

// 8. Classical equivalence and Moebius roundtrip on 200 random capacities.
void criterion_8() {
    std::mt19937_64 rng(0xCAFE);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    bool ok = true;
    std::string detail;
    for (int trial = 0; trial < 200 && ok; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<double> v(std::size_t{1} << n, 0.0);
        for (classical::Mask a = 1; a < v.size(); ++a) {
            double lo = 0.0;
            for (int b = 0; b < n; ++b) {
                if (a & (classical::Mask{1} << b)) {
                    lo = std::max(lo, v[a ^ (classical::Mask{1} << b)]);
                }
            }
            v[a] = lo + uni(rng) * 0.2;
        }
        classical::Capacity mu(n, v);
        auto mob = classical::mobius(mu);

        auto back = mob.inverse();
        for (classical::Mask a = 0; a < back.size(); ++a) {
            if (std::abs(back[a] - mu.at(a)) > 1e-10) {
                ok = false;
                detail = "Moebius roundtrip";
                break;
            }
        }
        if (!ok) break;

        std::vector<double> f(n);
        for (double& x : f) x = uni(rng) * 4.0;
        classical::RankedFunction rf(f);
        double direct = classical::choquet_integral(rf, mu);
        double via = classical::choquet_via_mobius(rf, mob);
        if (std::abs(direct - via) > 1e-10) {
            ok = false;
            detail = "integral equivalence";
        }
    }
    report(8, "classical random equivalences", ok, detail);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criteria failed\n", failures);
    }
    return failures == 0 ? 0 : 1;
}
