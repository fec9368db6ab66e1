// acceptance — end-to-end criteria for the library and CLI, one line each.

#include "symdyn/circuit_qed.hpp"
#include "symdyn/cli.hpp"
#include "symdyn/decomposition.hpp"
#include "symdyn/evolution.hpp"
#include "symdyn/gaussian_states.hpp"
#include "symdyn/higher_order.hpp"
#include "symdyn/sweep.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace symdyn;

namespace {

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%2d] %-34s %s  (%s)\n", index, name.c_str(), pass ? "PASS" : "FAIL",
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct GridPoint {
    HamiltonianParams p;
    double t;
};

// omega_a in [0.7, 1.5], omega_b in [0.4, 1.2] (never resonant), g up to
// 0.9 g_cr, t in [0.1, 5].
std::vector<GridPoint> standard_grid() {
    std::vector<GridPoint> grid;
    for (int ia = 0; ia < 5; ++ia) {
        for (int ib = 0; ib < 5; ++ib) {
            const double wa = 0.7 + 0.2 * ia;
            const double wb = 0.4 + 0.2 * ib;
            if (std::abs(wa - wb) < 1e-9) continue;
            HamiltonianParams base{wa, wb, 0, 0, 0, 0};
            const double gcr = critical_coupling(base);
            for (int ig = 0; ig < 5; ++ig) {
                for (int it = 0; it < 5; ++it) {
                    GridPoint pt;
                    pt.p = base;
                    pt.p.g_bs = pt.p.g_sq = 0.9 * gcr * ig / 4.0;
                    pt.t = 0.1 + (5.0 - 0.1) * it / 4.0;
                    grid.push_back(pt);
                }
            }
        }
    }
    return grid;
}

void criterion_1_oracle_equivalence() {
    const auto grid = standard_grid();
    const auto t0 = std::chrono::steady_clock::now();
    const auto errors = sweep_parallel(grid.size(), [&](std::size_t i) {
        const auto& [p, t] = grid[i];
        const EvolutionMatrix ev = evolve_operator(analytic_bogoliubov(p), t);
        const Matrix oracle = expm(symplectic_form(2) * build_matrix(p).h * t);
        return max_abs_diff(ev.s, oracle);
    });
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double worst = *std::max_element(errors.begin(), errors.end());
    report(1, "S(t) matches expm oracle", worst < 1e-8 && seconds < 10.0,
           "max err " + fmt(worst) + " over " + std::to_string(grid.size()) +
               " points in " + fmt(seconds) + " s");
}

void criterion_2_closed_form_routes() {
    double worst = 0.0;
    for (const auto& [p, t] : standard_grid()) {
        const EvolutionMatrix assembly = evolve_operator(analytic_bogoliubov(p), t);
        const EvolutionMatrix closed = explicit_coefficients(p, t);
        worst = std::max(worst, max_abs_diff(assembly.s, closed.s));
    }
    report(2, "closed-form coefficient route", worst < 1e-10, "max err " + fmt(worst));
}

void criterion_3_symplectic_spectrum() {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    double worst = 0.0;
    int checked = 0;
    while (checked < 60) {
        HamiltonianParams p;
        p.omega_a = 0.4 + dist(rng);
        p.omega_b = 0.4 + dist(rng);
        p.g_bs = 0.5 * (dist(rng) - 0.3);
        p.g_sq = 0.5 * (dist(rng) - 0.3);
        p.lambda_a = 0.25 * (dist(rng) - 0.5);
        p.lambda_b = 0.25 * (dist(rng) - 0.5);
        const SymplecticSpectrum s = symplectic_eigenvalues(p);
        if (!s.stable) continue;
        ++checked;
        const Matrix m = Complex(0, 1) * symplectic_form(2) * build_matrix(p).h;
        const EigenSystem sys = eig(m);
        std::vector<double> mags;
        for (int i = 0; i < 4; ++i) mags.push_back(std::abs(sys.values(i)));
        std::sort(mags.begin(), mags.end(), std::greater<>());
        worst = std::max(worst, std::abs(mags[0] - s.kappa_plus));
        worst = std::max(worst, std::abs(mags[2] - s.kappa_minus));
    }
    report(3, "closed-form symplectic spectrum", worst < 1e-10,
           "max err " + fmt(worst) + " incl. g_bs != g_sq, lambda != 0");
}

void criterion_4_critical_coupling() {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    double worst_rel = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        HamiltonianParams p;
        p.omega_a = 0.5 + dist(rng);
        p.omega_b = 0.5 + dist(rng);
        p.lambda_a = 0.3 * (dist(rng) - 0.5);
        p.lambda_b = 0.3 * (dist(rng) - 0.5);
        const double gcr = critical_coupling(p);
        auto km2 = [&](double g) {
            HamiltonianParams q = p;
            q.g_bs = q.g_sq = g;
            return symplectic_eigenvalues(q).kappa_minus_sq;
        };
        double lo = 0.0, hi = 2.0 * gcr;
        for (int it = 0; it < 90; ++it) {
            const double mid = 0.5 * (lo + hi);
            (km2(mid) > 0.0 ? lo : hi) = mid;
        }
        worst_rel = std::max(worst_rel, std::abs(0.5 * (lo + hi) - gcr) / gcr);
    }
    const double plain = critical_coupling({1.3, 0.7, 0, 0, 0, 0});
    const bool special = plain == 0.5 * std::sqrt(1.3 * 0.7);
    report(4, "critical coupling vs bisection", worst_rel < 1e-9 && special,
           "max rel err " + fmt(worst_rel) + ", lambda=0 case exact");
}

void criterion_5_critical_exponent() {
    std::vector<double> eps;
    for (int i = 0; i < 13; ++i) eps.push_back(std::pow(10.0, -6.0 + 0.25 * i));
    const ExponentFit fit0 = critical_exponent_fit({1.3, 0.7, 0, 0, 0, 0}, eps);
    const ExponentFit fit1 = critical_exponent_fit({1.3, 0.7, 0, 0, 0.05, 0.03}, eps);
    const bool pass =
        std::abs(fit0.exponent - 0.5) < 0.005 && std::abs(fit1.exponent - 0.5) < 0.005;
    report(5, "critical exponent 1/2", pass,
           "fits " + fmt(fit0.exponent) + ", " + fmt(fit1.exponent));
}

void criterion_6_purity_conservation() {
    const BogoliubovPair pair = analytic_bogoliubov({1.3, 0.7, 0.2, 0.2, 0.05, 0.03});
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> dist(0.0, 50.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const GaussianState st =
            propagate(vacuum(2), evolve_operator(pair, dist(rng)));
        for (double nu : williamson_eigenvalues(st.sigma()))
            worst = std::max(worst, std::abs(nu - 1.0));
    }
    report(6, "purity conservation", worst < 1e-8, "max |nu - 1| " + fmt(worst));
}

void criterion_7_excitation_routes() {
    double worst = 0.0, most_negative = 0.0;
    bool zero_at_start = true;
    for (const auto& [p, t] : standard_grid()) {
        const BogoliubovPair pair = analytic_bogoliubov(p);
        const double trace_route =
            excitation_number(propagate(vacuum(2), evolve_operator(pair, t)));
        const double coeff_route = vacuum_excitations_closed_form(pair, t);
        worst = std::max(worst, std::abs(trace_route - coeff_route));
        most_negative = std::min(most_negative, trace_route);
        zero_at_start = zero_at_start &&
                        std::abs(vacuum_excitations_closed_form(pair, 0.0)) < 1e-12;
    }
    report(7, "excitation-number route equality",
           worst < 1e-9 && most_negative > -1e-12 && zero_at_start,
           "max gap " + fmt(worst) + ", min N " + fmt(most_negative));
}

void criterion_8_entanglement() {
    const EvolutionMatrix ev = evolve_operator(analytic_bogoliubov({1.3, 0.7, 0.2, 0.2, 0, 0}), 1.0);
    const GaussianState st = propagate(vacuum(2), ev);
    const double pops = std::norm(ev.b(0, 0)) + std::norm(ev.b(0, 1));
    const double cross = std::abs(ev.a(0, 0) * ev.b(0, 0) + ev.a(0, 1) * ev.b(0, 1));
    const double nu_closed = std::sqrt(std::pow(1.0 + 2.0 * pops, 2) - 4.0 * cross * cross);
    const double nu_err = std::abs(entanglement_report(st).nu_reduced - nu_closed);

    double tms_err = 0.0;
    for (double r : {0.2, 0.5, 1.0})
        tms_err = std::max(tms_err, std::abs(entanglement_report(two_mode_squeezed(r))
                                                 .nu_tilde_minus -
                                             std::exp(-2.0 * r)));

    bool uncoupled_clean = true;
    const BogoliubovPair free = analytic_bogoliubov({1.3, 0.7, 0, 0, 0, 0});
    for (double t : {0.3, 1.9, 6.4})
        uncoupled_clean = uncoupled_clean &&
                          !entanglement_report(propagate(vacuum(2), evolve_operator(free, t)))
                               .entangled;

    report(8, "entanglement diagnostics", nu_err < 1e-9 && tms_err < 1e-9 && uncoupled_clean,
           "nu err " + fmt(nu_err) + ", PT err " + fmt(tms_err));
}

void criterion_9_decomposition_roundtrip() {
    double worst = 0.0;
    for (const auto& [p, t] : standard_grid()) {
        const BogoliubovPair pair = analytic_bogoliubov(p);
        const CircuitDecomposition dec = decompose(pair, p, t);
        worst = std::max(worst, dec.residual);
    }
    // identity-time configuration: kappas 2.2 and 0.8 at t = 10 pi
    HamiltonianParams p;
    p.omega_a = 2.0;
    p.omega_b = std::sqrt(2.2 * 2.2 + 0.8 * 0.8 - 4.0);
    p.g_bs = p.g_sq = std::sqrt(
        (4.0 * p.omega_b * p.omega_b - std::pow(2.2 * 0.8, 2)) / (8.0 * p.omega_b));
    const CircuitDecomposition dec =
        decompose(analytic_bogoliubov(p), p, 10.0 * std::acos(-1.0));
    const double id_err = max_abs_diff(reconstruct(dec).s, Matrix::Identity(4, 4));
    report(9, "decomposition roundtrip", worst < 1e-8 && id_err < 1e-8,
           "max residual " + fmt(worst) + ", identity err " + fmt(id_err));
}

void criterion_10_higher_order() {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    double worst_two = 0.0;
    double best_one = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 10; ++trial) {
        const double w = 0.5 + dist(rng);
        const double g = 1.2 * (dist(rng) - 0.5);
        const double lam2 = 0.15 * (dist(rng) - 0.5);
        const std::vector<double> lambdas{1.0, lam2};
        const std::vector<double> poly = polynomial_levels_cte_excluded(lambdas, w, g, 11);
        const auto gap = [&](const FockOracleResult& res) {
            double worst = 0.0;
            for (double e : res.interior) {
                double best = std::numeric_limits<double>::infinity();
                for (double q : poly) best = std::min(best, std::abs(q - e));
                worst = std::max(worst, best);
            }
            return res.interior.empty() ? std::numeric_limits<double>::infinity() : worst;
        };
        worst_two = std::max(
            worst_two, gap(fock_bruteforce_oracle(lambdas, w, g, 10, CAbabVariant::factor_two)));
        best_one = std::min(
            best_one, gap(fock_bruteforce_oracle(lambdas, w, g, 10, CAbabVariant::alpha_product)));
    }
    report(10, "higher-order spectrum vs Fock oracle",
           worst_two < 1e-7 && best_one > 1e-4,
           "factor-two err " + fmt(worst_two) + "; alpha-product variant off by " +
               fmt(best_one) + " -> factor two adjudicated");
}

void criterion_11_multimode() {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const std::vector<double> omegas{0.7 + dist(rng), 0.6 + dist(rng), 0.5 + dist(rng)};
        const std::map<std::pair<int, int>, double> couplings{
            {{0, 1}, 0.08 * dist(rng)}, {{1, 2}, 0.08 * dist(rng)}, {{2, 0}, 0.08 * dist(rng)}};
        const HamiltonianMatrix h = coupled_chain(omegas, couplings);
        const double t = 0.2 + 4.0 * dist(rng);
        const EvolutionMatrix ev = evolve_operator_multimode(h, t);
        const Matrix oracle = expm(symplectic_form(3) * h.h * t);
        worst = std::max(worst, max_abs_diff(ev.s, oracle));
    }
    report(11, "three-mode chain vs expm oracle", worst < 1e-8, "max err " + fmt(worst));
}

void criterion_12_cli_determinism(const std::string& binary) {
    const std::string config_path = "acceptance_config.json";
    {
        std::ofstream cfg(config_path);
        cfg << R"({"hamiltonian": {"omega_a": 1.3, "omega_b": 0.7, "g": 0.2,
                                   "lambda_a": 0.05, "lambda_b": 0.03},
                   "initial_state": {"type": "vacuum"},
                   "time_grid": {"t_start": 0.0, "t_end": 10.0, "n_steps": 101}})";
    }
    auto run_once = [&](const std::string& out) {
        const std::string cmd = binary + " evolve " + config_path + " --output " + out;
        return std::system(cmd.c_str());
    };
    const int rc1 = run_once("acceptance_run1.csv");
    const int rc2 = run_once("acceptance_run2.csv");
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string a = slurp("acceptance_run1.csv");
    const std::string b = slurp("acceptance_run2.csv");
    const bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    report(12, "CLI byte-identical reruns", pass,
           "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2) + ", " +
               std::to_string(a.size()) + " bytes");
    std::remove(config_path.c_str());
    std::remove("acceptance_run1.csv");
    std::remove("acceptance_run2.csv");
}

}  // namespace

int main(int argc, char** argv) {
    criterion_1_oracle_equivalence();
    criterion_2_closed_form_routes();
    criterion_3_symplectic_spectrum();
    criterion_4_critical_coupling();
    criterion_5_critical_exponent();
    criterion_6_purity_conservation();
    criterion_7_excitation_routes();
    criterion_8_entanglement();
    criterion_9_decomposition_roundtrip();
    criterion_10_higher_order();
    criterion_11_multimode();
    if (argc > 1) {
        criterion_12_cli_determinism(argv[1]);
    } else {
        report(12, "CLI byte-identical reruns", false, "no CLI binary path given");
    }
    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", failures);
    return 1;
}
