#include "symdyn/cli.hpp"

#include "symdyn/decomposition.hpp"
#include "symdyn/evolution.hpp"
#include "symdyn/gaussian_states.hpp"
#include "symdyn/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace symdyn::cli {

using nlohmann::json;
using nlohmann::ordered_json;

HamiltonianParams ExperimentConfig::resolved_params() const {
    if (hamiltonian) return *hamiltonian;
    if (circuit) return to_hamiltonian(derive_circuit(*circuit));
    throw ConfigError("config has no Hamiltonian source");
}

namespace {

double require_number(const json& obj, const std::string& key) {
    if (!obj.contains(key) || !obj[key].is_number())
        throw ConfigError("missing or non-numeric field '" + key + "'");
    return obj[key].get<double>();
}

double optional_number(const json& obj, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number()) throw ConfigError("non-numeric field '" + key + "'");
    return obj[key].get<double>();
}

void reject_unknown(const json& obj, const std::set<std::string>& known,
                    const std::string& where) {
    for (const auto& [key, value] : obj.items())
        if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

HamiltonianParams parse_hamiltonian(const json& h) {
    reject_unknown(h, {"omega_a", "omega_b", "g", "g_bs", "g_sq", "lambda_a", "lambda_b"},
                   "hamiltonian");
    HamiltonianParams p;
    p.omega_a = require_number(h, "omega_a");
    p.omega_b = require_number(h, "omega_b");
    if (h.contains("g") && (h.contains("g_bs") || h.contains("g_sq")))
        throw ConfigError("give either 'g' or 'g_bs'/'g_sq', not both");
    if (h.contains("g")) {
        p.g_bs = p.g_sq = require_number(h, "g");
    } else {
        p.g_bs = optional_number(h, "g_bs", 0.0);
        p.g_sq = optional_number(h, "g_sq", 0.0);
    }
    p.lambda_a = optional_number(h, "lambda_a", 0.0);
    p.lambda_b = optional_number(h, "lambda_b", 0.0);
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return p;
}

CircuitParams parse_circuit(const json& c) {
    reject_unknown(c, {"c1", "c2", "c_c", "l1", "l2", "l_c"}, "circuit");
    CircuitParams p{require_number(c, "c1"), require_number(c, "c2"),
                    require_number(c, "c_c"), require_number(c, "l1"),
                    require_number(c, "l2"), require_number(c, "l_c")};
    try {
        p.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return p;
}

InitialStateSpec parse_initial_state(const json& s) {
    reject_unknown(s, {"type", "nu_plus", "nu_minus", "r"}, "initial_state");
    if (!s.contains("type") || !s["type"].is_string())
        throw ConfigError("initial_state needs a string 'type'");
    InitialStateSpec spec;
    const std::string type = s["type"].get<std::string>();
    if (type == "vacuum") {
        spec.kind = InitialStateSpec::Kind::vacuum;
    } else if (type == "thermal") {
        spec.kind = InitialStateSpec::Kind::thermal;
        spec.nu_plus = require_number(s, "nu_plus");
        spec.nu_minus = require_number(s, "nu_minus");
        if (spec.nu_plus < 1.0 || spec.nu_minus < 1.0)
            throw ConfigError("thermal state needs nu >= 1");
    } else if (type == "two_mode_squeezed") {
        spec.kind = InitialStateSpec::Kind::two_mode_squeezed;
        spec.r = require_number(s, "r");
    } else {
        throw ConfigError("unknown initial_state type '" + type + "'");
    }
    return spec;
}

GaussianState build_initial_state(const InitialStateSpec& spec) {
    switch (spec.kind) {
        case InitialStateSpec::Kind::thermal:
            return thermal(spec.nu_plus, spec.nu_minus);
        case InitialStateSpec::Kind::two_mode_squeezed:
            return two_mode_squeezed(spec.r);
        case InitialStateSpec::Kind::vacuum:
        default:
            return vacuum(2);
    }
}

std::vector<double> sweep_values(const SweepSpec& sw) {
    std::vector<double> values;
    if (sw.points == 1) {
        values.push_back(sw.from);
        return values;
    }
    if (sw.log_spacing) {
        const double lf = std::log(sw.from), lt = std::log(sw.to);
        for (int i = 0; i < sw.points; ++i)
            values.push_back(std::exp(lf + (lt - lf) * i / (sw.points - 1)));
    } else {
        for (int i = 0; i < sw.points; ++i)
            values.push_back(sw.from + (sw.to - sw.from) * i / (sw.points - 1));
    }
    return values;
}

HamiltonianParams with_swept_value(HamiltonianParams p, const std::string& name, double v) {
    if (name == "g") {
        p.g_bs = p.g_sq = v;
    } else if (name == "g_bs") {
        p.g_bs = v;
    } else if (name == "g_sq") {
        p.g_sq = v;
    } else if (name == "lambda_a") {
        p.lambda_a = v;
    } else if (name == "lambda_b") {
        p.lambda_b = v;
    } else if (name == "omega_a") {
        p.omega_a = v;
    } else if (name == "omega_b") {
        p.omega_b = v;
    } else {
        throw ConfigError("unknown sweep parameter '" + name + "'");
    }
    return p;
}

double reference_critical_coupling(const HamiltonianParams& p) {
    try {
        return critical_coupling(p);
    } catch (const std::invalid_argument&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    reject_unknown(doc, {"hamiltonian", "circuit", "initial_state", "time_grid", "outputs",
                         "sweep"},
                   "config");

    ExperimentConfig config;
    if (doc.contains("hamiltonian")) config.hamiltonian = parse_hamiltonian(doc["hamiltonian"]);
    if (doc.contains("circuit")) config.circuit = parse_circuit(doc["circuit"]);
    if (config.hamiltonian.has_value() == config.circuit.has_value())
        throw ConfigError("config needs exactly one of 'hamiltonian' or 'circuit'");

    if (doc.contains("initial_state"))
        config.initial_state = parse_initial_state(doc["initial_state"]);

    if (doc.contains("time_grid")) {
        const json& tg = doc["time_grid"];
        reject_unknown(tg, {"t_start", "t_end", "n_steps"}, "time_grid");
        config.time_grid.t_start = require_number(tg, "t_start");
        config.time_grid.t_end = require_number(tg, "t_end");
        if (!tg.contains("n_steps") || !tg["n_steps"].is_number_integer())
            throw ConfigError("time_grid needs integer 'n_steps'");
        config.time_grid.n_steps = tg["n_steps"].get<int>();
        if (config.time_grid.n_steps < 1) throw ConfigError("n_steps must be >= 1");
        if (config.time_grid.t_end < config.time_grid.t_start)
            throw ConfigError("t_end must be >= t_start");
    }

    if (doc.contains("outputs")) {
        if (!doc["outputs"].is_array() || doc["outputs"].empty())
            throw ConfigError("outputs must be a non-empty array");
        config.outputs.clear();
        for (const auto& o : doc["outputs"]) {
            const std::string name = o.get<std::string>();
            if (name != "n" && name != "s_vn" && name != "nu_tilde_minus")
                throw ConfigError("unknown output '" + name + "'");
            config.outputs.push_back(name);
        }
    }

    if (doc.contains("sweep")) {
        const json& sw = doc["sweep"];
        reject_unknown(sw, {"parameter", "from", "to", "points", "spacing", "time"}, "sweep");
        SweepSpec spec;
        if (!sw.contains("parameter") || !sw["parameter"].is_string())
            throw ConfigError("sweep needs a string 'parameter'");
        spec.parameter = sw["parameter"].get<std::string>();
        with_swept_value(HamiltonianParams{}, spec.parameter, 0.1);  // name check
        spec.from = require_number(sw, "from");
        spec.to = require_number(sw, "to");
        if (!sw.contains("points") || !sw["points"].is_number_integer() ||
            sw["points"].get<int>() < 1)
            throw ConfigError("sweep needs integer 'points' >= 1");
        spec.points = sw["points"].get<int>();
        if (sw.contains("spacing")) {
            const std::string spacing = sw["spacing"].get<std::string>();
            if (spacing == "log") {
                spec.log_spacing = true;
            } else if (spacing != "linear") {
                throw ConfigError("sweep spacing must be 'linear' or 'log'");
            }
        }
        if (spec.log_spacing && (spec.from <= 0.0 || spec.to <= 0.0))
            throw ConfigError("log spacing needs positive endpoints");
        spec.time = optional_number(sw, "time", 1.0);
        config.sweep = spec;
    }
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

ordered_json config_to_json(const ExperimentConfig& config) {
    ordered_json doc;
    if (config.hamiltonian) {
        const HamiltonianParams& p = *config.hamiltonian;
        doc["hamiltonian"] = {{"omega_a", p.omega_a}, {"omega_b", p.omega_b},
                              {"g_bs", p.g_bs},       {"g_sq", p.g_sq},
                              {"lambda_a", p.lambda_a}, {"lambda_b", p.lambda_b}};
    } else if (config.circuit) {
        const CircuitParams& c = *config.circuit;
        doc["circuit"] = {{"c1", c.c1}, {"c2", c.c2}, {"c_c", c.c_c},
                          {"l1", c.l1}, {"l2", c.l2}, {"l_c", c.l_c}};
    }
    switch (config.initial_state.kind) {
        case InitialStateSpec::Kind::vacuum:
            doc["initial_state"] = {{"type", "vacuum"}};
            break;
        case InitialStateSpec::Kind::thermal:
            doc["initial_state"] = {{"type", "thermal"},
                                    {"nu_plus", config.initial_state.nu_plus},
                                    {"nu_minus", config.initial_state.nu_minus}};
            break;
        case InitialStateSpec::Kind::two_mode_squeezed:
            doc["initial_state"] = {{"type", "two_mode_squeezed"},
                                    {"r", config.initial_state.r}};
            break;
    }
    doc["time_grid"] = {{"t_start", config.time_grid.t_start},
                        {"t_end", config.time_grid.t_end},
                        {"n_steps", config.time_grid.n_steps}};
    doc["outputs"] = config.outputs;
    if (config.sweep) {
        doc["sweep"] = {{"parameter", config.sweep->parameter},
                        {"from", config.sweep->from},
                        {"to", config.sweep->to},
                        {"points", config.sweep->points},
                        {"spacing", config.sweep->log_spacing ? "log" : "linear"},
                        {"time", config.sweep->time}};
    }
    return doc;
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[64];
    for (int precision = 1; precision < 12; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
        if (std::strtod(buf, nullptr) == x) return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

BogoliubovPair make_pair(const HamiltonianParams& p) {
    const SymplecticSpectrum spec = symplectic_eigenvalues(p);
    if (!spec.stable) {
        const double gcr = reference_critical_coupling(p);
        throw UnstableError("Hamiltonian is unstable: coupling exceeds the critical value"
                            " g_cr = " + format_number(gcr), gcr);
    }
    if (p.ultrastrong()) {
        try {
            return analytic_bogoliubov(p);
        } catch (const ResonanceError&) {
            return resonance_bogoliubov(p);
        } catch (const std::invalid_argument&) {
            // closed form out of regime (e.g. omega_k <= lambda_k)
        }
    }
    return numeric_bogoliubov(build_matrix(p));
}

std::string cmd_evolve(const ExperimentConfig& config) {
    const HamiltonianParams p = config.resolved_params();
    const BogoliubovPair pair = make_pair(p);
    const GaussianState initial = build_initial_state(config.initial_state);
    const TimeGrid& grid = config.time_grid;

    const bool want_n = std::count(config.outputs.begin(), config.outputs.end(), "n") > 0;
    const bool want_svn =
        std::count(config.outputs.begin(), config.outputs.end(), "s_vn") > 0;
    const bool want_nt =
        std::count(config.outputs.begin(), config.outputs.end(), "nu_tilde_minus") > 0;

    struct Row {
        double t = 0.0, n = 0.0, s_vn = 0.0, nt = 0.0;
    };
    const auto rows = sweep_grid(static_cast<std::size_t>(grid.n_steps), [&](std::size_t i) {
        Row row;
        row.t = grid.n_steps == 1
                    ? grid.t_start
                    : grid.t_start + (grid.t_end - grid.t_start) *
                                         static_cast<double>(i) / (grid.n_steps - 1);
        const GaussianState state = propagate(initial, evolve_operator(pair, row.t));
        if (want_n) row.n = excitation_number(state);
        if (want_svn || want_nt) {
            const EntanglementReport rep = entanglement_report(state);
            row.s_vn = rep.s_vn;
            row.nt = rep.nu_tilde_minus;
        }
        return row;
    });

    std::string out = "t";
    if (want_n) out += ",n";
    if (want_svn) out += ",s_vn";
    if (want_nt) out += ",nu_tilde_minus";
    out += "\n";
    for (const Row& row : rows) {
        out += format_number(row.t);
        if (want_n) out += "," + format_number(row.n);
        if (want_svn) out += "," + format_number(row.s_vn);
        if (want_nt) out += "," + format_number(row.nt);
        out += "\n";
    }
    return out;
}

json cmd_critical(const ExperimentConfig& config) {
    const HamiltonianParams p = config.resolved_params();
    const double gcr = critical_coupling(p);

    std::vector<double> epsilons;
    constexpr int kSamples = 16;
    for (int i = 0; i < kSamples; ++i)
        epsilons.push_back(std::pow(10.0, -6.0 + 3.0 * i / (kSamples - 1)));
    const ExponentFit fit = critical_exponent_fit(p, epsilons);

    json samples = json::array();
    for (double eps : epsilons) {
        HamiltonianParams q = p;
        q.g_bs = q.g_sq = gcr * (1.0 - eps);
        const SymplecticSpectrum s = symplectic_eigenvalues(q);
        samples.push_back({{"epsilon", eps}, {"g", q.g_bs}, {"kappa_minus", s.kappa_minus}});
    }
    return json{{"g_cr", gcr},
                {"exponent_fit", fit.exponent},
                {"prefactor", fit.prefactor},
                {"samples", samples}};
}

json cmd_decompose(const ExperimentConfig& config, double t) {
    const HamiltonianParams p = config.resolved_params();
    if (!p.ultrastrong())
        throw ConfigError("decompose requires the ultrastrong parameterization g_bs == g_sq");
    const BogoliubovPair pair = make_pair(p);
    const CircuitDecomposition dec = decompose(pair, p, t);

    json stages = json::array();
    stages.push_back({{"op", "bs"}, {"angle", dec.phi}});
    stages.push_back({{"op", "sq"}, {"r", {dec.r_a, dec.r_b}}});
    stages.push_back({{"op", "bs"}, {"angle", dec.varphi}});
    stages.push_back(
        {{"op", "free"}, {"kappas", {dec.kappa_plus, dec.kappa_minus}}, {"t", dec.t}});
    stages.push_back({{"op", "bs"}, {"angle", -dec.varphi}});
    stages.push_back({{"op", "sq"}, {"r", {-dec.r_a, -dec.r_b}}});
    stages.push_back({{"op", "bs"}, {"angle", -dec.phi}});

    const double identity_residual =
        max_abs_diff(reconstruct(dec).s, Matrix::Identity(4, 4));
    return json{{"stages", stages},
                {"residual", dec.residual},
                {"identity", identity_residual < 1e-8}};
}

std::string cmd_sweep(const ExperimentConfig& config, bool parallel) {
    if (!config.sweep) throw ConfigError("sweep command needs a 'sweep' block");
    const HamiltonianParams base = config.resolved_params();
    const SweepSpec& sw = *config.sweep;
    const std::vector<double> values = sweep_values(sw);
    const GaussianState initial = build_initial_state(config.initial_state);

    struct Row {
        double value = 0.0;
        SymplecticSpectrum spec;
        bool have_obs = false;
        double n = 0.0, nt = 0.0;
    };
    const auto rows = sweep_grid(
        values.size(),
        [&](std::size_t i) {
            Row row;
            row.value = values[i];
            const HamiltonianParams p = with_swept_value(base, sw.parameter, row.value);
            row.spec = symplectic_eigenvalues(p);
            if (row.spec.stable && row.spec.kappa_minus > 0.0) {
                try {
                    const BogoliubovPair pair = make_pair(p);
                    const GaussianState state =
                        propagate(initial, evolve_operator(pair, sw.time));
                    row.n = excitation_number(state);
                    row.nt = entanglement_report(state).nu_tilde_minus;
                    row.have_obs = true;
                } catch (const DegeneracyError&) {
                    // grid point sits on a degenerate spectrum; report kappas only
                }
            }
            return row;
        },
        parallel);

    std::string out = sw.parameter + ",kappa_plus,kappa_minus,stable,n,nu_tilde_minus\n";
    for (const Row& row : rows) {
        out += format_number(row.value) + "," + format_number(row.spec.kappa_plus) + "," +
               format_number(row.spec.kappa_minus) + "," + (row.spec.stable ? "1" : "0");
        out += ",";
        if (row.have_obs) out += format_number(row.n);
        out += ",";
        if (row.have_obs) out += format_number(row.nt);
        out += "\n";
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::ios_base::failure("cannot open '" + tmp.string() + "' for writing");
        out << contents;
        out.flush();
        if (!out) throw std::ios_base::failure("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::ios_base::failure("rename to '" + path + "' failed: " + ec.message());
    }
}

}  // namespace symdyn::cli
