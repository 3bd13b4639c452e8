// Command-line front end: energies, corrections, sweeps, and oracle suites
// for the two-sphere Casimir problem in the plane-wave basis.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "casimir/asymptotics.hpp"
#include "casimir/energy.hpp"
#include "casimir/roundtrip.hpp"
#include "casimir/spherescatter.hpp"
#include "json.hpp"

using namespace casimir;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericalFailure = 3;

struct RunConfig {
    std::string command;
    double r1 = 1.0;
    double r2 = 1.0;
    double l = 1e-3;
    double theta1 = 0.0;
    double theta2 = 0.0;
    double n = 0.0;  // refractive index; > 1 selects dielectric spheres
    double temperature = 0.0;
    double tol = 1e-9;
    std::string out;
    std::string format = "csv";
    // sweep controls
    int points = 13;
    double xmin = 1e-5, xmax = 1e-3;
    double dmin = 0.0, dmax = kPi / 2.0;
};

// Canonical key=value rendering of the effective config (sorted keys), used
// both for the reproducibility hash and for the record echo.
std::map<std::string, std::string> config_map(const RunConfig& c) {
    auto num = [](double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    };
    return {{"command", c.command}, {"R1", num(c.r1)},       {"R2", num(c.r2)},
            {"L", num(c.l)},        {"theta1", num(c.theta1)}, {"theta2", num(c.theta2)},
            {"n", num(c.n)},        {"T", num(c.temperature)}, {"tol", num(c.tol)},
            {"format", c.format},   {"points", num(c.points)}, {"xmin", num(c.xmin)},
            {"xmax", num(c.xmax)},  {"dmin", num(c.dmin)},     {"dmax", num(c.dmax)}};
}

std::string config_hash(const RunConfig& c) {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a 64-bit
    for (const auto& [k, v] : config_map(c)) {
        for (char ch : k + "=" + v + "\n") {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os.setf(std::ios::scientific);
    os.precision(11);  // 12 significant digits
    os << v;
    return os.str();
}

// Tabular result with named columns; serialized as CSV or JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::map<std::string, std::string> meta;  // config echo, hash, units

    void add_row(const std::vector<std::string>& r) { rows.push_back(r); }

    std::string to_csv() const {
        std::ostringstream os;
        for (const auto& [k, v] : meta) os << "# " << k << "=" << v << "\n";
        for (size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
        for (const auto& r : rows)
            for (size_t i = 0; i < r.size(); ++i)
                os << r[i] << (i + 1 < r.size() ? "," : "\n");
        return os.str();
    }

    std::string to_json() const {
        json j;
        for (const auto& [k, v] : meta) j["meta"][k] = v;
        j["records"] = json::array();
        for (const auto& r : rows) {
            json rec;
            for (size_t i = 0; i < columns.size() && i < r.size(); ++i) rec[columns[i]] = r[i];
            j["records"].push_back(rec);
        }
        return j.dump(2) + "\n";
    }
};

void emit(const Table& t, const RunConfig& cfg) {
    std::string body = cfg.format == "json" ? t.to_json() : t.to_csv();
    if (cfg.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + cfg.out);
    f << body;
}

SphereMaterial material_from(const RunConfig& cfg, int which) {
    if (cfg.n > 0.0) {
        if (!(cfg.n > 1.0)) throw std::invalid_argument("refractive index must exceed 1");
        return SphereMaterial::dielectric(cfg.n);
    }
    return SphereMaterial::pemc(which == 1 ? cfg.theta1 : cfg.theta2);
}

Table meta_table(const RunConfig& cfg) {
    Table t;
    t.meta = config_map(cfg);
    t.meta["config_hash"] = config_hash(cfg);
    return t;
}

int cmd_compute(const RunConfig& cfg) {
    Geometry geom(cfg.r1, cfg.r2, cfg.l);
    PemcPair pemc(std::min(cfg.theta1, cfg.theta2), std::max(cfg.theta1, cfg.theta2));
    EnergyBreakdown b = casimir_energy_with_corrections(geom, pemc, cfg.tol);
    double delta = pemc.delta();

    Table t = meta_table(cfg);
    t.meta["unit_e_pfa"] = "hbar*c*R_eff/L^2";
    t.meta["unit_e1"] = "hbar*c/L";
    t.columns = {"quantity", "value", "unit"};
    t.add_row({"delta", fmt(delta), "rad"});
    t.add_row({"u", fmt(geom.u()), "1"});
    t.add_row({"x", fmt(geom.x()), "1"});
    t.add_row({"e_pfa", fmt(b.e_pfa), "hbar*c*R_eff/L^2"});
    t.add_row({"e_pfa_closed", fmt(e_pfa_closed(delta)), "hbar*c*R_eff/L^2"});
    t.add_row({"e_pfa_err", fmt(b.e_pfa_err), "hbar*c*R_eff/L^2"});
    t.add_row({"e_diff", fmt(b.e_diff), "hbar*c/L"});
    t.add_row({"e_geo", fmt(b.e_geo), "hbar*c/L"});
    t.add_row({"e1", fmt(b.e1()), "hbar*c/L"});
    t.add_row({"e1_closed", fmt(e1_closed(delta, geom.u())), "hbar*c/L"});
    t.add_row({"beta_diff", fmt(b.beta_diff), "1"});
    t.add_row({"beta_geo", fmt(b.beta_geo), "1"});
    t.add_row({"beta1", fmt(b.beta1), "1"});
    t.add_row({"betas_defined", b.betas_defined ? "true" : "false", "flag"});
    if (!b.betas_defined)
        t.add_row({"note", "e_pfa vanishes near delta_crit; e1 is the leading contribution",
                   "text"});
    t.add_row({"total", fmt(b.total_dimensionless(geom.x())), "hbar*c*R_eff/L^2"});
    t.add_row({"e_pfa_si", fmt(b.e_pfa * unit_pfa_si(geom)), "J"});
    t.add_row({"e1_si", fmt(b.e1() * unit_corr_si(geom)), "J"});
    if (cfg.temperature > 0.0) {
        auto f = casimir_energy_pfa(geom, pemc, {cfg.temperature}, cfg.tol);
        t.add_row({"free_energy_pfa", fmt(f.value), "hbar*c*R_eff/L^2"});
        t.add_row({"free_energy_pfa_err", fmt(f.error), "hbar*c*R_eff/L^2"});
    }
    emit(t, cfg);
    return kExitOk;
}

int cmd_sweep_delta(const RunConfig& cfg) {
    if (!(cfg.dmin >= 0.0 && cfg.dmax <= kPi / 2.0 + 1e-12 && cfg.dmin < cfg.dmax))
        throw std::invalid_argument("delta grid must lie within [0, pi/2]");
    if (cfg.points < 2) throw std::invalid_argument("need at least 2 grid points");
    Table t = meta_table(cfg);
    t.meta["unit_e1"] = "hbar*c/L";
    t.columns = {"delta", "ratio", "u", "e1", "e_pfa", "beta1"};
    const double ratios[] = {1.0, 4.0, 10.0, std::numeric_limits<double>::infinity()};
    for (double ratio : ratios) {
        double u = std::isinf(ratio) ? 0.0 : ratio / ((1.0 + ratio) * (1.0 + ratio));
        for (int i = 0; i < cfg.points; ++i) {
            double d = cfg.dmin + (cfg.dmax - cfg.dmin) * i / (cfg.points - 1.0);
            double e0 = e_pfa_closed(d);
            double e1 = e1_closed(d, u);
            double quartic = std::pow(kPi, 4) - 30.0 * d * d * (kPi - d) * (kPi - d);
            std::string beta1 = "nan";
            if (std::fabs(quartic) >= 1e-8 * std::pow(kPi, 4))
                beta1 = fmt(beta_coefficients(d, u).beta1);
            t.add_row({fmt(d), std::isinf(ratio) ? "inf" : fmt(ratio), fmt(u), fmt(e1),
                       fmt(e0), beta1});
        }
    }
    emit(t, cfg);
    return kExitOk;
}

int cmd_sweep_x(const RunConfig& cfg) {
    if (!(cfg.xmin > 0.0 && cfg.xmax <= 0.1 && cfg.xmin < cfg.xmax))
        throw std::invalid_argument("x grid must lie within (0, 0.1]");
    if (cfg.points < 2) throw std::invalid_argument("need at least 2 grid points");
    Table t = meta_table(cfg);
    t.meta["description"] =
        "PEC spheres: correction = E/E_PFA - 1 + (15/pi^2) x from the resummed estimate";
    t.columns = {"x", "correction", "analytic_x32", "reference_x32"};
    double beta32 = 15.0 * (10.0 + 3.0 * kPi) / (4.0 * std::pow(kPi, 3));
    for (int i = 0; i < cfg.points; ++i) {
        double x = cfg.xmin * std::pow(cfg.xmax / cfg.xmin, i / (cfg.points - 1.0));
        double corr = ntlo_energy_ratio(x) - 1.0 + 15.0 / (kPi * kPi) * x;
        t.add_row({fmt(x), fmt(corr), fmt(beta32 * std::pow(x, 1.5)),
                   fmt(2.65 * std::pow(x, 1.5))});
    }
    emit(t, cfg);
    return kExitOk;
}

int cmd_ntlo(const RunConfig& cfg) {
    Geometry geom(cfg.r1, cfg.r2, cfg.l);
    NtloResult r = ntlo_energy(geom);
    Table t = meta_table(cfg);
    t.columns = {"quantity", "value"};
    t.add_row({"x", fmt(r.x)});
    t.add_row({"ratio_resummed", fmt(r.ratio_resummed)});
    t.add_row({"asymptotic_three_term", fmt(r.asymptotic_three_term)});
    t.add_row({"beta32_analytic", fmt(r.beta32_analytic)});
    t.add_row({"te_share", fmt(r.te_share)});
    t.add_row({"outside_validity", r.outside_validity ? "true" : "false"});
    emit(t, cfg);
    return kExitOk;
}

int cmd_mie_check(const RunConfig& cfg) {
    Table t = meta_table(cfg);
    t.columns = {"pol", "xi_tilde", "dev_leading", "dev_corrected", "slope_leading",
                 "slope_corrected"};
    auto kin = ScatteringKinematics::from_s(1.25);
    bool pass = true;
    for (auto pol : {Pol::TM, Pol::TE}) {
        double prev0 = 0.0, prev1 = 0.0, prevxi = 0.0;
        std::vector<double> slopes0, slopes1;
        for (double xi : {25.0, 50.0, 100.0, 200.0, 400.0}) {
            auto mie = mie_oracle_pec(pol, xi, kin.mu);
            auto w0 = wkb_amplitude(pol, pol, {xi}, kin, SphereMaterial::pec(),
                                    WkbOrder::leading_only);
            auto w1 = wkb_amplitude(pol, pol, {xi}, kin, SphereMaterial::pec(),
                                    WkbOrder::with_first_correction);
            double d0 = std::fabs((mie / w0.amplitude).value() - 1.0);
            double d1 = std::fabs((mie / w1.amplitude).value() - 1.0);
            std::string s0 = "nan", s1 = "nan";
            if (prevxi > 0.0) {
                double sl0 = std::log(d0 / prev0) / std::log(xi / prevxi);
                double sl1 = std::log(d1 / prev1) / std::log(xi / prevxi);
                slopes0.push_back(sl0);
                slopes1.push_back(sl1);
                s0 = fmt(sl0);
                s1 = fmt(sl1);
            }
            t.add_row({pol == Pol::TM ? "TM" : "TE", fmt(xi), fmt(d0), fmt(d1), s0, s1});
            prev0 = d0;
            prev1 = d1;
            prevxi = xi;
        }
        for (double s : slopes0) pass = pass && std::fabs(s + 1.0) <= 0.15;
        for (double s : slopes1) pass = pass && std::fabs(s + 2.0) <= 0.2;
    }
    t.meta["pass"] = pass ? "true" : "false";
    emit(t, cfg);
    return pass ? kExitOk : kExitNumericalFailure;
}

int cmd_oracle(const RunConfig& cfg) {
    Table t = meta_table(cfg);
    t.columns = {"suite", "measured_error", "tolerance", "pass"};
    bool all = true;
    auto record = [&](const std::string& name, double err, double tol) {
        bool ok = err <= tol;
        all = all && ok;
        t.add_row({name, fmt(err), fmt(tol), ok ? "true" : "false"});
    };

    {  // brute-force polarization enumeration vs determinant-series truncation
        std::mt19937 rng(31415);
        std::uniform_real_distribution<double> U(-0.9, 0.9);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            Mat2 r1, r2;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    r1(i, j) = U(rng);
                    r2(i, j) = U(rng);
                }
            double kl = 0.3 + 0.5 * trial / 100.0;
            double bf = brute_force_roundtrips(r1, r2, kl, 5);
            double mp = matrix_power_roundtrips(single_roundtrip(r1, r2, kl), 5);
            worst = std::max(worst, std::fabs(bf - mp));
        }
        record("roundtrip_enumeration", worst, 1e-12);
    }
    {  // PFA quadrature vs closed form
        double worst = 0.0;
        for (double d : {0.0, 0.3, kPi / 4.0, 1.2, kPi / 2.0}) {
            double q = casimir_energy_pfa_t0(d).value;
            worst = std::max(worst, std::fabs(q / e_pfa_closed(d) - 1.0));
        }
        record("pfa_quadrature", worst, 1e-7);
    }
    {  // Mie vs WKB slope (leading order)
        auto kin = ScatteringKinematics::from_s(1.25);
        double worst = 0.0;
        for (auto pol : {Pol::TM, Pol::TE}) {
            double d25 = std::fabs((mie_oracle_pec(pol, 25.0, kin.mu) /
                                    wkb_amplitude(pol, pol, {25.0}, kin,
                                                  SphereMaterial::pec(),
                                                  WkbOrder::leading_only)
                                        .amplitude)
                                       .value() -
                                   1.0);
            double d100 = std::fabs((mie_oracle_pec(pol, 100.0, kin.mu) /
                                     wkb_amplitude(pol, pol, {100.0}, kin,
                                                   SphereMaterial::pec(),
                                                   WkbOrder::leading_only)
                                         .amplitude)
                                        .value() -
                                    1.0);
            double slope = std::log(d100 / d25) / std::log(4.0);
            worst = std::max(worst, std::fabs(slope + 1.0));
        }
        record("mie_wkb_slope", worst, 0.15);
    }
    t.meta["pass"] = all ? "true" : "false";
    emit(t, cfg);
    return all ? kExitOk : kExitNumericalFailure;
}

void apply_config_file(const std::string& path, RunConfig& cfg,
                       const std::map<std::string, bool>& set_on_cli) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    std::string line;
    auto want = [&](const std::string& k) {
        auto it = set_on_cli.find(k);
        return it == set_on_cli.end() || !it->second;  // CLI flags win
    };
    while (std::getline(f, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty()) continue;
        auto parse_radius = [](const std::string& v) {
            return v == "inf" ? std::numeric_limits<double>::infinity() : std::stod(v);
        };
        try {
            if (key == "R1") { if (want(key)) cfg.r1 = parse_radius(val); }
            else if (key == "R2") { if (want(key)) cfg.r2 = parse_radius(val); }
            else if (key == "L") { if (want(key)) cfg.l = std::stod(val); }
            else if (key == "theta1") { if (want(key)) cfg.theta1 = std::stod(val); }
            else if (key == "theta2") { if (want(key)) cfg.theta2 = std::stod(val); }
            else if (key == "n") { if (want(key)) cfg.n = std::stod(val); }
            else if (key == "T") { if (want(key)) cfg.temperature = std::stod(val); }
            else if (key == "tol") { if (want(key)) cfg.tol = std::stod(val); }
            else if (key == "out") { if (want(key)) cfg.out = val; }
            else if (key == "format") { if (want(key)) cfg.format = val; }
            else if (key == "points") { if (want(key)) cfg.points = std::stoi(val); }
            else if (key == "xmin") { if (want(key)) cfg.xmin = std::stod(val); }
            else if (key == "xmax") { if (want(key)) cfg.xmax = std::stod(val); }
            else if (key == "dmin") { if (want(key)) cfg.dmin = std::stod(val); }
            else if (key == "dmax") { if (want(key)) cfg.dmax = std::stod(val); }
            else if (key != "command")
                throw std::invalid_argument("unknown config key: " + key);
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad value for config key " + key + ": " + val);
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "casimir-cli: Casimir energies between two spheres (plane-wave scattering basis).\n"
        "Energies are reported in hbar*c*R_eff/L^2 (PFA order) and hbar*c/L\n"
        "(correction order); SI values are included where a geometry is given."};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string r1_str = "1.0", r2_str = "1.0", config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--R1", r1_str, "radius of sphere 1 in meters, or 'inf'");
        sub->add_option("--R2", r2_str, "radius of sphere 2 in meters, or 'inf'");
        sub->add_option("--L", cfg.l, "surface-to-surface gap in meters");
        sub->add_option("--theta1", cfg.theta1, "PEMC duality angle of body 1 [0, pi/2]");
        sub->add_option("--theta2", cfg.theta2, "PEMC duality angle of body 2 [0, pi/2]");
        sub->add_option("--n", cfg.n, "refractive index (> 1 selects dielectric spheres)");
        sub->add_option("--T", cfg.temperature, "temperature in kelvin (0 = vacuum energy)");
        sub->add_option("--tol", cfg.tol, "relative quadrature tolerance");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--format", cfg.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--config", config_path, "flat key=value config file (flags win)");
        sub->add_option("--points", cfg.points, "number of sweep grid points");
        sub->add_option("--xmin", cfg.xmin, "sweep-x lower bound");
        sub->add_option("--xmax", cfg.xmax, "sweep-x upper bound");
        sub->add_option("--dmin", cfg.dmin, "sweep-delta lower bound (rad)");
        sub->add_option("--dmax", cfg.dmax, "sweep-delta upper bound (rad)");
    };
    for (const char* name : {"compute", "sweep-delta", "sweep-x", "ntlo", "mie-check",
                             "oracle"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInvalidInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();

    try {
        if (!config_path.empty()) {
            std::map<std::string, bool> on_cli;
            for (const char* k : {"R1", "R2", "L", "theta1", "theta2", "n", "T", "tol",
                                  "out", "format", "points", "xmin", "xmax", "dmin",
                                  "dmax"})
                on_cli[k] = sub->count(std::string("--") + k) > 0;
            apply_config_file(config_path, cfg, on_cli);
            if (sub->count("--R1") == 0 && on_cli["R1"] == false) r1_str = "";
        }
        auto parse_radius = [](const std::string& v, double fallback) {
            if (v.empty()) return fallback;
            if (v == "inf") return std::numeric_limits<double>::infinity();
            size_t pos = 0;
            double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument("bad radius: " + v);
            return d;
        };
        if (sub->count("--R1") > 0 || config_path.empty()) cfg.r1 = parse_radius(r1_str, cfg.r1);
        if (sub->count("--R2") > 0 || config_path.empty()) cfg.r2 = parse_radius(r2_str, cfg.r2);

        if (cfg.command == "compute") return cmd_compute(cfg);
        if (cfg.command == "sweep-delta") return cmd_sweep_delta(cfg);
        if (cfg.command == "sweep-x") return cmd_sweep_x(cfg);
        if (cfg.command == "ntlo") return cmd_ntlo(cfg);
        if (cfg.command == "mie-check") return cmd_mie_check(cfg);
        if (cfg.command == "oracle") return cmd_oracle(cfg);
        std::cerr << "unknown command\n";
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    }
}
