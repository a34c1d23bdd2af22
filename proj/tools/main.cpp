// zenossep command line: builds lattice systems from flags, runs the
// measurement/exclusion experiments, writes CSV artifacts.
//
// Exit status: 0 success, 1 validation error, 2 runtime error.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zenossep/zenossep.h"

#include "csv.hpp"

namespace {

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
    throw CliError{exit_code, message};
}

void check(zs_status status) {
    if (status == ZS_OK) return;
    const int exit_code = status == ZS_ERR_NUMERIC ? 2 : 1;
    fail(exit_code, std::string(zs_status_name(status)) + ": " + zs_last_error());
}

using SystemHandle = std::unique_ptr<zs_system, decltype(&zs_system_destroy)>;

// ---------------------------------------------------------------------------
// shared flags

struct PotentialFlags {
    std::string family = "zero";  // zero|constant|cosine|random|file
    double value = 0.0;
    double amplitude = 1.0;
    int wavenumber = 1;
    double width = 1.0;
    std::string file;
};

void add_potential_flags(CLI::App* command, PotentialFlags& flags) {
    command->add_option("--v", flags.family, "potential family: zero|constant|cosine|random|file")
        ->check(CLI::IsMember({"zero", "constant", "cosine", "random", "file"}));
    command->add_option("--v0", flags.value, "constant potential value");
    command->add_option("--amp", flags.amplitude, "cosine potential amplitude");
    command->add_option("--wavenumber", flags.wavenumber, "cosine potential wavenumber");
    command->add_option("--w", flags.width, "random potential half-width");
    command->add_option("--vfile", flags.file, "potential file (one real per line, N lines)");
}

std::vector<double> resolve_potential(const PotentialFlags& flags, int n_sites,
                                      std::uint64_t seed) {
    std::vector<double> potential(static_cast<std::size_t>(n_sites), 0.0);
    if (flags.family == "zero") return potential;
    if (flags.family == "constant") {
        check(zs_potential_constant(n_sites, flags.value, potential.data()));
    } else if (flags.family == "cosine") {
        check(zs_potential_cosine(n_sites, flags.amplitude, flags.wavenumber,
                                  potential.data()));
    } else if (flags.family == "random") {
        check(zs_potential_random(n_sites, flags.width, seed, potential.data()));
    } else {  // file
        std::ifstream stream(flags.file);
        if (!stream) fail(1, "cannot open potential file '" + flags.file + "'");
        for (int k = 0; k < n_sites; ++k)
            if (!(stream >> potential[static_cast<std::size_t>(k)]))
                fail(1, "potential file '" + flags.file + "' must hold " +
                            std::to_string(n_sites) + " reals");
    }
    return potential;
}

SystemHandle make_system(int n_sites, const std::vector<double>& potential,
                         double coupling) {
    zs_system* raw = nullptr;
    check(zs_system_create(n_sites, potential.data(), coupling, &raw));
    return SystemHandle(raw, &zs_system_destroy);
}

std::uint32_t parse_init_config(const std::string& text, int n_sites) {
    try {
        return csv::parse_config(text, n_sites);
    } catch (const std::exception& error) {
        fail(1, error.what());
    }
}

/// Initial distribution from --init (config string or "uniform") or
/// --init-file (distribution CSV).
std::vector<double> resolve_initial_distribution(const std::string& init,
                                                 const std::string& init_file,
                                                 int n_sites) {
    const std::size_t dim = std::size_t{1} << n_sites;
    std::vector<double> q0(dim, 0.0);
    if (!init_file.empty()) {
        try {
            return csv::parse_distribution(init_file, n_sites);
        } catch (const std::exception& error) {
            fail(1, error.what());
        }
    }
    if (init == "uniform") {
        for (auto& p : q0) p = 1.0 / static_cast<double>(dim);
        return q0;
    }
    q0[parse_init_config(init, n_sites)] = 1.0;
    return q0;
}

std::string triplet_csv(const std::vector<double>& matrix, int n_sites,
                        const char* value_name) {
    const std::size_t dim = std::size_t{1} << n_sites;
    std::string content = "config_from,config_to,";
    content += value_name;
    content += '\n';
    // row-major matrix, entry (to, from)
    for (std::size_t from = 0; from < dim; ++from)
        for (std::size_t to = 0; to < dim; ++to) {
            const double value = matrix[to * dim + from];
            if (value == 0.0) continue;
            content += csv::format_config(static_cast<std::uint32_t>(from), n_sites);
            content += ',';
            content += csv::format_config(static_cast<std::uint32_t>(to), n_sites);
            content += ',';
            content += csv::format_double(value);
            content += '\n';
        }
    return content;
}

std::vector<int> parse_int_list(const std::vector<int>& values, const char* name) {
    if (values.empty()) fail(1, std::string("--") + name + " needs at least one value");
    return values;
}

/// Expands `--config FILE` into ordinary flags.  The file holds one
/// `key=value` per line ('#' starts a comment); keys already given on the
/// command line keep their command-line values.
std::vector<std::string> merge_config_args(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);

    std::string config_path;
    std::vector<std::string> user_flags;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k].rfind("--", 0) != 0) continue;
        const auto equals = args[k].find('=');
        user_flags.push_back(args[k].substr(0, equals));
        if (user_flags.back() == "--config") {
            if (equals != std::string::npos)
                config_path = args[k].substr(equals + 1);
            else if (k + 1 < args.size())
                config_path = args[k + 1];
        }
    }
    if (config_path.empty()) return args;

    std::ifstream stream(config_path);
    if (!stream) fail(1, "cannot open config file '" + config_path + "'");
    std::string line;
    while (std::getline(stream, line)) {
        const auto comment = line.find('#');
        if (comment != std::string::npos) line.erase(comment);
        const auto strip = [](std::string text) {
            const auto begin = text.find_first_not_of(" \t\r");
            const auto end = text.find_last_not_of(" \t\r");
            return begin == std::string::npos ? std::string{}
                                              : text.substr(begin, end - begin + 1);
        };
        const auto equals = line.find('=');
        if (equals == std::string::npos) continue;
        const std::string key = strip(line.substr(0, equals));
        const std::string value = strip(line.substr(equals + 1));
        if (key.empty() || key == "config") continue;
        const std::string flag = "--" + key;
        if (std::find(user_flags.begin(), user_flags.end(), flag) != user_flags.end())
            continue;  // command line wins
        args.push_back(flag);
        args.push_back(value);
    }
    return args;
}

// ---------------------------------------------------------------------------
// subcommand payloads

struct CommonFlags {
    int n_sites = 4;
    double coupling = 0.0;
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::string config_path;  // consumed by merge_config_args before parsing
    PotentialFlags potential;
};

void add_common_flags(CLI::App* command, CommonFlags& flags, bool with_potential = true) {
    command->add_option("--n", flags.n_sites, "number of lattice sites")->required();
    command->add_option("--seed", flags.seed, "seed for every random draw");
    command->add_option("--out", flags.out_dir, "output directory");
    command->add_option("--config", flags.config_path, "key=value configuration file");
    if (with_potential) {
        command->add_option("--lambda", flags.coupling, "nearest-neighbour coupling");
        add_potential_flags(command, flags.potential);
    }
}

int run_car_check(const CommonFlags& common) {
    double pair_deviation = 0.0;
    double cross_deviation = 0.0;
    check(zs_car_check(common.n_sites, &pair_deviation, &cross_deviation));
    const bool pass = pair_deviation < 1e-13 && cross_deviation < 1e-13;
    std::printf("pair_deviation=%s\n", csv::format_double(pair_deviation).c_str());
    std::printf("cross_deviation=%s\n", csv::format_double(cross_deviation).c_str());
    std::printf("status=%s\n", pass ? "pass" : "fail");
    return pass ? 0 : 2;
}

int run_transition(const CommonFlags& common, double t) {
    const auto potential = resolve_potential(common.potential, common.n_sites, common.seed);
    const auto system = make_system(common.n_sites, potential, common.coupling);
    const auto dim = static_cast<std::size_t>(zs_system_dim(system.get()));
    std::vector<double> matrix(dim * dim, 0.0);
    check(zs_transition_matrix(system.get(), t, matrix.data()));

    csv::AtomicWriter writer;
    writer.stage(std::filesystem::path(common.out_dir) / "transition.csv",
                 triplet_csv(matrix, common.n_sites, "probability"));
    writer.commit();
    return 0;
}

int run_generator(const CommonFlags& common) {
    const auto potential = resolve_potential(common.potential, common.n_sites, common.seed);
    const auto system = make_system(common.n_sites, potential, common.coupling);
    const auto dim = static_cast<std::size_t>(zs_system_dim(system.get()));

    std::vector<double> numeric(dim * dim, 0.0);
    std::vector<double> closed(dim * dim, 0.0);
    check(zs_generator(system.get(), numeric.data()));
    check(zs_ssep_generator(common.n_sites, closed.data()));

    double max_deviation = 0.0;
    for (std::size_t k = 0; k < numeric.size(); ++k)
        max_deviation = std::max(max_deviation, std::abs(numeric[k] - closed[k]));

    csv::AtomicWriter writer;
    const std::filesystem::path out(common.out_dir);
    writer.stage(out / "generator_numeric.csv", triplet_csv(numeric, common.n_sites, "rate"));
    writer.stage(out / "generator_ssep.csv", triplet_csv(closed, common.n_sites, "rate"));
    writer.commit();
    std::printf("max_deviation=%s\n", csv::format_double(max_deviation).c_str());
    return 0;
}

int run_independence(const CommonFlags& common, int potentials,
                     const std::vector<double>& lambdas) {
    if (potentials < 1) fail(1, "--potentials must be >= 1");
    if (lambdas.empty()) fail(1, "--lambdas needs at least one value");
    const auto dim = std::size_t{1} << common.n_sites;

    // spec 0 is the clean chain; the rest cross random potentials with the
    // requested couplings
    std::vector<std::vector<double>> generators;
    std::vector<std::string> labels;
    {
        const auto system =
            make_system(common.n_sites, std::vector<double>(common.n_sites, 0.0), 0.0);
        generators.emplace_back(dim * dim, 0.0);
        check(zs_generator(system.get(), generators.back().data()));
        labels.push_back("v=zero:lambda=0");
    }
    for (int draw = 0; draw < potentials; ++draw) {
        std::vector<double> potential(static_cast<std::size_t>(common.n_sites), 0.0);
        check(zs_potential_random(common.n_sites, common.potential.width,
                                  common.seed + static_cast<std::uint64_t>(draw),
                                  potential.data()));
        for (const double lambda : lambdas) {
            const auto system = make_system(common.n_sites, potential, lambda);
            generators.emplace_back(dim * dim, 0.0);
            check(zs_generator(system.get(), generators.back().data()));
            labels.push_back("v=random" + std::to_string(draw) +
                             ":lambda=" + csv::format_double(lambda));
        }
    }

    double worst = 0.0;
    std::string content = "spec_a,spec_b,deviation\n";
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            double deviation = 0.0;
            for (std::size_t k = 0; k < generators[i].size(); ++k)
                deviation = std::max(deviation,
                                     std::abs(generators[i][k] - generators[j][k]));
            worst = std::max(worst, deviation);
            content += labels[i] + ',' + labels[j] + ',' + csv::format_double(deviation) + '\n';
        }

    csv::AtomicWriter writer;
    writer.stage(std::filesystem::path(common.out_dir) / "independence.csv", content);
    writer.commit();
    std::printf("max_deviation=%s\n", csv::format_double(worst).c_str());
    return 0;
}

int run_zeno_scan(const CommonFlags& common, double tau, const std::vector<int>& ms,
                  const std::string& init, const std::string& init_file) {
    const auto potential = resolve_potential(common.potential, common.n_sites, common.seed);
    const auto system = make_system(common.n_sites, potential, common.coupling);
    const auto q0 = resolve_initial_distribution(init, init_file, common.n_sites);

    std::vector<std::int32_t> m_values(ms.begin(), ms.end());
    std::vector<double> distances(m_values.size(), 0.0);
    std::vector<std::int64_t> steps(m_values.size(), 0);
    std::vector<double> seconds(m_values.size(), 0.0);
    check(zs_zeno_scan(system.get(), tau, q0.data(), m_values.data(),
                       static_cast<std::int32_t>(m_values.size()), distances.data(),
                       steps.data(), seconds.data()));

    std::string content = "M,L,distance,seconds\n";
    for (std::size_t k = 0; k < m_values.size(); ++k) {
        content += std::to_string(m_values[k]) + ',' + std::to_string(steps[k]) + ',' +
                   csv::format_double(distances[k]) + ',' +
                   csv::format_double(seconds[k]) + '\n';
    }
    csv::AtomicWriter writer;
    writer.stage(std::filesystem::path(common.out_dir) / "zeno_scan.csv", content);
    writer.commit();
    return 0;
}

int run_zeno_survival(const CommonFlags& common, double total_time,
                      const std::vector<int>& ms, const std::string& init) {
    const auto potential = resolve_potential(common.potential, common.n_sites, common.seed);
    const auto system = make_system(common.n_sites, potential, common.coupling);
    const std::uint32_t x0 = parse_init_config(init, common.n_sites);

    std::string content = "M,survival,deficit\n";
    for (const int repetitions : ms) {
        double survival = 0.0;
        check(zs_zeno_survival(system.get(), total_time, repetitions, x0, &survival));
        content += std::to_string(repetitions) + ',' + csv::format_double(survival) + ',' +
                   csv::format_double(1.0 - survival) + '\n';
    }
    csv::AtomicWriter writer;
    writer.stage(std::filesystem::path(common.out_dir) / "zeno_survival.csv", content);
    writer.commit();
    return 0;
}

int run_lemma_check(const CommonFlags& common, int dim, double norm, double scale,
                    double exponent, const std::vector<int>& ks) {
    std::vector<double> generator(static_cast<std::size_t>(dim) * dim, 0.0);
    check(zs_random_matrix(dim, norm, common.seed, generator.data()));

    std::vector<std::int64_t> k_values(ks.begin(), ks.end());
    std::vector<double> errors(k_values.size(), 0.0);
    check(zs_semigroup_limit_check(generator.data(), dim, scale, exponent, k_values.data(),
                                   static_cast<std::int32_t>(k_values.size()),
                                   common.seed + 1, errors.data()));

    std::string content = "K,error\n";
    for (std::size_t k = 0; k < k_values.size(); ++k)
        content += std::to_string(k_values[k]) + ',' + csv::format_double(errors[k]) + '\n';
    csv::AtomicWriter writer;
    writer.stage(std::filesystem::path(common.out_dir) / "lemma_check.csv", content);
    writer.commit();
    return 0;
}

int run_ssep_compare(const CommonFlags& common, double tau, std::int64_t trajectories,
                     std::int64_t sample_rows, const std::string& init) {
    const std::uint32_t x0 = parse_init_config(init, common.n_sites);
    const std::size_t dim = std::size_t{1} << common.n_sites;

    std::vector<double> q0(dim, 0.0);
    q0[x0] = 1.0;
    std::vector<double> exact(dim, 0.0);
    check(zs_master_evolve(common.n_sites, q0.data(), tau, exact.data()));
    std::vector<double> empirical(dim, 0.0);
    check(zs_gillespie_histogram(common.n_sites, x0, tau, trajectories, common.seed,
                                 empirical.data()));

    double tv = 0.0;
    for (std::size_t k = 0; k < dim; ++k) tv += std::abs(empirical[k] - exact[k]);
    tv *= 0.5;

    // sample-set export: each row reruns on its own derived seed, so any row
    // is reproducible in isolation
    std::string samples = "seed,final_config,clock\n";
    const std::int64_t rows = std::min(sample_rows, trajectories);
    for (std::int64_t k = 0; k < rows; ++k) {
        const std::uint64_t row_seed = zs_derive_seed(common.seed, static_cast<std::uint64_t>(k));
        std::uint32_t final_config = 0;
        double clock = 0.0;
        check(zs_gillespie_final(common.n_sites, x0, tau, row_seed, &final_config, &clock));
        char row[64];
        std::snprintf(row, sizeof(row), "%" PRIu64 ",", row_seed);
        samples += row;
        samples += csv::format_config(final_config, common.n_sites);
        samples += ',';
        samples += csv::format_double(clock);
        samples += '\n';
    }

    csv::AtomicWriter writer;
    const std::filesystem::path out(common.out_dir);
    writer.stage(out / "ssep_empirical.csv", csv::format_distribution(empirical, common.n_sites));
    writer.stage(out / "ssep_exact.csv", csv::format_distribution(exact, common.n_sites));
    writer.stage(out / "ssep_samples.csv", samples);
    writer.commit();
    std::printf("tv_distance=%s\n", csv::format_double(tv).c_str());
    return 0;
}

int run_density(const CommonFlags& common, double tau, int refinement,
                const std::string& init) {
    const auto potential = resolve_potential(common.potential, common.n_sites, common.seed);
    const auto system = make_system(common.n_sites, potential, common.coupling);
    const std::uint32_t x0 = parse_init_config(init, common.n_sites);
    const std::size_t dim = std::size_t{1} << common.n_sites;
    const auto sites = static_cast<std::size_t>(common.n_sites);

    std::vector<double> q0(dim, 0.0);
    q0[x0] = 1.0;
    std::vector<double> initial_profile(sites, 0.0);
    check(zs_density_profile(common.n_sites, q0.data(), initial_profile.data()));

    // measurement-free evolution at physical time tau
    std::vector<double> free_profile(sites, 0.0);
    check(zs_free_density(system.get(), x0, tau, free_profile.data()));

    // measured dynamics at interval 1/M up to tau M
    if (refinement < 1) fail(1, "--m must be >= 1");
    std::vector<double> measured(dim, 0.0);
    check(zs_repeated_measurement(system.get(), 1.0 / refinement, tau * refinement,
                                  q0.data(), measured.data()));
    std::vector<double> measured_profile(sites, 0.0);
    check(zs_density_profile(common.n_sites, measured.data(), measured_profile.data()));

    // exclusion-process master equation and the discrete heat flow
    std::vector<double> exclusion(dim, 0.0);
    check(zs_master_evolve(common.n_sites, q0.data(), tau, exclusion.data()));
    std::vector<double> exclusion_profile(sites, 0.0);
    check(zs_density_profile(common.n_sites, exclusion.data(), exclusion_profile.data()));
    std::vector<double> heat_profile(sites, 0.0);
    check(zs_heat_reference(common.n_sites, initial_profile.data(), tau,
                            heat_profile.data()));

    std::string content = "site,initial,free,measured,ssep,heat\n";
    for (std::size_t site = 0; site < sites; ++site) {
        content += std::to_string(site + 1) + ',' + csv::format_double(initial_profile[site]) +
                   ',' + csv::format_double(free_profile[site]) + ',' +
                   csv::format_double(measured_profile[site]) + ',' +
                   csv::format_double(exclusion_profile[site]) + ',' +
                   csv::format_double(heat_profile[site]) + '\n';
    }

    const auto profile_csv = [](const std::vector<double>& profile) {
        std::string table = "site,density\n";
        for (std::size_t site = 0; site < profile.size(); ++site)
            table += std::to_string(site + 1) + ',' + csv::format_double(profile[site]) + '\n';
        return table;
    };

    csv::AtomicWriter writer;
    const std::filesystem::path out(common.out_dir);
    writer.stage(out / "density.csv", content);
    writer.stage(out / "profile_free.csv", profile_csv(free_profile));
    writer.stage(out / "profile_measured.csv", profile_csv(measured_profile));
    writer.stage(out / "profile_ssep.csv", profile_csv(exclusion_profile));
    writer.stage(out / "profile_heat.csv", profile_csv(heat_profile));
    writer.stage(out / "measured_distribution.csv",
                 csv::format_distribution(measured, common.n_sites));
    writer.commit();
    return 0;
}

int run_trajectory(const CommonFlags& common, double interval, std::int64_t steps,
                   const std::string& init) {
    const auto potential = resolve_potential(common.potential, common.n_sites, common.seed);
    const auto system = make_system(common.n_sites, potential, common.coupling);
    const std::uint32_t x0 = parse_init_config(init, common.n_sites);
    if (steps < 0) fail(1, "--steps must be >= 0");

    std::vector<std::uint32_t> outcomes(static_cast<std::size_t>(steps) + 1, 0);
    check(zs_sample_trajectory(system.get(), interval, steps, x0, common.seed,
                               outcomes.data()));

    std::string content = "step,config\n";
    for (std::size_t k = 0; k < outcomes.size(); ++k)
        content += std::to_string(k) + ',' + csv::format_config(outcomes[k], common.n_sites) +
                   '\n';
    csv::AtomicWriter writer;
    writer.stage(std::filesystem::path(common.out_dir) / "trajectory.csv", content);
    writer.commit();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"measurement-driven lattice fermion laboratory"};
    app.require_subcommand(1);

    // car-check
    CommonFlags car_flags;
    auto* car = app.add_subcommand("car-check", "verify the anticommutation relations");
    add_common_flags(car, car_flags, /*with_potential=*/false);

    // transition
    CommonFlags transition_flags;
    double transition_t = 0.1;
    auto* transition = app.add_subcommand("transition", "emit the transition matrix U_t");
    add_common_flags(transition, transition_flags);
    transition->add_option("--t", transition_t, "measurement interval")->required();

    // generator
    CommonFlags generator_flags;
    auto* generator =
        app.add_subcommand("generator", "emit the emergent and closed-form generators");
    add_common_flags(generator, generator_flags);

    // independence
    CommonFlags independence_flags;
    independence_flags.potential.width = 5.0;
    int independence_potentials = 5;
    std::vector<double> independence_lambdas{0.0, 1.0, -1.5, 2.0};
    auto* independence = app.add_subcommand(
        "independence", "generator deviation across potentials and couplings");
    add_common_flags(independence, independence_flags, /*with_potential=*/false);
    independence->add_option("--potentials", independence_potentials,
                             "number of random potentials");
    independence->add_option("--w", independence_flags.potential.width,
                             "random potential half-width");
    independence->add_option("--lambdas", independence_lambdas, "couplings to cross")
        ->delimiter(',');

    // zeno-scan
    CommonFlags scan_flags;
    double scan_tau = 0.5;
    std::vector<int> scan_ms{4, 8, 16, 32, 64};
    std::string scan_init = "uniform";
    std::string scan_init_file;
    auto* scan = app.add_subcommand("zeno-scan",
                                    "distance to the semigroup limit as M grows");
    add_common_flags(scan, scan_flags);
    scan->add_option("--tau", scan_tau, "rescaled time")->required();
    scan->add_option("--m", scan_ms, "measurement refinements M")->delimiter(',');
    scan->add_option("--init", scan_init, "initial configuration or 'uniform'");
    scan->add_option("--init-file", scan_init_file, "initial distribution CSV");

    // zeno-survival
    CommonFlags survival_flags;
    double survival_time = 1.0;
    std::vector<int> survival_ms{10, 20, 40, 80, 160};
    std::string survival_init;
    auto* survival = app.add_subcommand("zeno-survival",
                                        "probability that every measurement returns x0");
    add_common_flags(survival, survival_flags);
    survival->add_option("--bigt", survival_time, "total measurement time");
    survival->add_option("--m", survival_ms, "measurement counts")->delimiter(',');
    survival->add_option("--init", survival_init, "initial configuration")->required();

    // lemma-check
    CommonFlags lemma_flags;
    int lemma_dim = 8;
    double lemma_norm = 2.0;
    double lemma_scale = 1.0;
    double lemma_exponent = 1.5;
    std::vector<int> lemma_ks{100, 1000, 10000};
    auto* lemma = app.add_subcommand("lemma-check",
                                     "perturbed Euler-product convergence table");
    add_common_flags(lemma, lemma_flags, /*with_potential=*/false);
    lemma->get_option("--n")->required(false);
    lemma->add_option("--dim", lemma_dim, "matrix dimension");
    lemma->add_option("--norm", lemma_norm, "spectral norm of the random generator");
    lemma->add_option("--c", lemma_scale, "perturbation scale c");
    lemma->add_option("--alpha", lemma_exponent, "perturbation exponent (must be > 1)");
    lemma->add_option("--k", lemma_ks, "product lengths K")->delimiter(',');

    // ssep-compare
    CommonFlags compare_flags;
    double compare_tau = 1.0;
    std::int64_t compare_trajectories = 100000;
    std::int64_t compare_sample_rows = 1000;
    std::string compare_init;
    auto* compare = app.add_subcommand("ssep-compare",
                                       "Monte Carlo vs exact exclusion dynamics");
    add_common_flags(compare, compare_flags, /*with_potential=*/false);
    compare->add_option("--tau", compare_tau, "evolution time");
    compare->add_option("--traj", compare_trajectories, "number of trajectories");
    compare->add_option("--sample-rows", compare_sample_rows,
                        "rows in the per-trajectory sample export");
    compare->add_option("--init", compare_init, "initial configuration")->required();

    // density
    CommonFlags density_flags;
    double density_tau = 1.0;
    int density_refinement = 16;
    std::string density_init;
    auto* density = app.add_subcommand(
        "density", "free / measured / exclusion / heat density profiles side by side");
    add_common_flags(density, density_flags);
    density->add_option("--tau", density_tau, "rescaled time")->required();
    density->add_option("--m", density_refinement, "measurement refinement M");
    density->add_option("--init", density_init, "initial configuration")->required();

    // trajectory
    CommonFlags trajectory_flags;
    double trajectory_interval = 0.2;
    std::int64_t trajectory_steps = 100;
    std::string trajectory_init;
    auto* trajectory = app.add_subcommand("trajectory",
                                          "sample one measurement outcome sequence");
    add_common_flags(trajectory, trajectory_flags);
    trajectory->add_option("--t", trajectory_interval, "measurement interval")->required();
    trajectory->add_option("--steps", trajectory_steps, "number of measurements");
    trajectory->add_option("--init", trajectory_init, "initial configuration")->required();

    try {
        const auto merged = merge_config_args(argc, argv);
        std::vector<const char*> pointers;
        pointers.push_back(argv[0]);
        for (const auto& arg : merged) pointers.push_back(arg.c_str());
        app.parse(static_cast<int>(pointers.size()), pointers.data());
    } catch (const CLI::ParseError& error) {
        if (error.get_exit_code() == 0) return app.exit(error);  // --help
        app.exit(error);
        return 1;
    } catch (const CliError& error) {
        std::fprintf(stderr, "error: %s\n", error.message.c_str());
        return error.exit_code;
    }

    try {
        if (car->parsed()) return run_car_check(car_flags);
        if (transition->parsed()) return run_transition(transition_flags, transition_t);
        if (generator->parsed()) return run_generator(generator_flags);
        if (independence->parsed())
            return run_independence(independence_flags, independence_potentials,
                                    independence_lambdas);
        if (scan->parsed())
            return run_zeno_scan(scan_flags, scan_tau, parse_int_list(scan_ms, "m"),
                                 scan_init, scan_init_file);
        if (survival->parsed())
            return run_zeno_survival(survival_flags, survival_time,
                                     parse_int_list(survival_ms, "m"), survival_init);
        if (lemma->parsed())
            return run_lemma_check(lemma_flags, lemma_dim, lemma_norm, lemma_scale,
                                   lemma_exponent, parse_int_list(lemma_ks, "k"));
        if (compare->parsed())
            return run_ssep_compare(compare_flags, compare_tau, compare_trajectories,
                                    compare_sample_rows, compare_init);
        if (density->parsed())
            return run_density(density_flags, density_tau, density_refinement, density_init);
        if (trajectory->parsed())
            return run_trajectory(trajectory_flags, trajectory_interval, trajectory_steps,
                                  trajectory_init);
    } catch (const CliError& error) {
        std::fprintf(stderr, "error: %s\n", error.message.c_str());
        return error.exit_code;
    } catch (const std::exception& error) {
        std::fprintf(stderr, "error: %s\n", error.what());
        return 2;
    }
    return 1;
}
