// symsing: exact and Monte Carlo experiments on symmetric +-1 matrices.
//
//   symsing qn --n 4
//   symsing verify decoupling --trials 10000 --seed 7 --format jsonl --out dec.jsonl
//   symsing badset --n 3 --p 3 --k 1 --s 2 --t 1
//   symsing halasz --p 101 --n 200 --k 2 --f 2
//   symsing schedule --n 16,10000
//
// Exit status: 0 all verdicts ok, 1 some verdict false, 2 usage or budget error.

#include "symsing/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open config file " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Singularity experiments for random symmetric +-1 matrices"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(symsing::kVersion));

    // Every flag is recorded as text and applied over the config file, so flags
    // always win.
    std::vector<std::pair<std::string, std::string>> flags;
    std::string config_path;
    std::string verifier;
    std::vector<std::string> extra;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "Flat 'key = value' config file");
        for (const char* name : {"n", "trials", "seed", "p", "format", "out", "k", "s", "t", "s1", "s2", "d", "mode",
                                 "ell", "alpha", "beta_n", "rho", "f", "c", "a", "mu_den", "instances", "n_max",
                                 "k_max", "m_max", "p_max", "dim", "max_support"}) {
            const std::string key = name;
            std::string flag = "--" + key;
            for (auto& ch : flag)
                if (ch == '_') ch = '-';
            sub->add_option_function<std::string>(
                flag, [&flags, key](const std::string& v) { flags.emplace_back(key, v); }, "Set '" + key + "'");
        }
        sub->add_option("--set", extra, "Extra key=value parameter (repeatable)");
    };

    auto* qn = app.add_subcommand("qn", "Singularity probability q_n (exhaustive or Monte Carlo)");
    auto* verify = app.add_subcommand("verify", "Run a registered verifier");
    verify->add_option("name", verifier, "Verifier name")->required();
    auto* badset = app.add_subcommand("badset", "Exact bad-set size against the counting bound");
    auto* halasz = app.add_subcommand("halasz", "Halasz inequality on one instance");
    auto* schedule = app.add_subcommand("schedule", "Parameter schedule for given n");
    for (auto* sub : {qn, verify, badset, halasz, schedule}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : kExitUsage;
    }

    try {
        symsing::ExperimentConfig config;
        if (!config_path.empty()) config.merge_text(read_file(config_path));
        config.command = app.get_subcommands().front()->get_name();
        if (config.command == "verify") config.verifier = verifier;
        for (const auto& [k, v] : flags) config.set(k, v);
        for (const auto& kv : extra) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
            config.set(kv.substr(0, eq), kv.substr(eq + 1));
        }

        const auto result = symsing::run_experiment(config, symsing::workers_from_env());
        if (config.out.empty()) {
            std::cout << symsing::render_report(result.report, config.format);
        } else {
            symsing::emit_report(result.report, config.format, config.out);
        }
        return result.all_ok ? kExitOk : kExitVerdict;
    } catch (const symsing::BudgetExceeded& e) {
        std::cerr << "symsing: budget exceeded: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "symsing: " << e.what() << '\n';
        return kExitUsage;
    }
}
