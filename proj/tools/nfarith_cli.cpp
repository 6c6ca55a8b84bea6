#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "nfarith/driver.hpp"

namespace {

void add_common(CLI::App* cmd, nfarith::RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "key=value config file (flags override it)");
    cmd->add_option("--fields", cfg.fields, "field specs (quad:D | cyclo:t | poly:...)");
    cmd->add_option("--fn", cfg.fn, "function descriptor, e.g. 'sigma:1@quad:-4'");
    cmd->add_option("--xmax", cfg.xmax, "sieve/summatory bound");
    cmd->add_option("--nmax", cfg.nmax, "Dirichlet series truncation length");
    cmd->add_option("--grid-ratio", cfg.grid_ratio, "geometric grid ratio");
    cmd->add_option("--threads", cfg.threads, "worker thread count");
    cmd->add_option("--mem-limit", cfg.mem_limit, "memory budget in bytes (0 = unlimited)");
    cmd->add_option("--out", cfg.out, "output file (default stdout)");
    cmd->add_option("--overrides", cfg.overrides_file, "bad-prime override file");
}

// flags win over the config file: re-parse the file first, then let CLI11
// apply whatever the user passed
nfarith::RunConfig merge_config(const CLI::App* cmd, nfarith::RunConfig flags,
                                const std::string& config_path) {
    if (config_path.empty()) return flags;
    std::ifstream in(config_path);
    if (!in) throw nfarith::UsageError("cannot open config file '" + config_path + "'");
    nfarith::RunConfig cfg = nfarith::parse_config_file(in);
    if (!cmd->get_option("--fields")->empty()) cfg.fields = flags.fields;
    if (!cmd->get_option("--fn")->empty()) cfg.fn = flags.fn;
    if (!cmd->get_option("--xmax")->empty()) cfg.xmax = flags.xmax;
    if (!cmd->get_option("--nmax")->empty()) cfg.nmax = flags.nmax;
    if (!cmd->get_option("--grid-ratio")->empty()) cfg.grid_ratio = flags.grid_ratio;
    if (!cmd->get_option("--threads")->empty()) cfg.threads = flags.threads;
    if (!cmd->get_option("--mem-limit")->empty()) cfg.mem_limit = flags.mem_limit;
    if (!cmd->get_option("--out")->empty()) cfg.out = flags.out;
    if (!cmd->get_option("--overrides")->empty()) cfg.overrides_file = flags.overrides_file;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal-counting, divisor and sum-of-divisor functions over number fields"};
    app.require_subcommand(1);

    nfarith::RunConfig cfg;
    std::string config_path;
    uint64_t split_p = 0;

    auto* verify = app.add_subcommand("verify", "run the lemma suite, emit findings CSV");
    add_common(verify, cfg, config_path);
    auto* sum = app.add_subcommand("sum", "summatory values vs predicted main term");
    add_common(sum, cfg, config_path);
    auto* moment = app.add_subcommand("moment", "second moments of the error term");
    add_common(moment, cfg, config_path);
    auto* useries = app.add_subcommand("useries", "U-series coefficients and prime check");
    add_common(useries, cfg, config_path);
    auto* constants = app.add_subcommand("constants", "main-term constants with error estimates");
    add_common(constants, cfg, config_path);
    auto* finfo = app.add_subcommand("field-info", "print parsed field data");
    add_common(finfo, cfg, config_path);
    auto* split = app.add_subcommand("split", "splitting type of a prime");
    add_common(split, cfg, config_path);
    split->add_option("p", split_p, "rational prime")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* active = app.get_subcommands().front();
        nfarith::RunConfig merged = merge_config(active, cfg, config_path);
        if (active == verify) return nfarith::run_verify(merged);
        if (active == sum) return nfarith::run_sum(merged);
        if (active == moment) return nfarith::run_moment(merged);
        if (active == useries) return nfarith::run_useries(merged);
        if (active == constants) return nfarith::run_constants(merged);
        if (active == finfo) return nfarith::run_field_info(merged);
        if (active == split) return nfarith::run_split(merged, split_p);
    } catch (const nfarith::MemoryBudgetError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return nfarith::EXIT_RESOURCE;
    } catch (const nfarith::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return nfarith::EXIT_USAGE;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return nfarith::EXIT_USAGE;
    }
    return nfarith::EXIT_USAGE;
}
