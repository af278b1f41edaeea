// cuboid_verify: batch exclusion and irreducibility reports for P_{a,u}.
//
// Exit codes: 0 all clean, 1 violation found, 2 usage or config error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cuboid/error.hpp"
#include "cuboid/report.hpp"

int main(int argc, char** argv) {
    using namespace cuboid;
    CLI::App app{"Exact exclusion checks and irreducibility certificates for the cuboid octic"};

    report::RunConfig config;
    std::string pairs, checks, format = "json", out;
    bool ec_suite = false;
    app.add_option("--a-max", config.a_max, "largest a in the sweep");
    app.add_option("--u-max", config.u_max, "largest u in the sweep");
    app.add_option("--pairs", pairs, "file with one 'a u' pair per line");
    app.add_option("--checks", checks,
                   "comma list of star,even44,conj44,quad26,gcd_lemma,ec_torsion,residuals,oracle,full or all");
    app.add_option("--prime-limit", config.prime_limit, "oracle uses all primes below this");
    app.add_option("--format", format, "json or tsv");
    app.add_option("--out", out, "output path (stdout by default)");
    app.add_option("--jobs", config.jobs, "worker threads");
    app.add_flag("--ec-suite", ec_suite, "run the elliptic curve battery only");
    app.add_flag("--timing", config.timing, "record wall time per check");
    app.add_option("--gcd-max-abs", config.gcd_max_abs, "gcd lemma: |X| bound");
    app.add_option("--gcd-param-range", config.gcd_param_range, "gcd lemma: a, u bound");
    app.add_option("--residual-bound", config.residual_bound, "residual system search bound");
    app.add_option("--p2-residual-bound", config.p2_residual_bound, "p = 2 residual search bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::ofstream file;
    if (!out.empty()) {
        file.open(out);
        if (!file) {
            std::cerr << "cannot open " << out << '\n';
            return 2;
        }
    }
    std::ostream& sink = out.empty() ? std::cout : file;

    if (ec_suite) {
        const auto rep = report::run_ec_suite();
        sink << report::to_json(rep).dump() << '\n';
        return rep.all_pass() ? 0 : 1;
    }

    try {
        if (!pairs.empty()) config.pairs_file = pairs;
        if (!checks.empty()) config.checks = report::parse_checks(checks);
        if (format == "json" || format == "jsonl" || format == "json-lines") config.format = report::Format::JsonLines;
        else if (format == "tsv") config.format = report::Format::Tsv;
        else throw Error(ErrorCode::ParseError, "unknown format '" + format + "'");
        config.validate();
        // Surface an unreadable pairs file as a config error before any work.
        (void)report::work_items(config);
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    const auto result = report::run_batch(config);
    report::write_batch(result, config.format, sink);
    sink.flush();
    return report::exit_code(result);
}
