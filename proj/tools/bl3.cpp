// bl3: dimension, fixed components and base locus of L3(d; m_1, ..., m_r).

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "bl3/report.hpp"

int main(int argc, char** argv) {
    using namespace bl3::report;
    CLI::App app{"Linear systems of surfaces in P^3 through at most 8 general fat points"};
    app.require_subcommand(0, 1);

    Options opt;
    std::string fixtures;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--seed", opt.seed, "seed for the oracle point configuration")->capture_default_str();
    app.add_option("--prime", opt.prime, "prime for the oracle field")->capture_default_str();
    app.add_flag("--oracle", opt.oracle, "cross-check dimension by interpolation (dim)");
    app.add_option("--fixtures", fixtures, "run regression fixtures from a file");

    std::string system;
    auto add = [&](const char* name, const char* help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("system", system, "e.g. \"L3(15;13,10,9,7,6,3^2,2)\"")->required();
        sub->fallthrough();
        return sub;
    };
    auto* dim = add("dim", "h0 and projective dimension");
    auto* fixed = add("fixed", "fixed components and the residual system");
    auto* bs = add("bs", "full base locus");
    auto* reduce = add("reduce", "Cremona reduction diagram");
    auto* verify = add("verify", "oracle battery on a random configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    Outcome o;
    if (!fixtures.empty())
        o = run_fixtures(fixtures, opt);
    else if (dim->parsed())
        o = cmd_dim(system, opt);
    else if (fixed->parsed())
        o = cmd_fixed(system, opt);
    else if (bs->parsed())
        o = cmd_bs(system, opt);
    else if (reduce->parsed())
        o = cmd_reduce(system, opt);
    else if (verify->parsed())
        o = cmd_verify(system, opt);
    else {
        std::cerr << app.help();
        return kUsage;
    }
    std::cout << o.out;
    std::cerr << o.err;
    return o.code;
}
