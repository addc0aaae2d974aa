// symcodes: Wedderburn-Artin decomposition, central primitive idempotents,
// minimal group codes, and essentiality for F_q S_n and F_q A_n (p > n,
// 3 <= n <= 7).
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symcodes/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Wedderburn-Artin decomposition, central primitive idempotents and minimal group codes of F_q[S_n] and F_q[A_n]"};
    app.require_subcommand(1);

    symcodes::RunConfig cfg;
    std::string group = "an";

    struct SubSpec {
        const char* name;
        const char* help;
        bool field_required;
        bool selector;
    };
    const SubSpec specs[] = {
        {"decompose", "print the Wedderburn-Artin block structure", true, false},
        {"idempotents", "print the central primitive idempotents", true, true},
        {"code", "extract the group code of one block (generator matrix, parameters)", true, true},
        {"distance", "minimum distance of one block's code", true, true},
        {"essential", "decide essentiality of the block idempotents", true, true},
        {"chartable", "print the character table of A_n", false, false},
    };
    for (const auto& spec : specs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.help);
        sub->add_option("--group", group, "sn or an")->required();
        sub->add_option("--n", cfg.n, "degree, 3..7")->required();
        auto* popt = sub->add_option("--p", cfg.p, "field characteristic, a prime > n");
        if (spec.field_required) popt->required();
        sub->add_option("--f", cfg.f, "extension degree of F_q = F_{p^f}")->capture_default_str();
        if (spec.selector)
            sub->add_option("--lambda", cfg.selector, "block selector, e.g. \"3,1\" or \"2,2+\"");
        sub->add_flag("--json", cfg.json, "emit JSON instead of text");
        sub->add_flag("--verbose", cfg.verbose, "extra diagnostics");
        sub->add_option("--threshold", cfg.threshold, "exhaustive enumeration cutoff (codewords)")
            ->capture_default_str();
        sub->add_option("--samples", cfg.samples, "sampling effort past the cutoff")->capture_default_str();
        sub->add_option("--seed", cfg.seed, "sampling seed")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0, any parse failure is a config error
    }

    try {
        cfg.group = symcodes::parse_group(group);
        return symcodes::run_command(app.get_subcommands().front()->get_name(), cfg, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
