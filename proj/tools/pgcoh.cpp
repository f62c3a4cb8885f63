#include <iostream>

#include "CLI11.hpp"
#include "phigamma/cli.hpp"

using namespace phigamma;

int main(int argc, char** argv) {
    CLI::App app{"pgcoh: exact complexes and cohomology of finite modules over truncated "
                 "noncommutative group rings"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string grid_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--grid", grid_text, "level grid p,n,m,N,l[;p,n,m,N,l...]");
        sub->add_option("--out", cfg.out, "output path (examples: output directory)");
        sub->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--max-strand-degree", cfg.max_strand_degree,
                        "largest Koszul strand degree audited (default 6)");
        sub->add_option("--seed", cfg.seed, "seed for randomized families (default 0)");
    };

    CLI::App* audit = app.add_subcommand("audit", "relation, d^2 = 0, and strand audits");
    add_common(audit);

    CLI::App* coh = app.add_subcommand("cohomology", "cohomology of module files");
    add_common(coh);
    coh->add_option("--module", cfg.module_paths, "module file in the interchange format")
        ->expected(-1);
    coh->add_flag("--with-phi", cfg.with_phi, "require phi data and report its complex");

    CLI::App* ex = app.add_subcommand("examples", "write builtin module families");
    add_common(ex);
    ex->add_option("family", cfg.family, "family name, e.g. trivial or cyclic_quotient(7)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!grid_text.empty()) {
        try {
            cfg.grid = parse_grid(grid_text);
        } catch (const Error& e) {
            std::cerr << "pgcoh: " << e.what() << "\n";
            return kExitUsage;
        }
    }

    if (audit->parsed()) return cmd_audit(cfg);
    if (coh->parsed()) return cmd_cohomology(cfg);
    return cmd_examples(cfg);
}
