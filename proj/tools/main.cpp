#include <iostream>

#include "CLI11.hpp"

#include "gocohom/cli.hpp"

namespace {

void add_common(CLI::App* sub, gocohom::Command& cmd) {
    sub->add_option("--n", cmd.n, "Half-rank parameter n of GO(2n)")->required();
    sub->add_option("--format", cmd.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--cache-dir", cmd.cache_dir, "Directory for the on-disk cache")
        ->envname("GOCOHOM_CACHE_DIR");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact mod-2 cohomology of BGO(2n): bases, presentations, "
                 "characteristic classes"};
    app.require_subcommand(1);

    gocohom::Command cmd;

    CLI::App* basis = app.add_subcommand("basis", "Print the basis of one degree");
    add_common(basis, cmd);
    basis->add_option("--degree", cmd.degree, "Cohomological degree")->required();
    basis->callback([&] { cmd.kind = gocohom::Command::Kind::Basis; });

    CLI::App* mul = app.add_subcommand("mul", "Multiply two ring elements");
    add_common(mul, cmd);
    mul->add_option("exprs", cmd.exprs, "Two expressions")->expected(2);
    mul->callback([&] { cmd.kind = gocohom::Command::Kind::Mul; });

    CLI::App* coords = app.add_subcommand("coords", "Coordinates over the degree basis");
    add_common(coords, cmd);
    coords->add_option("--degree", cmd.degree, "Cohomological degree")->required();
    coords->add_option("exprs", cmd.exprs, "One expression")->expected(1);
    coords->callback([&] { cmd.kind = gocohom::Command::Kind::Coords; });

    CLI::App* chern = app.add_subcommand("chern", "Image of a mod-2 Chern class");
    add_common(chern, cmd);
    chern->add_option("--index", cmd.chern_index, "Chern class index i, 1 <= i <= 2n")
        ->required();
    chern->callback([&] {
        cmd.kind = gocohom::Command::Kind::Chern;
        if (chern->count("--format") == 0) cmd.format = "json";
    });

    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    add_common(verify, cmd);
    verify->add_option("--max-degree", cmd.max_degree, "Check degrees 0..D");
    verify->add_option("--suite", cmd.suite, "Suite selection")
        ->check(CLI::IsMember({"all", "koszul", "presentation", "cohomology", "chern"}));
    verify->add_option("--jobs", cmd.jobs, "Parallel degree slices");
    verify->callback([&] { cmd.kind = gocohom::Command::Kind::Verify; });

    CLI::App* series = app.add_subcommand("series", "Graded dimensions");
    add_common(series, cmd);
    series->add_option("--max-degree", cmd.max_degree, "Degrees 0..D");
    series->add_option("--ring", cmd.ring, "H, C, B or odd")
        ->check(CLI::IsMember({"H", "C", "B", "odd"}));
    series->callback([&] { cmd.kind = gocohom::Command::Kind::Series; });

    CLI::App* table = app.add_subcommand("table", "The H^0..H^5 table");
    add_common(table, cmd);
    table->callback([&] { cmd.kind = gocohom::Command::Kind::Table; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    return gocohom::run(cmd, std::cout, std::cerr);
}
