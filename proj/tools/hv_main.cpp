#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hvir/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Verma module engine for the generalized Heisenberg-Virasoro algebra"};
    app.require_subcommand(1);

    hvir::JobConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", cfg.group, "group preset: int, zsqrt2, zsqrt2-real, zsqrt2-lex");
        sub->add_option("--order", cfg.order, "order: natural, real or lex");
        sub->add_option("--hw", cfg.hw, "highest weight h,h_I,c,c_I,c_LI");
        sub->add_option("--json", cfg.json_path, "write the JSON report to this file");
    };

    CLI::App* bracket = app.add_subcommand("bracket", "bracket of two algebra elements");
    bracket->add_option("lhs", cfg.lhs, "left operand, e.g. \"L[2]\"")->required();
    bracket->add_option("rhs", cfg.rhs, "right operand, e.g. \"L[-2]\"")->required();
    add_common(bracket);

    CLI::App* act = app.add_subcommand("act", "apply a generator to a module vector");
    act->add_option("generator", cfg.generator_text, "e.g. \"L[1]\"")->required();
    act->add_option("vector", cfg.vector_text, "e.g. \"I[-1]v\"")->required();
    add_common(act);

    CLI::App* basis = app.add_subcommand("basis", "level bases of a discrete-order module");
    basis->add_option("--max-level", cfg.max_level, "largest level to tabulate");
    add_common(basis);

    CLI::App* transport = app.add_subcommand("transport", "highest weight of the Zx-submodule");
    transport->add_option("x", cfg.x_text, "positive scale, e.g. \"2\" or \"√2\"")->required();
    add_common(transport);

    CLI::App* singular = app.add_subcommand("singular", "level-bounded singular vector search");
    singular->add_option("--max-level", cfg.max_level, "level bound");
    add_common(singular);

    CLI::App* reduce = app.add_subcommand("reduce", "constructive reduction of a weight vector");
    reduce->add_option("--vector", cfg.vector_text, "vector literal; omit to sample by seed");
    reduce->add_option("--seed", cfg.seed, "sampling seed when no vector is given");
    add_common(reduce);

    CLI::App* decide = app.add_subcommand("decide", "(ir)reducibility verdict");
    decide->add_option("--max-level", cfg.max_level, "search bound for the discrete branch");
    add_common(decide);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    const hvir::RunResult result = hvir::run(cfg);
    std::cout << result.summary;
    if (!cfg.json_path.empty()) {
        std::ofstream out(cfg.json_path);
        if (!out) {
            std::cerr << "cannot write " << cfg.json_path << "\n";
            return 2;
        }
        out << result.report.dump(2) << "\n";
    }
    return result.exit_code;
}
