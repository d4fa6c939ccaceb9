// Command-line front end: exact plurigenera, the pluricanonical section
// index, and the replayed birationality-bound analysis for minimal 3-folds of
// general type described by chi, a singularity basket, and K^3 data.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tfold/case_engine.hpp"
#include "tfold/errors.hpp"
#include "tfold/fixtures.hpp"
#include "tfold/input.hpp"
#include "tfold/verify.hpp"

namespace {

tfold::ThreefoldData load_data(const std::string& file, const std::string& fixture) {
    if (!file.empty()) return tfold::to_threefold(tfold::load_input(file));
    return tfold::fixture_by_name(fixture);
}

tfold::Rational parse_rational_flag(const std::string& text, const char* flag) {
    try {
        return tfold::Rational::parse(text);
    } catch (const tfold::ParseError& e) {
        throw tfold::ParseError(std::string("bad value for ") + flag + ": " + e.what());
    }
}

bool want_color(bool force) {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return force || isatty(STDOUT_FILENO) != 0;
}

int run(int argc, char** argv) {
    CLI::App app{
        "Exact arithmetic for minimal projective 3-folds of general type: plurigenera "
        "from chi/basket/K^3 data, the pluricanonical section index, and the replayed "
        "case analysis behind the level-57 birationality bound."};
    app.require_subcommand(1);

    std::string file;
    std::string fixture = "chen-delta18";
    long long max_m = 60;
    std::string csv_path;
    long long delta_limit = 100;
    std::string l2_text, beta_tilde_text;
    long long floor_level = 38;
    long long xi_deg = 2;
    std::string m0_text, beta_text;
    bool even_curve = false;
    long long xi_mlo = 2, xi_mhi = 200;
    bool use_paper = false;
    bool color_always = false;
    std::string cert_dir;

    auto add_data_options = [&](CLI::App* cmd) {
        cmd->add_option("file", file,
                        "input document (key = value lines; defaults to the built-in "
                        "'chen-delta18' dataset)");
        cmd->add_option("--fixture", fixture, "built-in dataset name")
            ->capture_default_str();
    };

    CLI::App* plurigenera =
        app.add_subcommand("plurigenera", "print P_m for m = 2..max-m");
    add_data_options(plurigenera);
    plurigenera->add_option("--max-m", max_m, "largest m to evaluate")->capture_default_str();
    plurigenera->add_option("--csv", csv_path, "also write 'm,P_m' rows to this file");

    CLI::App* delta =
        app.add_subcommand("delta", "least m with at least two m-canonical sections");
    add_data_options(delta);
    delta->add_option("--limit", delta_limit, "search limit")->capture_default_str();

    CLI::App* k3 = app.add_subcommand("k3", "solve K^3 from the plurigenus constraints");
    add_data_options(k3);

    CLI::App* cartier =
        app.add_subcommand("cartier-index", "lcm of the singularity indices");
    add_data_options(cartier);

    CLI::App* bound = app.add_subcommand(
        "bound", "birationality level from an L^2 lower bound and a slope coefficient");
    bound->add_option("--l2", l2_text, "certified lower bound for L^2 (rational)")
        ->required();
    bound->add_option("--beta-tilde", beta_tilde_text,
                      "certified coefficient against sigma*(K_F0) (rational)")
        ->required();
    bound->add_option("--floor", floor_level, "distinguishing floor")->capture_default_str();

    CLI::App* xi = app.add_subcommand(
        "xi-optimize", "best fixed-point lower bound for xi = deg(L|_C)");
    xi->add_option("--deg", xi_deg, "degree of K_C on the generic curve")->required();
    xi->add_option("--m0-over-a", m0_text, "initial multiple/section ratio (rational)")
        ->required();
    xi->add_option("--beta", beta_text, "coefficient with L >= beta * C (rational)")
        ->required();
    xi->add_flag("--even", even_curve, "intersections against C are even");
    xi->add_option("--m-lo", xi_mlo, "sweep start")->capture_default_str();
    xi->add_option("--m-hi", xi_mhi, "sweep end")->capture_default_str();

    CLI::App* verify = app.add_subcommand(
        "verify", "replay the full verification suite (exit 3 on any failed check)");
    add_data_options(verify);
    verify->add_flag("--paper", use_paper, "use the built-in chen-delta18 dataset");
    verify->add_option("--emit-certificates", cert_dir,
                       "write one scenario certificate file per case into this directory");
    verify->add_flag("--color-always", color_always,
                     "color PASS/FAIL even when stdout is not a terminal (NO_COLOR wins)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (plurigenera->parsed()) {
        tfold::ThreefoldData X = load_data(file, fixture);
        auto table = tfold::plurigenus_table(X, max_m);
        for (const auto& [m, value] : table)
            std::cout << "P" << m << " = " << value.str() << "\n";
        if (!csv_path.empty()) {
            std::ofstream out(csv_path);
            if (!out) throw tfold::DataError("cannot write csv file '" + csv_path + "'");
            out << "m,P_m\n";
            for (const auto& [m, value] : table) out << m << "," << value.str() << "\n";
        }
        return 0;
    }
    if (delta->parsed()) {
        tfold::ThreefoldData X = load_data(file, fixture);
        std::cout << tfold::delta_index(X, delta_limit) << "\n";
        return 0;
    }
    if (k3->parsed()) {
        tfold::ThreefoldData X = load_data(file, fixture);
        std::cout << tfold::solve_k3(X).str() << "\n";
        return 0;
    }
    if (cartier->parsed()) {
        tfold::ThreefoldData X = load_data(file, fixture);
        std::cout << tfold::cartier_index(X.basket).str() << "\n";
        return 0;
    }
    if (bound->parsed()) {
        tfold::RestrictionBound rb{parse_rational_flag(l2_text, "--l2"),
                                   parse_rational_flag(beta_tilde_text, "--beta-tilde"),
                                   floor_level};
        std::cout << tfold::prop_k1_bound(rb).str() << "\n";
        return 0;
    }
    if (xi->parsed()) {
        tfold::XiProblem problem{xi_deg, parse_rational_flag(m0_text, "--m0-over-a"),
                                 parse_rational_flag(beta_text, "--beta"), even_curve};
        std::cout << tfold::optimize_xi(problem, xi_mlo, xi_mhi).str() << "\n";
        return 0;
    }
    if (verify->parsed()) {
        tfold::ThreefoldData X =
            use_paper ? tfold::fixture_by_name("chen-delta18") : load_data(file, fixture);
        tfold::VerifyReport report = tfold::run_full_verification(X);
        std::cout << tfold::format_report(report, want_color(color_always));
        if (!cert_dir.empty()) {
            std::filesystem::create_directories(cert_dir);
            for (const auto& case_report : report.case_reports) {
                std::filesystem::path path =
                    std::filesystem::path(cert_dir) /
                    (std::string(tfold::to_string(case_report.scenario_id)) + ".cert");
                std::ofstream out(path);
                if (!out)
                    throw tfold::DataError("cannot write certificate '" + path.string() + "'");
                out << case_report.str();
            }
            if (report.case_reports.empty())
                std::cerr << "note: scenario stage did not run; no certificates written\n";
        }
        return report.all_pass() ? 0 : 3;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const tfold::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const tfold::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
