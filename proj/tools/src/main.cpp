#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include <qsmear/errors.hpp>

#include "commands.hpp"
#include "run_config.hpp"
#include "table.hpp"

int main(int argc, char** argv) {
    using namespace qsmear::cli;

    CLI::App app{"smeared-space quantum mechanics toolbox"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "1.0.0");

    RunConfig cfg;
    attach_options(app, cfg);
    app.set_config("--config", "", "flat key=value config file; command-line flags win");

    CLI::App* scales = app.add_subcommand("scales", "characteristic lengths, masses, densities");

    UncertaintyOptions uncertainty_opt;
    CLI::App* uncertainty =
        app.add_subcommand("uncertainty", "generalized width product sweep");
    uncertainty->add_option("--beta-list", uncertainty_opt.betas, "beta values to sweep")
        ->delimiter(',');
    uncertainty->add_option("--widths", uncertainty_opt.widths, "packet widths to sweep")
        ->delimiter(',');
    uncertainty->add_option("--random-widths", uncertainty_opt.random_widths,
                            "number of seeded log-uniform widths");

    MeasureOptions measure_opt;
    CLI::App* measure =
        app.add_subcommand("measure", "condition a packet on position outcomes");
    measure->add_option("--psi-mean", measure_opt.psi_mean, "packet center")
        ->capture_default_str();
    measure->add_option("--psi-width", measure_opt.psi_width, "packet width")
        ->capture_default_str();
    measure->add_option("--outcomes", measure_opt.outcomes, "recorded positions")->delimiter(',');
    measure->add_option("--samples", measure_opt.samples, "outcomes to draw before the recorded ones");

    EvolveOptions evolve_opt;
    CLI::App* evolve = app.add_subcommand("evolve", "propagate a packet in time");
    evolve->add_option("--mass", evolve_opt.mass, "particle mass")->capture_default_str();
    evolve->add_option("--time", evolve_opt.time, "total evolution time")->capture_default_str();
    evolve->add_option("--steps", evolve_opt.steps, "splitting steps; 0 reports the initial state")
        ->capture_default_str();
    evolve->add_option("--psi-mean", evolve_opt.psi_mean, "packet center")->capture_default_str();
    evolve->add_option("--psi-width", evolve_opt.psi_width, "packet width")->capture_default_str();
    evolve->add_option("--wavenumber", evolve_opt.wavenumber, "initial phase wavenumber")
        ->capture_default_str();
    evolve->add_option("--potential", evolve_opt.potential, "free or harmonic")
        ->check(CLI::IsMember({"free", "harmonic"}))
        ->capture_default_str();
    evolve->add_option("--omega", evolve_opt.omega, "harmonic frequency")->capture_default_str();
    evolve->add_option("--center", evolve_opt.center, "harmonic center")->capture_default_str();

    EntangleOptions entangle_opt;
    CLI::App* entangle =
        app.add_subcommand("entangle", "two-particle entanglement from a shared background");
    entangle->add_option("--kernel", entangle_opt.kernel,
                         "product-gaussian, radial-exponential, or point")
        ->check(CLI::IsMember({"product-gaussian", "radial-exponential", "point"}))
        ->capture_default_str();
    entangle->add_option("--psi-width", entangle_opt.psi_width, "per-particle packet width")
        ->capture_default_str();
    entangle->add_option("--separation", entangle_opt.separation, "distance between packet centers")
        ->capture_default_str();
    entangle->add_option("--pair-n", entangle_opt.pair_n, "points per particle axis")
        ->capture_default_str();
    entangle->add_option("--pair-extent", entangle_opt.pair_extent, "particle window length")
        ->capture_default_str();
    entangle->add_option("--offset-n", entangle_opt.offset_n, "points per offset axis")
        ->capture_default_str();
    entangle->add_option("--offset-extent", entangle_opt.offset_extent, "offset window length")
        ->capture_default_str();

    PovmOptions povm_opt;
    CLI::App* povm_compare =
        app.add_subcommand("povm-compare", "unsharp detectors versus the smearing route");
    povm_compare->add_option("--sigma-x", povm_opt.sigma_x, "position detector resolution");
    povm_compare->add_option("--sigma-p", povm_opt.sigma_p, "momentum detector resolution");
    povm_compare->add_option("--psi-mean", povm_opt.psi_mean, "packet center")
        ->capture_default_str();
    povm_compare->add_option("--psi-width", povm_opt.psi_width, "packet width")
        ->capture_default_str();

    MassRadiusOptions massradius_opt;
    CLI::App* massradius =
        app.add_subcommand("massradius", "mass-radius table with regime labels");
    massradius->add_option("--mass-min", massradius_opt.mass_min, "smallest mass, grams");
    massradius->add_option("--mass-max", massradius_opt.mass_max, "largest mass, grams");
    massradius->add_option("--rows", massradius_opt.rows, "log-spaced rows")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        cfg.validate();

        Table table;
        if (app.got_subcommand(scales)) {
            table = cmd_scales(cfg);
        } else if (app.got_subcommand(uncertainty)) {
            table = cmd_uncertainty(cfg, uncertainty_opt);
        } else if (app.got_subcommand(measure)) {
            table = cmd_measure(cfg, measure_opt);
        } else if (app.got_subcommand(evolve)) {
            table = cmd_evolve(cfg, evolve_opt);
        } else if (app.got_subcommand(entangle)) {
            table = cmd_entangle(cfg, entangle_opt);
        } else if (app.got_subcommand(povm_compare)) {
            table = cmd_povm_compare(cfg, povm_opt);
        } else {
            table = cmd_massradius(cfg, massradius_opt);
        }
        write_output(table, cfg.out_path, cfg.format);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::FileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const qsmear::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
}
