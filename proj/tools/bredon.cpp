#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bredon/report.hpp"

using namespace bredon;

namespace {

struct Global {
    std::string format = "text";
    unsigned jobs = 0;
    std::size_t size_cap = default_size_cap();
};

int emit(const Report& rep, const Global& g, double elapsed_ms)
{
    if (g.format == "json") {
        auto out = rep.data;
        out["elapsed_ms"] = elapsed_ms;
        out["exit_code"] = rep.exit_code;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << rep.text;
        std::cout << "elapsed: " << elapsed_ms << " ms\n";
    }
    return rep.exit_code;
}

int fail(const std::string& kind, const std::string& message, const Global& g)
{
    if (g.format == "json")
        std::cerr << error_json(kind, message).dump(2) << "\n";
    else
        std::cerr << "error [" << kind << "]: " << message << "\n";
    return exit_code::input_error;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bredon and virtual cohomological dimension of groups acting on finite developments"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--format", g.format, "Report rendering")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", g.jobs, "Parallel per-J workers (0: available parallelism)");
    app.add_option("--size-cap", g.size_cap, "Group enumeration cap (default from BREDON_SIZE_CAP or 20000)")
        ->check(CLI::PositiveNumber);

    std::string input;
    std::string theorem = "decomposition";
    bool dump = false;

    auto* cd = app.add_subcommand("cd", "Bredon cohomological dimension");
    cd->add_option("-i,--input", input, "Input JSON document")->required();
    auto* vcd = app.add_subcommand("vcd", "Virtual cohomological dimension of a Coxeter group, by two routes");
    vcd->add_option("-i,--input", input, "Input JSON document")->required();
    auto* verify = app.add_subcommand("verify", "Brute-force check of a structural identity on a finite development");
    verify->add_option("-i,--input", input, "Input JSON document")->required();
    verify->add_option("--theorem", theorem, "decomposition, bredon, lemma34 or acyclic")
        ->check(CLI::IsMember({"decomposition", "bredon", "lemma34", "acyclic"}))
        ->capture_default_str();
    auto* dev = app.add_subcommand("develop", "Build the finite development");
    dev->add_option("-i,--input", input, "Input JSON document")->required();
    dev->add_flag("--dump", dump, "Include the full face list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::input_error;
    }

    const auto start = std::chrono::steady_clock::now();
    RunOptions opts;
    opts.jobs = g.jobs;
    opts.size_cap = g.size_cap;
    try {
        const auto doc = load_input(input);
        Report rep;
        if (cd->parsed())
            rep = run_cd(doc, opts);
        else if (vcd->parsed())
            rep = run_vcd(doc, opts);
        else if (verify->parsed())
            rep = run_verify(doc, parse_theorem(theorem), opts);
        else
            rep = run_develop(doc, dump, opts);
        const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
        return emit(rep, g, ms.count());
    } catch (const InputError& e) {
        return fail(e.kind(), e.what(), g);
    } catch (const SizeCapExceeded& e) {
        return fail("SizeCapExceeded", e.what(), g);
    } catch (const std::invalid_argument& e) {
        return fail("InvalidInput", e.what(), g);
    }
}
