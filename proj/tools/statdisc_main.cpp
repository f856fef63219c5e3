// statdisc command-line front end. Parses flags into the JSON config the
// shared library's statdisc_run entry point consumes; all mathematics lives
// behind the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "statdisc/statdisc.h"

namespace {

using nlohmann::json;

// "re" or "re,im" per component, components separated by ';'.
json parse_complex_vector(const std::string& text) {
    json out = json::array();
    std::stringstream stream(text);
    std::string component;
    while (std::getline(stream, component, ';')) {
        const auto comma = component.find(',');
        double re = 0.0, im = 0.0;
        try {
            if (comma == std::string::npos) {
                re = std::stod(component);
            } else {
                re = std::stod(component.substr(0, comma));
                im = std::stod(component.substr(comma + 1));
            }
        } catch (const std::exception&) {
            throw CLI::ValidationError("cannot parse complex component '" +
                                       component + "'");
        }
        out.push_back(json::array({re, im}));
    }
    return out;
}

json parse_real_vector(const std::string& text) {
    json out = json::array();
    std::stringstream stream(text);
    std::string component;
    while (std::getline(stream, component, ',')) {
        try {
            out.push_back(std::stod(component));
        } catch (const std::exception&) {
            throw CLI::ValidationError("cannot parse real component '" +
                                       component + "'");
        }
    }
    return out;
}

// param:index:part:min:max:count, e.g. a:1:re:-0.05:0.05:5
json parse_grid_axis(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ':')) parts.push_back(piece);
    if (parts.size() != 6) {
        throw CLI::ValidationError(
            "grid axis must be param:index:part:min:max:count");
    }
    try {
        return json{{"param", parts[0]},   {"index", std::stoi(parts[1])},
                    {"part", parts[2]},    {"min", std::stod(parts[3])},
                    {"max", std::stod(parts[4])}, {"count", std::stoi(parts[5])}};
    } catch (const std::exception&) {
        throw CLI::ValidationError("cannot parse grid axis '" + text + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stationary discs and jet determination for quadric models "
                 "(library version " +
                 std::string(statdisc_version()) + ")"};
    app.require_subcommand(1);

    std::string input_path, a_text, b0_text, v_text, output_path;
    std::vector<std::string> tol_texts, grid_texts;
    int samples = 0, trials = 64, probes = 0;
    unsigned long long seed = 12345;
    double step = 0.0, radius = 0.0;
    bool dump = false, fourier = false;

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"check", "validate a quadric and certify a Levi direction"},
        {"solve-x", "solve the quadratic matrix equation and factorize the pencil"},
        {"disc", "emit boundary samples of a stationary disc and its lift"},
        {"verify", "check attachment, holomorphy and pinning of a disc"},
        {"jet", "1-jet of the lift at zeta = 1, closed form vs numeric"},
        {"jacobian", "1-jet map Jacobian and diffeomorphism verdict"},
        {"center", "center evaluation map and its Jacobian"},
        {"minimal", "stationary minimality certificate and equivalences"},
        {"defect", "defect test with witness lift"},
        {"scan", "grid scan recording Jacobians, minimality and defects"},
    };
    for (const auto& [name, description] : commands) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--input", input_path, "quadric JSON file")->required();
        sub->add_option("--a", a_text, "complex vector re,im;re,im;...");
        sub->add_option("--b0", b0_text, "real vector v1,...,vd");
        sub->add_option("--V", v_text, "complex vector re,im;re,im;...");
        sub->add_option("--samples", samples, "boundary sample count");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--trials", trials, "Levi direction search trials");
        sub->add_option("--step", step, "finite-difference step");
        sub->add_option("--radius", radius, "openness probe radius");
        sub->add_option("--probes", probes, "openness probe count");
        sub->add_option("--tol", tol_texts, "tolerance override NAME=VALUE")
            ->take_all();
        sub->add_option("--grid", grid_texts,
                        "scan axis param:index:part:min:max:count")
            ->take_all();
        sub->add_option("--output", output_path, "write the report here");
        sub->add_flag("--dump", dump, "serialize the pencil factorization");
        sub->add_flag("--fourier", fourier, "emit the Fourier coefficient table");
    }

    CLI11_PARSE(app, argc, argv);

    json config;
    try {
        config["command"] = app.get_subcommands().front()->get_name();
        config["input_path"] = input_path;
        if (!a_text.empty()) config["a"] = parse_complex_vector(a_text);
        if (!b0_text.empty()) config["b0"] = parse_real_vector(b0_text);
        if (!v_text.empty()) config["V"] = parse_complex_vector(v_text);
        if (samples > 0) config["samples"] = samples;
        config["seed"] = seed;
        config["trials"] = trials;
        if (step > 0.0) config["step"] = step;
        if (radius > 0.0) config["radius"] = radius;
        if (probes > 0) config["probes"] = probes;
        if (dump) config["dump"] = true;
        if (fourier) config["fourier"] = true;
        if (!tol_texts.empty()) {
            json tolerances;
            for (const std::string& text : tol_texts) {
                const auto eq = text.find('=');
                if (eq == std::string::npos) {
                    throw CLI::ValidationError("--tol expects NAME=VALUE");
                }
                tolerances[text.substr(0, eq)] = std::stod(text.substr(eq + 1));
            }
            config["tolerances"] = tolerances;
        }
        if (!grid_texts.empty()) {
            json grid = json::array();
            for (const std::string& text : grid_texts) {
                grid.push_back(parse_grid_axis(text));
            }
            config["grid"] = grid;
        }
    } catch (const std::exception& e) {
        std::cerr << "statdisc: " << e.what() << '\n';
        return 2;
    }

    char* report = nullptr;
    int exit_code = 2;
    const statdisc_status status =
        statdisc_run(config.dump().c_str(), &report, &exit_code);
    if (status != STATDISC_OK || report == nullptr) {
        std::cerr << "statdisc: " << statdisc_last_error() << '\n';
        return 2;
    }

    if (output_path.empty()) {
        std::fputs(report, stdout);
    } else {
        std::ofstream out(output_path, std::ios::binary);
        if (!out) {
            std::cerr << "statdisc: cannot write '" << output_path << "'\n";
            statdisc_string_free(report);
            return 2;
        }
        out << report;
    }
    statdisc_string_free(report);
    return exit_code;
}
