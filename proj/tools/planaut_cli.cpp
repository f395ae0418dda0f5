// Command-line front end. Links only the C interface.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "planaut/planaut.h"

namespace {

constexpr int kExitInput = 4;
constexpr int kExitInternal = 5;

bool read_source(const std::string& path, std::string& out) {
    if (path == "-") {
        out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

int emit(pa_status status, pa_report* report, pa_format format) {
    if (status != PA_OK) {
        std::cerr << "planaut: " << pa_status_name(status) << ": " << pa_last_error() << "\n";
        return status == PA_ERR_INTERNAL ? kExitInternal : kExitInput;
    }
    std::fputs(pa_report_render(report, format), stdout);
    const int code = pa_report_exit_code(report);
    pa_report_free(report);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invert plane polynomial maps with scattered degrees over the rationals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(pa_version()));

    std::string format_name;
    const std::map<std::string, pa_format> formats{{"text", PA_FORMAT_TEXT}, {"structured", PA_FORMAT_STRUCTURED}};
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Report form: text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    std::string path;
    long bound = 0;

    auto* check = app.add_subcommand("check", "Check the hypotheses and coefficient identities of a map file");
    check->add_option("file", path, "Input file with f = ... and g = ... ('-' for stdin)")->required();
    add_format(check);

    auto* invert = app.add_subcommand("invert", "Compute and verify the inverse of a map file");
    invert->add_option("file", path, "Input file with f = ... and g = ... ('-' for stdin)")->required();
    invert->add_option("--bound", bound, "Degree bound of the power-series cross-check")
        ->check(CLI::Range(1L, 4096L));
    add_format(invert);

    std::vector<std::uint32_t> degrees{1};
    int case_number = 1;
    std::uint32_t coeff_bound = 100;
    std::uint64_t seed = 1;
    bool twist = false;
    auto* generate = app.add_subcommand("generate", "Emit a random invertible map and its expected inverse");
    generate->add_option("--degrees", degrees, "Comma-separated degree set, must contain 1")->delimiter(',');
    generate->add_option("--case", case_number, "Normal form: 1, 2 or 3");
    generate->add_option("--coeff-bound", coeff_bound, "Bound on numerators and denominators");
    generate->add_option("--seed", seed, "Random seed");
    generate->add_flag("--twist", twist, "Substitute a random invertible linear change of variables");
    add_format(generate);

    std::uint32_t count = 100;
    std::uint32_t max_degree = 8;
    unsigned workers = 0;
    bool inject_fault = false;
    auto* selftest = app.add_subcommand("selftest", "Run the randomized property suite");
    selftest->add_option("--count", count, "Number of trials");
    selftest->add_option("--max-degree", max_degree, "Largest degree in generated degree sets");
    selftest->add_option("--seed", seed, "Random seed");
    selftest->add_option("--coeff-bound", coeff_bound, "Bound on numerators and denominators");
    selftest->add_option("--workers", workers, "Worker threads (0 = all cores)");
    selftest->add_flag("--inject-fault", inject_fault)->group("");
    add_format(selftest);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    const auto format_or = [&](pa_format fallback) {
        return format_name.empty() ? fallback : formats.at(format_name);
    };

    pa_report* report = nullptr;
    if (check->parsed() || invert->parsed()) {
        std::string source;
        if (!read_source(path, source)) {
            std::cerr << "planaut: cannot read " << path << "\n";
            return kExitInput;
        }
        const pa_status s = check->parsed() ? pa_run_check(source.c_str(), path.c_str(), &report)
                                            : pa_run_invert(source.c_str(), path.c_str(), bound, &report);
        return emit(s, report, format_or(PA_FORMAT_TEXT));
    }
    if (generate->parsed()) {
        pa_generate_options o{degrees.data(), degrees.size(), case_number, coeff_bound, seed, twist ? 1 : 0};
        const pa_status s = pa_run_generate(&o, &report);
        return emit(s, report, format_or(PA_FORMAT_TEXT));
    }
    pa_selftest_options o{count, max_degree, seed, coeff_bound, workers, inject_fault ? 1 : 0};
    const pa_status s = pa_run_selftest(&o, &report);
    return emit(s, report, format_or(PA_FORMAT_STRUCTURED));
}
