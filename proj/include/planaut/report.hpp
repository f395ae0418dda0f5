#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace planaut {

enum class Verdict {
    Pass,
    NotScattered,     ///< exit 2
    JacobianNotUnit,  ///< exit 3
    ParseError,       ///< exit 4
    InputError,       ///< exit 4: constant terms, invalid generator spec or flags
    InternalError,    ///< exit 5: a proven identity failed
};

std::string_view verdict_name(Verdict v) noexcept;
int exit_code(Verdict v) noexcept;

/// Result of one command. `document` always carries "command", "input",
/// "verdict" and "exit_code"; keys are sorted, so serialization is canonical.
struct Report {
    std::string command;
    Verdict verdict = Verdict::Pass;
    nlohmann::json document;
    std::vector<std::string> text_lines;

    int exit_code() const noexcept { return planaut::exit_code(verdict); }
    std::string structured() const;
    std::string text() const;
};

Report run_check(std::string_view source_text, std::string_view source_name);

/// series_bound: degree bound for the power-series cross-check; defaults to
/// the largest degree of the map plus 2.
Report run_invert(std::string_view source_text, std::string_view source_name,
                  std::optional<std::uint32_t> series_bound = std::nullopt);

struct GenerateOptions {
    std::vector<std::uint32_t> degrees{1};
    int case_number = 1;  ///< 1, 2 or 3
    std::uint32_t coefficient_bound = 100;
    std::uint64_t seed = 0;
    bool twist = false;  ///< substitute a random invertible linear change
};

Report run_generate(const GenerateOptions& options);

struct SelftestOptions {
    std::uint32_t count = 100;
    std::uint32_t max_degree = 8;
    std::uint64_t seed = 1;
    std::uint32_t coefficient_bound = 100;
    unsigned workers = 0;  ///< 0 = hardware concurrency
    /// Corrupts every synthesized inverse so the failure path can be exercised.
    bool inject_fault = false;
};

Report run_selftest(const SelftestOptions& options);

}  // namespace planaut
