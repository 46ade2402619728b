#pragma once

// Command logic behind the CLI: each function turns an input document into
// a report with a JSON body, a text rendering and an exit code.

#include <string>

#include <json.hpp>

#include "bredon/io.hpp"

namespace bredon {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 2;
inline constexpr int route_disagreement = 3;
inline constexpr int verify_mismatch = 4;
}  // namespace exit_code

struct RunOptions {
    unsigned jobs = 0;  // 0: available parallelism
    std::size_t size_cap = default_size_cap();
};

struct Report {
    nlohmann::json data;  // without timing
    std::string text;     // without timing
    int exit_code = exit_code::ok;
};

enum class Theorem { Decomposition, Bredon, CellIdentities, Acyclic };

/// Throws InputError for unparseable theorem names.
Theorem parse_theorem(const std::string& name);
std::string to_string(Theorem t);

nlohmann::json group_json(const CohomologyGroup& g);
nlohmann::json dimension_json(const DimensionReport& r);

/// The following throw InputError (or SizeCapExceeded) on bad input.
Report run_cd(const InputDocument& doc, const RunOptions& opts = {});
Report run_vcd(const InputDocument& doc, const RunOptions& opts = {});
Report run_verify(const InputDocument& doc, Theorem theorem, const RunOptions& opts = {});
Report run_develop(const InputDocument& doc, bool dump, const RunOptions& opts = {});

/// Error object {"error": {"kind": ..., "message": ...}}.
nlohmann::json error_json(const std::string& kind, const std::string& message);

}  // namespace bredon
