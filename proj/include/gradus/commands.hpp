#pragma once

#include "gradus/field.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gradus {

inline constexpr int kSchemaVersion = 1;

/// Settings shared by every command.
struct CommandContext {
    FieldConfig field;
    std::uint64_t seed = 0;
    std::int64_t coeff_bound = 10;
    unsigned k_max = 12;
    unsigned trials = 5;
    /// Adds a non-deterministic "timing" section to the report.
    bool timing = false;
};

/// Runs a command and returns its report. Textual inputs (polynomials, point
/// lists) are passed as strings in `params`; numbers as JSON integers.
/// Throws gradus::Error subclasses on failure.
nlohmann::json run_command(const std::string& name, const nlohmann::json& params, const CommandContext& context);

std::vector<std::string> command_names();

/// Lowercase hex SHA-256 of `text`.
std::string sha256_hex(const std::string& text);

}  // namespace gradus
