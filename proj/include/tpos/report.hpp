#pragma once

#include "tpos/explorer.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace tpos {

enum class ReportFormat { json, csv };

ReportFormat parse_report_format(const std::string& name);

nlohmann::json to_json(const ScanConfig& cfg);
nlohmann::json to_json(const ConjectureReport& report);
nlohmann::json to_json(const SuiteReport& report);

ScanConfig scan_config_from_json(const nlohmann::json& j);
ConjectureReport conjecture_report_from_json(const nlohmann::json& j);

/// Deterministic text: sorted keys, rationals as "num/den".
std::string render_report(const ConjectureReport& report, ReportFormat format);
std::string render_report(const SuiteReport& report, ReportFormat format);

/// Throws InputError when the path cannot be written.
void emit_report(const std::string& text, const std::filesystem::path& path);

} // namespace tpos
