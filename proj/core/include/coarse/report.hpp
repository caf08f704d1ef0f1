#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace coarse {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string range;                       // tested range, stated explicitly
  std::optional<nlohmann::json> witness;   // present on failures (and some passes)
  std::optional<std::string> note;
};

/// Outcome of one verification suite. Serialization is deterministic given
/// config and seed: wall_ms is carried for console output but deliberately
/// left out of the JSON document, so identical runs produce identical bytes.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  nlohmann::json config_echo;
  std::vector<CheckResult> checks;
  double wall_ms = 0;

  bool pass() const;
  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void add(const std::string& name, bool pass, const std::string& range,
           std::optional<nlohmann::json> witness = std::nullopt,
           std::optional<std::string> note = std::nullopt) {
    checks.push_back({name, pass, range, std::move(witness), std::move(note)});
  }
};

nlohmann::json report_to_json(const SuiteReport& rep);
std::string report_to_text(const SuiteReport& rep); // console lines

/// RFC 4180: CRLF row endings, quoting only where needed.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

void write_text_file(const std::filesystem::path& path, const std::string& content);

} // namespace coarse
