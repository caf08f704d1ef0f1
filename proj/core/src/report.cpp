#include "coarse/report.hpp"

#include <fstream>

#include "coarse/errors.hpp"

namespace coarse {

using nlohmann::json;

bool SuiteReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

json report_to_json(const SuiteReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json entry{{"name", c.name},
               {"status", c.pass ? "pass" : "fail"},
               {"range", c.range}};
    if (c.witness) entry["witness"] = *c.witness;
    if (c.note) entry["note"] = *c.note;
    checks.push_back(std::move(entry));
  }
  return json{{"suite", rep.suite},
              {"seed", rep.seed},
              {"config", rep.config_echo},
              {"pass", rep.pass()},
              {"checks", checks}};
}

std::string report_to_text(const SuiteReport& rep) {
  std::string out = "suite " + rep.suite + "\n";
  for (const auto& c : rep.checks) {
    out += c.pass ? "  pass  " : "  FAIL  ";
    out += c.name + "  [" + c.range + "]";
    if (!c.pass && c.witness) out += "  witness: " + c.witness->dump();
    if (c.note) out += "  (" + *c.note + ")";
    out += "\n";
  }
  out += rep.pass() ? "PASS" : "FAIL";
  out += " (" + std::to_string(rep.checks.size()) + " checks, " +
         std::to_string(static_cast<long>(rep.wall_ms)) + " ms)\n";
  return out;
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

} // namespace

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_field(row[i]);
    }
    out += "\r\n";
  };
  append_row(header);
  for (const auto& row : rows) append_row(row);
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw Error("write failed for " + path.string());
}

} // namespace coarse
