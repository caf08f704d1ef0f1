#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarse/filtration.hpp"
#include "coarse/variety.hpp"
#include "coarse/word_norm.hpp"

namespace coarse {

/// Declarative description of a windowed coarse space plus the knobs the
/// suites read. One JSON document; CLI flags override file fields, file
/// fields override the defaults here.
struct SpaceConfig {
  enum class Kind { Path, Grid, MetricTable, Bounded };

  Kind kind = Kind::Path;
  unsigned path_points = 8;
  unsigned grid_rows = 3, grid_cols = 3;
  std::vector<std::string> labels; // MetricTable
  MetricTable metric;              // MetricTable
  unsigned bounded_points = 4;

  unsigned p = 2;
  std::string z_label;             // empty: first window point
  Variety variety = Variety::abelian_exp(2);
  SearchLimits limits;
  std::optional<std::uint64_t> seed; // mandatory for sampled suites
  std::uint64_t enum_budget = UINT64_C(1) << 20;

  int flip_bound = 4;              // Example-1 window, indices -N..N
  unsigned growth_max_m = 5;

  std::optional<std::shared_ptr<SpaceConfig>> target; // for map checks

  std::string kind_name() const;
};

SpaceConfig config_from_json(const nlohmann::json& doc);
SpaceConfig config_from_file(const std::filesystem::path& path);
nlohmann::json config_to_json(const SpaceConfig& cfg); // echo for reports

Filtration build_filtration(const SpaceConfig& cfg);
PointId resolve_z(const SpaceConfig& cfg, const Window& w);

/// Seed or a ConfigError naming the suite that needed it.
std::uint64_t require_seed(const SpaceConfig& cfg, const std::string& suite);

} // namespace coarse
