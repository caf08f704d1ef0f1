#include "coarse/config.hpp"

#include <fstream>

#include "coarse/errors.hpp"

namespace coarse {

using nlohmann::json;

Variety Variety::parse(const std::string& s) {
  if (s == "all-groups") return Variety::all_groups();
  const std::string prefix = "abelian-exp-";
  if (s.rfind(prefix, 0) == 0) {
    try {
      return Variety::abelian_exp(std::stoul(s.substr(prefix.size())));
    } catch (const std::exception&) {
      throw ConfigError("bad variety exponent in '" + s + "'");
    }
  }
  throw ConfigError("unknown variety '" + s + "' (want abelian-exp-<p> or all-groups)");
}

std::string SpaceConfig::kind_name() const {
  switch (kind) {
    case Kind::Path: return "path";
    case Kind::Grid: return "grid";
    case Kind::MetricTable: return "metric-table";
    default: return "bounded";
  }
}

namespace {

SpaceConfig::Kind kind_from_name(const std::string& name) {
  if (name == "path") return SpaceConfig::Kind::Path;
  if (name == "grid") return SpaceConfig::Kind::Grid;
  if (name == "metric-table") return SpaceConfig::Kind::MetricTable;
  if (name == "bounded") return SpaceConfig::Kind::Bounded;
  throw ConfigError("unknown space kind '" + name + "'");
}

template <class T>
void read_field(const json& doc, const char* key, T& out) {
  if (!doc.contains(key)) return;
  try {
    out = doc.at(key).get<T>();
  } catch (const json::exception& err) {
    throw ConfigError("bad config field '" + std::string(key) + "': " + err.what());
  }
}

} // namespace

SpaceConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config document must be a JSON object");
  SpaceConfig cfg;

  if (doc.contains("space")) {
    const json& space = doc.at("space");
    if (!space.is_object()) throw ConfigError("config field 'space' must be an object");
    std::string kind = cfg.kind_name();
    read_field(space, "kind", kind);
    cfg.kind = kind_from_name(kind);
    read_field(space, "points", cfg.path_points);
    read_field(space, "rows", cfg.grid_rows);
    read_field(space, "cols", cfg.grid_cols);
    read_field(space, "labels", cfg.labels);
    read_field(space, "metric", cfg.metric);
    read_field(space, "bounded_points", cfg.bounded_points);
  }

  read_field(doc, "p", cfg.p);
  read_field(doc, "z", cfg.z_label);
  if (doc.contains("variety"))
    cfg.variety = Variety::parse(doc.at("variety").get<std::string>());
  if (doc.contains("limits")) {
    const json& limits = doc.at("limits");
    read_field(limits, "max_n", cfg.limits.max_n);
    read_field(limits, "max_conj_len", cfg.limits.max_conj_len);
    read_field(limits, "node_budget", cfg.limits.node_budget);
  }
  if (doc.contains("seed")) cfg.seed = doc.at("seed").get<std::uint64_t>();
  read_field(doc, "enum_budget", cfg.enum_budget);
  read_field(doc, "flip_bound", cfg.flip_bound);
  read_field(doc, "growth_max_m", cfg.growth_max_m);

  if (doc.contains("target"))
    cfg.target = std::make_shared<SpaceConfig>(config_from_json(doc.at("target")));
  return cfg;
}

SpaceConfig config_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& err) {
    throw ConfigError("config parse error in " + path.string() + ": " + err.what());
  }
  return config_from_json(doc);
}

json config_to_json(const SpaceConfig& cfg) {
  json space{{"kind", cfg.kind_name()}};
  switch (cfg.kind) {
    case SpaceConfig::Kind::Path: space["points"] = cfg.path_points; break;
    case SpaceConfig::Kind::Grid:
      space["rows"] = cfg.grid_rows;
      space["cols"] = cfg.grid_cols;
      break;
    case SpaceConfig::Kind::MetricTable:
      space["labels"] = cfg.labels;
      space["metric"] = cfg.metric;
      break;
    case SpaceConfig::Kind::Bounded: space["bounded_points"] = cfg.bounded_points; break;
  }
  json out{{"space", space},
           {"p", cfg.p},
           {"variety", cfg.variety.name()},
           {"limits",
            {{"max_n", cfg.limits.max_n},
             {"max_conj_len", cfg.limits.max_conj_len},
             {"node_budget", cfg.limits.node_budget}}},
           {"enum_budget", cfg.enum_budget},
           {"flip_bound", cfg.flip_bound},
           {"growth_max_m", cfg.growth_max_m}};
  if (!cfg.z_label.empty()) out["z"] = cfg.z_label;
  if (cfg.seed) out["seed"] = *cfg.seed;
  if (cfg.target) out["target"] = config_to_json(**cfg.target);
  return out;
}

Filtration build_filtration(const SpaceConfig& cfg) {
  switch (cfg.kind) {
    case SpaceConfig::Kind::Path: return path_filtration(cfg.path_points);
    case SpaceConfig::Kind::Grid: return grid_filtration(cfg.grid_rows, cfg.grid_cols);
    case SpaceConfig::Kind::MetricTable:
      return metric_filtration(Window::from_labels(cfg.labels), cfg.metric);
    default: return bounded_filtration(Window::integer_path(cfg.bounded_points));
  }
}

PointId resolve_z(const SpaceConfig& cfg, const Window& w) {
  if (cfg.z_label.empty()) return 0;
  if (auto z = w.find(cfg.z_label)) return *z;
  throw ConfigError("distinguished point '" + cfg.z_label + "' not in the window");
}

std::uint64_t require_seed(const SpaceConfig& cfg, const std::string& suite) {
  if (!cfg.seed)
    throw ConfigError("suite '" + suite + "' samples; config must set a seed");
  return *cfg.seed;
}

} // namespace coarse
