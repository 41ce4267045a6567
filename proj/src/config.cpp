#include "mcxc/config.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcxc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

class LineError {
 public:
  explicit LineError(int line) : line_(line) {}
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("config line " + std::to_string(line_) + ": " + msg);
  }

 private:
  int line_;
};

template <typename T>
T parse_number(std::string_view text, std::string_view key, const LineError& err) {
  text = trim(text);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    err.fail("'" + std::string(key) + "' expects a number, got '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(std::string_view text, std::string_view key, const LineError& err) {
  std::vector<T> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number<T>(text.substr(0, comma), key, err));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

Vec3 parse_vec3(std::string_view text, std::string_view key, const LineError& err) {
  const auto v = parse_list<double>(text, key, err);
  if (v.size() != 3) err.fail("'" + std::string(key) + "' expects three comma-separated numbers");
  return {v[0], v[1], v[2]};
}

int parse_positive(std::string_view text, std::string_view key, const LineError& err) {
  const int v = parse_number<int>(text, key, err);
  if (v < 1) err.fail("'" + std::string(key) + "' must be >= 1");
  return v;
}

std::vector<int> parse_positive_list(std::string_view text, std::string_view key,
                                     const LineError& err) {
  auto v = parse_list<int>(text, key, err);
  for (int x : v) {
    if (x < 1) err.fail("'" + std::string(key) + "' entries must be >= 1");
  }
  return v;
}

}  // namespace

AngularGrid AngularSpec::build() const {
  switch (scheme) {
    case AngularScheme::Lebedev: return lebedev_grid(order);
    case AngularScheme::GaussLegendre: return gauss_legendre_grid(n_theta, n_phi);
    case AngularScheme::Fibonacci: return fibonacci_grid(n);
  }
  throw std::logic_error("unhandled angular scheme");
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::set<std::string, std::less<>> seen;
  bool has_functional = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const LineError err(line_no);
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) err.fail("expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) err.fail("empty key");
    if (value.empty()) err.fail("'" + key + "' has no value");
    if (!seen.insert(key).second) err.fail("'" + key + "' given twice");

    if (key == "scene.name") {
      cfg.scene_name = value;
    } else if (key.starts_with("scene.")) {
      cfg.scene_params[key.substr(6)] = parse_list<double>(value, key, err);
    } else if (key == "functional") {
      try {
        cfg.functional = functional_from_string(value);
      } catch (const std::invalid_argument& e) {
        err.fail(e.what());
      }
      has_functional = true;
    } else if (key == "angular.scheme") {
      try {
        cfg.angular.scheme = angular_scheme_from_string(value);
      } catch (const std::invalid_argument& e) {
        err.fail(e.what());
      }
    } else if (key == "angular.order") {
      cfg.angular.order = parse_positive(value, key, err);
    } else if (key == "angular.n_theta") {
      cfg.angular.n_theta = parse_positive(value, key, err);
    } else if (key == "angular.n_phi") {
      cfg.angular.n_phi = parse_positive(value, key, err);
    } else if (key == "angular.n") {
      cfg.angular.n = parse_positive(value, key, err);
    } else if (key == "box.lo") {
      cfg.box.lo = parse_vec3(value, key, err);
    } else if (key == "box.hi") {
      cfg.box.hi = parse_vec3(value, key, err);
    } else if (key == "grid.n_per_axis") {
      cfg.n_per_axis = parse_positive(value, key, err);
    } else if (key == "convergence.lebedev_orders") {
      cfg.lebedev_orders = parse_positive_list(value, key, err);
    } else if (key == "convergence.gauss_legendre_n_theta") {
      cfg.gauss_legendre_n_theta = parse_positive_list(value, key, err);
    } else if (key == "convergence.fibonacci_n") {
      cfg.fibonacci_n = parse_positive_list(value, key, err);
    } else if (key == "convergence.t_points") {
      cfg.t_points = parse_positive(value, key, err);
    } else if (key == "rotation.count") {
      cfg.rotation_count = parse_number<int>(value, key, err);
      if (cfg.rotation_count < 0) err.fail("'rotation.count' must be >= 0");
    } else if (key == "rotation.seed") {
      cfg.rotation_seed = parse_number<std::uint64_t>(value, key, err);
    } else if (key == "rotation.kind") {
      if (value == "random") {
        cfg.rotation_kind = RotationKind::random;
      } else if (value == "octahedral") {
        cfg.rotation_kind = RotationKind::octahedral;
      } else {
        err.fail("'rotation.kind' must be random or octahedral");
      }
    } else if (key == "output.path") {
      cfg.output_path = value;
    } else {
      err.fail("unknown key '" + key + "'");
    }
  }

  if (cfg.scene_name.empty()) throw std::invalid_argument("config: 'scene.name' is required");
  if (!has_functional) throw std::invalid_argument("config: 'functional' is required");
  // Resolve names now so that a bad scene fails before any work starts.
  make_scene(cfg.scene_name, cfg.scene_params);
  if (cfg.angular.scheme == AngularScheme::Lebedev) lebedev_point_count(cfg.angular.order);
  for (int order : cfg.lebedev_orders) lebedev_point_count(order);
  for (int a = 0; a < 3; ++a) {
    if (!(cfg.box.hi[a] > cfg.box.lo[a])) {
      throw std::invalid_argument("config: box.hi must exceed box.lo on every axis");
    }
  }
  return cfg;
}

RunConfig parse_config_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace mcxc
