#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mcxc/angular.hpp"
#include "mcxc/fields.hpp"
#include "mcxc/functionals.hpp"

namespace mcxc {

/// One angular grid choice. Only the size fields of `scheme` are used.
struct AngularSpec {
  AngularScheme scheme = AngularScheme::Lebedev;
  int order = 41;
  int n_theta = 16;
  int n_phi = 32;
  int n = 1000;

  AngularGrid build() const;
};

enum class RotationKind { random, octahedral };

/// Parsed run description.
///
/// File format: one `key = value` per line, `#` starts a comment. Vectors are
/// comma separated. Recognized keys:
///   scene.name, scene.<parameter>      scene and its parameters
///   functional                         registry name
///   angular.scheme                     lebedev | gauss_legendre | fibonacci
///   angular.order / angular.n_theta / angular.n_phi / angular.n
///   box.lo, box.hi                     box corners (default +-0.5)
///   grid.n_per_axis                    spatial Gauss-Legendre nodes per axis
///   convergence.lebedev_orders         sweep lists for `convergence`
///   convergence.gauss_legendre_n_theta (n_phi = 2 n_theta)
///   convergence.fibonacci_n
///   convergence.t_points               nodes of the (n, s) t-integral reference
///   rotation.count, rotation.seed, rotation.kind (random | octahedral)
///   output.path
struct RunConfig {
  std::string scene_name;
  SceneParams scene_params;
  FunctionalId functional = FunctionalId::slater_lsda;
  AngularSpec angular;
  Box box;
  int n_per_axis = 8;

  std::vector<int> lebedev_orders;
  std::vector<int> gauss_legendre_n_theta;
  std::vector<int> fibonacci_n;
  int t_points = 64;

  int rotation_count = 20;
  std::uint64_t rotation_seed = 1;
  RotationKind rotation_kind = RotationKind::random;

  std::string output_path;
};

/// Throws std::invalid_argument with the line number for malformed lines,
/// unknown or repeated keys, bad values and names missing from the registries.
RunConfig parse_config(std::istream& in);
RunConfig parse_config_text(std::string_view text);
RunConfig load_config(const std::string& path);

}  // namespace mcxc
