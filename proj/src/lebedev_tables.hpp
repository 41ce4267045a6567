#pragma once

#include <span>

namespace mcxc::detail {

struct LebedevOrbit {
  int type;
  double a;
  double b;
  double weight;
};

std::span<const LebedevOrbit> lebedev_orbits(int order);

}  // namespace mcxc::detail
