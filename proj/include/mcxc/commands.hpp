#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mcxc/config.hpp"
#include "mcxc/fields.hpp"

namespace mcxc {

/// First line of every CSV report.
inline constexpr std::string_view kCsvVersion = "mcxc-csv v1";

/// Each command writes one CSV report to `out`.
///   energy       quantity,value rows: e_mc, e_lc, e_closed_form and differences
///   convergence  scheme,n_points,abs_error
///   rotation     rotation,abs_delta_e
///   torque       x,y,z,m_x,m_y,m_z,bxc_x,bxc_y,bxc_z,torque_x,torque_y,torque_z
///                plus a trailing global_torque row
void cmd_energy(const RunConfig& config, std::ostream& out);
void cmd_convergence(const RunConfig& config, std::ostream& out);
void cmd_rotation_scan(const RunConfig& config, std::ostream& out);
void cmd_torque_map(const RunConfig& config, std::ostream& out);

/// Runs the named command; throws std::invalid_argument for unknown names.
void run_command(std::string_view command, const RunConfig& config, std::ostream& out);

/// Uniformly distributed rotations from a seeded 64-bit Mersenne Twister.
std::vector<SpinRotation> random_rotations(int count, std::uint64_t seed);

}  // namespace mcxc
