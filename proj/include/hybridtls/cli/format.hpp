#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hybridtls/propagator.hpp"
#include "hybridtls/spectral.hpp"

namespace htls::cli {

/// Shortest-round-trip-safe text for a double: %.17g semantics, '.' decimal
/// point regardless of locale.
std::string fmt(double v);

struct CoherencePicture {
  bool schrodinger = false;
  double omega0 = 0.0;  ///< phase = omega0 * tau
};

std::string trajectory_csv(const Trajectory& traj, const CoherencePicture& pic = {});
std::string decay_spectrum_csv(const DecaySpectrum& spec);
std::string periodic_spectrum_csv(const PeriodicSpectrum& spec);

/// Writes bytes verbatim (binary mode, '\n' endings). Throws InvalidInput on
/// I/O failure.
void write_file(const std::filesystem::path& path, const std::string& text);
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);

}  // namespace htls::cli
