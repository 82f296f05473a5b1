#include "hybridtls/cli/format.hpp"

#include <charconv>
#include <fstream>

#include "hybridtls/error.hpp"
#include "hybridtls/observables.hpp"

namespace htls::cli {

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& traj, const CoherencePicture& pic) {
  std::string out = "tau,s1,s2,s3,trace,x,y,z,pe,re_coh,im_coh\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    const double tau = traj.taus[k];
    const BlochState4& s = traj.states[k];
    const NormalizedBloch& n = traj.normalized[k];
    const Complex coh = pic.schrodinger ? to_schrodinger_coherence(n, pic.omega0 * tau).value
                                        : coherence_interaction(n).value;
    for (double v : {tau, s.s1, s.s2, s.s3, s.tr, n.x, n.y, n.z, upper_population(n)}) {
      out += fmt(v);
      out += ',';
    }
    out += fmt(coh.real());
    out += ',';
    out += fmt(coh.imag());
    out += '\n';
  }
  return out;
}

std::string decay_spectrum_csv(const DecaySpectrum& spec) {
  const PhaseSeries ph = phase_series(spec);
  std::string out = "omega,re,im,modulus,phase\n";
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    const Complex v = spec.values[k];
    out += fmt(spec.omegas[k]) + ',' + fmt(v.real()) + ',' + fmt(v.imag()) + ',' +
           fmt(std::abs(v)) + ',' + fmt(ph.phases[k]) + '\n';
  }
  return out;
}

std::string periodic_spectrum_csv(const PeriodicSpectrum& spec) {
  const PhaseSeries ph = phase_series(spec.coefficients);
  std::string out = "n,re,im,modulus,phase\n";
  for (std::size_t k = 0; k < spec.coefficients.size(); ++k) {
    const Complex v = spec.coefficients[k];
    out += std::to_string(spec.wavenumbers[k]) + ',' + fmt(v.real()) + ',' + fmt(v.imag()) + ',' +
           fmt(std::abs(v)) + ',' + fmt(ph.phases[k]) + '\n';
  }
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    throw Error(ErrorKind::InvalidInput, "cannot write " + path.string());
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  write_file(path, doc.dump(2) + "\n");
}

}  // namespace htls::cli
