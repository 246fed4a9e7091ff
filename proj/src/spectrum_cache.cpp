#include "ftn/spectrum_cache.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "ftn/linalg.hpp"
#include "ftn/pulse.hpp"
#include "ftn/rng.hpp"

namespace ftn {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string key_tag(const SpectrumKey& key) {
  std::ostringstream os;
  os << "N=" << key.block_length << " L=" << key.half_width << " delta=" << fmt17(key.delta)
     << " beta=" << fmt17(key.beta);
  return os.str();
}

std::filesystem::path entry_path(const SpectrumKey& key) {
  char name[128];
  std::snprintf(name, sizeof(name), "spectrum_N%d_L%d_%016" PRIx64 ".txt", key.block_length,
                key.half_width, fnv1a(key_tag(key)));
  return cache_directory() / name;
}

std::string serialize(const SpectrumKey& key, const std::vector<double>& sigma, double r0) {
  std::ostringstream body;
  body << key_tag(key) << " count=" << sigma.size() << " r0=" << fmt17(r0) << "\n";
  for (double v : sigma) body << fmt17(v) << "\n";
  const std::string b = body.str();
  return "ftn-spectrum v1 hash=" + std::to_string(fnv1a(b)) + "\n" + b;
}

// Spectrum plus the tap autocorrelation at lag zero, which the cache file
// stores so the trace identity cross-checks the eigensolver against the
// pulse projection on every load.
std::pair<std::vector<double>, double> spectrum_and_r0(const SpectrumKey& key) {
  PulseSpec spec;
  spec.symbol_period = 1.0;  // the taps do not depend on it
  spec.delta = key.delta;
  spec.beta = key.beta;
  spec.half_width = key.half_width;
  const PulseCoeffs coeffs = basis_coefficients(spec);
  const std::vector<double> band = tap_autocorrelation(coeffs.taps);
  std::vector<double> eig = toeplitz_band_eigenvalues(band, key.block_length);
  std::vector<double> sigma(eig.size());
  for (std::size_t i = 0; i < eig.size(); ++i)
    sigma[i] = std::sqrt(std::max(0.0, eig[eig.size() - 1 - i]));
  return {std::move(sigma), band[0]};
}

bool parse(const std::string& text, const SpectrumKey& key, std::vector<double>& sigma,
           double& r0) {
  const std::size_t nl = text.find('\n');
  if (nl == std::string::npos) return false;
  const std::string header = text.substr(0, nl);
  const std::string body = text.substr(nl + 1);
  std::uint64_t stored_hash = 0;
  if (std::sscanf(header.c_str(), "ftn-spectrum v1 hash=%" SCNu64, &stored_hash) != 1)
    return false;
  if (stored_hash != fnv1a(body)) return false;

  std::istringstream is(body);
  std::string line;
  if (!std::getline(is, line)) return false;
  const std::string tag = key_tag(key);
  if (line.compare(0, tag.size(), tag) != 0) return false;
  std::size_t count = 0;
  if (std::sscanf(line.c_str() + tag.size(), " count=%zu r0=%lf", &count, &r0) != 2)
    return false;
  if (count != static_cast<std::size_t>(key.block_length)) return false;

  sigma.clear();
  sigma.reserve(count);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    char* end = nullptr;
    const double v = std::strtod(line.c_str(), &end);
    if (end == line.c_str()) return false;
    sigma.push_back(v);
  }
  if (sigma.size() != count) return false;

  // Gram-trace identity: sum of squared singular values equals N * r0.
  double trace = 0.0;
  for (double v : sigma) trace += v * v;
  const double expected = key.block_length * r0;
  return std::abs(trace - expected) <= 1e-8 * std::max(1.0, std::abs(expected));
}

}  // namespace

std::filesystem::path cache_directory() {
  if (const char* env = std::getenv("FTN_MCCR_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::filesystem::current_path() / ".ftn-mccr-cache";
}

std::vector<double> compute_temporal_spectrum(const SpectrumKey& key) {
  return spectrum_and_r0(key).first;
}

CachedSpectrum temporal_spectrum(const SpectrumKey& key) {
  CachedSpectrum out;
  const std::filesystem::path path = entry_path(key);
  std::error_code ec;
  const bool existed = std::filesystem::exists(path, ec);
  if (existed) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    double r0 = 0.0;
    if (parse(ss.str(), key, out.temporal, r0)) {
      out.cache_hit = true;
      return out;
    }
    std::fprintf(stderr, "ftn: cache entry %s is corrupt; recomputing\n",
                 path.string().c_str());
    out.recovered = true;
  }

  double r0 = 0.0;
  std::tie(out.temporal, r0) = spectrum_and_r0(key);

  std::filesystem::create_directories(path.parent_path(), ec);
  // Atomic publish: write a unique temp file, then rename over the entry, so
  // concurrent writers of the same key stay consistent.
  const std::filesystem::path tmp =
      path.parent_path() /
      (path.filename().string() + ".tmp" + std::to_string(mix64(reinterpret_cast<std::uintptr_t>(&out))));
  {
    std::ofstream os(tmp, std::ios::trunc);
    os << serialize(key, out.temporal, r0);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
  return out;
}

}  // namespace ftn
