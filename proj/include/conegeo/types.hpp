#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace conegeo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Numerical tolerances shared by every module. Defaults target double
/// precision spectral accuracy with headroom; all overridable per run.
struct Tolerances {
  double herm = 1e-10;        // relative hermiticity check
  double unitary = 1e-10;     // relative unitarity check
  double recon = 1e-9;        // relative spectral reconstruction
  double posdef_floor = 1e-12;     // min eigenvalue > floor * max eigenvalue
  double invertible_floor = 1e-12; // min singular value > floor * max
  double group = 1e-8;        // closure dedup distance
  double fix = 1e-7;          // fixed-space residuals and subspace equality
  double unitarize = 1e-7;    // unitarizer residual
  double split = 1e-8;        // splitting reconstruction / kernel residual
  double cc = 1e-6;           // circumcenter radius tolerance
  double sim = 1e-5;          // similarity-number consistency
  double nullspace = 1e-9;    // relative SVD threshold for rank decisions
  double eig = 1e-9;          // eigenvalue comparisons
  double iso = 1e-9;          // isometry residuals

  /// Set one field by key, e.g. "group=1e-6". Throws on unknown key.
  void set(const std::string& key, double value);
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonHermitian : Error { using Error::Error; };
struct NotPositiveDefinite : Error {
  double min_eigenvalue;
  NotPositiveDefinite(const std::string& what, double min_eig)
      : Error(what), min_eigenvalue(min_eig) {}
};
struct NotInvertible : Error { using Error::Error; };
struct NotUnitary : Error { using Error::Error; };
struct DimMismatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NotUnitaryGroup : Error { using Error::Error; };
struct NotUnitarizable : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct NotProjection : Error { using Error::Error; };
struct NoConvergence : Error {
  double residual;
  NoConvergence(const std::string& what, double res)
      : Error(what), residual(res) {}
};
struct RangeMismatch : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct BadSpec : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

/// Counter-based deterministic generator (SplitMix64 over a keyed counter).
/// Same seed and draw sequence produce identical streams on every platform;
/// forked streams are independent by key mixing.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * ++counter_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0,1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller (two uniforms per draw, no cached state).
  double next_gaussian() {
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  /// Independent stream derived from this seed and a stream key.
  CounterRng fork(std::uint64_t stream) const {
    std::uint64_t z = seed_ ^ (0x9e3779b97f4a7c15ULL + stream);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return CounterRng(z ^ (z >> 31));
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Stable 64-bit FNV-1a hash, used to derive per-check RNG streams.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace conegeo
