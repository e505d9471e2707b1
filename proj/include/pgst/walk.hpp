#pragma once

// Continuous-time quantum walk on P_n with Hamiltonian A (adjacency matrix):
//   <a| exp(itA) |b> = (2/m) sum_j e^{i t theta_j} sin(a j pi/m) sin(b j pi/m).
// Everything is evaluated from the closed-form spectrum in MPFR precision.

#include "pgst/mp_real.hpp"
#include "pgst/path_spectrum.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace pgst {

inline constexpr unsigned kMinWalkPrecisionBits = 64;

struct Amplitude {
  MpReal re;
  MpReal im;

  MpReal norm_squared() const { return re * re + im * im; }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

/// Precomputed spectral weights for one (n, a, b) at a fixed precision.
/// Eigenvalues j and m - j are folded together: theta_{m-j} = -theta_j and
/// their weights differ by (-1)^(a+b), so each pair costs one sine or cosine.
class TransferEvaluator {
 public:
  TransferEvaluator(const PathSpec& spec, int a, int b, unsigned bits = kDefaultPrecisionBits);

  Amplitude amplitude(const MpReal& t) const;
  Amplitude amplitude(double t) const;
  double fidelity(double t) const;

  unsigned precision() const { return bits_; }

 private:
  struct Term {
    MpReal theta;
    MpReal weight;  // already doubled for folded pairs
  };

  unsigned bits_;
  bool real_pairs_;      // a + b even: pairs contribute 2w cos(t theta)
  MpReal constant_;      // theta = 0 term, present when m is even
  MpReal two_pi_;
  std::vector<Term> terms_;
};

/// Throws InvalidArgument for out-of-range vertices, t < 0, or bits < 64.
Amplitude transfer_amplitude(const PathSpec& spec, int a, int b, const MpReal& t,
                             unsigned bits = kDefaultPrecisionBits);
Amplitude transfer_amplitude(const PathSpec& spec, int a, int b, double t, unsigned bits = kDefaultPrecisionBits);

/// |<a|exp(itA)|b>|^2.
MpReal fidelity(const PathSpec& spec, int a, int b, const MpReal& t, unsigned bits = kDefaultPrecisionBits);
MpReal fidelity(const PathSpec& spec, int a, int b, double t, unsigned bits = kDefaultPrecisionBits);

struct FidelitySample {
  double t = 0.0;
  double fidelity = 0.0;
};

struct ScanOptions {
  double t_max = 100.0;
  double step = 0.01;
  int refine_iterations = 60;
  unsigned bits = kDefaultPrecisionBits;
};

struct ScanResult {
  double best_t = 0.0;
  double best_fidelity = 0.0;
  std::size_t samples_evaluated = 0;
  double t_max = 0.0;
  double step = 0.0;
};

/// min(0.01, pi / (8 theta_1)): subsamples the fastest phase of the amplitude.
double default_scan_step(const PathSpec& spec);

/// Grid {0, step, ..., <= t_max}, then three-point bracket refinement around
/// the best grid point. Earliest time wins ties within 1e-15.
ScanResult max_fidelity_scan(const PathSpec& spec, int a, int b, const ScanOptions& options);

/// Throws InvalidArgument for an empty or non-increasing grid.
std::vector<FidelitySample> fidelity_curve(const PathSpec& spec, int a, int b, const std::vector<double>& grid,
                                           unsigned bits = kDefaultPrecisionBits);

}  // namespace pgst
