#include "pgst/walk.hpp"

#include "pgst/common.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace pgst {
namespace {

constexpr double kTieTolerance = 1e-15;

// Extra bits for the phase t * theta, which loses log2(t) bits to reduction.
constexpr unsigned kPhaseGuardBits = 48;

void require_walk_args(const PathSpec& spec, int a, int b, unsigned bits) {
  if (!spec.has_vertex(a) || !spec.has_vertex(b)) {
    detail::fail_argument("vertices (" + std::to_string(a) + ", " + std::to_string(b) + ") must lie in 1.." +
                          std::to_string(spec.n()));
  }
  if (bits < kMinWalkPrecisionBits) {
    detail::fail_argument("walk precision must be at least 64 bits, got " + std::to_string(bits));
  }
}

}  // namespace

TransferEvaluator::TransferEvaluator(const PathSpec& spec, int a, int b, unsigned bits)
    : bits_(bits),
      real_pairs_((a + b) % 2 == 0),
      constant_(0L, bits + kPhaseGuardBits),
      two_pi_(MpReal::pi(bits + kPhaseGuardBits)) {
  require_walk_args(spec, a, b, bits);
  two_pi_ *= 2L;
  const unsigned work = bits + kPhaseGuardBits;
  const long m = spec.m();
  for (long j = 1; 2 * j <= m; ++j) {
    MpReal weight = sin_pi_fraction(a * j, m, work);
    weight *= sin_pi_fraction(b * j, m, work);
    weight *= 2L;
    weight /= m;
    if (2 * j == m) {
      constant_ = std::move(weight);
      continue;
    }
    if (weight.is_zero()) continue;
    weight *= 2L;
    terms_.push_back({two_cos_pi_fraction(j, m, work), std::move(weight)});
  }
}

Amplitude TransferEvaluator::amplitude(const MpReal& t) const {
  if (t.sign() < 0) detail::fail_argument("walk time must be non-negative");
  const unsigned work = bits_ + kPhaseGuardBits;
  MpReal sum(work);
  mpfr_set(sum.raw(), constant_.raw(), MPFR_RNDN);
  MpReal phase(work);
  MpReal wave(work);
  for (const Term& term : terms_) {
    mpfr_mul(phase.raw(), t.raw(), term.theta.raw(), MPFR_RNDN);
    mpfr_remainder(phase.raw(), phase.raw(), two_pi_.raw(), MPFR_RNDN);
    if (real_pairs_) {
      mpfr_cos(wave.raw(), phase.raw(), MPFR_RNDN);
    } else {
      mpfr_sin(wave.raw(), phase.raw(), MPFR_RNDN);
    }
    mpfr_fma(sum.raw(), wave.raw(), term.weight.raw(), sum.raw(), MPFR_RNDN);
  }

  Amplitude out{MpReal(bits_), MpReal(bits_)};
  if (real_pairs_) {
    mpfr_set(out.re.raw(), sum.raw(), MPFR_RNDN);
  } else {
    // The theta = 0 term is real, folded pairs are purely imaginary.
    mpfr_set(out.re.raw(), constant_.raw(), MPFR_RNDN);
    mpfr_sub(sum.raw(), sum.raw(), constant_.raw(), MPFR_RNDN);
    mpfr_set(out.im.raw(), sum.raw(), MPFR_RNDN);
  }
  return out;
}

Amplitude TransferEvaluator::amplitude(double t) const { return amplitude(MpReal(t, 64)); }

double TransferEvaluator::fidelity(double t) const { return amplitude(t).norm_squared().to_double(); }

Amplitude transfer_amplitude(const PathSpec& spec, int a, int b, const MpReal& t, unsigned bits) {
  return TransferEvaluator(spec, a, b, bits).amplitude(t);
}

Amplitude transfer_amplitude(const PathSpec& spec, int a, int b, double t, unsigned bits) {
  return TransferEvaluator(spec, a, b, bits).amplitude(t);
}

MpReal fidelity(const PathSpec& spec, int a, int b, const MpReal& t, unsigned bits) {
  return transfer_amplitude(spec, a, b, t, bits).norm_squared();
}

MpReal fidelity(const PathSpec& spec, int a, int b, double t, unsigned bits) {
  return transfer_amplitude(spec, a, b, t, bits).norm_squared();
}

double default_scan_step(const PathSpec& spec) {
  const double theta1 = 2.0 * std::cos(std::numbers::pi / spec.m());
  if (theta1 <= 0.0) return 0.01;
  return std::min(0.01, std::numbers::pi / (8.0 * theta1));
}

ScanResult max_fidelity_scan(const PathSpec& spec, int a, int b, const ScanOptions& options) {
  if (!(options.t_max > 0.0) || !std::isfinite(options.t_max)) detail::fail_argument("scan horizon t_max must be positive");
  if (!(options.step > 0.0) || options.step > options.t_max) {
    detail::fail_argument("scan step must satisfy 0 < step <= t_max");
  }
  if (options.refine_iterations < 0) detail::fail_argument("refine_iterations must be non-negative");

  const TransferEvaluator evaluator(spec, a, b, options.bits);
  ScanResult result;
  result.t_max = options.t_max;
  result.step = options.step;

  // Relative slack so that t_max itself is on the grid when it is a multiple.
  const auto last = static_cast<std::size_t>(std::floor(options.t_max / options.step * (1.0 + 1e-12)));
  std::size_t best_index = 0;
  result.best_fidelity = -1.0;
  for (std::size_t k = 0; k <= last; ++k) {
    const double t = static_cast<double>(k) * options.step;
    const double f = evaluator.fidelity(t);
    if (f > result.best_fidelity + kTieTolerance) {
      result.best_fidelity = f;
      best_index = k;
    }
  }
  result.samples_evaluated = last + 1;
  result.best_t = static_cast<double>(best_index) * options.step;

  double lo = std::max(0.0, result.best_t - options.step);
  double hi = std::min(options.t_max, result.best_t + options.step);
  double mid = result.best_t;
  double f_mid = result.best_fidelity;
  for (int it = 0; it < options.refine_iterations; ++it) {
    const double left = 0.5 * (lo + mid);
    const double right = 0.5 * (mid + hi);
    if (!(left < mid || mid < right)) break;  // bracket below double resolution
    const double f_left = evaluator.fidelity(left);
    const double f_right = evaluator.fidelity(right);
    result.samples_evaluated += 2;

    // Candidates in time order so the earliest wins a tie.
    const double ts[3] = {left, mid, right};
    const double fs[3] = {f_left, f_mid, f_right};
    int pick = 0;
    for (int c = 1; c < 3; ++c) {
      if (fs[c] > fs[pick] + kTieTolerance) pick = c;
    }
    if (pick == 0) {
      hi = mid;
    } else if (pick == 1) {
      lo = left;
      hi = right;
    } else {
      lo = mid;
    }
    mid = ts[pick];
    f_mid = fs[pick];

    const bool better = f_mid > result.best_fidelity + kTieTolerance;
    const bool tie_earlier = std::abs(f_mid - result.best_fidelity) <= kTieTolerance && mid < result.best_t;
    if (better || tie_earlier) {
      result.best_fidelity = f_mid;
      result.best_t = mid;
    }
  }
  return result;
}

std::vector<FidelitySample> fidelity_curve(const PathSpec& spec, int a, int b, const std::vector<double>& grid,
                                           unsigned bits) {
  if (grid.empty()) detail::fail_argument("fidelity_curve: empty time grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i]) || grid[i] < 0.0) detail::fail_argument("fidelity_curve: times must be finite and >= 0");
    if (i > 0 && !(grid[i] > grid[i - 1])) detail::fail_argument("fidelity_curve: grid must be strictly increasing");
  }
  const TransferEvaluator evaluator(spec, a, b, bits);
  std::vector<FidelitySample> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back({t, evaluator.fidelity(t)});
  return out;
}

}  // namespace pgst
