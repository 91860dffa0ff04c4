#include "qpt/analysis.hpp"

#include <cmath>
#include <limits>

namespace qpt {

ParameterCount parameter_count(int n) {
  if (n < 1) throw ParamOutOfRange("n must be >= 1");
  ParameterCount pc;
  pc.weak_local = 12LL * n + 3LL * n * (n - 1) / 2;
  long long four_n = 1;
  for (int k = 0; k < n; ++k) four_n *= 4;
  pc.generic = four_n * four_n - four_n;
  return pc;
}

WeakLocalBudget weak_local_budget(int n, bool symmetric) {
  const ParameterCount pc = parameter_count(n);
  WeakLocalBudget wb;
  wb.local = symmetric ? 12 : 12LL * n;
  wb.crosstalk = 3LL * n * (n - 1) / 2;
  wb.total = wb.local + wb.crosstalk;
  wb.generic = pc.generic;
  return wb;
}

PatternReport sparsity_pattern(const AffineProcess& chi, double threshold) {
  if (threshold <= 0.0) throw ParamOutOfRange("threshold must be positive");
  const int s = chi.size();
  PatternReport report;
  report.threshold = threshold;
  report.mask.resize(s, s + 1);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      const double expected = (i == j) ? 1.0 : 0.0;
      report.mask(i, j) = std::abs(chi.M(i, j) - expected) > threshold;
    }
    report.mask(i, s) = std::abs(chi.a(i)) > threshold;
  }
  report.nonzero_count = static_cast<int>(report.mask.cast<int>().sum());
  return report;
}

std::string family_name(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::PhaseFlip: return "phase_flip";
    case ChannelFamily::BitFlip: return "bit_flip";
    case ChannelFamily::Depolarizing: return "depolarizing";
    case ChannelFamily::AmplitudeDamping: return "amplitude_damping";
    case ChannelFamily::UncorrelatedDephasing: return "uncorrelated_dephasing";
    case ChannelFamily::CorrelatedDephasing: return "correlated_dephasing";
  }
  throw Error("invalid channel family");
}

std::optional<ChannelFamily> family_from_name(const std::string& name) {
  for (ChannelFamily f :
       {ChannelFamily::PhaseFlip, ChannelFamily::BitFlip, ChannelFamily::Depolarizing,
        ChannelFamily::AmplitudeDamping, ChannelFamily::UncorrelatedDephasing,
        ChannelFamily::CorrelatedDephasing}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

int family_qubits(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::UncorrelatedDephasing:
    case ChannelFamily::CorrelatedDephasing:
      return 2;
    default:
      return 1;
  }
}

AffineProcess family_model(ChannelFamily f, double param) {
  switch (f) {
    case ChannelFamily::PhaseFlip: return channel_to_affine(phase_flip(param));
    case ChannelFamily::BitFlip: return channel_to_affine(bit_flip(param));
    case ChannelFamily::Depolarizing: return channel_to_affine(depolarizing(param));
    case ChannelFamily::AmplitudeDamping:
      return channel_to_affine(amplitude_damping(param));
    case ChannelFamily::UncorrelatedDephasing: return uncorrelated_dephasing(param);
    case ChannelFamily::CorrelatedDephasing: return correlated_dephasing(param);
  }
  throw Error("invalid channel family");
}

namespace {

struct ParamDomain {
  double lo, hi;
  // Internal search coordinate; correlated dephasing searches over
  // u = exp(-lambda) so the domain is compact.
  bool log_map = false;
};

ParamDomain family_domain(ChannelFamily f) {
  switch (f) {
    case ChannelFamily::PhaseFlip:
    case ChannelFamily::BitFlip:
    case ChannelFamily::UncorrelatedDephasing:
      return {0.0, 0.5, false};
    case ChannelFamily::Depolarizing:
    case ChannelFamily::AmplitudeDamping:
      return {0.0, 1.0, false};
    case ChannelFamily::CorrelatedDephasing:
      return {1e-12, 1.0, true};  // u = exp(-lambda)
  }
  throw Error("invalid channel family");
}

double to_param(const ParamDomain& d, double x) {
  return d.log_map ? -std::log(x) : x;
}

double objective(const AffineProcess& chi, ChannelFamily f, const ParamDomain& d,
                 double x) {
  const AffineProcess model = family_model(f, to_param(d, x));
  return (chi.M - model.M).squaredNorm() + (chi.a - model.a).squaredNorm();
}

}  // namespace

ChannelFit fit_channel(const AffineProcess& chi, ChannelFamily family) {
  if (chi.n != family_qubits(family)) {
    throw WrongDimension("chi_F qubit count does not match family");
  }
  const ParamDomain dom = family_domain(family);

  // Coarse grid, then golden section on the bracketing interval.
  const int grid = 256;
  double best_x = dom.lo;
  double best_f = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= grid; ++i) {
    const double x = dom.lo + (dom.hi - dom.lo) * i / grid;
    const double f = objective(chi, family, dom, x);
    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
  }
  const double step = (dom.hi - dom.lo) / grid;
  double lo = std::max(dom.lo, best_x - step);
  double hi = std::min(dom.hi, best_x + step);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = objective(chi, family, dom, x1);
  double f2 = objective(chi, family, dom, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = objective(chi, family, dom, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = objective(chi, family, dom, x2);
    }
  }
  const double x_hat = (lo + hi) / 2.0;
  const double param = to_param(dom, x_hat);
  const AffineProcess model = family_model(family, param);
  const double residual = std::max((chi.M - model.M).cwiseAbs().maxCoeff(),
                                   (chi.a - model.a).cwiseAbs().maxCoeff());
  return ChannelFit{family, param, residual};
}

FitSelection fit_all(const AffineProcess& chi) {
  FitSelection sel;
  for (ChannelFamily f :
       {ChannelFamily::PhaseFlip, ChannelFamily::BitFlip, ChannelFamily::Depolarizing,
        ChannelFamily::AmplitudeDamping, ChannelFamily::UncorrelatedDephasing,
        ChannelFamily::CorrelatedDephasing}) {
    if (family_qubits(f) != chi.n) continue;
    sel.fits.push_back(fit_channel(chi, f));
  }
  if (sel.fits.empty()) throw WrongDimension("no channel family matches chi_F");
  for (std::size_t i = 1; i < sel.fits.size(); ++i) {
    if (sel.fits[i].residual < sel.fits[sel.best].residual) {
      sel.best = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < sel.fits.size(); ++i) {
    if (static_cast<int>(i) != sel.best &&
        std::abs(sel.fits[i].residual - sel.fits[sel.best].residual) < 1e-12) {
      sel.ambiguous = true;
    }
  }
  return sel;
}

std::string dephasing_class_name(DephasingClass c) {
  switch (c) {
    case DephasingClass::Correlated: return "correlated";
    case DephasingClass::Uncorrelated: return "uncorrelated";
    case DephasingClass::Inconclusive: return "inconclusive";
  }
  throw Error("invalid classification");
}

Discrimination dephasing_discriminator(double c_xx, double c_yy,
                                       std::optional<double> se_xx,
                                       std::optional<double> se_yy,
                                       std::optional<double> tolerance) {
  if (c_xx < -1.0 || c_xx > 1.0 || c_yy < -1.0 || c_yy > 1.0) {
    throw InputOutOfRange("polarization expectation outside [-1, 1]");
  }
  double tau = 1e-6;
  if (tolerance) {
    tau = *tolerance;
  } else if (se_xx && se_yy) {
    tau = 3.0 * (*se_xx + *se_yy);
  }

  Discrimination d;
  d.tolerance = tau;
  if (c_xx >= 1.0 - tau && std::abs(c_yy) <= tau) {
    // Noiseless limit: both models reduce to g = 1.
    d.classification = DephasingClass::Inconclusive;
    d.g_hat = 1.0;
  } else if (std::abs(c_xx + c_yy - 1.0) <= tau && c_yy > tau) {
    d.classification = DephasingClass::Correlated;
    d.g_hat = std::pow(std::max(c_xx - c_yy, 0.0), 0.25);
  } else if (std::abs(c_yy) <= tau) {
    d.classification = DephasingClass::Uncorrelated;
    d.g_hat = std::sqrt(std::clamp(c_xx, 0.0, 1.0));
  } else {
    d.classification = DephasingClass::Inconclusive;
    d.g_hat = std::pow(std::max(c_xx - c_yy, 0.0), 0.25);
  }
  return d;
}

}  // namespace qpt
