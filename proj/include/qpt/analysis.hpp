#pragma once

// Interpretation of reconstructed process matrices: sparsity patterns,
// named-channel fits, dephasing discrimination and noise parameter budgets.

#include <optional>
#include <string>
#include <vector>

#include "qpt/channels.hpp"

namespace qpt {

struct ParameterCount {
  long long weak_local = 0;  // 12n + 3 n(n-1)/2
  long long generic = 0;     // 16^n - 4^n
};

ParameterCount parameter_count(int n);

struct WeakLocalBudget {
  long long local = 0;
  long long crosstalk = 0;
  long long total = 0;
  long long generic = 0;
};

// symmetric: identical local noise on every qubit (n=2: 12+3 = 15).
WeakLocalBudget weak_local_budget(int n, bool symmetric = false);

// Entries flagged as deviating from the identity process by more than the
// threshold. Column 4^n (index size()) is the shift vector a.
struct PatternReport {
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
  int nonzero_count = 0;
  double threshold = 0.0;
};

PatternReport sparsity_pattern(const AffineProcess& chi, double threshold);

enum class ChannelFamily {
  PhaseFlip,
  BitFlip,
  Depolarizing,
  AmplitudeDamping,
  UncorrelatedDephasing,
  CorrelatedDephasing,
};

std::string family_name(ChannelFamily f);
std::optional<ChannelFamily> family_from_name(const std::string& name);
int family_qubits(ChannelFamily f);

// Closed-form chi_F of a one-parameter family at the given parameter value.
AffineProcess family_model(ChannelFamily f, double param);

struct ChannelFit {
  ChannelFamily family;
  double param = 0.0;
  double residual = 0.0;  // max-entry |chi - model|
};

// One-dimensional least squares over the family's parameter, coarse grid
// refined by golden section to 1e-10.
ChannelFit fit_channel(const AffineProcess& chi, ChannelFamily family);

struct FitSelection {
  std::vector<ChannelFit> fits;  // every family matching chi's qubit count
  int best = 0;                  // index of the smallest residual
  bool ambiguous = false;        // ties within 1e-12
};

FitSelection fit_all(const AffineProcess& chi);

enum class DephasingClass { Correlated, Uncorrelated, Inconclusive };

std::string dephasing_class_name(DephasingClass c);

struct Discrimination {
  DephasingClass classification = DephasingClass::Inconclusive;
  double g_hat = 1.0;
  double tolerance = 0.0;
};

// Inputs are the measured c_xx', c_yy' after preparing |+>|+> (c_xx = 1,
// c_yy = 0). Correlated: c_xx + c_yy ~ 1 with c_yy above tolerance,
// g = (c_xx - c_yy)^(1/4); uncorrelated: c_yy ~ 0, g = sqrt(c_xx).
// With standard errors attached the tolerance is 3 (se_xx + se_yy),
// otherwise 1e-6 (or the caller's override).
Discrimination dephasing_discriminator(double c_xx, double c_yy,
                                       std::optional<double> se_xx = std::nullopt,
                                       std::optional<double> se_yy = std::nullopt,
                                       std::optional<double> tolerance = std::nullopt);

}  // namespace qpt
