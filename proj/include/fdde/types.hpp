#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdde {

/// Error categories shared by every module. The C API maps these 1:1 onto
/// status codes.
enum class Errc {
  InvalidArgument,
  DomainError,        // formula evaluated outside its admissible region
  GridMisaligned,     // delay is not an integer multiple of the step
  HistoryDomain,      // history function does not cover [-(tau1+tau2), 0]
  NonFiniteState,     // NaN produced during integration
  TrajectoryTooShort,
  ContourRoot,        // characteristic root pinned on the counting contour
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

/// Feedback nonlinearity g in D^a x = -gamma x + g(x(t-tau1)) - e^{-gamma tau2} g(x(t-tau1-tau2)).
enum class Nonlinearity { Linear, Sine, Custom };

/// User-supplied nonlinearity. The declared derivative at zero is validated
/// against a central finite difference when the model is constructed.
struct CustomG {
  std::function<double(double)> fn;
};

/// Full nonlinear model parameters.
struct ModelParams {
  double alpha = 1.0;  // fractional order, 0 < alpha <= 1
  double gamma = 0.0;  // instantaneous decay coefficient
  double k = 0.0;      // feedback gain, k = g'(0)
  double tau1 = 0.0;   // first delay
  double tau2 = 0.0;   // second delay
  Nonlinearity nonlinearity = Nonlinearity::Linear;
  std::shared_ptr<const CustomG> custom;  // set iff nonlinearity == Custom

  /// Throws Error(InvalidArgument) if any invariant is violated. For Custom
  /// nonlinearities also checks g(0) = 0 and that the declared gain k matches
  /// a central finite-difference derivative at zero (rel. tolerance 1e-6).
  void validate() const;

  [[nodiscard]] double g(double x) const;
  [[nodiscard]] double total_delay() const { return tau1 + tau2; }

  static ModelParams linear(double alpha, double gamma, double k, double tau1, double tau2);
  static ModelParams sine(double alpha, double gamma, double k, double tau1, double tau2);
  static ModelParams custom(double alpha, double gamma, double k, double tau1, double tau2,
                            std::function<double(double)> g);
};

/// Reduced single-delay form D^a x = a x(t) + b x(t - tau).
struct LinearSingleDelay {
  double alpha = 1.0;
  double a = 0.0;  // instantaneous coefficient
  double b = 0.0;  // delayed coefficient
  double tau = 0.0;

  void validate() const;
};

enum class Stability { Stable, Unstable, Bifurcation, Unknown };

[[nodiscard]] const char* to_string(Stability s) noexcept;

/// Classification outcome with provenance. `clause` names the theorem clause
/// that fired (e.g. "Thm4.1(b)(i)") and is empty when status is Unknown.
struct StabilityVerdict {
  Stability status = Stability::Unknown;
  bool delay_independent = false;
  std::string clause;
  std::vector<std::pair<std::string, double>> critical_values;

  [[nodiscard]] const double* critical(const std::string& name) const {
    for (const auto& [n, v] : critical_values)
      if (n == name) return &v;
    return nullptr;
  }
};

/// Critical quantities produced by the closed-form theorems. Negative-free
/// where the formulas guarantee it; NaN-free by construction (absent instead).
struct CriticalValues {
  std::optional<double> tau_cr;
  std::optional<double> tau1_star;
  std::optional<double> tau2_star;
  std::optional<double> k_star;
  std::optional<double> lambda_star;  // tangency abscissa ln(1+tau)/tau - gamma
};

/// Discretized solution on a uniform grid t0 + n h.
struct Trajectory {
  double t0 = 0.0;
  double h = 0.0;
  std::vector<double> values;
  std::string history_id;    // descriptor of the history used on [-(tau1+tau2), 0]
  double total_delay = 0.0;  // tau1 + tau2 of the generating run
  bool diverged = false;     // run hit the divergence threshold and stopped early

  [[nodiscard]] double t_back() const {
    return values.empty() ? t0 : t0 + h * static_cast<double>(values.size() - 1);
  }
};

/// Imaginary-axis root candidate: residuals are the real/imaginary parts of
/// the characteristic function at lambda = i v.
struct CrossingPoint {
  double v = 0.0;
  double residual_real = 0.0;
  double residual_imag = 0.0;
};

}  // namespace fdde
