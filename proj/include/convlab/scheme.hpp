#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace convlab {

/// Convection schemes expressed in Leonard's normalized variables.
enum class Scheme {
  Fou,         ///< first-order upwind baseline
  Waceb,
  Cubista,
  AdbQuickest  ///< Courant-number adaptive bounded QUICKEST
};

std::optional<Scheme> scheme_from_string(std::string_view name);
const char* to_string(Scheme s);

/// Face-local Courant number and the derived ADBQUICKEST parameters.
///
/// theta = a*dt/dx, tau = 1-|theta|, mu = 1-theta^2. The breakpoints
/// a, b delimit the QUICKEST branch. At theta=1 b is 0/0; the context
/// is marked degenerate and the face value falls back to upwind.
struct CourantContext {
  double theta = 0.0;
  double tau = 1.0;
  double mu = 1.0;
  double a = 2.0 / 7.0;
  double b = 0.8;
  bool degenerate = false;
};

/// Computes tau, mu and the breakpoints for theta in [0,1].
/// Throws ConfigError outside that range.
CourantContext adb_breakpoints(double theta);

/// Normalized upwind value. smooth=false flags a degenerate
/// normalization (locally flat field); the face value must then
/// fall back to the upwind cell value.
struct Normalized {
  double value = 0.0;
  bool smooth = false;
};

/// Leonard normalization phat_U = (phi_U - phi_R)/(phi_D - phi_R).
/// Degenerate when |phi_D - phi_R| <= 1e-12 * max(1,|phi_D|,|phi_R|);
/// the returned value is then a sentinel outside [0,1].
Normalized normalize(double phi_U, double phi_D, double phi_R);

/// Normalized face value phat_f for the given scheme. Outside the
/// monotone range [0,1] every scheme is the identity (upwind).
/// ctx is only consulted by AdbQuickest.
double face_value_normalized(Scheme s, Normalized phat_U,
                             const CourantContext& ctx);

/// Inverse of normalize: phi_f = phi_R + phat_f * (phi_D - phi_R).
double denormalize(double phat_f, double phi_D, double phi_R);

/// Face value from the three stencil roles (downstream, upwind,
/// remote-upwind). Returns phi_U when the normalization is degenerate.
double face_from_roles(double phi_D, double phi_U, double phi_R, Scheme s,
                       const CourantContext& ctx);

enum class FlowSign { Plus, Minus };

/// Reconstructs the value at face i+1/2 from cells i-2..i+2.
/// FlowSign::Plus selects D=i+1, U=i, R=i-1; Minus selects D=i, U=i+1, R=i+2.
double reconstruct_face(std::span<const double, 5> cells, FlowSign sign,
                        Scheme s, const CourantContext& ctx);

} // namespace convlab
