#include "convlab/scheme.hpp"

#include <cmath>

#include "convlab/errors.hpp"

namespace convlab {

namespace {
constexpr double eps_norm = 1e-12;
// Sentinel outside [0,1]: every scheme maps it to itself (upwind branch).
constexpr double degenerate_sentinel = -1.0;
} // namespace

std::optional<Scheme> scheme_from_string(std::string_view name) {
  if (name == "fou" || name == "upwind") return Scheme::Fou;
  if (name == "waceb") return Scheme::Waceb;
  if (name == "cubista") return Scheme::Cubista;
  if (name == "adbquickest") return Scheme::AdbQuickest;
  return std::nullopt;
}

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::Fou: return "fou";
    case Scheme::Waceb: return "waceb";
    case Scheme::Cubista: return "cubista";
    case Scheme::AdbQuickest: return "adbquickest";
  }
  return "?";
}

CourantContext adb_breakpoints(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw ConfigError("courant number out of range [0,1]: theta = " +
                      std::to_string(theta));
  CourantContext ctx;
  ctx.theta = theta;
  const double at = std::abs(theta);
  const double t2 = theta * theta;
  ctx.tau = 1.0 - at;
  ctx.mu = 1.0 - t2;
  ctx.a = (2.0 - 3.0 * at + t2) / (7.0 - 6.0 * theta - 3.0 * at + 2.0 * t2);
  const double b_den = -5.0 + 6.0 * theta - 3.0 * at + 2.0 * t2;
  if (std::abs(b_den) < 1e-14) {
    // theta = 1: all branches coincide with the identity.
    ctx.b = 1.0;
    ctx.degenerate = true;
  } else {
    ctx.b = (-4.0 + 6.0 * theta - 3.0 * at + t2) / b_den;
  }
  return ctx;
}

Normalized normalize(double phi_U, double phi_D, double phi_R) {
  const double den = phi_D - phi_R;
  const double scale = std::max({1.0, std::abs(phi_D), std::abs(phi_R)});
  if (std::abs(den) <= eps_norm * scale)
    return {degenerate_sentinel, false};
  return {(phi_U - phi_R) / den, true};
}

double face_value_normalized(Scheme s, Normalized phat_U,
                             const CourantContext& ctx) {
  const double p = phat_U.value;
  if (!phat_U.smooth || s == Scheme::Fou) return p;
  switch (s) {
    case Scheme::Waceb:
      if (p >= 0.0 && p < 0.3) return 2.0 * p;
      if (p >= 0.3 && p <= 5.0 / 6.0) return 0.75 * p + 0.375;
      if (p > 5.0 / 6.0 && p <= 1.0) return 1.0;
      return p;
    case Scheme::Cubista:
      if (p > 0.0 && p < 0.375) return 1.75 * p;
      if (p >= 0.375 && p <= 0.75) return 0.75 * p + 0.375;
      if (p > 0.75 && p < 1.0) return 0.25 * p + 0.75;
      return p;
    case Scheme::AdbQuickest: {
      if (ctx.degenerate) return p;
      if (p > 0.0 && p < ctx.a) return (2.0 - ctx.theta) * p;
      if (p >= ctx.a && p <= ctx.b)
        return p + 0.5 * ctx.tau * (1.0 - p) -
               (1.0 / 6.0) * ctx.mu * (1.0 - 2.0 * p);
      if (p > ctx.b && p < 1.0) return 1.0 - ctx.theta + ctx.theta * p;
      return p;
    }
    case Scheme::Fou:
      break;
  }
  return p;
}

double denormalize(double phat_f, double phi_D, double phi_R) {
  return phi_R + phat_f * (phi_D - phi_R);
}

double face_from_roles(double phi_D, double phi_U, double phi_R, Scheme s,
                       const CourantContext& ctx) {
  if (s == Scheme::Fou) return phi_U;
  const Normalized n = normalize(phi_U, phi_D, phi_R);
  if (!n.smooth) return phi_U;
  return denormalize(face_value_normalized(s, n, ctx), phi_D, phi_R);
}

double reconstruct_face(std::span<const double, 5> cells, FlowSign sign,
                        Scheme s, const CourantContext& ctx) {
  // cells[k] holds the value at cell i-2+k; the face is i+1/2.
  if (sign == FlowSign::Plus)
    return face_from_roles(cells[3], cells[2], cells[1], s, ctx);
  return face_from_roles(cells[2], cells[3], cells[4], s, ctx);
}

} // namespace convlab
