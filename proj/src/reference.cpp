#include "convlab/reference.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "convlab/csv.hpp"
#include "convlab/errors.hpp"

namespace convlab {

double bessel_jn(int n, double x) {
  if (n < 0 || n > 600)
    throw ConfigError("bessel_jn: order out of range [0,600]: " +
                      std::to_string(n));
  if (!(std::abs(x) <= 1e4))
    throw ConfigError("bessel_jn: argument out of range |x| <= 1e4");
  if (x < 0.0) {
    const double v = bessel_jn(n, -x);
    return n % 2 ? -v : v;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;

  // Miller downward recurrence, normalized via J_0 + 2*sum J_{2k} = 1.
  const int start = n + 40 + (int)std::ceil(1.2 * x);
  double fkp1 = 0.0;
  double fk = 1e-30;
  double norm = 0.0;
  double result = 0.0;
  for (int k = start; k >= 0; --k) {
    const double fkm1 = (2.0 * (k + 1) / x) * fk - fkp1;
    fkp1 = fk;
    fk = fkm1;  // fk now holds the unnormalized f_k
    if (k == n) result = fk;
    if (k % 2 == 0) norm += (k == 0 ? 1.0 : 2.0) * fk;
    if (std::abs(fk) > 1e250) {
      fk *= 1e-250;
      fkp1 *= 1e-250;
      norm *= 1e-250;
      result *= 1e-250;
    }
  }
  return result / norm;
}

double platzman_u(double x, double t, int n_terms) {
  if (n_terms < 1) throw ConfigError("platzman_u: need at least one term");
  if (t <= 0.0) return std::sin(x);
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double nt = n * t;
    sum += bessel_jn(n, -nt) / nt * std::sin(n * x);
  }
  return -2.0 * sum;
}

double burgers_characteristics(double x, double t,
                               const std::function<double(double)>& u0,
                               double u_min, double u_max) {
  if (t == 0.0) return u0(x);
  auto g = [&](double u) { return u - u0(x - u * t); };
  double lo = u_min - 1e-9, hi = u_max + 1e-9;
  double glo = g(lo), ghi = g(hi);
  if (glo > 0.0 || ghi < 0.0)
    throw OracleError("characteristics: root not bracketed");
  for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double u = 0.5 * (lo + hi);
  if (std::abs(g(u)) > 1e-13)
    throw OracleError("characteristics: no convergence at x=" +
                      std::to_string(x) + ", t=" + std::to_string(t) +
                      " (too close to shock formation)");
  return u;
}

namespace {

// Depth function connecting a state of depth hK to depth h
// (rarefaction when h <= hK, shock otherwise).
double depth_fn(double h, double hK, double g) {
  if (h <= hK) return 2.0 * (std::sqrt(g * h) - std::sqrt(g * hK));
  return (h - hK) * std::sqrt(0.5 * g * (h + hK) / (h * hK));
}

} // namespace

DamBreakSolution swe_dambreak_exact(double hL, double hR, double g) {
  if (!(hR > 0.0) || !(hL >= hR))
    throw ConfigError("dam break: need hL >= hR > 0");
  if (!(g > 0.0)) throw ConfigError("dam break: need g > 0");

  DamBreakSolution s;
  s.hL = hL;
  s.hR = hR;
  s.g = g;
  const double cL = std::sqrt(g * hL);
  const double cR = std::sqrt(g * hR);

  if (hL == hR) {
    s.h_star = hL;
    s.u_star = 0.0;
    s.c_star = cL;
    s.head_speed = s.tail_speed = -cL;
    s.shock_speed = cR;
    return s;
  }

  // f(h) = fL(h) + fR(h) is monotone with f(hR) < 0 < f(hL).
  auto f = [&](double h) { return depth_fn(h, hL, g) + depth_fn(h, hR, g); };
  double lo = hR, hi = hL;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  s.h_star = 0.5 * (lo + hi);
  if (std::abs(f(s.h_star)) > 1e-12)
    throw OracleError("dam break: star depth iteration did not converge");
  s.u_star = -depth_fn(s.h_star, hL, g);
  s.c_star = std::sqrt(g * s.h_star);
  s.head_speed = -cL;
  s.tail_speed = s.u_star - s.c_star;
  s.shock_speed = cR * std::sqrt(0.5 * s.h_star * (s.h_star + hR) / (hR * hR));
  return s;
}

void DamBreakSolution::sample(double xi, double& h, double& u) const {
  if (xi <= head_speed) {
    h = hL;
    u = 0.0;
  } else if (xi < tail_speed) {
    const double cL = std::sqrt(g * hL);
    const double c = (2.0 * cL - xi) / 3.0;
    h = c * c / g;
    u = xi + c;
  } else if (xi < shock_speed) {
    h = h_star;
    u = u_star;
  } else {
    h = hR;
    u = 0.0;
  }
}

double DamBreakSolution::rankine_hugoniot_residual() const {
  const double S = shock_speed;
  const double mass = h_star * (u_star - S) - hR * (0.0 - S);
  const double mom = h_star * u_star * (u_star - S) +
                     0.5 * g * h_star * h_star -
                     (hR * 0.0 * (0.0 - S) + 0.5 * g * hR * hR);
  return std::max(std::abs(mass), std::abs(mom));
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_key(const SystemProblem& p, int n_cells) {
  std::string s = p.tag;
  s += '|';
  s += p.model.kind == SystemKind::Euler ? "euler" : "swe";
  for (double v : {p.model.gamma, p.model.g, p.theta, p.t_final,
                   p.grid.x_min, p.grid.x_max, (double)n_cells}) {
    s += '|';
    s += format_g17(v);
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                (unsigned long long)fnv1a(s));
  return buf;
}

} // namespace

Field euler_reference_first_order(const SystemProblem& base, int n_cells,
                                  const std::string& cache_dir) {
  const int m = base.model.components();
  namespace fs = std::filesystem;
  const fs::path file =
      fs::path(cache_dir) / ("ref-" + cache_key(base, n_cells) + ".csv");

  if (fs::exists(file)) {
    auto rows = read_csv_numeric(file.string(), false);
    if ((int)rows.size() == n_cells) {
      Field f(n_cells, m);
      for (int i = 0; i < n_cells; ++i)
        for (int c = 0; c < m; ++c) f(i, c) = rows[i][c];
      return f;
    }
    // stale or truncated cache entry; regenerate
  }

  SystemProblem p = base;
  p.scheme = Scheme::Fou;
  p.grid = build_grid(base.grid.x_min, base.grid.x_max, n_cells);
  Field f = system_run(p);

  fs::create_directories(cache_dir);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    std::vector<double> row(m);
    for (int i = 0; i < n_cells; ++i) {
      for (int c = 0; c < m; ++c) row[c] = f(i, c);
      write_csv_row(out, row);
    }
  }
  fs::rename(tmp, file);
  return f;
}

Field project_to_coarse(const Field& fine, int coarse_n) {
  if (coarse_n < 1 || fine.n_cells() % coarse_n != 0)
    throw ConfigError("projection: coarse cell count must divide fine count");
  const int ratio = fine.n_cells() / coarse_n;
  Field out(coarse_n, fine.components());
  for (int i = 0; i < coarse_n; ++i)
    for (int c = 0; c < fine.components(); ++c) {
      double sum = 0.0;
      for (int k = 0; k < ratio; ++k) sum += fine(i * ratio + k, c);
      out(i, c) = sum / ratio;
    }
  return out;
}

} // namespace convlab
