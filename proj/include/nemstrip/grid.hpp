#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "nemstrip/errors.hpp"

namespace nemstrip {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class ZBc { periodic, zero };

// Tensor-product grid on [0,2pi)^3 in scaled coordinates, iz fastest.
struct StripGrid {
  int nx = 0, ny = 0, nz = 0;
  double eps = 1.0;
  ZBc z_bc = ZBc::periodic;

  StripGrid() = default;
  StripGrid(int nx_, int ny_, int nz_, double eps_, ZBc bc = ZBc::periodic)
      : nx(nx_), ny(ny_), nz(nz_), eps(eps_), z_bc(bc) {
    if (nx < 2 || ny < 2 || nz < 2 || nx % 2 || ny % 2 || nz % 2)
      throw ConfigError("grid sizes must be positive even integers");
    if (!(eps > 0.0)) throw SingularScaleError("eps must be > 0");
  }

  std::size_t size() const { return std::size_t(nx) * ny * nz; }
  std::size_t index(int ix, int iy, int iz) const {
    return (std::size_t(ix) * ny + iy) * nz + iz;
  }
  double hx() const { return two_pi / nx; }
  double hy() const { return two_pi / ny; }
  double hz() const { return two_pi / nz; }
  double x(int ix) const { return ix * hx(); }
  double y(int iy) const { return iy * hy(); }
  double z(int iz) const { return iz * hz(); }
  double cell_volume() const { return hx() * hy() * hz(); }
  double volume() const { return two_pi * two_pi * two_pi; }

  // signed integer wavenumber for the periodic axes
  static int wavenumber(int i, int n) { return i <= n / 2 ? i : i - n; }

  bool same_layout(const StripGrid& o) const {
    return nx == o.nx && ny == o.ny && nz == o.nz && z_bc == o.z_bc;
  }
};

struct ScalarField {
  StripGrid grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const StripGrid& g) : grid(g), v(g.size(), 0.0) {}

  double& at(int ix, int iy, int iz) { return v[grid.index(ix, iy, iz)]; }
  double at(int ix, int iy, int iz) const { return v[grid.index(ix, iy, iz)]; }
  std::size_t size() const { return v.size(); }

  bool finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
  double max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
};

// 2D horizontal field (pressure in the hydrostatic system is z-independent)
struct PlaneField {
  int nx = 0, ny = 0;
  std::vector<double> v;

  PlaneField() = default;
  PlaneField(int nx_, int ny_) : nx(nx_), ny(ny_), v(std::size_t(nx_) * ny_, 0.0) {}

  double& at(int ix, int iy) { return v[std::size_t(ix) * ny + iy]; }
  double at(int ix, int iy) const { return v[std::size_t(ix) * ny + iy]; }
  double max_abs() const {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
};

struct NormReport {
  double l2 = 0.0;
  double linf = 0.0;
  double l4 = 0.0;
};

// pointwise arithmetic helpers; fields are plain value types
inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  ScalarField r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
  return r;
}
inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  ScalarField r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] -= b.v[i];
  return r;
}
inline ScalarField operator*(double s, const ScalarField& a) {
  ScalarField r = a;
  for (double& x : r.v) x *= s;
  return r;
}
inline ScalarField multiply(const ScalarField& a, const ScalarField& b) {
  ScalarField r = a;
  for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] *= b.v[i];
  return r;
}
inline void axpy(ScalarField& y, double a, const ScalarField& x) {
  for (std::size_t i = 0; i < y.v.size(); ++i) y.v[i] += a * x.v[i];
}

}  // namespace nemstrip
