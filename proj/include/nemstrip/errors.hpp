#pragma once

#include <stdexcept>
#include <string>

namespace nemstrip {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// eps = 0 fed to an operator whose entries carry 1/eps
struct SingularScaleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CflError : std::runtime_error {
  double dt, dt_max;
  CflError(double dt_, double dt_max_)
      : std::runtime_error("time step " + std::to_string(dt_) +
                           " exceeds CFL limit " + std::to_string(dt_max_)),
        dt(dt_), dt_max(dt_max_) {}
};

struct BlowUpError : std::runtime_error {
  double time;
  explicit BlowUpError(double t)
      : std::runtime_error("non-finite field detected at t = " + std::to_string(t)),
        time(t) {}
};

// theta left the admissible set (or |dz v| fell under the floor)
struct GuardError : std::runtime_error {
  int ix, iy, iz;
  double value;
  GuardError(const std::string& what, int i, int j, int k, double val)
      : std::runtime_error(what + " at grid point (" + std::to_string(i) + "," +
                           std::to_string(j) + "," + std::to_string(k) +
                           "), value " + std::to_string(val)),
        ix(i), iy(j), iz(k), value(val) {}
};

struct CompatibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nemstrip
