#pragma once

#include <fftw3.h>

#include <complex>
#include <map>
#include <mutex>
#include <vector>

namespace nemstrip::fft {

// FFTW planner is not thread-safe; execution via the new-array interface is.
// Plans are created once per (nx,ny,nz,sign) with FFTW_UNALIGNED so they can
// run on any buffer of that shape.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache c;
    return c;
  }

  fftw_plan get3d(int nx, int ny, int nz, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    Key k{nx, ny, nz, sign};
    auto it = plans_.find(k);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> buf(std::size_t(nx) * ny * nz);
    fftw_plan p = fftw_plan_dft_3d(
        nx, ny, nz, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(k, p);
    return p;
  }

  fftw_plan get2d(int nx, int ny, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    Key k{nx, ny, 0, sign};
    auto it = plans_.find(k);
    if (it != plans_.end()) return it->second;
    std::vector<std::complex<double>> buf(std::size_t(nx) * ny);
    fftw_plan p = fftw_plan_dft_2d(
        nx, ny, reinterpret_cast<fftw_complex*>(buf.data()),
        reinterpret_cast<fftw_complex*>(buf.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(k, p);
    return p;
  }

 private:
  struct Key {
    int nx, ny, nz, sign;
    bool operator<(const Key& o) const {
      return std::tie(nx, ny, nz, sign) < std::tie(o.nx, o.ny, o.nz, o.sign);
    }
  };
  std::mutex mu_;
  std::map<Key, fftw_plan> plans_;
};

inline void dft3(std::complex<double>* data, int nx, int ny, int nz, int sign) {
  fftw_plan p = PlanCache::instance().get3d(nx, ny, nz, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

inline void dft2(std::complex<double>* data, int nx, int ny, int sign) {
  fftw_plan p = PlanCache::instance().get2d(nx, ny, sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

}  // namespace nemstrip::fft
