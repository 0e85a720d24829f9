#include "cfrag/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace cfrag::fft {
namespace {

struct BufferDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], BufferDeleter>;

Buffer make_buffer(std::size_t n) {
  return Buffer(static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
}

// The FFTW planner is not reentrant; execution with fresh arrays is.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    Buffer in = make_buffer(n), out = make_buffer(n);
    fftw_plan plan = fftw_plan_dft_1d(n, in.get(), out.get(), sign, FFTW_ESTIMATE);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

cvec run(std::span<const std::complex<double>> x, int sign) {
  const auto n = x.size();
  if (n == 0) return {};
  fftw_plan plan = cache().get(static_cast<int>(n), sign);
  Buffer in = make_buffer(n), out = make_buffer(n);
  std::copy(x.begin(), x.end(), reinterpret_cast<std::complex<double>*>(in.get()));
  fftw_execute_dft(plan, in.get(), out.get());
  auto* begin = reinterpret_cast<std::complex<double>*>(out.get());
  return cvec(begin, begin + n);
}

}  // namespace

cvec forward(std::span<const std::complex<double>> x) { return run(x, FFTW_FORWARD); }
cvec backward(std::span<const std::complex<double>> x) { return run(x, FFTW_BACKWARD); }

}  // namespace cfrag::fft
