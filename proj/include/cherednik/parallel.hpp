#pragma once

// Loop helper over OpenMP. Exceptions thrown by the body are carried out of the
// parallel region and rethrown on the calling thread.

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cherednik {

// Forces every parallel_for onto the calling thread (used by the serial
// reference paths and by tests that compare the two).
void set_force_serial(bool on);
bool force_serial();
int hardware_threads();

class ScopedSerial {
 public:
  ScopedSerial() : previous_(force_serial()) { set_force_serial(true); }
  ~ScopedSerial() { set_force_serial(previous_); }
  ScopedSerial(const ScopedSerial&) = delete;
  ScopedSerial& operator=(const ScopedSerial&) = delete;

 private:
  bool previous_;
};

template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  if (count == 0) return;
  if (force_serial() || count == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::once_flag once;
  const long long total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::call_once(once, [&] { failure = std::current_exception(); });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cherednik
