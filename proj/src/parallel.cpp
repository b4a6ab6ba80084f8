#include "cherednik/parallel.hpp"

namespace cherednik {
namespace {
std::atomic<bool> g_force_serial{false};
}

void set_force_serial(bool on) { g_force_serial.store(on); }
bool force_serial() { return g_force_serial.load(); }

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cherednik
