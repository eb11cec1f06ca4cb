#include "cyclift/parallel.hpp"

namespace cyclift {

namespace {
std::atomic<unsigned>& configured() {
  static std::atomic<unsigned> n{std::max(1u, std::thread::hardware_concurrency())};
  return n;
}
}  // namespace

unsigned thread_count() { return configured().load(); }

void set_thread_count(unsigned n) { configured().store(std::max(1u, n)); }

}  // namespace cyclift
