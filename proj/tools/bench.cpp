#include <chrono>
#include <cstdio>

#include "qell/parallel.hpp"
#include "qell/parse.hpp"

using namespace qell;

namespace {

double time_once(bool parallel) {
  parallel_enabled() = parallel;
  auto G = ring_Gamma();
  Poly base = parse_poly(
      G, "a1*r + a2*s^2 + a3*t + a4*r*s + a6 + r^3 + s^4 + t^2");
  std::vector<Poly> out(64, Poly::zero(G));
  auto start = std::chrono::steady_clock::now();
  parallel_for(out.size(), [&](size_t i) {
    out[i] = base.pow(6) * Poly::constant(G, mpq_class(long(i) + 1));
  });
  std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  return dt.count();
}

}  // namespace

int main() {
  double serial = time_once(false);
  double parallel = time_once(true);
  std::printf("polynomial kernel, 64 tasks\n");
  std::printf("  serial    %8.3fs\n", serial);
  std::printf("  parallel  %8.3fs\n", parallel);
  return 0;
}
