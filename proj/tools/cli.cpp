#include <cstdio>

int main() {
  std::fprintf(stderr, "qell: command line surface lands with the modules\n");
  return 2;
}
