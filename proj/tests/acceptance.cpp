// Acceptance suite placeholder; filled in after the modules build.
#include <cstdio>

int main() {
  std::puts("acceptance: not yet implemented");
  return 1;
}
