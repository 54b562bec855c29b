#include <cstdio>

int main() {
  std::fprintf(stderr, "utree-hecke: not wired up yet\n");
  return 2;
}
