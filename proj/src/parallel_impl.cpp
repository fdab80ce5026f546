#include "embedlb/parallel.hpp"
namespace embedlb {
namespace { int g_threads = 1; }
int worker_threads() { return g_threads; }
void set_worker_threads(int n) { g_threads = n < 1 ? 1 : n; }
}
