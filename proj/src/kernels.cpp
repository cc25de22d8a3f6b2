#include "stiefel/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace stiefel::kernels {
namespace {

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Isa> g_isa{Isa::scalar};

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::avx2;
#endif
  return Isa::scalar;
}

void install(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) isa = Isa::scalar;
  g_isa.store(isa);
  g_active.store(isa == Isa::avx2 ? &avx2_ops() : &scalar_ops());
}

const Ops* init() {
  Isa isa = detect();
  if (const char* env = std::getenv("STIEFEL_ISA")) {
    if (std::strcmp(env, "scalar") == 0) isa = Isa::scalar;
    else if (std::strcmp(env, "avx2") == 0 && avx2_available()) isa = Isa::avx2;
    // anything else (e.g. "auto") keeps the detected set
  }
  install(isa);
  return g_active.load();
}

}  // namespace

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const Ops& ops() {
  const Ops* t = g_active.load(std::memory_order_acquire);
  if (!t) t = init();
  return *t;
}

Isa active_isa() {
  ops();
  return g_isa.load();
}

void set_isa(Isa isa) { install(isa); }

}  // namespace stiefel::kernels
