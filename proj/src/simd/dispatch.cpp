#include <atomic>
#include <cstdlib>
#include <string>

#include "lcf/error.hpp"
#include "lcf/simd/kernels.hpp"

namespace lcf::simd {
namespace {

// -1: no override, otherwise the Isa value.
std::atomic<int> g_override{-1};

Isa detect() {
#if defined(LCF_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

Isa from_environment(Isa detected) {
  const char* env = std::getenv("LCF_SIMD");
  if (!env) return detected;
  const std::string value(env);
  if (value == "scalar") return Isa::Scalar;
  if (value == "avx2" && isa_available(Isa::Avx2)) return Isa::Avx2;
  return detected;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  static const Isa best = detect();
  return isa == Isa::Scalar || best == Isa::Avx2;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa))
    throw Error("instruction set " + std::string(isa_name(isa)) + " not available");
#if defined(LCF_HAVE_AVX2_KERNELS)
  if (isa == Isa::Avx2) return avx2::kTable;
#endif
  return scalar::kTable;
}

Isa active_isa() {
  const int forced = g_override.load();
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa chosen = from_environment(detect());
  return chosen;
}

const KernelTable& active_kernels() { return kernels_for(active_isa()); }

void set_isa_override(Isa isa) {
  if (!isa_available(isa))
    throw Error("instruction set " + std::string(isa_name(isa)) + " not available");
  g_override.store(static_cast<int>(isa));
}

void clear_isa_override() { g_override.store(-1); }

}  // namespace lcf::simd
