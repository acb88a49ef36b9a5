#include <atomic>
#include <cstdlib>
#include <string>

#include "nearprim/errors.hpp"
#include "nearprim/kernels.hpp"

namespace nearprim::kernels {

namespace {

Isa initial_isa() {
  if (const char* env = std::getenv("NEARPRIM_SIMD")) {
    if (std::string(env) == "scalar") return Isa::scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#if defined(NEARPRIM_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  if (has_avx2) return Isa::avx2;
#endif
  return Isa::scalar;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && detected_isa() != Isa::avx2) isa = Isa::scalar;
  active().store(isa, std::memory_order_relaxed);
}

void powmod_batch(std::span<const std::uint64_t> base, std::span<const std::uint64_t> exp,
                  std::span<const std::uint64_t> mod, std::span<std::uint64_t> out) {
  if (base.size() != out.size() || exp.size() != out.size() || mod.size() != out.size()) {
    throw DomainError("powmod_batch: operand lengths differ");
  }
#if defined(NEARPRIM_HAVE_AVX2_TU)
  if (active_isa() == Isa::avx2) return avx2::powmod_batch(base, exp, mod, out);
#endif
  scalar::powmod_batch(base, exp, mod, out);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
  if (a.size() != b.size()) throw DomainError("dot_mod: operand lengths differ");
  if (p == 0 || p >= kDotModulusLimit) throw DomainError("dot_mod: modulus out of range");
#if defined(NEARPRIM_HAVE_AVX2_TU)
  if (active_isa() == Isa::avx2) return avx2::dot_mod(a, b, p);
#endif
  return scalar::dot_mod(a, b, p);
}

}  // namespace nearprim::kernels
