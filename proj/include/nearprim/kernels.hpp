#pragma once

// Data-parallel arithmetic kernels used by the prime scans and the modular
// Genocchi rows. Every kernel has a scalar reference implementation and,
// on x86-64, an AVX2 variant; the active variant is chosen once at runtime
// from CPUID and can be overridden for equivalence testing.
//
// Variants must be bit-identical: all arithmetic is exact integer
// arithmetic (the AVX2 powmod uses exact double products below 2^52).

#include <cstdint>
#include <span>
#include <string_view>

namespace nearprim::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

// Best variant supported by this CPU and build.
Isa detected_isa();
// Variant used by the dispatching entry points. Defaults to detected_isa(),
// or scalar when NEARPRIM_SIMD=scalar is set in the environment.
Isa active_isa();
// Pins the dispatch target; requests for unsupported ISAs fall back to scalar.
void set_active_isa(Isa isa);

// out[i] = base[i]^exp[i] mod mod[i]. Requires mod[i] >= 1 and base[i] < mod[i].
void powmod_batch(std::span<const std::uint64_t> base, std::span<const std::uint64_t> exp,
                  std::span<const std::uint64_t> mod, std::span<std::uint64_t> out);

// sum(a[i] * b[i]) mod p. Requires p < 2^20 and a[i], b[i] < p.
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);

// Largest modulus the vector powmod lane handles; larger moduli take the
// scalar path inside the AVX2 variant.
inline constexpr std::uint64_t kVectorModulusLimit = 1ULL << 26;
inline constexpr std::uint32_t kDotModulusLimit = 1U << 20;

namespace scalar {
void powmod_batch(std::span<const std::uint64_t> base, std::span<const std::uint64_t> exp,
                  std::span<const std::uint64_t> mod, std::span<std::uint64_t> out);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);
}  // namespace scalar

namespace avx2 {
// Only callable when detected_isa() == Isa::avx2.
void powmod_batch(std::span<const std::uint64_t> base, std::span<const std::uint64_t> exp,
                  std::span<const std::uint64_t> mod, std::span<std::uint64_t> out);
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p);
}  // namespace avx2

}  // namespace nearprim::kernels
