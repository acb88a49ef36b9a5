#include <algorithm>
#include <cstddef>

#include "nearprim/arith.hpp"
#include "nearprim/kernels.hpp"

namespace nearprim::kernels::scalar {

void powmod_batch(std::span<const std::uint64_t> base, std::span<const std::uint64_t> exp,
                  std::span<const std::uint64_t> mod, std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pow_mod(base[i], exp[i], mod[i]);
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) {
  // Products are below 2^40, so 2^23 of them fit in an unsigned 64-bit sum.
  constexpr std::size_t kBlock = std::size_t{1} << 23;
  std::uint64_t total = 0;
  for (std::size_t start = 0; start < a.size(); start += kBlock) {
    const std::size_t stop = std::min(a.size(), start + kBlock);
    std::uint64_t acc = 0;
    for (std::size_t i = start; i < stop; ++i) acc += std::uint64_t{a[i]} * b[i];
    total = (total + acc % p) % p;
  }
  return static_cast<std::uint32_t>(total);
}

}  // namespace nearprim::kernels::scalar
