#include "vgnet/numeric/random.hpp"

namespace vgnet::numeric {

Rng make_stream(std::uint64_t seed, std::uint64_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(worker), static_cast<std::uint32_t>(worker >> 32),
                    0x76676e65u};
  return Rng(seq);
}

}  // namespace vgnet::numeric
