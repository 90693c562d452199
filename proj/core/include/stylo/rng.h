#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace stylo {

// Identifies the resampling stream: mt19937_64 seeded per round through
// splitmix64, bounded draws by rejection, partial Fisher-Yates selection.
// Bump the version whenever any of those steps changes.
inline constexpr std::string_view kResamplerName = "mt19937_64+splitmix64/v1";

std::uint64_t splitmix64(std::uint64_t& state);

// Seed for one round, independent of evaluation order.
std::uint64_t derive_round_seed(std::uint64_t seed, std::uint64_t round);

// Uniform integer in [0, bound); bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound);

// k distinct indices from [0, population), in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t population,
                                                    std::size_t k,
                                                    std::mt19937_64& engine);

}  // namespace stylo
