#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace anyonwalk {

/// mt19937_64 seeded from a seed_seq over (seed, stream tags); both are fully
/// specified by the standard, so streams are identical on every platform.
std::mt19937_64 make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

/// Uniform integer in [0, bound) by rejection (bound > 0).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform length-t history with weight s and a_t = c (s - c ones among the
/// first t-1 steps).
std::uint32_t sample_history(std::mt19937_64& rng, int t, int s, int c);

}  // namespace anyonwalk
