#pragma once

#include <random>

#include "anyonwalk/braidgen.hpp"

namespace anyonwalk {

/// Random closed walker walk with random letter signs: on `strands` strands
/// the walker starts in a uniform slot and takes `length` (even) unit steps
/// that stay on the strands and return home; each step's generator gets a
/// uniform sign. The closure has identity permutation and every crossing
/// involves the walker.
BraidWord random_star_word(std::mt19937_64& rng, int strands, int length);

}  // namespace anyonwalk
