#include "anyonwalk/random_words.hpp"

#include "anyonwalk/errors.hpp"
#include "anyonwalk/sampling.hpp"

namespace anyonwalk {

BraidWord random_star_word(std::mt19937_64& rng, int strands, int length) {
  if (strands < 2 && length > 0) throw ConfigError("a walker word needs at least two strands");
  if (length % 2 != 0 || length < 0) throw ConfigError("closed walks have even length");
  BraidWord word;
  word.strands = strands;
  const int start = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(strands)));
  for (;;) {
    word.letters.clear();
    int pos = start;
    bool ok = true;
    for (int k = 0; k < length && ok; ++k) {
      // Force the way home once the remaining steps only just suffice.
      const int remaining = length - k;
      int step = uniform_below(rng, 2) ? 1 : -1;
      if (pos - start >= remaining) step = -1;
      if (start - pos >= remaining) step = 1;
      if (pos + step < 1 || pos + step > strands) {
        ok = false;
        break;
      }
      const int index = step > 0 ? pos : pos - 1;
      word.letters.push_back({index, uniform_below(rng, 2) ? 1 : -1});
      pos += step;
    }
    if (ok && pos == start) return word;
  }
}

}  // namespace anyonwalk
