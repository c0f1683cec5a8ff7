// Braid words and their trace closures.
#pragma once

#include <vector>

#include "m3/diagram.hpp"

namespace m3 {

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // letter k = generator sigma_k, negative = inverse; |k| < strands
};

void validate(const BraidWord& b);

// Trace closure, all strands co-oriented in the braid direction; letter +k
// emits a sign +1 crossing. Components are the cycles of the underlying
// permutation, indexed by their smallest starting strand.
LinkDiagram braid_closure(const BraidWord& b);

}  // namespace m3
