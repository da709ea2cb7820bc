#pragma once

#include <vector>

#include "tricrit/graph.hpp"

namespace tricrit {

/// Signs on every colored vertex, indexed by vertex; junction entries are 0.
/// At each junction the product over its three colored neighbors is +1.
struct FullSignAssignment {
  std::vector<Sign> sign;
};

/// Extends the white signs of g to black and gray vertices by walking the
/// black-gray tree from seed_black, which receives seed_sign. The two seed
/// signs give assignments differing by global negation of black and gray.
/// Throws if g is invalid or seed_black is not a black vertex.
FullSignAssignment propagate_signs(const DistinguishingGraph& g, int seed_black, Sign seed_sign);

/// White/black color swap on a signed graph: the new white signs are the
/// propagated black signs of g (seed +1 at the lowest black vertex). The
/// leftover global polarity is harmless because every comparison downstream
/// factors out the global flip.
DistinguishingGraph swap_with_signs(const DistinguishingGraph& g);

struct SignOrbit {
  std::vector<Sign> representative;  // one sign per white vertex, ascending vertex order
  int size = 0;
};

/// Orbits of all 2^n white sign assignments under the automorphism group of
/// g together with the global flip. Signs already on g are ignored. One
/// lexicographically least representative per orbit (+1 sorts before -1),
/// orbits sorted by representative.
std::vector<SignOrbit> sign_orbits(const DistinguishingGraph& g);

/// A sign assignment realizes an orientable manifold exactly when all white
/// signs agree.
bool oriented_signs(const DistinguishingGraph& g);

/// Copy of g with the white signs replaced by the given per-white vector
/// (ascending white vertex order).
DistinguishingGraph with_white_signs(const DistinguishingGraph& g, const std::vector<Sign>& signs);

}  // namespace tricrit
