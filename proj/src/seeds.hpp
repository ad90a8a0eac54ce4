#ifndef VKR_SEEDS_HPP
#define VKR_SEEDS_HPP

#include "diagram.hpp"

#include <random>

namespace vkr {

// d=1 wheel with small boundary and one interior vertex of norm 2: a type-1R
// pentagon, two type-5 squares and a type-1L pentagon around (2,1,1,0,...).
Diagram seed_dim1_wheel(int n, std::mt19937& rng);

// d-row diagram whose center has many depth-d columns equivalent under ~_k:
// violates both def_{k} <= wdef_k + C (k = d-1... ) and the step-3 bound.
Diagram seed_deep_wheel(int d, int n, int deepCols, std::mt19937& rng);

// relabel a diagram by a random signed permutation (keeps validity)
Diagram scramble(const Diagram& D, std::mt19937& rng);

}  // namespace vkr

#endif
