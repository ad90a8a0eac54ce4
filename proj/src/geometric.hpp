#ifndef VKR_GEOMETRIC_HPP
#define VKR_GEOMETRIC_HPP

#include "token.hpp"

#include <optional>
#include <set>

namespace vkr {

// Equivalence class of cyclically reduced words under rotation and inversion,
// keyed by its lexicographically minimal member.
struct GeometricRelator {
    Word rep;  // canonical representative
    auto operator<=>(const GeometricRelator&) const = default;
};

struct EmptyAfterReduction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Word cyclic_reduce(const Word& w);
GeometricRelator canonical_geometric(const Word& w);  // throws EmptyAfterReduction
std::optional<GeometricRelator> try_canonical_geometric(const Word& w);

std::set<int> support(const Word& w);
std::vector<Word> suffixes(const Word& w);  // |w|+1 suffixes, increasing length

}  // namespace vkr

#endif
