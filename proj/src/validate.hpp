#ifndef VKR_VALIDATE_HPP
#define VKR_VALIDATE_HPP

#include "diagram.hpp"
#include "relators.hpp"

namespace vkr {

struct ValidationReport {
    std::vector<std::string> violations;
    int faceCount = 0;
    int vertexCount = 0;
    int edgeCount = 0;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Checks structure (walk closure, edge side coverage, Euler, connectivity),
// face boundary words against the relator set, and anchored labeling.
ValidationReport validate(const Diagram& D);

}  // namespace vkr

#endif
