#ifndef VKR_MOVES_HPP
#define VKR_MOVES_HPP

#include "diagram.hpp"
#include "orders.hpp"
#include "relators.hpp"

namespace vkr {

struct NotCommuting : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingConjugationForm : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct HoleFillFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IncompatibleAtEdge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MoveResult {
    Diagram diagram;
    std::vector<int> newVertices;
    std::vector<int> newFaces;
};

// C_F(t): replace cell `face` by an inner copy surrounded by side cells with
// boundary label e^-1 t^-1 e t. t carries its sign: new labels are t . old.
MoveResult commuting_map(const Diagram& D, int face, const Token& t);

// Conjugating map: side cells carry w_{t,e}^-1 t^-1 e t; the inner hole is
// zipped and filled by sub-relator cells.
MoveResult conjugating_map(const Diagram& D, int face, const Token& t);
MoveResult conjugating_map(const Diagram& D, int face, const Token& t, OrderKind order, int k,
                           const CosetLabel* below);

// Generalization with one side letter per corner vertex of the cell: the copy
// of corner v carries label sideLetters[v] . l(v). Most figure templates are
// instances of this construction.
MoveResult corner_map(const Diagram& D, int face, const std::map<int, Token>& sideLetters,
                      OrderKind order = OrderKind::Dim1, int k = 1,
                      const CosetLabel* below = nullptr);

// Replace two cells sharing an edge path by a single cell (the union must
// again be a defining relator). Interior vertices of the seam disappear.
MoveResult merge_cells(const Diagram& D, int f1, int f2);

struct MoveSpec {
    enum Kind { Commuting, Conjugating } kind = Commuting;
    Token t;
};

// k-fold cell map: apply the per-cell maps, then cancel the side-cell pairs
// at the designated shared edges. Full galleries eliminate the center.
MoveResult gallery_map(const Diagram& D, const Gallery& G, const std::vector<MoveSpec>& moves);
MoveResult gallery_map_uniform(const Diagram& D, const Gallery& G, const Token& t);

// Extended label h: the number of purely maximal type-5 cells at a vertex.
std::map<int, int> h_counts(const Diagram& D, OrderKind preorder, int k);
int h_count(const Diagram& D, int v, OrderKind preorder, int k);

struct ReductionCheck {
    bool ok = true;
    int violator = 0;  // vertex id breaking the reduction condition
    std::string reason;
};

ReductionCheck is_reduction(const Diagram& before, int maximalVertex, const Diagram& after,
                            OrderKind order, int k = 1);

// Extended comparison of two diagram vertices under a pre-order with h-counts.
Cmp extended_cmp(const Diagram& Da, int va, const Diagram& Db, int vb, OrderKind preorder, int k);

// maximal vertices of a diagram under the given (pre-)order
std::vector<int> maximal_vertices(const Diagram& D, OrderKind order, int k);

}  // namespace vkr

#endif
