#ifndef VKR_DIAGRAM_HPP
#define VKR_DIAGRAM_HPP

#include "coset.hpp"
#include "geometric.hpp"

#include <map>
#include <optional>

namespace vkr {

// Walks are sequences of signed edge ids: +id traverses tail->head, -id the
// reverse. Bounded faces and the outer walk together traverse every edge
// exactly once in each direction.
using Walk = std::vector<int>;

struct DEdge {
    int id = 0, tail = 0, head = 0;
    Token label;
};

struct InconsistentLabeling : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCancellable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Diagram {
  public:
    int n = 0, d = 1;
    Mode mode = Mode::Row;
    std::set<int> vertices;
    std::map<int, DEdge> edges;
    std::map<int, Walk> faces;
    Walk outer;
    int anchorVertex = 0;
    CosetLabel anchorLabel;

    int fresh_vertex();
    int fresh_edge();
    int fresh_face();
    int add_edge(int tail, int head, const Token& label);
    int add_face(const Walk& w);

    int edge_tail(int signedId) const;  // start vertex of a signed traversal
    int edge_head(int signedId) const;
    Token edge_token(int signedId) const;  // label^sign

    Word walk_word(const Walk& w) const;   // right-to-left boundary reading
    Word face_word(int face) const { return walk_word(faces.at(face)); }
    Word boundary_word() const;            // from the lowest boundary vertex id

    std::vector<int> walk_vertices(const Walk& w) const;  // tail sequence
    bool face_contains_vertex(int face, int v) const;
    std::vector<int> faces_at(int v) const;
    std::vector<int> edges_at(int v) const;

    // anchored labeling l(head) = l(edge) . l(tail); throws on inconsistency
    std::map<int, CosetLabel> label_vertices() const;

    std::set<int> boundary_vertices() const;
    bool is_interior(int v) const;
    std::set<int> support_of_face(int face) const;

    // replaces the walk content of every face/outer reference of edge e
    void check_well_formed() const;  // structural asserts (cheap)
};

// Galleries: ordered cell chains around a vertex.
struct Gallery {
    int center = 0;
    std::vector<int> cells;        // face ids, consecutive share an edge at center
    std::vector<int> sharedEdges;  // edge ids between consecutive cells
    bool full = false;
};

std::vector<Gallery> galleries_at(const Diagram& D, int v, int k);
std::optional<Gallery> full_gallery_at(const Diagram& D, int v);

// I-trace: per-vertex labels restricted to the listed columns (1-based).
std::map<int, std::vector<int64_t>> trace(const Diagram& D, const std::vector<int>& I);

// Cancellation of a mirror pair of cells (shared edge path, equal labels).
Diagram cancel_pair(const Diagram& D, int f1, int f2);
bool cancellable(const Diagram& D, int f1, int f2);

std::string export_dot(const Diagram& D, bool withLabels);
std::string export_tikz(const Diagram& D, bool withLabels);

}  // namespace vkr

#endif
