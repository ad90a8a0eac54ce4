#ifndef VKR_TEMPLATES_HPP
#define VKR_TEMPLATES_HPP

#include "moves.hpp"

#include <random>

namespace vkr {

struct PredicateFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PatternMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A move template: the host cell pattern in abstract indices, the per-corner
// side letters (or a uniform commuting/conjugating letter), vertex traces in
// symbols, and the applicability predicate.
struct MoveTemplate {
    std::string id;
    std::string family;    // GA | ZA | GB | ZB | HD
    std::string hostType;  // Table-1 type of the host cell
    OrderKind order = OrderKind::Dim1;
    Mode mode = Mode::Row;
    enum Kind { Commuting, Conjugating, Corner } kind = Corner;
    Token t;  // Commuting/Conjugating letter

    struct HostEdge {
        std::string from, to;
        Token letter;  // traversal letter (sign = direction)
    };
    std::vector<std::string> hostVertices;  // cyclic order; froms of hostEdges
    std::vector<HostEdge> hostEdges;
    std::map<std::string, Token> sideLetters;

    std::vector<int> traceCoords;
    std::map<int, std::string> extraCoords;
    std::vector<std::string> symbols;
    std::map<std::string, std::vector<std::string>> traces;
    std::vector<std::string> predicate;
    std::vector<std::string> maximalAt;
    std::vector<std::pair<int, std::string>> vmaxCond;  // (coord, condition) on the max vertex
    std::vector<std::string> sideCells;
    std::string notes;
    int dim = 1;  // d used by samplers
    int k = 1;

    Word host_word() const;  // the boundary relator of the host pattern
    int max_abstract_index() const;
};

MoveTemplate parse_template(const std::string& jsonText);
MoveTemplate load_template(const std::string& path);
MoveTemplate mirror_template(const MoveTemplate& t);  // swap R and L everywhere

// The template catalog: all files in a directory plus their mirrors.
std::vector<MoveTemplate> load_catalog(const std::string& dir, bool withMirrors = true);

// A binding: signed relabeling abstract -> concrete plus the face alignment.
struct Binding {
    SignedPerm sigma;      // over the host diagram's rank
    int rotation = 0;      // of the face walk against the host pattern
    bool mirrored = false; // template applied with reversed orientation
    std::map<std::string, int> vertexMap;  // host vertex name -> diagram vertex
};

// All alignments of the template host pattern against the given face.
// freeIndices lists abstract indices not determined by the face (the side
// indices); sigma maps them to 0 until the caller assigns them.
std::vector<Binding> align_template(const Diagram& D, int face, const MoveTemplate& tpl,
                                    std::vector<int>* freeIndices = nullptr);

// Predicate evaluation; also reports which host vertex serves as the maximal
// vertex. Labels must be consistent.
struct PredicateResult {
    bool ok = false;
    int maximalVertex = 0;
    std::string failedAtom;
    std::map<std::string, std::vector<int64_t>> symbolValues;
};
PredicateResult check_predicate(const Diagram& D, const MoveTemplate& tpl, const Binding& b);

MoveResult apply_template(const Diagram& D, int face, const MoveTemplate& tpl, const Binding& b);

// Random instantiation for the template property suite: a single-cell host
// diagram satisfying the predicate, with the designated maximal vertex.
struct Instance {
    Diagram host;
    int face = 0;
    int maximalVertex = 0;
    Binding binding;
};
std::optional<Instance> sample_instance(const MoveTemplate& tpl, std::mt19937& rng, int n,
                                        int64_t entryBound = 20, int maxTries = 600);

}  // namespace vkr

#endif
