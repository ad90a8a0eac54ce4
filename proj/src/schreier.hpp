#ifndef VKR_SCHREIER_HPP
#define VKR_SCHREIER_HPP

#include "coset.hpp"
#include "orders.hpp"

#include <map>

namespace vkr {

std::vector<Token> alphabet(int n);          // the generating set (exp +1)
std::vector<Token> alphabet_signed(int n);   // generators and inverses

// one entry per letter x: (x, x.z), deterministic token order
std::vector<std::pair<Token, CosetLabel>> neighbors(const CosetLabel& z, Mode mode);

// number of pairs (w, s) with w = s.z and w < z in the dim-1 order
int return_degree(const CosetLabel& z, Mode mode);

struct SchreierBall {
    CosetLabel center;
    int radius = 0;
    std::set<CosetLabel> vertices;
    std::vector<std::tuple<CosetLabel, Token, CosetLabel>> edges;
    bool truncated = false;  // memory budget reached
};

SchreierBall ball(const CosetLabel& z, int r, Mode mode, size_t maxVertices = 2'000'000);

struct NotConnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SchreierGenerators {
    std::vector<Word> words;      // the nontrivial (xt)~^-1 x t
    std::map<CosetLabel, Word> transversal;
    bool suffixPropertyHolds = true;
    std::vector<Word> suffixViolations;
};

// Schreier generators over a finite label set A: maximal tree from the
// anchor, transversal words along tree paths, generators (xt)~^-1 x t.
SchreierGenerators schreier_generators(const std::set<CosetLabel>& A, const Word& anchorWord,
                                       Mode mode);

struct LiftEntry {
    std::string name;
    Word generator;  // word in the alphabet mapping to the group element
    Word lift;       // the Schreier-friendly lift
    bool small = true;
    bool liftMatches = true;  // lift equals the generator in Aut(F_n)
};

struct SmallLiftSuite {
    int d = 0, n = 0;
    Mode mode = Mode::Row;
    std::vector<LiftEntry> lifts;
    std::set<CosetLabel> suffixLabels;
    bool allSmall = true;
    bool allMatch = true;
};

// Generating set S_H of the row/column stabilizer with explicit lifts whose
// suffixes all have small theta-images.
SmallLiftSuite small_lift_suite(int n, int d, Mode mode);

// the lift of R(i,j) L(i,j)^-1 through indices k and m
Word lift_word_RL(int i, int j, int k, int m);
// the lift of [R(i,j), R(i,k)] through index m
Word lift_word_K(int i, int j, int k, int m);

}  // namespace vkr

#endif
