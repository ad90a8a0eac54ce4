#ifndef VKR_RELATORS_HPP
#define VKR_RELATORS_HPP

#include "freegroup.hpp"
#include "geometric.hpp"
#include "sigma.hpp"

#include <map>
#include <memory>
#include <optional>

namespace vkr {

struct RankTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotARelator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The defining relators of the optimized Gersten presentation, reduced to
// index patterns with support inside {1,2,3,4} and closed under the signed
// symmetric group. All membership tests route through this set.
const std::set<GeometricRelator>& relator_core();

// Membership of a word in the relator set (any rank).
bool is_relator(const Word& w);
bool is_relator(const GeometricRelator& g);

struct Presentation {
    int n = 0;
    std::vector<Token> generators;            // exp +1 only
    const std::set<GeometricRelator>& relators() const;  // materialized per n
    bool contains(const Word& w) const { return is_relator(w); }

  private:
    mutable std::shared_ptr<std::set<GeometricRelator>> cache_;
};

Presentation optimized_gersten(int n);  // throws RankTooSmall if n < 5

// Cell types of Table 1 (types 1..12 plus 6' and 7').
struct CellType {
    std::string typeId;   // "1".."12", "6'", "7'"
    char subtype = 0;     // 'R', 'L' or 0 (none)
    SignedPerm binding;   // carries the Table representative onto the relator
    Word representative;  // the matched representative word

    std::string label() const { return typeId + (subtype ? std::string(1, subtype) : ""); }
};

// Table-1 representative words (oracle-checked), keyed by type label.
const std::vector<std::pair<std::string, Word>>& table1_representatives();

CellType classify_cell_type(const GeometricRelator& r, int n);

// A word w with w^-1 t^-1 e t a defining relator, |w| <= 2, if a single
// defining relation provides one.
std::optional<Word> conjugation_form(const Token& t, const Token& e);

struct SuperReducedReport {
    struct Flag {
        Word relator;
        Word subword;
    };
    std::vector<Flag> flags;
    int checked = 0;
    bool clean() const { return flags.empty(); }
};

SuperReducedReport audit_super_reduced(const Presentation& p);
SuperReducedReport audit_super_reduced_word(const Word& w, int n);

// Number of Sigma_n(1) orbits on relators whose support contains 1, with a
// representative and the orbit size for each (requires n <= 8).
struct OrbitInfo {
    std::string label;  // e.g. "1R", "8"
    Word representative;
    size_t size = 0;
    bool auxiliary = false;  // disjoint Weyl commutator classes (not in Table 1)
};
std::vector<OrbitInfo> orbits_on_r1(int n);
size_t raw_sigma1_orbit_count(int n);  // unmerged Sigma_n(1)-orbit classes

}  // namespace vkr

#endif
