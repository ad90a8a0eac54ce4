#ifndef VKR_LATTICE_HPP
#define VKR_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vkr {

inline int64_t iabs(int64_t v) { return v < 0 ? -v : v; }

using BigInt = boost::multiprecision::cpp_int;

// Subgroup of Z^m in column Hermite normal form.
class Lattice {
  public:
    Lattice() = default;
    explicit Lattice(int m) : m_(m) {}
    static Lattice from_generators(int m, const std::vector<std::vector<int64_t>>& gens);

    int ambient() const { return m_; }
    int rank() const { return int(basis_.size()); }
    bool is_full() const;
    bool contains(const std::vector<int64_t>& v) const;
    bool contains(const Lattice& other) const;
    Lattice sum(const Lattice& other) const;

    const std::vector<std::vector<int64_t>>& basis() const { return basis_; }
    BigInt covolume2() const;  // det of the Gram matrix
    bool operator==(const Lattice& o) const { return m_ == o.m_ && basis_ == o.basis_; }
    bool operator<(const Lattice& o) const;  // HNF-lexicographic

    std::string to_string() const;

  private:
    int m_ = 0;
    std::vector<std::vector<int64_t>> basis_;  // columns, HNF
};

enum class Cmp { Less = -1, Equal = 0, Greater = 1 };

// The total order < on subgroups of Z^m used by the Step-2 comparisons:
// by rank, then by the minimal independent tuple (smaller tuple = larger
// subgroup), then by covolume descending, then HNF-lexicographic.
// Returns Less when a < b in this order.
Cmp cmp_subgroups(const Lattice& a, const Lattice& b);

// Minimal independent r-tuple, enumerated in (l1, lex) order.
std::vector<std::vector<int64_t>> lattice_norm_tuple(const Lattice& a);

}  // namespace vkr

#endif
