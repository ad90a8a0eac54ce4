#ifndef VKR_ORDERS_HPP
#define VKR_ORDERS_HPP

#include "coset.hpp"
#include "lattice.hpp"

namespace vkr {

enum class OrderKind { Dim1, Step1, Step2, Step3 };

struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// N(x) = (|x|_inf, m(x), n - g(x), |x|_1), compared lexicographically.
struct Dim1Key {
    int64_t linf = 0, m = 0, nMinusG = 0, l1 = 0;
    auto operator<=>(const Dim1Key&) const = default;
};
Dim1Key dim1_key(const CosetLabel& z);
Cmp cmp_dim1(const CosetLabel& u, const CosetLabel& v);

// Step-1 pre-order criteria (1)-(6).
struct Step1Key {
    std::vector<int64_t> k;  // lexicographic
    auto operator<=>(const Step1Key&) const = default;
};
Step1Key step1_key(const CosetLabel& z, int k);
Cmp cmp_step1(const CosetLabel& u, const CosetLabel& v, int k);

// Step-2 pre-order criteria (1)-(6).
struct Step2Key {
    Lattice active;      // subgroup of Z^{k-1}
    Lattice semiActive;  // subgroup of Z^k
    int64_t helpful = 0, km1cols = 0, restricted = 0;
    std::vector<int64_t> l1ur;
    bool operator==(const Step2Key&) const = default;
};
Step2Key step2_key(const CosetLabel& z, int k, int C = 8);
Cmp cmp_step2(const CosetLabel& u, const CosetLabel& v, int k, int C = 8);

Lattice active_subgroup(const CosetLabel& z, int k);
Lattice semi_active_subgroup(const CosetLabel& z, int k, int C = 8);
bool is_helpful(const CosetLabel& z, int c, int k, const Lattice& semiActive);

// Step-3 weighted norm f_k(x_d,...,x_k), x_i = |row_i|_1, with
// f_i = 3^{f_{i+1}} x_i. Values can be towers; comparisons are exact.
struct Step3Norm {
    std::vector<int64_t> xs;  // x_d first, x_k last
    static Step3Norm of(const CosetLabel& z, int k);
    BigInt exact() const;  // throws Step3TooLarge when not materializable
    bool evaluable() const;
};
struct Step3TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Cmp cmp_step3(const Step3Norm& a, const Step3Norm& b);
Cmp cmp_step3(const CosetLabel& u, const CosetLabel& v, int k);

// label comparison under the selected pre-order (Step3 is total on norms)
Cmp cmp_labels(const CosetLabel& u, const CosetLabel& v, OrderKind o, int k);

}  // namespace vkr

#endif
