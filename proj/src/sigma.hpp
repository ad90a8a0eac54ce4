#ifndef VKR_SIGMA_HPP
#define VKR_SIGMA_HPP

#include "token.hpp"

#include <numeric>

namespace vkr {

// Element of the signed symmetric group S_n x {+-1}^n acting on F_n by
// x_i -> x_{perm[i]}^{sign[i]}.
struct SignedPerm {
    std::vector<int> perm;   // 1-based images, perm[i-1] = p(i)
    std::vector<int> signs;  // +-1, signs[i-1]

    static SignedPerm identity(int n) {
        SignedPerm s;
        s.perm.resize(n);
        std::iota(s.perm.begin(), s.perm.end(), 1);
        s.signs.assign(n, 1);
        return s;
    }
    static SignedPerm transposition(int n, int a, int b);
    static SignedPerm flip(int n, int a);  // x_a -> x_a^-1

    int n() const { return int(perm.size()); }
    SignedPerm compose(const SignedPerm& rhs) const;  // this after rhs
    SignedPerm inverse() const;
};

Token act(const SignedPerm& s, const Token& t);
Word act(const SignedPerm& s, const Word& w);

}  // namespace vkr

#endif
