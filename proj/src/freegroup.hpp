#ifndef VKR_FREEGROUP_HPP
#define VKR_FREEGROUP_HPP

#include "token.hpp"

#include <array>
#include <cstdint>

namespace vkr {

// Elements of F_n as freely reduced words over basis letters 1..n.
struct FLetter {
    int idx;
    int exp;  // +1 / -1
    bool operator==(const FLetter&) const = default;
};

using FreeWord = std::vector<FLetter>;

FreeWord freely_reduce(const FreeWord& w);
FreeWord fconcat(const FreeWord& a, const FreeWord& b);  // reduced product
FreeWord finverse(const FreeWord& w);

struct IndexOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An automorphism of F_n given by the images of the basis letters.
// Composition convention: the word t_1 t_2 ... t_L acts as
// phi(t_1) o phi(t_2) o ... o phi(t_L), i.e. the rightmost letter acts first.
class Aut {
  public:
    explicit Aut(int n);  // identity
    static Aut of_token(const Token& t, int n);

    int rank() const { return n_; }
    const FreeWord& image(int i) const { return images_[i - 1]; }

    FreeWord apply(const FreeWord& w) const;
    Aut compose(const Aut& rhs) const;  // this o rhs (rhs acts first)
    bool is_identity() const;
    bool operator==(const Aut& o) const { return n_ == o.n_ && images_ == o.images_; }

  private:
    int n_;
    std::vector<FreeWord> images_;
};

Aut apply_word(const Word& w, int n);

// Free reduction of words over the extended alphabet (adjacent inverse pairs).
Word free_reduce(const Word& w);

// Exact integer matrices (column-vector convention: A acts by v -> A v).
struct IntMat {
    int n = 0;
    std::vector<int64_t> a;  // row-major n*n
    static IntMat identity(int n);
    int64_t& at(int r, int c) { return a[r * n + c]; }
    int64_t at(int r, int c) const { return a[r * n + c]; }
    IntMat mul(const IntMat& rhs) const;
    bool operator==(const IntMat&) const = default;
};

// Image of a token / word under the projection to SL_n(Z).
IntMat abelianize_token(const Token& t, int n);
IntMat abelianize_token_inverse(const Token& t, int n);
IntMat abelianize(const Word& w, int n);
IntMat abelianize_inverse(const Word& w, int n);  // [w]^-1, computed exactly

int64_t det(const IntMat& m);

}  // namespace vkr

#endif
