#include "sigma.hpp"

namespace vkr {

SignedPerm SignedPerm::transposition(int n, int a, int b) {
    SignedPerm s = identity(n);
    std::swap(s.perm[a - 1], s.perm[b - 1]);
    return s;
}

SignedPerm SignedPerm::flip(int n, int a) {
    SignedPerm s = identity(n);
    s.signs[a - 1] = -1;
    return s;
}

SignedPerm SignedPerm::compose(const SignedPerm& rhs) const {
    // (this o rhs)(x_i): rhs sends x_i -> x_{q(i)}^{t_i}, then this sends
    // x_{q(i)} -> x_{p(q(i))}^{s_{q(i)}}.
    SignedPerm out = identity(n());
    for (int i = 1; i <= n(); ++i) {
        int q = rhs.perm[i - 1];
        out.perm[i - 1] = perm[q - 1];
        out.signs[i - 1] = rhs.signs[i - 1] * signs[q - 1];
    }
    return out;
}

SignedPerm SignedPerm::inverse() const {
    SignedPerm out = identity(n());
    for (int i = 1; i <= n(); ++i) {
        int p = perm[i - 1];
        out.perm[p - 1] = i;
        out.signs[p - 1] = signs[i - 1];
    }
    return out;
}

Token act(const SignedPerm& s, const Token& t) {
    if (t.i > s.n() || t.j > s.n())
        throw std::out_of_range("signed permutation too small for token " + to_string(t));
    int a = s.perm[t.i - 1], b = s.perm[t.j - 1];
    int si = s.signs[t.i - 1], sj = s.signs[t.j - 1];
    switch (t.kind) {
        case Kind::R:
            return Token(si == 1 ? Kind::R : Kind::L, a, b, t.exp * si * sj);
        case Kind::L:
            return Token(si == 1 ? Kind::L : Kind::R, a, b, t.exp * si * sj);
        case Kind::W:
            return W(a, b, t.exp * si * sj);
    }
    return t;
}

Word act(const SignedPerm& s, const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const auto& t : w) out.push_back(act(s, t));
    return out;
}

}  // namespace vkr
