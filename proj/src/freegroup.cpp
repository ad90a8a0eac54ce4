#include "freegroup.hpp"

namespace vkr {

FreeWord freely_reduce(const FreeWord& w) {
    FreeWord out;
    for (const auto& l : w) {
        if (!out.empty() && out.back().idx == l.idx && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

FreeWord fconcat(const FreeWord& a, const FreeWord& b) {
    FreeWord out = a;
    for (const auto& l : b) {
        if (!out.empty() && out.back().idx == l.idx && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

FreeWord finverse(const FreeWord& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->idx, -it->exp});
    return out;
}

Aut::Aut(int n) : n_(n), images_(n) {
    for (int i = 1; i <= n; ++i) images_[i - 1] = {{i, 1}};
}

static void check_indices(const Token& t, int n) {
    if (t.i > n || t.j > n) throw IndexOutOfRange("token index exceeds rank " + std::to_string(n));
}

Aut Aut::of_token(const Token& t, int n) {
    check_indices(t, n);
    Aut a(n);
    switch (t.kind) {
        case Kind::R:
            // R(i,j): x_i -> x_i x_j; inverse: x_i -> x_i x_j^-1
            a.images_[t.i - 1] = t.exp == 1 ? FreeWord{{t.i, 1}, {t.j, 1}} : FreeWord{{t.i, 1}, {t.j, -1}};
            break;
        case Kind::L:
            // L(i,j): x_i -> x_j x_i; inverse: x_i -> x_j^-1 x_i
            a.images_[t.i - 1] = t.exp == 1 ? FreeWord{{t.j, 1}, {t.i, 1}} : FreeWord{{t.j, -1}, {t.i, 1}};
            break;
        case Kind::W:
            // W(i,j): x_i -> x_j, x_j -> x_i^-1 (the composite L_ij L_ji^-1 R_ij).
            if (t.exp == 1) {
                a.images_[t.i - 1] = {{t.j, 1}};
                a.images_[t.j - 1] = {{t.i, -1}};
            } else {
                a.images_[t.i - 1] = {{t.j, -1}};
                a.images_[t.j - 1] = {{t.i, 1}};
            }
            break;
    }
    return a;
}

FreeWord Aut::apply(const FreeWord& w) const {
    FreeWord out;
    for (const auto& l : w) {
        const FreeWord& im = images_[l.idx - 1];
        if (l.exp == 1)
            out = fconcat(out, im);
        else
            out = fconcat(out, finverse(im));
    }
    return out;
}

Aut Aut::compose(const Aut& rhs) const {
    Aut out(n_);
    for (int i = 1; i <= n_; ++i) out.images_[i - 1] = apply(rhs.images_[i - 1]);
    return out;
}

bool Aut::is_identity() const {
    for (int i = 1; i <= n_; ++i) {
        const FreeWord& im = images_[i - 1];
        if (im.size() != 1 || im[0].idx != i || im[0].exp != 1) return false;
    }
    return true;
}

Aut apply_word(const Word& w, int n) {
    Aut acc(n);
    // rightmost letter acts first: acc = phi(t_1) o ... o phi(t_L)
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = Aut::of_token(*it, n).compose(acc);
    return acc;
}

Word free_reduce(const Word& w) {
    Word out;
    for (const auto& t : w) {
        if (!out.empty() && out.back().kind == t.kind && out.back().i == t.i &&
            out.back().j == t.j && out.back().exp == -t.exp)
            out.pop_back();
        else
            out.push_back(t);
    }
    return out;
}

IntMat IntMat::identity(int n) {
    IntMat m;
    m.n = n;
    m.a.assign(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
    IntMat out;
    out.n = n;
    out.a.assign(size_t(n) * n, 0);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < n; ++k) {
            int64_t v = at(r, k);
            if (!v) continue;
            for (int c = 0; c < n; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    return out;
}

IntMat abelianize_token(const Token& t, int n) {
    check_indices(t, n);
    IntMat m = IntMat::identity(n);
    int i = t.i - 1, j = t.j - 1;
    switch (t.kind) {
        case Kind::R:
        case Kind::L:
            // e_i -> e_i + e_j: column i gains e_j.
            m.at(j, i) = t.exp;
            break;
        case Kind::W:
            // e_i -> e_j, e_j -> -e_i (inverse swaps the signs).
            m.at(i, i) = 0;
            m.at(j, j) = 0;
            if (t.exp == 1) {
                m.at(j, i) = 1;
                m.at(i, j) = -1;
            } else {
                m.at(j, i) = -1;
                m.at(i, j) = 1;
            }
            break;
    }
    return m;
}

IntMat abelianize_token_inverse(const Token& t, int n) {
    return abelianize_token(t.inverse(), n);
}

IntMat abelianize(const Word& w, int n) {
    IntMat acc = IntMat::identity(n);
    for (const auto& t : w) acc = acc.mul(abelianize_token(t, n));
    return acc;
}

IntMat abelianize_inverse(const Word& w, int n) {
    IntMat acc = IntMat::identity(n);
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc.mul(abelianize_token_inverse(*it, n));
    return acc;
}

int64_t det(const IntMat& m) {
    // fraction-free Gaussian elimination (Bareiss)
    int n = m.n;
    std::vector<int64_t> a = m.a;
    auto at = [&](int r, int c) -> int64_t& { return a[r * n + c]; };
    int64_t prev = 1, sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r)
            for (int c = k + 1; c < n; ++c)
                at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace vkr
