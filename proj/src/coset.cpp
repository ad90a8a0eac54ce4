#include "coset.hpp"

#include "lattice.hpp"

#include <cstdlib>

namespace vkr {

CosetLabel CosetLabel::basepoint(int d, int n) {
    CosetLabel z(d, n);
    for (int i = 0; i < d; ++i) z.at(i, i) = 1;
    return z;
}

std::vector<int64_t> CosetLabel::col(int c) const {
    std::vector<int64_t> v(d);
    for (int r = 0; r < d; ++r) v[r] = at(r, c);
    return v;
}

int64_t CosetLabel::linf() const {
    int64_t m = 0;
    for (auto v : a) m = std::max(m, iabs(v));
    return m;
}

int64_t CosetLabel::l1_row(int r) const {
    int64_t s = 0;
    for (int c = 0; c < n; ++c) s += iabs(at(r, c));
    return s;
}

int64_t CosetLabel::linf_row(int r) const {
    int64_t m = 0;
    for (int c = 0; c < n; ++c) m = std::max(m, iabs(at(r, c)));
    return m;
}

CosetLabel act_token(const Token& t, const CosetLabel& z, Mode mode) {
    if (t.i > z.n || t.j > z.n) throw IndexOutOfRange("act_token: index exceeds n");
    CosetLabel out = z;
    int i = t.i - 1, j = t.j - 1;
    if (t.kind == Kind::R || t.kind == Kind::L) {
        if (mode == Mode::Row) {
            // z [t]^-1: subtract column j from column i (exp +1)
            for (int r = 0; r < z.d; ++r) out.at(r, i) -= t.exp * z.at(r, j);
        } else {
            // z [t]^T: add column i to column j (exp +1)
            for (int r = 0; r < z.d; ++r) out.at(r, j) += t.exp * z.at(r, i);
        }
    } else {
        // W(i,j) is orthogonal, so both actions agree:
        // exp +1: (col_i, col_j) -> (-col_j, col_i)
        for (int r = 0; r < z.d; ++r) {
            if (t.exp == 1) {
                out.at(r, i) = -z.at(r, j);
                out.at(r, j) = z.at(r, i);
            } else {
                out.at(r, i) = z.at(r, j);
                out.at(r, j) = -z.at(r, i);
            }
        }
    }
    return out;
}

CosetLabel act_word(const Word& w, const CosetLabel& z, Mode mode) {
    CosetLabel out = z;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = act_token(*it, out, mode);
    return out;
}

CosetLabel theta(const Word& w, int d, int n, Mode mode) {
    if (d < 1 || d > n) throw IndexOutOfRange("theta: need 1 <= d <= n");
    return act_word(w, CosetLabel::basepoint(d, n), mode);
}

int col_depth(const CosetLabel& z, int c) {
    for (int r = z.d - 1; r >= 0; --r)
        if (z.at(r, c) != 0) return r + 1;
    return 0;
}

bool sim_k(const CosetLabel& z, int c1, int c2, int k) {
    bool minus = true, plus = true;
    for (int r = k; r < z.d; ++r) {
        if (z.at(r, c1) - z.at(r, c2) != 0) minus = false;
        if (z.at(r, c1) + z.at(r, c2) != 0) plus = false;
    }
    return minus || plus;
}

ColumnStats column_stats(const CosetLabel& z, int k) {
    ColumnStats st;
    st.cols.resize(z.n);
    int kr = k - 1;  // row index of the k-th row
    int64_t M = z.linf_row(kr);
    for (int c = 0; c < z.n; ++c) {
        auto& pc = st.cols[c];
        pc.depth = col_depth(z, c);
        bool zero = pc.depth == 0;
        bool kcol = pc.depth <= k;
        pc.zero = zero;
        pc.maximal = M > 0 && iabs(z.at(kr, c)) == M;
        pc.good = kcol && !pc.maximal && z.at(kr, c) != 0;
        if (pc.zero) ++st.z;
        if (pc.maximal) ++st.m;
        if (pc.good) ++st.g;
        if (!kcol) ++st.defect;
    }
    // weak defect: number of ~_k classes among non-k-columns
    std::vector<int> reps;
    for (int c = 0; c < z.n; ++c) {
        if (st.cols[c].depth <= k) continue;
        bool found = false;
        for (int r : reps)
            if (sim_k(z, c, r, k)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(c);
    }
    st.weakDefect = int(reps.size());
    return st;
}

int defect(const CosetLabel& z, int k) {
    int d = 0;
    for (int c = 0; c < z.n; ++c)
        if (col_depth(z, c) > k) ++d;
    return d;
}

int weak_defect(const CosetLabel& z, int k) {
    std::vector<int> reps;
    for (int c = 0; c < z.n; ++c) {
        if (col_depth(z, c) <= k) continue;
        bool found = false;
        for (int r : reps)
            if (sim_k(z, c, r, k)) {
                found = true;
                break;
            }
        if (!found) reps.push_back(c);
    }
    return int(reps.size());
}

bool is_k_unimodular(const CosetLabel& z, int k) {
    // the k-columns, restricted to their first k rows, must span Z^k
    std::vector<std::vector<int64_t>> gens;
    for (int c = 0; c < z.n; ++c) {
        if (col_depth(z, c) > k) continue;
        std::vector<int64_t> v(k);
        for (int r = 0; r < k; ++r) v[r] = z.at(r, c);
        gens.push_back(std::move(v));
    }
    Lattice lat = Lattice::from_generators(k, gens);
    return lat.is_full();
}

bool is_unimodular(const CosetLabel& z) { return is_k_unimodular(z, z.d); }

bool is_small(const CosetLabel& z) {
    if (z.linf() > 1) return false;
    int diff = 0;
    CosetLabel id = CosetLabel::basepoint(z.d, z.n);
    for (int c = 0; c < z.n; ++c)
        for (int r = 0; r < z.d; ++r)
            if (z.at(r, c) != id.at(r, c)) {
                ++diff;
                break;
            }
    if (diff > 8) return false;
    for (int k = 1; k <= z.d; ++k)
        if (!is_k_unimodular(z, k)) return false;
    return true;
}

std::string to_string(const CosetLabel& z) {
    std::string s = "[";
    for (int r = 0; r < z.d; ++r) {
        if (r) s += ",";
        s += "[";
        for (int c = 0; c < z.n; ++c) {
            if (c) s += ",";
            s += std::to_string(z.at(r, c));
        }
        s += "]";
    }
    return s + "]";
}

}  // namespace vkr
