#include "lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vkr {

namespace {

// column Hermite normal form of an m x c matrix (columns are generators);
// returns the nonzero columns, pivots positive, entries right of a pivot
// reduced modulo it
std::vector<std::vector<int64_t>> hnf_columns(int m, std::vector<std::vector<int64_t>> cols) {
    size_t c = cols.size();
    size_t piv = 0;
    for (int r = 0; r < m && piv < c; ++r) {
        // clear row r across columns piv..c-1 down to a single entry
        while (true) {
            int best = -1;
            for (size_t k = piv; k < c; ++k)
                if (cols[k][r] != 0 && (best < 0 || iabs(cols[k][r]) < iabs(cols[size_t(best)][r])))
                    best = int(k);
            if (best < 0) break;
            std::swap(cols[piv], cols[size_t(best)]);
            bool cleared = true;
            for (size_t k = piv + 1; k < c; ++k) {
                if (cols[k][r] == 0) continue;
                int64_t q = cols[k][r] / cols[piv][r];
                for (int t = 0; t < m; ++t) cols[k][t] -= q * cols[piv][t];
                if (cols[k][r] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (cols[piv][r] == 0) continue;
        if (cols[piv][r] < 0)
            for (int t = 0; t < m; ++t) cols[piv][t] = -cols[piv][t];
        // reduce earlier pivot columns at this row
        for (size_t k = 0; k < piv; ++k) {
            int64_t q = cols[k][r] / cols[piv][r];
            if (cols[k][r] % cols[piv][r] < 0) q -= 1;  // floor division
            if (q != 0)
                for (int t = 0; t < m; ++t) cols[k][t] -= q * cols[piv][t];
        }
        ++piv;
    }
    cols.resize(piv);
    return cols;
}

}  // namespace

Lattice Lattice::from_generators(int m, const std::vector<std::vector<int64_t>>& gens) {
    Lattice lat(m);
    for (const auto& g : gens)
        if (int(g.size()) != m) throw std::invalid_argument("lattice generator of wrong dimension");
    lat.basis_ = hnf_columns(m, gens);
    return lat;
}

bool Lattice::is_full() const {
    if (rank() != m_) return false;
    // full-rank column HNF has its k-th pivot on row k
    for (int k = 0; k < m_; ++k)
        if (basis_[k][k] != 1) return false;
    return true;
}

bool Lattice::contains(const std::vector<int64_t>& v) const {
    std::vector<int64_t> w = v;
    size_t k = 0;
    for (int r = 0; r < m_; ++r) {
        bool pivot_here = k < basis_.size() && basis_[k][r] != 0;
        if (pivot_here) {
            if (w[r] % basis_[k][r] != 0) return false;
            int64_t q = w[r] / basis_[k][r];
            if (q != 0)
                for (int t = 0; t < m_; ++t) w[t] -= q * basis_[k][t];
            ++k;
        } else if (w[r] != 0) {
            return false;
        }
    }
    for (auto x : w)
        if (x) return false;
    return true;
}

bool Lattice::contains(const Lattice& other) const {
    for (const auto& b : other.basis_)
        if (!contains(b)) return false;
    return true;
}

Lattice Lattice::sum(const Lattice& other) const {
    std::vector<std::vector<int64_t>> gens = basis_;
    gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
    return from_generators(m_, gens);
}

BigInt Lattice::covolume2() const {
    int r = rank();
    std::vector<std::vector<BigInt>> g(r, std::vector<BigInt>(r));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            BigInt s = 0;
            for (int t = 0; t < m_; ++t) s += BigInt(basis_[a][t]) * basis_[b][t];
            g[a][b] = s;
        }
    // fraction-free determinant
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < r; ++k) {
        if (g[k][k] == 0) {
            int p = -1;
            for (int t = k + 1; t < r; ++t)
                if (g[t][k] != 0) { p = t; break; }
            if (p < 0) return 0;
            std::swap(g[k], g[p]);
            sign = -sign;
        }
        for (int a = k + 1; a < r; ++a)
            for (int b = k + 1; b < r; ++b)
                g[a][b] = (g[a][b] * g[k][k] - g[a][k] * g[k][b]) / prev;
        prev = g[k][k];
    }
    return r == 0 ? BigInt(1) : sign * g[r - 1][r - 1];
}

bool Lattice::operator<(const Lattice& o) const {
    return basis_ < o.basis_;
}

std::string Lattice::to_string() const {
    std::string s = "<";
    for (size_t k = 0; k < basis_.size(); ++k) {
        if (k) s += ";";
        for (int t = 0; t < m_; ++t) s += (t ? "," : "(") + std::to_string(basis_[k][t]);
        s += ")";
    }
    return s + ">";
}

namespace {

// all vectors of Z^m with l1-norm exactly s, in lexicographic order
void enumerate_shell(int m, int64_t s, std::vector<int64_t>& cur, size_t pos,
                     const std::function<void(const std::vector<int64_t>&)>& sink) {
    if (pos == size_t(m)) {
        if (s == 0) sink(cur);
        return;
    }
    for (int64_t v = -s; v <= s; ++v) {
        cur[pos] = v;
        enumerate_shell(m, s - iabs(v), cur, pos + 1, sink);
    }
    cur[pos] = 0;
}

bool independent(const std::vector<std::vector<int64_t>>& chosen, const std::vector<int64_t>& v) {
    std::vector<std::vector<int64_t>> gens = chosen;
    gens.push_back(v);
    Lattice l1 = Lattice::from_generators(int(v.size()), gens);
    return l1.rank() == int(chosen.size()) + 1;
}

}  // namespace

std::vector<std::vector<int64_t>> lattice_norm_tuple(const Lattice& a) {
    int r = a.rank();
    std::vector<std::vector<int64_t>> chosen;
    if (r == 0) return chosen;
    int64_t cap = 1;
    for (const auto& b : a.basis()) {
        int64_t l1 = 0;
        for (auto x : b) l1 += iabs(x);
        cap += l1;
    }
    std::vector<int64_t> cur(a.ambient(), 0);
    for (int64_t s = 1; s <= cap && int(chosen.size()) < r; ++s) {
        enumerate_shell(a.ambient(), s, cur, 0, [&](const std::vector<int64_t>& v) {
            if (int(chosen.size()) >= r) return;
            if (!a.contains(v)) return;
            if (independent(chosen, v)) chosen.push_back(v);
        });
    }
    if (int(chosen.size()) != r) throw std::logic_error("lattice norm tuple search exceeded its bound");
    return chosen;
}

Cmp cmp_subgroups(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("cmp_subgroups: ambient mismatch");
    if (a.rank() != b.rank()) return a.rank() < b.rank() ? Cmp::Less : Cmp::Greater;
    if (a == b) return Cmp::Equal;
    auto na = lattice_norm_tuple(a), nb = lattice_norm_tuple(b);
    auto key = [](const std::vector<std::vector<int64_t>>& t) {
        std::vector<int64_t> flat;
        int64_t l1 = 0;
        for (const auto& v : t)
            for (auto x : v) {
                flat.push_back(x);
                l1 += iabs(x);
            }
        return std::make_pair(l1, flat);
    };
    auto ka = key(na), kb = key(nb);
    if (ka != kb) return ka < kb ? Cmp::Greater : Cmp::Less;  // smaller norm = larger subgroup
    BigInt ca = a.covolume2(), cb = b.covolume2();
    if (ca != cb) return ca > cb ? Cmp::Less : Cmp::Greater;  // larger covolume = smaller subgroup
    return a < b ? Cmp::Less : Cmp::Greater;
}

}  // namespace vkr
