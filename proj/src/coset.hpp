#ifndef VKR_COSET_HPP
#define VKR_COSET_HPP

#include "freegroup.hpp"

namespace vkr {

enum class Mode { Row, Col };

inline const char* to_string(Mode m) { return m == Mode::Row ? "row" : "col"; }

// A d x n integer matrix, the vertex-label space Um_{d x n}(Z).
struct CosetLabel {
    int d = 1, n = 0;
    std::vector<int64_t> a;  // row-major d*n

    CosetLabel() = default;
    CosetLabel(int d_, int n_) : d(d_), n(n_), a(size_t(d_) * n_, 0) {}
    static CosetLabel basepoint(int d, int n);  // (I_d | 0)

    int64_t& at(int r, int c) { return a[size_t(r) * n + c]; }
    int64_t at(int r, int c) const { return a[size_t(r) * n + c]; }
    std::vector<int64_t> col(int c) const;

    int64_t linf() const;
    int64_t l1_row(int r) const;
    int64_t linf_row(int r) const;

    bool operator==(const CosetLabel&) const = default;
    auto operator<=>(const CosetLabel&) const = default;
};

CosetLabel act_token(const Token& t, const CosetLabel& z, Mode mode);
CosetLabel act_word(const Word& w, const CosetLabel& z, Mode mode);  // leftmost last
CosetLabel theta(const Word& w, int d, int n, Mode mode);

// depth of a column = smallest k with the column in Z^k (0 for the zero column)
int col_depth(const CosetLabel& z, int c);

struct ColumnStats {
    struct PerColumn {
        bool maximal = false, good = false, zero = false;
        int depth = 0;
    };
    std::vector<PerColumn> cols;
    int m = 0, g = 0, z = 0;
    int defect = 0;      // def_k
    int weakDefect = 0;  // wdef_k
};

ColumnStats column_stats(const CosetLabel& z, int k);

bool is_k_unimodular(const CosetLabel& z, int k);
bool is_unimodular(const CosetLabel& z);
bool is_small(const CosetLabel& z);

int defect(const CosetLabel& z, int k);
int weak_defect(const CosetLabel& z, int k);
bool sim_k(const CosetLabel& z, int c1, int c2, int k);  // the ~_k equivalence

std::string to_string(const CosetLabel& z);

}  // namespace vkr

#endif
