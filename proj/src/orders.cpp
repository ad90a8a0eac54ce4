#include "orders.hpp"

#include <optional>

namespace vkr {

namespace {
Cmp from_keys_less(bool lt, bool gt) {
    if (lt) return Cmp::Less;
    if (gt) return Cmp::Greater;
    return Cmp::Equal;  // incomparable: equal keys
}
}  // namespace

Dim1Key dim1_key(const CosetLabel& z) {
    if (z.d != 1) throw DimensionMismatch("dim1 order needs d = 1");
    auto st = column_stats(z, 1);
    return Dim1Key{z.linf(), st.m, z.n - st.g, z.l1_row(0)};
}

Cmp cmp_dim1(const CosetLabel& u, const CosetLabel& v) {
    if (u.n != v.n || u.d != 1 || v.d != 1) throw DimensionMismatch("cmp_dim1");
    auto a = dim1_key(u), b = dim1_key(v);
    return from_keys_less(a < b, b < a);
}

Step1Key step1_key(const CosetLabel& z, int k) {
    auto st = column_stats(z, k);
    Step1Key key;
    key.k.push_back(z.linf_row(k - 1));
    key.k.push_back(st.m);
    int64_t nonmaxRestricted = 0, km1 = 0;
    for (int c = 0; c < z.n; ++c) {
        if (!st.cols[c].maximal && st.cols[c].depth > k) ++nonmaxRestricted;
        if (st.cols[c].depth <= k - 1) ++km1;
    }
    key.k.push_back(nonmaxRestricted);
    key.k.push_back(-st.g);
    key.k.push_back(-km1);
    // l1 of rows k..1 over the unrestricted columns
    for (int r = k - 1; r >= 0; --r) {
        int64_t s = 0;
        for (int c = 0; c < z.n; ++c)
            if (st.cols[c].depth <= k) s += iabs(z.at(r, c));
        key.k.push_back(s);
    }
    return key;
}

Cmp cmp_step1(const CosetLabel& u, const CosetLabel& v, int k) {
    if (u.n != v.n || u.d != v.d) throw DimensionMismatch("cmp_step1");
    auto a = step1_key(u, k), b = step1_key(v, k);
    return from_keys_less(a < b, b < a);
}

Lattice active_subgroup(const CosetLabel& z, int k) {
    std::vector<std::vector<int64_t>> gens;
    for (int c = 0; c < z.n; ++c) {
        if (col_depth(z, c) > k - 1) continue;
        std::vector<int64_t> v(k - 1);
        for (int r = 0; r < k - 1; ++r) v[r] = z.at(r, c);
        gens.push_back(std::move(v));
    }
    return Lattice::from_generators(k - 1, gens);
}

namespace {
std::vector<int64_t> col_prefix(const CosetLabel& z, int c, int k) {
    std::vector<int64_t> v(k);
    for (int r = 0; r < k; ++r) v[r] = z.at(r, c);
    return v;
}
}  // namespace

Lattice semi_active_subgroup(const CosetLabel& z, int k, int C) {
    Lattice A = active_subgroup(z, k);
    // classes of depth-k columns modulo A; a class is frequent when it has
    // at least C+1 column occurrences
    std::vector<std::pair<std::vector<int64_t>, int>> classes;
    for (int c = 0; c < z.n; ++c) {
        if (col_depth(z, c) != k) continue;
        auto vc = col_prefix(z, c, k);
        bool found = false;
        for (auto& [rep, cnt] : classes) {
            std::vector<int64_t> diff(k);
            for (int r = 0; r < k; ++r) diff[r] = vc[r] - rep[r];
            if (diff[k - 1] == 0) {
                std::vector<int64_t> pre(diff.begin(), diff.end() - 1);
                if (A.contains(pre)) {
                    ++cnt;
                    found = true;
                    break;
                }
            }
        }
        if (!found) classes.emplace_back(vc, 1);
    }
    std::vector<std::vector<int64_t>> gens;
    for (const auto& b : A.basis()) {
        std::vector<int64_t> v(k, 0);
        for (int r = 0; r < k - 1; ++r) v[r] = b[r];
        gens.push_back(std::move(v));
    }
    for (const auto& [rep, cnt] : classes)
        if (cnt >= C + 1) gens.push_back(rep);
    return Lattice::from_generators(k, gens);
}

bool is_helpful(const CosetLabel& z, int c, int k, const Lattice& semiActive) {
    if (col_depth(z, c) > k) return false;  // restricted
    return !semiActive.contains(col_prefix(z, c, k));
}

Step2Key step2_key(const CosetLabel& z, int k, int C) {
    Step2Key key;
    key.active = active_subgroup(z, k);
    key.semiActive = semi_active_subgroup(z, k, C);
    int64_t helpful = 0, km1 = 0, restricted = 0;
    for (int c = 0; c < z.n; ++c) {
        int depth = col_depth(z, c);
        if (depth > k) ++restricted;
        if (depth <= k - 1) ++km1;
        if (depth <= k && !key.semiActive.contains(col_prefix(z, c, k))) ++helpful;
    }
    key.helpful = helpful;
    key.km1cols = km1;
    key.restricted = restricted;
    for (int r = k - 1; r >= 0; --r) {
        int64_t s = 0;
        for (int c = 0; c < z.n; ++c)
            if (col_depth(z, c) <= k) s += iabs(z.at(r, c));
        key.l1ur.push_back(s);
    }
    return key;
}

Cmp cmp_step2(const CosetLabel& u, const CosetLabel& v, int k, int C) {
    if (u.n != v.n || u.d != v.d) throw DimensionMismatch("cmp_step2");
    auto a = step2_key(u, k, C), b = step2_key(v, k, C);
    // (1) larger active subgroup = smaller vertex
    Cmp c1 = cmp_subgroups(a.active, b.active);
    if (c1 != Cmp::Equal) return c1 == Cmp::Greater ? Cmp::Less : Cmp::Greater;
    Cmp c2 = cmp_subgroups(a.semiActive, b.semiActive);
    if (c2 != Cmp::Equal) return c2 == Cmp::Greater ? Cmp::Less : Cmp::Greater;
    auto rest = [](const Step2Key& kk) {
        std::vector<int64_t> v{-kk.helpful, -kk.km1cols, kk.restricted};
        v.insert(v.end(), kk.l1ur.begin(), kk.l1ur.end());
        return v;
    };
    auto ra = rest(a), rb = rest(b);
    return from_keys_less(ra < rb, rb < ra);
}

Step3Norm Step3Norm::of(const CosetLabel& z, int k) {
    Step3Norm n;
    for (int r = z.d - 1; r >= k - 1; --r) n.xs.push_back(z.l1_row(r));
    return n;
}

namespace {
const int64_t kExponentCap = 1 << 21;
}  // namespace

static std::optional<BigInt> eval_from(const std::vector<int64_t>& xs, size_t i) {
    // xs[0] = x_d; f at position i uses exponent f at position i-1... we
    // evaluate from the top: value(i) = xs[i] when i == 0 is the top row d.
    if (i == 0) return BigInt(xs[0]);
    auto exp = eval_from(xs, i - 1);
    if (!exp) return std::nullopt;
    if (*exp > kExponentCap) return std::nullopt;
    BigInt p = 1;
    BigInt three = 3;
    BigInt e = *exp;
    BigInt base = three;
    while (e > 0) {
        if ((e & 1) != 0) p *= base;
        base *= base;
        e >>= 1;
    }
    return p * xs[i];
}

bool Step3Norm::evaluable() const { return eval_from(xs, xs.size() - 1).has_value(); }

BigInt Step3Norm::exact() const {
    auto v = eval_from(xs, xs.size() - 1);
    if (!v) throw Step3TooLarge("step3 norm exceeds the materialization cap");
    return *v;
}

static Cmp cmp_level(const std::vector<int64_t>& a, const std::vector<int64_t>& b, size_t i) {
    if (i == 0) {
        if (a[0] != b[0]) return a[0] < b[0] ? Cmp::Less : Cmp::Greater;
        return Cmp::Equal;
    }
    Cmp c = cmp_level(a, b, i - 1);
    if (c == Cmp::Equal) {
        if (a[i] != b[i]) return a[i] < b[i] ? Cmp::Less : Cmp::Greater;
        return Cmp::Equal;
    }
    // exponents differ; try to settle the mantissa ratio exactly
    auto ea = eval_from(a, i - 1), eb = eval_from(b, i - 1);
    if (ea && eb) {
        BigInt delta = *ea - *eb;
        BigInt mag = delta < 0 ? -delta : delta;
        if (mag <= 64) {
            BigInt p = 1;
            for (BigInt t = 0; t < mag; ++t) p *= 3;
            BigInt lhs, rhs;
            if (delta > 0) {
                lhs = p * a[i];
                rhs = b[i];
            } else {
                lhs = a[i];
                rhs = p * b[i];
            }
            if (lhs == rhs) return Cmp::Equal;
            return lhs < rhs ? Cmp::Less : Cmp::Greater;
        }
    }
    // the exponent gap dwarfs any mantissa (rows have l1 >= 1)
    return c;
}

Cmp cmp_step3(const Step3Norm& a, const Step3Norm& b) {
    if (a.xs.size() != b.xs.size()) throw DimensionMismatch("cmp_step3");
    return cmp_level(a.xs, b.xs, a.xs.size() - 1);
}

Cmp cmp_step3(const CosetLabel& u, const CosetLabel& v, int k) {
    if (u.n != v.n || u.d != v.d) throw DimensionMismatch("cmp_step3");
    return cmp_step3(Step3Norm::of(u, k), Step3Norm::of(v, k));
}

Cmp cmp_labels(const CosetLabel& u, const CosetLabel& v, OrderKind o, int k) {
    switch (o) {
        case OrderKind::Dim1: return cmp_dim1(u, v);
        case OrderKind::Step1: return cmp_step1(u, v, k);
        case OrderKind::Step2: return cmp_step2(u, v, k);
        case OrderKind::Step3: return cmp_step3(u, v, k);
    }
    return Cmp::Equal;
}

}  // namespace vkr
