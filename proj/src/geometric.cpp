#include "geometric.hpp"

#include "freegroup.hpp"

namespace vkr {

Word cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    size_t a = 0, b = r.size();
    while (b - a >= 2 && r[a] == r[b - 1].inverse()) {
        ++a;
        --b;
    }
    return Word(r.begin() + a, r.begin() + b);
}

static Word min_rotation(const Word& w) {
    Word best = w;
    Word cur = w;
    for (size_t k = 1; k < w.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::optional<GeometricRelator> try_canonical_geometric(const Word& w) {
    Word r = cyclic_reduce(w);
    if (r.empty()) return std::nullopt;
    Word a = min_rotation(r);
    Word b = min_rotation(inverse(r));
    return GeometricRelator{a < b ? a : b};
}

GeometricRelator canonical_geometric(const Word& w) {
    auto g = try_canonical_geometric(w);
    if (!g) throw EmptyAfterReduction("word reduces to the empty word");
    return *g;
}

std::set<int> support(const Word& w) {
    std::set<int> s;
    for (const auto& t : free_reduce(w)) {
        s.insert(t.i);
        s.insert(t.j);
    }
    return s;
}

std::vector<Word> suffixes(const Word& w) {
    std::vector<Word> out;
    out.reserve(w.size() + 1);
    for (size_t k = 0; k <= w.size(); ++k) out.emplace_back(w.end() - k, w.end());
    return out;
}

}  // namespace vkr
