#include "seeds.hpp"

#include "relators.hpp"

namespace vkr {

namespace {

// Appends a face that starts at `start` and traverses the given letters,
// landing on the listed waypoints (one per letter; the last one must close
// the cycle). Existing edges between the endpoints are reused.
void build_cell(Diagram& D, int start, const std::vector<Token>& letters,
                const std::vector<int>& waypoints) {
    Walk w;
    int cur = start;
    for (size_t k = 0; k < letters.size(); ++k) {
        const Token& l = letters[k];
        int to = waypoints[k];
        int tail = l.exp == 1 ? cur : to;
        int head = l.exp == 1 ? to : cur;
        Token stored = l.exp == 1 ? l : l.inverse();
        int found = 0;
        for (auto& [id, e] : D.edges)
            if (e.tail == tail && e.head == head && e.label == stored) found = id;
        if (!found) found = D.add_edge(tail, head, stored);
        w.push_back(l.exp == 1 ? found : -found);
        cur = to;
    }
    if (cur != start) throw std::logic_error("build_cell: walk does not close");
    D.add_face(w);
}

// outer walk from the uncovered edge sides
void derive_outer(Diagram& D) {
    std::map<int, int> fwd, bwd;
    for (auto& [id, wk] : D.faces)
        for (int s : wk) (s > 0 ? fwd : bwd)[std::abs(s)] += 1;
    std::multimap<int, int> nextEdge;
    for (auto& [id, e] : D.edges) {
        if (fwd[id] == 0) nextEdge.insert({e.tail, id});
        if (bwd[id] == 0) nextEdge.insert({e.head, -id});
    }
    D.outer.clear();
    if (nextEdge.empty()) return;
    int startV = nextEdge.begin()->first;
    int cur = startV;
    std::set<int> used;
    do {
        bool advanced = false;
        auto range = nextEdge.equal_range(cur);
        for (auto it = range.first; it != range.second; ++it) {
            if (used.count(std::abs(it->second))) continue;
            D.outer.push_back(it->second);
            used.insert(std::abs(it->second));
            cur = D.edge_head(it->second);
            advanced = true;
            break;
        }
        if (!advanced) throw std::logic_error("derive_outer: boundary is not a closed walk");
    } while (cur != startV);
}

}  // namespace

Diagram seed_dim1_wheel(int n, std::mt19937& rng) {
    if (n < 6) throw std::invalid_argument("seed needs n >= 6");
    Diagram D;
    D.n = n;
    D.d = 1;
    D.mode = Mode::Row;

    int x = D.fresh_vertex();
    CosetLabel z(1, n);
    z.at(0, 0) = 2;
    z.at(0, 1) = 1;
    z.at(0, 2) = 1;
    D.anchorVertex = x;
    D.anchorLabel = z;

    int A = D.fresh_vertex();   // R(1,2).x
    int Dv = D.fresh_vertex();  // R(1,3).x
    int F = D.fresh_vertex();   // L(1,2).x
    int J = D.fresh_vertex();   // L(1,3).x
    int b1 = D.fresh_vertex(), b2 = D.fresh_vertex();
    int c1 = D.fresh_vertex();
    int g1 = D.fresh_vertex(), g2 = D.fresh_vertex();
    int h1 = D.fresh_vertex();

    // type-1R pentagon, type-5 squares and a type-1L pentagon around x
    build_cell(D, x, {R(1, 2), R(2, 3), R(1, 2, -1), R(2, 3, -1), R(1, 3, -1)},
               {A, b1, b2, Dv, x});
    build_cell(D, x, {R(1, 3), L(1, 2), R(1, 3, -1), L(1, 2, -1)}, {Dv, c1, F, x});
    build_cell(D, x, {L(1, 2), L(2, 3), L(1, 2, -1), L(2, 3, -1), L(1, 3, -1)},
               {F, g1, g2, J, x});
    build_cell(D, x, {L(1, 3), R(1, 2), L(1, 3, -1), R(1, 2, -1)}, {J, h1, A, x});
    derive_outer(D);
    return scramble(D, rng);
}

Diagram seed_deep_wheel(int d, int n, int deepCols, std::mt19937& rng) {
    if (n < d + deepCols + 2) throw std::invalid_argument("seed_deep_wheel: n too small");
    if (deepCols < 4) throw std::invalid_argument("seed_deep_wheel: need at least 4 deep columns");
    Diagram D;
    D.n = n;
    D.d = d;
    D.mode = Mode::Row;

    // identity block, deepCols copies of e_d, then -e_d in column q
    int q = d + deepCols + 1;
    CosetLabel z(d, n);
    for (int r = 0; r < d; ++r) z.at(r, r) = 1;
    for (int c = d + 1; c <= d + deepCols; ++c) z.at(d - 1, c - 1) = 1;
    z.at(d - 1, q - 1) = -1;

    int x = D.fresh_vertex();
    D.anchorVertex = x;
    D.anchorLabel = z;

    int cols[4] = {d + 1, d + 2, d + 3, d + 4};
    std::map<int, int> u;
    for (int t = 0; t < 4; ++t) u[cols[t]] = D.fresh_vertex();

    // pentagons over [R(q,j)^-1, L(j,k)] = R(q,k); spokes are shared
    for (int t = 0; t < 4; ++t) {
        int j = cols[t], k = cols[(t + 1) % 4];
        int p2 = D.fresh_vertex(), p3 = D.fresh_vertex();
        build_cell(D, x, {R(q, k, -1), L(j, k), R(q, j, -1), L(j, k, -1), R(q, j)},
                   {u[k], p2, p3, u[j], x});
    }
    derive_outer(D);
    return scramble(D, rng);
}

Diagram scramble(const Diagram& D, std::mt19937& rng) {
    SignedPerm s = SignedPerm::identity(D.n);
    std::shuffle(s.perm.begin(), s.perm.end(), rng);
    for (int i = 0; i < D.n; ++i) s.signs[i] = (rng() & 1) ? 1 : -1;
    Diagram out = D;
    for (auto& [id, e] : out.edges) {
        Token img = act(s, e.label);
        if (img.exp == -1) {
            std::swap(e.tail, e.head);
            img = img.inverse();
            auto flip = [&, eid = id](Walk& w) {
                for (int& ss : w)
                    if (std::abs(ss) == eid) ss = -ss;
            };
            for (auto& [fid, w] : out.faces) flip(w);
            flip(out.outer);
        }
        e.label = img;
    }
    CosetLabel nz(D.d, D.n);
    for (int c = 1; c <= D.n; ++c) {
        int pc = s.perm[c - 1];
        for (int r = 0; r < D.d; ++r)
            nz.at(r, pc - 1) = s.signs[c - 1] * D.anchorLabel.at(r, c - 1);
    }
    out.anchorLabel = nz;
    return out;
}

}  // namespace vkr
