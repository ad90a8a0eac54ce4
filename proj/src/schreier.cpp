#include "schreier.hpp"

#include "freegroup.hpp"
#include "geometric.hpp"
#include "relators.hpp"

#include <queue>

namespace vkr {

std::vector<Token> alphabet(int n) {
    std::vector<Token> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            out.push_back(R(i, j));
            out.push_back(L(i, j));
            if (i < j) out.push_back(W(i, j));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Token> alphabet_signed(int n) {
    std::vector<Token> out;
    for (const auto& t : alphabet(n)) {
        out.push_back(t);
        out.push_back(t.inverse());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Token, CosetLabel>> neighbors(const CosetLabel& z, Mode mode) {
    std::vector<std::pair<Token, CosetLabel>> out;
    for (const auto& x : alphabet_signed(z.n)) out.emplace_back(x, act_token(x, z, mode));
    return out;
}

int return_degree(const CosetLabel& z, Mode mode) {
    if (z.d != 1) throw DimensionMismatch("return_degree needs d = 1");
    int deg = 0;
    for (const auto& [x, w] : neighbors(z, mode))
        if (cmp_dim1(w, z) == Cmp::Less) ++deg;
    return deg;
}

SchreierBall ball(const CosetLabel& z, int r, Mode mode, size_t maxVertices) {
    SchreierBall b;
    b.center = z;
    b.radius = r;
    b.vertices.insert(z);
    std::queue<std::pair<CosetLabel, int>> q;
    q.push({z, 0});
    std::set<CosetLabel> expanded;
    while (!q.empty()) {
        auto [cur, dist] = q.front();
        q.pop();
        if (dist >= r || expanded.count(cur)) continue;
        expanded.insert(cur);
        for (const auto& [x, w] : neighbors(cur, mode)) {
            if (x.exp == 1) b.edges.emplace_back(cur, x, w);
            if (!b.vertices.count(w)) {
                if (b.vertices.size() >= maxVertices) {
                    b.truncated = true;
                    return b;
                }
                b.vertices.insert(w);
                q.push({w, dist + 1});
            }
        }
    }
    return b;
}

SchreierGenerators schreier_generators(const std::set<CosetLabel>& A, const Word& anchorWord,
                                       Mode mode) {
    SchreierGenerators out;
    if (A.empty()) throw NotConnected("empty label set");
    int d = A.begin()->d, n = A.begin()->n;
    CosetLabel root = theta(anchorWord, d, n, mode);
    if (!A.count(root)) throw NotConnected("anchor label outside A");

    // BFS tree: transversal words with theta(t_a) = a
    out.transversal[root] = anchorWord;
    std::queue<CosetLabel> q;
    q.push(root);
    auto letters = alphabet_signed(n);
    while (!q.empty()) {
        CosetLabel cur = q.front();
        q.pop();
        const Word t = out.transversal.at(cur);
        for (const auto& x : letters) {
            CosetLabel w = act_token(x, cur, mode);
            if (!A.count(w) || out.transversal.count(w)) continue;
            Word tw = t;
            tw.insert(tw.begin(), x);  // x . t
            out.transversal[w] = free_reduce(tw);
            q.push(w);
        }
    }
    if (out.transversal.size() != A.size())
        throw NotConnected("the induced subgraph on A is not connected");

    // generators (xt)~^-1 x t over tree transversals
    std::set<Word> seen;
    for (const auto& [a, t] : out.transversal) {
        for (const auto& x : letters) {
            CosetLabel w = act_token(x, a, mode);
            if (!A.count(w)) continue;
            Word xt = t;
            xt.insert(xt.begin(), x);
            xt = free_reduce(xt);
            Word bar = out.transversal.at(w);
            Word s = free_reduce(concat(inverse(bar), xt));
            if (s.empty() || seen.count(s)) continue;
            seen.insert(s);
            out.words.push_back(s);
        }
    }

    // property (c): every suffix of every generator and inverse lies in
    // theta^-1(A)
    for (const auto& s : out.words)
        for (const Word& side : {s, inverse(s)})
            for (const auto& suf : suffixes(side))
                if (!A.count(theta(suf, d, n, mode))) {
                    out.suffixPropertyHolds = false;
                    out.suffixViolations.push_back(suf);
                }
    return out;
}

Word lift_word_RL(int i, int j, int k, int m) {
    // R_ij L_ij^-1 = R_ki^-1 L_mj L_mi^-1 L_mj^-1 R_ij R_ki R_kj^-1 L_ij^-1 L_mi
    return {R(k, i, -1), L(m, j), L(m, i, -1), L(m, j, -1), R(i, j),
            R(k, i),     R(k, j, -1), L(i, j, -1), L(m, i)};
}

Word lift_word_K(int i, int j, int k, int m) {
    // [R_ij, R_ik] = R_mi^-1 [R_ij, R_ik] R_mi [R_mk, R_mj]
    Word com1{R(i, j, -1), R(i, k, -1), R(i, j), R(i, k)};
    Word com2{R(m, k, -1), R(m, j, -1), R(m, k), R(m, j)};
    Word out{R(m, i, -1)};
    out = concat(out, com1);
    out.push_back(R(m, i));
    return concat(out, com2);
}

SmallLiftSuite small_lift_suite(int n, int d, Mode mode) {
    if (d >= n - 1) throw RankTooSmall("small lift suite needs d < n - 1");
    SmallLiftSuite suite;
    suite.d = d;
    suite.n = n;
    suite.mode = mode;

    auto addEntry = [&](const std::string& name, const Word& gen, const Word& lift) {
        LiftEntry e;
        e.name = name;
        e.generator = gen;
        e.lift = lift;
        e.liftMatches = apply_word(free_reduce(concat(lift, inverse(gen))), n).is_identity();
        for (const Word& side : {lift, inverse(lift)})
            for (const auto& suf : suffixes(free_reduce(side))) {
                CosetLabel z = theta(suf, d, n, mode);
                suite.suffixLabels.insert(z);
                if (!is_small(z)) e.small = false;
            }
        suite.allSmall = suite.allSmall && e.small;
        suite.allMatch = suite.allMatch && e.liftMatches;
        suite.lifts.push_back(std::move(e));
    };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (j <= d) {
                Word gen{R(i, j), L(i, j, -1)};
                std::string nm = "RL(" + std::to_string(i) + "," + std::to_string(j) + ")";
                if (i > d) {
                    addEntry(nm, gen, gen);
                } else {
                    int k = 0, m = 0;
                    for (int c = d + 1; c <= n && !m; ++c) {
                        if (!k)
                            k = c;
                        else
                            m = c;
                    }
                    addEntry(nm, gen, lift_word_RL(i, j, k, m));
                }
            } else {
                addEntry("R(" + std::to_string(i) + "," + std::to_string(j) + ")", {R(i, j)},
                         {R(i, j)});
                addEntry("L(" + std::to_string(i) + "," + std::to_string(j) + ")", {L(i, j)},
                         {L(i, j)});
            }
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (j > d) continue;  // products of alphabet lifts otherwise
                Word gen{R(i, j, -1), R(i, k, -1), R(i, j), R(i, k)};
                std::string nm = "K(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ")";
                if (i > d) {
                    addEntry(nm, gen, gen);
                } else {
                    int m = 0;
                    for (int c = d + 1; c <= n && !m; ++c)
                        if (c != j && c != k) m = c;
                    addEntry(nm, gen, lift_word_K(i, j, k, m));
                }
            }
    // the central generator w_12^4
    Word w4 = {W(1, 2), W(1, 2), W(1, 2), W(1, 2)};
    addEntry("w12^4", w4, w4);
    return suite;
}

}  // namespace vkr
