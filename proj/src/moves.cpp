#include "moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace vkr {

namespace {

Word com_word(const Token& a, const Token& b) { return {a.inverse(), b.inverse(), a, b}; }

// realize one letter as a stored positive edge from `from`, returning the
// signed walk entry and the far vertex
std::pair<int, int> add_letter_edge(Diagram& D, int from, int to, const Token& letter) {
    if (letter.exp == 1) {
        int id = D.add_edge(from, to, letter);
        return {id, to};
    }
    int id = D.add_edge(to, from, letter.inverse());
    return {-id, to};
}

}  // namespace

MoveResult commuting_map(const Diagram& D, int face, const Token& t) {
    const Walk walk = D.faces.at(face);
    for (int s : walk) {
        Token e = D.edges.at(std::abs(s)).label;
        if (!is_relator(com_word(Token(t.kind, t.i, t.j, 1), e)))
            throw NotCommuting("[t,e] is not a defining relator for e = " + to_string(e));
    }
    MoveResult res;
    res.diagram = D;
    Diagram& out = res.diagram;
    size_t m = walk.size();

    std::vector<int> corners = D.walk_vertices(walk);
    std::map<int, int> primed;   // corner vertex -> its copy
    std::map<int, int> sideRef;  // corner vertex -> signed walk ref corner->copy
    for (int v : corners) {
        if (primed.count(v)) continue;  // a corner may repeat on the walk
        int v2 = out.fresh_vertex();
        primed[v] = v2;
        res.newVertices.push_back(v2);
        auto [sref, far] = add_letter_edge(out, v, v2, t);
        (void)far;
        sideRef[v] = sref;
    }

    // inner copy of each boundary edge
    std::map<int, int> innerEdge;  // old edge id -> new edge id
    for (int s : walk) {
        int id = std::abs(s);
        if (innerEdge.count(id)) continue;
        const DEdge& e = D.edges.at(id);
        innerEdge[id] = out.add_edge(primed.at(e.tail), primed.at(e.head), e.label);
    }

    out.faces.erase(face);
    // side cell per walk position
    for (size_t k = 0; k < m; ++k) {
        int s = walk[k];
        int u = D.edge_tail(s), w = D.edge_head(s);
        int sp = s > 0 ? innerEdge.at(s) : -innerEdge.at(-s);
        Walk cell{s, sideRef.at(w), -sp, -sideRef.at(u)};
        res.newFaces.push_back(out.add_face(cell));
    }
    // inner face
    Walk innerWalk;
    for (int s : walk) innerWalk.push_back(s > 0 ? innerEdge.at(s) : -innerEdge.at(-s));
    res.newFaces.push_back(out.add_face(innerWalk));
    return res;
}

namespace {

// glue facilities shared by the conjugating construction
struct HoleBuilder {
    Diagram* D;
    Walk hole;  // closed walk bounding the unfilled region, oriented like F

    Word word() const { return D->walk_word(hole); }

    // free cancellation: adjacent mirror letters are glued pairwise
    void zip() {
        bool again = true;
        while (again && hole.size() >= 2) {
            again = false;
            size_t m = hole.size();
            for (size_t k = 0; k < m; ++k) {
                int s1 = hole[k], s2 = hole[(k + 1) % m];
                if (std::abs(s1) == std::abs(s2)) continue;  // spur: leave alone
                if (!(D->edge_token(s1) == D->edge_token(s2).inverse())) continue;
                // traversal a ->s1-> b ->s2-> c with mirror labels: glue s2 onto
                // s1 reversed, identifying c with a
                int a = D->edge_tail(s1), c = D->edge_head(s2);
                int keep = std::abs(s1), gone = std::abs(s2);
                // rewrite all occurrences of gone: traversing s2 equals -s1
                int to = -s1 * (s2 > 0 ? 1 : -1);
                auto rewrite = [&](Walk& w) {
                    for (int& s : w) {
                        if (std::abs(s) != gone) continue;
                        s = s > 0 ? to : -to;
                    }
                };
                for (auto& [id, fw] : D->faces) rewrite(fw);
                rewrite(D->outer);
                rewrite(hole);
                D->edges.erase(gone);
                (void)keep;
                if (a != c) {
                    // merge vertex c into a
                    for (auto& [id, e] : D->edges) {
                        if (e.tail == c) e.tail = a;
                        if (e.head == c) e.head = a;
                    }
                    if (D->anchorVertex == c) D->anchorVertex = a;
                    D->vertices.erase(c);
                }
                // drop the two glued entries from the hole walk
                Walk nw;
                for (size_t q = 0; q < m; ++q)
                    if (q != k && q != (k + 1) % m) nw.push_back(hole[q]);
                hole = std::move(nw);
                again = true;
                break;
            }
        }
    }
};

}  // namespace

namespace {

std::string aut_key_of(const Aut& a) {
    std::string key;
    for (int i = 1; i <= a.rank(); ++i) {
        for (const auto& l : a.image(i)) key += char('A' + l.idx) + std::to_string(l.exp);
        key += '|';
    }
    return key;
}

// label-ordering score used to prefer fills through small labels
std::pair<int64_t, int64_t> label_score(const CosetLabel& z) { return {z.linf(), z.l1_row(0)}; }

struct CornerCtx {
    int NO = 0;
    std::vector<Token> letters;                    // candidate alphabet
    std::map<std::string, std::vector<Token>> byAut;  // aut key -> letters

    void init(const std::set<int>& idx, int no) {
        NO = no;
        letters.clear();
        byAut.clear();
        for (int a : idx)
            for (int b : idx) {
                if (a == b) continue;
                for (int e : {1, -1}) {
                    letters.push_back(R(a, b, e));
                    letters.push_back(L(a, b, e));
                    letters.push_back(W(a, b, e));
                }
            }
        std::sort(letters.begin(), letters.end());
        letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
        for (const auto& t : letters) byAut[aut_key_of(Aut::of_token(t, NO))].push_back(t);
    }

    // words of length <= 2 realizing the target automorphism
    std::vector<Word> solve(const Aut& target) const {
        std::vector<Word> out;
        auto it = byAut.find(aut_key_of(target));
        if (it != byAut.end())
            for (const auto& t : it->second) out.push_back({t});
        for (const auto& a : letters) {
            Aut rest = Aut::of_token(a.inverse(), NO).compose(target);
            auto jt = byAut.find(aut_key_of(rest));
            if (jt == byAut.end()) continue;
            for (const auto& b : jt->second) {
                Word w{a, b};
                if (free_reduce(w).size() == 2) out.push_back(w);
            }
        }
        return out;
    }
};

}  // namespace

MoveResult corner_map(const Diagram& D, int face, const std::map<int, Token>& sideLetters,
                      OrderKind order, int k, const CosetLabel* below) {
    const Walk walk = D.faces.at(face);
    size_t m = walk.size();
    std::vector<int> corners = D.walk_vertices(walk);
    for (int v : corners)
        if (!sideLetters.count(v))
            throw MissingConjugationForm("no side letter for corner " + std::to_string(v));

    std::set<int> idx;
    for (int s : walk) {
        const Token& l = D.edges.at(std::abs(s)).label;
        idx.insert(l.i);
        idx.insert(l.j);
    }
    for (const auto& [v, t] : sideLetters) {
        idx.insert(t.i);
        idx.insert(t.j);
    }
    const int NO = *idx.rbegin() + 1;
    CornerCtx ctx;
    ctx.init(idx, NO);

    auto baseLabels = D.label_vertices();
    // labels strictly below the given bound sort first, then by size
    auto score_of = [&](const CosetLabel& z) -> std::tuple<int, int64_t, int64_t> {
        int tier = 0;
        if (below) tier = cmp_labels(z, *below, order, k) == Cmp::Less ? 0 : 1;
        return {tier, z.linf(), z.l1_row(0)};
    };

    // candidate inner words per boundary edge, small labels first
    std::vector<std::vector<Word>> cands(m);
    for (size_t k = 0; k < m; ++k) {
        int s = walk[k];
        Token e = D.edge_token(s);
        const Token& tu = sideLetters.at(D.edge_tail(s));
        const Token& tw = sideLetters.at(D.edge_head(s));
        Aut target = Aut::of_token(tw, NO).compose(Aut::of_token(e, NO)).compose(
            Aut::of_token(tu.inverse(), NO));
        CosetLabel uprime = act_token(tu, baseLabels.at(D.edge_tail(s)), D.mode);
        std::vector<std::pair<std::tuple<int, int64_t, int64_t>, Word>> scored;
        for (auto& w : ctx.solve(target)) {
            Word rel{tu.inverse()};
            rel = concat(rel, inverse(w));
            rel.push_back(tw);
            rel.push_back(e);
            if (!is_relator(rel)) continue;
            std::tuple<int, int64_t, int64_t> score{0, 0, 0};
            if (w.size() == 2) score = score_of(act_token(w[1], uprime, D.mode));
            scored.emplace_back(score, w);
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [sc, w] : scored) cands[k].push_back(w);
        if (cands[k].empty())
            throw MissingConjugationForm("no short side-cell form across edge with label " +
                                         to_string(e));
    }

    int fillNodes = 0;
    std::set<Word> visited;

    // recursive fill with bounded backtracking over (subwalk, chord) choices
    std::function<bool(Diagram&, Walk, std::vector<int>&, std::vector<int>&)> fill =
        [&](Diagram& dia, Walk holeW, std::vector<int>& newV, std::vector<int>& newF) -> bool {
        if (holeW.empty()) return true;
        if (++fillNodes > 240) return false;
        Word hw = dia.walk_word(holeW);
        {
            auto cg = try_canonical_geometric(hw);
            Word key = cg ? cg->rep : Word{};
            if (!key.empty()) {
                if (visited.count(key)) return false;
                visited.insert(key);
            }
        }
        if (std::getenv("VKR_DEBUG2"))
            fprintf(stderr, "hole[%d]: %s\n", fillNodes, to_string(hw).c_str());
        if (is_relator(hw)) {
            newF.push_back(dia.add_face(holeW));
            return true;
        }
        size_t H = holeW.size();
        std::map<int, CosetLabel> lbl;
        try {
            lbl = dia.label_vertices();
        } catch (const InconsistentLabeling&) {
            return false;
        }
        struct Fill {
            std::tuple<int, int64_t, int64_t> score;
            size_t start, len;
            Word chi;
        };
        std::vector<Fill> fills;
        for (size_t len = std::min<size_t>(H, 6); len >= 2; --len) {
            for (size_t start = 0; start < H; ++start) {
                Walk sub;
                for (size_t kk = 0; kk < len; ++kk) sub.push_back(holeW[(start + kk) % H]);
                Word wsub = dia.walk_word(sub);
                std::vector<Word> chis;
                Aut target = apply_word(inverse(wsub), NO);
                if (len >= 3 && target.is_identity()) chis.push_back({});
                for (auto& chi : ctx.solve(target)) chis.push_back(chi);
                for (auto& chi : chis) {
                    if (chi.empty() && !is_relator(wsub)) continue;
                    if (!chi.empty() && !is_relator(concat(chi, wsub))) continue;
                    if (chi.size() + len < 3 || chi.size() > len) continue;
                    Fill f;
                    f.start = start;
                    f.len = len;
                    f.chi = chi;
                    f.score = {0, 0, 0};
                    if (chi.size() == 2) {
                        CosetLabel from = lbl.at(dia.edge_head(sub.back()));
                        f.score = score_of(act_token(chi[1], from, dia.mode));
                    }
                    fills.push_back(std::move(f));
                }
            }
        }
        if (fills.empty()) {
            if (std::getenv("VKR_DEBUG"))
                fprintf(stderr, "fill stuck on hole: %s\n", to_string(hw).c_str());
            return false;
        }
        std::stable_sort(fills.begin(), fills.end(), [](const Fill& a, const Fill& b) {
            if (a.score != b.score) return a.score < b.score;
            if (a.chi.size() != b.chi.size()) return a.chi.size() < b.chi.size();
            return a.len > b.len;
        });
        size_t tried = 0;
        for (const Fill& f : fills) {
            if (++tried > 4) break;
            Diagram trial = dia;
            std::vector<int> tv = newV, tf = newF;
            Walk sub;
            for (size_t kk = 0; kk < f.len; ++kk) sub.push_back(holeW[(f.start + kk) % H]);
            int from = trial.edge_head(sub.back());
            int to = trial.edge_tail(sub.front());
            Walk chord;
            int cur = from;
            for (size_t q = f.chi.size(); q-- > 0;) {
                int nxt;
                if (q == 0) {
                    nxt = to;
                } else {
                    nxt = trial.fresh_vertex();
                    tv.push_back(nxt);
                }
                auto [sref, far] = add_letter_edge(trial, cur, nxt, f.chi[q]);
                (void)far;
                chord.push_back(sref);
                cur = nxt;
            }
            Walk cell = sub;
            for (int sref : chord) cell.push_back(sref);
            tf.push_back(trial.add_face(cell));
            Walk nh;
            for (size_t kk = 0; kk < H - f.len; ++kk)
                nh.push_back(holeW[(f.start + f.len + kk) % H]);
            for (auto it = chord.rbegin(); it != chord.rend(); ++it) nh.push_back(-*it);
            HoleBuilder tb{&trial, nh};
            tb.zip();
            if (fill(trial, tb.hole, tv, tf)) {
                dia = std::move(trial);
                newV = std::move(tv);
                newF = std::move(tf);
                return true;
            }
        }
        return false;
    };

    // build with a given choice of inner words
    auto attempt = [&](const std::vector<size_t>& pick) -> std::optional<MoveResult> {
        MoveResult res;
        res.diagram = D;
        Diagram& out = res.diagram;

        std::map<int, int> primed;
        std::map<int, int> sideRef;
        for (int v : corners) {
            if (primed.count(v)) continue;
            int v2 = out.fresh_vertex();
            primed[v] = v2;
            res.newVertices.push_back(v2);
            auto [sref, far] = add_letter_edge(out, v, v2, sideLetters.at(v));
            (void)far;
            sideRef[v] = sref;
        }

        out.faces.erase(face);
        Walk hole;
        for (size_t k = 0; k < m; ++k) {
            int s = walk[k];
            int u = D.edge_tail(s), w = D.edge_head(s);
            const Word& omega = cands[k][pick[k]];
            int cur = primed.at(u);
            Walk path;
            for (size_t q = omega.size(); q-- > 0;) {
                int nxt;
                if (q == 0) {
                    nxt = primed.at(w);
                } else {
                    nxt = out.fresh_vertex();
                    res.newVertices.push_back(nxt);
                }
                auto [sref, far] = add_letter_edge(out, cur, nxt, omega[q]);
                (void)far;
                path.push_back(sref);
                cur = nxt;
            }
            Walk cell{s, sideRef.at(w)};
            for (auto it = path.rbegin(); it != path.rend(); ++it) cell.push_back(-*it);
            cell.push_back(-sideRef.at(u));
            res.newFaces.push_back(out.add_face(cell));
            for (int p : path) hole.push_back(p);
        }

        HoleBuilder hb{&out, hole};
        hb.zip();
        fillNodes = 0;
        visited.clear();
        if (!fill(out, hb.hole, res.newVertices, res.newFaces)) return std::nullopt;

        std::set<int> used;
        for (auto& [id, e] : res.diagram.edges) {
            used.insert(e.tail);
            used.insert(e.head);
        }
        std::set<int> nv;
        for (int v : res.diagram.vertices)
            if (used.count(v)) nv.insert(v);
        res.diagram.vertices = std::move(nv);
        res.newVertices.erase(std::remove_if(res.newVertices.begin(), res.newVertices.end(),
                                             [&](int v) { return !res.diagram.vertices.count(v); }),
                              res.newVertices.end());
        return res;
    };

    std::vector<size_t> pick(m, 0);
    int combos = 0;
    while (true) {
        if (++combos > 64) break;
        auto res = attempt(pick);
        if (res) return *res;
        size_t k = 0;
        while (k < m) {
            if (++pick[k] < cands[k].size()) break;
            pick[k] = 0;
            ++k;
        }
        if (k == m) break;
    }
    throw HoleFillFailed("no sub-relator decomposition found");
}

MoveResult conjugating_map(const Diagram& D, int face, const Token& t) {
    std::map<int, Token> side;
    for (int v : D.walk_vertices(D.faces.at(face))) side.emplace(v, t);
    return corner_map(D, face, side);
}

MoveResult conjugating_map(const Diagram& D, int face, const Token& t, OrderKind order, int k,
                           const CosetLabel* below) {
    std::map<int, Token> side;
    for (int v : D.walk_vertices(D.faces.at(face))) side.emplace(v, t);
    return corner_map(D, face, side, order, k, below);
}

MoveResult merge_cells(const Diagram& D, int f1, int f2) {
    if (f1 == f2) throw std::invalid_argument("merge_cells: need distinct cells");
    const Walk &w1 = D.faces.at(f1), &w2 = D.faces.at(f2);
    std::set<int> e1, e2;
    for (int s : w1) e1.insert(std::abs(s));
    for (int s : w2) e2.insert(std::abs(s));
    std::set<int> shared;
    for (int e : e1)
        if (e2.count(e)) shared.insert(e);
    if (shared.empty()) throw std::invalid_argument("merge_cells: cells share no edge");

    // boundary of the union: concatenate the non-shared arcs
    auto arc = [&](const Walk& w) {
        // rotate so the walk starts right after a shared edge
        size_t start = 0;
        for (size_t k = 0; k < w.size(); ++k)
            if (shared.count(std::abs(w[k])) && !shared.count(std::abs(w[(k + 1) % w.size()]))) {
                start = k + 1;
                break;
            }
        Walk out;
        for (size_t k = 0; k < w.size(); ++k) {
            int s = w[(start + k) % w.size()];
            if (!shared.count(std::abs(s))) out.push_back(s);
        }
        return out;
    };
    Walk a1 = arc(w1), a2 = arc(w2);
    Walk merged = a1;
    merged.insert(merged.end(), a2.begin(), a2.end());

    MoveResult res;
    res.diagram = D;
    Diagram& out = res.diagram;
    out.faces.erase(f1);
    out.faces.erase(f2);
    // the merged walk must be closed; rotate a2 if needed
    if (!merged.empty()) {
        bool ok = false;
        for (size_t rot = 0; rot < std::max<size_t>(1, a2.size()); ++rot) {
            Walk cand = a1;
            Walk b = a2;
            std::rotate(b.begin(), b.begin() + rot, b.end());
            cand.insert(cand.end(), b.begin(), b.end());
            int prev = cand.empty() ? 0 : out.edge_head(cand.back());
            ok = true;
            for (int s : cand) {
                if (out.edge_tail(s) != prev) {
                    ok = false;
                    break;
                }
                prev = out.edge_head(s);
            }
            if (ok) {
                merged = cand;
                break;
            }
        }
        if (!ok) throw std::invalid_argument("merge_cells: union boundary is not a closed walk");
    }
    if (!is_relator(out.walk_word(merged)))
        throw NotARelator("merge_cells: union boundary is not a defining relator");
    res.newFaces.push_back(out.add_face(merged));
    for (int e : shared) out.edges.erase(e);
    std::set<int> used;
    for (auto& [id, e] : out.edges) {
        used.insert(e.tail);
        used.insert(e.head);
    }
    std::set<int> nv;
    for (int v : out.vertices)
        if (used.count(v)) nv.insert(v);
    out.vertices = std::move(nv);
    return res;
}

MoveResult gallery_map(const Diagram& D, const Gallery& G, const std::vector<MoveSpec>& moves) {
    if (moves.size() != G.cells.size())
        throw std::invalid_argument("gallery_map: one move per cell required");
    MoveResult acc;
    acc.diagram = D;
    for (size_t k = 0; k < G.cells.size(); ++k) {
        MoveResult one = moves[k].kind == MoveSpec::Commuting
                             ? commuting_map(acc.diagram, G.cells[k], moves[k].t)
                             : conjugating_map(acc.diagram, G.cells[k], moves[k].t);
        acc.diagram = std::move(one.diagram);
        acc.newVertices.insert(acc.newVertices.end(), one.newVertices.begin(), one.newVertices.end());
    }
    // shared edges: the chain's designated edges, plus the closing edge for a
    // full gallery around an interior center
    std::vector<int> shared = G.sharedEdges;
    if (G.full && G.cells.size() >= 2 && D.is_interior(G.center)) {
        std::set<int> e1, used(shared.begin(), shared.end());
        for (int s : D.faces.at(G.cells.back()))
            if (D.edge_tail(s) == G.center || D.edge_head(s) == G.center) e1.insert(std::abs(s));
        for (int s : D.faces.at(G.cells.front())) {
            int id = std::abs(s);
            if ((D.edge_tail(s) == G.center || D.edge_head(s) == G.center) && e1.count(id) &&
                !used.count(id))
                shared.push_back(id);
        }
    }
    for (int e : shared) {
        // the two faces flanking e in the current diagram
        std::vector<int> flank;
        for (const auto& [id, w] : acc.diagram.faces)
            for (int s : w)
                if (std::abs(s) == e) {
                    flank.push_back(id);
                    break;
                }
        if (flank.size() != 2) throw IncompatibleAtEdge("edge " + std::to_string(e));
        if (!cancellable(acc.diagram, flank[0], flank[1]))
            throw IncompatibleAtEdge("side cells at edge " + std::to_string(e) +
                                     " are not a cancellable pair");
        acc.diagram = cancel_pair(acc.diagram, flank[0], flank[1]);
    }
    // recompute new vertices: ids present now but not before
    acc.newVertices.clear();
    for (int v : acc.diagram.vertices)
        if (!D.vertices.count(v)) acc.newVertices.push_back(v);
    return acc;
}

MoveResult gallery_map_uniform(const Diagram& D, const Gallery& G, const Token& t) {
    std::vector<MoveSpec> mv;
    for (size_t k = 0; k < G.cells.size(); ++k) {
        bool commuting = true;
        for (int s : D.faces.at(G.cells[k])) {
            Token e = D.edges.at(std::abs(s)).label;
            if (!is_relator(com_word(Token(t.kind, t.i, t.j, 1), e))) commuting = false;
        }
        mv.push_back(MoveSpec{commuting ? MoveSpec::Commuting : MoveSpec::Conjugating, t});
    }
    return gallery_map(D, G, mv);
}

std::map<int, int> h_counts(const Diagram& D, OrderKind preorder, int k) {
    auto lab = D.label_vertices();
    auto less = [&](const CosetLabel& a, const CosetLabel& b) {
        return cmp_labels(a, b, preorder, k) == Cmp::Less;
    };
    std::set<int> premax;
    for (auto& [u, zu] : lab) {
        bool dominated = false;
        for (auto& [w, zw] : lab)
            if (less(zu, zw)) {
                dominated = true;
                break;
            }
        if (!dominated) premax.insert(u);
    }
    std::map<int, int> h;
    for (int v : D.vertices) h[v] = 0;
    for (const auto& [f, fw] : D.faces) {
        bool pure = true;
        auto vs = D.walk_vertices(fw);
        for (int u : vs)
            if (!premax.count(u)) {
                pure = false;
                break;
            }
        if (!pure) continue;
        auto g = try_canonical_geometric(D.face_word(f));
        if (!g) continue;
        try {
            // type 5 as a Sigma_n orbit: the 7' row is the same commutator
            // shape with the shared index moved off 1
            std::string ty = classify_cell_type(*g, D.n).typeId;
            if (ty != "5" && ty != "7'") continue;
        } catch (const NotARelator&) {
            continue;
        }
        std::set<int> uniq(vs.begin(), vs.end());
        for (int u : uniq) h[u] += 1;
    }
    return h;
}

int h_count(const Diagram& D, int v, OrderKind preorder, int k) {
    return h_counts(D, preorder, k).at(v);
}

Cmp extended_cmp(const Diagram& Da, int va, const Diagram& Db, int vb, OrderKind preorder, int k) {
    auto la = Da.label_vertices().at(va);
    auto lb = Db.label_vertices().at(vb);
    Cmp c = cmp_labels(la, lb, preorder, k);
    if (c != Cmp::Equal) return c;
    int ha = h_count(Da, va, preorder, k), hb = h_count(Db, vb, preorder, k);
    if (ha != hb) return ha < hb ? Cmp::Less : Cmp::Greater;
    return Cmp::Equal;
}

ReductionCheck is_reduction(const Diagram& before, int maximalVertex, const Diagram& after,
                            OrderKind order, int k) {
    ReductionCheck rc;
    auto labBefore = before.label_vertices();
    auto labAfter = after.label_vertices();
    const CosetLabel& vlab = labBefore.at(maximalVertex);
    bool extended = order == OrderKind::Step1 || order == OrderKind::Step2;
    std::map<int, int> hb, ha;
    if (extended) {
        hb = h_counts(before, order, k);
        ha = h_counts(after, order, k);
    }
    int hv = extended ? hb.at(maximalVertex) : 0;

    auto below = [&](const CosetLabel& w, int hw) {
        Cmp c = cmp_labels(w, vlab, order, k);
        if (c == Cmp::Less) return true;
        if (!extended) return false;
        return c == Cmp::Equal && hw < hv;
    };

    for (auto& [w, zw] : labAfter) {
        bool isNew = !before.vertices.count(w);
        if (isNew) {
            int hw = extended ? ha.at(w) : 0;
            if (!below(zw, hw)) {
                rc.ok = false;
                rc.violator = w;
                rc.reason = "new vertex not below the maximal vertex";
                return rc;
            }
        } else if (extended) {
            int hOld = hb.at(w);
            int hNew = ha.at(w);
            if (hNew != hOld && !below(zw, hNew)) {
                rc.ok = false;
                rc.violator = w;
                rc.reason = "pseudo-new vertex not below the maximal vertex";
                return rc;
            }
        }
    }
    return rc;
}

std::vector<int> maximal_vertices(const Diagram& D, OrderKind order, int k) {
    auto lab = D.label_vertices();
    std::vector<int> out;
    for (auto& [v, zv] : lab) {
        bool dominated = false;
        for (auto& [w, zw] : lab)
            if (cmp_labels(zv, zw, order, k) == Cmp::Less) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(v);
    }
    return out;
}

}  // namespace vkr
