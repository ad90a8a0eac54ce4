#include "diagram.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace vkr {

int Diagram::fresh_vertex() {
    int id = vertices.empty() ? 1 : *vertices.rbegin() + 1;
    vertices.insert(id);
    return id;
}

int Diagram::fresh_edge() { return edges.empty() ? 1 : edges.rbegin()->first + 1; }

int Diagram::fresh_face() { return faces.empty() ? 1 : faces.rbegin()->first + 1; }

int Diagram::add_edge(int tail, int head, const Token& label) {
    int id = fresh_edge();
    edges[id] = DEdge{id, tail, head, label};
    return id;
}

int Diagram::add_face(const Walk& w) {
    int id = fresh_face();
    faces[id] = w;
    return id;
}

int Diagram::edge_tail(int s) const {
    const DEdge& e = edges.at(std::abs(s));
    return s > 0 ? e.tail : e.head;
}

int Diagram::edge_head(int s) const {
    const DEdge& e = edges.at(std::abs(s));
    return s > 0 ? e.head : e.tail;
}

Token Diagram::edge_token(int s) const {
    const DEdge& e = edges.at(std::abs(s));
    return s > 0 ? e.label : e.label.inverse();
}

Word Diagram::walk_word(const Walk& w) const {
    // boundary labels are read from right to left: the word is the product of
    // the traversal letters in reverse order
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(edge_token(*it));
    return out;
}

std::vector<int> Diagram::walk_vertices(const Walk& w) const {
    std::vector<int> vs;
    vs.reserve(w.size());
    for (int s : w) vs.push_back(edge_tail(s));
    return vs;
}

Word Diagram::boundary_word() const {
    if (outer.empty()) return {};
    auto vs = walk_vertices(outer);
    size_t best = 0;
    for (size_t k = 1; k < vs.size(); ++k)
        if (vs[k] < vs[best]) best = k;
    Walk rotated(outer.begin() + best, outer.end());
    rotated.insert(rotated.end(), outer.begin(), outer.begin() + best);
    return walk_word(rotated);
}

bool Diagram::face_contains_vertex(int face, int v) const {
    for (int s : faces.at(face))
        if (edge_tail(s) == v) return true;
    return false;
}

std::vector<int> Diagram::faces_at(int v) const {
    std::vector<int> out;
    for (const auto& [id, w] : faces)
        if (face_contains_vertex(id, v)) out.push_back(id);
    return out;
}

std::vector<int> Diagram::edges_at(int v) const {
    std::vector<int> out;
    for (const auto& [id, e] : edges)
        if (e.tail == v || e.head == v) out.push_back(id);
    return out;
}

std::map<int, CosetLabel> Diagram::label_vertices() const {
    std::map<int, CosetLabel> lab;
    if (!vertices.count(anchorVertex)) throw InconsistentLabeling("anchor vertex missing");
    lab[anchorVertex] = anchorLabel;
    std::queue<int> q;
    q.push(anchorVertex);
    // adjacency
    std::multimap<int, int> inc;
    for (const auto& [id, e] : edges) {
        inc.insert({e.tail, id});
        inc.insert({e.head, id});
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        auto range = inc.equal_range(v);
        for (auto it = range.first; it != range.second; ++it) {
            const DEdge& e = edges.at(it->second);
            int other = e.tail == v ? e.head : e.tail;
            CosetLabel want = e.tail == v ? act_token(e.label, lab.at(v), mode)
                                          : act_token(e.label.inverse(), lab.at(v), mode);
            auto found = lab.find(other);
            if (found == lab.end()) {
                lab[other] = want;
                q.push(other);
            } else if (!(found->second == want)) {
                throw InconsistentLabeling("cycle product acts nontrivially at vertex " +
                                           std::to_string(other));
            }
        }
    }
    if (lab.size() != vertices.size()) throw InconsistentLabeling("diagram is not connected");
    return lab;
}

std::set<int> Diagram::boundary_vertices() const {
    std::set<int> out;
    for (int s : outer) out.insert(edge_tail(s));
    return out;
}

bool Diagram::is_interior(int v) const { return !boundary_vertices().count(v); }

std::set<int> Diagram::support_of_face(int face) const {
    std::set<int> s;
    for (int e : faces.at(face)) {
        s.insert(edges.at(std::abs(e)).label.i);
        s.insert(edges.at(std::abs(e)).label.j);
    }
    return s;
}

void Diagram::check_well_formed() const {
    std::map<int, int> fwd, bwd;
    auto scan = [&](const Walk& w) {
        int prev = w.empty() ? 0 : edge_head(w.back());
        for (int s : w) {
            if (edge_tail(s) != prev) throw std::logic_error("walk is not closed");
            prev = edge_head(s);
            (s > 0 ? fwd : bwd)[std::abs(s)] += 1;
        }
    };
    for (const auto& [id, w] : faces) scan(w);
    scan(outer);
    for (const auto& [id, e] : edges) {
        if (fwd[id] != 1 || bwd[id] != 1)
            throw std::logic_error("edge " + std::to_string(id) + " has bad side coverage");
        if (!vertices.count(e.tail) || !vertices.count(e.head))
            throw std::logic_error("edge endpoint missing");
    }
}

std::vector<Gallery> galleries_at(const Diagram& D, int v, int k) {
    std::vector<int> cells = D.faces_at(v);
    // adjacency via shared edges containing v
    auto shared = [&](int f1, int f2) -> std::vector<int> {
        std::set<int> e1;
        for (int s : D.faces.at(f1))
            if (D.edge_tail(s) == v || D.edge_head(s) == v) e1.insert(std::abs(s));
        std::vector<int> out;
        for (int s : D.faces.at(f2))
            if ((D.edge_tail(s) == v || D.edge_head(s) == v) && e1.count(std::abs(s)))
                out.push_back(std::abs(s));
        return out;
    };
    std::vector<Gallery> found;
    // enumerate simple chains of length k by DFS
    std::vector<int> chain, edgesUsed;
    auto rec = [&](auto&& self) -> void {
        if (int(chain.size()) == k) {
            Gallery g;
            g.center = v;
            g.cells = chain;
            g.sharedEdges = edgesUsed;
            g.full = int(chain.size()) == int(cells.size());
            found.push_back(g);
            return;
        }
        for (int c : cells) {
            if (std::find(chain.begin(), chain.end(), c) != chain.end()) continue;
            if (chain.empty()) {
                chain.push_back(c);
                self(self);
                chain.pop_back();
            } else {
                auto sh = shared(chain.back(), c);
                for (int e : sh) {
                    chain.push_back(c);
                    edgesUsed.push_back(e);
                    self(self);
                    chain.pop_back();
                    edgesUsed.pop_back();
                }
            }
        }
    };
    rec(rec);
    // deduplicate reversed chains
    std::vector<Gallery> out;
    std::set<std::vector<int>> seen;
    for (auto& g : found) {
        auto key = g.cells;
        auto rkey = key;
        std::reverse(rkey.begin(), rkey.end());
        if (seen.count(key) || seen.count(rkey)) continue;
        seen.insert(key);
        out.push_back(std::move(g));
    }
    return out;
}

std::optional<Gallery> full_gallery_at(const Diagram& D, int v) {
    int deg = int(D.faces_at(v).size());
    for (auto& g : galleries_at(D, v, deg)) {
        // a full gallery at an interior vertex closes up cyclically
        return g;
    }
    return std::nullopt;
}

std::map<int, std::vector<int64_t>> trace(const Diagram& D, const std::vector<int>& I) {
    if (I.empty()) throw std::invalid_argument("empty trace index set");
    auto lab = D.label_vertices();
    std::map<int, std::vector<int64_t>> out;
    for (auto& [v, z] : lab) {
        std::vector<int64_t> t;
        for (int c : I)
            for (int r = 0; r < z.d; ++r) t.push_back(z.at(r, c - 1));
        out[v] = std::move(t);
    }
    return out;
}

namespace {

// positions of edge e in walk w (signed)
std::vector<size_t> positions_of(const Walk& w, int e) {
    std::vector<size_t> out;
    for (size_t k = 0; k < w.size(); ++k)
        if (std::abs(w[k]) == e) out.push_back(k);
    return out;
}

Walk rotate_to(const Walk& w, size_t k) {
    Walk out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
}

Walk reverse_walk(const Walk& w) {
    Walk out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

}  // namespace

bool cancellable(const Diagram& D, int f1, int f2) {
    if (f1 == f2) return false;
    const Walk &w1 = D.faces.at(f1), &w2 = D.faces.at(f2);
    if (w1.size() != w2.size()) return false;
    std::set<int> e1, e2;
    for (int s : w1) e1.insert(std::abs(s));
    for (int s : w2) e2.insert(std::abs(s));
    std::vector<int> common;
    for (int e : e1)
        if (e2.count(e)) common.push_back(e);
    if (common.empty()) return false;
    // condition (iii): the part of the two cell boundaries on the outer
    // boundary must lie within a single cell
    std::set<int> bedges;
    for (int s : D.outer) bedges.insert(std::abs(s));
    bool f1OnBoundary = false, f2OnBoundary = false;
    for (int s : w1)
        if (bedges.count(std::abs(s))) f1OnBoundary = true;
    for (int s : w2)
        if (bedges.count(std::abs(s))) f2OnBoundary = true;
    if (f1OnBoundary && f2OnBoundary) return false;
    // mirror condition: reading both cells from a shared edge in the same
    // geometric direction gives identical words
    for (int e : common) {
        auto p1 = positions_of(w1, e), p2 = positions_of(w2, e);
        for (size_t a : p1)
            for (size_t b : p2) {
                if (w1[a] != -w2[b]) continue;  // opposite sides of e
                Walk r1 = rotate_to(w1, a);
                Walk r2 = reverse_walk(rotate_to(w2, b));
                r2 = rotate_to(r2, r2.size() - 1);  // align the shared edge first
                bool ok = true;
                for (size_t k = 0; k < r1.size() && ok; ++k)
                    if (D.edge_token(r1[k]) != D.edge_token(r2[k])) ok = false;
                if (ok) return true;
            }
    }
    return false;
}

Diagram cancel_pair(const Diagram& D, int f1, int f2) {
    if (!cancellable(D, f1, f2)) throw NotCancellable("cells are not a cancellable pair");
    const Walk &w1 = D.faces.at(f1), &w2 = D.faces.at(f2);
    std::set<int> e1set, e2set;
    for (int s : w1) e1set.insert(std::abs(s));
    for (int s : w2) e2set.insert(std::abs(s));
    std::vector<int> common;
    for (int e : e1set)
        if (e2set.count(e)) common.push_back(e);

    // locate the mirrored alignment again
    Walk r1, r2;
    bool aligned = false;
    for (int e : common) {
        auto p1 = positions_of(w1, e), p2 = positions_of(w2, e);
        for (size_t a : p1) {
            for (size_t b : p2) {
                if (w1[a] != -w2[b]) continue;
                Walk c1 = rotate_to(w1, a);
                Walk c2 = reverse_walk(rotate_to(w2, b));
                c2 = rotate_to(c2, c2.size() - 1);
                bool ok = true;
                for (size_t k = 0; k < c1.size() && ok; ++k)
                    if (D.edge_token(c1[k]) != D.edge_token(c2[k])) ok = false;
                if (ok) {
                    r1 = c1;
                    r2 = c2;
                    aligned = true;
                    break;
                }
            }
            if (aligned) break;
        }
        if (aligned) break;
    }
    if (!aligned) throw NotCancellable("no mirrored alignment");

    // boundary-intersection condition (iii): the cancellation below merges
    // vertex pairs; refuse if that would glue two distinct boundary arcs
    Diagram out = D;
    out.faces.erase(f1);
    out.faces.erase(f2);

    // identify r1[k] with r2[k] for every k; edges shared by both cells
    // disappear, the others merge pairwise
    std::set<int> bverts = D.boundary_vertices();
    std::map<int, int> vmap;  // vertex identification
    std::map<int, int> emap;  // edge identification (signed target)
    auto unify_vertex = [&](int a, int b) {
        int ra = a, rb = b;
        while (vmap.count(ra)) ra = vmap[ra];
        while (vmap.count(rb)) rb = vmap[rb];
        if (ra == rb) return;
        if (bverts.count(ra) && bverts.count(rb))
            throw NotCancellable("cancellation would glue two boundary points");
        vmap[std::max(ra, rb)] = std::min(ra, rb);
    };
    std::set<int> drop;  // edges removed entirely (interior seam)
    for (size_t k = 0; k < r1.size(); ++k) {
        int s1 = r1[k], s2 = r2[k];
        if (std::abs(s1) == std::abs(s2)) {
            drop.insert(std::abs(s1));
            continue;
        }
        unify_vertex(out.edge_tail(s1), out.edge_tail(s2));
        unify_vertex(out.edge_head(s1), out.edge_head(s2));
        // keep the smaller edge id
        int keep = std::min(std::abs(s1), std::abs(s2));
        int gone = std::max(std::abs(s1), std::abs(s2));
        int se1 = std::abs(s1) == keep ? s1 : s2;  // signed ref of kept edge
        int se2 = std::abs(s1) == keep ? s2 : s1;
        // traversing gone in the direction of se2 equals traversing keep as se1
        emap[gone * (se2 > 0 ? 1 : -1)] = keep * (se1 > 0 ? 1 : -1);
        emap[-gone * (se2 > 0 ? 1 : -1)] = -keep * (se1 > 0 ? 1 : -1);
    }
    auto resolve_vertex = [&](int v) {
        while (vmap.count(v)) v = vmap[v];
        return v;
    };
    auto resolve_edge = [&](int s) {
        while (emap.count(s)) s = emap[s];
        return s;
    };

    // rewrite faces and outer walk
    auto rewrite = [&](Walk& w) {
        Walk nw;
        for (int s : w) {
            if (drop.count(std::abs(s))) continue;
            nw.push_back(resolve_edge(s));
        }
        w = std::move(nw);
    };
    for (auto& [id, w] : out.faces) rewrite(w);
    rewrite(out.outer);

    // rewrite edges
    std::set<int> goneIds;
    for (auto& [from, to] : emap)
        if (std::abs(from) != std::abs(to)) goneIds.insert(std::abs(from));
    std::map<int, DEdge> newEdges;
    for (auto& [id, ed] : out.edges) {
        if (drop.count(id) || goneIds.count(id)) continue;
        DEdge ne = ed;
        ne.tail = resolve_vertex(ed.tail);
        ne.head = resolve_vertex(ed.head);
        newEdges[id] = ne;
    }
    out.edges = std::move(newEdges);

    // rebuild vertex set from edges (isolated vertices disappear with the seam)
    std::set<int> nv;
    for (auto& [id, ed] : out.edges) {
        nv.insert(ed.tail);
        nv.insert(ed.head);
    }
    out.vertices = std::move(nv);
    out.anchorVertex = resolve_vertex(out.anchorVertex);
    if (!out.vertices.count(out.anchorVertex)) {
        // anchor was swallowed by the seam; re-anchor at the smallest vertex
        auto lab = D.label_vertices();
        out.anchorVertex = *out.vertices.begin();
        out.anchorLabel = lab.at(out.anchorVertex);
    }
    return out;
}

std::string export_dot(const Diagram& D, bool withLabels) {
    std::ostringstream os;
    os << "digraph vkd {\n";
    std::map<int, CosetLabel> lab;
    if (withLabels) lab = D.label_vertices();
    for (int v : D.vertices) {
        os << "  v" << v;
        if (withLabels)
            os << " [label=\"" << v << ": " << to_string(lab.at(v)) << "\"]";
        os << ";\n";
    }
    for (const auto& [id, e] : D.edges)
        os << "  v" << e.tail << " -> v" << e.head << " [label=\"" << to_string(e.label)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string export_tikz(const Diagram& D, bool withLabels) {
    std::ostringstream os;
    os << "\\begin{tikzpicture}\n";
    int k = 0;
    int total = int(D.vertices.size());
    std::map<int, std::pair<double, double>> pos;
    for (int v : D.vertices) {
        double ang = 6.283185307179586 * k / std::max(1, total);
        pos[v] = {4 * std::cos(ang), 4 * std::sin(ang)};
        os << "  \\node (v" << v << ") at (" << pos[v].first << "," << pos[v].second << ") {$"
           << v << "$};\n";
        ++k;
    }
    (void)withLabels;
    for (const auto& [id, e] : D.edges)
        os << "  \\draw[->] (v" << e.tail << ") -- node[midway,auto] {$" << to_string(e.label)
           << "$} (v" << e.head << ");\n";
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace vkr
