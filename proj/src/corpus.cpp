#include "corpus.hpp"

#include "diagram_io.hpp"

#include <cstdlib>
#include <filesystem>

#ifndef VKRED_SOURCE_DIR
#define VKRED_SOURCE_DIR "."
#endif

namespace vkr {

std::string corpus_dir() {
    if (const char* env = std::getenv("VKRED_CORPUS_DIR")) return env;
    return std::string(VKRED_SOURCE_DIR) + "/corpus";
}

std::string templates_dir() { return corpus_dir() + "/templates"; }
std::string figures_dir() { return corpus_dir() + "/figures"; }

namespace {

// the figure file rendered for each multi-case template id
const std::vector<std::pair<std::string, std::string>> kFigureFromTemplate = {
    {"1GA", "1GA"},       {"2GA", "2GA"},     {"3GA", "3GA"},      {"4GA", "4GA"},
    {"5GA", "5GA"},       {"6GA", "6GA"},     {"7GA", "7GA"},      {"8GA", "8GA-case1"},
    {"9GA", "9GA-case1"}, {"10GA", "10GA-case1"}, {"11GA", "11GA-R1"}, {"12GA", "12GA-case1"},
    {"1ZA", "1ZA"},       {"2ZA", "2ZA"},     {"3ZA", "3ZA"},      {"4ZA", "4ZA"},
    {"5ZA", "5ZA"},       {"6ZA", "6ZA"},     {"7ZA", "7ZA"},      {"8ZA", "8ZA-case1"},
    {"9ZA", "9ZA"},       {"10ZA", "10ZA"},   {"11ZA", "11ZA-1"},  {"12ZA", "12ZA"},
    {"1GB", "1GB"},       {"2GB", "2GB"},     {"3GB", "3GB"},      {"4GB", "4GB"},
    {"5GB", "5GB"},       {"6GB", "6GB"},     {"7GB", "7GB"},      {"8GB", "8GB"},
    {"9GB", "9GB"},       {"10GB", "10GB-case1"}, {"11GB", "11GB-case1"},
    {"2ZB", "2ZB"},       {"3ZB", "3ZB"},     {"4ZB", "4ZB"},      {"5ZB", "5ZB"},
    {"8ZB", "8ZB"},       {"9ZB", "9ZB-case1"}, {"10ZB", "10ZB-case1"}, {"11ZB", "11ZB-1"},
    {"5GBM", "5GBM"},     {"5ZBM", "5ZBM-2"},
};

Diagram render_from_template(const MoveTemplate& tpl, unsigned seed) {
    std::mt19937 rng(seed);
    for (int n : {6, 7, 8}) {
        auto inst = sample_instance(tpl, rng, n, 9, 4000);
        if (!inst) continue;
        auto res = apply_template(inst->host, inst->face, tpl, inst->binding);
        return res.diagram;
    }
    throw std::runtime_error("could not instantiate template " + tpl.id);
}

// Figure "commut": a commuting map on a commutator square.
Diagram render_commut() {
    Diagram D;
    D.n = 6;
    D.d = 1;
    D.mode = Mode::Row;
    int v1 = D.fresh_vertex(), v2 = D.fresh_vertex(), v3 = D.fresh_vertex(), v4 = D.fresh_vertex();
    int e1 = D.add_edge(v1, v2, R(1, 2));
    int e2 = D.add_edge(v2, v3, R(3, 4));
    int e3 = D.add_edge(v4, v3, R(1, 2));
    int e4 = D.add_edge(v1, v4, R(3, 4));
    int f = D.add_face({e1, e2, -e3, -e4});
    D.outer = {e4, e3, -e2, -e1};
    D.anchorVertex = v1;
    D.anchorLabel = CosetLabel::basepoint(1, 6);
    return commuting_map(D, f, R(5, 6)).diagram;
}

// Figure "cancel": two mirror cells inside a ring of commuting cells.
Diagram render_cancel() {
    Diagram D;
    D.n = 6;
    D.d = 1;
    D.mode = Mode::Row;
    std::vector<int> in, out;
    for (int k = 0; k < 6; ++k) in.push_back(D.fresh_vertex());
    for (int k = 0; k < 6; ++k) out.push_back(D.fresh_vertex());
    // inner hexagon arcs (i1..i6) and the shared diagonal
    int a1 = D.add_edge(in[0], in[1], R(3, 4));
    int a2 = D.add_edge(in[2], in[1], R(3, 4));
    int b1 = D.add_edge(in[2], in[3], R(1, 2));
    int c1 = D.add_edge(in[3], in[4], R(3, 4));
    int c2 = D.add_edge(in[5], in[4], R(3, 4));
    int b2 = D.add_edge(in[0], in[5], R(1, 2));
    int dd = D.add_edge(in[1], in[4], R(1, 2));
    D.add_face({a1, dd, -c2, -b2});        // F1
    D.add_face({-a2, b1, c1, -dd});        // F2 (mirror of F1 across dd)
    // ring: spokes and arc copies
    std::vector<int> spoke(6), ring(6);
    for (int k = 0; k < 6; ++k) spoke[k] = D.add_edge(in[k], out[k], R(5, 6));
    int innerArc[6] = {a1, -a2, b1, c1, -c2, -b2};
    for (int k = 0; k < 6; ++k) {
        Token tok = D.edge_token(innerArc[k]);
        int from = out[k], to = out[(k + 1) % 6];
        if (tok.exp == 1)
            ring[k] = D.add_edge(from, to, tok);
        else
            ring[k] = -D.add_edge(to, from, tok.inverse());
        D.add_face({ring[k], -spoke[(k + 1) % 6], -innerArc[k], spoke[k]});
    }
    for (int k = 5; k >= 0; --k) D.outer.push_back(-ring[k]);
    D.anchorVertex = in[0];
    D.anchorLabel = CosetLabel::basepoint(1, 6);
    return D;
}

// The wheel of four commuting squares around a center vertex.
Diagram wheel4(CosetLabel center) {
    Diagram D;
    D.n = center.n;
    D.d = center.d;
    D.mode = Mode::Row;
    Token sp[4] = {R(1, 2), R(3, 4), L(1, 2), L(3, 4)};
    int v0 = D.fresh_vertex();
    std::vector<int> ringV(4), spokes(4);
    for (int k = 0; k < 4; ++k) ringV[k] = D.fresh_vertex();
    std::vector<int> corner(4);
    for (int k = 0; k < 4; ++k) corner[k] = D.fresh_vertex();
    for (int k = 0; k < 4; ++k) spokes[k] = D.add_edge(v0, ringV[k], sp[k]);
    Walk outerWalk;
    for (int k = 0; k < 4; ++k) {
        int nk = (k + 1) % 4;
        // square [sp_k, sp_nk]: v0 -> ringV[k] -> corner[k] -> ringV[nk] -> v0
        int e1 = D.add_edge(ringV[k], corner[k], sp[nk]);
        int e2 = D.add_edge(ringV[nk], corner[k], sp[k]);
        D.add_face({spokes[k], e1, -e2, -spokes[nk]});
        outerWalk.push_back(e1);
        outerWalk.push_back(-e2);
    }
    // outer walk starts at ringV[0]
    D.outer.clear();
    for (auto it = outerWalk.rbegin(); it != outerWalk.rend(); ++it) D.outer.push_back(-*it);
    D.anchorVertex = v0;
    D.anchorLabel = center;
    return D;
}

Diagram render_fullreduction() {
    CosetLabel z(1, 8);
    z.at(0, 0) = 1;
    z.at(0, 1) = 1;
    Diagram D = wheel4(z);
    auto g = full_gallery_at(D, D.anchorVertex);
    if (!g) throw std::runtime_error("fullreduction: no full gallery");
    return gallery_map_uniform(D, *g, R(5, 6)).diagram;
}

Diagram render_5ppGA() {
    Diagram D;
    D.n = 6;
    D.d = 1;
    D.mode = Mode::Row;
    std::vector<int> v(12);
    for (int k = 1; k <= 11; ++k) v[k] = (k == 8) ? 0 : D.fresh_vertex();
    int e1 = D.add_edge(v[2], v[1], L(1, 2));
    int e2 = D.add_edge(v[3], v[2], R(1, 2));
    int e3 = D.add_edge(v[3], v[4], L(1, 2));
    int e4 = D.add_edge(v[4], v[1], R(1, 2));
    int e5 = D.add_edge(v[1], v[5], L(1, 4));
    int e6 = D.add_edge(v[7], v[2], L(4, 2));
    int e7 = D.add_edge(v[9], v[3], L(4, 2));
    int e8 = D.add_edge(v[4], v[11], L(1, 4));
    int e9 = D.add_edge(v[6], v[5], L(4, 2));
    int e10 = D.add_edge(v[7], v[6], L(1, 4));
    int e11 = D.add_edge(v[9], v[7], R(1, 2));
    int e12 = D.add_edge(v[9], v[10], L(1, 4));
    int e13 = D.add_edge(v[10], v[11], L(4, 2));
    int e14 = D.add_edge(v[11], v[5], R(1, 2));
    int e15 = D.add_edge(v[10], v[6], R(1, 2));
    D.add_face({-e1, -e6, e10, e9, -e5});
    D.add_face({-e2, -e7, e11, e6});
    D.add_face({e3, e8, -e13, -e12, e7});
    D.add_face({e4, e5, -e14, -e8});
    D.add_face({-e9, -e15, e13, e14});
    D.add_face({-e10, -e11, e12, e15});
    D.outer = {-e4, -e3, e2, e1};
    D.anchorVertex = v[1];
    D.anchorLabel = CosetLabel::basepoint(1, 6);
    return D;
}

// the 3-cell wheel of type-4 cells and its gallery-map state (Figure 4GBgallery)
Diagram render_4GBgallery(const std::vector<MoveTemplate>& catalog) {
    Diagram D;
    D.n = 6;
    D.d = 1;
    D.mode = Mode::Col;
    int sp[3] = {2, 3, 5};  // spoke first indices: R(2,1), R(3,1), R(5,1)
    int v0 = D.fresh_vertex();
    std::vector<int> a(3), c(3), spokes(3), faces(3);
    for (int k = 0; k < 3; ++k) a[k] = D.fresh_vertex();
    for (int k = 0; k < 3; ++k) c[k] = D.fresh_vertex();
    for (int k = 0; k < 3; ++k) spokes[k] = D.add_edge(a[k], v0, R(sp[k], 1));
    Walk outerWalk;
    for (int k = 0; k < 3; ++k) {
        int nk = (k + 1) % 3;
        int e1 = D.add_edge(c[k], a[k], R(sp[nk], 1));
        int e2 = D.add_edge(c[k], a[nk], R(sp[k], 1));
        faces[k] = D.add_face({-spokes[k], -e1, e2, spokes[nk]});
        outerWalk.push_back(-e1);
        outerWalk.push_back(e2);
    }
    D.outer.clear();
    for (auto it = outerWalk.rbegin(); it != outerWalk.rend(); ++it) D.outer.push_back(-*it);
    CosetLabel z(1, 6);
    z.at(0, 0) = 2;
    z.at(0, 3) = 1;
    z.at(0, 5) = 1;
    D.anchorVertex = v0;
    D.anchorLabel = z;

    const MoveTemplate* t4gb = nullptr;
    for (const auto& t : catalog)
        if (t.id == "4GB") t4gb = &t;
    if (!t4gb) throw std::runtime_error("4GB template missing");

    // the L(4,1)-sided pair goes to spoke 1 for the first cell and to spoke 3
    // for the other two, so exactly two side-cell pairs cancel
    int wantSpoke[3] = {0, 0, 2};  // cell k: spoke index carrying the pair
    wantSpoke[1] = 2;
    Diagram cur = D;
    for (int k = 0; k < 3; ++k) {
        auto aligns = align_template(cur, faces[k], *t4gb);
        const Binding* chosen = nullptr;
        int spokeIdx = sp[wantSpoke[k]];
        for (auto& b : aligns) {
            if (b.vertexMap.at("p1") != v0) continue;
            if (b.sigma.perm[2] != spokeIdx) continue;  // abstract 3 -> pair spoke
            chosen = &b;
            break;
        }
        if (!chosen) throw std::runtime_error("4GBgallery: no aligned binding");
        Binding b = *chosen;
        // abstract 4 -> the fresh index 4 (bijection fixup)
        for (int q = 0; q < 6; ++q)
            if (b.sigma.perm[q] == 4) b.sigma.perm[q] = b.sigma.perm[3];
        b.sigma.perm[3] = 4;
        cur = apply_template(cur, faces[k], *t4gb, b).diagram;
    }
    // cancel the mirror pairs at spokes 2 and 3
    for (int k : {1, 2}) {
        std::vector<int> flank;
        for (const auto& [id, w] : cur.faces)
            for (int s : w)
                if (std::abs(s) == spokes[k]) {
                    flank.push_back(id);
                    break;
                }
        if (flank.size() == 2 && cancellable(cur, flank[0], flank[1]))
            cur = cancel_pair(cur, flank[0], flank[1]);
        else
            throw std::runtime_error("4GBgallery: expected a cancellable pair at spoke " +
                                     std::to_string(k + 1));
    }
    return cur;
}

}  // namespace

std::vector<std::pair<std::string, Diagram>> render_figures() {
    auto catalog = load_catalog(templates_dir(), false);
    std::map<std::string, const MoveTemplate*> byId;
    for (const auto& t : catalog) byId[t.id] = &t;

    std::vector<std::pair<std::string, Diagram>> out;
    for (const auto& [fig, tplId] : kFigureFromTemplate) {
        auto it = byId.find(tplId);
        if (it == byId.end()) throw std::runtime_error("missing template " + tplId);
        try {
            out.emplace_back("fig_" + fig, render_from_template(*it->second, 20240 + int(fig.size())));
        } catch (const std::exception& e) {
            throw std::runtime_error("figure " + fig + ": " + e.what());
        }
    }
    out.emplace_back("fig_commut", render_commut());
    out.emplace_back("fig_cancel", render_cancel());
    out.emplace_back("fig_fullreduction", render_fullreduction());
    out.emplace_back("fig_5++GA", render_5ppGA());
    out.emplace_back("fig_4GBgallery", render_4GBgallery(catalog));
    return out;
}

bool CorpusReport::ok() const {
    for (const auto& i : figures)
        if (!i.ok) return false;
    for (const auto& i : templates)
        if (!i.ok) return false;
    return true;
}

CorpusReport check_corpus(unsigned seed) {
    CorpusReport rep;
    std::vector<std::string> figs;
    for (const auto& e : std::filesystem::directory_iterator(figures_dir()))
        if (e.path().extension() == ".vkd") figs.push_back(e.path().string());
    std::sort(figs.begin(), figs.end());
    for (const auto& f : figs) {
        CorpusReport::Item item;
        item.name = std::filesystem::path(f).stem().string();
        try {
            Diagram D = load_vkd(f);
            auto v = validate(D);
            item.ok = v.ok();
            item.detail = v.summary();
        } catch (const std::exception& e) {
            item.ok = false;
            item.detail = e.what();
        }
        rep.figures.push_back(std::move(item));
    }

    auto catalog = load_catalog(templates_dir(), true);
    std::mt19937 rng(seed);
    for (const auto& tpl : catalog) {
        CorpusReport::Item item;
        item.name = tpl.id;
        try {
            auto inst = sample_instance(tpl, rng, 8, 9, 4000);
            if (!inst) {
                item.detail = "no instantiation found";
            } else {
                auto res = apply_template(inst->host, inst->face, tpl, inst->binding);
                auto v = validate(res.diagram);
                item.ok = v.ok();
                item.detail = v.summary();
            }
        } catch (const std::exception& e) {
            item.detail = e.what();
        }
        rep.templates.push_back(std::move(item));
    }
    return rep;
}

}  // namespace vkr
