#include "validate.hpp"

namespace vkr {

std::string ValidationReport::summary() const {
    if (ok())
        return "PASS (" + std::to_string(vertexCount) + " vertices, " + std::to_string(edgeCount) +
               " edges, " + std::to_string(faceCount) + " faces)";
    std::string s = "FAIL";
    for (const auto& v : violations) s += "\n  - " + v;
    return s;
}

ValidationReport validate(const Diagram& D) {
    ValidationReport rep;
    rep.faceCount = int(D.faces.size());
    rep.vertexCount = int(D.vertices.size());
    rep.edgeCount = int(D.edges.size());
    auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

    if (D.n < 2) bad("rank n must be at least 2");
    if (D.d < 1 || D.d > D.n) bad("need 1 <= d <= n");

    // structural: walks closed, every edge once per direction
    std::map<int, int> fwd, bwd;
    auto scan = [&](const Walk& w, const std::string& what) {
        if (w.empty()) {
            bad(what + " walk is empty");
            return;
        }
        int prev = D.edges.count(std::abs(w.back())) ? D.edge_head(w.back()) : 0;
        for (int s : w) {
            if (!D.edges.count(std::abs(s))) {
                bad(what + " references missing edge " + std::to_string(s));
                return;
            }
            if (D.edge_tail(s) != prev) {
                bad(what + " walk is not closed");
                return;
            }
            prev = D.edge_head(s);
            (s > 0 ? fwd : bwd)[std::abs(s)] += 1;
        }
    };
    for (const auto& [id, w] : D.faces) scan(w, "face " + std::to_string(id));
    scan(D.outer, "outer");
    for (const auto& [id, e] : D.edges) {
        if (fwd[id] != 1 || bwd[id] != 1)
            bad("edge " + std::to_string(id) + " is traversed " + std::to_string(fwd[id]) +
                " times forward and " + std::to_string(bwd[id]) + " backward");
        if (!D.vertices.count(e.tail) || !D.vertices.count(e.head))
            bad("edge " + std::to_string(id) + " has a missing endpoint");
        if (e.label.i > D.n || e.label.j > D.n) bad("edge label index exceeds n");
    }

    // Euler characteristic of the disk: V - E + (F+1) = 2
    int euler = rep.vertexCount - rep.edgeCount + rep.faceCount + 1;
    if (euler != 2) bad("Euler characteristic V-E+F+1 = " + std::to_string(euler) + ", want 2");

    // anchor
    if (!D.vertices.count(D.anchorVertex)) bad("anchor vertex missing");
    if (D.anchorLabel.d != D.d || D.anchorLabel.n != D.n)
        bad("anchor label has wrong dimensions");
    else if (!is_unimodular(D.anchorLabel))
        bad("anchor label is not unimodular");

    // face boundary words must be defining relators
    for (const auto& [id, w] : D.faces) {
        Word word = D.walk_word(w);
        auto g = try_canonical_geometric(word);
        if (!g || !is_relator(*g))
            bad("face " + std::to_string(id) + " boundary " + to_string(word) +
                " is not a defining relator");
    }

    // anchored labeling must propagate consistently
    if (rep.violations.empty()) {
        try {
            D.label_vertices();
        } catch (const std::exception& e) {
            bad(std::string("labeling: ") + e.what());
        }
    }
    return rep;
}

}  // namespace vkr
