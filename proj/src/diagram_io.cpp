#include "diagram_io.hpp"

#include <fstream>
#include <json.hpp>

namespace vkr {

using nlohmann::json;
using nlohmann::ordered_json;

Diagram parse_vkd(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("vkd: ") + e.what());
    }
    auto need = [&](const char* field) {
        if (!doc.contains(field)) throw ParseError(std::string("vkd: missing field '") + field + "'");
    };
    for (const char* f : {"n", "d", "mode", "vertices", "edges", "faces", "outer", "anchor"}) need(f);

    Diagram D;
    D.n = doc["n"].get<int>();
    D.d = doc["d"].get<int>();
    std::string mode = doc["mode"].get<std::string>();
    if (mode != "row" && mode != "col") throw ParseError("vkd: mode must be 'row' or 'col'");
    D.mode = mode == "row" ? Mode::Row : Mode::Col;

    for (const auto& v : doc["vertices"]) D.vertices.insert(v.get<int>());
    for (const auto& e : doc["edges"]) {
        DEdge ed;
        ed.id = e.at("id").get<int>();
        ed.tail = e.at("tail").get<int>();
        ed.head = e.at("head").get<int>();
        ed.label = parse_token(e.at("label").get<std::string>());
        if (D.edges.count(ed.id)) throw ParseError("vkd: duplicate edge id");
        D.edges[ed.id] = ed;
    }
    int fid = 1;
    for (const auto& f : doc["faces"]) {
        Walk w;
        for (const auto& s : f) w.push_back(s.get<int>());
        D.faces[fid++] = w;
    }
    for (const auto& s : doc["outer"]) D.outer.push_back(s.get<int>());

    const auto& anchor = doc["anchor"];
    if (!anchor.contains("vertex") || !anchor.contains("matrix"))
        throw ParseError("vkd: anchor needs 'vertex' and 'matrix'");
    D.anchorVertex = anchor["vertex"].get<int>();
    const auto& mat = anchor["matrix"];
    if (int(mat.size()) != D.d) throw ParseError("vkd: anchor matrix must have d rows");
    D.anchorLabel = CosetLabel(D.d, D.n);
    for (int r = 0; r < D.d; ++r) {
        if (int(mat[r].size()) != D.n) throw ParseError("vkd: anchor matrix must have n columns");
        for (int c = 0; c < D.n; ++c) D.anchorLabel.at(r, c) = mat[r][c].get<int64_t>();
    }
    return D;
}

namespace {

Walk canonical_rotation(const Walk& w) {
    if (w.empty()) return w;
    // rotate so the entry with the smallest |id| (preferring the forward
    // direction) comes first
    size_t best = 0;
    auto key = [&](int s) { return std::make_pair(std::abs(s), s < 0); };
    for (size_t k = 1; k < w.size(); ++k)
        if (key(w[k]) < key(w[best])) best = k;
    Walk out(w.begin() + best, w.end());
    out.insert(out.end(), w.begin(), w.begin() + best);
    return out;
}

}  // namespace

std::string serialize_vkd(const Diagram& D) {
    ordered_json doc;
    doc["n"] = D.n;
    doc["d"] = D.d;
    doc["mode"] = D.mode == Mode::Row ? "row" : "col";
    doc["vertices"] = std::vector<int>(D.vertices.begin(), D.vertices.end());

    // edges sorted by id; face walks canonically rotated and ordered
    ordered_json edges = ordered_json::array();
    for (const auto& [id, e] : D.edges) {
        ordered_json je;
        je["id"] = id;
        je["tail"] = e.tail;
        je["head"] = e.head;
        je["label"] = to_string(e.label);
        edges.push_back(je);
    }
    doc["edges"] = edges;

    std::vector<Walk> faces;
    for (const auto& [id, w] : D.faces) faces.push_back(canonical_rotation(w));
    std::sort(faces.begin(), faces.end());
    doc["faces"] = faces;
    doc["outer"] = canonical_rotation(D.outer);

    ordered_json anchor;
    anchor["vertex"] = D.anchorVertex;
    std::vector<std::vector<int64_t>> mat(D.d, std::vector<int64_t>(D.n));
    for (int r = 0; r < D.d; ++r)
        for (int c = 0; c < D.n; ++c) mat[r][c] = D.anchorLabel.at(r, c);
    anchor["matrix"] = mat;
    doc["anchor"] = anchor;
    return doc.dump(1) + "\n";
}

Diagram load_vkd(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_vkd(text);
}

void save_vkd(const Diagram& D, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_vkd(D);
}

}  // namespace vkr
