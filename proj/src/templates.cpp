#include "templates.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numeric>

namespace vkr {

using nlohmann::json;

Word MoveTemplate::host_word() const {
    Word w;
    for (auto it = hostEdges.rbegin(); it != hostEdges.rend(); ++it) w.push_back(it->letter);
    return w;
}

int MoveTemplate::max_abstract_index() const {
    int m = 0;
    for (const auto& e : hostEdges) m = std::max({m, e.letter.i, e.letter.j});
    for (const auto& [v, tok] : sideLetters) m = std::max({m, tok.i, tok.j});
    for (const auto& [c, s] : extraCoords) m = std::max(m, c);
    for (int c : traceCoords) m = std::max(m, c);
    if (kind != Corner) m = std::max({m, t.i, t.j});
    return m;
}

MoveTemplate parse_template(const std::string& text) {
    json doc = json::parse(text);
    MoveTemplate t;
    t.id = doc.at("id").get<std::string>();
    t.family = doc.value("family", "GA");
    t.hostType = doc.value("hostType", "");
    std::string ord = doc.value("order", "dim1");
    t.order = ord == "dim1"    ? OrderKind::Dim1
              : ord == "step1" ? OrderKind::Step1
              : ord == "step2" ? OrderKind::Step2
                               : OrderKind::Step3;
    t.mode = doc.value("mode", "row") == std::string("row") ? Mode::Row : Mode::Col;
    std::string kind = doc.value("kind", "corner");
    t.kind = kind == "commuting"     ? MoveTemplate::Commuting
             : kind == "conjugating" ? MoveTemplate::Conjugating
                                     : MoveTemplate::Corner;
    if (doc.contains("t")) t.t = parse_token(doc["t"].get<std::string>());
    if (doc.contains("hostEdges"))
        for (const auto& e : doc["hostEdges"]) {
            MoveTemplate::HostEdge he;
            he.from = e.at("from").get<std::string>();
            he.to = e.at("to").get<std::string>();
            he.letter = parse_token(e.at("letter").get<std::string>());
            t.hostEdges.push_back(he);
        }
    for (const auto& e : t.hostEdges) t.hostVertices.push_back(e.from);
    if (doc.contains("sideLetters"))
        for (auto& [k, v] : doc["sideLetters"].items())
            t.sideLetters.emplace(k, parse_token(v.get<std::string>()));
    if (doc.contains("traceCoords")) t.traceCoords = doc["traceCoords"].get<std::vector<int>>();
    if (doc.contains("extraCoords"))
        for (auto& [k, v] : doc["extraCoords"].items())
            t.extraCoords[std::stoi(k)] = v.get<std::string>();
    if (doc.contains("symbols")) t.symbols = doc["symbols"].get<std::vector<std::string>>();
    if (doc.contains("traces"))
        for (auto& [k, v] : doc["traces"].items())
            t.traces[k] = v.get<std::vector<std::string>>();
    if (doc.contains("predicate")) t.predicate = doc["predicate"].get<std::vector<std::string>>();
    if (doc.contains("maximal")) t.maximalAt = doc["maximal"].get<std::vector<std::string>>();
    if (doc.contains("vmaxCond"))
        for (const auto& pair : doc["vmaxCond"])
            t.vmaxCond.emplace_back(std::stoi(pair[0].get<std::string>()),
                                    pair[1].get<std::string>());
    if (doc.contains("sideCells")) t.sideCells = doc["sideCells"].get<std::vector<std::string>>();
    t.notes = doc.value("notes", "");
    t.dim = doc.value("dim", 1);
    t.k = doc.value("k", 1);
    return t;
}

MoveTemplate load_template(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open template " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return parse_template(text);
    } catch (const std::exception& e) {
        throw std::runtime_error("template " + path + ": " + e.what());
    }
}

namespace {
Token swap_rl(const Token& t) {
    if (t.kind == Kind::R) return Token(Kind::L, t.i, t.j, t.exp);
    if (t.kind == Kind::L) return Token(Kind::R, t.i, t.j, t.exp);
    return t;
}
}  // namespace

MoveTemplate mirror_template(const MoveTemplate& t) {
    MoveTemplate m = t;
    m.id = t.id + "-rl";
    m.t = swap_rl(t.t);
    for (auto& e : m.hostEdges) e.letter = swap_rl(e.letter);
    for (auto& [v, tok] : m.sideLetters) tok = swap_rl(tok);
    if (!m.hostType.empty() && (m.hostType.back() == 'R' || m.hostType.back() == 'L'))
        m.hostType.back() = m.hostType.back() == 'R' ? 'L' : 'R';
    return m;
}

std::vector<MoveTemplate> load_catalog(const std::string& dir, bool withMirrors) {
    std::vector<MoveTemplate> out;
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) out.push_back(load_template(f));
    if (withMirrors) {
        size_t base = out.size();
        for (size_t k = 0; k < base; ++k) {
            MoveTemplate m = mirror_template(out[k]);
            bool same = m.host_word() == out[k].host_word() && m.sideLetters == out[k].sideLetters &&
                        m.t == out[k].t;
            if (!same) out.push_back(std::move(m));
        }
    }
    return out;
}

// ---------- symbolic expressions ----------

namespace {

struct Expr {
    std::map<std::string, int> coeff;
};

Expr parse_expr(const std::string& s) {
    Expr e;
    int sign = 1;
    std::vector<int> signStack;
    size_t i = 0;
    int pending = 1;
    while (i < s.size()) {
        char c = s[i];
        if (c == ' ') {
            ++i;
        } else if (c == '+') {
            pending = 1;
            ++i;
        } else if (c == '-') {
            pending = -1;
            ++i;
        } else if (c == '(') {
            signStack.push_back(sign);
            sign *= pending;
            pending = 1;
            ++i;
        } else if (c == ')') {
            if (signStack.empty()) throw std::runtime_error("unbalanced ')' in " + s);
            sign = signStack.back();
            signStack.pop_back();
            ++i;
        } else if (c == '0') {
            pending = 1;
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                name += s[i++];
            e.coeff[name] += sign * pending;
            if (e.coeff[name] == 0) e.coeff.erase(name);
            pending = 1;
        } else {
            throw std::runtime_error(std::string("bad character '") + c + "' in expression " + s);
        }
    }
    return e;
}

using Vec = std::vector<int64_t>;

Vec vadd(const Vec& a, const Vec& b, int64_t scale) {
    Vec out = a;
    for (size_t k = 0; k < out.size(); ++k) out[k] += scale * b[k];
    return out;
}

std::optional<Vec> eval_expr(const Expr& e, const std::map<std::string, Vec>& vals, int d) {
    Vec out(d, 0);
    for (auto& [name, c] : e.coeff) {
        auto it = vals.find(name);
        if (it == vals.end()) return std::nullopt;
        out = vadd(out, it->second, c);
    }
    return out;
}

bool solve_symbols(std::vector<std::pair<Expr, Vec>> eqs, const std::vector<std::string>& symbols,
                   int d, std::map<std::string, Vec>& out) {
    out.clear();
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto& [e, val] : eqs) {
            std::string unknown;
            int unknownCoeff = 0;
            Vec rest = val;
            bool multi = false;
            for (auto& [name, c] : e.coeff) {
                auto it = out.find(name);
                if (it != out.end()) {
                    rest = vadd(rest, it->second, -c);
                } else if (unknown.empty()) {
                    unknown = name;
                    unknownCoeff = c;
                } else {
                    multi = true;
                }
            }
            if (multi || unknown.empty()) continue;
            if (unknownCoeff != 1 && unknownCoeff != -1) continue;
            Vec v(d);
            for (int r = 0; r < d; ++r) v[r] = rest[r] * unknownCoeff;
            out[unknown] = v;
            progress = true;
        }
    }
    for (auto& [e, val] : eqs) {
        auto got = eval_expr(e, out, d);
        if (!got || !(*got == val)) return false;
    }
    for (const auto& s : symbols)
        if (!out.count(s)) return false;
    return true;
}

}  // namespace

// ---------- alignment ----------

namespace {

struct SigmaSolver {
    int n;
    std::map<int, int> p;     // abstract -> concrete
    std::map<int, int> pinv;  // concrete -> abstract
    std::map<int, int> sign;  // abstract -> +-1
    std::vector<std::tuple<int, int, int>> products;

    explicit SigmaSolver(int n_) : n(n_) {}

    bool map_index(int a, int c) {
        auto it = p.find(a);
        if (it != p.end()) return it->second == c;
        auto jt = pinv.find(c);
        if (jt != pinv.end()) return false;
        p[a] = c;
        pinv[c] = a;
        return true;
    }
    bool set_sign(int a, int s) {
        auto it = sign.find(a);
        if (it != sign.end()) return it->second == s;
        sign[a] = s;
        return true;
    }

    bool match_nielsen(const Token& A, const Token& C) {
        if (C.kind == Kind::W) return false;
        int epsI = (C.kind == A.kind) ? 1 : -1;
        if (!map_index(A.i, C.i) || !map_index(A.j, C.j)) return false;
        if (!set_sign(A.i, epsI)) return false;
        int prod = C.exp * A.exp;  // eps_i * eps_j
        return set_sign(A.j, prod * epsI);
    }

    bool match_w(const Token& A, const Token& C, bool swapped) {
        int ci = swapped ? C.j : C.i;
        int cj = swapped ? C.i : C.j;
        int prod = C.exp * A.exp * (swapped ? -1 : 1);
        if (!map_index(A.i, ci) || !map_index(A.j, cj)) return false;
        products.emplace_back(A.i, A.j, prod);
        return true;
    }

    bool finish() {
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& [x, y, s] : products) {
                bool hx = sign.count(x), hy = sign.count(y);
                if (hx && hy) {
                    if (sign[x] * sign[y] != s) return false;
                } else if (hx) {
                    sign[y] = s * sign[x];
                    progress = true;
                } else if (hy) {
                    sign[x] = s * sign[y];
                    progress = true;
                }
            }
        }
        for (auto& [x, y, s] : products)
            if (!sign.count(x)) {
                sign[x] = 1;
                sign[y] = s;
            }
        return true;
    }

    SignedPerm build() const {
        SignedPerm out = SignedPerm::identity(n);
        std::vector<bool> taken(n + 1, false);
        for (auto& [a, c] : p)
            if (a <= n) taken[c] = true;
        int next = 1;
        for (int a = 1; a <= n; ++a) {
            auto it = p.find(a);
            if (it != p.end()) {
                out.perm[a - 1] = it->second;
            } else {
                while (next <= n && taken[next]) ++next;
                out.perm[a - 1] = next;
                taken[next] = true;
            }
            auto st = sign.find(a);
            out.signs[a - 1] = st == sign.end() ? 1 : st->second;
        }
        return out;
    }
};

}  // namespace

std::vector<Binding> align_template(const Diagram& D, int face, const MoveTemplate& tpl,
                                    std::vector<int>* freeIndices) {
    std::vector<Binding> out;
    const Walk& walk = D.faces.at(face);
    size_t m = walk.size();
    if (m != tpl.hostEdges.size()) return out;

    std::vector<size_t> wpos;
    for (size_t q = 0; q < m; ++q)
        if (tpl.hostEdges[q].letter.kind == Kind::W) wpos.push_back(q);

    auto tryAlign = [&](const Walk& w, bool mirrored) {
        auto wv = D.walk_vertices(w);
        for (size_t rot = 0; rot < m; ++rot) {
            for (int mask = 0; mask < (1 << wpos.size()); ++mask) {
                SigmaSolver solver(D.n);
                bool ok = true;
                for (size_t q = 0; q < m && ok; ++q) {
                    Token A = tpl.hostEdges[q].letter;
                    Token C = D.edge_token(w[(rot + q) % m]);
                    if (A.kind == Kind::W) {
                        if (C.kind != Kind::W) {
                            ok = false;
                            break;
                        }
                        size_t bi = std::find(wpos.begin(), wpos.end(), q) - wpos.begin();
                        ok = solver.match_w(A, C, (mask >> bi) & 1);
                    } else {
                        ok = solver.match_nielsen(A, C);
                    }
                }
                if (!ok || !solver.finish()) continue;
                Binding b;
                b.rotation = int(rot);
                b.mirrored = mirrored;
                b.sigma = solver.build();
                for (size_t q = 0; q < m; ++q)
                    b.vertexMap[tpl.hostVertices[q]] = wv[(rot + q) % m];
                if (freeIndices) {
                    freeIndices->clear();
                    for (int a = 1; a <= tpl.max_abstract_index(); ++a)
                        if (!solver.p.count(a)) freeIndices->push_back(a);
                }
                out.push_back(std::move(b));
                if (out.size() > 8) return;
            }
        }
    };
    tryAlign(walk, false);
    Walk rwalk;
    for (auto it = walk.rbegin(); it != walk.rend(); ++it) rwalk.push_back(-*it);
    tryAlign(rwalk, true);
    return out;
}

// ---------- predicates ----------

namespace {

int vec_depth(const Vec& v) {
    for (int r = int(v.size()) - 1; r >= 0; --r)
        if (v[r] != 0) return r + 1;
    return 0;
}

struct AtomCtx {
    int d = 1, k = 1;
    int64_t M = 0;
    std::map<std::string, Vec> sym;
};

bool eval_atom(const std::string& atom, const AtomCtx& ctx, std::string* err) {
    auto open = atom.find('(');
    if (open == std::string::npos || atom.back() != ')') {
        *err = "malformed atom " + atom;
        return false;
    }
    std::string name = atom.substr(0, open);
    std::string argstr = atom.substr(open + 1, atom.size() - open - 2);
    Expr e = parse_expr(argstr);
    auto val = eval_expr(e, ctx.sym, ctx.d);
    if (!val) {
        *err = "unknown symbol in " + atom;
        return false;
    }
    const Vec& v = *val;
    int64_t xk = v[ctx.k - 1];
    int depth = vec_depth(v);
    bool kcol = depth <= ctx.k;
    if (name == "maximal") return iabs(xk) == ctx.M;
    if (name == "nonmaximal") return iabs(xk) < ctx.M;
    if (name == "good") return kcol && xk != 0 && iabs(xk) < ctx.M;
    if (name == "goodpos") return kcol && xk > 0 && xk < ctx.M;
    if (name == "bad") return !(kcol && xk != 0 && iabs(xk) < ctx.M);
    if (name == "zero") return depth == 0;
    if (name == "nonzero") return depth != 0;
    if (name == "pos") return xk > 0;
    if (name == "neg") return xk < 0;
    if (name == "maxpos") return xk == ctx.M;
    if (name == "restricted") return depth > ctx.k;
    if (name == "unrestricted") return depth <= ctx.k;
    *err = "unknown atom " + name;
    return false;
}

}  // namespace

PredicateResult check_predicate(const Diagram& D, const MoveTemplate& tpl, const Binding& b) {
    PredicateResult res;
    auto labels = D.label_vertices();
    AtomCtx ctx;
    ctx.d = D.d;
    ctx.k = tpl.k;
    for (auto& [v, z] : labels) ctx.M = std::max(ctx.M, z.linf_row(tpl.k - 1));

    auto observe = [&](int concreteVertex, int abstractCoord) {
        int col = b.sigma.perm[abstractCoord - 1];
        int sgn = b.sigma.signs[abstractCoord - 1];
        const CosetLabel& z = labels.at(concreteVertex);
        Vec v(D.d);
        for (int r = 0; r < D.d; ++r) v[r] = sgn * z.at(r, col - 1);
        return v;
    };

    std::vector<std::pair<Expr, Vec>> eqs;
    for (auto& [vname, exprs] : tpl.traces) {
        auto it = b.vertexMap.find(vname);
        if (it == b.vertexMap.end()) continue;
        for (size_t q = 0; q < exprs.size() && q < tpl.traceCoords.size(); ++q)
            eqs.emplace_back(parse_expr(exprs[q]), observe(it->second, tpl.traceCoords[q]));
    }
    for (auto& [coord, sname] : tpl.extraCoords) {
        Expr e;
        e.coeff[sname] = 1;
        eqs.emplace_back(e, observe(b.vertexMap.at(tpl.hostVertices[0]), coord));
    }
    if (!solve_symbols(eqs, tpl.symbols, D.d, ctx.sym)) {
        res.failedAtom = "traces";
        return res;
    }
    res.symbolValues = ctx.sym;

    for (const auto& atom : tpl.predicate) {
        std::string err;
        bool pass;
        if (atom.rfind("any:", 0) == 0) {
            pass = false;
            std::string rest = atom.substr(4);
            size_t pos = 0;
            while (pos != std::string::npos && !pass) {
                size_t bar = rest.find('|', pos);
                std::string one = rest.substr(pos, bar == std::string::npos ? bar : bar - pos);
                pass = eval_atom(one, ctx, &err);
                pos = bar == std::string::npos ? bar : bar + 1;
            }
        } else {
            pass = eval_atom(atom, ctx, &err);
        }
        if (!pass) {
            res.failedAtom = err.empty() ? atom : err;
            return res;
        }
    }

    auto maxv = maximal_vertices(D, tpl.order, tpl.k);
    std::set<int> maxSet(maxv.begin(), maxv.end());
    std::vector<std::string> candidates = tpl.maximalAt.empty() ? tpl.hostVertices : tpl.maximalAt;
    for (const auto& vn : candidates) {
        auto it = b.vertexMap.find(vn);
        if (it == b.vertexMap.end() || !maxSet.count(it->second)) continue;
        bool condOk = true;
        for (auto& [coord, cond] : tpl.vmaxCond) {
            Vec v = observe(it->second, coord);
            int64_t xk = v[ctx.k - 1];
            bool kcol = vec_depth(v) <= ctx.k;
            if (cond == "maxpos")
                condOk = condOk && xk == ctx.M;
            else if (cond == "goodpos")
                condOk = condOk && kcol && xk > 0 && xk < ctx.M;
            else if (cond == "good")
                condOk = condOk && kcol && xk != 0 && iabs(xk) < ctx.M;
            else
                condOk = false;
        }
        if (condOk) {
            res.maximalVertex = it->second;
            break;
        }
    }
    if (!res.maximalVertex) {
        res.failedAtom = "maximal vertex position";
        return res;
    }
    res.ok = true;
    return res;
}

MoveResult apply_template(const Diagram& D, int face, const MoveTemplate& tpl, const Binding& b) {
    // the current maximal label steers the inner fill below it
    std::optional<CosetLabel> bound;
    try {
        auto maxv = maximal_vertices(D, tpl.order, tpl.k);
        if (!maxv.empty()) bound = D.label_vertices().at(maxv.front());
    } catch (const std::exception&) {
    }
    const CosetLabel* below = bound ? &*bound : nullptr;
    switch (tpl.kind) {
        case MoveTemplate::Commuting:
            return commuting_map(D, face, act(b.sigma, tpl.t));
        case MoveTemplate::Conjugating:
            return conjugating_map(D, face, act(b.sigma, tpl.t), tpl.order, tpl.k, below);
        case MoveTemplate::Corner: {
            std::map<int, Token> side;
            for (auto& [vname, tok] : tpl.sideLetters) {
                auto it = b.vertexMap.find(vname);
                if (it == b.vertexMap.end())
                    throw PatternMismatch("side letter for unmapped vertex " + vname);
                side[it->second] = act(b.sigma, tok);
            }
            return corner_map(D, face, side, tpl.order, tpl.k, below);
        }
    }
    throw PatternMismatch("unknown template kind");
}

std::optional<Instance> sample_instance(const MoveTemplate& tpl, std::mt19937& rng, int n,
                                        int64_t entryBound, int maxTries) {
    int maxAbs = tpl.max_abstract_index();
    if (maxAbs > n) return std::nullopt;
    int d = tpl.dim;
    std::uniform_int_distribution<int64_t> entry(-entryBound, entryBound);

    for (int attempt = 0; attempt < maxTries; ++attempt) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 1);
        std::shuffle(idx.begin(), idx.end(), rng);
        SignedPerm sigma = SignedPerm::identity(n);
        std::vector<bool> taken(n + 1, false);
        for (int a = 0; a < maxAbs; ++a) {
            sigma.perm[a] = idx[a];
            taken[idx[a]] = true;
        }
        {
            int next = 1;
            for (int a = maxAbs; a < n; ++a) {
                while (taken[next]) ++next;
                sigma.perm[a] = next;
                taken[next] = true;
            }
        }

        std::uniform_int_distribution<int64_t> m0dist(2, std::min<int64_t>(6, entryBound));
        int64_t M0 = m0dist(rng);
        auto draw = [&]() -> int64_t {
            switch (rng() % 8) {
                case 0: return 0;
                case 1: return M0;
                case 2: return -M0;
                case 3: return entry(rng);
                default: {
                    std::uniform_int_distribution<int64_t> inner(-(M0 - 1), M0 - 1);
                    return inner(rng);
                }
            }
        };
        // bias symbols named by simple unary atoms so the predicate is hit
        auto unary = [&](const char* name) {
            std::set<std::string> out;
            std::string prefix = std::string(name) + "(";
            for (const auto& atom : tpl.predicate)
                if (atom.rfind(prefix, 0) == 0 && atom.back() == ')') {
                    std::string arg = atom.substr(prefix.size(), atom.size() - prefix.size() - 1);
                    if (std::all_of(arg.begin(), arg.end(),
                                    [](char c) { return std::isalnum(c) || c == '_'; }))
                        out.insert(arg);
                }
            return out;
        };
        auto zeros = unary("zero");
        auto goodpos = unary("goodpos");
        auto restricted = unary("restricted");
        std::map<std::string, Vec> sym;
        for (const auto& s : tpl.symbols) {
            Vec v(d, 0);
            for (int r = 0; r < d; ++r) v[r] = draw();
            if (zeros.count(s)) v.assign(d, 0);
            if (goodpos.count(s)) {
                std::uniform_int_distribution<int64_t> inner(1, std::max<int64_t>(1, M0 - 1));
                v[tpl.k - 1] = inner(rng);
                for (int r = tpl.k; r < d; ++r) v[r] = 0;  // keep it a k-column
            }
            if (restricted.count(s) && d > tpl.k && v[d - 1] == 0) v[d - 1] = M0;
            sym[s] = v;
        }

        CosetLabel anchor(d, n);
        auto put = [&](int abstractCoord, const Vec& val) {
            int col = sigma.perm[abstractCoord - 1];
            for (int r = 0; r < d; ++r) anchor.at(r, col - 1) = val[r];
        };
        if (tpl.hostVertices.empty()) return std::nullopt;
        auto it0 = tpl.traces.find(tpl.hostVertices[0]);
        if (it0 == tpl.traces.end()) return std::nullopt;
        bool bad = false;
        for (size_t q = 0; q < tpl.traceCoords.size(); ++q) {
            auto val = eval_expr(parse_expr(it0->second[q]), sym, d);
            if (!val) {
                bad = true;
                break;
            }
            put(tpl.traceCoords[q], *val);
        }
        if (bad) continue;
        for (auto& [coord, sname] : tpl.extraCoords) put(coord, sym.at(sname));
        {
            int r = 0;
            for (int c = 1; c <= n && r < d; ++c) {
                bool used = false;
                for (int a = 0; a < maxAbs; ++a)
                    if (sigma.perm[a] == c) used = true;
                if (used) continue;
                anchor.at(r, c - 1) = 1;
                ++r;
            }
            if (r < d) continue;
        }

        Instance inst;
        inst.host.n = n;
        inst.host.d = d;
        inst.host.mode = tpl.mode;
        std::map<std::string, int> vmap;
        for (const auto& vn : tpl.hostVertices)
            if (!vmap.count(vn)) vmap[vn] = inst.host.fresh_vertex();
        Walk walk;
        for (const auto& he : tpl.hostEdges) {
            Token letter = act(sigma, he.letter);
            int from = vmap.at(he.from), to = vmap.at(he.to);
            if (letter.exp == 1)
                walk.push_back(inst.host.add_edge(from, to, letter));
            else
                walk.push_back(-inst.host.add_edge(to, from, letter.inverse()));
        }
        inst.face = inst.host.add_face(walk);
        for (auto it = walk.rbegin(); it != walk.rend(); ++it) inst.host.outer.push_back(-*it);
        inst.host.anchorVertex = vmap.at(tpl.hostVertices[0]);
        inst.host.anchorLabel = anchor;

        std::map<int, CosetLabel> labels;
        try {
            labels = inst.host.label_vertices();
        } catch (const InconsistentLabeling&) {
            continue;
        }
        int64_t maxEntry = 0;
        for (auto& [v, z] : labels) maxEntry = std::max(maxEntry, z.linf());
        if (maxEntry > entryBound) continue;

        inst.binding.sigma = sigma;
        for (auto& [vn, v] : vmap) inst.binding.vertexMap[vn] = v;
        auto pr = check_predicate(inst.host, tpl, inst.binding);
        if (!pr.ok) {
            if (std::getenv("VKR_SAMPLE_DEBUG"))
                fprintf(stderr, "reject: %s\n", pr.failedAtom.c_str());
            continue;
        }
        inst.maximalVertex = pr.maximalVertex;
        return inst;
    }
    return std::nullopt;
}

}  // namespace vkr
