#include "engine.hpp"

#include "corpus.hpp"

#include <sstream>

namespace vkr {

std::string ReductionTrace::to_json() const {
    std::ostringstream os;
    os << "[";
    for (size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        if (k) os << ",";
        os << "\n {\"move\":\"" << e.move << "\",\"order\":\"" << e.order << "\",\"vertex\":"
           << e.vertex << ",\"eliminated\":" << (e.eliminated ? "true" : "false")
           << ",\"verified\":" << (e.verified ? "true" : "false") << "}";
    }
    os << "\n]\n";
    return os.str();
}

namespace {
const char* order_name(OrderKind o) {
    switch (o) {
        case OrderKind::Dim1: return "dim1";
        case OrderKind::Step1: return "step1";
        case OrderKind::Step2: return "step2";
        case OrderKind::Step3: return "step3";
    }
    return "?";
}
}  // namespace

Engine::Engine(Diagram d, EngineConfig cfg) : D_(std::move(d)), cfg_(cfg), budget_(cfg.watchdog) {
    catalog_ = load_catalog(templates_dir(), true);
}

void Engine::tick() {
    if (--budget_ < 0) throw WatchdogExpired("move budget exhausted");
}

void Engine::commit(Diagram next, const std::string& move, int vertex, bool eliminated) {
    TraceEntry e;
    e.move = move;
    e.order = order_name(cfg_.order);
    e.vertex = vertex;
    e.eliminated = eliminated;
    e.verified = true;
    trace_.entries.push_back(std::move(e));
    D_ = std::move(next);
}

bool Engine::ksafe(const Diagram& before, const Diagram& after, int k) const {
    auto lb = before.label_vertices();
    auto la = after.label_vertices();
    for (int r = k; r < before.d; ++r) {
        int64_t nb = 0, na = 0;
        for (auto& [v, z] : lb) nb = std::max(nb, z.linf_row(r));
        for (auto& [v, z] : la) na = std::max(na, z.linf_row(r));
        if (na > nb) return false;
    }
    int wb = 0, wa = 0;
    bool ub = true, ua = true;
    for (auto& [v, z] : lb) {
        wb = std::max(wb, weak_defect(z, k));
        ub = ub && is_k_unimodular(z, k);
    }
    for (auto& [v, z] : la) {
        wa = std::max(wa, weak_defect(z, k));
        ua = ua && is_k_unimodular(z, k);
    }
    if (wa > wb) return false;
    if (ub && !ua) return false;
    return true;
}

std::vector<std::pair<Token, Token>> Engine::commuting_candidates(int v, const std::set<int>& avoid,
                                                                  OrderKind order, int k) {
    std::vector<std::pair<Token, Token>> out;
    auto labels = D_.label_vertices();
    const CosetLabel& z = labels.at(v);
    int kr = k - 1;
    auto push_pair = [&](int i, int j) {
        out.emplace_back(R(i, j), R(i, j, -1));
        out.emplace_back(R(j, i), R(j, i, -1));
        out.emplace_back(L(i, j), L(i, j, -1));
        out.emplace_back(L(j, i), L(j, i, -1));
    };
    std::vector<int> maximal, good, zero, rest;
    int64_t M = 0;
    for (auto& [w, zl] : labels) M = std::max(M, zl.linf_row(kr));
    for (int c = 1; c <= D_.n; ++c) {
        if (avoid.count(c)) continue;
        int64_t x = z.at(kr, c - 1);
        int depth = col_depth(z, c - 1);
        if (iabs(x) == M && M > 0)
            maximal.push_back(c);
        else if (x != 0 && depth <= k)
            good.push_back(c);
        else if (depth == 0)
            zero.push_back(c);
        else
            rest.push_back(c);
    }
    auto take = [&](const std::vector<int>& a, const std::vector<int>& b, size_t cap) {
        size_t added = 0;
        for (int i : a) {
            for (int j : b) {
                if (i == j) continue;
                push_pair(i, j);
                if (++added >= cap) return;
            }
            if (added >= cap) return;
        }
    };
    if (maximal.size() >= 2) take(maximal, maximal, 4);
    take(good, zero, 4);
    take(good, good, 4);
    take(maximal, good, 4);
    take(good, rest, 2);
    take(zero, rest, 2);
    (void)order;
    return out;
}

bool Engine::try_gallery_commuting(int v, OrderKind order, int k,
                                   const std::function<bool(const Diagram&)>& extraCheck,
                                   const std::vector<std::pair<Token, Token>>& candidatePairs) {
    int deg = int(D_.faces_at(v).size());
    if (deg == 0) return false;
    int len = std::min(3, deg);
    std::vector<Gallery> galleries;
    if (deg <= 3) {
        auto fg = full_gallery_at(D_, v);
        if (fg) galleries.push_back(*fg);
    }
    for (auto& g : galleries_at(D_, v, len)) {
        galleries.push_back(g);
        if (galleries.size() > 6) break;
    }
    for (const auto& g : galleries) {
        std::set<int> supp;
        for (int f : g.cells)
            for (int s : D_.support_of_face(f)) supp.insert(s);
        for (auto& [t1, t2] : candidatePairs) {
            for (const Token& t : {t1, t2}) {
                if (supp.count(t.i) || supp.count(t.j)) continue;
                try {
                    auto res = gallery_map_uniform(D_, g, t);
                    auto rc = is_reduction(D_, v, res.diagram, order, k);
                    if (!rc.ok) continue;
                    if (extraCheck && !extraCheck(res.diagram)) continue;
                    bool gone = !res.diagram.vertices.count(v);
                    commit(std::move(res.diagram),
                           "gallery C(" + to_string(t) + ") x" + std::to_string(g.cells.size()) +
                               " at " + std::to_string(v),
                           v, gone);
                    return true;
                } catch (const std::exception&) {
                }
            }
        }
    }
    return false;
}

bool Engine::try_single_cell(int v, OrderKind order, int k) {
    auto labels = D_.label_vertices();
    const CosetLabel& zv = labels.at(v);
    int kr = k - 1;
    int64_t M = 0;
    for (auto& [w, zl] : labels) M = std::max(M, zl.linf_row(kr));

    for (int f : D_.faces_at(v)) {
        const Walk& fwWalk = D_.faces.at(f);
        std::set<int> fsupp = D_.support_of_face(f);
        for (const auto& tpl : catalog_) {
            // the classification anchors index 1, but the applicable template
            // depends on where the good/zero columns sit; alignment decides
            if (tpl.hostEdges.size() != fwWalk.size()) continue;
            if ((tpl.order == OrderKind::Dim1) != (order == OrderKind::Dim1)) continue;
            std::vector<int> freeIdx;
            auto aligns = align_template(D_, f, tpl, &freeIdx);
            for (auto& b : aligns) {
                std::vector<int> pool;
                for (int c = 1; c <= D_.n; ++c) {
                    bool used = false;
                    for (int a = 1; a <= tpl.max_abstract_index(); ++a)
                        if (b.sigma.perm[a - 1] == c &&
                            std::find(freeIdx.begin(), freeIdx.end(), a) == freeIdx.end())
                            used = true;
                    if (!used && !fsupp.count(c)) pool.push_back(c);
                }
                std::stable_sort(pool.begin(), pool.end(), [&](int a, int c) {
                    auto cls = [&](int col) {
                        int64_t x = zv.at(kr, col - 1);
                        if (x != 0 && iabs(x) < M && col_depth(zv, col - 1) <= k) return 0;
                        if (col_depth(zv, col - 1) == 0) return 1;
                        return 2;
                    };
                    return cls(a) < cls(c);
                });
                size_t tried = 0;
                for (int cand : pool) {
                    if (++tried > 6) break;
                    Binding bb = b;
                    for (int a : freeIdx) {
                        for (int q = 0; q < D_.n; ++q)
                            if (bb.sigma.perm[q] == cand) bb.sigma.perm[q] = bb.sigma.perm[a - 1];
                        bb.sigma.perm[a - 1] = cand;
                        bb.sigma.signs[a - 1] = zv.at(kr, cand - 1) < 0 ? -1 : 1;
                    }
                    auto pr = check_predicate(D_, tpl, bb);
                    if (!pr.ok || pr.maximalVertex != v) continue;
                    try {
                        auto res = apply_template(D_, f, tpl, bb);
                        auto rc = is_reduction(D_, v, res.diagram, order, k);
                        if (!rc.ok) continue;
                        commit(std::move(res.diagram),
                               "template " + tpl.id + " at cell " + std::to_string(f), v, false);
                        return true;
                    } catch (const std::exception&) {
                    }
                }
            }
        }
    }
    return false;
}

void Engine::eliminate_vertex_dim1(int v) {
    if (!D_.is_interior(v)) throw StrategyExhausted("vertex is not interior");
    cfg_.order = OrderKind::Dim1;
    while (D_.vertices.count(v)) {
        tick();
        std::set<int> avoid;
        auto pairs = commuting_candidates(v, avoid, OrderKind::Dim1, 1);
        if (try_gallery_commuting(v, OrderKind::Dim1, 1, nullptr, pairs)) continue;
        if (try_single_cell(v, OrderKind::Dim1, 1)) continue;
        throw StrategyExhausted("no verified reduction at vertex " + std::to_string(v));
    }
}

void Engine::normalize_dim1() {
    if (D_.d != 1) throw std::invalid_argument("normalize_dim1 needs d = 1");
    cfg_.order = OrderKind::Dim1;
    while (true) {
        tick();
        auto labels = D_.label_vertices();
        int target = 0;
        for (int v : maximal_vertices(D_, OrderKind::Dim1, 1)) {
            const CosetLabel& z = labels.at(v);
            if (z.linf() > 1 || z.l1_row(0) > 9) {
                target = v;
                break;
            }
        }
        if (!target) {
            bool done = true;
            for (auto& [v, z] : labels)
                if (z.linf() > 1 || z.l1_row(0) > 9) {
                    done = false;
                    target = v;
                }
            if (done) return;
        }
        if (!D_.is_interior(target))
            throw StrategyExhausted("boundary vertex violates the norm bound");
        eliminate_vertex_dim1(target);
    }
}

void Engine::bound_defect_pass(int k) {
    cfg_.order = OrderKind::Step1;
    while (true) {
        tick();
        auto labels = D_.label_vertices();
        int target = 0, bestDef = -1;
        for (auto& [v, z] : labels) {
            int def = defect(z, k);
            if (def > weak_defect(z, k) + cfg_.C && def > bestDef) {
                bestDef = def;
                target = v;
            }
        }
        if (!target) return;
        if (!D_.is_interior(target)) throw StrategyExhausted("irregular boundary vertex");
        const CosetLabel& zv = labels.at(target);
        bool moved = false;
        int deg = int(D_.faces_at(target).size());
        std::vector<Gallery> gs;
        if (deg <= 3) {
            auto fg = full_gallery_at(D_, target);
            if (fg) gs.push_back(*fg);
        }
        for (auto& g : galleries_at(D_, target, std::min(3, deg))) gs.push_back(g);
        for (auto& g : gs) {
            std::set<int> supp;
            for (int f : g.cells)
                for (int s : D_.support_of_face(f)) supp.insert(s);
            for (int i = 1; i <= D_.n && !moved; ++i)
                for (int j = 1; j <= D_.n && !moved; ++j) {
                    if (i == j || supp.count(i) || supp.count(j)) continue;
                    if (col_depth(zv, i - 1) <= k || col_depth(zv, j - 1) <= k) continue;
                    if (!sim_k(zv, i - 1, j - 1, k)) continue;
                    for (const Token& t : {R(i, j), R(i, j, -1), R(j, i), R(j, i, -1)}) {
                        try {
                            auto res = gallery_map_uniform(D_, g, t);
                            auto rc = is_reduction(D_, target, res.diagram, OrderKind::Step1, k);
                            if (!rc.ok) continue;
                            if (!ksafe(D_, res.diagram, k)) continue;
                            commit(std::move(res.diagram),
                                   "defect C(" + to_string(t) + ") at " + std::to_string(target),
                                   target, !res.diagram.vertices.count(target));
                            moved = true;
                            break;
                        } catch (const std::exception&) {
                        }
                    }
                }
            if (moved) break;
        }
        if (!moved)
            throw StrategyExhausted("no k-safe defect move at vertex " + std::to_string(target));
    }
}

void Engine::step3_pass(int k) {
    cfg_.order = OrderKind::Step3;
    int bound = D_.d - k + cfg_.C + 1;
    while (true) {
        tick();
        auto labels = D_.label_vertices();
        int target = 0, bestDef = -1;
        for (auto& [v, z] : labels) {
            int def = defect(z, k - 1);
            if (def > bound && def > bestDef) {
                bestDef = def;
                target = v;
            }
        }
        if (!target) return;
        if (!D_.is_interior(target)) throw StrategyExhausted("deep boundary vertex");
        const CosetLabel& zv = labels.at(target);
        bool moved = false;
        int deg = int(D_.faces_at(target).size());
        std::vector<Gallery> gs;
        if (deg <= 3) {
            auto fg = full_gallery_at(D_, target);
            if (fg) gs.push_back(*fg);
        }
        for (auto& g : galleries_at(D_, target, std::min(3, deg))) gs.push_back(g);
        for (auto& g : gs) {
            std::set<int> supp;
            for (int f : g.cells)
                for (int s : D_.support_of_face(f)) supp.insert(s);
            for (int i = 1; i <= D_.n && !moved; ++i)
                for (int j = 1; j <= D_.n && !moved; ++j) {
                    if (i == j || supp.count(i) || supp.count(j)) continue;
                    int di = col_depth(zv, i - 1), dj = col_depth(zv, j - 1);
                    if (di != dj || di < k) continue;
                    for (const Token& t : {R(i, j), R(i, j, -1), R(j, i), R(j, i, -1)}) {
                        try {
                            auto res = gallery_map_uniform(D_, g, t);
                            auto la = res.diagram.label_vertices();
                            bool ok = true;
                            Step3Norm nv = Step3Norm::of(zv, k);
                            for (int w : res.diagram.vertices) {
                                if (D_.vertices.count(w)) continue;
                                if (cmp_step3(Step3Norm::of(la.at(w), k), nv) != Cmp::Less)
                                    ok = false;
                                if (is_k_unimodular(zv, k - 1) && !is_k_unimodular(la.at(w), k - 1))
                                    ok = false;
                            }
                            if (!ok) continue;
                            commit(std::move(res.diagram),
                                   "step3 C(" + to_string(t) + ") at " + std::to_string(target),
                                   target, !res.diagram.vertices.count(target));
                            moved = true;
                            break;
                        } catch (const std::exception&) {
                        }
                    }
                }
            if (moved) break;
        }
        if (!moved) throw StrategyExhausted("no step-3 move at vertex " + std::to_string(target));
    }
}

void Engine::hdim_pipeline() {
    if (D_.n - D_.d < cfg_.C * cfg_.C + 6 * cfg_.C + 3)
        throw StrategyExhausted("pipeline requires d <= n - (C^2+6C+3)");
    for (int k = D_.d; k >= 1; --k) {
        while (true) {
            tick();
            auto labels = D_.label_vertices();
            int64_t M = 0;
            for (auto& [v, z] : labels) M = std::max(M, z.linf_row(k - 1));
            if (M <= 1) break;
            bool irregular = false;
            for (auto& [v, z] : labels)
                if (defect(z, k) > weak_defect(z, k) + cfg_.C) irregular = true;
            if (irregular) {
                bound_defect_pass(k);
                continue;
            }
            cfg_.order = OrderKind::Step1;
            int target = 0;
            for (int v : maximal_vertices(D_, OrderKind::Step1, k))
                if (labels.at(v).linf_row(k - 1) >= M) {
                    target = v;
                    break;
                }
            if (!target || !D_.is_interior(target))
                throw StrategyExhausted("step 1: no interior maximal vertex");
            std::set<int> avoid;
            auto pairs = commuting_candidates(target, avoid, OrderKind::Step1, k);
            if (try_gallery_commuting(target, OrderKind::Step1, k,
                                      [&](const Diagram& nd) { return ksafe(D_, nd, k); }, pairs))
                continue;
            if (try_single_cell(target, OrderKind::Step1, k)) continue;
            throw StrategyExhausted("step 1: stuck at vertex " + std::to_string(target));
        }
        while (k >= 2) {
            tick();
            auto labels = D_.label_vertices();
            bool uni = true;
            for (auto& [v, z] : labels)
                if (!is_k_unimodular(z, k - 1)) uni = false;
            if (uni) break;
            cfg_.order = OrderKind::Step2;
            auto maxv = maximal_vertices(D_, OrderKind::Step2, k);
            if (maxv.empty()) throw StrategyExhausted("step 2: no maximal vertex");
            int target = maxv.front();
            if (!D_.is_interior(target)) throw StrategyExhausted("step 2: boundary maximal vertex");
            std::set<int> avoid;
            auto pairs = commuting_candidates(target, avoid, OrderKind::Step2, k);
            if (try_gallery_commuting(target, OrderKind::Step2, k,
                                      [&](const Diagram& nd) { return ksafe(D_, nd, k); }, pairs))
                continue;
            if (try_single_cell(target, OrderKind::Step2, k)) continue;
            throw StrategyExhausted("step 2: stuck at vertex " + std::to_string(target));
        }
        step3_pass(k);
    }
}

}  // namespace vkr
