#ifndef VKR_ENGINE_HPP
#define VKR_ENGINE_HPP

#include "templates.hpp"

namespace vkr {

struct StrategyExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WatchdogExpired : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceEntry {
    std::string move;      // e.g. "gallery C(R(3,5)) at 7", "template 9GA-case1"
    std::string order;     // dim1 | step1 | step2 | step3
    int vertex = 0;        // the maximal vertex targeted
    bool eliminated = false;
    bool verified = false;
};

struct ReductionTrace {
    std::vector<TraceEntry> entries;
    std::string to_json() const;
};

struct EngineConfig {
    OrderKind order = OrderKind::Dim1;
    int k = 1;
    int C = 8;
    int64_t watchdog = 1'000'000;
};

class Engine {
  public:
    Engine(Diagram d, EngineConfig cfg);

    const Diagram& diagram() const { return D_; }
    const ReductionTrace& trace() const { return trace_; }

    // d=1: a full reduction eliminating the given interior maximal vertex
    void eliminate_vertex_dim1(int v);
    // d=1: all vertex norms down to |.|_inf = 1, |.|_1 <= 9
    void normalize_dim1();
    // k-safe pass enforcing def_k <= wdef_k + C
    void bound_defect_pass(int k);
    // reduce def_{k-1} to d-k+C+1 via same-depth column moves
    void step3_pass(int k);
    // Step-1 + Step-2 + Step-3 per row, from k = d down to 1
    void hdim_pipeline();

  private:
    Diagram D_;
    EngineConfig cfg_;
    ReductionTrace trace_;
    std::vector<MoveTemplate> catalog_;
    int64_t budget_;

    void tick();
    void commit(Diagram next, const std::string& move, int vertex, bool eliminated);
    bool try_gallery_commuting(int v, OrderKind order, int k,
                               const std::function<bool(const Diagram&)>& extraCheck,
                               const std::vector<std::pair<Token, Token>>& candidatePairs);
    bool try_single_cell(int v, OrderKind order, int k);
    std::vector<std::pair<Token, Token>> commuting_candidates(int v, const std::set<int>& avoid,
                                                              OrderKind order, int k);
    bool ksafe(const Diagram& before, const Diagram& after, int k) const;
};

}  // namespace vkr

#endif
