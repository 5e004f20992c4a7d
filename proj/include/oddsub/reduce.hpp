#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "oddsub/graph.hpp"
#include "oddsub/vertex_set.hpp"

namespace oddsub {

// Reduction rules in detection order. R0 is the small-graph base case and
// the catch-all for directly solved components; R1..R7 are keyed to the
// structure that triggers them.
enum class RuleId {
    R0_BASE,
    R1_DEG1,
    R2_DEG2,
    R3_TRIANGLE,
    R4_DEG3,
    R5_C4_SHARED,
    R6_C4,
    R7_4REG_C4FREE,
};

std::string to_string(RuleId r);
RuleId rule_from_string(const std::string& s);

// One delete-recurse-patch step, all vertex sets in the indices of the graph
// the whole trace was produced for.
struct ReductionStep {
    RuleId rule;
    std::vector<uint32_t> anchor;  // pivot vertices, rule-specific layout
    VertexSet deleted;             // explicitly deleted vertices
    VertexSet isolated_removed;    // vertices isolated by the deletion, also removed
    VertexSet patch;               // subset of the removed region re-added to the solution
};

struct ReductionTrace {
    uint32_t input_n = 0;
    std::vector<ReductionStep> steps;
    VertexSet final_set;

    nlohmann::json to_json() const;
    static ReductionTrace from_json(const nlohmann::json& j);
};

struct CaseDetection {
    RuleId rule;
    // [p, x] for R1; [p, x1, x2] for R2; [a, b, c] for R3;
    // [p, x1..x3] for R4; [p, x1..x4] for R5/R6/R7 (structure vertices first)
    std::vector<uint32_t> anchor;
};

// First applicable case in rule order: degree-1 vertex, degree-2 vertex,
// triangle, degree-3 vertex, two 4-cycles sharing an edge, any 4-cycle,
// else the 4-regular square-free catch-all.
// Requires max degree <= 4, no isolated vertices, n > 7.
CaseDetection detect_case(const Graph& g);

// A candidate deletion set together with its isolation closure: deleting
// `deleted` leaves exactly `isolated` as degree-0 vertices, which are
// removed along with it.
struct DeletionCandidate {
    VertexSet deleted;
    VertexSet isolated;
};

inline constexpr size_t kMaxCandidatesPerStep = 40;

// Ordered candidate family for the detected case; candidates are built from
// the anchor's two-hop neighborhood and deduplicated.
std::vector<DeletionCandidate> deletion_candidates(const Graph& g, const CaseDetection& det);

inline constexpr uint32_t kPatchSizeCap = 8;

// Smallest subset P of `region` with |P| >= required such that
// h_prime | P induces an odd subgraph of g; searched in ascending size and
// lexicographic order within a size, up to the size cap. h_prime must be an
// odd set disjoint from region. Returns nothing when no such patch exists.
std::optional<VertexSet> patch_search(const Graph& g, const VertexSet& region,
                                      const VertexSet& h_prime, uint32_t required);

// Builds an odd induced vertex set S with 7|S| >= 2n for a graph with
// max degree <= 4 and no isolated vertices, together with the step-by-step
// trace that proves it. Throws ProofGapError if no rule applies (which the
// guarantee rules out); the offending subgraph rides along in graph6 form.
ReductionTrace construct_odd_subgraph(const Graph& g);

struct ReplayResult {
    bool ok = true;
    size_t failed_step = size_t(-1);  // size_t(-1) when not tied to one step
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Re-checks a trace against the graph it was produced for: coverage,
// isolation closures, per-step arithmetic, per-step certificates, and the
// final set.
ReplayResult replay_trace(const Graph& g, const ReductionTrace& t);

}  // namespace oddsub
