#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oddsub/generate.hpp"
#include "oddsub/graph.hpp"

namespace oddsub {

enum class CampaignMode { Exhaustive, Random, Corpus };

enum class CheckKind { Bound, ConstructValidity, ConstructVsExact, Gallai, TreeBound };

std::string to_string(CampaignMode m);
std::string to_string(CheckKind c);

struct CampaignConfig {
    CampaignMode mode = CampaignMode::Random;
    uint32_t bound_num = 2;
    uint32_t bound_den = 7;
    std::set<CheckKind> checks{CheckKind::Bound};

    // exhaustive mode
    uint32_t n_min = 2;
    uint32_t n_max = 7;
    uint32_t max_degree = 4;
    bool allow_large = false;  // required to unlock n = 8

    // random mode
    GenSpec gen;
    uint64_t count = 0;
    bool require_connected = false;

    // corpus mode
    std::string corpus_path;

    uint32_t jobs = 1;
    uint64_t seed = 0;
    std::string ledger_path;  // empty: no ledger

    // campaign-defining fields only; jobs and ledger path are runtime details
    nlohmann::json echo_json() const;
    static CampaignConfig from_json(const nlohmann::json& j);
    void validate() const;
};

struct Violation {
    uint64_t instance_index;
    std::string graph6;
    std::string kind;
    std::string detail;
};

struct MinRatio {
    uint64_t fo = 0;
    uint64_t n = 0;
    std::string graph6;
};

struct CampaignReport {
    nlohmann::json config_echo;
    uint64_t instances_tested = 0;
    std::vector<Violation> violations;
    std::vector<std::string> proof_gap_reports;
    std::optional<MinRatio> min_ratio;
    double wall_time_ms = 0.0;
    uint32_t jobs = 1;

    bool passed() const { return violations.empty() && proof_gap_reports.empty(); }
    nlohmann::json to_json() const;
};

// Runs the campaign; instances are checked in deterministic batches, fanned
// out to an OpenMP worker pool when jobs > 1 and run serially otherwise (the
// two paths produce identical reports apart from wall time). When the config
// names a ledger, finished batches are appended to it as JSONL and existing
// batches are not re-run.
CampaignReport run_campaign(const CampaignConfig& cfg);

}  // namespace oddsub
