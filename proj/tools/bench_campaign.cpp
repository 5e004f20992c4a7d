// Compares serial and OpenMP campaign throughput on fixed workloads
// and checks that both paths produce the same report.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <nlohmann/json.hpp>

#include "oddsub/campaign.hpp"

using namespace oddsub;
using nlohmann::json;

namespace {

json strip_runtime(json j) {
    j.erase("runtime");
    return j;
}

double run_ms(const CampaignConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    run_campaign(cfg);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench(const char* name, CampaignConfig cfg, uint32_t jobs) {
    cfg.jobs = 1;
    CampaignReport serial = run_campaign(cfg);
    double t_serial = run_ms(cfg);
    cfg.jobs = jobs;
    CampaignReport parallel = run_campaign(cfg);
    double t_parallel = run_ms(cfg);

    bool same = strip_runtime(serial.to_json()) == strip_runtime(parallel.to_json());
    std::printf("%-28s serial %8.1f ms   omp(%u) %8.1f ms   speedup %.2fx   reports %s\n", name,
                t_serial, jobs, t_parallel, t_serial / t_parallel,
                same ? "identical" : "DIFFER");
}

}  // namespace

int main() {
    uint32_t jobs = 2;
#ifdef _OPENMP
    jobs = uint32_t(omp_get_max_threads());
    if (jobs < 2) jobs = 2;
#endif

    {
        CampaignConfig cfg;
        cfg.mode = CampaignMode::Exhaustive;
        cfg.n_min = 2;
        cfg.n_max = 6;
        cfg.max_degree = 4;
        cfg.checks = {CheckKind::Bound};
        bench("exhaustive n<=6 bound", cfg, jobs);
    }
    {
        CampaignConfig cfg;
        cfg.mode = CampaignMode::Random;
        cfg.gen.family = GenFamily::RandomMaxDegree;
        cfg.gen.n = 120;
        cfg.gen.max_degree = 4;
        cfg.gen.edge_prob = 0.6;
        cfg.count = 2000;
        cfg.seed = 7;
        cfg.checks = {CheckKind::ConstructValidity};
        bench("random n=120 construct", cfg, jobs);
    }
    {
        CampaignConfig cfg;
        cfg.mode = CampaignMode::Random;
        cfg.gen.family = GenFamily::RandomMaxDegree;
        cfg.gen.n = 18;
        cfg.gen.max_degree = 4;
        cfg.gen.edge_prob = 0.5;
        cfg.count = 4000;
        cfg.seed = 11;
        cfg.checks = {CheckKind::Bound, CheckKind::ConstructVsExact, CheckKind::Gallai};
        bench("random n=18 full checks", cfg, jobs);
    }
    return 0;
}
