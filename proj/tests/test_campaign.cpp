#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "oddsub/campaign.hpp"
#include "oddsub/enumerate.hpp"
#include "oddsub/errors.hpp"
#include "oddsub/generate.hpp"

using namespace oddsub;
using nlohmann::json;

namespace {

json strip_runtime(json j) {
    j.erase("runtime");
    return j;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/oddsub_test_" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("bounded graph enumeration counts") {
    CHECK(BoundedGraphStream::count(2, 4) == 1);
    CHECK(BoundedGraphStream::count(3, 4) == 4);
    // independent slow filter over all edge subsets
    for (uint32_t n = 2; n <= 6; ++n) {
        uint32_t pairs = n * (n - 1) / 2;
        uint64_t expect = 0;
        for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
            std::vector<uint32_t> deg(n, 0);
            uint32_t t = 0;
            for (uint32_t u = 0; u < n; ++u)
                for (uint32_t v = u + 1; v < n; ++v, ++t)
                    if (mask >> t & 1) {
                        ++deg[u];
                        ++deg[v];
                    }
            bool ok = true;
            for (uint32_t v = 0; v < n; ++v)
                if (deg[v] == 0 || deg[v] > 4) ok = false;
            if (ok) ++expect;
        }
        CHECK(BoundedGraphStream::count(n, 4) == expect);
    }
    // every streamed graph satisfies the contract, exactly once
    BoundedGraphStream s(5, 3);
    std::set<uint64_t> seen;
    while (auto m = s.next()) {
        CHECK(seen.insert(*m).second);
        Graph g = BoundedGraphStream::graph_from_mask(5, *m);
        DegreeProfile p = degree_profile(g);
        CHECK(p.max_degree <= 3);
        CHECK(p.min_degree >= 1);
    }
    CHECK_THROWS_AS(BoundedGraphStream(9, 4), TooLargeError);
}

TEST_CASE("exhaustive campaign on tiny range") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Exhaustive;
    cfg.n_min = 2;
    cfg.n_max = 5;
    cfg.max_degree = 4;
    cfg.checks = {CheckKind::Bound};
    CampaignReport r = run_campaign(cfg);
    CHECK(r.passed());
    CHECK(r.instances_tested == 1 + 4 + 41 + 768);
    REQUIRE(r.min_ratio.has_value());
    // the worst small instance cannot beat the sharp ratio
    CHECK(r.min_ratio->fo * 7 >= r.min_ratio->n * 2);
}

TEST_CASE("corpus campaign finds the sharp ratio") {
    TempFile corpus("corpus.g6");
    {
        std::ofstream f(corpus.path);
        Graph k7 = k7_minus_hamilton();
        for (int i = 0; i < 3; ++i) f << to_graph6(k7) << "\n";
    }
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Corpus;
    cfg.corpus_path = corpus.path;
    cfg.checks = {CheckKind::Bound, CheckKind::ConstructValidity, CheckKind::ConstructVsExact};
    CampaignReport r = run_campaign(cfg);
    CHECK(r.passed());
    CHECK(r.instances_tested == 3);
    REQUIRE(r.min_ratio.has_value());
    CHECK(r.min_ratio->fo == 2);
    CHECK(r.min_ratio->n == 7);
    CHECK(r.to_json().at("min_ratio").at("meets_bound_with_equality").get<bool>());

    // a strictly stronger bound is rejected on the same corpus
    cfg.bound_num = 3;
    cfg.checks = {CheckKind::Bound};
    CampaignReport r2 = run_campaign(cfg);
    CHECK(!r2.passed());
    CHECK(r2.violations.size() == 3);
    CHECK(r2.violations[0].kind == "bound");
    CHECK(!r2.violations[0].graph6.empty());
}

TEST_CASE("random campaign determinism and parallel equivalence") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.gen.family = GenFamily::RandomMaxDegree;
    cfg.gen.n = 30;
    cfg.gen.max_degree = 4;
    cfg.gen.edge_prob = 0.5;
    cfg.count = 300;
    cfg.seed = 99;
    cfg.checks = {CheckKind::Bound, CheckKind::ConstructValidity};

    cfg.jobs = 1;
    CampaignReport serial = run_campaign(cfg);
    CampaignReport serial2 = run_campaign(cfg);
    CHECK(strip_runtime(serial.to_json()) == strip_runtime(serial2.to_json()));

    cfg.jobs = 4;
    CampaignReport parallel = run_campaign(cfg);
    CHECK(strip_runtime(serial.to_json()) == strip_runtime(parallel.to_json()));
    CHECK(serial.passed());
}

TEST_CASE("tree bound check on random trees") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.gen.family = GenFamily::RandomTree;
    cfg.gen.n = 15;
    cfg.count = 100;
    cfg.seed = 5;
    cfg.checks = {CheckKind::TreeBound};
    CampaignReport r = run_campaign(cfg);
    CHECK(r.passed());

    // a cycle is not a tree and misses the tree bound
    TempFile corpus("notree.g6");
    {
        std::ofstream f(corpus.path);
        f << to_graph6(cycle_graph(9)) << "\n";
    }
    CampaignConfig bad;
    bad.mode = CampaignMode::Corpus;
    bad.corpus_path = corpus.path;
    bad.checks = {CheckKind::TreeBound};
    CampaignReport rb = run_campaign(bad);
    CHECK(!rb.passed());  // f_o(C9) = 2 < 2*floor(10/3) = 6
    CHECK(rb.violations[0].kind == "tree_bound");
}

TEST_CASE("gallai check") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.gen.family = GenFamily::RandomMaxDegree;
    cfg.gen.n = 60;
    cfg.gen.max_degree = 4;
    cfg.gen.edge_prob = 0.6;
    cfg.count = 50;
    cfg.seed = 12;
    cfg.checks = {CheckKind::Gallai};
    CHECK(run_campaign(cfg).passed());
}

TEST_CASE("ledger resume is idempotent") {
    TempFile ledger("ledger.jsonl");
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.gen.family = GenFamily::RandomMaxDegree;
    cfg.gen.n = 25;
    cfg.gen.max_degree = 4;
    cfg.gen.edge_prob = 0.5;
    cfg.count = 2100;  // three batches, last one partial
    cfg.seed = 3;
    cfg.checks = {CheckKind::Bound};
    cfg.ledger_path = ledger.path;

    CampaignReport first = run_campaign(cfg);
    std::ifstream in(ledger.path);
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();

    CampaignReport second = run_campaign(cfg);
    std::ifstream in2(ledger.path);
    std::string all2((std::istreambuf_iterator<char>(in2)), std::istreambuf_iterator<char>());
    CHECK(all == all2);  // nothing appended
    CHECK(strip_runtime(first.to_json()) == strip_runtime(second.to_json()));

    // a different campaign must refuse the ledger
    CampaignConfig other = cfg;
    other.seed = 4;
    CHECK_THROWS_AS(run_campaign(other), PreconditionError);
}

TEST_CASE("config json round trip and validation") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Exhaustive;
    cfg.n_min = 2;
    cfg.n_max = 7;
    cfg.checks = {CheckKind::Bound, CheckKind::Gallai};
    json j = cfg.echo_json();
    CampaignConfig back = CampaignConfig::from_json(j);
    CHECK(back.echo_json() == j);

    // n = 8 requires the long-run confirmation
    CampaignConfig big = cfg;
    big.n_max = 8;
    CHECK_THROWS_AS(big.validate(), PreconditionError);
    big.allow_large = true;
    big.validate();

    CampaignConfig none = cfg;
    none.checks.clear();
    CHECK_THROWS_AS(none.validate(), PreconditionError);

    CampaignConfig vs;
    vs.mode = CampaignMode::Random;
    vs.gen.family = GenFamily::RandomMaxDegree;
    vs.gen.n = 50;
    vs.count = 1;
    vs.checks = {CheckKind::ConstructVsExact};
    CHECK_THROWS_AS(vs.validate(), PreconditionError);
}

TEST_CASE("require_connected resamples deterministically") {
    CampaignConfig cfg;
    cfg.mode = CampaignMode::Random;
    cfg.gen.family = GenFamily::RandomMaxDegree;
    cfg.gen.n = 40;
    cfg.gen.max_degree = 4;
    cfg.gen.edge_prob = 0.25;
    cfg.count = 60;
    cfg.seed = 21;
    cfg.require_connected = true;
    cfg.checks = {CheckKind::ConstructValidity};
    CampaignReport a = run_campaign(cfg);
    CampaignReport b = run_campaign(cfg);
    CHECK(a.passed());
    CHECK(strip_runtime(a.to_json()) == strip_runtime(b.to_json()));
}
