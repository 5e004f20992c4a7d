#include "oddsub/campaign.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "oddsub/enumerate.hpp"
#include "oddsub/errors.hpp"
#include "oddsub/gallai.hpp"
#include "oddsub/parity.hpp"
#include "oddsub/reduce.hpp"
#include "oddsub/rng.hpp"

namespace oddsub {

using nlohmann::json;

std::string to_string(CampaignMode m) {
    switch (m) {
        case CampaignMode::Exhaustive: return "exhaustive";
        case CampaignMode::Random: return "random";
        case CampaignMode::Corpus: return "corpus";
    }
    throw InternalError("unknown mode");
}

static CampaignMode mode_from_string(const std::string& s) {
    if (s == "exhaustive") return CampaignMode::Exhaustive;
    if (s == "random") return CampaignMode::Random;
    if (s == "corpus") return CampaignMode::Corpus;
    throw ParseError("unknown campaign mode '" + s + "'", 0);
}

std::string to_string(CheckKind c) {
    switch (c) {
        case CheckKind::Bound: return "bound";
        case CheckKind::ConstructValidity: return "construct_validity";
        case CheckKind::ConstructVsExact: return "construct_vs_exact";
        case CheckKind::Gallai: return "gallai";
        case CheckKind::TreeBound: return "tree_bound";
    }
    throw InternalError("unknown check");
}

static CheckKind check_from_string(const std::string& s) {
    if (s == "bound") return CheckKind::Bound;
    if (s == "construct_validity") return CheckKind::ConstructValidity;
    if (s == "construct_vs_exact") return CheckKind::ConstructVsExact;
    if (s == "gallai") return CheckKind::Gallai;
    if (s == "tree_bound") return CheckKind::TreeBound;
    throw ParseError("unknown check kind '" + s + "'", 0);
}

json CampaignConfig::echo_json() const {
    json j;
    j["schema_version"] = 1;
    j["mode"] = to_string(mode);
    j["bound"] = {{"numerator", bound_num}, {"denominator", bound_den}};
    json cs = json::array();
    for (CheckKind c : checks) cs.push_back(to_string(c));
    j["checks"] = cs;
    j["seed"] = seed;
    switch (mode) {
        case CampaignMode::Exhaustive:
            j["exhaustive"] = {{"n_min", n_min},
                               {"n_max", n_max},
                               {"max_degree", max_degree},
                               {"allow_large", allow_large}};
            break;
        case CampaignMode::Random:
            j["random"] = {{"gen", gen.to_json()},
                           {"count", count},
                           {"require_connected", require_connected}};
            break;
        case CampaignMode::Corpus:
            j["corpus"] = {{"path", corpus_path}};
            break;
    }
    return j;
}

CampaignConfig CampaignConfig::from_json(const json& j) {
    CampaignConfig c;
    c.mode = mode_from_string(j.at("mode").get<std::string>());
    if (j.contains("bound")) {
        c.bound_num = j.at("bound").at("numerator").get<uint32_t>();
        c.bound_den = j.at("bound").at("denominator").get<uint32_t>();
    }
    c.checks.clear();
    for (const auto& s : j.at("checks")) c.checks.insert(check_from_string(s.get<std::string>()));
    c.seed = j.value("seed", uint64_t{0});
    c.jobs = j.value("jobs", uint32_t{1});
    c.ledger_path = j.value("ledger", std::string{});
    switch (c.mode) {
        case CampaignMode::Exhaustive: {
            const auto& e = j.at("exhaustive");
            c.n_min = e.value("n_min", uint32_t{2});
            c.n_max = e.at("n_max").get<uint32_t>();
            c.max_degree = e.value("max_degree", uint32_t{4});
            c.allow_large = e.value("allow_large", false);
            break;
        }
        case CampaignMode::Random: {
            const auto& r = j.at("random");
            c.gen = GenSpec::from_json(r.at("gen"));
            c.count = r.at("count").get<uint64_t>();
            c.require_connected = r.value("require_connected", false);
            break;
        }
        case CampaignMode::Corpus:
            c.corpus_path = j.at("corpus").at("path").get<std::string>();
            break;
    }
    c.validate();
    return c;
}

void CampaignConfig::validate() const {
    if (bound_den == 0) throw PreconditionError("bound denominator must be positive");
    if (checks.empty()) throw PreconditionError("campaign needs at least one check");
    if (mode == CampaignMode::Exhaustive) {
        if (n_max > kEnumMaxN)
            throw PreconditionError("exhaustive mode capped at n = " +
                                    std::to_string(kEnumMaxN));
        if (n_max == kEnumMaxN && !allow_large)
            throw PreconditionError(
                "exhaustive n = 8 iterates 2^28 edge subsets and can run for about an hour; "
                "set allow_large to confirm");
        if (n_min > n_max) throw PreconditionError("n_min exceeds n_max");
    }
    if (checks.count(CheckKind::ConstructVsExact) && mode == CampaignMode::Random &&
        gen.n > 20 && gen.family != GenFamily::K7MinusHamilton)
        throw PreconditionError("construct_vs_exact requires n <= 20");
}

// ---------------------------------------------------------------------------
// instance production

namespace {

struct InstanceDesc {
    uint32_t n;        // exhaustive: vertex count
    uint64_t payload;  // exhaustive: edge mask; random: index; corpus: line index
};

class Producer {
public:
    virtual ~Producer() = default;
    virtual std::optional<InstanceDesc> next() = 0;
};

class ExhaustiveProducer : public Producer {
public:
    ExhaustiveProducer(uint32_t n_min, uint32_t n_max, uint32_t cap)
        : n_max_(n_max), cap_(cap), cur_n_(n_min), stream_(std::min(n_min, n_max), cap) {}

    std::optional<InstanceDesc> next() override {
        while (cur_n_ <= n_max_) {
            if (auto m = stream_.next()) return InstanceDesc{cur_n_, *m};
            if (++cur_n_ > n_max_) break;
            stream_ = BoundedGraphStream(cur_n_, cap_);
        }
        return std::nullopt;
    }

private:
    uint32_t n_max_, cap_, cur_n_;
    BoundedGraphStream stream_;
};

class RandomProducer : public Producer {
public:
    explicit RandomProducer(uint64_t count) : count_(count) {}
    std::optional<InstanceDesc> next() override {
        if (k_ >= count_) return std::nullopt;
        return InstanceDesc{0, k_++};
    }

private:
    uint64_t count_, k_ = 0;
};

class CorpusProducer : public Producer {
public:
    explicit CorpusProducer(size_t lines) : lines_(lines) {}
    std::optional<InstanceDesc> next() override {
        if (k_ >= lines_) return std::nullopt;
        return InstanceDesc{0, k_++};
    }

private:
    size_t lines_, k_ = 0;
};

struct InstanceResult {
    std::vector<Violation> violations;  // instance_index filled by caller
    std::optional<std::string> gap_g6;
    std::optional<MinRatio> ratio;
};

Graph materialize(const CampaignConfig& cfg, const std::vector<std::string>& corpus,
                  const InstanceDesc& d) {
    switch (cfg.mode) {
        case CampaignMode::Exhaustive:
            return BoundedGraphStream::graph_from_mask(d.n, d.payload);
        case CampaignMode::Random: {
            uint64_t inst_seed = derive_seed(cfg.seed, d.payload);
            if (!cfg.require_connected) return generate(cfg.gen, inst_seed);
            for (uint32_t attempt = 0; attempt < 100; ++attempt) {
                Graph g = generate(cfg.gen, derive_seed(inst_seed, attempt));
                if (is_connected(g)) return g;
            }
            throw InfeasibleError("no connected instance after 100 attempts");
        }
        case CampaignMode::Corpus:
            return parse_graph6(corpus.at(size_t(d.payload)));
    }
    throw InternalError("unknown mode");
}

InstanceResult check_instance(const CampaignConfig& cfg, const std::vector<std::string>& corpus,
                              const InstanceDesc& d) {
    InstanceResult r;
    std::string g6;
    auto add = [&](std::string kind, std::string detail) {
        r.violations.push_back({0, g6, std::move(kind), std::move(detail)});
    };
    try {
        Graph g = materialize(cfg, corpus, d);
        g6 = to_graph6(g);
        uint64_t n = g.vertex_count();

        bool need_fo = cfg.checks.count(CheckKind::Bound) ||
                       cfg.checks.count(CheckKind::ConstructVsExact) ||
                       cfg.checks.count(CheckKind::TreeBound);
        std::optional<SolveResult> fo;
        if (need_fo) {
            fo = max_odd_induced_exact(g);
            if (!fo->optimal) {
                add("budget", "node budget exhausted; optimum is only a lower bound");
                fo.reset();
            }
        }

        if (cfg.checks.count(CheckKind::Bound)) {
            VertexSet iso = isolated_vertices(g);
            if (iso.any()) {
                add("isolated_vertex",
                    "bound check rejects isolated vertex " + std::to_string(iso.first()));
            } else if (fo) {
                if (uint64_t(cfg.bound_den) * fo->optimum < uint64_t(cfg.bound_num) * n)
                    add("bound", "f_o = " + std::to_string(fo->optimum) + ", n = " +
                                     std::to_string(n) + " violates " +
                                     std::to_string(cfg.bound_num) + "/" +
                                     std::to_string(cfg.bound_den));
                r.ratio = MinRatio{fo->optimum, n, g6};
            }
        }

        if (cfg.checks.count(CheckKind::ConstructValidity) ||
            cfg.checks.count(CheckKind::ConstructVsExact)) {
            try {
                ReductionTrace t = construct_odd_subgraph(g);
                if (cfg.checks.count(CheckKind::ConstructValidity)) {
                    ReplayResult rep = replay_trace(g, t);
                    if (!rep)
                        add("construct_replay",
                            "step " + std::to_string(rep.failed_step) + ": " + rep.reason);
                }
                if (cfg.checks.count(CheckKind::ConstructVsExact)) {
                    if (n > 20) {
                        add("config", "construct_vs_exact requires n <= 20");
                    } else if (fo && t.final_set.count() > fo->optimum) {
                        add("construct_exceeds_optimum",
                            "constructed " + std::to_string(t.final_set.count()) +
                                " > optimum " + std::to_string(fo->optimum));
                    }
                }
            } catch (const ProofGapError& e) {
                r.gap_g6 = e.graph6;
            } catch (const PreconditionError& e) {
                add("construct_precondition", e.what());
            }
        }

        if (cfg.checks.count(CheckKind::Gallai)) {
            try {
                EvenPartition p = even_even_partition(g);
                if (!is_valid_even_partition(g, p)) add("gallai", "partition not even-even");
            } catch (const std::exception& e) {
                add("gallai", e.what());
            }
        }

        if (cfg.checks.count(CheckKind::TreeBound) && fo) {
            uint64_t target = 2 * ((n + 1) / 3);
            if (fo->optimum < target)
                add("tree_bound", "f_o = " + std::to_string(fo->optimum) + " below 2*floor((n+1)/3) = " +
                                      std::to_string(target));
        }
    } catch (const std::exception& e) {
        add("error", e.what());
    }
    return r;
}

// ---------------------------------------------------------------------------
// batches and ledger

constexpr uint64_t kBatchSize = 1024;

struct BatchRecord {
    uint64_t batch = 0, first = 0, count = 0;
    std::vector<Violation> violations;
    std::vector<std::string> proof_gaps;
    std::optional<MinRatio> min_ratio;

    json to_json() const {
        json j;
        j["batch"] = batch;
        j["first"] = first;
        j["count"] = count;
        json vs = json::array();
        for (const auto& v : violations)
            vs.push_back({{"instance", v.instance_index},
                          {"graph6", v.graph6},
                          {"kind", v.kind},
                          {"detail", v.detail}});
        j["violations"] = vs;
        j["proof_gaps"] = proof_gaps;
        if (min_ratio)
            j["min"] = {{"fo", min_ratio->fo}, {"n", min_ratio->n}, {"graph6", min_ratio->graph6}};
        else
            j["min"] = nullptr;
        return j;
    }

    static BatchRecord from_json(const json& j) {
        BatchRecord b;
        b.batch = j.at("batch").get<uint64_t>();
        b.first = j.at("first").get<uint64_t>();
        b.count = j.at("count").get<uint64_t>();
        for (const auto& v : j.at("violations"))
            b.violations.push_back({v.at("instance").get<uint64_t>(),
                                    v.at("graph6").get<std::string>(),
                                    v.at("kind").get<std::string>(),
                                    v.at("detail").get<std::string>()});
        b.proof_gaps = j.at("proof_gaps").get<std::vector<std::string>>();
        if (!j.at("min").is_null())
            b.min_ratio = MinRatio{j.at("min").at("fo").get<uint64_t>(),
                                   j.at("min").at("n").get<uint64_t>(),
                                   j.at("min").at("graph6").get<std::string>()};
        return b;
    }
};

// strictly smaller f_o/n ratio, exact cross-multiplication
bool ratio_improves(const MinRatio& cand, const std::optional<MinRatio>& cur) {
    if (!cur) return true;
    return cand.fo * cur->n < cur->fo * cand.n;
}

void run_batch_serial(const CampaignConfig& cfg, const std::vector<std::string>& corpus,
                      const std::vector<InstanceDesc>& items,
                      std::vector<InstanceResult>& results) {
    for (size_t i = 0; i < items.size(); ++i)
        results[i] = check_instance(cfg, corpus, items[i]);
}

void run_batch_parallel(const CampaignConfig& cfg, const std::vector<std::string>& corpus,
                        const std::vector<InstanceDesc>& items,
                        std::vector<InstanceResult>& results, uint32_t jobs) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(int(jobs))
    for (long i = 0; i < long(items.size()); ++i)
        results[size_t(i)] = check_instance(cfg, corpus, items[size_t(i)]);
#else
    (void)jobs;
    run_batch_serial(cfg, corpus, items, results);
#endif
}

}  // namespace

json CampaignReport::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["config"] = config_echo;
    j["instances_tested"] = instances_tested;
    json vs = json::array();
    for (const auto& v : violations)
        vs.push_back({{"instance", v.instance_index},
                      {"graph6", v.graph6},
                      {"kind", v.kind},
                      {"detail", v.detail}});
    j["violations"] = vs;
    j["proof_gap_reports"] = proof_gap_reports;
    if (min_ratio) {
        uint64_t den = config_echo.at("bound").at("denominator").get<uint64_t>();
        uint64_t num = config_echo.at("bound").at("numerator").get<uint64_t>();
        j["min_ratio"] = {{"fo", min_ratio->fo},
                          {"n", min_ratio->n},
                          {"graph6", min_ratio->graph6},
                          {"meets_bound_with_equality",
                           min_ratio->fo * den == min_ratio->n * num}};
    } else {
        j["min_ratio"] = nullptr;
    }
    j["runtime"] = {{"jobs", jobs}, {"wall_time_ms", wall_time_ms}};
    return j;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    cfg.validate();

    std::vector<std::string> corpus;
    if (cfg.mode == CampaignMode::Corpus) {
        std::ifstream in(cfg.corpus_path);
        if (!in) throw PreconditionError("cannot open corpus file " + cfg.corpus_path);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) corpus.push_back(line);
    }

    std::unique_ptr<Producer> producer;
    switch (cfg.mode) {
        case CampaignMode::Exhaustive:
            producer = std::make_unique<ExhaustiveProducer>(cfg.n_min, cfg.n_max, cfg.max_degree);
            break;
        case CampaignMode::Random:
            producer = std::make_unique<RandomProducer>(cfg.count);
            break;
        case CampaignMode::Corpus:
            producer = std::make_unique<CorpusProducer>(corpus.size());
            break;
    }

    // previously completed batches, if a ledger exists
    std::map<uint64_t, BatchRecord> done;
    json echo = cfg.echo_json();
    if (!cfg.ledger_path.empty()) {
        std::ifstream in(cfg.ledger_path);
        if (in) {
            std::string line;
            bool first_line = true;
            size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty()) continue;
                json j = json::parse(line);
                if (first_line) {
                    first_line = false;
                    if (!j.contains("config") || j.at("config") != echo)
                        throw PreconditionError("ledger " + cfg.ledger_path +
                                                " belongs to a different campaign");
                    continue;
                }
                BatchRecord b = BatchRecord::from_json(j);
                done.emplace(b.batch, std::move(b));
            }
        }
    }

    std::ofstream ledger;
    if (!cfg.ledger_path.empty()) {
        bool fresh = done.empty();
        ledger.open(cfg.ledger_path, std::ios::app);
        if (!ledger) throw PreconditionError("cannot open ledger " + cfg.ledger_path);
        if (fresh) {
            json hdr;
            hdr["config"] = echo;
            ledger << hdr.dump() << "\n" << std::flush;
        }
    }

    CampaignReport report;
    report.config_echo = echo;
    report.jobs = cfg.jobs;

    uint64_t batch_index = 0;
    uint64_t next_instance = 0;
    for (;;) {
        std::vector<InstanceDesc> items;
        items.reserve(kBatchSize);
        while (items.size() < kBatchSize) {
            auto d = producer->next();
            if (!d) break;
            items.push_back(*d);
        }
        if (items.empty()) break;
        uint64_t first = next_instance;
        next_instance += items.size();

        BatchRecord rec;
        if (auto it = done.find(batch_index); it != done.end()) {
            rec = it->second;
            if (rec.first != first || rec.count != items.size())
                throw PreconditionError("ledger batch " + std::to_string(batch_index) +
                                        " does not match the instance stream");
        } else {
            std::vector<InstanceResult> results(items.size());
            if (cfg.jobs > 1)
                run_batch_parallel(cfg, corpus, items, results, cfg.jobs);
            else
                run_batch_serial(cfg, corpus, items, results);

            rec.batch = batch_index;
            rec.first = first;
            rec.count = items.size();
            for (size_t i = 0; i < results.size(); ++i) {
                for (Violation v : results[i].violations) {
                    v.instance_index = first + i;
                    rec.violations.push_back(std::move(v));
                }
                if (results[i].gap_g6) rec.proof_gaps.push_back(*results[i].gap_g6);
                if (results[i].ratio && ratio_improves(*results[i].ratio, rec.min_ratio))
                    rec.min_ratio = results[i].ratio;
            }
            if (ledger.is_open()) ledger << rec.to_json().dump() << "\n" << std::flush;
        }

        report.instances_tested += rec.count;
        for (const auto& v : rec.violations) report.violations.push_back(v);
        for (const auto& g : rec.proof_gaps) report.proof_gap_reports.push_back(g);
        if (rec.min_ratio && ratio_improves(*rec.min_ratio, report.min_ratio))
            report.min_ratio = rec.min_ratio;
        ++batch_index;
    }

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace oddsub
