#include "rveaca/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "rveaca/clustering.hpp"
#include "rveaca/indicators.hpp"
#include "rveaca/problems.hpp"
#include "rveaca/rvea.hpp"
#include "rveaca/rvea_ca.hpp"

namespace rveaca {

using nlohmann::json;

namespace {

const std::set<std::string> kAlgorithms{"rvea-ca", "rvea"};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4e", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

ProblemEntry parse_problem_item(const std::string& item) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ConfigError("problem entry needs NAME:M, got '" + item + "'");
    ProblemEntry e;
    e.name = trim(item.substr(0, colon));
    const std::string m = trim(item.substr(colon + 1));
    try {
        std::size_t used = 0;
        const long v = std::stol(m, &used);
        if (used != m.size() || v < 2) throw ConfigError("");
        e.objectives = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ConfigError("bad objective count in '" + item + "'");
    }
    return e;
}

template <typename T>
T get_as(const json& j, const char* key) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

}  // namespace

std::map<std::size_t, ScaleSetting> default_scales() {
    return {{5, {210, 50190}},   {8, {240, 80160}},   {10, {230, 100050}},
            {13, {182, 130130}}, {15, {240, 150000}}, {20, {230, 200100}}};
}

std::size_t generations_for(const ScaleSetting& scale) {
    if (scale.population == 0) throw ConfigError("population size must be positive");
    const std::size_t blocks = scale.evaluations / scale.population;
    return blocks == 0 ? 0 : blocks - 1;
}

std::vector<ProblemEntry> parse_problem_list(const std::string& text) {
    std::vector<ProblemEntry> out;
    for (const auto& item : split(text, ',')) out.push_back(parse_problem_item(item));
    return out;
}

std::vector<std::string> parse_name_list(const std::string& text) { return split(text, ','); }

const ScaleSetting& ExperimentConfig::scale_for(std::size_t objectives) const {
    const auto it = scales.find(objectives);
    if (it == scales.end()) {
        throw ConfigError("no population size / budget configured for M=" + std::to_string(objectives));
    }
    return it->second;
}

void ExperimentConfig::validate() const {
    if (algorithms.empty()) throw ConfigError("no algorithms selected");
    for (const auto& a : algorithms) {
        if (!kAlgorithms.contains(a)) throw ConfigError("unknown algorithm '" + a + "'");
    }
    if (std::set<std::string>(algorithms.begin(), algorithms.end()).size() != algorithms.size()) {
        throw ConfigError("duplicate algorithm");
    }
    if (problems.empty()) throw ConfigError("no problems selected");
    for (const auto& p : problems) {
        try {
            make_problem(p.name, p.objectives);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        const ScaleSetting& s = scale_for(p.objectives);
        if (s.population < 2) throw ConfigError("population size must be at least 2");
        if (generations_for(s) < 1) {
            throw ConfigError("budget for M=" + std::to_string(p.objectives) + " leaves no generations");
        }
    }
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (lambda < 2) throw ConfigError("lambda must be at least 2");
    if (workers < 1) throw ConfigError("workers must be at least 1");
    if (!(hv_reference > 0.0)) throw ConfigError("hv_reference must be positive");
    if (hv_samples < 1 || trace_hv_samples < 1) throw ConfigError("hv sample counts must be positive");
    if (trace_every < 1) throw ConfigError("trace_every must be at least 1");
    if (front_points < 2) throw ConfigError("front_points must be at least 2");
}

ExperimentConfig config_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");

    ExperimentConfig c;
    for (const auto& [key, value] : doc.items()) {
        const char* k = key.c_str();
        if (key == "algorithms") {
            c.algorithms = get_as<std::vector<std::string>>(value, k);
        } else if (key == "problems") {
            if (value.is_string()) {
                c.problems = parse_problem_list(value.get<std::string>());
            } else if (value.is_array()) {
                c.problems.clear();
                for (const auto& item : value) {
                    if (item.is_string()) {
                        c.problems.push_back(parse_problem_item(item.get<std::string>()));
                    } else if (item.is_object() && item.contains("name") && item.contains("M")) {
                        c.problems.push_back({get_as<std::string>(item["name"], k),
                                              get_as<std::size_t>(item["M"], k)});
                    } else {
                        throw ConfigError("problem entries must be \"NAME:M\" or {\"name\", \"M\"}");
                    }
                }
            } else {
                throw ConfigError("config key 'problems' has the wrong type");
            }
        } else if (key == "scales") {
            if (!value.is_object()) throw ConfigError("config key 'scales' must be an object");
            for (const auto& [m, setting] : value.items()) {
                std::size_t objectives = 0;
                try {
                    objectives = static_cast<std::size_t>(std::stoul(m));
                } catch (const std::exception&) {
                    throw ConfigError("scales key '" + m + "' is not an objective count");
                }
                if (!setting.is_object() || !setting.contains("N") || !setting.contains("evaluations")) {
                    throw ConfigError("scales entries need N and evaluations");
                }
                c.scales[objectives] = {get_as<std::size_t>(setting["N"], k),
                                        get_as<std::size_t>(setting["evaluations"], k)};
            }
        } else if (key == "runs") {
            c.runs = get_as<std::size_t>(value, k);
        } else if (key == "seed") {
            c.base_seed = get_as<std::uint64_t>(value, k);
        } else if (key == "lambda") {
            c.lambda = get_as<std::size_t>(value, k);
        } else if (key == "workers") {
            c.workers = get_as<std::size_t>(value, k);
        } else if (key == "out") {
            c.out_dir = get_as<std::string>(value, k);
        } else if (key == "reference_algorithm") {
            c.reference_algorithm = get_as<std::string>(value, k);
        } else if (key == "save_network") {
            c.save_network = get_as<bool>(value, k);
        } else if (key == "indicators") {
            if (!value.is_object()) throw ConfigError("config key 'indicators' must be an object");
            for (const auto& [ik, iv] : value.items()) {
                const char* ikc = ik.c_str();
                if (ik == "hv_reference") {
                    c.hv_reference = get_as<double>(iv, ikc);
                } else if (ik == "hv_samples") {
                    c.hv_samples = get_as<std::size_t>(iv, ikc);
                } else if (ik == "hv_seed") {
                    c.hv_seed = get_as<std::uint64_t>(iv, ikc);
                } else if (ik == "trace_hv_samples") {
                    c.trace_hv_samples = get_as<std::size_t>(iv, ikc);
                } else if (ik == "front_points") {
                    c.front_points = get_as<std::size_t>(iv, ikc);
                } else if (ik == "trace_every") {
                    c.trace_every = get_as<std::size_t>(iv, ikc);
                } else {
                    throw ConfigError("unknown indicators key '" + ik + "'");
                }
            }
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return c;
}

std::string config_to_json(const ExperimentConfig& c) {
    json doc;
    doc["algorithms"] = c.algorithms;
    doc["problems"] = json::array();
    for (const auto& p : c.problems) doc["problems"].push_back({{"name", p.name}, {"M", p.objectives}});
    doc["scales"] = json::object();
    for (const auto& [m, s] : c.scales) {
        doc["scales"][std::to_string(m)] = {{"N", s.population}, {"evaluations", s.evaluations}};
    }
    doc["runs"] = c.runs;
    doc["seed"] = c.base_seed;
    doc["lambda"] = c.lambda;
    doc["workers"] = c.workers;
    doc["out"] = c.out_dir;
    doc["reference_algorithm"] = c.reference_algorithm;
    doc["save_network"] = c.save_network;
    doc["indicators"] = {{"hv_reference", c.hv_reference},         {"hv_samples", c.hv_samples},
                         {"hv_seed", c.hv_seed},                   {"trace_hv_samples", c.trace_hv_samples},
                         {"front_points", c.front_points},         {"trace_every", c.trace_every}};
    return doc.dump(2);
}

std::string record_to_json(const RunRecord& r) {
    json doc;
    doc["algorithm"] = r.algorithm;
    doc["problem"] = r.problem;
    doc["M"] = r.objectives;
    doc["seed"] = r.seed;
    doc["N"] = r.population;
    doc["generations"] = r.generations;
    doc["trace"] = json::array();
    for (const auto& p : r.trace) {
        doc["trace"].push_back({{"t", p.t},
                                {"hv", p.hv},
                                {"igdp", p.igdp},
                                {"nodes", p.nodes},
                                {"components", p.components},
                                {"V", p.threshold}});
    }
    doc["final_objectives"] = r.final_objectives;
    doc["hv"] = r.hv;
    doc["hv_method"] = r.hv_method;
    doc["igdp"] = r.igdp;
    doc["final_nodes"] = r.final_nodes;
    doc["final_components"] = r.final_components;
    doc["wall_seconds"] = r.wall_seconds;
    return doc.dump();
}

RunRecord record_from_json(const std::string& text) {
    const json doc = json::parse(text);
    RunRecord r;
    r.algorithm = doc.at("algorithm").get<std::string>();
    r.problem = doc.at("problem").get<std::string>();
    r.objectives = doc.at("M").get<std::size_t>();
    r.seed = doc.at("seed").get<std::uint64_t>();
    r.population = doc.at("N").get<std::size_t>();
    r.generations = doc.at("generations").get<std::size_t>();
    for (const auto& p : doc.at("trace")) {
        r.trace.push_back({p.at("t").get<std::size_t>(), p.at("hv").get<double>(), p.at("igdp").get<double>(),
                           p.at("nodes").get<std::size_t>(), p.at("components").get<std::size_t>(),
                           p.at("V").get<double>()});
    }
    r.final_objectives = doc.at("final_objectives").get<std::vector<Vec>>();
    r.hv = doc.at("hv").get<double>();
    r.hv_method = doc.at("hv_method").get<std::string>();
    r.igdp = doc.at("igdp").get<double>();
    r.final_nodes = doc.at("final_nodes").get<std::size_t>();
    r.final_components = doc.at("final_components").get<std::size_t>();
    r.wall_seconds = doc.at("wall_seconds").get<double>();
    return r;
}

std::string run_stem(const RunRecord& r) {
    return r.algorithm + "_" + r.problem + "_M" + std::to_string(r.objectives) + "_s" + std::to_string(r.seed);
}

RunRecord execute_run(const ExperimentConfig& config, const std::string& algorithm, const ProblemEntry& entry,
                      std::uint64_t seed, std::string* network_json) {
    const auto started = std::chrono::steady_clock::now();
    const ProblemSpec spec = make_problem(entry.name, entry.objectives);
    const ScaleSetting& scale = config.scale_for(entry.objectives);
    const std::size_t t_max = generations_for(scale);
    const ReferenceFront front = reference_front(spec, config.front_points);
    const std::vector<Vec> front_norm = front.normalized();
    const Vec q(entry.objectives, config.hv_reference);

    RunRecord record;
    record.algorithm = algorithm;
    record.problem = entry.name;
    record.objectives = entry.objectives;
    record.seed = seed;
    record.population = scale.population;
    record.generations = t_max;

    const GenerationHook hook = [&](const GenerationReport& report) {
        if (report.t % config.trace_every != 0 && report.t != t_max) return;
        const auto norm_f = normalize_front(objectives_of(*report.population), front);
        TracePoint p;
        p.t = report.t;
        p.hv = hv(norm_f, q, HvMode::Auto, config.trace_hv_samples, config.hv_seed).value;
        p.igdp = igd_plus(norm_f, front_norm).value;
        p.nodes = report.nodes;
        p.components = report.components;
        p.threshold = report.threshold;
        record.trace.push_back(p);
    };

    Rng rng(seed);
    Population final_pop;
    if (algorithm == "rvea-ca") {
        RveaCaParams params;
        params.population = scale.population;
        params.generations = t_max;
        params.lambda = config.lambda;
        AlgoState state;
        final_pop = run_rvea_ca(spec, params, rng, hook, &state);
        record.final_nodes = state.network.size();
        record.final_components = state.network.empty() ? 0 : connected_components(state.network).count;
        if (network_json) *network_json = network_to_json(state.network);
    } else if (algorithm == "rvea") {
        RveaParams params;
        params.population = scale.population;
        params.generations = t_max;
        final_pop = run_rvea_baseline(spec, params, rng, hook);
    } else {
        throw ConfigError("unknown algorithm '" + algorithm + "'");
    }

    record.final_objectives = objectives_of(final_pop);
    const auto norm_f = normalize_front(record.final_objectives, front);
    const IndicatorResult h = hv(norm_f, q, HvMode::Auto, config.hv_samples, config.hv_seed);
    record.hv = h.value;
    record.hv_method = to_string(h.method);
    record.igdp = igd_plus(norm_f, front_norm).value;
    record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return record;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    config.validate();

    struct Job {
        std::string algorithm;
        ProblemEntry problem;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& a : config.algorithms) {
        for (const auto& p : config.problems) {
            for (std::size_t i = 0; i < config.runs; ++i) jobs.push_back({a, p, config.base_seed + i});
        }
    }

    namespace fs = std::filesystem;
    const fs::path out(config.out_dir);
    if (config.write_outputs) {
        fs::create_directories(out / "runs");
        fs::create_directories(out / "trace");
        if (config.save_network) fs::create_directories(out / "network");
    }

    std::vector<RunRecord> slots(jobs.size());
    std::vector<std::string> errors(jobs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            const Job& job = jobs[i];
            try {
                std::string network;
                const bool want_network = config.save_network && job.algorithm == "rvea-ca";
                slots[i] = execute_run(config, job.algorithm, job.problem, job.seed,
                                       want_network ? &network : nullptr);
                if (config.write_outputs) {
                    const std::string stem = run_stem(slots[i]);
                    write_file(out / "runs" / (stem + ".json"), record_to_json(slots[i]));
                    std::string trace = "t,hv,igdp,nodes,components,V\n";
                    for (const auto& p : slots[i].trace) {
                        trace += std::to_string(p.t) + "," + fmt(p.hv) + "," + fmt(p.igdp) + "," +
                                 std::to_string(p.nodes) + "," + std::to_string(p.components) + "," +
                                 fmt(p.threshold) + "\n";
                    }
                    write_file(out / "trace" / (stem + ".csv"), trace);
                    if (want_network) write_file(out / "network" / (stem + ".json"), network);
                }
            } catch (const std::exception& e) {
                errors[i] = job.algorithm + " on " + job.problem.name + " M=" +
                            std::to_string(job.problem.objectives) + " seed " + std::to_string(job.seed) +
                            ": " + e.what();
            }
        }
    };

    const std::size_t n_workers = std::min(config.workers, std::max<std::size_t>(jobs.size(), 1));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ExperimentResult result;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (errors[i].empty()) {
            result.records.push_back(std::move(slots[i]));
        } else {
            result.failures.push_back(errors[i]);
        }
    }

    if (config.write_outputs) {
        write_file(out / "summary.csv", runs_csv(result.records));
        const std::string reference =
            std::find(config.algorithms.begin(), config.algorithms.end(), config.reference_algorithm) !=
                    config.algorithms.end()
                ? config.reference_algorithm
                : config.algorithms.front();
        const auto cells = summarize(result.records, reference);
        write_file(out / "table.csv", summary_table_csv(cells));
        write_file(out / "table.txt", summary_table_text(cells));
    }
    return result;
}

namespace {

// Two-sided exact p-value over all placements of the first sample's ranks.
// Ranks are doubled so midranks stay integral.
double exact_rank_sum_p(const std::vector<long>& doubled_ranks, std::size_t n1, long observed) {
    const std::size_t n = doubled_ranks.size();
    const long total = std::accumulate(doubled_ranks.begin(), doubled_ranks.end(), 0L);
    // 2 * E[W] * n = n1 * total * 2 / n; compare n * (2W) against n1 * total to stay in integers.
    const long centre = static_cast<long>(n1) * total;
    const long scale = static_cast<long>(n);
    const long observed_dev = std::labs(scale * observed - centre);
    std::size_t extreme = 0;
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n1) continue;
        long w = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) w += doubled_ranks[i];
        }
        ++count;
        if (std::labs(scale * w - centre) >= observed_dev) ++extreme;
    }
    return static_cast<double>(extreme) / static_cast<double>(count);
}

}  // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, Direction direction,
                                double level) {
    if (a.size() < 2 || b.size() < 2) throw ContractError("wilcoxon_rank_sum: each sample needs two values");
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    std::vector<std::pair<double, std::size_t>> pooled;
    pooled.reserve(n);
    for (std::size_t i = 0; i < n1; ++i) pooled.emplace_back(a[i], i);
    for (std::size_t i = 0; i < n2; ++i) pooled.emplace_back(b[i], n1 + i);
    std::sort(pooled.begin(), pooled.end());

    std::vector<long> doubled(n);
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) ++j;
        const long twice_mid = static_cast<long>(i + 1 + j);  // 2 * mean of ranks i+1..j
        for (std::size_t k = i; k < j; ++k) doubled[pooled[k].second] = twice_mid;
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    long w2 = 0;
    for (std::size_t i = 0; i < n1; ++i) w2 += doubled[i];
    const double w = static_cast<double>(w2) / 2.0;
    const double mean = static_cast<double>(n1) * static_cast<double>(n + 1) / 2.0;

    RankSumResult out;
    if (tie_term == static_cast<double>(n) * n * n - static_cast<double>(n)) {
        out.sign = '=';
        out.p = 1.0;
        out.exact = n <= 12;
        return out;
    }
    if (n <= 12) {
        out.exact = true;
        out.p = exact_rank_sum_p(doubled, n1, w2);
    } else {
        const double nd = static_cast<double>(n);
        const double var = static_cast<double>(n1) * static_cast<double>(n2) / 12.0 *
                           ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));
        const double dev = std::max(std::fabs(w - mean) - 0.5, 0.0);
        out.p = std::min(1.0, std::erfc(dev / std::sqrt(var) / std::sqrt(2.0)));
    }
    if (out.p < level && w != mean) {
        const bool first_larger = w > mean;
        const bool first_better = direction == Direction::HigherBetter ? first_larger : !first_larger;
        out.sign = first_better ? '+' : '-';
    } else {
        out.sign = '=';
    }
    return out;
}

double median(std::span<const double> values) {
    if (values.empty()) throw ContractError("median: empty sample");
    Vec v(values.begin(), values.end());
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double sample_std(std::span<const double> values) {
    if (values.empty()) throw ContractError("sample_std: empty sample");
    if (values.size() == 1) return 0.0;
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / double(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

std::vector<SummaryCell> summarize(const std::vector<RunRecord>& records, const std::string& reference_algorithm) {
    struct Samples {
        Vec hv;
        Vec igdp;
    };
    std::vector<std::pair<std::string, std::size_t>> problem_order;
    std::vector<std::string> algo_order;
    std::map<std::tuple<std::string, std::size_t, std::string>, Samples> cells;
    for (const auto& r : records) {
        const std::pair<std::string, std::size_t> key{r.problem, r.objectives};
        if (std::find(problem_order.begin(), problem_order.end(), key) == problem_order.end()) {
            problem_order.push_back(key);
        }
        if (std::find(algo_order.begin(), algo_order.end(), r.algorithm) == algo_order.end()) {
            algo_order.push_back(r.algorithm);
        }
        auto& s = cells[{r.problem, r.objectives, r.algorithm}];
        s.hv.push_back(r.hv);
        s.igdp.push_back(r.igdp);
    }

    std::vector<SummaryCell> out;
    for (const auto& [problem, m] : problem_order) {
        const auto ref = cells.find({problem, m, reference_algorithm});
        for (const auto& algo : algo_order) {
            const auto it = cells.find({problem, m, algo});
            if (it == cells.end()) continue;
            const Samples& s = it->second;
            SummaryCell c;
            c.problem = problem;
            c.objectives = m;
            c.algorithm = algo;
            c.runs = s.hv.size();
            c.hv_median = median(s.hv);
            c.hv_std = sample_std(s.hv);
            c.igdp_median = median(s.igdp);
            c.igdp_std = sample_std(s.igdp);
            if (algo != reference_algorithm && ref != cells.end() && s.hv.size() >= 2 &&
                ref->second.hv.size() >= 2) {
                c.hv_mark = wilcoxon_rank_sum(ref->second.hv, s.hv, Direction::HigherBetter).sign;
                c.igdp_mark = wilcoxon_rank_sum(ref->second.igdp, s.igdp, Direction::LowerBetter).sign;
            }
            out.push_back(c);
        }
    }
    return out;
}

std::string runs_csv(const std::vector<RunRecord>& records) {
    std::string out = "algorithm,problem,M,seed,N,generations,hv,hv_method,igdp,final_nodes,final_components\n";
    for (const auto& r : records) {
        out += r.algorithm + "," + r.problem + "," + std::to_string(r.objectives) + "," + std::to_string(r.seed) +
               "," + std::to_string(r.population) + "," + std::to_string(r.generations) + "," + fmt(r.hv) + "," +
               r.hv_method + "," + fmt(r.igdp) + "," + std::to_string(r.final_nodes) + "," +
               std::to_string(r.final_components) + "\n";
    }
    return out;
}

std::string summary_table_csv(const std::vector<SummaryCell>& cells) {
    std::string out = "problem,M,algorithm,runs,hv_median,hv_std,hv_mark,igdp_median,igdp_std,igdp_mark\n";
    auto mark = [](char c) { return c == ' ' ? std::string() : std::string(1, c); };
    for (const auto& c : cells) {
        out += c.problem + "," + std::to_string(c.objectives) + "," + c.algorithm + "," + std::to_string(c.runs) +
               "," + fmt(c.hv_median) + "," + fmt(c.hv_std) + "," + mark(c.hv_mark) + "," + fmt(c.igdp_median) +
               "," + fmt(c.igdp_std) + "," + mark(c.igdp_mark) + "\n";
    }
    return out;
}

std::string summary_table_text(const std::vector<SummaryCell>& cells) {
    std::vector<std::vector<std::string>> rows{{"problem", "M", "algorithm", "HV", "IGD+"}};
    for (const auto& c : cells) {
        rows.push_back({c.problem, std::to_string(c.objectives), c.algorithm,
                        fmt_short(c.hv_median) + " (" + fmt_short(c.hv_std) + ") " + c.hv_mark,
                        fmt_short(c.igdp_median) + " (" + fmt_short(c.igdp_std) + ") " + c.igdp_mark});
    }
    std::vector<std::size_t> width(rows.front().size(), 0);
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
    }
    std::string out;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::string cell = r[i];
            cell.resize(width[i], ' ');
            line += (i ? "  " : "") + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace rveaca
