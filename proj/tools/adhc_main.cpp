#include "adhc/absorbing.hpp"
#include "adhc/exact.hpp"
#include "adhc/extremal.hpp"
#include "adhc/families.hpp"
#include "adhc/io.hpp"
#include "adhc/maxcut.hpp"
#include "adhc/pipeline.hpp"
#include "adhc/stars.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

using namespace adhc;
using njson = nlohmann::ordered_json;

namespace {

// exit codes: 0 positive/verified, 1 proven negative, 2 invalid input,
// 3 inconclusive or budget exceeded
constexpr int kFound = 0, kNegative = 1, kBadInput = 2, kInconclusive = 3;

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    write_file(path, content);
}

VertexSet parse_set(const std::string& spec, int n) {
    std::string body = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open set file: " + spec.substr(1));
        body.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    for (auto& ch : body)
        if (ch == ',' || ch == '\n' || ch == '\t') ch = ' ';
    VertexSet s(n);
    std::istringstream is(body);
    long long v;
    while (is >> v) {
        if (v < 0 || v >= n) throw std::invalid_argument("set member out of range");
        s.insert((int)v);
    }
    return s;
}

std::string set_to_string(const VertexSet& s) {
    std::string out;
    s.for_each([&](int v) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    });
    return out;
}

CertKind cert_kind_for(const std::string& what) {
    if (what == "adhc") return CertKind::adhc;
    if (what == "adhp") return CertKind::adp;
    if (what == "2factor") return CertKind::two_factor;
    return CertKind::dhc;
}

int run_gen(const std::string& family, int n, int k, const std::string& pattern, int deg,
            uint64_t seed, const std::string& out, const std::string& dot) {
    Digraph d;
    if (family == "f") {
        d = gen_F(n, k);
    } else if (family == "f1") {
        d = gen_F1(n);
    } else if (family == "f2") {
        d = gen_F2(n);
    } else if (family == "complete") {
        d = gen_complete(n);
    } else if (family == "aladder") {
        d = gen_anti_ladder(n);
    } else if (family == "ladder") {
        // undirected ladder encoded as a digon digraph
        auto g = gen_ladder(n);
        d = Digraph(g.size());
        for (int li = 0; li < g.left_size(); ++li)
            g.for_each_left_nbr(li, [&](int ri) {
                d.add_arc(g.left_label(li), g.right_label(ri));
                d.add_arc(g.right_label(ri), g.left_label(li));
            });
    } else if (family == "cycle") {
        if (pattern == "alt") {
            d = gen_anti_cycle(n);
        } else {
            std::vector<uint8_t> bits;
            for (char ch : pattern) {
                if (ch == '+' || ch == '1') bits.push_back(1);
                else if (ch == '-' || ch == '0') bits.push_back(0);
                else throw std::invalid_argument(std::string("bad pattern character: ") + ch);
            }
            d = gen_oriented_cycle(bits);
        }
    } else if (family == "random") {
        d = gen_random_min_semidegree(n, deg, seed);
    } else {
        throw std::invalid_argument("unknown family: " + family);
    }
    write_output(out, serialize_digraph(d));
    if (!dot.empty()) write_output(dot, to_dot(d));
    return kFound;
}

int run_solve(const std::string& file, const std::string& what, int max_cycles,
              const std::string& mode, uint64_t budget, const std::string& cert_out,
              const std::string& format) {
    Digraph d = read_digraph_file(file);
    SolverConfig cfg;
    cfg.node_limit = budget;

    SolveStatus status;
    Certificate cert;
    cert.kind = cert_kind_for(what);
    uint64_t nodes = 0;

    if (what == "adhc") {
        auto r = mode == "naive" ? solve_adhc_naive(d) : solve_adhc(d, cfg);
        status = r.status;
        nodes = r.nodes;
        if (r.walk) cert.walks.push_back(*r.walk);
    } else if (what == "adhp") {
        auto r = solve_adhp(d, cfg);
        status = r.status;
        nodes = r.nodes;
        if (r.walk) cert.walks.push_back(*r.walk);
    } else if (what == "2factor") {
        auto r = solve_anti_two_factor(d, max_cycles, cfg);
        status = r.status;
        nodes = r.nodes;
        if (r.cert) cert.walks = r.cert->cycles;
    } else if (what == "dhc") {
        auto r = solve_directed_hc(d, cfg);
        status = r.status;
        nodes = r.nodes;
        if (r.walk) cert.walks.push_back(*r.walk);
    } else {
        throw std::invalid_argument("unknown target: " + what);
    }

    const char* verdict = status == SolveStatus::found ? "found"
                          : status == SolveStatus::absent ? "absent"
                                                          : "budget-exceeded";
    if (format == "json") {
        njson j;
        j["deterministic"] = {{"what", what}, {"verdict", verdict}};
        if (!cert.walks.empty()) j["deterministic"]["certificate"] = serialize_certificate(cert);
        j["measured"] = {{"nodes", nodes}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << what << ": " << verdict << " (nodes " << nodes << ")\n";
    }
    if (!cert_out.empty() && !cert.walks.empty())
        write_output(cert_out, serialize_certificate(cert));

    if (status == SolveStatus::found) return kFound;
    if (status == SolveStatus::absent) return kNegative;
    return kInconclusive;
}

int run_verify(const std::string& file, const std::string& cert_file) {
    Digraph d = read_digraph_file(file);
    std::ifstream in(cert_file);
    if (!in) throw std::invalid_argument("cannot open certificate: " + cert_file);
    auto cert = parse_certificate(in);
    auto v = verify_certificate(d, cert);
    if (v.ok) {
        std::cout << "valid\n";
        return kFound;
    }
    std::cout << "invalid: " << v.reason << '\n';
    return kNegative;
}

int run_census(const std::string& file, const std::string& what, const std::string& pair,
               uint64_t limit, int jobs, const std::string& format) {
    Digraph d = read_digraph_file(file);
    const bool absorbers = what == "absorbers";
    if (!absorbers && what != "connectors")
        throw std::invalid_argument("census target must be absorbers or connectors");

    auto count_pair = [&](int x, int y) -> uint64_t {
        if (absorbers) return enumerate_absorbers(d, x, y, limit).size();
        return enumerate_connectors(d, x, y, limit).size();
    };

    if (!pair.empty()) {
        auto comma = pair.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("pair must be x,y");
        int x = std::stoi(pair.substr(0, comma));
        int y = std::stoi(pair.substr(comma + 1));
        uint64_t c = count_pair(x, y);
        if (format == "json") {
            njson j;
            j["deterministic"] = {{"what", what}, {"x", x}, {"y", y}, {"count", c}};
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << what << "(" << x << "," << y << ") = " << c << '\n';
        }
        return kFound;
    }

    const int n = d.order();
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pairs.emplace_back(x, y);
    std::vector<uint64_t> counts(pairs.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            counts[i] = count_pair(pairs[i].first, pairs[i].second);
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    uint64_t total = 0, least = UINT64_MAX, most = 0;
    size_t argmin = 0;
    for (size_t i = 0; i < counts.size(); ++i) {
        total += counts[i];
        most = std::max(most, counts[i]);
        if (counts[i] < least) {
            least = counts[i];
            argmin = i;
        }
    }
    if (format == "json") {
        njson j;
        j["deterministic"] = {{"what", what},
                              {"pairs", pairs.size()},
                              {"total", total},
                              {"min", least},
                              {"min_pair", {pairs[argmin].first, pairs[argmin].second}},
                              {"max", most}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << what << ": total " << total << ", min " << least << " at ("
                  << pairs[argmin].first << "," << pairs[argmin].second << "), max " << most
                  << '\n';
    }
    return kFound;
}

int run_extremal(const std::string& file, double alpha, const std::string& mode,
                 uint64_t seed, const std::string& format) {
    Digraph d = read_digraph_file(file);
    auto r = extremal_witness(d, alpha,
                              mode == "exact" ? WitnessMode::exact : WitnessMode::local_search,
                              seed);
    if (format == "json") {
        njson j;
        j["deterministic"] = {{"alpha", alpha}, {"mode", mode}, {"exhaustive", r.exhaustive}};
        if (r.witness) {
            j["deterministic"]["a"] = set_to_string(r.witness->a);
            j["deterministic"]["b"] = set_to_string(r.witness->b);
        }
        std::cout << j.dump(2) << '\n';
    } else if (r.witness) {
        std::cout << "witness A={" << set_to_string(r.witness->a) << "} B={"
                  << set_to_string(r.witness->b) << "}\n";
    } else {
        std::cout << (r.exhaustive ? "none (proven)" : "none (inconclusive)") << '\n';
    }
    if (r.witness) return kFound;
    return r.exhaustive ? kNegative : kInconclusive;
}

int run_stars(const std::string& file, const std::string& format) {
    Digraph d = read_digraph_file(file);
    auto p = two_in_star_packing(d);
    auto sd = semi_degrees(d);
    int max_in = 0;
    for (int v = 0; v < d.order(); ++v) max_in = std::max(max_in, d.in_degree(v));
    double floor = star_packing_floor(d.order(), sd.delta_out, max_in);
    if (format == "json") {
        njson j;
        njson stars = njson::array();
        for (auto& s : p.stars) stars.push_back({s.center, s.leaf1, s.leaf2});
        j["deterministic"] = {{"stars", stars},
                              {"count", p.stars.size()},
                              {"edges",
                               {{p.arcs[0].first, p.arcs[0].second},
                                {p.arcs[1].first, p.arcs[1].second}}},
                              {"floor", floor}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << p.stars.size() << " stars (floor " << floor << "), edges ("
                  << p.arcs[0].first << "," << p.arcs[0].second << ") (" << p.arcs[1].first
                  << "," << p.arcs[1].second << ")\n";
        for (auto& s : p.stars)
            std::cout << "  star center " << s.center << " leaves " << s.leaf1 << " "
                      << s.leaf2 << '\n';
    }
    return kFound;
}

int run_maxcut(const std::string& file, const std::string& xs, const std::string& ys, double c,
               const std::string& format) {
    Digraph d = read_digraph_file(file);
    VertexSet x = parse_set(xs, d.order());
    VertexSet y = parse_set(ys, d.order());
    auto r = maxcut_partition(d, x, y, c);
    int dout = INT32_MAX, din = INT32_MAX;
    r.x.for_each([&](int v) { dout = std::min(dout, d.out_degree_in(v, r.y)); });
    r.y.for_each([&](int v) { din = std::min(din, d.in_degree_in(v, r.x)); });
    if (format == "json") {
        njson j;
        j["deterministic"] = {{"x", set_to_string(r.x)},
                              {"y", set_to_string(r.y)},
                              {"min_out", dout},
                              {"min_in", din}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "X'={" << set_to_string(r.x) << "} Y'={" << set_to_string(r.y)
                  << "} min_out " << dout << " min_in " << din << '\n';
    }
    return kFound;
}

njson report_to_json(const PipelineReport& rep, uint64_t seed, int order) {
    njson j;
    j["deterministic"] = {{"n", order},
                          {"seed", seed},
                          {"outcome", to_string(rep.outcome)},
                          {"route", to_string(rep.route)},
                          {"retries", rep.retries_used}};
    if (!rep.note.empty()) j["deterministic"]["note"] = rep.note;
    if (rep.cert) {
        Certificate c;
        c.kind = CertKind::adhc;
        c.walks.push_back(*rep.cert);
        j["deterministic"]["certificate"] = serialize_certificate(c);
    }
    j["measured"] = {{"elapsed_ms", rep.elapsed_ms}, {"nodes", rep.nodes}};
    return j;
}

int run_pipeline(const std::string& file, uint64_t seed, int retries,
                 const std::string& cert_out, const std::string& format, const Params& params,
                 int cutoff, uint64_t budget) {
    Digraph d = read_digraph_file(file);
    PipelineConfig cfg;
    cfg.params = params;
    cfg.route1_retries = retries;
    cfg.solver.exact_cutoff = cutoff;
    cfg.solver.node_limit = budget;
    auto rep = heuristic_adhc(d, cfg, seed);

    if (format == "json") {
        std::cout << report_to_json(rep, seed, d.order()).dump(2) << '\n';
    } else {
        std::cout << "outcome " << to_string(rep.outcome) << " via " << to_string(rep.route);
        if (!rep.note.empty()) std::cout << " (" << rep.note << ")";
        std::cout << '\n';
    }
    if (rep.cert && !cert_out.empty()) {
        Certificate c;
        c.kind = CertKind::adhc;
        c.walks.push_back(*rep.cert);
        write_output(cert_out, serialize_certificate(c));
    }
    switch (rep.outcome) {
        case PipelineReport::Outcome::adhc: return kFound;
        case PipelineReport::Outcome::inconclusive: return kInconclusive;
        default: return kNegative;
    }
}

int run_search(int size, int trials, int floor, uint64_t seed, int jobs,
               const std::string& out_prefix, const std::string& format) {
    CounterexampleConfig cfg;
    cfg.jobs = jobs;
    auto found = counterexample_search(size, trials, floor, seed, cfg);
    if (format == "json") {
        njson j;
        j["deterministic"] = {{"size", size},
                              {"trials", trials},
                              {"floor", floor},
                              {"seed", seed},
                              {"found", found.size()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << found.size() << " counterexample candidate(s) in " << trials
                  << " trials\n";
    }
    if (!out_prefix.empty())
        for (size_t i = 0; i < found.size(); ++i)
            write_file(out_prefix + "_" + std::to_string(i) + ".dg",
                       serialize_digraph(found[i]));
    return kFound;
}

int run_bench(const std::string& suite, uint64_t seed, const std::string& format) {
    using clock = std::chrono::steady_clock;
    njson det_cases = njson::array(), meas_cases = njson::array();

    auto timed = [&](const std::string& name, auto&& fn) {
        auto t0 = clock::now();
        std::string outcome = fn();
        double ms =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(clock::now() -
                                                                                  t0)
                .count();
        det_cases.push_back({{"name", name}, {"outcome", outcome}});
        meas_cases.push_back({{"name", name}, {"ms", ms}});
    };

    if (suite == "route1-2000") {
        for (int i = 0; i < 3; ++i) {
            timed("dense-2000-" + std::to_string(i), [&]() -> std::string {
                std::mt19937_64 rng(seed + i);
                std::bernoulli_distribution coin(0.75);
                Digraph d(2000);
                for (int u = 0; u < 2000; ++u)
                    for (int v = 0; v < 2000; ++v)
                        if (u != v && coin(rng)) d.add_arc(u, v);
                PipelineConfig cfg;
                auto rep = heuristic_adhc(d, cfg, seed + i);
                return to_string(rep.outcome);
            });
        }
    } else if (suite == "exact-12") {
        timed("f1-12-absence", [&]() -> std::string {
            return solve_adhc(gen_F1(12)).status == SolveStatus::absent ? "absent" : "unexpected";
        });
        timed("f2-12-absence", [&]() -> std::string {
            return solve_adhc(gen_F2(12)).status == SolveStatus::absent ? "absent" : "unexpected";
        });
        timed("family-12-absence", [&]() -> std::string {
            for (int k = 1; k <= 6; ++k)
                if (solve_adhc(gen_F(12, k)).status != SolveStatus::absent) return "unexpected";
            return "absent";
        });
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    njson j;
    j["deterministic"] = {{"suite", suite}, {"seed", seed}, {"cases", det_cases}};
    j["measured"] = {{"cases", meas_cases}};
    if (format == "json") std::cout << j.dump(2) << '\n';
    else std::cout << j.dump(2) << '\n';
    return kFound;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-directed Hamiltonicity toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named digraph family");
    std::string g_family, g_pattern, g_out = "-", g_dot;
    int g_n = 0, g_k = 1, g_d = 0;
    uint64_t g_seed = 1;
    gen->add_option("--family", g_family, "f|f1|f2|ladder|aladder|cycle|complete|random")
        ->required();
    gen->add_option("--n", g_n, "order / rung count");
    gen->add_option("--k", g_k, "Y-class size for the f family");
    gen->add_option("--pattern", g_pattern, "cycle orientation bits (+-/10) or 'alt'");
    gen->add_option("--d", g_d, "semi-degree floor for random");
    gen->add_option("--seed", g_seed, "random seed");
    gen->add_option("-o,--output", g_out, "output path ('-' = stdout)");
    gen->add_option("--dot", g_dot, "also write a DOT rendering");

    // solve
    auto* solve = app.add_subcommand("solve", "exact solvers with certificates");
    std::string s_file, s_what = "adhc", s_mode = "exact", s_cert, s_format = "text";
    int s_max_cycles = 2;
    uint64_t s_budget = 50'000'000;
    solve->add_option("file", s_file, "digraph file ('-' = stdin)")->required();
    solve->add_option("--what", s_what, "adhc|adhp|2factor|dhc");
    solve->add_option("--max-cycles", s_max_cycles, "cycle cap for 2factor");
    solve->add_option("--mode", s_mode, "exact|naive (adhc only)");
    solve->add_option("--budget", s_budget, "search node budget");
    solve->add_option("--cert", s_cert, "write certificate here");
    solve->add_option("--format", s_format, "text|json");

    // verify
    auto* verify = app.add_subcommand("verify", "check a certificate against a digraph");
    std::string v_file, v_cert;
    verify->add_option("file", v_file)->required();
    verify->add_option("cert", v_cert)->required();

    // census
    auto* census = app.add_subcommand("census", "absorber/connector counts");
    std::string c_file, c_what = "absorbers", c_pair, c_format = "text";
    uint64_t c_limit = UINT64_MAX;
    int c_jobs = 1;
    census->add_option("file", c_file)->required();
    census->add_option("--what", c_what, "absorbers|connectors");
    census->add_option("--pair", c_pair, "single ordered pair x,y");
    census->add_option("--limit", c_limit, "per-pair enumeration cap");
    census->add_option("--jobs", c_jobs, "worker threads");
    census->add_option("--format", c_format, "text|json");

    // extremal
    auto* extremal = app.add_subcommand("extremal", "extremal witness search");
    std::string e_file, e_mode = "exact", e_format = "text";
    double e_alpha = 0.3;
    uint64_t e_seed = 1;
    extremal->add_option("file", e_file)->required();
    extremal->add_option("--alpha", e_alpha)->required();
    extremal->add_option("--mode", e_mode, "exact|search");
    extremal->add_option("--seed", e_seed);
    extremal->add_option("--format", e_format, "text|json");

    // stars
    auto* stars = app.add_subcommand("stars", "2-in-star packing");
    std::string st_file, st_format = "text";
    stars->add_option("file", st_file)->required();
    stars->add_option("--format", st_format, "text|json");

    // maxcut
    auto* maxcut = app.add_subcommand("maxcut", "dense-pair partition with degree floors");
    std::string m_file, m_x, m_y, m_format = "text";
    double m_c = 0.5;
    maxcut->add_option("file", m_file)->required();
    maxcut->add_option("--x", m_x, "comma-separated indices or @file")->required();
    maxcut->add_option("--y", m_y, "comma-separated indices or @file")->required();
    maxcut->add_option("--c", m_c, "density parameter")->required();
    maxcut->add_option("--format", m_format, "text|json");

    // pipeline
    auto* pipeline = app.add_subcommand("pipeline", "end-to-end search");
    std::string p_file, p_cert, p_report = "text";
    uint64_t p_seed = 1, p_budget = 50'000'000;
    int p_retries = 50, p_cutoff = 24;
    Params p_params;
    pipeline->add_option("file", p_file)->required();
    pipeline->add_option("--seed", p_seed);
    pipeline->add_option("--retries", p_retries, "random bipartitions before the next route");
    pipeline->add_option("--cert", p_cert, "write the cycle certificate here");
    pipeline->add_option("--report", p_report, "text|json");
    pipeline->add_option("--alpha", p_params.alpha);
    pipeline->add_option("--beta", p_params.beta);
    pipeline->add_option("--gamma", p_params.gamma);
    pipeline->add_option("--lambda", p_params.lambda);
    pipeline->add_option("--cutoff", p_cutoff, "max order for the exact route");
    pipeline->add_option("--budget", p_budget, "exact-route node budget");

    // search
    auto* search = app.add_subcommand("search", "seeded counterexample search");
    int se_size = 8, se_trials = 100, se_floor = 4, se_jobs = 1;
    uint64_t se_seed = 1;
    std::string se_out, se_format = "text";
    search->add_option("--size", se_size)->required();
    search->add_option("--trials", se_trials)->required();
    search->add_option("--floor", se_floor)->required();
    search->add_option("--seed", se_seed);
    search->add_option("--jobs", se_jobs);
    search->add_option("-o,--output", se_out, "write findings as PREFIX_i.dg");
    search->add_option("--format", se_format, "text|json");

    // bench
    auto* bench = app.add_subcommand("bench", "timing suites");
    std::string b_suite, b_format = "json";
    uint64_t b_seed = 1;
    bench->add_option("--suite", b_suite, "route1-2000|exact-12")->required();
    bench->add_option("--seed", b_seed);
    bench->add_option("--format", b_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*gen)
            return run_gen(g_family, g_n, g_k, g_pattern, g_d, g_seed, g_out, g_dot);
        if (*solve)
            return run_solve(s_file, s_what, s_max_cycles, s_mode, s_budget, s_cert, s_format);
        if (*verify) return run_verify(v_file, v_cert);
        if (*census) return run_census(c_file, c_what, c_pair, c_limit, c_jobs, c_format);
        if (*extremal) return run_extremal(e_file, e_alpha, e_mode, e_seed, e_format);
        if (*stars) return run_stars(st_file, st_format);
        if (*maxcut) return run_maxcut(m_file, m_x, m_y, m_c, m_format);
        if (*pipeline)
            return run_pipeline(p_file, p_seed, p_retries, p_cert, p_report, p_params, p_cutoff,
                                p_budget);
        if (*search)
            return run_search(se_size, se_trials, se_floor, se_seed, se_jobs, se_out, se_format);
        if (*bench) return run_bench(b_suite, b_seed, b_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
    return kBadInput;
}
