// Command line front end: generate, reduce and solve lattices, check the
// volume estimators, and run the benchmark harness.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "latsieve/latsieve.hpp"

using json = nlohmann::ordered_json;
using namespace latsieve;
using Clock = std::chrono::steady_clock;

namespace {

double elapsed_ms(Clock::time_point t0, Clock::time_point t1) {
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

IntMat load_basis(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return parse_matrix(buf.str());
    }
    return read_matrix_file(path);
}

void emit_matrix(const std::string& path, const IntMat& m) {
    if (path.empty() || path == "-")
        std::cout << format_matrix(m);
    else
        write_matrix_file(path, m);
}

void emit_json(const std::string& path, const json& j) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

json vector_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

json stats_to_json(const SieveStats& st) {
    return json{{"samples", st.samples},
                {"passes", st.passes},
                {"reductions", st.reductions},
                {"collisions", st.collisions},
                {"distance_evals", st.distance_evals},
                {"peak_list_size", st.peak_list_size},
                {"final_list_size", st.final_list_size}};
}

// "8,12,16" or "8:24:4" or a single value
std::vector<size_t> parse_dims(const std::string& spec) {
    std::vector<size_t> dims;
    if (spec.find(':') != std::string::npos) {
        size_t lo = 0, hi = 0, step = 1;
        char c1 = 0, c2 = 0;
        std::istringstream ss(spec);
        ss >> lo >> c1 >> hi;
        if (ss >> c2 >> step) {
            if (c2 != ':') throw CLI::ValidationError("--dims", "bad range '" + spec + "'");
        }
        if (!lo || c1 != ':' || hi < lo || !step)
            throw CLI::ValidationError("--dims", "bad range '" + spec + "'");
        for (size_t d = lo; d <= hi; d += step) dims.push_back(d);
        return dims;
    }
    std::istringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        dims.push_back(std::stoul(tok));
    }
    if (dims.empty()) throw CLI::ValidationError("--dims", "no dimensions in '" + spec + "'");
    return dims;
}

struct SvpOptions {
    std::string input, json_path;
    std::string algo = "list";
    SieveParams params;
    bool verify = false;
};

int run_svp(const SvpOptions& opt) {
    IntMat b = load_basis(opt.input);
    auto t0 = Clock::now();
    SieveResult r = (opt.algo == "pair") ? sieve_shortest_pairs(b, opt.params)
                                         : sieve_shortest_list(b, opt.params);
    auto t1 = Clock::now();

    std::cout << "dim:       " << b.size() << "\n";
    std::cout << "algorithm: " << opt.algo << "\n";
    std::cout << "vector:   ";
    for (const Int& x : r.vector) std::cout << " " << x;
    std::cout << "\n";
    std::cout << "norm_sq:   " << r.norm_sq << "\n";
    std::cout << "norm:      " << std::sqrt(to_double(r.norm_sq)) << "\n";
    double gh = gaussian_heuristic(b);
    std::cout << "norm/gh:   " << std::sqrt(to_double(r.norm_sq)) / gh << "\n";
    std::cout << "passes:    " << r.stats.passes << "\n";
    std::cout << "time_ms:   " << elapsed_ms(t0, t1) << "\n";

    json j{{"command", "svp"},
           {"dim", b.size()},
           {"algorithm", opt.algo},
           {"seed", opt.params.seed},
           {"norm_sq", r.norm_sq.get_str()},
           {"norm", std::sqrt(to_double(r.norm_sq))},
           {"gaussian_heuristic", gh},
           {"vector", vector_to_json(r.vector)},
           {"time_ms", elapsed_ms(t0, t1)},
           {"stats", stats_to_json(r.stats)}};

    int rc = 0;
    if (opt.verify) {
        EnumerationResult e = enumerate_shortest(b);
        bool match = (e.norm_sq == r.norm_sq);
        std::cout << "enum_norm_sq: " << e.norm_sq << (match ? "  (match)" : "  (MISMATCH)")
                  << "\n";
        j["enum_norm_sq"] = e.norm_sq.get_str();
        j["verified"] = match;
        if (!match) rc = 2;
    }
    emit_json(opt.json_path, j);
    return rc;
}

int run_bench(const std::string& dims_spec, int seeds, const std::string& algo,
              unsigned bits_per_dim, size_t enum_limit, size_t samples,
              const std::string& csv_path, const std::string& json_path) {
    std::vector<size_t> dims = parse_dims(dims_spec);
    json rows = json::array();
    std::ostringstream csv;
    csv << "dim,seed,bits,algo,samples,time_lll_ms,time_sieve_ms,time_enum_ms,"
           "sieve_norm_sq,enum_norm_sq,exact_match,norm,gaussian_heuristic,approx_ratio,"
           "passes,reductions,peak_list\n";
    std::printf("%4s %5s %6s %10s %10s %10s %8s %6s\n", "dim", "seed", "algo", "lll_ms",
                "sieve_ms", "enum_ms", "norm/gh", "exact");

    for (size_t dim : dims) {
        for (int seed = 0; seed < seeds; ++seed) {
            unsigned bits = static_cast<unsigned>(bits_per_dim * dim);
            IntMat b = random_prime_hnf_basis(dim, bits, static_cast<uint64_t>(seed));
            auto t0 = Clock::now();
            lll_reduce(b);
            auto t1 = Clock::now();

            SieveParams p;
            p.seed = static_cast<uint64_t>(seed) + 1;
            p.samples = samples;
            auto t2 = Clock::now();
            SieveResult r = (algo == "pair") ? sieve_shortest_pairs(b, p)
                                             : sieve_shortest_list(b, p);
            auto t3 = Clock::now();

            std::optional<Int> enum_norm;
            double enum_ms = 0.0;
            if (dim <= enum_limit) {
                auto t4 = Clock::now();
                enum_norm = shortest_norm_sq(b);
                auto t5 = Clock::now();
                enum_ms = elapsed_ms(t4, t5);
            }

            double gh = gaussian_heuristic(b);
            double norm = std::sqrt(to_double(r.norm_sq));
            double ratio = norm / gh;
            std::string match = enum_norm ? (*enum_norm == r.norm_sq ? "yes" : "no") : "n/a";

            std::printf("%4zu %5d %6s %10.1f %10.1f %10.1f %8.3f %6s\n", dim, seed,
                        algo.c_str(), elapsed_ms(t0, t1), elapsed_ms(t2, t3), enum_ms, ratio,
                        match.c_str());
            std::fflush(stdout);

            csv << dim << "," << seed << "," << bits << "," << algo << "," << r.stats.samples
                << "," << elapsed_ms(t0, t1) << "," << elapsed_ms(t2, t3) << "," << enum_ms
                << "," << r.norm_sq << "," << (enum_norm ? enum_norm->get_str() : "") << ","
                << match << "," << norm << "," << gh << "," << ratio << "," << r.stats.passes
                << "," << r.stats.reductions << "," << r.stats.peak_list_size << "\n";

            json row{{"dim", dim},
                     {"seed", seed},
                     {"bits", bits},
                     {"algorithm", algo},
                     {"samples", r.stats.samples},
                     {"time_lll_ms", elapsed_ms(t0, t1)},
                     {"time_sieve_ms", elapsed_ms(t2, t3)},
                     {"sieve_norm_sq", r.norm_sq.get_str()},
                     {"norm", norm},
                     {"gaussian_heuristic", gh},
                     {"approx_ratio", ratio},
                     {"passes", r.stats.passes},
                     {"reductions", r.stats.reductions},
                     {"peak_list_size", r.stats.peak_list_size}};
            if (enum_norm) {
                row["time_enum_ms"] = enum_ms;
                row["enum_norm_sq"] = enum_norm->get_str();
                row["exact_match"] = (*enum_norm == r.norm_sq);
            }
            rows.push_back(row);
        }
    }
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        if (!out) throw std::runtime_error("cannot open '" + csv_path + "' for writing");
        out << csv.str();
    }
    emit_json(json_path, json{{"command", "bench"}, {"results", rows}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"randomized sieving toolkit for the shortest lattice vector problem"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "latsieve 0.1.0");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random lattice basis");
    size_t gen_dim = 0;
    unsigned gen_bits = 0;
    uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--dim", gen_dim, "lattice dimension")->required();
    gen->add_option("--bits", gen_bits, "bit length of the prime determinant (default 10*dim)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // reduce
    auto* red = app.add_subcommand("reduce", "LLL-reduce a basis with exact arithmetic");
    std::string red_in, red_out, red_delta = "3/4", red_u;
    bool red_stats = false;
    red->add_option("-i,--input", red_in, "basis file (default stdin)");
    red->add_option("-o,--output", red_out, "output file (default stdout)");
    red->add_option("--delta", red_delta, "Lovasz constant as a fraction or decimal");
    red->add_option("--transform", red_u, "also write the unimodular transform here");
    red->add_flag("--stats", red_stats, "print swap and reduction counts to stderr");

    // svp
    auto* svp = app.add_subcommand("svp", "find a shortest nonzero vector by sieving");
    SvpOptions svp_opt;
    svp->add_option("-i,--input", svp_opt.input, "basis file (default stdin)");
    svp->add_option("--algo", svp_opt.algo, "sieve flavor: list or pair")
        ->check(CLI::IsMember({"list", "pair"}));
    svp->add_option("--samples", svp_opt.params.samples, "sample count (0 = automatic)");
    svp->add_option("--seed", svp_opt.params.seed, "sieve seed");
    svp->add_option("--gamma", svp_opt.params.gamma, "list sieve shrink factor");
    svp->add_option("--pair-gamma", svp_opt.params.pair_gamma, "pair sieve shrink factor");
    svp->add_option("--xi", svp_opt.params.xi, "perturbation radius / target length");
    svp->add_option("--target-scale", svp_opt.params.target_scale,
                    "target length as a multiple of the gaussian heuristic");
    svp->add_option("--max-passes", svp_opt.params.max_passes, "pass limit");
    svp->add_flag("--verify", svp_opt.verify, "cross-check against exact enumeration");
    svp->add_option("--json", svp_opt.json_path, "write a JSON report here ('-' = stdout)");

    // enum
    auto* enm = app.add_subcommand("enum", "find a shortest nonzero vector by enumeration");
    std::string enum_in, enum_json;
    enm->add_option("-i,--input", enum_in, "basis file (default stdin)");
    enm->add_option("--json", enum_json, "write a JSON report here ('-' = stdout)");

    // volume
    auto* vol = app.add_subcommand("volume", "exact vs monte carlo ball intersection volumes");
    unsigned vol_dim = 0;
    double vol_gamma = 0.0, vol_r1 = 0.0, vol_r2 = 0.0, vol_dist = 0.0;
    size_t vol_samples = 200000;
    uint64_t vol_seed = 1;
    std::string vol_json;
    vol->add_option("--dim", vol_dim, "ambient dimension")->required();
    vol->add_option("--gamma", vol_gamma, "sieve overlap mode: balls of radius gamma and 1 at distance 1");
    vol->add_option("--r1", vol_r1, "first radius");
    vol->add_option("--r2", vol_r2, "second radius");
    vol->add_option("--dist", vol_dist, "center distance");
    vol->add_option("--samples", vol_samples, "monte carlo sample count");
    vol->add_option("--seed", vol_seed, "monte carlo seed");
    vol->add_option("--json", vol_json, "write a JSON report here ('-' = stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark harness over random lattices");
    std::string bench_dims = "12:24:4", bench_algo = "list", bench_csv, bench_json;
    int bench_seeds = 2;
    unsigned bench_bits = 10;
    size_t bench_enum_limit = 26, bench_samples = 0;
    bench->add_option("--dims", bench_dims, "dimensions, e.g. 12,16,20 or 12:24:4");
    bench->add_option("--seeds", bench_seeds, "instances per dimension")->check(CLI::PositiveNumber);
    bench->add_option("--algo", bench_algo, "sieve flavor: list or pair")
        ->check(CLI::IsMember({"list", "pair"}));
    bench->add_option("--bits-per-dim", bench_bits, "determinant bits per dimension");
    bench->add_option("--enum-limit", bench_enum_limit,
                      "verify with enumeration up to this dimension");
    bench->add_option("--samples", bench_samples, "sieve sample count (0 = automatic)");
    bench->add_option("--csv", bench_csv, "write results as CSV here");
    bench->add_option("--json", bench_json, "write results as JSON here ('-' = stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            if (gen_bits == 0) gen_bits = static_cast<unsigned>(10 * gen_dim);
            emit_matrix(gen_out, random_prime_hnf_basis(gen_dim, gen_bits, gen_seed));
            return 0;
        }
        if (*red) {
            IntMat b = load_basis(red_in);
            LllParams p;
            p.delta = rat_from_string(red_delta);
            LllStats st;
            if (red_u.empty()) {
                st = lll_reduce(b, p);
            } else {
                IntMat u;
                st = lll_reduce(b, u, p);
                write_matrix_file(red_u, u);
            }
            emit_matrix(red_out, b);
            if (red_stats)
                std::cerr << "swaps: " << st.swaps << "  size_reductions: " << st.size_reductions
                          << "\n";
            return 0;
        }
        if (*svp) return run_svp(svp_opt);
        if (*enm) {
            IntMat b = load_basis(enum_in);
            auto t0 = Clock::now();
            EnumerationResult r = enumerate_shortest(b);
            auto t1 = Clock::now();
            std::cout << "dim:       " << b.size() << "\n";
            std::cout << "vector:   ";
            for (const Int& x : r.vector) std::cout << " " << x;
            std::cout << "\n";
            std::cout << "norm_sq:   " << r.norm_sq << "\n";
            std::cout << "norm:      " << std::sqrt(to_double(r.norm_sq)) << "\n";
            std::cout << "nodes:     " << r.nodes << "\n";
            std::cout << "time_ms:   " << elapsed_ms(t0, t1) << "\n";
            emit_json(enum_json, json{{"command", "enum"},
                                      {"dim", b.size()},
                                      {"norm_sq", r.norm_sq.get_str()},
                                      {"norm", std::sqrt(to_double(r.norm_sq))},
                                      {"vector", vector_to_json(r.vector)},
                                      {"nodes", r.nodes},
                                      {"time_ms", elapsed_ms(t0, t1)}});
            return 0;
        }
        if (*vol) {
            double r1 = vol_r1, r2 = vol_r2, dist = vol_dist;
            if (vol_gamma > 0.0) {
                r1 = vol_gamma;
                r2 = 1.0;
                dist = 1.0;
            }
            if (r1 <= 0.0 || r2 <= 0.0)
                throw CLI::ValidationError("volume", "give either --gamma or --r1/--r2/--dist");
            double exact = ball_intersection_volume(vol_dim, r1, r2, dist);
            Rng rng(vol_seed);
            McEstimate mc = mc_ball_intersection_volume(vol_dim, r1, r2, dist, vol_samples, rng);
            double sigmas = mc.std_error > 0.0 ? std::fabs(mc.value - exact) / mc.std_error : 0.0;
            std::cout << "dim:.       " << vol_dim << "\n";
            std::cout << "exact:      " << exact << "\n";
            std::cout << "monte_carlo " << mc.value << "  (std_error " << mc.std_error << ", "
                      << mc.samples << " samples, " << mc.hits << " hits)\n";
            std::cout << "deviation:  " << sigmas << " standard errors\n";
            emit_json(vol_json, json{{"command", "volume"},
                                     {"dim", vol_dim},
                                     {"r1", r1},
                                     {"r2", r2},
                                     {"dist", dist},
                                     {"exact", exact},
                                     {"monte_carlo", mc.value},
                                     {"std_error", mc.std_error},
                                     {"samples", mc.samples},
                                     {"hits", mc.hits},
                                     {"deviation_sigmas", sigmas}});
            return 0;
        }
        if (*bench)
            return run_bench(bench_dims, bench_seeds, bench_algo, bench_bits, bench_enum_limit,
                             bench_samples, bench_csv, bench_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
