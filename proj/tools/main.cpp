// Command-line front end: every computation in the library behind one
// binary with JSON output on stdout and diagnostics on stderr.
//
// Exit codes: 0 success, 1 domain error, 2 usage/parse error, 3 internal
// consistency failure (cross-oracle mismatch).

#include <CLI11.hpp>
#include <json.hpp>

#include <symchar/characters.hpp>
#include <symchar/cumulants.hpp>
#include <symchar/kerov.hpp>
#include <symchar/maps.hpp>
#include <symchar/restrict.hpp>
#include <symchar/transport.hpp>
#include <symchar/verify.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace symchar;

namespace {

constexpr int kDefaultMapsBound = 8;   // k! maps are streamed; 8! = 40320
constexpr int kHardMapsCap = 10;       // ~3.6M maps, minutes of runtime
constexpr int kDefaultKerovBound = 7;  // the solve stays under a second here
constexpr int kHardKerovCap = 9;

struct Options {
    std::string format = "json";
    int threads = 1;
    int maps_bound = kDefaultMapsBound;
    int kerov_bound = kDefaultKerovBound;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw parse_error("bad integer '" + item + "' in '" + text + "'");
        }
    }
    if (out.empty()) throw parse_error("empty list");
    return out;
}

json polynomial_json(const RPolynomial& p) {
    json terms = json::array();
    for (const auto& [mono, coeff] : p.terms())
        terms.push_back(json{{"monomial", mono}, {"coefficient", to_string(coeff)}});
    return terms;
}

void check_bound(int k, int bound, int hard_cap, const std::string& what) {
    if (k > std::min(bound, hard_cap))
        throw domain_error(what + " bound exceeded: k = " + std::to_string(k) + " > " +
                           std::to_string(std::min(bound, hard_cap)));
}

int emit(const Options& opt, const std::string& command, const json& inputs,
         const json& output, const std::string& text,
         std::chrono::steady_clock::time_point start) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (opt.format == "text") {
        std::cout << text << "\n";
    } else {
        json envelope{{"command", command},
                      {"inputs", inputs},
                      {"output", output},
                      {"elapsed_ms", elapsed}};
        std::cout << envelope.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-group characters, free cumulants and Kerov polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--threads", opt.threads, "worker threads for enumeration and sampling")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--max-maps-k", opt.maps_bound,
                   "largest k enumerated as maps (hard cap " + std::to_string(kHardMapsCap) + ")")
        ->capture_default_str();
    app.add_option("--max-kerov-k", opt.kerov_bound,
                   "largest k for the Kerov solve (hard cap " + std::to_string(kHardKerovCap) + ")")
        ->capture_default_str();

    std::string lambda_text, class_text, cycles_text, sigma1_text, decor_text;
    int arg_k = 0, arg_max = 0, arg_flow_k = 0;
    long arg_m = 0, arg_trials = 0;
    std::uint64_t arg_seed = 0;
    std::string kerov_method = "solve";
    std::string verify_level = "quick";

    auto* cmd_char = app.add_subcommand("char", "irreducible character chi^lambda(mu)");
    cmd_char->add_option("--lambda", lambda_text, "partition, e.g. 3,1")->required();
    cmd_char->add_option("--class", class_text, "conjugacy class partition of |lambda|")
        ->required();

    auto* cmd_nchar = app.add_subcommand("nchar", "normalized character Ch on given cycles");
    cmd_nchar->add_option("--lambda", lambda_text)->required();
    cmd_nchar->add_option("--cycles", cycles_text, "cycle lengths, e.g. 3,2")->required();

    auto* cmd_cumulants = app.add_subcommand("cumulants", "free cumulants R_1..R_max");
    cmd_cumulants->add_option("--lambda", lambda_text)->required();
    cmd_cumulants->add_option("--max", arg_max, "highest order")->required();

    auto* cmd_kerov = app.add_subcommand("kerov", "Kerov polynomial for Ch_k");
    cmd_kerov->add_option("--k", arg_k)->required();
    cmd_kerov
        ->add_option("--method", kerov_method, "solve: linear system; maps: transport counts")
        ->check(CLI::IsMember({"solve", "maps"}))
        ->capture_default_str();

    auto* cmd_stanley = app.add_subcommand("stanley", "map-sum normalized character");
    cmd_stanley->add_option("--lambda", lambda_text)->required();
    cmd_stanley->add_option("--k", arg_k)->required();

    auto* cmd_cov = app.add_subcommand("cov", "covariance Kerov polynomial for two cycles");
    cmd_cov->add_option("--cycles", cycles_text, "exactly two cycle lengths, e.g. 3,2")
        ->required();

    auto* cmd_flow = app.add_subcommand("flow-check", "strict-positivity transport check");
    cmd_flow->add_option("--sigma1", sigma1_text, "white permutation in cycle notation")
        ->required();
    cmd_flow->add_option("--decor", decor_text, "decorations per black vertex, e.g. 4,2")
        ->required();
    cmd_flow->add_option("--k", arg_flow_k, "edge count (default: largest point in sigma1)");

    auto* cmd_sim = app.add_subcommand("restrict-sim", "restriction-process scaling experiment");
    cmd_sim->add_option("--lambda", lambda_text)->required();
    cmd_sim->add_option("--m", arg_m, "target size")->required();
    cmd_sim->add_option("--k", arg_k, "cycle length in the scaling law")->required();
    cmd_sim->add_option("--trials", arg_trials)->required();
    cmd_sim->add_option("--seed", arg_seed)->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "run the cross-oracle suites");
    cmd_verify->add_option("--level", verify_level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        if (cmd_char->parsed()) {
            const Partition lambda = Partition::parse(lambda_text);
            const Partition mu = Partition::parse(class_text);
            const BigInt value = mn_character(lambda, mu);
            return emit(opt, "char",
                        {{"lambda", lambda.to_string()}, {"class", mu.to_string()}},
                        {{"value", to_string(value)}}, to_string(value), start);
        }
        if (cmd_nchar->parsed()) {
            const Partition lambda = Partition::parse(lambda_text);
            const CycleArgument arg = CycleArgument::parse(cycles_text);
            const Rational value = normalized_character(lambda, arg);
            return emit(opt, "nchar",
                        {{"lambda", lambda.to_string()}, {"cycles", arg.cycles()}},
                        {{"value", to_string(value)}}, to_string(value), start);
        }
        if (cmd_cumulants->parsed()) {
            const Partition lambda = Partition::parse(lambda_text);
            if (arg_max < 1) throw domain_error("--max must be >= 1");
            const FreeCumulantSequence r = free_cumulants(lambda, arg_max);
            json values = json::array();
            std::string text;
            for (int k = 1; k <= arg_max; ++k) {
                values.push_back(to_string(r.at(k)));
                text += "R" + std::to_string(k) + " = " + to_string(r.at(k)) +
                        (k < arg_max ? "\n" : "");
            }
            return emit(opt, "cumulants", {{"lambda", lambda.to_string()}, {"max", arg_max}},
                        {{"free_cumulants", values}}, text, start);
        }
        if (cmd_kerov->parsed()) {
            if (arg_k < 1) throw domain_error("--k must be >= 1");
            RPolynomial poly;
            if (kerov_method == "maps") {
                check_bound(arg_k, opt.maps_bound, kHardMapsCap, "map enumeration");
                poly = kerov_polynomial_via_maps(arg_k, opt.threads);
            } else {
                check_bound(arg_k, opt.kerov_bound, kHardKerovCap, "Kerov solve");
                poly = kerov_polynomial(arg_k);
            }
            return emit(opt, "kerov", {{"k", arg_k}, {"method", kerov_method}},
                        {{"text", poly.to_text()}, {"polynomial", polynomial_json(poly)}},
                        poly.to_text(), start);
        }
        if (cmd_stanley->parsed()) {
            const Partition lambda = Partition::parse(lambda_text);
            if (arg_k < 1) throw domain_error("--k must be >= 1");
            check_bound(arg_k, opt.maps_bound, kHardMapsCap, "map enumeration");
            const Rational value = stanley_character(lambda, arg_k, opt.threads);
            return emit(opt, "stanley", {{"lambda", lambda.to_string()}, {"k", arg_k}},
                        {{"value", to_string(value)}}, to_string(value), start);
        }
        if (cmd_cov->parsed()) {
            const CycleArgument arg = CycleArgument::parse(cycles_text);
            if (arg.count() != 2) throw domain_error("cov expects exactly two cycle lengths");
            check_bound(static_cast<int>(arg.total()), opt.kerov_bound, kHardKerovCap,
                        "Kerov solve");
            const RPolynomial cov = cumulant_polynomial(arg.cycles());
            return emit(opt, "cov", {{"cycles", arg.cycles()}},
                        {{"text", cov.to_text()}, {"polynomial", polynomial_json(cov)}},
                        cov.to_text(), start);
        }
        if (cmd_flow->parsed()) {
            const Permutation sigma1 = Permutation::parse_cycles(sigma1_text, arg_flow_k);
            const BipartiteMap map = BipartiteMap::from_sigma_white(sigma1);
            // decorations keep the order given on the command line; black
            // vertices are listed by their smallest edge label
            const std::vector<int> decor = parse_int_list(decor_text);
            const DecoratedMap d(map, decor);
            const auto witness = strictly_positive_witness(d);
            json flow = json::array();
            if (witness)
                for (const Rational& f : *witness) flow.push_back(to_string(f));
            json out{{"k", map.k},
                     {"sigma1", map.sigma_white.cycle_string()},
                     {"sigma2", map.sigma_black.cycle_string()},
                     {"whites", map.white_count()},
                     {"blacks", map.black_count()},
                     {"genus", map.genus},
                     {"decorations", decor},
                     {"feasible", witness.has_value()},
                     {"flow", flow},
                     {"disallowed_disconnecting_edge", has_disallowed_disconnecting_edge(map)}};
            return emit(opt, "flow-check",
                        {{"sigma1", sigma1_text}, {"decor", decor_text}, {"k", map.k}}, out,
                        witness ? "feasible" : "infeasible", start);
        }
        if (cmd_sim->parsed()) {
            const Partition lambda = Partition::parse(lambda_text);
            const ScalingReport report =
                scaling_experiment(lambda, arg_m, arg_k, arg_trials, arg_seed, opt.threads);
            json out{{"lambda", report.lambda.to_string()},
                     {"n", report.n},
                     {"m", report.m},
                     {"k", report.k},
                     {"trials", report.trials},
                     {"seed", report.seed},
                     {"predicted", to_string(report.predicted)},
                     {"estimate", report.estimate},
                     {"stderr", report.std_error},
                     {"mean", to_string(report.mean)},
                     {"rng", report.rng_name}};
            const std::string text = "predicted " + to_string(report.predicted) +
                                     ", estimate " + std::to_string(report.estimate) + " +- " +
                                     std::to_string(report.std_error);
            return emit(opt, "restrict-sim",
                        {{"lambda", lambda.to_string()},
                         {"m", arg_m},
                         {"k", arg_k},
                         {"trials", arg_trials},
                         {"seed", arg_seed}},
                        out, text, start);
        }
        if (cmd_verify->parsed()) {
            const auto results = run_verification(
                verify_level == "full" ? VerifyLevel::full : VerifyLevel::quick, opt.threads);
            bool all_pass = true;
            json checks = json::array();
            std::string text;
            for (const auto& r : results) {
                all_pass = all_pass && r.pass;
                checks.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
                text += std::string(r.pass ? "PASS  " : "FAIL  ") + r.name +
                        (r.detail.empty() ? "" : "  [" + r.detail + "]") + "\n";
            }
            if (!text.empty()) text.pop_back();
            const int rc = emit(opt, "verify", {{"level", verify_level}},
                                {{"checks", checks}, {"all_pass", all_pass}}, text, start);
            if (!all_pass) {
                std::cerr << "verification failed\n";
                return 3;
            }
            return rc;
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::cerr << "run with --help for usage\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
