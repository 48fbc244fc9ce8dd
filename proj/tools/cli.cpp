// Copyright (c) priodpa contributors.
// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "priodpa/battery.hpp"
#include "priodpa/cat_tree.hpp"
#include "priodpa/dpa_path.hpp"
#include "priodpa/errors.hpp"
#include "priodpa/grid.hpp"
#include "priodpa/io.hpp"
#include "priodpa/lwdpa.hpp"
#include "priodpa/oracle.hpp"
#include "priodpa/random.hpp"
#include "priodpa/report.hpp"
#include "priodpa/sgkh.hpp"

namespace priodpa::cli {
namespace {

struct Options {
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out_path;
    bool timing = false;
};

// Raised for bad input files and argument combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class Stopwatch {
  public:
    explicit Stopwatch(bool on) : on_{on}, start_{std::chrono::steady_clock::now()} {}
    [[nodiscard]] std::int64_t ms() const {
        if (!on_) {
            return 0;
        }
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

  private:
    bool on_;
    std::chrono::steady_clock::time_point start_;
};

GainMode mode_for(const std::string& alg) {
    return alg.find("lwdpa") != std::string::npos ? GainMode::length : GainMode::count;
}

Instance load_instance(const std::string& path) {
    try {
        return read_instance(path);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::shared_ptr<const Graph> load_tree(const std::string& path) {
    try {
        auto g = graph_from_json(read_json_file(path));
        if (!g->acyclic()) {
            throw UsageError(path + " does not describe a tree");
        }
        return g;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

std::unique_ptr<PriorityAlgorithm> load_algorithm(const std::string& name) {
    try {
        return make_algorithm(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<std::string> algorithm_list(const std::string& alg, const std::vector<std::string>& all) {
    return alg == "all" ? all : std::vector<std::string>{alg};
}

RatioReport report_for(const Instance& instance, const std::string& alg, GainPair gains, std::size_t bits,
                       const Stopwatch& clock) {
    return RatioReport{instance.graph().descriptor(), alg, instance_hash(instance), gains, bits, clock.ms()};
}

void emit(const Options& opts, std::ostream& out, const std::vector<RatioReport>& reports) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!opts.out_path.empty()) {
        file.open(opts.out_path, std::ios::binary);
        if (!file) {
            throw UsageError("cannot write " + opts.out_path);
        }
        sink = &file;
    }
    if (opts.format == "json") {
        write_json_lines(*sink, reports);
    } else {
        write_csv(*sink, reports);
    }
}

void emit_json(const Options& opts, std::ostream& out, const nlohmann::json& j) {
    if (opts.out_path.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot write " + opts.out_path);
    }
    file << j.dump(2) << '\n';
}

// run

struct RunArgs {
    std::string instance;
    std::string alg;
    std::string mode;
};

int cmd_run(const Options& opts, const RunArgs& a, std::ostream& out) {
    const auto inst = load_instance(a.instance);
    if (inst.empty()) {
        throw UsageError(a.instance + " has no requests");
    }
    auto alg = load_algorithm(a.alg);
    const auto mode = a.mode.empty() ? mode_for(a.alg) : (a.mode == "length" ? GainMode::length : GainMode::count);
    const Stopwatch clock(opts.timing);
    const auto res = run(*alg, inst);
    const GainPair gains{gain(inst.graph(), res.solution, mode), brute_force_opt(inst, mode).optimum};
    emit(opts, out, {report_for(inst, a.alg, gains, res.bits_consumed, clock)});
    return ok;
}

// adversary

struct AdversaryArgs {
    std::string family;
    int a = 3;
    int b = 8;
    std::optional<int> length;
    std::string alg = "all";
    std::string tree;
    int random_trees = 0;
};

std::vector<std::shared_ptr<const Graph>> adversary_trees(const Options& opts, const AdversaryArgs& a) {
    std::vector<std::shared_ptr<const Graph>> trees;
    if (a.tree.empty()) {
        trees.push_back(std::make_shared<const Graph>(Graph::tree({{0, 4}, {1, 4}, {2, 4}, {3, 4}})));
    } else {
        trees.push_back(load_tree(a.tree));
    }
    Rng rng(opts.seed);
    while (static_cast<int>(trees.size()) < 1 + a.random_trees) {
        auto t = random_tree(rng, uniform_int(rng, 5, 12));
        if (t.max_degree() >= 4) {
            trees.push_back(std::make_shared<const Graph>(std::move(t)));
        }
    }
    return trees;
}

int cmd_adversary(const Options& opts, const AdversaryArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<RatioReport> reports;
    bool violated = false;
    const auto check = [&](const AdversaryOutcome& o, const std::string& name, const std::optional<Ratio>& floor,
                           const Stopwatch& clock) {
        reports.push_back(report_for(o.instance, name, o.gains, o.bits_consumed, clock));
        if (floor && !o.gains.unbounded() && *o.gains.ratio() < *floor) {
            err << "ratio " << format_ratio(o.gains.ratio()) << " of " << name << " is below "
                << format_ratio(floor) << '\n';
            violated = true;
        }
    };
    if (a.family == "pab") {
        std::optional<StaircaseParams> params;
        try {
            params.emplace(a.a, a.b);
        } catch (const InvalidParams& e) {
            throw UsageError(e.what());
        }
        if (a.length && *a.length < params->length()) {
            throw UsageError("path length " + std::to_string(*a.length) + " is shorter than the staircase (" +
                             std::to_string(params->length()) + ")");
        }
        // The floor is only guaranteed for the balanced staircase.
        std::optional<Ratio> floor;
        if (a.b == 2 * (a.a + 1)) {
            floor = Ratio(3) - Ratio(1, a.a);
        }
        for (const auto& name : algorithm_list(a.alg, battery_names())) {
            auto alg = load_algorithm(name);
            const Stopwatch clock(opts.timing);
            check(staircase_adversary(*alg, *params, a.length), name, floor, clock);
        }
    } else if (a.family == "tree") {
        for (const auto& tree : adversary_trees(opts, a)) {
            if (tree->max_degree() < 4) {
                throw UsageError(tree->descriptor() + " has no vertex of degree 4");
            }
            for (const auto& name : algorithm_list(a.alg, battery_names())) {
                auto alg = load_algorithm(name);
                const Stopwatch clock(opts.timing);
                check(star_adversary(*alg, tree), name, Ratio(2), clock);
            }
        }
    } else {
        for (const auto& name : algorithm_list(a.alg, grid_battery_names())) {
            auto alg = load_algorithm(name);
            const Stopwatch clock(opts.timing);
            check(grid_adversary(*alg), name, Ratio(3, 2), clock);
        }
    }
    emit(opts, out, reports);
    return violated ? violation : ok;
}

// advice

struct AdviceArgs {
    std::string problem;
    std::string instance;
    bool encode = false;
    bool decode = false;
    std::string tape;
};

int cmd_advice(const Options& opts, const AdviceArgs& a, std::ostream& out, std::ostream& err) {
    const auto inst = load_instance(a.instance);
    const bool lw = a.problem == "lwdpa";
    if (lw && inst.graph().kind() != GraphKind::path) {
        throw UsageError("lwdpa advice needs a path instance");
    }
    if (!lw && !inst.graph().acyclic()) {
        throw UsageError("cat advice needs a tree instance");
    }
    if (inst.empty()) {
        throw UsageError(a.instance + " has no requests");
    }
    const Stopwatch clock(opts.timing);
    if (a.encode) {
        const auto tape = lw ? encode_lwdpa_advice(inst) : encode_cat_advice(inst).tape;
        emit_json(opts, out, tape_to_json(tape));
        return ok;
    }
    AdviceTape tape;
    if (a.decode) {
        if (a.tape.empty()) {
            throw UsageError("--decode needs --tape FILE");
        }
        try {
            tape = tape_from_json(read_json_file(a.tape));
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
    } else {
        tape = lw ? encode_lwdpa_advice(inst) : encode_cat_advice(inst).tape;
    }
    const auto mode = lw ? GainMode::length : GainMode::count;
    RunResult res;
    try {
        res = lw ? decode_run_lwdpa(inst, tape) : decode_run_cat(inst, tape);
    } catch (const AdviceExhausted& e) {
        err << e.what() << '\n';
        return violation;
    }
    const GainPair gains{gain(inst.graph(), res.solution, mode), brute_force_opt(inst, mode).optimum};
    emit(opts, out, {report_for(inst, lw ? "advice-lwdpa" : "advice-cat", gains, res.bits_consumed, clock)});
    if (gains.alg != gains.opt) {
        err << "decoded gain " << gains.alg << " differs from the optimum " << gains.opt << '\n';
        return violation;
    }
    return ok;
}

// reduce

struct ReduceArgs {
    std::string problem;
    int n = 4;
    std::string bits;
    std::string alg = "all";
    std::string tree;
};

std::vector<bool> parse_bits(const std::string& s) {
    std::vector<bool> out;
    for (char c : s) {
        if (c != '0' && c != '1') {
            throw UsageError("--bits takes a string of 0 and 1");
        }
        out.push_back(c == '1');
    }
    return out;
}

int cmd_reduce(const Options& opts, const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    GuessInstance g;
    if (a.bits.empty()) {
        if (a.n < 1) {
            throw UsageError("--n must be positive");
        }
        Rng rng(opts.seed);
        g.bits = random_bits(rng, a.n);
    } else {
        g.bits = parse_bits(a.bits);
        if (g.bits.empty()) {
            throw UsageError("--bits is empty");
        }
    }
    const bool on_path = a.problem == "path";
    std::shared_ptr<const Graph> tree;
    if (!on_path) {
        tree = a.tree.empty() ? std::make_shared<const Graph>(caterpillar_tree(g.n())) : load_tree(a.tree);
    }
    std::vector<RatioReport> reports;
    bool violated = false;
    for (const auto& name : algorithm_list(a.alg, battery_names())) {
        auto alg = load_algorithm(name);
        const Stopwatch clock(opts.timing);
        GuessRun r = [&] {
            try {
                return on_path ? run_guess(*alg, g) : run_tguess(*alg, g, tree);
            } catch (const InvalidTree& e) {
                throw UsageError(e.what());
            }
        }();
        reports.push_back(report_for(r.instance, name, r.gains, 0, clock));
        const std::int64_t per_opt = on_path ? 3 : 2;
        std::int64_t sum = 0;
        for (const auto& acc : r.gadgets) {
            sum += acc.alg_gain;
            if (acc.opt_gain != per_opt || (acc.wrong() && acc.alg_gain > per_opt - 1)) {
                err << name << ": gadget " << acc.gadget << " breaks the per-gadget bound\n";
                violated = true;
            }
        }
        const auto formula = on_path ? path_guess_ratio(g.n(), r.wrong()) : tree_guess_ratio(g.n(), r.wrong());
        if (sum != r.gains.alg || r.gains.opt != per_opt * g.n() ||
            (!r.gains.unbounded() && *r.gains.ratio() < formula)) {
            err << name << ": measured gains disagree with the aggregate formula " << format_ratio(formula) << '\n';
            violated = true;
        }
    }
    emit(opts, out, reports);
    return violated ? violation : ok;
}

// verify

struct VerifyArgs {
    std::string instance;
    bool grid = false;
};

int verify_grid(const Options& opts, std::ostream& out, std::ostream& err) {
    const Stopwatch clock(opts.timing);
    const auto v = exhaustive_verify_3x3();
    auto graph = std::make_shared<const Graph>(Graph::grid(3, 3));
    std::vector<RatioReport> reports;
    for (const auto& c : v.cases) {
        const auto inst = Instance(graph, c.follow_ups).with(c.request);
        reports.push_back(report_for(inst, "committed-" + c.kind, GainPair{c.best_committed, c.follow_up_opt}, 0,
                                     clock));
        if (!c.passed) {
            err << "case " << c.request.str() << " failed\n";
        }
    }
    emit(opts, out, reports);
    return v.passed ? ok : violation;
}

int verify_instance(const Options& opts, const std::string& path, std::ostream& out, std::ostream& err) {
    const auto inst = load_instance(path);
    if (inst.empty()) {
        throw UsageError(path + " has no requests");
    }
    const auto& g = inst.graph();
    const auto names = g.kind() == GraphKind::grid ? grid_battery_names() : battery_names();
    std::vector<RatioReport> reports;
    bool violated = false;
    const auto fail = [&](const std::string& what) {
        err << what << '\n';
        violated = true;
    };
    for (const auto& name : names) {
        auto alg = load_algorithm(name);
        const auto mode = mode_for(name);
        const Stopwatch clock(opts.timing);
        RunResult res;
        try {
            res = run(*alg, inst);
        } catch (const IllegalAcceptance& e) {
            fail(name + ": " + e.what());
            continue;
        }
        const GainPair gains{gain(g, res.solution, mode), brute_force_opt(inst, mode).optimum};
        reports.push_back(report_for(inst, name, gains, res.bits_consumed, clock));
        if (!validate_solution(inst, res.solution)) {
            fail(name + ": invalid solution");
        }
        const auto ratio = gains.ratio();
        if (g.kind() == GraphKind::path && name == "greedy-path" && gains.alg != gains.opt) {
            fail("greedy-path is not optimal");
        }
        if (g.kind() == GraphKind::path && name == "greedy-lwdpa") {
            if (!ratio || *ratio > lwdpa_greedy_bound(g.path_length())) {
                fail("greedy-lwdpa exceeds its ratio bound");
            }
            for (const auto& s : greedy_union_spans(inst)) {
                if (s.union_length > s.bound) {
                    fail("union span of " + s.accepted.str() + " exceeds its bound");
                }
            }
        }
        if (g.acyclic() && name == "greedy-cat") {
            if (!ratio || *ratio > Ratio(2) || (g.max_degree() <= 3 && *ratio != Ratio(1))) {
                fail("greedy-cat exceeds its ratio bound");
            }
        }
    }
    emit(opts, out, reports);
    return violated ? violation : ok;
}

// pack-s4

struct PackArgs {
    std::string tree;
    int caterpillar = 0;
};

int cmd_pack(const Options& opts, const PackArgs& a, std::ostream& out, std::ostream& err) {
    std::shared_ptr<const Graph> tree;
    if (!a.tree.empty()) {
        tree = load_tree(a.tree);
    } else {
        try {
            tree = std::make_shared<const Graph>(caterpillar_tree(a.caterpillar));
        } catch (const InvalidParams& e) {
            throw UsageError(e.what());
        }
    }
    const auto copies = pack_s4(*tree);
    const auto stats = tree_stats(*tree);
    std::set<EdgeId> used;
    bool disjoint = true;
    nlohmann::json list = nlohmann::json::array();
    for (const auto& c : copies) {
        for (auto leaf : c.leaves) {
            const auto e = tree->edge_between(c.center, leaf);
            disjoint = disjoint && e && used.insert(*e).second;
        }
        list.push_back({{"center", c.center}, {"leaves", c.leaves}});
    }
    const int floor = a.caterpillar > 0 ? std::max(a.caterpillar, stats.star_bound) : stats.star_bound;
    const bool enough = static_cast<int>(copies.size()) >= floor;
    if (opts.format == "json") {
        emit_json(opts, out,
                  {{"graph", tree->descriptor()},
                   {"copies", list},
                   {"count", copies.size()},
                   {"star_bound", stats.star_bound},
                   {"disjoint", disjoint}});
    } else {
        std::ostringstream csv;
        csv << "center,leaf1,leaf2,leaf3,leaf4\n";
        for (const auto& c : copies) {
            csv << c.center << ',' << c.leaves[0] << ',' << c.leaves[1] << ',' << c.leaves[2] << ',' << c.leaves[3]
                << '\n';
        }
        if (opts.out_path.empty()) {
            out << csv.str();
        } else {
            std::ofstream file(opts.out_path, std::ios::binary);
            file << csv.str();
        }
    }
    if (!disjoint) {
        err << "star copies share an edge\n";
    }
    if (!enough) {
        err << copies.size() << " copies, expected at least " << floor << '\n';
    }
    return disjoint && enough ? ok : violation;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Priority algorithms for disjoint path allocation", "priodpa"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--seed", opts.seed, "Seed for randomized generation")->capture_default_str();
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", opts.out_path, "Write output to FILE");
    app.add_flag("--timing", opts.timing, "Fill the ms column with wall time");
    app.fallthrough();

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand("run", "Run one algorithm on an instance");
    run_cmd->add_option("--instance", run_args.instance, "Instance JSON")->required();
    run_cmd->add_option("--alg", run_args.alg, "Algorithm name")->required();
    run_cmd->add_option("--mode", run_args.mode, "Gain mode")->check(CLI::IsMember({"count", "length"}));

    AdversaryArgs adv;
    auto* adv_cmd = app.add_subcommand("adversary", "Play an adaptive adversary");
    adv_cmd->add_option("--family", adv.family, "pab | tree | grid")
        ->required()
        ->check(CLI::IsMember({"pab", "tree", "grid"}));
    adv_cmd->add_option("--a", adv.a, "Staircase step unit")->capture_default_str();
    adv_cmd->add_option("--b", adv.b, "Staircase height")->capture_default_str();
    adv_cmd->add_option("--length", adv.length, "Embed the staircase in a longer path");
    adv_cmd->add_option("--alg", adv.alg, "Algorithm name or 'all'")->capture_default_str();
    adv_cmd->add_option("--tree", adv.tree, "Tree JSON (tree family)");
    adv_cmd->add_option("--random-trees", adv.random_trees, "Extra random trees of degree >= 4")
        ->check(CLI::NonNegativeNumber);

    AdviceArgs adv_args;
    auto* advice_cmd = app.add_subcommand("advice", "Encode or decode advice");
    advice_cmd->add_option("--problem", adv_args.problem, "lwdpa | cat")
        ->required()
        ->check(CLI::IsMember({"lwdpa", "cat"}));
    advice_cmd->add_option("--instance", adv_args.instance, "Instance JSON")->required();
    auto* enc = advice_cmd->add_flag("--encode", adv_args.encode, "Print the advice tape");
    auto* dec = advice_cmd->add_flag("--decode", adv_args.decode, "Run the decoder on --tape");
    enc->excludes(dec);
    advice_cmd->add_option("--tape", adv_args.tape, "Tape JSON for --decode");

    ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Play a string-guessing reduction");
    reduce_cmd->add_option("--problem", red.problem, "path | tree")
        ->required()
        ->check(CLI::IsMember({"path", "tree"}));
    reduce_cmd->add_option("--n", red.n, "Number of random bits")->capture_default_str();
    reduce_cmd->add_option("--bits", red.bits, "Explicit bit string");
    reduce_cmd->add_option("--alg", red.alg, "Algorithm name or 'all'")->capture_default_str();
    reduce_cmd->add_option("--tree", red.tree, "Host tree JSON (tree problem)");

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Check properties on an instance or the 3x3 grid");
    auto* vi = verify_cmd->add_option("--instance", ver.instance, "Instance JSON");
    auto* vg = verify_cmd->add_flag("--grid-3x3", ver.grid, "Exhaustive 3x3 grid case check");
    vi->excludes(vg);
    verify_cmd->require_option(1);

    PackArgs pack;
    auto* pack_cmd = app.add_subcommand("pack-s4", "Pack edge-disjoint four-leaf stars");
    auto* pt = pack_cmd->add_option("--tree", pack.tree, "Tree JSON");
    auto* pc = pack_cmd->add_option("--caterpillar", pack.caterpillar, "Caterpillar with N four-leaf spine vertices");
    pt->excludes(pc);
    pack_cmd->require_option(1);

    std::vector<std::string> argv_store{"priodpa"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) {
        argv.push_back(s.data());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage;
    }

    try {
        if (*run_cmd) {
            return cmd_run(opts, run_args, out);
        }
        if (*adv_cmd) {
            return cmd_adversary(opts, adv, out, err);
        }
        if (*advice_cmd) {
            return cmd_advice(opts, adv_args, out, err);
        }
        if (*reduce_cmd) {
            return cmd_reduce(opts, red, out, err);
        }
        if (*verify_cmd) {
            return ver.grid ? verify_grid(opts, out, err) : verify_instance(opts, ver.instance, out, err);
        }
        return cmd_pack(opts, pack, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return violation;
    }
}

} // namespace priodpa::cli
