#include "fairsplit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "fairsplit/errors.hpp"
#include "fairsplit/json_io.hpp"
#include "fairsplit/pathsplit.hpp"
#include "fairsplit/rounding.hpp"
#include "fairsplit/signkit.hpp"

namespace fairsplit::cli {

using io::json;

namespace {

struct Options {
    std::string input;
    std::string json_out;
    std::string colors;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // 0: command default
    bool enforce_upper = false;
    int q = 0;
    int max_n = 7;
    int max_m = 1;
    int random = 0;
};

std::string read_input(const std::string& name, std::istream& in) {
    if (name.empty()) throw io::SchemaError("--input is required");
    if (name == "-") return {std::istreambuf_iterator<char>(in), {}};
    std::ifstream f(name);
    if (!f) throw io::SchemaError("cannot read " + name);
    return {std::istreambuf_iterator<char>(f), {}};
}

void emit(const json& j, const Options& opt, std::ostream& out) {
    if (opt.json_out.empty()) {
        out << j.dump(2) << '\n';
        return;
    }
    std::ofstream f(opt.json_out);
    if (!f) throw io::SchemaError("cannot write " + opt.json_out);
    f << j.dump(2) << '\n';
}

io::Instance load_path_like(const Options& opt, std::istream& in) {
    io::Instance inst = io::parse_instance_text(read_input(opt.input, in));
    if (inst.kind == "necklace") throw io::SchemaError("expected a path or cycle instance");
    return inst;
}

int cmd_split_path(const Options& opt, std::istream& in, std::ostream& out) {
    io::Instance inst = load_path_like(opt, in);
    ColoredPath path(inst.colors);
    PairSplit split = solve_pair_split(path);
    Violations v = verify_pair_split(path, split);
    json j = io::to_json(split);
    j["certificate"] = io::certificate(v);
    emit(j, opt, out);
    return v.empty() ? ok : internal;
}

int cmd_split_cycle(const Options& opt, std::istream& in, std::ostream& out) {
    io::Instance inst = load_path_like(opt, in);
    ColoredPath cycle(inst.colors);
    CycleSplit split = solve_cycle_split(cycle);
    Violations v = verify_cycle_split(cycle, split);
    json j = io::to_json(split.split);
    j["induced_edges"] = {split.induced_edges[0], split.induced_edges[1]};
    j["independent_set"] = split.independent_side + 1;
    j["certificate"] = io::certificate(v);
    emit(j, opt, out);
    return v.empty() ? ok : internal;
}

int cmd_split_stable(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    io::Instance inst = load_path_like(opt, in);
    int q = opt.q ? opt.q : inst.q.value_or(0);
    if (q < 1) throw io::SchemaError("split-stable needs --q or a q field");
    ColoredPath path(inst.colors);
    StableSearchOptions search;
    search.enforce_upper = opt.enforce_upper;
    if (opt.budget) search.budget = opt.budget;

    json j;
    const bool power_of_two = (q & (q - 1)) == 0;
    std::optional<StableSplit> split;
    if (power_of_two) {
        split = solve_stable(path, q, search);
        j["method"] = q <= 2 ? "direct" : "composition";
    } else {
        split = solve_qstable_bruteforce(path, q, search);
        j["method"] = "bruteforce";
    }
    j["q"] = q;
    j["found"] = split.has_value();
    if (!split) {
        err << "COUNTEREXAMPLE: no " << q << "-stable split for colors " << io::to_json(inst)["colors"].dump()
            << '\n';
        emit(j, opt, out);
        return ok;
    }
    Violations v = verify_qstable_split(path, q, *split, opt.enforce_upper);
    j.update(io::to_json(*split));
    j["certificate"] = io::certificate(v);
    emit(j, opt, out);
    return v.empty() ? ok : internal;
}

int cmd_split_necklace(const Options& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    io::Instance inst = io::parse_instance_text(read_input(opt.input, in));
    if (inst.kind != "necklace") throw io::SchemaError("expected a necklace instance");
    Necklace neck(inst.colors, *inst.q);
    SplitTrace trace;
    try {
        trace = split_with_advantages_traced(neck, inst.advantages, opt.budget ? opt.budget : default_pattern_budget);
    } catch (const RemainderError& e) {
        json colors = json::array();
        for (int c : e.colors) colors.push_back(c + 1);
        err << "precondition: " << e.what() << '\n';
        emit({{"error", "precondition"}, {"message", e.what()}, {"colors", colors}}, opt, out);
        return precondition;
    }
    AdvantageSpec full = complete_advantages(neck, inst.advantages);
    Violations v = verify_discrete(neck, full, trace.split);
    json adv = json::object();
    for (const auto& [c, t] : full.advantaged) {
        json list = json::array();
        for (int x : t) list.push_back(x + 1);
        adv[std::to_string(c + 1)] = list;
    }
    json report = io::certificate(v);
    report["cut_bound"] = (neck.thieves() - 1) * neck.colors();
    report["advantages"] = adv;
    json j = io::to_json(trace.split);
    j["continuous"] = io::to_json(trace.continuous);
    j["acyclic"] = io::to_json(trace.acyclic);
    j["report"] = report;
    emit(j, opt, out);
    return v.empty() ? ok : internal;
}

std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int c = std::stoi(item, &used);
            if (used != item.size() || c < 1) throw std::invalid_argument("bad");
            out.push_back(c);
        } catch (const std::exception&) {
            throw io::SchemaError("--colors must be a comma-separated list of positive integers");
        }
    }
    return out;
}

int cmd_tucker_check(const Options& opt, std::istream& in, std::ostream& out) {
    io::Instance inst;
    if (!opt.colors.empty()) {
        json raw = parse_color_list(opt.colors);
        inst = io::parse_instance({{"kind", "path"}, {"colors", raw}});
    } else {
        inst = load_path_like(opt, in);
    }
    ColorPartition partition(inst.colors);
    int t = compute_t(partition);
    int s = t + partition.colors();
    TuckerReport r = tucker_verify(tabulate_lambda(partition, t), s);
    json j{{"n", partition.size()},
           {"m", partition.colors()},
           {"t", t},
           {"s", s},
           {"antipodal", r.antipodal},
           {"complementary_pairs", r.complementary_pairs},
           {"lemma_contradiction", r.lemma_contradiction},
           {"bound_holds", s >= partition.size()},
           {"ok", r.ok() && s >= partition.size()}};
    if (r.first_pair) j["first_pair"] = {r.first_pair->first.to_string(), r.first_pair->second.to_string()};
    emit(j, opt, out);
    return j["ok"].get<bool>() ? ok : internal;
}

int cmd_conjecture_scan(const Options& opt, std::ostream& out, std::ostream& err) {
    if (opt.q < 1) throw io::SchemaError("conjecture-scan needs --q >= 1");
    StableSearchOptions search;
    search.enforce_upper = opt.enforce_upper;
    if (opt.budget) search.budget = opt.budget;

    std::vector<std::vector<int>> instances;
    auto eligible = [&](const std::vector<int>& colors) {
        std::vector<int> size(*std::max_element(colors.begin(), colors.end()) + 1, 0);
        for (int c : colors) ++size[c];
        return std::all_of(size.begin(), size.end(), [&](int s) { return s >= opt.q - 1; });
    };
    if (opt.random > 0) {
        std::mt19937_64 rng(opt.seed);
        while (static_cast<int>(instances.size()) < opt.random) {
            int n = std::uniform_int_distribution<int>(1, opt.max_n)(rng);
            int m = std::uniform_int_distribution<int>(1, std::max(1, std::min(opt.max_m, n)))(rng);
            std::vector<int> colors(n);
            for (int& c : colors) c = std::uniform_int_distribution<int>(0, m - 1)(rng);
            // relabel by first appearance so every class is nonempty
            std::vector<int> relabel(m, -1);
            int next = 0;
            for (int& c : colors) {
                if (relabel[c] < 0) relabel[c] = next++;
                c = relabel[c];
            }
            if (eligible(colors)) instances.push_back(colors);
        }
    } else {
        for (int n = 1; n <= opt.max_n; ++n)
            for_each_set_partition(n, opt.max_m, [&](const std::vector<int>& c) {
                if (eligible(c)) instances.push_back(c);
            });
    }

    json counterexamples = json::array();
    std::size_t found = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        ColoredPath path(instances[i]);
        auto split = solve_qstable_bruteforce(path, opt.q, search);
        if (split && verify_qstable_split(path, opt.q, *split, opt.enforce_upper).empty()) {
            ++found;
        } else {
            json colors = json::array();
            for (int c : instances[i]) colors.push_back(c + 1);
            counterexamples.push_back({{"kind", "path"}, {"colors", colors}, {"q", opt.q}});
            err << "COUNTEREXAMPLE q=" << opt.q << " colors=" << colors.dump() << '\n';
        }
        if ((i + 1) % 100 == 0 || i + 1 == instances.size())
            err << "progress " << (i + 1) << "/" << instances.size() << '\n';
    }
    emit({{"q", opt.q},
          {"enforce_upper", opt.enforce_upper},
          {"instances", instances.size()},
          {"found", found},
          {"not_found", counterexamples.size()},
          {"counterexamples", counterexamples}},
         opt, out);
    return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fair splittings of colored paths and necklaces"};
    app.require_subcommand(1);
    Options opt;

    auto with_io = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "instance JSON file, - for stdin");
        sub->add_option("--json-out", opt.json_out, "write the JSON result here instead of stdout");
        sub->add_option("--seed", opt.seed, "seed for random instances");
        sub->add_option("--budget", opt.budget, "search budget");
        return sub;
    };
    auto* split_path = with_io(app.add_subcommand("split-path", "two independent sets, one vertex per color removed"));
    auto* split_cycle = with_io(app.add_subcommand("split-cycle", "the same on a cycle"));
    auto* split_necklace = with_io(app.add_subcommand("split-necklace", "fair q-splitting with chosen advantages"));
    auto* split_stable = with_io(app.add_subcommand("split-stable", "q pairwise disjoint q-stable sets"));
    split_stable->add_option("--q", opt.q, "number of parts");
    split_stable->add_flag("--enforce-upper", opt.enforce_upper, "also require |S_i & V_j| <= |V_j|/q");
    auto* tucker = with_io(app.add_subcommand("tucker-check", "machine-check the antipodal labeling"));
    tucker->add_option("--colors", opt.colors, "comma-separated colors, e.g. 1,1,2,2");
    auto* scan = with_io(app.add_subcommand("conjecture-scan", "brute-force q-stable splits over many paths"));
    scan->add_option("--q", opt.q, "number of parts")->required();
    scan->add_option("--max-n", opt.max_n, "largest path length");
    scan->add_option("--max-m", opt.max_m, "largest number of colors");
    scan->add_option("--random", opt.random, "sample this many random paths instead of sweeping");
    scan->add_flag("--enforce-upper", opt.enforce_upper, "also require |S_i & V_j| <= |V_j|/q");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return schema;
    }

    try {
        if (split_path->parsed()) return cmd_split_path(opt, in, out);
        if (split_cycle->parsed()) return cmd_split_cycle(opt, in, out);
        if (split_necklace->parsed()) return cmd_split_necklace(opt, in, out, err);
        if (split_stable->parsed()) return cmd_split_stable(opt, in, out, err);
        if (tucker->parsed()) return cmd_tucker_check(opt, in, out);
        if (scan->parsed()) return cmd_conjecture_scan(opt, out, err);
    } catch (const io::SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return schema;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const InstanceTooLarge& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const InvariantError& e) {
        err << "internal invariant failure: " << e.what() << '\n';
        return internal;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << '\n';
        return precondition;
    }
    return schema;
}

}  // namespace fairsplit::cli
