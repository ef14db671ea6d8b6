// Command line surface for the single-peakedness toolkit.
//
// Exit codes: 0 computed / decision YES, 1 decision NO, 2 bad input,
// 3 scale-guard refusal.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <spdist/spdist.hpp>

namespace {

using namespace spdist;

struct Options {
    bool json = false;
    int threads = 0;

    std::string file;        // positional input where applicable
    std::string out;         // gen output path
    std::string axis_file;
    std::string partition_file;
    std::string measure = "gs";
    bool oracle = false;

    // gen parameters
    std::string family = "example1";
    int n = 4;
    int m = 4;
    uint64_t seed = 1;
    int vertices = 3;
    std::string edges;
    std::string strings;
    int radius = 1;
    long long budget = 0;
    int swaps = 1;
    std::string ints;

    // manip parameters
    std::string pref;
    std::string weights;
    bool co_winner = false;
    bool brute = false;
};

Measure measure_from(const std::string& tok) {
    if (tok == "maverick") return Measure::M;
    if (tok == "cd") return Measure::CD;
    if (tok == "lcd") return Measure::LCD;
    if (tok == "aa") return Measure::AA;
    if (tok == "gs") return Measure::GS;
    if (tok == "ls") return Measure::LS;
    if (tok == "cp") return Measure::CP;
    throw input_error("unknown measure: " + tok);
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw input_error("bad integer list entry: '" + item + "'");
        }
    }
    return out;
}

Graph parse_graph(int vertices, const std::string& edges) {
    Graph g;
    g.vertices = vertices;
    std::string item;
    std::istringstream in(edges);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        auto dash = item.find('-');
        if (dash == std::string::npos)
            throw input_error("bad edge '" + item + "', expected a-b");
        try {
            g.add_edge(std::stoi(item.substr(0, dash)),
                       std::stoi(item.substr(dash + 1)));
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("bad edge '" + item + "', expected a-b");
        }
    }
    return g;
}

std::string axis_text(const Axis& a) {
    std::string s;
    for (const auto& c : a.order) {
        if (!s.empty()) s += ' ';
        s += c.id;
    }
    return s;
}

void emit(const Options& opt, ordered_json& j, double ms, const std::string& text) {
    if (opt.json) {
        j["wall_time_ms"] = ms;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << text;
    }
}

int cmd_check(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Profile p = load_profile(opt.file);
    ConsistencyResult res;
    if (!opt.axis_file.empty()) {
        auto axes = load_axes(opt.axis_file);
        if (axes.size() != 1) throw input_error("check: expected exactly one axis");
        res.witness = witness_for_axis(p, axes[0]);
        if (!res.witness) res.axis = canonicalize(axes[0]);
    } else {
        res = check_consistency(p);
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
    ordered_json j;
    std::string text;
    if (res.consistent()) {
        j = to_json(res);
        text = "consistent: yes\naxis: " + axis_text(*res.axis) + "\n";
    } else {
        j = to_json(res);
        const Witness& w = *res.witness;
        text = "consistent: no\nwitness: vote #" + std::to_string(w.entry_index) +
               " ranks " + w.middle.id + " below both " + w.left.id + " and " +
               w.right.id + " (axis order " + w.left.id + " < " + w.middle.id +
               " < " + w.right.id + ")\n";
    }
    emit(opt, j, ms, text);
    return res.consistent() ? 0 : 1;
}

std::string report_text(const Profile& p, const DistanceReport& r) {
    std::ostringstream os;
    os << "measure: " << measure_name(r.measure) << "\n";
    os << "value: " << r.value << "\n";
    switch (r.measure) {
        case Measure::M: {
            os << "axis: " << axis_text(r.axis()) << "\n";
            long long removed = 0;
            for (std::size_t i = 0; i < r.removed_voters.size(); ++i) {
                if (r.removed_voters[i] > 0)
                    os << "remove vote #" << i << " x" << r.removed_voters[i] << "\n";
                removed += r.removed_voters[i];
            }
            os << "removed voters: " << removed << "\n";
            break;
        }
        case Measure::CD: {
            os << "axis: " << axis_text(r.axis()) << "\n";
            os << "kept candidates:";
            for (const auto& c : r.kept_candidates) os << ' ' << c.id;
            os << "\n";
            break;
        }
        case Measure::LCD: {
            os << "axis: " << axis_text(r.axis()) << "\n";
            for (std::size_t i = 0; i < r.removed_candidates.size(); ++i) {
                if (r.removed_candidates[i].empty()) continue;
                os << "vote #" << i << " deletes:";
                for (const auto& c : r.removed_candidates[i]) os << ' ' << c.id;
                os << "\n";
            }
            break;
        }
        case Measure::AA: {
            for (std::size_t a = 0; a < r.axes.size(); ++a)
                os << "axis " << a << ": " << axis_text(r.axes[a]) << "\n";
            os << "assignment:";
            for (std::size_t i = 0; i < r.assignment.size(); ++i)
                os << " #" << i << "->" << r.assignment[i];
            os << "\n";
            break;
        }
        case Measure::GS:
        case Measure::LS: {
            os << "axis: " << axis_text(r.axis()) << "\n";
            for (std::size_t i = 0; i < r.corrected.size(); ++i) {
                if (r.corrected[i].ranking == p.entries[i].vote.ranking) continue;
                os << "vote #" << i << " ->";
                for (const auto& c : r.corrected[i].ranking) os << ' ' << c.id;
                os << "\n";
            }
            break;
        }
        case Measure::CP: {
            for (std::size_t b = 0; b < r.blocks.size(); ++b) {
                os << "block " << b << ":";
                for (const auto& c : r.blocks[b]) os << ' ' << c.id;
                os << " (axis " << axis_text(r.axes[b]) << ")\n";
            }
            break;
        }
    }
    os << "certificate valid: " << (verify_report(p, r) ? "yes" : "no") << "\n";
    return os.str();
}

int cmd_distance(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Profile p = load_profile(opt.file);
    ScaleGuard g;
    g.threads = opt.threads;
    Measure meas = measure_from(opt.measure);
    if (opt.oracle && meas != Measure::CD)
        throw input_error("--oracle is only available for --measure cd");
    DistanceReport rep = opt.oracle ? cd_exhaustive(p, g) : compute_distance(p, meas, g);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
    ordered_json j = to_json(p, rep);
    emit(opt, j, ms, report_text(p, rep));
    return 0;
}

int cmd_distances(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Profile p = load_profile(opt.file);
    ScaleGuard g;
    g.threads = opt.threads;
    std::map<Measure, DistanceReport> reps;
    for (Measure meas : {Measure::M, Measure::CD, Measure::LCD, Measure::AA,
                         Measure::GS, Measure::LS, Measure::CP})
        reps.emplace(meas, compute_distance(p, meas, g));

    auto val = [&](Measure meas) { return reps.at(meas).value; };
    struct Rel {
        const char* text;
        long long lhs, rhs;
    };
    std::vector<Rel> rels = {
        {"ls <= gs", val(Measure::LS), val(Measure::GS)},
        {"lcd <= cd", val(Measure::LCD), val(Measure::CD)},
        {"cd <= gs", val(Measure::CD), val(Measure::GS)},
        {"lcd <= ls", val(Measure::LCD), val(Measure::LS)},
        {"maverick <= gs", val(Measure::M), val(Measure::GS)},
        {"aa <= maverick", val(Measure::AA), val(Measure::M)},
        {"cp <= cd + 1", val(Measure::CP), val(Measure::CD) + 1},
        {"cp <= ls + 1", val(Measure::CP), val(Measure::LS) + 1},
    };
    bool holds = true;
    for (const auto& r : rels) holds = holds && r.lhs <= r.rhs;

    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
    ordered_json j;
    std::ostringstream text;
    j["results"] = ordered_json::object();
    for (const auto& [meas, rep] : reps) {
        j["results"][measure_name(meas)] = to_json(p, rep);
        text << measure_name(meas) << ": " << rep.value << "\n";
    }
    j["inequalities"] = ordered_json::object();
    j["inequalities"]["holds"] = holds;
    j["inequalities"]["relations"] = ordered_json::array();
    for (const auto& r : rels) {
        ordered_json one;
        one["relation"] = r.text;
        one["lhs"] = r.lhs;
        one["rhs"] = r.rhs;
        one["ok"] = r.lhs <= r.rhs;
        j["inequalities"]["relations"].push_back(one);
    }
    text << "inequalities hold: " << (holds ? "yes" : "no") << "\n";
    emit(opt, j, ms, text.str());
    return 0;
}

int cmd_gen(const Options& opt) {
    Profile p;
    std::optional<CcwmInstance> inst;
    const std::string& fam = opt.family;
    if (fam == "example1") {
        p = example1();
    } else if (fam.rfind("ce", 0) == 0 && fam.size() == 3 && fam[2] >= '1' &&
               fam[2] <= '8') {
        p = counterexample(fam[2] - '0', opt.n);
    } else if (fam == "clique") {
        p = clique_to_maverick(parse_graph(opt.vertices, opt.edges));
    } else if (fam == "cliquepart") {
        p = cliquepartition_to_aa(parse_graph(opt.vertices, opt.edges));
    } else if (fam == "minradius") {
        BitstringSet s;
        std::string item;
        std::istringstream in(opt.strings);
        while (std::getline(in, item, ','))
            if (!item.empty()) s.strings.push_back(item);
        p = minradius_to_lcd(s, opt.radius);
    } else if (fam == "kemeny") {
        if (opt.file.empty()) throw input_error("gen kemeny: needs an input profile");
        p = kemeny_to_gs(load_profile(opt.file), opt.budget);
    } else if (fam == "partition") {
        inst = partition_to_veto_ccwm(parse_int_list(opt.ints),
                                      measure_from(opt.measure), opt.m);
    } else if (fam == "random") {
        p = random_profile(opt.m, opt.n, opt.seed);
    } else if (fam == "sp") {
        p = random_sp_profile(opt.m, opt.n, opt.seed);
    } else if (fam == "perturb") {
        if (opt.file.empty()) throw input_error("gen perturb: needs an input profile");
        p = perturb(load_profile(opt.file), opt.swaps, opt.seed);
    } else {
        throw input_error("unknown family: " + fam);
    }

    std::ostringstream text;
    ordered_json j;
    if (inst) {
        Profile nm;
        nm.candidates = inst->candidates;
        nm.entries = inst->nonmanipulators;
        text << "# manipulation instance (" << measure_name(inst->measure)
             << ", budget " << inst->bound << ", preferred " << inst->preferred.id
             << ", co-winner)\n";
        text << "# manipulator weights:";
        for (long long w : inst->manipulator_weights) text << ' ' << w;
        text << "\n";
        write_profile(text, nm);
        if (inst->measure == Measure::CP) {
            for (std::size_t b = 0; b < inst->blocks.size(); ++b) {
                text << "block:";
                for (const auto& c : inst->blocks[b]) text << ' ' << c.id;
                text << "\naxis: " << axis_text(inst->axes[b]) << "\n";
            }
        } else {
            text << "axis: " << axis_text(inst->axes[0]) << "\n";
        }
        j["instance"] = ordered_json::object();
        j["instance"]["measure"] = measure_name(inst->measure);
        j["instance"]["budget"] = inst->bound;
        j["instance"]["preferred"] = inst->preferred.id;
        j["instance"]["co_winner"] = inst->co_winner;
        j["instance"]["manipulator_weights"] = inst->manipulator_weights;
        j["instance"]["nonmanipulators"] = to_json(nm);
        ordered_json axes = ordered_json::array();
        for (const auto& a : inst->axes) axes.push_back(to_json(a));
        j["instance"]["axes"] = axes;
        if (!inst->blocks.empty()) {
            ordered_json blocks = ordered_json::array();
            for (const auto& b : inst->blocks) {
                ordered_json one = ordered_json::array();
                for (const auto& c : b) one.push_back(c.id);
                blocks.push_back(one);
            }
            j["instance"]["blocks"] = blocks;
        }
    } else {
        write_profile(text, p);
        j["profile"] = to_json(p);
    }

    if (!opt.out.empty()) {
        std::ofstream out(opt.out);
        if (!out) throw input_error("cannot open output file: " + opt.out);
        out << text.str();
        if (!opt.json) std::cout << "wrote " << opt.out << "\n";
        if (opt.json) {
            j["written_to"] = opt.out;
            std::cout << j.dump(2) << '\n';
        }
        return 0;
    }
    if (opt.json) std::cout << j.dump(2) << '\n';
    else std::cout << text.str();
    return 0;
}

int cmd_manip(const Options& opt) {
    auto t0 = std::chrono::steady_clock::now();
    Profile nm = load_profile(opt.file);

    CcwmInstance inst;
    inst.candidates = nm.candidates;
    inst.nonmanipulators = nm.entries;
    inst.preferred = {opt.pref};
    inst.measure = measure_from(opt.measure);
    inst.bound = opt.budget;
    inst.co_winner = opt.co_winner;
    inst.manipulator_weights = parse_int_list(opt.weights);
    if (inst.measure == Measure::CP) {
        if (opt.partition_file.empty())
            throw input_error("manip cp: needs --partition");
        auto spec = load_partition(opt.partition_file);
        inst.blocks = spec.blocks;
        inst.axes = spec.axes;
    } else {
        if (opt.axis_file.empty()) throw input_error("manip: needs --axis");
        inst.axes = load_axes(opt.axis_file);
    }

    std::string classification;
    try {
        long long voters = static_cast<long long>(inst.nonmanipulators.size() +
                                                  inst.manipulator_weights.size());
        classification = complexity_name(
            classify_ccwm(inst.measure, static_cast<long long>(inst.candidates.size()),
                          voters, inst.bound));
    } catch (const input_error&) {
        classification = "undefined";
    }

    CcwmResult res = opt.brute ? ccwm_brute(inst) : solve_ccwm(inst);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();

    ordered_json j = to_json(res);
    j["classification"] = classification;
    std::ostringstream text;
    text << "classification: " << classification << "\n";
    text << "manipulable: " << (res.yes ? "yes" : "no") << "\n";
    if (res.yes)
        for (std::size_t i = 0; i < res.manipulator_votes.size(); ++i) {
            text << "manipulator " << i + 1 << " (weight "
                 << inst.manipulator_weights[i] << "):";
            for (const auto& c : res.manipulator_votes[i].ranking)
                text << ' ' << c.id;
            text << "\n";
        }
    emit(opt, j, ms, text.str());
    return res.yes ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"single-peakedness toolkit: recognition, nearness measures, manipulation"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "emit JSON on stdout");
    app.add_option("--threads", opt.threads,
                   "worker threads for axis scans (default: SPDIST_THREADS or all cores)");

    auto* check = app.add_subcommand("check", "test single-peaked consistency");
    check->add_option("file", opt.file, "profile file")->required();
    check->add_option("--axis", opt.axis_file, "check against this fixed axis");

    auto* distance = app.add_subcommand("distance", "compute one nearness measure");
    distance->add_option("file", opt.file, "profile file")->required();
    distance->add_option("--measure", opt.measure, "maverick|cd|lcd|aa|gs|ls|cp")
        ->required();
    distance->add_flag("--oracle", opt.oracle, "use deletion-set enumeration (cd only)");

    auto* distances = app.add_subcommand("distances",
                                         "compute all seven measures and check their relations");
    distances->add_option("file", opt.file, "profile file")->required();

    auto* gen = app.add_subcommand("gen", "generate a structured profile");
    gen->add_option("--family", opt.family,
                    "example1|ce1..ce8|clique|cliquepart|minradius|kemeny|partition|"
                    "random|sp|perturb")
        ->required();
    gen->add_option("file", opt.file, "input profile (kemeny, perturb)");
    gen->add_option("--n", opt.n, "size parameter / vote count");
    gen->add_option("--m", opt.m, "candidate count");
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("--vertices", opt.vertices, "graph vertex count");
    gen->add_option("--edges", opt.edges, "graph edges, e.g. 0-1,1-2");
    gen->add_option("--strings", opt.strings, "bitstrings, e.g. 0101,1100");
    gen->add_option("--radius", opt.radius, "radius parameter");
    gen->add_option("--budget", opt.budget, "swap budget (kemeny)");
    gen->add_option("--swaps", opt.swaps, "perturbation swap count");
    gen->add_option("--ints", opt.ints, "integer multiset, e.g. 3,5,2");
    gen->add_option("--measure", opt.measure, "gadget measure (partition: gs|cp)");
    gen->add_option("--out", opt.out, "write to file instead of stdout");

    auto* manip = app.add_subcommand("manip", "decide coalitional weighted veto manipulation");
    manip->add_option("file", opt.file, "nonmanipulator profile (counts = ballot weights)")
        ->required();
    manip->add_option("--measure", opt.measure, "maverick|cd|lcd|aa|gs|ls|cp")->required();
    manip->add_option("--budget", opt.budget, "nearness budget")->required();
    manip->add_option("--pref", opt.pref, "preferred candidate")->required();
    manip->add_option("--weights", opt.weights, "manipulator weights, e.g. 3,5,2");
    manip->add_option("--axis", opt.axis_file, "axis file (one axis; several for aa)");
    manip->add_option("--partition", opt.partition_file, "partition file (cp)");
    manip->add_flag("--co-winner", opt.co_winner, "tie at the top suffices");
    manip->add_flag("--brute", opt.brute, "exhaustive vote search");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(opt);
        if (distance->parsed()) return cmd_distance(opt);
        if (distances->parsed()) return cmd_distances(opt);
        if (gen->parsed()) return cmd_gen(opt);
        if (manip->parsed()) return cmd_manip(opt);
    } catch (const spdist::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const spdist::scale_error& e) {
        std::cerr << "scale limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
