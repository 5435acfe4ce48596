#include "supred/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "supred/aut_format.hpp"
#include "supred/compare.hpp"
#include "supred/construct.hpp"
#include "supred/error.hpp"
#include "supred/ordering.hpp"
#include "supred/reduction.hpp"
#include "supred/supervision.hpp"

namespace supred::cli {

namespace {

/// Bad file reference or selector; reported like a command-line mistake.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// `path` or `path#name`. A file holding several automata needs the name.
Automaton load_one(const std::string& spec) {
    std::string path = spec;
    std::string name;
    if (auto hash = spec.rfind('#'); hash != std::string::npos) {
        path = spec.substr(0, hash);
        name = spec.substr(hash + 1);
    }
    if (!std::filesystem::is_regular_file(path)) throw UsageError("cannot read '" + path + "'");
    auto all = load_automata(path);
    if (name.empty()) {
        if (all.size() != 1)
            throw UsageError("'" + path + "' holds " + std::to_string(all.size()) +
                             " automata; select one with " + path + "#<name>");
        return std::move(all.front());
    }
    for (auto& a : all)
        if (a.name() == name) return std::move(a);
    throw UsageError("'" + path + "' has no automaton named '" + name + "'");
}

// CLI11 only takes single-character short options, so accept -s1/-s2 as aliases.
std::vector<std::string> normalize(std::vector<std::string> args) {
    for (auto& a : args)
        if (a == "-s1" || a == "-s2") a = "-" + a;
    return args;
}

struct Options {
    bool json = false;
    std::string a, b, g, s, s1, s2, candidate, cover, full, partial, output, mode = "partition";
    std::vector<std::string> files;
    bool exact = false;
    std::size_t cap = kDefaultExactCap;
    std::optional<std::uint64_t> seed;
};

class Runner {
public:
    Runner(Options& opt, CommandResult& result, std::ostream& out)
        : opt_(opt), result_(result), out_(out) {}

    void emit(const Automaton& a) {
        if (!opt_.output.empty()) {
            save_automata(opt_.output, {a});
            result_.output_file = opt_.output;
        } else if (!opt_.json) {
            out_ << serialize_automaton(a);
        }
    }

    void verdict(bool v, std::optional<std::string> witness = std::nullopt) {
        result_.verdict = v;
        result_.witness = std::move(witness);
        result_.exit_code = v ? kSuccess : kFalse;
    }

    void say(const std::string& line) {
        if (!opt_.json) out_ << line << '\n';
    }

    void parse() {
        std::size_t count = 0;
        std::vector<Automaton> all;
        for (const auto& f : opt_.files) {
            if (!std::filesystem::is_regular_file(f)) throw UsageError("cannot read '" + f + "'");
            for (auto& a : load_automata(f)) {
                say(a.name() + ": " + std::to_string(a.num_states()) + " states, " +
                    std::to_string(a.num_transitions()) + " transitions");
                all.push_back(std::move(a));
                ++count;
            }
        }
        result_.sizes["automata"] = count;
        if (!opt_.output.empty()) {
            save_automata(opt_.output, all);
            result_.output_file = opt_.output;
        } else {
            verdict(true);
        }
    }

    void product() {
        auto p = sync_product(load_one(opt_.a), load_one(opt_.b));
        result_.sizes["states"] = p.num_states();
        emit(p);
    }

    void super() {
        auto g = load_one(opt_.g);
        auto s = load_one(opt_.s);
        auto sup = build_super(g, s);
        result_.sizes["input"] = s.num_states();
        result_.sizes["output"] = sup.num_states();
        emit(sup);
    }

    void reduce() {
        auto g = load_one(opt_.g);
        auto s = load_one(opt_.s);
        Reduction r;
        if (opt_.exact) {
            if (opt_.mode != "partition" && opt_.mode != "cover")
                throw UsageError("--mode must be partition or cover");
            r = reduce_exact_minimum(g, s, opt_.mode == "cover" ? CoverMode::Cover : CoverMode::Partition,
                                     opt_.cap);
        } else if (opt_.seed) {
            r = random_reduction(g, s, *opt_.seed);
        } else {
            r = reduce_heuristic(g, s);
        }
        result_.sizes["input"] = r.report.input_size;
        result_.sizes["output"] = r.report.output_size;
        if (!opt_.json) {
            out_ << "# " << to_string(r.report.mode) << ": " << r.report.input_size << " -> "
                 << r.report.output_size << " states, " << r.report.steps << " steps\n";
        }
        emit(r.supervisor);
    }

    void verify_equiv() {
        auto g = load_one(opt_.g);
        auto eq = control_equivalent(g, load_one(opt_.s1), load_one(opt_.s2));
        if (eq.equal) {
            say("control equivalent");
            verdict(true);
        } else {
            auto w = format_word(g.alphabet(), *eq.counterexample);
            say("not control equivalent; witness: " + w);
            verdict(false, w);
        }
    }

    void verify_feasible() {
        auto g = load_one(opt_.g);
        auto s = load_one(opt_.s);
        require_same_alphabet(g, s, "feasibility check");
        if (auto ex = check_control_existence(g, s); !ex.holds) {
            auto w = "state " + s.state_name(*ex.state) + " disables uncontrollable " + s.alphabet()[*ex.event].name;
            say("infeasible: " + w);
            return verdict(false, w);
        }
        if (auto fe = check_control_feasibility(s); !fe.holds) {
            const auto& t = *fe.transition;
            auto w = "unobservable " + s.alphabet()[t.event].name + " moves " + s.state_name(t.source) + " -> " +
                     s.state_name(t.target);
            say("infeasible: " + w);
            return verdict(false, w);
        }
        say("feasible");
        verdict(true);
    }

    void verify_existence() {
        auto s = load_one(opt_.s);
        ExistenceResult ex = opt_.g.empty() ? check_control_existence(s)
                                            : check_control_existence(load_one(opt_.g), s);
        if (ex.holds) {
            say("control existence holds");
            return verdict(true);
        }
        auto w = "state " + s.state_name(*ex.state) + " lacks uncontrollable " + s.alphabet()[*ex.event].name;
        say("control existence fails: " + w);
        verdict(false, w);
    }

    void verify_normal() {
        auto g = load_one(opt_.g);
        auto s = load_one(opt_.s);
        auto c = load_one(opt_.candidate);
        auto nr = is_normal(g, s, c);
        if (nr.holds) {
            say("normal");
            return verdict(true);
        }
        std::string w;
        if (nr.unexercised) {
            const auto& t = *nr.unexercised;
            w = "transition " + c.state_name(t.source) + " " + c.alphabet()[t.event].name + " " +
                c.state_name(t.target) + " is never exercised";
        } else {
            w = "marked state " + c.state_name(*nr.unreached_marked) + " is never reached by a marked string";
        }
        say("not normal: " + w);
        verdict(false, w);
    }

    void verify_cover() {
        auto g = load_one(opt_.g);
        auto s = load_one(opt_.s);
        auto data = control_data(g, s);
        auto cover = Cover::parse(opt_.cover, s);
        auto check = validate_cover(s, data, cover);
        result_.sizes["cells"] = cover.size();
        if (check.valid) {
            say("valid control cover " + cover.format(s));
            return verdict(true);
        }
        say("invalid control cover: " + check.violation);
        verdict(false, check.violation);
    }

    void compare_order() {
        auto g = load_one(opt_.g);
        auto w = finer_than(g, load_one(opt_.s), load_one(opt_.s1), load_one(opt_.s2));
        if (w.holds) {
            say("s1 is finer than s2");
            return verdict(true);
        }
        auto text = "s=" + format_word(g.alphabet(), *w.word) + " clause=" + to_string(*w.clause);
        say("s1 is not finer than s2: " + text);
        verdict(false, text);
    }

    void compare_reductions_cmd() {
        auto r = compare_reductions(load_one(opt_.g), load_one(opt_.s), load_one(opt_.s1), load_one(opt_.s2),
                                    opt_.cap);
        result_.sizes["s1"] = r.size1;
        result_.sizes["s2"] = r.size2;
        say("minimum covers: s1 " + std::to_string(r.size1) + ", s2 " + std::to_string(r.size2));
        verdict(r.ordered);
    }

    void compare_fullpartial() {
        auto r = compare_full_vs_partial(load_one(opt_.g), load_one(opt_.full), load_one(opt_.partial), opt_.cap);
        result_.sizes["full"] = r.size1;
        result_.sizes["partial"] = r.size2;
        say("minimum covers: full " + std::to_string(r.size1) + ", partial " + std::to_string(r.size2));
        verdict(r.ordered);
    }

    void iso() {
        auto a = load_one(opt_.a);
        auto b = load_one(opt_.b);
        result_.sizes["a"] = a.num_states();
        result_.sizes["b"] = b.num_states();
        bool holds = is_des_isomorphic(a, b).holds;
        say(holds ? "DES-isomorphic" : "not DES-isomorphic");
        verdict(holds);
    }

    void data() {
        auto g = load_one(opt_.g);
        auto s = load_one(opt_.s);
        auto table = format_control_table(s, control_data(g, s));
        result_.sizes["states"] = s.num_states();
        if (!opt_.json) out_ << table;
    }

private:
    Options& opt_;
    CommandResult& result_;
    std::ostream& out_;
};

}  // namespace

std::string to_json(const CommandResult& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["verdict"] = r.verdict ? nlohmann::ordered_json(*r.verdict) : nlohmann::ordered_json(nullptr);
    j["sizes"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.sizes) j["sizes"][k] = v;
    j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
    j["output_file"] = r.output_file ? nlohmann::ordered_json(*r.output_file) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

CommandResult run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    Options opt;
    CommandResult result;
    Runner runner(opt, result, out);
    std::function<void()> action;

    CLI::App app{"Supervisor reduction toolkit for discrete-event systems", "supred"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", opt.json, "Print the result as JSON");

    auto cmd = [&](CLI::App* parent, const std::string& name, const std::string& help, std::string label,
                   void (Runner::*fn)()) {
        auto* sub = parent->add_subcommand(name, help);
        sub->callback([&, label, fn] {
            result.command = label;
            action = [&, fn] { (runner.*fn)(); };
        });
        return sub;
    };
    auto plant = [&](CLI::App* sub) { sub->add_option("-g,--plant", opt.g, "Plant automaton")->required(); };
    auto sup = [&](CLI::App* sub) { sub->add_option("-s,--supervisor", opt.s, "Supervisor automaton")->required(); };
    auto pair = [&](CLI::App* sub) {
        sub->add_option("--s1", opt.s1, "First supervisor (-s1)")->required();
        sub->add_option("--s2", opt.s2, "Second supervisor (-s2)")->required();
    };
    auto output = [&](CLI::App* sub) { sub->add_option("-o,--output", opt.output, "Write the result here"); };
    auto cap = [&](CLI::App* sub) { sub->add_option("--cap", opt.cap, "State cap for exact search"); };

    auto* parse = cmd(&app, "parse", "Validate .aut files", "parse", &Runner::parse);
    parse->add_option("files", opt.files, "Files to check")->required();
    output(parse);

    auto* product = cmd(&app, "product", "Synchronous product", "product", &Runner::product);
    product->add_option("a", opt.a, "First automaton")->required();
    product->add_option("b", opt.b, "Second automaton")->required();
    output(product);

    auto* super = cmd(&app, "super", "Subset construction of G||S", "super", &Runner::super);
    plant(super), sup(super), output(super);

    auto* reduce = cmd(&app, "reduce", "Reduce a supervisor", "reduce", &Runner::reduce);
    plant(reduce), sup(reduce), output(reduce), cap(reduce);
    reduce->add_flag("--exact", opt.exact, "Minimum cover by exhaustive search");
    reduce->add_option("--mode", opt.mode, "partition or cover")->check(CLI::IsMember({"partition", "cover"}));
    reduce->add_option("--seed", opt.seed, "Random control congruence on SUPER");

    auto* verify = app.add_subcommand("verify", "Check a property");
    verify->require_subcommand(1);
    auto* equiv = cmd(verify, "equiv", "Control equivalence", "verify equiv", &Runner::verify_equiv);
    plant(equiv), pair(equiv);
    auto* feasible = cmd(verify, "feasible", "Control existence and feasibility", "verify feasible",
                         &Runner::verify_feasible);
    plant(feasible), sup(feasible);
    auto* existence = cmd(verify, "existence", "Control existence (strict without -g)", "verify existence",
                          &Runner::verify_existence);
    existence->add_option("-g,--plant", opt.g, "Plant automaton");
    sup(existence);
    auto* normal = cmd(verify, "normal", "Normality of a candidate w.r.t. S", "verify normal",
                       &Runner::verify_normal);
    plant(normal), sup(normal);
    normal->add_option("-c,--candidate", opt.candidate, "Candidate supervisor")->required();
    auto* cover = cmd(verify, "cover", "Control cover validity", "verify cover", &Runner::verify_cover);
    plant(cover), sup(cover);
    cover->add_option("--cover", opt.cover, "Cells separated by ';', states by ','")->required();

    auto* compare = app.add_subcommand("compare", "Compare supervisors");
    compare->require_subcommand(1);
    auto* order = cmd(compare, "order", "Is s1 finer than s2", "compare order", &Runner::compare_order);
    plant(order), sup(order), pair(order);
    auto* reductions = cmd(compare, "reductions", "Minimum cover sizes of s1 and s2", "compare reductions",
                           &Runner::compare_reductions_cmd);
    plant(reductions), sup(reductions), pair(reductions), cap(reductions);
    auto* fullpartial = cmd(compare, "fullpartial", "Full versus partial observation", "compare fullpartial",
                            &Runner::compare_fullpartial);
    plant(fullpartial), cap(fullpartial);
    fullpartial->add_option("--full", opt.full, "Full-observation supervisor")->required();
    fullpartial->add_option("--partial", opt.partial, "Partial-observation supervisor")->required();

    auto* iso = cmd(&app, "iso", "DES-isomorphism", "iso", &Runner::iso);
    iso->add_option("a", opt.a, "First automaton")->required();
    iso->add_option("b", opt.b, "Second automaton")->required();

    auto* data = cmd(&app, "data", "Print the En/D/M/T table", "data", &Runner::data);
    plant(data), sup(data);

    auto args = normalize(raw_args);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = kUsage;
        return result;
    }

    try {
        action();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        result.exit_code = kUsage;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        result.exit_code = kPrecondition;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        result.exit_code = kCap;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = kUsage;
    }
    if (result.exit_code > kFalse) result.verdict.reset();
    if (opt.json) out << to_json(result) << '\n';
    return result;
}

}  // namespace supred::cli
