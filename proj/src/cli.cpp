#include "ja/cli.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ja/errors.hpp"
#include "ja/io.hpp"
#include "ja/parallel.hpp"

namespace ja::cli {

namespace {

using io::json;

std::set<std::size_t> parse_index_list(const std::string& text) {
    std::set<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.insert(static_cast<std::size_t>(std::stoul(item)));
    }
    return out;
}

std::pair<std::set<std::size_t>, std::set<std::size_t>> parse_split(const std::string& text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw input_error("split needs the form \"0,1|2,3\"");
    return {parse_index_list(text.substr(0, bar)), parse_index_list(text.substr(bar + 1))};
}

SearchBounds parse_bounds(const std::string& text, std::uint64_t seed) {
    SearchBounds b;
    b.seed = seed;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw input_error("bounds need the form a=3,m=4,n=3");
        std::string key = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (key == "a") b.max_atoms = value;
        else if (key == "m") b.max_issues = value;
        else if (key == "n") b.max_agents = value;
        else if (key == "random") b.random_instances = value;
        else throw input_error("unknown bound key: " + key);
    }
    return b;
}

json caps_json(const Limits& limits) {
    return json{{"max_atoms", limits.max_atoms},
                {"max_issues", limits.max_issues},
                {"max_agents", limits.max_agents},
                {"full_max_agents", limits.full_max_agents},
                {"full_max_codomain", limits.full_max_codomain}};
}

// One +/-/. row per judgment set, the usual profile-table reading.
void render_table(const Agenda& agenda, const std::vector<JudgmentSet>& sets,
                  const std::vector<std::string>& labels, std::ostream& out) {
    std::vector<std::string> headers;
    std::size_t width = 1;
    for (const auto& f : agenda.pre_agenda()) {
        headers.push_back(to_string(f));
        width = std::max(width, headers.back().size());
    }
    std::size_t label_width = 1;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());

    out << std::string(label_width, ' ') << " |";
    for (const auto& h : headers) out << ' ' << h << std::string(width - h.size(), ' ');
    out << '\n';
    for (std::size_t r = 0; r < sets.size(); ++r) {
        out << labels[r] << std::string(label_width - labels[r].size(), ' ') << " |";
        for (std::size_t i = 0; i < agenda.issue_count(); ++i) {
            char c = sets[r].at(i) == Sign::Accept ? '+'
                     : sets[r].at(i) == Sign::Reject ? '-'
                                                     : '.';
            out << ' ' << c << std::string(width - 1, ' ');
        }
        out << '\n';
    }
}

struct CommonOptions {
    std::vector<std::string> inputs;
    bool open = false;
    bool tie_break_flag = false;
    bool timing = false;
    std::string format = "json";
};

RuleSpec build_rule_spec(const std::string& name, std::optional<int> quota,
                         const std::string& premises, const std::string& conclusions,
                         const std::string& distance, const std::string& norm,
                         const std::string& scoring, const std::string& ideal) {
    RuleSpec spec;
    spec.name = name;
    spec.quota = quota;
    if (!premises.empty()) spec.premises = parse_index_list(premises);
    if (!conclusions.empty()) spec.conclusions = parse_index_list(conclusions);
    spec.distance = distance_from_name(distance);
    spec.norm = norm_from_name(norm);
    spec.scoring = scoring_from_name(scoring);
    spec.ideal = ideal == "unanimous" ? RuleSpec::IdealClass::Unanimous
                                      : RuleSpec::IdealClass::MajorityConsistent;
    return spec;
}

int emit(const std::string& command, const CommonOptions& common, json outcome,
         const Limits& limits, std::ostream& out,
         std::chrono::steady_clock::time_point started) {
    json report{{"command", command}, {"outcome", std::move(outcome)},
                {"caps_used", caps_json(limits)}};
    json inputs = json::object();
    for (const auto& path : common.inputs) inputs[path] = io::file_digest(path);
    report["inputs"] = inputs;
    if (common.timing) {
        auto elapsed = std::chrono::steady_clock::now() - started;
        report["timing_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    out << report.dump(2) << '\n';
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto started = std::chrono::steady_clock::now();
    Limits limits = Limits::from_env();
    par::init_from_env();

    CLI::App app{"judgment aggregation engine"};
    app.require_subcommand(1);

    CommonOptions common;
    std::string rule_name, rule1_name, rule2_name, property, method, gamma = "tr";
    std::string premises, conclusions, split, bounds_text, convert_to;
    std::string distance = "hamming", norm = "sum", scoring = "simple", ideal = "majority";
    std::optional<int> quota;
    int homogeneity_k = 2;
    bool domains = false;
    std::optional<std::uint64_t> seed_flag;
    std::string partition_arg, iod_arg;

    auto add_common = [&](CLI::App* cmd, bool multi_input = false) {
        if (multi_input)
            cmd->add_option("--input", common.inputs, "input JSON file(s)")->required();
        else
            cmd->add_option("--input", common.inputs, "input JSON file")
                ->required()
                ->expected(1);
        cmd->add_flag("--open", common.open, "admit partial or inconsistent agents");
        cmd->add_flag("--timing", common.timing, "include timing_ms in the report");
        cmd->add_option("--format", common.format, "json|table")
            ->check(CLI::IsMember({"json", "table"}));
    };
    auto add_rule_params = [&](CLI::App* cmd) {
        cmd->add_option("--k", quota, "quota threshold");
        cmd->add_option("--premises", premises, "premise issue indices, comma separated");
        cmd->add_option("--conclusions", conclusions, "conclusion issue indices");
        cmd->add_option("--distance", distance, "drastic|hamming|geodesic");
        cmd->add_option("--norm", norm, "sum|max");
        cmd->add_option("--scoring", scoring, "simple|reversal");
        cmd->add_option("--ideal", ideal, "majority|unanimous (full rule)");
    };

    CLI::App* aggregate = app.add_subcommand("aggregate", "apply an aggregation rule");
    aggregate->add_option("--rule", rule_name, "rule name")->required();
    add_rule_params(aggregate);
    aggregate->add_flag("--tie-break", common.tie_break_flag,
                        "post-process to the canonically smallest set");
    add_common(aggregate);

    CLI::App* codomain_cmd = app.add_subcommand("codomain", "enumerate rational judgment sets");
    add_common(codomain_cmd);

    CLI::App* props = app.add_subcommand("agenda-props", "agenda structure report");
    props->add_option("--partition", partition_arg, "independence check, e.g. 0,1|2");
    props->add_option("--iod", iod_arg, "overlapping decomposition check, e.g. 0,1|1,2");
    props->add_flag("--domains", domains, "restricted-domain report (profile input)");
    add_common(props);

    CLI::App* check = app.add_subcommand("check", "property check or counterexample search");
    check->add_option("--rule", rule_name, "rule name")->required();
    check->add_option("--property", property, "property name")->required();
    check->add_option("--bounds", bounds_text, "search bounds a=3,m=4,n=3");
    check->add_option("--seed", seed_flag, "search seed");
    check->add_option("--split", split, "issue split for separability/oas/sen");
    check->add_option("--homogeneity-k", homogeneity_k, "duplication count");
    add_rule_params(check);
    check->add_option("--input", common.inputs, "instance profile file(s)");
    check->add_flag("--open", common.open, "admit partial or inconsistent agents");
    check->add_flag("--timing", common.timing, "include timing_ms in the report");

    CLI::App* compare = app.add_subcommand("compare", "refinement comparison of two rules");
    compare->add_option("--rule1", rule1_name, "first rule")->required();
    compare->add_option("--rule2", rule2_name, "second rule")->required();
    compare->add_option("--bounds", bounds_text, "search bounds a=3,m=4,n=3");
    compare->add_option("--seed", seed_flag, "search seed");
    compare->add_flag("--timing", common.timing, "include timing_ms in the report");

    CLI::App* vote = app.add_subcommand("vote", "voting through the preference agenda");
    vote->add_option("--method", method, "condorcet|borda|via-ja:<rule>")->required();
    vote->add_option("--gamma", gamma, "tr|w")->check(CLI::IsMember({"tr", "w"}));
    add_rule_params(vote);
    add_common(vote);

    CLI::App* convert = app.add_subcommand("convert", "logic <-> binary translation");
    convert->add_option("--to", convert_to, "binary|logic")
        ->required()
        ->check(CLI::IsMember({"binary", "logic"}));
    add_common(convert);

    try {
        std::vector<const char*> argv;
        argv.push_back("ja");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        ProfileMode mode = common.open ? ProfileMode::Open : ProfileMode::Strict;

        if (aggregate->parsed()) {
            json doc = io::load_json_file(common.inputs.front());
            Profile p = io::profile_from_json(doc, mode, limits);
            RuleSpec spec = build_rule_spec(rule_name, quota, premises, conclusions, distance,
                                            norm, scoring, ideal);
            json outcome;
            if (rule_is_partial(spec.name)) {
                PartialResult r = apply_partial_rule(p, spec);
                if (common.format == "table") {
                    render_table(p.agenda(), {r.set}, {spec.name}, out);
                    return 0;
                }
                outcome = io::partial_to_json(r, p.agenda());
            } else {
                Outcome o = apply_rule(p, spec, limits);
                if (common.tie_break_flag) o = tie_break(o);
                if (common.format == "table") {
                    std::vector<std::string> labels;
                    for (std::size_t i = 0; i < o.sets.size(); ++i)
                        labels.push_back(spec.name + "#" + std::to_string(i + 1));
                    render_table(p.agenda(), o.sets, labels, out);
                    return 0;
                }
                outcome = io::outcome_to_json(o, p.agenda());
            }
            return emit("aggregate", common, std::move(outcome), limits, out, started);
        }

        if (codomain_cmd->parsed()) {
            json doc = io::load_json_file(common.inputs.front());
            Agenda agenda = doc.contains("agenda")
                                ? io::agenda_from_json(doc.at("agenda"), limits)
                                : io::agenda_from_json(doc, limits);
            auto sets = codomain(agenda);
            if (common.format == "table") {
                std::vector<std::string> labels;
                for (std::size_t i = 0; i < sets.size(); ++i)
                    labels.push_back("J" + std::to_string(i + 1));
                render_table(agenda, sets, labels, out);
                return 0;
            }
            json list = json::array();
            for (const auto& j : sets) list.push_back(io::judgment_to_json(j, agenda));
            json outcome{{"codomain", list}, {"count", sets.size()}};
            return emit("codomain", common, std::move(outcome), limits, out, started);
        }

        if (props->parsed()) {
            json doc = io::load_json_file(common.inputs.front());
            if (domains) {
                Profile p = io::profile_from_json(doc, mode, limits);
                auto report = restricted_domain_report(p, limits);
                return emit("agenda-props", common,
                            io::domain_report_to_json(report, p.agenda()), limits, out, started);
            }
            Agenda agenda = doc.contains("agenda")
                                ? io::agenda_from_json(doc.at("agenda"), limits)
                                : io::agenda_from_json(doc, limits);
            json outcome = io::agenda_report_to_json(agenda_report(agenda, limits), agenda);
            if (!partition_arg.empty()) {
                auto [p1, p2] = parse_split(partition_arg);
                auto result = check_independent_partition(agenda, p1, p2, limits);
                json pj{{"semantic", result.semantic}};
                if (result.syntactic) pj["syntactic"] = *result.syntactic;
                outcome["independent_partition"] = pj;
            }
            if (!iod_arg.empty()) {
                auto [a1, a2] = parse_split(iod_arg);
                outcome["iod"] = check_iod(agenda, a1, a2, limits);
            }
            return emit("agenda-props", common, std::move(outcome), limits, out, started);
        }

        if (check->parsed()) {
            RuleSpec spec = build_rule_spec(rule_name, quota, premises, conclusions, distance,
                                            norm, scoring, ideal);
            SearchBounds bounds =
                parse_bounds(bounds_text, seed_flag.value_or(limits.seed));
            PropertyVerdict verdict;
            if (common.inputs.empty()) {
                verdict = search_counterexample(spec, property, bounds, limits);
            } else {
                std::vector<Profile> profiles;
                for (const auto& path : common.inputs)
                    profiles.push_back(
                        io::profile_from_json(io::load_json_file(path), mode, limits));
                std::optional<std::pair<std::set<std::size_t>, std::set<std::size_t>>> issue_split;
                if (!split.empty()) issue_split = parse_split(split);
                verdict = check_property_on_instance(spec, property, profiles, issue_split,
                                                     homogeneity_k, limits);
            }
            return emit("check", common, io::verdict_to_json(verdict), limits, out, started);
        }

        if (compare->parsed()) {
            RuleSpec s1, s2;
            s1.name = rule1_name;
            s2.name = rule2_name;
            SearchBounds bounds =
                parse_bounds(bounds_text, seed_flag.value_or(limits.seed));
            ComparisonResult result = compare_rules(s1, s2, bounds, limits);
            return emit("compare", common, io::comparison_to_json(result, s1, s2), limits, out,
                        started);
        }

        if (vote->parsed()) {
            json doc = io::load_json_file(common.inputs.front());
            VoteProfile v = io::votes_from_json(doc);
            GammaMode gm = gamma_mode_from_name(gamma);
            json outcome;
            if (method == "condorcet") {
                auto winner = condorcet_winner(v);
                MajorityGraph g = majority_graph(v);
                json edges = json::array();
                for (const auto& [x, y] : g.edges) edges.push_back(json::array({x, y}));
                outcome = json{{"method", "condorcet"},
                               {"winner", winner ? json(*winner) : json(nullptr)},
                               {"majority_graph", edges}};
            } else if (method == "borda") {
                BordaResult b = borda(v);
                outcome = json{{"method", "borda"}, {"scores", b.scores},
                               {"winners", b.winners}};
            } else if (method.rfind("via-ja:", 0) == 0) {
                RuleSpec spec = build_rule_spec(method.substr(7), quota, premises, conclusions,
                                                distance, norm, scoring, ideal);
                auto winners_set = vote_via_ja(v, spec, gm, limits);
                outcome = json{{"method", method}, {"gamma", gamma}, {"winners", winners_set}};
            } else {
                throw input_error("unknown voting method: " + method);
            }
            return emit("vote", common, std::move(outcome), limits, out, started);
        }

        if (convert->parsed()) {
            json doc = io::load_json_file(common.inputs.front());
            if (convert_to == "binary") {
                Profile p = io::profile_from_json(doc, mode, limits);
                return emit("convert", common, io::binary_to_json(to_binary(p)), limits, out,
                            started);
            }
            BinaryProblem b = io::binary_from_json(doc);
            auto [agenda, p] = from_binary(b, limits);
            json outcome{{"agenda", io::agenda_to_json(agenda)},
                         {"profile", io::profile_to_json(p)}};
            return emit("convert", common, std::move(outcome), limits, out, started);
        }

        err << "error: no subcommand\n";
        return 2;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace ja::cli
