#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triconf.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kInternal = 1, kInput = 2, kResource = 3, kMismatch = 4 };

int exit_code(tc_status s)
{
    switch (s) {
    case TC_OK: return kOk;
    case TC_ERR_RESOURCE_LIMIT: return kResource;
    case TC_ERR_MISMATCH: return kMismatch;
    case TC_ERR_INTERNAL: return kInternal;
    default: return kInput;
    }
}

std::vector<std::string> split_list(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

// "a.b.c=value": the value is taken as JSON when it parses, else as a plain string.
void apply_set(json& cfg, const std::string& assignment)
{
    auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw CLI::ValidationError("--set", "expected key=value, got '" + assignment + "'");
    auto key = assignment.substr(0, eq);
    auto text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded() || value.is_number_float())
        value = text;
    json* cur = &cfg;
    std::stringstream ss(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.'))
        parts.push_back(part);
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        if (!(*cur)[parts[k]].is_object())
            (*cur)[parts[k]] = json::object();
        cur = &(*cur)[parts[k]];
    }
    (*cur)[parts.back()] = value;
}

struct Options {
    std::string config_path;
    std::string table;
    std::string model;
    std::string format;
    std::string out;
    std::vector<std::string> sets;
    std::string issues;
    std::string agents;

    // subcommand specific
    std::string issue, agent, scope, restrict, family, strategy, anchor, heuristic, priority;
    int combo = 0;
    std::string target = "all";
    std::string fixtures;
};

tc_format format_of(const std::string& f)
{
    if (f == "json")
        return TC_FORMAT_JSON;
    if (f == "md" || f == "markdown")
        return TC_FORMAT_MARKDOWN;
    return TC_FORMAT_CSV;
}

const char* extension_of(const std::string& f)
{
    if (f == "json")
        return "json";
    if (f == "md" || f == "markdown")
        return "md";
    return "csv";
}

std::string absolute(const std::string& p) { return fs::absolute(p).string(); }

// With --out the report goes to <dir>/<name>.<ext>, otherwise to stdout.
int emit(tc_status s, char* text, const Options& o, const std::string& name)
{
    if (text) {
        std::string body(text);
        tc_string_free(text);
        if (o.out.empty()) {
            std::cout << body;
        } else {
            std::error_code ec;
            fs::create_directories(o.out, ec);
            auto path = fs::path(o.out) / (name + "." + extension_of(o.format));
            std::ofstream f(path, std::ios::binary);
            if (!f) {
                std::cerr << "error: cannot write '" << path.string() << "'\n";
                return kInput;
            }
            f << body;
        }
    }
    if (s != TC_OK)
        std::cerr << "error (" << tc_status_name(s) << "): " << tc_last_error() << "\n";
    return exit_code(s);
}

int run_workbench(const std::string& command, const Options& o)
{
    json cfg = json::object();
    std::string base_dir = fs::current_path().string();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) {
            std::cerr << "error: cannot open configuration '" << o.config_path << "'\n";
            return kInput;
        }
        cfg = json::parse(in, nullptr, false);
        if (cfg.is_discarded() || !cfg.is_object()) {
            std::cerr << "error: configuration '" << o.config_path << "' is not a JSON object\n";
            return kInput;
        }
        base_dir = fs::absolute(o.config_path).parent_path().string();
    }
    if (!o.table.empty())
        cfg["table"] = absolute(o.table);
    if (!o.model.empty())
        cfg["model"] = o.model.rfind("custom:", 0) == 0 ? "custom:" + absolute(o.model.substr(7)) : o.model;
    if (!o.issues.empty())
        cfg["issues"] = o.issues == "all" ? json("all") : json(split_list(o.issues));
    if (!o.agents.empty())
        cfg["agents"] = o.agents == "all" ? json("all") : json(split_list(o.agents));
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty())
            cfg[key] = v;
    };
    put("issue", o.issue);
    put("agent", o.agent);
    put("scope", o.scope);
    put("restrict", o.restrict);
    put("family", o.family);
    put("strategy", o.strategy);
    put("strategy_anchor", o.anchor);
    put("heuristic", o.heuristic);
    if (!o.priority.empty())
        cfg["priority"] = split_list(o.priority);
    if (o.combo)
        cfg["combo"] = o.combo;
    for (const auto& s : o.sets)
        apply_set(cfg, s);

    std::string fmt = o.format;
    if (cfg.contains("format") && cfg["format"].is_string() && o.format.empty())
        fmt = cfg["format"].get<std::string>();
    char* text = nullptr;
    auto s = tc_workbench_run(command.c_str(), cfg.dump().c_str(), base_dir.c_str(), format_of(fmt), &text);
    Options shown = o;
    shown.format = fmt;
    return emit(s, text, shown, command);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Three-way conflict analysis with separate alliance and conflict functions"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("-c,--config", o.config_path, "JSON analysis configuration")->check(CLI::ExistingFile);
    app.add_option("-t,--table", o.table, "situation table (.csv or .json)")->check(CLI::ExistingFile);
    app.add_option("-m,--model", o.model, "auxiliary model: pawlak, yao or custom:<file.json>");
    app.add_option("-f,--format", o.format, "output format (default csv)")->check(CLI::IsMember({"csv", "md", "markdown", "json"}));
    app.add_option("-o,--out", o.out, "write the report into this directory instead of stdout");
    app.add_option("--set", o.sets, "override a configuration key, e.g. thresholds.pair.h_a=1/2");
    app.add_option("--issues", o.issues, "comma separated issue ids (default: all)");
    app.add_option("--agents", o.agents, "comma separated agent ids (default: all)");

    struct Cmd {
        const char* name;
        const char* help;
    };
    const Cmd cmds[] = {
        {"validate", "load and check a table and model"},
        {"trisect-agents", "trisect agents by rating on one issue or by aggregated rating"},
        {"trisect-issues", "trisect issues by rating or by the two imaginary-agent views"},
        {"trisect-pairs", "trisect agent pairs with the auxiliary function or the alliance and conflict functions"},
        {"alliance-sets", "alliance set of every agent with its decision"},
        {"mcas", "maximal consistent alliance sets"},
        {"decisions", "issue trisection and decision for every maximal consistent alliance set"},
        {"strategies", "list the strategy family over the issues"},
        {"strategy-trisect", "trisect agents by their alliance with and conflict against a strategy"},
    };
    std::string chosen;
    for (const auto& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        std::string n = c.name;
        if (n == "trisect-agents" || n == "trisect-pairs")
            sub->add_option("--issue", o.issue, "single issue");
        if (n == "trisect-issues")
            sub->add_option("--agent", o.agent, "trisect issues by this agent's ratings");
        if (n == "trisect-issues" || n == "decisions")
            sub->add_option("--combo", o.combo, "combination of views, 1 to 4")->check(CLI::Range(1, 4));
        if (n == "trisect-pairs" || n == "alliance-sets" || n == "mcas" || n == "decisions" || n == "strategy-trisect")
            sub->add_option("--scope", o.scope, "degree scope")->check(CLI::IsMember({"issue-set", "non-neutral"}));
        if (n == "alliance-sets" || n == "decisions")
            sub->add_option("--restrict", o.restrict, "decision restriction")->check(CLI::IsMember({"all", "non-neutral"}));
        if (n == "strategies")
            sub->add_option("--family", o.family, "family kind")->check(CLI::IsMember({"full", "non-neutral"}));
        if (n == "strategy-trisect") {
            sub->add_option("--strategy", o.strategy, "strategy, e.g. \"<i1,+1>&<i2,-1>\"");
            sub->add_option("--anchor", o.anchor, "use the non-neutral description of this agent");
            sub->add_option("--heuristic", o.heuristic, "candidate selection")
                ->check(CLI::IsMember({"largest-alliance-set"}));
            sub->add_option("--priority", o.priority, "comma separated agents used to break ties");
        }
        sub->callback([&chosen, n] { chosen = n; });
    }
    auto* rep = app.add_subcommand("reproduce", "recompute the bundled worked examples and compare");
    rep->add_option("target", o.target, "example2, example3, example4, example6, example8, gansu or all");
    rep->add_option("--fixtures", o.fixtures, "fixture directory (default: $TRICONF_FIXTURES or ./fixtures)");
    rep->callback([&chosen] { chosen = "reproduce"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInput;
    }

    try {
        if (chosen == "reproduce") {
            std::string dir = o.fixtures;
            if (dir.empty()) {
                const char* env = std::getenv("TRICONF_FIXTURES");
                dir = env ? env : "fixtures";
            }
            char* text = nullptr;
            auto s = tc_reproduce(o.target.c_str(), dir.c_str(), format_of(o.format), &text);
            return emit(s, text, o, "reproduce-" + o.target);
        }
        return run_workbench(chosen, o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
}
