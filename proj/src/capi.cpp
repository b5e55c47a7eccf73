#include "triconf.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>

#include "triconf/errors.hpp"
#include "triconf/workbench.hpp"

using namespace triconf;

struct tc_table {
    SituationTable table;
};
struct tc_model {
    AuxiliaryModel model;
};
struct tc_family {
    FamilyStream stream;
};

namespace {

thread_local std::string g_last_error;

tc_status fail(tc_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

template <class F>
tc_status guarded(F&& f)
{
    try {
        g_last_error.clear();
        return f();
    } catch (const Error& e) {
        return fail(static_cast<tc_status>(static_cast<int>(e.code())), e.what());
    } catch (const std::bad_alloc&) {
        return fail(TC_ERR_RESOURCE_LIMIT, "out of memory");
    } catch (const nlohmann::json::exception& e) {
        return fail(TC_ERR_PARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(TC_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(TC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TC_ERR_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s)
{
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p)
        throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

void need(const void* p, const char* what)
{
    if (!p)
        throw std::invalid_argument(std::string(what) + " is NULL");
}

tc_rational pack(const Rational& r) { return {r.numerator(), r.denominator()}; }

IndexSet issue_set(const SituationTable& t, const char* const* issues, size_t n)
{
    if (!issues)
        return t.all_issues();
    std::vector<IssueId> ids;
    for (size_t k = 0; k < n; ++k) {
        need(issues[k], "issue id");
        ids.emplace_back(issues[k]);
    }
    return t.issue_indices(ids);
}

OutputFormat format_of(tc_format f)
{
    switch (f) {
    case TC_FORMAT_CSV: return OutputFormat::CSV;
    case TC_FORMAT_MARKDOWN: return OutputFormat::Markdown;
    case TC_FORMAT_JSON: return OutputFormat::JSON;
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace

#define TC_ARG(p)                                                   \
    do {                                                            \
        if (!(p))                                                   \
            return fail(TC_ERR_ARGUMENT, #p " must not be NULL");   \
    } while (0)

extern "C" {

const char* tc_last_error(void) { return g_last_error.c_str(); }

const char* tc_status_name(tc_status s)
{
    switch (s) {
    case TC_OK: return "ok";
    case TC_ERR_MISMATCH: return "mismatch";
    case TC_ERR_ARGUMENT: return "invalid argument";
    case TC_ERR_INTERNAL: return "internal error";
    default:
        if (s >= TC_ERR_PARSE && s <= TC_ERR_INVALID_THRESHOLD)
            return error_code_name(static_cast<ErrorCode>(static_cast<int>(s)));
        return "unknown status";
    }
}

void tc_string_free(char* s) { std::free(s); }

tc_status tc_table_load(const char* text, int json, tc_table** out)
{
    TC_ARG(text);
    TC_ARG(out);
    return guarded([&] {
        *out = new tc_table{load_table(text, json ? TableFormat::JSON : TableFormat::CSV)};
        return TC_OK;
    });
}

tc_status tc_table_load_file(const char* path, tc_table** out)
{
    TC_ARG(path);
    TC_ARG(out);
    return guarded([&] {
        *out = new tc_table{load_table_file(path)};
        return TC_OK;
    });
}

void tc_table_free(tc_table* t) { delete t; }

size_t tc_table_agent_count(const tc_table* t) { return t ? t->table.agent_count() : 0; }
size_t tc_table_issue_count(const tc_table* t) { return t ? t->table.issue_count() : 0; }

const char* tc_table_agent_id(const tc_table* t, size_t k)
{
    return t && k < t->table.agent_count() ? t->table.agents()[k].c_str() : nullptr;
}

const char* tc_table_issue_id(const tc_table* t, size_t k)
{
    return t && k < t->table.issue_count() ? t->table.issues()[k].c_str() : nullptr;
}

tc_status tc_table_rating(const tc_table* t, const char* agent, const char* issue, int* out)
{
    TC_ARG(t);
    TC_ARG(agent);
    TC_ARG(issue);
    TC_ARG(out);
    return guarded([&] {
        *out = to_int(rating(t->table, agent, issue));
        return TC_OK;
    });
}

tc_status tc_table_to_csv(const tc_table* t, char** out)
{
    TC_ARG(t);
    TC_ARG(out);
    return guarded([&] {
        *out = dup(table_to_csv(t->table));
        return TC_OK;
    });
}

tc_status tc_model_preset(tc_preset p, tc_model** out)
{
    TC_ARG(out);
    if (p != TC_MODEL_PAWLAK && p != TC_MODEL_YAO)
        return fail(TC_ERR_ARGUMENT, "unknown model preset");
    return guarded([&] {
        *out = new tc_model{p == TC_MODEL_YAO ? AuxiliaryModel::yao() : AuxiliaryModel::pawlak()};
        return TC_OK;
    });
}

tc_status tc_model_from_json(const char* text, tc_model** out)
{
    TC_ARG(text);
    TC_ARG(out);
    return guarded([&] {
        *out = new tc_model{AuxiliaryModel::from_json(text)};
        return TC_OK;
    });
}

void tc_model_free(tc_model* m) { delete m; }

tc_status tc_aggregate_rating(const tc_table* t, const char* agent, const char* const* issues, size_t n_issues,
                              tc_rational* out)
{
    TC_ARG(t);
    TC_ARG(agent);
    TC_ARG(out);
    return guarded([&] {
        *out = pack(aggregate_rating_over_issues(t->table, t->table.agent_index(agent),
                                                 issue_set(t->table, issues, n_issues)));
        return TC_OK;
    });
}

tc_status tc_auxiliary_value(const tc_model* m, const tc_table* t, const char* x, const char* y,
                             const char* const* issues, size_t n_issues, tc_rational* out)
{
    TC_ARG(m);
    TC_ARG(t);
    TC_ARG(x);
    TC_ARG(y);
    TC_ARG(out);
    return guarded([&] {
        *out = pack(phi_aggregated(m->model, t->table, t->table.agent_index(x), t->table.agent_index(y),
                                   issue_set(t->table, issues, n_issues)));
        return TC_OK;
    });
}

tc_status tc_alliance_conflict(const tc_model* m, const tc_table* t, const char* x, const char* y,
                               const char* const* issues, size_t n_issues, int non_neutral, tc_rational* alliance,
                               tc_rational* conflict)
{
    TC_ARG(m);
    TC_ARG(t);
    TC_ARG(x);
    TC_ARG(y);
    TC_ARG(alliance);
    TC_ARG(conflict);
    return guarded([&] {
        auto d = pair_degrees(m->model, t->table, t->table.agent_index(x), t->table.agent_index(y),
                              issue_set(t->table, issues, n_issues),
                              non_neutral ? PairScope::NonNeutral : PairScope::IssueSet);
        *alliance = pack(d.alliance);
        *conflict = pack(d.conflict);
        return TC_OK;
    });
}

tc_status tc_strategy_degrees(const tc_model* m, const tc_table* t, const char* strategy, const char* agent,
                              tc_rational* alliance, tc_rational* conflict)
{
    TC_ARG(m);
    TC_ARG(t);
    TC_ARG(strategy);
    TC_ARG(agent);
    TC_ARG(alliance);
    TC_ARG(conflict);
    return guarded([&] {
        auto d = strategy_agent_degrees(m->model, t->table, parse_description(strategy), t->table.agent_index(agent));
        *alliance = pack(d.alliance);
        *conflict = pack(d.conflict);
        return TC_OK;
    });
}

tc_status tc_family_open(const char* const* issues, size_t n_issues, int non_neutral, size_t cap, tc_family** out)
{
    TC_ARG(out);
    if (!issues && n_issues)
        return fail(TC_ERR_ARGUMENT, "issues must not be NULL");
    return guarded([&] {
        std::vector<IssueId> ids;
        for (size_t k = 0; k < n_issues; ++k) {
            need(issues[k], "issue id");
            ids.emplace_back(issues[k]);
        }
        *out = new tc_family{FamilyStream(ids, non_neutral ? FamilyKind::NonNeutral : FamilyKind::Full,
                                          cap ? cap : kDefaultIssueCap)};
        return TC_OK;
    });
}

uint64_t tc_family_size(const tc_family* f) { return f ? f->stream.size() : 0; }

tc_status tc_family_next(tc_family* f, char** out)
{
    TC_ARG(f);
    TC_ARG(out);
    return guarded([&] {
        auto s = f->stream.next();
        *out = s ? dup(to_text(*s)) : nullptr;
        return TC_OK;
    });
}

void tc_family_free(tc_family* f) { delete f; }

tc_status tc_workbench_run(const char* command, const char* config_json, const char* base_dir, tc_format format,
                           char** out)
{
    TC_ARG(command);
    TC_ARG(out);
    return guarded([&] {
        auto cfg = make_config(config_json ? config_json : "", base_dir ? base_dir : "");
        *out = dup(render(run_command(command, cfg), format_of(format)));
        return TC_OK;
    });
}

tc_status tc_reproduce(const char* target, const char* fixture_dir, tc_format format, char** out)
{
    TC_ARG(target);
    TC_ARG(fixture_dir);
    TC_ARG(out);
    return guarded([&] {
        std::vector<ReproduceResult> results;
        if (std::string(target) == "all") {
            for (const auto& name : reproduce_targets())
                results.push_back(reproduce(name, fixture_dir));
        } else {
            results.push_back(reproduce(target, fixture_dir));
        }
        *out = dup(render(reproduce_report(results), format_of(format)));
        for (const auto& r : results)
            if (!r.ok()) {
                g_last_error = "reproduction mismatch in " + r.target;
                return TC_ERR_MISMATCH;
            }
        return TC_OK;
    });
}

}  // extern "C"
