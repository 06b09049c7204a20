#include "symlog/json_io.hpp"

#include "symlog/lmm_typing.hpp"
#include "symlog/sym_typing.hpp"

#include <json.hpp>

namespace symlog {

namespace {

using nlohmann::json;

json path_json(const Path& p) {
    json a = json::array();
    for (int i : p) a.push_back(i);
    return a;
}

std::string ctx_string(const SymContext& ctx) {
    std::string out;
    for (const auto& [name, ty] : ctx.items()) {
        if (!out.empty()) out += ", ";
        out += name + ":" + print_type(ty);
    }
    return out;
}

std::string seq_string(const LmmSequent& seq) {
    std::string out;
    bool first = true;
    for (const auto& [name, ty] : seq.gamma()) {
        if (!first) out += ", ";
        out += name + ":" + print_lmm_type(ty);
        first = false;
    }
    out += " |- ";
    first = true;
    for (const auto& [name, ty] : seq.delta()) {
        if (!first) out += ", ";
        out += name + ":" + print_lmm_type(ty);
        first = false;
    }
    return out;
}

} // namespace

std::string trace_json_sym(const ReductionTrace& tr) {
    json steps = json::array();
    for (const auto& st : tr.steps) {
        json s;
        s["rule"] = sym_rule_name(st.occ.rule);
        s["path"] = path_json(st.occ.path);
        s["term"] = print_term(st.result);
        if (st.occ.rule == SymRule::Triv) s["keep"] = path_json(st.occ.keep);
        if (st.occ.rule == SymRule::Beta || st.occ.rule == SymRule::BetaBot)
            s["linear"] = st.occ.linear;
        steps.push_back(s);
    }
    json out;
    out["start"] = print_term(tr.start);
    out["status"] = tr.status;
    out["steps"] = steps;
    return out.dump();
}

std::string trace_json_lmm(const LmmTrace& tr) {
    json steps = json::array();
    for (const auto& st : tr.steps) {
        json s;
        s["rule"] = lmm_rule_name(st.occ.rule);
        s["path"] = path_json(st.occ.path);
        s["term"] = print_lmm(st.result);
        steps.push_back(s);
    }
    json out;
    out["start"] = print_lmm(tr.start);
    out["status"] = tr.status;
    out["steps"] = steps;
    return out.dump();
}

std::string suite_json(const SuiteResult& r) {
    json out;
    out["suite"] = r.suite;
    out["passed"] = r.passed;
    out["failed"] = r.failed;
    out["skipped"] = r.skipped;
    out["counterexamples"] = r.counterexamples;
    out["total"] = r.total();
    out["ok"] = r.ok();
    out["messages"] = r.messages;
    return out.dump();
}

std::string gen_json_sym(const GenSym& g) {
    json out;
    out["ctx"] = ctx_string(g.ctx);
    out["term"] = print_term(g.term);
    out["type"] = print_type(g.type);
    return out.dump();
}

std::string gen_json_lmm(const GenLmm& g) {
    json out;
    out["ctx"] = seq_string(g.seq);
    out["term"] = print_lmm(g.term);
    return out.dump();
}

} // namespace symlog
