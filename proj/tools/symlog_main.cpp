#include "symlog/bridge.hpp"
#include "symlog/error.hpp"
#include "symlog/gen.hpp"
#include "symlog/json_io.hpp"
#include "symlog/parse.hpp"
#include "symlog/sym_sn.hpp"
#include "symlog/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace symlog;

// Exit statuses: 0 success, 1 verification failure, 2 parse/type/usage
// error, 3 budget exhaustion.
int status_for(const Error& e) {
    switch (e.kind) {
    case Error::Kind::Parse:
    case Error::Kind::Type:
    case Error::Kind::Usage:
        return 2;
    case Error::Kind::Budget:
        return 3;
    case Error::Kind::Structural:
        return 1;
    }
    return 1;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// `--ctx @path` reads the bindings from a file.
std::string resolve_ctx(const std::string& raw) {
    if (raw.empty() || raw[0] != '@') return raw;
    std::ifstream f(raw.substr(1));
    if (!f) usage_error("cannot read context file: " + raw.substr(1));
    return read_stream(f);
}

std::string term_input(const std::string& positional) {
    if (!positional.empty()) return positional;
    return strip(read_stream(std::cin));
}

long long env_fuel(long long fallback) {
    const char* s = std::getenv("SYMLOG_FUEL");
    if (!s || !*s) return fallback;
    try {
        return std::stoll(s);
    } catch (...) {
        usage_error("SYMLOG_FUEL is not a number");
    }
}

struct Common {
    std::string calc = "sym";
    std::string ctx;
    std::string input;
    bool json = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_calc = true) {
    if (with_calc)
        cmd->add_option("--calc", c.calc, "Calculus: sym or lmm")
            ->check(CLI::IsMember({"sym", "lmm"}));
    cmd->add_option("--ctx", c.ctx,
                    "Context bindings (sym: \"x:a, y:~a\"; lmm: \"x:a |- b:a\"); "
                    "@path reads a file");
    cmd->add_option("term", c.input, "Input term (stdin when omitted)");
    cmd->add_flag("--json", c.json, "JSON output");
}

int run_check(const Common& c) {
    if (c.calc == "sym") {
        SymContext ctx = parse_sym_context(resolve_ctx(c.ctx));
        SymTermPtr m = parse_sym_term(term_input(c.input));
        SymTypeResult r = typecheck_sym(ctx, m);
        if (c.json)
            std::cout << "{\"type\":\"" << print_type(r.type) << "\"}\n";
        else
            std::cout << print_type(r.type) << "\n";
        return 0;
    }
    LmmSequent seq = parse_lmm_sequent(resolve_ctx(c.ctx));
    LmmTermPtr u = lmm_resort_var(parse_lmm_term(term_input(c.input)), seq);
    std::optional<LmmTypePtr> ty = typecheck_lmm(seq, u);
    std::string shown = ty ? print_lmm_type(canonicalize_type(*ty)) : "OK";
    if (c.json) {
        if (ty)
            std::cout << "{\"command\":false,\"type\":\"" << shown << "\"}\n";
        else
            std::cout << "{\"command\":true}\n";
    } else {
        std::cout << shown << "\n";
    }
    return 0;
}

void print_sym_trace_text(const ReductionTrace& tr) {
    for (const auto& st : tr.steps) {
        std::cout << sym_rule_name(st.occ.rule) << " @[";
        for (size_t i = 0; i < st.occ.path.size(); i++)
            std::cout << (i ? "," : "") << st.occ.path[i];
        std::cout << "] " << print_term(st.result) << "\n";
    }
    std::cout << tr.status << " " << print_term(tr.end()) << "\n";
}

void print_lmm_trace_text(const LmmTrace& tr) {
    for (const auto& st : tr.steps) {
        std::cout << lmm_rule_name(st.occ.rule) << " @[";
        for (size_t i = 0; i < st.occ.path.size(); i++)
            std::cout << (i ? "," : "") << st.occ.path[i];
        std::cout << "] " << print_lmm(st.result) << "\n";
    }
    std::cout << tr.status << " " << print_lmm(tr.end()) << "\n";
}

int run_reduce(const Common& c, long long steps, const std::string& strategy,
               std::uint64_t seed, const std::string& overlap, bool to_normal,
               long long fuel, bool json_always) {
    bool json = c.json || json_always;
    long long limit = to_normal ? fuel : steps;
    if (c.calc == "sym") {
        SymContext ctx = parse_sym_context(resolve_ctx(c.ctx));
        SymTermPtr m = parse_sym_term(term_input(c.input));
        SymTypeResult r = typecheck_sym(ctx, m);
        auto strat = sym_strategy_from_name(strategy);
        if (!strat) usage_error("unknown strategy: " + strategy);
        ReductionTrace tr = normalize(m, r.derivation, *strat, limit,
                                      kAllSymRules, seed);
        if (to_normal && tr.status != "normal-form")
            budget_error("normalization did not finish within fuel " +
                         std::to_string(limit));
        if (json)
            std::cout << trace_json_sym(tr) << "\n";
        else
            print_sym_trace_text(tr);
        return 0;
    }
    LmmSequent seq = parse_lmm_sequent(resolve_ctx(c.ctx));
    LmmTermPtr u = lmm_resort_var(parse_lmm_term(term_input(c.input)), seq);
    typecheck_lmm(seq, u); // reject ill-typed input before reducing
    auto strat = lmm_strategy_from_name(strategy);
    if (!strat) usage_error("unknown strategy: " + strategy);
    auto over = mu_overlap_from_name(overlap);
    if (!over) usage_error("unknown overlap priority: " + overlap);
    LmmTrace tr = normalize_lmm(u, *strat, limit, kAllLmmRules, *over, seed);
    if (to_normal && tr.status != "normal-form")
        budget_error("normalization did not finish within fuel " +
                     std::to_string(limit));
    if (json)
        std::cout << trace_json_lmm(tr) << "\n";
    else
        print_lmm_trace_text(tr);
    return 0;
}

int run_translate(const Common& c, const std::string& dir) {
    if (dir == "f") {
        SymContext ctx = parse_sym_context(resolve_ctx(c.ctx));
        SymTermPtr m = parse_sym_term(term_input(c.input));
        std::cout << print_lmm(term_f(ctx, m)) << "\n";
        return 0;
    }
    LmmSequent seq = parse_lmm_sequent(resolve_ctx(c.ctx));
    LmmTermPtr u = lmm_resort_var(parse_lmm_term(term_input(c.input)), seq);
    if (dir == "e")
        std::cout << print_term(term_e(seq, u)) << "\n";
    else
        std::cout << print_lmm(bigT(seq, u)) << "\n";
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& opt, bool json) {
    SuiteResult r = run_suite(suite, opt);
    if (json) {
        std::cout << suite_json(r) << "\n";
    } else {
        std::cout << "suite " << r.suite << ": passed " << r.passed << " failed "
                  << r.failed << " skipped " << r.skipped;
        if (r.counterexamples > 0)
            std::cout << " counterexamples " << r.counterexamples;
        std::cout << "\n";
        for (const auto& m : r.messages) std::cout << "  " << m << "\n";
    }
    return r.ok() ? 0 : 1;
}

int run_longest(const Common& c, long long budget) {
    SymContext ctx = parse_sym_context(resolve_ctx(c.ctx));
    SymTermPtr m = parse_sym_term(term_input(c.input));
    typecheck_sym(ctx, m);
    SNReport rep = longest_reduction_betapi(m, budget);
    if (rep.status == "fuel-exhausted")
        budget_error("longest-reduction search exceeded budget " +
                     std::to_string(budget));
    if (rep.status == "cycle-found") {
        std::cout << "cycle-found\n";
        return 1;
    }
    if (c.json)
        std::cout << "{\"eta\":" << *rep.eta << "}\n";
    else
        std::cout << *rep.eta << "\n";
    return 0;
}

int run_gen(const std::string& calc, const GenConfig& base, int samples,
            bool json) {
    for (int i = 0; i < samples; i++) {
        GenConfig cfg = base;
        cfg.seed = base.seed + static_cast<std::uint64_t>(i);
        if (calc == "sym") {
            GenSym g = gen_sym(cfg);
            std::cout << (json ? gen_json_sym(g) : print_term(g.term)) << "\n";
        } else {
            GenLmm g = gen_lmm(cfg);
            std::cout << (json ? gen_json_lmm(g) : print_lmm(g.term)) << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proof-term kernel for two classical sequent calculi"};
    app.require_subcommand(1);

    Common ck, cr, cn, ct, cl;
    std::string strategy = "lo";
    std::string overlap = "mutilde";
    std::string dir;
    std::string suite;
    long long steps = 1;
    long long fuel = -1;
    long long budget = 1000000;
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool strict = false;
    int samples = 1;
    bool gen_json = false;
    std::string gen_calc = "sym";
    GenConfig gen_cfg;

    CLI::App* check = app.add_subcommand("check", "Parse and typecheck a term");
    add_common(check, ck);

    CLI::App* reduce = app.add_subcommand("reduce", "Apply a bounded number of steps");
    add_common(reduce, cr);
    reduce->add_option("--steps", steps, "Step limit");
    reduce->add_option("--strategy", strategy, "lo, ri, or random");
    reduce->add_option("--seed", seed, "Seed for the random strategy");
    reduce->add_option("--overlap", overlap,
                       "lmm only: mu or mutilde wins the overlapping cut");

    CLI::App* norm = app.add_subcommand("normalize", "Reduce to normal form");
    add_common(norm, cn);
    norm->add_option("--fuel", fuel, "Step budget (default 100000 or SYMLOG_FUEL)");
    norm->add_option("--strategy", strategy, "lo, ri, or random");
    norm->add_option("--seed", seed, "Seed for the random strategy");
    norm->add_option("--overlap", overlap,
                     "lmm only: mu or mutilde wins the overlapping cut");

    CLI::App* trans = app.add_subcommand("translate", "Translate between the calculi");
    add_common(trans, ct, false);
    trans->add_option("--dir", dir, "e (lmm to sym), f (sym to lmm), T (lmm to lmm)")
        ->required()
        ->check(CLI::IsMember({"e", "f", "T"}));

    CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
    verify->add_option("--suite", suite, "Suite name")->required();
    verify->add_option("--samples", samples, "Sample count")->capture_default_str();
    auto* vseed = verify->add_option("--seed", seed, "Base seed");
    verify->add_option("--max-size", gen_cfg.max_size, "Generator size bound")
        ->capture_default_str();
    verify->add_option("--fuel", fuel, "Normalization budget");
    verify->add_option("--budget", budget, "Longest-reduction budget")
        ->capture_default_str();
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "JSON output");
    verify->add_flag("--strict", strict, "Require an explicit seed with samples > 0");

    CLI::App* longest = app.add_subcommand("longest", "Longest computation-rule reduction");
    add_common(longest, cl);
    longest->add_option("--budget", budget, "Visited-term budget")->capture_default_str();

    CLI::App* gen = app.add_subcommand("gen", "Emit generated well-typed terms");
    gen->add_option("--calc", gen_calc, "Calculus: sym or lmm")
        ->check(CLI::IsMember({"sym", "lmm"}));
    gen->add_option("--samples", samples, "Sample count")->capture_default_str();
    auto* gseed = gen->add_option("--seed", gen_cfg.seed, "Base seed");
    gen->add_option("--max-size", gen_cfg.max_size, "Size bound")->capture_default_str();
    gen->add_option("--bottom-bias", gen_cfg.bottom_bias,
                    "Probability of targeting a command")
        ->capture_default_str();
    gen->add_flag("--json", gen_json, "JSON output with context and type");
    gen->add_flag("--strict", strict, "Require an explicit seed with samples > 0");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(ck);
        if (reduce->parsed())
            return run_reduce(cr, steps, strategy, seed, overlap, false, 0, false);
        if (norm->parsed()) {
            long long f = fuel >= 0 ? fuel : env_fuel(100000);
            return run_reduce(cn, 0, strategy, seed, overlap, true, f, true);
        }
        if (trans->parsed()) return run_translate(ct, dir);
        if (verify->parsed()) {
            seed_given = vseed->count() > 0;
            if (strict && samples > 0 && !seed_given)
                usage_error("--strict requires an explicit --seed when --samples > 0");
            VerifyOptions opt;
            opt.seed = seed;
            opt.samples = samples;
            opt.max_size = gen_cfg.max_size;
            opt.fuel = fuel >= 0 ? fuel : env_fuel(100000);
            opt.budget = budget;
            return run_verify(suite, opt, verify_json);
        }
        if (longest->parsed()) return run_longest(cl, budget);
        if (gen->parsed()) {
            if (strict && samples > 0 && gseed->count() == 0)
                usage_error("--strict requires an explicit --seed when --samples > 0");
            return run_gen(gen_calc, gen_cfg, samples, gen_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return status_for(e);
    }
    return 2;
}
