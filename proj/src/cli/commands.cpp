#include <spbw/cli.hpp>
#include <spbw/compose.hpp>
#include <spbw/errors.hpp>
#include <spbw/sagbi.hpp>

#include <json.hpp>

#include <charconv>
#include <optional>
#include <ostream>
#include <set>

namespace spbw::cli
{

namespace
{

using nlohmann::ordered_json;

enum Exit { Holds = 0, Fails = 1, Inconclusive = 2, InputError = 3 };

const char *usage = R"(usage:
  spbw mul    -a <file> <poly> <poly>...
  spbw snf    -a <file> -F <poly>... -s <poly> [--strategy first|all] [--trace]
  spbw member -a <file> -F <poly>... -s <poly> [--max-degree D] [--trace]
  spbw sagbi test|build -a <file> -F <poly>... --max-degree D [--max-iter I] [--all-pairs]
  spbw compose check|apply -a <file> --theta <poly>... [-F <poly>...] [--max-degree D]
common options:
  --order kind[:g1,g2,...]   override the monomial order of the file
  --max-branches N --max-steps N --max-pairs N --max-span N
  --json                     machine-readable report
environment:
  SPBW_CAPS=key=value,...    default caps
)";

struct Options {
    std::vector<std::string> command;
    std::string file;
    std::vector<std::string> F;
    std::vector<std::string> theta;
    std::vector<std::string> positional;
    std::optional<std::string> s;
    std::optional<std::string> order;
    Strategy strategy = Strategy::First;
    Caps caps;
    std::optional<int> max_degree;
    int max_iter = 10;
    bool trace = false;
    bool json = false;
    bool all_pairs = false;
};

[[noreturn]] void bad_usage(const std::string &what)
{
    throw Error(ErrorCode::InvalidArgument, what);
}

std::size_t positive(const std::string &flag, const std::string &text)
{
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || v == 0)
        bad_usage(flag + " expects a positive integer, got '" + text + "'");
    return v;
}

int nonnegative(const std::string &flag, const std::string &text)
{
    int v = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || end != text.data() + text.size() || v < 0)
        bad_usage(flag + " expects a nonnegative integer, got '" + text + "'");
    return v;
}

// Polynomials may start with '-', so only the exact option names end a list.
bool is_option(const std::string &t)
{
    static const std::set<std::string> names{
        "-a",          "-F",          "-s",        "--theta",     "--strategy",   "--max-branches",
        "--max-steps", "--max-pairs", "--max-span", "--max-degree", "--max-iter", "--trace",
        "--json",      "--order",     "--all-pairs", "--help",     "-h"};
    return names.count(t) > 0;
}

Options parse_args(const std::vector<std::string> &args)
{
    Options o;
    o.caps = Caps::from_env();
    std::size_t k = 0;
    auto value = [&](const std::string &flag) -> const std::string & {
        if (k + 1 >= args.size())
            bad_usage(flag + " needs a value");
        return args[++k];
    };
    auto list = [&](std::vector<std::string> &out) {
        while (k + 1 < args.size() && !is_option(args[k + 1]))
            out.push_back(args[++k]);
    };
    for (; k < args.size(); ++k) {
        const std::string &t = args[k];
        if (t == "-a")
            o.file = value(t);
        else if (t == "-F")
            list(o.F);
        else if (t == "--theta")
            list(o.theta);
        else if (t == "-s")
            o.s = value(t);
        else if (t == "--order")
            o.order = value(t);
        else if (t == "--strategy") {
            const std::string &v = value(t);
            if (v == "first")
                o.strategy = Strategy::First;
            else if (v == "all")
                o.strategy = Strategy::All;
            else
                bad_usage("--strategy expects first or all");
        } else if (t == "--max-branches")
            o.caps.max_branches = positive(t, value(t));
        else if (t == "--max-steps")
            o.caps.max_steps = positive(t, value(t));
        else if (t == "--max-pairs")
            o.caps.max_pairs = positive(t, value(t));
        else if (t == "--max-span")
            o.caps.max_span = positive(t, value(t));
        else if (t == "--max-degree")
            o.max_degree = nonnegative(t, value(t));
        else if (t == "--max-iter")
            o.max_iter = static_cast<int>(positive(t, value(t)));
        else if (t == "--trace")
            o.trace = true;
        else if (t == "--json")
            o.json = true;
        else if (t == "--all-pairs")
            o.all_pairs = true;
        else if (o.command.empty() || (o.command.size() == 1 && (o.command[0] == "sagbi" || o.command[0] == "compose")))
            o.command.push_back(t);
        else
            o.positional.push_back(t);
    }
    return o;
}

struct Context {
    Algebra alg;
    const Options &opt;
    ordered_json report;
    std::ostream &out;

    std::string poly(const StdPoly &f) const
    {
        return alg.render(f);
    }
    std::string order_text() const
    {
        std::string s(to_string(alg.order().kind()));
        s += " [";
        const auto &p = alg.order().precedence();
        for (std::size_t i = 0; i < p.size(); ++i)
            s += (i ? "," : "") + alg.presentation().generators[p[i]];
        return s + "]";
    }
    std::vector<StdPoly> polys(const std::vector<std::string> &texts) const
    {
        std::vector<StdPoly> v;
        for (const auto &t : texts)
            v.push_back(parse_poly(alg, t));
        return v;
    }
    StdPoly target() const
    {
        if (!opt.s)
            bad_usage("-s <poly> is required");
        return parse_poly(alg, *opt.s);
    }
    int bound() const
    {
        if (!opt.max_degree)
            bad_usage("--max-degree D is required");
        return *opt.max_degree;
    }
    void line(const std::string &text)
    {
        if (!opt.json)
            out << text << "\n";
    }
};

ordered_json trace_json(const Context &c, const Subalgebra &F, const ReductionTrace &t)
{
    ordered_json steps = ordered_json::array();
    for (const auto &s : t.steps)
        steps.push_back({{"k", c.alg.render_scalar(s.k)}, {"m", F.render(s.m)}});
    return {{"steps", steps}, {"remainder", c.poly(t.remainder)}};
}

void print_trace(Context &c, const Subalgebra &F, const ReductionTrace &t, const std::string &indent)
{
    for (const auto &s : t.steps)
        c.line(indent + "- (" + c.alg.render_scalar(s.k) + ") * " + F.render(s.m));
    c.line(indent + "remainder: " + c.poly(t.remainder));
}

ordered_json pair_json(const Subalgebra &F, const CriticalPair &p)
{
    return {{"left", F.render(p.left)}, {"right", F.render(p.right)}, {"lm", F.algebra().render_monomial(p.lm)}};
}

ordered_json sagbi_json(Context &c, const Subalgebra &F, const SagbiReport &r)
{
    ordered_json j{{"verdict", to_string(r.verdict)},
                   {"bound", r.bound},
                   {"stats",
                    {{"pairs", r.stats.pairs},
                     {"zero_t_polynomials", r.stats.zero_t_polynomials},
                     {"reductions", r.stats.reductions},
                     {"no_ratio_pairs", r.stats.no_ratio_pairs}}}};
    if (r.verdict == Verdict::Counterexample) {
        j["pair"] = pair_json(F, *r.pair);
        j["t_polynomial"] = c.poly(r.t_polynomial);
        j["witness"] = trace_json(c, F, r.witness);
    }
    if (!r.reason.empty())
        j["reason"] = r.reason;
    if (!r.warnings.empty())
        j["warnings"] = r.warnings;
    return j;
}

void print_sagbi(Context &c, const Subalgebra &F, const SagbiReport &r, const std::string &indent)
{
    std::string v(to_string(r.verdict));
    if (r.verdict != Verdict::Counterexample)
        v += "(" + std::to_string(r.bound) + ")";
    c.line(indent + "verdict: " + v);
    c.line(indent + "pairs: " + std::to_string(r.stats.pairs) + ", zero T-polynomials: " +
           std::to_string(r.stats.zero_t_polynomials) + ", reductions: " + std::to_string(r.stats.reductions));
    if (r.verdict == Verdict::Counterexample) {
        c.line(indent + "pair: (" + F.render(r.pair->left) + ", " + F.render(r.pair->right) + ")");
        c.line(indent + "T: " + c.poly(r.t_polynomial));
        c.line(indent + "witness:");
        print_trace(c, F, r.witness, indent + "  ");
    }
    if (!r.reason.empty())
        c.line(indent + "reason: " + r.reason);
    for (const auto &w : r.warnings)
        c.line(indent + "warning: " + w);
}

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::VerifiedUpTo:
        return Holds;
    case Verdict::Counterexample:
        return Fails;
    case Verdict::Inconclusive:
        break;
    }
    return Inconclusive;
}

std::vector<std::string> numbered(const std::vector<StdPoly> &F, const Algebra &a)
{
    std::vector<std::string> v;
    for (std::size_t i = 0; i < F.size(); ++i)
        v.push_back("q" + std::to_string(i + 1) + " = " + a.render(F[i]));
    return v;
}

int cmd_mul(Context &c)
{
    if (c.opt.positional.empty())
        bad_usage("mul needs at least one polynomial");
    StdPoly acc = c.alg.one();
    for (const auto &t : c.opt.positional)
        acc = c.alg.mul(acc, parse_poly(c.alg, t));
    c.report["result"] = c.poly(acc);
    c.line(c.poly(acc));
    return Holds;
}

int cmd_snf(Context &c)
{
    Subalgebra F(c.alg, c.polys(c.opt.F));
    StdPoly s = c.target();
    SnfResult r = snf(F, s, c.opt.strategy, c.opt.caps);
    ordered_json rem = ordered_json::array();
    for (const auto &t : r.traces)
        rem.push_back(c.opt.trace ? trace_json(c, F, t) : ordered_json(c.poly(t.remainder)));
    c.report["strategy"] = c.opt.strategy == Strategy::All ? "all" : "first";
    c.report["remainders"] = rem;
    c.report["caps_hit"] = r.caps_hit;
    if (c.opt.strategy == Strategy::All)
        c.report["classification"] = to_string(classify(r));
    for (const auto &l : numbered(F.elements(), c.alg))
        c.line(l);
    c.line("remainders:");
    for (const auto &t : r.traces) {
        c.line("  " + c.poly(t.remainder));
        if (c.opt.trace)
            print_trace(c, F, t, "    ");
    }
    if (c.opt.strategy == Strategy::All)
        c.line("classification: " + std::string(to_string(classify(r))));
    if (r.caps_hit) {
        c.line("caps hit: remainder set may be partial");
        return Inconclusive;
    }
    return Holds;
}

int cmd_member(Context &c)
{
    Subalgebra F(c.alg, c.polys(c.opt.F));
    StdPoly s = c.target();
    std::optional<int> verified;
    if (c.opt.max_degree) {
        SagbiReport r = sagbi_test(F, *c.opt.max_degree, c.opt.caps);
        c.report["sagbi"] = sagbi_json(c, F, r);
        if (r.verdict == Verdict::VerifiedUpTo)
            verified = r.bound;
    }
    MembershipResult m = membership(F, s, c.opt.caps, verified);
    c.report["verdict"] = to_string(m.kind);
    c.report["certified"] = m.certified;
    c.report["note"] = m.note;
    ordered_json traces = ordered_json::array();
    for (const auto &t : m.traces)
        traces.push_back(trace_json(c, F, t));
    c.report["traces"] = traces;
    for (const auto &l : numbered(F.elements(), c.alg))
        c.line(l);
    c.line("verdict: " + std::string(to_string(m.kind)) + (m.certified ? " (certified)" : ""));
    c.line("note: " + m.note);
    if (m.kind == MembershipKind::Member || c.opt.trace)
        for (const auto &t : m.traces)
            print_trace(c, F, t, "  ");
    switch (m.kind) {
    case MembershipKind::Member:
        return Holds;
    case MembershipKind::NoReductionFound:
        return Fails;
    case MembershipKind::Inconclusive:
        break;
    }
    return Inconclusive;
}

int cmd_sagbi_test(Context &c)
{
    Subalgebra F(c.alg, c.polys(c.opt.F));
    TestOptions options;
    options.examine_all = c.opt.all_pairs;
    SagbiReport r = sagbi_test(F, c.bound(), c.opt.caps, options);
    c.report.update(sagbi_json(c, F, r));
    for (const auto &l : numbered(F.elements(), c.alg))
        c.line(l);
    print_sagbi(c, F, r, "");
    return verdict_exit(r.verdict);
}

int cmd_sagbi_build(Context &c)
{
    std::vector<StdPoly> F = c.polys(c.opt.F);
    BuildResult b = sagbi_build(c.alg, F, c.bound(), c.opt.max_iter, c.opt.caps);
    Subalgebra G(c.alg, b.G);
    ordered_json adj = ordered_json::array();
    for (const auto &e : b.adjoined) {
        Subalgebra H(c.alg, std::vector<StdPoly>(b.G.begin(), b.G.begin() + static_cast<long>(e.generators_before)));
        adj.push_back({{"element", c.poly(e.element)},
                       {"iteration", e.iteration},
                       {"pair", pair_json(H, e.pair)},
                       {"trace", trace_json(c, H, e.trace)}});
    }
    ordered_json gj = ordered_json::array();
    for (const auto &g : b.G)
        gj.push_back(c.poly(g));
    c.report["G"] = gj;
    c.report["iterations"] = b.iterations;
    c.report["adjoined"] = adj;
    c.report["report"] = sagbi_json(c, G, b.report);

    c.line("G:");
    for (const auto &l : numbered(b.G, c.alg))
        c.line("  " + l);
    for (const auto &e : b.adjoined) {
        Subalgebra H(c.alg, std::vector<StdPoly>(b.G.begin(), b.G.begin() + static_cast<long>(e.generators_before)));
        c.line("adjoined in iteration " + std::to_string(e.iteration) + " from T(" + H.render(e.pair.left) + ", " +
               H.render(e.pair.right) + "): " + c.poly(e.element));
        if (c.opt.trace)
            print_trace(c, H, e.trace, "    ");
    }
    c.line("iterations: " + std::to_string(b.iterations));
    print_sagbi(c, G, b.report, "");
    return verdict_exit(b.report.verdict);
}

std::string mono(const Algebra &a, const ExpVec &e)
{
    return a.render_monomial(e);
}

int cmd_compose(Context &c, bool apply)
{
    if (c.opt.theta.empty())
        bad_usage("--theta <poly>... is required");
    Composition th(c.alg, c.polys(c.opt.theta));
    std::vector<StdPoly> F = c.polys(c.opt.F);
    AdmissibilityReport adm = check_admissible(c.alg, th);
    ordered_json violations = ordered_json::array();
    for (const auto &v : adm.violations)
        violations.push_back({{"left", c.alg.presentation().generators[v.j] + "*" + c.alg.presentation().generators[v.i]},
                              {"difference", c.poly(v.difference)}});
    c.report["admissible"] = adm.admissible;
    c.report["violations"] = violations;
    c.line(std::string("admissible: ") + (adm.admissible ? "yes" : "no"));
    for (const auto &v : adm.violations)
        c.line("  relation " + c.alg.presentation().generators[v.j] + "*" + c.alg.presentation().generators[v.i] +
               " violated by " + c.poly(v.difference));

    if (apply) {
        ordered_json images = ordered_json::array();
        c.line("F o Theta:");
        for (const auto &f : F) {
            StdPoly g = substitute(c.alg, f, th);
            images.push_back(c.poly(g));
            c.line("  " + c.poly(g));
        }
        c.report["images"] = images;
        return Holds;
    }

    int D = c.bound();
    auto compat_json = [&](const CompatibilityReport &r) {
        ordered_json j{{"holds", r.holds}, {"bound", r.bound}};
        if (r.witness)
            j["witness"] = {mono(c.alg, r.witness->first), mono(c.alg, r.witness->second)};
        return j;
    };
    auto compat_line = [&](const std::string &name, const CompatibilityReport &r) {
        std::string s = name + ": " + (r.holds ? "Holds(" + std::to_string(r.bound) + ")" : "CounterWitness");
        if (r.witness)
            s += " (" + mono(c.alg, r.witness->first) + ", " + mono(c.alg, r.witness->second) + ")";
        c.line(s);
    };

    if (F.empty()) {
        CompatibilityReport ord = check_order_compatible(c.alg, th, D);
        CompatibilityReport neq = check_nonequality_compatible(c.alg, th, D);
        c.report["order_compatible"] = compat_json(ord);
        c.report["nonequality_compatible"] = compat_json(neq);
        compat_line("order compatibility", ord);
        compat_line("nonequality compatibility", neq);
        return adm.admissible && ord.holds ? Holds : Fails;
    }

    CommutationReport r = check_commutation(c.alg, F, th, D, c.opt.caps);
    c.report["order_compatible"] = compat_json(r.order);
    c.report["nonequality_compatible"] = compat_json(r.nonequality);
    c.report["implication_ok"] = r.implication_ok;
    compat_line("order compatibility", r.order);
    compat_line("nonequality compatibility", r.nonequality);
    bool inconclusive = false;
    if (r.forward) {
        Subalgebra S(c.alg, F);
        ordered_json fj{{"applicable", r.forward->applicable},
                        {"passed", r.forward->passed},
                        {"original", sagbi_json(c, S, r.forward->original)},
                        {"composed_bound", r.forward->composed_bound}};
        c.line("F:");
        print_sagbi(c, S, r.forward->original, "  ");
        if (r.forward->applicable) {
            Subalgebra ST(c.alg, substitute_all(c.alg, F, th));
            fj["composed"] = sagbi_json(c, ST, r.forward->composed);
            c.line("F o Theta at degree " + std::to_string(r.forward->composed_bound) + ":");
            print_sagbi(c, ST, r.forward->composed, "  ");
            inconclusive = r.forward->composed.verdict == Verdict::Inconclusive;
        } else {
            inconclusive = r.forward->original.verdict == Verdict::Inconclusive;
        }
        c.report["forward"] = fj;
    }
    if (r.converse) {
        const auto &p = *r.converse;
        ordered_json H = ordered_json::array();
        for (const auto &h : p.H)
            H.push_back(c.poly(h));
        c.report["converse"] = {{"u", mono(c.alg, p.u)},
                                {"v", mono(c.alg, p.v)},
                                {"H", H},
                                {"H_verdict", to_string(p.original.verdict)},
                                {"composed_verdict", to_string(p.composed.verdict)},
                                {"demonstrated", p.demonstrated}};
        c.line("necessity probe H = {" + c.poly(p.H[0]) + ", " + c.poly(p.H[1]) + "}: H " +
               std::string(to_string(p.original.verdict)) + ", H o Theta " +
               std::string(to_string(p.composed.verdict)));
    }
    c.report["hat_samples"] = r.hat_samples;
    c.report["hat_failures"] = r.hat_failures.size();
    c.report["lemma_pairs"] = r.lemma_pairs;
    c.report["lemma_failures"] = r.lemma_failures.size();
    c.report["notes"] = r.notes;
    c.report["consistent"] = r.consistent();
    c.line("leading-term samples: " + std::to_string(r.hat_samples) + ", failures: " +
           std::to_string(r.hat_failures.size()));
    c.line("critical pairs of F o Theta checked: " + std::to_string(r.lemma_pairs) + ", not pairs of F: " +
           std::to_string(r.lemma_failures.size()));
    for (const auto &n : r.notes)
        c.line("note: " + n);
    c.line(std::string("consistent with the commutation theorem: ") + (r.consistent() ? "yes" : "no"));
    if (!r.consistent() || !r.admissibility.admissible || !r.order.holds)
        return Fails;
    return inconclusive ? Inconclusive : Holds;
}

int dispatch(Context &c)
{
    const auto &cmd = c.opt.command;
    if (cmd[0] == "mul")
        return cmd_mul(c);
    if (cmd[0] == "snf")
        return cmd_snf(c);
    if (cmd[0] == "member")
        return cmd_member(c);
    if (cmd[0] == "sagbi" && cmd.size() == 2 && cmd[1] == "test")
        return cmd_sagbi_test(c);
    if (cmd[0] == "sagbi" && cmd.size() == 2 && cmd[1] == "build")
        return cmd_sagbi_build(c);
    if (cmd[0] == "compose" && cmd.size() == 2 && (cmd[1] == "check" || cmd[1] == "apply"))
        return cmd_compose(c, cmd[1] == "apply");
    bad_usage("unknown command");
}

} // namespace

int run_command(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        (args.empty() ? err : out) << usage;
        return args.empty() ? InputError : Holds;
    }
    Options opt;
    try {
        opt = parse_args(args);
        if (opt.command.empty())
            bad_usage("missing command");
        if (opt.file.empty())
            bad_usage("-a <file> is required");
        Algebra a = load_algebra(opt.file);
        if (opt.order)
            a = a.with_order(parse_order(a, *opt.order));
        Context c{a, opt, ordered_json::object(), out};
        ordered_json echo = args;
        c.report["command"] = echo;
        c.report["order"] = c.order_text();
        c.line("order: " + c.order_text());
        int code = dispatch(c);
        c.report["exit"] = code;
        if (opt.json)
            out << c.report.dump(2) << "\n";
        return code;
    } catch (const Error &e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        if (e.code() == ErrorCode::InvalidArgument)
            err << usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return InputError;
}

} // namespace spbw::cli
