#include "iet3/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "iet3/capset.hpp"
#include "iet3/sturmian.hpp"
#include "iet3/substitution.hpp"

namespace iet3::cli {

using nlohmann::json;

namespace {

constexpr int kDigits = 20;

std::string command_name(Command c) {
    switch (c) {
        case Command::decide: return "decide";
        case Command::synthesize: return "synthesize";
        case Command::generate: return "generate";
        case Command::verify: return "verify";
        case Command::complexity: return "complexity";
        case Command::capset: return "capset";
        case Command::sweep: return "sweep";
    }
    return "?";
}

Integer parse_integer(const std::string& text) {
    try {
        return Integer(text);
    } catch (const std::invalid_argument&) {
        throw Error(Errc::ParseError, "not an integer: \"" + text + "\"");
    }
}

FieldPtr field_from(const std::string& abc, const std::string& branch) {
    std::vector<std::string> parts;
    std::stringstream ss(abc);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    if (parts.size() != 3) throw Error(Errc::ParseError, "--field expects A,B,C, got \"" + abc + "\"");
    Branch br;
    if (branch == "plus" || branch == "+") br = Branch::plus;
    else if (branch == "minus" || branch == "-") br = Branch::minus;
    else throw Error(Errc::ParseError, "--branch expects plus or minus, got \"" + branch + "\"");
    return make_field(parse_integer(parts[0]), parse_integer(parts[1]), parse_integer(parts[2]), br);
}

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

json field_json(const FieldPtr& f) {
    return {{"A", integer_json(f->A())}, {"B", integer_json(f->B())}, {"C", integer_json(f->C())},
            {"branch", std::string(branch_name(f->branch()))}};
}

json interval_json(const Interval& iv) { return json::array({iv.lo.str(), iv.hi.str()}); }
json interval_approx(const Interval& iv) { return json::array({iv.lo.decimal(kDigits), iv.hi.decimal(kDigits)}); }

SynthesisOptions options_of(const RunConfig& cfg) {
    SynthesisOptions o;
    o.step_budget = cfg.step_budget;
    o.verify_radius = cfg.radius;
    o.block_window = cfg.block_window;
    return o;
}

bool full_complexity(const IetSpec& spec, int n_max, std::int64_t radius) {
    auto counts = complexity(orbit_window(spec, -radius, radius), n_max, radius);
    for (int n = 1; n <= n_max; ++n)
        if (counts[static_cast<std::size_t>(n)] != static_cast<std::uint64_t>(2 * n + 1)) return false;
    return true;
}

json report_object(const IetSpec& spec, const DecisionReport& report, std::optional<bool> complexity_ok) {
    json j;
    j["verdict"] = verdict_name(report.verdict);
    j["field"] = field_json(spec.field());
    j["eps"] = spec.eps().str();
    j["l"] = spec.l().str();
    j["c"] = spec.c().str();
    if (spec.raw()) {
        const auto& r = *spec.raw();
        j["raw"] = {{"alpha1", r.alpha1.str()}, {"alpha2", r.alpha2.str()}, {"alpha3", r.alpha3.str()}, {"x0", r.x0.str()}};
    }
    const auto& k = report.conditions;
    j["conditions"] = {{"non_degenerate", k.non_degenerate},
                       {"sturm", k.sturm},
                       {"range", json::array({k.lower.str(), k.upper.str()})},
                       {"neg_c_conj", k.neg_c_conj.str()},
                       {"end_conj", k.end_conj.str()},
                       {"neg_c_in_range", k.neg_c_in_range},
                       {"end_in_range", k.end_in_range}};
    json approx = {{"note", "truncated decimals, display only"},
                   {"eps", spec.eps().decimal(kDigits)},
                   {"l", spec.l().decimal(kDigits)},
                   {"c", spec.c().decimal(kDigits)}};
    if (report.witness) {
        const Synthesis& w = *report.witness;
        j["lambda"] = w.unit.lambda.str();
        j["s"] = w.unit.s;
        j["ladder"] = w.ladder;
        j["reversed"] = w.reversed;
        const Interval J = scale(w.unit.lambda.conjugate(), spec.domain());
        j["J"] = interval_json(J);
        j["return_times"] = json::array({w.substitution.image('A').size(), w.substitution.image('B').size(),
                                         w.substitution.image('C').size()});
        j["substitution"] = {{"A", w.substitution.image('A')}, {"B", w.substitution.image('B')}, {"C", w.substitution.image('C')}};
        j["checks"] = {{"fixed_point", w.checks.fixed_point},
                       {"fixed_point_radius", w.checks.fixed_point_radius},
                       {"eigenvector", w.checks.eigenvector},
                       {"homothety", w.checks.homothety},
                       {"block_starts", w.checks.block_starts},
                       {"primitive", w.checks.primitive},
                       {"complexity", complexity_ok ? json(*complexity_ok) : json(nullptr)}};
        approx["lambda"] = w.unit.lambda.decimal(kDigits);
        approx["J"] = interval_approx(J);
    } else {
        for (const char* key : {"lambda", "s", "ladder", "reversed", "J", "return_times", "substitution", "checks"})
            j[key] = nullptr;
    }
    j["approx"] = approx;
    return j;
}

void write_text(std::ostream& out, const IetSpec& spec, const DecisionReport& report, std::optional<bool> complexity_ok) {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    auto pass = [](bool b) { return b ? "pass" : "FAIL"; };
    out << "verdict: " << verdict_name(report.verdict) << "\n";
    out << "field:   " << spec.field()->str() << "  (e = eps)\n";
    out << "eps = " << spec.eps().str() << "   ~ " << spec.eps().decimal(kDigits) << "\n";
    out << "l   = " << spec.l().str() << "   ~ " << spec.l().decimal(kDigits) << "\n";
    out << "c   = " << spec.c().str() << "   ~ " << spec.c().decimal(kDigits) << "\n";
    const auto& k = report.conditions;
    out << "conditions:\n"
        << "  non-degenerate (l not in Z[e]): " << yes(k.non_degenerate) << "\n"
        << "  Sturm slope:                    " << yes(k.sturm) << "\n"
        << "  range [" << k.lower.str() << ", " << k.upper.str() << "]\n"
        << "  -c'    = " << k.neg_c_conj.str() << " in range: " << yes(k.neg_c_in_range) << "\n"
        << "  c'+l'  = " << k.end_conj.str() << " in range: " << yes(k.end_in_range) << "\n";
    if (!report.witness) return;
    const Synthesis& w = *report.witness;
    out << "lambda = " << w.unit.lambda.str() << "   ~ " << w.unit.lambda.decimal(kDigits) << "\n";
    out << "s = " << w.unit.s << " (rung " << w.ladder << ")" << (w.reversed ? ", through the reversed exchange" : "") << "\n";
    const Interval J = scale(w.unit.lambda.conjugate(), spec.domain());
    out << "J = [" << J.lo.str() << ", " << J.hi.str() << ")   ~ [" << J.lo.decimal(8) << ", " << J.hi.decimal(8) << ")\n";
    out << "phi:\n";
    for (char x : kLetters) out << "  " << x << " -> " << w.substitution.image(x) << "\n";
    out << "return times: " << w.substitution.image('A').size() << " " << w.substitution.image('B').size() << " "
        << w.substitution.image('C').size() << "\n";
    out << "checks: fixed_point=" << pass(w.checks.fixed_point) << " (radius " << w.checks.fixed_point_radius << ")"
        << " eigenvector=" << pass(w.checks.eigenvector) << " homothety=" << pass(w.checks.homothety)
        << " block_starts=" << pass(w.checks.block_starts) << " primitive=" << pass(w.checks.primitive);
    if (complexity_ok) out << " complexity=" << pass(*complexity_ok);
    out << "\n";
}

int verdict_status(Verdict v) { return v == Verdict::Invariant ? kExitOk : kExitNegative; }

// Applies the keys of one sweep record on top of the base config.
RunConfig overlay(const RunConfig& base, const json& rec) {
    RunConfig cfg = base;
    if (rec.contains("field")) {
        const json& f = rec["field"];
        if (f.is_string()) {
            cfg.field = f.get<std::string>();
        } else if (f.is_array() && f.size() == 3) {
            cfg.field = f[0].dump() + "," + f[1].dump() + "," + f[2].dump();
        } else if (f.is_object()) {
            auto part = [&](const char* key) { return f.at(key).is_string() ? f.at(key).get<std::string>() : f.at(key).dump(); };
            cfg.field = part("A") + "," + part("B") + "," + part("C");
            if (f.contains("branch")) cfg.branch = f["branch"].get<std::string>();
        } else {
            throw Error(Errc::ParseError, "unrecognized \"field\"");
        }
    }
    if (rec.contains("branch")) cfg.branch = rec["branch"].get<std::string>();
    auto opt = [&](const char* key, std::optional<std::string>& slot) {
        slot.reset();
        if (rec.contains(key)) slot = rec[key].get<std::string>();
    };
    opt("eps", cfg.eps);
    opt("l", cfg.l);
    opt("c", cfg.c);
    opt("alpha1", cfg.alpha1);
    opt("alpha2", cfg.alpha2);
    opt("alpha3", cfg.alpha3);
    opt("x0", cfg.x0);
    return cfg;
}

json sweep_record(const RunConfig& base, const std::string& line, std::size_t lineno) {
    json out;
    out["line"] = lineno;
    try {
        json rec = json::parse(line);
        if (rec.contains("id")) out["id"] = rec["id"];
        RunConfig cfg = overlay(base, rec);
        IetSpec spec = spec_from(cfg);
        DecisionReport report = decide(spec, options_of(cfg));
        json r = report_object(spec, report, std::nullopt);
        CorollaryCheck cc = corollary_check(spec);
        r["corollary"] = {{"yasutomi01", cc.yasutomi01}, {"yasutomi10", cc.yasutomi10}, {"agrees", cc.agrees()}};
        out.update(r);
    } catch (const Error& e) {
        out["error"] = e.what();
    } catch (const json::exception& e) {
        out["error"] = std::string("ParseError: ") + e.what();
    }
    return out;
}

std::string read_all(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot read \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_sweep(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> lines;
    std::vector<std::size_t> numbers;  // 1-based line numbers in the input
    {
        std::istringstream in(read_all(cfg.input));
        std::string line;
        for (std::size_t k = 1; std::getline(in, line); ++k)
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                lines.push_back(line);
                numbers.push_back(k);
            }
    }
    std::vector<std::string> results(lines.size());
    std::atomic<std::size_t> next{0};
    unsigned n = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(lines.size(), 1)));
    auto worker = [&] {
        for (std::size_t i; (i = next++) < lines.size();) results[i] = sweep_record(cfg, lines[i], numbers[i]).dump();
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    bool any_error = false;
    for (const auto& r : results) {
        out << r << "\n";
        any_error |= r.find("\"error\"") != std::string::npos;
    }
    return any_error ? kExitInput : kExitOk;
}

int run_decide(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    IetSpec spec = spec_from(cfg);
    DecisionReport report = decide(spec, options_of(cfg));
    if (cfg.command == Command::synthesize && report.verdict != Verdict::Invariant) {
        err << "synthesize: the word is not substitution invariant (" << verdict_name(report.verdict) << ")\n";
    }
    std::optional<bool> cx;
    if (report.witness && cfg.complexity_check > 0) cx = full_complexity(spec, cfg.complexity_check, cfg.radius);
    if (cfg.format == Format::json) out << report_object(spec, report, cx).dump() << "\n";
    else write_text(out, spec, report, cx);
    return verdict_status(report.verdict);
}

int run_generate(const RunConfig& cfg, std::ostream& out) {
    IetSpec spec = spec_from(cfg);
    if (cfg.to < cfg.from) throw Error(Errc::InvalidSpec, "--to must not be below --from");
    Word w = code_orbit(spec, cfg.from, cfg.to);
    if (cfg.format == Format::json) out << json{{"from", cfg.from}, {"to", cfg.to}, {"word", w}}.dump() << "\n";
    else out << w << "\n";
    return kExitOk;
}

int run_complexity(const RunConfig& cfg, std::ostream& out) {
    IetSpec spec = spec_from(cfg);
    std::vector<std::uint64_t> counts;
    bool stable = complexity_stable(orbit_window(spec, -2 * cfg.radius, 2 * cfg.radius), cfg.n_max, cfg.radius, &counts);
    if (cfg.format == Format::json) {
        out << json{{"n_max", cfg.n_max}, {"radius", cfg.radius}, {"counts", counts}, {"stable", stable}}.dump() << "\n";
    } else {
        out << "n\tC(n)\n";
        for (std::size_t n = 0; n < counts.size(); ++n) out << n << "\t" << counts[n] << "\n";
        out << "stable at radius " << 2 * cfg.radius << ": " << (stable ? "yes" : "no") << "\n";
    }
    return stable ? kExitOk : kExitNegative;
}

int run_capset(const RunConfig& cfg, std::ostream& out) {
    FieldPtr field = field_from(cfg.field, cfg.branch);
    if (!cfg.eps || !cfg.l || !cfg.c) throw Error(Errc::InvalidSpec, "capset needs --eps, --l and --c");
    std::optional<QuadNum> eta;
    if (cfg.eta) eta = parse_quad(field, *cfg.eta);
    CapSetConfig cs = CapSetConfig::make(parse_quad(field, *cfg.eps), parse_quad(field, *cfg.c), parse_quad(field, *cfg.l), eta);
    auto pts = generate(cs, cfg.count);
    if (cfg.format == Format::json) {
        json arr = json::array();
        for (std::size_t i = 0; i < pts.size(); ++i) {
            json p = {{"a", pts[i].a}, {"b", pts[i].b}, {"value", point_value(cs, pts[i]).decimal(kDigits)}};
            if (i > 0) {
                auto g = classify_gap(cs, pts[i - 1], pts[i]);
                p["gap"] = g ? gap_name(*g) : "?";
            }
            arr.push_back(p);
        }
        out << json{{"field", field_json(cs.field())}, {"points", arr}}.dump() << "\n";
    } else {
        out << capset_tsv(cs, pts, kDigits);
    }
    return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
    std::vector<std::string> problems;
    bool ok = verify_report(read_all(cfg.input), cfg.radius, problems);
    if (cfg.format == Format::json) {
        out << json{{"ok", ok}, {"problems", problems}}.dump() << "\n";
    } else {
        out << (ok ? "report verified" : "report FAILED verification") << "\n";
        for (const auto& p : problems) out << "  " << p << "\n";
    }
    return ok ? kExitOk : kExitNegative;
}

}  // namespace

IetSpec spec_from(const RunConfig& cfg) {
    FieldPtr field = field_from(cfg.field, cfg.branch);
    bool normalized = cfg.eps || cfg.l || cfg.c;
    bool raw = cfg.alpha1 || cfg.alpha2 || cfg.alpha3 || cfg.x0;
    if (normalized == raw)
        throw Error(Errc::InvalidSpec, "give either --eps/--l/--c or --alpha1/--alpha2/--alpha3/--x0");
    if (normalized) {
        if (!cfg.eps || !cfg.l || !cfg.c) throw Error(Errc::InvalidSpec, "--eps, --l and --c go together");
        return IetSpec::make(parse_quad(field, *cfg.eps), parse_quad(field, *cfg.l), parse_quad(field, *cfg.c));
    }
    if (!cfg.alpha1 || !cfg.alpha2 || !cfg.alpha3 || !cfg.x0)
        throw Error(Errc::InvalidSpec, "--alpha1, --alpha2, --alpha3 and --x0 go together");
    return normalize(parse_quad(field, *cfg.alpha1), parse_quad(field, *cfg.alpha2), parse_quad(field, *cfg.alpha3),
                     parse_quad(field, *cfg.x0));
}

std::string report_json(const IetSpec& spec, const DecisionReport& report) {
    return report_object(spec, report, std::nullopt).dump();
}

bool verify_report(const std::string& json_text, std::int64_t radius, std::vector<std::string>& problems) {
    auto fail = [&](std::string msg) {
        problems.push_back(std::move(msg));
        return false;
    };
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        return fail(std::string("not JSON: ") + e.what());
    }
    try {
        const json& f = j.at("field");
        auto part = [&](const char* key) { return f.at(key).is_string() ? f.at(key).get<std::string>() : f.at(key).dump(); };
        FieldPtr field = field_from(part("A") + "," + part("B") + "," + part("C"), f.at("branch").get<std::string>());
        QuadNum eps = parse_quad(field, j.at("eps").get<std::string>());
        QuadNum l = parse_quad(field, j.at("l").get<std::string>());
        QuadNum c = parse_quad(field, j.at("c").get<std::string>());
        IetSpec spec = IetSpec::make(eps, l, c);
        if (!(spec.eps() == eps && spec.l() == l && spec.c() == c))
            fail("exact strings do not round-trip in the reported field");

        Verdict v = verdict_of(evaluate_conditions(spec));
        if (verdict_name(v) != j.at("verdict").get<std::string>())
            fail("verdict " + j.at("verdict").get<std::string>() + " but conditions give " + verdict_name(v));
        if (v != Verdict::Invariant) return problems.empty();

        QuadNum lambda = parse_quad(field, j.at("lambda").get<std::string>());
        if (!is_scaling_unit(lambda)) fail("lambda is not a unit with lambda > 1 > lambda' > 0");
        const json& sj = j.at("substitution");
        Substitution phi("ABC", {sj.at("A").get<std::string>(), sj.at("B").get<std::string>(), sj.at("C").get<std::string>()});
        if (!is_primitive(phi)) fail("substitution is not primitive");
        if (!check_eigenvector(phi, spec, lambda)) fail("eigenvector identity fails");

        bool rev = j.value("reversed", false);
        IetSpec walk = rev ? reversed(spec) : spec;
        QuadNum lambda_w = rev ? rebase_on(Rational(1) - spec.eps())(lambda) : lambda;
        ReturnSystem rs = return_system(walk, lambda_w, 1'000'000);
        Substitution psi("ABC", {rs.names[0], rs.names[1], rs.names[2]});
        if (!((rev ? unreverse(psi) : psi) == phi)) fail("return names of J do not reproduce the substitution");
        if (!check_homothety(walk, lambda_w, rs)) fail("homothety fails");

        std::int64_t longest = 0;
        for (const auto& img : phi.images()) longest = std::max<std::int64_t>(longest, static_cast<std::int64_t>(img.size()));
        std::int64_t r = std::max(radius, 4 * longest);
        if (!verify_fixed_point(phi, orbit_window(spec, -r, r), r)) fail("fixed-point verification fails at radius " + std::to_string(r));
        if (!check_block_starts(spec, phi, lambda, 1'000)) fail("block starts do not match L' I_X");
    } catch (const Error& e) {
        return fail(e.what());
    } catch (const json::exception& e) {
        return fail(std::string("malformed report: ") + e.what());
    }
    return problems.empty();
}

RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("IET3_STEP_BUDGET")) {
        try {
            cfg.step_budget = std::stoll(env);
        } catch (const std::exception&) {
            throw UsageExit{kExitInput, std::string("IET3_STEP_BUDGET is not an integer: ") + env + "\n"};
        }
    }

    CLI::App app{"Substitution invariance of three-interval exchange words"};
    app.require_subcommand(1);
    std::string format = "text";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--field", cfg.field, "A,B,C of A e^2 + B e + C = 0")->capture_default_str();
        sub->add_option("--branch", cfg.branch, "plus or minus root")->capture_default_str();
        sub->add_option("--eps", cfg.eps, "slope e in Q(e), exact");
        sub->add_option("--l", cfg.l, "domain length");
        sub->add_option("--c", cfg.c, "domain start");
        sub->add_option("--alpha1", cfg.alpha1, "raw interval length 1");
        sub->add_option("--alpha2", cfg.alpha2, "raw interval length 2");
        sub->add_option("--alpha3", cfg.alpha3, "raw interval length 3");
        sub->add_option("--x0", cfg.x0, "raw starting point");
    };
    auto add_synthesis = [&](CLI::App* sub) {
        sub->add_option("--radius", cfg.radius, "fixed-point verification radius")->capture_default_str();
        sub->add_option("--step-budget", cfg.step_budget, "max steps per return walk (env IET3_STEP_BUDGET)");
        sub->add_option("--block-window", cfg.block_window, "block-start check window")->capture_default_str();
    };

    auto* decide_cmd = app.add_subcommand("decide", "decide invariance and synthesize the substitution");
    auto* synth_cmd = app.add_subcommand("synthesize", "as decide, optionally with a complexity check");
    for (auto* sub : {decide_cmd, synth_cmd}) {
        add_common(sub);
        add_params(sub);
        add_synthesis(sub);
    }
    synth_cmd->add_option("--complexity", cfg.complexity_check, "also check C(n) = 2n+1 for n up to this value");

    auto* gen_cmd = app.add_subcommand("generate", "print the coding u_from ... u_{to-1}");
    add_common(gen_cmd);
    add_params(gen_cmd);
    gen_cmd->add_option("--from", cfg.from)->capture_default_str();
    gen_cmd->add_option("--to", cfg.to)->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "re-check a JSON report");
    add_common(verify_cmd);
    verify_cmd->add_option("input", cfg.input, "report file, - for stdin")->required();
    verify_cmd->add_option("--radius", cfg.radius)->capture_default_str();

    auto* cx_cmd = app.add_subcommand("complexity", "factor complexity table");
    add_common(cx_cmd);
    add_params(cx_cmd);
    cx_cmd->add_option("--n-max", cfg.n_max)->capture_default_str();
    cx_cmd->add_option("--radius", cfg.radius)->capture_default_str();

    auto* cap_cmd = app.add_subcommand("capset", "cut-and-project points as TSV");
    add_common(cap_cmd);
    add_params(cap_cmd);
    cap_cmd->add_option("--eta", cfg.eta, "projection slope (default -e')");
    cap_cmd->add_option("--count", cfg.count)->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "decide every JSON line of a file");
    add_common(sweep_cmd);
    add_params(sweep_cmd);
    add_synthesis(sweep_cmd);
    sweep_cmd->add_option("input", cfg.input, "JSON lines, - for stdin")->required();
    sweep_cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, x;
        int status = app.exit(e, o, x);
        throw UsageExit{status == 0 ? kExitOk : kExitInput, o.str() + x.str()};
    }

    const std::pair<CLI::App*, Command> table[] = {{decide_cmd, Command::decide}, {synth_cmd, Command::synthesize},
                                                   {gen_cmd, Command::generate},  {verify_cmd, Command::verify},
                                                   {cx_cmd, Command::complexity}, {cap_cmd, Command::capset},
                                                   {sweep_cmd, Command::sweep}};
    for (const auto& [sub, cmd] : table)
        if (sub->parsed()) cfg.command = cmd;
    cfg.format = format == "json" ? Format::json : Format::text;
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "cannot write \"" << cfg.output << "\"\n";
            return kExitInput;
        }
        sink = &file;
    }
    try {
        switch (cfg.command) {
            case Command::decide:
            case Command::synthesize: return run_decide(cfg, *sink, err);
            case Command::generate: return run_generate(cfg, *sink);
            case Command::verify: return run_verify(cfg, *sink);
            case Command::complexity: return run_complexity(cfg, *sink);
            case Command::capset: return run_capset(cfg, *sink);
            case Command::sweep: return run_sweep(cfg, *sink);
        }
    } catch (const Error& e) {
        err << command_name(cfg.command) << ": " << e.what() << "\n";
        return e.code() == Errc::SynthesisFailed ? kExitInternal : kExitInput;
    }
    return kExitInput;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const UsageExit& e) {
        (e.status == kExitOk ? out : err) << e.text;
        return e.status;
    }
    return run(cfg, out, err);
}

}  // namespace iet3::cli
