#include "xlbp/cli.hpp"

#include "report.hpp"

#include "xlbp/darboux.hpp"
#include "xlbp/recurrence.hpp"
#include "xlbp/xhr.hpp"

#include <CLI11.hpp>

#include <array>
#include <fstream>
#include <map>
#include <sstream>

namespace xlbp::cli {
namespace {

struct ParamFlags {
    std::string alpha = "3/5";
    std::string beta = "1/2";

    void add(CLI::App& app) {
        app.add_option("--alpha", alpha, "alpha as p/q")->capture_default_str();
        app.add_option("--beta", beta, "beta as p/q")->capture_default_str();
    }
    Params get() const { return {Rational::parse(alpha), Rational::parse(beta)}; }
};

json params_json(const Params& p) { return json{{"alpha", p.alpha.str()}, {"beta", p.beta.str()}}; }

json index_json(const XIndex& i) { return json{{"j0", i.j0}, {"l0", i.l0}, {"n", i.n}}; }

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
    f << text;
}

// ---- gen ----

struct GenArgs {
    std::string family = "hr";
    int j0 = 1;
    int l0 = 1;
    int n = 0;
    bool partner = false;
    std::string format = "json";
    ParamFlags params;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    Params p = a.params.get();
    Poly poly;
    json index;
    if (a.family == "hr") {
        if (a.n < 0) throw std::invalid_argument("n must be nonnegative");
        poly = a.partner ? hr_partner(a.n, p) : hr_poly(a.n, p);
        index = json{{"n", a.n}};
    } else {
        XIndex idx{a.j0, a.l0, a.n};
        (void)SeedType(a.j0);
        if (a.l0 < 1) throw std::invalid_argument("l0 must be positive");
        poly = (a.partner ? x_partner(idx, p) : x_poly(idx, p)).poly;
        index = index_json(idx);
    }

    if (a.format == "json") {
        json j;
        j["family"] = a.family;
        j["index"] = index;
        j["params"] = params_json(p);
        j["partner"] = a.partner;
        j["degree"] = poly.degree();
        j["coefficients"] = to_json(poly);
        out << j.dump(2) << "\n";
    } else if (a.format == "csv") {
        out << "degree,numerator,denominator\n";
        for (int d = 0; d <= poly.degree(); ++d) {
            const Rational& c = poly.coeff(d);
            out << d << "," << c.num().get_str() << "," << c.den().get_str() << "\n";
        }
    } else {
        out << poly.str() << "\n";
    }
    return kPass;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite = "all";
    int max_n = 10;
    int max_l0 = 2;
    std::vector<int> j0s;
    std::string out_path;
    bool timing = false;
    ParamFlags params;
};

int cmd_verify(const VerifyArgs& a, const std::vector<std::string>& argv, std::ostream& out) {
    SuiteOptions o;
    o.params = a.params.get();
    o.max_n = a.max_n;
    o.max_l0 = a.max_l0;
    if (!a.j0s.empty()) o.j0s = a.j0s;
    if (o.max_n < 0 || o.max_l0 < 1) throw std::invalid_argument("--max-n must be >= 0 and --max-l0 >= 1");
    for (int j : o.j0s) (void)SeedType(j);

    static const std::vector<std::pair<std::string, std::vector<Task> (*)(const SuiteOptions&)>> kSuites = {
        {"identities", identities_suite}, {"darboux", darboux_suite},     {"xhr", xhr_suite},
        {"recurrence", recurrence_suite}, {"quadrature", quadrature_suite},
    };
    std::vector<Task> tasks;
    std::vector<std::string> suite_of;
    for (const auto& [name, build] : kSuites) {
        if (a.suite != "all" && a.suite != name) continue;
        for (auto& t : build(o)) {
            tasks.push_back(std::move(t));
            suite_of.push_back(name);
        }
    }
    // Tag each record with its suite after the run; records keep task order.
    std::vector<Task> tagged;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        tagged.push_back([t = tasks[i], s = suite_of[i]] {
            auto rs = t();
            for (auto& r : rs) r.inputs["suite"] = s;
            return rs;
        });
    }
    auto records = run_tasks(tagged);

    std::map<std::string, std::array<int, 3>> per_suite;
    int pass = 0, fail = 0, skipped = 0;
    json checks = json::array();
    for (auto& r : records) {
        std::string suite = r.inputs["suite"];
        r.inputs.erase("suite");
        json c;
        c["check_id"] = r.check_id;
        c["suite"] = suite;
        c["inputs"] = r.inputs;
        c["status"] = r.status;
        if (!r.witness.is_null()) c["witness"] = r.witness;
        if (!r.note.empty()) c["note"] = r.note;
        if (a.timing) c["timing_ms"] = r.ms;
        checks.push_back(c);
        auto& cnt = per_suite[suite];
        if (r.status == "pass") ++pass, ++cnt[0];
        else if (r.status == "fail") ++fail, ++cnt[1];
        else ++skipped, ++cnt[2];
    }
    int code = fail ? kFail : kPass;

    json report;
    report["tool"] = "xlbp";
    report["tool_version"] = kToolVersion;
    report["command"] = "verify";
    report["argv"] = argv;
    report["params"] = params_json(o.params);
    report["options"] = json{{"suite", a.suite}, {"max_n", o.max_n}, {"max_l0", o.max_l0}, {"j0", o.j0s}};
    report["checks"] = checks;
    report["summary"] = json{{"total", pass + fail + skipped},
                             {"pass", pass},
                             {"fail", fail},
                             {"skipped", skipped},
                             {"exit_code", code}};
    if (!a.out_path.empty()) write_text(a.out_path, report.dump(2) + "\n");

    for (const auto& [name, build] : kSuites) {
        auto it = per_suite.find(name);
        if (it == per_suite.end()) continue;
        out << name << ": " << it->second[0] << " pass, " << it->second[1] << " fail, " << it->second[2]
            << " skipped\n";
    }
    for (const auto& c : checks)
        if (c["status"] == "fail") out << "FAIL " << c["check_id"].get<std::string>() << "\n";
    out << (code == kPass ? "PASS" : "FAIL") << " (" << pass << "/" << pass + fail << " checks, " << skipped
        << " skipped)\n";
    return code;
}

// ---- certify ----

struct CertifyArgs {
    int j0 = 1;
    int l0 = 1;
    int n = -1;
    std::string mode = "thm12";
    int k = 0;
    std::vector<std::string> a;
    std::string out_path;
    ParamFlags params;
};

json certificate_json(const RecurrenceCertificate& c) {
    json j;
    j["index"] = index_json(c.index);
    j["params"] = params_json(c.params);
    j["mode"] = c.mode == CertifyMode::banded ? "thm12" : "thm11";
    if (c.mode == CertifyMode::general) j["k"] = c.k;
    j["q"] = to_json(c.q);
    j["a"] = to_json(c.a);
    j["a_unique"] = c.a_unique;
    json b = json::object();
    for (const auto& [idx, v] : c.b) b[std::to_string(idx)] = v.str();
    j["b"] = b;
    j["window"] = json::array({c.window.first, c.window.second});
    j["residual_zero"] = c.residual_zero;
    j["b_unique"] = c.b_unique;
    j["method_tags"] = c.method_tags;
    j["term_count"] = c.term_count();
    j["nonzero_term_count"] = c.nonzero_term_count();
    j["excluded_slots"] = c.excluded_slots;
    j["skipped_columns"] = c.skipped_columns;
    j["extra_columns"] = c.extra_columns;
    j["residual"] = to_json(c.residual);
    if (!c.ok()) j["failure"] = c.failure;
    return j;
}

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
    if (a.n < 0) throw std::invalid_argument("--n must be nonnegative");
    Params p = a.params.get();
    CertifyOptions opt;
    opt.mode = a.mode == "thm11" ? CertifyMode::general : CertifyMode::banded;
    opt.k = a.k;
    for (const auto& s : a.a) opt.a.push_back(Rational::parse(s));
    if (opt.mode == CertifyMode::banded && (!a.a.empty() || a.k != 0))
        throw std::invalid_argument("--k and --a apply to --mode thm11 only");
    auto cert = certify(XIndex{a.j0, a.l0, a.n}, p, opt);
    std::string text = certificate_json(cert).dump(2) + "\n";
    if (!a.out_path.empty()) write_text(a.out_path, text);
    out << text;
    return cert.ok() ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of exceptional Laurent biorthogonal polynomials", "xlbp"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    GenArgs g;
    auto* gen = app.add_subcommand("gen", "print a classical or exceptional polynomial");
    gen->add_option("--family", g.family)->check(CLI::IsMember({"hr", "xhr"}))->capture_default_str();
    gen->add_option("--j0", g.j0, "seed class 1..4 (xhr)")->capture_default_str();
    gen->add_option("--l0", g.l0, "seed degree (xhr)")->capture_default_str();
    gen->add_option("--n", g.n)->required();
    gen->add_flag("--partner", g.partner, "print the biorthogonal partner instead");
    gen->add_option("--format", g.format)->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
    g.params.add(*gen);

    VerifyArgs v;
    auto* ver = app.add_subcommand("verify", "run verification suites");
    ver->add_option("--suite", v.suite)
        ->check(CLI::IsMember({"identities", "darboux", "xhr", "recurrence", "quadrature", "all"}))
        ->capture_default_str();
    ver->add_option("--max-n", v.max_n)->capture_default_str();
    ver->add_option("--max-l0", v.max_l0)->capture_default_str();
    ver->add_option("--j0", v.j0s, "restrict seed classes (repeatable)")->check(CLI::Range(1, 4));
    ver->add_option("--out", v.out_path, "write the JSON report here");
    ver->add_flag("--timing", v.timing, "include per-check wall times (breaks byte determinism)");
    v.params.add(*ver);

    CertifyArgs c;
    auto* cer = app.add_subcommand("certify", "construct and check a recurrence certificate");
    cer->add_option("--j0", c.j0)->capture_default_str();
    cer->add_option("--l0", c.l0)->capture_default_str();
    cer->add_option("--n", c.n)->required();
    cer->add_option("--mode", c.mode)->check(CLI::IsMember({"thm12", "thm11"}))->capture_default_str();
    cer->add_option("--k", c.k, "left-hand length minus one (thm11)")->capture_default_str();
    cer->add_option("--a", c.a, "left-hand coefficients a_0..a_k (thm11)")->delimiter(',');
    cer->add_option("--out", c.out_path, "also write the certificate here");
    c.params.add(*cer);

    std::vector<std::string> full{"xlbp"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> cargv;
    for (auto& s : full) cargv.push_back(s.data());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*gen) return cmd_gen(g, out);
        if (*ver) return cmd_verify(v, args, out);
        return cmd_certify(c, out);
    } catch (const ParamPole& e) {
        err << "error: parameter pole: " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
    }
    return kUsage;
}

}  // namespace xlbp::cli
