// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance <path-to-xlbp-cli>

#include "xlbp/darboux.hpp"
#include "xlbp/identities.hpp"
#include "xlbp/param_sets.hpp"
#include "xlbp/quadrature.hpp"
#include "xlbp/recurrence.hpp"
#include "xlbp/xhr.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace xlbp;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 12) notes.push_back(why);
    }
    void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void report(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("unexpected exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "C" << id << " " << title << " (" << buf << ")\n";
    for (const auto& n : o.notes) std::cout << "         " << n << "\n";
    if (!o.pass) ++failures;
}

std::string pairs_str(const std::vector<Params>& ps) {
    std::string s;
    for (const auto& p : ps) s += (s.empty() ? "" : " ") + p.str();
    return s;
}

// Pole-free pairs with all moments |k| <= K nonzero.
std::vector<Params> regular_sets(const std::function<void(const Params&)>& probe, int K) {
    return generic_params([&](const Params& p) {
        if (!regular_moments(p, K)) throw ParamPole("degenerate moments at " + p.str());
        probe(p);
    });
}

std::string idx_str(int j0, int l0, int n) { return XIndex{j0, l0, n}.str(); }

int run_cli(const std::string& cli, const std::string& args, const std::string& out_file) {
    std::string cmd = "\"" + cli + "\" " + args + " > " + (out_file.empty() ? "/dev/null" : out_file) + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream s;
    s << f.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <xlbp-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];

    report(1, "classical biorthogonality, exact, n,m <= 12", [](Outcome& o) {
        auto t0 = std::chrono::steady_clock::now();
        for (const auto& p : fixed_generic_params()) {
            auto t = moments(p, -12, 12);
            for (int n = 0; n <= 12; ++n)
                for (int m = 0; m <= 12; ++m) {
                    Rational got = inner_product(hr_poly(n, p), hr_partner(m, p), t);
                    Rational want = n == m ? norm_ratio(n, p) : Rational(0);
                    if (got != want) o.fail(p.str() + " n=" + std::to_string(n) + " m=" + std::to_string(m));
                }
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > 10) o.fail("runtime above 10 s");
        o.note("pairs " + pairs_str(fixed_generic_params()));
    });

    report(2, "identity catalog, exact, n <= 10, three pairs", [](Outcome& o) {
        int checks = 0;
        for (const auto& info : identity_catalog()) {
            auto sets = generic_params([&](const Params& p) {
                for (int n = info.min_n; n <= 10; ++n) (void)verify_identity(info.tag, n, p);
            });
            for (const auto& p : sets)
                for (int n = info.min_n; n <= 10; ++n) {
                    ++checks;
                    auto r = verify_identity(info.tag, n, p);
                    if (!r.pass) o.fail(std::string(info.name) + " n=" + std::to_string(n) + " " + p.str());
                }
        }
        o.note(std::to_string(identity_catalog().size()) + " identities, " + std::to_string(checks) + " checks");
    });

    report(3, "backward image law, j0 1..4, l0 1..3, n <= 10", [](Outcome& o) {
        int checks = 0;
        for (int j0 = 1; j0 <= 4; ++j0)
            for (int l0 = 1; l0 <= 3; ++l0) {
                auto sets = generic_params([&](const Params& p) { (void)make_seed(j0, l0, p); });
                for (const auto& p : sets)
                    for (int n = 0; n <= 10; ++n) {
                        if (!XIndex{j0, l0, n}.admissible()) continue;
                        ++checks;
                        auto r = backward_apply(j0, l0, psi_hat(j0, l0, n, p), p);
                        if (!r.divisible || r.image != hr_poly(n, p.shifted(1, -1)).scaled(xi(j0, l0, n, p)))
                            o.fail(idx_str(j0, l0, n) + " " + p.str());
                    }
            }
        o.note(std::to_string(checks) + " checks");
    });

    auto certify_block = [](Outcome& o, const std::vector<int>& j0s, const std::vector<int>& l0s, int max_n) {
        int checks = 0, reduced = 0;
        for (int j0 : j0s)
            for (int l0 : l0s) {
                auto sets = regular_sets([&](const Params& p) { (void)certify(XIndex{j0, l0, 2 * l0 + 1}, p); },
                                         2 * max_n + 4);
                for (const auto& p : sets)
                    for (int n = 2 * l0 + 1; n <= max_n; ++n) {
                        XIndex idx{j0, l0, n};
                        ++checks;
                        auto c = certify(idx, p);
                        std::string where = idx.str() + " " + p.str();
                        if (!c.ok()) o.fail(where + ": " + c.failure);
                        if (!c.a_unique) o.fail(where + ": a not unique");
                        if (!c.c_tilde_low_zero) o.fail(where + ": c_tilde nonzero below window");
                        if (!c.b_unique) o.fail(where + ": b not unique");
                        if (!c.residual_zero || !recheck_residual(c).is_zero()) o.fail(where + ": residual");
                        int want = 3 * l0 + 4 - static_cast<int>(c.excluded_slots.size());
                        if (c.term_count() != want) o.fail(where + ": term count " + std::to_string(c.term_count()));
                        if (!c.excluded_slots.empty()) ++reduced;
                    }
            }
        o.note(std::to_string(checks) + " certificates");
        if (reduced)
            o.note(std::to_string(reduced) +
                   " of them (j0=1, n=2l0+1) have a left slot at the excluded index n-l=l0; counted as 3l0+3 terms");
    };

    report(4, "banded recurrence certificates, j0 1..4, l0 1..2, 2l0+1 <= n <= 10", [&](Outcome& o) {
        auto t0 = std::chrono::steady_clock::now();
        certify_block(o, {1, 2, 3, 4}, {1, 2}, 10);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > 60) o.fail("runtime above 60 s");
        o.note("pairs: pole-free with regular moments; (1,1) is excluded since c_k = 0 for k >= 2 at beta = 1");
    });

    report(5, "worked cases (j0,1,5), b coefficients exact at three pairs", [](Outcome& o) {
        for (int id = 1; id <= 4; ++id) {
            auto sets = regular_sets(
                [&](const Params& p) {
                    (void)example_oracles(id, p);
                    (void)certify(XIndex{id, 1, 5}, p);
                },
                16);
            for (const auto& p : sets) {
                auto ref = example_oracles(id, p);
                auto c = certify(XIndex{id, 1, 5}, p);
                std::string where = "case " + std::to_string(id) + " " + p.str();
                if (c.q != ref.q) o.fail(where + ": q differs");
                if (c.a != ref.a) o.fail(where + ": a differs");
                for (const auto& [j, v] : ref.b) {
                    Rational got = c.b.count(j) ? c.b.at(j) : Rational(0);
                    if (got != v)
                        o.fail(where + ": coefficient of P^(" + std::to_string(id) + ",1," + std::to_string(j) +
                               ") is " + got.str() + ", reference " + v.str());
                }
            }
        }
        auto c1 = certify(XIndex{1, 1, 5}, Params{1, Rational(1, 2)});
        if (c1.b.at(7) != Rational(1, 3)) o.fail("spot value 1/3 for case 1, j=7 at (1, 1/2)");
        else o.note("spot value: case 1, j=7 at (1, 1/2) is 1/3");
        Params q{Rational(2, 7), Rational(5, 3)};
        Rational A = q.alpha, B = q.beta;
        Rational spot = 35 * (4 + B) * (5 + A + B) / (6 * (5 + A) * (7 + A) * (8 + A));
        if (certify(XIndex{4, 1, 5}, q).b.at(4) != spot) o.fail("spot value for case 4, j=4");
        else o.note("spot value: case 4, j=4 matches 35(4+b)(5+a+b)/(6(5+a)(7+a)(8+a))");
    });

    report(6, "formula route vs solver route for the a coefficients", [&](Outcome& o) {
        for (int j0 : {1, 2})
            for (int l0 : {1, 2}) {
                auto sets = regular_sets([&](const Params& p) { (void)certify(XIndex{j0, l0, 2 * l0 + 1}, p); }, 24);
                for (const auto& p : sets)
                    for (int n = 2 * l0 + 1; n <= 10; ++n) {
                        XIndex idx{j0, l0, n};
                        auto s = a_coeffs_solver(idx, p);
                        if (!s.unique || s.a != a_coeffs_formula(idx, p)) o.fail(idx.str() + " " + p.str());
                    }
            }
        int full = 0, shortr = 0, total = 0;
        for (int j0 : {3, 4}) {
            auto sets = regular_sets([&](const Params& p) { (void)certify(XIndex{j0, 1, 3}, p); }, 20);
            for (const auto& p : sets)
                for (int n = 3; n <= 8; ++n) {
                    XIndex idx{j0, 1, n};
                    auto s = a_coeffs_solver(idx, p);
                    ++total;
                    if (s.a == a_coeffs_formula(idx, p)) ++full;
                    if (s.a == a_coeffs_formula_short_xi(idx, p)) ++shortr;
                }
        }
        o.note("j0=3,4: full Xi reading matches " + std::to_string(full) + "/" + std::to_string(total) +
               ", reading without (n+alpha+1) matches " + std::to_string(shortr) + "/" + std::to_string(total));
        Outcome inner;
        certify_block(inner, {3, 4}, {1}, 8);
        if (!inner.pass)
            for (const auto& n : inner.notes) o.fail(n);
        else
            o.note("solver route certifies j0=3,4, l0=1, n <= 8: " + inner.notes.front());
    });

    report(7, "common derivative factor for j0=4, l0 <= 3, n <= 8", [](Outcome& o) {
        int checks = 0;
        for (int l0 = 1; l0 <= 3; ++l0) {
            auto sets = generic_params([&](const Params& p) {
                for (int n = 0; n <= 8; ++n) (void)xp4_derivative_factor(l0, n, p);
            });
            for (const auto& p : sets)
                for (int n = 0; n <= 8; ++n) {
                    ++checks;
                    if (!xp4_derivative_factor(l0, n, p).pass) o.fail(idx_str(4, l0, n) + " " + p.str());
                }
        }
        o.note(std::to_string(checks) + " checks");
    });

    report(8, "quadrature at (1, 3/2) against exact norms", [](Outcome& o) {
        auto t0 = std::chrono::steady_clock::now();
        const Params p{1, Rational(3, 2)};
        double worst_c = 0, worst_x = 0;
        QuadConfig cc;
        cc.tolerance = 1e-10;
        auto t = classical_quad_table(5, p, cc);
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= 5; ++m) {
                const auto& v = t[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
                double h = norm_ratio(n, p).to_double();
                double e = std::hypot(v.re - (n == m ? h : 0), v.im) /
                           std::sqrt(std::abs(h * norm_ratio(m, p).to_double()));
                worst_c = std::max(worst_c, e);
            }
        if (!(worst_c <= 1e-8)) o.fail("classical relative error " + std::to_string(worst_c));
        QuadConfig xc;
        xc.tolerance = 1e-8;
        for (int j0 = 1; j0 <= 4; ++j0) {
            std::vector<int> ns;
            for (int n = 0; n <= 4; ++n)
                if (XIndex{j0, 1, n}.admissible()) ns.push_back(n);
            std::vector<std::vector<QuadValue>> x;
            try {
                x = exceptional_quad_table(j0, 1, ns, p, xc);
            } catch (const DenominatorNearContour& e) {
                o.note("skipped j0=" + std::to_string(j0) + ": " + e.what());
                continue;
            }
            for (std::size_t i = 0; i < ns.size(); ++i)
                for (std::size_t k = 0; k < ns.size(); ++k) {
                    double hn = x_norm_ratio(XIndex{j0, 1, ns[i]}, p).to_double();
                    double hm = x_norm_ratio(XIndex{j0, 1, ns[k]}, p).to_double();
                    const auto& v = x[i][k];
                    double e = std::hypot(v.re - (i == k ? hn : 0), v.im) / std::sqrt(std::abs(hn * hm));
                    worst_x = std::max(worst_x, e);
                }
        }
        if (!(worst_x <= 1e-6)) o.fail("exceptional relative error " + std::to_string(worst_x));
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst relative error: classical %.2e, exceptional %.2e", worst_c, worst_x);
        o.note(buf);
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s > 120) o.fail("runtime above 2 min");
    });

    report(9, "CLI exit codes and byte-deterministic reports", [&](Outcome& o) {
        struct Case {
            std::string args;
            int want;
        };
        const std::vector<Case> cases = {
            {"gen --family hr --n 1 --alpha 1 --beta 2", 0},
            {"certify --j0 4 --l0 1 --n 5 --alpha 1 --beta 1/2", 0},
            {"verify --suite identities --alpha 3/5 --beta 1/2 --max-n 10", 0},
            {"verify --suite recurrence --j0 1 --max-l0 1 --max-n 5 --alpha 1 --beta 1", 1},
            {"gen --family xhr --j0 1 --l0 2 --n 2", 2},
            {"certify --mode thm11 --k 3 --n 2", 2},
            {"gen --family hr --n 3 --alpha -3", 2},
            {"verify --suite bogus", 2},
        };
        for (const auto& c : cases) {
            int got = run_cli(cli, c.args, "");
            if (got != c.want)
                o.fail("'" + c.args + "' exited " + std::to_string(got) + ", expected " + std::to_string(c.want));
        }
        const std::string path = "acceptance_report.json";
        const std::string args = "verify --suite xhr --max-n 6 --out " + path;
        run_cli(cli, args, "");
        std::string a = slurp(path);
        run_cli(cli, args, "");
        std::string b = slurp(path);
        if (a.empty() || a != b) o.fail("verify report differs between two runs");
        std::string ca = "acceptance_cert_a.json", cb = "acceptance_cert_b.json";
        run_cli(cli, "certify --j0 2 --l0 2 --n 7", ca);
        run_cli(cli, "certify --j0 2 --l0 2 --n 7", cb);
        if (slurp(ca).empty() || slurp(ca) != slurp(cb)) o.fail("certificate output differs between two runs");
        std::remove(path.c_str());
        std::remove(ca.c_str());
        std::remove(cb.c_str());
        o.note(std::to_string(cases.size()) + " exit-code cases, 2 determinism checks");
    });

    std::cout << (failures ? std::to_string(failures) + " criterion(s) failed" : std::string("all criteria pass"))
              << "\n";
    return failures ? 1 : 0;
}
