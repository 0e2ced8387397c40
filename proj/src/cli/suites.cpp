#include "report.hpp"

#include "xlbp/darboux.hpp"
#include "xlbp/identities.hpp"
#include "xlbp/quadrature.hpp"
#include "xlbp/recurrence.hpp"
#include "xlbp/xhr.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace xlbp::cli {
namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

// Runs fn; a parameter pole turns the check into a recorded skip.
Task guarded(std::string id, json inputs, std::function<void(CheckRecord&)> fn) {
    return [id = std::move(id), inputs = std::move(inputs), fn = std::move(fn)] {
        CheckRecord r;
        r.check_id = id;
        r.inputs = inputs;
        try {
            fn(r);
        } catch (const ParamPole& e) {
            r.status = "skipped";
            r.note = e.what();
            r.witness = nullptr;
        }
        return std::vector<CheckRecord>{r};
    };
}

json idx_json(int j0, int l0, int n) { return json{{"j0", j0}, {"l0", l0}, {"n", n}}; }

std::string suffix(int j0, int l0, int n) {
    return "j0=" + std::to_string(j0) + "/l0=" + std::to_string(l0) + "/n=" + std::to_string(n);
}

}  // namespace

std::vector<Task> identities_suite(const SuiteOptions& o) {
    std::vector<Task> tasks;
    for (const auto& info : identity_catalog()) {
        for (int n = info.min_n; n <= o.max_n; ++n) {
            tasks.push_back(guarded("identities/" + std::string(info.name) + "/n=" + std::to_string(n),
                                    json{{"n", n}, {"clearing_factor", std::string(info.clearing_factor)}},
                                    [tag = info.tag, n, p = o.params](CheckRecord& r) {
                                        auto res = verify_identity(tag, n, p);
                                        if (!res.pass) {
                                            r.status = "fail";
                                            r.witness = to_json(res.witness);
                                            r.note = res.detail;
                                        }
                                    }));
        }
    }
    return tasks;
}

std::vector<Task> darboux_suite(const SuiteOptions& o) {
    std::vector<Task> tasks;
    for (int j0 : o.j0s) {
        for (int l0 = 1; l0 <= o.max_l0; ++l0) {
            tasks.push_back(guarded("darboux/kernel/j0=" + std::to_string(j0) + "/l0=" + std::to_string(l0),
                                    json{{"j0", j0}, {"l0", l0}}, [j0, l0, p = o.params](CheckRecord& r) {
                                        auto k = kernel_check(j0, l0, p);
                                        if (!k.pass) {
                                            r.status = "fail";
                                            r.witness = to_json(k.residual);
                                        }
                                    }));
            if (j0 == 4) {
                tasks.push_back(guarded("darboux/kernel_member/j0=4/l0=" + std::to_string(l0),
                                        json{{"j0", 4}, {"l0", l0}}, [l0, p = o.params](CheckRecord& r) {
                                            auto b = backward_apply(4, l0, LaurentPoly::monomial(1, -l0), p);
                                            if (!b.divisible || !b.image.is_zero()) {
                                                r.status = "fail";
                                                r.witness = b.divisible ? to_json(b.image) : to_json(b.remainder);
                                            }
                                        }));
            }
            for (int n = 0; n <= o.max_n; ++n) {
                if (!XIndex{j0, l0, n}.admissible()) continue;
                tasks.push_back(guarded("darboux/backward/" + suffix(j0, l0, n), idx_json(j0, l0, n),
                                        [j0, l0, n, p = o.params](CheckRecord& r) {
                                            auto b = backward_apply(j0, l0, psi_hat(j0, l0, n, p), p);
                                            Poly want = hr_poly(n, p.shifted(1, -1)).scaled(xi(j0, l0, n, p));
                                            if (!b.divisible) {
                                                r.status = "fail";
                                                r.note = "not divisible";
                                                r.witness = to_json(b.remainder);
                                            } else if (b.image != want) {
                                                r.status = "fail";
                                                r.witness = to_json(b.image - want);
                                            }
                                        }));
            }
        }
    }
    return tasks;
}

std::vector<Task> xhr_suite(const SuiteOptions& o) {
    std::vector<Task> tasks;
    for (int j0 : o.j0s) {
        for (int l0 = 1; l0 <= o.max_l0; ++l0) {
            for (int n = 0; n <= o.max_n; ++n) {
                XIndex idx{j0, l0, n};
                if (!idx.admissible()) continue;
                tasks.push_back(guarded("xhr/compact_vs_darboux/" + suffix(j0, l0, n), idx_json(j0, l0, n),
                                        [idx, p = o.params](CheckRecord& r) {
                                            auto x = x_poly(idx, p);
                                            LaurentPoly route = psi_hat(idx.j0, idx.l0, idx.n, p);
                                            if (idx.j0 >= 3) route = route.shifted(idx.l0);
                                            LaurentPoly diff = LaurentPoly(x.poly) - route;
                                            if (!diff.is_zero()) {
                                                r.status = "fail";
                                                r.witness = to_json(diff);
                                            }
                                        }));
                tasks.push_back(guarded("xhr/degree/" + suffix(j0, l0, n), idx_json(j0, l0, n),
                                        [idx, p = o.params](CheckRecord& r) {
                                            auto x = x_poly(idx, p);
                                            int want = x_degree(idx.j0, idx.l0, idx.n);
                                            r.witness = json{{"degree", x.poly.degree()}, {"expected", want}};
                                            if (x.poly.degree() != want) r.status = "fail";
                                            try {
                                                auto q = x_partner(idx, p);
                                                r.witness["partner_degree"] = q.poly.degree();
                                                if (q.poly.degree() != want) r.status = "fail";
                                            } catch (const ParamPole& e) {
                                                r.witness["partner_degree"] = nullptr;
                                            }
                                        }));
                tasks.push_back(guarded("xhr/norm_theta/" + suffix(j0, l0, n), idx_json(j0, l0, n),
                                        [idx, p = o.params](CheckRecord& r) {
                                            Rational h = x_norm_ratio(idx, p);
                                            Rational want = (theta(idx.j0, idx.l0, p) - idx.n) * (idx.n + p.beta) *
                                                            norm_ratio(idx.n, p);
                                            if (h != want) {
                                                r.status = "fail";
                                                r.witness = json{{"norm_ratio", h.str()}, {"theta_form", want.str()}};
                                            }
                                        }));
                if (j0 == 4) {
                    tasks.push_back(guarded("xhr/derivative_factor/" + suffix(4, l0, n), idx_json(4, l0, n),
                                            [l0, n, p = o.params](CheckRecord& r) {
                                                auto c = xp4_derivative_factor(l0, n, p);
                                                if (!c.pass) {
                                                    r.status = "fail";
                                                    r.witness = to_json(c.lhs - c.rhs);
                                                }
                                            }));
                }
            }
        }
    }
    return tasks;
}

std::vector<Task> recurrence_suite(const SuiteOptions& o) {
    std::vector<Task> tasks;
    for (int j0 : o.j0s) {
        for (int l0 = 1; l0 <= o.max_l0; ++l0) {
            for (int n = 2 * l0 + 1; n <= o.max_n; ++n) {
                XIndex idx{j0, l0, n};
                if (!idx.admissible()) continue;
                tasks.push_back(guarded("recurrence/certify/" + suffix(j0, l0, n), idx_json(j0, l0, n),
                                        [idx, p = o.params](CheckRecord& r) {
                                            auto c = certify(idx, p);
                                            json b = json::object();
                                            for (const auto& [j, v] : c.b) b[std::to_string(j)] = v.str();
                                            r.witness = json{{"residual_zero", c.residual_zero},
                                                             {"b_unique", c.b_unique},
                                                             {"term_count", c.term_count()},
                                                             {"excluded_slots", c.excluded_slots},
                                                             {"a", to_json(c.a)},
                                                             {"b", b},
                                                             {"method_tags", c.method_tags}};
                                            r.witness["a_unique"] = c.a_unique;
                                            if (!c.ok()) {
                                                r.status = "fail";
                                                r.note = c.failure;
                                            } else if (!c.a_unique) {
                                                r.status = "fail";
                                                r.note = "a not unique at these parameters (formula vector certified)";
                                            } else if (c.term_count() != 3 * idx.l0 + 4 -
                                                                             static_cast<int>(c.excluded_slots.size())) {
                                                r.status = "fail";
                                                r.note = "term count " + std::to_string(c.term_count());
                                            }
                                        }));
                if (j0 <= 2) {
                    tasks.push_back(guarded("recurrence/formula_vs_solver/" + suffix(j0, l0, n), idx_json(j0, l0, n),
                                            [idx, p = o.params](CheckRecord& r) {
                                                auto s = a_coeffs_solver(idx, p);
                                                auto f = a_coeffs_formula(idx, p);
                                                if (!s.unique || s.a != f) {
                                                    r.status = "fail";
                                                    r.witness = json{{"solver", to_json(s.a)}, {"formula", to_json(f)}};
                                                }
                                            }));
                }
            }
        }
    }
    return tasks;
}

std::vector<Task> quadrature_suite(const SuiteOptions& o) {
    constexpr double kClassicalTol = 1e-8;
    constexpr double kExceptionalTol = 1e-6;
    std::vector<Task> tasks;
    const Params p = o.params;
    // Refinement stops two orders below the acceptance tolerance.
    QuadConfig classical_cfg, exceptional_cfg;
    classical_cfg.tolerance = kClassicalTol * 1e-2;
    exceptional_cfg.tolerance = kExceptionalTol * 1e-2;

    auto compare = [](CheckRecord& r, const QuadValue& v, const Rational& exact, double scale, double tol) {
        double e = exact.to_double();
        double err = std::hypot(v.re - e, v.im) / scale;
        r.witness = json{{"re", v.re_str},
                         {"im", v.im_str},
                         {"exact", exact.str()},
                         {"rel_error", num(err)},
                         {"error_estimate", num(v.error_estimate)},
                         {"points", v.points},
                         {"tolerance", num(tol)}};
        if (!(err <= tol)) r.status = "fail";
    };

    if (!p.positive()) {
        tasks.push_back([p] {
            CheckRecord r;
            r.check_id = "quadrature/all";
            r.inputs = json{{"alpha", p.alpha.str()}, {"beta", p.beta.str()}};
            r.status = "skipped";
            r.note = "weight not integrable on the circle for these parameters";
            return std::vector<CheckRecord>{r};
        });
        return tasks;
    }

    const int cn = std::min(o.max_n, 5);
    tasks.push_back([p, cn, compare, classical_cfg] {
        std::vector<CheckRecord> out;
        std::vector<std::vector<QuadValue>> table;
        try {
            table = classical_quad_table(cn, p, classical_cfg);
        } catch (const NonConvergence& e) {
            CheckRecord r;
            r.check_id = "quadrature/classical";
            r.inputs = json{{"max_n", cn}};
            r.status = "fail";
            r.note = e.what();
            return std::vector<CheckRecord>{r};
        }
        for (int n = 0; n <= cn; ++n) {
            for (int m = 0; m <= cn; ++m) {
                CheckRecord r;
                r.check_id = "quadrature/classical/n=" + std::to_string(n) + "/m=" + std::to_string(m);
                r.inputs = json{{"n", n}, {"m", m}};
                Rational exact = n == m ? norm_ratio(n, p) : Rational(0);
                double scale = std::sqrt(std::abs(norm_ratio(n, p).to_double() * norm_ratio(m, p).to_double()));
                compare(r, table[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)], exact, scale,
                        kClassicalTol);
                out.push_back(std::move(r));
            }
        }
        return out;
    });

    const int xn = std::min(o.max_n, 4);
    for (int j0 : o.j0s) {
        tasks.push_back([p, j0, xn, compare, exceptional_cfg] {
            const int l0 = 1;
            std::vector<int> ns;
            for (int n = 0; n <= xn; ++n)
                if (XIndex{j0, l0, n}.admissible()) ns.push_back(n);
            std::string base = "quadrature/exceptional/j0=" + std::to_string(j0) + "/l0=1";
            auto skip = [&](const std::string& why) {
                CheckRecord r;
                r.check_id = base;
                r.inputs = json{{"j0", j0}, {"l0", l0}};
                r.status = "skipped";
                r.note = why;
                return std::vector<CheckRecord>{r};
            };
            std::vector<std::vector<QuadValue>> table;
            try {
                table = exceptional_quad_table(j0, l0, ns, p, exceptional_cfg);
            } catch (const DenominatorNearContour& e) {
                return skip(e.what());
            } catch (const ParamPole& e) {
                return skip(e.what());
            } catch (const std::invalid_argument& e) {
                return skip(e.what());
            } catch (const NonConvergence& e) {
                auto r = skip(e.what());
                r[0].status = "fail";
                return r;
            }
            std::vector<CheckRecord> out;
            for (std::size_t i = 0; i < ns.size(); ++i) {
                for (std::size_t k = 0; k < ns.size(); ++k) {
                    int n = ns[i], m = ns[k];
                    CheckRecord r;
                    r.check_id = base + "/n=" + std::to_string(n) + "/m=" + std::to_string(m);
                    r.inputs = json{{"j0", j0}, {"l0", l0}, {"n", n}, {"m", m}};
                    Rational hn = x_norm_ratio(XIndex{j0, l0, n}, p);
                    Rational hm = x_norm_ratio(XIndex{j0, l0, m}, p);
                    Rational exact = n == m ? hn : Rational(0);
                    double scale = std::sqrt(std::abs(hn.to_double() * hm.to_double()));
                    compare(r, table[i][k], exact, scale, kExceptionalTol);
                    out.push_back(std::move(r));
                }
            }
            return out;
        });
    }
    return tasks;
}

}  // namespace xlbp::cli
