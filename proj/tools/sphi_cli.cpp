// Command-line front end: S evaluations, phi tables, transform scans,
// zero location, and the theorem check.  CSV by default, JSON on request;
// data goes to stdout, diagnostics to stderr.

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphi/checks.hpp"
#include "sphi/fourier.hpp"
#include "sphi/phi.hpp"
#include "sphi/sfunc.hpp"
#include "sphi/theorem.hpp"

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

sphi::Route parse_route(const std::string& s) {
    if (s == "series") return sphi::Route::Series;
    if (s == "integral-a") return sphi::Route::IntegralA;
    if (s == "integral-b") return sphi::Route::IntegralB;
    if (s == "divisor") return sphi::Route::Divisor;
    if (s == "functional") return sphi::Route::FunctionalMap;
    return sphi::Route::Auto;
}

struct Emitter {
    bool as_json = false;
    json rows = json::array();
    std::string header;

    void set_header(std::string h) { header = std::move(h); }

    void row(const std::vector<std::pair<std::string, json>>& fields) {
        if (as_json) {
            json o;
            for (const auto& [k, v] : fields) {
                if (v.is_number_float())
                    o[k] = std::strtod(num(v.get<double>()).c_str(), nullptr);
                else
                    o[k] = v;
            }
            rows.push_back(o);
        } else {
            if (!header.empty()) {
                std::printf("%s\n", header.c_str());
                header.clear();
            }
            std::string line;
            for (size_t i = 0; i < fields.size(); ++i) {
                if (i) line += ',';
                const json& v = fields[i].second;
                if (v.is_number_float()) {
                    line += num(v.get<double>());
                } else if (v.is_string()) {
                    std::string s = v.get<std::string>();
                    if (s.find_first_of(",\"\n") != std::string::npos) {
                        std::string q = "\"";
                        for (char ch : s) {
                            if (ch == '"') q += '"';
                            q += ch;
                        }
                        q += '"';
                        s = q;
                    }
                    line += s;
                } else {
                    line += v.dump();
                }
            }
            std::printf("%s\n", line.c_str());
        }
    }

    void finish() {
        if (!as_json && !header.empty()) {
            std::printf("%s\n", header.c_str());
            header.clear();
        }
        if (as_json) {
            json out;
            out["rows"] = rows;
            std::printf("%s\n", out.dump(2).c_str());
        }
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-function, phi-transform, and zeta-zero verification tool"};
    app.require_subcommand(1);

    double tol = 1e-10;
    std::string format = "csv";
    app.add_option("--tol", tol, "tolerance")->check(CLI::Range(1e-13, 1e-3));
    app.add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    double a = 1.0, t_val = 0.0;
    double amin = 0.0, amax = 2.0, astep = 0.01;
    double tmin = -10.0, tmax = 10.0, tstep = 0.05;
    double kre = 0.0, kim = 0.0;
    double kmin = 0.0, kmax = 60.0, kstep = 0.05;
    double x = 0.5, y = 14.1347251417;
    std::vector<double> eps_list = {1e-2, 3e-3, 1e-3};
    std::string route_str = "auto";

    auto* c_seval = app.add_subcommand("s-eval", "evaluate S(a)");
    c_seval->add_option("--a", a, "argument")->required();
    c_seval->add_option("--route", route_str, "series|integral-a|integral-b|divisor|functional|auto");

    auto* c_stable = app.add_subcommand("s-table", "tabulate S on a grid");
    c_stable->add_option("--amin", amin);
    c_stable->add_option("--amax", amax);
    c_stable->add_option("--step", astep);

    auto* c_ptable = app.add_subcommand("phi-table", "tabulate phi and approximants");
    c_ptable->add_option("--tmin", tmin);
    c_ptable->add_option("--tmax", tmax);
    c_ptable->add_option("--step", tstep);

    auto* c_ft = app.add_subcommand("ft-eval", "phi transform at one wavenumber");
    c_ft->add_option("--kre", kre, "Re k")->required();
    c_ft->add_option("--kim", kim, "Im k");

    auto* c_scan = app.add_subcommand("ft-scan", "scaled transforms on a real-k grid");
    c_scan->add_option("--kmin", kmin);
    c_scan->add_option("--kmax", kmax);
    c_scan->add_option("--step", kstep);

    auto* c_zeros = app.add_subcommand("zeros", "scan for real transform zeros");
    c_zeros->add_option("--kmin", kmin)->required();
    c_zeros->add_option("--kmax", kmax)->required();
    c_zeros->add_option("--step", kstep)->required();

    auto* c_thm = app.add_subcommand("theorem-check", "circle integral + zero map");
    c_thm->add_option("--x", x, "Re z in (0,1)")->required();
    c_thm->add_option("--y", y, "Im z")->required();
    c_thm->add_option("--eps", eps_list, "decreasing eps sweep");

    auto* c_self = app.add_subcommand("selftest", "reduced acceptance suite");
    (void)t_val;
    (void)c_self;

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emitter out;
    out.as_json = (format == "json");

    try {
        if (c_seval->parsed()) {
            const auto r = sphi::s_eval(a, tol, parse_route(route_str));
            out.set_header("a,value,abs_err,route");
            out.row({{"a", a},
                     {"value", r.value},
                     {"abs_err", r.abs_err},
                     {"route", std::string(sphi::route_name(r.route))}});
        } else if (c_stable->parsed()) {
            if (!(amin < amax) || !(astep > 0.0))
                throw std::domain_error("s-table: need amin < amax and step > 0");
            out.set_header("a,value,abs_err,route");
            for (long i = 0;; ++i) {
                const double ai = amin + i * astep;
                if (ai > amax + 1e-12) break;
                const auto r = sphi::s_eval(ai, tol);
                out.row({{"a", ai},
                         {"value", r.value},
                         {"abs_err", r.abs_err},
                         {"route", std::string(sphi::route_name(r.route))}});
            }
        } else if (c_ptable->parsed()) {
            if (!(tmin < tmax) || !(tstep > 0.0))
                throw std::domain_error("phi-table: need tmin < tmax and step > 0");
            out.set_header("t,phi,phi0,phi1,g");
            for (long i = 0;; ++i) {
                const double t = tmin + i * tstep;
                if (t > tmax + 1e-12) break;
                out.row({{"t", t},
                         {"phi", sphi::phi(t, tol)},
                         {"phi0", sphi::phi0(t)},
                         {"phi1", sphi::phi1(t)},
                         {"g", sphi::g_classic(t)}});
            }
        } else if (c_ft->parsed()) {
            const auto v = sphi::phi_ft(sphi::StripPoint(kre, kim), tol);
            out.set_header("re_k,im_k,re_value,im_value,scaled_abs");
            out.row({{"re_k", kre},
                     {"im_k", kim},
                     {"re_value", v.real()},
                     {"im_value", v.imag()},
                     {"scaled_abs", std::abs(v) * sphi::transform_scaling(kre)}});
        } else if (c_scan->parsed()) {
            if (!(kmin < kmax) || !(kstep > 0.0))
                throw std::domain_error("ft-scan: need kmin < kmax and step > 0");
            out.set_header("k,scaled_phi_ft,scaled_phi0_ft");
            for (long i = 0;; ++i) {
                const double k = kmin + i * kstep;
                if (k > kmax + 1e-12) break;
                out.row({{"k", k},
                         {"scaled_phi_ft", sphi::scaled_ft(k, tol)},
                         {"scaled_phi0_ft", sphi::scaled_phi0_ft(k, tol)}});
            }
        } else if (c_zeros->parsed()) {
            const auto zs = sphi::find_real_zeros(kmin, kmax, kstep, 1e-6, tol);
            out.set_header("k_lo,k_hi,root,residual");
            for (const auto& z : zs)
                out.row({{"k_lo", z.k_lo},
                         {"k_hi", z.k_hi},
                         {"root", z.root},
                         {"residual", z.residual}});
        } else if (c_thm->parsed()) {
            const auto rep = sphi::theorem_demo(x, y, eps_list, tol);
            out.set_header("eps,abs_I,scaled_residual,neighbor_scale,passed");
            for (size_t i = 0; i < rep.eps_list.size(); ++i)
                out.row({{"eps", rep.eps_list[i]},
                         {"abs_I", rep.abs_I[i]},
                         {"scaled_residual", rep.transform_scaled_residual},
                         {"neighbor_scale", rep.neighbor_scale},
                         {"passed", std::string(rep.passed ? "true" : "false")}});
            out.finish();
            return rep.passed ? 0 : 1;
        } else if (c_self->parsed()) {
            sphi::CheckOptions opt;
            opt.reduced = true;
            const auto results = sphi::run_all_checks(opt);
            out.set_header("id,name,status,detail");
            bool all = true;
            for (const auto& r : results) {
                all = all && r.passed;
                out.row({{"id", static_cast<double>(r.id)},
                         {"name", r.name},
                         {"status", std::string(r.passed ? "PASS" : "FAIL")},
                         {"detail", r.detail}});
            }
            out.finish();
            return all ? 0 : 1;
        }
        out.finish();
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
