// Command line front end: exact number-family tables, verification suites
// with machine-readable verdicts, and combinatorial enumeration streams.
//
// Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage
// error. All output is deterministic: identical invocations produce
// byte-identical output.

#include <CLI11.hpp>

#include <future>
#include <iostream>

#include "qjs/verify.hpp"

using namespace qjs;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json table_row(int n, int k, const json& value) {
    return json{{"n", n}, {"k", k}, {"value", value}};
}

template <class R>
void emit_table(const std::string& tag, int nmax, const std::string& format,
                const std::function<R(int, int)>& entry) {
    if (format == "json") {
        json rows = json::array();
        for (int n = 0; n <= nmax; ++n)
            for (int k = 0; k <= n; ++k) rows.push_back(table_row(n, k, to_json(entry(n, k))));
        std::cout << json{{"family", tag}, {"rows", rows}}.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,k,value\n";
        for (int n = 0; n <= nmax; ++n)
            for (int k = 0; k <= n; ++k)
                std::cout << n << "," << k << ",\"" << render(entry(n, k)) << "\"\n";
    } else if (format == "latex") {
        std::cout << "\\begin{tabular}{rrl}\n$n$ & $k$ & value \\\\\\hline\n";
        for (int n = 0; n <= nmax; ++n)
            for (int k = 0; k <= n; ++k)
                std::cout << n << " & " << k << " & $" << render_latex(entry(n, k))
                          << "$ \\\\\n";
        std::cout << "\\end{tabular}\n";
    } else {
        throw UsageError("unknown format '" + format + "' (json|csv|latex)");
    }
}

void cmd_table(const std::string& family, int nmax, const std::string& format) {
    auto capped = [&](int cap) {
        if (nmax < 0 || nmax > cap)
            throw UsageError("n-max for " + family + " must be in 0.." + std::to_string(cap));
    };
    if (family == "qstirling-first" || family == "qstirling-second") {
        capped(kUnivariateCap);
        Kind kind = family == "qstirling-first" ? Kind::First : Kind::Second;
        emit_table<LQ>(family, nmax, format,
                       [kind](int n, int k) { return qstirling(kind, n, k); });
    } else if (family == "qjs-first" || family == "qjs-second") {
        capped(kBivariateCap);
        Kind kind = family == "qjs-first" ? Kind::First : Kind::Second;
        emit_table<ZQ>(family, nmax, format,
                       [kind](int n, int k) { return q_jacobi_stirling(kind, n, k); });
    } else if (family == "central-U") {
        capped(kUnivariateCap);
        emit_table<LQ>(family, nmax, format,
                       [](int n, int k) { return central_factorial_U(n, k); });
    } else if (family == "central-V") {
        capped(kUnivariateCap);
        emit_table<LQ>(family, nmax, format,
                       [](int n, int k) { return central_factorial_V(n, k); });
    } else if (family == "sym-first" || family == "sym-second") {
        capped(kBivariateCap);
        bool first = family == "sym-first";
        emit_table<SZW>(family, nmax, format, [first](int n, int k) {
            return first ? sym_stirling_first(n, k) : sym_stirling_second(n, k);
        });
    } else if (family == "wilson-first" || family == "wilson-second") {
        capped(kBivariateCap);
        bool first = family == "wilson-first";
        emit_table<Laurent<Rational>>(family, nmax, format, [first](int n, int k) {
            return first ? wilson_first(n, k) : wilson_second(n, k);
        });
    } else if (family == "aw-first" || family == "aw-second" || family == "aw-T") {
        capped(6);
        AwKind kind = family == "aw-first"
                          ? AwKind::First
                          : (family == "aw-second" ? AwKind::Second : AwKind::T);
        emit_table<AQ>(family, nmax, format,
                       [kind](int n, int k) { return askey_wilson(kind, n, k); });
    } else {
        throw UsageError(
            "unknown table family '" + family +
            "' (qstirling-first|qstirling-second|qjs-first|qjs-second|central-U|central-V|"
            "sym-first|sym-second|wilson-first|wilson-second|aw-first|aw-second|aw-T)");
    }
}

int cmd_verify(const std::string& suite, int nmax, int kmax, int deg,
               std::vector<std::string> fams, uint64_t seed, int jobs) {
    if (fams.empty()) fams = default_family_specs();
    std::vector<std::function<VerdictReport()>> units;
    if (suite == "stirling" || suite == "all")
        units.push_back([nmax] { return suite_stirling(std::min(nmax, kBivariateCap)); });
    if (suite == "combinatorics" || suite == "all")
        units.push_back([nmax] { return suite_combinatorics(std::min(nmax, 6)); });
    if (suite == "operators" || suite == "all")
        for (const auto& f : fams)
            units.push_back(
                [f, kmax, deg, seed] { return suite_operators(parse_family(f), kmax, deg, seed); });
    if (suite == "functionals" || suite == "all")
        for (const auto& f : fams)
            units.push_back([f] { return suite_functionals(parse_family(f)); });
    if (suite == "all")
        units.push_back([seed] { return suite_ring_laws(seed, 500); });
    if (units.empty())
        throw UsageError("unknown suite '" + suite +
                         "' (stirling|combinatorics|operators|functionals|all)");

    std::vector<VerdictReport> reports(units.size());
    if (jobs > 1) {
        std::vector<std::future<VerdictReport>> futs;
        for (auto& u : units) futs.push_back(std::async(std::launch::async, u));
        for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < units.size(); ++i) reports[i] = units[i]();
    }
    bool pass = true;
    json out = json::array();
    for (const auto& r : reports) {
        pass = pass && r.all_pass();
        out.push_back(r.to_json());
    }
    std::cout << json{{"reports", out}, {"pass", pass}}.dump(2) << "\n";
    return pass ? 0 : 1;
}

void cmd_enumerate(const std::string& object, int n, int k, int i_filter) {
    using namespace combinat;
    auto summary_by_i = [](std::map<int, LQ>& polys) {
        std::string s;
        for (auto& [i, p] : polys) {
            if (!s.empty()) s += " | ";
            s += render(p);
        }
        return s;
    };
    if (object == "js-partitions") {
        if (n < 0 || n > 7) throw UsageError("js-partitions requires n <= 7");
        std::map<int, LQ> polys;
        for (int i = 0; i <= n - k; ++i) {
            if (i_filter >= 0 && i != i_filter) continue;
            for (const auto& pi : enumerate_js_partitions(n, k, i)) {
                auto [i1, i2] = js_inversions(pi);
                std::cout << json{{"object", pi.str()},
                                  {"stats",
                                   {{"i", i}, {"inv1", i1}, {"inv2", i2}, {"inv", i2 - i1}}}}
                                 .dump()
                          << "\n";
                polys.emplace(i, LQ("q")).first->second.add_term(i2 - i1, 1);
            }
        }
        std::cout << json{{"summary", summary_by_i(polys)}}.dump() << "\n";
    } else if (object == "perm-pairs") {
        if (n < 0 || n > 5) throw UsageError("perm-pairs requires n <= 5");
        std::map<int, LQ> polys;
        for (int i = 0; i <= n - k; ++i) {
            if (i_filter >= 0 && i != i_filter) continue;
            for (const auto& pr : enumerate_perm_pairs(n, k, i)) {
                std::cout << json{{"object", pr.str()},
                                  {"stats", {{"i", i}, {"sor", pr.sor}}}}
                                 .dump()
                          << "\n";
                polys.emplace(i, LQ("q")).first->second.add_term(pr.sor, 1);
            }
        }
        std::cout << json{{"summary", summary_by_i(polys)}}.dump() << "\n";
    } else if (object == "double-signed") {
        if (n < 0 || n > 6) throw UsageError("double-signed requires n <= 6");
        SZW acc("w");
        for (const auto& pi : enumerate_double_signed(n, k)) {
            auto [s, t] = double_signed_weight(pi);
            std::cout << json{{"object", pi.str()}, {"stats", {{"s", s}, {"t", t}}}}.dump()
                      << "\n";
            Laurent<Rational> zs("z");
            zs.set(s, 1);
            acc.add_term(t, zs);
        }
        std::cout << json{{"summary", render(acc)}}.dump() << "\n";
    } else if (object == "pairs-zero") {
        if (n < 0 || n > 5) throw UsageError("pairs-zero requires n <= 5");
        SZW acc("w");
        for (const auto& pr : enumerate_pairs_zero(n, k)) {
            int rs = rec_count(zero_word(pr.sigma));
            int rt = rec_count(zero_word(pr.tau));
            std::cout << json{{"object", pr.str()},
                              {"stats", {{"rec0_sigma", rs}, {"rec0_tau", rt}}}}
                             .dump()
                      << "\n";
            Laurent<Rational> zs("z");
            zs.set(rs, 1);
            acc.add_term(rt, zs);
        }
        std::cout << json{{"summary", render(acc)}}.dump() << "\n";
    } else {
        throw UsageError("unknown object '" + object +
                         "' (js-partitions|perm-pairs|double-signed|pairs-zero)");
    }
}

void cmd_family(const std::string& spec, int nmax, const std::string& format) {
    auto fam = parse_family(spec);
    if (nmax < 0 || nmax > fam->n_cap)
        throw UsageError("family table bound must be in 0.." + std::to_string(fam->n_cap));
    auto xp_json = [](const XPolynomial& p) {
        json c = json::array();
        for (int i = 0; i <= p.degree(); ++i) c.push_back(to_json(p.coeff(i)));
        return c;
    };
    json params = json::object();
    for (const auto& [k, v] : fam->params) params[k] = to_json(v);
    json rows = json::array();
    for (int n = 0; n <= nmax; ++n) {
        json r{{"n", n},
               {"beta", to_json(fam->beta(n))},
               {"chi", to_json(fam->chi(n))},
               {"P_n", render(fam->pn(n))}};
        if (n >= 1) r["gamma"] = to_json(fam->gamma_n(n));
        rows.push_back(r);
    }
    json moments = json::array();
    for (const auto& m : fam->moments(nmax)) moments.push_back(to_json(m));
    json out{{"name", fam->name},
             {"substitution_exponent", fam->ctx.D},
             {"params", params},
             {"Phi", xp_json(fam->Phi)},
             {"Psi", xp_json(fam->Psi)},
             {"z", to_json(fam->z_value())},
             {"moments", moments},
             {"rows", rows}};
    if (format == "latex") {
        std::cout << "\\begin{tabular}{rll}\n$n$ & $\\beta_n$ & $\\chi_n$ \\\\\\hline\n";
        for (int n = 0; n <= nmax; ++n)
            std::cout << n << " & $" << render_latex(fam->beta(n)) << "$ & $"
                      << render_latex(fam->chi(n)) << "$ \\\\\n";
        std::cout << "\\end{tabular}\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-classical polynomial operator identities and q-Stirling-type "
                 "number families"};
    app.require_subcommand(1);

    std::string table_family, format = "json";
    int nmax = 6, kmax = 3, deg = 6, jobs = 1;
    uint64_t seed = 20240801;

    auto* table = app.add_subcommand("table", "print a number-family triangle");
    table->add_option("family", table_family, "family tag, e.g. qjs-second")->required();
    table->add_option("n-max", nmax, "largest row (positional)");
    table->add_option("fmt", format, "output format (positional)");
    table->add_option("--n", nmax, "largest row");
    table->add_option("--format", format, "json|csv|latex");

    std::string suite;
    std::vector<std::string> fams;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "stirling|combinatorics|operators|functionals|all")
        ->required();
    verify->add_option("--n", nmax, "triangle bound");
    verify->add_option("--k", kmax, "operator order bound");
    verify->add_option("--deg", deg, "monomial degree bound for operator identities");
    verify->add_option("--family", fams, "family spec name:param=value,... (repeatable)");
    verify->add_option("--seed", seed, "seed for randomized ring-law checks");
    verify->add_option("--jobs", jobs, "parallel suite execution");
    verify->add_option("--format", format, "json");

    std::string object;
    int en = 0, ek = 0, ei = -1;
    auto* enumerate = app.add_subcommand("enumerate", "stream combinatorial objects");
    enumerate->add_option("object", object, "js-partitions|perm-pairs|double-signed|pairs-zero")
        ->required();
    enumerate->add_option("n", en, "ground set size")->required();
    enumerate->add_option("k", ek, "number of nonzero blocks / cycles")->required();
    enumerate->add_option("i", ei, "zero-block statistic filter (optional)");

    std::string famspec;
    auto* family = app.add_subcommand("family", "print a q-classical family descriptor");
    family->add_option("spec", famspec, "asc:a=-1 | dqh | sw | lqj:a=q,b=q^2")->required();
    family->add_option("--n", nmax, "table rows");
    family->add_option("--format", format, "json|latex");

    try {
        app.parse(argc, argv);
        if (table->parsed()) {
            cmd_table(table_family, nmax, format);
            return 0;
        }
        if (verify->parsed()) return cmd_verify(suite, nmax, kmax, deg, fams, seed, jobs);
        if (enumerate->parsed()) {
            cmd_enumerate(object, en, ek, ei);
            return 0;
        }
        if (family->parsed()) {
            cmd_family(famspec, std::min(nmax, 10), format);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
