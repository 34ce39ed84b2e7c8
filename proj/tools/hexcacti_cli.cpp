// Command-line front end: chain construction, exact counting, expected
// values, generating functions, asymptotics, Monte Carlo and a built-in
// cross-check suite. JSON to stdout (CSV optional), diagnostics to stderr.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hexcacti/asymptotics.hpp"
#include "hexcacti/cactus_graph.hpp"
#include "hexcacti/exact_count.hpp"
#include "hexcacti/expectation.hpp"
#include "hexcacti/random_model.hpp"

using json = nlohmann::ordered_json;
using namespace hexcacti;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IndexKind parse_kind(const std::string& s) {
    if (s == "hosoya") return IndexKind::Hosoya;
    if (s == "ms") return IndexKind::MerrifieldSimmons;
    throw UsageError("--kind must be 'hosoya' or 'ms'");
}

std::string kind_name(IndexKind k) {
    return k == IndexKind::Hosoya ? "hosoya" : "ms";
}

ProbabilityTriple parse_probs(const std::string& csv) {
    try {
        return ProbabilityTriple::parse(csv);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad --probs: ") + e.what());
    }
}

Attachment parse_omp_word(const std::string& s, const char* flag) {
    if (s == "ortho" || s == "o") return Attachment::Ortho;
    if (s == "meta" || s == "m") return Attachment::Meta;
    if (s == "para" || s == "p") return Attachment::Para;
    throw UsageError(std::string(flag) + " must be ortho, meta or para");
}

std::uint64_t parse_seed(const std::string& s) {
    try {
        return std::stoull(s, nullptr, 0);  // base 0: decimal or 0x-hex
    } catch (const std::exception&) {
        throw UsageError("bad --seed: " + s);
    }
}

std::string real_str(const Real& x) {
    std::ostringstream os;
    os.precision(20);
    os << x;
    return os.str();
}

void emit_json(const std::string& command, const json& inputs,
               const json& results) {
    json rec;
    rec["command"] = command;
    rec["inputs"] = inputs;
    rec["results"] = results;
    rec["status"] = "ok";
    std::cout << rec.dump(2) << "\n";
}

// CSV: header row then one row per entry.
void emit_csv(const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
    auto put = [](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i)
            std::cout << (i ? "," : "") << cells[i];
        std::cout << "\n";
    };
    put(header);
    for (const auto& row : rows) put(row);
}

json gf_json(const RationalGF& gf) {
    json num = json::array(), den = json::array();
    for (const auto& c : gf.num) num.push_back(rat_str(c));
    for (const auto& c : gf.den) den.push_back(rat_str(c));
    return json{{"numerator", num}, {"denominator", den}};
}

struct Check {
    std::string name;
    bool pass;
};

std::vector<Check> run_verify() {
    std::vector<Check> checks;
    std::vector<ProbabilityTriple> grid;
    BigRat vals[] = {BigRat(0), BigRat(1, 4), BigRat(1, 3), BigRat(1, 2),
                     BigRat(1)};
    for (const auto& a : vals)
        for (const auto& b : vals)
            if (a + b <= 1) grid.emplace_back(a, b, 1 - a - b);
    const IndexKind kinds[] = {IndexKind::Hosoya, IndexKind::MerrifieldSimmons};

    {  // base and auxiliary initial values vs brute-force counts
        bool ok = true;
        for (IndexKind k : kinds) {
            auto st = expect_states(1, ProbabilityTriple(BigRat(1), 0, 0), k);
            BigCount hexagon = count_brute(
                build_chain(AttachmentSequence(1, {})), k);
            BigCount p5 = count_brute(
                build_aux(AttachmentSequence(0, {}), Attachment::Ortho,
                          AuxVariant::Prime),
                k);
            ok = ok && st[0].base == 1 && st[1].base == BigRat(hexagon) &&
                 st[0].prime == BigRat(p5) && st[0].tilde == BigRat(p5) &&
                 st[0].hat == BigRat(p5);
        }
        checks.push_back({"initial-values", ok});
    }
    {  // engine equivalence on all sequences with n <= 3
        bool ok = true;
        for (IndexKind k : kinds)
            for (int n = 0; n <= 3 && ok; ++n)
                for (int d = 0; d < (n >= 3 ? 3 : 1) && ok; ++d) {
                    std::vector<Attachment> ch;
                    if (n >= 3) ch.push_back(static_cast<Attachment>(d + 1));
                    AttachmentSequence seq(n, ch);
                    CactusGraph g = build_chain(seq);
                    BigCount chain = count_chain(seq, k);
                    ok = chain == count_brute(g, k) &&
                         chain == count_recursive(g, k);
                }
        checks.push_back({"engine-equivalence", ok});
    }
    {  // pure-case generating functions vs the classical ortho/meta/para ones
        bool hos_ok = true, ms_ok = true;
        const Attachment atts[] = {Attachment::Ortho, Attachment::Meta,
                                   Attachment::Para};
        for (int i = 0; i < 3; ++i) {
            ProbabilityTriple p(i == 0 ? 1 : 0, i == 1 ? 1 : 0, i == 2 ? 1 : 0);
            auto mine_h = series_expand(gf_closed_form(p, IndexKind::Hosoya), 51);
            auto ref_h =
                series_expand(special_case_gf(atts[i], IndexKind::Hosoya), 51);
            hos_ok = hos_ok && mine_h == ref_h;
            auto mine_i = series_expand(
                gf_closed_form(p, IndexKind::MerrifieldSimmons), 51);
            auto ref_i = series_expand(
                special_case_gf(atts[i], IndexKind::MerrifieldSimmons), 51);
            ms_ok = ms_ok && mine_i[0] + 1 == ref_i[0];
            for (int n = 1; n <= 50; ++n)
                ms_ok = ms_ok && mine_i[n] == ref_i[n];
        }
        checks.push_back({"classical-gf-agreement-matchings", hos_ok});
        checks.push_back({"classical-gf-agreement-independent-sets", ms_ok});
    }
    {  // printed sigma1^2 equals s^2 + 4t of the closed-form denominator
        bool ok = true;
        for (const auto& p : grid)
            for (IndexKind k : kinds) {
                RationalGF gf = gf_closed_form(p, k);
                BigRat s = denominator_s(gf), t = denominator_t(gf);
                ok = ok && sigma1_squared_printed(p, k) == s * s + 4 * t;
            }
        checks.push_back({"sigma1-identity", ok});
    }
    {  // dominant-pole approximation converges to the exact expectation
        bool ok = true;
        for (const auto& p : grid)
            for (IndexKind k : kinds) {
                AsymptoticReport rep = asymptotic_report(60, p, k);
                ok = ok && rep.rel_err_pole <= Real("1e-6");
            }
        checks.push_back({"pole-convergence", ok});
    }
    return checks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexagonal cactus chain index calculator"};
    app.require_subcommand(1);

    auto* cmd_expect = app.add_subcommand("expect", "expected index values");
    std::string e_kind, e_probs, e_format = "json";
    int e_n = 0;
    bool e_aux = false;
    cmd_expect->add_option("--kind", e_kind)->required();
    cmd_expect->add_option("--n", e_n)->required();
    cmd_expect->add_option("--probs", e_probs)->required();
    cmd_expect->add_flag("--aux", e_aux);
    cmd_expect->add_option("--format", e_format);

    auto* cmd_series =
        app.add_subcommand("series", "generating function coefficients");
    std::string s_kind, s_probs, s_dosmal, s_format = "json";
    int s_terms = 0;
    cmd_series->add_option("--kind", s_kind)->required();
    cmd_series->add_option("--terms", s_terms)->required();
    cmd_series->add_option("--probs", s_probs);
    cmd_series->add_option("--dosmal", s_dosmal);
    cmd_series->add_option("--format", s_format);

    auto* cmd_gf = app.add_subcommand("gf", "closed-form generating function");
    std::string g_kind, g_probs;
    cmd_gf->add_option("--kind", g_kind)->required();
    cmd_gf->add_option("--probs", g_probs)->required();

    auto* cmd_count = app.add_subcommand("count", "exact index of one chain");
    std::string c_kind, c_seq, c_engine = "chain";
    int c_n = -1;
    cmd_count->add_option("--kind", c_kind)->required();
    cmd_count->add_option("--seq", c_seq);
    cmd_count->add_option("--n", c_n)->required();
    cmd_count->add_option("--engine", c_engine);

    auto* cmd_graph = app.add_subcommand("graph", "DOT export");
    std::string gr_seq, gr_aux, gr_pendant, gr_format = "dot";
    int gr_n = -1;
    cmd_graph->add_option("--seq", gr_seq);
    cmd_graph->add_option("--n", gr_n)->required();
    cmd_graph->add_option("--aux", gr_aux);
    cmd_graph->add_option("--pendant", gr_pendant);
    cmd_graph->add_option("--format", gr_format);

    auto* cmd_sample = app.add_subcommand("sample", "Monte Carlo estimate");
    std::string m_kind, m_probs, m_seed = "1";
    int m_n = 0;
    long m_trials = 0;
    cmd_sample->add_option("--kind", m_kind)->required();
    cmd_sample->add_option("--n", m_n)->required();
    cmd_sample->add_option("--probs", m_probs)->required();
    cmd_sample->add_option("--trials", m_trials)->required();
    cmd_sample->add_option("--seed", m_seed);

    auto* cmd_asym = app.add_subcommand("asymptotic", "asymptotic comparison");
    std::string a_kind, a_probs;
    int a_n = 0;
    cmd_asym->add_option("--kind", a_kind)->required();
    cmd_asym->add_option("--probs", a_probs)->required();
    cmd_asym->add_option("--n", a_n)->required();

    app.add_subcommand("verify", "run the cross-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_expect->parsed()) {
            IndexKind kind = parse_kind(e_kind);
            ProbabilityTriple p = parse_probs(e_probs);
            if (e_n < 0) throw UsageError("--n must be >= 0");
            auto states = expect_states(e_n, p, kind);
            json inputs{{"kind", e_kind}, {"n", e_n}, {"probs", p.str()}};
            if (e_format == "csv") {
                std::vector<std::string> header{"n", "base"};
                if (e_aux) {
                    header.insert(header.end(), {"prime", "tilde", "hat"});
                }
                std::vector<std::vector<std::string>> rows;
                for (const auto& st : states) {
                    std::vector<std::string> row{std::to_string(st.n),
                                                 rat_str(st.base)};
                    if (e_aux) {
                        row.push_back(rat_str(st.prime));
                        row.push_back(rat_str(st.tilde));
                        row.push_back(rat_str(st.hat));
                    }
                    rows.push_back(std::move(row));
                }
                emit_csv(header, rows);
            } else {
                json base = json::array();
                for (const auto& st : states) base.push_back(rat_str(st.base));
                json results{{"base", base}};
                if (e_aux) {
                    json pr = json::array(), ti = json::array(),
                         ha = json::array();
                    for (const auto& st : states) {
                        pr.push_back(rat_str(st.prime));
                        ti.push_back(rat_str(st.tilde));
                        ha.push_back(rat_str(st.hat));
                    }
                    results["prime"] = pr;
                    results["tilde"] = ti;
                    results["hat"] = ha;
                }
                emit_json("expect", inputs, results);
            }
        } else if (cmd_series->parsed()) {
            IndexKind kind = parse_kind(s_kind);
            if (s_terms < 1) throw UsageError("--terms must be >= 1");
            if (s_probs.empty() == s_dosmal.empty())
                throw UsageError("give exactly one of --probs or --dosmal");
            RationalGF gf =
                s_dosmal.empty()
                    ? gf_closed_form(parse_probs(s_probs), kind)
                    : special_case_gf(parse_omp_word(s_dosmal, "--dosmal"),
                                      kind);
            auto coeffs = series_expand(gf, s_terms);
            json inputs{{"kind", s_kind}, {"terms", s_terms}};
            if (!s_probs.empty()) inputs["probs"] = s_probs;
            if (!s_dosmal.empty()) inputs["dosmal"] = s_dosmal;
            if (s_format == "csv") {
                std::vector<std::vector<std::string>> rows;
                for (size_t i = 0; i < coeffs.size(); ++i)
                    rows.push_back({std::to_string(i), rat_str(coeffs[i])});
                emit_csv({"n", "coefficient"}, rows);
            } else {
                json arr = json::array();
                for (const auto& c : coeffs) arr.push_back(rat_str(c));
                emit_json("series", inputs, json{{"coefficients", arr}});
            }
        } else if (cmd_gf->parsed()) {
            IndexKind kind = parse_kind(g_kind);
            ProbabilityTriple p = parse_probs(g_probs);
            json inputs{{"kind", g_kind}, {"probs", p.str()}};
            emit_json("gf", inputs, gf_json(gf_closed_form(p, kind)));
        } else if (cmd_count->parsed()) {
            IndexKind kind = parse_kind(c_kind);
            if (c_n < 0) throw UsageError("--n must be >= 0");
            AttachmentSequence seq = [&] {
                try {
                    return AttachmentSequence::from_string(c_n, c_seq);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            BigCount value;
            if (c_engine == "chain") {
                value = count_chain(seq, kind);
            } else if (c_engine == "brute") {
                value = count_brute(build_chain(seq), kind);
            } else if (c_engine == "recursive") {
                value = count_recursive(build_chain(seq), kind);
            } else {
                throw UsageError("--engine must be chain, brute or recursive");
            }
            json inputs{{"kind", c_kind},
                        {"seq", seq.str()},
                        {"n", c_n},
                        {"engine", c_engine}};
            emit_json("count", inputs, json{{"value", value.str()}});
        } else if (cmd_graph->parsed()) {
            if (gr_n < 0) throw UsageError("--n must be >= 0");
            if (gr_format != "dot") throw UsageError("--format must be dot");
            AttachmentSequence seq = [&] {
                try {
                    return AttachmentSequence::from_string(gr_n, gr_seq);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            CactusGraph g;
            if (gr_aux.empty()) {
                g = build_chain(seq);
            } else {
                AuxVariant variant;
                if (gr_aux == "prime") variant = AuxVariant::Prime;
                else if (gr_aux == "tilde") variant = AuxVariant::Tilde;
                else if (gr_aux == "hat") variant = AuxVariant::Hat;
                else throw UsageError("--aux must be prime, tilde or hat");
                if (gr_pendant.empty() && gr_n > 0)
                    throw UsageError("--aux requires --pendant");
                Attachment pendant =
                    gr_pendant.empty()
                        ? Attachment::Ortho
                        : parse_omp_word(gr_pendant, "--pendant");
                g = build_aux(seq, pendant, variant);
            }
            std::cout << to_dot(g);
        } else if (cmd_sample->parsed()) {
            IndexKind kind = parse_kind(m_kind);
            ProbabilityTriple p = parse_probs(m_probs);
            if (m_n < 0) throw UsageError("--n must be >= 0");
            if (m_trials < 1) throw UsageError("--trials must be >= 1");
            McEstimate est =
                monte_carlo(m_n, p, m_trials, parse_seed(m_seed), kind);
            json inputs{{"kind", m_kind},
                        {"n", m_n},
                        {"probs", p.str()},
                        {"trials", m_trials},
                        {"seed", m_seed}};
            json results{{"mean", real_str(est.mean)},
                         {"std_dev", real_str(est.std_dev)},
                         {"std_err", real_str(est.std_err)},
                         {"trials", est.trials}};
            emit_json("sample", inputs, results);
        } else if (cmd_asym->parsed()) {
            IndexKind kind = parse_kind(a_kind);
            ProbabilityTriple p = parse_probs(a_probs);
            if (a_n < 2) throw UsageError("--n must be >= 2");
            AsymptoticReport rep = asymptotic_report(a_n, p, kind);
            json inputs{{"kind", a_kind}, {"probs", p.str()}, {"n", a_n}};
            json results{{"n", rep.n},
                         {"kind", kind_name(rep.kind)},
                         {"probs", p.str()},
                         {"exact", real_str(rep.exact)},
                         {"pole_approx", real_str(rep.pole_approx)},
                         {"printed", real_str(rep.printed)},
                         {"rel_err_pole", real_str(rep.rel_err_pole)},
                         {"rel_err_printed", real_str(rep.rel_err_printed)}};
            emit_json("asymptotic", inputs, results);
        } else {  // verify
            auto checks = run_verify();
            bool all = true;
            json arr = json::array();
            for (const auto& chk : checks) {
                arr.push_back(json{{"name", chk.name},
                                   {"pass", chk.pass}});
                all = all && chk.pass;
                std::cerr << (chk.pass ? "PASS " : "FAIL ") << chk.name
                          << "\n";
            }
            emit_json("verify", json::object(),
                      json{{"checks", arr}, {"all_pass", all}});
            return all ? 0 : 2;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        json rec{{"command", app.get_subcommands().empty()
                                 ? ""
                                 : app.get_subcommands()[0]->get_name()},
                 {"status", "error"},
                 {"error", e.what()}};
        std::cout << rec.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        json rec{{"command", app.get_subcommands().empty()
                                 ? ""
                                 : app.get_subcommands()[0]->get_name()},
                 {"status", "error"},
                 {"error", e.what()}};
        std::cout << rec.dump(2) << "\n";
        return 2;
    }
    return 0;
}
