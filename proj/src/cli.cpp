#include "trichrome/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "trichrome/coloring.hpp"
#include "trichrome/constructions.hpp"
#include "trichrome/enumeration.hpp"
#include "trichrome/graph6.hpp"
#include "trichrome/parallel.hpp"
#include "trichrome/verify.hpp"

namespace trichrome {

namespace {

using nlohmann::json;

json report_json(const InvariantReport& rep) {
    json witnesses;
    witnesses["chi"] = rep.chi_witness.colors;
    witnesses["gamma"] = rep.gamma_witness.colors;
    witnesses["psi"] = rep.psi_witness.colors;
    json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["omega"] = rep.omega;
    j["chi"] = rep.chi;
    j["gamma"] = rep.gamma;
    j["psi"] = rep.psi;
    j["witnesses"] = witnesses;
    return j;
}

void emit_graph(const Graph& g, bool with_labels, std::ostream& out) {
    if (!with_labels) {
        out << write_graph6(g) << "\n";
        return;
    }
    json arr = json::array();
    for (int v = 0; v < g.n; ++v) arr.push_back(g.label(v));
    out << json{{"graph6", write_graph6(g)}, {"labels", arr}}.dump() << "\n";
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

struct AnalyzeArgs {
    std::vector<std::string> graphs;
    std::string input;
    bool pretty = false;
    int threads = 0;
};

int do_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> lines = a.graphs;
    if (lines.empty() && !a.input.empty()) {
        std::ifstream file(a.input);
        if (!file) {
            err << "cannot open " << a.input << "\n";
            return 2;
        }
        lines = read_lines(file);
    } else if (lines.empty()) {
        lines = read_lines(in);
    }
    struct Row {
        std::string text;
        bool failed = false;
    };
    std::vector<Row> rows(lines.size());
    parallel_chunks(lines.size(), effective_threads(a.threads),
                    [&](std::size_t lo, std::size_t hi) {
                        for (std::size_t i = lo; i < hi; ++i) {
                            try {
                                const InvariantReport rep = analyze(parse_graph6(lines[i]));
                                if (a.pretty) {
                                    std::ostringstream row;
                                    row << std::setw(5) << i + 1 << std::setw(5) << rep.n
                                        << std::setw(5) << rep.m << std::setw(7) << rep.omega
                                        << std::setw(5) << rep.chi << std::setw(7) << rep.gamma
                                        << std::setw(5) << rep.psi;
                                    rows[i].text = row.str();
                                } else {
                                    rows[i].text = report_json(rep).dump();
                                }
                            } catch (const std::exception& e) {
                                rows[i].failed = true;
                                if (a.pretty) {
                                    std::ostringstream row;
                                    row << std::setw(5) << i + 1 << "  error: " << e.what();
                                    rows[i].text = row.str();
                                } else {
                                    rows[i].text =
                                        json{{"error", e.what()}, {"input", lines[i]}}.dump();
                                }
                            }
                        }
                    });
    if (a.pretty && !rows.empty())
        out << std::setw(5) << "#" << std::setw(5) << "n" << std::setw(5) << "m" << std::setw(7)
            << "omega" << std::setw(5) << "chi" << std::setw(7) << "gamma" << std::setw(5)
            << "psi" << "\n";
    bool failed = false;
    for (const Row& row : rows) {
        out << row.text << "\n";
        failed = failed || row.failed;
    }
    return failed ? 2 : 0;
}

Graph build_family(const std::string& family, int k, int g, int h, int t, int ell, int f) {
    const auto need = [](int value, const char* flag) {
        if (value < 0) throw std::invalid_argument(std::string("missing ") + flag);
        return value;
    };
    if (family == "bk") return basic_bipartite(need(k, "--k"));
    if (family == "gstar") return g_star(need(g, "--g"), need(h, "--h"));
    if (family == "reduced") return reduced_graph(need(t, "--t"));
    if (family == "extended") return extended_graph(need(ell, "--ell"));
    if (family == "l1") return l_graph(need(h, "--h"), 1);
    if (family == "l2") return l_graph(need(h, "--h"), 2);
    Graph clique = complete_graph(need(f, "--f"));
    for (int v = 0; v < clique.n; ++v) clique.set_label(v, "c" + std::to_string(v + 1));
    return clique;
}

int do_min_order(int f, int g, int h, std::ostream& out, std::ostream& err) {
    try {
        const Triple t{f, g, h};
        json j;
        j["f"] = f;
        j["g"] = g;
        j["h"] = h;
        const bool ok = is_realizable(t);
        j["realizable"] = ok;
        j["min_order"] = ok ? json(min_order(t)) : json(nullptr);
        out << j.dump() << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return 1;
    }
}

int do_realize(int f, int g, int h, bool labels, std::ostream& out, std::ostream& err) {
    try {
        const Triple t{f, g, h};
        if (!is_realizable(t)) {
            out << json{{"error", "triple is not realizable"}}.dump() << "\n";
            return 2;
        }
        emit_graph(realize(t), labels, out);
        return 0;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return 1;
    }
}

int do_enumerate(int n, bool count_only, int hopt, int threads, bool extended, std::ostream& out,
                 std::ostream& err) {
    try {
        if (hopt >= 0) {
            if (hopt < 4) {
                err << "usage: the extremal catalogue starts at h = 4\n";
                return 1;
            }
            if (hopt > 6) {
                err << "error: the extremal catalogue stops at h = 6\n";
                return 2;
            }
            if (hopt == 6 && !extended) {
                err << "usage: the 10-vertex scan needs --extended\n";
                return 1;
            }
            const HOptimalScan scan = h_optimal_graphs(hopt, threads);
            for (const Graph& g : scan.graphs) {
                json j = report_json(analyze(g));
                j["graph6"] = write_graph6(g);
                out << j.dump() << "\n";
            }
            return 0;
        }
        if (n < 1) {
            err << "usage: pass --n with a positive vertex count\n";
            return 1;
        }
        if (n > kEnumerationBudget) {
            err << "error: connected enumeration is limited to 10 vertices\n";
            return 2;
        }
        if (n >= 9 && !extended) {
            err << "usage: orders 9 and 10 need --extended\n";
            return 1;
        }
        if (count_only) {
            const auto start = std::chrono::steady_clock::now();
            const long long classes =
                for_each_connected_graph(n, threads, [](const Graph&, const CanonicalForm&) {});
            const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - start)
                                     .count();
            out << json{{"n", n}, {"class_count", classes}, {"elapsed_ms", elapsed}}.dump()
                << "\n";
            return 0;
        }
        for_each_connected_graph(
            n, threads, [&out](const Graph& g, const CanonicalForm&) {
                out << write_graph6(g) << "\n";
            });
        return 0;
    } catch (const capacity_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

int do_verify(const std::string& scope, int f, int g, int h, bool extended, int threads,
              std::ostream& out, std::ostream& err) {
    SuiteReport report;
    try {
        if (scope == "paper-suite") {
            report = full_suite(extended, threads);
        } else if (scope == "minorder") {
            if (f < 0 || g < 0 || h < 0) {
                err << "usage: minorder needs --f, --g and --h\n";
                return 1;
            }
            report.verdicts.push_back(minorder_verdict({f, g, h}, threads));
        } else {
            if (h < 0) {
                err << "usage: hoptimal needs --h\n";
                return 1;
            }
            report.verdicts.push_back(hoptimal_verdict(h, extended, threads));
        }
    } catch (const std::domain_error& e) {
        out << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return 1;
    }
    for (const Verdict& v : report.verdicts) {
        json j;
        j["claim"] = v.claim;
        j["expected"] = v.expected;
        j["computed"] = v.computed;
        if (v.skipped.empty()) j["pass"] = v.pass;
        else j["skipped"] = v.skipped;
        out << j.dump() << "\n";
    }
    return report.exit_code();
}

int do_certify(const std::string& g6, std::string cert_text, const std::string& cert_path,
               std::ostream& out, std::ostream& err) {
    if (cert_text.empty() && !cert_path.empty()) {
        std::ifstream file(cert_path);
        if (!file) {
            err << "cannot open " << cert_path << "\n";
            return 2;
        }
        std::ostringstream buffer;
        buffer << file.rdbuf();
        cert_text = buffer.str();
    }
    if (cert_text.empty()) {
        err << "usage: provide --cert or --cert-file\n";
        return 1;
    }
    GrundyCertificate cert;
    try {
        const json j = json::parse(cert_text);
        const auto read_set = [](const json& arr) {
            VertexSet s;
            for (const auto& item : arr) {
                const long long v = item.get<long long>();
                if (v < 0 || v >= kMaxVertices)
                    throw std::invalid_argument("certificate vertex out of range");
                s.add(static_cast<int>(v));
            }
            return s;
        };
        cert.h_set = read_set(j.at("h_set"));
        cert.s_set = read_set(j.at("s_set"));
        cert.k = j.at("k").get<int>();
    } catch (const std::invalid_argument& e) {
        out << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "malformed certificate JSON: " << e.what() << "\n";
        return 1;
    }
    try {
        const CertificateCheck result = check_certificate(parse_graph6(g6), cert);
        json j;
        j["ok"] = result.ok;
        j["reason"] = result.ok ? json(nullptr) : json(result.reason);
        j["implied_lower_bound"] = result.ok ? json(result.implied_lower_bound) : json(nullptr);
        out << j.dump() << "\n";
        return 0;
    } catch (const std::exception& e) {
        out << json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact coloring invariants, extremal constructions, exhaustive verification"};
    app.require_subcommand(1);
    // `--h` is taken by the achromatic-number flag, so help has no short form.
    app.set_help_flag("--help", "print help and exit");

    const auto subcommand = [&app](const std::string& name, const std::string& text) {
        CLI::App* sub = app.add_subcommand(name, text);
        sub->set_help_flag("--help", "print help and exit");
        return sub;
    };

    AnalyzeArgs aargs;
    auto* analyze_cmd = subcommand("analyze", "invariants of graph6 inputs");
    analyze_cmd->add_option("graphs", aargs.graphs, "graph6 strings (default: stdin lines)");
    analyze_cmd->add_option("--input", aargs.input, "file with one graph6 string per line");
    analyze_cmd->add_flag("--pretty", aargs.pretty, "aligned table instead of JSON lines");
    analyze_cmd->add_option("--threads", aargs.threads, "worker threads, 0 = hardware");

    std::string family;
    int c_k = -1, c_g = -1, c_h = -1, c_t = -1, c_ell = -1, c_f = -1;
    bool c_labels = false;
    auto* construct_cmd = subcommand("construct", "build one family member");
    construct_cmd->add_option("family", family, "bk|gstar|reduced|extended|l1|l2|kf")
        ->required()
        ->check(CLI::IsMember({"bk", "gstar", "reduced", "extended", "l1", "l2", "kf"}));
    construct_cmd->add_option("--k", c_k, "side size for bk");
    construct_cmd->add_option("--g", c_g, "target Grundy number for gstar");
    construct_cmd->add_option("--h", c_h, "target achromatic number");
    construct_cmd->add_option("--t", c_t, "side size for reduced");
    construct_cmd->add_option("--ell", c_ell, "pair count for extended");
    construct_cmd->add_option("--f", c_f, "order for kf");
    construct_cmd->add_flag("--labels", c_labels, "emit JSON with the construction labels");

    int mo_f = -1, mo_g = -1, mo_h = -1;
    auto* minorder_cmd = subcommand("min-order", "minimum order for a triple");
    minorder_cmd->add_option("--f", mo_f, "chromatic number")->required();
    minorder_cmd->add_option("--g", mo_g, "Grundy number")->required();
    minorder_cmd->add_option("--h", mo_h, "achromatic number")->required();

    int re_f = -1, re_g = -1, re_h = -1;
    bool re_labels = false;
    auto* realize_cmd = subcommand("realize", "graph attaining a triple at minimum order");
    realize_cmd->add_option("--f", re_f, "chromatic number")->required();
    realize_cmd->add_option("--g", re_g, "Grundy number")->required();
    realize_cmd->add_option("--h", re_h, "achromatic number")->required();
    realize_cmd->add_flag("--labels", re_labels, "emit JSON with the construction labels");

    int e_n = -1, e_hopt = -1, e_threads = 0;
    bool e_count = false, e_extended = false;
    auto* enumerate_cmd = subcommand("enumerate", "stream connected classes as graph6");
    enumerate_cmd->add_option("--n", e_n, "vertex count");
    enumerate_cmd->add_flag("--count", e_count, "print the class count only");
    enumerate_cmd->add_option("--h-optimal", e_hopt, "list the extremal catalogue for this h");
    enumerate_cmd->add_option("--threads", e_threads, "worker threads, 0 = hardware");
    enumerate_cmd->add_flag("--extended", e_extended, "unlock the long scans");

    std::string scope;
    int v_f = -1, v_g = -1, v_h = -1, v_threads = 0;
    bool v_extended = false;
    auto* verify_cmd = subcommand("verify", "re-check claims by exhaustive search");
    verify_cmd->add_option("scope", scope, "minorder|hoptimal|paper-suite")
        ->required()
        ->check(CLI::IsMember({"minorder", "hoptimal", "paper-suite"}));
    verify_cmd->add_option("--f", v_f, "chromatic number (minorder)");
    verify_cmd->add_option("--g", v_g, "Grundy number (minorder)");
    verify_cmd->add_option("--h", v_h, "achromatic number (minorder, hoptimal)");
    verify_cmd->add_option("--threads", v_threads, "worker threads, 0 = hardware");
    verify_cmd->add_flag("--extended", v_extended, "unlock the long scans");

    std::string cert_g6, cert_text, cert_path;
    auto* certify_cmd = subcommand("certify", "check a Grundy lower-bound certificate");
    certify_cmd->add_option("graph", cert_g6, "graph6 string")->required();
    certify_cmd->add_option("--cert", cert_text, "certificate JSON");
    certify_cmd->add_option("--cert-file", cert_path, "file holding certificate JSON");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("trichrome");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (*analyze_cmd) return do_analyze(aargs, in, out, err);
    if (*construct_cmd) {
        try {
            emit_graph(build_family(family, c_k, c_g, c_h, c_t, c_ell, c_f), c_labels, out);
            return 0;
        } catch (const capacity_error& e) {
            err << "error: " << e.what() << "\n";
            return 2;
        } catch (const std::invalid_argument& e) {
            err << "usage: " << e.what() << "\n";
            return 1;
        }
    }
    if (*minorder_cmd) return do_min_order(mo_f, mo_g, mo_h, out, err);
    if (*realize_cmd) return do_realize(re_f, re_g, re_h, re_labels, out, err);
    if (*enumerate_cmd) return do_enumerate(e_n, e_count, e_hopt, e_threads, e_extended, out, err);
    if (*verify_cmd) return do_verify(scope, v_f, v_g, v_h, v_extended, v_threads, out, err);
    if (*certify_cmd) return do_certify(cert_g6, cert_text, cert_path, out, err);
    return 1;
}

} // namespace trichrome
