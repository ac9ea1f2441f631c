#include "qvertex/checks.hpp"
#include "qvertex/errors.hpp"
#include "qvertex/kappa.hpp"
#include "qvertex/macdonald.hpp"
#include "qvertex/series.hpp"
#include "qvertex/suite.hpp"
#include "qvertex/vertex.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace qv;

int default_jobs() {
    if (const char* env = std::getenv("QVERTEX_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    return 1;
}

// exit codes: 0 pass, 1 identity or golden mismatch, 2 usage/internal error
int emit_object(const std::string& text, const std::string& format, const std::string& name,
                const std::string& golden, const std::string& golden_mode) {
    if (!golden.empty()) {
        if (golden_mode == "record") {
            std::ofstream out(golden);
            if (!out) {
                std::cerr << "cannot write golden file " << golden << "\n";
                return 2;
            }
            out << text;
            std::cout << "recorded " << golden << "\n";
            return 0;
        }
        std::ifstream in(golden);
        if (!in) {
            std::cerr << "cannot read golden file " << golden << "\n";
            return 2;
        }
        std::string want((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (want != text) {
            std::cout << "golden mismatch for " << name << "\n--- golden\n" << want << "--- computed\n"
                      << text;
            return 1;
        }
        std::cout << "golden match for " << name << "\n";
        return 0;
    }
    if (format == "json") {
        // canonical text wrapped as a single JSON string field
        std::string escaped;
        for (char c : text) {
            switch (c) {
                case '"': escaped += "\\\""; break;
                case '\\': escaped += "\\\\"; break;
                case '\n': escaped += "\\n"; break;
                default: escaped += c;
            }
        }
        std::cout << "{\"object\": \"" << name << "\", \"text\": \"" << escaped << "\"}\n";
    } else {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    }
    return 0;
}

int report_exit(const CheckReport& r, const std::string& format, bool timing) {
    if (format == "json") std::cout << r.to_json(timing) << "\n";
    else std::cout << r.to_text(timing);
    if (r.status == CheckReport::Status::Error) return 2;
    return r.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact vertex-function and Macdonald-operator verification"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string golden, golden_mode = "compare";
    bool no_timing = false;
    app.add_option("--format", format, "output format: text|json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--golden", golden, "golden file path");
    app.add_option("--golden-mode", golden_mode, "record|compare")
        ->check(CLI::IsMember({"record", "compare"}));
    app.add_flag("--no-timing", no_timing, "omit elapsed times from reports");

    // macdonald --mu P --k N
    auto* mac_cmd = app.add_subcommand("macdonald", "print a Macdonald polynomial");
    std::string mac_mu = "1";
    int mac_k = 1;
    mac_cmd->add_option("--mu", mac_mu, "partition, e.g. 2,1")->required();
    mac_cmd->add_option("--k", mac_k, "number of variables")->required();

    // vertex X|dual|lambda|product
    auto* vx_cmd = app.add_subcommand("vertex", "print a vertex function");
    std::string vx_kind;
    int vx_k = 1, vx_n = 2, vx_zcap = 3, vx_ucap = 3;
    std::string vx_partition = "1";
    bool vx_product = false;
    vx_cmd->add_option("kind", vx_kind, "X | dual | lambda")->required();
    vx_cmd->add_option("--k", vx_k, "k");
    vx_cmd->add_option("--n", vx_n, "n");
    vx_cmd->add_option("--zcap", vx_zcap, "Kahler total-degree cap");
    vx_cmd->add_option("--ucap", vx_ucap, "u-expansion cap (dual only)");
    vx_cmd->add_option("--partition", vx_partition, "partition for the point variety");
    vx_cmd->add_flag("--product", vx_product, "use the hook phi-product form (lambda only)");

    // check <name> ...
    auto* ck_cmd = app.add_subcommand("check", "run one identity check");
    std::string ck_name;
    int ck_k = 2, ck_n = 4, ck_d = 1, ck_dmax = 2, ck_zcap = 3, ck_rcap = 4, ck_ucap = 3, ck_ycap = 6;
    std::string ck_mu, ck_lambda = "2,2", ck_dtuple;
    ck_cmd->add_option("name", ck_name,
                       "diagonal|commute|lemma-rewrite|qbinomial|selberg|verpoint|prform|reduce|"
                       "insertion|vgrcoeff|main")
        ->required();
    ck_cmd->add_option("--k", ck_k, "k");
    ck_cmd->add_option("--n", ck_n, "n");
    ck_cmd->add_option("--d", ck_d, "operator degree");
    ck_cmd->add_option("--dmax", ck_dmax, "max operator degree");
    ck_cmd->add_option("--mu", ck_mu, "partition");
    ck_cmd->add_option("--partition", ck_lambda, "partition for verpoint");
    ck_cmd->add_option("--dtuple", ck_dtuple, "comma-separated degree tuple for vgrcoeff");
    ck_cmd->add_option("--zcap", ck_zcap, "Kahler cap");
    ck_cmd->add_option("--rcap", ck_rcap, "ratio cap");
    ck_cmd->add_option("--ucap", ck_ucap, "u cap");
    ck_cmd->add_option("--ycap", ck_ycap, "y cap");

    // suite <name>
    auto* su_cmd = app.add_subcommand("suite", "run a named check suite");
    std::string su_name;
    int su_jobs = default_jobs();
    std::string su_profile = "default";
    int su_rcap = -1;
    su_cmd->add_option("name", su_name, "paper-all")->required();
    su_cmd->add_option("--jobs", su_jobs, "worker count");
    su_cmd->add_option("--profile", su_profile, "default|quick")
        ->check(CLI::IsMember({"default", "quick"}));
    su_cmd->add_option("--rcap", su_rcap, "override the duality r-cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mac_cmd->parsed()) {
            Partition mu = Partition::parse(mac_mu);
            if (mu.length() > mac_k) {
                std::cerr << "require l(mu) <= k\n";
                return 2;
            }
            std::string text = mac::macdonald_P(mu, mac_k).text() + "\n";
            return emit_object(text, format, "P_(" + mu.text() + ") in " + std::to_string(mac_k) + " vars",
                               golden, golden_mode);
        }

        if (vx_cmd->parsed()) {
            if (vx_kind == "X") {
                if (vx_k < 1 || 2 * vx_k > vx_n) {
                    std::cerr << "require 2k <= n\n";
                    return 2;
                }
                Caps caps{{Group::Kahler, vx_zcap}};
                return emit_object(vx::vertex_x_series(vx_k, vx_n, caps).text(), format, "vertex X", golden,
                                   golden_mode);
            }
            if (vx_kind == "dual") {
                if (vx_k < 1 || 2 * vx_k > vx_n) {
                    std::cerr << "require 2k <= n\n";
                    return 2;
                }
                Caps caps{{Group::Kahler, vx_zcap}, {Group::Ratio, vx_ucap}};
                return emit_object(vx::vertex_xdual(vx_k, vx_n, caps).text(), format, "vertex dual", golden,
                                   golden_mode);
            }
            if (vx_kind == "lambda") {
                Partition lambda = Partition::parse(vx_partition);
                Caps caps{{Group::Kahler, vx_zcap}};
                TruncatedSeries s = vx_product ? vx::vertex_product(lambda).expand(caps)
                                               : vx::vertex_xlambda(lambda, caps);
                return emit_object(s.text(), format, "vertex lambda", golden, golden_mode);
            }
            std::cerr << "unknown vertex kind '" << vx_kind << "'\n";
            return 2;
        }

        if (ck_cmd->parsed()) {
            auto need_kn = [&]() -> bool {
                if (ck_k < 1 || 2 * ck_k > ck_n) {
                    std::cerr << "require 2k <= n\n";
                    return false;
                }
                return true;
            };
            CheckReport r;
            if (ck_name == "diagonal") {
                r = checks::check_diagonal(Partition::parse(ck_mu.empty() ? "0" : ck_mu), ck_d, ck_k);
            } else if (ck_name == "commute") {
                r = checks::check_commute(ck_k, ck_dmax);
            } else if (ck_name == "lemma-rewrite") {
                r = checks::check_rewrite(ck_k, ck_dmax);
            } else if (ck_name == "qbinomial") {
                r = checks::check_qbinomial(ck_k, ck_ycap);
            } else if (ck_name == "selberg") {
                r = checks::check_selberg(Partition::parse(ck_mu.empty() ? "0" : ck_mu), ck_k, ck_zcap);
            } else if (ck_name == "verpoint") {
                r = checks::check_verpoint(Partition::parse(ck_lambda), ck_zcap);
            } else if (ck_name == "prform") {
                if (!need_kn()) return 2;
                r = checks::check_prform(ck_k, ck_n, ck_rcap);
            } else if (ck_name == "reduce") {
                if (!need_kn()) return 2;
                r = checks::check_reduce(ck_k, ck_n, ck_zcap, ck_ucap);
            } else if (ck_name == "insertion") {
                if (!need_kn()) return 2;
                r = checks::check_insertion(ck_k, ck_n, ck_d, ck_rcap);
            } else if (ck_name == "vgrcoeff") {
                if (!need_kn()) return 2;
                std::vector<int> dt;
                if (!ck_dtuple.empty()) {
                    size_t i = 0;
                    while (i < ck_dtuple.size()) {
                        size_t j = ck_dtuple.find(',', i);
                        if (j == std::string::npos) j = ck_dtuple.size();
                        dt.push_back(std::stoi(ck_dtuple.substr(i, j - i)));
                        i = j + 1;
                    }
                }
                while (static_cast<int>(dt.size()) < ck_k) dt.push_back(0);
                r = checks::check_vgrcoeff(ck_k, ck_n, dt);
            } else if (ck_name == "main") {
                if (!need_kn()) return 2;
                r = checks::check_main(ck_k, ck_n, ck_zcap, ck_rcap);
            } else {
                std::cerr << "unknown check '" << ck_name << "'\n";
                return 2;
            }
            return report_exit(r, format, !no_timing);
        }

        if (su_cmd->parsed()) {
            if (su_name != "paper-all") {
                std::cerr << "unknown suite '" << su_name << "'\n";
                return 2;
            }
            checks::SuiteOptions opts;
            opts.quick = su_profile == "quick";
            opts.jobs = su_jobs;
            opts.rcap_override = su_rcap;
            auto criteria = checks::run_paper_suite(opts);
            bool all = true;
            std::vector<CheckReport> flat;
            for (const auto& c : criteria) {
                bool ok = c.passed();
                all = all && ok;
                if (format != "json")
                    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": "
                              << c.description << "\n";
                for (const auto& r : c.reports) {
                    flat.push_back(r);
                    if (!r.passed() && format != "json") std::cout << r.to_text(!no_timing);
                }
            }
            if (format == "json") std::cout << reports_to_json(flat, !no_timing) << "\n";
            else std::cout << (all ? "all criteria passed" : "FAILURES present") << "\n";
            return all ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
