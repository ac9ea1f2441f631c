#include "qvertex/suite.hpp"

#include "qvertex/checks.hpp"
#include "qvertex/macdonald.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/shiftop.hpp"
#include "qvertex/vertex.hpp"

#include <atomic>
#include <thread>

namespace qv::checks {
namespace {

std::vector<CheckReport> run_pool(const std::vector<std::function<CheckReport()>>& tasks, int jobs) {
    std::vector<CheckReport> out(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return out;
}

} // namespace

CheckReport check_diagonal_matrix(int k, int dmax) {
    CheckReport summary;
    summary.check = "diagonal-matrix";
    summary.params = {{"k", std::to_string(k)}, {"dmax", std::to_string(dmax)}};
    long long ms = 0;
    for (const Partition& mu : partitions_in_box(k, 3)) {
        for (int d = 0; d <= dmax; ++d) {
            CheckReport r = check_diagonal(mu, d, k);
            ms += r.elapsed_ms;
            if (!r.passed()) {
                summary.status = CheckReport::Status::Fail;
                for (const auto& m : r.mismatches)
                    summary.fail("mu=" + mu.text() + " d=" + std::to_string(d) + " " + m.where, m.left,
                                 m.right);
                for (const auto& n : r.notes) summary.notes.push_back(n);
            }
        }
    }
    summary.elapsed_ms = ms;
    return summary;
}

std::vector<Criterion> run_paper_suite(SuiteOptions opts) {
    const bool q = opts.quick;
    const int rcap = opts.rcap_override >= 0 ? opts.rcap_override : (q ? 2 : 4);
    std::vector<Criterion> out;

    // 1. Macdonald basis: orthogonality, unitriangularity, q-binomial theorem
    {
        Criterion c{1, "Macdonald suite: orthogonality and unitriangularity (|mu| <= 5), q-binomial to y-cap 6, k <= 3", {}};
        std::vector<std::function<CheckReport()>> tasks;
        tasks.push_back([&, q] { return check_macdonald(q ? 3 : 5, 3); });
        for (int k = 1; k <= 3; ++k)
            tasks.push_back([k, q] { return check_qbinomial(k, q ? 3 : 6); });
        c.reports = run_pool(tasks, opts.jobs);
        out.push_back(std::move(c));
    }

    // 2. Operator spectrum, commutativity, rewrite lemma
    {
        Criterion c{2, "Operator spectrum (k <= 3, d <= 3, mu in 3x3 box), commutativity (k=2, d <= 2), rewrite lemma (k <= 3, d <= 3)", {}};
        std::vector<std::function<CheckReport()>> tasks;
        int kmax = q ? 2 : 3, dmax = q ? 2 : 3;
        for (int k = 1; k <= kmax; ++k)
            tasks.push_back([k, dmax] { return check_diagonal_matrix(k, dmax); });
        tasks.push_back([] { return check_commute(2, 2); });
        for (int k = 1; k <= kmax; ++k)
            tasks.push_back([k, dmax] { return check_rewrite(k, dmax); });
        tasks.push_back([q] { return check_diagonal2(Partition(std::vector<int>{2, 1}), 2, q ? 2 : 4); });
        c.reports = run_pool(tasks, opts.jobs);
        out.push_back(std::move(c));
    }

    // 3. q-Selberg evaluation
    {
        Criterion c{3, "q-Selberg evaluation (k <= 2, mu in 2x2 box, z-cap 3); mu empty, k=2 is the T*Gr(2,2) vertex product", {}};
        std::vector<std::function<CheckReport()>> tasks;
        for (int k = 1; k <= 2; ++k)
            for (const Partition& mu : partitions_in_box(k, 2))
                tasks.push_back([mu, k, q] { return check_selberg(mu, k, q ? 2 : 3); });
        c.reports = run_pool(tasks, opts.jobs);
        out.push_back(std::move(c));
    }

    // 4. Vertex-function identities
    {
        Criterion c{4, "Vertex identities: verpoint to z-cap 4, prform to r-cap 4, cone vanishing with zero pole alarms", {}};
        std::vector<std::function<CheckReport()>> tasks;
        for (const char* lt : {"1", "2", "1,1", "2,2", "3,3"}) {
            Partition lambda = Partition::parse(lt);
            tasks.push_back([lambda, q] { return check_verpoint(lambda, q ? 2 : 4); });
        }
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}})
            tasks.push_back([k = k, n = n, rcap] { return check_prform(k, n, rcap); });
        tasks.push_back([] { return check_cone(50, 20260809u); });
        c.reports = run_pool(tasks, opts.jobs);
        out.push_back(std::move(c));
    }

    // 5. Descendant chain
    {
        Criterion c{5, "Descendant chain: reducetopoint (z-cap 3, u-cap 3), insertion (d <= 2, r-cap 4), vgrcoeff (sum d <= 3)", {}};
        std::vector<std::function<CheckReport()>> tasks;
        const std::vector<std::pair<int, int>> kn{{1, 2}, {1, 3}, {2, 4}};
        for (auto [k, n] : kn)
            tasks.push_back([k = k, n = n, q] { return check_reduce(k, n, q ? 2 : 3, q ? 2 : 3); });
        for (auto [k, n] : kn)
            for (int d = 0; d <= 2; ++d)
                tasks.push_back([k = k, n = n, d, rcap] { return check_insertion(k, n, d, rcap); });
        for (auto [k, n] : kn)
            for (const auto& dt : vx::degree_tuples(k, q ? 2 : 3))
                tasks.push_back([k = k, n = n, dt] { return check_vgrcoeff(k, n, dt); });
        c.reports = run_pool(tasks, opts.jobs);
        out.push_back(std::move(c));
    }

    // 6. Main theorem
    {
        Criterion c{6, "Main duality theorem: (1,2),(1,3),(2,4) at z-cap 3 / r-cap 4 and (2,5) at z-cap 2 / r-cap 3", {}};
        std::vector<std::function<CheckReport()>> tasks;
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}})
            tasks.push_back([k = k, n = n, q, rcap] { return check_main(k, n, q ? 2 : 3, rcap); });
        tasks.push_back([q] { return check_main(2, 5, 2, q ? 2 : 3); });
        c.reports = run_pool(tasks, opts.jobs);
        out.push_back(std::move(c));
    }

    // 7. Infrastructure
    {
        Criterion c{7, "Infrastructure: serialization round-trip, deterministic reports, golden stability", {}};
        c.reports.push_back(check_infrastructure());
        // determinism across two in-process runs of a whole check report
        CheckReport a = check_verpoint(Partition(std::vector<int>{1, 1}), 2);
        CheckReport b = check_verpoint(Partition(std::vector<int>{1, 1}), 2);
        CheckReport det;
        det.check = "report-determinism";
        if (a.to_json(false) != b.to_json(false)) det.fail("json", a.to_json(false), b.to_json(false));
        c.reports.push_back(det);
        out.push_back(std::move(c));
    }

    // meta-assertion: the main theorem passes exactly when its ingredient
    // identities do, at matching parameters
    {
        Criterion c{8, "Meta: main passes iff prform, vgrcoeff, insertion and reducetopoint pass (proof factorization)", {}};
        auto passed_in = [&](int idx, const std::string& name, const std::string& k, const std::string& n) {
            for (const auto& r : out[static_cast<size_t>(idx)].reports) {
                if (r.check != name) continue;
                auto ik = r.params.find("k");
                auto in = r.params.find("n");
                if (ik != r.params.end() && in != r.params.end() && ik->second == k && in->second == n &&
                    !r.passed())
                    return false;
            }
            return true;
        };
        CheckReport meta;
        meta.check = "meta-factorization";
        for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 4}}) {
            std::string ks = std::to_string(k), ns = std::to_string(n);
            bool ingredients = passed_in(3, "prform", ks, ns) && passed_in(4, "reduce", ks, ns) &&
                               passed_in(4, "insertion", ks, ns) && passed_in(4, "vgrcoeff", ks, ns);
            bool main_ok = passed_in(5, "main", ks, ns);
            if (ingredients != main_ok)
                meta.fail("(k,n)=(" + ks + "," + ns + ")", ingredients ? "ingredients pass" : "ingredients fail",
                          main_ok ? "main passes" : "main fails");
        }
        c.reports.push_back(meta);
        out.push_back(std::move(c));
    }

    if (opts.rcap_override >= 0 && opts.rcap_override < 4) {
        for (auto& c : out) {
            for (auto& r : c.reports) {
                // flag reduced-strength runs
                if (r.params.count("rcap") || r.check == "prform" || r.check == "insertion" ||
                    r.check == "main")
                    r.notes.push_back("weak: r-cap lowered below the reference value");
            }
        }
    }

    return out;
}

} // namespace qv::checks
