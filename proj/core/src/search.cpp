#include "spectra/search.hpp"

#include <atomic>
#include <chrono>
#include <climits>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "enumerate_internal.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/errors.hpp"

namespace spectra {

int lower_bound_n(int k) {
    int n = 1;
    while ((n + 1) * n / 2 + 1 <= k) ++n;
    return n;
}

std::vector<LawViolation> check_laws(const FSet& f, int t, int k) {
    std::vector<LawViolation> out;
    auto meets = [&](long long lo, long long hi) {
        for (int m : f.values)
            if (m >= lo && m <= hi) return true;
        return false;
    };
    auto add = [&](const char* law, std::string detail) {
        LawViolation v;
        v.law = law;
        v.t = t;
        v.k = k;
        v.detail = std::move(detail);
        out.push_back(std::move(v));
    };

    if (!f.contains(1)) add("membership", "1 not in F");
    if (k >= 2 && !f.contains(2)) add("membership", "2 not in F");
    if (!f.contains(k)) add("membership", "k = " + std::to_string(k) + " not in F");

    for (int l : f.values)
        if (l < k && !meets(l + 1, 2LL * l))
            add("doubling", "no value in [" + std::to_string(l + 1) + "," +
                                std::to_string(2 * l) + "] above l = " + std::to_string(l));

    for (int n = 0; (1LL << n) + 1 <= k; ++n)
        if (!meets((1LL << n) + 1, 1LL << (n + 1)))
            add("powers-of-two", "F misses [" + std::to_string((1LL << n) + 1) + "," +
                                     std::to_string(1LL << (n + 1)) + "]");

    const int need = lower_bound_n(k);
    if (f.size() < need)
        add("lower-bound",
            "|F| = " + std::to_string(f.size()) + " < " + std::to_string(need));

    for (int n = 2; n * (n - 1) / 2 + 2 <= k; ++n) {
        const long long lo = n * (n - 1) / 2 + 2;
        const long long hi = (n + 1) * n / 2 + 1;
        if (!meets(lo, hi))
            add("interval",
                "F misses [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
    }
    return out;
}

namespace {

void parallel_for(std::size_t jobs, int workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1, workers);
    if (workers == 1 || jobs <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < jobs;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// per-cell scan result; witnesses compare by (|F|, F lexicographic, canonical
// string), which is the deterministic tie-break used everywhere
struct CellScan {
    std::uint64_t classes{0};
    bool have{false}; // a minimiser exists (its edge string may be empty)
    int min_f{INT_MAX};
    std::vector<int> best_f;
    std::vector<Colour> best_string;
    std::vector<LawViolation> violations;
};

bool better(int fa, const std::vector<int>& Fa, int fb, const std::vector<int>& Fb) {
    if (fa != fb) return fa < fb;
    return Fa < Fb;
}

CellScan scan_cell(int t, int k, int workers, bool with_laws) {
    detail::OrderlyEnumerator en(t, k);
    const int depth = detail::OrderlyEnumerator::default_block_depth(en.edge_count());
    const auto blocks = en.blocks(depth);
    std::vector<CellScan> parts(blocks.size());

    parallel_for(blocks.size(), workers, [&](std::size_t b) {
        detail::OrderlyEnumerator local(t, k);
        CellScan& cs = parts[b];
        local.run_block(blocks[b], depth, [&](const std::vector<Colour>& s) {
            TemplateColouring c(t, k, k, s);
            const FSet f = f_set(c);
            ++cs.classes;
            if (with_laws)
                for (auto v : check_laws(f, t, k)) {
                    v.witness_edges = s;
                    cs.violations.push_back(std::move(v));
                }
            // ascending string order within a block: strict improvement keeps
            // the lexicographically least witness at ties
            if (!cs.have || better(f.size(), f.values, cs.min_f, cs.best_f)) {
                cs.have = true;
                cs.min_f = f.size();
                cs.best_f = f.values;
                cs.best_string = s;
            }
        });
    });

    CellScan total;
    for (const auto& cs : parts) {
        total.classes += cs.classes;
        for (const auto& v : cs.violations) total.violations.push_back(v);
        if (!cs.have) continue;
        if (!total.have || better(cs.min_f, cs.best_f, total.min_f, total.best_f)) {
            total.have = true;
            total.min_f = cs.min_f;
            total.best_f = cs.best_f;
            total.best_string = cs.best_string;
        }
    }
    return total;
}

} // namespace

PsiResult psi_bounded(int k, int t_max, int workers, bool force) {
    if (k < 1 || t_max < 0) throw std::invalid_argument("psi_bounded: k >= 1, t_max >= 0");
    if (!force && (t_max > 6 || k > 10))
        throw BoundError("psi_bounded: guard t_max <= 6, k <= 10 (pass force to override)");
    if (TemplateColouring::pair_count(t_max) + 1 < k)
        throw BoundError("psi_bounded: infeasible, C(t_max,2)+1 < k");

    const auto start = std::chrono::steady_clock::now();
    PsiResult result;
    result.value = INT_MAX;
    std::vector<int> global_f;
    bool have = false;

    for (int t = 0; t <= t_max; ++t) {
        if (TemplateColouring::pair_count(t) + 1 < k) continue;
        CellScan cs = scan_cell(t, k, workers, false);
        CellSummary cell;
        cell.t = t;
        cell.k = k;
        cell.raw = raw_template_count(t, k);
        cell.classes = cs.classes;
        cell.min_f = cs.min_f;
        if (cs.have)
            cell.witness = TemplateColouring(t, k, k, cs.best_string);
        result.cells.push_back(std::move(cell));
        // ascending t: strict improvement keeps the smallest t at ties
        if (cs.have &&
            (!have || better(cs.min_f, cs.best_f, result.value, global_f))) {
            have = true;
            result.value = cs.min_f;
            global_f = cs.best_f;
            result.witness = TemplateColouring(t, k, k, cs.best_string);
        }
    }
    if (!have) throw BoundError("psi_bounded: no valid template found");
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::uint64_t SearchReport::classes_total() const {
    std::uint64_t n = 0;
    for (const auto& c : cells) n += c.classes;
    return n;
}

std::uint64_t SearchReport::raw_total() const {
    std::uint64_t n = 0;
    for (const auto& c : cells) n += c.raw;
    return n;
}

SearchReport law_report(int t_max, int k_max, int workers, bool force) {
    if (t_max < 0 || k_max < 1) throw std::invalid_argument("law_report: t_max >= 0, k_max >= 1");
    if (!force && (t_max > 5 || k_max > 8))
        throw BoundError("law_report: guard t_max <= 5, k_max <= 8 (pass force to override)");

    const auto start = std::chrono::steady_clock::now();
    SearchReport report;
    report.t_max = t_max;
    report.k_max = k_max;
    // k = 1 cells are the monochromatic colouring, where every law is vacuous
    for (int t = 0; t <= t_max; ++t) {
        for (int k = 2; k <= k_max && k <= TemplateColouring::pair_count(t) + 1; ++k) {
            CellScan cs = scan_cell(t, k, workers, true);
            CellSummary cell;
            cell.t = t;
            cell.k = k;
            cell.raw = raw_template_count(t, k);
            cell.classes = cs.classes;
            cell.min_f = cs.min_f;
            if (cs.have)
                cell.witness = TemplateColouring(t, k, k, cs.best_string);
            report.cells.push_back(std::move(cell));
            for (auto& v : cs.violations) report.violations.push_back(std::move(v));
        }
    }
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

nlohmann::ordered_json cell_json(const CellSummary& c) {
    nlohmann::ordered_json j;
    j["t"] = c.t;
    j["k"] = c.k;
    j["raw"] = c.raw;
    j["classes"] = c.classes;
    j["min_f"] = c.min_f;
    j["witness"] = c.witness_path;
    return j;
}

nlohmann::ordered_json violation_json(const LawViolation& v) {
    nlohmann::ordered_json j;
    j["law"] = v.law;
    j["t"] = v.t;
    j["k"] = v.k;
    j["detail"] = v.detail;
    j["witness"] = v.witness_path;
    return j;
}

} // namespace

std::string report_json(const SearchReport& r) {
    nlohmann::ordered_json j;
    j["t_max"] = r.t_max;
    j["k_max"] = r.k_max;
    j["raw_total"] = r.raw_total();
    j["classes_total"] = r.classes_total();
    int min_f = 0;
    for (const auto& c : r.cells)
        if (min_f == 0 || c.min_f < min_f) min_f = c.min_f;
    j["min_f"] = min_f;
    j["pass"] = r.pass();
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cells) cells.push_back(cell_json(c));
    auto& viols = j["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : r.violations) viols.push_back(violation_json(v));
    return j.dump(2) + "\n";
}

std::string report_csv(const SearchReport& r) {
    std::ostringstream out;
    out << "t,k,classes,min_F,witness_path\n";
    for (const auto& c : r.cells)
        out << c.t << ',' << c.k << ',' << c.classes << ',' << c.min_f << ','
            << c.witness_path << '\n';
    return out.str();
}

std::string psi_json(const PsiResult& r, int k, int t_max) {
    nlohmann::ordered_json j;
    j["k"] = k;
    j["t_max"] = t_max;
    j["psi_template"] = r.value; // template-class minimum: an upper bound for psi(k)
    j["witness"] = r.cells.empty() ? "" : "witness.json";
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (const auto& c : r.cells) cells.push_back(cell_json(c));
    return j.dump(2) + "\n";
}

RunArtifacts write_law_run(SearchReport& r, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    RunArtifacts art;
    for (auto& cell : r.cells) {
        if (!cell.witness) continue;
        const std::string name =
            "witness_t" + std::to_string(cell.t) + "_k" + std::to_string(cell.k) + ".json";
        write_witness_file(*cell.witness, dir / name);
        cell.witness_path = name;
        art.witness_files.push_back(dir / name);
    }
    int idx = 0;
    for (auto& v : r.violations) {
        const std::string name = "violation_" + std::to_string(idx++) + "_" + v.law + "_t" +
                                 std::to_string(v.t) + "_k" + std::to_string(v.k) + ".json";
        write_witness_file(TemplateColouring(v.t, v.k, v.k, v.witness_edges), dir / name);
        v.witness_path = name;
        art.witness_files.push_back(dir / name);
    }
    art.report_json = dir / "report.json";
    art.summary_csv = dir / "summary.csv";
    std::ofstream(art.report_json) << report_json(r);
    std::ofstream(art.summary_csv) << report_csv(r);
    return art;
}

RunArtifacts write_psi_run(PsiResult& r, int k, int t_max, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    RunArtifacts art;
    for (auto& cell : r.cells) {
        if (!cell.witness) continue;
        const std::string name =
            "witness_t" + std::to_string(cell.t) + "_k" + std::to_string(cell.k) + ".json";
        write_witness_file(*cell.witness, dir / name);
        cell.witness_path = name;
        art.witness_files.push_back(dir / name);
    }
    write_witness_file(r.witness, dir / "witness.json");
    art.witness_files.push_back(dir / "witness.json");
    art.report_json = dir / "report.json";
    std::ofstream(art.report_json) << psi_json(r, k, t_max);
    return art;
}

} // namespace spectra
