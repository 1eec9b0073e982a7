#include "cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "spectra/colouring.hpp"
#include "spectra/divisor_stats.hpp"
#include "spectra/enumerate.hpp"
#include "spectra/errors.hpp"
#include "spectra/fset.hpp"
#include "spectra/homogeneity.hpp"
#include "spectra/induced_sizes.hpp"
#include "spectra/search.hpp"

namespace spectra::cli {

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::filesystem::path resolve_out(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("SPECTRA_OUT"); env != nullptr && *env != '\0') return env;
    return "spectra-out";
}

std::string brace_list(const std::vector<int>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out + "}";
}

std::string brace_list(const std::vector<long long>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out + "}";
}

// colouring source shared by fset / homog
struct ColouringSource {
    std::string file;
    int small_rainbow_n{0};
    std::vector<int> bipartite; // a b
    std::string graph_file;

    void add_options(CLI::App* cmd) {
        auto* f = cmd->add_option("--file", file, "witness file with the colouring");
        auto* s = cmd->add_option("--small-rainbow", small_rainbow_n, "rainbow K_n plus background");
        auto* b = cmd->add_option("--bipartite", bipartite, "bipartite rainbow with sides A B")
                      ->expected(2);
        auto* g = cmd->add_option("--graph", graph_file, "graph file, every edge its own colour");
        f->excludes(s)->excludes(b)->excludes(g);
        s->excludes(b)->excludes(g);
        b->excludes(g);
    }

    TemplateColouring make() const {
        if (!file.empty()) return load_witness_file(file);
        if (small_rainbow_n > 0) return small_rainbow(small_rainbow_n);
        if (bipartite.size() == 2) return bipartite_rainbow(bipartite[0], bipartite[1]);
        if (!graph_file.empty()) return embed_graph_rainbow(load_graph_file(graph_file));
        throw std::invalid_argument(
            "no colouring given (use --file, --small-rainbow, --bipartite or --graph)");
    }
};

const LazyColouring& named_colouring(const std::string& name) {
    if (const LazyColouring* c = LazyColouring::find(name)) return *c;
    std::string known;
    for (const auto& n : LazyColouring::names()) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown colouring '" + name + "' (known: " + known + ")");
}

void warn_force(bool force) {
    if (force) std::cerr << "warning: --force overrides the desk-scale guards\n";
}

int run_laws(int t_max, int k_max, int workers, const std::string& out, bool force) {
    SearchReport report = law_report(t_max, k_max, workers, force);
    const auto dir = resolve_out(out) /
                     ("laws_t" + std::to_string(t_max) + "_k" + std::to_string(k_max));
    write_law_run(report, dir);
    if (report.pass()) {
        std::cout << "pass cells=" << report.cells.size() << " classes=" << report.classes_total()
                  << " report=" << (dir / "report.json").string() << "\n";
        return kPass;
    }
    std::cout << "FAIL " << report.violations.size() << " violation(s):\n";
    for (const auto& v : report.violations)
        std::cout << "  " << v.law << " t=" << v.t << " k=" << v.k << " " << v.detail
                  << " witness=" << (dir / v.witness_path).string() << "\n";
    return kViolation;
}

int run_check_witness(const std::string& file) {
    const TemplateColouring c = load_witness_file(file);
    const FSet f = f_set(c);
    const auto violations = check_laws(f, c.t(), c.k());
    if (violations.empty()) {
        std::cout << "ok t=" << c.t() << " k=" << c.k() << " F=" << brace_list(f.values)
                  << " |F|=" << f.size() << "\n";
        return kPass;
    }
    std::cout << "violations reproduced:\n";
    for (const auto& v : violations) std::cout << "  " << v.law << ": " << v.detail << "\n";
    return kViolation;
}

std::vector<long long> density_checkpoints(long long x) {
    std::vector<long long> xs;
    for (long long p = 10; p < x; p *= 10) xs.push_back(p);
    xs.push_back(x);
    return xs;
}

} // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact colour spectra of edge colourings, template-class psi search,\n"
                 "homogeneous tuples and the divisor statistics behind the bipartite bound"};
    app.require_subcommand(1);
    app.fallthrough(); // --out may follow the subcommand

    std::string out_flag;
    app.add_option("--out", out_flag, "output directory (default: $SPECTRA_OUT or ./spectra-out)");

    // psi
    auto* psi_cmd = app.add_subcommand("psi", "minimise |F| over templates with exactly k colours");
    int psi_k = 0, psi_tmax = 0, psi_workers = 1;
    bool psi_force = false;
    std::string psi_format = "text";
    psi_cmd->add_option("--k", psi_k, "colour count")->required();
    psi_cmd->add_option("--t-max", psi_tmax, "largest template size")->required();
    psi_cmd->add_option("--workers", psi_workers, "worker threads");
    psi_cmd->add_option("--format", psi_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    psi_cmd->add_flag("--force", psi_force, "override guards");

    // fset
    auto* fset_cmd = app.add_subcommand("fset", "achievable exact colour counts of a colouring");
    ColouringSource fset_src;
    fset_src.add_options(fset_cmd);
    std::string fset_format = "text";
    fset_cmd->add_option("--format", fset_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // gset
    auto* gset_cmd = app.add_subcommand("gset", "colour counts over prefix subsets of a lazy colouring");
    std::string gset_name;
    int gset_n = 0;
    gset_cmd->add_option("--colouring", gset_name, "injective|constant|min")->required();
    gset_cmd->add_option("--n", gset_n, "prefix length (2..24)")->required();

    // laws
    auto* laws_cmd = app.add_subcommand("laws", "verify the F-set laws over every small template");
    int laws_tmax = 0, laws_kmax = 0, laws_workers = 1;
    bool laws_force = false;
    laws_cmd->add_option("--t-max", laws_tmax)->required();
    laws_cmd->add_option("--k-max", laws_kmax)->required();
    laws_cmd->add_option("--workers", laws_workers, "worker threads");
    laws_cmd->add_flag("--force", laws_force, "override guards");

    // homog
    auto* homog_cmd = app.add_subcommand("homog", "build a homogeneous tuple for a template colouring");
    ColouringSource homog_src;
    homog_src.add_options(homog_cmd);
    int homog_n = 0;
    bool homog_trace = false;
    homog_cmd->add_option("--n", homog_n, "tuple length")->required();
    homog_cmd->add_flag("--trace", homog_trace, "log each build step");

    // weak-homog
    auto* weak_cmd = app.add_subcommand("weak-homog", "build a weakly homogeneous tuple for a lazy colouring");
    std::string weak_name;
    int weak_n = 0, weak_bound = 0;
    bool weak_trace = false;
    weak_cmd->add_option("--colouring", weak_name, "injective|constant|min")->required();
    weak_cmd->add_option("--n", weak_n, "tuple length")->required();
    weak_cmd->add_option("--bound", weak_bound, "vertex bound")->required();
    weak_cmd->add_flag("--trace", weak_trace, "log each build step");

    // canonical-check
    auto* canon_cmd = app.add_subcommand("canonical-check",
                                         "certify the prefix G-set lower bound for a lazy colouring");
    std::string canon_name;
    int canon_n = 0, canon_bound = 0;
    canon_cmd->add_option("--colouring", canon_name, "injective|constant|min")->required();
    canon_cmd->add_option("--n", canon_n)->required();
    canon_cmd->add_option("--bound", canon_bound)->required();

    // sieve
    auto* sieve_cmd = app.add_subcommand("sieve", "divisor statistics");
    sieve_cmd->require_subcommand(1);
    auto* sh = sieve_cmd->add_subcommand("h", "count n <= x with a divisor in (y, z]");
    long long sh_x = 0;
    std::string sh_y, sh_z;
    bool sh_force = false;
    sh->add_option("--x", sh_x)->required();
    sh->add_option("--y", sh_y, "rational, e.g. 3 or 1/2")->required();
    sh->add_option("--z", sh_z, "rational, e.g. 6 or 5/4")->required();
    sh->add_flag("--force", sh_force);
    auto* sm = sieve_cmd->add_subcommand("multtable", "size of the n x n multiplication table");
    long long sm_n = 0;
    bool sm_table = false, sm_force = false;
    sm->add_option("--n", sm_n)->required();
    sm->add_flag("--table", sm_table, "CSV rows at powers of 10 up to n");
    sm->add_flag("--force", sm_force);
    auto* sd = sieve_cmd->add_subcommand("density", "density of the factorisation set A");
    long long sd_x = 0;
    bool sd_force = false;
    sd->add_option("--x", sd_x)->required();
    sd->add_flag("--force", sd_force);
    auto* se = sieve_cmd->add_subcommand("evidence", "per-k bipartite F sizes against the upper-bound curve");
    std::vector<long long> se_ks;
    se->add_option("--k", se_ks, "explicit k values (default: decade sample)");

    // minsize
    auto* min_cmd = app.add_subcommand("minsize", "minimise the induced-size set over m-edge graphs");
    int min_m = 0, min_nmax = 0;
    bool min_force = false;
    min_cmd->add_option("--m", min_m, "edge count")->required();
    min_cmd->add_option("--n-max", min_nmax, "largest vertex count")->required();
    min_cmd->add_flag("--force", min_force);

    // check-witness
    auto* check_cmd = app.add_subcommand("check-witness", "reload a witness file and re-run the law checks");
    std::string check_file;
    check_cmd->add_option("--file", check_file)->required();

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*psi_cmd) {
            warn_force(psi_force);
            PsiResult r = psi_bounded(psi_k, psi_tmax, psi_workers, psi_force);
            const auto dir = resolve_out(out_flag) /
                             ("psi_k" + std::to_string(psi_k) + "_tmax" + std::to_string(psi_tmax));
            write_psi_run(r, psi_k, psi_tmax, dir);
            if (psi_format == "json")
                std::cout << psi_json(r, psi_k, psi_tmax);
            else
                std::cout << r.value << "\n";
            std::cerr << "witness: " << (dir / "witness.json").string() << " (" << r.wall_seconds
                      << " s)\n";
            return kPass;
        }
        if (*fset_cmd) {
            const FSet f = f_set(fset_src.make());
            if (fset_format == "json") {
                std::cout << "{\"k\":" << f.k << ",\"values\":[";
                for (std::size_t i = 0; i < f.values.size(); ++i)
                    std::cout << (i ? "," : "") << f.values[i];
                std::cout << "]}\n";
            } else {
                std::cout << brace_list(f.values) << "\n";
            }
            return kPass;
        }
        if (*gset_cmd) {
            const GSet g = g_set_prefix(named_colouring(gset_name), gset_n);
            std::cout << brace_list(g.values) << "\n";
            return kPass;
        }
        if (*laws_cmd) {
            warn_force(laws_force);
            return run_laws(laws_tmax, laws_kmax, laws_workers, out_flag, laws_force);
        }
        if (*homog_cmd) {
            const TemplateColouring c = homog_src.make();
            TraceFn trace;
            if (homog_trace) trace = [](const std::string& line) { std::cout << line << "\n"; };
            const HomogTuple t = build_homogeneous(c, homog_n, trace);
            std::cout << tuple_json(t) << "\n";
            return kPass;
        }
        if (*weak_cmd) {
            TraceFn trace;
            if (weak_trace) trace = [](const std::string& line) { std::cout << line << "\n"; };
            const auto r = build_weakly_homogeneous(named_colouring(weak_name), weak_n, weak_bound, trace);
            if (!r.found) {
                std::cout << "bound-exhausted at " << weak_bound << "\n";
                return kInconclusive;
            }
            std::cout << tuple_json(r.tuple) << "\n";
            return kPass;
        }
        if (*canon_cmd) {
            const auto r = canonical_check(named_colouring(canon_name), canon_n, canon_bound);
            if (!r.pass) {
                std::cout << "inconclusive (bound " << canon_bound << " exhausted)\n";
                return kInconclusive;
            }
            std::cout << "pass sizes=" << brace_list(r.sizes) << "\n";
            return kPass;
        }
        if (*sh) {
            warn_force(sh_force);
            std::cout << h_count(sh_x, Rat::parse(sh_y), Rat::parse(sh_z), sh_force) << "\n";
            return kPass;
        }
        if (*sm) {
            warn_force(sm_force);
            if (sm_table) {
                std::cout << "n,size,ratio\n";
                for (long long n : density_checkpoints(sm_n)) {
                    const long long size = mult_table_size(n, sm_force);
                    std::printf("%lld,%lld,%.6f\n", n, size,
                                static_cast<double>(size) / (static_cast<double>(n) * static_cast<double>(n)));
                }
            } else {
                std::cout << mult_table_size(sm_n, sm_force) << "\n";
            }
            return kPass;
        }
        if (*sd) {
            warn_force(sd_force);
            std::cout << "x,count,density\n";
            for (long long x : density_checkpoints(sd_x)) {
                const DensityPoint p = density_A(x, sd_force);
                std::printf("%lld,%lld,%.6f\n", p.x, p.count, p.density());
            }
            return kPass;
        }
        if (*se) {
            const auto ks = se_ks.empty() ? default_evidence_sample() : se_ks;
            std::ostringstream csv;
            csv << "# set A: k-1 = ab with ln(k) <= a <= b (natural log)\n";
            csv << "k,in_A,a,b,f_size,upper_bound,ratio\n";
            for (long long k : ks) {
                const EvidenceRow r = evidence_row(k);
                char line[160];
                std::snprintf(line, sizeof line, "%lld,%d,%lld,%lld,%lld,%.6f,%.6f\n", r.k,
                              r.member ? 1 : 0, r.a, r.b, r.f_size, r.upper_bound, r.ratio);
                csv << line;
            }
            const auto dir = resolve_out(out_flag);
            std::filesystem::create_directories(dir);
            std::ofstream(dir / "evidence.csv") << csv.str();
            std::cout << csv.str();
            return kPass;
        }
        if (*min_cmd) {
            warn_force(min_force);
            const MinSizeResult r = min_size_set(min_m, min_nmax, min_force);
            const auto dir = resolve_out(out_flag) /
                             ("minsize_m" + std::to_string(min_m) + "_n" + std::to_string(min_nmax));
            std::filesystem::create_directories(dir);
            write_graph_file(r.witness, dir / "witness.json");
            std::ofstream(dir / "summary.csv")
                << "# size sets count the empty subgraph (0 always attained)\n"
                << "m,n_max,best,witness_path\n"
                << min_m << ',' << min_nmax << ',' << r.best << ",witness.json\n";
            std::cout << "best=" << r.best << " witness=" << (dir / "witness.json").string() << "\n";
            return kPass;
        }
        if (*check_cmd) return run_check_witness(check_file);
    } catch (const BoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace spectra::cli
