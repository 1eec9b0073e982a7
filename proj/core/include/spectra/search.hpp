#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spectra/colouring.hpp"
#include "spectra/fset.hpp"

namespace spectra {

struct LawViolation {
    std::string law; // membership | doubling | powers-of-two | lower-bound | interval
    int t{0};
    int k{0};
    std::string detail;
    std::string witness_path; // filled when the run directory is written
    std::vector<Colour> witness_edges;
};

// Checks one F set against every law that is a theorem (or proven instance)
// at this k:
//   membership    1, k in F; 2 in F when k >= 2
//   doubling      every l in F with l < k has a successor in [l+1, 2l]
//   powers-of-two k >= 2^n+1 implies F meets [2^n+1, 2^{n+1}]
//   lower-bound   |F| >= max{ n : C(n,2)+1 <= k }
//   interval      k >= C(n,2)+2 implies F meets [C(n,2)+2, C(n+1,2)+1]
std::vector<LawViolation> check_laws(const FSet& f, int t, int k);

// largest n with C(n,2)+1 <= k
int lower_bound_n(int k);

struct CellSummary {
    int t{0};
    int k{0};
    std::uint64_t raw{0};
    std::uint64_t classes{0};
    int min_f{0};
    std::optional<TemplateColouring> witness; // least minimiser of the cell
    std::string witness_path;
};

struct PsiResult {
    int value{0};
    TemplateColouring witness;
    std::vector<CellSummary> cells; // one per feasible t <= t_max
    double wall_seconds{0.0};       // console only, never serialised
};

// Minimum |f_set| over all templates with t <= t_max and exactly k colours.
// An upper bound for the true psi(k) (the template class is a subclass of all
// colourings); tight at the acceptance cases via the lower-bound law. The
// witness is the minimiser that is least under (|F|, F lexicographic, t,
// canonical edge string); deterministic for any worker count.
PsiResult psi_bounded(int k, int t_max, int workers = 1, bool force = false);

struct SearchReport {
    int t_max{0};
    int k_max{0};
    std::vector<CellSummary> cells;
    std::vector<LawViolation> violations;
    double wall_seconds{0.0}; // console only, never serialised

    bool pass() const { return violations.empty(); }
    std::uint64_t classes_total() const;
    std::uint64_t raw_total() const;
};

// Enumerates every class with t <= t_max, k <= k_max and runs check_laws on
// its F set. All five laws are theorems (or the proven k >= 5 interval
// instance) here, so any violation is a bug. Guards t_max <= 5, k_max <= 8.
SearchReport law_report(int t_max, int k_max, int workers = 1, bool force = false);

// Deterministic serialisations; wall time never enters the artifacts.
std::string report_json(const SearchReport& r);
std::string report_csv(const SearchReport& r); // t,k,classes,min_F,witness_path
std::string psi_json(const PsiResult& r, int k, int t_max);

struct RunArtifacts {
    std::filesystem::path report_json;
    std::filesystem::path summary_csv;
    std::vector<std::filesystem::path> witness_files;
};

// Writes report.json, summary.csv and one witness file per cell (plus one per
// violation) into dir; fills the witness_path fields.
RunArtifacts write_law_run(SearchReport& r, const std::filesystem::path& dir);
RunArtifacts write_psi_run(PsiResult& r, int k, int t_max, const std::filesystem::path& dir);

} // namespace spectra
