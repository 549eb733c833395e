// Check suites: each verifies one family of theorem identities on configured
// objects/morphisms and yields a machine-readable report.
#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>

#include "functor.hpp"

namespace lgt {

using Json = nlohmann::json;

struct CsvRow {
    std::string suite, object, quantity, value, status;
};

struct SuiteResult {
    std::string suite;
    bool pass = true;
    bool asserted = true;  // negative controls report but never gate
    Json report;
    std::vector<CsvRow> csv;
};

// deterministic 64-bit generator (xorshift*), independent of the standard
// library so reports are byte-identical everywhere
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next();
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    // random COMPACT cochain with small integer entries on `nnz` support cells
    Cochain compact_cochain(const SpacetimeObject& obj, int degree, int nnz);

  private:
    std::uint64_t s_;
};

SuiteResult suite_einv(const SpacetimeObject& obj);
SuiteResult suite_sandwich(const SpacetimeObject& obj);
SuiteResult suite_radical(const PhaseSpace& ps);
// Remark-Nmin witness: a radical class without trivial-linear-part representative
SuiteResult suite_nmin_witness(const SpacetimeObject& obj);
SuiteResult suite_separation(const SpacetimeObject& torus_obj, const SpacetimeObject& real_obj);
SuiteResult suite_green(const SpacetimeObject& obj, Rng& rng, int samples);
SuiteResult suite_causality(const Morphism& f1, const Morphism& f2, const PhaseSpace& ps1,
                            const PhaseSpace& ps2, const Morphism* timelike_f2);
SuiteResult suite_timeslice(const Morphism& f, const PhaseSpace& src_std,
                            const PhaseSpace& dst_std, const PhaseSpace& src_zero,
                            const PhaseSpace& dst_zero);
SuiteResult suite_locality(const Morphism& f, const PhaseSpace& src_std,
                           const PhaseSpace& dst_std, const PhaseSpace& src_zero,
                           const PhaseSpace& dst_zero);
SuiteResult suite_charges(const SpacetimeObject& obj, const PhaseSpace& std_ps,
                          const PhaseSpace& zero_ps, const Rat& expected_flux,
                          const Morphism* slab, const PhaseSpace* slab_src_ps);
SuiteResult suite_ccr(const PhspMap& slab_map, const PhspMap& c1, const PhspMap& c2,
                      Rng& rng, int samples);

}  // namespace lgt
