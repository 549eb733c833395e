// Experiment harness: loads a config (objects, morphisms, suites), builds the
// shared complexes and phase spaces, dispatches the suites and assembles the
// reports deterministically in config order.
#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "suites.hpp"

namespace lgt {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Session {
  public:
    explicit Session(const Json& config);

    // runs all configured suites; results in config order
    const std::vector<SuiteResult>& run();

    const SpacetimeObject& object(const std::string& id) const;
    const Morphism& morphism(const std::string& id) const;
    std::shared_ptr<const PhaseSpace> phase(const std::string& id, Variant v);

    Json report_json() const;       // one document with one entry per suite
    std::string report_csv() const;
    bool all_asserted_pass() const;
    std::uint64_t seed() const { return seed_; }
    std::string output_dir() const { return output_dir_; }

  private:
    SuiteResult dispatch(const Json& spec, Rng& rng);
    void build_objects(const Json& config);
    void build_morphisms(const Json& config);

    std::uint64_t seed_ = 0;
    std::string output_dir_;
    Json suite_specs_;
    std::map<std::string, std::shared_ptr<const CubicalComplex>> complexes_;
    std::map<std::string, std::unique_ptr<SpacetimeObject>> objects_;
    std::vector<std::string> object_order_;
    std::map<std::string, Morphism> morphisms_;
    std::mutex phase_mutex_;
    std::map<std::pair<std::string, int>, std::shared_future<std::shared_ptr<const PhaseSpace>>>
        phases_;
    std::vector<SuiteResult> results_;
    bool ran_ = false;
};

int worker_count();  // LGT_WORKERS, default 1

Factor parse_factor(const Json& f);  // ["TIME"|"PATH"|"CYCLE", size]
Rat parse_rat(const Json& v);        // integer or "p/q" string

}  // namespace lgt
