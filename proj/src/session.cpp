#include "session.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace lgt {

Factor parse_factor(const Json& f) {
    std::string kind = f.at(0).get<std::string>();
    int size = f.at(1).get<int>();
    if (kind == "TIME") return {FactorKind::TIME, size};
    if (kind == "PATH") return {FactorKind::PATH, size};
    if (kind == "CYCLE") return {FactorKind::CYCLE, size};
    throw ConfigError("ConfigError: unknown factor kind " + kind);
}

Rat parse_rat(const Json& v) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    std::string s = v.get<std::string>();
    Rat r;
    if (r.set_str(s, 10) != 0) throw ConfigError("ConfigError: bad rational " + s);
    r.canonicalize();
    return r;
}

namespace {

std::string complex_key(const std::vector<Factor>& factors, int margin) {
    std::ostringstream os;
    for (auto& f : factors)
        os << static_cast<int>(f.kind) << ":" << f.size << ";";
    os << "w" << margin;
    return os.str();
}

}  // namespace

int worker_count() {
    const char* env = std::getenv("LGT_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    return std::max(1, std::min(n, 64));
}

Session::Session(const Json& config) {
    seed_ = config.value("seed", std::uint64_t{20260826});
    output_dir_ = config.value("output", std::string("reports"));
    suite_specs_ = config.value("suites", Json::array());
    build_objects(config);
    build_morphisms(config);
}

void Session::build_objects(const Json& config) {
    for (const Json& spec : config.value("objects", Json::array())) {
        std::string id = spec.at("id").get<std::string>();
        if (objects_.count(id)) throw ConfigError("ConfigError: duplicate object id " + id);
        GroupSignature group = make_group(spec.at("group").at("k").get<int>(),
                                          spec.at("group").at("l").get<int>());
        if (spec.at("group").contains("h")) {
            group.h.clear();
            for (const Json& row : spec.at("group").at("h")) {
                DVec r;
                for (const Json& v : row) r.push_back(parse_rat(v));
                group.h.push_back(std::move(r));
            }
        }
        std::vector<Rat> flux;
        for (const Json& v : spec.value("flux", Json::array())) flux.push_back(parse_rat(v));

        std::shared_ptr<const CubicalComplex> cx, block;
        if (spec.contains("remove_cone")) {
            const Json& rc = spec.at("remove_cone");
            auto it = objects_.find(rc.at("of").get<std::string>());
            if (it == objects_.end())
                throw ConfigError("ConfigError: remove_cone references unknown object");
            block = it->second->cx;
            Vertex center{};
            auto c = rc.at("center");
            for (size_t i = 0; i < c.size(); ++i) center[i] = c[i].get<int>();
            std::string key = "cone:" + it->first + ":" + c.dump();
            auto found = complexes_.find(key);
            if (found == complexes_.end()) {
                std::shared_ptr<CubicalComplex> sub = remove_cone(*block, center);
                complexes_[key] = sub;
                cx = sub;
            } else {
                cx = found->second;
            }
        } else {
            std::vector<Factor> factors;
            for (const Json& f : spec.at("factors")) factors.push_back(parse_factor(f));
            int margin = spec.value("margin", 1);
            std::string key = complex_key(factors, margin);
            auto found = complexes_.find(key);
            if (found == complexes_.end()) {
                auto built = std::make_shared<CubicalComplex>(factors, margin);
                complexes_[key] = built;
                cx = built;
            } else {
                cx = found->second;
            }
        }
        objects_[id] = std::make_unique<SpacetimeObject>(
            make_object(id, cx, std::move(group), flux, block));
        object_order_.push_back(id);
    }
    // warm every lazy table so concurrent suites only read
    for (auto& [id, obj] : objects_) {
        const Operators* ops = obj->ops.get();
        for (int round = 0; round < 2; ++round) {
            const CubicalComplex& cx = ops->complex();
            for (int k = 0; k <= cx.dim(); ++k) {
                if (k >= 1) {
                    cx.boundary(k);
                    ops->delta(k);
                }
                if (k < cx.dim()) cx.d(k);
                ops->box(k);
                cx.support_cells(k, SupportMode::COMPACT, obj->width() + 1);
                cx.support_cells(k, SupportMode::TIMELIKE_COMPACT, obj->width());
            }
            if (!cx.parent()) break;
            ops = &ops->parent_ops();
        }
    }
}

void Session::build_morphisms(const Json& config) {
    for (const Json& spec : config.value("morphisms", Json::array())) {
        std::string id = spec.at("id").get<std::string>();
        if (morphisms_.count(id)) throw ConfigError("ConfigError: duplicate morphism id " + id);
        const SpacetimeObject& src = object(spec.at("source").get<std::string>());
        const SpacetimeObject& dst = object(spec.at("target").get<std::string>());
        std::vector<int> offsets;
        for (const Json& v : spec.at("offsets")) offsets.push_back(v.get<int>());
        try {
            morphisms_.emplace(id, make_morphism(src, dst, offsets));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("ConfigError: morphism ") + id + ": " + e.what());
        }
    }
}

const SpacetimeObject& Session::object(const std::string& id) const {
    auto it = objects_.find(id);
    if (it == objects_.end()) throw ConfigError("ConfigError: unknown object " + id);
    return *it->second;
}

const Morphism& Session::morphism(const std::string& id) const {
    auto it = morphisms_.find(id);
    if (it == morphisms_.end()) throw ConfigError("ConfigError: unknown morphism " + id);
    return it->second;
}

std::shared_ptr<const PhaseSpace> Session::phase(const std::string& id, Variant v) {
    std::pair<std::string, int> key{id, static_cast<int>(v)};
    std::promise<std::shared_ptr<const PhaseSpace>> promise;
    std::shared_future<std::shared_ptr<const PhaseSpace>> fut;
    bool creator = false;
    {
        std::lock_guard<std::mutex> lock(phase_mutex_);
        auto it = phases_.find(key);
        if (it != phases_.end()) {
            fut = it->second;
        } else {
            creator = true;
            phases_[key] = promise.get_future().share();
        }
    }
    if (!creator) return fut.get();
    auto ps = std::make_shared<const PhaseSpace>(phase_space(object(id), v));
    promise.set_value(ps);
    return ps;
}

SuiteResult Session::dispatch(const Json& spec, Rng& rng) {
    std::string name = spec.at("suite").get<std::string>();
    if (name == "einv") return suite_einv(object(spec.at("object").get<std::string>()));
    if (name == "sandwich") return suite_sandwich(object(spec.at("object").get<std::string>()));
    if (name == "radical")
        return suite_radical(*phase(spec.at("object").get<std::string>(), Variant::STANDARD));
    if (name == "nmin") return suite_nmin_witness(object(spec.at("object").get<std::string>()));
    if (name == "separation")
        return suite_separation(object(spec.at("object").get<std::string>()),
                                object(spec.at("control").get<std::string>()));
    if (name == "green")
        return suite_green(object(spec.at("object").get<std::string>()), rng,
                           spec.value("samples", 100));
    if (name == "causality") {
        const Morphism& f1 = morphism(spec.at("first").get<std::string>());
        const Morphism& f2 = morphism(spec.at("second").get<std::string>());
        const Morphism* ctrl = nullptr;
        if (spec.contains("control")) ctrl = &morphism(spec.at("control").get<std::string>());
        auto p1 = phase(f1.source->id, Variant::STANDARD);
        auto p2 = phase(f2.source->id, Variant::STANDARD);
        return suite_causality(f1, f2, *p1, *p2, ctrl);
    }
    if (name == "timeslice" || name == "locality") {
        const Morphism& f = morphism(spec.at("morphism").get<std::string>());
        auto ss = phase(f.source->id, Variant::STANDARD);
        auto ds = phase(f.target->id, Variant::STANDARD);
        auto sz = phase(f.source->id, Variant::CHARGE_ZERO);
        auto dz = phase(f.target->id, Variant::CHARGE_ZERO);
        return name == "timeslice" ? suite_timeslice(f, *ss, *ds, *sz, *dz)
                                   : suite_locality(f, *ss, *ds, *sz, *dz);
    }
    if (name == "charges") {
        const SpacetimeObject& obj = object(spec.at("object").get<std::string>());
        auto sp = phase(obj.id, Variant::STANDARD);
        auto zp = phase(obj.id, Variant::CHARGE_ZERO);
        const Morphism* slab = nullptr;
        std::shared_ptr<const PhaseSpace> slab_ps;
        if (spec.contains("morphism")) {
            slab = &morphism(spec.at("morphism").get<std::string>());
            if (slab->target != &obj)
                throw ConfigError("ConfigError: charges morphism must target the object");
        }
        return suite_charges(obj, *sp, *zp, parse_rat(spec.at("flux")), slab, slab_ps.get());
    }
    if (name == "ccr") {
        const Morphism& f = morphism(spec.at("morphism").get<std::string>());
        const Morphism& c1 = morphism(spec.at("first").get<std::string>());
        const Morphism& c2 = morphism(spec.at("second").get<std::string>());
        auto fs = phase(f.source->id, Variant::STANDARD);
        auto fd = phase(f.target->id, Variant::STANDARD);
        auto b1 = phase(c1.source->id, Variant::STANDARD);
        auto b2 = phase(c2.source->id, Variant::STANDARD);
        auto bt = phase(c1.target->id, Variant::STANDARD);
        PhspMap slab_map = phsp_map(f, *fs, *fd);
        PhspMap m1 = phsp_map(c1, *b1, *bt);
        PhspMap m2 = phsp_map(c2, *b2, *bt);
        return suite_ccr(slab_map, m1, m2, rng, spec.value("samples", 25));
    }
    throw ConfigError("ConfigError: unknown suite " + name);
}

const std::vector<SuiteResult>& Session::run() {
    if (ran_) return results_;
    int n = static_cast<int>(suite_specs_.size());
    results_.assign(n, SuiteResult{});
    std::atomic<int> next{0};
    auto work = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            Rng rng(seed_ + 0x9e3779b97f4a7c15ull * (i + 1));
            try {
                results_[i] = dispatch(suite_specs_[i], rng);
            } catch (const std::exception& e) {
                SuiteResult r;
                r.suite = suite_specs_[i].value("suite", std::string("?"));
                r.pass = false;
                r.report = Json{{"error", e.what()}};
                r.csv.push_back({r.suite, "-", "error", e.what(), "FAIL"});
                results_[i] = r;
            }
        }
    };
    int workers = std::min(worker_count(), std::max(1, n));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    ran_ = true;
    return results_;
}

Json Session::report_json() const {
    Json suites = Json::array();
    for (const auto& r : results_) {
        suites.push_back(Json{{"suite", r.suite},
                              {"pass", r.pass},
                              {"asserted", r.asserted},
                              {"report", r.report}});
    }
    return Json{{"seed", seed_}, {"suites", suites}};
}

std::string Session::report_csv() const {
    std::ostringstream os;
    os << "suite,object,quantity,value,status\n";
    for (const auto& r : results_)
        for (const auto& row : r.csv)
            os << row.suite << "," << row.object << "," << row.quantity << "," << row.value
               << "," << row.status << "\n";
    return os.str();
}

bool Session::all_asserted_pass() const {
    for (const auto& r : results_)
        if (r.asserted && !r.pass) return false;
    return true;
}

}  // namespace lgt
