// lgt: batch harness for the exact lattice gauge model.
//   run <config>          execute the configured suites, write reports
//   describe <object>     print invariants of one object spec (JSON)
//   dump-green <object> <degree:cell>   CSV dump of a unit-source solve
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "homology.hpp"
#include "session.hpp"

namespace fs = std::filesystem;
using namespace lgt;

namespace {

// accepts a file path or an inline JSON document
Json load_json(const std::string& path_or_doc) {
    Json j;
    try {
        if (!path_or_doc.empty() && path_or_doc.front() == '{') {
            j = Json::parse(path_or_doc);
        } else {
            std::ifstream in(path_or_doc);
            if (!in) throw ConfigError("ConfigError: cannot read " + path_or_doc);
            in >> j;
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("ConfigError: ") + e.what());
    }
    return j;
}

// standalone single-object spec (same shape as a config "objects" entry,
// except remove_cone takes just a center and carves the given factors)
SpacetimeObject load_object(const std::string& path) {
    Json spec = load_json(path);
    std::string id = spec.value("id", std::string("obj"));
    GroupSignature group = make_group(spec.at("group").at("k").get<int>(),
                                      spec.at("group").at("l").get<int>());
    std::vector<Rat> flux;
    for (const Json& v : spec.value("flux", Json::array())) flux.push_back(parse_rat(v));
    std::vector<Factor> factors;
    for (const Json& f : spec.at("factors")) factors.push_back(parse_factor(f));
    int margin = spec.value("margin", 1);
    auto cx = std::make_shared<CubicalComplex>(factors, margin);
    std::shared_ptr<const CubicalComplex> block;
    std::shared_ptr<const CubicalComplex> built = cx;
    if (spec.contains("remove_cone")) {
        Vertex center{};
        auto c = spec.at("remove_cone").at("center");
        for (size_t i = 0; i < c.size(); ++i) center[i] = c[i].get<int>();
        block = cx;
        built = remove_cone(*block, center);
    }
    return make_object(id, built, std::move(group), flux, block);
}

int cmd_run(const std::string& config_path) {
    Json config = load_json(config_path);
    Session session(config);
    const auto& results = session.run();
    fs::path out(session.output_dir());
    fs::create_directories(out);
    // one JSON report per suite plus the combined document and the CSV table
    for (size_t i = 0; i < results.size(); ++i) {
        std::ostringstream name;
        name << "suite-" << i << "-" << results[i].suite << ".json";
        std::ofstream f(out / name.str());
        f << Json{{"suite", results[i].suite},
                  {"pass", results[i].pass},
                  {"report", results[i].report}}
                 .dump(2)
          << "\n";
    }
    {
        std::ofstream f(out / "report.json");
        f << session.report_json().dump(2) << "\n";
    }
    {
        std::ofstream f(out / "report.csv");
        f << session.report_csv();
    }
    bool ok = session.all_asserted_pass();
    for (const auto& r : results)
        std::cout << (r.pass ? "pass  " : "FAIL  ") << r.suite << "\n";
    std::cout << (ok ? "all asserted identities hold" : "SuiteFailure: see report") << "\n";
    return ok ? 0 : 1;
}

int cmd_describe(const std::string& object_path) {
    SpacetimeObject obj = load_object(object_path);
    const CubicalComplex& cx = *obj.cx;
    Json factors = Json::array();
    for (auto& f : cx.factors()) {
        const char* k = f.kind == FactorKind::CYCLE ? "CYCLE"
                        : f.kind == FactorKind::PATH ? "PATH"
                                                     : "TIME";
        factors.push_back(Json::array({k, f.size}));
    }
    Json cells = Json::array();
    for (int k = 0; k <= cx.dim(); ++k) cells.push_back(cx.num_cells(k));
    Json betti = Json::array(), torsion = Json::array();
    for (int k = 0; k <= cx.dim(); ++k) {
        HomologyGroup h = homology(cx, k, Coefficients::INT);
        betti.push_back(h.free_rank);
        Json t = Json::array();
        for (auto& d : h.torsion) t.push_back(d.get_str());
        torsion.push_back(t);
    }
    ObstructionGroup ag = gauge_group_obstruction(obj);
    Json ag_t = Json::array();
    for (auto& d : ag.torsion) ag_t.push_back(d.get_str());
    Json f0 = Json::array();
    for (int a = 0; a < obj.group.components(); ++a) {
        Rat per(0);
        for (auto& v : obj.F0.comp[a]) per += v;
        f0.push_back(rat_str(per));
    }
    std::cout << Json{{"id", obj.id},
                      {"factors", factors},
                      {"margin_width", cx.margin_width()},
                      {"removed_vertices", cx.removed().size()},
                      {"cells", cells},
                      {"euler_characteristic", cx.euler_characteristic()},
                      {"betti", betti},
                      {"torsion", torsion},
                      {"group", Json{{"k", obj.group.k}, {"l", obj.group.l}}},
                      {"gauge_obstruction_rank", ag.free_rank},
                      {"gauge_obstruction_torsion", ag_t},
                      {"f0_total_flux_2pi_units", f0}}
                     .dump(2)
              << "\n";
    return 0;
}

int cmd_dump_green(const std::string& object_path, const std::string& cell_spec,
                   const std::string& direction) {
    SpacetimeObject obj = load_object(object_path);
    const CubicalComplex& cx = *obj.cx;
    auto colon = cell_spec.find(':');
    int degree = colon == std::string::npos ? 1 : std::stoi(cell_spec.substr(0, colon));
    int cell = std::stoi(colon == std::string::npos ? cell_spec : cell_spec.substr(colon + 1));
    if (degree < 0 || degree > cx.dim() || cell < 0 || cell >= cx.num_cells(degree)) {
        std::cerr << "OutOfBounds: no " << degree << "-cell " << cell << "\n";
        return 2;
    }
    Cochain src(cx, degree, 1);
    src.comp[0][cell] = 1;
    GreenDirection dir =
        direction == "advanced" ? GreenDirection::ADVANCED : GreenDirection::RETARDED;
    Cochain u = green(*obj.ops, dir, src);
    std::cout << "cell,slab,value\n";
    for (int i = 0; i < cx.num_cells(degree); ++i)
        if (u.comp[0][i] != 0)
            std::cout << i << "," << cx.time_level(degree, i) << "," << rat_str(u.comp[0][i])
                      << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice model of Abelian principal connections"};
    app.require_subcommand(1);

    std::string config_path, object_path, cell_spec, direction = "retarded";
    auto* run = app.add_subcommand("run", "run the suites of a config");
    run->add_option("config", config_path, "config JSON path")->required();
    auto* desc = app.add_subcommand("describe", "print invariants of an object");
    desc->add_option("object", object_path, "object JSON path")->required();
    auto* dump = app.add_subcommand("dump-green", "CSV dump of a unit-source Green solve");
    dump->add_option("object", object_path, "object JSON path")->required();
    dump->add_option("cell", cell_spec, "degree:cell-id (default degree 1)")->required();
    dump->add_option("--direction", direction, "retarded|advanced");

    CLI11_PARSE(app, argc, argv);
    try {
        if (run->parsed()) return cmd_run(config_path);
        if (desc->parsed()) return cmd_describe(object_path);
        if (dump->parsed()) return cmd_dump_green(object_path, cell_spec, direction);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
