#include "pg4/catalog.hpp"
#include "pg4/classify.hpp"
#include "pg4/counting.hpp"
#include "pg4/orbits.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pg4;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "pg4/1";

// Error raised for malformed user input; exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupSpec parse_spec(const std::string& text) {
    try {
        return GroupSpec::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Vec4 parse_point(const std::string& text) {
    Vec4 v{};
    std::stringstream in(text);
    std::string tok;
    int k = 0;
    while (std::getline(in, tok, ',')) {
        if (k == 4) throw UsageError("point needs 4 comma-separated numbers");
        try {
            std::size_t used = 0;
            v[k++] = std::stod(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad coordinate '" + tok + "'");
        }
    }
    if (k != 4) throw UsageError("point needs 4 comma-separated numbers");
    if (dot4(v, v) < 1e-18) throw UsageError("point must be non-zero");
    return normalize4(v);
}

Vec4 start_point(const PointGroup& g, const std::string& point, const std::string& center) {
    if (!point.empty() && !center.empty()) throw UsageError("--point and --center are exclusive");
    if (!point.empty()) return parse_point(point);
    if (!center.empty()) {
        CenterKind c;
        try {
            c = parse_center_kind(center);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        return circle_sample(orbit_circle(g, rotation_center(g, c)), 0);
    }
    return default_start();
}

json vec_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }

// A JSON array of transformations, an object with "generators", or one
// transformation per line.
std::vector<Transform4> read_generators(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    std::vector<json> items;
    json whole = json::parse(text, nullptr, false);
    if (!whole.is_discarded() && whole.is_array()) {
        items.assign(whole.begin(), whole.end());
    } else if (!whole.is_discarded() && whole.is_object() && whole.contains("generators")) {
        if (!whole["generators"].is_array()) throw UsageError("\"generators\" must be an array");
        items.assign(whole["generators"].begin(), whole["generators"].end());
    } else {
        std::istringstream lines(text);
        std::string line;
        int number = 0;
        while (std::getline(lines, line)) {
            ++number;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json j = json::parse(line, nullptr, false);
            if (j.is_discarded()) throw UsageError("invalid JSON on line " + std::to_string(number));
            items.push_back(j);
        }
    }
    if (items.empty()) throw UsageError("no generators in '" + path + "'");
    std::vector<Transform4> gens;
    try {
        for (const auto& x : items) gens.push_back(transform_from_json(x));
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return gens;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"4D point groups: catalog, classification, counting and orbit geometry"};
    app.require_subcommand(1);

    std::string spec_text, point, center, gen_file, format = "off", out_path;
    long long number = 0, max_order = 0;
    bool breakdown = false, self_mirror = false, elements = false, check_fp = false;

    auto* build_cmd = app.add_subcommand("build", "Generate a catalog group; prints order, chirality, fingerprint");
    build_cmd->add_option("spec", spec_text, "Group spec")->required();
    build_cmd->add_flag("--elements", elements, "Include all elements");

    auto* fp_cmd = app.add_subcommand("fingerprint", "Print the fingerprint of a catalog group");
    fp_cmd->add_option("spec", spec_text, "Group spec")->required();

    auto* cls_cmd = app.add_subcommand("classify", "Identify the group generated by the given transformations");
    cls_cmd->add_option("--generators", gen_file, "JSON file of generators")->required();

    auto* count_cmd = app.add_subcommand("count", "Number of groups of order N");
    count_cmd->add_option("N", number, "Order")->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--breakdown", breakdown, "Per-family counts");
    count_cmd->add_flag("--self-mirror", self_mirror, "Chiral toroidal groups equal to their mirror image");

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a point");
    orbit_cmd->add_option("spec", spec_text, "Group spec")->required();
    orbit_cmd->add_option("--point", point, "Start point x,y,z,w");
    orbit_cmd->add_option("--center", center, "Start on the circle over a rotation center: 5, 4, 3I, 3II, 2");

    auto* cell_cmd = app.add_subcommand("cell", "Cell of the polar orbit polytope at the start point");
    cell_cmd->add_option("spec", spec_text, "Group spec")->required();
    cell_cmd->add_option("--point", point, "Start point x,y,z,w");
    cell_cmd->add_option("--center", center, "Start on the circle over a rotation center");
    cell_cmd->add_option("--format", format, "off or obj")->check(CLI::IsMember({"off", "obj"}));
    cell_cmd->add_option("--out", out_path, "Output file (default stdout)");

    auto* cat_cmd = app.add_subcommand("catalog", "List catalog groups up to an order");
    cat_cmd->add_option("--max-order", max_order, "Largest order")->required()->check(CLI::PositiveNumber);
    cat_cmd->add_flag("--check-fingerprints", check_fp, "Report groups of equal order with equal fingerprints");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::cerr << "error: " << msg.substr(0, msg.find('\n')) << "\n";
        return 1;
    }

    try {
        if (*build_cmd) {
            GroupSpec sp = parse_spec(spec_text);
            PointGroup g = build(sp);
            json j{{"schema", kSchema},
                   {"spec", sp.str()},
                   {"order", g.order()},
                   {"chiral", g.is_chiral()},
                   {"fingerprint", fingerprint(g).str()}};
            json gens = json::array();
            for (const auto& t : g.generators()) gens.push_back(transform_to_json(t));
            j["generators"] = gens;
            if (elements) {
                json el = json::array();
                for (const auto& t : g.elements()) el.push_back(t.str());
                j["elements"] = el;
            }
            std::cout << j.dump(2) << "\n";
        } else if (*fp_cmd) {
            std::cout << fingerprint(build(parse_spec(spec_text))).str() << "\n";
        } else if (*cls_cmd) {
            PointGroup g = generate(read_generators(gen_file));
            GroupSpec sp = classify(g);
            json j{{"schema", kSchema},
                   {"spec", sp.str()},
                   {"category", category_name(category(g))},
                   {"order", g.order()},
                   {"fingerprint", fingerprint(g).str()}};
            std::cout << j.dump(2) << "\n";
        } else if (*count_cmd) {
            json j = census_to_json(count_order(number), breakdown);
            if (self_mirror) {
                SelfMirrorCount s = count_self_mirror(number);
                j["self_mirror"] = {{"total", s.total()}, {"1", s.plain}, {".", s.dot}, {"X", s.cross}};
            }
            std::cout << j.dump(2) << "\n";
        } else if (*orbit_cmd) {
            GroupSpec sp = parse_spec(spec_text);
            PointGroup g = build(sp);
            Orbit o = orbit(g, start_point(g, point, center));
            json pts = json::array();
            for (const auto& x : o.points) pts.push_back({{"point", vec_json(x)}});
            json j{{"schema", kSchema}, {"spec", sp.str()}, {"base", vec_json(o.base)}, {"size", o.points.size()},
                   {"points", pts}};
            std::cout << j.dump(2) << "\n";
        } else if (*cell_cmd) {
            GroupSpec sp = parse_spec(spec_text);
            PointGroup g = build(sp);
            Orbit o = orbit(g, start_point(g, point, center));
            Mesh m = polar_cell(o, o.base);
            MeshFormat f = format == "obj" ? MeshFormat::Obj : MeshFormat::Off;
            if (out_path.empty()) {
                export_mesh(m, f, std::cout);
            } else {
                std::ofstream out(out_path);
                if (!out) throw UsageError("cannot write '" + out_path + "'");
                export_mesh(m, f, out);
                json j{{"schema", kSchema},   {"spec", sp.str()},         {"out", out_path},
                       {"vertices", m.vertices.size()}, {"faces", m.faces.size()}, {"edges", m.edge_count()}};
                std::cout << j.dump(2) << "\n";
            }
        } else if (*cat_cmd) {
            json list = json::array();
            for (const auto& sp : list_catalog(max_order)) list.push_back({{"spec", sp.str()}, {"order", spec_order(sp)}});
            json j{{"schema", kSchema}, {"max_order", max_order}, {"specs", list}};
            if (check_fp) {
                json coll = json::array();
                for (const auto& c : fingerprint_collisions(max_order)) {
                    json names = json::array();
                    for (const auto& sp : c.specs) names.push_back(sp.str());
                    coll.push_back({{"order", c.order}, {"fingerprint", c.fingerprint}, {"specs", names}});
                }
                j["fingerprint_collisions"] = coll;
            }
            std::cout << j.dump(2) << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
