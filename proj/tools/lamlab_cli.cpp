// SPDX-License-Identifier: Apache-2.0
// lamlab: hull, level, witness, staircase, build, measure and sweep from the command line.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamlab/boxset_json.hpp"
#include "lamlab/construct.hpp"
#include "lamlab/errors.hpp"
#include "lamlab/fem.hpp"
#include "lamlab/harness.hpp"
#include "lamlab/lamhull.hpp"
#include "lamlab/log.hpp"
#include "lamlab/rational.hpp"

namespace {

using namespace lamlab;
using nlohmann::json;

constexpr int kExitParam = 2;
constexpr int kExitLevel = 3;

std::vector<double> parse_numbers(const std::string& text, const char* what) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(to_double(parse_rational(item)));
        } catch (const ParameterError&) {
            throw ParameterError(std::string("bad number '") + item + "' in " + what);
        }
    }
    return out;
}

struct DomainArgs {
    std::string rect;
    std::string polygon;

    Polygon make() const {
        if (!rect.empty() && !polygon.empty()) throw ParameterError("give either --rect or --polygon");
        if (!polygon.empty()) {
            std::vector<Vec2> v;
            std::string pt;
            std::stringstream ss(polygon);
            while (std::getline(ss, pt, ';')) {
                const auto c = parse_numbers(pt, "--polygon");
                if (c.size() != 2) throw ParameterError("--polygon vertices are 'x,y' separated by ';'");
                v.push_back({c[0], c[1]});
            }
            return Polygon(std::move(v));
        }
        if (!rect.empty()) {
            const auto c = parse_numbers(rect, "--rect");
            if (c.size() != 4) throw ParameterError("--rect needs x0,y0,x1,y1");
            return Polygon::rectangle(c[0], c[1], c[2], c[3]);
        }
        return Polygon::unit_square();
    }
};

void add_domain(CLI::App* sub, DomainArgs& d) {
    sub->add_option("--rect", d.rect, "Rectangle x0,y0,x1,y1 (default 0,0,1,1)");
    sub->add_option("--polygon", d.polygon, "Polygon vertices x,y;x,y;...");
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ParameterError("cannot write '" + path + "'");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

json tree_to_json(const WitnessTree& t) {
    json nodes = json::array();
    for (const auto& n : t.nodes) {
        json j;
        j["value"] = json::array({rational_to_json(n.value.d1), rational_to_json(n.value.d2)});
        j["in_k"] = n.in_k;
        j["level"] = n.level;
        if (!n.is_leaf()) {
            j["weight"] = rational_to_json(n.weight);
            j["direction"] = n.direction;
            j["left"] = n.left;
            j["right"] = n.right;
        }
        nodes.push_back(std::move(j));
    }
    json sigma = json::array();
    for (const auto& s : t.sigma()) sigma.push_back(json::array({rational_to_json(s.d1), rational_to_json(s.d2)}));
    return {{"L", t.lamination_level}, {"top", to_string(t.top)}, {"root", t.root},
            {"depth", t.depth()},      {"leaves", t.leaf_count()},  {"sigma", sigma},
            {"nodes", nodes}};
}

json report_json(const CaseReport& r) {
    json j = to_json(r);
    if (!r.extra_energy.empty()) j["extra_energy"] = r.extra_energy;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lamination hulls, laminate constructions and finite element bad-set measurement"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", "lamlab 0.1.0");

    std::string input, out, format = "json", h_list;
    int level_i = 1, cap = kDefaultLevelCap, n = 1, jobs = 1;
    double h = 0.0, tol = kDefaultTol;
    std::optional<double> alpha;
    std::vector<int> k_list;
    bool timing = false;
    DomainArgs dom;

    auto* hull = app.add_subcommand("hull", "Print the i-th lamination hull of K");
    hull->add_option("input", input, "K as JSON")->required();
    hull->add_option("--i", level_i, "Hull level")->check(CLI::NonNegativeNumber);
    hull->add_option("--out", out, "Output path (default stdout)");

    auto* level = app.add_subcommand("level", "Print the lamination level of K");
    level->add_option("input", input, "K as JSON")->required();
    level->add_option("--cap", cap, "Largest level tried")->check(CLI::NonNegativeNumber);

    auto* witness = app.add_subcommand("witness", "Print a witness set and its lamination tree");
    witness->add_option("input", input, "K as JSON")->required();
    witness->add_option("--cap", cap, "Largest level tried")->check(CLI::NonNegativeNumber);
    witness->add_option("--out", out, "Output path (default stdout)");

    auto* stair = app.add_subcommand("staircase", "Emit the n-point staircase set of level n");
    stair->add_option("--n", n, "Level")->required()->check(CLI::PositiveNumber);
    stair->add_option("--out", out, "Output path (default stdout)");

    auto add_case = [&](CLI::App* sub) {
        sub->add_option("input", input, "K as JSON")->required();
        sub->add_option("--alpha", alpha, "Period exponent override");
        sub->add_option("--k", k_list, "Strip counts k_2..k_L override")->delimiter(',');
        sub->add_option("--tol", tol, "Gradient membership tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--cap", cap, "Largest level tried")->check(CLI::NonNegativeNumber);
        sub->add_option("--out", out, "Output path (default stdout)");
        add_domain(sub, dom);
    };

    auto* build = app.add_subcommand("build", "Construct the candidate on a mesh and write it as VTK");
    add_case(build);
    build->add_option("--h", h, "Mesh size")->required()->check(CLI::PositiveNumber);

    auto* meas = app.add_subcommand("measure", "Measure the bad set of the candidate");
    add_case(meas);
    meas->add_option("--h", h, "Mesh size")->required()->check(CLI::PositiveNumber);
    meas->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    meas->add_flag("--timing", timing, "Record wall-clock runtime");

    auto* sw = app.add_subcommand("sweep", "Convergence table over mesh sizes");
    add_case(sw);
    sw->add_option("--h-list", h_list, "e.g. 2^-5..2^-10 or 0.1,0.05")->required();
    sw->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    sw->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));
    sw->add_flag("--timing", timing, "Record wall-clock runtime");
    sw->callback([&] {
        if (sw->count("--format") == 0) format = "csv";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParam;
    }

    try {
        init_logging_from_env();
        CaseOptions opt;
        opt.alpha = alpha;
        if (!k_list.empty()) opt.k_list = k_list;
        opt.tol = tol;
        opt.cap = cap;
        opt.timing = timing;

        if (*hull) {
            const BoxSet k = read_boxset_file(input);
            Output o(out);
            o.os() << boxset_to_json(lamination_hull(k, level_i)).dump() << '\n';
        } else if (*level) {
            const Level l = lamination_level(read_boxset_file(input), cap);
            if (!l.is_finite()) {
                std::cout << "L > " << cap << '\n';
                std::cerr << "lamlab: 0 is not in the hull of level " << cap << '\n';
                return kExitLevel;
            }
            std::cout << "L = " << l.value() << '\n';
        } else if (*witness) {
            const WitnessTree t = extract_witness(read_boxset_file(input), cap);
            Output o(out);
            o.os() << tree_to_json(t).dump(2) << '\n';
        } else if (*stair) {
            Output o(out);
            o.os() << boxset_to_json(staircase(n)).dump() << '\n';
        } else if (*build) {
            if (out.empty()) throw ParameterError("build needs --out for the VTK file");
            const Polygon domain = dom.make();
            const PreparedCase pc = prepare_case(read_boxset_file(input), cap);
            check_admissible(h, alpha.value_or(1.0 / (1.0 + pc.tree.lamination_level)), domain);
            const Params p = case_params(pc, h, opt);
            const Field f = build_field(pc.tree, p, h, domain);
            const Mesh m = make_mesh(domain, h);
            const FEFunction u = interpolate(f, m);
            write_vtk_file(out, u, pc.sigma, tol);
            json s = {{"L", pc.tree.lamination_level},
                      {"top", to_string(pc.tree.top)},
                      {"alpha", p.alpha},
                      {"k_list", p.k_list},
                      {"triangles", m.triangle_count()},
                      {"mesh_h", m.h},
                      {"lipschitz", f.info().lipschitz},
                      {"unresolved", f.info().unresolved},
                      {"E_h", bad_measure(u, pc.sigma, tol)},
                      {"vtk", out}};
            std::cout << s.dump() << '\n';
        } else if (*meas) {
            const CaseReport r = run_case(read_boxset_file(input), dom.make(), h, opt);
            Output o(out);
            if (format == "csv") {
                o.os() << emit_csv(r);
            } else {
                o.os() << report_json(r).dump(2) << '\n';
            }
        } else if (*sw) {
            const SweepResult r = sweep(read_boxset_file(input), dom.make(), parse_h_list(h_list), opt, jobs);
            Output o(out);
            if (format == "csv") {
                o.os() << emit_csv(r);
            } else {
                o.os() << to_json(r).dump(2) << '\n';
            }
        }
    } catch (const AdmissibilityError& e) {
        std::cerr << "lamlab: " << e.what() << '\n';
        return kExitLevel;
    } catch (const LevelError& e) {
        std::cerr << "lamlab: " << e.what() << '\n';
        return kExitLevel;
    } catch (const ParameterError& e) {
        std::cerr << "lamlab: " << e.what() << '\n';
        return kExitParam;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "lamlab: " << e.what() << '\n';
        return kExitParam;
    } catch (const std::exception& e) {
        std::cerr << "lamlab: internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
