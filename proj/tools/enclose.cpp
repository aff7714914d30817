#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enclose/exact.hpp"
#include "enclose/generate.hpp"
#include "enclose/io.hpp"
#include "enclose/log.hpp"
#include "enclose/mincut.hpp"
#include "enclose/render.hpp"
#include "enclose/rounding.hpp"

namespace {

using namespace enclose;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

std::string coord_str(const Rational& r) {
    std::string s = r.num().get_str();
    if (!r.is_integer()) s += "/" + r.den().get_str();
    return s;
}

std::string point_str(const Point& p) {
    return "(" + coord_str(p.x) + ", " + coord_str(p.y) + ")";
}

ObstacleKind parse_kind(const std::string& s) {
    return s == "unit_disks" ? ObstacleKind::UnitDisks : ObstacleKind::Segments;
}

GenStructure parse_structure(const std::string& s) {
    if (s == "ring") return GenStructure::Ring;
    if (s == "nested") return GenStructure::Nested;
    return GenStructure::Random;
}

// exit 1 with a diagnostic naming a point no subset can enclose
int report_infeasible(const Instance& inst, const std::string& fallback) {
    auto in = enclosed_subset(inst.points, inst.obstacles);
    std::set<size_t> ok(in.begin(), in.end());
    for (size_t i = 0; i < inst.points.size(); ++i)
        if (!ok.count(i)) {
            std::cerr << "infeasible: point " << i << " at " << point_str(inst.points[i])
                      << " is not enclosed even by the full obstacle set\n";
            return 1;
        }
    std::cerr << "infeasible: " << fallback << "\n";
    return 1;
}

int cmd_gen(const std::string& kind, std::size_t n_obstacles, std::size_t n_points,
            std::uint64_t seed, const std::string& structure, const std::string& out) {
    Instance inst =
        generate_instance(parse_kind(kind), n_obstacles, n_points, seed, parse_structure(structure));
    write_output(out, serialize_instance(inst));
    log_info("generated " + std::to_string(inst.obstacles.size()) + " obstacles, " +
             std::to_string(inst.points.size()) + " points");
    return 0;
}

Solution dispatch_solve(const Instance& inst, const std::string& method,
                        const SolveOptions& opts) {
    const auto& obs = inst.obstacles;
    if (method == "mincut") {
        if (obs.kind != ObstacleKind::UnitDisks)
            throw MethodKindMismatch("mincut requires unit_disks obstacles");
        return solve_unit_disks(inst.points, obs.disks, opts);
    }
    if (method == "lp") {
        if (obs.kind != ObstacleKind::Segments)
            throw MethodKindMismatch("lp requires segment obstacles");
        return solve_segments(inst.points, obs.segments, opts);
    }
    auto r = exact_solve(inst.points, obs, opts.budget);
    if (!r.found) throw Infeasible("no obstacle subset encloses every point");
    Solution sol;
    sol.selected = r.witness;
    sol.method = "exact";
    sol.objective = long(r.size);
    return sol;
}

int cmd_solve(const std::string& in, const std::string& out, const std::string& method,
              const SolveOptions& opts) {
    Instance inst = parse_instance(read_file(in));
    Solution sol;
    try {
        sol = dispatch_solve(inst, method, opts);
    } catch (const Infeasible& e) {
        return report_infeasible(inst, e.what());
    }
    log_info(method + " selected " + std::to_string(sol.selected.size()) + " of " +
             std::to_string(inst.obstacles.size()) + " obstacles");
    write_output(out, serialize_solution(sol));
    return 0;
}

int cmd_check(const std::string& in, const std::string& solution_path) {
    Instance inst = parse_instance(read_file(in));
    Solution sol = parse_solution(read_file(solution_path));
    const auto& obs = inst.obstacles;
    for (int i : sol.selected)
        if (std::size_t(i) >= obs.size())
            throw ParseError("selected index " + std::to_string(i) + " out of range");

    ObstacleSet sub;
    sub.kind = obs.kind;
    for (int i : sol.selected) {
        if (obs.kind == ObstacleKind::UnitDisks)
            sub.disks.push_back(obs.disks[i]);
        else
            sub.segments.push_back(obs.segments[i]);
    }

    int bad = 0;
    for (size_t i = 0; i < inst.points.size(); ++i) {
        bool in_region = obs.kind == ObstacleKind::UnitDisks
                             ? is_enclosed_unit_disks(inst.points[i], sub.disks)
                             : is_enclosed_segments(inst.points[i], sub.segments);
        std::cout << "point " << i << " " << point_str(inst.points[i]) << ": "
                  << (in_region ? "enclosed" : "not enclosed") << "\n";
        bad += !in_region;
    }
    return bad ? 1 : 0;
}

int cmd_render(const std::string& in, const std::string& solution_path, const std::string& out) {
    Instance inst = parse_instance(read_file(in));
    std::string svg;
    if (!solution_path.empty()) {
        Solution sol = parse_solution(read_file(solution_path));
        for (int i : sol.selected)
            if (std::size_t(i) >= inst.obstacles.size())
                throw ParseError("selected index " + std::to_string(i) + " out of range");
        svg = render_svg(inst, &sol.selected);
    } else {
        svg = render_svg(inst);
    }
    write_output(out, svg);
    return 0;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

int cmd_bench(const std::string& dir, const std::string& out, const SolveOptions& opts,
              std::uint64_t exact_cap) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());

    nlohmann::json report;
    report["instances"] = nlohmann::json::array();
    std::map<std::string, std::vector<double>> ratios;

    for (const auto& f : files) {
        nlohmann::json row;
        row["file"] = f.filename().string();
        Instance inst;
        try {
            inst = parse_instance(read_file(f.string()));
        } catch (const Error& e) {
            log_info("skipping " + f.filename().string() + ": " + e.what());
            row["skipped"] = e.what();
            report["instances"].push_back(row);
            continue;
        }
        const auto& obs = inst.obstacles;
        row["kind"] = obs.kind == ObstacleKind::UnitDisks ? "unit_disks" : "segments";
        row["n_obstacles"] = obs.size();
        row["n_points"] = inst.points.size();

        bool infeasible = false;
        long exact_size = -1;
        if (obs.size() <= exact_cap) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                auto r = exact_solve(inst.points, obs, obs.size());
                if (!r.found) {
                    infeasible = true;
                } else {
                    exact_size = long(r.size);
                    row["exact"] = {{"size", exact_size}, {"ms", elapsed_ms(t0)}};
                }
            } catch (const Error& e) {
                row["exact_error"] = e.what();
            }
        }

        if (!infeasible) {
            std::string method = obs.kind == ObstacleKind::UnitDisks ? "mincut" : "lp";
            auto t0 = std::chrono::steady_clock::now();
            try {
                Solution sol = dispatch_solve(inst, method, opts);
                row[method] = {{"size", sol.objective}, {"ms", elapsed_ms(t0)}};
                if (exact_size > 0) {
                    double ratio = double(sol.objective) / double(exact_size);
                    row["ratio"] = ratio;
                    ratios[method].push_back(ratio);
                } else if (exact_size == 0) {
                    row["ratio"] = 1.0;
                    ratios[method].push_back(1.0);
                }
            } catch (const Infeasible&) {
                infeasible = true;
            } catch (const Error& e) {
                row[method + "_error"] = e.what();
            }
        }

        if (infeasible) row["infeasible"] = true;
        report["instances"].push_back(row);
    }

    report["aggregate"] = nlohmann::json::object();
    for (auto& [method, rs] : ratios) {
        std::sort(rs.begin(), rs.end());
        double median = rs.size() % 2 ? rs[rs.size() / 2]
                                      : 0.5 * (rs[rs.size() / 2 - 1] + rs[rs.size() / 2]);
        report["aggregate"][method] = {
            {"count", rs.size()}, {"max_ratio", rs.back()}, {"median_ratio", median}};
    }
    write_output(out, report.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"choose small obstacle subsets that enclose every query point"};
    app.require_subcommand(1);

    std::string kind = "unit_disks", structure = "ring";
    std::size_t n_obstacles = 6, n_points = 1;
    std::string in, out = "-", solution_path, method, dir;
    SolveOptions opts;
    std::uint64_t exact_cap = 12;

    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    gen->add_option("--kind", kind, "unit_disks or segments")
        ->check(CLI::IsMember({"unit_disks", "segments"}));
    gen->add_option("--obstacles", n_obstacles, "number of obstacles");
    gen->add_option("--points", n_points, "number of query points");
    gen->add_option("--structure", structure, "random, ring, or nested")
        ->check(CLI::IsMember({"random", "ring", "nested"}));
    gen->add_option("--seed", opts.seed, "generator seed");
    gen->add_option("--out", out, "output path, - for stdout");

    auto* solve = app.add_subcommand("solve", "solve an instance and write the solution");
    solve->add_option("--in", in, "instance file")->required();
    solve->add_option("--out", out, "output path, - for stdout");
    solve->add_option("--method", method, "mincut, lp, or exact")
        ->required()
        ->check(CLI::IsMember({"mincut", "lp", "exact"}));
    solve->add_option("--seed", opts.seed, "rounding seed");
    solve->add_option("--max-retries", opts.max_retries, "rounding retry cap");
    solve->add_option("--budget", opts.budget, "largest subset size exact search may try");

    auto* check = app.add_subcommand("check", "verify a solution against the exact oracle");
    check->add_option("--in", in, "instance file")->required();
    check->add_option("--solution", solution_path, "solution file")->required();

    auto* render = app.add_subcommand("render", "draw an instance as SVG");
    render->add_option("--in", in, "instance file")->required();
    render->add_option("--solution", solution_path, "optional solution file");
    render->add_option("--out", out, "output path, - for stdout");

    auto* bench = app.add_subcommand("bench", "run every applicable method over a directory");
    bench->add_option("--dir", dir, "directory of instance files")->required();
    bench->add_option("--out", out, "report path, - for stdout");
    bench->add_option("--seed", opts.seed, "rounding seed");
    bench->add_option("--max-retries", opts.max_retries, "rounding retry cap");
    bench->add_option("--budget", exact_cap, "largest obstacle count exact search runs on");

    try {
        app.parse(argc, argv);
        if (*gen) return cmd_gen(kind, n_obstacles, n_points, opts.seed, structure, out);
        if (*solve) return cmd_solve(in, out, method, opts);
        if (*check) return cmd_check(in, solution_path);
        if (*render) return cmd_render(in, solution_path, out);
        return cmd_bench(dir, out, opts, exact_cap);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MethodKindMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PointOnObstacle& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PointCoveredByObstacle& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Infeasible& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
