#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fanplanar/coloring.hpp"
#include "fanplanar/corpus.hpp"
#include "fanplanar/cycle_analysis.hpp"
#include "fanplanar/fanplanarity.hpp"
#include "fanplanar/intersection_graph.hpp"
#include "fanplanar/svg.hpp"

using namespace fanplanar;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kInternal = 2;
constexpr int kUsage = 3;

// Thrown to leave a command with a given exit code after printing a diagnostic.
struct Exit {
    int code;
};

[[noreturn]] void fail(int code, const std::string& message) {
    std::cerr << "fanplanar: " << message << "\n";
    throw Exit{code};
}

std::string load(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) fail(kUsage, "cannot read " + path);
    return read_file(path);
}

Drawing load_drawing(const std::string& path) {
    std::string text = load(path);
    try {
        return parse_drawing(text);
    } catch (const Error& e) {
        fail(kInvalid, path + ": " + e.what());
    }
}

void write_out(const std::optional<std::string>& path, const std::string& bytes) {
    if (!path) {
        std::cout << bytes;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out || !(out << bytes)) fail(kUsage, "cannot write " + *path);
}

void print(const ojson& j) { std::cout << j.dump(2) << "\n"; }

/// --cap wins over FANPLANAR_CAP; neither means unlimited.
std::optional<std::size_t> resolve_cap(const std::optional<std::size_t>& flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("FANPLANAR_CAP"); env && *env) {
        try {
            return static_cast<std::size_t>(std::stoull(env));
        } catch (const std::exception&) {
            fail(kUsage, std::string("FANPLANAR_CAP is not a number: ") + env);
        }
    }
    return std::nullopt;
}

Drawing require_valid(const std::string& path) {
    Drawing d = load_drawing(path);
    FanReport r = fan_report(d);
    if (!r.strongly_fan_planar) {
        print(to_json(d, r));
        fail(kInvalid, path + " is not strongly fan-planar");
    }
    return d;
}

int cmd_validate(const std::string& path) {
    Drawing d = load_drawing(path);
    FanReport r = fan_report(d);
    print(to_json(d, r));
    return r.strongly_fan_planar ? kOk : kInvalid;
}

struct AnalyzeFlags {
    std::size_t min_len = 4;
    std::optional<std::size_t> max_len;
    std::string parity = "any";
    std::optional<std::size_t> cap;
};

int cmd_analyze(const std::string& path, const AnalyzeFlags& f) {
    Drawing d = require_valid(path);
    CrossingSet cs = compute_crossings(d);
    IGraph g = build_igraph(d, cs);
    EnumerationOptions opt;
    opt.min_len = f.min_len;
    opt.max_len = f.max_len;
    opt.parity = f.parity == "odd" ? Parity::Odd : f.parity == "even" ? Parity::Even : Parity::Any;
    opt.cap = resolve_cap(f.cap);

    std::vector<ChordlessCycle> cycles = enumerate_chordless_cycles(g, opt);
    auto triangles = find_triangles(g);
    ojson j;
    j["edge_count"] = d.edge_count();
    j["crossing_count"] = cs.crossings.size();
    j["triangles"] = triangles.size();
    j["cycle_count"] = cycles.size();
    ojson by_length = ojson::object();
    for (const auto& c : cycles) {
        std::string key = std::to_string(c.length());
        by_length[key] = by_length.value(key, 0) + 1;
    }
    j["lengths"] = std::move(by_length);
    ojson reports = ojson::array();
    bool broken = !triangles.empty();
    for (const auto& c : cycles) {
        CycleGeometry geom = analyze_cycle(d, cs, g, c);
        ojson r = cycle_report_json(d, cs, geom);
        broken = broken || !r["violations"].empty() || r["class"] == "STRUCTURE_VIOLATION";
        reports.push_back(std::move(r));
    }
    j["cycles"] = std::move(reports);
    print(j);
    if (broken) fail(kInternal, "invariant violations in a validated drawing");
    return kOk;
}

int cmd_color(const std::string& path, bool verify, const std::optional<std::string>& layers_out,
              const std::optional<std::size_t>& cap) {
    Drawing d = require_valid(path);
    EdgeColoring col = three_color(d, resolve_cap(cap));
    if (verify && !verify_coloring(d, col).empty()) fail(kInternal, "coloring has monochromatic crossings");
    std::vector<Layer> layers = planar_layers(d, col);
    if (layers_out) {
        std::error_code ec;
        std::filesystem::create_directories(*layers_out, ec);
        for (const Layer& l : layers)
            write_out(*layers_out + "/layer" + std::to_string(l.color) + ".json", write_drawing(l.drawing));
    }
    print(coloring_json(d, col, layers));
    return kOk;
}

int cmd_render(const std::string& path, const std::optional<std::string>& coloring, const std::optional<std::string>& out) {
    Drawing d = load_drawing(path);
    std::optional<std::map<std::string, int>> colors;
    if (coloring) {
        ojson j;
        try {
            j = ojson::parse(load(*coloring));
        } catch (const nlohmann::json::exception& e) {
            fail(kInvalid, *coloring + ": " + e.what());
        }
        if (!j.contains("colors") || !j["colors"].is_object()) fail(kInvalid, *coloring + ": no colors object");
        colors.emplace();
        for (auto it = j["colors"].begin(); it != j["colors"].end(); ++it) {
            if (!it.value().is_number_integer()) fail(kInvalid, *coloring + ": color of " + it.key() + " is not an integer");
            (*colors)[it.key()] = it.value().get<int>();
        }
    }
    write_out(out, render_svg(d, colors));
    return kOk;
}

struct GenerateFlags {
    int k = 5;
    std::string name;
    GenParams params;
    std::optional<std::string> out;
};

int cmd_generate(const std::string& kind, const GenerateFlags& f) {
    if (kind == "fully-canonical") {
        try {
            write_out(f.out, write_drawing(gen_fully_canonical(f.k)));
        } catch (const Error& e) {
            fail(kUsage, e.what());
        }
    } else if (kind == "named") {
        std::string path;
        try {
            path = named_path(f.name);
        } catch (const Error& e) {
            fail(kUsage, e.what());
        }
        write_out(f.out, load(path));
    } else if (kind == "random") {
        std::optional<Drawing> d;
        try {
            d = gen_random(f.params);
        } catch (const Error& e) {
            fail(kUsage, e.what());
        }
        if (!d) fail(kInvalid, "no strongly fan-planar candidate within the attempt budget");
        write_out(f.out, write_drawing(*d));
    } else {
        fail(kUsage, "unknown generator kind " + kind);
    }
    return kOk;
}

int cmd_oracle(const std::string& path, std::size_t node_limit) {
    Drawing d = load_drawing(path);
    SimplicityReport s = validate_simplicity(d);
    if (!s.ok) fail(kInvalid, path + " is not a simple drawing");
    CrossingSet cs = compute_crossings(d);
    IGraph g = build_igraph(d, cs);
    ojson j;
    j["nodes"] = g.size();
    j["adjacencies"] = g.adjacency_count();
    j["chromatic_number"] = chromatic_number_bruteforce(g, node_limit);
    print(j);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly fan-planar drawings: validation, chordless cycles, 3-coloring"};
    app.require_subcommand(1);

    std::string path;
    auto* validate = app.add_subcommand("validate", "check simplicity and the forbidden patterns");
    validate->add_option("drawing", path, "drawing JSON")->required();

    AnalyzeFlags af;
    auto* analyze = app.add_subcommand("analyze", "chordless cycle census with per-cycle audit");
    analyze->add_option("drawing", path, "drawing JSON")->required();
    analyze->add_option("--min-len", af.min_len)->check(CLI::Range(4, 1 << 20));
    analyze->add_option("--max-len", af.max_len);
    analyze->add_option("--parity", af.parity)->check(CLI::IsMember({"any", "odd", "even"}));
    analyze->add_option("--cap", af.cap);

    bool verify = false;
    std::optional<std::string> layers_out;
    std::optional<std::size_t> color_cap;
    auto* color = app.add_subcommand("color", "edge coloring without monochromatic crossings");
    color->add_option("drawing", path, "drawing JSON")->required();
    color->add_flag("--verify", verify, "re-check the coloring before exiting");
    color->add_option("--layers-out", layers_out, "directory for one drawing per color");
    color->add_option("--cap", color_cap);

    std::optional<std::string> coloring_file, svg_out;
    auto* render = app.add_subcommand("render", "SVG figure");
    render->add_option("drawing", path, "drawing JSON")->required();
    render->add_option("--coloring", coloring_file, "output of the color command");
    render->add_option("--out", svg_out);

    std::string kind;
    GenerateFlags gf;
    auto* generate = app.add_subcommand("generate", "write a corpus drawing");
    generate->add_option("kind", kind)->required()->check(CLI::IsMember({"fully-canonical", "named", "random"}));
    generate->add_option("--k", gf.k);
    generate->add_option("--name", gf.name);
    generate->add_option("--seed", gf.params.seed);
    generate->add_option("--vertices", gf.params.vertices);
    generate->add_option("--edges", gf.params.edges);
    generate->add_option("--bends", gf.params.bends);
    generate->add_option("--bound", gf.params.bound);
    generate->add_option("--attempts", gf.params.attempts);
    generate->add_option("--out", gf.out);

    std::size_t node_limit = 24;
    auto* oracle = app.add_subcommand("oracle", "exact chromatic number of the intersection graph");
    oracle->add_option("drawing", path, "drawing JSON")->required();
    oracle->add_option("--node-limit", node_limit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*validate) return cmd_validate(path);
        if (*analyze) return cmd_analyze(path, af);
        if (*color) return cmd_color(path, verify, layers_out, color_cap);
        if (*render) return cmd_render(path, coloring_file, svg_out);
        if (*generate) return cmd_generate(kind, gf);
        if (*oracle) return cmd_oracle(path, node_limit);
    } catch (const Exit& e) {
        return e.code;
    } catch (const Error& e) {
        std::cerr << "fanplanar: " << e.what() << "\n";
        switch (e.code()) {
        case ErrorCode::StructureViolation:
        case ErrorCode::NoGroundEdge:
        case ErrorCode::KeyLemmaViolation:
        case ErrorCode::OddCycleSurvives:
            return kInternal;
        case ErrorCode::Io:
            return kUsage;
        default:
            return kInvalid;
        }
    }
    return kUsage;
}
