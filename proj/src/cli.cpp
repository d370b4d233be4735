#include "mbtree/cli.hpp"

#include <deque>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mbtree/bundle.hpp"
#include "mbtree/collar.hpp"
#include "mbtree/export.hpp"
#include "mbtree/textio.hpp"

namespace mbt::cli {

namespace {

using nlohmann::ordered_json;

// Exact decimal output: plain number while it fits, string beyond that.
ordered_json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::vector<long long> bfs_from(const TreeBox& box, int start) {
    std::vector<long long> dist(box.vertex_count(), -1);
    std::deque<int> queue{start};
    dist[start] = 0;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int next : box.adjacency[cur]) {
            if (dist[next] >= 0) continue;
            dist[next] = dist[cur] + 1;
            queue.push_back(next);
        }
    }
    return dist;
}

std::string matrix_echo(const std::array<Int, 4>& m) {
    std::ostringstream os;
    os << m[0] << "," << m[1] << ";" << m[2] << "," << m[3];
    return os.str();
}

ordered_json witness_json(const Witness& w) {
    ordered_json j;
    j["x"] = json_int(w.pair.x);
    j["y"] = json_int(w.pair.y);
    j["value"] = json_int(w.value);
    return j;
}

std::string witness_text(const Witness& w) {
    std::ostringstream os;
    os << "witness=(" << w.pair.x << "," << w.pair.y << ") value=" << w.value;
    return os.str();
}

}  // namespace

VerifyReport run_verify(const Int& p_bound, const Int& q_bound) {
    TreeBox box = build_box_graph(p_bound, q_bound);
    VerifyReport rep;
    rep.p_bound = p_bound;
    rep.q_bound = q_bound;
    rep.vertex_count = box.vertex_count();
    rep.edge_count = box.edge_count();

    TreeReport tree = verify_tree(box);
    rep.connected = tree.connected;
    rep.acyclic = tree.acyclic;
    rep.odd_parent_unique = tree.odd_parent_unique;

    rep.descent_matches_bfs = true;
    rep.p_increasing = true;
    for (std::size_t i = 0; i < box.vertex_count(); ++i) {
        GeodesicPath path = path_to_root(box.vertices[i]);
        if (Int(path.length()) != box.root_distance[i])
            rep.descent_matches_bfs = false;
        for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k)
            if (!(abs(path.vertices[k].p()) > abs(path.vertices[k + 1].p())))
                rep.p_increasing = false;
    }

    const std::vector<TreeVertex> anchors = {
        {0, 1}, {1, 1}, {-1, 1}, {2, 1}, {-2, 1}};
    // Distances to the anchors; BFS over the box is the independent route
    // whenever the anchors fit inside it.
    std::vector<std::vector<long long>> by_anchor;
    bool use_bfs = p_bound >= 2;
    if (use_bfs)
        for (const TreeVertex& a : anchors)
            by_anchor.push_back(bfs_from(box, box.index.at(a)));

    rep.classification_matches = true;
    for (std::size_t i = 0; i < box.vertex_count(); ++i) {
        const TreeVertex& v = box.vertices[i];
        Int best = -1;
        std::size_t best_anchor = 0;
        bool tie = false;
        for (std::size_t a = 0; a < anchors.size(); ++a) {
            Int d = use_bfs ? Int(by_anchor[a][i]) : distance(v, anchors[a]);
            if (best < 0 || d < best) {
                best = d;
                best_anchor = a;
                tie = false;
            } else if (d == best) {
                tie = true;
            }
        }
        if (tie || !(anchors[best_anchor] == classify(v).anchor)) {
            rep.classification_matches = false;
            break;
        }
    }

    rep.edge_slope_law = true;
    for (const auto& [i, j] : box.edges) {
        if (intersection_number(slope_of_vertex(box.vertices[i]),
                                slope_of_vertex(box.vertices[j])) != 2) {
            rep.edge_slope_law = false;
            break;
        }
    }
    return rep;
}

namespace {

int cmd_genus(const std::string& slope_text, const std::string& format,
              std::ostream& out) {
    BoundarySlope s = parse_slope(slope_text);
    Int g = genus(s);
    if (format == "json") {
        ordered_json doc;
        doc["slope"] = format_slope(s);
        doc["genus"] = json_int(g);
        out << doc.dump(2) << "\n";
    } else {
        out << g << "\n";
    }
    return 0;
}

int cmd_path(const std::string& from_text, const std::string& to_text,
             const std::string& format, std::ostream& out) {
    TreeVertex from = parse_vertex(from_text);
    TreeVertex to = parse_vertex(to_text);
    GeodesicPath path = path_between(from, to);
    if (format == "json") {
        ordered_json doc;
        doc["from"] = format_vertex(from);
        doc["to"] = format_vertex(to);
        doc["distance"] = json_int(Int(path.length()));
        doc["vertices"] = ordered_json::array();
        for (const TreeVertex& v : path.vertices)
            doc["vertices"].push_back(format_vertex(v));
        out << doc.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < path.vertices.size(); ++i)
            out << (i ? " " : "") << format_vertex(path.vertices[i]);
        out << "\n";
    }
    return 0;
}

int cmd_compress(const std::string& slope_text, const std::string& format,
                 std::ostream& out) {
    BoundarySlope s = parse_slope(slope_text);
    BoundarySlope down = compress(s);
    if (format == "json") {
        ordered_json doc;
        doc["slope"] = format_slope(s);
        doc["compressed"] = format_slope(down);
        out << doc.dump(2) << "\n";
    } else {
        out << format_slope(down) << "\n";
    }
    return 0;
}

int cmd_bands(const std::string& slope_text, const std::string& format,
              std::ostream& out) {
    BoundarySlope s = parse_slope(slope_text);
    std::vector<BandDescriptor> bands = band_decomposition(s);
    if (format == "json") {
        ordered_json doc;
        doc["slope"] = format_slope(s);
        doc["bands"] = ordered_json::array();
        for (const BandDescriptor& b : bands)
            doc["bands"].push_back(
                ordered_json::array({json_int(b.a), json_int(b.b)}));
        out << doc.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < bands.size(); ++i) {
            if (i) out << " ";
            out << "(" << bands[i].a << "," << bands[i].b << ")";
        }
        out << "\n";
    }
    return 0;
}

int cmd_regions(const std::string& inner_text, const std::string& outer_text,
                const std::string& format, std::ostream& out) {
    Curve inner = parse_curve(inner_text);
    Curve outer = parse_curve(outer_text);
    RegionDecomposition rd = region_decomposition(inner, outer);
    if (format == "json") {
        ordered_json doc;
        doc["inner"] = format_curve(rd.inner);
        doc["outer"] = format_curve(rd.outer);
        doc["normalizer"] = ordered_json::array(
            {ordered_json::array(
                 {json_int(rd.normalizer.a()), json_int(rd.normalizer.b())}),
             ordered_json::array(
                 {json_int(rd.normalizer.c()), json_int(rd.normalizer.d())})});
        doc["slopes"] = ordered_json::array();
        for (const BoundarySlope& s : rd.slopes)
            doc["slopes"].push_back(format_slope(s));
        doc["bands"] = ordered_json::array();
        for (const BandDescriptor& b : rd.bands)
            doc["bands"].push_back(
                ordered_json::array({json_int(b.a), json_int(b.b)}));
        doc["genus"] = json_int(rd.genus);
        out << doc.dump(2) << "\n";
    } else {
        out << "inner: " << format_curve(rd.inner) << "\n";
        out << "outer: " << format_curve(rd.outer) << "\n";
        std::ostringstream nm;
        nm << "[[" << rd.normalizer.a() << "," << rd.normalizer.b() << "],["
           << rd.normalizer.c() << "," << rd.normalizer.d() << "]]";
        out << "normalizer: " << nm.str() << "\n";
        out << "slopes:";
        for (const BoundarySlope& s : rd.slopes) out << " " << format_slope(s);
        out << "\n";
        out << "bands:";
        for (const BandDescriptor& b : rd.bands)
            out << " (" << b.a << "," << b.b << ")";
        out << "\n";
        out << "genus: " << rd.genus << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& vertex_text, const std::string& format,
                 std::ostream& out) {
    TreeVertex v = parse_vertex(vertex_text);
    BranchClass bc = classify(v);
    if (format == "json") {
        ordered_json doc;
        doc["vertex"] = format_vertex(v);
        doc["label"] = to_string(bc.label);
        doc["anchor"] = format_vertex(bc.anchor);
        out << doc.dump(2) << "\n";
    } else {
        out << to_string(bc.label) << " " << format_vertex(bc.anchor) << "\n";
    }
    return 0;
}

int cmd_neighbors(const std::string& vertex_text, long long bound,
                  const std::string& format, std::ostream& out) {
    TreeVertex v = parse_vertex(vertex_text);
    std::vector<TreeVertex> list = neighbors(v, bound);
    if (format == "json") {
        ordered_json doc;
        doc["vertex"] = format_vertex(v);
        doc["bound"] = bound;
        doc["neighbors"] = ordered_json::array();
        for (const TreeVertex& w : list)
            doc["neighbors"].push_back(format_vertex(w));
        out << doc.dump(2) << "\n";
    } else {
        for (const TreeVertex& w : list) out << format_vertex(w) << "\n";
    }
    return 0;
}

int cmd_bundle_decide(const std::string& matrix_text, bool brute_only,
                      bool check, long long height, const std::string& format,
                      std::ostream& out, std::ostream& err) {
    std::array<Int, 4> raw = parse_matrix(matrix_text);
    Monodromy m(raw[0], raw[1], raw[2], raw[3]);

    DiscVerdict verdict;
    if (brute_only) {
        std::optional<Witness> w = brute_search(m, height);
        if (w)
            verdict = {VerdictKind::Exists, DecisionMethod::BruteForce, w,
                       std::nullopt};
        else
            verdict = {VerdictKind::Unknown, DecisionMethod::BruteForce,
                       std::nullopt, Int(height)};
    } else {
        verdict = decide(m);
    }

    std::optional<Witness> check_witness;
    bool check_ran = check && !brute_only;
    if (check_ran) check_witness = brute_search(m, height);

    if (check_ran && verdict.kind == VerdictKind::NotExists && check_witness) {
        err << "error: decision reported NotExists but brute force found "
            << witness_text(*check_witness) << "\n";
        return 1;
    }

    if (format == "json") {
        ordered_json doc;
        doc["matrix"] = matrix_echo(raw);
        doc["kind"] = to_string(verdict.kind);
        doc["method"] = to_string(verdict.method);
        if (verdict.witness) doc["witness"] = witness_json(*verdict.witness);
        if (verdict.search_height)
            doc["search_height"] = json_int(*verdict.search_height);
        if (check_ran) {
            ordered_json chk;
            chk["height"] = height;
            if (check_witness) chk["witness"] = witness_json(*check_witness);
            chk["agrees"] = check_witness.has_value() ==
                            (verdict.kind == VerdictKind::Exists);
            doc["check"] = chk;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << to_string(verdict.kind);
        if (verdict.witness) out << " " << witness_text(*verdict.witness);
        if (verdict.search_height)
            out << " search_height=" << *verdict.search_height;
        out << " method=" << to_string(verdict.method) << "\n";
        if (check_ran) {
            out << "check height=" << height << ": ";
            if (check_witness)
                out << witness_text(*check_witness) << " agrees\n";
            else if (verdict.kind == VerdictKind::NotExists)
                out << "none agrees\n";
            else
                out << "none (no witness within height)\n";
        }
    }
    return 0;
}

int cmd_bundle_scan(long long entry_bound, const std::string& format,
                    std::ostream& out) {
    ScanReport rep = scan_matrices(entry_bound);
    if (format == "json") {
        ordered_json doc;
        doc["entry_bound"] = json_int(rep.entry_bound);
        doc["total"] = rep.total;
        doc["exists"] = rep.exists_count;
        doc["not_exists"] = rep.not_exists_count;
        doc["criterion"] = rep.criterion_count;
        doc["disagreements"] = ordered_json::array();
        for (const Monodromy& m : rep.disagreements)
            doc["disagreements"].push_back(
                matrix_echo({m.a(), m.b(), m.c(), m.d()}));
        out << doc.dump(2) << "\n";
    } else {
        out << "entry_bound: " << rep.entry_bound << "\n";
        out << "total: " << rep.total << "\n";
        out << "exists: " << rep.exists_count << "\n";
        out << "not_exists: " << rep.not_exists_count << "\n";
        out << "criterion: " << rep.criterion_count << "\n";
        out << "disagreements: " << rep.disagreements.size() << "\n";
        for (const Monodromy& m : rep.disagreements)
            out << "  " << matrix_echo({m.a(), m.b(), m.c(), m.d()}) << "\n";
    }
    return 0;
}

int cmd_verify(long long p_bound, long long q_bound, const std::string& format,
               std::ostream& out) {
    VerifyReport rep = run_verify(p_bound, q_bound);
    auto flag = [](bool ok) { return ok ? "ok" : "FAIL"; };
    if (format == "json") {
        ordered_json doc;
        doc["p_bound"] = json_int(rep.p_bound);
        doc["q_bound"] = json_int(rep.q_bound);
        doc["vertices"] = rep.vertex_count;
        doc["edges"] = rep.edge_count;
        doc["connected"] = rep.connected;
        doc["acyclic"] = rep.acyclic;
        doc["odd_parent_unique"] = rep.odd_parent_unique;
        doc["p_increasing"] = rep.p_increasing;
        doc["classification_matches"] = rep.classification_matches;
        doc["edge_slope_law"] = rep.edge_slope_law;
        doc["descent_matches_bfs"] = rep.descent_matches_bfs;
        doc["all"] = rep.all();
        out << doc.dump(2) << "\n";
    } else {
        out << "box: p_bound=" << rep.p_bound << " q_bound=" << rep.q_bound
            << " vertices=" << rep.vertex_count
            << " edges=" << rep.edge_count << "\n";
        out << "connected: " << flag(rep.connected) << "\n";
        out << "acyclic: " << flag(rep.acyclic) << "\n";
        out << "odd-parent-unique: " << flag(rep.odd_parent_unique) << "\n";
        out << "p-increasing-along-root-paths: " << flag(rep.p_increasing)
            << "\n";
        out << "classification-matches-distance: "
            << flag(rep.classification_matches) << "\n";
        out << "edge-slope-intersection-2: " << flag(rep.edge_slope_law)
            << "\n";
        out << "descent-matches-bfs: " << flag(rep.descent_matches_bfs)
            << "\n";
        out << "result: " << flag(rep.all()) << "\n";
    }
    return rep.all() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
    CLI::App app{
        "exact computations with the tree of one-sided boundary slopes"};
    app.name("mbtree");
    app.require_subcommand(1);

    std::string slope_text, from_text, to_text, inner_text, outer_text;
    std::string vertex_text, matrix_text;
    std::string format = "text";
    long long bound = 0, p_bound = 0, q_bound = 0, depth = -1;
    long long height = 1000, entry_bound = 0;
    bool brute_only = false, check = false;
    std::string export_format = "dot";

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* genus_cmd =
        app.add_subcommand("genus", "nonorientable genus of a slope");
    genus_cmd->add_option("slope", slope_text, "slope u/v")->required();
    add_format(genus_cmd);

    CLI::App* path_cmd =
        app.add_subcommand("path", "geodesic between two tree vertices");
    path_cmd->add_option("from", from_text, "vertex p:q")->required();
    path_cmd->add_option("to", to_text, "vertex p:q")->required();
    add_format(path_cmd);

    CLI::App* compress_cmd = app.add_subcommand(
        "compress", "slope after one boundary compression");
    compress_cmd->add_option("slope", slope_text, "slope u/v")->required();
    add_format(compress_cmd);

    CLI::App* bands_cmd =
        app.add_subcommand("bands", "band decomposition of a slope");
    bands_cmd->add_option("slope", slope_text, "slope u/v")->required();
    add_format(bands_cmd);

    CLI::App* regions_cmd = app.add_subcommand(
        "regions", "concentric region decomposition between two curves");
    regions_cmd->add_option("inner", inner_text, "curve u/v or (u,v)")
        ->required();
    regions_cmd->add_option("outer", outer_text, "curve u/v or (u,v)")
        ->required();
    add_format(regions_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "branch classification of a vertex");
    classify_cmd->add_option("vertex", vertex_text, "vertex p:q")->required();
    add_format(classify_cmd);

    CLI::App* neighbors_cmd =
        app.add_subcommand("neighbors", "tree neighbours within a bound");
    neighbors_cmd->add_option("vertex", vertex_text, "vertex p:q")->required();
    neighbors_cmd->add_option("--bound", bound, "max(|p|,q) bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(neighbors_cmd);

    CLI::App* export_cmd =
        app.add_subcommand("tree-export", "export a finite part of the tree");
    export_cmd->add_option("--p-bound", p_bound, "box bound on |p|")
        ->check(CLI::PositiveNumber);
    export_cmd->add_option("--q-bound", q_bound, "box bound on q (odd)")
        ->check(CLI::PositiveNumber);
    export_cmd->add_option("--depth", depth, "mediant depth")
        ->check(CLI::NonNegativeNumber);
    export_cmd->add_option("--format", export_format, "dot, json or svg")
        ->check(CLI::IsMember({"dot", "json", "svg"}))
        ->capture_default_str();

    CLI::App* decide_cmd = app.add_subcommand(
        "bundle-decide", "quadrilateral disc existence for a monodromy");
    decide_cmd->add_option("matrix", matrix_text, "matrix a,b;c,d")
        ->required();
    decide_cmd->add_flag("--brute-only", brute_only,
                         "height-limited brute force instead of the exact "
                         "decision");
    decide_cmd->add_flag("--check", check,
                         "cross-check the decision by brute force");
    decide_cmd
        ->add_option("--check-height", height,
                     "height for brute force and cross-checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(decide_cmd);

    CLI::App* scan_cmd = app.add_subcommand(
        "bundle-scan", "decide every matrix with bounded entries");
    scan_cmd->add_option("--entry-bound", entry_bound, "entry bound")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(scan_cmd);

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "run the tree invariant suite over a box window");
    verify_cmd->add_option("--p-bound", p_bound, "box bound on |p|")
        ->required()
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--q-bound", q_bound, "box bound on q (odd)")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(verify_cmd);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(genus_cmd))
            return cmd_genus(slope_text, format, out);
        if (app.got_subcommand(path_cmd))
            return cmd_path(from_text, to_text, format, out);
        if (app.got_subcommand(compress_cmd))
            return cmd_compress(slope_text, format, out);
        if (app.got_subcommand(bands_cmd))
            return cmd_bands(slope_text, format, out);
        if (app.got_subcommand(regions_cmd))
            return cmd_regions(inner_text, outer_text, format, out);
        if (app.got_subcommand(classify_cmd))
            return cmd_classify(vertex_text, format, out);
        if (app.got_subcommand(neighbors_cmd))
            return cmd_neighbors(vertex_text, bound, format, out);
        if (app.got_subcommand(export_cmd)) {
            bool has_box = export_cmd->count("--p-bound") ||
                           export_cmd->count("--q-bound");
            bool has_depth = export_cmd->count("--depth");
            if (has_box == has_depth ||
                (has_box && (!export_cmd->count("--p-bound") ||
                             !export_cmd->count("--q-bound")))) {
                err << "error: tree-export needs either --depth or both "
                       "--p-bound and --q-bound\n";
                return 2;
            }
            RenderSpec spec;
            if (has_depth)
                spec.depth = depth;
            else {
                spec.p_bound = p_bound;
                spec.q_bound = q_bound;
            }
            spec.format = export_format == "dot"    ? ExportFormat::Dot
                          : export_format == "json" ? ExportFormat::Json
                                                    : ExportFormat::Svg;
            out << export_tree(spec);
            return 0;
        }
        if (app.got_subcommand(decide_cmd)) {
            bool run_check = check || decide_cmd->count("--check-height");
            return cmd_bundle_decide(matrix_text, brute_only, run_check,
                                     height, format, out, err);
        }
        if (app.got_subcommand(scan_cmd))
            return cmd_bundle_scan(entry_bound, format, out);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(p_bound, q_bound, format, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    std::vector<std::string> full;
    full.push_back("mbtree");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mbt::cli
