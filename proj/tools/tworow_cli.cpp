// tworow: command-line front end for the two-row graph library.
//
// Exit codes: 0 success / witness found, 3 no witness, 2 input error, 1 internal error.
// Machine-readable output goes to stdout, diagnostics to stderr.

#include "tworow/tworow.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace tworow;

constexpr int exit_found = 0;
constexpr int exit_internal = 1;
constexpr int exit_input = 2;
constexpr int exit_not_found = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct MatrixInput {
    std::string path;
    std::string field;
    bool csv = false;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--matrix,-m", path, "matrix file (JSON, or CSV with --csv / .csv extension)")
            ->required();
        cmd->add_option("--field,-f", field, "field for CSV input: gf2, gf(p) or q");
        cmd->add_flag("--csv", csv, "read the matrix as CSV");
    }

    ExactMatrix load() const
    {
        const std::string text = read_file(path);
        const bool as_csv = csv || path.ends_with(".csv");
        if (as_csv) {
            if (field.empty()) throw Error(Errc::invalid_argument, "CSV input needs --field");
            return parse_matrix_csv(text, FieldSpec::parse(field));
        }
        ExactMatrix a = parse_matrix_json(text);
        if (!field.empty() && !(FieldSpec::parse(field) == a.spec()))
            throw Error(Errc::field_mismatch, "--field " + field + " disagrees with the file's field "
                                                  + a.spec().name());
        return a;
    }
};

void print_order(const std::vector<std::size_t>& order)
{
    for (std::size_t k = 0; k < order.size(); ++k) std::cout << (k ? " " : "") << order[k];
    std::cout << "\n";
}

int emit_order(const std::optional<std::vector<std::size_t>>& order, const std::string& format)
{
    if (format == "json") {
        std::cout << (order ? json{{"order", *order}} : json{{"order", nullptr}}).dump() << "\n";
    } else if (order) {
        print_order(*order);
    } else {
        std::cerr << "no witness\n";
    }
    return order ? exit_found : exit_not_found;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-row graphs of exact matrices, 1-block decompositions, and RAAG Hamiltonicity checks"};
    app.require_subcommand(1);

    bool cyclic = false;
    std::string format;
    std::size_t max_enum = default_enumeration_bound;

    // graph
    MatrixInput graph_in;
    bool opp = false;
    auto* graph_cmd = app.add_subcommand("graph", "two-row graph G(A), G^c(A) or G^opp(A)");
    graph_in.attach(graph_cmd);
    graph_cmd->add_flag("--cyclic,-c", cyclic, "include the wraparound column window");
    graph_cmd->add_flag("--opp", opp, "emit the null-connectedness graph instead");
    graph_cmd->add_option("--format", format, "dot, json or text")->check(CLI::IsMember({"dot", "json", "text"}));

    // blocks
    MatrixInput blocks_in;
    auto* blocks_cmd = app.add_subcommand("blocks", "1-block partition of a matrix");
    blocks_in.attach(blocks_cmd);
    blocks_cmd->add_flag("--cyclic,-c", cyclic, "cyclic 1-blocks");
    blocks_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // tracks
    MatrixInput tracks_in;
    auto* tracks_cmd = app.add_subcommand("tracks", "complete 1-tracks of all nonzero strings with their sums");
    tracks_in.attach(tracks_cmd);
    tracks_cmd->add_flag("--cyclic,-c", cyclic, "cyclic 1-tracks");
    tracks_cmd->add_option("--max-enum", max_enum, "largest n for factorial enumeration")->check(CLI::PositiveNumber);
    tracks_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // det
    MatrixInput det_in;
    bool det_tracks = false;
    auto* det_cmd = app.add_subcommand("det", "determinant by elimination, optionally also by 1-tracks");
    det_in.attach(det_cmd);
    det_cmd->add_flag("--tracks", det_tracks, "also sum over complete 1-tracks");
    auto* det_cyclic = det_cmd->add_flag("--cyclic,-c", cyclic, "use cyclic 1-tracks");
    det_cyclic->needs(det_cmd->get_option("--tracks"));
    det_cmd->add_option("--max-enum", max_enum, "largest n for factorial enumeration")->check(CLI::PositiveNumber);
    det_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    // trace
    MatrixInput trace_in;
    bool trace_check = false;
    auto* trace_cmd = app.add_subcommand("trace", "row order making A (cyclically) square-traceable");
    trace_in.attach(trace_cmd);
    trace_cmd->add_flag("--cyclic,-c", cyclic, "close the ordering into a cycle of G^c(A)");
    trace_cmd->add_flag("--check", trace_check, "only test the rows in their given order");
    trace_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"json", "text"}));

    // realize
    std::string realize_graph;
    std::optional<std::size_t> realize_vertices;
    auto* realize_cmd = app.add_subcommand("realize", "0/1 matrix whose two-row graph is the given graph");
    realize_cmd->add_option("--graph,-g", realize_graph, "graph file (JSON or edge list)")->required();
    realize_cmd->add_option("--vertices", realize_vertices, "vertex count for edge-list input");

    // raag
    std::string raag_graph, raag_basis, raag_field;
    std::optional<std::size_t> raag_vertices;
    auto* raag_cmd = app.add_subcommand("raag", "Hamiltonian ordering of a basis under the cup-product pairing");
    raag_cmd->add_option("--graph,-g", raag_graph, "graph file (JSON or edge list)")->required();
    raag_cmd->add_option("--basis,-b", raag_basis, "basis matrix JSON; rows are w_i in the v* basis");
    raag_cmd->add_option("--field,-f", raag_field, "coefficient field when no basis is given (default gf2)");
    raag_cmd->add_option("--vertices", raag_vertices, "vertex count for edge-list input");
    raag_cmd->add_flag("--cyclic,-c", cyclic, "require the ordering to close up");
    raag_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"json", "text"}));

    // experiment
    std::string exp_mode = "completeness";
    ExperimentConfig exp_cfg;
    auto* exp_cmd = app.add_subcommand("experiment", "random GL_n(F_q) experiments");
    exp_cmd->add_option("--mode", exp_mode, "completeness or sweep")
        ->check(CLI::IsMember({"completeness", "sweep"}));
    exp_cmd->add_option("--n", exp_cfg.n, "matrix size")->required()->check(CLI::Range(2, 64));
    exp_cmd->add_option("--q", exp_cfg.q, "prime field order")->required();
    exp_cmd->add_option("--trials", exp_cfg.trials, "number of samples")->required()->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", exp_cfg.seed, "64-bit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }

    try {
        if (*graph_cmd) {
            const ExactMatrix a = graph_in.load();
            const RowGraph g = opp ? opp_graph(a, cyclic) : two_row_graph(a, cyclic);
            if (format == "json") {
                std::cout << graph_to_json(g).dump() << "\n";
            } else if (format == "text") {
                for (auto [i, j] : g.edges()) std::cout << i << " " << j << "\n";
            } else {
                std::cout << to_dot(g);
            }
            return exit_found;
        }
        if (*blocks_cmd) {
            const ExactMatrix a = blocks_in.load();
            const BlockPartition p = block_partition(a, cyclic);
            if (format == "text") std::cout << render_partition(a, p);
            else std::cout << partition_to_json(p).dump() << "\n";
            return exit_found;
        }
        if (*tracks_cmd) {
            const ExactMatrix a = tracks_in.load();
            const auto tracks = complete_tracks(a, cyclic, max_enum);
            Scalar total = Scalar::zero(a.spec());
            json list = json::array();
            for (const auto& t : tracks) {
                total += t.sum;
                list.push_back({{"track", track_to_json(t.track)}, {"sum", t.sum.to_string()}, {"strings", t.string_count}});
            }
            if (format == "text") {
                for (const auto& t : tracks) {
                    for (const auto& m : t.track.members) {
                        std::cout << "[";
                        for (std::size_t k = 0; k < m.rows.size(); ++k) std::cout << (k ? "," : "") << m.rows[k];
                        std::cout << "|" << m.cols.start << "+" << m.cols.len << "] ";
                    }
                    std::cout << "sum=" << t.sum.to_string() << " strings=" << t.string_count << "\n";
                }
                std::cout << "total " << total.to_string() << "\n";
            } else {
                std::cout << json{{"tracks", std::move(list)}, {"det_by_tracks", total.to_string()}}.dump() << "\n";
            }
            return exit_found;
        }
        if (*det_cmd) {
            const ExactMatrix a = det_in.load();
            const Scalar det = determinant(a);
            std::optional<Scalar> by_tracks;
            if (det_tracks) by_tracks = det_by_tracks(a, cyclic, max_enum);
            if (format == "text") {
                std::cout << det.to_string() << (by_tracks ? " " + by_tracks->to_string() : "") << "\n";
            } else {
                json out{{"det", det.to_string()}, {"field", a.spec().name()}};
                if (by_tracks) out["det_by_tracks"] = by_tracks->to_string();
                std::cout << out.dump() << "\n";
            }
            if (by_tracks && !(*by_tracks == det)) {
                std::cerr << "track expansion disagrees with elimination\n";
                return exit_internal;
            }
            return exit_found;
        }
        if (*trace_cmd) {
            const ExactMatrix a = trace_in.load();
            if (trace_check) {
                const bool ok = cyclic ? is_cyclically_square_traceable(a) : is_square_traceable(a);
                if (format == "json") std::cout << json{{"traceable", ok}}.dump() << "\n";
                else std::cout << (ok ? "traceable" : "not traceable") << "\n";
                return ok ? exit_found : exit_not_found;
            }
            const auto sigma = traceable_ordering(a, cyclic);
            return emit_order(sigma ? std::optional(sigma->image()) : std::nullopt, format);
        }
        if (*realize_cmd) {
            const Graph gamma = parse_graph(read_file(realize_graph), realize_vertices);
            const RealizationResult r = realize(gamma);
            const bool ok = verify_realization(gamma, r);
            std::cout << json{{"matrix", matrix_to_json(r.matrix)}, {"verified", ok}}.dump() << "\n";
            return ok ? exit_found : exit_internal;
        }
        if (*raag_cmd) {
            const Graph gamma = parse_graph(read_file(raag_graph), raag_vertices);
            if (raag_basis.empty()) {
                (void)FieldSpec::parse(raag_field.empty() ? "gf2" : raag_field);
                const auto w = graph_hamiltonicity(gamma, cyclic);
                return emit_order(w ? std::optional(w->order) : std::nullopt, format);
            }
            const ExactMatrix b = parse_matrix_json(read_file(raag_basis));
            if (!raag_field.empty() && !(FieldSpec::parse(raag_field) == b.spec()))
                throw Error(Errc::field_mismatch, "--field disagrees with the basis field " + b.spec().name());
            const PairingTriple t = cup_pairing(gamma, b.spec());
            const auto sigma = basis_hamiltonian_witness(t, BasisMatrix(b), cyclic);
            return emit_order(sigma ? std::optional(sigma->image()) : std::nullopt, format);
        }
        if (*exp_cmd) {
            exp_cfg.mode = exp_mode == "sweep" ? ExperimentMode::hamiltonicity_sweep : ExperimentMode::completeness;
            try {
                std::cout << report_to_json(run_experiment(exp_cfg)).dump() << "\n";
            } catch (const SweepViolation& v) {
                std::cout << report_to_json(v.report()).dump() << "\n";
                std::cerr << v.what() << "\n";
                return exit_internal;
            }
            return exit_found;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::assertion_failure ? exit_internal : exit_input;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}
