#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ihs/cubes.hpp"
#include "ihs/hyperspace.hpp"
#include "ihs/identities.hpp"
#include "ihs/io.hpp"
#include "ihs/morphisms.hpp"
#include "ihs/set_system.hpp"
#include "ihs/spray.hpp"
#include "ihs/stream.hpp"

namespace {

constexpr const char* kVersion = "ihs 1.0.0 format=1";

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIndeterminate = 3;

struct StreamOptions {
    std::string kind;         // cube | spray | oneclass | blocks
    std::string tuple_path;   // cube
    std::string factors;      // cube: comma list, "w" = unbounded
    std::string centers;      // spray: "x,y;x,y;..."
    int relations = 2;        // oneclass
    std::uint64_t claimed_bound = 16;  // oneclass
    std::uint64_t block_size = 4;      // blocks

    void attach(CLI::App* cmd) {
        cmd->add_option("--stream", kind, "stream kind: cube | spray | oneclass | blocks")->required();
        cmd->add_option("--stuple", tuple_path, "set-tuple file (cube stream)");
        cmd->add_option("--factors", factors, "per-coordinate sizes, 'w' for unbounded (cube stream)");
        cmd->add_option("--centers", centers, "centers as 'x,y;x,y;...' with rational entries (spray stream)");
        cmd->add_option("--relations", relations, "relation count (oneclass stream)")->capture_default_str();
        cmd->add_option("--claimed-bound", claimed_bound, "declared full-intersection bound (oneclass stream)")->capture_default_str();
        cmd->add_option("--block-size", block_size, "class size (blocks stream)")->capture_default_str();
    }
};

std::vector<ihs::RationalPoint> parse_centers(const std::string& text) {
    std::vector<ihs::RationalPoint> centers;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ';')) {
        ihs::RationalPoint point;
        std::istringstream coords(chunk);
        std::string coord;
        while (std::getline(coords, coord, ',')) {
            const auto value = ihs::Rational::parse(coord);
            if (!value)
                throw ihs::ParseError("bad rational coordinate '" + coord + "'");
            point.push_back(*value);
        }
        if (point.empty())
            throw ihs::ParseError("empty center in '" + text + "'");
        centers.push_back(std::move(point));
    }
    if (centers.empty())
        throw ihs::ParseError("no centers given");
    return centers;
}

// Counts on the command line accept plain decimals and scientific
// notation ("1e7").
std::uint64_t parse_count(const std::string& text) {
    if (const auto plain = ihs::ExtendedNat::parse(text); plain && !plain->is_infinite())
        return plain->finite_value();
    try {
        std::size_t used = 0;
        const long double value = std::stold(text, &used);
        if (used == text.size() && value >= 0 && value <= 1e18L && value == std::floor(value))
            return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
    }
    throw ihs::ParseError("bad count '" + text + "'");
}

std::vector<std::optional<std::uint64_t>> parse_factors(const std::string& text) {
    std::vector<std::optional<std::uint64_t>> caps;
    if (text.empty())
        return caps;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ',')) {
        if (chunk == "w") {
            caps.emplace_back(std::nullopt);
            continue;
        }
        const auto value = ihs::ExtendedNat::parse(chunk);
        if (!value || value->is_infinite() || value->finite_value() == 0)
            throw ihs::ParseError("bad factor '" + chunk + "' (positive integer or 'w')");
        caps.emplace_back(value->finite_value());
    }
    return caps;
}

std::unique_ptr<ihs::StreamHyperspace> build_stream(const StreamOptions& opts) {
    if (opts.kind == "cube") {
        if (opts.tuple_path.empty())
            throw ihs::ParseError("cube stream needs --stuple");
        ihs::SetTuple tuple = ihs::set_tuple_from_text(ihs::read_file(opts.tuple_path));
        return std::make_unique<ihs::CubeStream>(std::move(tuple), parse_factors(opts.factors));
    }
    if (opts.kind == "spray") {
        if (opts.centers.empty())
            throw ihs::ParseError("spray stream needs --centers");
        return std::make_unique<ihs::SprayStream>(ihs::SprayConfig(parse_centers(opts.centers)));
    }
    if (opts.kind == "oneclass")
        return std::make_unique<ihs::SingleClassStream>(opts.relations, opts.claimed_bound);
    if (opts.kind == "blocks")
        return std::make_unique<ihs::BlockStream>(opts.block_size);
    throw ihs::ParseError("unknown stream kind '" + opts.kind + "'");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text << "\n";
    else
        ihs::write_file(out_path, text + "\n");
}

int run_check_identities(int n_max, std::uint64_t samples, std::uint64_t seed) {
    std::vector<ihs::SuiteResult> results;
    results.push_back(ihs::check_tau_equals_induced_depth_exhaustive(3, 3));
    results.push_back(ihs::check_tau_equals_induced_depth_sampled(n_max, n_max, samples, seed));
    results.push_back(ihs::check_dandy_vs_depth_exhaustive(std::min(n_max, 4)));
    results.push_back(ihs::check_dandy_vs_depth_sampled(5, std::max<std::uint64_t>(samples / 10, 1), seed));
    results.push_back(ihs::check_restriction_depth_drop_sampled(n_max, samples, seed));
    results.push_back(ihs::check_depth_cross_validation_exhaustive(std::min(n_max, 4)));
    bool all_passed = true;
    for (const ihs::SuiteResult& r : results) {
        if (r.passed()) {
            std::cout << "pass " << r.name << " cases=" << r.cases << "\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << r.name << " counterexample: " << *r.counterexample << "\n";
        }
    }
    return all_passed ? kExitOk : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvers and generators for indexed hyperspaces"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string in_path, out_path, from_path, to_path, kind = "embed", tuple_path, centers, plot_path;
    std::string prefix_text = "100", budget_text = "10000000";
    std::uint64_t k_bound = 6;
    std::uint64_t factor_budget = 3;
    int dandy_d = 0, halfcube_n = 0, constant_color = -1;
    int id_nmax = 6;
    std::uint64_t id_samples = 10000, id_seed = 7;
    std::string factors;
    StreamOptions color_stream, audit_stream;

    CLI::App* depth_cmd = app.add_subcommand("depth", "depth of a set system (file in set-system text format)");
    depth_cmd->add_option("-i,--in", in_path, "input file")->required();

    CLI::App* tau_cmd = app.add_subcommand("tau", "transversal number of a set system");
    tau_cmd->add_option("-i,--in", in_path, "input file")->required();

    CLI::App* dandy_cmd = app.add_subcommand("dandy", "permutation-interval covering check");
    dandy_cmd->add_option("-i,--in", in_path, "input file")->required();
    dandy_cmd->add_option("-d", dandy_d, "depth to test")->required();

    CLI::App* induced_cmd = app.add_subcommand("induced", "index sets with empty coordinate intersection");
    induced_cmd->add_option("-i,--in", in_path, "set-tuple file")->required();

    CLI::App* color_cmd = app.add_subcommand("color", "greedy coloring of a stream prefix");
    color_stream.attach(color_cmd);
    color_cmd->add_option("-N,--N", prefix_text, "prefix length")->capture_default_str();
    color_cmd->add_option("-o,--out", out_path, "write JSON here instead of stdout");

    CLI::App* audit_cmd = app.add_subcommand("audit", "count table and bound checks for a colored prefix");
    audit_stream.attach(audit_cmd);
    audit_cmd->add_option("-N,--N", prefix_text, "prefix length")->capture_default_str();
    audit_cmd->add_option("--constant", constant_color, "audit a constant coloring instead of the greedy one");
    audit_cmd->add_option("-o,--out", out_path, "write JSON here instead of stdout");

    CLI::App* cube_cmd = app.add_subcommand("cube", "finite cube of a set tuple");
    cube_cmd->add_option("--stuple", tuple_path, "set-tuple file")->required();
    cube_cmd->add_option("--factors", factors, "comma-separated factor sizes")->required();
    cube_cmd->add_option("-o,--out", out_path, "write JSON here instead of stdout");

    CLI::App* halfcube_cmd = app.add_subcommand("halfcube", "cube restricted to strictly increasing tuples");
    halfcube_cmd->add_option("--n", halfcube_n, "plain n-halfcube");
    halfcube_cmd->add_option("--stuple", tuple_path, "set-tuple file (alternative to --n)");
    halfcube_cmd->add_option("--k", k_bound, "coordinates range over {0..k-1}")->capture_default_str()->required();
    halfcube_cmd->add_option("-o,--out", out_path, "write JSON here instead of stdout");

    CLI::App* embed_cmd = app.add_subcommand("embed", "search for a morphism witness");
    embed_cmd->add_option("--from", from_path, "domain hyperspace JSON")->required();
    embed_cmd->add_option("--to", to_path, "target hyperspace JSON")->required();
    embed_cmd->add_option("--kind", kind, "embed | weak | parbed")->capture_default_str();
    embed_cmd->add_option("--budget", budget_text, "search node budget")->capture_default_str();

    CLI::App* fcn_cmd = app.add_subcommand("fcn", "budget-relative finite cube number estimate");
    fcn_cmd->add_option("-i,--in", in_path, "hyperspace JSON")->required();
    fcn_cmd->add_option("--budget", factor_budget, "max factor size for the cube family check")->capture_default_str();
    fcn_cmd->add_option("--node-budget", budget_text, "search node budget")->capture_default_str();

    CLI::App* spray_cmd = app.add_subcommand("spray-cover", "greedy spray cover of a rational-plane prefix");
    spray_cmd->add_option("--centers", centers, "centers as 'x,y;x,y;...'")->required();
    spray_cmd->add_option("-N,--N", prefix_text, "prefix length")->capture_default_str();
    spray_cmd->add_option("--plot", plot_path, "write x_num,x_den,y_num,y_den,color CSV here");
    spray_cmd->add_option("-o,--out", out_path, "write audit JSON here instead of stdout");

    CLI::App* check_cmd = app.add_subcommand("check-identities", "run the solver identity property suites");
    check_cmd->add_option("--n-max", id_nmax, "max ground size for sampled suites")->capture_default_str();
    check_cmd->add_option("--samples", id_samples, "sample count per sampled suite")->capture_default_str();
    check_cmd->add_option("--seed", id_seed, "RNG seed")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const std::uint64_t prefix_length = parse_count(prefix_text);
        const std::uint64_t node_budget = parse_count(budget_text);
        if (depth_cmd->parsed()) {
            std::cout << ihs::depth(ihs::set_system_from_text(ihs::read_file(in_path))).to_string() << "\n";
        } else if (tau_cmd->parsed()) {
            std::cout << ihs::transversal_number(ihs::set_system_from_text(ihs::read_file(in_path))).to_string()
                      << "\n";
        } else if (dandy_cmd->parsed()) {
            const bool yes = ihs::dandy_to_depth(ihs::set_system_from_text(ihs::read_file(in_path)), dandy_d);
            std::cout << (yes ? "true" : "false") << "\n";
        } else if (induced_cmd->parsed()) {
            const ihs::SetTuple tuple = ihs::set_tuple_from_text(ihs::read_file(in_path));
            std::cout << ihs::set_system_to_text(ihs::induced_system(tuple));
        } else if (color_cmd->parsed()) {
            const auto stream = build_stream(color_stream);
            const ihs::Coloring coloring = ihs::greedy_coloring(*stream, prefix_length);
            emit(ihs::coloring_to_json(coloring, stream->relation_count()), out_path);
        } else if (audit_cmd->parsed()) {
            const auto stream = build_stream(audit_stream);
            const ihs::Coloring coloring =
                constant_color >= 0 ? ihs::constant_coloring(constant_color, prefix_length, stream->relation_count())
                                    : ihs::greedy_coloring(*stream, prefix_length);
            emit(ihs::audit_report_to_json(ihs::acceptability_audit(*stream, coloring, prefix_length)), out_path);
        } else if (cube_cmd->parsed()) {
            const ihs::SetTuple tuple = ihs::set_tuple_from_text(ihs::read_file(tuple_path));
            std::vector<std::uint64_t> sizes;
            for (const auto& cap : parse_factors(factors)) {
                if (!cap)
                    throw ihs::ParseError("cube: factors must be finite");
                sizes.push_back(*cap);
            }
            emit(ihs::hyperspace_to_json(ihs::make_cube(tuple, sizes).space), out_path);
        } else if (halfcube_cmd->parsed()) {
            ihs::Cube cube = halfcube_n > 0 ? ihs::make_n_halfcube(halfcube_n, k_bound)
                                            : ihs::make_halfcube(
                                                  ihs::set_tuple_from_text(ihs::read_file(tuple_path)), k_bound);
            emit(ihs::hyperspace_to_json(cube.space), out_path);
        } else if (embed_cmd->parsed()) {
            const ihs::Hyperspace b = ihs::hyperspace_from_json(ihs::read_file(from_path));
            const ihs::Hyperspace a = ihs::hyperspace_from_json(ihs::read_file(to_path));
            ihs::SearchOutcome outcome{ihs::SearchStatus::None, std::nullopt, 0};
            if (kind == "embed")
                outcome = ihs::find_embedding(b, a, node_budget);
            else if (kind == "weak")
                outcome = ihs::find_weak_embedding(b, a, node_budget);
            else if (kind == "parbed")
                outcome = ihs::find_parbedding(b, a, node_budget);
            else
                throw ihs::ParseError("unknown morphism kind '" + kind + "'");
            std::cout << ihs::witness_to_json(outcome) << "\n";
            if (outcome.status == ihs::SearchStatus::Indeterminate)
                return kExitIndeterminate;
        } else if (fcn_cmd->parsed()) {
            const ihs::Hyperspace a = ihs::hyperspace_from_json(ihs::read_file(in_path));
            const ihs::FcnEstimate estimate = ihs::fcn_estimate(a, factor_budget, node_budget);
            std::cout << "d=" << estimate.value.to_string();
            if (estimate.witness)
                std::cout << " witness=" << ihs::set_tuple_to_text(*estimate.witness);
            else
                std::cout << " witness=NONE\n";
            if (estimate.indeterminate) {
                std::cout << "indeterminate (node budget exhausted)\n";
                return kExitIndeterminate;
            }
        } else if (spray_cmd->parsed()) {
            const ihs::SprayConfig config(parse_centers(centers));
            const ihs::SprayCover cover = ihs::cover_with_sprays(config, prefix_length);
            if (!plot_path.empty()) {
                const ihs::SprayStream stream(config);
                std::string csv = "x_num,x_den,y_num,y_den,color\n";
                for (std::uint64_t point_index = 0; point_index < prefix_length; ++point_index) {
                    const ihs::RationalPoint& pt = stream.point(point_index);
                    csv += pt[0].num().str() + "," + pt[0].den().str() + "," + pt[1].num().str() + "," +
                           pt[1].den().str() + "," + std::to_string(cover.coloring.colors[point_index]) + "\n";
                }
                ihs::write_file(plot_path, csv);
            }
            emit(ihs::audit_report_to_json(cover.report), out_path);
        } else if (check_cmd->parsed()) {
            return run_check_identities(id_nmax, id_samples, id_seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
