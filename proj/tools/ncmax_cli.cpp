#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncmax/harness.hpp"
#include "ncmax/ingest.hpp"
#include "ncmax/io.hpp"
#include "ncmax/maximal.hpp"
#include "ncmax/spaces.hpp"

using namespace ncmax;
using nlohmann::json;

namespace {

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-commutative Hardy-Littlewood maximal function toolkit"};
    app.require_subcommand(1);

    std::string in_path, out_path, space_spec, suite_name;
    double point_x = 0.0;
    bool as_operator = false, as_cesaro = false;
    std::uint64_t trials = 10000, seed = 42;
    int example_id = 1, points = 241;
    double grid_min = 1e-6, grid_max = 1e6;

    auto* mu_cmd = app.add_subcommand("mu", "decreasing rearrangement of a profile as CSV");
    mu_cmd->add_option("--in", in_path)->required();
    mu_cmd->add_option("--out", out_path);

    auto* max_cmd = app.add_subcommand("maximal", "maximal function: point query or operator");
    max_cmd->add_option("--in", in_path)->required();
    auto* popt = max_cmd->add_option("--point", point_x, "evaluate MA at x >= 0");
    max_cmd->add_flag("--operator", as_operator, "write the MA(|A|) profile");
    max_cmd->add_option("--out", out_path);

    auto* ces_cmd = app.add_subcommand("cesaro", "exact Cesaro curve of mu as JSON pieces");
    ces_cmd->add_option("--in", in_path)->required();
    ces_cmd->add_option("--out", out_path);

    auto* norm_cmd = app.add_subcommand("norm", "symmetric-space norm of a profile");
    norm_cmd->add_option("--in", in_path)->required();
    norm_cmd->add_option("--space", space_spec)->required();
    norm_cmd->add_option("--out", out_path);

    auto* check_cmd = app.add_subcommand("check", "run a randomized verification suite");
    check_cmd->add_option("--suite", suite_name)->required();
    check_cmd->add_option("--trials", trials);
    check_cmd->add_option("--seed", seed);
    check_cmd->add_option("--out", out_path);

    auto* ex_cmd = app.add_subcommand("example", "run a worked boundedness example");
    ex_cmd->add_option("--id", example_id)->check(CLI::Range(1, 2));
    ex_cmd->add_option("--grid-min", grid_min);
    ex_cmd->add_option("--grid-max", grid_max);
    ex_cmd->add_option("--points", points);
    ex_cmd->add_option("--out", out_path);

    auto* emit_cmd = app.add_subcommand("emit", "sample a curve as t,value CSV");
    emit_cmd->add_option("--in", in_path)->required();
    emit_cmd->add_flag("--cesaro", as_cesaro, "emit C(mu) instead of mu");
    emit_cmd->add_option("--points", points);
    emit_cmd->add_option("--grid-min", grid_min);
    emit_cmd->add_option("--grid-max", grid_max);
    emit_cmd->add_option("--out", out_path);

    try {
        app.parse(argc, argv);

        if (mu_cmd->parsed()) {
            emit(out_path, step_to_csv(mu_of_profile(load_profile_file(in_path))));
        } else if (max_cmd->parsed()) {
            SpectralProfile p = load_profile_file(in_path);
            if (as_operator) {
                emit(out_path, profile_to_json(ma_operator(p)).dump(2) + "\n");
            } else if (popt->count() > 0) {
                MaximalEvaluation e = ma_point(p, point_x);
                emit(out_path,
                     json{{"value", e.value}, {"witnessRadius", e.witness_radius}}.dump(2) + "\n");
            } else {
                std::cerr << "maximal: need --point or --operator\n";
                return 2;
            }
        } else if (ces_cmd->parsed()) {
            CesaroCurve c = cesaro(mu_of_profile(load_profile_file(in_path)));
            json pieces = json::array();
            for (const auto& pc : c.piece_list())
                pieces.push_back({{"tLo", pc.t_lo}, {"tHi", pc.t_hi}, {"a", pc.a}, {"b", pc.b}});
            emit(out_path,
                 json{{"pieces", pieces}, {"tailA", c.tail_coefficient()}}.dump(2) + "\n");
        } else if (norm_cmd->parsed()) {
            NormResult r = norm_by_spec(load_profile_file(in_path), space_spec);
            json j{{"value", r.value}, {"space", r.space}, {"method", r.method}};
            if (r.maximizer_t) j["maximizerT"] = *r.maximizer_t;
            emit(out_path, j.dump(2) + "\n");
        } else if (check_cmd->parsed()) {
            ReportDocument rep = run_suite(suite_name, trials, seed);
            emit(out_path, rep.to_json().dump(2) + "\n");
            return rep.passed ? 0 : 1;
        } else if (ex_cmd->parsed()) {
            ReportDocument rep = run_example(example_id, LogGrid{grid_min, grid_max, points});
            emit(out_path, rep.to_json().dump(2) + "\n");
            return rep.passed ? 0 : 1;
        } else if (emit_cmd->parsed()) {
            SpectralProfile p = load_profile_file(in_path);
            std::string csv =
                as_cesaro
                    ? emit_curve_cesaro(cesaro(mu_of_profile(p)), points, grid_min, grid_max)
                    : emit_curve_step(mu_of_profile(p), points, grid_min, grid_max);
            emit(out_path, csv);
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors map to 2
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
