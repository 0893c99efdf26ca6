#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jpotapov/json_io.hpp"
#include "jpotapov/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 10;
constexpr int kExitInvalid = 20;
constexpr int kExitOutsideDomain = 30;
constexpr int kExitNotStrict = 40;

struct CommonOpts {
    std::string input_path;
    std::string param_path;
    std::vector<std::string> points;
    double tol_override = 0.0;
    std::string format = "json";
};

jp::Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw jp::ParseError("cannot open " + path);
    jp::Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw jp::ParseError(std::string("malformed JSON in ") + path + ": " + e.what());
    }
    return j;
}

jp::ProblemSpec load_problem(const CommonOpts& opts) {
    jp::ProblemSpec spec = jp::problem_from_json(load_json(opts.input_path));
    if (!opts.param_path.empty()) spec.param_json = load_json(opts.param_path);
    for (const std::string& p : opts.points) {
        std::istringstream is(p);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(is >> re)) throw jp::ParseError("bad --point " + p);
        if (is >> comma) {
            if (comma != ',' || !(is >> im)) throw jp::ParseError("bad --point " + p);
        }
        spec.grid.emplace_back(re, im);
    }
    double env_tol = 0.0;
    if (const char* env = std::getenv("JPOTAPOV_TOL")) env_tol = std::atof(env);
    const double tol = opts.tol_override > 0.0 ? opts.tol_override : env_tol;
    if (tol > 0.0) {
        spec.tol.residual = tol;
        spec.tol.psd_eig = tol;
    }
    return spec;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_param = true) {
    cmd->add_option("--input", opts.input_path, "problem JSON file")->required();
    if (with_param) cmd->add_option("--param", opts.param_path, "parameter JSON file");
    cmd->add_option("--point", opts.points, "evaluation point RE or RE,IM (repeatable)");
    cmd->add_option("--tol", opts.tol_override, "identity-check slack override");
    cmd->add_option("--format", opts.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

int run_check(const CommonOpts& opts) {
    const jp::ProblemSpec spec = load_problem(opts);
    const jp::PotapovSeq seq = spec.sequence();
    jp::Json report;
    report["classification"] = jp::to_string(seq.classification());
    jp::Json orders = jp::Json::array();
    for (int k = 0; k <= seq.order(); ++k) {
        const jp::PotapovSeq pre = seq.prefix(k);
        if (pre.classification() == jp::Classification::Invalid) break;
        const jp::BallParams& bp = pre.ball();
        orders.push_back(jp::Json{{"order", k},
                                  {"M", jp::to_json(bp.M)},
                                  {"L", jp::to_json(bp.L)},
                                  {"R", jp::to_json(bp.R)}});
    }
    report["orders"] = std::move(orders);
    if (seq.classification() != jp::Classification::Invalid) {
        report["unique"] = jp::uniqueness(seq).unique;
    }
    std::cout << report.dump(2) << "\n";
    switch (seq.classification()) {
        case jp::Classification::Strict: return kExitOk;
        case jp::Classification::Degenerate: return kExitDegenerate;
        case jp::Classification::Invalid: return kExitInvalid;
    }
    return kExitUsage;
}

int run_solve(const CommonOpts& opts) {
    const jp::ProblemSpec spec = load_problem(opts);
    const jp::PotapovSeq seq = spec.sequence();
    const auto param = spec.parameter();
    const jp::QuotientPair f = param ? jp::lft_solution(seq, *param)
                                     : jp::central_function(seq);
    // first n+4 Taylor coefficients (orders 0..n+3)
    const int depth = seq.order() + 3;
    const auto coeffs = jp::taylor_coeffs(f.left, depth);
    double residual = 0.0;
    for (int k = 0; k <= seq.order(); ++k) {
        residual = std::max(residual,
                            (coeffs[static_cast<size_t>(k)] - seq.coeff(k)).cwiseAbs().maxCoeff());
    }
    jp::Json taylor = jp::Json::array();
    for (const jp::CMatrix& c : coeffs) taylor.push_back(jp::to_json(c));
    jp::Json report{{"f", jp::to_json(f.left)},
                    {"f_right", jp::to_json(f.right)},
                    {"taylor", std::move(taylor)},
                    {"interpolation_residual", residual}};
    if (!spec.grid.empty()) {
        jp::Json values = jp::Json::array();
        for (const jp::Complex& w : spec.grid) {
            values.push_back(jp::Json{{"w", jp::to_json(w)}, {"value", jp::to_json(f.left(w))}});
        }
        report["values"] = std::move(values);
    }
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int run_weyl(const CommonOpts& opts) {
    const jp::ProblemSpec spec = load_problem(opts);
    const jp::PotapovSeq seq = spec.sequence();
    if (spec.grid.empty()) throw jp::InvalidParam("weyl needs at least one evaluation point");
    std::vector<jp::WeylBall> balls;
    for (const jp::Complex& w : spec.grid) balls.push_back(jp::weyl_ball(seq, w));
    if (opts.format == "csv") {
        std::cout << jp::weyl_ball_csv_header(seq.dim());
        for (const jp::WeylBall& b : balls) std::cout << jp::weyl_ball_csv_row(b);
    } else {
        jp::Json arr = jp::Json::array();
        for (const jp::WeylBall& b : balls) arr.push_back(jp::to_json(b));
        std::cout << arr.dump(2) << "\n";
    }
    return kExitOk;
}

int run_limit(const CommonOpts& opts, int order) {
    const jp::ProblemSpec spec = load_problem(opts);
    jp::PotapovSeq seq = spec.sequence();
    if (spec.grid.empty()) throw jp::InvalidParam("limit needs an evaluation point");
    if (order < seq.order()) throw jp::InvalidParam("--order must not undercut the sequence");
    // an already extended tower passes through unchanged; shorter input is
    // completed centrally
    const jp::PotapovSeq tower =
        order > seq.order() ? jp::extend_central(seq, order - seq.order()) : seq;
    const jp::LimitTable table = jp::limit_study(tower, spec.grid.front(), order);
    if (opts.format == "csv") {
        std::cout << jp::limit_table_csv(table);
    } else {
        jp::Json rows = jp::Json::array();
        for (const jp::LimitRow& row : table.rows) {
            rows.push_back(jp::Json{{"order", row.order},
                                    {"M", jp::to_json(row.center)},
                                    {"L", jp::to_json(row.l_raw)},
                                    {"R", jp::to_json(row.r_raw)},
                                    {"rank_L", row.rank_l},
                                    {"rank_R", row.rank_r}});
        }
        std::cout << jp::Json{{"rows", std::move(rows)},
                              {"L_pg_mapped", jp::to_json(table.l_pg_mapped)},
                              {"R_pg_mapped", jp::to_json(table.r_pg_mapped)},
                              {"stagnated", table.stagnated}}
                         .dump(2)
                  << "\n";
    }
    return kExitOk;
}

int run_pg(const CommonOpts& opts) {
    const jp::ProblemSpec spec = load_problem(opts);
    const jp::PotapovSeq seq = spec.sequence();
    std::cout << jp::seq_to_json(jp::pg_transform_seq(seq)).dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Caratheodory-type interpolation for J-Potapov functions"};
    app.require_subcommand(1);

    CommonOpts check_opts, solve_opts, weyl_opts, limit_opts, pg_opts;
    int limit_order = 0;
    std::uint64_t verify_seed = 1;
    int verify_count = 25;

    CLI::App* check = app.add_subcommand("check", "classify a sequence and print ball parameters");
    add_common(check, check_opts, false);
    CLI::App* solve = app.add_subcommand("solve", "emit f_S with its Taylor check");
    add_common(solve, solve_opts);
    CLI::App* weyl = app.add_subcommand("weyl", "Weyl matrix balls at grid points");
    add_common(weyl, weyl_opts, false);
    CLI::App* limit = app.add_subcommand("limit", "ball parameter table of the central tower");
    add_common(limit, limit_opts, false);
    limit->add_option("--order", limit_order, "tower order N")->required();
    CLI::App* pg = app.add_subcommand("pg", "Potapov-Ginzburg transform of the sequence");
    add_common(pg, pg_opts, false);
    CLI::App* verify = app.add_subcommand("verify", "run the identity suite on random instances");
    verify->add_option("--seed", verify_seed, "PRNG seed");
    verify->add_option("--count", verify_count, "number of random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (check->parsed()) return run_check(check_opts);
        if (solve->parsed()) return run_solve(solve_opts);
        if (weyl->parsed()) return run_weyl(weyl_opts);
        if (limit->parsed()) return run_limit(limit_opts, limit_order);
        if (pg->parsed()) return run_pg(pg_opts);
        if (verify->parsed()) {
            return jp::run_verification(verify_seed, verify_count, std::cout) ? kExitOk : kExitUsage;
        }
    } catch (const jp::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const jp::OutsideCommonDomain& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOutsideDomain;
    } catch (const jp::NotStrict& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotStrict;
    } catch (const jp::NotPotapov& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
