#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "jpotapov/solve.hpp"
#include "jpotapov/weyl.hpp"

namespace jp {

using Json = nlohmann::json;

// Complex numbers serialize as [re, im]; matrices as row-major nested arrays.
Json to_json(const Complex& z);
Json to_json(const CMatrix& m);
Json to_json(const MatrixPoly& p);
Json to_json(const RationalMatrixFn& f);
Json to_json(const WeylBall& ball);

Complex complex_from_json(const Json& j);
CMatrix cmatrix_from_json(const Json& j);
MatrixPoly matrix_poly_from_json(const Json& j);

/// {"m": int, "J": {"diag": [...]} | {"matrix": [...]}, "A": [matrix, ...]}
PotapovSeq seq_from_json(const Json& j, const Tolerances& tol = {});
Json seq_to_json(const PotapovSeq& seq);

/// {"constant": matrix} | {"poly": {"coeffs": [...]}}
SchurParam param_from_json(const Json& j);
Json param_to_json(const SchurParam& s);

/// One problem instance as handed to the CLI.
struct ProblemSpec {
    Json sequence_json;
    std::optional<Json> param_json;
    std::vector<Complex> grid;
    Tolerances tol;

    PotapovSeq sequence() const { return seq_from_json(sequence_json, tol); }
    std::optional<SchurParam> parameter() const;
};

ProblemSpec problem_from_json(const Json& j);

std::string limit_table_csv(const LimitTable& table);
std::string weyl_ball_csv_header(int m);
std::string weyl_ball_csv_row(const WeylBall& ball);

}  // namespace jp
