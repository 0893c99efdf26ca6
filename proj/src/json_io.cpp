#include "jpotapov/json_io.hpp"

#include <sstream>

namespace jp {

Json to_json(const Complex& z) {
    return Json::array({z.real(), z.imag()});
}

Json to_json(const CMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const MatrixPoly& p) {
    Json coeffs = Json::array();
    for (const CMatrix& c : p.coeffs()) coeffs.push_back(to_json(c));
    Json out{{"coeffs", std::move(coeffs)}};
    if (p.formal_degree()) out["formal_degree"] = *p.formal_degree();
    return out;
}

Json to_json(const RationalMatrixFn& f) {
    return Json{{"num", to_json(f.num)},
                {"den", to_json(f.den)},
                {"orientation", f.orientation == Orientation::Left ? "left" : "right"}};
}

Json to_json(const WeylBall& ball) {
    return Json{{"w", to_json(ball.w)},       {"order", ball.order},
                {"M", to_json(ball.center)},  {"L", to_json(ball.l_raw)},
                {"R", to_json(ball.r_raw)},   {"Lnorm", to_json(ball.l_norm)},
                {"Rhalf", to_json(ball.r_half)}};
}

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex entries must be [re, im]");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

CMatrix cmatrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
    const size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be nonempty arrays");
    const size_t cols = j[0].size();
    CMatrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix rows");
        for (size_t k = 0; k < cols; ++k) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                complex_from_json(j[i][k]);
        }
    }
    return out;
}

MatrixPoly matrix_poly_from_json(const Json& j) {
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
        throw ParseError("matrix polynomial needs a nonempty \"coeffs\" array");
    }
    std::vector<CMatrix> coeffs;
    for (const Json& c : j["coeffs"]) coeffs.push_back(cmatrix_from_json(c));
    std::optional<int> formal;
    if (j.contains("formal_degree")) formal = j["formal_degree"].get<int>();
    return MatrixPoly(std::move(coeffs), formal);
}

PotapovSeq seq_from_json(const Json& j, const Tolerances& tol) {
    if (!j.contains("m") || !j.contains("J") || !j.contains("A")) {
        throw ParseError("sequence JSON needs \"m\", \"J\" and \"A\"");
    }
    const int m = j["m"].get<int>();
    if (m < 1) throw ParseError("m must be positive");
    SignatureMatrix sig = [&]() {
        const Json& sj = j["J"];
        if (sj.contains("diag")) {
            std::vector<int> signs = sj["diag"].get<std::vector<int>>();
            if (static_cast<int>(signs.size()) != m) throw ParseError("J diag length != m");
            return SignatureMatrix::diagonal(signs);
        }
        if (sj.contains("matrix")) {
            CMatrix mat = cmatrix_from_json(sj["matrix"]);
            if (mat.rows() != m) throw ParseError("J matrix size != m");
            try {
                return SignatureMatrix(std::move(mat));
            } catch (const InvalidParam& e) {
                throw ParseError(e.what());
            }
        }
        throw ParseError("J needs \"diag\" or \"matrix\"");
    }();
    if (!j["A"].is_array() || j["A"].empty()) throw ParseError("\"A\" must be a nonempty array");
    std::vector<CMatrix> coeffs;
    for (const Json& a : j["A"]) {
        CMatrix c = cmatrix_from_json(a);
        if (c.rows() != m || c.cols() != m) throw ParseError("coefficient size != m");
        coeffs.push_back(std::move(c));
    }
    return PotapovSeq(std::move(sig), std::move(coeffs), tol);
}

Json seq_to_json(const PotapovSeq& seq) {
    Json coeffs = Json::array();
    for (const CMatrix& a : seq.coeffs()) coeffs.push_back(to_json(a));
    Json sig;
    bool diag = true;
    const CMatrix& jm = seq.signature().matrix();
    for (Eigen::Index i = 0; diag && i < jm.rows(); ++i) {
        for (Eigen::Index k = 0; diag && k < jm.cols(); ++k) {
            if (i != k && std::abs(jm(i, k)) > 0.0) diag = false;
        }
    }
    if (diag) {
        Json signs = Json::array();
        for (Eigen::Index i = 0; i < jm.rows(); ++i) {
            signs.push_back(jm(i, i).real() > 0 ? 1 : -1);
        }
        sig = Json{{"diag", std::move(signs)}};
    } else {
        sig = Json{{"matrix", to_json(jm)}};
    }
    return Json{{"m", seq.dim()}, {"J", std::move(sig)}, {"A", std::move(coeffs)}};
}

SchurParam param_from_json(const Json& j) {
    if (j.contains("constant")) return SchurParam::constant(cmatrix_from_json(j["constant"]));
    if (j.contains("poly")) return SchurParam::poly(matrix_poly_from_json(j["poly"]));
    throw ParseError("parameter JSON needs \"constant\" or \"poly\"");
}

Json param_to_json(const SchurParam& s) {
    if (s.is_constant()) return Json{{"constant", to_json(s.as_poly().coeff(0))}};
    return Json{{"poly", to_json(s.as_poly())}};
}

std::optional<SchurParam> ProblemSpec::parameter() const {
    if (!param_json) return std::nullopt;
    return param_from_json(*param_json);
}

ProblemSpec problem_from_json(const Json& j) {
    ProblemSpec spec;
    if (j.contains("tolerances")) {
        const Json& t = j["tolerances"];
        if (t.contains("rank_rel")) spec.tol.rank_rel = t["rank_rel"].get<double>();
        if (t.contains("psd_eig")) spec.tol.psd_eig = t["psd_eig"].get<double>();
        if (t.contains("residual")) spec.tol.residual = t["residual"].get<double>();
        if (spec.tol.rank_rel <= 0 || spec.tol.psd_eig <= 0 || spec.tol.residual <= 0) {
            throw ParseError("tolerances must be strictly positive");
        }
    }
    spec.sequence_json = j;
    if (j.contains("param")) spec.param_json = j["param"];
    if (j.contains("grid")) {
        const Json& g = j["grid"];
        if (g.contains("points")) {
            for (const Json& p : g["points"]) spec.grid.push_back(complex_from_json(p));
        } else if (g.contains("disk_mesh")) {
            const double radius = g["disk_mesh"].at("radius").get<double>();
            const int count = g["disk_mesh"].at("count").get<int>();
            if (count < 1 || radius <= 0) throw ParseError("bad disk_mesh");
            for (int i = 0; i < count; ++i) {
                const double theta = 2.0 * M_PI * i / count;
                spec.grid.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
            }
        } else {
            throw ParseError("grid needs \"points\" or \"disk_mesh\"");
        }
        for (const Complex& p : spec.grid) {
            if (std::abs(p) >= 1.0) throw ParseError("grid points must lie in the open disk");
        }
    }
    return spec;
}

std::string limit_table_csv(const LimitTable& table) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    if (table.rows.empty()) return "order,center_norm,rank_L,rank_R\n";
    const Eigen::Index m = table.rows.front().l_raw.rows();
    os << "order,center_norm";
    for (Eigen::Index i = 0; i < m; ++i) os << ",L_eig_" << (i + 1);
    for (Eigen::Index i = 0; i < m; ++i) os << ",R_eig_" << (i + 1);
    os << ",rank_L,rank_R\n";
    for (const LimitRow& row : table.rows) {
        os << row.order << "," << spectral_norm(row.center);
        const Eigen::VectorXd le = hermitian_eigenvalues(row.l_raw);
        const Eigen::VectorXd re = hermitian_eigenvalues(row.r_raw);
        for (Eigen::Index i = 0; i < m; ++i) os << "," << le(i);
        for (Eigen::Index i = 0; i < m; ++i) os << "," << re(i);
        os << "," << row.rank_l << "," << row.rank_r << "\n";
    }
    return os.str();
}

std::string weyl_ball_csv_header(int m) {
    std::ostringstream os;
    os << "w_re,w_im,order,center_norm";
    for (int i = 0; i < m; ++i) os << ",L_eig_" << (i + 1);
    for (int i = 0; i < m; ++i) os << ",R_eig_" << (i + 1);
    os << "\n";
    return os.str();
}

std::string weyl_ball_csv_row(const WeylBall& ball) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << ball.w.real() << "," << ball.w.imag() << "," << ball.order << ","
       << spectral_norm(ball.center);
    const Eigen::VectorXd le = hermitian_eigenvalues(ball.l_raw);
    const Eigen::VectorXd re = hermitian_eigenvalues(ball.r_raw);
    for (Eigen::Index i = 0; i < le.size(); ++i) os << "," << le(i);
    for (Eigen::Index i = 0; i < re.size(); ++i) os << "," << re(i);
    os << "\n";
    return os.str();
}

}  // namespace jp
