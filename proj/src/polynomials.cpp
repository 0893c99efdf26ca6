#include "jpotapov/polynomials.hpp"

#include <cmath>

namespace jp {

MatrixPoly::MatrixPoly(std::vector<CMatrix> coeffs, std::optional<int> formal_degree)
    : coeffs_(std::move(coeffs)), formal_degree_(formal_degree) {
    if (coeffs_.empty()) throw InvalidParam("MatrixPoly needs at least one coefficient");
    const auto r = coeffs_[0].rows();
    const auto c = coeffs_[0].cols();
    for (const CMatrix& blk : coeffs_) {
        if (blk.rows() != r || blk.cols() != c) {
            throw DimensionMismatch("MatrixPoly coefficients must share one block size");
        }
    }
    if (formal_degree_ && *formal_degree_ < degree()) {
        throw DegreeExceeded("formal degree below stored degree");
    }
}

MatrixPoly MatrixPoly::constant(CMatrix c) {
    std::vector<CMatrix> v;
    v.push_back(std::move(c));
    return MatrixPoly(std::move(v));
}

MatrixPoly MatrixPoly::zero(int rows, int cols) {
    return MatrixPoly::constant(CMatrix::Zero(rows, cols));
}

MatrixPoly MatrixPoly::identity(int m) {
    return MatrixPoly::constant(CMatrix::Identity(m, m));
}

int MatrixPoly::rows() const {
    return static_cast<int>(coeffs_[0].rows());
}

int MatrixPoly::cols() const {
    return static_cast<int>(coeffs_[0].cols());
}

CMatrix MatrixPoly::coeff(int k) const {
    if (k < 0) throw InvalidParam("negative coefficient index");
    if (k > degree()) return CMatrix::Zero(rows(), cols());
    return coeffs_[static_cast<size_t>(k)];
}

CMatrix MatrixPoly::operator()(Complex w) const {
    CMatrix acc = coeffs_.back();
    for (int k = degree() - 1; k >= 0; --k) {
        acc = w * acc + coeffs_[static_cast<size_t>(k)];
    }
    return acc;
}

MatrixPoly MatrixPoly::shifted(int k) const {
    std::vector<CMatrix> out;
    out.reserve(coeffs_.size() + static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) out.push_back(CMatrix::Zero(rows(), cols()));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return MatrixPoly(std::move(out));
}

MatrixPoly MatrixPoly::operator+(const MatrixPoly& rhs) const {
    if (rows() != rhs.rows() || cols() != rhs.cols()) {
        throw DimensionMismatch("polynomial addition needs equal block sizes");
    }
    std::vector<CMatrix> out;
    const int d = std::max(degree(), rhs.degree());
    out.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out.push_back(coeff(k) + rhs.coeff(k));
    return MatrixPoly(std::move(out));
}

MatrixPoly MatrixPoly::operator-(const MatrixPoly& rhs) const {
    if (rows() != rhs.rows() || cols() != rhs.cols()) {
        throw DimensionMismatch("polynomial subtraction needs equal block sizes");
    }
    std::vector<CMatrix> out;
    const int d = std::max(degree(), rhs.degree());
    out.reserve(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) out.push_back(coeff(k) - rhs.coeff(k));
    return MatrixPoly(std::move(out));
}

MatrixPoly MatrixPoly::operator*(const MatrixPoly& rhs) const {
    if (cols() != rhs.rows()) throw DimensionMismatch("polynomial product shape mismatch");
    std::vector<CMatrix> out(static_cast<size_t>(degree() + rhs.degree()) + 1,
                             CMatrix::Zero(rows(), rhs.cols()));
    for (int i = 0; i <= degree(); ++i) {
        for (int j = 0; j <= rhs.degree(); ++j) {
            out[static_cast<size_t>(i + j)] += coeffs_[static_cast<size_t>(i)] *
                                               rhs.coeffs_[static_cast<size_t>(j)];
        }
    }
    return MatrixPoly(std::move(out));
}

MatrixPoly MatrixPoly::left_mul(const CMatrix& a) const {
    std::vector<CMatrix> out;
    out.reserve(coeffs_.size());
    for (const CMatrix& c : coeffs_) out.push_back(a * c);
    return MatrixPoly(std::move(out));
}

MatrixPoly MatrixPoly::right_mul(const CMatrix& b) const {
    std::vector<CMatrix> out;
    out.reserve(coeffs_.size());
    for (const CMatrix& c : coeffs_) out.push_back(c * b);
    return MatrixPoly(std::move(out));
}

MatrixPoly MatrixPoly::adjoint_coeffs() const {
    std::vector<CMatrix> out;
    out.reserve(coeffs_.size());
    for (const CMatrix& c : coeffs_) out.push_back(c.adjoint());
    return MatrixPoly(std::move(out));
}

double MatrixPoly::coeff_distance(const MatrixPoly& rhs) const {
    double worst = 0.0;
    const int d = std::max(degree(), rhs.degree());
    for (int k = 0; k <= d; ++k) {
        worst = std::max(worst, (coeff(k) - rhs.coeff(k)).norm());
    }
    return worst;
}

MatrixPoly MatrixPoly::trimmed(double eps) const {
    size_t len = coeffs_.size();
    while (len > 1 && coeffs_[len - 1].norm() <= eps) --len;
    return MatrixPoly(std::vector<CMatrix>(coeffs_.begin(), coeffs_.begin() + len));
}

CMatrix eval(const MatrixPoly& p, Complex w) {
    return p(w);
}

MatrixPoly reciprocal(const MatrixPoly& b, int n) {
    if (n < 0) throw InvalidParam("formal degree must be nonnegative");
    if (b.degree() > n && b.trimmed().degree() > n) {
        throw DegreeExceeded("stored degree exceeds the formal degree");
    }
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.push_back(b.coeff(n - k).adjoint());
    return MatrixPoly(std::move(out), n);
}

MatrixPoly block2x2(const MatrixPoly& a, const MatrixPoly& b, const MatrixPoly& c,
                    const MatrixPoly& d) {
    const int p = a.rows();
    const int q = a.cols();
    if (b.rows() != p || c.cols() != q || d.rows() != c.rows() || d.cols() != b.cols()) {
        throw DimensionMismatch("block2x2 shape mismatch");
    }
    const int deg = std::max(std::max(a.degree(), b.degree()), std::max(c.degree(), d.degree()));
    std::vector<CMatrix> out;
    out.reserve(static_cast<size_t>(deg) + 1);
    for (int k = 0; k <= deg; ++k) {
        CMatrix blk(p + c.rows(), q + b.cols());
        blk.topLeftCorner(p, q) = a.coeff(k);
        blk.topRightCorner(p, b.cols()) = b.coeff(k);
        blk.bottomLeftCorner(c.rows(), q) = c.coeff(k);
        blk.bottomRightCorner(c.rows(), b.cols()) = d.coeff(k);
        out.push_back(std::move(blk));
    }
    return MatrixPoly(std::move(out));
}

namespace {

void require_admissible(const PotapovSeq& seq) {
    if (seq.classification() == Classification::Invalid) {
        throw NotPotapov("sequence is not a J-Potapov sequence");
    }
}

void require_strict(const PotapovSeq& seq) {
    if (seq.classification() != Classification::Strict) {
        throw NotStrict("operation requires a strict J-Potapov sequence");
    }
}

// pi/rho column form: C_0 = head, C_{k+1} = k-th m x m block of the stacked column.
MatrixPoly from_column(const CMatrix& head, const CMatrix& column, int m) {
    std::vector<CMatrix> coeffs;
    coeffs.push_back(head);
    for (int k = 0; k * m < column.rows(); ++k) {
        coeffs.push_back(column.block(k * m, 0, m, m));
    }
    return MatrixPoly(std::move(coeffs));
}

// sigma/tau row form: Y w eps_{n-1,m}(w) + head, so coefficient of w^{n-j} is
// the j-th block of the row Y (blocks counted left to right).
MatrixPoly from_row(const CMatrix& head, const CMatrix& row, int m) {
    const int n = static_cast<int>(row.cols()) / m;
    std::vector<CMatrix> coeffs(static_cast<size_t>(n) + 1, CMatrix::Zero(m, m));
    coeffs[0] = head;
    for (int j = 0; j < n; ++j) {
        coeffs[static_cast<size_t>(n - j)] = row.block(0, j * m, m, m);
    }
    return MatrixPoly(std::move(coeffs));
}

FourPolys order_zero(const PotapovSeq& seq, PolyConstruction tag) {
    const int m = seq.dim();
    return FourPolys{MatrixPoly::constant(seq.coeff(0)), MatrixPoly::identity(m),
                     MatrixPoly::constant(seq.coeff(0)), MatrixPoly::identity(m), tag};
}

}  // namespace

FourPolys four_polys_general(const PotapovSeq& seq) {
    require_admissible(seq);
    const int n = seq.order();
    if (n == 0) return order_zero(seq, PolyConstruction::General);
    const int m = seq.dim();
    const PotapovSeq head = seq.prefix(n - 1);
    const CMatrix& s = head.toeplitz();
    const CMatrix jn = seq.signature().block_diag(n);
    const CMatrix yn = seq.y(n);
    const CMatrix zn = seq.z(n);
    const CMatrix q_pinv = pinv(head.defect_q(), seq.tol(), head.defect_scale());
    const CMatrix p_pinv = pinv(head.defect_p(), seq.tol(), head.defect_scale());
    const CMatrix v = q_pinv * s.adjoint() * jn * yn;       // V in Y_{n,J}
    const CMatrix w = zn * jn * s.adjoint() * p_pinv;       // W in Z_{n,J}
    FourPolys out{from_column(seq.coeff(0), yn + s * v, m), from_column(CMatrix::Identity(m, m), v, m),
                  from_row(seq.coeff(0), w * s + zn, m), from_row(CMatrix::Identity(m, m), w, m),
                  PolyConstruction::General};
    return out;
}

FourPolys four_polys_strict(const PotapovSeq& seq) {
    require_strict(seq);
    const int n = seq.order();
    if (n == 0) return order_zero(seq, PolyConstruction::Strict);
    const int m = seq.dim();
    const PotapovSeq head = seq.prefix(n - 1);
    const CMatrix& s = head.toeplitz();
    const CMatrix jn = seq.signature().block_diag(n);
    const CMatrix yn = seq.y(n);
    const CMatrix zn = seq.z(n);
    const Eigen::PartialPivLU<CMatrix> p_lu(head.defect_p());
    const Eigen::PartialPivLU<CMatrix> q_lu(head.defect_q());
    const CMatrix p_inv_y = p_lu.solve(yn);
    const CMatrix z_q_inv = zn * q_lu.inverse();
    FourPolys out{from_column(seq.coeff(0), jn * p_inv_y, m),
                  from_column(CMatrix::Identity(m, m), jn * s.adjoint() * p_inv_y, m),
                  from_row(seq.coeff(0), z_q_inv * jn, m),
                  from_row(CMatrix::Identity(m, m), z_q_inv * s.adjoint() * jn, m),
                  PolyConstruction::Strict};
    return out;
}

FourPolys four_polys_recursive(const PotapovSeq& seq) {
    require_admissible(seq);
    const CMatrix& j = seq.signature().matrix();
    FourPolys cur = order_zero(seq, PolyConstruction::Recursive);
    for (int k = 0; k < seq.order(); ++k) {
        const PotapovSeq pre = seq.prefix(k);
        const BallParams& bp = pre.ball();
        const CMatrix delta = seq.coeff(k + 1) - bp.M;
        const CMatrix t = bp.L_pinv * delta;
        const CMatrix u = delta * bp.R_pinv;
        const MatrixPoly pi_next =
            cur.pi + reciprocal(cur.tau, k).left_mul(j).right_mul(t).shifted();
        const MatrixPoly rho_next =
            cur.rho + reciprocal(cur.sigma, k).left_mul(j).right_mul(t).shifted();
        const MatrixPoly sigma_next =
            cur.sigma + reciprocal(cur.rho, k).left_mul(u).right_mul(j).shifted();
        const MatrixPoly tau_next =
            cur.tau + reciprocal(cur.pi, k).left_mul(u).right_mul(j).shifted();
        cur = FourPolys{pi_next, rho_next, sigma_next, tau_next, PolyConstruction::Recursive};
    }
    return cur;
}

ResolventPair resolvents(const PotapovSeq& seq) {
    require_strict(seq);
    const int n = seq.order();
    const int m = seq.dim();
    const CMatrix& j = seq.signature().matrix();
    const FourPolys fp = four_polys_strict(seq);
    const BallParams& bp = seq.ball();
    const MatrixPoly tau_rec = reciprocal(fp.tau, n).left_mul(j).shifted();
    const MatrixPoly sigma_rec = reciprocal(fp.sigma, n).left_mul(j).shifted();
    const MatrixPoly rho_rec = reciprocal(fp.rho, n).right_mul(j).shifted();
    const MatrixPoly pi_rec = reciprocal(fp.pi, n).right_mul(j).shifted();
    CMatrix right_scale = CMatrix::Zero(2 * m, 2 * m);
    right_scale.topLeftCorner(m, m) = bp.sqrtL_pinv;
    right_scale.bottomRightCorner(m, m) = bp.sqrtR_pinv;
    CMatrix left_scale = CMatrix::Zero(2 * m, 2 * m);
    left_scale.topLeftCorner(m, m) = bp.sqrtR_pinv;
    left_scale.bottomRightCorner(m, m) = bp.sqrtL_pinv;
    return ResolventPair{block2x2(tau_rec, fp.pi, sigma_rec, fp.rho).right_mul(right_scale),
                         block2x2(rho_rec, pi_rec, fp.sigma, fp.tau).left_mul(left_scale), n};
}

CMatrix resolvent_symplectic_unit(int m) {
    CMatrix u = CMatrix::Zero(2 * m, 2 * m);
    u.topRightCorner(m, m) = CMatrix::Identity(m, m);
    u.bottomLeftCorner(m, m) = -CMatrix::Identity(m, m);
    return u;
}

ResolventFactors resolvent_factors(const PotapovSeq& seq) {
    require_strict(seq);
    const int n = seq.order();
    if (n < 1) throw InvalidParam("resolvent_factors needs order n >= 1");
    ResolventFactors out;
    const ResolventPair base = resolvents(seq.prefix(0));
    out.c0 = base.c;
    out.d0 = base.d;
    for (int k = 1; k <= n; ++k) {
        const BallParams low = seq.prefix(k - 1).ball();
        const BallParams high = seq.prefix(k).ball();
        const CMatrix kk = low.sqrtL_pinv * (seq.coeff(k) - low.M) * low.sqrtR_pinv;
        out.k.push_back(kk);
        const CMatrix l_ratio = low.sqrtL * high.sqrtL_pinv;
        const CMatrix r_ratio = low.sqrtR * high.sqrtR_pinv;
        // G_k = [[I, K],[K*, I]] diag(w L-ratio, R-ratio)
        MatrixPoly g = block2x2(MatrixPoly::constant(l_ratio).shifted(),
                                MatrixPoly::constant(kk * r_ratio),
                                MatrixPoly::constant(kk.adjoint() * l_ratio).shifted(),
                                MatrixPoly::constant(r_ratio));
        // H_k = diag(w R-ratio', L-ratio') [[I, K*],[K, I]]
        const CMatrix r_ratio_t = high.sqrtR_pinv * low.sqrtR;
        const CMatrix l_ratio_t = high.sqrtL_pinv * low.sqrtL;
        MatrixPoly h = block2x2(MatrixPoly::constant(r_ratio_t).shifted(),
                                MatrixPoly::constant(r_ratio_t * kk.adjoint()).shifted(),
                                MatrixPoly::constant(l_ratio_t * kk),
                                MatrixPoly::constant(l_ratio_t));
        out.g.push_back(std::move(g));
        out.h.push_back(std::move(h));
    }
    return out;
}

CMatrix RationalMatrixFn::operator()(Complex w) const {
    const CMatrix d = den(w);
    Eigen::FullPivLU<CMatrix> lu(d);
    if (!lu.isInvertible()) {
        throw SingularDenominator("rational function denominator singular at sample point");
    }
    if (orientation == Orientation::Left) {
        return num(w) * lu.inverse();
    }
    return lu.solve(num(w));
}

Complex blaschke_factor(Complex alpha, Complex w) {
    if (alpha == Complex(0.0, 0.0)) return w;
    return (std::abs(alpha) / alpha) * (alpha - w) / (1.0 - std::conj(alpha) * w);
}

namespace {

void check_idempotent(const CMatrix& x, const char* what, const Tolerances& tol) {
    const double scale = std::max(1.0, spectral_norm(x));
    if ((x * x - x).norm() > 1e3 * tol.residual * scale * scale) {
        throw InvalidFactorData(std::string(what) + " is not idempotent");
    }
}

void check_signed_psd(const CMatrix& jx, const char* what, const Tolerances& tol) {
    const double scale = std::max(1.0, jx.norm());
    if ((jx - jx.adjoint()).norm() > 1e3 * tol.residual * scale) {
        throw InvalidFactorData(std::string(what) + " is not Hermitian");
    }
    if (hermitian_eigenvalues(jx).minCoeff() < -tol.psd_eig * scale) {
        throw InvalidFactorData(std::string(what) + " is not positive semidefinite");
    }
}

void check_nonzero(const CMatrix& x, const char* what) {
    if (x.norm() <= 1e-14) throw InvalidFactorData(std::string(what) + " must be nonzero");
}

}  // namespace

RationalMatrixFn bp_factor(const BPFirst& data, const SignatureMatrix& j, const Tolerances& tol) {
    const int m = j.dim();
    if (data.p.rows() != m || data.p.cols() != m) throw DimensionMismatch("P must be m x m");
    if (std::abs(data.alpha) >= 1.0) throw InvalidFactorData("alpha must lie in the open disk");
    check_nonzero(data.p, "P");
    check_idempotent(data.p, "P", tol);
    check_signed_psd(j.matrix() * data.p, "JP", tol);
    const CMatrix eye = CMatrix::Identity(m, m);
    if (data.alpha == Complex(0.0, 0.0)) {
        // B(w) = I + (w - 1) P
        return RationalMatrixFn{MatrixPoly({eye - data.p, data.p}), MatrixPoly::identity(m),
                                Orientation::Left};
    }
    const Complex c = std::abs(data.alpha) / data.alpha;
    // B(w) = [ (1 - conj(a) w)(I-P) + c (a - w) P ] / (1 - conj(a) w)
    MatrixPoly num({(eye - data.p) + c * data.alpha * data.p,
                    -std::conj(data.alpha) * (eye - data.p) - c * data.p});
    MatrixPoly den({eye, -std::conj(data.alpha) * eye});
    return RationalMatrixFn{std::move(num), std::move(den), Orientation::Left};
}

RationalMatrixFn bp_factor(const BPSecond& data, const SignatureMatrix& j, const Tolerances& tol) {
    const int m = j.dim();
    if (data.q.rows() != m || data.q.cols() != m) throw DimensionMismatch("Q must be m x m");
    if (std::abs(data.alpha) >= 1.0) throw InvalidFactorData("alpha must lie in the open disk");
    check_nonzero(data.q, "Q");
    check_idempotent(data.q, "Q", tol);
    check_signed_psd(-j.matrix() * data.q, "-JQ", tol);
    const CMatrix eye = CMatrix::Identity(m, m);
    if (data.alpha == Complex(0.0, 0.0)) {
        // C(w) = [ w (I - Q) + Q ] / w
        return RationalMatrixFn{MatrixPoly({data.q, eye - data.q}),
                                MatrixPoly({CMatrix::Zero(m, m), eye}), Orientation::Left};
    }
    const Complex c = std::abs(data.alpha) / data.alpha;
    // C(w) = [ c (a - w)(I-Q) + (1 - conj(a) w) Q ] / (c (a - w))
    MatrixPoly num({c * data.alpha * (eye - data.q) + data.q,
                    -c * (eye - data.q) - std::conj(data.alpha) * data.q});
    MatrixPoly den({c * data.alpha * eye, -c * eye});
    return RationalMatrixFn{std::move(num), std::move(den), Orientation::Left};
}

RationalMatrixFn bp_factor(const BPThird& data, const SignatureMatrix& j, const Tolerances& tol) {
    const int m = j.dim();
    if (data.r.rows() != m || data.r.cols() != m) throw DimensionMismatch("R must be m x m");
    if (std::abs(std::abs(data.u) - 1.0) > tol.residual) {
        throw InvalidFactorData("u must be unimodular");
    }
    check_nonzero(data.r, "R");
    const double rscale = std::max(1.0, data.r.norm());
    if ((data.r * data.r).norm() > 1e3 * tol.residual * rscale * rscale) {
        throw InvalidFactorData("R is not nilpotent of order two");
    }
    check_signed_psd(j.matrix() * data.r, "JR", tol);
    const CMatrix eye = CMatrix::Identity(m, m);
    // D(w) = [ (u - w) I - (u + w) R ] / (u - w)
    MatrixPoly num({data.u * (eye - data.r), -(eye + data.r)});
    MatrixPoly den({data.u * eye, -eye});
    return RationalMatrixFn{std::move(num), std::move(den), Orientation::Left};
}

}  // namespace jp
