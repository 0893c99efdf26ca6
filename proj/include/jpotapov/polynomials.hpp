#pragma once

#include <optional>
#include <vector>

#include "jpotapov/sequence.hpp"
#include "jpotapov/types.hpp"

namespace jp {

/// Matrix polynomial as a coefficient list C_0..C_d (all p x q). Trailing
/// zero blocks are allowed; the formal degree only matters for reciprocals.
class MatrixPoly {
  public:
    MatrixPoly() = default;
    explicit MatrixPoly(std::vector<CMatrix> coeffs, std::optional<int> formal_degree = {});

    static MatrixPoly constant(CMatrix c);
    static MatrixPoly zero(int rows, int cols);
    static MatrixPoly identity(int m);

    int rows() const;
    int cols() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::optional<int> formal_degree() const { return formal_degree_; }

    const std::vector<CMatrix>& coeffs() const { return coeffs_; }
    /// Coefficient of w^k; zero for k beyond the stored degree.
    CMatrix coeff(int k) const;

    /// Horner evaluation.
    CMatrix operator()(Complex w) const;

    /// Multiplication by w^k.
    MatrixPoly shifted(int k = 1) const;

    MatrixPoly operator+(const MatrixPoly& rhs) const;
    MatrixPoly operator-(const MatrixPoly& rhs) const;
    /// Full convolution product.
    MatrixPoly operator*(const MatrixPoly& rhs) const;

    /// Coefficientwise A * this and this * B.
    MatrixPoly left_mul(const CMatrix& a) const;
    MatrixPoly right_mul(const CMatrix& b) const;

    /// Coefficientwise adjoint (used by boundary identities).
    MatrixPoly adjoint_coeffs() const;

    /// max_k ||C_k - rhs.C_k||.
    double coeff_distance(const MatrixPoly& rhs) const;

    /// Drops trailing blocks of norm <= eps (never below degree 0).
    MatrixPoly trimmed(double eps = 0.0) const;

  private:
    std::vector<CMatrix> coeffs_;
    std::optional<int> formal_degree_;
};

CMatrix eval(const MatrixPoly& p, Complex w);

/// Reciprocal at formal degree n: coefficient k maps to (coefficient n-k)*.
MatrixPoly reciprocal(const MatrixPoly& b, int n);

/// Assembles [[a, b], [c, d]] into one (2p) x (2q) polynomial.
MatrixPoly block2x2(const MatrixPoly& a, const MatrixPoly& b, const MatrixPoly& c,
                    const MatrixPoly& d);

enum class PolyConstruction { General, Recursive, Strict };

/// The interpolation polynomials pi, rho, sigma, tau of one construction.
/// rho(0) = tau(0) = I and pi(0) = sigma(0) = A_0 in all of them.
struct FourPolys {
    MatrixPoly pi, rho, sigma, tau;
    PolyConstruction construction;
};

/// Pseudoinverse-based construction (canonical representatives V, W).
FourPolys four_polys_general(const PotapovSeq& seq);

/// Order-by-order construction from the Schur-type recursion.
FourPolys four_polys_recursive(const PotapovSeq& seq);

/// Closed-form nondegenerate construction with true inverses; agrees with
/// four_polys_general coefficientwise on strict sequences.
FourPolys four_polys_strict(const PotapovSeq& seq);

/// The 2m x 2m generating polynomials of the solution set (strict case).
struct ResolventPair {
    MatrixPoly c, d;
    int order;
};

ResolventPair resolvents(const PotapovSeq& seq);

/// U_mm = [[0, I], [-I, 0]].
CMatrix resolvent_symplectic_unit(int m);

/// Degree-one factors whose ordered product reproduces the resolvents:
/// c = c0 G_1 ... G_n and d = H_n ... H_1 d0.
struct ResolventFactors {
    MatrixPoly c0, d0;
    std::vector<MatrixPoly> g;  ///< G_1..G_n
    std::vector<MatrixPoly> h;  ///< H_1..H_n
    std::vector<CMatrix> k;     ///< Schur-Potapov parameters K_1..K_n
};

ResolventFactors resolvent_factors(const PotapovSeq& seq);

enum class Orientation { Left, Right };

/// Rational matrix function num/den with quotient side recorded.
struct RationalMatrixFn {
    MatrixPoly num, den;
    Orientation orientation = Orientation::Left;

    int dim() const { return num.rows(); }
    /// num(w) den(w)^{-1} or den(w)^{-1} num(w) depending on orientation.
    CMatrix operator()(Complex w) const;
};

struct BPFirst {
    Complex alpha;  ///< in the open unit disk
    CMatrix p;      ///< nonzero idempotent with JP >= 0
};
struct BPSecond {
    Complex alpha;
    CMatrix q;  ///< nonzero idempotent with -JQ >= 0
};
struct BPThird {
    Complex u;  ///< unimodular
    CMatrix r;  ///< nonzero nilpotent (R^2 = 0) with JR >= 0
};

RationalMatrixFn bp_factor(const BPFirst& data, const SignatureMatrix& j,
                           const Tolerances& tol = {});
RationalMatrixFn bp_factor(const BPSecond& data, const SignatureMatrix& j,
                           const Tolerances& tol = {});
RationalMatrixFn bp_factor(const BPThird& data, const SignatureMatrix& j,
                           const Tolerances& tol = {});

/// Normalized elementary Blaschke factor b_alpha.
Complex blaschke_factor(Complex alpha, Complex w);

}  // namespace jp
