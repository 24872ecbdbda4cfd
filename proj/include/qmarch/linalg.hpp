#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace qmarch::linalg {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

/// Throws std::invalid_argument if any entry is NaN or Inf.
void check_finite(const CMatrix& m, const std::string& what);
void check_finite(const CVector& v, const std::string& what);

double max_abs(const CMatrix& m);

bool is_hermitian(const CMatrix& m, double tol = kHermitianTol);
bool is_unitary(const CMatrix& u, double tol = kUnitaryTol);

/// S = (M + M^dag)/2, A = (M - M^dag)/2, so that S + A = M exactly.
std::pair<CMatrix, CMatrix> split_sym_antisym(const CMatrix& m);

/// [[0, M], [M^dag, 0]], hermitian, twice the dimension of M.
CMatrix hermitian_dilation(const CMatrix& m);

/// e^{scale*H} for hermitian H via eigendecomposition. The input is
/// symmetrized before decomposing; inputs farther than kHermitianTol from
/// hermitian are rejected.
CMatrix expm_hermitian(const CMatrix& h, Complex scale);

/// Matrix exponential by Pade scaling-and-squaring for general square input.
CMatrix expm_general(const CMatrix& a);

struct Norms {
  double two_norm;  // largest singular value
  double inf_norm;  // max row sum
};
Norms norms(const CMatrix& m);
double two_norm(const CMatrix& m);
double inf_norm(const CMatrix& m);

/// sigma_max / sigma_min; throws std::domain_error when sigma_min falls
/// below 1e-14 * sigma_max.
double condition_number(const CMatrix& m);

/// ||I - M|| * ||(I - M)^-1|| in the spectral norm, the conditioning of the
/// implicit marching system built from M.
double implicit_kappa(const CMatrix& m);

/// Varah diagonal-dominance margin min_i(|m_ii| - sum_{j!=i}|m_ij|).
/// Positive values bound ||m^-1||_inf <= 1/gamma.
double varah_gamma(const CMatrix& m);

}  // namespace qmarch::linalg
