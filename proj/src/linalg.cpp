#include "qmarch/linalg.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace qmarch::linalg {

void check_finite(const CMatrix& m, const std::string& what) {
  if (!m.allFinite()) {
    throw std::invalid_argument(what + ": non-finite entries");
  }
}

void check_finite(const CVector& v, const std::string& what) {
  if (!v.allFinite()) {
    throw std::invalid_argument(what + ": non-finite entries");
  }
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

bool is_unitary(const CMatrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  CMatrix gram = u.adjoint() * u;
  gram -= CMatrix::Identity(u.rows(), u.cols());
  return max_abs(gram) <= tol;
}

std::pair<CMatrix, CMatrix> split_sym_antisym(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("split_sym_antisym: matrix must be square");
  }
  check_finite(m, "split_sym_antisym");
  CMatrix s = 0.5 * (m + m.adjoint());
  CMatrix a = 0.5 * (m - m.adjoint());
  return {std::move(s), std::move(a)};
}

CMatrix hermitian_dilation(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_dilation: matrix must be square");
  }
  check_finite(m, "hermitian_dilation");
  const Eigen::Index n = m.rows();
  CMatrix d = CMatrix::Zero(2 * n, 2 * n);
  d.topRightCorner(n, n) = m;
  d.bottomLeftCorner(n, n) = m.adjoint();
  return d;
}

CMatrix expm_hermitian(const CMatrix& h, Complex scale) {
  if (h.rows() != h.cols()) {
    throw std::invalid_argument("expm_hermitian: matrix must be square");
  }
  check_finite(h, "expm_hermitian");
  if (!is_hermitian(h)) {
    throw std::invalid_argument("expm_hermitian: input exceeds hermiticity tolerance");
  }
  CMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym);
  const RVector& w = es.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    phases[i] = std::exp(scale * w[i]);
  }
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

CMatrix expm_general(const CMatrix& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("expm_general: matrix must be square");
  }
  check_finite(a, "expm_general");
  return a.exp();  // Pade-13 scaling and squaring
}

Norms norms(const CMatrix& m) {
  check_finite(m, "norms");
  Eigen::JacobiSVD<CMatrix> svd(m);
  double two = m.size() == 0 ? 0.0 : svd.singularValues()(0);
  double inf = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    inf = std::max(inf, m.row(i).cwiseAbs().sum());
  }
  return {two, inf};
}

double two_norm(const CMatrix& m) { return norms(m).two_norm; }
double inf_norm(const CMatrix& m) { return norms(m).inf_norm; }

double condition_number(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("condition_number: matrix must be square");
  }
  check_finite(m, "condition_number");
  Eigen::JacobiSVD<CMatrix> svd(m);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(m.rows() - 1);
  if (smin <= 1e-14 * smax) {
    throw std::domain_error("condition_number: matrix is singular to working precision");
  }
  return smax / smin;
}

double implicit_kappa(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("implicit_kappa: matrix must be square");
  }
  CMatrix im = CMatrix::Identity(m.rows(), m.cols()) - m;
  double cond = condition_number(im);  // rejects singular I - M
  (void)cond;
  return two_norm(im) * two_norm(im.inverse());
}

double varah_gamma(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("varah_gamma: matrix must be square");
  }
  double gamma = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    double off = m.row(i).cwiseAbs().sum() - std::abs(m(i, i));
    gamma = std::min(gamma, std::abs(m(i, i)) - off);
  }
  return gamma;
}

}  // namespace qmarch::linalg
