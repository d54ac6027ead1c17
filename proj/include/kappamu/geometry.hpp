#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kappamu/scalar.hpp"

namespace kappamu {

// Vector field in coordinate components: v = sum_a comp[a] * d/dx^a.
struct VectorField {
  std::vector<ScalarExpr> comp;

  bool is_zero() const;
  VectorField operator+(const VectorField &o) const;
  VectorField operator-(const VectorField &o) const;
  VectorField scaled(const ScalarExpr &c) const;
  VectorField scaled(const Rational &c) const;
};

VectorField zero_vector(const CoordSystemPtr &coords);

// [X,Y]^a = sum_b (X^b d_b Y^a - Y^b d_b X^a).
VectorField lie_bracket(const VectorField &x, const VectorField &y);

// Components against a frame, one ScalarExpr per frame vector.
using FrameVec = std::vector<ScalarExpr>;

FrameVec fv_zero(const CoordSystemPtr &coords, std::size_t dim);
FrameVec fv_basis(const CoordSystemPtr &coords, std::size_t dim, std::size_t i);
FrameVec fv_add(const FrameVec &a, const FrameVec &b);
FrameVec fv_sub(const FrameVec &a, const FrameVec &b);
FrameVec fv_scale(const FrameVec &a, const ScalarExpr &c);
FrameVec fv_scale(const FrameVec &a, const Rational &c);
bool fv_is_zero(const FrameVec &a);
std::string fv_to_string(const FrameVec &a);

// Ordered frame of dim vector fields with a constant diagonal metric
// g(e_i, e_j) = metric[i] * delta_ij. Entries are +-1 for inputs in signature
// form; rescaled structures use general nonzero rationals. Invertibility with
// a one-term determinant is checked at construction so decomposition stays
// inside the Laurent ring.
class Frame {
public:
  Frame(CoordSystemPtr coords, std::vector<VectorField> vectors,
        std::vector<Rational> metric);

  std::size_t dim() const noexcept { return vectors_.size(); }
  std::size_t n() const noexcept { return (dim() - 1) / 2; }
  const CoordSystemPtr &coords() const noexcept { return coords_; }
  const VectorField &vector(std::size_t i) const { return vectors_.at(i); }
  const Rational &metric(std::size_t i) const { return metric_.at(i); }
  const std::vector<Rational> &metric() const noexcept { return metric_; }
  const ScalarExpr &det() const noexcept { return det_; }

  // Solves v = sum_i c_i e_i exactly.
  FrameVec decompose(const VectorField &v) const;
  VectorField reconstruct(const FrameVec &c) const;

  // g of two frame-component vectors.
  ScalarExpr inner(const FrameVec &a, const FrameVec &b) const;

  // Directional derivative e_i(f), and X(f) for a frame-component X.
  ScalarExpr dirderiv(std::size_t i, const ScalarExpr &f) const;
  ScalarExpr dirderiv(const FrameVec &x, const ScalarExpr &f) const;

private:
  CoordSystemPtr coords_;
  std::vector<VectorField> vectors_;
  std::vector<Rational> metric_;
  ScalarExpr det_;
  std::vector<std::vector<ScalarExpr>> adjugate_; // row-major inverse * det
};

// c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k.
class StructureConstants {
public:
  explicit StructureConstants(const Frame &f);

  const ScalarExpr &c(std::size_t k, std::size_t i, std::size_t j) const {
    return c_[(k * dim_ + i) * dim_ + j];
  }
  std::size_t dim() const noexcept { return dim_; }

private:
  std::size_t dim_;
  std::vector<ScalarExpr> c_;
};

// Gamma^k_ij with nabla_{e_i} e_j = sum_k Gamma^k_ij e_k.
class ConnectionTable {
public:
  ConnectionTable(const CoordSystemPtr &coords, std::size_t dim);

  const ScalarExpr &gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return g_[(i * dim_ + j) * dim_ + k];
  }
  ScalarExpr &gamma(std::size_t i, std::size_t j, std::size_t k) {
    return g_[(i * dim_ + j) * dim_ + k];
  }
  std::size_t dim() const noexcept { return dim_; }

  // nabla_{e_i} of a frame-component vector field.
  FrameVec covariant_vec(const Frame &f, std::size_t i, const FrameVec &u) const;

private:
  std::size_t dim_;
  std::vector<ScalarExpr> g_;
};

// Levi-Civita connection of a constant diagonal frame metric. The Koszul
// formula collapses to
//   Gamma^k_ij = (d_k c^k_ij - d_i c^i_jk + d_j c^j_ki) / (2 d_k),
// with d_i the metric diagonal.
ConnectionTable koszul_connection(const Frame &f, const StructureConstants &sc);

// R^l_kij with R(e_i, e_j) e_k = sum_l R^l_kij e_l, for
// R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
class CurvatureTable {
public:
  CurvatureTable(const CoordSystemPtr &coords, std::size_t dim);

  const ScalarExpr &r(std::size_t l, std::size_t k, std::size_t i,
                      std::size_t j) const {
    return r_[((l * dim_ + k) * dim_ + i) * dim_ + j];
  }
  ScalarExpr &r(std::size_t l, std::size_t k, std::size_t i, std::size_t j) {
    return r_[((l * dim_ + k) * dim_ + i) * dim_ + j];
  }
  std::size_t dim() const noexcept { return dim_; }

  // R(X,Y)Z by multilinear expansion.
  FrameVec apply(const Frame &f, const FrameVec &x, const FrameVec &y,
                 const FrameVec &z) const;

  // Lowered tensor Riem(W,Z,X,Y) = g(R(X,Y)Z, W) on frame indices.
  ScalarExpr lowered(const Frame &f, std::size_t w, std::size_t z,
                     std::size_t x, std::size_t y) const;

private:
  std::size_t dim_;
  std::vector<ScalarExpr> r_;
};

CurvatureTable curvature_tensor(const Frame &f, const ConnectionTable &conn,
                                const StructureConstants &sc);

// (1,1)-tensor in frame components: T e_j = sum_i m(i,j) e_i.
class OperatorField {
public:
  OperatorField(const CoordSystemPtr &coords, std::size_t dim);
  static OperatorField identity(const CoordSystemPtr &coords, std::size_t dim);

  const ScalarExpr &m(std::size_t i, std::size_t j) const {
    return m_[i * dim_ + j];
  }
  ScalarExpr &m(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }
  std::size_t dim() const noexcept { return dim_; }
  const CoordSystemPtr &coords() const noexcept { return coords_; }

  bool is_zero() const;
  OperatorField operator+(const OperatorField &o) const;
  OperatorField operator-(const OperatorField &o) const;
  OperatorField operator-() const;
  // Composition (this after o).
  OperatorField compose(const OperatorField &o) const;
  OperatorField scaled(const ScalarExpr &c) const;
  OperatorField scaled(const Rational &c) const;
  ScalarExpr trace() const;
  FrameVec apply(const FrameVec &u) const;
  FrameVec column(std::size_t j) const;

  // Metric adjoint T* with g(TX, Y) = g(X, T*Y).
  OperatorField adjoint(const Frame &f) const;

  bool operator==(const OperatorField &o) const { return m_ == o.m_; }
  std::string to_string(const Frame &f) const;

private:
  CoordSystemPtr coords_;
  std::size_t dim_;
  std::vector<ScalarExpr> m_;
};

// Covariant derivative of a (1,1)-tensor along e_i:
// (nabla_i T)e_j = nabla_i(T e_j) - T(nabla_i e_j).
OperatorField covariant_derivative_operator(const Frame &f,
                                            const ConnectionTable &conn,
                                            const OperatorField &t,
                                            std::size_t i);

// Lowered antisymmetric 2-tensor on frame indices.
class TwoForm {
public:
  TwoForm(const CoordSystemPtr &coords, std::size_t dim);

  const ScalarExpr &m(std::size_t i, std::size_t j) const {
    return m_[i * dim_ + j];
  }
  ScalarExpr &m(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }
  std::size_t dim() const noexcept { return dim_; }

  bool operator==(const TwoForm &o) const { return m_ == o.m_; }

private:
  std::size_t dim_;
  std::vector<ScalarExpr> m_;
};

// (nabla_i Phi)(e_j, e_k) = e_i(Phi_jk) - Phi(nabla_i e_j, e_k)
//                          - Phi(e_j, nabla_i e_k).
TwoForm covariant_derivative_two_form(const Frame &f,
                                      const ConnectionTable &conn,
                                      const TwoForm &phi, std::size_t i);

// Ricci contraction Ric(e_j, e_k) = sum_i R^i_kij and the metric-raised
// operator Q with g(QX, Y) = Ric(X, Y).
ScalarExpr ricci(const Frame &f, const CurvatureTable &curv, std::size_t j,
                 std::size_t k);
OperatorField ricci_operator(const Frame &f, const CurvatureTable &curv);

// K(X,Y) = Riem(X,Y,X,Y) / (g(X,X)g(Y,Y) - g(X,Y)^2). Exact division only;
// throws DomainError when the plane is degenerate or the denominator does not
// divide the numerator in the Laurent ring.
ScalarExpr sectional_curvature(const Frame &f, const CurvatureTable &curv,
                               const FrameVec &x, const FrameVec &y);

// Residuals for the connection/curvature invariants; zero means the
// invariant holds.
FrameVec torsion_residual(const Frame &f, const ConnectionTable &conn,
                          const StructureConstants &sc, std::size_t i,
                          std::size_t j);
ScalarExpr metric_compat_residual(const Frame &f, const ConnectionTable &conn,
                                  std::size_t k, std::size_t i, std::size_t j);
FrameVec bianchi_residual(const Frame &f, const CurvatureTable &curv,
                          std::size_t i, std::size_t j, std::size_t k);

} // namespace kappamu
