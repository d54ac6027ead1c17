#include "kappamu/geometry.hpp"

#include <sstream>

namespace kappamu {

bool VectorField::is_zero() const {
  for (const auto &c : comp)
    if (!c.is_zero())
      return false;
  return true;
}

VectorField VectorField::operator+(const VectorField &o) const {
  VectorField r = *this;
  for (std::size_t a = 0; a < comp.size(); ++a)
    r.comp[a] += o.comp[a];
  return r;
}

VectorField VectorField::operator-(const VectorField &o) const {
  VectorField r = *this;
  for (std::size_t a = 0; a < comp.size(); ++a)
    r.comp[a] -= o.comp[a];
  return r;
}

VectorField VectorField::scaled(const ScalarExpr &c) const {
  VectorField r;
  r.comp.reserve(comp.size());
  for (const auto &x : comp)
    r.comp.push_back(x * c);
  return r;
}

VectorField VectorField::scaled(const Rational &c) const {
  VectorField r;
  r.comp.reserve(comp.size());
  for (const auto &x : comp)
    r.comp.push_back(x.scaled(c));
  return r;
}

VectorField zero_vector(const CoordSystemPtr &coords) {
  VectorField v;
  v.comp.assign(coords->size(), ScalarExpr(coords));
  return v;
}

VectorField lie_bracket(const VectorField &x, const VectorField &y) {
  const std::size_t dim = x.comp.size();
  const CoordSystemPtr &coords = x.comp.at(0).coords();
  VectorField r = zero_vector(coords);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      r.comp[a] += x.comp[b] * y.comp[a].partial_diff(b);
      r.comp[a] -= y.comp[b] * x.comp[a].partial_diff(b);
    }
  return r;
}

FrameVec fv_zero(const CoordSystemPtr &coords, std::size_t dim) {
  return FrameVec(dim, ScalarExpr(coords));
}

FrameVec fv_basis(const CoordSystemPtr &coords, std::size_t dim,
                  std::size_t i) {
  FrameVec v = fv_zero(coords, dim);
  v[i] = ScalarExpr::constant(coords, 1);
  return v;
}

FrameVec fv_add(const FrameVec &a, const FrameVec &b) {
  FrameVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

FrameVec fv_sub(const FrameVec &a, const FrameVec &b) {
  FrameVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

FrameVec fv_scale(const FrameVec &a, const ScalarExpr &c) {
  FrameVec r;
  r.reserve(a.size());
  for (const auto &x : a)
    r.push_back(x * c);
  return r;
}

FrameVec fv_scale(const FrameVec &a, const Rational &c) {
  FrameVec r;
  r.reserve(a.size());
  for (const auto &x : a)
    r.push_back(x.scaled(c));
  return r;
}

bool fv_is_zero(const FrameVec &a) {
  for (const auto &x : a)
    if (!x.is_zero())
      return false;
  return true;
}

std::string fv_to_string(const FrameVec &a) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i)
      out << ", ";
    out << a[i].to_string();
  }
  out << ")";
  return out.str();
}

namespace {

// Cofactor-expansion determinant; frames are desk-scale so the recursion is
// cheap.
ScalarExpr matrix_det(const std::vector<std::vector<ScalarExpr>> &m,
                      const CoordSystemPtr &coords) {
  const std::size_t n = m.size();
  if (n == 0)
    return ScalarExpr::constant(coords, 1);
  if (n == 1)
    return m[0][0];
  ScalarExpr sum(coords);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero())
      continue;
    std::vector<std::vector<ScalarExpr>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ScalarExpr> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col)
          row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    ScalarExpr term = m[0][col] * matrix_det(sub, coords);
    if (col % 2)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

ScalarExpr matrix_minor(const std::vector<std::vector<ScalarExpr>> &m,
                        std::size_t row, std::size_t col,
                        const CoordSystemPtr &coords) {
  std::vector<std::vector<ScalarExpr>> sub;
  const std::size_t n = m.size();
  sub.reserve(n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    if (r == row)
      continue;
    std::vector<ScalarExpr> rowv;
    rowv.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c)
      if (c != col)
        rowv.push_back(m[r][c]);
    sub.push_back(std::move(rowv));
  }
  return matrix_det(sub, coords);
}

} // namespace

Frame::Frame(CoordSystemPtr coords, std::vector<VectorField> vectors,
             std::vector<Rational> metric)
    : coords_(std::move(coords)), vectors_(std::move(vectors)),
      metric_(std::move(metric)), det_(coords_) {
  const std::size_t dim = vectors_.size();
  if (dim == 0 || dim % 2 == 0)
    throw DomainError("frame dimension must be odd and positive");
  if (dim != coords_->size())
    throw DomainError("frame dimension must equal the coordinate count");
  if (metric_.size() != dim)
    throw DomainError("metric diagonal has wrong length");
  for (const auto &d : metric_)
    if (d == 0)
      throw DomainError("metric diagonal entries must be nonzero");
  for (const auto &v : vectors_)
    if (v.comp.size() != dim)
      throw DomainError("frame vector has wrong component count");

  // Column i of the frame matrix holds the coordinate components of e_i.
  std::vector<std::vector<ScalarExpr>> m(
      dim, std::vector<ScalarExpr>(dim, ScalarExpr(coords_)));
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t i = 0; i < dim; ++i)
      m[a][i] = vectors_[i].comp[a];

  det_ = matrix_det(m, coords_);
  if (det_.is_zero())
    throw DomainError("frame is singular");
  if (!det_.is_monomial())
    throw DomainError("frame determinant is not a unit monomial: " +
                      det_.to_string());

  adjugate_.assign(dim, std::vector<ScalarExpr>(dim, ScalarExpr(coords_)));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t a = 0; a < dim; ++a) {
      ScalarExpr cof = matrix_minor(m, a, i, coords_);
      if ((a + i) % 2)
        cof = -cof;
      adjugate_[i][a] = std::move(cof);
    }
}

FrameVec Frame::decompose(const VectorField &v) const {
  const std::size_t dim = vectors_.size();
  if (v.comp.size() != dim)
    throw DomainError("vector field has wrong component count");
  FrameVec c = fv_zero(coords_, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    ScalarExpr num(coords_);
    for (std::size_t a = 0; a < dim; ++a)
      num += adjugate_[i][a] * v.comp[a];
    c[i] = num.divide_by_monomial(det_);
  }
  return c;
}

VectorField Frame::reconstruct(const FrameVec &c) const {
  VectorField v = zero_vector(coords_);
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    for (std::size_t a = 0; a < v.comp.size(); ++a)
      v.comp[a] += vectors_[i].comp[a] * c[i];
  return v;
}

ScalarExpr Frame::inner(const FrameVec &a, const FrameVec &b) const {
  ScalarExpr r(coords_);
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    r += (a[i] * b[i]).scaled(metric_[i]);
  return r;
}

ScalarExpr Frame::dirderiv(std::size_t i, const ScalarExpr &f) const {
  ScalarExpr r(coords_);
  const VectorField &e = vectors_.at(i);
  for (std::size_t a = 0; a < e.comp.size(); ++a)
    r += e.comp[a] * f.partial_diff(a);
  return r;
}

ScalarExpr Frame::dirderiv(const FrameVec &x, const ScalarExpr &f) const {
  ScalarExpr r(coords_);
  for (std::size_t i = 0; i < vectors_.size(); ++i)
    r += x[i] * dirderiv(i, f);
  return r;
}

StructureConstants::StructureConstants(const Frame &f) : dim_(f.dim()) {
  c_.assign(dim_ * dim_ * dim_, ScalarExpr(f.coords()));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      FrameVec b = f.decompose(lie_bracket(f.vector(i), f.vector(j)));
      for (std::size_t k = 0; k < dim_; ++k) {
        c_[(k * dim_ + i) * dim_ + j] = b[k];
        c_[(k * dim_ + j) * dim_ + i] = -b[k];
      }
    }
}

ConnectionTable::ConnectionTable(const CoordSystemPtr &coords, std::size_t dim)
    : dim_(dim), g_(dim * dim * dim, ScalarExpr(coords)) {}

FrameVec ConnectionTable::covariant_vec(const Frame &f, std::size_t i,
                                        const FrameVec &u) const {
  FrameVec r = fv_zero(f.coords(), dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    r[k] = f.dirderiv(i, u[k]);
    for (std::size_t j = 0; j < dim_; ++j)
      r[k] += gamma(i, j, k) * u[j];
  }
  return r;
}

ConnectionTable koszul_connection(const Frame &f,
                                  const StructureConstants &sc) {
  const std::size_t dim = f.dim();
  ConnectionTable conn(f.coords(), dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        ScalarExpr num = sc.c(k, i, j).scaled(f.metric(k));
        num -= sc.c(i, j, k).scaled(f.metric(i));
        num += sc.c(j, k, i).scaled(f.metric(j));
        conn.gamma(i, j, k) = num.scaled(Rational(1) / (2 * f.metric(k)));
      }
  return conn;
}

CurvatureTable::CurvatureTable(const CoordSystemPtr &coords, std::size_t dim)
    : dim_(dim), r_(dim * dim * dim * dim, ScalarExpr(coords)) {}

FrameVec CurvatureTable::apply(const Frame &f, const FrameVec &x,
                               const FrameVec &y, const FrameVec &z) const {
  FrameVec out = fv_zero(f.coords(), dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero())
        continue;
      ScalarExpr xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (z[k].is_zero())
          continue;
        ScalarExpr xyz = xy * z[k];
        for (std::size_t l = 0; l < dim_; ++l)
          out[l] += r(l, k, i, j) * xyz;
      }
    }
  }
  return out;
}

ScalarExpr CurvatureTable::lowered(const Frame &f, std::size_t w,
                                   std::size_t z, std::size_t x,
                                   std::size_t y) const {
  return r(w, z, x, y).scaled(f.metric(w));
}

CurvatureTable curvature_tensor(const Frame &f, const ConnectionTable &conn,
                                const StructureConstants &sc) {
  const std::size_t dim = f.dim();
  CurvatureTable curv(f.coords(), dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
          ScalarExpr v = f.dirderiv(i, conn.gamma(j, k, l));
          v -= f.dirderiv(j, conn.gamma(i, k, l));
          for (std::size_t m = 0; m < dim; ++m) {
            v += conn.gamma(j, k, m) * conn.gamma(i, m, l);
            v -= conn.gamma(i, k, m) * conn.gamma(j, m, l);
            v -= sc.c(m, i, j) * conn.gamma(m, k, l);
          }
          curv.r(l, k, i, j) = v;
          curv.r(l, k, j, i) = -v;
        }
  return curv;
}

OperatorField::OperatorField(const CoordSystemPtr &coords, std::size_t dim)
    : coords_(coords), dim_(dim), m_(dim * dim, ScalarExpr(coords)) {}

OperatorField OperatorField::identity(const CoordSystemPtr &coords,
                                      std::size_t dim) {
  OperatorField t(coords, dim);
  for (std::size_t i = 0; i < dim; ++i)
    t.m(i, i) = ScalarExpr::constant(coords, 1);
  return t;
}

bool OperatorField::is_zero() const {
  for (const auto &x : m_)
    if (!x.is_zero())
      return false;
  return true;
}

OperatorField OperatorField::operator+(const OperatorField &o) const {
  OperatorField r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i)
    r.m_[i] += o.m_[i];
  return r;
}

OperatorField OperatorField::operator-(const OperatorField &o) const {
  OperatorField r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i)
    r.m_[i] -= o.m_[i];
  return r;
}

OperatorField OperatorField::operator-() const {
  OperatorField r(coords_, dim_);
  for (std::size_t i = 0; i < m_.size(); ++i)
    r.m_[i] = -m_[i];
  return r;
}

OperatorField OperatorField::compose(const OperatorField &o) const {
  OperatorField r(coords_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      ScalarExpr v(coords_);
      for (std::size_t k = 0; k < dim_; ++k)
        v += m(i, k) * o.m(k, j);
      r.m(i, j) = std::move(v);
    }
  return r;
}

OperatorField OperatorField::scaled(const ScalarExpr &c) const {
  OperatorField r(coords_, dim_);
  for (std::size_t i = 0; i < m_.size(); ++i)
    r.m_[i] = m_[i] * c;
  return r;
}

OperatorField OperatorField::scaled(const Rational &c) const {
  OperatorField r(coords_, dim_);
  for (std::size_t i = 0; i < m_.size(); ++i)
    r.m_[i] = m_[i].scaled(c);
  return r;
}

ScalarExpr OperatorField::trace() const {
  ScalarExpr t(coords_);
  for (std::size_t i = 0; i < dim_; ++i)
    t += m(i, i);
  return t;
}

FrameVec OperatorField::apply(const FrameVec &u) const {
  FrameVec r = fv_zero(coords_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      r[i] += m(i, j) * u[j];
  return r;
}

FrameVec OperatorField::column(std::size_t j) const {
  FrameVec r = fv_zero(coords_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    r[i] = m(i, j);
  return r;
}

OperatorField OperatorField::adjoint(const Frame &f) const {
  OperatorField r(coords_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      r.m(i, j) = m(j, i).scaled(f.metric(j) / f.metric(i));
  return r;
}

std::string OperatorField::to_string(const Frame &) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < dim_; ++i) {
    out << (i ? "; " : "[");
    for (std::size_t j = 0; j < dim_; ++j)
      out << (j ? ", " : "") << m(i, j).to_string();
  }
  out << "]";
  return out.str();
}

OperatorField covariant_derivative_operator(const Frame &f,
                                            const ConnectionTable &conn,
                                            const OperatorField &t,
                                            std::size_t i) {
  const std::size_t dim = t.dim();
  OperatorField r(f.coords(), dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t j = 0; j < dim; ++j) {
      ScalarExpr v = f.dirderiv(i, t.m(l, j));
      for (std::size_t m = 0; m < dim; ++m) {
        v += conn.gamma(i, m, l) * t.m(m, j);
        v -= conn.gamma(i, j, m) * t.m(l, m);
      }
      r.m(l, j) = std::move(v);
    }
  return r;
}

TwoForm::TwoForm(const CoordSystemPtr &coords, std::size_t dim)
    : dim_(dim), m_(dim * dim, ScalarExpr(coords)) {}

TwoForm covariant_derivative_two_form(const Frame &f,
                                      const ConnectionTable &conn,
                                      const TwoForm &phi, std::size_t i) {
  const std::size_t dim = phi.dim();
  TwoForm r(f.coords(), dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) {
      ScalarExpr v = f.dirderiv(i, phi.m(j, k));
      for (std::size_t m = 0; m < dim; ++m) {
        v -= conn.gamma(i, j, m) * phi.m(m, k);
        v -= conn.gamma(i, k, m) * phi.m(j, m);
      }
      r.m(j, k) = std::move(v);
    }
  return r;
}

ScalarExpr ricci(const Frame &f, const CurvatureTable &curv, std::size_t j,
                 std::size_t k) {
  ScalarExpr r(f.coords());
  for (std::size_t i = 0; i < curv.dim(); ++i)
    r += curv.r(i, k, i, j);
  return r;
}

OperatorField ricci_operator(const Frame &f, const CurvatureTable &curv) {
  const std::size_t dim = curv.dim();
  OperatorField q(f.coords(), dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t j = 0; j < dim; ++j)
      q.m(k, j) = ricci(f, curv, j, k).scaled(Rational(1) / f.metric(k));
  return q;
}

ScalarExpr sectional_curvature(const Frame &f, const CurvatureTable &curv,
                               const FrameVec &x, const FrameVec &y) {
  FrameVec rxyy = curv.apply(f, x, y, y);
  ScalarExpr num = f.inner(rxyy, x);
  ScalarExpr gxy = f.inner(x, y);
  ScalarExpr den = f.inner(x, x) * f.inner(y, y) - gxy * gxy;
  if (den.is_zero())
    throw DomainError("degenerate plane");
  auto q = ScalarExpr::try_divide_exact(num, den);
  if (!q)
    throw DomainError("sectional curvature is not Laurent: (" +
                      num.to_string() + ") / (" + den.to_string() + ")");
  return *q;
}

FrameVec torsion_residual(const Frame &f, const ConnectionTable &conn,
                          const StructureConstants &sc, std::size_t i,
                          std::size_t j) {
  FrameVec r = fv_zero(f.coords(), f.dim());
  for (std::size_t k = 0; k < f.dim(); ++k)
    r[k] = conn.gamma(i, j, k) - conn.gamma(j, i, k) - sc.c(k, i, j);
  return r;
}

ScalarExpr metric_compat_residual(const Frame &f, const ConnectionTable &conn,
                                  std::size_t k, std::size_t i,
                                  std::size_t j) {
  // e_k(g(e_i, e_j)) = 0 for a constant diagonal metric, so compatibility
  // reads d_j Gamma^j_ki + d_i Gamma^i_kj = 0.
  return conn.gamma(k, i, j).scaled(f.metric(j)) +
         conn.gamma(k, j, i).scaled(f.metric(i));
}

FrameVec bianchi_residual(const Frame &f, const CurvatureTable &curv,
                          std::size_t i, std::size_t j, std::size_t k) {
  FrameVec r = fv_zero(f.coords(), f.dim());
  for (std::size_t l = 0; l < f.dim(); ++l)
    r[l] = curv.r(l, k, i, j) + curv.r(l, i, j, k) + curv.r(l, j, k, i);
  return r;
}

} // namespace kappamu
