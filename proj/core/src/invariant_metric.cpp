#include "ricci_lab/invariant_metric.hpp"

#include "ricci_lab/errors.hpp"
#include "ricci_lab/smith.hpp"

#include <cmath>

namespace ricci_lab::submersion {

namespace {

using S = D1;

template <class T>
DenseMatrix<T> inverse(DenseMatrix<T> m) {
  const int n = m.rows;
  DenseMatrix<T> inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = T(1.0);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(value_of(m(r, c))) > std::abs(value_of(m(piv, c)))) piv = r;
    if (value_of(m(piv, c)) == 0.0) throw SingularMetricError("singular block in invariant metric", {});
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(c, j), m(piv, j));
        std::swap(inv(c, j), inv(piv, j));
      }
    const T p = T(1.0) / m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) = m(c, j) * p;
      inv(c, j) = inv(c, j) * p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const T f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) = m(r, j) - f * m(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

template <class T>
std::vector<T> mat_vec(const DenseMatrix<T>& m, const std::vector<T>& v) {
  std::vector<T> out(static_cast<std::size_t>(m.rows), T(0.0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] = out[i] + m(i, j) * v[j];
  return out;
}

template <class T>
T form(const std::vector<T>& u, const DenseMatrix<T>& m, const std::vector<T>& v) {
  T acc(0.0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) acc = acc + u[i] * m(i, j) * v[j];
  return acc;
}

// Blocks and their base derivatives: value/derivative along the outer seed, for one inner direction.
struct SeededBlocks {
  DenseMatrix<D2> B, G;
};

SeededBlocks evaluate_seeded(const InvariantBlockMetric& m, const Eigen::VectorXd& b, const Eigen::VectorXd& inner,
                             const Eigen::VectorXd& outer) {
  std::vector<D2> x(static_cast<std::size_t>(m.base_dim()));
  for (int i = 0; i < m.base_dim(); ++i) x[i] = D2(D1(b[i], inner[i]), D1(outer[i], 0.0));
  SeededBlocks s{DenseMatrix<D2>(m.base_dim(), m.base_dim()), DenseMatrix<D2>(m.angle_dim(), m.angle_dim())};
  m.blocks(x, s.B, s.G);
  return s;
}

void check_base_point(const InvariantBlockMetric& m, const Eigen::VectorXd& b) {
  if (b.size() != m.base_dim()) throw DomainError("base point dimension mismatch for " + m.name());
}

// Everything the O'Neill terms need at one point, differentiated once along X.
struct Frame {
  int p = 0, q = 0, k = 0;
  DenseMatrix<S> B, Binv, G, Ginv;
  std::vector<DenseMatrix<S>> dB, dG;  // per base direction
  std::vector<std::vector<S>> U;       // G-orthonormal vertical frame
  std::vector<double> christoffel_base;  // Gamma^m_{kl} of the base block at index (m*p + k)*p + l
};

Frame build_frame(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing, const Eigen::VectorXd& b,
                  const Eigen::VectorXd& x_base) {
  Frame f;
  f.p = m.base_dim();
  f.q = m.angle_dim();
  f.k = static_cast<int>(killing.cols());
  if (killing.rows() != f.q) throw DomainError("Killing fields must have one coefficient per angle coordinate");
  for (int kdir = 0; kdir < f.p; ++kdir) {
    Eigen::VectorXd inner = Eigen::VectorXd::Unit(f.p, kdir);
    SeededBlocks s = evaluate_seeded(m, b, inner, x_base);
    auto take = [](const DenseMatrix<D2>& src, bool derivative) {
      DenseMatrix<S> out(src.rows, src.cols);
      for (std::size_t i = 0; i < src.a.size(); ++i)
        out.a[i] = derivative ? S(src.a[i].v.d, src.a[i].d.d) : S(src.a[i].v.v, src.a[i].d.v);
      return out;
    };
    if (kdir == 0) {
      f.B = take(s.B, false);
      f.G = take(s.G, false);
    }
    f.dB.push_back(take(s.B, true));
    f.dG.push_back(take(s.G, true));
  }
  f.Binv = inverse(f.B);
  f.Ginv = inverse(f.G);

  for (int j = 0; j < f.k; ++j) {
    std::vector<S> u(static_cast<std::size_t>(f.q));
    for (int a = 0; a < f.q; ++a) u[a] = S(killing(a, j));
    for (const auto& prev : f.U) {
      const S c = form(prev, f.G, u);
      for (int a = 0; a < f.q; ++a) u[a] = u[a] - c * prev[a];
    }
    const S norm2 = form(u, f.G, u);
    if (!(norm2.v > 1e-24)) throw DomainError("Killing fields are linearly dependent at this point (orbit not free)");
    const S inv = 1.0 / sqrt(norm2);
    for (auto& c : u) c = c * inv;
    f.U.push_back(u);
  }

  f.christoffel_base.assign(static_cast<std::size_t>(f.p * f.p * f.p), 0.0);
  for (int mm = 0; mm < f.p; ++mm)
    for (int kk = 0; kk < f.p; ++kk)
      for (int ll = 0; ll < f.p; ++ll) {
        double acc = 0.0;
        for (int i = 0; i < f.p; ++i)
          acc += 0.5 * f.Binv(mm, i).v * (f.dB[kk](i, ll).v + f.dB[ll](i, kk).v - f.dB[i](kk, ll).v);
        f.christoffel_base[(mm * f.p + kk) * f.p + ll] = acc;
      }
  return f;
}

std::vector<S> mean_curvature_of(const Frame& f, const std::vector<int>& mask) {
  std::vector<S> v(static_cast<std::size_t>(f.p), S(0.0));
  for (const auto& u0 : f.U) {
    std::vector<S> u = u0;
    if (!mask.empty()) {
      std::vector<S> masked(u.size(), S(0.0));
      for (int a : mask) masked[a] = u[a];
      u = masked;
    }
    for (int kk = 0; kk < f.p; ++kk) v[kk] = v[kk] + form(u, f.dG[kk], u);
  }
  std::vector<S> n = mat_vec(f.Binv, v);
  for (auto& c : n) c = -0.5 * c;
  return n;
}

double vertical_norm2(const Frame& f, const std::vector<double>& y_angle) {
  double acc = 0.0;
  for (const auto& u : f.U) {
    double c = 0.0;
    for (int a = 0; a < f.q; ++a)
      for (int b = 0; b < f.q; ++b) c += u[a].v * f.G(a, b).v * y_angle[b];
    acc += c * c;
  }
  return acc;
}

// (1/2) G^{-1} sum_k X_b^k dG[k] w, values only.
std::vector<double> half_ginv_dg(const Frame& f, const Eigen::VectorXd& xb, const std::vector<double>& w) {
  std::vector<double> tmp(static_cast<std::size_t>(f.q), 0.0);
  for (int kk = 0; kk < f.p; ++kk)
    for (int a = 0; a < f.q; ++a)
      for (int b = 0; b < f.q; ++b) tmp[a] += xb[kk] * f.dG[kk](a, b).v * w[b];
  std::vector<double> out(static_cast<std::size_t>(f.q), 0.0);
  for (int a = 0; a < f.q; ++a)
    for (int b = 0; b < f.q; ++b) out[a] += 0.5 * f.Ginv(a, b).v * tmp[b];
  return out;
}

}  // namespace

Eigen::MatrixXd metric_at(const InvariantBlockMetric& m, const Eigen::VectorXd& base_point) {
  check_base_point(m, base_point);
  const int p = m.base_dim(), q = m.angle_dim();
  Eigen::VectorXd zero = Eigen::VectorXd::Zero(p);
  SeededBlocks s = evaluate_seeded(m, base_point, zero, zero);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p + q, p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) g(i, j) = s.B(i, j).v.v;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) g(p + i, p + j) = s.G(i, j).v.v;
  return g;
}

double CurvatureTensors::sectional(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  // R(X,Y)Y = R^a_{bcd} Y^b X^c Y^d
  Eigen::VectorXd ryy = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) ryy[a] += riemann[((a * n + b) * n + c) * n + d] * y[b] * x[c] * y[d];
  const double xx = x.dot(metric * x), yy = y.dot(metric * y), xy = x.dot(metric * y);
  const double area2 = xx * yy - xy * xy;
  if (!(area2 > 0.0)) throw DomainError("sectional curvature of a degenerate plane");
  return x.dot(metric * ryy) / area2;
}

CurvatureTensors curvature_tensors(const InvariantBlockMetric& m, const Eigen::VectorXd& base_point) {
  check_base_point(m, base_point);
  const int p = m.base_dim(), q = m.angle_dim(), n = p + q;
  auto embed = [&](const SeededBlocks& s, int which) {
    // which: 0 value, 1 inner derivative, 2 outer derivative, 3 mixed
    auto pick = [which](const D2& z) {
      switch (which) {
        case 0: return z.v.v;
        case 1: return z.v.d;
        case 2: return z.d.v;
        default: return z.d.d;
      }
    };
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) g(i, j) = pick(s.B(i, j));
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j) g(p + i, p + j) = pick(s.G(i, j));
    return g;
  };

  Eigen::MatrixXd g;
  std::vector<Eigen::MatrixXd> dg(n, Eigen::MatrixXd::Zero(n, n));
  std::vector<std::vector<Eigen::MatrixXd>> ddg(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  for (int k = 0; k < p; ++k)
    for (int l = 0; l < p; ++l) {
      SeededBlocks s = evaluate_seeded(m, base_point, Eigen::VectorXd::Unit(p, k), Eigen::VectorXd::Unit(p, l));
      if (k == 0 && l == 0) g = embed(s, 0);
      if (l == 0) dg[k] = embed(s, 1);
      ddg[l][k] = embed(s, 3);
    }
  Eigen::LLT<Eigen::MatrixXd> llt(g);
  if (llt.info() != Eigen::Success) throw SingularMetricError("invariant metric not positive definite", {});
  const Eigen::MatrixXd gi = g.inverse();

  auto idx3 = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  std::vector<double> gamma(static_cast<std::size_t>(n * n * n), 0.0);
  // dgamma[l] holds d_l Gamma^a_{bc}
  std::vector<std::vector<double>> dgamma(n, std::vector<double>(static_cast<std::size_t>(n * n * n), 0.0));
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      Eigen::VectorXd lowered(n);
      for (int d = 0; d < n; ++d) lowered[d] = dg[b](d, c) + dg[c](d, b) - dg[d](b, c);
      Eigen::VectorXd raised = 0.5 * gi * lowered;
      for (int a = 0; a < n; ++a) gamma[idx3(a, b, c)] = raised[a];
      for (int l = 0; l < p; ++l) {
        Eigen::VectorXd dlow(n);
        for (int d = 0; d < n; ++d) dlow[d] = ddg[l][b](d, c) + ddg[l][c](d, b) - ddg[l][d](b, c);
        Eigen::VectorXd draised = 0.5 * (gi * dlow - gi * dg[l] * gi * lowered);
        for (int a = 0; a < n; ++a) dgamma[l][idx3(a, b, c)] = draised[a];
      }
    }

  CurvatureTensors t;
  t.n = n;
  t.metric = g;
  t.riemann.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double r = dgamma[c][idx3(a, d, b)] - dgamma[d][idx3(a, c, b)];
          for (int e = 0; e < n; ++e) r += gamma[idx3(a, c, e)] * gamma[idx3(e, d, b)] - gamma[idx3(a, d, e)] * gamma[idx3(e, c, b)];
          t.riemann[((a * n + b) * n + c) * n + d] = r;
        }
  t.ricci = Eigen::MatrixXd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d)
      for (int a = 0; a < n; ++a) t.ricci(b, d) += t.riemann[((a * n + b) * n + a) * n + d];
  t.ricci = 0.5 * (t.ricci + t.ricci.transpose()).eval();
  return t;
}

Eigen::MatrixXd killing_annihilator(const Eigen::MatrixXd& killing) {
  IntegerMatrix kt(static_cast<std::size_t>(killing.cols()), static_cast<std::size_t>(killing.rows()));
  for (int i = 0; i < killing.rows(); ++i)
    for (int j = 0; j < killing.cols(); ++j) {
      const double v = killing(i, j);
      if (v != std::round(v)) throw DomainError("Killing coefficients must be integers to build a quotient chart");
      kt(j, i) = static_cast<long long>(std::llround(v));
    }
  IntegerMatrix basis = integer_kernel_basis(kt);
  Eigen::MatrixXd l(basis.cols(), basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) l(j, i) = static_cast<double>(basis(i, j));
  return l;
}

MetricChart quotient_chart(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                           const Eigen::MatrixXd& annihilator, std::string name) {
  const int p = m.base_dim(), q = m.angle_dim();
  if (annihilator.cols() != q || annihilator.rows() != q - killing.cols())
    throw DomainError("annihilator must have angle_dim - rank rows");
  if ((annihilator * killing).norm() > 1e-12) throw DomainError("annihilator does not kill the Killing fields");
  Box box = m.base_box();
  for (int i = 0; i < annihilator.rows(); ++i) box.push_back({-10.0, 10.0});
  const InvariantBlockMetric* metric = &m;
  return MetricChart(std::move(name), box, [metric, annihilator, p, q](const Eigen::VectorXd& x) {
    Eigen::MatrixXd full = metric_at(*metric, x.head(p));
    const Eigen::MatrixXd G = full.block(p, p, q, q);
    const int r = static_cast<int>(annihilator.rows());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(p + r, p + r);
    g.topLeftCorner(p, p) = full.topLeftCorner(p, p);
    g.bottomRightCorner(r, r) = (annihilator * G.inverse() * annihilator.transpose()).inverse();
    return g;
  });
}

Eigen::VectorXd vertical_pairings(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                  const Eigen::VectorXd& base_point, const Eigen::VectorXd& x) {
  const int p = m.base_dim(), q = m.angle_dim();
  if (x.size() != p + q) throw DomainError("tangent vector dimension mismatch");
  const Eigen::MatrixXd g = metric_at(m, base_point);
  return killing.transpose() * g.block(p, p, q, q) * x.tail(q);
}

Eigen::MatrixXd horizontal_basis(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                 const Eigen::VectorXd& base_point) {
  const int p = m.base_dim(), q = m.angle_dim(), n = p + q;
  const Eigen::MatrixXd g = metric_at(m, base_point);
  // g-orthonormal vertical frame
  std::vector<Eigen::VectorXd> vertical;
  for (int j = 0; j < killing.cols(); ++j) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v.tail(q) = killing.col(j);
    for (const auto& u : vertical) v -= u.dot(g * v) * u;
    const double norm = std::sqrt(v.dot(g * v));
    if (!(norm > 1e-12)) throw DomainError("Killing fields are linearly dependent at this point (orbit not free)");
    vertical.push_back(v / norm);
  }
  std::vector<Eigen::VectorXd> horizontal;
  for (int c = 0; c < n && static_cast<int>(horizontal.size()) < n - static_cast<int>(vertical.size()); ++c) {
    Eigen::VectorXd v = Eigen::VectorXd::Unit(n, c);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : vertical) v -= u.dot(g * v) * u;
      for (const auto& h : horizontal) v -= h.dot(g * v) * h;
    }
    const double norm = std::sqrt(std::max(0.0, v.dot(g * v)));
    if (norm > 1e-8) horizontal.push_back(v / norm);
  }
  Eigen::MatrixXd out(n, static_cast<int>(horizontal.size()));
  for (std::size_t i = 0; i < horizontal.size(); ++i) out.col(static_cast<int>(i)) = horizontal[i];
  return out;
}

Eigen::VectorXd mean_curvature(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                               const Eigen::VectorXd& base_point, const std::vector<int>& angle_mask) {
  check_base_point(m, base_point);
  Frame f = build_frame(m, killing, base_point, Eigen::VectorXd::Zero(m.base_dim()));
  std::vector<S> n = mean_curvature_of(f, angle_mask);
  Eigen::VectorXd out(f.p);
  for (int i = 0; i < f.p; ++i) out[i] = n[i].v;
  return out;
}

OneillTerms oneill_terms(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                         const Eigen::VectorXd& base_point, const Eigen::VectorXd& x,
                         const std::vector<int>& angle_mask) {
  check_base_point(m, base_point);
  return oneill_terms(m, killing, curvature_tensors(m, base_point), base_point, x, angle_mask);
}

OneillTerms oneill_terms(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing, const CurvatureTensors& curv,
                         const Eigen::VectorXd& base_point, const Eigen::VectorXd& x,
                         const std::vector<int>& angle_mask) {
  check_base_point(m, base_point);
  const int p = m.base_dim(), q = m.angle_dim();
  if (x.size() != p + q) throw DomainError("tangent vector dimension mismatch");
  const Eigen::VectorXd xb = x.head(p);
  const Eigen::VectorXd xa = x.tail(q);
  Frame f = build_frame(m, killing, base_point, xb);

  std::vector<double> xav(xa.data(), xa.data() + q);
  {
    double scale = 0.0;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) scale += xav[a] * f.G(a, b).v * xav[b];
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) scale += xb[i] * f.B(i, j).v * xb[j];
    const double vert = vertical_norm2(f, xav);
    if (vert > 1e-18 * std::max(scale, 1e-300))
      throw DomainError("oneill_terms needs a horizontal vector");
  }

  OneillTerms t;
  if (curv.n != p + q) throw DomainError("curvature tensors belong to a different metric");
  t.ricci = x.dot(curv.ricci * x);

  // mean curvature N and its covariant derivative along X
  const std::vector<S> nvec = mean_curvature_of(f, angle_mask);
  std::vector<double> dn_base(static_cast<std::size_t>(p), 0.0);
  for (int mm = 0; mm < p; ++mm) {
    double acc = nvec[mm].d;
    for (int kk = 0; kk < p; ++kk)
      for (int ll = 0; ll < p; ++ll) acc += f.christoffel_base[(mm * p + kk) * p + ll] * xb[kk] * nvec[ll].v;
    dn_base[mm] = acc;
  }
  Eigen::VectorXd nb(p);
  for (int i = 0; i < p; ++i) nb[i] = nvec[i].v;
  const std::vector<double> dn_angle = half_ginv_dg(f, nb, xav);
  double dn = 0.0;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) dn += xb[i] * f.B(i, j).v * dn_base[j];
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) dn += xav[a] * f.G(a, b).v * dn_angle[b];
  t.dn_term = dn;

  for (const auto& u : f.U) {
    std::vector<double> uv(static_cast<std::size_t>(q));
    std::vector<double> ud(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) {
      uv[a] = u[a].v;
      ud[a] = u[a].d;
    }
    // T: vertical part of nabla_U X
    const std::vector<double> tx = half_ginv_dg(f, xb, uv);
    t.t_term += vertical_norm2(f, tx);

    // A: horizontal part of nabla_X U
    std::vector<double> ya = half_ginv_dg(f, xb, uv);
    for (int a = 0; a < q; ++a) ya[a] += ud[a];
    std::vector<double> yb(static_cast<std::size_t>(p), 0.0);
    for (int mm = 0; mm < p; ++mm)
      for (int kk = 0; kk < p; ++kk) {
        double pair = 0.0;
        for (int a = 0; a < q; ++a)
          for (int b = 0; b < q; ++b) pair += xav[a] * f.dG[kk](a, b).v * uv[b];
        yb[mm] += -0.5 * f.Binv(mm, kk).v * pair;
      }
    double norm2 = 0.0;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) norm2 += yb[i] * f.B(i, j).v * yb[j];
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) norm2 += ya[a] * f.G(a, b).v * ya[b];
    t.a_term += 2.0 * std::max(0.0, norm2 - vertical_norm2(f, ya));
  }
  t.total = t.sum();
  return t;
}

Eigen::MatrixXd quotient_ricci_matrix(const InvariantBlockMetric& m, const Eigen::MatrixXd& killing,
                                      const Eigen::VectorXd& base_point) {
  const Eigen::MatrixXd h = horizontal_basis(m, killing, base_point);
  const int d = static_cast<int>(h.cols());
  const CurvatureTensors curv = curvature_tensors(m, base_point);
  auto total = [&](const Eigen::VectorXd& x) { return oneill_terms(m, killing, curv, base_point, x).total; };
  Eigen::MatrixXd out(d, d);
  for (int i = 0; i < d; ++i) {
    out(i, i) = total(h.col(i));
    for (int j = 0; j < i; ++j) {
      const double plus = total(h.col(i) + h.col(j));
      const double minus = total(h.col(i) - h.col(j));
      out(i, j) = out(j, i) = 0.25 * (plus - minus);
    }
  }
  return out;
}

}  // namespace ricci_lab::submersion
