#include "crtube/levi.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace crtube {

namespace {

using PMat = std::vector<std::vector<MPoly>>;

PMat pmat(int rows, int cols, const MPoly& zero) { return PMat(rows, std::vector<MPoly>(cols, zero)); }

PMat mul(const PMat& a, const PMat& b, size_t cols, int maxdeg, const MPoly& zero) {
  const size_t rows = a.size(), inner = b.size();
  PMat out = pmat(static_cast<int>(rows), static_cast<int>(cols), zero);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      MPoly s = zero;
      for (size_t t = 0; t < inner; ++t)
        if (!a[i][t].is_zero() && !b[t][j].is_zero()) s += a[i][t] * b[t][j];
      out[i][j] = s.truncate(maxdeg);
    }
  return out;
}

/// Chart coordinates of a p x p matrix given by an entry accessor.
template <class T, class Get>
std::vector<T> chart_coords(int p, int rho, Get get) {
  const GaussRational half = GaussRational::frac(1, 2);
  const GaussRational inv2i = GaussRational(0L, 2L).inverse();
  std::vector<T> out;
  auto pairs = [&](int r, int s) {
    out.push_back(half * (get(r, s) + get(s, r)));
    out.push_back(inv2i * (get(r, s) - get(s, r)));
  };
  for (int r = 0; r < rho; ++r) out.push_back(get(r, r));
  for (int r = 0; r < rho; ++r)
    for (int s = r + 1; s < rho; ++s) pairs(r, s);
  for (int r = 0; r < rho; ++r)
    for (int s = rho; s < p; ++s) pairs(r, s);
  for (int r = rho; r < p; ++r) out.push_back(get(r, r));
  for (int r = rho; r < p; ++r)
    for (int s = r + 1; s < p; ++s) pairs(r, s);
  return out;
}

std::vector<std::string> chart_labels(int p, int rho) {
  auto nm = [](int r, int s) { return std::to_string(r + 1) + std::to_string(s + 1); };
  std::vector<std::string> out;
  auto pairs = [&](int r, int s) {
    out.push_back("Re z" + nm(r, s));
    out.push_back("Im z" + nm(r, s));
  };
  for (int r = 0; r < rho; ++r) out.push_back("z" + nm(r, r));
  for (int r = 0; r < rho; ++r)
    for (int s = r + 1; s < rho; ++s) pairs(r, s);
  for (int r = 0; r < rho; ++r)
    for (int s = rho; s < p; ++s) pairs(r, s);
  for (int r = rho; r < p; ++r) out.push_back("z" + nm(r, r));
  for (int r = rho; r < p; ++r)
    for (int s = r + 1; s < p; ++s) pairs(r, s);
  return out;
}

MPoly compose_truncated(const MPoly& p, const std::vector<MPoly>& subs, int nv, int nc, int maxdeg) {
  std::vector<std::vector<MPoly>> powers(subs.size());
  for (size_t k = 0; k < subs.size(); ++k) {
    powers[k].push_back(MPoly::constant(nv, nc, GaussRational(1)));
    for (int e = 1; e <= p.degree_in(static_cast<int>(k)); ++e) powers[k].push_back((powers[k].back() * subs[k]).truncate(maxdeg));
  }
  MPoly r(nv, nc);
  for (const auto& [e, c] : p.terms()) {
    MPoly t = MPoly::constant(nv, nc, c);
    for (size_t k = 0; k < e.size(); ++k)
      if (e[k]) t = (t * powers[k][e[k]]).truncate(maxdeg);
    r += t;
  }
  return r;
}

bool in_span(const std::vector<ExactVector>& basis, const ExactVector& v) {
  bool zero = true;
  for (const auto& x : v) zero = zero && x.is_zero();
  if (zero) return true;
  if (basis.empty()) return false;
  std::vector<ExactVector> all = basis;
  all.push_back(v);
  return rank_exact(ExactMatrix::from_rows(all)) == rank_exact(ExactMatrix::from_rows(basis));
}

int span_dim(const std::vector<ExactVector>& vs) { return vs.empty() ? 0 : rank_exact(ExactMatrix::from_rows(vs)); }

} // namespace

void GraphGerm::validate() const {
  if (k < 0 || n < k) throw std::invalid_argument("GraphGerm: need 0 <= k <= n");
  if (static_cast<int>(f.size()) != n - k) throw std::invalid_argument("GraphGerm: need one function per dependent coordinate");
  if (order < 2) throw std::invalid_argument("GraphGerm: truncation order below 2");
  for (const auto& fj : f) {
    if (fj.nvars() != k || fj.nconj() != 0) throw std::invalid_argument("GraphGerm: functions must live in the free variables");
    for (const auto& [e, c] : fj.terms()) {
      unsigned d = 0;
      for (unsigned x : e) d += x;
      if (d < 2) throw std::invalid_argument("GraphGerm: functions must vanish to order 2");
      if (static_cast<int>(d) > order) throw std::invalid_argument("GraphGerm: term above the truncation order");
      if (!c.is_real()) throw std::invalid_argument("GraphGerm: coefficients must be real");
    }
  }
}

RigidGerm to_rigid(const GraphGerm& g) {
  g.validate();
  RigidGerm r;
  r.m = g.k;
  r.c = g.n - g.k;
  r.order = g.order;
  r.labels = g.labels;
  const GaussRational inv2i = GaussRational(0L, 2L).inverse();
  std::vector<MPoly> subs;
  for (int l = 0; l < g.k; ++l) subs.push_back(inv2i * (MPoly::variable(g.k, g.k, l) - MPoly::variable(g.k, g.k, g.k + l)));
  for (const auto& fj : g.f) r.phi.push_back(g.k ? compose(fj, subs) : MPoly(0, 0));
  return r;
}

LeviChainResult levi_chain(const RigidGerm& germ, int kmax, std::optional<std::uint64_t> frameSeed) {
  if (kmax < 0) throw std::invalid_argument("levi_chain: kmax must be nonnegative");
  if (germ.order < kmax + 2) throw std::invalid_argument("levi_chain: truncation order too low for kmax (need order >= kmax + 2)");
  if (static_cast<int>(germ.phi.size()) != germ.c) throw std::invalid_argument("levi_chain: need c defining functions");
  const int m = germ.m, N = germ.dim();
  const MPoly zero(m, m);
  const GaussRational inv2i = GaussRational(0L, 2L).inverse();

  // frame coefficients: L_l = sum_t A[l][t] d/d conj(Z'_t)
  PMat A = pmat(m, m, zero);
  if (!frameSeed) {
    for (int l = 0; l < m; ++l) A[l][l] = MPoly::constant(m, m, GaussRational(1));
  } else {
    std::mt19937_64 rng(*frameSeed);
    std::uniform_int_distribution<long> small(-3, 3);
    ExactMatrix a0(m, m);
    do {
      for (int l = 0; l < m; ++l)
        for (int t = 0; t < m; ++t) a0(l, t) = GaussRational(small(rng), small(rng));
    } while (m > 0 && rank_exact(a0) < m);
    for (int l = 0; l < m; ++l)
      for (int t = 0; t < m; ++t) {
        MPoly e = MPoly::constant(m, m, a0(l, t));
        for (int v = 0; v < 2 * m; ++v) e += GaussRational(small(rng)) * MPoly::variable(m, m, v);
        A[l][t] = e;
      }
  }

  // complex gradients of rho_j = Im Z''_j - Phi_j on the CR part, constant on the rest
  std::vector<std::vector<MPoly>> level;
  for (int j = 0; j < germ.c; ++j) {
    std::vector<MPoly> g(N, zero);
    for (int l = 0; l < m; ++l) g[l] = (-poly_diff(germ.phi[j], l)).truncate(kmax);
    g[m + j] = MPoly::constant(m, m, inv2i);
    level.push_back(std::move(g));
  }

  LeviChainResult res;
  std::vector<ExactVector> values;
  for (int k = 0; k <= kmax; ++k) {
    for (const auto& g : level) {
      ExactVector v(N);
      for (int i = 0; i < N; ++i) v[i] = g[i].constant_term();
      values.push_back(std::move(v));
    }
    std::vector<ExactVector> ker;
    if (values.empty()) {
      for (int i = 0; i < N; ++i) {
        ExactVector e(N);
        e[i] = GaussRational(1);
        ker.push_back(std::move(e));
      }
    } else {
      ker = nullspace(ExactMatrix::from_rows(values));
    }
    res.dims.push_back(static_cast<int>(ker.size()));
    res.kernels.push_back(std::move(ker));
    if (!res.nondegeneracyOrder && res.dims.back() == 0) res.nondegeneracyOrder = k;
    if (k == kmax) break;
    // apply every frame field; later words need kmax - k - 1 further derivatives
    const int keep = kmax - k - 1;
    std::vector<std::vector<MPoly>> next;
    for (const auto& g : level)
      for (int l = 0; l < m; ++l) {
        std::vector<MPoly> h(N, zero);
        bool nonzero = false;
        for (int i = 0; i < m; ++i) {
          if (g[i].is_zero()) continue;
          MPoly s = zero;
          for (int t = 0; t < m; ++t) {
            MPoly d = poly_diff(g[i], m + t);
            if (!d.is_zero()) s += (A[l][t] * d);
          }
          h[i] = s.truncate(keep);
          nonzero = nonzero || !h[i].is_zero();
        }
        if (nonzero) next.push_back(std::move(h));
      }
    level = std::move(next);
  }
  const size_t K = res.dims.size();
  res.stabilized = res.nondegeneracyOrder.has_value() || (K >= 2 && res.dims[K - 1] == res.dims[K - 2]);
  return res;
}

LeviChainResult levi_chain(const GraphGerm& germ, int kmax, std::optional<std::uint64_t> frameSeed) {
  return levi_chain(to_rigid(germ), kmax, frameSeed);
}

GraphGerm cone_tube_germ(const ConeSpec& cone, int order) {
  const int p = cone.p, rho = cone.j + cone.k;
  if (p < 1 || cone.j < 0 || cone.k < 0 || rho > p) throw std::invalid_argument("cone_tube_germ: need j, k >= 0 and j + k <= p");
  if (order < 2) throw std::invalid_argument("cone_tube_germ: order below 2");
  const int kf = rho * rho + 2 * rho * (p - rho);
  const MPoly zero(kf, 0);
  auto var = [&](int i) { return MPoly::variable(kf, 0, i); };

  // U = Y11 - a11 in hermitian-basis coordinates
  PMat U = pmat(rho, rho, zero);
  {
    int b = 0;
    for (int r = 0; r < rho; ++r) U[r][r] = var(b++);
    for (int r = 0; r < rho; ++r)
      for (int s = r + 1; s < rho; ++s) {
        MPoly x = var(b++), y = var(b++);
        U[r][s] = x + GaussRational::I() * y;
        U[s][r] = x - GaussRational::I() * y;
      }
  }
  PMat Y12 = pmat(rho, p - rho, zero), Y21 = pmat(p - rho, rho, zero);
  for (int r = 0; r < rho; ++r)
    for (int s = 0; s < p - rho; ++s) {
      int b = rho * rho + 2 * (r * (p - rho) + s);
      Y12[r][s] = var(b) + GaussRational::I() * var(b + 1);
      Y21[s][r] = var(b) - GaussRational::I() * var(b + 1);
    }
  // (a + U)^{-1} = sum_t (-a U)^t a with a = a^{-1} = diag(1_j, -1_k)
  PMat a = pmat(rho, rho, zero), minusAU = pmat(rho, rho, zero);
  for (int r = 0; r < rho; ++r) a[r][r] = MPoly::constant(kf, 0, GaussRational(r < cone.j ? 1 : -1));
  for (int r = 0; r < rho; ++r)
    for (int s = 0; s < rho; ++s) minusAU[r][s] = GaussRational(r < cone.j ? -1 : 1) * U[r][s];
  PMat inv = a, term = a;
  for (int t = 1; t <= order - 2; ++t) {
    term = mul(minusAU, term, rho, order - 2, zero);
    for (int r = 0; r < rho; ++r)
      for (int s = 0; s < rho; ++s) inv[r][s] += term[r][s];
  }
  PMat G = mul(mul(Y21, inv, rho, order - 1, zero), Y12, p - rho, order, zero);

  GraphGerm g;
  g.k = kf;
  g.n = p * p;
  g.order = order;
  // dependent coordinates of the block (2,2) in chart order
  auto full = chart_coords<MPoly>(p, rho, [&](int r, int s) { return (r >= rho && s >= rho) ? G[r - rho][s - rho] : zero; });
  for (size_t i = kf; i < full.size(); ++i) g.f.push_back(full[i]);
  g.labels = chart_labels(p, rho);
  g.validate();
  return g;
}

ExactVector cone_chart_coordinates(const ExactMatrix& m, const ConeSpec& cone) {
  if (m.rows() != cone.p || m.cols() != cone.p) throw std::invalid_argument("cone_chart_coordinates: matrix size differs from p");
  return chart_coords<GaussRational>(cone.p, cone.j + cone.k, [&](int r, int s) { return m(r, s); });
}

RigidGerm siegel_germ(const SiegelModel& model, int order) {
  const int p = model.p, qp = model.q - model.p, rho = model.cone.j + model.cone.k;
  GraphGerm tube = cone_tube_germ(model.cone, order);
  const int kf = tube.k, mw = p * qp, m = kf + mw;
  const MPoly zero(m, m);
  const GaussRational inv2i = GaussRational(0L, 2L).inverse();
  auto w = [&](int r, int col) { return MPoly::variable(m, m, kf + r * qp + col); };
  auto wb = [&](int r, int col) { return MPoly::variable(m, m, m + kf + r * qp + col); };
  PMat wws = pmat(p, p, zero);
  for (int r = 0; r < p; ++r)
    for (int s = 0; s < p; ++s)
      for (int col = 0; col < qp; ++col) wws[r][s] += w(r, col) * wb(s, col);
  auto coords = chart_coords<MPoly>(p, rho, [&](int r, int s) { return wws[r][s]; });
  std::vector<MPoly> subs;
  for (int i = 0; i < kf; ++i) subs.push_back(inv2i * (MPoly::variable(m, m, i) - MPoly::variable(m, m, m + i)) - coords[i]);
  RigidGerm g;
  g.m = m;
  g.c = tube.n - tube.k;
  g.order = order;
  for (int j = 0; j < g.c; ++j) g.phi.push_back((coords[kf + j] + compose_truncated(tube.f[j], subs, m, m, order)).truncate(order));
  for (int i = 0; i < kf; ++i) g.labels.push_back(tube.labels[i]);
  for (int r = 0; r < p; ++r)
    for (int col = 0; col < qp; ++col) g.labels.push_back("w" + std::to_string(r + 1) + std::to_string(col + 1));
  for (size_t i = kf; i < tube.labels.size(); ++i) g.labels.push_back(tube.labels[i]);
  return g;
}

std::vector<SiegelSplitLevel> siegel_split(const SiegelModel& model, int kmax) {
  if (kmax < 0) throw std::invalid_argument("siegel_split: kmax must be nonnegative");
  const int order = kmax + 3;
  GraphGerm tube = cone_tube_germ(model.cone, order);
  RigidGerm sigma = siegel_germ(model, order);
  auto tchain = levi_chain(tube, kmax + 1);
  auto schain = levi_chain(sigma, kmax + 1);
  const int kf = tube.k, c = tube.n - tube.k, mw = model.dimW(), N = sigma.dim();
  const int p = model.p, qp = model.q - model.p;

  auto embed = [&](const ExactVector& v) {
    ExactVector out(N);
    for (int i = 0; i < kf; ++i) out[i] = v[i];
    for (int j = 0; j < c; ++j) out[kf + mw + j] = v[kf + j];
    return out;
  };
  auto w_part = [&](const std::vector<ExactVector>& hs) {
    // H^k(Sigma) intersected with the coordinate subspace W
    std::vector<ExactVector> out;
    if (hs.empty()) return out;
    std::vector<ExactVector> rows;
    for (int i = 0; i < N; ++i) {
      if (i >= kf && i < kf + mw) continue;
      ExactVector row;
      for (const auto& h : hs) row.push_back(h[i]);
      rows.push_back(std::move(row));
    }
    std::vector<ExactVector> coeffs;
    if (rows.empty()) {
      for (size_t b = 0; b < hs.size(); ++b) {
        ExactVector e(hs.size());
        e[b] = GaussRational(1);
        coeffs.push_back(std::move(e));
      }
    } else {
      coeffs = nullspace(ExactMatrix::from_rows(rows));
    }
    for (const auto& cf : coeffs) {
      ExactVector wv(mw);
      for (size_t b = 0; b < hs.size(); ++b)
        for (int i = 0; i < mw; ++i) wv[i] += cf[b] * hs[b][kf + i];
      out.push_back(std::move(wv));
    }
    return out;
  };
  auto as_matrix = [&](const ExactVector& wv) {
    ExactMatrix x(p, qp);
    for (int r = 0; r < p; ++r)
      for (int col = 0; col < qp; ++col) x(r, col) = wv[r * qp + col];
    return x;
  };
  std::vector<ExactMatrix> wbasis;
  for (int i = 0; i < mw; ++i) {
    ExactVector e(mw);
    e[i] = GaussRational(1);
    wbasis.push_back(as_matrix(e));
  }

  std::vector<std::vector<ExactVector>> wk;
  for (int k = 0; k <= kmax + 1; ++k) wk.push_back(w_part(schain.kernels[k]));

  std::vector<SiegelSplitLevel> out;
  for (int k = 0; k <= kmax; ++k) {
    SiegelSplitLevel lvl;
    lvl.k = k;
    for (const auto& v : tchain.kernels[k]) lvl.tubeKernel.push_back(embed(v));
    lvl.wKernel = wk[k];
    lvl.dimSigma = schain.dims[k];
    bool inside = true;
    for (const auto& v : lvl.tubeKernel) inside = inside && in_span(schain.kernels[k], v);
    lvl.directSum = inside && lvl.dimSigma == tchain.dims[k] + static_cast<int>(wk[k].size());
    if (k == 0) lvl.w0IsW = static_cast<int>(wk[0].size()) == mw;
    for (const auto& beta : wk[k + 1])
      for (const auto& cw : wbasis) {
        ExactMatrix b = as_matrix(beta);
        for (const ExactMatrix& f : {b * cw.adjoint(), cw * b.adjoint()})
          lvl.fInclusion = lvl.fInclusion && in_span(tchain.kernels[k], cone_chart_coordinates(f, model.cone));
      }
    for (const auto& beta : wk[k + 1]) lvl.recursion = lvl.recursion && in_span(wk[k], beta);
    if (tchain.dims[k] == 0) lvl.recursion = lvl.recursion && schain.dims[k + 1] == 0;
    out.push_back(std::move(lvl));
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
  case Verdict::yes: return "yes";
  case Verdict::no: return "no";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

FiniteTypeResult finite_type(const GraphGerm& germ) {
  germ.validate();
  const int c = germ.n - germ.k;
  FiniteTypeResult res;
  // bracket vectors of order |nu| + 1 = coefficient vectors of degree |nu| + 1, up to factorials
  std::vector<ExactVector> vecs;
  if (c == 0) res.order = 0;
  for (int s = 1; s <= germ.order - 1 && !res.order; ++s) {
    std::map<Exponent, ExactVector, GradedLex> bydeg;
    for (int j = 0; j < c; ++j)
      for (const auto& [e, coef] : germ.f[j].terms()) {
        unsigned d = 0;
        for (unsigned x : e) d += x;
        if (static_cast<int>(d) != s + 1) continue;
        auto [it, _] = bydeg.try_emplace(e, ExactVector(c));
        it->second[j] = coef;
      }
    for (auto& [e, v] : bydeg) vecs.push_back(std::move(v));
    if (span_dim(vecs) == c) res.order = s;
  }
  // affine-span criterion: the f_j are linearly independent
  std::vector<ExactVector> coeffRows;
  {
    std::map<Exponent, size_t, GradedLex> idx;
    for (const auto& fj : germ.f)
      for (const auto& [e, coef] : fj.terms()) idx.try_emplace(e, idx.size());
    for (const auto& fj : germ.f) {
      ExactVector row(idx.size());
      for (const auto& [e, coef] : fj.terms()) row[idx[e]] = coef;
      coeffRows.push_back(std::move(row));
    }
  }
  res.jetsIndependent = c == 0 || (!coeffRows.empty() && !coeffRows[0].empty() && span_dim(coeffRows) == c);
  if (res.order) res.verdict = Verdict::yes;
  else if (germ.exact && !res.jetsIndependent) res.verdict = Verdict::no;
  else res.verdict = Verdict::inconclusive;
  return res;
}

NondegeneracyResult holomorphic_nondegenerate(const RigidGerm& germ, int kmax) {
  auto chain = levi_chain(germ, kmax);
  NondegeneracyResult r;
  if (chain.nondegeneracyOrder) {
    r.verdict = Verdict::yes;
    r.order = chain.nondegeneracyOrder;
  }
  return r;
}

} // namespace crtube
