#include "walg/whittaker.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "walg/errors.hpp"
#include "walg/sl2.hpp"

namespace walg {

namespace {

bool is_zero_vec(const Vec& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

}  // namespace

ExtremeGrading grade_by_extremes(const LieAlgebra& L, int e_idx, int f_idx) {
  const int n = static_cast<int>(L.dim());
  if (e_idx < 0 || e_idx >= n || f_idx < 0 || f_idx >= n || e_idx == f_idx)
    throw std::invalid_argument("grade_by_extremes: bad extreme positions");
  ExtremeGrading gr;
  gr.e = e_idx;
  gr.f = f_idx;
  gr.h = L.br[e_idx][f_idx];
  gr.value.assign(n, 0);
  std::size_t top = 0, bottom = 0;
  for (int i = 0; i < n; ++i) {
    Vec b = L.bracket(gr.h, L.coords_of(i));
    Rational lambda = b[i];
    if (!lambda.is_integer()) throw NonSemisimpleH("grading eigenvalue is not an integer");
    for (int r = 0; r < n; ++r)
      if (r != i && !b[r].is_zero())
        throw NonSemisimpleH("basis vector " + L.names[i] + " is not a grading eigenvector");
    long v = lambda.num().get_si();
    if (v < -2 || v > 2)
      throw WalgError("grade_by_extremes: eigenvalue outside -2..2 on " + L.names[i]);
    gr.value[i] = v;
    if (v == 2) ++top;
    if (v == -2) ++bottom;
  }
  if (gr.value[e_idx] != 2 || gr.value[f_idx] != -2 || top != 1 || bottom != 1)
    throw NotMinimalOrbit("grade_by_extremes: extreme slices are not one-dimensional");
  return gr;
}

ExtremeGrading grade_by_extremes(const LieAlgebra& L) {
  return grade_by_extremes(L, static_cast<int>(L.dim()) - 1, 0);
}

std::vector<int> greedy_lagrangian(const LieAlgebra& L, const ExtremeGrading& gr) {
  const int n = static_cast<int>(L.dim());
  std::vector<int> minus;
  for (int i = 0; i < n; ++i)
    if (gr.value[i] == -1) minus.push_back(i);
  auto omega = [&](int i, int j) {
    const Vec& b = L.br[i][j];
    for (int r = 0; r < n; ++r)
      if (r != gr.f && !b[r].is_zero())
        throw WalgError("greedy_lagrangian: the -1 slice does not pair into the bottom");
    return b[gr.f];
  };
  std::vector<int> chosen;
  for (int i : minus) {
    bool isotropic = true;
    for (int j : chosen)
      if (!omega(i, j).is_zero()) isotropic = false;
    if (isotropic) chosen.push_back(i);
  }
  if (2 * chosen.size() != minus.size())
    throw WalgError("greedy_lagrangian: greedy set is not half-dimensional");
  for (int j : minus) {
    if (std::find(chosen.begin(), chosen.end(), j) != chosen.end()) continue;
    bool paired = false;
    for (int i : chosen)
      if (!omega(j, i).is_zero()) paired = true;
    if (!paired) throw WalgError("greedy_lagrangian: degenerate pairing on the -1 slice");
  }
  return chosen;
}

std::vector<int> WhittakerModel::slice(long v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < kept; ++i)
    if (grading.value[i] == v) out.push_back(static_cast<int>(i));
  return out;
}

WhittakerModel build_whittaker_model(const LieAlgebra& L) {
  const int n = static_cast<int>(L.dim());
  ExtremeGrading first = grade_by_extremes(L);
  std::vector<int> lag = greedy_lagrangian(L, first);

  std::set<int> tail(lag.begin(), lag.end());
  tail.insert(first.f);
  std::vector<std::size_t> perm;
  for (int i = 0; i < n; ++i)
    if (!tail.count(i)) perm.push_back(i);
  const std::size_t kept = perm.size();
  for (int i : lag) perm.push_back(i);
  perm.push_back(first.f);

  LieAlgebra g = L.reorder(perm);
  std::vector<Rational> chi(n - kept, Rational(0));
  chi.back() = Rational(1);
  int new_e = -1;
  for (std::size_t k = 0; k < kept; ++k)
    if (static_cast<int>(perm[k]) == first.e) new_e = static_cast<int>(k);
  WhittakerModel M{g, build_enveloping(g), kept, std::move(chi),
                   grade_by_extremes(g, new_e, n - 1), {}};

  // slice-0 vectors commuting with both extremes
  std::vector<int> zero;
  for (std::size_t i = 0; i < kept; ++i)
    if (M.grading.value[i] == 0) zero.push_back(static_cast<int>(i));
  RationalMatrix A(2 * n, zero.size());
  for (std::size_t c = 0; c < zero.size(); ++c) {
    const Vec& be = M.g.br[zero[c]][M.grading.e];
    const Vec& bf = M.g.br[zero[c]][M.grading.f];
    for (int r = 0; r < n; ++r) {
      A.at(r, c) = be[r];
      A.at(n + r, c) = bf[r];
    }
  }
  for (const Vec& k : kernel_basis(A)) {
    Vec full(n, Rational(0));
    for (std::size_t c = 0; c < zero.size(); ++c) full[zero[c]] = k[c];
    M.flat.push_back(full);
  }
  return M;
}

NCPoly reduce(const WhittakerModel& M, const NCPoly& p) {
  const std::size_t n = M.g.dim();
  NCPoly out;
  for (const auto& [mono, coeff] : p.terms()) {
    Rational c = coeff;
    Monomial m = mono;
    bool dead = false;
    for (std::size_t i = M.kept; i + 1 < n && !dead; ++i) {
      std::uint32_t e = m.head[i];
      if (!e) continue;
      const Rational& x = M.chi[i - M.kept];
      if (x.is_zero())
        dead = true;
      else if (!x.is_one())
        c *= x.pow(e);
      m.head[i] = 0;
    }
    long le = m.last.to_long();
    if (le && !dead) {
      const Rational& x = M.chi.back();
      if (x.is_zero())
        dead = true;
      else if (!x.is_one())
        c *= x.pow(le);
    }
    m.last = HalfInt(0);
    if (!dead) out.add(m, c);
  }
  return out;
}

NCPoly vec_poly(const WhittakerModel& M, const Vec& coords) {
  NCPoly p;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) p += M.U.gen(static_cast<int>(i)) * coords[i];
  return p;
}

std::vector<Monomial> kept_monomials(const WhittakerModel& M, int degree) {
  const std::size_t n = M.g.dim();
  std::vector<Monomial> out;
  for (const Monomial& m : M.U.monomial_basis(degree)) {
    bool ok = m.last.is_zero();
    for (std::size_t i = M.kept; i + 1 < n && ok; ++i)
      if (m.head[i]) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

bool monomial_odd(const WhittakerModel& M, const Monomial& m) {
  long parity = 0;
  for (std::size_t i = 0; i < m.head.size(); ++i)
    if (M.grading.value[i] % 2 != 0) parity += m.head[i];
  if (M.grading.value.back() % 2 != 0) parity += m.last.to_long();
  return parity % 2 != 0;
}

long kazhdan_degree(const WhittakerModel& M, const Monomial& m) {
  long k = 0;
  for (std::size_t i = 0; i < m.head.size(); ++i)
    if (m.head[i]) k += static_cast<long>(m.head[i]) * (M.grading.value[i] + 2);
  k += m.last.to_long() * (M.grading.value.back() + 2);
  return k;
}

namespace {

// Echelonized kernel of the reduced tail action on the span of the given
// monomials.  The span must be stable under a |-> reduce([a, .]) for every
// tail generator a; commutators never raise the plain degree and lower the
// filtration degree, so both kinds of window qualify.
std::vector<NCPoly> invariants_on(const WhittakerModel& M, const std::vector<Monomial>& dom) {
  const std::size_t n = M.g.dim();
  std::map<Monomial, std::size_t, GlexFirst> index;
  for (std::size_t j = 0; j < dom.size(); ++j) index[dom[j]] = j;

  const std::size_t tails = n - M.kept;
  RationalMatrix A(tails * dom.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    NCPoly q = NCPoly::term(dom[j], Rational(1));
    for (std::size_t t = 0; t < tails; ++t) {
      NCPoly im = reduce(M, M.U.commutator(M.U.gen(static_cast<int>(M.kept + t)), q));
      for (const auto& [mono, c] : im.terms()) {
        auto it = index.find(mono);
        if (it == index.end())
          throw WalgError("invariants: reduced image left the monomial window");
        A.at(t * dom.size() + it->second, j) = c;
      }
    }
  }

  PolyEchelon ech;
  for (const Vec& k : kernel_basis(A)) {
    NCPoly p;
    for (std::size_t j = 0; j < dom.size(); ++j)
      if (!k[j].is_zero()) p += NCPoly::term(dom[j], k[j]);
    ech.insert(p);
  }
  return ech.sorted_rows();
}

}  // namespace

std::vector<NCPoly> invariant_basis(const WhittakerModel& M, int degree) {
  return invariants_on(M, kept_monomials(M, degree));
}

NCPoly casimir_element(const Presentation& U, const LieAlgebra& L) {
  const std::size_t n = L.dim();
  if (U.size() != n) throw std::invalid_argument("casimir_element: presentation size mismatch");
  std::vector<RationalMatrix> ad;
  ad.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalMatrix a(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) a.at(r, c) = L.br[i][c][r];
    ad.push_back(a);
  }
  RationalMatrix K(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      RationalMatrix p = matmul(ad[i], ad[j]);
      Rational tr(0);
      for (std::size_t r = 0; r < n; ++r) tr += p.at(r, r);
      K.at(i, j) = tr;
      K.at(j, i) = tr;
    }
  NCPoly omega;
  for (std::size_t j = 0; j < n; ++j) {
    Vec rhs(n, Rational(0));
    rhs[j] = Rational(1);
    auto col = solve(K, rhs);
    if (!col) throw WalgError("casimir_element: the invariant pairing is degenerate");
    for (std::size_t i = 0; i < n; ++i)
      if (!(*col)[i].is_zero())
        omega += U.multiply(U.gen(static_cast<int>(i)), U.gen(static_cast<int>(j))) * (*col)[i];
  }
  return omega;
}

namespace {

// Split an invariant into its parts under the involution negating the odd
// slices; the involution fixes the character, so both parts stay invariant.
void parity_split(const WhittakerModel& M, const NCPoly& p, NCPoly& even, NCPoly& odd) {
  for (const auto& [mono, c] : p.terms()) {
    if (monomial_odd(M, mono))
      odd += NCPoly::term(mono, c);
    else
      even += NCPoly::term(mono, c);
  }
}

// Express target in the span; throws with the given context on failure.
Vec must_express(const std::vector<NCPoly>& span, const NCPoly& target,
                 const std::string& what) {
  auto c = express_in_span(span, target);
  if (!c) throw WalgError("derive_minimal_w: " + what + " is not in the expected span");
  return *c;
}

}  // namespace

WhittakerGenerators derive_generators(const WhittakerModel& M) {
  // Work inside the filtration window where each generator of grading value v
  // carries weight v + 2: the window up to weight 3 holds, besides constants,
  // exactly one even lift per flat direction and one odd lift per value-one
  // generator, so pinning linear parts makes the lifts unique.
  std::vector<Monomial> dom;
  for (const Monomial& m : kept_monomials(M, 3))
    if (kazhdan_degree(M, m) <= 3) dom.push_back(m);
  std::vector<NCPoly> inv = invariants_on(M, dom);

  PolyEchelon even_ech, odd_ech;
  for (const NCPoly& p : inv) {
    NCPoly pe, po;
    parity_split(M, p, pe, po);
    even_ech.insert(pe);
    odd_ech.insert(po);
  }
  if (even_ech.rank() + odd_ech.rank() != inv.size())
    throw WalgError("derive_generators: parity split changed the invariant count");
  std::vector<NCPoly> even_rows = even_ech.sorted_rows();
  std::vector<NCPoly> odd_rows = odd_ech.sorted_rows();

  // pin a lift by its coordinates on the listed monomials: the flat lifts by
  // the full degree-<=1 window (they carry no odd admixture, so this pins
  // them up to nothing), the odd lifts by their value-one coordinates only
  // (a forced value-minus-one tail can remain).
  auto lift = [&](const std::vector<NCPoly>& rows, const std::vector<Monomial>& window,
                  const NCPoly& target, const std::string& what) {
    std::map<Monomial, std::size_t, GlexFirst> idx;
    for (std::size_t r = 0; r < window.size(); ++r) idx[window[r]] = r;
    RationalMatrix A(window.size(), rows.size());
    for (std::size_t b = 0; b < rows.size(); ++b)
      for (const auto& [mono, c] : rows[b].terms()) {
        auto it = idx.find(mono);
        if (it != idx.end()) A.at(it->second, b) = c;
      }
    Vec rhs(window.size(), Rational(0));
    for (const auto& [mono, c] : target.terms()) {
      auto it = idx.find(mono);
      if (it != idx.end()) rhs[it->second] = c;
    }
    auto sol = solve(A, rhs);
    if (!sol)
      throw NotExpressible("derive_generators: " + what + " has no invariant lift");
    NCPoly out;
    for (std::size_t b = 0; b < rows.size(); ++b)
      if (!(*sol)[b].is_zero()) out += rows[b] * (*sol)[b];
    return out;
  };
  std::vector<Monomial> mono1 = kept_monomials(M, 1);
  std::vector<Monomial> mono_g1;
  for (int i : M.slice(1)) {
    Monomial m = Monomial::one(M.g.dim());
    m.head[static_cast<std::size_t>(i)] = 1;
    mono_g1.push_back(m);
  }

  WhittakerGenerators G;
  G.invariant_dim = inv.size();
  G.even_dim = even_rows.size();
  G.odd_dim = odd_rows.size();
  for (const Vec& dir : M.flat)
    G.even.push_back(lift(even_rows, mono1, vec_poly(M, dir), "a centralizer direction"));
  for (int i : M.slice(1))
    G.odd.push_back(lift(odd_rows, mono_g1, M.U.gen(i), "a value-one generator"));

  G.center = reduce(M, casimir_element(M.U, M.g));
  NCPoly ce, co;
  parity_split(M, G.center, ce, co);
  if (!co.is_zero())
    throw WalgError("derive_generators: reduced quadratic central element is not even");
  for (std::size_t t = M.kept; t < M.g.dim(); ++t)
    if (!reduce(M, M.U.commutator(M.U.gen(static_cast<int>(t)), G.center)).is_zero())
      throw WalgError("derive_generators: reduced quadratic central element is not invariant");
  return G;
}

MinimalWData derive_minimal_w(const WhittakerModel& M) {
  WhittakerGenerators G = derive_generators(M);
  const std::size_t m = G.even.size();
  const std::size_t k2 = G.odd.size();

  // brackets of the flat lifts close onto flat lifts up to scalars; absorb
  // the scalars by shifting the lifts (a coboundary solve).
  std::vector<NCPoly> span0 = G.even;
  span0.push_back(M.U.one());
  std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m));
  auto rebracket = [&](const std::string& what) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] =
            must_express(span0, reduce(M, M.U.commutator(G.even[i], G.even[j])), what);
  };
  rebracket("a flat bracket");

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Rational>> defects;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!c[i][j][m].is_zero()) defects.push_back({{i, j}, c[i][j][m]});
  if (!defects.empty()) {
    RationalMatrix A(defects.size(), m);
    Vec rhs(defects.size(), Rational(0));
    for (std::size_t r = 0; r < defects.size(); ++r) {
      auto [ij, mu] = defects[r];
      for (std::size_t t = 0; t < m; ++t) A.at(r, t) = c[ij.first][ij.second][t];
      rhs[r] = mu;
    }
    auto lambda = solve(A, rhs);
    if (!lambda)
      throw WalgError("derive_minimal_w: bracket scalars are not a coboundary");
    for (std::size_t t = 0; t < m; ++t)
      if (!(*lambda)[t].is_zero()) G.even[t] += M.U.one() * (*lambda)[t];
    span0 = G.even;
    span0.push_back(M.U.one());
    rebracket("a flat bracket after recentering");
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (i != j && !c[i][j][m].is_zero())
          throw WalgError("derive_minimal_w: recentering left a bracket scalar");
  }

  MinimalWData data;
  data.g0.names.resize(m);
  for (std::size_t i = 0; i < m; ++i) data.g0.names[i] = "n" + std::to_string(i + 1);
  data.g0.br.assign(m, std::vector<Vec>(m, Vec(m, Rational(0))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t t = 0; t < m; ++t) data.g0.br[i][j][t] = c[i][j][t];

  data.g1_names.resize(k2);
  for (std::size_t a = 0; a < k2; ++a) data.g1_names[a] = "w" + std::to_string(a + 1);

  // action matrices: column a of the i-th matrix holds the odd-basis
  // coordinates of the bracket of the i-th flat lift with the a-th odd lift.
  for (std::size_t i = 0; i < m; ++i) {
    RationalMatrix act(k2, k2);
    for (std::size_t a = 0; a < k2; ++a) {
      Vec col = must_express(G.odd, reduce(M, M.U.commutator(G.even[i], G.odd[a])),
                             "a flat-odd bracket");
      for (std::size_t b = 0; b < k2; ++b) act.at(b, a) = col[b];
    }
    data.action.push_back(act);
  }

  // odd-odd brackets land in the span of 1, the flat lifts, their pairwise
  // products, and the central element.
  std::vector<NCPoly> span_even;
  span_even.push_back(M.U.one());
  for (const NCPoly& p : G.even) span_even.push_back(p);
  span_even.push_back(G.center);
  std::vector<std::pair<std::size_t, std::size_t>> prods;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      span_even.push_back(reduce(M, M.U.multiply(G.even[i], G.even[j])));
      prods.push_back({i, j});
    }

  const std::size_t width = m + k2 + 1;
  std::vector<std::string> target_names;
  for (const auto& nm : data.g0.names) target_names.push_back(nm);
  for (const auto& nm : data.g1_names) target_names.push_back(nm);
  target_names.push_back(data.central_name);
  data.B_lower.resize(k2);
  for (std::size_t a = 0; a < k2; ++a) {
    data.B_lower[a].resize(a);
    for (std::size_t b = 0; b < a; ++b) {
      Vec col = must_express(span_even, reduce(M, M.U.commutator(G.odd[a], G.odd[b])),
                             "an odd-odd bracket");
      NCPoly out;
      if (!col[0].is_zero()) out += NCPoly::term(Monomial::one(width), col[0]);
      for (std::size_t t = 0; t < m; ++t)
        if (!col[1 + t].is_zero()) {
          Monomial mono = Monomial::one(width);
          mono.head[t] = 1;
          out += NCPoly::term(mono, col[1 + t]);
        }
      if (!col[1 + m].is_zero()) {
        Monomial mono = Monomial::one(width);
        mono.last = HalfInt(1);
        out += NCPoly::term(mono, col[1 + m]);
      }
      for (std::size_t q = 0; q < prods.size(); ++q)
        if (!col[2 + m + q].is_zero()) {
          Monomial mono = Monomial::one(width);
          mono.head[prods[q].first] += 1;
          mono.head[prods[q].second] += 1;
          out += NCPoly::term(mono, col[2 + m + q]);
        }
      data.B_lower[a][b] = poly_to_string(out, target_names);
    }
  }
  return data;
}

CoordTriple find_sl2_triple(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Vec> candidates;
  for (std::size_t i = 0; i < n; ++i) candidates.push_back(L.coords_of(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        Vec v = L.coords_of(i);
        for (std::size_t r = 0; r < n; ++r) v[r] += Rational(s) * L.coords_of(j)[r];
        candidates.push_back(v);
      }

  auto mat_is_zero = [n](const RationalMatrix& q) {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!q.at(r, c).is_zero()) return false;
    return true;
  };

  for (const Vec& x : candidates) {
    if (is_zero_vec(x)) continue;
    RationalMatrix A(n, n);
    for (std::size_t c = 0; c < n; ++c) {
      Vec col = L.bracket(x, L.coords_of(c));
      for (std::size_t r = 0; r < n; ++r) A.at(r, c) = col[r];
    }
    if (mat_is_zero(A)) continue;
    RationalMatrix q = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) q = matmul(A, q);
    if (!mat_is_zero(q)) continue;

    // solve -ad(x)^2 F = 2x; then [x, F] = h already satisfies [h, x] = 2x,
    // and any residual [h, F] + 2F collinear with x is absorbed into F.
    RationalMatrix A2 = matmul(A, A);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t cc = 0; cc < n; ++cc) A2.at(r, cc) = -A2.at(r, cc);
    Vec rhs(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r) rhs[r] = Rational(2) * x[r];
    auto F = solve(A2, rhs);
    if (!F) continue;
    Vec h = L.bracket(x, *F);
    Vec delta = L.bracket(h, *F);
    for (std::size_t r = 0; r < n; ++r) delta[r] += Rational(2) * (*F)[r];
    if (!is_zero_vec(delta)) {
      std::size_t piv = 0;
      while (piv < n && x[piv].is_zero()) ++piv;
      if (piv == n || delta[piv].is_zero()) continue;
      Rational d = delta[piv] / x[piv];
      bool collinear = true;
      for (std::size_t r = 0; r < n && collinear; ++r)
        if (delta[r] != d * x[r]) collinear = false;
      if (!collinear) continue;
      for (std::size_t r = 0; r < n; ++r) (*F)[r] -= (d / Rational(4)) * x[r];
      h = L.bracket(x, *F);
    }

    Vec he = L.bracket(h, x);
    Vec hf = L.bracket(h, *F);
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      if (he[r] != Rational(2) * x[r]) ok = false;
      if (hf[r] != Rational(-2) * (*F)[r]) ok = false;
    }
    if (!ok) continue;
    return CoordTriple{*F, h, x};
  }
  throw WalgError("find_sl2_triple: no candidate produced a valid triple");
}

}  // namespace walg
