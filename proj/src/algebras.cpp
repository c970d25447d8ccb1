#include "walg/algebras.hpp"

namespace walg {

namespace {

std::string numbered(const std::string& base, int i, int d) {
  return d == 1 ? base : base + std::to_string(i);
}

NCPoly scalar_poly(std::size_t width, long v) {
  return NCPoly::term(Monomial::one(width), Rational(v));
}

NCPoly gen_poly(std::size_t width, std::size_t g, const Rational& c) {
  Monomial m = Monomial::one(width);
  if (g + 1 == width)
    m.last = HalfInt(1);
  else
    m.head[g] = 1;
  return NCPoly::term(m, c);
}

}  // namespace

Presentation build_weyl(int d, WeylSign sign, const std::string& var, const std::string& der) {
  if (d < 1) throw WalgError("build_weyl needs d >= 1");
  const std::size_t width = 2 * static_cast<std::size_t>(d);
  std::vector<Generator> gens;
  for (int i = 1; i <= d; ++i) gens.push_back({numbered(var, i, d)});
  for (int i = 1; i <= d; ++i) gens.push_back({numbered(der, i, d)});
  // der_i var_i = var_i der_i - [var_i, der_i]
  const long r = sign == WeylSign::PlusOne ? -1 : 1;
  std::vector<RelationSpec> rels;
  for (int i = 0; i < d; ++i) rels.push_back({d + i, i, scalar_poly(width, r)});
  return Presentation(std::move(gens), std::move(rels));
}

Presentation build_weyl_var_localized(int d, WeylSign sign, const std::string& var,
                                      const std::string& der) {
  if (d < 1) throw WalgError("build_weyl_var_localized needs d >= 1");
  const std::size_t width = 2 * static_cast<std::size_t>(d);
  std::vector<Generator> gens;
  for (int i = 1; i < d; ++i) gens.push_back({numbered(var, i, d)});
  for (int i = 1; i <= d; ++i) gens.push_back({numbered(der, i, d)});
  gens.push_back({numbered(var, d, d)});
  const long br = sign == WeylSign::PlusOne ? 1 : -1;  // [var_d, der_d]
  std::vector<RelationSpec> rels;
  for (int i = 0; i + 1 < d; ++i) rels.push_back({(d - 1) + i, i, scalar_poly(width, -br)});
  rels.push_back({2 * d - 1, (d - 1) + (d - 1), scalar_poly(width, br)});
  return Presentation(std::move(gens), std::move(rels), Lattice::Integer);
}

Presentation build_enveloping(const LieAlgebra& L) {
  L.check_jacobi();
  const std::size_t n = L.dim();
  std::vector<Generator> gens;
  for (const auto& nm : L.names) gens.push_back({nm});
  std::vector<RelationSpec> rels;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      NCPoly rhs;
      for (std::size_t k = 0; k < n; ++k)
        if (!L.br[j][i][k].is_zero()) rhs += gen_poly(n, k, L.br[j][i][k]);
      if (!rhs.is_zero())
        rels.push_back({static_cast<int>(j), static_cast<int>(i), std::move(rhs)});
    }
  return Presentation(std::move(gens), std::move(rels));
}

namespace {

// Re-embed a monomial of B (width nb) into the product (width na + nb).
Monomial lift_monomial(const Monomial& m, std::size_t na, std::size_t width) {
  Monomial out = Monomial::one(width);
  for (std::size_t i = 0; i < m.head.size(); ++i) out.head[na + i] = m.head[i];
  out.last = m.last;
  return out;
}

}  // namespace

Presentation tensor(const Presentation& A, const Presentation& B) {
  if (A.localized()) throw WalgError("tensor: left factor must be polynomial");
  const std::size_t na = A.size(), nb = B.size(), width = na + nb;
  std::vector<Generator> gens = A.generators();
  for (const auto& g : B.generators()) gens.push_back(g);

  std::vector<RelationSpec> rels;
  for (std::size_t j = 1; j < na; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const NCPoly& r = A.rewrite(static_cast<int>(j), static_cast<int>(i));
      if (r.is_zero()) continue;
      NCPoly rhs;
      for (const auto& [m, c] : r.terms()) {
        Monomial out = Monomial::one(width);
        for (std::size_t g = 0; g < m.head.size(); ++g) out.head[g] = m.head[g];
        if (!m.last.is_zero()) out.head[na - 1] = static_cast<std::uint32_t>(m.last.to_long());
        rhs.add(out, c);
      }
      rels.push_back({static_cast<int>(j), static_cast<int>(i), std::move(rhs)});
    }
  for (std::size_t j = 1; j < nb; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const NCPoly& r = B.rewrite(static_cast<int>(j), static_cast<int>(i));
      if (r.is_zero()) continue;
      NCPoly rhs;
      for (const auto& [m, c] : r.terms()) rhs.add(lift_monomial(m, na, width), c);
      rels.push_back({static_cast<int>(na + j), static_cast<int>(na + i), std::move(rhs)});
    }
  std::optional<Lattice> loc;
  if (B.localized()) loc = B.lattice();
  return Presentation(std::move(gens), std::move(rels), loc);
}

Presentation build_minimal_w(const MinimalWData& data) {
  data.g0.check_jacobi();
  const std::size_t m = data.g0.dim();
  const std::size_t k2 = data.g1_names.size();
  const std::size_t width = m + k2 + 1;
  if (data.action.size() != m) throw WalgError("need one action matrix per even generator");
  for (const auto& a : data.action)
    if (a.rows != k2 || a.cols != k2) throw WalgError("action matrix has wrong size");

  // The action must represent the bracket: rho([x_i, x_j]) = [rho_i, rho_j].
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      RationalMatrix lhs(k2, k2);
      for (std::size_t t = 0; t < m; ++t) {
        if (data.g0.br[i][j][t].is_zero()) continue;
        for (std::size_t r = 0; r < k2; ++r)
          for (std::size_t c = 0; c < k2; ++c)
            lhs.at(r, c) += data.g0.br[i][j][t] * data.action[t].at(r, c);
      }
      RationalMatrix rhs = matmul(data.action[i], data.action[j]);
      RationalMatrix ji = matmul(data.action[j], data.action[i]);
      for (std::size_t r = 0; r < k2; ++r)
        for (std::size_t c = 0; c < k2; ++c)
          if (lhs.at(r, c) != rhs.at(r, c) - ji.at(r, c))
            throw EquivarianceViolation("action of [" + data.g0.names[i] + ", " +
                                        data.g0.names[j] +
                                        "] differs from the commutator of the actions");
    }

  std::vector<Generator> gens;
  for (const auto& nm : data.g0.names) gens.push_back({nm, 2});
  for (const auto& nm : data.g1_names) gens.push_back({nm, 3});
  gens.push_back({data.central_name, 4});

  std::vector<RelationSpec> rels;
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      NCPoly rhs;
      for (std::size_t t = 0; t < m; ++t)
        if (!data.g0.br[j][i][t].is_zero()) rhs += gen_poly(width, t, data.g0.br[j][i][t]);
      if (!rhs.is_zero())
        rels.push_back({static_cast<int>(j), static_cast<int>(i), std::move(rhs)});
    }
  // [u_a, x_i] = -(x_i . u_a)
  for (std::size_t a = 0; a < k2; ++a)
    for (std::size_t i = 0; i < m; ++i) {
      NCPoly rhs;
      for (std::size_t b = 0; b < k2; ++b)
        if (!data.action[i].at(b, a).is_zero())
          rhs += gen_poly(width, m + b, -data.action[i].at(b, a));
      if (!rhs.is_zero())
        rels.push_back({static_cast<int>(m + a), static_cast<int>(i), std::move(rhs)});
    }

  Presentation skeleton(gens, rels);  // names validated here even if B is empty

  if (data.B_lower.size() != k2) throw WalgError("B needs one row per odd generator");
  std::vector<RelationSpec> full = rels;
  for (std::size_t a = 0; a < k2; ++a) {
    if (data.B_lower[a].size() != a) throw WalgError("B must be strictly lower triangular");
    for (std::size_t b = 0; b < a; ++b) {
      NCPoly rhs = skeleton.parse(data.B_lower[a][b]);
      for (const auto& [mono, c] : rhs.terms()) {
        (void)c;
        for (std::size_t g = m; g < m + k2; ++g)
          if (mono.head[g] != 0)
            throw WalgError("B entry [" + data.g1_names[a] + ", " + data.g1_names[b] +
                            "] mentions an odd generator");
      }
      if (!rhs.is_zero())
        full.push_back({static_cast<int>(m + a), static_cast<int>(m + b), std::move(rhs)});
    }
  }
  return Presentation(std::move(gens), std::move(full));
}

}  // namespace walg
