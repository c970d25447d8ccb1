#include "walg/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "walg/errors.hpp"
#include "walg/linalg.hpp"

namespace walg {

namespace {

void check_rank(bool ok, const TypeRank& tr) {
  if (!ok) throw std::invalid_argument("cartan_matrix: no simple type " + tr.str());
}

}  // namespace

std::string TypeRank::str() const {
  static const char* letters = "ABCDEFG";
  return std::string(1, letters[static_cast<int>(type)]) + std::to_string(rank);
}

LongMat cartan_matrix(TypeRank tr) {
  const int n = tr.rank;
  LongMat A(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto bond = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
  switch (tr.type) {
    case SimpleType::A:
      check_rank(n >= 1, tr);
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case SimpleType::B:  // last simple root short
      check_rank(n >= 2, tr);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      A[n - 2][n - 1] = -1;
      A[n - 1][n - 2] = -2;
      break;
    case SimpleType::C:  // last simple root long
      check_rank(n >= 2, tr);
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      A[n - 2][n - 1] = -2;
      A[n - 1][n - 2] = -1;
      break;
    case SimpleType::D:
      check_rank(n >= 4, tr);
      for (int i = 0; i + 3 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 2);
      bond(n - 3, n - 1);
      break;
    case SimpleType::E:
      check_rank(n >= 6 && n <= 8, tr);
      bond(0, 2);
      bond(1, 3);
      bond(2, 3);
      bond(3, 4);
      bond(4, 5);
      if (n >= 7) bond(5, 6);
      if (n >= 8) bond(6, 7);
      break;
    case SimpleType::F:
      check_rank(n == 4, tr);
      bond(0, 1);
      A[1][2] = -1;  // alpha_3 short
      A[2][1] = -2;
      bond(2, 3);
      break;
    case SimpleType::G:
      check_rank(n == 2, tr);
      A[0][1] = -3;  // alpha_1 short
      A[1][0] = -1;
      break;
  }
  return A;
}

std::vector<long> symmetrizers(const LongMat& A) {
  const int n = static_cast<int>(A.size());
  std::vector<Rational> r(n, Rational(0));
  std::vector<int> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    r[start] = Rational(1);
    seen[start] = 1;
    std::vector<int> comp{start}, queue{start};
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v == u || A[u][v] == 0) continue;
        Rational dv = r[u] * Rational(A[u][v]) / Rational(A[v][u]);
        if (seen[v]) {
          if (r[v] != dv) throw WalgError("symmetrizers: matrix is not symmetrizable");
          continue;
        }
        r[v] = dv;
        seen[v] = 1;
        comp.push_back(v);
        queue.push_back(v);
      }
    }
    Rational lo = r[comp[0]];
    for (int v : comp) lo = std::min(lo, r[v]);
    for (int v : comp) r[v] /= lo;
  }
  std::vector<long> d(n);
  for (int i = 0; i < n; ++i) {
    if (!r[i].is_integer()) throw WalgError("symmetrizers: non-integral normalized lengths");
    d[i] = r[i].num().get_si();
  }
  return d;
}

std::vector<std::vector<long>> positive_roots(const LongMat& A) {
  const int n = static_cast<int>(A.size());
  auto pairing = [&](const std::vector<long>& beta, int i) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += beta[j] * A[i][j];
    return s;
  };
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> out, level;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    level.push_back(e);
  }
  std::sort(level.begin(), level.end());
  while (!level.empty()) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<std::vector<long>> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        std::vector<long> cand = beta;
        cand[i] += 1;
        if (seen.count(cand)) continue;
        long p = 0;  // depth of the alpha_i string below beta
        std::vector<long> down = beta;
        while (down[i] > 0) {
          down[i] -= 1;
          if (!seen.count(down)) break;
          ++p;
        }
        if (p - pairing(beta, i) > 0) {
          seen.insert(cand);
          next.push_back(cand);
        }
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  return out;
}

long RootSystem::pairing(const std::vector<long>& beta, int i) const {
  long s = 0;
  for (int j = 0; j < rank(); ++j) s += beta[j] * A[i][j];
  return s;
}

long RootSystem::height(const std::vector<long>& beta) const {
  long s = 0;
  for (long b : beta) s += b;
  return s;
}

const std::vector<long>& RootSystem::highest_root() const {
  const std::vector<long>* top = nullptr;
  long best = 0;
  std::size_t ties = 0;
  for (const auto& beta : positive) {
    long h = height(beta);
    if (h > best || top == nullptr) {
      best = h;
      top = &beta;
      ties = 1;
    } else if (h == best) {
      ++ties;
    }
  }
  if (top == nullptr || ties != 1)
    throw WalgError("highest_root: no unique top-height root (diagram not connected?)");
  return *top;
}

RootSystem build_root_system(TypeRank tr) {
  RootSystem R;
  R.label = tr;
  R.A = cartan_matrix(tr);
  R.d = symmetrizers(R.A);
  R.positive = positive_roots(R.A);
  R.highest_root();  // validates uniqueness
  return R;
}

namespace {

// walk a path component from a degree-one node to the far end
std::vector<int> walk_path(int start, const std::map<int, std::vector<int>>& adj) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  for (;;) {
    int next = -1;
    for (int v : adj.at(cur))
      if (v != prev) next = v;
    if (next < 0) return order;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
}

// nodes of an arm, walking from the neighbor `first` of the branch node
// `branch` out to the tip
std::vector<int> walk_arm(int branch, int first, const std::map<int, std::vector<int>>& adj) {
  std::vector<int> arm{first};
  int prev = branch, cur = first;
  for (;;) {
    int next = -1;
    for (int v : adj.at(cur))
      if (v != prev) next = v;
    if (next < 0) return arm;
    arm.push_back(next);
    prev = cur;
    cur = next;
  }
}

DiagramComponent classify_component(const LongMat& A, const std::vector<long>& d,
                                    const std::vector<int>& comp) {
  const int k = static_cast<int>(comp.size());
  std::map<int, std::vector<int>> adj;
  for (int u : comp) adj[u];
  int max_bond = 1;
  for (int u : comp)
    for (int v : comp)
      if (u < v && A[u][v] != 0) {
        adj[u].push_back(v);
        adj[v].push_back(u);
        max_bond = std::max<long>(max_bond, A[u][v] * A[v][u]);
      }

  TypeRank label{SimpleType::A, k};
  std::vector<int> order;
  if (k == 1) {
    order = comp;
  } else if (max_bond == 3) {
    if (k != 2) throw WalgError("classify_subdiagram: triple bond in a diagram of rank != 2");
    int u = comp[0], v = comp[1];
    if (d[u] > d[v]) std::swap(u, v);  // short root is node 1
    label = {SimpleType::G, 2};
    order = {u, v};
  } else if (max_bond == 2) {
    int du = -1, dv = -1;  // the double bond, long end first
    for (int u : comp)
      for (int v : adj[u])
        if (u < v && A[u][v] * A[v][u] == 2) {
          if (du >= 0) throw WalgError("classify_subdiagram: two double bonds in one component");
          du = d[u] > d[v] ? u : v;
          dv = du == u ? v : u;
        }
    auto degree = [&](int u) { return static_cast<int>(adj[u].size()); };
    if (k == 2) {
      label = {SimpleType::B, 2};
      order = {du, dv};
    } else if (degree(du) == 2 && degree(dv) == 2) {
      if (k != 4) throw WalgError("classify_subdiagram: interior double bond needs rank 4");
      int a = adj[du][0] == dv ? adj[du][1] : adj[du][0];
      int b = adj[dv][0] == du ? adj[dv][1] : adj[dv][0];
      label = {SimpleType::F, 4};
      order = {a, du, dv, b};
    } else {
      for (int u : comp)
        if (degree(u) > 2) throw WalgError("classify_subdiagram: branch with a double bond");
      // path; short leaf end means B, long leaf end means C
      int leaf_at_bond = degree(dv) == 1 ? dv : (degree(du) == 1 ? du : -1);
      if (leaf_at_bond < 0)
        throw WalgError("classify_subdiagram: double bond neither interior nor terminal");
      int far = -1;
      for (int u : comp)
        if (degree(u) == 1 && u != leaf_at_bond) far = u;
      label = {d[leaf_at_bond] < d[adj[leaf_at_bond][0]] ? SimpleType::B : SimpleType::C, k};
      order = walk_path(far, adj);
    }
  } else {
    int branch = -1;
    for (int u : comp) {
      if (adj[u].size() > 3) throw WalgError("classify_subdiagram: node of degree > 3");
      if (adj[u].size() == 3) {
        if (branch >= 0) throw WalgError("classify_subdiagram: two branch nodes");
        branch = u;
      }
    }
    if (branch < 0) {
      int leaf = -1;
      for (int u : comp)
        if (adj[u].size() == 1 && (leaf < 0 || u < leaf)) leaf = u;
      label = {SimpleType::A, k};
      order = walk_path(leaf, adj);
    } else {
      std::vector<std::vector<int>> arms;
      for (int v : adj[branch]) arms.push_back(walk_arm(branch, v, adj));
      std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.back() < y.back();
      });
      std::size_t a0 = arms[0].size(), a1 = arms[1].size();
      if (a0 == 1 && a1 == 1) {
        label = {SimpleType::D, k};
        // node 1 sits at the tip of the long arm; for rank 4 every arm has
        // length one and the smallest tip plays node 1
        std::vector<int> long_arm = arms[2];
        int f1 = arms[0][0], f2 = arms[1][0];
        if (k == 4) {
          std::vector<int> tips{arms[0][0], arms[1][0], arms[2][0]};
          std::sort(tips.begin(), tips.end());
          long_arm = {tips[0]};
          f1 = tips[1];
          f2 = tips[2];
        }
        order.assign(long_arm.rbegin(), long_arm.rend());
        order.push_back(branch);
        order.push_back(std::min(f1, f2));
        order.push_back(std::max(f1, f2));
      } else if (a0 == 1 && a1 == 2) {
        if (k < 6 || k > 8) throw WalgError("classify_subdiagram: unrecognized branch diagram");
        label = {SimpleType::E, k};
        std::vector<int> two = arms[1], rest = arms[2];
        if (rest.size() == 2 && two.back() > rest.back()) std::swap(two, rest);
        order = {two[1], arms[0][0], two[0], branch};
        order.insert(order.end(), rest.begin(), rest.end());
      } else {
        throw WalgError("classify_subdiagram: unrecognized branch diagram");
      }
    }
  }

  LongMat model = cartan_matrix(label);
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (model[p][q] != A[order[p]][order[q]])
        throw WalgError("classify_subdiagram: relabeled component does not match " + label.str());
  return DiagramComponent{label, order};
}

}  // namespace

std::vector<DiagramComponent> classify_subdiagram(const LongMat& A, const std::vector<long>& d,
                                                  const std::vector<int>& nodes) {
  for (int u : nodes)
    if (u < 0 || u >= static_cast<int>(A.size()))
      throw std::invalid_argument("classify_subdiagram: node out of range");
  std::set<int> pending(nodes.begin(), nodes.end());
  if (pending.size() != nodes.size())
    throw std::invalid_argument("classify_subdiagram: repeated node");
  std::vector<DiagramComponent> out;
  while (!pending.empty()) {
    std::vector<int> comp{*pending.begin()}, queue = comp;
    pending.erase(pending.begin());
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (auto it = pending.begin(); it != pending.end();) {
        if (A[u][*it] != 0) {
          comp.push_back(*it);
          queue.push_back(*it);
          it = pending.erase(it);
        } else {
          ++it;
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(classify_component(A, d, comp));
  }
  std::sort(out.begin(), out.end(),
            [](const DiagramComponent& x, const DiagramComponent& y) {
              return x.nodes[0] < y.nodes[0];
            });
  return out;
}

mpz_class weyl_dim(const LongMat& A, const std::vector<long>& d,
                   const std::vector<long>& labels) {
  const int n = static_cast<int>(A.size());
  if (static_cast<int>(labels.size()) != n || static_cast<int>(d.size()) != n)
    throw std::invalid_argument("weyl_dim: size mismatch");
  for (long m : labels)
    if (m < 0) throw std::invalid_argument("weyl_dim: negative label");
  Rational prod(1);
  for (const auto& beta : positive_roots(A)) {
    long num = 0, den = 0;
    for (int j = 0; j < n; ++j) {
      num += (labels[j] + 1) * beta[j] * d[j];
      den += beta[j] * d[j];
    }
    prod *= Rational(num, den);
  }
  if (!prod.is_integer()) throw WalgError("weyl_dim: non-integral Weyl product");
  return prod.num();
}

mpz_class WeightTable::dim() const {
  mpz_class s = 0;
  for (const auto& [w, m] : entries) s += m;
  return s;
}

WeightTable weight_table(const LongMat& A, const std::vector<long>& d,
                         const std::vector<long>& labels) {
  const int n = static_cast<int>(A.size());
  if (static_cast<int>(labels.size()) != n || static_cast<int>(d.size()) != n)
    throw std::invalid_argument("weight_table: size mismatch");
  for (long m : labels)
    if (m < 0) throw std::invalid_argument("weight_table: negative label");

  auto positives = positive_roots(A);
  // weights tracked by how far they dropped from the top in root coordinates
  auto to_labels = [&](const std::vector<long>& v) {
    std::vector<long> mu(n);
    for (int j = 0; j < n; ++j) {
      mu[j] = labels[j];
      for (int i = 0; i < n; ++i) mu[j] -= v[i] * A[j][i];
    }
    return mu;
  };
  std::set<std::vector<long>> found{std::vector<long>(n, 0)};
  std::vector<std::vector<std::vector<long>>> by_depth{{std::vector<long>(n, 0)}};
  for (std::size_t t = 0; t < by_depth.size(); ++t) {
    for (std::size_t idx = 0; idx < by_depth[t].size(); ++idx) {
      std::vector<long> v = by_depth[t][idx];
      std::vector<long> mu = to_labels(v);
      for (int i = 0; i < n; ++i) {
        long q = 0;
        std::vector<long> up = v;
        while (up[i] > 0) {
          up[i] -= 1;
          if (!found.count(up)) break;
          ++q;
        }
        if (mu[i] + q >= 1) {
          std::vector<long> dn = v;
          dn[i] += 1;
          if (found.insert(dn).second) {
            if (by_depth.size() <= t + 1) by_depth.resize(t + 2);
            by_depth[t + 1].push_back(dn);
          }
        }
      }
    }
  }

  std::map<std::vector<long>, mpz_class> mult;
  mult[std::vector<long>(n, 0)] = 1;
  auto form = [&](const std::vector<long>& mu, const std::vector<long>& b) {
    // (mu, beta) with mu in fundamental and beta in simple-root coordinates
    mpz_class s = 0;
    for (int j = 0; j < n; ++j) s += mpz_class(b[j]) * d[j] * mu[j];
    return s;
  };
  for (std::size_t t = 1; t < by_depth.size(); ++t) {
    std::sort(by_depth[t].begin(), by_depth[t].end());
    for (const auto& v : by_depth[t]) {
      std::vector<long> mu = to_labels(v);
      mpz_class num = 0;
      for (const auto& b : positives) {
        for (long k = 1;; ++k) {
          std::vector<long> up(n);
          bool ok = true;
          for (int i = 0; i < n; ++i) {
            up[i] = v[i] - k * b[i];
            if (up[i] < 0) ok = false;
          }
          if (!ok || !found.count(up)) break;
          num += mult.at(up) * form(to_labels(up), b);
        }
      }
      mpz_class den = 0;
      for (int j = 0; j < n; ++j) den += mpz_class(v[j]) * d[j] * (labels[j] + mu[j] + 2);
      if (den == 0) throw WalgError("weight_table: vanishing Freudenthal denominator");
      mpz_class m = 2 * num;
      if (m % den != 0) throw WalgError("weight_table: non-integral multiplicity");
      mult[v] = m / den;
    }
  }

  WeightTable table;
  for (const auto& [v, m] : mult) {
    if (m <= 0) throw WalgError("weight_table: non-positive multiplicity");
    table.entries.emplace_back(to_labels(v), m.get_si());
  }
  std::sort(table.entries.begin(), table.entries.end());
  return table;
}

std::vector<Rational> principal_coroot(const LongMat& A) {
  const int n = static_cast<int>(A.size());
  RationalMatrix M(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M.at(i, j) = Rational(A[j][i]);
  Vec rhs(n, Rational(2));
  auto c = solve(M, rhs);
  if (!c) throw WalgError("principal_coroot: Cartan matrix is singular");
  return *c;
}

namespace {

struct GradedRoots {
  RootSystem R;
  std::vector<long> theta;
  std::vector<int> orthogonal;
  std::vector<std::vector<long>> value1;  // g(1) positive roots
  std::size_t value0 = 0;                 // positive roots of value 0
};

GradedRoots grade_by_highest_root(TypeRank g) {
  GradedRoots G;
  G.R = build_root_system(g);
  G.theta = G.R.highest_root();
  const int n = G.R.rank();
  long theta_sq = 0;  // (theta, theta)
  for (int i = 0; i < n; ++i) theta_sq += G.theta[i] * G.R.d[i] * G.R.pairing(G.theta, i);
  std::size_t value2 = 0;
  for (const auto& beta : G.R.positive) {
    long twice = 0;  // 2 (beta, theta)
    for (int i = 0; i < n; ++i) twice += 2 * beta[i] * G.R.d[i] * G.R.pairing(G.theta, i);
    if (twice % theta_sq != 0)
      throw WalgError("highest_root_row: grading by theta is not integral");
    long value = twice / theta_sq;
    if (value == 0) ++G.value0;
    else if (value == 1) G.value1.push_back(beta);
    else if (value == 2) ++value2;
    else throw WalgError("highest_root_row: grading value outside -2..2");
  }
  if (value2 != 1)
    throw WalgError("highest_root_row: theta is not the only root of value 2");
  for (int i = 0; i < n; ++i)
    if (G.R.pairing(G.theta, i) == 0) G.orthogonal.push_back(i);
  return G;
}

}  // namespace

HighestRootRow highest_root_row(TypeRank g) {
  GradedRoots G = grade_by_highest_root(g);
  const auto& R = G.R;
  HighestRootRow row;
  row.g = g;
  row.orthogonal = G.orthogonal;
  row.components = classify_subdiagram(R.A, R.d, G.orthogonal);
  row.center_dim = R.rank() - 1 - static_cast<int>(G.orthogonal.size());
  if (row.center_dim < 0) throw WalgError("highest_root_row: impossible center dimension");

  std::set<std::vector<long>> pos(R.positive.begin(), R.positive.end());
  auto restrict_labels = [&](const std::vector<long>& beta) {
    std::vector<long> lab;
    for (int i : G.orthogonal) lab.push_back(R.pairing(beta, i));
    return lab;
  };
  for (const auto& beta : G.value1) {
    row.g1_restricted.push_back(restrict_labels(beta));
    bool highest = true;  // no raising by a root of the orthogonal subsystem
    for (int i : G.orthogonal) {
      std::vector<long> up = beta;
      up[i] += 1;
      if (pos.count(up)) highest = false;
    }
    if (highest) row.module_labels.push_back(restrict_labels(beta));
  }
  std::sort(row.g1_restricted.begin(), row.g1_restricted.end());
  std::sort(row.module_labels.begin(), row.module_labels.end());

  row.dim_g1 = G.value1.size();
  row.d_invariant = row.dim_g1 + 1;
  row.dim_g = 2 * R.positive.size() + R.rank();
  std::size_t table_g0 = 2 * G.value0 + R.rank() - 1;
  row.dim_cross_check = row.dim_g == table_g0 + 2 * row.dim_g1 + 3;

  if (!G.orthogonal.empty()) {
    const int m = static_cast<int>(G.orthogonal.size());
    LongMat sub(m, std::vector<long>(m));
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) sub[p][q] = R.A[G.orthogonal[p]][G.orthogonal[q]];
    auto subd = symmetrizers(sub);
    mpz_class total = 0;
    for (const auto& lab : row.module_labels) total += weyl_dim(sub, subd, lab);
    row.module_dim_check = total == mpz_class(static_cast<unsigned long>(row.dim_g1));
  } else {
    row.module_dim_check = row.module_labels.size() == row.dim_g1;
  }
  return row;
}

ParityReport parity_check(TypeRank g) {
  GradedRoots G = grade_by_highest_root(g);
  ParityReport rep;
  if (G.orthogonal.empty()) {
    rep.eigenvalues.assign(G.value1.size(), 0);
    rep.all_odd = G.value1.empty();
    return rep;
  }
  const int m = static_cast<int>(G.orthogonal.size());
  LongMat sub(m, std::vector<long>(m));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) sub[p][q] = G.R.A[G.orthogonal[p]][G.orthogonal[q]];
  auto c = principal_coroot(sub);
  rep.all_odd = true;
  for (const auto& beta : G.value1) {
    Rational eig(0);
    for (int p = 0; p < m; ++p) eig += c[p] * Rational(G.R.pairing(beta, G.orthogonal[p]));
    if (!eig.is_integer())
      throw WalgError("parity_check: non-integral principal eigenvalue");
    long e = eig.num().get_si();
    rep.eigenvalues.push_back(e);
    if (e % 2 == 0) rep.all_odd = false;
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end());
  return rep;
}

}  // namespace walg
