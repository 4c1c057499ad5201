#include "relxl/coxeter.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "relxl/errors.hpp"

namespace relxl {

CoxeterMatrix::CoxeterMatrix(const DefiningGraph& graph, VertexSet subset) : vertices_(subset.members()) {
  const int n = rank();
  entries_.assign(static_cast<std::size_t>(n * n), kInfinity);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int& slot = entries_[static_cast<std::size_t>(i * n + j)];
      if (i == j) {
        slot = 1;
      } else if (auto m = graph.label(vertices_[static_cast<std::size_t>(i)], vertices_[static_cast<std::size_t>(j)])) {
        slot = *m;
      }
    }
  }
}

CoxeterMatrix coxeter_matrix(const DefiningGraph& graph, VertexSet subset) {
  if (!subset.subset_of(graph.all())) throw InputError("subset references unknown vertex");
  return CoxeterMatrix(graph, subset);
}

std::string CoxeterComponent::name() const {
  switch (family) {
    case CoxeterFamily::A: return "A" + std::to_string(rank);
    case CoxeterFamily::B: return "B" + std::to_string(rank);
    case CoxeterFamily::D: return "D" + std::to_string(rank);
    case CoxeterFamily::E: return "E" + std::to_string(rank);
    case CoxeterFamily::F: return "F4";
    case CoxeterFamily::H: return "H" + std::to_string(rank);
    case CoxeterFamily::I: return "I2(" + std::to_string(label) + ")";
    case CoxeterFamily::AffineA: return "~A" + std::to_string(rank - 1);
    case CoxeterFamily::AffineB: return "~B" + std::to_string(rank - 1);
    case CoxeterFamily::AffineC: return "~C" + std::to_string(rank - 1);
    case CoxeterFamily::AffineD: return "~D" + std::to_string(rank - 1);
    case CoxeterFamily::AffineE: return "~E" + std::to_string(rank - 1);
    case CoxeterFamily::AffineF: return "~F4";
    case CoxeterFamily::AffineG: return "~G2";
  }
  return "?";
}

std::string CoxeterType::name() const {
  if (kind == TypeClass::Neither) return "neither";
  std::string out;
  for (const auto& c : components) {
    if (!out.empty()) out += " x ";
    out += c.name();
  }
  return out;
}

std::string to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::PositiveSemidefinite: return "positive-semidefinite";
    case Definiteness::Indefinite: return "indefinite";
  }
  return "?";
}

std::string to_string(TypeClass t) {
  switch (t) {
    case TypeClass::Finite: return "finite";
    case TypeClass::Affine: return "affine";
    case TypeClass::Neither: return "neither";
  }
  return "?";
}

namespace {

constexpr int kInf = CoxeterMatrix::kInfinity;

// Diagram edge label between two distinct vertices: 2 means "no diagram
// edge", kInf means the vertices are not adjacent in the defining graph.
int diagram_label(const DefiningGraph& graph, int u, int v) {
  auto m = graph.label(u, v);
  return m ? *m : kInf;
}

bool diagram_edge(const DefiningGraph& graph, int u, int v) { return diagram_label(graph, u, v) != 2; }

std::vector<VertexSet> diagram_components(const DefiningGraph& graph, VertexSet subset) {
  std::vector<VertexSet> out;
  VertexSet left = subset;
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      const int v = frontier.lowest();
      frontier = frontier.without(v);
      for (int w : (left - comp).members()) {
        if (diagram_edge(graph, v, w)) {
          comp = comp.with(w);
          frontier = frontier.with(w);
        }
      }
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

struct Tree {
  std::vector<int> verts;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour position, label)

  int degree(int i) const { return static_cast<int>(adj[static_cast<std::size_t>(i)].size()); }
};

// Length of the arm leaving `start` through `next`, and whether the arm's
// final (leaf) edge carries `label`.
std::pair<int, bool> arm(const Tree& t, int start, int next, int label) {
  int prev = start;
  int cur = next;
  int len = 1;
  int last_label = 0;
  for (auto [w, m] : t.adj[static_cast<std::size_t>(start)]) {
    if (w == next) last_label = m;
  }
  while (t.degree(cur) == 2) {
    for (auto [w, m] : t.adj[static_cast<std::size_t>(cur)]) {
      if (w != prev) {
        prev = cur;
        cur = w;
        last_label = m;
        break;
      }
    }
    ++len;
  }
  return {len, last_label == label};
}

std::optional<CoxeterComponent> make(CoxeterFamily f, int rank, VertexSet vs, int label = 0) {
  return CoxeterComponent{f, rank, label, vs};
}

std::optional<CoxeterComponent> classify_component(const DefiningGraph& graph, VertexSet comp) {
  const int k = comp.size();
  if (k == 1) return make(CoxeterFamily::A, 1, comp);

  Tree t;
  t.verts = comp.members();
  t.adj.resize(static_cast<std::size_t>(k));
  int edges = 0;
  int count3 = 0, count4 = 0, count5 = 0, count6 = 0, count_big = 0;
  bool has_inf = false;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int m = diagram_label(graph, t.verts[static_cast<std::size_t>(i)], t.verts[static_cast<std::size_t>(j)]);
      if (m == 2) continue;
      t.adj[static_cast<std::size_t>(i)].push_back({j, m});
      t.adj[static_cast<std::size_t>(j)].push_back({i, m});
      ++edges;
      if (m == kInf) has_inf = true;
      else if (m == 3) ++count3;
      else if (m == 4) ++count4;
      else if (m == 5) ++count5;
      else if (m == 6) ++count6;
      else ++count_big;
    }
  }

  if (has_inf) {
    if (k == 2) return make(CoxeterFamily::AffineA, 2, comp);
    return std::nullopt;
  }
  if (k == 2) {
    const int m = t.adj[0][0].second;
    if (m == 3) return make(CoxeterFamily::A, 2, comp);
    if (m == 4) return make(CoxeterFamily::B, 2, comp);
    return make(CoxeterFamily::I, 2, comp, m);
  }

  std::vector<int> branch;
  std::vector<int> leaves;
  for (int i = 0; i < k; ++i) {
    if (t.degree(i) >= 3) branch.push_back(i);
    if (t.degree(i) == 1) leaves.push_back(i);
  }

  if (edges == k) {
    const bool cycle = std::all_of(t.adj.begin(), t.adj.end(), [](const auto& a) { return a.size() == 2; });
    if (cycle && count3 == k) return make(CoxeterFamily::AffineA, k, comp);
    return std::nullopt;
  }
  if (edges > k) return std::nullopt;

  // From here on the component is a tree.
  const bool path = branch.empty();
  if (count_big > 0) return std::nullopt;

  // Position of each edge along a path, counted from the leaf with the
  // smaller index.
  auto path_labels = [&]() {
    std::vector<int> labels;
    int prev = -1;
    int cur = leaves.front();
    while (true) {
      int nxt = -1;
      for (auto [w, m] : t.adj[static_cast<std::size_t>(cur)]) {
        if (w != prev) {
          nxt = w;
          labels.push_back(m);
          break;
        }
      }
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
    }
    return labels;
  };

  if (count6 > 0) {
    if (k == 3 && count6 == 1 && count3 == 1) return make(CoxeterFamily::AffineG, 3, comp);
    return std::nullopt;
  }
  if (count5 > 0) {
    if (count5 != 1 || count4 != 0 || !path) return std::nullopt;
    const auto labels = path_labels();
    if (labels.front() != 5 && labels.back() != 5) return std::nullopt;
    if (k == 3 || k == 4) return make(CoxeterFamily::H, k, comp);
    return std::nullopt;
  }

  if (count4 == 0) {
    if (path) return make(CoxeterFamily::A, k, comp);
    if (branch.size() == 1) {
      const int b = branch.front();
      std::vector<int> arms;
      for (auto [w, m] : t.adj[static_cast<std::size_t>(b)]) arms.push_back(arm(t, b, w, 3).first);
      std::sort(arms.begin(), arms.end());
      if (arms.size() == 3) {
        const int p = arms[0], q = arms[1], r = arms[2];
        if (p == 1 && q == 1) return make(CoxeterFamily::D, k, comp);
        if (p == 1 && q == 2 && r >= 2 && r <= 4) return make(CoxeterFamily::E, k, comp);
        if (p == 2 && q == 2 && r == 2) return make(CoxeterFamily::AffineE, k, comp);
        if (p == 1 && q == 3 && r == 3) return make(CoxeterFamily::AffineE, k, comp);
        if (p == 1 && q == 2 && r == 5) return make(CoxeterFamily::AffineE, k, comp);
        return std::nullopt;
      }
      if (arms.size() == 4 && arms.back() == 1) return make(CoxeterFamily::AffineD, k, comp);
      return std::nullopt;
    }
    if (branch.size() == 2 && t.degree(branch[0]) == 3 && t.degree(branch[1]) == 3 && leaves.size() == 4) {
      int attached[2] = {0, 0};
      for (int leaf : leaves) {
        const int w = t.adj[static_cast<std::size_t>(leaf)][0].first;
        if (w == branch[0]) ++attached[0];
        if (w == branch[1]) ++attached[1];
      }
      if (attached[0] == 2 && attached[1] == 2) return make(CoxeterFamily::AffineD, k, comp);
    }
    return std::nullopt;
  }

  if (count4 == 1) {
    if (path) {
      const auto labels = path_labels();
      const auto pos = static_cast<int>(std::find(labels.begin(), labels.end(), 4) - labels.begin());
      const int last = k - 2;
      if (pos == 0 || pos == last) return make(CoxeterFamily::B, k, comp);
      if (k == 4 && pos == 1) return make(CoxeterFamily::F, 4, comp);
      if (k == 5 && (pos == 1 || pos == 2)) {
        // ~F4 is 3,3,4,3 read from one end.
        const bool forward = labels == std::vector<int>{3, 3, 4, 3};
        const bool backward = labels == std::vector<int>{3, 4, 3, 3};
        if (forward || backward) return make(CoxeterFamily::AffineF, 5, comp);
      }
      return std::nullopt;
    }
    if (branch.size() == 1 && t.degree(branch.front()) == 3) {
      const int b = branch.front();
      std::vector<std::pair<int, bool>> arms;
      for (auto [w, m] : t.adj[static_cast<std::size_t>(b)]) arms.push_back(arm(t, b, w, 4));
      std::sort(arms.begin(), arms.end());
      if (arms[0].first != 1 || arms[1].first != 1) return std::nullopt;
      const int r = arms[2].first;
      const bool ok = r == 1 ? (arms[0].second || arms[1].second || arms[2].second) : arms[2].second;
      if (ok) return make(CoxeterFamily::AffineB, k, comp);
    }
    return std::nullopt;
  }

  if (count4 == 2 && path) {
    const auto labels = path_labels();
    if (labels.front() == 4 && labels.back() == 4) return make(CoxeterFamily::AffineC, k, comp);
  }
  return std::nullopt;
}

}  // namespace

CoxeterType classify_type(const DefiningGraph& graph, VertexSet subset) {
  CoxeterType out;
  bool all_finite = true;
  bool all_known = true;
  for (VertexSet comp : diagram_components(graph, subset)) {
    auto c = classify_component(graph, comp);
    if (!c) {
      all_known = false;
      continue;
    }
    if (c->affine()) all_finite = false;
    out.components.push_back(*c);
  }
  if (!all_known) out.kind = TypeClass::Neither;
  else if (all_finite) out.kind = TypeClass::Finite;
  else out.kind = TypeClass::Affine;
  return out;
}

bool is_spherical(const DefiningGraph& graph, VertexSet subset) {
  if (subset.empty()) return true;
  // A missing edge already forces an infinite dihedral subgroup.
  const auto members = subset.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!graph.adjacent(members[i], members[j])) return false;
    }
  }
  return classify_type(graph, subset).kind == TypeClass::Finite;
}

DefinitenessResult definiteness_oracle(const DefiningGraph& graph, VertexSet subset, double tolerance) {
  const CoxeterMatrix cm(graph, subset);
  const int n = cm.rank();
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = cm.at(i, j);
      if (i == j) b(i, j) = 1.0;
      else if (m == CoxeterMatrix::kInfinity) b(i, j) = -1.0;
      else b(i, j) = -std::cos(std::numbers::pi / m);
    }
  }
  DefinitenessResult r;
  if (n == 0) {
    r.kind = Definiteness::PositiveDefinite;
    r.min_eigenvalue = 1.0;
    return r;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = solver.eigenvalues().minCoeff();
  const double lambda = r.min_eigenvalue;
  if (lambda > tolerance) r.kind = Definiteness::PositiveDefinite;
  else if (lambda >= -tolerance) r.kind = Definiteness::PositiveSemidefinite;
  else r.kind = Definiteness::Indefinite;
  r.low_confidence = std::abs(lambda) > tolerance && std::abs(lambda) <= 1000.0 * tolerance;
  return r;
}

namespace {

void grow_spherical(const DefiningGraph& graph, VertexSet current, int next, std::vector<VertexSet>& out) {
  out.push_back(current);
  for (int v = next; v < graph.size(); ++v) {
    const VertexSet bigger = current.with(v);
    if (is_spherical(graph, bigger)) grow_spherical(graph, bigger, v + 1, out);
  }
}

}  // namespace

std::vector<VertexSet> enumerate_spherical_subsets(const DefiningGraph& graph) {
  std::vector<VertexSet> out;
  grow_spherical(graph, VertexSet{}, 0, out);
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

}  // namespace relxl
