#include "relxl/girth_checker.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <map>
#include <queue>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "relxl/errors.hpp"

namespace relxl {

namespace {

// Dijkstra from `from` to `to` ignoring the edge {from, to}; gives up once
// distances reach `bound`. Buffers are shared across calls and only the
// touched entries are reset, so each search costs what it explores.
class LocalDijkstra {
 public:
  explicit LocalDijkstra(const LinkGraph& link)
      : link_(link),
        dist_(static_cast<std::size_t>(link.vertex_count()), INT_MAX),
        parent_(static_cast<std::size_t>(link.vertex_count()), -1) {}

  // Distance and path from `from` to `to`.
  std::optional<std::pair<int, std::vector<int>>> run(int from, int to, int bound) {
    for (int v : touched_) {
      dist_[static_cast<std::size_t>(v)] = INT_MAX;
      parent_[static_cast<std::size_t>(v)] = -1;
    }
    touched_.clear();
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    set(from, 0, -1);
    queue.emplace(0, from);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d != dist_[static_cast<std::size_t>(u)]) continue;
      if (d >= bound) return std::nullopt;
      if (u == to) break;
      for (auto [v, w] : link_.neighbours(u)) {
        if (u == from && v == to) continue;
        const int nd = d + w;
        if (nd < dist_[static_cast<std::size_t>(v)]) {
          set(v, nd, u);
          queue.emplace(nd, v);
        }
      }
    }
    const int reached = dist_[static_cast<std::size_t>(to)];
    if (reached >= bound) return std::nullopt;
    std::vector<int> path;
    for (int v = to; v != -1; v = parent_[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return std::pair(reached, path);
  }

 private:
  void set(int v, int d, int p) {
    if (dist_[static_cast<std::size_t>(v)] == INT_MAX) touched_.push_back(v);
    dist_[static_cast<std::size_t>(v)] = d;
    parent_[static_cast<std::size_t>(v)] = p;
  }

  const LinkGraph& link_;
  std::vector<int> dist_;
  std::vector<int> parent_;
  std::vector<int> touched_;
};

CycleCertificate search_edges(const LinkGraph& link, const std::vector<LinkEdge>& candidates) {
  CycleCertificate best;
  best.complete = !link.truncated();
  LocalDijkstra dijkstra(link);
  int bound = INT_MAX;
  for (const LinkEdge& e : candidates) {
    if (e.length >= bound) continue;
    auto path = dijkstra.run(e.u, e.v, bound - e.length);
    if (!path) continue;
    bound = path->first + e.length;
    best.found = true;
    best.length_units = bound;
    best.cycle = path->second;
  }
  return best;
}

}  // namespace

// One Dijkstra per root, settling only vertices closer than half the best
// cycle so far: every vertex of a lighter cycle through the root is. A
// non-tree edge between different branches of the root closes a simple
// cycle, and for a root on a minimum cycle the two arcs of that cycle are
// in different branches (a shared prefix would cut out a lighter cycle).
CycleCertificate shortest_embedded_cycle(const LinkGraph& link) {
  CycleCertificate best;
  best.complete = !link.truncated();
  const auto n = static_cast<std::size_t>(link.vertex_count());
  std::vector<int> dist(n, INT_MAX), parent(n, -1), branch(n, -1);
  std::vector<int> touched, settled;
  int bound = INT_MAX;
  using Item = std::pair<int, int>;
  for (int root = 0; root < link.vertex_count(); ++root) {
    for (int v : touched) {
      dist[static_cast<std::size_t>(v)] = INT_MAX;
      parent[static_cast<std::size_t>(v)] = -1;
      branch[static_cast<std::size_t>(v)] = -1;
    }
    touched.clear();
    settled.clear();
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    dist[static_cast<std::size_t>(root)] = 0;
    branch[static_cast<std::size_t>(root)] = root;
    touched.push_back(root);
    queue.emplace(0, root);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (d != dist[static_cast<std::size_t>(u)]) continue;
      if (bound != INT_MAX && 2 * d >= bound) break;
      settled.push_back(u);
      for (auto [v, w] : link.neighbours(u)) {
        const int nd = d + w;
        if (nd >= dist[static_cast<std::size_t>(v)]) continue;
        if (dist[static_cast<std::size_t>(v)] == INT_MAX) touched.push_back(v);
        dist[static_cast<std::size_t>(v)] = nd;
        parent[static_cast<std::size_t>(v)] = u;
        branch[static_cast<std::size_t>(v)] = u == root ? v : branch[static_cast<std::size_t>(u)];
        queue.emplace(nd, v);
      }
    }
    // Tentative distances of unsettled neighbours still belong to real
    // tree paths, so every candidate is a genuine simple cycle.
    int found_u = -1, found_v = -1;
    for (int u : settled) {
      for (auto [v, w] : link.neighbours(u)) {
        const int dv = dist[static_cast<std::size_t>(v)];
        if (dv == INT_MAX) continue;
        if (parent[static_cast<std::size_t>(v)] == u || parent[static_cast<std::size_t>(u)] == v) continue;
        if (branch[static_cast<std::size_t>(u)] == branch[static_cast<std::size_t>(v)]) continue;
        const int total = dist[static_cast<std::size_t>(u)] + w + dv;
        if (total < bound) {
          bound = total;
          found_u = u;
          found_v = v;
        }
      }
    }
    if (found_u < 0) continue;
    std::vector<int> cycle;
    for (int x = found_u; x != -1; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
    std::reverse(cycle.begin(), cycle.end());
    for (int x = found_v; x != root; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
    best.found = true;
    best.length_units = bound;
    best.cycle = std::move(cycle);
  }
  return best;
}

CycleCertificate shortest_cycle_through(const LinkGraph& link, int root) {
  std::vector<LinkEdge> at_root;
  for (auto [v, w] : link.neighbours(root)) at_root.push_back({root, v, w});
  return search_edges(link, at_root);
}

std::optional<int> cycle_length(const LinkGraph& link, const std::vector<int>& cycle) {
  int total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[(i + 1) % cycle.size()];
    const auto& adj = link.neighbours(u);
    auto it = std::find_if(adj.begin(), adj.end(), [v](const auto& p) { return p.first == v; });
    if (it == adj.end()) return std::nullopt;
    total += it->second;
  }
  return total;
}

Word syllables_to_word(const std::vector<Syllable>& s) {
  Word w;
  for (const Syllable& x : s) {
    const Word p = power(x.gen, x.exponent);
    w.insert(w.end(), p.begin(), p.end());
  }
  return w;
}

namespace {

struct DihedralAdapter {
  const DihedralGroup& group;
  // Exponent sums are carried along instead of recomputed from the factors.
  struct Element {
    DihedralElement g;
    std::array<int, 2> sums{};
  };

  int rank() const { return 2; }
  Element identity() const { return {}; }
  void multiply(Element& x, Letter l) const {
    group.multiply(x.g, l);
    x.sums[static_cast<std::size_t>(l.gen)] += l.inverse ? -1 : 1;
  }
  int lower_bound(const Element& x) const { return group.length_lower_bound(x.g, x.sums); }
  // The exponent sum moves by one per letter and bounds the length.
  bool escaped(const Element& x, int sign, int radius) const { return sign * (x.sums[0] + x.sums[1]) > radius; }
  int size(const Element& x) const { return group.size(x.g); }
  bool is_identity(const Element& x) const { return x.g.is_identity(); }
  void write_key(const Element& x, std::string& out) const {
    out.assign(reinterpret_cast<const char*>(&x.g.delta_power), sizeof x.g.delta_power);
    for (Simple f : x.g.factors) out += static_cast<char>(f.first << 7 | f.length);
  }
  std::string coset_key(const Element& x, int gen) const { return encode(group.coset_rep(x.g, gen)); }
};

struct FreeAdapter {
  const FreeGroup& group;
  using Element = Word;

  int rank() const { return group.rank(); }
  Element identity() const { return {}; }
  void multiply(Element& g, Letter x) const { group.multiply(g, x); }
  int lower_bound(const Element& g) const { return static_cast<int>(g.size()); }
  // Appending a new syllable never cancels, so the length only grows.
  bool escaped(const Element& g, int, int radius) const { return static_cast<int>(g.size()) > radius; }
  int size(const Element& g) const { return static_cast<int>(g.size()); }
  bool is_identity(const Element& g) const { return g.empty(); }
  void write_key(const Element& g, std::string& out) const {
    out.clear();
    for (const Letter& x : g) out += static_cast<char>(x.gen * 2 + (x.inverse ? 1 : 0));
  }
  std::string coset_key(const Element& g, int gen) const {
    std::string out;
    write_key(group.coset_rep(g, gen), out);
    return out;
  }
};

struct Node {
  int parent = -1;
  int gen = 0;
  int exponent = 0;
};

struct Slot {
  int syllables = INT_MAX;
  int letters = INT_MAX;
  int node = -1;
};

std::vector<Syllable> unwind(const std::vector<Node>& nodes, int node) {
  std::vector<Syllable> out;
  for (int i = node; i != -1; i = nodes[static_cast<std::size_t>(i)].parent) {
    out.push_back({nodes[static_cast<std::size_t>(i)].gen, nodes[static_cast<std::size_t>(i)].exponent});
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Exact open-addressing map from element keys (byte strings) to a row of
// slots. Keys live in one arena; rows are contiguous.
class MeetTable {
 public:
  explicit MeetTable(std::size_t row) : row_(row), index_(1U << 16, 0) {}

  Slot* row(std::string_view key) {
    const std::uint64_t h = std::hash<std::string_view>{}(key);
    std::size_t mask = index_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      const std::uint32_t e = index_[i];
      if (e == 0) {
        meta_.push_back({h, arena_.size(), key.size()});
        arena_.insert(arena_.end(), key.begin(), key.end());
        slots_.resize(slots_.size() + row_);
        index_[i] = static_cast<std::uint32_t>(meta_.size());
        if (2 * meta_.size() > index_.size()) grow();
        return &slots_[(meta_.size() - 1) * row_];
      }
      const Meta& m = meta_[e - 1];
      if (m.hash == h && m.length == key.size() && std::equal(key.begin(), key.end(), arena_.begin() + static_cast<std::ptrdiff_t>(m.offset))) {
        return &slots_[(e - 1) * row_];
      }
    }
  }

  std::size_t size() const { return meta_.size(); }
  const Slot* row_at(std::size_t i) const { return &slots_[i * row_]; }

 private:
  struct Meta {
    std::uint64_t hash;
    std::size_t offset;
    std::size_t length;
  };

  void grow() {
    std::vector<std::uint32_t> bigger(index_.size() * 2, 0);
    const std::size_t mask = bigger.size() - 1;
    for (std::size_t e = 0; e < meta_.size(); ++e) {
      std::size_t i = meta_[e].hash & mask;
      while (bigger[i] != 0) i = (i + 1) & mask;
      bigger[i] = static_cast<std::uint32_t>(e + 1);
    }
    index_.swap(bigger);
  }

  std::size_t row_;
  std::vector<std::uint32_t> index_;
  std::vector<Meta> meta_;
  std::vector<char> arena_;
  std::vector<Slot> slots_;
};

template <class Adapter>
SyllableSearch search(const Adapter& a, int radius, int max_half, std::size_t cap) {
  SyllableSearch result;
  result.radius = radius;
  result.max_half = max_half;
  const int rank = a.rank();
  const auto row = static_cast<std::size_t>(rank * rank);
  MeetTable table(row);
  std::vector<Node> nodes;
  std::string key;

  auto dfs = [&](auto&& self, const typename Adapter::Element& g, int parent, int depth, int letters, int first,
                 int last) -> void {
    for (int gen = 0; gen < rank; ++gen) {
      if (gen == last) continue;
      for (int sign : {1, -1}) {
        typename Adapter::Element h = g;
        for (int k = 1;; ++k) {
          a.multiply(h, Letter{gen, sign < 0});
          if (a.escaped(h, sign, radius)) break;
          if (a.lower_bound(h) > radius) continue;
          if (nodes.size() >= cap) throw ResourceLimitError("syllable cycle search", nodes.size());
          const int id = static_cast<int>(nodes.size());
          nodes.push_back({parent, gen, sign * k});
          const int f = depth == 0 ? gen : first;
          a.write_key(h, key);
          Slot& s = table.row(key)[static_cast<std::size_t>(f * rank + gen)];
          if (std::pair(depth + 1, letters + k) < std::pair(s.syllables, s.letters)) s = {depth + 1, letters + k, id};
          if (depth + 1 < max_half) self(self, h, id, depth + 1, letters + k, f, gen);
        }
      }
    }
  };
  if (max_half >= 1) dfs(dfs, a.identity(), -1, 0, 0, -1, -1);
  result.explored = nodes.size();

  // Two half-words meeting at one element close a cycle when they leave 1
  // through different cosets and arrive through different cosets. Ties go to
  // fewer letters, then to the lexicographically smaller word.
  std::tuple<int, int, std::vector<std::pair<int, int>>> best{INT_MAX, INT_MAX, {}};
  std::vector<Syllable> best_word;
  for (std::size_t r = 0; r < table.size(); ++r) {
    const Slot* slots = table.row_at(r);
    for (std::size_t p = 0; p < row; ++p) {
      if (slots[p].node < 0) continue;
      for (std::size_t q = p + 1; q < row; ++q) {
        if (slots[q].node < 0) continue;
        if (p / static_cast<std::size_t>(rank) == q / static_cast<std::size_t>(rank) ||
            p % static_cast<std::size_t>(rank) == q % static_cast<std::size_t>(rank)) {
          continue;
        }
        const int total = slots[p].syllables + slots[q].syllables;
        const int letters = slots[p].letters + slots[q].letters;
        if (std::pair(total, letters) > std::pair(std::get<0>(best), std::get<1>(best))) continue;
        std::vector<Syllable> word = unwind(nodes, static_cast<int>(slots[p].node));
        std::vector<Syllable> back = unwind(nodes, static_cast<int>(slots[q].node));
        for (auto it = back.rbegin(); it != back.rend(); ++it) word.push_back({it->gen, -it->exponent});
        std::vector<std::pair<int, int>> flat;
        for (const Syllable& s : word) flat.emplace_back(s.gen, s.exponent);
        auto candidate = std::tuple(total, letters, std::move(flat));
        if (candidate < best) {
          best = std::move(candidate);
          best_word = std::move(word);
        }
      }
    }
  }
  if (best_word.empty()) return result;

  result.shortest = best_word;
  typename Adapter::Element g = a.identity();
  std::unordered_set<std::string> seen;
  a.write_key(g, key);
  seen.insert(key);
  result.witness_in_ball = true;
  result.witness_simple = true;
  for (std::size_t i = 0; i < best_word.size(); ++i) {
    const Syllable& s = best_word[i];
    if (!seen.insert("c" + std::to_string(s.gen) + a.coset_key(g, s.gen)).second) result.witness_simple = false;
    for (const Letter& x : power(s.gen, s.exponent)) a.multiply(g, x);
    if (a.size(g) > radius) result.witness_in_ball = false;
    a.write_key(g, key);
    if (i + 1 < best_word.size() && !seen.insert(key).second) result.witness_simple = false;
  }
  if (!a.is_identity(g)) throw std::logic_error("syllable search produced an open walk");
  return result;
}

}  // namespace

SyllableSearch shortest_syllable_cycle(const DihedralGroup& group, int radius, int max_half, std::size_t cap) {
  return search(DihedralAdapter{group}, radius, max_half, cap);
}

SyllableSearch shortest_syllable_cycle(const FreeGroup& group, int radius, int max_half, std::size_t cap) {
  return search(FreeAdapter{group}, radius, max_half, cap);
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::PassComplete: return "PASS-complete";
    case CertStatus::PassWithinRadius: return "PASS-within-radius";
    case CertStatus::TrustedByPaper: return "TRUSTED-BY-PAPER";
    case CertStatus::Fail: return "FAIL";
  }
  return "?";
}

bool LinkConditionReport::passed() const {
  return std::none_of(certificates.begin(), certificates.end(),
                      [](const LinkCertificate& c) { return c.status == CertStatus::Fail; });
}

int half_syllables_for(int unit) { return (kLinkThresholdUnits / 4 + unit - 1) / unit; }

namespace {

LinkCertificate from_graph(const LinkGraph& link, const CycleCertificate& cycle, std::string method) {
  LinkCertificate c;
  c.vertex_type = link.center();
  c.link_case = link.link_case();
  c.radius = link.radius();
  c.method = std::move(method);
  if (cycle.found) {
    c.length_units = cycle.length_units;
    for (int v : cycle.cycle) c.minimal_cycle.push_back(link.vertices()[static_cast<std::size_t>(v)].label);
  }
  if (!cycle.passes()) {
    c.status = CertStatus::Fail;
  } else {
    c.status = link.truncated() ? CertStatus::PassWithinRadius : CertStatus::PassComplete;
  }
  return c;
}

// Vertex labels of the cycle 1, 1<x1>, x1^k1, ... for a syllable witness,
// each element spelled by its syllable prefix.
std::vector<std::string> syllable_cycle_labels(const std::vector<Syllable>& word, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  Word prefix;
  for (const Syllable& s : word) {
    const std::string here = prefix.empty() ? "1" : format_word(prefix, names);
    out.push_back(here);
    out.push_back(here + " <" + names[static_cast<std::size_t>(s.gen)] + ">");
    const Word p = power(s.gen, s.exponent);
    prefix.insert(prefix.end(), p.begin(), p.end());
  }
  return out;
}

void apply_search(LinkCertificate& c, const SyllableSearch& search, int unit, std::vector<std::string> labels) {
  c.radius = search.radius;
  c.method = "syllable search through 1, half-words of <= " + std::to_string(search.max_half) +
             " syllables, every prefix within length bound " + std::to_string(search.radius);
  if (search.shortest) {
    c.length_units = 2 * search.syllables() * unit;
    c.minimal_cycle = std::move(labels);
    if (!search.witness_simple) c.note += "witness walk repeats a vertex; ";
    if (!search.witness_in_ball) c.note += "witness leaves the radius ball; ";
  }
  const bool fail = c.length_units && *c.length_units < kLinkThresholdUnits;
  c.status = fail ? CertStatus::Fail : CertStatus::PassWithinRadius;
  if (!search.shortest) {
    c.note += "no cycle of <= " + std::to_string(4 * search.max_half) + " edges through 1 within the radius";
  }
}

}  // namespace

LinkConditionReport certify_link_condition(const Instance& instance, const CertifyConfig& config) {
  const DefiningGraph& g = instance.graph;
  LinkConditionReport report;

  const LinkGraph empty = build_link_empty(instance);
  report.certificates.push_back(from_graph(empty, shortest_embedded_cycle(empty), "weighted girth of the finite link"));

  const VertexSet iev = inter_edge_vertices(g, instance.family);
  std::unordered_map<int, std::size_t> single_index;
  for (int s : iev.members()) {
    const LinkGraph link = build_link_single(instance, s, config.truncation_case2);
    single_index[s] = report.certificates.size();
    LinkCertificate c = from_graph(link, shortest_embedded_cycle(link),
                                   "weighted girth, powers of the generator truncated at |k| <= " +
                                       std::to_string(config.truncation_case2));
    report.certificates.push_back(std::move(c));
  }

  for (int i = 0; i < instance.family.count(); ++i) {
    const VertexSet part = instance.family.part(i);
    LinkCertificate c;
    c.vertex_type = "A_" + g.format_set(part);
    c.link_case = LinkCase::Part;
    if (part.size() == 1) {
      const int s = part.lowest();
      if (iev.contains(s)) {
        const LinkCertificate& same = report.certificates[single_index.at(s)];
        c.status = same.status;
        c.length_units = same.length_units;
        c.minimal_cycle = same.minimal_cycle;
        c.radius = same.radius;
        c.method = "same vertex as the single-generator link";
      } else {
        c.status = CertStatus::PassComplete;
        c.method = "no coset of the complex lies above the part, so the link has no edges";
      }
      report.certificates.push_back(std::move(c));
      continue;
    }
    const auto oracle = make_part_oracle(instance, i);
    const int unit = corner_units(instance, part);
    const int half = half_syllables_for(unit);
    if (auto* d = dynamic_cast<const DihedralOracle*>(oracle.get())) {
      const auto search = shortest_syllable_cycle(d->group(), config.radius_case1, half);
      std::vector<std::string> labels;
      if (search.shortest) {
        labels = syllable_cycle_labels(*search.shortest, d->names());
      }
      apply_search(c, search, unit, std::move(labels));
    } else if (auto* f = dynamic_cast<const FreeOracle*>(oracle.get())) {
      const auto search = shortest_syllable_cycle(f->group(), config.radius_case1, half);
      std::vector<std::string> labels;
      if (search.shortest) {
        labels = syllable_cycle_labels(*search.shortest, f->names());
      }
      apply_search(c, search, unit, std::move(labels));
    } else {
      c.status = CertStatus::TrustedByPaper;
      c.method = "no exact word problem engine for this part";
      c.note = "at least 8 edges of pi/4 each by the parabolic subgroup argument; not machine-checked";
    }
    report.certificates.push_back(std::move(c));
  }

  // Inter-edges with the same label, unit and radius have isomorphic links.
  std::map<std::tuple<int, int, int>, SyllableSearch> searched;
  for (const InterEdge& e : inter_edges(g, instance.family)) {
    const int m = e.edge.label;
    const int unit = corner_units(instance, e.vertices());
    const int radius = config.radius_case3.value_or(8 * m);
    const DihedralGroup group(m, g.name(e.edge.u), g.name(e.edge.v));
    auto it = searched.find({m, unit, radius});
    if (it == searched.end()) {
      it = searched.emplace(std::tuple(m, unit, radius), shortest_syllable_cycle(group, radius, half_syllables_for(unit)))
               .first;
    }
    const SyllableSearch& search = it->second;
    LinkCertificate c;
    c.vertex_type = "A_" + g.format_set(e.vertices());
    c.link_case = LinkCase::InterEdge;
    std::vector<std::string> labels;
    if (search.shortest) {
      labels = syllable_cycle_labels(*search.shortest, group.names());
    }
    apply_search(c, search, unit, std::move(labels));
    report.certificates.push_back(std::move(c));
  }
  return report;
}

}  // namespace relxl
