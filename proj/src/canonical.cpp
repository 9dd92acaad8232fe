#include "lgen/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lgen {

namespace {

constexpr long kMaxOrderings = 40320;

std::string su3_label(SU3Rep r) {
  return r == SU3Rep::Singlet ? "1" : r == SU3Rep::Triplet ? "3" : "3b";
}

std::string label_of(const TermObject& o, bool in_commutator) {
  if (const auto* f = std::get_if<Field>(&o)) {
    std::string s = f->is_scalar() ? "F0" : (f->helicity == Helicity::Left ? "FL" : "FR");
    s += "(" + su3_label(f->su3) + "," + std::to_string(slot_count(f->su2) + 1) + "," +
         f->u1.str() + ")";
    if (f->daggered) s += "+";
    return s;
  }
  if (const auto* d = std::get_if<Derivative>(&o)) {
    std::string s = "D";
    if (d->groups.su3) s += "3";
    if (d->groups.su2) s += "2";
    if (d->groups.u1) s += "1";
    if (in_commutator) s += "c";
    return s;
  }
  return "S";
}

struct Edge {
  std::string tag;
  std::vector<int> members;
  bool ordered = false;
};

struct Graph {
  std::string flags;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
};

Graph build_graph(const Term& t, bool with_contractions) {
  Graph g;
  g.flags = std::string(t.imaginary ? "i" : "") + (t.minus ? "-" : "");

  std::map<int, int> vertex_of_id;
  std::vector<const TermObject*> objects;
  std::vector<int> vertex_at(t.objects.size(), -1);
  // commutator index per vertex and side members
  std::vector<std::vector<int>> sides;
  int side = -1;
  for (std::size_t k = 0; k < t.objects.size(); ++k) {
    const TermObject& o = t.objects[k];
    if (std::holds_alternative<CommutatorOpen>(o)) {
      sides.emplace_back();
      side = static_cast<int>(sides.size()) - 1;
      continue;
    }
    if (std::holds_alternative<CommutatorSeparator>(o)) {
      sides.emplace_back();
      side = static_cast<int>(sides.size()) - 1;
      continue;
    }
    const int v = static_cast<int>(g.labels.size());
    g.labels.push_back(label_of(o, side >= 0));
    objects.push_back(&o);
    vertex_at[k] = v;
    if (side >= 0) sides[side].push_back(v);
    if (auto id = object_id(o)) vertex_of_id.emplace(*id, v);
  }

  for (std::size_t s = 0; s < sides.size(); ++s) {
    g.edges.push_back({"S", sides[s], false});
    if (s % 2 == 1) {
      std::vector<int> both = sides[s - 1];
      both.insert(both.end(), sides[s].begin(), sides[s].end());
      g.edges.push_back({"C", both, false});
    }
  }

  for (std::size_t k = 0; k + 1 < t.objects.size(); ++k)
    if (std::holds_alternative<Derivative>(t.objects[k]) && vertex_at[k] >= 0 &&
        std::holds_alternative<Field>(t.objects[k + 1]) &&
        g.labels[vertex_at[k]].back() != 'c')
      g.edges.push_back({"A", {vertex_at[k], vertex_at[k + 1]}, true});

  if (!with_contractions) return g;
  for (const ContractionEntry& e : t.contractions) {
    Edge edge;
    edge.tag = e.group == IndexGroup::Lorentz ? "L" : e.group == IndexGroup::SU3 ? "3" : "2";
    for (int id : e.ids) {
      auto it = vertex_of_id.find(id);
      if (it == vertex_of_id.end()) edge.tag += "?";
      else edge.members.push_back(it->second);
    }
    // Normalize the paired 3 x 3bar form to its epsilon slot multiset.
    if (e.group == IndexGroup::SU3 && edge.members.size() == 2) {
      const auto* a = std::get_if<Field>(objects[edge.members[0]]);
      const auto* b = std::get_if<Field>(objects[edge.members[1]]);
      if (a && b) {
        const int na = slot_count(a->su3), nb = slot_count(b->su3);
        if (na == 1 && nb == 2) edge.members.push_back(edge.members[1]);
        else if (na == 2 && nb == 1) edge.members.push_back(edge.members[0]);
      }
    }
    g.edges.push_back(std::move(edge));
  }
  return g;
}

std::string serialize(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<int>(p);
  std::string s = g.flags + "|";
  for (int v : order) s += g.labels[v] + ";";
  std::vector<std::string> edges;
  edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) {
    std::vector<int> m;
    for (int v : e.members) m.push_back(pos[v]);
    if (!e.ordered) std::sort(m.begin(), m.end());
    std::string es = e.tag + ":";
    for (int x : m) es += std::to_string(x) + ".";
    edges.push_back(std::move(es));
  }
  std::sort(edges.begin(), edges.end());
  s += "|";
  for (const std::string& e : edges) s += e + ";";
  return s;
}

// Colour refinement; returned colours are ranks of invariant signatures.
std::vector<int> refine(const Graph& g) {
  const std::size_t n = g.labels.size();
  std::vector<std::string> sig(g.labels);
  std::vector<int> colour(n);
  std::size_t classes = 0;
  for (int round = 0; round <= static_cast<int>(n) + 1; ++round) {
    std::vector<std::string> sorted(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
    std::vector<std::vector<std::string>> parts(n);
    for (const Edge& e : g.edges) {
      std::vector<int> cs;
      for (int m : e.members) cs.push_back(colour[m]);
      for (std::size_t k = 0; k < e.members.size(); ++k) {
        std::string p = e.tag + (e.ordered ? std::to_string(k) : "") + "(";
        std::vector<int> others = cs;
        if (!e.ordered) std::sort(others.begin(), others.end());
        for (int c : others) p += std::to_string(c) + ",";
        parts[e.members[k]].push_back(p + ")");
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(parts[v].begin(), parts[v].end());
      std::string s = std::to_string(colour[v]) + "[";
      for (const std::string& p : parts[v]) s += p;
      sig[v] = s + "]";
    }
  }
  return colour;
}

std::string canonical_serialization(const Graph& g) {
  const std::size_t n = g.labels.size();
  const std::vector<int> colour = refine(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.labels[a] != g.labels[b]) return g.labels[a] < g.labels[b];
    return colour[a] < colour[b];
  });

  // Runs of equal (label, colour) are the residual ties.
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  long orderings = 1;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && g.labels[order[j]] == g.labels[order[i]] && colour[order[j]] == colour[order[i]]) ++j;
    if (j - i > 1) {
      runs.emplace_back(i, j);
      for (std::size_t k = 2; k <= j - i && orderings <= kMaxOrderings; ++k) orderings *= static_cast<long>(k);
    }
    i = j;
  }
  if (runs.empty() || orderings > kMaxOrderings) return serialize(g, order);

  for (auto [b, e] : runs) std::sort(order.begin() + b, order.begin() + e);
  std::string best = serialize(g, order);
  while (true) {
    std::size_t r = 0;
    for (; r < runs.size(); ++r) {
      auto [b, e] = runs[r];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (r == runs.size()) break;
    best = std::min(best, serialize(g, order));
  }
  return best;
}

}  // namespace

std::string canonical_key(const Term& t) {
  return std::min(canonical_serialization(build_graph(t, true)),
                  canonical_serialization(build_graph(hermitian_conjugate(t), true)));
}

std::string object_signature(const Term& t) {
  auto sig = [](const Term& x) {
    const Graph g = build_graph(x, false);
    std::vector<std::string> labels = g.labels;
    std::sort(labels.begin(), labels.end());
    std::string s = g.flags + "|";
    for (const std::string& l : labels) s += l + ";";
    return s;
  };
  return std::min(sig(t), sig(hermitian_conjugate(t)));
}

Term relabel_first_use(const Term& t) {
  std::map<int, int> rename;
  for (const TermObject& o : t.objects)
    if (auto id = object_id(o)) rename.emplace(*id, static_cast<int>(rename.size()));
  Term out = t;
  for (TermObject& o : out.objects)
    if (auto id = object_id(o)) set_object_id(o, rename.at(*id));
  for (ContractionEntry& e : out.contractions)
    for (int& id : e.ids) {
      auto it = rename.find(id);
      if (it != rename.end()) id = it->second;
    }
  return out;
}

}  // namespace lgen
