#include "lgen/invariance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <string>

#include "lgen/group_element.hpp"

namespace lgen {

namespace {

using cd = std::complex<double>;

// Dense tensor, row-major over `dims`; SU(3) axes precede SU(2) axes.
struct Tensor {
  std::vector<int> dims;
  std::vector<cd> v;

  static Tensor zeros(std::vector<int> d) {
    std::size_t n = 1;
    for (int x : d) n *= static_cast<std::size_t>(x);
    return Tensor{std::move(d), std::vector<cd>(n)};
  }
  std::size_t stride(int axis) const {
    std::size_t s = 1;
    for (std::size_t k = axis + 1; k < dims.size(); ++k) s *= static_cast<std::size_t>(dims[k]);
    return s;
  }
};

int levi_civita3(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

Tensor apply_on_axis(const Tensor& t, int axis, const Eigen::MatrixXcd& m) {
  Tensor out = Tensor::zeros(t.dims);
  const std::size_t s = t.stride(axis);
  const int n = t.dims[axis];
  for (std::size_t flat = 0; flat < t.v.size(); ++flat) {
    const int i = static_cast<int>((flat / s) % n);
    const std::size_t base = flat - static_cast<std::size_t>(i) * s;
    cd acc = 0;
    for (int j = 0; j < n; ++j) acc += m(i, j) * t.v[base + static_cast<std::size_t>(j) * s];
    out.v[flat] = acc;
  }
  return out;
}

struct Shape {
  int n3 = 0;
  int n2 = 0;
};

Shape shape_of(SU3Rep c, SU2Rep w) { return Shape{slot_count(c), slot_count(w)}; }

std::vector<int> dims_of(Shape s) {
  std::vector<int> d(static_cast<std::size_t>(s.n3), 3);
  d.insert(d.end(), static_cast<std::size_t>(s.n2), 2);
  return d;
}

// Random tensor with the (anti)symmetry of its representation.
Tensor random_base(const Field& u, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0, 1);
  const Shape s = shape_of(u.su3, u.su2);
  Tensor t = Tensor::zeros(dims_of(s));
  for (cd& x : t.v) x = cd(normal(rng), normal(rng));
  auto swap_axes = [](const Tensor& src, int a, int b) {
    Tensor out = Tensor::zeros(src.dims);
    const std::size_t sa = src.stride(a), sb = src.stride(b);
    const int n = src.dims[a];
    for (std::size_t flat = 0; flat < src.v.size(); ++flat) {
      const int i = static_cast<int>((flat / sa) % n);
      const int j = static_cast<int>((flat / sb) % n);
      const std::size_t other = flat - i * sa - j * sb + j * sa + i * sb;
      out.v[flat] = src.v[other];
    }
    return out;
  };
  if (s.n3 == 2) {
    const Tensor sw = swap_axes(t, 0, 1);
    for (std::size_t k = 0; k < t.v.size(); ++k) t.v[k] = 0.5 * (t.v[k] - sw.v[k]);
  }
  if (s.n2 == 2) {
    const Tensor sw = swap_axes(t, s.n3, s.n3 + 1);
    for (std::size_t k = 0; k < t.v.size(); ++k) t.v[k] = 0.5 * (t.v[k] + sw.v[k]);
  }
  return t;
}

struct GroupAction {
  Eigen::MatrixXcd su3 = Eigen::MatrixXcd::Identity(3, 3);
  Eigen::MatrixXcd su2 = Eigen::MatrixXcd::Identity(2, 2);
  double theta = 0.0;
};

Tensor transform(const Tensor& base, const Field& u, const GroupAction& g) {
  const Shape s = shape_of(u.su3, u.su2);
  Tensor t = base;
  for (int a = 0; a < s.n3; ++a) t = apply_on_axis(t, a, g.su3);
  for (int a = 0; a < s.n2; ++a) t = apply_on_axis(t, s.n3 + a, g.su2);
  const cd phase = std::polar(1.0, u.u1.to_double() * g.theta);
  for (cd& x : t.v) x *= phase;
  return t;
}

// Tensor carried by the object: the field itself, or for a daggered
// occurrence the conjugate with indices lowered back to fundamental
// slots (3* -> antisymmetric pair, 3bar* -> one slot, SU(2) via epsilon).
Tensor effective(const Tensor& base, const Field& u, bool daggered) {
  if (!daggered) return base;
  const Shape s = shape_of(u.su3, u.su2);
  Tensor c = base;
  for (cd& x : c.v) x = std::conj(x);

  const std::size_t rest = c.v.size() / (s.n3 == 0 ? 1 : (s.n3 == 1 ? 3 : 9));
  Tensor out;
  if (s.n3 == 1) {
    std::vector<int> d{3, 3};
    d.insert(d.end(), c.dims.begin() + 1, c.dims.end());
    out = Tensor::zeros(d);
    for (int b = 0; b < 3; ++b)
      for (int cc = 0; cc < 3; ++cc)
        for (int a = 0; a < 3; ++a) {
          const int e = levi_civita3(b, cc, a);
          if (!e) continue;
          for (std::size_t r = 0; r < rest; ++r)
            out.v[(b * 3 + cc) * rest + r] += double(e) * c.v[a * rest + r];
        }
  } else if (s.n3 == 2) {
    std::vector<int> d{3};
    d.insert(d.end(), c.dims.begin() + 2, c.dims.end());
    out = Tensor::zeros(d);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int cc = 0; cc < 3; ++cc) {
          const int e = levi_civita3(a, b, cc);
          if (!e) continue;
          for (std::size_t r = 0; r < rest; ++r)
            out.v[a * rest + r] += 0.5 * double(e) * c.v[(b * 3 + cc) * rest + r];
        }
  } else {
    out = c;
  }

  Eigen::MatrixXcd eps(2, 2);
  eps << 0, 1, -1, 0;
  const int n3_eff = slot_count(conjugate(u.su3));
  for (int a = 0; a < s.n2; ++a) out = apply_on_axis(out, n3_eff + a, eps);
  return out;
}

struct Slot {
  int object;  // index into the field list
  int axis;    // axis of that object's tensor
};

struct EpsilonSlots {
  int arity;
  std::vector<Slot> slots;
};

struct Layout {
  std::vector<Field> fields;
  std::vector<Shape> shapes;  // effective
  std::vector<EpsilonSlots> groups;
  bool ok = false;
  std::string problem;
};

Layout build_layout(const Term& t) {
  require_resolved_ids(t);
  Layout L;
  std::map<int, int> field_of_id;  // id -> field index, -1 for non-fields
  for (const TermObject& o : t.objects) {
    if (const auto* f = std::get_if<Field>(&o)) {
      if (f->id) field_of_id[*f->id] = static_cast<int>(L.fields.size());
      L.fields.push_back(*f);
      L.shapes.push_back(shape_of(f->su3, f->su2));
    } else if (auto id = object_id(o)) {
      field_of_id[*id] = -1;
    }
  }
  std::vector<int> used3(L.fields.size()), used2(L.fields.size());
  auto fail = [&](std::string why) {
    L.ok = false;
    L.problem = std::move(why);
    return L;
  };

  for (const ContractionEntry& e : t.contractions) {
    if (e.group == IndexGroup::Lorentz) continue;
    std::vector<int> objs;
    for (int id : e.ids) {
      const int k = field_of_id.at(id);
      if (k < 0) return fail("gauge contraction on a non-field object");
      objs.push_back(k);
    }
    EpsilonSlots g;
    if (e.group == IndexGroup::SU3) {
      g.arity = 3;
      if (objs.size() == 3) {
        for (int k : objs) {
          if (used3[k] >= L.shapes[k].n3) return fail("SU3 slot over-used");
          g.slots.push_back({k, used3[k]++});
        }
      } else if (objs.size() == 2) {
        int single = objs[0], pair = objs[1];
        if (L.shapes[single].n3 == 2) std::swap(single, pair);
        if (L.shapes[single].n3 != 1 || L.shapes[pair].n3 != 2 || used3[single] != 0 ||
            used3[pair] != 0)
          return fail("SU3 pairing needs a 3 and a 3bar");
        g.slots = {{single, 0}, {pair, 0}, {pair, 1}};
        used3[single] = 1;
        used3[pair] = 2;
      } else {
        return fail("SU3 entry must name 2 or 3 objects");
      }
    } else {
      g.arity = 2;
      if (objs.size() != 2) return fail("SU2 entry must name 2 objects");
      for (int k : objs) {
        if (used2[k] >= L.shapes[k].n2) return fail("SU2 slot over-used");
        g.slots.push_back({k, L.shapes[k].n3 + used2[k]++});
      }
    }
    L.groups.push_back(std::move(g));
  }
  for (std::size_t k = 0; k < L.fields.size(); ++k)
    if (used3[k] != L.shapes[k].n3 || used2[k] != L.shapes[k].n2)
      return fail("free gauge index on " + to_string(L.fields[k]));
  L.ok = true;
  return L;
}

struct Permutation {
  std::vector<int> p;
  int sign;
};

const std::vector<Permutation>& permutations_of(int n) {
  static const std::vector<Permutation> two{{{0, 1}, 1}, {{1, 0}, -1}};
  static const std::vector<Permutation> three{{{0, 1, 2}, 1},  {{1, 2, 0}, 1},  {{2, 0, 1}, 1},
                                              {{0, 2, 1}, -1}, {{2, 1, 0}, -1}, {{1, 0, 2}, -1}};
  return n == 2 ? two : three;
}

struct Value {
  cd sum = 0;
  double magnitude = 0;  // sum of |summand|, the natural scale
};

Value contract(const Layout& L, const std::vector<Tensor>& tensors) {
  const std::size_t nobj = L.fields.size();
  std::vector<std::vector<int>> index(nobj);
  for (std::size_t k = 0; k < nobj; ++k) index[k].assign(tensors[k].dims.size(), 0);
  std::vector<std::size_t> choice(L.groups.size(), 0);

  Value out;
  while (true) {
    int sign = 1;
    for (std::size_t g = 0; g < L.groups.size(); ++g) {
      const Permutation& perm = permutations_of(L.groups[g].arity)[choice[g]];
      sign *= perm.sign;
      for (std::size_t s = 0; s < L.groups[g].slots.size(); ++s) {
        const Slot& slot = L.groups[g].slots[s];
        index[slot.object][slot.axis] = perm.p[s];
      }
    }
    cd prod = double(sign);
    for (std::size_t k = 0; k < nobj; ++k) {
      std::size_t flat = 0;
      for (std::size_t a = 0; a < index[k].size(); ++a)
        flat = flat * tensors[k].dims[a] + static_cast<std::size_t>(index[k][a]);
      prod *= tensors[k].v[flat];
    }
    out.sum += prod;
    out.magnitude += std::abs(prod);

    std::size_t g = 0;
    for (; g < choice.size(); ++g) {
      if (++choice[g] < permutations_of(L.groups[g].arity).size()) break;
      choice[g] = 0;
    }
    if (g == choice.size()) break;
  }
  return out;
}

constexpr double kVanishing = 1e-10;

Field base_key(const Field& f) {
  Field u = underlying(f);
  u.u1_spelling.reset();
  return u;
}

struct Instance {
  std::map<Field, Tensor> bases;
};

Instance draw_instance(const Layout& L, std::mt19937_64& rng) {
  Instance inst;
  for (const Field& f : L.fields) {
    const Field key = base_key(f);
    if (!inst.bases.count(key)) inst.bases.emplace(key, random_base(key, rng));
  }
  return inst;
}

Value evaluate(const Layout& L, const Instance& inst, const GroupAction* g) {
  std::vector<Tensor> tensors;
  tensors.reserve(L.fields.size());
  for (const Field& f : L.fields) {
    const Field key = base_key(f);
    const Tensor& base = inst.bases.at(key);
    tensors.push_back(effective(g ? transform(base, key, *g) : base, key, f.daggered));
  }
  return contract(L, tensors);
}

}  // namespace

InvarianceReport analyze_invariance(const Term& t, int trials, std::uint64_t seed, double tol) {
  InvarianceReport r;
  const Layout L = build_layout(t);
  r.u1_conserved = hypercharge_sum(t).is_zero();
  r.well_formed = L.ok;
  if (!L.ok) {
    r.diagnostic = L.problem;
    return r;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  bool numeric_ok = true;
  for (int trial = 0; trial < trials; ++trial) {
    const Instance inst = draw_instance(L, rng);
    const Value before = evaluate(L, inst, nullptr);
    if (std::abs(before.sum) <= kVanishing * before.magnitude) {
      r.vanishing = true;
      r.diagnostic = "contraction vanishes identically";
      return r;
    }
    GroupAction g;
    g.su3 = random_special_unitary<double>(3, rng);
    g.su2 = random_special_unitary<double>(2, rng);
    g.theta = angle(rng);
    const Value after = evaluate(L, inst, &g);
    const double dev = std::abs(after.sum - before.sum) / std::abs(before.sum);
    r.max_deviation = std::max(r.max_deviation, dev);
    if (!(dev < tol)) numeric_ok = false;
  }
  r.invariant = numeric_ok && r.u1_conserved;
  if (!r.u1_conserved)
    r.diagnostic = "hypercharge sum " + hypercharge_sum(t).str();
  else if (!numeric_ok)
    r.diagnostic = "relative deviation " + std::to_string(r.max_deviation);
  return r;
}

bool check_invariance_numeric(const Term& t, int trials, std::uint64_t seed, double tol) {
  return analyze_invariance(t, trials, seed, tol).invariant;
}

bool is_identically_vanishing(const Term& t, std::uint64_t seed) {
  const Layout L = build_layout(t);
  if (!L.ok) return false;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 2; ++trial) {
    const Instance inst = draw_instance(L, rng);
    const Value v = evaluate(L, inst, nullptr);
    if (std::abs(v.sum) > kVanishing * v.magnitude) return false;
  }
  return true;
}

}  // namespace lgen
