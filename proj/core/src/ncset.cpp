#include "gprop/ncset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gprop {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

NCSetMap::NCSetMap(GroupPtr group, int dom, int cod, std::vector<std::vector<FiberEntry>> fibers)
    : group_(std::move(group)), dom_(dom), cod_(cod), fibers_(std::move(fibers)) {
  if (!group_) fail("labelled set map needs a group");
  if (cod_ == 0 && dom_ > 0) fail("Hom(n, 0) is empty for n > 0");
  if (static_cast<int>(fibers_.size()) != cod_) fail("fiber count must equal codomain");
  image_.assign(dom_, -1);
  for (int i = 0; i < cod_; ++i) {
    for (const auto& fe : fibers_[i]) {
      if (fe.elt < 0 || fe.elt >= dom_) fail("fiber element out of range");
      if (fe.label < 0 || fe.label >= group_->order()) fail("fiber label out of range");
      if (image_[fe.elt] != -1) fail("fibers must be disjoint");
      image_[fe.elt] = i;
    }
  }
  for (int e = 0; e < dom_; ++e)
    if (image_[e] < 0) fail("fibers must cover the domain");
}

NCSetMap NCSetMap::identity(GroupPtr g, int n) {
  std::vector<std::vector<FiberEntry>> fibers(n);
  int e = g->identity();
  for (int i = 0; i < n; ++i) fibers[i] = {{i, e}};
  return NCSetMap(std::move(g), n, n, std::move(fibers));
}

nlohmann::ordered_json NCSetMap::to_json() const {
  nlohmann::ordered_json j;
  j["cod"] = cod_;
  nlohmann::ordered_json fb = nlohmann::ordered_json::array();
  for (const auto& f : fibers_) {
    nlohmann::ordered_json one = nlohmann::ordered_json::array();
    for (const auto& fe : f) one.push_back({fe.elt + 1, group_->name(fe.label)});
    fb.push_back(one);
  }
  j["fibers"] = fb;
  return j;
}

NCSetMap NCSetMap::from_json(GroupPtr g, const nlohmann::json& j) {
  int cod = j.at("cod").get<int>();
  std::vector<std::vector<FiberEntry>> fibers;
  int dom = 0;
  for (const auto& f : j.at("fibers")) {
    std::vector<FiberEntry> one;
    for (const auto& fe : f) {
      int elt = fe.at(0).get<int>() - 1;
      int label;
      if (fe.at(1).is_string()) {
        label = g->element_by_name(fe.at(1).get<std::string>());
        if (label < 0) fail("unknown group element name");
      } else {
        label = fe.at(1).get<int>();
      }
      one.push_back({elt, label});
      ++dom;
    }
    fibers.push_back(std::move(one));
  }
  return NCSetMap(std::move(g), dom, cod, std::move(fibers));
}

std::vector<FiberEntry> label_act(const FiniteGroup& g, int a, const std::vector<FiberEntry>& s) {
  std::vector<FiberEntry> out = s;
  for (auto& fe : out) fe.label = g.mul(a, fe.label);
  return out;
}

NCSetMap ncset_compose(const NCSetMap& f2, const NCSetMap& f1) {
  if (f1.cod() != f2.dom()) fail("labelled set map boundary mismatch");
  const FiniteGroup& g = *f1.group();
  std::vector<std::vector<FiberEntry>> fibers(f2.cod());
  for (int i = 0; i < f2.cod(); ++i) {
    for (const auto& [j, alpha] : f2.fiber(i)) {
      auto part = label_act(g, alpha, f1.fiber(j));
      fibers[i].insert(fibers[i].end(), part.begin(), part.end());
    }
  }
  return NCSetMap(f1.group(), f1.dom(), f2.cod(), std::move(fibers));
}

NCSetMap ncset_tensor(const NCSetMap& a, const NCSetMap& b) {
  std::vector<std::vector<FiberEntry>> fibers(a.cod() + b.cod());
  for (int i = 0; i < a.cod(); ++i) fibers[i] = a.fiber(i);
  for (int i = 0; i < b.cod(); ++i) {
    fibers[a.cod() + i] = b.fiber(i);
    for (auto& fe : fibers[a.cod() + i]) fe.elt += a.dom();
  }
  return NCSetMap(a.group(), a.dom() + b.dom(), a.cod() + b.cod(), std::move(fibers));
}

NCSetMap ncset_symmetry(GroupPtr g, int a, int b) {
  std::vector<std::vector<FiberEntry>> fibers(a + b);
  int e = g->identity();
  for (int i = 0; i < b; ++i) fibers[i] = {{a + i, e}};
  for (int i = 0; i < a; ++i) fibers[b + i] = {{i, e}};
  return NCSetMap(std::move(g), a + b, a + b, std::move(fibers));
}

GFMap::GFMap(NCSetMap data) : data_(std::move(data)) {
  std::vector<std::vector<FiberEntry>> fibers = data_.fibers();
  for (auto& f : fibers) std::sort(f.begin(), f.end());
  data_ = NCSetMap(data_.group(), data_.dom(), data_.cod(), std::move(fibers));
}

GFMap forget_order(const NCSetMap& f) { return GFMap(f); }
GFMap gf_identity(GroupPtr g, int n) { return GFMap(NCSetMap::identity(std::move(g), n)); }

GFMap gf_compose(const GFMap& f2, const GFMap& f1) {
  return GFMap(ncset_compose(f2.data(), f1.data()));
}

GFMap gf_tensor(const GFMap& a, const GFMap& b) {
  return GFMap(ncset_tensor(a.data(), b.data()));
}

DJGMorphism to_pair(const NCSetMap& f) {
  std::vector<int> sizes(f.cod());
  for (int i = 0; i < f.cod(); ++i) sizes[i] = static_cast<int>(f.fiber(i).size());
  OrderedMap mono = OrderedMap::from_fiber_sizes(sizes);

  std::vector<int> img(f.dom());
  std::vector<int> labels(f.dom(), f.group()->identity());
  int slot = 0;
  for (int i = 0; i < f.cod(); ++i) {
    for (const auto& fe : f.fiber(i)) {
      img[fe.elt] = slot;
      labels[slot] = fe.label;
      ++slot;
    }
  }
  LabelledPermutation lp{GroupTuple(f.group(), std::move(labels)), Permutation(std::move(img)), {}};
  return DJGMorphism{std::move(lp), std::move(mono)};
}

NCSetMap from_pair(const GroupPtr& g, const DJGMorphism& d) {
  const auto& lp = std::get<LabelledPermutation>(d.elt);
  Permutation inv = lp.perm.inverse();
  std::vector<std::vector<FiberEntry>> fibers(d.mono.cod());
  int slot = 0;
  std::vector<int> sizes = d.mono.fiber_sizes();
  for (int i = 0; i < d.mono.cod(); ++i) {
    for (int r = 0; r < sizes[i]; ++r) {
      fibers[i].push_back({inv(slot), lp.labels.entries[slot]});
      ++slot;
    }
  }
  return NCSetMap(g, d.mono.dom(), d.mono.cod(), std::move(fibers));
}

std::vector<NCSetMap> enumerate_ncset(GroupPtr g, int n, int m) {
  std::vector<NCSetMap> out;
  if (m == 0) {
    if (n == 0) out.push_back(NCSetMap(g, 0, 0, {}));
    return out;
  }
  std::vector<int> func(n, 0);
  while (true) {
    // fibers in increasing element order, then all per-fiber orderings, then labels
    std::vector<std::vector<int>> fibs(m);
    for (int e = 0; e < n; ++e) fibs[func[e]].push_back(e);
    std::vector<std::vector<std::vector<int>>> orders(m);
    for (int i = 0; i < m; ++i) {
      std::vector<int> p = fibs[i];
      std::sort(p.begin(), p.end());
      do {
        orders[i].push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<size_t> pick(m, 0);
    while (true) {
      std::vector<int> labels(n, 0);
      while (true) {
        std::vector<std::vector<FiberEntry>> fibers(m);
        for (int i = 0; i < m; ++i)
          for (int e : orders[i][pick[i]]) fibers[i].push_back({e, labels[e]});
        out.push_back(NCSetMap(g, n, m, std::move(fibers)));
        int k = n - 1;
        while (k >= 0 && labels[k] == g->order() - 1) labels[k--] = 0;
        if (k < 0) break;
        ++labels[k];
      }
      int i = m - 1;
      while (i >= 0 && pick[i] + 1 == orders[i].size()) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
    int e = n - 1;
    while (e >= 0 && func[e] == m - 1) func[e--] = 0;
    if (e < 0) break;
    ++func[e];
  }
  return out;
}

std::vector<GFMap> enumerate_gf(GroupPtr g, int n, int m) {
  std::vector<GFMap> out;
  if (m == 0) {
    if (n == 0) out.push_back(GFMap(NCSetMap(g, 0, 0, {})));
    return out;
  }
  std::vector<int> func(n, 0);
  while (true) {
    std::vector<int> labels(n, 0);
    while (true) {
      std::vector<std::vector<FiberEntry>> fibers(m);
      for (int e = 0; e < n; ++e) fibers[func[e]].push_back({e, labels[e]});
      out.push_back(GFMap(NCSetMap(g, n, m, std::move(fibers))));
      int k = n - 1;
      while (k >= 0 && labels[k] == g->order() - 1) labels[k--] = 0;
      if (k < 0) break;
      ++labels[k];
    }
    int e = n - 1;
    while (e >= 0 && func[e] == m - 1) func[e--] = 0;
    if (e < 0) break;
    ++func[e];
  }
  return out;
}

NCSetMap random_ncset(GroupPtr g, std::mt19937_64& rng, int n, int m) {
  if (m == 0 && n > 0) fail("Hom(n, 0) is empty for n > 0");
  std::vector<std::vector<int>> fibs(m);
  if (m > 0) {
    std::uniform_int_distribution<int> target(0, m - 1);
    for (int e = 0; e < n; ++e) fibs[target(rng)].push_back(e);
  }
  std::uniform_int_distribution<int> label_d(0, g->order() - 1);
  std::vector<std::vector<FiberEntry>> fibers(m);
  for (int i = 0; i < m; ++i) {
    for (int k = static_cast<int>(fibs[i].size()) - 1; k > 0; --k) {
      std::uniform_int_distribution<int> d(0, k);
      std::swap(fibs[i][k], fibs[i][d(rng)]);
    }
    for (int e : fibs[i]) fibers[i].push_back({e, label_d(rng)});
  }
  return NCSetMap(std::move(g), n, m, std::move(fibers));
}

long long ncset_hom_count(int n, int m, int group_order) {
  if (m == 0) return n == 0 ? 1 : 0;
  // sum over functions n -> m of prod |fiber|!, times |G|^n
  std::vector<int> func(n, 0);
  long long total = 0;
  while (true) {
    std::vector<int> cnt(m, 0);
    for (int v : func) ++cnt[v];
    long long prod = 1;
    for (int c : cnt)
      for (int k = 2; k <= c; ++k) prod *= k;
    total += prod;
    int e = n - 1;
    while (e >= 0 && func[e] == m - 1) func[e--] = 0;
    if (e < 0) break;
    ++func[e];
  }
  long long gl = 1;
  for (int k = 0; k < n; ++k) gl *= group_order;
  return total * gl;
}

Bimorphism star_complete(const NCSetMap& horizontal, const NCSetMap& vertical, Ambient ambient) {
  if (horizontal.cod() != vertical.cod()) fail("star completion needs a common codomain");
  const GroupPtr& g = horizontal.group();
  const int msz = horizontal.dom();
  const int psz = vertical.dom();

  // Pullback elements (x, y) with equal images, numbered lexicographically.
  std::vector<std::pair<int, int>> elems;
  std::vector<std::vector<int>> index(msz, std::vector<int>(psz, -1));
  for (int x = 0; x < msz; ++x)
    for (int y = 0; y < psz; ++y)
      if (horizontal.image_of(x) == vertical.image_of(y)) {
        index[x][y] = static_cast<int>(elems.size());
        elems.push_back({x, y});
      }
  int r = static_cast<int>(elems.size());

  bool horiz_ordered = ambient == Ambient::AsAs || ambient == Ambient::H;
  bool vert_ordered = ambient == Ambient::AsAs || ambient == Ambient::V;

  // left: r -> m (vertical kind); fiber over x copies vertical's fiber data.
  std::vector<std::vector<FiberEntry>> left_fibers(msz);
  for (int x = 0; x < msz; ++x) {
    for (const auto& fe : vertical.fiber(horizontal.image_of(x)))
      left_fibers[x].push_back({index[x][fe.elt], fe.label});
    if (!vert_ordered) std::sort(left_fibers[x].begin(), left_fibers[x].end());
  }
  // top: r -> p (horizontal kind); fiber over y copies horizontal's fiber data.
  std::vector<std::vector<FiberEntry>> top_fibers(psz);
  for (int y = 0; y < psz; ++y) {
    for (const auto& fe : horizontal.fiber(vertical.image_of(y)))
      top_fibers[y].push_back({index[fe.elt][y], fe.label});
    if (!horiz_ordered) std::sort(top_fibers[y].begin(), top_fibers[y].end());
  }

  return Bimorphism{horizontal, vertical, NCSetMap(g, r, psz, std::move(top_fibers)),
                    NCSetMap(g, r, msz, std::move(left_fibers))};
}

namespace {

Ambient inner_ambient(SpanVariant v) {
  // horizontal = out-legs, vertical = in-legs
  switch (v) {
    case SpanVariant::AA: return Ambient::AsAs;
    case SpanVariant::AV: return Ambient::V;   // ordered in-legs, unordered out-legs
    case SpanVariant::VA: return Ambient::H;   // unordered in-legs, ordered out-legs
    case SpanVariant::VV: return Ambient::GG;
  }
  return Ambient::AsAs;
}

NCSetMap normalize_leg(const NCSetMap& f, bool ordered) {
  if (ordered) return f;
  return forget_order(f).data();
}

}  // namespace

NCSpan pullback_span_compose(SpanVariant variant, const NCSpan& s2, const NCSpan& s1) {
  if (s1.cod() != s2.dom()) fail("span boundary mismatch");
  Bimorphism b = star_complete(s1.out_leg, s2.in_leg, inner_ambient(variant));
  bool in_ordered = variant == SpanVariant::AA || variant == SpanVariant::AV;
  bool out_ordered = variant == SpanVariant::AA || variant == SpanVariant::VA;
  NCSetMap in_total = normalize_leg(ncset_compose(s1.in_leg, b.left), in_ordered);
  NCSetMap out_total = normalize_leg(ncset_compose(s2.out_leg, b.top), out_ordered);
  return NCSpan{std::move(in_total), std::move(out_total)};
}

std::string ncspan_class_key(SpanVariant variant, const NCSpan& s) {
  const FiniteGroup& g = *s.in_leg.group();
  bool in_ordered = variant == SpanVariant::AA || variant == SpanVariant::AV;
  bool out_ordered = variant == SpanVariant::AA || variant == SpanVariant::VA;
  int p = s.middle();

  std::vector<int> in_img(p), out_img(p), in_pos(p), out_pos(p), lam(p), mu(p);
  for (int i = 0; i < s.in_leg.cod(); ++i) {
    const auto& f = s.in_leg.fiber(i);
    for (size_t r = 0; r < f.size(); ++r) {
      in_img[f[r].elt] = i;
      in_pos[f[r].elt] = static_cast<int>(r);
      lam[f[r].elt] = f[r].label;
    }
  }
  for (int i = 0; i < s.out_leg.cod(); ++i) {
    const auto& f = s.out_leg.fiber(i);
    for (size_t r = 0; r < f.size(); ++r) {
      out_img[f[r].elt] = i;
      out_pos[f[r].elt] = static_cast<int>(r);
      mu[f[r].elt] = f[r].label;
    }
  }

  // Per middle element: identification data on ordered sides plus the
  // relabel-invariant lambda * mu^-1.
  std::vector<std::vector<int>> rows;
  for (int e = 0; e < p; ++e) {
    int c = g.mul(lam[e], g.inv(mu[e]));
    std::vector<int> row;
    row.push_back(in_img[e]);
    if (in_ordered) row.push_back(in_pos[e]);
    row.push_back(out_img[e]);
    if (out_ordered) row.push_back(out_pos[e]);
    row.push_back(c);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());

  std::ostringstream os;
  os << s.dom() << ">" << p << ">" << s.cod() << "|";
  for (const auto& row : rows) {
    for (int v : row) os << v << ",";
    os << ";";
  }
  return os.str();
}

bool ncspan_equiv(SpanVariant variant, const NCSpan& a, const NCSpan& b) {
  return ncspan_class_key(variant, a) == ncspan_class_key(variant, b);
}

}  // namespace gprop
