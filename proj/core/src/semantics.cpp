#include "gprop/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace gprop {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

int norm_mod(long long v, int p) {
  int r = static_cast<int>(v % p);
  return r < 0 ? r + p : r;
}

// Inverses are taken by Fermat powers, so the modulus must be prime.
void require_prime(int p) {
  if (p < 2) fail("modulus must be a prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) fail("modulus must be a prime");
}
}  // namespace

ZpMat ZpMat::identity(int p, int n) {
  ZpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

long long ZpMat::diff_entries(const ZpMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return rows_ * static_cast<long long>(cols_) + 1;
  long long d = 0;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != other.a_[i]) ++d;
  return d;
}

nlohmann::ordered_json ZpMat::to_json() const {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < rows_; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < cols_; ++c) row.push_back(at(r, c));
    rows.push_back(row);
  }
  return rows;
}

ZpMat ZpMat::from_json(int p, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) fail("matrix JSON must be a nonempty array");
  if (j.front().is_array()) {
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j.front().size());
    ZpMat m(p, rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = norm_mod(j.at(r).at(c).get<long long>(), p);
    return m;
  }
  ZpMat m(p, 1, static_cast<int>(j.size()));
  for (int c = 0; c < m.cols(); ++c) m.at(0, c) = norm_mod(j.at(c).get<long long>(), p);
  return m;
}

ZpMat matmul(const ZpMat& a, const ZpMat& b) {
  if (a.cols() != b.rows()) fail("matrix dimension mismatch");
  ZpMat c(a.p(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      int v = a.at(i, k);
      if (!v) continue;
      for (int j = 0; j < b.cols(); ++j)
        c.at(i, j) = norm_mod(c.at(i, j) + static_cast<long long>(v) * b.at(k, j), a.p());
    }
  return c;
}

ZpMat kron(const ZpMat& a, const ZpMat& b) {
  ZpMat c(a.p(), a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int v = a.at(i, j);
      if (!v) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int s = 0; s < b.cols(); ++s)
          c.at(i * b.rows() + r, j * b.cols() + s) = norm_mod(static_cast<long long>(v) * b.at(r, s), a.p());
    }
  return c;
}

nlohmann::ordered_json BimonoidModel::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["dim"] = dim;
  j["mult"] = mult.to_json();
  j["unit"] = unit.to_json();
  j["comult"] = comult.to_json();
  j["counit"] = counit.to_json();
  nlohmann::ordered_json act;
  for (size_t g = 0; g < action.size(); ++g) act[std::to_string(g)] = action[g].to_json();
  j["action"] = act;
  j["braiding"] = braiding == Braiding::Flip ? "flip" : "sign";
  j["parity"] = parity;
  j["twist"] = twist_diag;
  if (involution) j["involution"] = involution->to_json();
  return j;
}

BimonoidModel BimonoidModel::from_json(const nlohmann::json& j, GroupPtr group) {
  BimonoidModel m;
  m.p = j.at("p").get<int>();
  require_prime(m.p);
  m.dim = j.at("dim").get<int>();
  m.group = group ? std::move(group) : FiniteGroup::trivial();
  m.mult = ZpMat::from_json(m.p, j.at("mult"));
  m.comult = ZpMat::from_json(m.p, j.at("comult"));
  {
    ZpMat u = ZpMat::from_json(m.p, j.at("unit"));
    m.unit = ZpMat(m.p, m.dim, 1);
    for (int i = 0; i < m.dim; ++i) m.unit.at(i, 0) = u.rows() == 1 ? u.at(0, i) : u.at(i, 0);
  }
  m.counit = ZpMat::from_json(m.p, j.at("counit"));
  m.action.assign(m.group->order(), ZpMat::identity(m.p, m.dim));
  if (j.contains("action")) {
    for (const auto& [key, mat] : j.at("action").items()) {
      int idx = -1;
      try {
        idx = std::stoi(key);
      } catch (...) {
        idx = m.group->element_by_name(key);
      }
      if (idx < 0 || idx >= m.group->order()) fail("action key out of range: " + key);
      m.action[idx] = ZpMat::from_json(m.p, mat);
    }
  }
  m.braiding = Braiding::Flip;
  if (j.contains("braiding") && j.at("braiding").get<std::string>() == "sign")
    m.braiding = Braiding::Sign;
  m.parity.assign(m.dim, 0);
  if (j.contains("parity")) m.parity = j.at("parity").get<std::vector<int>>();
  m.twist_diag.assign(m.dim, 1);
  if (j.contains("twist")) {
    auto t = j.at("twist").get<std::vector<long long>>();
    m.twist_diag.clear();
    for (long long v : t) m.twist_diag.push_back(norm_mod(v, m.p));
  }
  if (j.contains("involution")) m.involution = ZpMat::from_json(m.p, j.at("involution"));
  if (m.mult.rows() != m.dim || m.mult.cols() != m.dim * m.dim) fail("mult must be d x d^2");
  if (m.comult.rows() != m.dim * m.dim || m.comult.cols() != m.dim) fail("comult must be d^2 x d");
  if (m.counit.rows() != 1 || m.counit.cols() != m.dim) fail("counit must be 1 x d");
  if (static_cast<int>(m.parity.size()) != m.dim) fail("parity length must be d");
  if (static_cast<int>(m.twist_diag.size()) != m.dim) fail("twist diagonal length must be d");
  return m;
}

BimonoidModel group_algebra_model(int p, const GroupPtr& H, const GroupPtr& G,
                                  const std::vector<std::vector<int>>& action_on_H) {
  require_prime(p);
  const int d = H->order();
  if (static_cast<int>(action_on_H.size()) != G->order())
    fail("need one automorphism per group element");
  for (int g = 0; g < G->order(); ++g) {
    const auto& a = action_on_H[g];
    if (static_cast<int>(a.size()) != d) fail("automorphism table has wrong size");
    std::vector<bool> seen(d, false);
    for (int x : a) {
      if (x < 0 || x >= d || seen[x]) fail("automorphism is not a bijection");
      seen[x] = true;
    }
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        if (a[H->mul(x, y)] != H->mul(a[x], a[y])) fail("table entry is not an automorphism");
  }
  for (int x = 0; x < d; ++x)
    if (action_on_H[G->identity()][x] != x) fail("identity must act trivially");
  for (int g = 0; g < G->order(); ++g)
    for (int h = 0; h < G->order(); ++h)
      for (int x = 0; x < d; ++x)
        if (action_on_H[G->mul(g, h)][x] != action_on_H[g][action_on_H[h][x]])
          fail("automorphism assignment is not a homomorphism");

  BimonoidModel m;
  m.p = p;
  m.dim = d;
  m.group = G;
  m.mult = ZpMat(p, d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) m.mult.at(H->mul(a, b), a * d + b) = 1;
  m.unit = ZpMat(p, d, 1);
  m.unit.at(H->identity(), 0) = 1;
  m.comult = ZpMat(p, d * d, d);
  for (int a = 0; a < d; ++a) m.comult.at(a * d + a, a) = 1;
  m.counit = ZpMat(p, 1, d);
  for (int a = 0; a < d; ++a) m.counit.at(0, a) = 1;
  for (int g = 0; g < G->order(); ++g) {
    ZpMat act(p, d, d);
    for (int x = 0; x < d; ++x) act.at(action_on_H[g][x], x) = 1;
    m.action.push_back(std::move(act));
  }
  m.braiding = BimonoidModel::Braiding::Flip;
  m.parity.assign(d, 0);
  m.twist_diag.assign(d, 1);
  ZpMat inv(p, d, d);
  for (int x = 0; x < d; ++x) inv.at(H->inv(x), x) = 1;
  m.involution = std::move(inv);
  return m;
}

std::vector<std::vector<int>> conjugation_action(const FiniteGroup& H, const std::vector<int>& hs) {
  std::vector<std::vector<int>> out;
  for (int h : hs) {
    std::vector<int> row(H.order());
    for (int x = 0; x < H.order(); ++x) row[x] = H.mul(H.mul(h, x), H.inv(h));
    out.push_back(std::move(row));
  }
  return out;
}

BimonoidModel odd_generator_model(int p) {
  require_prime(p);
  BimonoidModel m;
  m.p = p;
  m.dim = 2;
  m.group = FiniteGroup::trivial();
  m.mult = ZpMat(p, 2, 4);
  m.mult.at(0, 0) = 1;  // 1*1 = 1
  m.mult.at(1, 1) = 1;  // 1*x = x
  m.mult.at(1, 2) = 1;  // x*1 = x
  // x*x = 0
  m.unit = ZpMat(p, 2, 1);
  m.unit.at(0, 0) = 1;
  m.comult = ZpMat(p, 4, 2);
  m.comult.at(0, 0) = 1;  // d(1) = 1(x)1
  m.comult.at(1, 1) = 1;  // d(x) = 1(x)x + x(x)1
  m.comult.at(2, 1) = 1;
  m.counit = ZpMat(p, 1, 2);
  m.counit.at(0, 0) = 1;
  m.action.push_back(ZpMat::identity(p, 2));
  m.braiding = BimonoidModel::Braiding::Sign;
  m.parity = {0, 1};
  m.twist_diag = {1, p - 1};
  return m;
}

// ---------------------------------------------------------------------------
// Sparse column pushforward

namespace {

struct State {
  int p;
  int d;
  int strands;
  std::vector<std::pair<std::uint64_t, int>> items;  // sorted by index

  void combine() {
    std::sort(items.begin(), items.end());
    size_t w = 0;
    for (size_t r = 0; r < items.size(); ++r) {
      if (w > 0 && items[w - 1].first == items[r].first) {
        items[w - 1].second = norm_mod(items[w - 1].second + items[r].second, p);
      } else {
        items[w++] = items[r];
      }
    }
    items.resize(w);
    items.erase(std::remove_if(items.begin(), items.end(),
                               [](const auto& it) { return it.second == 0; }),
                items.end());
  }
};

std::uint64_t upow(int d, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= static_cast<unsigned>(d);
  return r;
}

class Evaluator {
 public:
  explicit Evaluator(const BimonoidModel& m) : m_(m) {}

  // One-strand matrix op at position t (column action of a d x d matrix).
  void one_at(State& s, int t, const ZpMat& mat) const {
    std::uint64_t place = upow(m_.dim, s.strands - 1 - t);
    std::vector<std::pair<std::uint64_t, int>> out;
    for (const auto& [idx, c] : s.items) {
      int x = static_cast<int>((idx / place) % static_cast<unsigned>(m_.dim));
      std::uint64_t base = idx - static_cast<std::uint64_t>(x) * place;
      for (int z = 0; z < m_.dim; ++z) {
        int v = mat.at(z, x);
        if (v) out.push_back({base + static_cast<std::uint64_t>(z) * place, norm_mod(static_cast<long long>(v) * c, s.p)});
      }
    }
    s.items = std::move(out);
    s.combine();
  }

  void mult_at(State& s, int t) const {
    const int d = m_.dim;
    std::uint64_t tail_place = upow(d, s.strands - 2 - t);
    std::vector<std::pair<std::uint64_t, int>> out;
    for (const auto& [idx, c] : s.items) {
      std::uint64_t tail = idx % tail_place;
      std::uint64_t heads = idx / tail_place;
      int y = static_cast<int>(heads % d);
      heads /= d;
      int x = static_cast<int>(heads % d);
      std::uint64_t head = heads / d;
      for (int z = 0; z < d; ++z) {
        int v = m_.mult.at(z, x * d + y);
        if (v)
          out.push_back({(head * d + static_cast<unsigned>(z)) * tail_place + tail,
                         norm_mod(static_cast<long long>(v) * c, s.p)});
      }
    }
    s.items = std::move(out);
    --s.strands;
    s.combine();
  }

  void unit_at(State& s, int t) const {
    const int d = m_.dim;
    std::uint64_t tail_place = upow(d, s.strands - t);
    std::vector<std::pair<std::uint64_t, int>> out;
    for (const auto& [idx, c] : s.items) {
      std::uint64_t tail = idx % tail_place;
      std::uint64_t head = idx / tail_place;
      for (int z = 0; z < d; ++z) {
        int v = m_.unit.at(z, 0);
        if (v)
          out.push_back({(head * d + static_cast<unsigned>(z)) * tail_place + tail,
                         norm_mod(static_cast<long long>(v) * c, s.p)});
      }
    }
    s.items = std::move(out);
    ++s.strands;
    s.combine();
  }

  void comult_at(State& s, int t) const {
    const int d = m_.dim;
    std::uint64_t tail_place = upow(d, s.strands - 1 - t);
    std::vector<std::pair<std::uint64_t, int>> out;
    for (const auto& [idx, c] : s.items) {
      std::uint64_t tail = idx % tail_place;
      std::uint64_t heads = idx / tail_place;
      int x = static_cast<int>(heads % d);
      std::uint64_t head = heads / d;
      for (int r = 0; r < d * d; ++r) {
        int v = m_.comult.at(r, x);
        if (v)
          out.push_back({((head * d + static_cast<unsigned>(r / d)) * d + static_cast<unsigned>(r % d)) * tail_place + tail,
                         norm_mod(static_cast<long long>(v) * c, s.p)});
      }
    }
    s.items = std::move(out);
    ++s.strands;
    s.combine();
  }

  void counit_at(State& s, int t) const {
    const int d = m_.dim;
    std::uint64_t tail_place = upow(d, s.strands - 1 - t);
    std::vector<std::pair<std::uint64_t, int>> out;
    for (const auto& [idx, c] : s.items) {
      std::uint64_t tail = idx % tail_place;
      std::uint64_t heads = idx / tail_place;
      int x = static_cast<int>(heads % d);
      std::uint64_t head = heads / d;
      int v = m_.counit.at(0, x);
      if (v) out.push_back({head * tail_place + tail, norm_mod(static_cast<long long>(v) * c, s.p)});
    }
    s.items = std::move(out);
    --s.strands;
    s.combine();
  }

  int braid_sign(int px, int py) const {
    if (m_.braiding == BimonoidModel::Braiding::Flip) return 1;
    return (px & 1) && (py & 1) ? -1 : 1;
  }

  void flip_at(State& s, int t) const {
    const int d = m_.dim;
    std::uint64_t place_y = upow(d, s.strands - 2 - t);
    std::uint64_t place_x = place_y * static_cast<unsigned>(d);
    for (auto& [idx, c] : s.items) {
      int x = static_cast<int>((idx / place_x) % static_cast<unsigned>(d));
      int y = static_cast<int>((idx / place_y) % static_cast<unsigned>(d));
      idx += (static_cast<std::uint64_t>(y) - x) * place_x + (static_cast<std::uint64_t>(x) - y) * place_y;
      c = norm_mod(static_cast<long long>(c) * braid_sign(m_.parity[x], m_.parity[y]), s.p);
    }
    s.combine();
  }

  void perm_apply(State& s, const Permutation& sigma) const {
    const int d = m_.dim;
    const int k = s.strands;
    for (auto& [idx, c] : s.items) {
      std::vector<int> digits(k);
      std::uint64_t v = idx;
      for (int j = k - 1; j >= 0; --j) {
        digits[j] = static_cast<int>(v % d);
        v /= d;
      }
      long long sign = 1;
      if (m_.braiding == BimonoidModel::Braiding::Sign) {
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if (sigma(i) > sigma(j) && (m_.parity[digits[i]] & 1) && (m_.parity[digits[j]] & 1))
              sign = -sign;
      }
      std::vector<int> nd(k);
      for (int j = 0; j < k; ++j) nd[sigma(j)] = digits[j];
      std::uint64_t nidx = 0;
      for (int j = 0; j < k; ++j) nidx = nidx * d + static_cast<unsigned>(nd[j]);
      idx = nidx;
      c = norm_mod(c * sign, s.p);
    }
    s.combine();
  }

  void twist_at(State& s, int t, int count) const {
    if (count == 0) return;
    const int d = m_.dim;
    ZpMat tw(m_.p, d, d);
    for (int x = 0; x < d; ++x) {
      int v = m_.twist_diag[x];
      if (count < 0) {
        // unit diagonal entries only; +-1 are self-inverse, otherwise invert by power
        int inv = 1;
        for (int e = 0; e < m_.p - 2; ++e) inv = norm_mod(static_cast<long long>(inv) * v, m_.p);
        v = inv;
      }
      int acc = 1;
      for (int e = 0; e < std::abs(count); ++e) acc = norm_mod(static_cast<long long>(acc) * v, m_.p);
      tw.at(x, x) = acc;
    }
    one_at(s, t, tw);
  }

  void run_mono(State& s, const OrderedMap& f) const {
    std::vector<int> sizes = f.fiber_sizes();
    std::vector<int> offsets(f.cod(), 0);
    for (int i = 1; i < f.cod(); ++i) offsets[i] = offsets[i - 1] + sizes[i - 1];
    for (int i = f.cod() - 1; i >= 0; --i) {
      if (sizes[i] == 0) {
        unit_at(s, offsets[i]);
      } else {
        for (int k = 0; k < sizes[i] - 1; ++k) mult_at(s, offsets[i]);
      }
    }
  }

  void run_mono_op(State& s, const OrderedMap& f) const {
    std::vector<int> sizes = f.fiber_sizes();
    for (int i = f.cod() - 1; i >= 0; --i) {
      if (sizes[i] == 0) {
        counit_at(s, i);
      } else {
        for (int k = 0; k < sizes[i] - 1; ++k) comult_at(s, i);
      }
    }
  }

  void require_labels_covered(const GroupTuple& labels) const {
    for (int v : labels.entries)
      if (v < 0 || v >= static_cast<int>(m_.action.size()))
        fail("model action does not cover the element's label group");
  }

  void run_element(State& s, const Element& e) const {
    std::visit([&](const auto& x) { require_labels_covered(x.labels); }, e);
    if (const auto* lp = std::get_if<LabelledPermutation>(&e)) {
      perm_apply(s, lp->perm);
      if (lp->flags) {
        if (!m_.involution) fail("model has no involution for hyperoctahedral evaluation");
        for (int t = 0; t < lp->size(); ++t)
          if ((*lp->flags)[t]) one_at(s, t, *m_.involution);
      }
      for (int t = 0; t < lp->size(); ++t)
        if (lp->labels.entries[t] != lp->labels.group->identity())
          one_at(s, t, m_.action[lp->labels.entries[t]]);
      return;
    }
    const auto& lb = std::get<LabelledBraid>(e);
    const auto& letters = lb.braid.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) flip_at(s, std::abs(*it) - 1);
    if (lb.twists)
      for (int t = 0; t < lb.size(); ++t) twist_at(s, t, (*lb.twists)[t]);
    for (int t = 0; t < lb.size(); ++t)
      if (lb.labels.entries[t] != lb.labels.group->identity())
        one_at(s, t, m_.action[lb.labels.entries[t]]);
  }

  void run_ncset(State& s, const NCSetMap& f) const {
    std::vector<int> img(f.dom());
    std::vector<int> labels_at_slot(f.dom(), -1);
    std::vector<int> sizes(f.cod());
    int slot = 0;
    for (int i = 0; i < f.cod(); ++i) {
      sizes[i] = static_cast<int>(f.fiber(i).size());
      for (const auto& fe : f.fiber(i)) {
        img[fe.elt] = slot;
        labels_at_slot[slot] = fe.label;
        ++slot;
      }
    }
    if (f.dom() > 0) perm_apply(s, Permutation(std::move(img)));
    for (int t = 0; t < f.dom(); ++t)
      if (labels_at_slot[t] != f.group()->identity()) one_at(s, t, m_.action[labels_at_slot[t]]);
    run_mono(s, OrderedMap::from_fiber_sizes(sizes));
  }

  ZpMat columns(int dom_strands, int cod_strands, const std::function<void(State&)>& prog) const {
    std::uint64_t dcols = upow(m_.dim, dom_strands);
    std::uint64_t drows = upow(m_.dim, cod_strands);
    ZpMat out(m_.p, static_cast<int>(drows), static_cast<int>(dcols));
    for (std::uint64_t col = 0; col < dcols; ++col) {
      State s{m_.p, m_.dim, dom_strands, {{col, 1}}};
      prog(s);
      if (s.strands != cod_strands) throw std::logic_error("evaluation strand count mismatch");
      for (const auto& [idx, c] : s.items) out.at(static_cast<int>(idx), static_cast<int>(col)) = c;
    }
    return out;
  }

 private:
  const BimonoidModel& m_;
};

}  // namespace

ZpMat eval_mono(const BimonoidModel& m, const OrderedMap& f) {
  Evaluator ev(m);
  return ev.columns(f.dom(), f.cod(), [&](State& s) { ev.run_mono(s, f); });
}

ZpMat eval_mono_op(const BimonoidModel& m, const OrderedMap& f) {
  Evaluator ev(m);
  return ev.columns(f.cod(), f.dom(), [&](State& s) { ev.run_mono_op(s, f); });
}

ZpMat eval_element(const BimonoidModel& m, const Element& e) {
  Evaluator ev(m);
  int n = element_size(e);
  return ev.columns(n, n, [&](State& s) { ev.run_element(s, e); });
}

ZpMat eval_djg(const BimonoidModel& m, const DJGMorphism& d) {
  Evaluator ev(m);
  return ev.columns(d.dom(), d.cod(), [&](State& s) {
    ev.run_element(s, d.elt);
    ev.run_mono(s, d.mono);
  });
}

ZpMat eval_djg_op(const BimonoidModel& m, const CrossedFamily& fam, const DJGMorphism& d) {
  Evaluator ev(m);
  Element inv = fam.inverse(d.elt);
  return ev.columns(d.cod(), d.dom(), [&](State& s) {
    ev.run_mono_op(s, d.mono);
    ev.run_element(s, inv);
  });
}

ZpMat eval_composite(const BimonoidModel& m, const CompositeMorphism& t) {
  Evaluator ev(m);
  return ev.columns(t.dom(), t.cod(), [&](State& s) {
    ev.run_mono_op(s, t.in_mono);
    ev.run_element(s, t.elt);
    ev.run_mono(s, t.out_mono);
  });
}

ZpMat eval_span_value(const BimonoidModel& m, const CrossedFamily& fam, const SpanMorphism& sp) {
  Evaluator ev(m);
  Element inv = fam.inverse(sp.in_leg.elt);
  return ev.columns(sp.dom(), sp.cod(), [&](State& s) {
    ev.run_mono_op(s, sp.in_leg.mono);
    ev.run_element(s, inv);
    ev.run_element(s, sp.out_leg.elt);
    ev.run_mono(s, sp.out_leg.mono);
  });
}

ZpMat eval_cospan_value(const BimonoidModel& m, const CrossedFamily& fam, const DJGMorphism& alpha,
                        const DJGMorphism& beta) {
  Evaluator ev(m);
  Element inv = fam.inverse(beta.elt);
  return ev.columns(alpha.dom(), beta.dom(), [&](State& s) {
    ev.run_element(s, alpha.elt);
    ev.run_mono(s, alpha.mono);
    ev.run_mono_op(s, beta.mono);
    ev.run_element(s, inv);
  });
}

ZpMat eval_ncset(const BimonoidModel& m, const NCSetMap& f) {
  Evaluator ev(m);
  return ev.columns(f.dom(), f.cod(), [&](State& s) { ev.run_ncset(s, f); });
}

ZpMat eval_gf(const BimonoidModel& m, const GFMap& f) { return eval_ncset(m, f.data()); }

// ---------------------------------------------------------------------------
// Model verification

namespace {

ZpMat braiding_matrix(const BimonoidModel& m) {
  const int d = m.dim;
  ZpMat c(m.p, d * d, d * d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      int sign = 1;
      if (m.braiding == BimonoidModel::Braiding::Sign && (m.parity[x] & 1) && (m.parity[y] & 1))
        sign = m.p - 1;
      c.at(y * d + x, x * d + y) = sign;
    }
  return c;
}

ZpMat twist_matrix(const BimonoidModel& m) {
  ZpMat t(m.p, m.dim, m.dim);
  for (int x = 0; x < m.dim; ++x) t.at(x, x) = m.twist_diag[x];
  return t;
}

}  // namespace

CheckReport verify_model(const BimonoidModel& m) {
  CheckReport rep;
  rep.name = "bimonoid model axioms";
  const int d = m.dim;
  ZpMat id1 = ZpMat::identity(m.p, d);
  ZpMat c = braiding_matrix(m);

  auto eq = [&](const ZpMat& a, const ZpMat& b, const std::string& what) {
    rep.note(a == b, what);
  };

  eq(matmul(m.mult, kron(m.mult, id1)), matmul(m.mult, kron(id1, m.mult)), "associativity");
  eq(matmul(m.mult, kron(m.unit, id1)), id1, "left unit");
  eq(matmul(m.mult, kron(id1, m.unit)), id1, "right unit");
  eq(matmul(kron(m.comult, id1), m.comult), matmul(kron(id1, m.comult), m.comult), "coassociativity");
  eq(matmul(kron(m.counit, id1), m.comult), id1, "left counit");
  eq(matmul(kron(id1, m.counit), m.comult), id1, "right counit");
  eq(matmul(m.counit, m.unit), ZpMat::identity(m.p, 1), "counit of unit");
  eq(matmul(m.comult, m.unit), kron(m.unit, m.unit), "comultiplication of unit");
  eq(matmul(m.counit, m.mult), kron(m.counit, m.counit), "counit of multiplication");
  eq(matmul(m.comult, m.mult),
     matmul(kron(m.mult, m.mult), matmul(kron(id1, kron(c, id1)), kron(m.comult, m.comult))),
     "bimonoid compatibility");
  eq(matmul(c, c), ZpMat::identity(m.p, d * d), "braiding squares to identity");
  // braiding naturality for the product: c (mu (x) id) = (id (x) mu) shuffle
  eq(matmul(c, kron(m.mult, id1)),
     matmul(kron(id1, m.mult), matmul(kron(c, id1), kron(id1, c))), "braiding naturality");

  if (static_cast<int>(m.action.size()) != m.group->order()) {
    rep.note(false, "action table size");
    return rep;
  }
  eq(m.action[m.group->identity()], id1, "identity acts trivially");
  for (int g = 0; g < m.group->order(); ++g) {
    for (int h = 0; h < m.group->order(); ++h)
      eq(matmul(m.action[g], m.action[h]), m.action[m.group->mul(g, h)], "action homomorphism");
    eq(matmul(m.action[g], m.mult), matmul(m.mult, kron(m.action[g], m.action[g])),
       "action respects multiplication");
    eq(matmul(m.comult, m.action[g]), matmul(kron(m.action[g], m.action[g]), m.comult),
       "action respects comultiplication");
    eq(matmul(m.action[g], m.unit), m.unit, "action fixes unit");
    eq(matmul(m.counit, m.action[g]), m.counit, "action fixes counit");
  }

  ZpMat th = twist_matrix(m);
  for (int x = 0; x < d; ++x) rep.note(m.twist_diag[x] != 0, "twist invertible");
  eq(matmul(th, m.mult), matmul(m.mult, kron(th, th)), "twist respects multiplication");
  eq(matmul(m.comult, th), matmul(kron(th, th), m.comult), "twist respects comultiplication");
  eq(matmul(th, m.unit), m.unit, "twist fixes unit");
  eq(matmul(m.counit, th), m.counit, "twist fixes counit");
  for (int g = 0; g < m.group->order(); ++g)
    eq(matmul(th, m.action[g]), matmul(m.action[g], th), "twist commutes with action");

  if (m.involution) {
    const ZpMat& io = *m.involution;
    eq(matmul(io, io), id1, "involution squares to identity");
    eq(matmul(io, m.mult), matmul(m.mult, matmul(kron(io, io), c)), "involution anti-automorphism");
    eq(matmul(io, m.unit), m.unit, "involution fixes unit");
    eq(matmul(m.counit, io), m.counit, "involution fixes counit");
    eq(matmul(m.comult, io), matmul(c, matmul(kron(io, io), m.comult)),
       "involution anti-coautomorphism");
    for (int g = 0; g < m.group->order(); ++g)
      eq(matmul(io, m.action[g]), matmul(m.action[g], io), "involution commutes with action");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Sampled functoriality / soundness

namespace {

OrderedMap random_mono(std::mt19937_64& rng, int n, int m) {
  auto all = enumerate_mono(n, m);
  std::uniform_int_distribution<size_t> d(0, all.size() - 1);
  return all[d(rng)];
}

DJGMorphism sample_djg(const CrossedFamily& fam, std::mt19937_64& rng, int n, int m) {
  return DJGMorphism{fam.sample(rng, n, 5), random_mono(rng, n, m)};
}

SpanMorphism sample_span(const CrossedFamily& fam, std::mt19937_64& rng, int mid, int n, int m) {
  return SpanMorphism{DJGMorphism{fam.sample(rng, mid, 4), random_mono(rng, mid, n)},
                      DJGMorphism{fam.sample(rng, mid, 4), random_mono(rng, mid, m)}};
}

}  // namespace

EvalReport check_functoriality(const BimonoidModel& model, const CrossedFamily& fam,
                               EvalCategory cat, int samples, int max_arity, unsigned seed) {
  EvalReport rep;
  rep.name = "functoriality";
  std::mt19937_64 rng(seed);
  SpanContext ctx(fam);
  std::uniform_int_distribution<int> pos(1, max_arity);
  std::uniform_int_distribution<int> mid_d(0, max_arity);
  // Tensor checks double the boundary arities; cap them so the dense
  // Kronecker products stay small.
  int tcap = max_arity;
  while (tcap > 1) {
    double total = 1;
    for (int k = 0; k < 4 * tcap; ++k) total *= model.dim;
    if (total <= 4e6) break;
    --tcap;
  }
  std::uniform_int_distribution<int> tpos(1, tcap);
  std::uniform_int_distribution<int> tmid(0, tcap);

  for (int s = 0; s < samples; ++s) {
    int n = pos(rng), m = pos(rng), l = pos(rng);
    switch (cat) {
      case EvalCategory::DPG: {
        DJGMorphism f = sample_djg(fam, rng, n, m);
        DJGMorphism g = sample_djg(fam, rng, m, l);
        ZpMat lhs = eval_djg(model, ctx.compose_djg(g, f));
        ZpMat rhs = matmul(eval_djg(model, g), eval_djg(model, f));
        rep.note("composition in pairs category", lhs.diff_entries(rhs));
        DJGMorphism tf = sample_djg(fam, rng, tpos(rng), tpos(rng));
        DJGMorphism th = sample_djg(fam, rng, tpos(rng), tpos(rng));
        ZpMat tl = eval_djg(model, ctx.tensor_djg(tf, th));
        ZpMat tr = kron(eval_djg(model, tf), eval_djg(model, th));
        rep.note("tensor in pairs category", tl.diff_entries(tr));
        break;
      }
      case EvalCategory::Spans: {
        SpanMorphism f = sample_span(fam, rng, mid_d(rng), n, m);
        SpanMorphism g = sample_span(fam, rng, mid_d(rng), m, l);
        ZpMat lhs = eval_composite(model, ctx.span_compose(g, f));
        ZpMat rhs = matmul(eval_composite(model, ctx.canonicalize(g)),
                           eval_composite(model, ctx.canonicalize(f)));
        rep.note("composition of spans", lhs.diff_entries(rhs));
        SpanMorphism tf = sample_span(fam, rng, tmid(rng), tpos(rng), tpos(rng));
        SpanMorphism th = sample_span(fam, rng, tmid(rng), tpos(rng), tpos(rng));
        ZpMat tl = eval_composite(model, ctx.canonicalize(ctx.span_tensor(tf, th)));
        ZpMat tr = kron(eval_composite(model, ctx.canonicalize(tf)),
                        eval_composite(model, ctx.canonicalize(th)));
        rep.note("tensor of spans", tl.diff_entries(tr));
        break;
      }
      case EvalCategory::NCSets: {
        NCSetMap f = random_ncset(model.group, rng, n, m);
        NCSetMap g = random_ncset(model.group, rng, m, l);
        ZpMat lhs = eval_ncset(model, ncset_compose(g, f));
        ZpMat rhs = matmul(eval_ncset(model, g), eval_ncset(model, f));
        rep.note("composition of labelled set maps", lhs.diff_entries(rhs));
        NCSetMap tf = random_ncset(model.group, rng, tpos(rng), tpos(rng));
        NCSetMap th = random_ncset(model.group, rng, tpos(rng), tpos(rng));
        rep.note("tensor of labelled set maps",
                 eval_ncset(model, ncset_tensor(tf, th))
                     .diff_entries(kron(eval_ncset(model, tf), eval_ncset(model, th))));
        break;
      }
      case EvalCategory::GFCat: {
        GFMap f = forget_order(random_ncset(model.group, rng, n, m));
        GFMap g = forget_order(random_ncset(model.group, rng, m, l));
        ZpMat lhs = eval_gf(model, gf_compose(g, f));
        ZpMat rhs = matmul(eval_gf(model, g), eval_gf(model, f));
        rep.note("composition of unordered labelled set maps", lhs.diff_entries(rhs));
        break;
      }
    }
  }
  return rep;
}

EvalReport check_rewrite_soundness(const BimonoidModel& model, const CrossedFamily& fam,
                                   int samples, unsigned seed) {
  EvalReport rep;
  rep.name = "rewrite soundness";
  std::mt19937_64 rng(seed);
  SpanContext ctx(fam);
  std::uniform_int_distribution<int> mid_d(0, 3);
  std::uniform_int_distribution<int> cod_d(1, 3);

  auto check_cospan = [&](const DJGMorphism& alpha, const DJGMorphism& beta, const std::string& what) {
    ZpMat lhs = eval_cospan_value(model, fam, alpha, beta);
    SpanMorphism span = ctx.cospan_to_span(alpha, beta);
    ZpMat rhs = eval_span_value(model, fam, span);
    rep.note(what, lhs.diff_entries(rhs));
  };

  // the four generator rule shapes
  check_cospan(ctx.djg_from_mono(OrderedMap::mult()), ctx.djg_from_mono(OrderedMap::mult()),
               "rule (m,m)");
  check_cospan(ctx.djg_from_mono(OrderedMap::unit()), ctx.djg_from_mono(OrderedMap::unit()),
               "rule (u,u)");
  check_cospan(ctx.djg_from_mono(OrderedMap::mult()), ctx.djg_from_mono(OrderedMap::unit()),
               "rule (m,u)");
  check_cospan(ctx.djg_from_mono(OrderedMap::unit()), ctx.djg_from_mono(OrderedMap::mult()),
               "rule (u,m)");
  for (int s = 0; s < 8; ++s) {
    int n = cod_d(rng);
    check_cospan(ctx.djg_from_element(fam.sample(rng, n, 4)),
                 ctx.djg_from_element(fam.sample(rng, n, 4)), "rule (g,h)");
  }
  for (int s = 0; s < samples; ++s) {
    int m = cod_d(rng), p1 = mid_d(rng), p2 = mid_d(rng);
    check_cospan(sample_djg(fam, rng, p1, m), sample_djg(fam, rng, p2, m), "sampled cospan");
  }
  return rep;
}

}  // namespace gprop
