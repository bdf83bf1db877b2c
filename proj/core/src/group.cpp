#include "gprop/group.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace gprop {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::vector<std::string> names)
    : order_(order), table_(std::move(table)), names_(std::move(names)) {
  if (order_ <= 0) fail("group order must be positive");
  if (static_cast<int>(table_.size()) != order_ * order_)
    fail("group table must have order*order entries");
  for (int v : table_)
    if (v < 0 || v >= order_) fail("group table entry out of range");

  // Latin square
  for (int a = 0; a < order_; ++a) {
    std::vector<bool> row(order_, false), col(order_, false);
    for (int b = 0; b < order_; ++b) {
      if (row[mul(a, b)]) fail("group table row is not a permutation");
      row[mul(a, b)] = true;
      if (col[mul(b, a)]) fail("group table column is not a permutation");
      col[mul(b, a)] = true;
    }
  }

  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int a = 0; a < order_; ++a)
      if (mul(e, a) != a || mul(a, e) != a) { ok = false; break; }
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) fail("group table has no two-sided identity");

  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) { inverse_[a] = b; break; }
    if (inverse_[a] < 0) fail("group table element has no inverse");
  }

  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b)
      for (int c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("group table is not associative");

  if (names_.empty()) {
    names_.resize(order_);
    for (int a = 0; a < order_; ++a) names_[a] = "g" + std::to_string(a);
  } else if (static_cast<int>(names_.size()) != order_) {
    fail("names length must equal order");
  }
}

int FiniteGroup::element_by_name(const std::string& s) const {
  for (int a = 0; a < order_; ++a)
    if (names_[a] == s) return a;
  return -1;
}

GroupPtr FiniteGroup::trivial() { return cyclic(1); }

GroupPtr FiniteGroup::cyclic(int k) {
  std::vector<int> t(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) t[a * k + b] = (a + b) % k;
  return std::make_shared<FiniteGroup>(k, std::move(t));
}

GroupPtr FiniteGroup::klein() {
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a * 4 + b] = a ^ b;
  return std::make_shared<FiniteGroup>(4, std::move(t),
                                       std::vector<std::string>{"e", "a", "b", "ab"});
}

GroupPtr FiniteGroup::symmetric(int k) {
  if (k < 1 || k > 5) fail("symmetric group table supported for 1 <= k <= 5");
  std::vector<std::vector<int>> elems;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do {
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), q) - elems.begin());
  };
  int n = static_cast<int>(elems.size());
  std::vector<int> t(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = elems[a][elems[b][i]];
      t[a * n + b] = index_of(c);
    }
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string s = "(";
    for (int i = 0; i < k; ++i) s += std::to_string(elems[a][i] + 1);
    names[a] = s + ")";
  }
  return std::make_shared<FiniteGroup>(n, std::move(t), std::move(names));
}

GroupPtr FiniteGroup::from_json(const nlohmann::json& j) {
  if (!j.contains("order") || !j.contains("table")) fail("group JSON needs order and table");
  int order = j.at("order").get<int>();
  std::vector<int> table;
  const auto& tj = j.at("table");
  if (!tj.is_array()) fail("group table must be an array");
  if (!tj.empty() && tj.front().is_array()) {
    for (const auto& row : tj)
      for (const auto& v : row) table.push_back(v.get<int>());
  } else {
    table = tj.get<std::vector<int>>();
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  return std::make_shared<FiniteGroup>(order, std::move(table), std::move(names));
}

GroupPtr FiniteGroup::resolve(const std::string& s) {
  if (s == "trivial" || s == "c1") return trivial();
  if (s == "c2") return cyclic(2);
  if (s == "c3") return cyclic(3);
  if (s == "c4") return cyclic(4);
  if (s == "klein") return klein();
  if (s == "s3") return symmetric(3);
  if (s == "s4") return symmetric(4);
  std::ifstream in(s);
  if (!in) fail("cannot open group file: " + s);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

nlohmann::ordered_json FiniteGroup::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  std::vector<std::vector<int>> rows(order_);
  for (int a = 0; a < order_; ++a)
    rows[a].assign(table_.begin() + a * order_, table_.begin() + (a + 1) * order_);
  j["table"] = rows;
  j["names"] = names_;
  return j;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      fail("permutation images must be a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 0 || i + 1 >= n) fail("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.img_[i], p.img_[i + 1]);
  return p;
}

Permutation Permutation::reversal(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < size(); ++i) v[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Permutation::inversions() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++c;
  return c;
}

Permutation Permutation::tensor(const Permutation& other) const {
  std::vector<int> v;
  v.reserve(size() + other.size());
  for (int i = 0; i < size(); ++i) v.push_back(img_[i]);
  for (int i = 0; i < other.size(); ++i) v.push_back(other.img_[i] + size());
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) fail("permutation size mismatch");
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[i] = p(q(i));
  return Permutation(std::move(v));
}

Permutation block_permutation(const Permutation& sigma, const std::vector<int>& sizes) {
  int m = sigma.size();
  if (static_cast<int>(sizes.size()) != m) fail("block sizes length mismatch");
  Permutation si = sigma.inverse();
  std::vector<int> in_off(m, 0), out_off(m, 0);
  for (int i = 1; i < m; ++i) in_off[i] = in_off[i - 1] + sizes[i - 1];
  for (int k = 1; k < m; ++k) out_off[k] = out_off[k - 1] + sizes[si(k - 1)];
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<int> img(n);
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < sizes[i]; ++r) img[in_off[i] + r] = out_off[sigma(i)] + r;
  return Permutation(std::move(img));
}

Permutation flagged_block_permutation(const Permutation& sigma, const std::vector<int>& sizes,
                                      const FlagTuple& reverse_at_output) {
  int m = sigma.size();
  if (static_cast<int>(reverse_at_output.size()) != m) fail("flag length mismatch");
  Permutation si = sigma.inverse();
  std::vector<int> in_off(m, 0), out_off(m, 0);
  for (int i = 1; i < m; ++i) in_off[i] = in_off[i - 1] + sizes[i - 1];
  for (int k = 1; k < m; ++k) out_off[k] = out_off[k - 1] + sizes[si(k - 1)];
  int n = 0;
  for (int s : sizes) n += s;
  std::vector<int> img(n);
  for (int i = 0; i < m; ++i) {
    int k = sigma(i);
    for (int r = 0; r < sizes[i]; ++r)
      img[in_off[i] + r] = reverse_at_output[k] ? out_off[k] + sizes[i] - 1 - r : out_off[k] + r;
  }
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(Permutation(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupTuple::GroupTuple(GroupPtr g, std::vector<int> e) : group(std::move(g)), entries(std::move(e)) {
  if (!group) fail("group tuple needs a group");
  for (int v : entries)
    if (v < 0 || v >= group->order()) fail("group tuple entry out of range");
}

GroupTuple GroupTuple::identity(GroupPtr g, int n) {
  return GroupTuple(g, std::vector<int>(n, g->identity()));
}

bool GroupTuple::is_identity() const {
  for (int v : entries)
    if (v != group->identity()) return false;
  return true;
}

namespace {

void require_same_group(const GroupTuple& a, const GroupTuple& b) {
  if (!(*a.group == *b.group)) fail("group mismatch");
}

}  // namespace

GroupTuple tuple_mul(const GroupTuple& a, const GroupTuple& b) {
  require_same_group(a, b);
  if (a.size() != b.size()) fail("group tuple arity mismatch");
  std::vector<int> e(a.entries.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = a.group->mul(a.entries[i], b.entries[i]);
  return GroupTuple(a.group, std::move(e));
}

GroupTuple tuple_inv(const GroupTuple& a) {
  std::vector<int> e(a.entries.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = a.group->inv(a.entries[i]);
  return GroupTuple(a.group, std::move(e));
}

GroupTuple tuple_act(const Permutation& sigma, const GroupTuple& x) {
  if (sigma.size() != x.size()) fail("tuple_act arity mismatch");
  Permutation si = sigma.inverse();
  std::vector<int> e(x.entries.size());
  for (int i = 0; i < x.size(); ++i) e[i] = x.entries[si(i)];
  return GroupTuple(x.group, std::move(e));
}

GroupTuple skeletal_relabel(const std::vector<int>& f, const GroupTuple& x) {
  std::vector<int> e(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0 || f[i] >= x.size()) fail("skeletal_relabel map out of range");
    e[i] = x.entries[f[i]];
  }
  return GroupTuple(x.group, std::move(e));
}

GroupTuple tuple_concat(const GroupTuple& a, const GroupTuple& b) {
  require_same_group(a, b);
  std::vector<int> e = a.entries;
  e.insert(e.end(), b.entries.begin(), b.entries.end());
  return GroupTuple(a.group, std::move(e));
}

bool LabelledPermutation::is_identity() const {
  if (!labels.is_identity() || !perm.is_identity()) return false;
  if (flags)
    for (auto f : *flags)
      if (f) return false;
  return true;
}

bool LabelledPermutation::operator==(const LabelledPermutation& other) const {
  return labels == other.labels && perm == other.perm && flags == other.flags;
}

LabelledPermutation labelled_perm_identity(GroupPtr g, int n, bool with_flags) {
  LabelledPermutation p{GroupTuple::identity(std::move(g), n), Permutation::identity(n), {}};
  if (with_flags) p.flags = FlagTuple(n, 0);
  return p;
}

LabelledPermutation labelled_perm_compose(const LabelledPermutation& p,
                                          const LabelledPermutation& q) {
  if (p.size() != q.size()) fail("labelled permutation arity mismatch");
  if (p.flags.has_value() != q.flags.has_value()) fail("flag mode mismatch");
  LabelledPermutation r;
  r.labels = tuple_mul(p.labels, tuple_act(p.perm, q.labels));
  r.perm = compose(p.perm, q.perm);
  if (p.flags) {
    FlagTuple f(p.size());
    Permutation si = p.perm.inverse();
    for (int i = 0; i < p.size(); ++i) f[i] = (*p.flags)[i] ^ (*q.flags)[si(i)];
    r.flags = std::move(f);
  }
  return r;
}

LabelledPermutation labelled_perm_inverse(const LabelledPermutation& p) {
  LabelledPermutation r;
  r.perm = p.perm.inverse();
  r.labels = tuple_act(r.perm, tuple_inv(p.labels));
  if (p.flags) {
    FlagTuple f(p.size());
    for (int i = 0; i < p.size(); ++i) f[i] = (*p.flags)[p.perm(i)];
    r.flags = std::move(f);
  }
  return r;
}

LabelledPermutation labelled_perm_tensor(const LabelledPermutation& p,
                                         const LabelledPermutation& q) {
  if (p.flags.has_value() != q.flags.has_value()) fail("flag mode mismatch");
  LabelledPermutation r;
  r.labels = tuple_concat(p.labels, q.labels);
  r.perm = p.perm.tensor(q.perm);
  if (p.flags) {
    FlagTuple f = *p.flags;
    f.insert(f.end(), q.flags->begin(), q.flags->end());
    r.flags = std::move(f);
  }
  return r;
}

std::vector<GroupTuple> all_group_tuples(GroupPtr g, int n) {
  std::vector<GroupTuple> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(GroupTuple(g, cur));
    int i = n - 1;
    while (i >= 0 && cur[i] == g->order() - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<LabelledPermutation> all_labelled_perms(GroupPtr g, int n, bool with_flags) {
  std::vector<LabelledPermutation> out;
  auto perms = all_permutations(n);
  auto tuples = all_group_tuples(g, n);
  std::vector<FlagTuple> flag_sets;
  if (with_flags) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      FlagTuple f(n);
      for (int i = 0; i < n; ++i) f[i] = (mask >> i) & 1;
      flag_sets.push_back(std::move(f));
    }
  } else {
    flag_sets.push_back({});
  }
  for (const auto& perm : perms)
    for (const auto& t : tuples)
      for (const auto& f : flag_sets) {
        LabelledPermutation p{t, perm, {}};
        if (with_flags) p.flags = f;
        out.push_back(std::move(p));
      }
  return out;
}

}  // namespace gprop
