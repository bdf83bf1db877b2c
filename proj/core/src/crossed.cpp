#include "gprop/crossed.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gprop {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Symmetric: return "symmetric";
    case Family::Hyperoctahedral: return "hyperoctahedral";
    case Family::Braid: return "braid";
    case Family::Ribbon: return "ribbon";
  }
  return "?";
}

Family family_from_name(const std::string& s) {
  if (s == "symmetric") return Family::Symmetric;
  if (s == "hyperoctahedral") return Family::Hyperoctahedral;
  if (s == "braid") return Family::Braid;
  if (s == "ribbon") return Family::Ribbon;
  fail("unknown family: " + s);
}

int element_size(const Element& e) {
  return std::visit([](const auto& x) { return x.size(); }, e);
}

Family element_family(const Element& e) {
  if (const auto* p = std::get_if<LabelledPermutation>(&e))
    return p->flags ? Family::Hyperoctahedral : Family::Symmetric;
  const auto& b = std::get<LabelledBraid>(e);
  return b.twists ? Family::Ribbon : Family::Braid;
}

void CheckReport::merge(const CheckReport& other) {
  checked += other.checked;
  for (const auto& f : other.failures)
    if (failures.size() < 32) failures.push_back(f);
}

Element CrossedFamily::identity(int n) const {
  if (braid_like()) return labelled_braid_identity(group_, n, has_twists());
  return labelled_perm_identity(group_, n, has_flags());
}

void CrossedFamily::require_element(const Element& e) const {
  if (element_family(e) != tag_) fail("element does not match family " + family_name(tag_));
  const GroupPtr& g = std::visit([](const auto& x) -> const GroupPtr& { return x.labels.group; }, e);
  if (!g || !(*g == *group_)) fail("element label group mismatch");
}

Element CrossedFamily::compose(const Element& a, const Element& b) const {
  require_element(a);
  require_element(b);
  if (braid_like())
    return labelled_braid_compose(std::get<LabelledBraid>(a), std::get<LabelledBraid>(b));
  return labelled_perm_compose(std::get<LabelledPermutation>(a), std::get<LabelledPermutation>(b));
}

Element CrossedFamily::inverse(const Element& e) const {
  require_element(e);
  if (braid_like()) return labelled_braid_inverse(std::get<LabelledBraid>(e));
  return labelled_perm_inverse(std::get<LabelledPermutation>(e));
}

Element CrossedFamily::tensor(const Element& a, const Element& b) const {
  if (braid_like())
    return labelled_braid_tensor(std::get<LabelledBraid>(a), std::get<LabelledBraid>(b));
  return labelled_perm_tensor(std::get<LabelledPermutation>(a), std::get<LabelledPermutation>(b));
}

Permutation CrossedFamily::underlying_permutation(const Element& e) const {
  if (braid_like()) return std::get<LabelledBraid>(e).braid.underlying_permutation();
  return std::get<LabelledPermutation>(e).perm;
}

bool CrossedFamily::equal(const Element& a, const Element& b) const {
  if (braid_like())
    return labelled_braid_equal(std::get<LabelledBraid>(a), std::get<LabelledBraid>(b));
  return std::get<LabelledPermutation>(a) == std::get<LabelledPermutation>(b);
}

Element CrossedFamily::normalize(const Element& e) const {
  if (!braid_like()) return e;
  LabelledBraid b = std::get<LabelledBraid>(e);
  b.braid = braid_normal_form(b.braid).word();
  return b;
}

bool CrossedFamily::is_identity(const Element& e) const {
  if (braid_like()) {
    const auto& b = std::get<LabelledBraid>(e);
    if (!b.labels.is_identity()) return false;
    if (b.twists)
      for (int t : *b.twists)
        if (t) return false;
    return braid_normal_form(b.braid).is_identity();
  }
  return std::get<LabelledPermutation>(e).is_identity();
}

Element CrossedFamily::from_permutation(const Permutation& p) const {
  int n = p.size();
  if (braid_like()) {
    LabelledBraid b = std::get<LabelledBraid>(identity(n));
    b.braid = BraidWord::permutation_braid(p);
    return b;
  }
  LabelledPermutation lp = std::get<LabelledPermutation>(identity(n));
  lp.perm = p;
  return lp;
}

Element CrossedFamily::crossing(int n, int i) const {
  if (i < 1 || i >= n) fail("crossing index out of range");
  if (braid_like()) {
    LabelledBraid b = std::get<LabelledBraid>(identity(n));
    b.braid = BraidWord::generator(n, i);
    return b;
  }
  LabelledPermutation lp = std::get<LabelledPermutation>(identity(n));
  lp.perm = Permutation::transposition(n, i - 1);
  return lp;
}

Element CrossedFamily::with_labels(const GroupTuple& labels, int n) const {
  if (labels.size() != n) fail("label arity mismatch");
  Element e = identity(n);
  std::visit([&](auto& x) { x.labels = labels; }, e);
  return e;
}

CrossedRewrite CrossedFamily::rewrite_past_mono(const Element& j, const OrderedMap& phi) const {
  require_element(j);
  const int m = phi.cod();
  const int n = phi.dom();
  if (element_size(j) != m) fail("rewrite arity mismatch");

  std::vector<int> sizes = phi.fiber_sizes();
  Permutation pi = underlying_permutation(j);
  Permutation pi_inv = pi.inverse();

  std::vector<int> new_sizes(m);
  for (int k = 0; k < m; ++k) new_sizes[k] = sizes[pi_inv(k)];
  OrderedMap psi = OrderedMap::from_fiber_sizes(new_sizes);

  Element new_elt = identity(n);
  if (tag_ == Family::Symmetric) {
    const auto& lp = std::get<LabelledPermutation>(j);
    LabelledPermutation r;
    r.perm = block_permutation(lp.perm, sizes);
    r.labels = skeletal_relabel(psi.values(), lp.labels);
    new_elt = std::move(r);
  } else if (tag_ == Family::Hyperoctahedral) {
    const auto& lp = std::get<LabelledPermutation>(j);
    LabelledPermutation r;
    r.perm = flagged_block_permutation(lp.perm, sizes, *lp.flags);
    r.labels = skeletal_relabel(psi.values(), lp.labels);
    FlagTuple f(n);
    for (int i = 0; i < n; ++i) f[i] = (*lp.flags)[psi(i)];
    r.flags = std::move(f);
    new_elt = std::move(r);
  } else {
    const auto& lb = std::get<LabelledBraid>(j);
    LabelledBraid r;
    if (tag_ == Family::Ribbon) {
      RibbonBraid rc = ribbon_cable(RibbonBraid(lb.braid, *lb.twists), sizes);
      r.braid = std::move(rc.braid);
      r.twists = std::move(rc.twists);
    } else {
      r.braid = cable(lb.braid, sizes);
    }
    r.labels = skeletal_relabel(psi.values(), lb.labels);
    new_elt = std::move(r);
  }

  // Underlying-set equation pi(j) o phi = psi o pi(new_elt).
  Permutation rho = underlying_permutation(new_elt);
  for (int i = 0; i < n; ++i)
    if (pi(phi(i)) != psi(rho(i)))
      throw std::logic_error("crossed rewrite violates the underlying-set equation");

  return CrossedRewrite{std::move(psi), std::move(new_elt)};
}

std::vector<Element> CrossedFamily::enumerate(int n) const {
  if (braid_like()) fail("braid families have infinite hom-sets; sampling only");
  std::vector<Element> out;
  for (auto& lp : all_labelled_perms(group_, n, has_flags())) out.push_back(std::move(lp));
  return out;
}

Element CrossedFamily::sample(std::mt19937_64& rng, int n, int max_len) const {
  std::uniform_int_distribution<int> label_d(0, group_->order() - 1);
  std::vector<int> labels(n);
  for (int& l : labels) l = label_d(rng);
  GroupTuple lt(group_, std::move(labels));

  if (braid_like()) {
    LabelledBraid b;
    b.labels = std::move(lt);
    b.braid = random_braid_word(rng, n, max_len);
    if (has_twists()) {
      std::uniform_int_distribution<int> tw_d(-2, 2);
      std::vector<int> tw(n);
      for (int& t : tw) t = tw_d(rng);
      b.twists = std::move(tw);
    }
    return b;
  }
  LabelledPermutation p;
  p.labels = std::move(lt);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(img[i], img[d(rng)]);
  }
  p.perm = Permutation(std::move(img));
  if (has_flags()) {
    std::uniform_int_distribution<int> fd(0, 1);
    FlagTuple f(n);
    for (auto& x : f) x = static_cast<std::uint8_t>(fd(rng));
    p.flags = std::move(f);
  }
  return p;
}

namespace {

std::string describe(const CrossedFamily& fam, const Element& e) {
  std::ostringstream os;
  if (fam.braid_like()) {
    const auto& b = std::get<LabelledBraid>(e);
    os << "labels[";
    for (int v : b.labels.entries) os << v << " ";
    os << "] " << b.braid.str();
    if (b.twists) {
      os << " tw(";
      for (int t : *b.twists) os << t << " ";
      os << ")";
    }
  } else {
    const auto& p = std::get<LabelledPermutation>(e);
    os << "labels[";
    for (int v : p.labels.entries) os << v << " ";
    os << "] perm[";
    for (int v : p.perm.images()) os << v << " ";
    os << "]";
    if (p.flags) {
      os << " flags[";
      for (auto f : *p.flags) os << int(f) << " ";
      os << "]";
    }
  }
  return os.str();
}

}  // namespace

CheckReport CrossedFamily::check_crossed_identities(int max_n, int samples, unsigned seed) const {
  CheckReport rep;
  rep.name = "crossed identities (" + family_name(tag_) + ")";

  auto elements_on = [&](int k, std::mt19937_64& rng, std::vector<Element>& buf) {
    buf.clear();
    if (!braid_like()) {
      buf = enumerate(k);
    } else {
      int per = std::max(1, samples / std::max(1, 3 * max_n));
      for (int s = 0; s < per; ++s) buf.push_back(sample(rng, k, 6));
    }
  };

  std::mt19937_64 rng(seed);
  std::vector<Element> em, el, en;

  for (int m = 0; m <= max_n; ++m) {
    elements_on(m, rng, em);
    // unit laws
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& phi : enumerate_mono(n, m)) {
        auto rw = rewrite_past_mono(identity(m), phi);
        rep.note(rw.new_mono == phi && is_identity(rw.new_elt), "identity element past " + phi.str());
      }
    }
    for (const auto& j : em) {
      auto rw = rewrite_past_mono(j, OrderedMap::identity(m));
      rep.note(rw.new_mono == OrderedMap::identity(m) && equal(rw.new_elt, j),
               "element past identity mono: " + describe(*this, j));
    }
    // multiplicativity in the element
    for (int n = 0; n <= max_n; ++n) {
      for (const auto& phi : enumerate_mono(n, m)) {
        for (const auto& j : em) {
          for (const auto& k : em) {
            auto rw_k = rewrite_past_mono(k, phi);
            auto rw_jk = rewrite_past_mono(compose(j, k), phi);
            auto rw_j2 = rewrite_past_mono(j, rw_k.new_mono);
            bool ok = rw_jk.new_mono == rw_j2.new_mono &&
                      equal(rw_jk.new_elt, compose(rw_j2.new_elt, rw_k.new_elt));
            rep.note(ok, "multiplicativity at " + phi.str() + " with j=" + describe(*this, j) +
                             " k=" + describe(*this, k));
            if (braid_like() && rep.checked > samples) break;
          }
          if (braid_like() && rep.checked > samples) break;
        }
      }
    }
    // compatibility with mono composition
    for (int l = 0; l <= max_n; ++l) {
      elements_on(l, rng, el);
      for (const auto& chi : enumerate_mono(m, l)) {
        for (int n = 0; n <= max_n; ++n) {
          for (const auto& phi : enumerate_mono(n, m)) {
            OrderedMap chiphi = gprop::compose(chi, phi);
            for (const auto& j : el) {
              auto rw_chi = rewrite_past_mono(j, chi);
              auto rw_phi = rewrite_past_mono(rw_chi.new_elt, phi);
              auto rw_all = rewrite_past_mono(j, chiphi);
              bool ok = rw_all.new_mono == gprop::compose(rw_chi.new_mono, rw_phi.new_mono) &&
                        equal(rw_all.new_elt, rw_phi.new_elt);
              rep.note(ok, "mono-composition at " + chi.str() + " o " + phi.str() + " with j=" +
                               describe(*this, j));
            }
          }
        }
      }
    }
  }

  // tensor compatibility
  std::uniform_int_distribution<int> arity_d(0, max_n);
  int tensor_cases = braid_like() ? samples : 200;
  for (int c = 0; c < tensor_cases; ++c) {
    int m1 = arity_d(rng), m2 = arity_d(rng), n1 = arity_d(rng), n2 = arity_d(rng);
    auto monos1 = enumerate_mono(n1, m1);
    auto monos2 = enumerate_mono(n2, m2);
    if (monos1.empty() || monos2.empty()) continue;
    std::uniform_int_distribution<size_t> d1(0, monos1.size() - 1), d2(0, monos2.size() - 1);
    const OrderedMap& phi1 = monos1[d1(rng)];
    const OrderedMap& phi2 = monos2[d2(rng)];
    Element j1 = sample(rng, m1, 6);
    Element j2 = sample(rng, m2, 6);
    auto rw1 = rewrite_past_mono(j1, phi1);
    auto rw2 = rewrite_past_mono(j2, phi2);
    auto rw = rewrite_past_mono(tensor(j1, j2), gprop::tensor(phi1, phi2));
    bool ok = rw.new_mono == gprop::tensor(rw1.new_mono, rw2.new_mono) &&
              equal(rw.new_elt, tensor(rw1.new_elt, rw2.new_elt));
    rep.note(ok, "tensor compatibility at " + phi1.str() + " (+) " + phi2.str());
  }

  return rep;
}

nlohmann::ordered_json CrossedFamily::element_to_json(const Element& e) const {
  nlohmann::ordered_json j;
  j["family"] = family_name(tag_);
  std::visit(
      [&](const auto& x) {
        std::vector<std::string> names;
        for (int v : x.labels.entries) names.push_back(group_->name(v));
        j["labels"] = names;
      },
      e);
  if (braid_like()) {
    const auto& b = std::get<LabelledBraid>(e);
    j["braid"] = b.braid.letters();
    if (b.twists) j["twists"] = *b.twists;
  } else {
    const auto& p = std::get<LabelledPermutation>(e);
    std::vector<int> img = p.perm.images();
    for (int& v : img) ++v;
    j["perm"] = img;
    if (p.flags) {
      std::vector<int> f(p.flags->begin(), p.flags->end());
      j["flags"] = f;
    }
  }
  return j;
}

Element CrossedFamily::element_from_json(const nlohmann::json& j) const {
  std::vector<int> labels;
  for (const auto& v : j.at("labels")) {
    if (v.is_string()) {
      int idx = group_->element_by_name(v.get<std::string>());
      if (idx < 0) fail("unknown group element name: " + v.get<std::string>());
      labels.push_back(idx);
    } else {
      labels.push_back(v.get<int>());
    }
  }
  int n = static_cast<int>(labels.size());
  GroupTuple lt(group_, std::move(labels));
  if (braid_like()) {
    LabelledBraid b;
    b.labels = std::move(lt);
    b.braid = BraidWord(n, j.at("braid").get<std::vector<int>>());
    if (has_twists()) b.twists = j.at("twists").get<std::vector<int>>();
    return b;
  }
  LabelledPermutation p;
  p.labels = std::move(lt);
  std::vector<int> img = j.at("perm").get<std::vector<int>>();
  for (int& v : img) --v;
  p.perm = Permutation(std::move(img));
  if (has_flags()) {
    auto f = j.at("flags").get<std::vector<int>>();
    p.flags = FlagTuple(f.begin(), f.end());
  }
  return p;
}

}  // namespace gprop
