#include "gprop/ordered_map.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gprop {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }
}  // namespace

OrderedMap::OrderedMap(int dom, int cod, std::vector<int> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
  if (dom_ < 0 || cod_ < 0) fail("negative arity");
  if (static_cast<int>(values_.size()) != dom_) fail("value list length must equal domain");
  for (int i = 0; i < dom_; ++i) {
    if (values_[i] < 0 || values_[i] >= cod_) fail("map value out of range");
    if (i > 0 && values_[i] < values_[i - 1]) fail("map values must be weakly increasing");
  }
}

OrderedMap OrderedMap::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return OrderedMap(n, n, std::move(v));
}

OrderedMap OrderedMap::mult() { return OrderedMap(2, 1, {0, 0}); }
OrderedMap OrderedMap::unit() { return OrderedMap(0, 1, {}); }

OrderedMap OrderedMap::fold(int b) {
  if (b < 0) fail("negative fold arity");
  return OrderedMap(b, 1, std::vector<int>(b, 0));
}

OrderedMap OrderedMap::from_fiber_sizes(const std::vector<int>& sizes) {
  std::vector<int> v;
  for (size_t i = 0; i < sizes.size(); ++i)
    v.insert(v.end(), sizes[i], static_cast<int>(i));
  int dom = static_cast<int>(v.size());
  return OrderedMap(dom, static_cast<int>(sizes.size()), std::move(v));
}

std::vector<int> OrderedMap::fiber_sizes() const {
  std::vector<int> c(cod_, 0);
  for (int v : values_) ++c[v];
  return c;
}

bool OrderedMap::is_identity() const {
  if (dom_ != cod_) return false;
  for (int i = 0; i < dom_; ++i)
    if (values_[i] != i) return false;
  return true;
}

std::string OrderedMap::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < dom_; ++i) {
    if (i) os << ",";
    os << values_[i] + 1;
  }
  os << "]:" << dom_ << "->" << cod_;
  return os.str();
}

OrderedMap OrderedMap::parse(const std::string& text) {
  auto lb = text.find('[');
  auto rb = text.find(']');
  auto colon = text.find(':', rb == std::string::npos ? 0 : rb);
  auto arrow = text.find("->");
  if (lb == std::string::npos || rb == std::string::npos || colon == std::string::npos ||
      arrow == std::string::npos || rb < lb || arrow < colon)
    fail("bad ordered map syntax, expected [v1,...]:n->m");
  std::vector<int> vals;
  std::string inner = text.substr(lb + 1, rb - lb - 1);
  std::istringstream is(inner);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.find_first_not_of(" \t") == std::string::npos) continue;
    vals.push_back(std::stoi(tok) - 1);
  }
  int dom = std::stoi(text.substr(colon + 1, arrow - colon - 1));
  int cod = std::stoi(text.substr(arrow + 2));
  return OrderedMap(dom, cod, std::move(vals));
}

nlohmann::ordered_json OrderedMap::to_json() const {
  nlohmann::ordered_json j;
  j["dom"] = dom_;
  j["cod"] = cod_;
  std::vector<int> v(values_);
  for (int& x : v) ++x;
  j["values"] = v;
  return j;
}

OrderedMap OrderedMap::from_json(const nlohmann::json& j) {
  auto v = j.at("values").get<std::vector<int>>();
  for (int& x : v) --x;
  return OrderedMap(j.at("dom").get<int>(), j.at("cod").get<int>(), std::move(v));
}

OrderedMap compose(const OrderedMap& g, const OrderedMap& f) {
  if (f.cod() != g.dom()) fail("ordered map boundary mismatch");
  std::vector<int> v(f.dom());
  for (int i = 0; i < f.dom(); ++i) v[i] = g(f(i));
  return OrderedMap(f.dom(), g.cod(), std::move(v));
}

OrderedMap tensor(const OrderedMap& f, const OrderedMap& g) {
  std::vector<int> v;
  v.reserve(f.dom() + g.dom());
  for (int i = 0; i < f.dom(); ++i) v.push_back(f(i));
  for (int i = 0; i < g.dom(); ++i) v.push_back(g(i) + f.cod());
  return OrderedMap(f.dom() + g.dom(), f.cod() + g.cod(), std::move(v));
}

std::vector<OrderedMap> enumerate_mono(int n, int m) {
  std::vector<OrderedMap> out;
  if (m == 0) {
    if (n == 0) out.push_back(OrderedMap(0, 0, {}));
    return out;
  }
  std::vector<int> v(n, 0);
  while (true) {
    out.push_back(OrderedMap(n, m, v));
    int i = n - 1;
    while (i >= 0 && v[i] == m - 1) --i;
    if (i < 0) break;
    int nv = v[i] + 1;
    for (int j = i; j < n; ++j) v[j] = nv;
  }
  return out;
}

long long count_mono(int n, int m) {
  if (m == 0) return n == 0 ? 1 : 0;
  long long r = 1;
  for (int i = 1; i <= n; ++i) r = r * (m - 1 + i) / i;
  return r;
}

OrderedMap GeneratorWord::layer_map(int index) const {
  OrderedMap acc(0, 0, {});
  for (GenSym s : layers[index]) {
    OrderedMap piece = s == GenSym::Mult ? OrderedMap::mult()
                     : s == GenSym::Unit ? OrderedMap::unit()
                                         : OrderedMap::identity(1);
    acc = tensor(acc, piece);
  }
  return acc;
}

OrderedMap GeneratorWord::recompose(int dom) const {
  OrderedMap acc = OrderedMap::identity(dom);
  for (size_t i = 0; i < layers.size(); ++i) acc = compose(layer_map(static_cast<int>(i)), acc);
  return acc;
}

std::string GeneratorWord::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < layers.size(); ++i) {
    if (i) os << " ; ";
    os << "[";
    for (size_t k = 0; k < layers[i].size(); ++k) {
      if (k) os << " ";
      os << (layers[i][k] == GenSym::Mult ? "m" : layers[i][k] == GenSym::Unit ? "u" : "1");
    }
    os << "]";
  }
  return os.str();
}

GeneratorWord decompose(const OrderedMap& f) {
  GeneratorWord word;

  // Surjective part: fiber sizes of f restricted to its image; one merge per
  // oversized fiber per layer until all fibers are singletons.
  std::vector<int> sizes;
  for (int s : f.fiber_sizes())
    if (s > 0) sizes.push_back(s);
  while (true) {
    bool any = false;
    for (int s : sizes)
      if (s >= 2) { any = true; break; }
    if (!any) break;
    std::vector<GenSym> layer;
    for (int& s : sizes) {
      if (s >= 2) {
        layer.push_back(GenSym::Mult);
        for (int k = 0; k < s - 2; ++k) layer.push_back(GenSym::Id1);
        --s;
      } else {
        layer.push_back(GenSym::Id1);
      }
    }
    word.layers.push_back(std::move(layer));
  }

  // Injective part: one layer of unit insertions at the missed outputs.
  std::vector<bool> hit(f.cod(), false);
  for (int v : f.values()) hit[v] = true;
  bool all_hit = true;
  for (bool h : hit) all_hit = all_hit && h;
  if (!all_hit) {
    std::vector<GenSym> layer;
    for (int j = 0; j < f.cod(); ++j) layer.push_back(hit[j] ? GenSym::Id1 : GenSym::Unit);
    word.layers.push_back(std::move(layer));
  }
  return word;
}

}  // namespace gprop
