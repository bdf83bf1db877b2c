#include "gprop/braid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gprop {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

// Starting set: sigma_i left-divides the permutation braid of p iff
// p^-1(i) > p^-1(i+1).
bool in_starting_set(const Permutation& p, const Permutation& pinv, int i) {
  return pinv(i) > pinv(i + 1);
}

// Finishing set: sigma_i right-divides iff p(i) > p(i+1).
bool in_finishing_set(const Permutation& p, int i) { return p(i) > p(i + 1); }

// tau(p) = R p R, conjugation by the half twist.
Permutation tau(const Permutation& p) {
  const int n = p.size();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - p(n - 1 - i);
  return Permutation(std::move(v));
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 0) fail("negative strand count");
  for (int l : letters_) {
    int a = std::abs(l);
    if (a < 1 || a > strands_ - 1) fail("braid letter out of range");
  }
}

BraidWord BraidWord::generator(int n, int i, bool positive) {
  return BraidWord(n, {positive ? i : -i});
}

BraidWord BraidWord::permutation_braid(const Permutation& p) {
  std::vector<int> letters;
  Permutation cur = p;
  Permutation curinv = p.inverse();
  while (!cur.is_identity()) {
    int pick = -1;
    for (int i = 0; i + 1 < cur.size(); ++i)
      if (in_starting_set(cur, curinv, i)) { pick = i; break; }
    letters.push_back(pick + 1);
    cur = compose(Permutation::transposition(cur.size(), pick), cur);
    curinv = cur.inverse();
  }
  return BraidWord(p.size(), std::move(letters));
}

BraidWord BraidWord::half_twist(int n) {
  return permutation_braid(Permutation::reversal(n));
}

BraidWord BraidWord::full_twist_power(int n, int t) {
  BraidWord d = half_twist(n);
  BraidWord d2 = braid_concat(d, d);
  if (t < 0) d2 = d2.inverse();
  BraidWord out = identity(n);
  for (int k = 0; k < std::abs(t); ++k) out = braid_concat(out, d2);
  return out;
}

BraidWord BraidWord::inverse() const {
  std::vector<int> v(letters_.rbegin(), letters_.rend());
  for (int& l : v) l = -l;
  return BraidWord(strands_, std::move(v));
}

BraidWord BraidWord::tensor(const BraidWord& other) const {
  std::vector<int> v = letters_;
  for (int l : other.letters_) v.push_back(l > 0 ? l + strands_ : l - strands_);
  return BraidWord(strands_ + other.strands_, std::move(v));
}

Permutation BraidWord::underlying_permutation() const {
  Permutation acc = Permutation::identity(strands_);
  for (int l : letters_)
    acc = compose(acc, Permutation::transposition(strands_, std::abs(l) - 1));
  return acc;
}

std::string BraidWord::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << " ";
    os << "s" << std::abs(letters_[i]);
    if (letters_[i] < 0) os << "'";
  }
  return os.str();
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  std::vector<int> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    bool inv = false;
    if (tok.back() == '\'') { inv = true; tok.pop_back(); }
    if (tok.empty() || tok[0] != 's') fail("bad braid letter: " + tok);
    int i = std::stoi(tok.substr(1));
    letters.push_back(inv ? -i : i);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord braid_concat(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) fail("braid strand count mismatch");
  std::vector<int> v = w1.letters();
  v.insert(v.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strands(), std::move(v));
}

BraidWord GarsideNF::word() const {
  BraidWord out = BraidWord::identity(strands);
  BraidWord d = BraidWord::half_twist(strands);
  if (power < 0) d = d.inverse();
  for (int k = 0; k < std::abs(power); ++k) out = braid_concat(out, d);
  for (const auto& f : factors) out = braid_concat(out, BraidWord::permutation_braid(f));
  return out;
}

GarsideNF braid_normal_form(const BraidWord& w) {
  const int n = w.strands();
  GarsideNF nf;
  nf.strands = n;
  if (n <= 1) return nf;

  const Permutation R = Permutation::reversal(n);
  const int max_inv = n * (n - 1) / 2;

  // Rewrite each letter as Delta^{0 or -1} times a permutation braid, then
  // push all Delta powers to the front; tau is an involution so only the
  // parity of the passing power matters.
  std::vector<Permutation> factors;
  std::vector<int> shifts;  // Delta power emitted in front of this factor
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    Permutation t = Permutation::transposition(n, i);
    if (l > 0) {
      factors.push_back(t);
      shifts.push_back(0);
    } else {
      factors.push_back(compose(R, t));  // Delta sigma_i^-1
      shifts.push_back(-1);
    }
  }
  int power = 0;
  std::vector<Permutation> flist;
  {
    // Factor k must commute past the total shift accumulated to its right.
    std::vector<int> suffix(factors.size() + 1, 0);
    for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k)
      suffix[k] = suffix[k + 1] + shifts[k];
    power = suffix.empty() ? 0 : suffix[0];
    for (size_t k = 0; k < factors.size(); ++k) {
      Permutation f = factors[k];
      if (suffix[k + 1] % 2 != 0) f = tau(f);
      flist.push_back(f);
    }
  }

  // Local left-greedy passes until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < flist.size(); ++k) {
      Permutation& a = flist[k];
      Permutation& b = flist[k + 1];
      Permutation binv = b.inverse();
      bool moved = true;
      while (moved) {
        moved = false;
        for (int i = 0; i + 1 < n; ++i) {
          if (in_starting_set(b, binv, i) && !in_finishing_set(a, i)) {
            Permutation t = Permutation::transposition(n, i);
            a = compose(a, t);
            b = compose(t, b);
            binv = b.inverse();
            moved = true;
            changed = true;
          }
        }
      }
    }
    // Drop identity factors between passes.
    std::vector<Permutation> keep;
    for (auto& f : flist)
      if (!f.is_identity()) keep.push_back(std::move(f));
    if (keep.size() != flist.size()) changed = true;
    flist = std::move(keep);
  }

  // Absorb leading half twists into the power.
  size_t lead = 0;
  while (lead < flist.size() && flist[lead].inversions() == max_inv) {
    ++power;
    ++lead;
  }
  flist.erase(flist.begin(), flist.begin() + lead);

  nf.power = power;
  nf.factors = std::move(flist);
  return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) return false;
  return braid_normal_form(a) == braid_normal_form(b);
}

namespace {

// Permutation on a+b swapping the two consecutive blocks.
Permutation block_transposition(int a, int b) {
  std::vector<int> img(a + b);
  for (int r = 0; r < a; ++r) img[r] = b + r;
  for (int r = 0; r < b; ++r) img[a + r] = r;
  return Permutation(std::move(img));
}

}  // namespace

BraidWord cable(const BraidWord& w, const std::vector<int>& mult) {
  if (static_cast<int>(mult.size()) != w.strands()) fail("cable multiplicity length mismatch");
  for (int m : mult)
    if (m < 0) fail("negative cable multiplicity");
  int total = 0;
  for (int m : mult) total += m;

  // The rightmost letter acts first, so walk the word from the right with the
  // domain-side bundle sizes and prepend each emitted block crossing.
  std::vector<int> sizes = mult;
  std::vector<std::vector<int>> blocks;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    int i = std::abs(*it) - 1;
    int off = 0;
    for (int k = 0; k < i; ++k) off += sizes[k];
    int a = sizes[i], b = sizes[i + 1];
    BraidWord bw = *it > 0 ? BraidWord::permutation_braid(block_transposition(a, b))
                           : BraidWord::permutation_braid(block_transposition(b, a)).inverse();
    std::vector<int> shifted = bw.letters();
    for (int& x : shifted) x = x > 0 ? x + off : x - off;
    blocks.push_back(std::move(shifted));
    std::swap(sizes[i], sizes[i + 1]);
  }
  std::vector<int> letters;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
    letters.insert(letters.end(), it->begin(), it->end());
  return BraidWord(total, std::move(letters));
}

std::vector<std::vector<int>> crossing_matrix(const BraidWord& w) {
  const int n = w.strands();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  // strand_at[pos] = index of the strand currently at pos; the word acts with
  // its rightmost letter first.
  std::vector<int> strand_at(n);
  for (int i = 0; i < n; ++i) strand_at[i] = i;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    int i = std::abs(*it) - 1;
    int s1 = strand_at[i], s2 = strand_at[i + 1];
    int sgn = *it > 0 ? 1 : -1;
    m[s1][s2] += sgn;
    m[s2][s1] += sgn;
    std::swap(strand_at[i], strand_at[i + 1]);
  }
  return m;
}

RibbonBraid::RibbonBraid(BraidWord b, std::vector<int> t)
    : braid(std::move(b)), twists(std::move(t)) {
  if (static_cast<int>(twists.size()) != braid.strands()) fail("twist tuple length mismatch");
}

std::string RibbonBraid::str() const {
  std::ostringstream os;
  os << "tw(";
  for (size_t i = 0; i < twists.size(); ++i) {
    if (i) os << ",";
    os << twists[i];
  }
  os << ") " << braid.str();
  return os.str();
}

RibbonBraid RibbonBraid::parse(const std::string& text, int strands) {
  std::string rest = text;
  std::vector<int> twists(strands, 0);
  auto pos = text.find("tw(");
  if (pos != std::string::npos) {
    auto close = text.find(')', pos);
    if (close == std::string::npos) fail("unterminated tw(...)");
    std::string inner = text.substr(pos + 3, close - pos - 3);
    twists.clear();
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) twists.push_back(std::stoi(tok));
    if (static_cast<int>(twists.size()) != strands) fail("twist tuple length mismatch");
    rest = text.substr(0, pos) + text.substr(close + 1);
  }
  return RibbonBraid(BraidWord::parse(rest, strands), std::move(twists));
}

RibbonBraid ribbon_compose(const RibbonBraid& r1, const RibbonBraid& r2) {
  if (r1.strands() != r2.strands()) fail("ribbon strand count mismatch");
  Permutation p = r1.braid.underlying_permutation();
  Permutation pinv = p.inverse();
  std::vector<int> t(r1.twists.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = r1.twists[i] + r2.twists[pinv(static_cast<int>(i))];
  return RibbonBraid(braid_concat(r1.braid, r2.braid), std::move(t));
}

RibbonBraid ribbon_inverse(const RibbonBraid& r) {
  Permutation p = r.braid.underlying_permutation();
  std::vector<int> t(r.twists.size());
  for (size_t i = 0; i < t.size(); ++i) t[i] = -r.twists[p(static_cast<int>(i))];
  return RibbonBraid(r.braid.inverse(), std::move(t));
}

RibbonBraid ribbon_tensor(const RibbonBraid& r1, const RibbonBraid& r2) {
  std::vector<int> t = r1.twists;
  t.insert(t.end(), r2.twists.begin(), r2.twists.end());
  return RibbonBraid(r1.braid.tensor(r2.braid), std::move(t));
}

bool ribbon_equal(const RibbonBraid& a, const RibbonBraid& b) {
  return a.twists == b.twists && braid_equal(a.braid, b.braid);
}

RibbonBraid ribbon_cable(const RibbonBraid& r, const std::vector<int>& mult) {
  // (t, b) = (0, b) * (s, id) with s_i = t_{pi(b)(i)}; the twist factor acts
  // first and is cabled on the domain-side block layout.
  Permutation p = r.braid.underlying_permutation();
  int n = r.strands();
  int total = 0;
  for (int m : mult) total += m;

  RibbonBraid cabled_braid(cable(r.braid, mult), std::vector<int>(total, 0));

  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = r.twists[p(i)];
  BraidWord tw_word = BraidWord::identity(total);
  std::vector<int> tw_twists(total, 0);
  int off = 0;
  for (int i = 0; i < n; ++i) {
    int k = mult[i];
    BraidWord ft = BraidWord::full_twist_power(k, s[i]);
    BraidWord shifted = BraidWord::identity(off).tensor(ft).tensor(BraidWord::identity(total - off - k));
    tw_word = braid_concat(tw_word, shifted);
    for (int r2 = 0; r2 < k; ++r2) tw_twists[off + r2] = s[i];
    off += k;
  }
  return ribbon_compose(cabled_braid, RibbonBraid(std::move(tw_word), std::move(tw_twists)));
}

LabelledBraid labelled_braid_identity(GroupPtr g, int n, bool ribbon) {
  LabelledBraid b{GroupTuple::identity(std::move(g), n), BraidWord::identity(n), {}};
  if (ribbon) b.twists = std::vector<int>(n, 0);
  return b;
}

LabelledBraid labelled_braid_compose(const LabelledBraid& p, const LabelledBraid& q) {
  if (p.size() != q.size()) fail("labelled braid arity mismatch");
  if (p.twists.has_value() != q.twists.has_value()) fail("ribbon mode mismatch");
  LabelledBraid r;
  Permutation pp = p.braid.underlying_permutation();
  r.labels = tuple_mul(p.labels, tuple_act(pp, q.labels));
  r.braid = braid_concat(p.braid, q.braid);
  if (p.twists) {
    RibbonBraid rc = ribbon_compose(RibbonBraid(p.braid, *p.twists), RibbonBraid(q.braid, *q.twists));
    r.twists = rc.twists;
  }
  return r;
}

LabelledBraid labelled_braid_inverse(const LabelledBraid& p) {
  LabelledBraid r;
  Permutation pp = p.braid.underlying_permutation();
  r.braid = p.braid.inverse();
  r.labels = tuple_act(pp.inverse(), tuple_inv(p.labels));
  if (p.twists) r.twists = ribbon_inverse(RibbonBraid(p.braid, *p.twists)).twists;
  return r;
}

LabelledBraid labelled_braid_tensor(const LabelledBraid& p, const LabelledBraid& q) {
  if (p.twists.has_value() != q.twists.has_value()) fail("ribbon mode mismatch");
  LabelledBraid r;
  r.labels = tuple_concat(p.labels, q.labels);
  r.braid = p.braid.tensor(q.braid);
  if (p.twists) {
    std::vector<int> t = *p.twists;
    t.insert(t.end(), q.twists->begin(), q.twists->end());
    r.twists = std::move(t);
  }
  return r;
}

bool labelled_braid_equal(const LabelledBraid& a, const LabelledBraid& b) {
  if (!(a.labels == b.labels) || a.twists != b.twists) return false;
  return braid_equal(a.braid, b.braid);
}

BraidWord random_braid_word(std::mt19937_64& rng, int strands, int max_len) {
  if (strands < 2) return BraidWord::identity(strands);
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> gen_d(1, strands - 1);
  std::uniform_int_distribution<int> sign_d(0, 1);
  int len = len_d(rng);
  std::vector<int> letters;
  letters.reserve(len);
  for (int k = 0; k < len; ++k) {
    int g = gen_d(rng);
    letters.push_back(sign_d(rng) ? g : -g);
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace gprop
