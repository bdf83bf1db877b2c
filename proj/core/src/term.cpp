#include "gprop/term.hpp"

#include <cctype>
#include <sstream>

namespace gprop {

bool Term::operator==(const Term& other) const {
  return kind == other.kind && num == other.num && labels == other.labels &&
         (kind != Kind::MonoLit || mono == other.mono) && children == other.children;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  Term parse() {
    Term t = seq();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(static_cast<int>(pos_), "unexpected trailing input");
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!eat(c)) throw ParseError(static_cast<int>(pos_), "expected '" + std::string(1, c) + "' " + what);
  }

  int number() {
    skip_ws();
    size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(static_cast<int>(pos_), "expected a number");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Term seq() {
    Term t = tens();
    while (eat(';')) {
      Term rhs = tens();
      if (t.kind != Term::Kind::Seq) {
        Term wrap;
        wrap.kind = Term::Kind::Seq;
        wrap.children.push_back(std::move(t));
        t = std::move(wrap);
      }
      if (rhs.kind == Term::Kind::Seq) {
        for (auto& c : rhs.children) t.children.push_back(std::move(c));
      } else {
        t.children.push_back(std::move(rhs));
      }
    }
    return t;
  }

  Term tens() {
    Term t = atom();
    while (eat('+')) {
      Term rhs = atom();
      if (t.kind != Term::Kind::Tens) {
        Term wrap;
        wrap.kind = Term::Kind::Tens;
        wrap.children.push_back(std::move(t));
        t = std::move(wrap);
      }
      if (rhs.kind == Term::Kind::Tens) {
        for (auto& c : rhs.children) t.children.push_back(std::move(c));
      } else {
        t.children.push_back(std::move(rhs));
      }
    }
    return t;
  }

  bool lookahead_word(const std::string& w) {
    skip_ws();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    size_t after = pos_ + w.size();
    // keywords with arguments are followed by '('; bare generators must not
    // run into an identifier character
    if (after < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_'))
      return false;
    return true;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError(static_cast<int>(pos_), "expected a term");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = seq();
      expect(')', "to close the group");
      return t;
    }
    if (c == '[') return mono_literal();
    if (s_.compare(pos_, 3, "id(") == 0) return arg_atom(Term::Kind::Id, 2, "id");
    if (s_.compare(pos_, 5, "span(") == 0) {
      // span(in; elt; out) is sugar for op(in);elt;out; components with a
      // composition of their own need parentheses
      pos_ += 5;
      Term in = tens();
      expect(';', "after the span in-leg");
      Term elt = tens();
      expect(';', "after the span middle element");
      Term out = tens();
      expect(')', "to close span");
      Term opin;
      if (in.kind == Term::Kind::Op) {
        opin = in.children.front();
      } else {
        opin.kind = Term::Kind::Op;
        opin.children.push_back(std::move(in));
      }
      Term t;
      t.kind = Term::Kind::Seq;
      t.children.push_back(std::move(opin));
      t.children.push_back(std::move(elt));
      t.children.push_back(std::move(out));
      return t;
    }
    if (s_.compare(pos_, 3, "op(") == 0) {
      pos_ += 3;
      Term inner = seq();
      expect(')', "to close op");
      if (inner.kind == Term::Kind::Op) return inner.children.front();  // involutive
      Term t;
      t.kind = Term::Kind::Op;
      t.children.push_back(std::move(inner));
      return t;
    }
    if (s_.compare(pos_, 3, "tw(") == 0) return arg_atom(Term::Kind::Twist, 2, "tw");
    if (s_.compare(pos_, 2, "g(") == 0) return labels_atom();
    if (s_.compare(pos_, 2, "s(") == 0) return arg_atom(Term::Kind::Crossing, 1, "s");
    if (s_.compare(pos_, 2, "f(") == 0) return arg_atom(Term::Kind::Flag, 1, "f");
    if (lookahead_word("m")) {
      ++pos_;
      Term t;
      t.kind = Term::Kind::Mult;
      return t;
    }
    if (lookahead_word("u")) {
      ++pos_;
      Term t;
      t.kind = Term::Kind::Unit;
      return t;
    }
    throw ParseError(static_cast<int>(pos_), "expected a term");
  }

  Term arg_atom(Term::Kind kind, int name_len, const std::string& name) {
    pos_ += name_len + 1;
    int v = number();
    expect(')', "to close " + name);
    if (kind == Term::Kind::Id && v < 0) throw ParseError(static_cast<int>(pos_), "id arity must be >= 0");
    if (kind != Term::Kind::Id && v < 1)
      throw ParseError(static_cast<int>(pos_), name + " index must be >= 1");
    Term t;
    t.kind = kind;
    t.num = v;
    return t;
  }

  Term labels_atom() {
    pos_ += 2;
    Term t;
    t.kind = Term::Kind::Labels;
    skip_ws();
    if (eat(')')) return t;
    while (true) {
      skip_ws();
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      if (pos_ == start) throw ParseError(static_cast<int>(pos_), "expected a label name");
      t.labels.push_back(s_.substr(start, pos_ - start));
      if (eat(')')) break;
      expect(',', "between labels");
    }
    return t;
  }

  Term mono_literal() {
    size_t start = pos_;
    size_t close = s_.find(']', pos_);
    if (close == std::string::npos) throw ParseError(static_cast<int>(pos_), "unterminated '['");
    size_t end = close + 1;
    while (end < s_.size() && s_[end] != ';' && s_[end] != '+' && s_[end] != ')') ++end;
    Term t;
    t.kind = Term::Kind::MonoLit;
    try {
      t.mono = OrderedMap::parse(s_.substr(start, end - start));
    } catch (const std::invalid_argument& e) {
      throw ParseError(static_cast<int>(start), e.what());
    }
    pos_ = end;
    return t;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

void print_into(const Term& t, std::ostringstream& os, int parent_level) {
  // levels: seq = 0, tens = 1, atom = 2; parenthesize when looser than parent
  auto wrap = [&](int level, auto&& body) {
    bool paren = level < parent_level;
    if (paren) os << "(";
    body();
    if (paren) os << ")";
  };
  switch (t.kind) {
    case Term::Kind::Id: os << "id(" << t.num << ")"; break;
    case Term::Kind::Mult: os << "m"; break;
    case Term::Kind::Unit: os << "u"; break;
    case Term::Kind::Crossing: os << "s(" << t.num << ")"; break;
    case Term::Kind::Flag: os << "f(" << t.num << ")"; break;
    case Term::Kind::Twist: os << "tw(" << t.num << ")"; break;
    case Term::Kind::MonoLit: os << t.mono.str(); break;
    case Term::Kind::Labels: {
      os << "g(";
      for (size_t i = 0; i < t.labels.size(); ++i) {
        if (i) os << ",";
        os << t.labels[i];
      }
      os << ")";
      break;
    }
    case Term::Kind::Op: {
      os << "op(";
      print_into(t.children.front(), os, 0);
      os << ")";
      break;
    }
    case Term::Kind::Seq:
      wrap(0, [&] {
        for (size_t i = 0; i < t.children.size(); ++i) {
          if (i) os << ";";
          print_into(t.children[i], os, 1);
        }
      });
      break;
    case Term::Kind::Tens:
      wrap(1, [&] {
        for (size_t i = 0; i < t.children.size(); ++i) {
          if (i) os << "+";
          print_into(t.children[i], os, 2);
        }
      });
      break;
  }
}

}  // namespace

Term parse_term(const std::string& text) { return Parser(text).parse(); }

std::string print_term(const Term& t) {
  std::ostringstream os;
  print_into(t, os, 0);
  return os.str();
}

Arity term_arity(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Id: return {t.num, t.num};
    case Term::Kind::Mult: return {2, 1};
    case Term::Kind::Unit: return {0, 1};
    case Term::Kind::Crossing: return {t.num + 1, t.num + 1};
    case Term::Kind::Flag: return {t.num, t.num};
    case Term::Kind::Twist: return {t.num, t.num};
    case Term::Kind::MonoLit: return {t.mono.dom(), t.mono.cod()};
    case Term::Kind::Labels: {
      int n = static_cast<int>(t.labels.size());
      return {n, n};
    }
    case Term::Kind::Op: {
      Arity a = term_arity(t.children.front());
      return {a.cod, a.dom};
    }
    case Term::Kind::Seq: {
      Arity acc = term_arity(t.children.front());
      for (size_t i = 1; i < t.children.size(); ++i) {
        Arity next = term_arity(t.children[i]);
        if (next.dom != acc.cod)
          throw std::invalid_argument("arity mismatch at '" + print_term(t.children[i]) +
                                      "': expected domain " + std::to_string(acc.cod) + ", got " +
                                      std::to_string(next.dom));
        acc.cod = next.cod;
      }
      return acc;
    }
    case Term::Kind::Tens: {
      Arity acc{0, 0};
      for (const auto& c : t.children) {
        Arity a = term_arity(c);
        acc.dom += a.dom;
        acc.cod += a.cod;
      }
      return acc;
    }
  }
  return {0, 0};
}

CompositeMorphism elaborate(const Term& t, const SpanContext& ctx) {
  const CrossedFamily& fam = ctx.family();
  auto elt_triple = [&](const Element& e) {
    int n = element_size(e);
    return CompositeMorphism{OrderedMap::identity(n), fam.normalize(e), OrderedMap::identity(n)};
  };
  switch (t.kind) {
    case Term::Kind::Id:
      return CompositeMorphism{OrderedMap::identity(t.num), fam.identity(t.num),
                               OrderedMap::identity(t.num)};
    case Term::Kind::Mult:
      return CompositeMorphism{OrderedMap::identity(2), fam.identity(2), OrderedMap::mult()};
    case Term::Kind::Unit:
      return CompositeMorphism{OrderedMap::identity(0), fam.identity(0), OrderedMap::unit()};
    case Term::Kind::MonoLit:
      return CompositeMorphism{OrderedMap::identity(t.mono.dom()), fam.identity(t.mono.dom()),
                               t.mono};
    case Term::Kind::Crossing: return elt_triple(fam.crossing(t.num + 1, t.num));
    case Term::Kind::Flag: {
      if (fam.tag() != Family::Hyperoctahedral)
        throw std::invalid_argument("f(i) needs the hyperoctahedral family");
      LabelledPermutation lp = std::get<LabelledPermutation>(fam.identity(t.num));
      (*lp.flags)[t.num - 1] = 1;
      return elt_triple(lp);
    }
    case Term::Kind::Twist: {
      if (fam.tag() != Family::Ribbon)
        throw std::invalid_argument("tw(i) needs the ribbon family");
      LabelledBraid lb = std::get<LabelledBraid>(fam.identity(t.num));
      (*lb.twists)[t.num - 1] = 1;
      return elt_triple(lb);
    }
    case Term::Kind::Labels: {
      std::vector<int> idx;
      for (const auto& name : t.labels) {
        int v = fam.group()->element_by_name(name);
        if (v < 0) {
          try {
            v = std::stoi(name);
          } catch (...) {
            v = -1;
          }
        }
        if (v < 0 || v >= fam.group()->order())
          throw std::invalid_argument("unknown group element: " + name);
        idx.push_back(v);
      }
      int n = static_cast<int>(idx.size());
      return elt_triple(fam.with_labels(GroupTuple(fam.group(), std::move(idx)), n));
    }
    case Term::Kind::Op: {
      CompositeMorphism inner = elaborate(t.children.front(), ctx);
      SpanMorphism reversed{DJGMorphism{inner.elt, inner.out_mono},
                            DJGMorphism{fam.identity(inner.middle()), inner.in_mono}};
      return ctx.canonicalize(reversed);
    }
    case Term::Kind::Seq: {
      term_arity(t);  // boundary check with a helpful message
      CompositeMorphism acc = elaborate(t.children.front(), ctx);
      for (size_t i = 1; i < t.children.size(); ++i)
        acc = ctx.composite_compose(elaborate(t.children[i], ctx), acc);
      return acc;
    }
    case Term::Kind::Tens: {
      CompositeMorphism acc = elaborate(t.children.front(), ctx);
      for (size_t i = 1; i < t.children.size(); ++i)
        acc = ctx.composite_tensor(acc, elaborate(t.children[i], ctx));
      return acc;
    }
  }
  throw std::logic_error("unhandled term kind");
}

Term random_term(std::mt19937_64& rng, int depth, bool with_flags, bool with_twists) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  if (depth == 0) {
    Term t;
    switch (pick(with_twists ? 7 : (with_flags ? 6 : 5))) {
      case 0: t.kind = Term::Kind::Mult; break;
      case 1: t.kind = Term::Kind::Unit; break;
      case 2:
        t.kind = Term::Kind::Id;
        t.num = pick(3);
        break;
      case 3:
        t.kind = Term::Kind::Crossing;
        t.num = 1 + pick(2);
        break;
      case 4: {
        t.kind = Term::Kind::Labels;
        int n = 1 + pick(2);
        for (int i = 0; i < n; ++i) t.labels.push_back("g" + std::to_string(pick(2)));
        break;
      }
      case 5:
        t.kind = Term::Kind::Flag;
        t.num = 1 + pick(2);
        break;
      case 6:
        t.kind = Term::Kind::Twist;
        t.num = 1 + pick(2);
        break;
    }
    return t;
  }
  Term t;
  int which = pick(3);
  if (which == 0) {
    t.kind = Term::Kind::Op;
    t.children.push_back(random_term(rng, depth - 1, with_flags, with_twists));
    if (t.children.front().kind == Term::Kind::Op) return t.children.front().children.front();
    return t;
  }
  t.kind = which == 1 ? Term::Kind::Seq : Term::Kind::Tens;
  Term a = random_term(rng, depth - 1, with_flags, with_twists);
  Term b = random_term(rng, depth - 1, with_flags, with_twists);
  if (a.kind == t.kind) {
    t.children = std::move(a.children);
  } else {
    t.children.push_back(std::move(a));
  }
  if (b.kind == t.kind) {
    for (auto& c : b.children) t.children.push_back(std::move(c));
  } else {
    t.children.push_back(std::move(b));
  }
  return t;
}

}  // namespace gprop
