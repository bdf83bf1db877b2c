#pragma once

// The term language for morphisms: generators id(n), m, u, op(t), g(labels),
// s(i), f(i), tw(i), monotone-map literals "[v1,...]:n->m", composition ";"
// (left term applied first) and tensor "+". Terms elaborate to canonical
// span triples in a chosen family.

#include <string>
#include <vector>

#include "gprop/span.hpp"

namespace gprop {

struct ParseError : std::invalid_argument {
  int position;
  ParseError(int pos, const std::string& msg)
      : std::invalid_argument("parse error at column " + std::to_string(pos + 1) + ": " + msg),
        position(pos) {}
};

struct Term {
  enum class Kind { Id, Mult, Unit, Op, Labels, Crossing, Flag, Twist, MonoLit, Seq, Tens };

  Kind kind = Kind::Id;
  int num = 0;                      // id(n), s(i), f(i), tw(i)
  std::vector<std::string> labels;  // g(...)
  OrderedMap mono;                  // mono literal
  std::vector<Term> children;       // op (1 child), seq/tens (n-ary, flattened)

  bool operator==(const Term& other) const;
};

Term parse_term(const std::string& text);
std::string print_term(const Term& t);

struct Arity {
  int dom = 0;
  int cod = 0;
};

// Infers boundaries; throws on a composition mismatch, naming the subterm.
Arity term_arity(const Term& t);

// Family-checked elaboration to a canonical triple; f(i) needs the
// hyperoctahedral family, tw(i) the ribbon family.
CompositeMorphism elaborate(const Term& t, const SpanContext& ctx);

Term random_term(std::mt19937_64& rng, int depth, bool with_flags, bool with_twists);

}  // namespace gprop
