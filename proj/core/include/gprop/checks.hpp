#pragma once

// Runnable verification suites shared by the CLI and the acceptance tests:
// category axioms, the pairs/labelled-sets isomorphism, hom-set counting,
// braid word-problem properties, rewriting-strategy independence, the
// dual-oracle comparison of span composition routes, and model semantics.

#include "gprop/ncset.hpp"
#include "gprop/semantics.hpp"
#include "gprop/span.hpp"
#include "gprop/term.hpp"

namespace gprop {

// Associativity/identity/interchange for the monotone-map category, labelled
// permutations, (element, mono) pairs, and ordered/unordered labelled set
// maps; exhaustive for arities <= exhaustive_arity, sampled at sample_arity.
CheckReport run_category_suite(const GroupPtr& group, int exhaustive_arity, int sample_arity,
                               int samples, unsigned seed);

// Pair/labelled-set isomorphism: round trips, functoriality, monoidality,
// and the three hom-set counting routes.
CheckReport run_iso_suite(const GroupPtr& group, unsigned seed);

// Braid word-problem properties: normal form kills w * w^-1, is invariant
// under relation moves and free insertions, and the permutation projection
// is a homomorphism.
CheckReport run_braid_suite(int words, int max_strands, int max_len, unsigned seed);

// Composing via random generator words agrees with the canonical strategy.
CheckReport run_strategy_suite(const GroupPtr& group, Family family, int samples, unsigned seed);

// Generator rewriting versus star-condition pullback, sampled.
CheckReport run_dual_oracle_sampled(const GroupPtr& group, int samples, int max_arity,
                                    unsigned seed);
// The same comparison over every composable pair of canonical spans with
// boundaries and middles bounded by max_arity.
CheckReport run_dual_oracle_exhaustive(const GroupPtr& group, int max_arity, int threads);

// Model construction + axioms + functoriality + rewrite soundness + the
// mutation, involutive, and balanced checks. Returns one report per part.
std::vector<CheckReport> run_semantics_suite(int samples, int max_arity, unsigned seed);

nlohmann::ordered_json report_to_json(const CheckReport& rep);

}  // namespace gprop
