#include "gprop/cli.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "gprop/checks.hpp"
#include "gprop/term.hpp"

namespace gprop {

namespace {

struct CommonOpts {
  std::string family = "symmetric";
  std::string group = "c2";
  unsigned seed = 0;
  bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--family", o.family, "symmetric | hyperoctahedral | braid | ribbon");
  cmd->add_option("--group", o.group, "group preset (trivial, c2, c3, c4, klein, s3, s4) or JSON file");
  cmd->add_option("--seed", o.seed, "random seed for sampled suites");
  cmd->add_flag("--pretty", o.pretty, "indent JSON output");
}

SpanContext make_context(const CommonOpts& o) {
  return SpanContext(CrossedFamily(family_from_name(o.family), FiniteGroup::resolve(o.group)));
}

void emit(std::ostream& out, const nlohmann::ordered_json& j, bool pretty) {
  out << j.dump(pretty ? 2 : -1) << "\n";
}

int run_nf(const CommonOpts& o, const std::string& term_text, const std::string& braid_text,
           int strands, std::ostream& out) {
  SpanContext ctx = make_context(o);
  nlohmann::ordered_json j;
  if (!braid_text.empty()) {
    if (ctx.family().tag() == Family::Ribbon) {
      RibbonBraid r = RibbonBraid::parse(braid_text, strands);
      GarsideNF nf = braid_normal_form(r.braid);
      j["input"] = r.str();
      j["strands"] = strands;
      j["twists"] = r.twists;
      j["nf_word"] = nf.word().str();
      j["delta_power"] = nf.power;
      j["factors"] = nf.factors.size();
    } else {
      BraidWord w = BraidWord::parse(braid_text, strands);
      GarsideNF nf = braid_normal_form(w);
      j["input"] = w.str();
      j["strands"] = strands;
      j["nf_word"] = nf.word().str();
      j["delta_power"] = nf.power;
      j["factors"] = nf.factors.size();
    }
    emit(out, j, o.pretty);
    return 0;
  }
  Term t = parse_term(term_text);
  Arity a = term_arity(t);
  CompositeMorphism c = elaborate(t, ctx);
  j["term"] = print_term(t);
  j["dom"] = a.dom;
  j["cod"] = a.cod;
  j["canonical"] = ctx.composite_to_json(c);
  emit(out, j, o.pretty);
  return 0;
}

int run_eq(const CommonOpts& o, const std::string& lhs, const std::string& rhs, bool braid_mode,
           int strands, std::ostream& out) {
  SpanContext ctx = make_context(o);
  nlohmann::ordered_json j;
  bool equal;
  if (braid_mode) {
    if (ctx.family().tag() == Family::Ribbon) {
      equal = ribbon_equal(RibbonBraid::parse(lhs, strands), RibbonBraid::parse(rhs, strands));
    } else {
      equal = braid_equal(BraidWord::parse(lhs, strands), BraidWord::parse(rhs, strands));
    }
    j["lhs"] = lhs;
    j["rhs"] = rhs;
  } else {
    Term tl = parse_term(lhs), tr = parse_term(rhs);
    CompositeMorphism cl = elaborate(tl, ctx), cr = elaborate(tr, ctx);
    if (cl.dom() != cr.dom() || cl.cod() != cr.cod())
      throw std::invalid_argument("terms have different boundaries");
    equal = cl == cr;
    j["lhs"] = print_term(tl);
    j["rhs"] = print_term(tr);
  }
  j["equal"] = equal;
  emit(out, j, o.pretty);
  return equal ? 0 : 1;
}

int run_compose(const CommonOpts& o, const std::string& first, const std::string& second,
                std::ostream& out) {
  SpanContext ctx = make_context(o);
  CompositeMorphism a = elaborate(parse_term(first), ctx);
  CompositeMorphism b = elaborate(parse_term(second), ctx);
  if (a.cod() != b.dom())
    throw std::invalid_argument("boundary mismatch: first term ends at " + std::to_string(a.cod()) +
                                ", second starts at " + std::to_string(b.dom()));
  CompositeMorphism c = ctx.composite_compose(b, a);  // first term applied first
  nlohmann::ordered_json j;
  j["dom"] = c.dom();
  j["cod"] = c.cod();
  j["canonical"] = ctx.composite_to_json(c);
  emit(out, j, o.pretty);
  return 0;
}

int run_enum(const CommonOpts& o, const std::string& cat, int n, int m, bool list,
             std::ostream& out) {
  GroupPtr group = FiniteGroup::resolve(o.group);
  nlohmann::ordered_json j;
  j["cat"] = cat;
  j["n"] = n;
  j["m"] = m;
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  long long count = 0, closed = -1;
  if (cat == "mono") {
    auto v = enumerate_mono(n, m);
    count = static_cast<long long>(v.size());
    closed = count_mono(n, m);
    if (list)
      for (const auto& f : v) items.push_back(f.str());
  } else if (cat == "perm") {
    CrossedFamily fam(family_from_name(o.family), group);
    if (fam.braid_like()) throw std::invalid_argument("braid families have infinite hom-sets");
    if (n != m) {
      count = 0;
    } else {
      auto v = fam.enumerate(n);
      count = static_cast<long long>(v.size());
      if (list)
        for (const auto& e : v) items.push_back(fam.element_to_json(e));
    }
  } else if (cat == "dpg") {
    CrossedFamily fam(family_from_name(o.family), group);
    if (fam.braid_like()) throw std::invalid_argument("braid families have infinite hom-sets");
    auto monos = enumerate_mono(n, m);
    auto elems = fam.enumerate(n);
    count = static_cast<long long>(monos.size()) * static_cast<long long>(elems.size());
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    long long gl = 1;
    for (int k = 0; k < n; ++k) gl *= group->order();
    long long flags = 1;
    if (fam.tag() == Family::Hyperoctahedral)
      for (int k = 0; k < n; ++k) flags *= 2;
    closed = count_mono(n, m) * fact * gl * flags;
    if (list) {
      SpanContext ctx{CrossedFamily(family_from_name(o.family), group)};
      for (const auto& mono : monos)
        for (const auto& e : elems) {
          nlohmann::ordered_json one;
          one["elt"] = ctx.family().element_to_json(e);
          one["mono"] = mono.to_json();
          items.push_back(one);
        }
    }
  } else if (cat == "ncset") {
    auto v = enumerate_ncset(group, n, m);
    count = static_cast<long long>(v.size());
    closed = ncset_hom_count(n, m, group->order());
    if (list)
      for (const auto& f : v) items.push_back(f.to_json());
  } else if (cat == "gf") {
    auto v = enumerate_gf(group, n, m);
    count = static_cast<long long>(v.size());
    long long maps = 0;
    if (m > 0) {
      maps = 1;
      for (int k = 0; k < n; ++k) maps *= m;
    } else {
      maps = n == 0 ? 1 : 0;
    }
    long long gl = 1;
    for (int k = 0; k < n; ++k) gl *= group->order();
    closed = maps * gl;
    if (list)
      for (const auto& f : v) items.push_back(f.data().to_json());
  } else {
    throw std::invalid_argument("unknown category: " + cat +
                                " (expected mono, perm, dpg, ncset, gf)");
  }
  j["count"] = count;
  if (closed >= 0) j["closed_form"] = closed;
  if (list) j["items"] = items;
  emit(out, j, o.pretty);
  if (closed >= 0 && closed != count) return 1;
  return 0;
}

int run_check(const CommonOpts& o, const std::string& suite, int max_n, int samples,
              std::ostream& out) {
  GroupPtr group = FiniteGroup::resolve(o.group);
  std::vector<CheckReport> reports;
  if (suite == "category") {
    reports.push_back(run_category_suite(group, std::min(max_n, 2), max_n, samples, o.seed));
  } else if (suite == "crossed") {
    CrossedFamily fam(family_from_name(o.family), group);
    reports.push_back(fam.check_crossed_identities(max_n, samples, o.seed));
  } else if (suite == "rewrite") {
    reports.push_back(run_braid_suite(samples, std::max(2, max_n + 2), 12, o.seed));
    reports.push_back(run_strategy_suite(group, family_from_name(o.family), samples, o.seed + 1));
    reports.push_back(run_dual_oracle_sampled(group, samples, max_n, o.seed + 2));
  } else if (suite == "iso") {
    reports.push_back(run_iso_suite(group, o.seed));
  } else if (suite == "semantics") {
    reports = run_semantics_suite(std::min(samples, 400), std::min(max_n, 3), o.seed);
  } else {
    throw std::invalid_argument("unknown suite: " + suite +
                                " (expected category, crossed, rewrite, iso, semantics)");
  }
  nlohmann::ordered_json j;
  j["suite"] = suite;
  nlohmann::ordered_json parts = nlohmann::ordered_json::array();
  bool pass = true;
  long long checked = 0;
  for (const auto& r : reports) {
    parts.push_back(report_to_json(r));
    pass = pass && r.pass();
    checked += r.checked;
  }
  j["checked"] = checked;
  j["pass"] = pass;
  j["parts"] = parts;
  emit(out, j, o.pretty);
  return pass ? 0 : 1;
}

int run_interp(const CommonOpts& o, const std::string& term_text, const std::string& model_file,
               std::ostream& out) {
  SpanContext ctx = make_context(o);
  std::ifstream in(model_file);
  if (!in) throw std::invalid_argument("cannot open model file: " + model_file);
  nlohmann::json mj;
  in >> mj;
  BimonoidModel model = BimonoidModel::from_json(mj, ctx.family().group());
  CheckReport axioms = verify_model(model);
  if (!axioms.pass())
    throw std::invalid_argument("model fails its axioms: " + axioms.failures.front());
  Term t = parse_term(term_text);
  CompositeMorphism c = elaborate(t, ctx);
  ZpMat value = eval_composite(model, c);
  nlohmann::ordered_json j;
  j["term"] = print_term(t);
  j["dom"] = c.dom();
  j["cod"] = c.cod();
  j["p"] = model.p;
  j["rows"] = value.rows();
  j["cols"] = value.cols();
  j["matrix"] = value.to_json();
  emit(out, j, o.pretty);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"equivariant PROP/PROB calculus"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string term1, term2, braid_text, cat = "mono", suite = "category", model_file;
  int strands = 2, n = 0, m = 0, max_n = 3, samples = 500;
  bool list = false, braid_mode = false;

  auto* nf = app.add_subcommand("nf", "canonical form of a term or braid word");
  add_common(nf, o);
  nf->add_option("term", term1, "term, e.g. \"(m+id(1));m\"");
  nf->add_option("--braid", braid_text, "braid word, e.g. \"s1 s2' s1\" (tw(...) prefix in ribbon mode)");
  nf->add_option("--strands", strands, "strand count for --braid");

  auto* eq = app.add_subcommand("eq", "decide equality of two terms or braid words");
  add_common(eq, o);
  eq->add_option("lhs", term1)->required();
  eq->add_option("rhs", term2)->required();
  eq->add_flag("--braid", braid_mode, "interpret the arguments as braid words");
  eq->add_option("--strands", strands, "strand count for --braid");

  auto* comp = app.add_subcommand("compose", "compose two terms (first argument applied first)");
  add_common(comp, o);
  comp->add_option("first", term1)->required();
  comp->add_option("second", term2)->required();

  auto* en = app.add_subcommand("enum", "enumerate a hom-set and compare with the closed form");
  add_common(en, o);
  en->add_option("--cat", cat, "mono | perm | dpg | ncset | gf");
  en->add_option("--n", n)->required();
  en->add_option("--m", m)->required();
  en->add_flag("--list", list, "also list the morphisms");

  auto* ch = app.add_subcommand("check", "run a verification suite");
  add_common(ch, o);
  ch->add_option("--suite", suite, "category | crossed | rewrite | iso | semantics")->required();
  ch->add_option("--max-n", max_n, "exhaustive arity bound");
  ch->add_option("--samples", samples, "sample count for randomized parts");

  auto* in = app.add_subcommand("interp", "evaluate a term against a model over Z/p");
  add_common(in, o);
  in->add_option("term", term1)->required();
  in->add_option("--model", model_file, "model JSON file")->required();

  std::vector<std::string> argv_like = args;
  std::vector<const char*> argv;
  argv.push_back("gprop");
  for (const auto& a : argv_like) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (nf->parsed()) {
      if (term1.empty() && braid_text.empty())
        throw std::invalid_argument("nf needs a term or --braid");
      return run_nf(o, term1, braid_text, strands, out);
    }
    if (eq->parsed()) return run_eq(o, term1, term2, braid_mode, strands, out);
    if (comp->parsed()) return run_compose(o, term1, term2, out);
    if (en->parsed()) return run_enum(o, cat, n, m, list, out);
    if (ch->parsed()) return run_check(o, suite, max_n, samples, out);
    if (in->parsed()) return run_interp(o, term1, model_file, out);
  } catch (const std::invalid_argument& e) {
    nlohmann::ordered_json j;
    j["error"] = e.what();
    err << j.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace gprop
