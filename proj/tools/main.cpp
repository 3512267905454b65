//! Command-line frontend for the S-poset toolkit.
//!
//! Exit codes: 0 = computed, 1 = the checked property fails (or a
//! counterexample was found), 2 = input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sposet/axioms.hpp"
#include "sposet/conditions.hpp"
#include "sposet/flatness.hpp"
#include "sposet/io.hpp"
#include "sposet/search.hpp"
#include "sposet/structure.hpp"
#include "sposet/tensor.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace sposet;

struct GlobalOptions {
  std::size_t max_size       = 4;
  std::size_t skeleton_bound = 6;
  std::string format         = "text";
  std::size_t seed           = 0;  // reserved for sampled runs
  std::size_t jobs           = 1;

  bool json() const {
    return format == "json";
  }
};

void emit(Json const& doc) {
  std::cout << doc.dump(2) << "\n";
}

std::size_t resolve_in(std::vector<std::string> const& names, std::string const& token,
                       std::string const& what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == token) return i;
  if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
    std::size_t index = std::stoul(token);
    if (index < names.size()) return index;
  }
  throw std::invalid_argument("unknown " + what + " \"" + token + "\"");
}

std::pair<std::size_t, std::size_t> resolve_pair(SPoset const& A, SPoset const& B,
                                                 std::string const& token) {
  std::size_t comma = token.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("pair \"" + token + "\" must look like a,b");
  return {resolve_in(A.names(), token.substr(0, comma), "element of the left factor"),
          resolve_in(B.names(), token.substr(comma + 1), "element of the right factor")};
}

Json names_of(std::vector<std::size_t> const& indices,
              std::vector<std::string> const& names) {
  Json out = Json::array();
  for (std::size_t i : indices) out.push_back(names[i]);
  return out;
}

Json pair_names(std::vector<std::pair<std::size_t, std::size_t>> const& pairs,
                std::vector<std::string> const&                         names) {
  Json out = Json::array();
  for (auto const& [a, b] : pairs) out.push_back(Json::array({names[a], names[b]}));
  return out;
}

std::string join_names(std::vector<std::size_t> const& indices,
                       std::vector<std::string> const& names) {
  std::ostringstream out;
  for (std::size_t i = 0; i < indices.size(); ++i)
    out << (i ? " " : "") << names[indices[i]];
  return out.str();
}

// ---------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------

int cmd_validate(GlobalOptions const& opt, std::string const& path) {
  std::string text = read_text_file(path);
  std::string kind = document_kind(text);
  try {
    Json summary;
    if (kind == "pomonoid") {
      PomonoidPtr S        = load_pomonoid(path);
      summary["kind"]      = "report";
      summary["valid"]     = true;
      summary["document"]  = "pomonoid";
      summary["size"]      = S->size();
      summary["idempotents"] = names_of(S->idempotents(), S->names());
      if (!opt.json())
        std::cout << "valid pomonoid: " << S->size() << " element(s), "
                  << S->idempotents().size() << " idempotent(s)\n";
    } else if (kind == "sposet") {
      SPoset B             = load_sposet(path);
      summary["kind"]      = "report";
      summary["valid"]     = true;
      summary["document"]  = "sposet";
      summary["side"]      = side_name(B.side());
      summary["size"]      = B.size();
      summary["monoid_size"] = B.monoid()->size();
      if (!opt.json())
        std::cout << "valid " << side_name(B.side()) << " s-poset: " << B.size()
                  << " element(s) over a monoid with " << B.monoid()->size()
                  << " element(s)\n";
    } else {
      throw std::invalid_argument("cannot validate documents of kind \"" + kind + "\"");
    }
    if (opt.json()) emit(summary);
    return 0;
  } catch (validation_error const& err) {
    if (opt.json()) {
      Json summary;
      summary["kind"]     = "report";
      summary["valid"]    = false;
      summary["document"] = kind;
      Json violations     = Json::array();
      for (Violation const& v : err.report().violations) violations.push_back(v.to_string());
      summary["violations"] = std::move(violations);
      emit(summary);
    } else {
      std::cout << "invalid " << kind << ": " << err.report().to_string() << "\n";
    }
    return 1;
  }
}

// ---------------------------------------------------------------------
// tensor
// ---------------------------------------------------------------------

int cmd_tensor(GlobalOptions const& opt, std::string const& left_path,
               std::string const& right_path, std::vector<std::string> const& certify,
               bool table) {
  SPoset      A = load_sposet(left_path);
  SPoset      B = load_sposet(right_path);
  TensorPoset T = tensor_product(A, B);

  if (!certify.empty()) {
    auto p = resolve_pair(A, B, certify[0]);
    auto q = resolve_pair(A, B, certify[1]);
    std::optional<TossingCertificate> cert;
    if (T.class_of(p.first, p.second) == T.class_of(q.first, q.second))
      cert = extract_double_tossing(T, p, q);
    else if (tensor_leq(T, p, q))
      cert = extract_tossing(T, p, q);
    if (!cert) {
      if (opt.json()) {
        Json doc;
        doc["kind"]    = "report";
        doc["related"] = false;
        emit(doc);
      } else {
        std::cout << "not related: " << A.name(p.first) << " (x) " << B.name(p.second)
                  << " is not below " << A.name(q.first) << " (x) " << B.name(q.second)
                  << "\n";
      }
      return 1;
    }
    if (!verify_tossing(A, B, *cert))
      throw std::logic_error("internal error: extracted certificate failed verification");
    std::cout << to_text(*cert, A, B);
    return 0;
  }

  Json doc;
  doc["kind"]    = "report";
  doc["classes"] = Json::array();
  for (std::vector<std::size_t> const& cls : T.classes()) {
    Json members = Json::array();
    for (std::size_t pair : cls) {
      std::size_t a = pair / B.size(), b = pair % B.size();
      members.push_back(Json::array({A.name(a), B.name(b)}));
    }
    doc["classes"].push_back(std::move(members));
  }
  if (table) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < T.class_count(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < T.class_count(); ++j)
        row.push_back(T.class_order()(i, j) ? 1 : 0);
      rows.push_back(std::move(row));
    }
    doc["class_order"] = std::move(rows);
  }
  if (opt.json()) {
    emit(doc);
  } else {
    std::cout << "tensor product has " << T.class_count() << " class(es)\n";
    for (std::size_t i = 0; i < T.classes().size(); ++i) {
      std::cout << "  class " << i << ":";
      for (std::size_t pair : T.classes()[i]) {
        std::size_t a = pair / B.size(), b = pair % B.size();
        std::cout << " (" << A.name(a) << "," << B.name(b) << ")";
      }
      std::cout << "\n";
    }
    if (table) {
      std::cout << "class order (row <= column):\n";
      for (std::size_t i = 0; i < T.class_count(); ++i) {
        std::cout << "  ";
        for (std::size_t j = 0; j < T.class_count(); ++j)
          std::cout << (T.class_order()(i, j) ? '1' : '0');
        std::cout << "\n";
      }
    }
  }
  return 0;
}

// ---------------------------------------------------------------------
// check
// ---------------------------------------------------------------------

Json premise_json(Condition c, std::vector<std::size_t> const& tuple, SPoset const& B) {
  auto const& sn = B.monoid()->names();
  auto const& bn = B.names();
  Json        out;
  if (tuple.size() == 4) {
    out["s"]  = sn[tuple[0]];
    out["s'"] = sn[tuple[1]];
    out["b"]  = bn[tuple[2]];
    out["b'"] = bn[tuple[3]];
  } else if (c == Condition::E || c == Condition::EP ||
             (c == Condition::SF && tuple.size() == 3)) {
    out["s"]  = sn[tuple[0]];
    out["s'"] = sn[tuple[1]];
    out["b"]  = bn[tuple[2]];
  } else {
    out["s"]  = sn[tuple[0]];
    out["b"]  = bn[tuple[1]];
    out["b'"] = bn[tuple[2]];
  }
  return out;
}

Json witness_json(Condition c, std::vector<std::size_t> const& tuple, SPoset const& B) {
  auto const& sn = B.monoid()->names();
  auto const& bn = B.names();
  Json        out;
  out["b''"] = bn[tuple[0]];
  if (c == Condition::W || c == Condition::U_literal || c == Condition::U_amended) {
    out["p"]  = sn[tuple[1]];
    out["p'"] = sn[tuple[2]];
  } else if (tuple.size() == 2) {
    out["u"] = sn[tuple[1]];
  } else {
    out["u"]  = sn[tuple[1]];
    out["u'"] = sn[tuple[2]];
  }
  return out;
}

int cmd_check(GlobalOptions const& opt, std::string const& sposet_path,
              std::string const& condition) {
  SPoset B = load_sposet(sposet_path);
  if (condition == "all") {
    auto signature = condition_signature(B);
    if (opt.json()) {
      Json doc;
      doc["kind"] = "report";
      for (auto const& [c, holds] : signature) doc[condition_name(c)] = holds;
      emit(doc);
    } else {
      for (auto const& [c, holds] : signature)
        std::cout << condition_name(c) << ": " << (holds ? "holds" : "fails") << "\n";
    }
    return 0;
  }

  Condition c       = condition_from_name(condition);
  Verdict   verdict = check_condition(B, c);
  if (opt.json()) {
    Json doc;
    doc["kind"]      = "report";
    doc["condition"] = condition_name(c);
    doc["holds"]     = verdict.holds;
    if (verdict.counterexample)
      doc["counterexample"] = premise_json(c, *verdict.counterexample, B);
    Json witnesses = Json::array();
    for (auto const& [premise, witness] : verdict.witnesses) {
      Json entry;
      entry["premise"] = premise_json(c, premise, B);
      entry["witness"] = witness_json(c, witness, B);
      witnesses.push_back(std::move(entry));
    }
    doc["witnesses"] = std::move(witnesses);
    emit(doc);
  } else {
    std::cout << "condition " << condition_name(c) << ": "
              << (verdict.holds ? "holds" : "fails") << "\n";
    if (verdict.counterexample)
      std::cout << "counterexample premise: "
                << premise_json(c, *verdict.counterexample, B).dump() << "\n";
    else
      std::cout << "witnessed premises: " << verdict.witnesses.size() << "\n";
  }
  return verdict.holds ? 0 : 1;
}

// ---------------------------------------------------------------------
// flat
// ---------------------------------------------------------------------

int cmd_flat(GlobalOptions const& opt, std::string const& sposet_path,
             std::string const& variant, std::size_t bound) {
  SPoset          B = load_sposet(sposet_path);
  FlatnessVerdict verdict;
  if (variant == "flat")
    verdict = check_flat_bounded(B, false, bound);
  else if (variant == "poflat")
    verdict = check_flat_bounded(B, true, bound);
  else if (variant == "pwf")
    verdict = check_ideal_flatness(B, IdealVariant::PWF);
  else if (variant == "wf")
    verdict = check_ideal_flatness(B, IdealVariant::WF);
  else if (variant == "pwpf")
    verdict = check_ideal_flatness(B, IdealVariant::PWPF);
  else if (variant == "wpf")
    verdict = check_ideal_flatness(B, IdealVariant::WPF);
  else
    throw std::invalid_argument("unknown flatness variant \"" + variant + "\"");

  char const* status = verdict.status == FlatnessVerdict::Status::holds ? "holds"
                       : verdict.status == FlatnessVerdict::Status::bounded_holds
                           ? "holds up to the bound"
                           : "fails";
  if (opt.json()) {
    Json doc;
    doc["kind"]    = "report";
    doc["variant"] = variant;
    doc["status"]  = verdict.status == FlatnessVerdict::Status::holds ? "holds"
                     : verdict.status == FlatnessVerdict::Status::bounded_holds
                         ? "bounded_holds"
                         : "fails";
    if (verdict.status == FlatnessVerdict::Status::bounded_holds)
      doc["bound"] = verdict.bound;
    if (!verdict.detail.empty()) doc["detail"] = verdict.detail;
    if (verdict.failing_skeleton) {
      doc["failing_skeleton"] = names_of(verdict.failing_skeleton->first,
                                         B.monoid()->names());
      if (verdict.failing_skeleton->doubled())
        doc["failing_skeleton2"] = names_of(verdict.failing_skeleton->second,
                                            B.monoid()->names());
    }
    emit(doc);
  } else {
    std::cout << variant << ": " << status;
    if (verdict.status == FlatnessVerdict::Status::bounded_holds)
      std::cout << " (flat-length bound " << verdict.bound << ")";
    std::cout << "\n";
    if (!verdict.detail.empty()) std::cout << verdict.detail << "\n";
  }
  return verdict.ok() ? 0 : 1;
}

// ---------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------

int cmd_classify(GlobalOptions const& opt, std::string const& sposet_path) {
  SPoset B  = load_sposet(sposet_path);
  auto   fr = is_free(B);
  auto   pr = is_projective(B);

  if (opt.json()) {
    Json doc;
    doc["kind"]       = "report";
    doc["free"]       = fr.free;
    if (fr.free) doc["basis"] = fr.basis;
    doc["projective"] = pr.projective;
    Json components   = Json::array();
    for (std::size_t i = 0; i < pr.decomposition.components.size(); ++i) {
      Json comp;
      comp["elements"] = names_of(pr.decomposition.components[i], B.names());
      if (pr.decomposition.generators[i]) {
        comp["idempotent"] = B.monoid()->name(pr.decomposition.generators[i]->idempotent);
        comp["generator"]  = B.name(pr.decomposition.generators[i]->element);
      }
      components.push_back(std::move(comp));
    }
    doc["components"] = std::move(components);
    emit(doc);
  } else {
    std::cout << "components: " << pr.decomposition.components.size() << "\n";
    for (std::size_t i = 0; i < pr.decomposition.components.size(); ++i) {
      std::cout << "  component " << i << ": {"
                << join_names(pr.decomposition.components[i], B.names()) << "}";
      if (pr.decomposition.generators[i])
        std::cout << "  ~ S" << B.monoid()->name(pr.decomposition.generators[i]->idempotent)
                  << " via " << B.name(pr.decomposition.generators[i]->element);
      std::cout << "\n";
    }
    std::cout << "projective: " << (pr.projective ? "yes" : "no") << "\n";
    std::cout << "free: " << (fr.free ? "yes" : "no");
    if (fr.free) std::cout << " (basis size " << fr.basis << ")";
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------
// axioms
// ---------------------------------------------------------------------

int cmd_axioms(GlobalOptions const& opt, std::string const& monoid_path,
               std::string const& class_name, bool emit_flag, std::string const& eval_path,
               std::size_t vacuity_bound) {
  PomonoidPtr S     = load_pomonoid(monoid_path);
  AxiomClass  which = axiom_class_from_name(class_name);
  AxiomSet    axioms = emit_axioms(S, which, vacuity_bound);

  bool const emitting = emit_flag || eval_path.empty();
  if (emitting) {
    if (opt.json()) {
      Json doc;
      doc["kind"]           = "sentences";
      doc["class"]          = axiom_class_name(which);
      doc["bound_relative"] = axioms.bound_relative;
      if (axioms.bound_relative) doc["vacuity_bound"] = axioms.vacuity_bound;
      Json sentences = Json::array();
      for (Sentence const& phi : axioms.sentences) sentences.push_back(phi.to_string(*S));
      doc["sentences"] = std::move(sentences);
      emit(doc);
    } else {
      for (Sentence const& phi : axioms.sentences) std::cout << phi.to_string(*S) << "\n";
      if (axioms.bound_relative)
        std::cout << "(negative vacuity branches relative to witness bound "
                  << axioms.vacuity_bound << ")\n";
    }
  }
  if (eval_path.empty()) return 0;

  SPoset      B        = load_sposet(eval_path);
  std::size_t failures = 0;
  Json        results  = Json::array();
  for (std::size_t i = 0; i < axioms.sentences.size(); ++i) {
    bool holds = fo_eval(B, axioms.sentences[i]);
    if (!holds) ++failures;
    if (opt.json()) {
      Json entry;
      entry["sentence"] = axioms.sentences[i].to_string(*S);
      entry["holds"]    = holds;
      results.push_back(std::move(entry));
    } else if (!holds) {
      std::cout << "fails: " << axioms.sentences[i].to_string(*S) << "\n";
    }
  }
  if (opt.json()) {
    Json doc;
    doc["kind"]     = "report";
    doc["class"]    = axiom_class_name(which);
    doc["model"]    = failures == 0;
    doc["results"]  = std::move(results);
    emit(doc);
  } else {
    std::cout << "satisfies " << axioms.sentences.size() - failures << "/"
              << axioms.sentences.size() << " sentence(s)\n";
  }
  return failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------
// relations
// ---------------------------------------------------------------------

int cmd_relations(GlobalOptions const& opt, std::string const& monoid_path,
                  std::string const& s_token, std::string const& t_token,
                  std::string const& dominating) {
  PomonoidPtr S = load_pomonoid(monoid_path);
  std::size_t s = resolve_in(S->names(), s_token, "monoid element");
  std::size_t t = resolve_in(S->names(), t_token, "monoid element");

  WitnessSets ws = relation_sets(*S, s, t);
  Json        doc;
  doc["kind"]            = "report";
  doc["s"]               = S->name(s);
  doc["t"]               = S->name(t);
  doc["pair_set"]        = pair_names(ws.pair_set, S->names());
  doc["pair_generators"] = pair_names(ws.pair_generators, S->names());
  doc["elem_set"]        = names_of(ws.elem_set, S->names());
  doc["elem_generators"] = names_of(ws.elem_generators, S->names());

  std::optional<DominatingSet> dom;
  if (!dominating.empty()) {
    DominationKind kind;
    if (dominating == "pw")
      kind = DominationKind::Pw;
    else if (dominating == "pwpw")
      kind = DominationKind::PWPw;
    else if (dominating == "w")
      kind = DominationKind::W;
    else
      throw std::invalid_argument("unknown domination kind \"" + dominating + "\"");
    dom = dominating_set(*S, kind, s, t);
    doc["domination"]      = dominating;
    doc["pool"]            = pair_names(dom->pool, S->names());
    doc["dominating_set"]  = pair_names(dom->pairs, S->names());
  }

  if (opt.json()) {
    emit(doc);
  } else {
    std::cout << "R<=(" << S->name(s) << "," << S->name(t)
              << ") = " << doc["pair_set"].dump()
              << "\n  generators: " << doc["pair_generators"].dump() << "\n";
    std::cout << "r<=(" << S->name(s) << "," << S->name(t)
              << ") = " << doc["elem_set"].dump()
              << "\n  generators: " << doc["elem_generators"].dump() << "\n";
    if (dom)
      std::cout << "dominating set (" << dominating
                << "): " << doc["dominating_set"].dump() << " of pool "
                << doc["pool"].dump() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------
// egood
// ---------------------------------------------------------------------

int cmd_egood(GlobalOptions const& opt, std::string const& monoid_path) {
  PomonoidPtr S      = load_pomonoid(monoid_path);
  EGoodReport report = star_condition(S);

  if (opt.json()) {
    Json doc;
    doc["kind"]  = "report";
    doc["holds"] = report.holds;
    Json details = Json::array();
    for (auto const& rec : report.details) {
      Json entry;
      entry["idempotent"] = S->name(rec.e);
      if (rec.failing_a)
        entry["failing_element"] = S->name(*rec.failing_a);
      else if (rec.minimal_f)
        entry["minimal_f"] = names_of(*rec.minimal_f, S->names());
      Json table = Json::array();
      for (std::size_t a = 0; a < rec.factor_table.size(); ++a)
        table.push_back(Json::array(
            {Json(S->name(a)), names_of(rec.factor_table[a], S->names())}));
      entry["factor_table"] = std::move(table);
      details.push_back(std::move(entry));
    }
    doc["details"] = std::move(details);
    emit(doc);
  } else {
    if (report.details.empty())
      std::cout << "no non-identity idempotents; condition holds trivially\n";
    for (auto const& rec : report.details) {
      std::cout << "idempotent " << S->name(rec.e) << ": ";
      if (rec.failing_a)
        std::cout << "fails (no usable factorisation of " << S->name(*rec.failing_a)
                  << ")\n";
      else
        std::cout << "minimal f = {" << join_names(*rec.minimal_f, S->names()) << "}\n";
    }
    std::cout << "overall: " << (report.holds ? "holds" : "fails") << "\n";
  }
  return report.holds ? 0 : 1;
}

// ---------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------

int cmd_enumerate(GlobalOptions const& opt, std::size_t pomonoid_order,
                  std::string const& monoid_path, std::size_t size,
                  std::string const& side_token, bool print) {
  if (pomonoid_order > 0 && !monoid_path.empty())
    throw std::invalid_argument("--pomonoids and --monoid are mutually exclusive");
  if (pomonoid_order > 0) {
    std::vector<Pomonoid> found = enumerate_pomonoids(pomonoid_order);
    if (opt.json()) {
      Json doc;
      doc["kind"]  = "report";
      doc["count"] = found.size();
      if (print) {
        Json docs = Json::array();
        for (Pomonoid const& S : found) docs.push_back(Json::parse(to_text(S)));
        doc["structures"] = std::move(docs);
      }
      emit(doc);
    } else {
      std::cout << found.size() << " pomonoid(s) of order " << pomonoid_order << "\n";
      if (print)
        for (Pomonoid const& S : found) std::cout << to_text(S);
    }
    return 0;
  }
  if (monoid_path.empty())
    throw std::invalid_argument("need --pomonoids N or --monoid FILE");
  PomonoidPtr S    = load_pomonoid(monoid_path);
  Side        side = side_token == "right" ? Side::right : Side::left;
  if (side_token != "left" && side_token != "right")
    throw std::invalid_argument("--side must be left or right");
  std::vector<SPoset> found = enumerate_sposets(S, size, side);
  if (opt.json()) {
    Json doc;
    doc["kind"]  = "report";
    doc["count"] = found.size();
    if (print) {
      Json docs = Json::array();
      for (SPoset const& B : found) docs.push_back(Json::parse(to_text(B)));
      doc["structures"] = std::move(docs);
    }
    emit(doc);
  } else {
    std::cout << found.size() << " " << side_name(side) << " s-poset(s) of size " << size
              << "\n";
    if (print)
      for (SPoset const& B : found) std::cout << to_text(B);
  }
  return 0;
}

// ---------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------

std::string arrow_text(Arrow const& arrow) {
  return class_id_name(arrow.stronger) + " => " + class_id_name(arrow.weaker);
}

int cmd_audit(GlobalOptions const& opt, std::string const& monoid_path) {
  PomonoidPtr S = load_pomonoid(monoid_path);
  AuditReport report =
      implication_audit(S, opt.max_size, opt.skeleton_bound, opt.jobs);

  if (opt.json()) {
    Json doc;
    doc["kind"]              = "report";
    doc["instances_checked"] = report.instances_checked;
    doc["arrows_audited"]    = audited_arrows().size();
    Json violations          = Json::array();
    for (auto const& [arrow, index] : report.violations) {
      Json entry;
      entry["arrow"]    = arrow_text(arrow);
      entry["instance"] = Json::parse(to_text(report.family[index]));
      violations.push_back(std::move(entry));
    }
    doc["violations"] = std::move(violations);
    Json strictness   = Json::array();
    for (auto const& [arrow, index] : report.strictness_witnesses) {
      Json entry;
      entry["arrow"]    = arrow_text(arrow);
      entry["instance"] = index;
      strictness.push_back(std::move(entry));
    }
    doc["strictness_witnesses"] = std::move(strictness);
    emit(doc);
  } else {
    std::cout << "instances checked: " << report.instances_checked << "\n";
    std::cout << "arrows audited: " << audited_arrows().size() << "\n";
    std::cout << "violations: " << report.violations.size() << "\n";
    for (auto const& [arrow, index] : report.violations)
      std::cout << "  " << arrow_text(arrow) << " fails on instance " << index << "\n";
    std::cout << "strict arrows witnessed: " << report.strictness_witnesses.size() << "\n";
    for (auto const& [arrow, index] : report.strictness_witnesses)
      std::cout << "  " << arrow_text(arrow) << " strict at instance " << index << "\n";
  }
  return report.violations.empty() ? 0 : 1;
}

// ---------------------------------------------------------------------
// search
// ---------------------------------------------------------------------

int cmd_search(GlobalOptions const& opt, std::string const& monoid_path,
               std::string const& stronger, std::string const& weaker) {
  PomonoidPtr S = load_pomonoid(monoid_path);
  auto        hit =
      counterexample_search(S, opt.max_size, class_id_from_name(stronger),
                            class_id_from_name(weaker), opt.skeleton_bound);
  if (hit) {
    if (opt.json()) {
      Json doc;
      doc["kind"]     = "report";
      doc["found"]    = true;
      doc["instance"] = Json::parse(to_text(*hit));
      emit(doc);
    } else {
      std::cout << "found a structure in " << weaker << " but not " << stronger << ":\n"
                << to_text(*hit);
    }
    return 1;
  }
  if (opt.json()) {
    Json doc;
    doc["kind"]  = "report";
    doc["found"] = false;
    emit(doc);
  } else {
    std::cout << "no counterexample up to size " << opt.max_size << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

int cmd_verify(GlobalOptions const& opt, std::string const& left_path,
               std::string const& right_path, std::string const& cert_path) {
  SPoset             A    = load_sposet(left_path);
  SPoset             B    = load_sposet(right_path);
  TossingCertificate cert = parse_certificate(read_text_file(cert_path), A, B);
  bool               ok   = verify_tossing(A, B, cert);
  if (opt.json()) {
    Json doc;
    doc["kind"]     = "report";
    doc["accepted"] = ok;
    emit(doc);
  } else {
    std::cout << (ok ? "certificate accepted" : "certificate rejected") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computational toolkit for finite pomonoids and S-posets"};
  app.require_subcommand(1);

  GlobalOptions opt;
  app.add_option("--max-size", opt.max_size, "Size cap for enumeration-backed commands")
      ->capture_default_str();
  app.add_option("--skeleton-bound", opt.skeleton_bound,
                 "Flat-length cap for bounded flatness checks")
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for sampled runs (reserved)")
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads for the audit")
      ->capture_default_str();

  int exit_code = 0;

  // validate
  std::string validate_path;
  auto* sc_validate = app.add_subcommand("validate", "Validate a structure document");
  sc_validate->add_option("file", validate_path, "Document to validate")->required();
  sc_validate->callback([&]() { exit_code = cmd_validate(opt, validate_path); });

  // tensor
  std::string              tensor_left, tensor_right;
  std::vector<std::string> tensor_certify;
  bool                     tensor_table = false;
  auto* sc_tensor = app.add_subcommand("tensor", "Tensor product of two S-posets");
  sc_tensor->add_option("--left", tensor_left, "Left factor (a right S-poset)")->required();
  sc_tensor->add_option("--right", tensor_right, "Right factor (a left S-poset)")
      ->required();
  sc_tensor
      ->add_option("--certify", tensor_certify,
                   "Two pairs a,b and a',b' to relate with a certificate")
      ->expected(2);
  sc_tensor->add_flag("--table", tensor_table, "Also print the class order matrix");
  sc_tensor->callback([&]() {
    exit_code = cmd_tensor(opt, tensor_left, tensor_right, tensor_certify, tensor_table);
  });

  // check
  std::string check_sposet, check_condition_name;
  auto* sc_check = app.add_subcommand("check", "Check an interpolation condition");
  sc_check->add_option("--sposet", check_sposet, "Left S-poset document")->required();
  sc_check
      ->add_option("--condition", check_condition_name,
                   "P, E, SF, EP, Pw, W, U, Uam, PWP, PWPw, or all")
      ->required();
  sc_check->callback(
      [&]() { exit_code = cmd_check(opt, check_sposet, check_condition_name); });

  // flat
  std::string flat_sposet, flat_variant;
  std::size_t flat_bound     = 0;
  bool        flat_bound_set = false;
  auto*       sc_flat        = app.add_subcommand("flat", "Flatness checks");
  sc_flat->add_option("--sposet", flat_sposet, "Left S-poset document")->required();
  sc_flat
      ->add_option("--variant", flat_variant, "pwf, wf, pwpf, wpf, flat, or poflat")
      ->required();
  sc_flat->add_option("--bound", flat_bound, "Flat-length bound (defaults to global)")
      ->each([&](std::string const&) { flat_bound_set = true; });
  sc_flat->callback([&]() {
    exit_code = cmd_flat(opt, flat_sposet, flat_variant,
                         flat_bound_set ? flat_bound : opt.skeleton_bound);
  });

  // classify
  std::string classify_sposet;
  auto* sc_classify = app.add_subcommand("classify", "Free/projective recognition");
  sc_classify->add_option("--sposet", classify_sposet, "Left S-poset document")
      ->required();
  sc_classify->callback([&]() { exit_code = cmd_classify(opt, classify_sposet); });

  // axioms
  std::string axioms_monoid, axioms_class, axioms_eval;
  bool        axioms_emit    = false;
  std::size_t vacuity_bound  = 4;
  auto*       sc_axioms      = app.add_subcommand("axioms", "Emit or evaluate axiom schemes");
  sc_axioms->add_option("--monoid", axioms_monoid, "Pomonoid document")->required();
  sc_axioms->add_option("--class", axioms_class, "PiS, EP, Pw, PWP, PWPw, or W")
      ->required();
  sc_axioms->add_flag("--emit", axioms_emit, "Print the sentences (default without --eval)");
  sc_axioms->add_option("--eval", axioms_eval, "Evaluate the scheme on this left S-poset");
  sc_axioms->add_option("--vacuity-bound", vacuity_bound,
                        "Witness-poset size bound for vacuity decisions")
      ->capture_default_str();
  sc_axioms->callback([&]() {
    exit_code =
        cmd_axioms(opt, axioms_monoid, axioms_class, axioms_emit, axioms_eval, vacuity_bound);
  });

  // relations
  std::string relations_monoid, relations_s, relations_t, relations_dominating;
  auto* sc_relations =
      app.add_subcommand("relations", "Relation sets of a pair of monoid elements");
  sc_relations->add_option("--monoid", relations_monoid, "Pomonoid document")->required();
  sc_relations->add_option("--s", relations_s, "First element (name or index)")->required();
  sc_relations->add_option("--t", relations_t, "Second element (name or index)")
      ->required();
  sc_relations->add_option("--dominating", relations_dominating,
                           "Also compute a dominating set: pw, pwpw, or w");
  sc_relations->callback([&]() {
    exit_code =
        cmd_relations(opt, relations_monoid, relations_s, relations_t, relations_dominating);
  });

  // egood
  std::string egood_monoid;
  auto* sc_egood = app.add_subcommand("egood", "Factorisation condition over idempotents");
  sc_egood->add_option("--monoid", egood_monoid, "Pomonoid document")->required();
  sc_egood->callback([&]() { exit_code = cmd_egood(opt, egood_monoid); });

  // enumerate
  std::size_t enumerate_order = 0;
  std::string enumerate_monoid, enumerate_side = "left";
  std::size_t enumerate_size  = 2;
  bool        enumerate_print = false;
  auto*       sc_enumerate =
      app.add_subcommand("enumerate", "Enumerate pomonoids or S-posets up to isomorphism");
  sc_enumerate->add_option("--pomonoids", enumerate_order, "Enumerate pomonoids of this order");
  sc_enumerate->add_option("--monoid", enumerate_monoid, "Enumerate S-posets over this pomonoid");
  sc_enumerate->add_option("--size", enumerate_size, "Carrier size for S-posets")
      ->capture_default_str();
  sc_enumerate->add_option("--side", enumerate_side, "left or right")
      ->capture_default_str();
  sc_enumerate->add_flag("--print", enumerate_print, "Print every structure found");
  sc_enumerate->callback([&]() {
    exit_code = cmd_enumerate(opt, enumerate_order, enumerate_monoid, enumerate_size,
                              enumerate_side, enumerate_print);
  });

  // audit
  std::string audit_monoid;
  auto*       sc_audit = app.add_subcommand("audit", "Audit the implication digraph");
  sc_audit->add_option("--monoid", audit_monoid, "Pomonoid document")->required();
  sc_audit->callback([&]() { exit_code = cmd_audit(opt, audit_monoid); });

  // search
  std::string search_monoid, search_stronger, search_weaker;
  auto*       sc_search =
      app.add_subcommand("search", "Search for a structure separating two classes");
  sc_search->add_option("--monoid", search_monoid, "Pomonoid document")->required();
  sc_search->add_option("--stronger", search_stronger, "Class expected to fail")->required();
  sc_search->add_option("--weaker", search_weaker, "Class expected to hold")->required();
  sc_search->callback(
      [&]() { exit_code = cmd_search(opt, search_monoid, search_stronger, search_weaker); });

  // verify
  std::string verify_left, verify_right, verify_cert;
  auto*       sc_verify = app.add_subcommand("verify", "Re-check a tossing certificate");
  sc_verify->add_option("--left", verify_left, "Left factor (a right S-poset)")->required();
  sc_verify->add_option("--right", verify_right, "Right factor (a left S-poset)")
      ->required();
  sc_verify->add_option("--cert", verify_cert, "Certificate document")->required();
  sc_verify->callback(
      [&]() { exit_code = cmd_verify(opt, verify_left, verify_right, verify_cert); });

  // Global flags may appear before or after the subcommand name.
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& err) {
    int parse_code = app.exit(err);
    return parse_code == 0 ? 0 : 2;
  } catch (std::exception const& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return exit_code;
}
