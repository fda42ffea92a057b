#pragma once

#include <set>
#include <string>
#include <vector>

#include "so2n/forms.hpp"
#include "so2n/io.hpp"
#include "so2n/symspace.hpp"

namespace so2n {

inline constexpr const char* tool_version = "1.0.0";

enum class Task { Closure, Commutant, Irreducibility, Type, Forms, Center, Fixer, Transitivity };

inline const std::vector<Task>& all_tasks() {
  static const std::vector<Task> t{Task::Closure, Task::Commutant, Task::Irreducibility, Task::Type,
                                   Task::Forms,   Task::Center,    Task::Fixer,          Task::Transitivity};
  return t;
}

inline const char* task_name(Task t) {
  switch (t) {
    case Task::Closure: return "CLOSURE";
    case Task::Commutant: return "COMMUTANT";
    case Task::Irreducibility: return "IRREDUCIBILITY";
    case Task::Type: return "TYPE";
    case Task::Forms: return "FORMS";
    case Task::Center: return "CENTER";
    case Task::Fixer: return "FIXER";
    case Task::Transitivity: return "TRANSITIVITY";
  }
  return "?";
}

inline Task parse_task(const std::string& s) {
  for (auto t : all_tasks())
    if (s == task_name(t)) return t;
  throw Error(ErrorCode::InputError, "unknown task '" + s + "'");
}

struct AnalysisRequest {
  std::string source;  // "builtin:NAME" or a file path, echoed in the report
  std::set<Task> tasks;
  std::uint64_t seed = default_seed;
  std::size_t budget = default_budget;
};

// Outcome of a run: the report plus whether some verdict had to be withheld.
struct AnalysisOutcome {
  json report;
  bool withheld = false;
};

namespace detail {

inline json signature_json(const Signature& s) { return {{"neg", s.neg}, {"pos", s.pos}, {"null", s.null}}; }

template <ExactField F>
json forms_json(const FormSpace<F>& fs) {
  json j;
  j["dim"] = fs.dim();
  json b = json::array();
  for (std::size_t k = 0; k < fs.basis.size(); ++k) {
    json e;
    e["matrix"] = to_json(fs.basis[k]);
    if (k < fs.signatures.size()) e["signature"] = signature_json(fs.signatures[k]);
    b.push_back(e);
  }
  j["basis"] = b;
  return j;
}

template <ExactField F>
std::size_t ambient_n(const Representation<F>& rep, const AlgebraSource& src) {
  if (src.signature) {
    require(src.signature->neg == 2, ErrorCode::BadParams, "needs an ambient form of signature (2,n)");
    return src.signature->pos;
  }
  require(rep.dim() >= 3, ErrorCode::BadParams, "needs ambient dimension n+2 >= 3");
  return rep.dim() - 2;
}

template <ExactField F>
class Analyzer {
 public:
  Analyzer(const Representation<F>& rep, const AlgebraSource& src, const AnalysisRequest& req)
      : rep_(rep), src_(src), req_(req) {}

  json run(Task t) {
    try {
      switch (t) {
        case Task::Closure: return closure();
        case Task::Commutant: return commutant_task();
        case Task::Irreducibility: return irreducibility();
        case Task::Type: return type();
        case Task::Forms: return forms();
        case Task::Center: return center_task();
        case Task::Fixer: return fixer();
        case Task::Transitivity: return transitivity();
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AnalysisBudgetExceeded) withheld = true;
      json j;
      j["status"] = e.code() == ErrorCode::AnalysisBudgetExceeded ? "WITHHELD" : "NOT_APPLICABLE";
      j["error"] = std::string(code_name(e.code()));
      j["message"] = e.message();
      return j;
    }
    return {};
  }

  bool withheld = false;

 private:
  const LieAlgebra<F>& algebra() {
    if (!alg_) alg_ = bracket_closure(rep_.generators(), rep_.dim() * rep_.dim(), src_.name);
    return *alg_;
  }

  const IrreducibilityVerdict<F>& verdict() {
    if (!verdict_) verdict_ = decide_irreducibility(rep_, req_.seed, req_.budget);
    return *verdict_;
  }

  json closure() {
    const auto& g = algebra();
    json j;
    j["dim"] = g.dim();
    j["generators"] = rep_.generators().size();
    if (src_.signature) j["orthogonal"] = check_orthogonality(g, *src_.signature);
    return j;
  }

  json commutant_task() {
    auto c = commutant(rep_);
    json j;
    j["dim"] = c.dim();
    json b = json::array();
    for (const auto& m : c.basis()) b.push_back(to_json(m));
    j["basis"] = b;
    return j;
  }

  json irreducibility() {
    const auto& v = verdict();
    json j = verdict_to_json(v);
    j["verified"] = verify_verdict(rep_, v);
    return j;
  }

  json type() {
    json j;
    if constexpr (OrderedField<F>) {
      auto t = classify_type(rep_, verdict(), req_.seed, req_.budget);
      j["type"] = rep_type_name(t.type);
      j["commutant_dim"] = t.commutant_dim;
      j["complexification_irreducible"] = t.complexification_irreducible;
      j["cross_check_agrees"] = t.cross_check_agrees;
    } else {
      auto c = conjugation_analysis(rep_, req_.seed, req_.budget);
      j["conjugation"] = conjugation_name(c.kind);
      if (c.c) {
        j["lambda"] = format_scalar(c.lambda);
        j["normalized"] = c.normalized;
        j["matrix"] = to_json(c.c->m);
      }
    }
    return j;
  }

  json forms() {
    json j;
    j["symmetric"] = forms_json(invariant_forms(rep_, Symmetry::Symmetric));
    j["antisymmetric"] = forms_json(invariant_forms(rep_, Symmetry::Antisymmetric));
    if constexpr (GaussianField<F>) j["hermitian"] = forms_json(invariant_forms(rep_, Symmetry::Hermitian));
    return j;
  }

  json center_task() {
    auto z = center(algebra());
    json j;
    j["dim"] = z.dim();
    json b = json::array();
    for (const auto& m : z.basis()) b.push_back(to_json(m));
    j["basis"] = b;
    return j;
  }

  json fixer() {
    json j;
    if constexpr (OrderedField<F>) {
      auto f = fixer_algebra(algebra(), pi0_plane<F>(ambient_n(rep_, src_)));
      j["base"] = "PI0";
      j["dim"] = f.dim();
      json b = json::array();
      for (const auto& m : f.basis()) b.push_back(to_json(m));
      j["basis"] = b;
    } else {
      throw Error(ErrorCode::FieldMismatch, "fixer algebras need a real field");
    }
    return j;
  }

  json transitivity() {
    json j;
    if constexpr (OrderedField<F>) {
      std::size_t n = ambient_n(rep_, src_);
      Vector<F> v(n + 2, F(0));
      v[0] = F(1);
      v[2] = F(1);
      auto p = parabolic_algebra<F>(2, n, v);
      auto ambient = builtin::so<F>(2, n);
      j["light_like"] = to_json(v);
      j["parabolic_dim"] = p.dim();
      j["ambient_dim"] = ambient.dim();
      j["locally_transitive"] = local_transitivity(algebra(), p, ambient);
    } else {
      throw Error(ErrorCode::FieldMismatch, "transitivity needs a real field");
    }
    return j;
  }

  const Representation<F>& rep_;
  const AlgebraSource& src_;
  const AnalysisRequest& req_;
  std::optional<LieAlgebra<F>> alg_;
  std::optional<IrreducibilityVerdict<F>> verdict_;
};

}  // namespace detail

inline AnalysisOutcome analyze(const AlgebraSource& src, const AnalysisRequest& req) {
  require(!req.tasks.empty(), ErrorCode::InputError, "at least one task is required");
  AnalysisOutcome out;
  json& r = out.report;
  r["tool"] = "so2n";
  r["version"] = tool_version;
  r["exact"] = true;
  json tasks = json::array();
  for (auto t : all_tasks())
    if (req.tasks.count(t)) tasks.push_back(task_name(t));
  r["request"] = {{"source", req.source}, {"tasks", tasks}, {"seed", req.seed}, {"budget", req.budget}};
  std::visit(
      [&](const auto& rep) {
        r["algebra"] = algebra_to_json(rep, src);
        detail::Analyzer a(rep, src, req);
        json results;
        for (auto t : all_tasks())
          if (req.tasks.count(t)) results[task_name(t)] = a.run(t);
        r["results"] = results;
        out.withheld = a.withheld;
      },
      src.rep);
  return out;
}

// Re-verifies the irreducibility verdict embedded in a report against the report's own generators.
inline bool recheck_report(const json& report) {
  const auto& alg = report.at("algebra");
  auto src = algebra_from_json(alg);
  const auto& v = report.at("results").at("IRREDUCIBILITY");
  return std::visit(
      [&]<class F>(const Representation<F>& rep) {
        return verify_verdict(rep, verdict_from_json<F>(v, rep.dim(), src.D));
      },
      src.rep);
}

}  // namespace so2n
