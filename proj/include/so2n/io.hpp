#pragma once

// JSON input and report serialization. Needs nlohmann/json (json.hpp) on the include path.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>

#include "json.hpp"
#include "so2n/builtins.hpp"
#include "so2n/repcheck.hpp"

namespace so2n {

using json = nlohmann::ordered_json;

using AnyRepresentation = std::variant<Representation<Rational>, Representation<QuadExt>, Representation<GaussRat>,
                                       Representation<GaussQuad>>;

struct AlgebraSource {
  std::string name;
  long D = 3;
  std::optional<SignatureForm> signature;
  AnyRepresentation rep;
};

template <ExactField F>
constexpr FieldTag field_of() {
  return field_traits<F>::tag;
}

inline FieldTag field_of(const AnyRepresentation& r) {
  return std::visit([]<class F>(const Representation<F>&) { return field_of<F>(); }, r);
}

// ---- scalars, vectors, matrices ----

template <ExactField F>
json to_json(const F& x) {
  return format_scalar(x);
}

template <ExactField F>
json to_json(const Vector<F>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_scalar(x));
  return a;
}

template <ExactField F>
json to_json(const Matrix<F>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
    a.push_back(row);
  }
  return a;
}

template <ExactField F>
F scalar_from_json(const json& j, long d, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::InputError, where + ": entry must be a string");
  try {
    return parse_scalar<F>(j.get<std::string>(), d);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.message());
  }
}

template <ExactField F>
Vector<F> vector_from_json(const json& j, long d, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, where + ": expected an array");
  Vector<F> v;
  for (std::size_t k = 0; k < j.size(); ++k)
    v.push_back(scalar_from_json<F>(j[k], d, where + "[" + std::to_string(k) + "]"));
  return v;
}

template <ExactField F>
Matrix<F> matrix_from_json(const json& j, std::size_t n, long d, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw Error(ErrorCode::InputError, where + ": expected " + std::to_string(n) + " rows");
  Matrix<F> m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    auto row = vector_from_json<F>(j[r], d, where + "[" + std::to_string(r) + "]");
    if (row.size() != n)
      throw Error(ErrorCode::InputError, where + "[" + std::to_string(r) + "]: expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
  }
  return m;
}

// ---- algebra definitions ----

inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline AlgebraSource algebra_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InputError, "algebra definition must be a JSON object");
  AlgebraSource src;
  src.name = j.value("name", std::string("file"));
  src.D = j.value("D", 3L);
  require(is_squarefree_radicand(src.D), ErrorCode::InputError, "\"D\" must be a square-free integer >= 2");
  auto field = parse_field_name(j.value("field", std::string("rat")));
  if (!j.contains("ambient_dim") || !j["ambient_dim"].is_number_unsigned())
    throw Error(ErrorCode::InputError, "missing or invalid \"ambient_dim\"");
  const auto n = j["ambient_dim"].get<std::size_t>();
  if (j.contains("signature")) {
    const auto& s = j["signature"];
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_unsigned() || !s[1].is_number_unsigned())
      throw Error(ErrorCode::InputError, "\"signature\" must be [p, q]");
    src.signature = eta(s[0].get<std::size_t>(), s[1].get<std::size_t>());
    if (src.signature->dim() != n) throw Error(ErrorCode::InputError, "signature does not match ambient_dim");
  }
  if (!j.contains("generators") || !j["generators"].is_array())
    throw Error(ErrorCode::InputError, "missing \"generators\" array");
  auto load = [&]<class F>() {
    std::vector<Matrix<F>> gens;
    const auto& g = j["generators"];
    for (std::size_t k = 0; k < g.size(); ++k)
      gens.push_back(matrix_from_json<F>(g[k], n, src.D, "generators[" + std::to_string(k) + "]"));
    src.rep = Representation<F>(n, std::move(gens), src.name);
  };
  switch (field) {
    case FieldTag::Rat: load.template operator()<Rational>(); break;
    case FieldTag::Quad: load.template operator()<QuadExt>(); break;
    case FieldTag::GaussRat: load.template operator()<GaussRat>(); break;
    case FieldTag::GaussQuad: load.template operator()<GaussQuad>(); break;
  }
  return src;
}

inline AlgebraSource load_algebra_file(const std::string& path) {
  return algebra_from_json(parse_json_text(read_file(path)));
}

inline AlgebraSource algebra_from_builtin(const std::string& name, const std::map<std::string, long>& params = {}) {
  AlgebraSource src;
  src.name = name;
  auto g = make_builtin(name, params);
  std::visit(
      [&](const auto& alg) {
        src.rep = Representation(alg);
        src.signature = alg.form();
        if (!alg.name().empty()) src.name = alg.name();
      },
      g);
  return src;
}

template <ExactField F>
json algebra_to_json(const Representation<F>& rep, const AlgebraSource& src) {
  json j;
  j["name"] = src.name;
  j["D"] = src.D;
  j["field"] = std::string(field_name(field_of<F>()));
  j["ambient_dim"] = rep.dim();
  if (src.signature) j["signature"] = {src.signature->neg, src.signature->pos};
  json gens = json::array();
  for (const auto& g : rep.generators()) gens.push_back(to_json(g));
  j["generators"] = gens;
  return j;
}

// ---- verdicts ----

template <ExactField F>
json element_to_json(const EnvelopingElement<F>& e) {
  json a = json::array();
  for (const auto& t : e) a.push_back({{"coeff", format_scalar(t.coeff)}, {"word", t.word}});
  return a;
}

template <ExactField F>
EnvelopingElement<F> element_from_json(const json& j, long d, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::InputError, where + ": expected an array of terms");
  EnvelopingElement<F> e;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const auto& t = j[k];
    std::string at = where + "[" + std::to_string(k) + "]";
    if (!t.is_object() || !t.contains("coeff") || !t.contains("word") || !t["word"].is_array())
      throw Error(ErrorCode::InputError, at + ": term needs coeff and word");
    e.push_back({scalar_from_json<F>(t["coeff"], d, at + ".coeff"), t["word"].get<std::vector<std::size_t>>()});
  }
  return e;
}

template <ExactField F>
json verdict_to_json(const IrreducibilityVerdict<F>& v) {
  json j;
  j["verdict"] = irreducibility_name(v.verdict);
  j["attempts"] = v.attempts;
  j["method"] = v.method;
  if (v.verdict == Irreducibility::Reducible) {
    j["witness_dim"] = v.witness.dim();
    json w = json::array();
    for (const auto& b : v.witness.basis()) w.push_back(to_json(b));
    j["witness"] = w;
  } else if (v.certificate) {
    const auto& c = *v.certificate;
    json cj;
    cj["kernel_dim"] = c.kernel_dim;
    cj["theta"] = element_to_json(c.theta);
    json local = json::array();
    for (const auto& b : c.local) local.push_back(element_to_json(b));
    cj["local"] = local;
    json sq = json::array();
    for (const auto& s : c.local_square) sq.push_back(format_scalar(s));
    cj["local_square"] = sq;
    cj["v"] = to_json(c.v);
    cj["w"] = to_json(c.w);
    j["certificate"] = cj;
  }
  return j;
}

template <ExactField F>
IrreducibilityVerdict<F> verdict_from_json(const json& j, std::size_t n, long d) {
  if (!j.is_object() || !j.contains("verdict")) throw Error(ErrorCode::InputError, "verdict object expected");
  IrreducibilityVerdict<F> v;
  auto name = j["verdict"].get<std::string>();
  if (name == "REDUCIBLE") {
    v.verdict = Irreducibility::Reducible;
    std::vector<Vector<F>> basis;
    const auto& w = j.at("witness");
    for (std::size_t k = 0; k < w.size(); ++k) {
      basis.push_back(vector_from_json<F>(w[k], d, "witness[" + std::to_string(k) + "]"));
      if (basis.back().size() != n) throw Error(ErrorCode::InputError, "witness vector has the wrong length");
    }
    v.witness = Subspace<F>::span(n, basis);
  } else if (name == "IRREDUCIBLE") {
    v.verdict = Irreducibility::Irreducible;
    const auto& c = j.at("certificate");
    NortonCertificate<F> cert;
    cert.kernel_dim = c.at("kernel_dim").get<std::size_t>();
    cert.theta = element_from_json<F>(c.at("theta"), d, "theta");
    for (std::size_t k = 0; k < c.at("local").size(); ++k)
      cert.local.push_back(element_from_json<F>(c["local"][k], d, "local[" + std::to_string(k) + "]"));
    cert.local_square = vector_from_json<F>(c.at("local_square"), d, "local_square");
    cert.v = vector_from_json<F>(c.at("v"), d, "v");
    cert.w = vector_from_json<F>(c.at("w"), d, "w");
    v.certificate = cert;
  } else {
    throw Error(ErrorCode::InputError, "unknown verdict '" + name + "'");
  }
  v.attempts = j.value("attempts", std::size_t{0});
  v.method = j.value("method", std::string());
  return v;
}

}  // namespace so2n
