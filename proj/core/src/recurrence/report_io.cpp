#include "ipr/recurrence/report_io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace ipr {

using Json = nlohmann::ordered_json;

namespace {

Json vectors_to_json(const std::vector<Vector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(v.to_string());
  return a;
}

std::vector<Vector> vectors_from_json(const Json& j, const GroundRing& ring, std::size_t dim) {
  std::vector<Vector> out;
  for (const auto& s : j) out.push_back(Vector::parse(ring, dim, s.get<std::string>()));
  return out;
}

Json densities_to_json(const std::vector<Rational>& d) {
  Json o = Json::object();
  for (std::size_t i = 0; i < d.size(); ++i) o[std::to_string(i + 1)] = to_string(d[i]);
  return o;
}

std::vector<Rational> densities_from_json(const Json& j) {
  std::vector<Rational> out(j.size());
  for (const auto& [key, value] : j.items()) {
    auto n = parse_int(key);
    if (n < 1 || static_cast<std::size_t>(n) > out.size()) throw std::invalid_argument("bad density index " + key);
    out[static_cast<std::size_t>(n) - 1] = parse_rational(value.get<std::string>());
  }
  return out;
}

/// Dimension of a rendered vector: top-level commas inside `( )`.
std::size_t rendered_dim(std::string_view text) {
  if (!text.starts_with("(")) return 1;
  std::size_t dim = 1;
  int depth = 0;
  for (char c : text.substr(1)) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) ++dim;
  }
  return dim;
}

IpStarVerdictKind verdict_from_string(std::string_view s) {
  for (auto k : {IpStarVerdictKind::holds, IpStarVerdictKind::fails, IpStarVerdictKind::window_limited,
                 IpStarVerdictKind::budget_exceeded})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

}  // namespace

std::string report_to_json(const RecurrenceReport& rep, std::string_view generated) {
  Json j;
  j["generated"] = std::string(generated);
  j["system"] = {{"id", rep.system_id},
                 {"backend", std::string(to_string(rep.backend))},
                 {"ring", rep.ring},
                 {"outside_theorem_hypotheses", rep.outside_hypotheses},
                 {"label", rep.label}};
  j["event"] = rep.event;
  j["phi"] = rep.phi;
  j["epsilon"] = to_string(rep.epsilon);
  j["mu_B"] = to_string(rep.mu_b);
  j["threshold"] = to_string(rep.threshold);
  j["window"] = rep.window.to_string();
  j["domain_dim"] = rep.domain_dim;
  j["R"] = vectors_to_json(rep.r.elements());
  Json table = Json::array();
  for (const auto& row : rep.rows)
    table.push_back({{"u", row.u.to_string()}, {"w", row.w.to_string()}, {"corr", to_string(row.corr)}, {"in_R", row.in_r}});
  j["table"] = std::move(table);
  Json cls = Json::object();
  Json witness = nullptr;
  for (const auto& [r, v] : rep.classification) {
    cls[std::to_string(r)] = {{"verdict", std::string(to_string(v.kind))},
                              {"witness", vectors_to_json(v.witness)}};
    if (v.kind == IpStarVerdictKind::fails && witness.is_null())
      witness = {{"r", r}, {"generators", vectors_to_json(v.witness)}};
  }
  j["classification"] = std::move(cls);
  j["witness"] = std::move(witness);
  j["exceptional_density"] = densities_to_json(rep.exceptional_density);
  Json bounds = {{"mu_B_squared", to_string(Rational(rep.mu_b * rep.mu_b))}};
  bounds["khintchine"] = rep.khintchine ? Json(to_string(*rep.khintchine)) : Json(nullptr);
  j["bounds"] = std::move(bounds);
  if (rep.pipeline) {
    const auto& p = *rep.pipeline;
    Json rows = Json::array();
    for (const auto& row : p.rows)
      rows.push_back({{"metric2", to_string(row.metric2)},
                      {"main", to_string(row.main)},
                      {"cross", to_string(row.cross)},
                      {"in_A", row.in_a},
                      {"in_E", row.in_e},
                      {"in_R", row.in_r},
                      {"chain_ok", row.chain_ok}});
    j["pipeline"] = {{"A", vectors_to_json(p.a.elements())},
                     {"E", vectors_to_json(p.e.elements())},
                     {"R", vectors_to_json(p.r.elements())},
                     {"chain_ok", p.chain_ok},
                     {"khintchine", to_string(p.khintchine)},
                     {"e_density", densities_to_json(p.e_density)},
                     {"rows", std::move(rows)}};
  } else {
    j["pipeline"] = nullptr;
  }
  if (rep.syndeticity) {
    const auto& s = *rep.syndeticity;
    j["syndeticity"] = {{"window_limited", s.window_limited},
                        {"max_gap", s.max_gap},
                        {"translate_cover", s.translate_cover ? Json(*s.translate_cover) : Json(nullptr)}};
  } else {
    j["syndeticity"] = nullptr;
  }
  return j.dump(2) + "\n";
}

RecurrenceReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    RecurrenceReport rep;
    const auto& sys = j.at("system");
    rep.system_id = sys.at("id").get<std::string>();
    rep.backend = parse_backend(sys.at("backend").get<std::string>());
    rep.ring = sys.at("ring").get<std::string>();
    rep.outside_hypotheses = sys.at("outside_theorem_hypotheses").get<bool>();
    rep.label = sys.at("label").get<std::string>();
    const auto ring = GroundRing::parse(rep.ring);
    rep.event = j.at("event").get<std::string>();
    rep.phi = j.at("phi").get<std::string>();
    rep.epsilon = parse_rational(j.at("epsilon").get<std::string>());
    rep.mu_b = parse_rational(j.at("mu_B").get<std::string>());
    rep.threshold = parse_rational(j.at("threshold").get<std::string>());
    rep.window = WindowSpec::parse(ring, j.at("window").get<std::string>());
    rep.domain_dim = j.at("domain_dim").get<std::size_t>();
    rep.r = ElementSet<Vector>(vectors_from_json(j.at("R"), ring, rep.domain_dim));
    std::vector<Vector> all;
    for (const auto& row : j.at("table")) {
      RecurrenceRow r{Vector::parse(ring, rep.domain_dim, row.at("u").get<std::string>()),
                      Vector::zero(ring, 1), parse_rational(row.at("corr").get<std::string>()),
                      row.at("in_R").get<bool>()};
      const auto w_text = row.at("w").get<std::string>();
      r.w = Vector::parse(ring, rendered_dim(w_text), w_text);
      all.push_back(r.u);
      rep.rows.push_back(std::move(r));
    }
    rep.ambient.elements = ElementSet<Vector>(std::move(all));
    rep.ambient.complete = rep.window.complete();
    rep.ambient.description = rep.window.to_string();
    for (const auto& [key, v] : j.at("classification").items()) {
      IpStarVerdict<Vector> verdict;
      verdict.kind = verdict_from_string(v.at("verdict").get<std::string>());
      verdict.witness = vectors_from_json(v.at("witness"), ring, rep.domain_dim);
      rep.classification.emplace(static_cast<unsigned>(parse_int(key)), std::move(verdict));
    }
    rep.exceptional_density = densities_from_json(j.at("exceptional_density"));
    if (const auto& k = j.at("bounds").at("khintchine"); !k.is_null()) rep.khintchine = parse_rational(k.get<std::string>());
    if (const auto& p = j.at("pipeline"); !p.is_null()) {
      PipelineReport pr;
      pr.a = ElementSet<Vector>(vectors_from_json(p.at("A"), ring, rep.domain_dim));
      pr.e = ElementSet<Vector>(vectors_from_json(p.at("E"), ring, rep.domain_dim));
      pr.r = ElementSet<Vector>(vectors_from_json(p.at("R"), ring, rep.domain_dim));
      pr.chain_ok = p.at("chain_ok").get<bool>();
      pr.khintchine = parse_rational(p.at("khintchine").get<std::string>());
      pr.e_density = densities_from_json(p.at("e_density"));
      for (const auto& row : p.at("rows")) {
        PipelineRow r;
        r.metric2 = parse_rational(row.at("metric2").get<std::string>());
        r.main = parse_rational(row.at("main").get<std::string>());
        r.cross = parse_rational(row.at("cross").get<std::string>());
        r.in_a = row.at("in_A").get<bool>();
        r.in_e = row.at("in_E").get<bool>();
        r.in_r = row.at("in_R").get<bool>();
        r.chain_ok = row.at("chain_ok").get<bool>();
        pr.rows.push_back(std::move(r));
      }
      rep.pipeline = std::move(pr);
    }
    if (const auto& s = j.at("syndeticity"); !s.is_null()) {
      SyndeticityReport sr;
      sr.window_limited = s.at("window_limited").get<bool>();
      sr.max_gap = s.at("max_gap").get<std::size_t>();
      if (!s.at("translate_cover").is_null()) sr.translate_cover = s.at("translate_cover").get<std::size_t>();
      rep.syndeticity = sr;
    }
    return rep;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

std::string report_to_csv(const RecurrenceReport& rep, std::string_view generated) {
  std::ostringstream out;
  out << "# generated " << generated << "\n";
  out << "w,mu_B,corr,threshold,in_R\n";
  for (const auto& row : rep.rows) {
    std::string u = row.u.to_string();
    if (u.find(',') != std::string::npos) u = "\"" + u + "\"";
    out << u << ',' << to_string(rep.mu_b) << ',' << to_string(row.corr) << ',' << to_string(rep.threshold) << ','
        << (row.in_r ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace ipr
