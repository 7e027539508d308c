#include "cli/commands.hpp"

#include "cli/certificate.hpp"
#include "ipr/dynamics/folner.hpp"
#include "ipr/recurrence/report_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace ipr::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

/// Raised to leave a command with exit status 2 after the checkpoint is saved.
struct BudgetStop {
  std::string message;
};

class Session {
 public:
  Session(const ExperimentConfig& config, const RunOptions& options, std::ostream& out)
      : config_(config), options_(options), out_(out) {
    search_.workers = config.workers();
    if (auto m = config.max_candidates()) search_.max_candidates = *m;
    else if (options.default_budget) search_.max_candidates = *options.default_budget;
    if (auto w = config.wall_clock_seconds()) {
      const double secs = w->get_d();
      search_.wall_clock =
          std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(secs));
    }
    if (options.resume_path) {
      std::ifstream in(*options.resume_path);
      if (!in) throw std::invalid_argument("cannot read checkpoint " + *options.resume_path);
      std::stringstream ss;
      ss << in.rdbuf();
      auto ck = checkpoint_from_text(ss.str());
      if (ck.hash != config.hash() || ck.command != config.command)
        throw std::invalid_argument("checkpoint " + *options.resume_path + " belongs to config " + ck.hash +
                                    ", not " + config.hash() + "; refusing to resume a modified experiment");
      resume_ = std::move(ck);
    }
  }

  const ExperimentConfig& config() const { return config_; }
  const SearchOptions& search() const { return search_; }
  const std::optional<Checkpoint>& resume() const { return resume_; }
  std::ostream& out() { return out_; }

  std::string path(const std::string& p) const {
    if (p.empty() || fs::path(p).is_absolute() || options_.base_dir.empty()) return p;
    return (fs::path(options_.base_dir) / p).string();
  }

  std::string checkpoint_path() const { return path(config_.checkpoint_dir()) + "/" + config_.hash() + ".ckpt"; }

  void save_checkpoint(unsigned stage, const std::vector<std::uint8_t>& resume) const {
    fs::create_directories(path(config_.checkpoint_dir()));
    const std::string file = checkpoint_path();
    const std::string tmp = file + ".tmp";
    {
      std::ofstream o(tmp);
      o << checkpoint_to_text({config_.hash(), config_.command, stage, resume});
    }
    fs::rename(tmp, file);
  }

  [[noreturn]] void stop(unsigned stage, const std::vector<std::uint8_t>& resume, const std::string& what) const {
    save_checkpoint(stage, resume);
    throw BudgetStop{what + "; checkpoint written to " + checkpoint_path()};
  }

  std::string header() const { return "# generated " + options_.timestamp + "\n"; }

  /// Primary artifact plus optional certificates.
  void emit(const std::string& primary, const std::string& certificates) {
    const auto target = path(config_.output_path());
    if (target.empty()) {
      out_ << primary;
      if (!certificates.empty()) out_ << certificates;
      return;
    }
    if (auto parent = fs::path(target).parent_path(); !parent.empty()) fs::create_directories(parent);
    std::ofstream(target) << primary;
    out_ << "wrote " << target << "\n";
    if (!certificates.empty()) {
      std::ofstream(target + ".cert") << header() << certificates;
      out_ << "wrote " << target << ".cert\n";
    }
  }

  void emit_certificates(const std::vector<Certificate>& certs) {
    std::string text = header();
    for (std::size_t i = 0; i < certs.size(); ++i) text += render(certs[i], i == 0 || certs[i].type != certs[i - 1].type);
    emit(text, "");
  }

 private:
  const ExperimentConfig& config_;
  const RunOptions& options_;
  std::ostream& out_;
  SearchOptions search_;
  std::optional<Checkpoint> resume_;
};

unsigned as_unsigned(const ExperimentConfig& c, const std::string& key) {
  const auto v = c.integer(key);
  if (v > 0xffff) throw std::invalid_argument("'" + key + "' is too large");
  return static_cast<unsigned>(v);
}

int run_hj(Session& s) {
  const auto& c = s.config();
  const unsigned k = as_unsigned(c, "k"), t = as_unsigned(c, "t"), m_max = as_unsigned(c, "m_max");
  HjNumberOptions opts;
  opts.search = s.search();
  opts.exhaustive_limit = static_cast<std::uint64_t>(c.integer("exhaustive_limit"));
  opts.record_refutation = true;
  if (s.resume()) {
    opts.m_start = s.resume()->stage;
    opts.resume_from = s.resume()->resume;
  }
  unsigned current = opts.m_start;
  opts.on_checkpoint = [&](const Coloring& at) { s.save_checkpoint(current, at); };
  HjNumberResult res;
  res.k = k;
  res.t = t;
  res.m_max = m_max;
  for (unsigned m = opts.m_start; m <= m_max; ++m) {
    current = m;
    HjNumberOptions step_opts = opts;
    if (m != opts.m_start) step_opts.resume_from.clear();
    auto step = hj_step(k, t, m, step_opts);
    auto& o = s.out();
    o << "m=" << m << " " << to_string(step.method) << ": ";
    if (step.status == SearchStatus::found) o << "coloring without monochromatic line " << coloring_to_string(step.coloring, t);
    else if (step.status == SearchStatus::absent) o << "every " << t << "-coloring has a monochromatic line";
    else o << "budget exceeded";
    o << "\n";
    const auto status = step.status;
    res.steps.push_back(std::move(step));
    if (status == SearchStatus::absent) {
      res.value = m;
      break;
    }
    if (status == SearchStatus::budget_exceeded) {
      res.budget_exceeded = true;
      break;
    }
  }
  const std::string name = "HJ(" + std::to_string(k) + "," + std::to_string(t) + ")";
  if (res.value) s.out() << name << " = " << *res.value << "\n";
  else if (!res.budget_exceeded) s.out() << name << " > " << m_max << "\n";
  s.emit_certificates(hj_certificates(res));
  if (res.budget_exceeded) s.stop(current, res.steps.back().resume_point, name + ": budget exceeded at m=" + std::to_string(current));
  return kExitOk;
}

int run_fu(Session& s) {
  const auto& c = s.config();
  const unsigned sv = as_unsigned(c, "s"), k = as_unsigned(c, "k");
  if (k > 255) throw std::invalid_argument("k must be at most 255");
  unsigned r_start = c.has("r") ? as_unsigned(c, "r") : as_unsigned(c, "r_start");
  const unsigned r_end = c.has("r") ? r_start : as_unsigned(c, "r_max");
  Coloring resume_from;
  if (s.resume()) {
    r_start = s.resume()->stage;
    resume_from = s.resume()->resume;
  }
  unsigned current = r_start;
  ColoringSearchRequest req;
  req.options = s.search();
  req.record_refutation = true;
  req.on_checkpoint = [&](const Coloring& at) { s.save_checkpoint(current, at); };
  std::vector<Certificate> certs;
  std::optional<unsigned> minimal;
  for (unsigned r = r_start; r <= r_end; ++r) {
    current = r;
    req.resume_from = r == r_start ? resume_from : Coloring{};
    req.record_refutation = req.resume_from.empty();
    auto res = fu_ramsey_check(r, sv, k, req);
    auto& o = s.out();
    o << "fu-ramsey r=" << r << " s=" << sv << " k=" << k << ": ";
    if (res.verdict == FuVerdict::counterexample) o << "counterexample " << coloring_to_string(res.coloring, k) << "\n";
    else if (res.verdict == FuVerdict::all_colorings_ok) o << "every coloring has a monochromatic FU_s family\n";
    else o << "budget exceeded\n";
    if (res.verdict == FuVerdict::budget_exceeded) {
      s.emit_certificates(certs);
      s.stop(r, res.resume_point, "fu-ramsey: budget exceeded at r=" + std::to_string(r));
    }
    certs.push_back(fu_certificate(res));
    if (res.verdict == FuVerdict::all_colorings_ok) {
      minimal = r;
      break;
    }
  }
  if (!c.has("r")) {
    if (minimal) s.out() << "minimal r for s=" << sv << " k=" << k << ": " << *minimal << "\n";
    else s.out() << "minimal r for s=" << sv << " k=" << k << ": > " << r_end << "\n";
  }
  s.emit_certificates(certs);
  return kExitOk;
}

int run_fk(Session& s) {
  const auto& c = s.config();
  const unsigned r = as_unsigned(c, "r"), n = as_unsigned(c, "n");
  auto res = fk_density_experiment(r, n, s.search());
  if (res.status == SearchStatus::budget_exceeded) s.stop(0, {}, "fk-density: budget exceeded (restarts from scratch)");
  s.out() << "fk-density r=" << r << " N=" << n << ": " << to_string(res.value) << "\n";
  if (res.odd_certificate) s.out() << "odd numbers: density " << to_string(*res.odd_certificate) << "\n";
  s.emit_certificates({fk_certificate(res)});
  return kExitOk;
}

int run_example_a(Session& s) {
  const unsigned r_max = as_unsigned(s.config(), "r_max");
  const auto a = example_a(r_max);
  const auto checks = check_example_a(a, s.search());
  auto& o = s.out();
  o << "example-a r_max=" << r_max << "\n";
  o << "blocks are FS of r copies: " << (checks.blocks_are_fs ? "yes" : "no") << "\n";
  o << "cross-block triples leave A: " << (checks.cross_block_fails ? "yes" : "no") << " (" << checks.cross_block_tuples
    << " triples)\n";
  o << "depth per block:";
  for (auto d : checks.depth) o << ' ' << d;
  o << (checks.depth_is_r ? " (equals r)" : " (differs from r)") << "\n";
  for (const auto& f : checks.failures) o << "failure: " << f << "\n";
  s.emit_certificates({example_a_certificate(a, checks)});
  return kExitOk;
}

struct Dynamics {
  SystemFile file;
  EventSet event;
  std::size_t dim = 1;
  DynamicsContext ctx;
};

Dynamics load(Session& s) {
  const auto& c = s.config();
  auto file = load_system(s.path(c.text("system")));
  EventSet ev = PointEvent{};
  if (c.has("event")) {
    ev = parse_event(file.system, c.text("event"));
  } else {
    if (file.events.empty()) throw std::invalid_argument("system file defines no event and the config sets none");
    ev = file.events.front();
  }
  Dynamics d{std::move(file), std::move(ev), static_cast<std::size_t>(c.integer("domain_dim")), {}};
  d.ctx.system_text = system_to_text(d.file);
  d.ctx.event = event_to_string(d.event);
  if (c.has("phi")) d.ctx.phi = c.text("phi");
  if (c.has("epsilon")) d.ctx.epsilon = c.rational("epsilon");
  if (c.has("window")) d.ctx.window = c.text("window");
  d.ctx.domain_dim = d.dim;
  return d;
}

std::string timestamp_of(const Session& s) {
  auto h = s.header();
  return h.substr(12, h.size() - 13);
}

void print_header(Session& s, const RecurrenceReport& rep) {
  auto& o = s.out();
  o << "system: " << rep.system_id << " (" << rep.ring << ", " << rep.label << ")\n";
  o << "B = " << rep.event << ", phi = " << rep.phi << ", epsilon = " << to_string(rep.epsilon) << "\n";
  o << "mu(B) = " << to_string(rep.mu_b) << ", threshold = " << to_string(rep.threshold) << "\n";
  o << "|R| = " << rep.r.size() << " of " << rep.rows.size() << " window elements\n";
}

int run_recurrence(Session& s, bool classify) {
  const auto& c = s.config();
  auto d = load(s);
  const auto& sys = d.file.system;
  const auto phi = PolynomialMap::parse(sys.ring(), d.dim, sys.group_dim(), c.text("phi"));
  const auto window = WindowSpec::parse(sys.ring(), c.text("window"));
  const Rational eps = c.rational("epsilon");
  RecurrenceReport rep;
  if (classify) {
    rep = full_report(sys, d.event, phi, eps, window, as_unsigned(c, "r_max"), s.search());
  } else {
    rep = recurrence_set(sys, d.event, phi, eps, window, s.search());
    rep.khintchine = khintchine_bound(sys, d.event);
    rep.pipeline = theorem1_pipeline(sys, d.event, phi, eps, window, s.search());
    rep.syndeticity = syndeticity_check(rep);
  }
  print_header(s, rep);
  std::vector<Certificate> certs;
  bool budget = false;
  for (const auto& [r, v] : rep.classification) {
    s.out() << "IP*_" << r << ": " << to_string(v.kind);
    if (v.kind == IpStarVerdictKind::fails) {
      s.out() << " witness " << vectors_to_string(v.witness);
      certs.push_back(ipstar_certificate(d.ctx, r, v.witness));
    }
    if (v.kind == IpStarVerdictKind::budget_exceeded) budget = true;
    s.out() << "\n";
  }
  if (rep.pipeline) s.out() << "pipeline chain: " << (rep.pipeline->chain_ok ? "ok" : "broken") << "\n";
  std::string cert_text;
  for (std::size_t i = 0; i < certs.size(); ++i) cert_text += render(certs[i], i == 0);
  const std::string ts = timestamp_of(s);
  s.emit(c.format() == "csv" ? report_to_csv(rep, ts) : report_to_json(rep, ts), cert_text);
  if (budget) s.stop(0, {}, "classification: budget exceeded (restarts from scratch)");
  return kExitOk;
}

int run_search(Session& s) {
  const auto& c = s.config();
  auto d = load(s);
  const auto& sys = d.file.system;
  std::vector<MonomialMap> ms;
  const std::string list = c.text("monomial");
  std::size_t pos = 0;
  while (true) {
    const auto semi = list.find(';', pos);
    ms.push_back(parse_monomial(sys.ring(), d.dim, list.substr(pos, semi == std::string::npos ? semi : semi - pos)));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  const auto gens = parse_vectors(sys.ring(), d.dim, c.text("gens"));
  const Rational eps = c.rational("epsilon");
  const auto x = indicator(sys, d.event);
  auto res = ms.size() == 1 && sys.group_dim() == 1
                 ? isometric_recurrence_search(sys, x, ms.front(), eps, gens, s.search())
                 : commuting_recurrence_search(sys, x, ms, eps, gens, s.search());
  if (res.status == SearchStatus::budget_exceeded) s.stop(0, {}, "search: budget exceeded (restarts from scratch)");
  auto& o = s.out();
  o << "search d=" << res.d << " r=" << res.r << " colors=" << res.colors << ": " << to_string(res.status) << "\n";
  if (res.sufficient_length) o << "sufficient generator count: " << *res.sufficient_length << "\n";
  if (res.proof_bound) o << "Hales-Jewett bound HJ(2^d, colors): " << *res.proof_bound << "\n";
  std::vector<Certificate> certs;
  if (res.status == SearchStatus::found) {
    o << "config " << (res.config ? res.config->to_string() : "-") << "\n";
    o << "gamma " << mask_to_string(res.gamma) << ", u_gamma " << (res.u_gamma ? res.u_gamma->to_string() : "-")
      << ", shift " << (res.shift ? res.shift->to_string() : "-") << "\n";
    o << "distance^2 " << to_string(res.distance2) << (res.verified ? " < " : " >= ") << "epsilon^2 "
      << to_string(Rational(eps * eps)) << "\n";
    if (res.verified) {
      DynamicsContext ctx = d.ctx;
      certs.push_back(isometric_certificate(ctx, ms, gens, res));
    }
  }
  s.emit_certificates(certs);
  return kExitOk;
}

Json densities(const std::vector<Rational>& v) {
  Json j = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) j[std::to_string(i + 1)] = to_string(v[i]);
  return j;
}

int run_density(Session& s) {
  const auto& c = s.config();
  auto d = load(s);
  const auto& sys = d.file.system;
  const auto phi = PolynomialMap::parse(sys.ring(), d.dim, sys.group_dim(), c.text("phi"));
  const unsigned n = as_unsigned(c, "n");
  const auto spec = FolnerSpec::canonical(sys.ring(), d.dim);
  std::vector<Rational> probe;
  for (unsigned k = 1; k <= n; ++k) probe.push_back(dlim_probe(sys, d.event, phi, spec, k));
  Json j;
  j["generated"] = timestamp_of(s);
  j["system"] = sys.id();
  j["event"] = d.ctx.event;
  j["phi"] = phi.to_string();
  j["dlim_probe"] = densities(probe);
  s.out() << "dlim_probe N=1.." << n << ":";
  for (const auto& p : probe) s.out() << ' ' << to_string(p);
  s.out() << "\n";
  if (c.has("epsilon")) {
    const Rational mu = measure(sys, d.event);
    const Rational threshold = mu * mu - c.rational("epsilon");
    auto dens = folner_density(
        [&](const Vector& u) { return !(correlation(sys, d.event, phi(u)) > threshold); }, spec, n);
    j["epsilon"] = to_string(c.rational("epsilon"));
    j["exceptional_density"] = densities(dens.sequence);
    s.out() << "exceptional density N=1.." << n << ":";
    for (const auto& p : dens.sequence) s.out() << ' ' << to_string(p);
    s.out() << "\n";
  }
  s.emit(j.dump(2) + "\n", "");
  return kExitOk;
}

int run_probe(Session& s) {
  const auto& c = s.config();
  auto d = load(s);
  const auto& sys = d.file.system;
  if (d.dim != 1) throw std::invalid_argument("probe needs domain_dim = 1");
  const auto phi = PolynomialMap::parse(sys.ring(), 1, sys.group_dim(), c.text("phi"));
  const auto window = WindowSpec::parse(sys.ring(), c.text("window"));
  auto rep = recurrence_set(sys, d.event, phi, c.rational("epsilon"), window, s.search());
  std::vector<Scalar> gens;
  for (const auto& v : parse_vectors(sys.ring(), 1, c.text("gens"))) gens.push_back(v[0]);
  auto probe = fp_probe(rep, gens);
  print_header(s, rep);
  s.out() << "FP(gens) meets R: " << (probe.intersects ? "yes" : "no") << " (" << probe.hits.size() << " hits, "
          << probe.outside_window << " products outside the window)\n";
  Json j;
  j["generated"] = timestamp_of(s);
  j["system"] = sys.id();
  j["event"] = d.ctx.event;
  j["phi"] = phi.to_string();
  j["epsilon"] = to_string(c.rational("epsilon"));
  j["window"] = window.to_string();
  j["R"] = Json::array();
  for (const auto& u : rep.r.elements()) j["R"].push_back(u.to_string());
  j["products"] = Json::array();
  for (const auto& p : probe.products) j["products"].push_back(p.to_string());
  j["hits"] = Json::array();
  for (const auto& p : probe.hits) j["hits"].push_back(p.to_string());
  j["outside_window"] = probe.outside_window;
  j["intersects"] = probe.intersects;
  s.emit(j.dump(2) + "\n", "");
  return kExitOk;
}

}  // namespace

void write_error_record(std::ostream& err, std::string_view kind, const std::vector<ErrorItem>& items) {
  Json msgs = Json::array();
  for (const auto& i : items) {
    Json m;
    m["line"] = i.line ? Json(i.line) : Json(nullptr);
    m["message"] = i.message;
    msgs.push_back(std::move(m));
  }
  Json j;
  j["error"] = {{"kind", std::string(kind)}, {"messages", std::move(msgs)}};
  err << j.dump() << "\n";
}

int run(const ExperimentConfig& config, const RunOptions& options, std::ostream& out, std::ostream& err) {
  try {
    Session s(config, options, out);
    const auto& cmd = config.command;
    if (cmd == "hj") return run_hj(s);
    if (cmd == "fu-ramsey") return run_fu(s);
    if (cmd == "fk-density") return run_fk(s);
    if (cmd == "example-a") return run_example_a(s);
    if (cmd == "recurrence") return run_recurrence(s, false);
    if (cmd == "classify") return run_recurrence(s, true);
    if (cmd == "search") return run_search(s);
    if (cmd == "density") return run_density(s);
    if (cmd == "probe") return run_probe(s);
    write_error_record(err, "config", {{config.command_line, "unknown command '" + cmd + "'"}});
    return kExitError;
  } catch (const BudgetStop& stop) {
    out << stop.message << "\n";
    write_error_record(err, "budget", {{0, stop.message}});
    return kExitBudget;
  } catch (const SystemParseError& e) {
    write_error_record(err, "system", {{e.line(), e.what()}});
    return kExitError;
  } catch (const std::exception& e) {
    write_error_record(err, "runtime", {{0, e.what()}});
    return kExitError;
  }
}

int check_text(std::string_view text, std::ostream& out) {
  std::vector<Certificate> certs;
  try {
    certs = parse_certificates(text);
  } catch (const std::exception& e) {
    out << "FAIL parse: " << e.what() << "\n";
    return kExitError;
  }
  if (certs.empty()) {
    out << "FAIL no certificate blocks found\n";
    return kExitError;
  }
  bool all = true;
  for (const auto& c : certs) {
    const auto res = check_certificate(c);
    out << (res.ok ? "ok " : "FAIL ") << res.message << "\n";
    all = all && res.ok;
  }
  return all ? kExitOk : kExitError;
}

std::string checkpoint_to_text(const Checkpoint& c) {
  std::ostringstream o;
  o << "# iprtool checkpoint; resume with --resume <this file> and the same config\n";
  o << "hash " << c.hash << "\n";
  o << "command " << c.command << "\n";
  o << "stage " << c.stage << "\n";
  o << "resume ";
  if (c.resume.empty()) {
    o << "-";
  } else {
    for (std::size_t i = 0; i < c.resume.size(); ++i) o << (i ? "," : "") << static_cast<unsigned>(c.resume[i]);
  }
  o << "\n";
  return o.str();
}

Checkpoint checkpoint_from_text(std::string_view text) {
  Checkpoint c;
  std::istringstream in{std::string(text)};
  std::string line;
  bool has_hash = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto sp = line.find(' ');
    const std::string key = line.substr(0, sp);
    const std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);
    if (key == "hash") {
      c.hash = value;
      has_hash = true;
    } else if (key == "command") {
      c.command = value;
    } else if (key == "stage") {
      c.stage = static_cast<unsigned>(parse_int(value));
    } else if (key == "resume") {
      if (value != "-") {
        std::size_t pos = 0;
        while (true) {
          const auto comma = value.find(',', pos);
          c.resume.push_back(static_cast<std::uint8_t>(parse_int(value.substr(pos, comma - pos))));
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
    } else {
      throw std::invalid_argument("unknown checkpoint field '" + key + "'");
    }
  }
  if (!has_hash) throw std::invalid_argument("checkpoint has no hash");
  return c;
}

}  // namespace ipr::cli
