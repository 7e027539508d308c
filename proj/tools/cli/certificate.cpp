#include "cli/certificate.hpp"

#include "ipr/algebra/window.hpp"
#include "ipr/ip/finite_sums.hpp"

#include <algorithm>
#include <sstream>

namespace ipr::cli {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

unsigned to_unsigned(const std::string& s) {
  const auto v = parse_int(s);
  if (v < 0 || v > 0xffffffffll) throw CertificateError("value out of range: " + s);
  return static_cast<unsigned>(v);
}

CheckResult ok(std::string msg) { return {true, std::move(msg)}; }
CheckResult fail(std::string msg) { return {false, std::move(msg)}; }

std::vector<std::string> header_for(const std::string& type) {
  if (type == "hj")
    return {"# Hales-Jewett certificate for [k]^[m] with t colors.",
            "# Words are indexed lexicographically, position 1 most significant.",
            "# coloring: one 0-based color per word in index order.",
            "# kind avoiding: the coloring has no monochromatic combinatorial line.",
            "# kind exhaustive: all t^(k^m) colorings were enumerated; each has one.",
            "# kind refutation: each leaf prefix (colors of words 0..len-1) makes the",
            "#   line with that canonical index monochromatic; lines are ordered by |U_1|,",
            "#   then U_1 lexicographically, then the fixed letters."};
  if (type == "fu-ramsey")
    return {"# FU_s Ramsey certificate on F_r (non-empty subsets of {1..r}) with k colors.",
            "# Points are subsets in bitmask order: mask 1, 2, 3, ..., 2^r - 1.",
            "# kind counterexample: the coloring has no monochromatic FU_s family.",
            "# kind refutation: leaves over canonical colorings, each closing a family",
            "#   (families enumerated with blocks ascending in bitmask order)."};
  if (type == "fk-density")
    return {"# Density certificate for subsets of {1..N}.",
            "# complement: a largest subset of {1..N} containing no FS(x_1..x_r).",
            "# value: 1 - |complement| / N.",
            "# odd_certificate: density of the odd numbers in {1..N}."};
  if (type == "example-a")
    return {"# A = union of A_r = {i * 2^(2^r) : 1 <= i <= r}.",
            "# block: r, step 2^(2^r), elements in ascending order."};
  if (type == "ipstar-fails")
    return {"# FS(witness) lies in the window and misses R, so R is not IP*_r there.",
            "# R = {u : mu(B ∩ T^{phi(u)} B) > mu(B)^2 - epsilon}."};
  if (type == "isometric")
    return {"# Recurrence configuration: u_gamma = sum of gens over gamma (1-based),",
            "# shift = (m_1(u_gamma), ..); distance2 = ||T^shift 1_B - 1_B||^2 < epsilon^2."};
  return {};
}

void add_dynamics(Certificate& c, const DynamicsContext& ctx) {
  c.system_text = ctx.system_text;
  c.set("event", ctx.event);
  c.set("epsilon", to_string(ctx.epsilon));
  c.set("domain_dim", std::to_string(ctx.domain_dim));
}

struct LoadedDynamics {
  SystemFile file;
  EventSet event;
  std::size_t domain_dim = 1;
  Rational epsilon;
};

LoadedDynamics load_dynamics(const Certificate& c) {
  auto file = parse_system(c.system_text);
  const auto ev = c.require("event");
  EventSet b = parse_event(file.system, ev);
  const auto dim = static_cast<std::size_t>(to_unsigned(c.require("domain_dim")));
  return {std::move(file), std::move(b), dim, parse_rational(c.require("epsilon"))};
}

/// Does any constraint go monochromatic under a full coloring.
bool has_mono(const ColoringProblem& p, std::span<const std::uint8_t> coloring) {
  for (const auto& con : p.constraints) {
    bool mono = true;
    for (auto x : con)
      if (coloring[x] != coloring[con.front()]) {
        mono = false;
        break;
      }
    if (mono) return true;
  }
  return false;
}

std::vector<RefutationLeaf> parse_leaves(const Certificate& c) {
  std::vector<RefutationLeaf> leaves;
  for (const auto& l : c.all("leaf")) {
    auto toks = split_ws(l);
    if (toks.size() != 2) throw CertificateError("leaf needs a prefix and a constraint index: " + l);
    leaves.push_back({toks[0] == "-" ? Coloring{} : coloring_from_string(toks[0]), to_unsigned(toks[1])});
  }
  return leaves;
}

void add_leaves(Certificate& c, const std::vector<RefutationLeaf>& leaves, unsigned colors) {
  for (const auto& leaf : leaves)
    c.set("leaf", (leaf.prefix.empty() ? std::string("-") : coloring_to_string(leaf.prefix, colors)) + " " +
                      std::to_string(leaf.constraint));
}

CheckResult check_hj(const Certificate& c) {
  const unsigned k = to_unsigned(c.require("k")), t = to_unsigned(c.require("t")), m = to_unsigned(c.require("m"));
  const auto kind = c.require("kind");
  const auto problem = hj_problem(k, t, m);
  const std::string what = "[" + std::to_string(k) + "]^[" + std::to_string(m) + "], t=" + std::to_string(t);
  if (kind == "avoiding") {
    const auto col = coloring_from_string(c.require("coloring"));
    if (!verify_avoiding(problem, col)) return fail("hj " + what + ": coloring has a monochromatic line");
    return ok("hj " + what + ": coloring avoids all " + std::to_string(problem.constraints.size()) + " lines");
  }
  if (kind == "exhaustive") {
    const std::uint64_t n = problem.points;
    long double total_ld = 1;
    for (std::uint64_t i = 0; i < n; ++i) total_ld *= t;
    if (total_ld > static_cast<long double>(std::uint64_t{1} << 26))
      return fail("hj " + what + ": too many colorings to re-enumerate");
    const auto total = static_cast<std::uint64_t>(total_ld);
    if (parse_int(c.require("colorings")) != static_cast<std::int64_t>(total))
      return fail("hj " + what + ": recorded count differs from t^(k^m) = " + std::to_string(total));
    Coloring col(n, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t v = idx;
      for (std::uint64_t i = n; i-- > 0;) {
        col[i] = static_cast<std::uint8_t>(v % t);
        v /= t;
      }
      if (!has_mono(problem, col)) return fail("hj " + what + ": coloring #" + std::to_string(idx) + " avoids every line");
    }
    return ok("hj " + what + ": all " + std::to_string(total) + " colorings contain a monochromatic line");
  }
  if (kind == "refutation") {
    const auto leaves = parse_leaves(c);
    if (!verify_refutation(problem, leaves)) return fail("hj " + what + ": refutation tree does not verify");
    return ok("hj " + what + ": refutation with " + std::to_string(leaves.size()) + " leaves verifies");
  }
  return fail("hj " + what + ": kind '" + kind + "' carries no checkable evidence");
}

CheckResult check_fu(const Certificate& c) {
  const unsigned r = to_unsigned(c.require("r")), s = to_unsigned(c.require("s")), k = to_unsigned(c.require("k"));
  const auto kind = c.require("kind");
  const std::string what = "r=" + std::to_string(r) + " s=" + std::to_string(s) + " k=" + std::to_string(k);
  if (kind == "counterexample") {
    const auto col = coloring_from_string(c.require("coloring"));
    if (!verify_fu_counterexample(r, s, k, col)) return fail("fu-ramsey " + what + ": coloring has a monochromatic FU_s");
    return ok("fu-ramsey " + what + ": counterexample coloring verified");
  }
  if (kind == "refutation") {
    const auto leaves = parse_leaves(c);
    if (!verify_refutation(fu_problem(r, s, k), leaves)) return fail("fu-ramsey " + what + ": refutation does not verify");
    return ok("fu-ramsey " + what + ": refutation with " + std::to_string(leaves.size()) + " leaves verifies");
  }
  return fail("fu-ramsey " + what + ": kind '" + kind + "' carries no checkable evidence");
}

/// Calls f on every k-subset of {1..n} until it returns false.
template <class F>
bool all_k_subsets(unsigned n, unsigned k, F&& f) {
  std::vector<std::int64_t> cur;
  auto rec = [&](auto&& self, unsigned next) -> bool {
    if (cur.size() == k) return f(cur);
    for (unsigned v = next; v + (k - cur.size()) <= n + 1; ++v) {
      cur.push_back(v);
      if (!self(self, v + 1)) return false;
      cur.pop_back();
    }
    return true;
  };
  return rec(rec, 1);
}

CheckResult check_fk(const Certificate& c) {
  const unsigned r = to_unsigned(c.require("r")), n = to_unsigned(c.require("n"));
  const Rational value = parse_rational(c.require("value"));
  std::vector<std::int64_t> comp;
  for (const auto& tok : split_ws(c.get("complement").value_or(""))) comp.push_back(parse_int(tok));
  const std::string what = "r=" + std::to_string(r) + " N=" + std::to_string(n);
  if (!std::is_sorted(comp.begin(), comp.end()) || std::adjacent_find(comp.begin(), comp.end()) != comp.end())
    return fail("fk-density " + what + ": complement is not strictly increasing");
  for (auto x : comp)
    if (x < 1 || x > n) return fail("fk-density " + what + ": complement leaves {1..N}");
  if (!is_ip_r_free(comp, r)) return fail("fk-density " + what + ": complement contains an FS set");
  if (value != 1 - make_rational(static_cast<std::int64_t>(comp.size()), n))
    return fail("fk-density " + what + ": value does not match the complement size");
  if (auto odd = c.get("odd_certificate")) {
    std::vector<std::int64_t> odds;
    for (std::int64_t x = 1; x <= n; x += 2) odds.push_back(x);
    if (r >= 2 && !is_ip_r_free(odds, r)) return fail("fk-density " + what + ": odd numbers contain an FS set");
    if (parse_rational(*odd) != make_rational(static_cast<std::int64_t>(odds.size()), n))
      return fail("fk-density " + what + ": odd certificate density is wrong");
    if (r >= 2 && value > 1 - parse_rational(*odd)) return fail("fk-density " + what + ": value exceeds the odd bound");
  }
  // Optimality: IP_r-freeness passes to subsets, so it suffices that no
  // subset one larger than the complement is free.
  const unsigned size = static_cast<unsigned>(comp.size()) + 1;
  if (size > n) return ok("fk-density " + what + ": complement is all of {1..N}");
  long double count = 1;
  for (unsigned i = 0; i < size; ++i) count = count * (n - i) / (i + 1);
  if (count > 4e6L) return ok("fk-density " + what + ": complement verified (optimality not rechecked, too many subsets)");
  std::vector<std::int64_t> bigger_free;
  all_k_subsets(n, size, [&](const std::vector<std::int64_t>& s) {
    if (is_ip_r_free(s, r)) {
      bigger_free = s;
      return false;
    }
    return true;
  });
  if (!bigger_free.empty()) return fail("fk-density " + what + ": a larger FS-free set exists");
  return ok("fk-density " + what + ": complement verified and maximal, value " + to_string(value));
}

CheckResult check_example_a(const Certificate& c) {
  const unsigned r_max = to_unsigned(c.require("r_max"));
  std::vector<std::vector<Integer>> blocks;
  std::vector<Integer> steps;
  for (const auto& line : c.all("block")) {
    auto toks = split_ws(line);
    if (toks.size() < 2) throw CertificateError("block needs r and step");
    if (to_unsigned(toks[0]) != blocks.size() + 1) return fail("example-a: blocks out of order");
    steps.emplace_back(toks[1]);
    std::vector<Integer> elems;
    for (std::size_t i = 2; i < toks.size(); ++i) elems.emplace_back(toks[i]);
    blocks.push_back(std::move(elems));
  }
  if (blocks.size() != r_max) return fail("example-a: expected " + std::to_string(r_max) + " blocks");
  std::vector<Integer> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  auto in_a = [&](const Integer& x) { return std::binary_search(all.begin(), all.end(), x); };
  for (unsigned r = 1; r <= r_max; ++r) {
    Integer expect_step;
    mpz_ui_pow_ui(expect_step.get_mpz_t(), 2, 1ul << r);
    if (steps[r - 1] != expect_step) return fail("example-a: step of block " + std::to_string(r) + " is not 2^(2^r)");
    // FS of r copies of the step is {step, 2 step, .., r step}.
    if (blocks[r - 1].size() != r) return fail("example-a: block " + std::to_string(r) + " has the wrong size");
    for (unsigned i = 1; i <= r; ++i)
      if (!in_a(expect_step * i) || blocks[r - 1][i - 1] != expect_step * i)
        return fail("example-a: block " + std::to_string(r) + " is not FS of r copies of its step");
    // Depth bound: positive x_1..x_{r+1} drawn from A_r have r+1 distinct
    // partial sums in [step, r(r+1) step], which holds only the r elements of
    // A_r because the next block starts at step^2.
    const Integer hi = expect_step * (r * (r + 1));
    unsigned inside = 0;
    for (const auto& x : all)
      if (x >= expect_step && x <= hi) ++inside;
    if (inside != r) return fail("example-a: depth bound fails for block " + std::to_string(r));
  }
  // Cross-block: every non-decreasing triple touching two blocks leaves A.
  std::uint64_t tuples = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      for (std::size_t l = j; l < all.size(); ++l) {
        const Integer xs[3] = {all[i], all[j], all[l]};
        auto block = [&](const Integer& x) {
          for (std::size_t b = 0; b < blocks.size(); ++b)
            if (std::binary_search(blocks[b].begin(), blocks[b].end(), x)) return b;
          return blocks.size();
        };
        if (block(xs[0]) == block(xs[1]) && block(xs[1]) == block(xs[2])) continue;
        ++tuples;
        bool inside = true;
        for (unsigned m = 1; m < 8 && inside; ++m) {
          Integer s = 0;
          for (unsigned q = 0; q < 3; ++q)
            if (m >> q & 1u) s += xs[q];
          inside = in_a(s);
        }
        if (inside) return fail("example-a: a cross-block triple has FS inside A");
      }
  return ok("example-a: r_max=" + std::to_string(r_max) + ", blocks, depth bounds and " + std::to_string(tuples) +
            " cross-block triples verified");
}

CheckResult check_ipstar(const Certificate& c) {
  auto d = load_dynamics(c);
  const auto& sys = d.file.system;
  const auto ring = sys.ring();
  const auto phi = PolynomialMap::parse(ring, d.domain_dim, sys.group_dim(), c.require("phi"));
  const auto window = WindowSpec::parse(ring, c.require("window"));
  const unsigned r = to_unsigned(c.require("r"));
  const auto witness = parse_vectors(ring, d.domain_dim, c.require("witness"));
  if (witness.size() != r) return fail("ipstar-fails: witness has " + std::to_string(witness.size()) + " generators, r=" + std::to_string(r));
  const auto window_elems = window_enumerate(window, d.domain_dim);
  const Rational mu = measure(sys, d.event);
  const Rational threshold = mu * mu - d.epsilon;
  FiniteSums<Vector> fs{std::span<const Vector>(witness)};
  for (const auto& x : fs.set().elements()) {
    if (!std::binary_search(window_elems.begin(), window_elems.end(), x))
      return fail("ipstar-fails: FS element " + x.to_string() + " lies outside the window");
    const Rational corr = correlation(sys, d.event, phi(x));
    if (corr > threshold) return fail("ipstar-fails: FS element " + x.to_string() + " lies in R");
  }
  return ok("ipstar-fails: FS(" + vectors_to_string(witness) + ") misses R (" + std::to_string(fs.set().elements().size()) +
            " sums, r=" + std::to_string(r) + ")");
}

CheckResult check_isometric(const Certificate& c) {
  auto d = load_dynamics(c);
  const auto& sys = d.file.system;
  const auto ring = sys.ring();
  std::vector<MonomialMap> ms;
  std::string list = c.require("monomials");
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto semi = list.find(';', pos);
    ms.push_back(parse_monomial(ring, d.domain_dim, trim(std::string_view(list).substr(pos, semi - pos))));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  const auto gens = parse_vectors(ring, d.domain_dim, c.require("gens"));
  const SubsetMask gamma = parse_mask(c.require("gamma"));
  if (gamma == 0) return fail("isometric: gamma is empty");
  if (mask_max(gamma) > gens.size()) return fail("isometric: gamma exceeds the generator count");
  Vector u = Vector::zero(ring, d.domain_dim);
  for (unsigned j = 1; j <= gens.size(); ++j)
    if (gamma >> (j - 1) & 1u) u += gens[j - 1];
  std::vector<Scalar> shift;
  for (const auto& m : ms) shift.push_back(eval_monomial(m, u));
  const Vector w(ring, shift);
  if (w.to_string() != c.require("shift")) return fail("isometric: recorded shift differs from m(u_gamma) = " + w.to_string());
  const auto x = indicator(sys, d.event);
  const Rational dist2 = orbit_metric(sys, koopman(sys, w, x), x);
  if (dist2 != parse_rational(c.require("distance2"))) return fail("isometric: recorded distance differs from " + to_string(dist2));
  if (!(dist2 < d.epsilon * d.epsilon)) return fail("isometric: distance is not below epsilon");
  return ok("isometric: gamma=" + mask_to_string(gamma) + " shift=" + w.to_string() + " distance^2=" + to_string(dist2) +
            " < epsilon^2");
}

}  // namespace

std::optional<std::string> Certificate::get(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return std::nullopt;
}

std::string Certificate::require(std::string_view key) const {
  auto v = get(key);
  if (!v) throw CertificateError("certificate " + type + " (line " + std::to_string(line) + ") lacks '" + std::string(key) + "'");
  return *v;
}

std::vector<std::string> Certificate::all(std::string_view key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : fields)
    if (k == key) out.push_back(v);
  return out;
}

std::vector<Certificate> parse_certificates(std::string_view text) {
  std::vector<Certificate> out;
  std::optional<Certificate> cur;
  bool in_system = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (!cur) {
      if (line.starts_with("certificate ")) {
        cur = Certificate{};
        cur->type = trim(std::string_view(line).substr(12));
        cur->line = line_no;
      }
      continue;
    }
    if (in_system) {
      if (line == "system end") in_system = false;
      else cur->system_text += raw + "\n";
      continue;
    }
    if (line.empty() || line.front() == '#') continue;
    if (line == "system begin") {
      in_system = true;
      continue;
    }
    if (line == "end") {
      out.push_back(std::move(*cur));
      cur.reset();
      continue;
    }
    const auto sp = line.find(' ');
    cur->set(line.substr(0, sp), sp == std::string::npos ? std::string() : trim(std::string_view(line).substr(sp + 1)));
  }
  if (cur) throw CertificateError("line " + std::to_string(cur->line) + ": certificate " + cur->type + " has no 'end'");
  return out;
}

std::string render(const Certificate& c, bool header) {
  std::ostringstream out;
  if (header)
    for (const auto& h : header_for(c.type)) out << h << "\n";
  out << "certificate " << c.type << "\n";
  for (const auto& [k, v] : c.fields) out << k << (v.empty() ? "" : " ") << v << "\n";
  if (!c.system_text.empty()) out << "system begin\n" << c.system_text << "system end\n";
  out << "end\n";
  return out.str();
}

std::string coloring_to_string(std::span<const std::uint8_t> c, unsigned colors) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (colors > 10) {
      if (i) out += ',';
      out += std::to_string(c[i]);
    } else {
      out += static_cast<char>('0' + c[i]);
    }
  }
  return out;
}

Coloring coloring_from_string(std::string_view text) {
  Coloring out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const auto v = parse_int(text.substr(pos, comma - pos));
      if (v < 0 || v > 255) throw CertificateError("color out of range");
      out.push_back(static_cast<std::uint8_t>(v));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return out;
  }
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw CertificateError("bad color digit '" + std::string(1, ch) + "'");
    out.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return out;
}

MonomialMap parse_monomial(const GroundRing& ring, std::size_t domain_dim, std::string_view text) {
  if (text.find('+') != std::string_view::npos) throw std::invalid_argument("monomial '" + std::string(text) + "' has several terms");
  auto phi = PolynomialMap::parse(ring, domain_dim, 1, text);
  if (phi.terms().size() != 1 || !phi.terms().front().target.coords().front().is_one())
    throw std::invalid_argument("monomial '" + std::string(text) + "' must be a single term with target 1");
  return phi.terms().front().monomial;
}

std::vector<Vector> parse_vectors(const GroundRing& ring, std::size_t dim, std::string_view text) {
  std::vector<Vector> out;
  for (const auto& tok : split_ws(text)) out.push_back(Vector::parse(ring, dim, tok));
  if (out.empty()) throw std::invalid_argument("expected at least one vector");
  return out;
}

std::string vectors_to_string(const std::vector<Vector>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += ' ';
    out += v.to_string();
  }
  return out;
}

std::vector<Certificate> hj_certificates(const HjNumberResult& result) {
  std::vector<Certificate> out;
  for (const auto& step : result.steps) {
    if (step.status == SearchStatus::budget_exceeded) continue;
    Certificate c;
    c.type = "hj";
    c.set("k", std::to_string(result.k));
    c.set("t", std::to_string(result.t));
    c.set("m", std::to_string(step.m));
    c.set("method", std::string(to_string(step.method)));
    if (step.status == SearchStatus::found) {
      c.set("kind", "avoiding");
      c.set("coloring", coloring_to_string(step.coloring, result.t));
    } else if (step.method == HjMethod::exhaustive) {
      // A resumed run counts only its own share, so record the full total.
      Integer total;
      mpz_ui_pow_ui(total.get_mpz_t(), result.t, word_count(result.k, step.m));
      c.set("kind", "exhaustive");
      c.set("colorings", total.get_str());
    } else if (!step.refutation.empty()) {
      c.set("kind", "refutation");
      add_leaves(c, step.refutation, result.t);
    } else {
      c.set("kind", "unrecorded");
    }
    out.push_back(std::move(c));
  }
  return out;
}

Certificate fu_certificate(const FuRamseyResult& result) {
  Certificate c;
  c.type = "fu-ramsey";
  c.set("r", std::to_string(result.r));
  c.set("s", std::to_string(result.s));
  c.set("k", std::to_string(result.k));
  if (result.verdict == FuVerdict::counterexample) {
    c.set("kind", "counterexample");
    c.set("coloring", coloring_to_string(result.coloring, result.k));
  } else if (!result.refutation.empty()) {
    c.set("kind", "refutation");
    add_leaves(c, result.refutation, result.k);
  } else {
    c.set("kind", "unrecorded");
  }
  return c;
}

Certificate fk_certificate(const FkDensityResult& result) {
  Certificate c;
  c.type = "fk-density";
  c.set("r", std::to_string(result.r));
  c.set("n", std::to_string(result.n));
  c.set("value", to_string(result.value));
  std::string comp;
  for (auto x : result.complement) comp += (comp.empty() ? "" : " ") + std::to_string(x);
  c.set("complement", comp);
  if (result.odd_certificate) c.set("odd_certificate", to_string(*result.odd_certificate));
  return c;
}

Certificate example_a_certificate(const ExampleA& a, const ExampleAChecks& checks) {
  Certificate c;
  c.type = "example-a";
  c.set("r_max", std::to_string(a.blocks.size()));
  for (const auto& b : a.blocks) {
    std::string line = std::to_string(b.r) + " " + b.step.get_str();
    for (const auto& x : b.elements) line += " " + x.get_str();
    c.set("block", line);
  }
  std::string depth;
  for (auto d : checks.depth) depth += (depth.empty() ? "" : " ") + std::to_string(d);
  c.set("depth", depth);
  c.set("cross_block_tuples", std::to_string(checks.cross_block_tuples));
  return c;
}

Certificate ipstar_certificate(const DynamicsContext& ctx, unsigned r, const std::vector<Vector>& witness) {
  Certificate c;
  c.type = "ipstar-fails";
  add_dynamics(c, ctx);
  c.set("phi", ctx.phi);
  c.set("window", ctx.window);
  c.set("r", std::to_string(r));
  c.set("witness", vectors_to_string(witness));
  return c;
}

Certificate isometric_certificate(const DynamicsContext& ctx, const std::vector<MonomialMap>& ms,
                                  const std::vector<Vector>& gens, const IsometricSearchResult& result) {
  Certificate c;
  c.type = "isometric";
  add_dynamics(c, ctx);
  std::string mono;
  for (const auto& m : ms) mono += (mono.empty() ? "" : "; ") + m.to_string();
  c.set("monomials", mono);
  c.set("gens", vectors_to_string(gens));
  c.set("gamma", mask_to_string(result.gamma));
  c.set("shift", result.shift ? result.shift->to_string() : std::string("none"));
  c.set("distance2", to_string(result.distance2));
  if (result.config) c.set("config", result.config->to_string());
  return c;
}

CheckResult check_certificate(const Certificate& c) {
  try {
    if (c.type == "hj") return check_hj(c);
    if (c.type == "fu-ramsey") return check_fu(c);
    if (c.type == "fk-density") return check_fk(c);
    if (c.type == "example-a") return check_example_a(c);
    if (c.type == "ipstar-fails") return check_ipstar(c);
    if (c.type == "isometric") return check_isometric(c);
    return fail("unknown certificate type '" + c.type + "'");
  } catch (const std::exception& e) {
    return fail(c.type + ": " + e.what());
  }
}

}  // namespace ipr::cli
