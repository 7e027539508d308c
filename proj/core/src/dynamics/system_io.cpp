#include "ipr/dynamics/system_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ipr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

/// `(0 1 2)(3 4)` over n points; fixed points may be omitted.
std::vector<std::uint32_t> parse_cycles(std::string_view text, std::size_t n) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t x = 0; x < n; ++x) perm[x] = static_cast<std::uint32_t>(x);
  std::vector<bool> used(n, false);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    auto close = text.find(')', i);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
    std::vector<std::uint32_t> cycle;
    for (const auto& t : tokens(text.substr(i + 1, close - i - 1))) {
      auto v = parse_int(t);
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("cycle point " + t + " out of range");
      if (used[static_cast<std::size_t>(v)]) throw std::invalid_argument("point " + t + " appears twice");
      used[static_cast<std::size_t>(v)] = true;
      cycle.push_back(static_cast<std::uint32_t>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    i = close + 1;
  }
  return perm;
}

std::string cycles_to_string(const std::vector<std::uint32_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t x = 0; x < perm.size(); ++x) {
    if (seen[x] || perm[x] == x) continue;
    out += '(';
    for (std::size_t y = x; !seen[y]; y = perm[y]) {
      if (y != x) out += ' ';
      seen[y] = true;
      out += std::to_string(y);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& ts, std::size_t from) {
  std::vector<Rational> out;
  for (std::size_t i = from; i < ts.size(); ++i) out.push_back(parse_rational(ts[i]));
  return out;
}

}  // namespace

EventSet parse_event(const MeasureSystem& sys, std::string_view body) {
  auto ts = tokens(body);
  if (ts.size() == 1 && ts[0] == "none") ts.clear();
  EventSet out;
  switch (sys.backend()) {
    case Backend::finite_perm: {
      std::vector<std::uint32_t> pts;
      for (const auto& t : ts) {
        auto v = parse_int(t);
        if (v < 0) throw std::invalid_argument("negative point index " + t);
        pts.push_back(static_cast<std::uint32_t>(v));
      }
      out = make_point_event(std::move(pts));
      break;
    }
    case Backend::rotation: {
      if (ts.size() % 2) throw std::invalid_argument("interval endpoints come in pairs");
      std::vector<std::pair<Rational, Rational>> iv;
      for (std::size_t i = 0; i < ts.size(); i += 2) iv.emplace_back(parse_rational(ts[i]), parse_rational(ts[i + 1]));
      out = make_interval_event(std::move(iv));
      break;
    }
    case Backend::bernoulli: {
      std::vector<std::pair<Scalar, std::vector<std::uint32_t>>> cons;
      for (const auto& t : ts) {
        auto colon = t.rfind(':');
        if (colon == std::string::npos) throw std::invalid_argument("cylinder entry '" + t + "' needs coord:letter");
        auto letter = parse_int(std::string_view(t).substr(colon + 1));
        if (letter < 0) throw std::invalid_argument("negative letter in " + t);
        cons.push_back({Scalar::parse(sys.ring(), std::string_view(t).substr(0, colon)),
                        {static_cast<std::uint32_t>(letter)}});
      }
      out = make_cylinder_event(std::move(cons));
      break;
    }
  }
  sys.check_event(out);
  return out;
}

SystemFile parse_system(std::string_view text) {
  std::optional<Backend> backend;
  std::optional<std::uint32_t> prime;
  std::optional<std::size_t> points;
  std::vector<Rational> weights, rho, base;
  std::vector<std::pair<std::size_t, std::string>> generators, events;
  bool regular = false;
  std::string id;

  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto space = line.find_first_of(" \t");
    std::string key(line.substr(0, space));
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));
    try {
      auto ts = tokens(rest);
      auto need_one = [&] {
        if (ts.size() != 1) throw std::invalid_argument(key + " takes exactly one value");
      };
      if (key == "backend") {
        need_one();
        backend = parse_backend(ts[0]);
      } else if (key == "id") {
        id = std::string(rest);
      } else if (key == "prime") {
        need_one();
        auto p = parse_int(ts[0]);
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument(ts[0] + " is not prime");
        prime = static_cast<std::uint32_t>(p);
      } else if (key == "points") {
        need_one();
        auto n = parse_int(ts[0]);
        if (n < 1 || n > (1 << 20)) throw std::invalid_argument("points must be in [1, 2^20]");
        points = static_cast<std::size_t>(n);
      } else if (key == "weights") {
        weights = parse_rationals(ts, 0);
      } else if (key == "generator") {
        generators.emplace_back(lineno, std::string(rest));
      } else if (key == "regular") {
        if (!ts.empty()) throw std::invalid_argument("regular takes no value");
        regular = true;
      } else if (key == "rho") {
        rho = parse_rationals(ts, 0);
      } else if (key == "base") {
        base = parse_rationals(ts, 0);
      } else if (key == "event") {
        events.emplace_back(lineno, std::string(rest));
      } else {
        throw std::invalid_argument("unknown directive '" + key + "'");
      }
    } catch (const SystemParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw SystemParseError(lineno, e.what());
    }
  }

  if (!backend) throw SystemParseError(0, "missing 'backend' directive");
  auto build = [&]() -> MeasureSystem {
    switch (*backend) {
      case Backend::finite_perm: {
        if (!prime) throw SystemParseError(0, "finite_perm needs 'prime'");
        if (regular) {
          if (!generators.empty() || points || !weights.empty())
            throw SystemParseError(0, "'regular' excludes points, weights and generators");
          return MeasureSystem::regular(*prime);
        }
        if (!points) throw SystemParseError(0, "finite_perm needs 'points'");
        if (weights.empty()) weights.assign(*points, Rational(1, static_cast<unsigned long>(*points)));
        if (weights.size() != *points) throw SystemParseError(0, "weights count differs from points");
        std::vector<std::vector<std::uint32_t>> perms;
        for (const auto& [ln, body] : generators) {
          try {
            perms.push_back(parse_cycles(body, *points));
          } catch (const std::exception& e) {
            throw SystemParseError(ln, e.what());
          }
        }
        return MeasureSystem::finite_perm(*prime, weights, perms);
      }
      case Backend::rotation:
        if (rho.empty()) throw SystemParseError(0, "rotation needs 'rho'");
        return MeasureSystem::rotation(rho);
      case Backend::bernoulli:
        if (!prime) throw SystemParseError(0, "bernoulli needs 'prime'");
        if (base.empty()) throw SystemParseError(0, "bernoulli needs 'base'");
        return MeasureSystem::bernoulli(*prime, base);
    }
    throw SystemParseError(0, "unreachable backend");
  };
  SystemFile out{[&] {
                   try {
                     return build();
                   } catch (const SystemParseError&) {
                     throw;
                   } catch (const std::exception& e) {
                     throw SystemParseError(0, e.what());
                   }
                 }(),
                 {}};
  if (!id.empty()) out.system.set_id(id);
  if (out.system.id().empty()) out.system.set_id(std::string(to_string(*backend)));
  for (const auto& [ln, body] : events) {
    try {
      out.events.push_back(parse_event(out.system, body));
    } catch (const std::exception& e) {
      throw SystemParseError(ln, e.what());
    }
  }
  return out;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open system file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

std::string system_to_text(const SystemFile& file) {
  const auto& sys = file.system;
  std::ostringstream out;
  out << "backend " << to_string(sys.backend()) << "\n";
  if (!sys.id().empty()) out << "id " << sys.id() << "\n";
  auto list = [&](const char* key, const std::vector<Rational>& v) {
    out << key;
    for (const auto& q : v) out << ' ' << to_string(q);
    out << "\n";
  };
  switch (sys.backend()) {
    case Backend::finite_perm:
      out << "prime " << sys.finite().p << "\n";
      out << "points " << sys.finite().weights.size() << "\n";
      list("weights", sys.finite().weights);
      for (const auto& g : sys.finite().generators) out << "generator " << cycles_to_string(g) << "\n";
      break;
    case Backend::rotation:
      list("rho", sys.rotation().rho);
      break;
    case Backend::bernoulli:
      out << "prime " << sys.bernoulli().p << "\n";
      list("base", sys.bernoulli().base);
      break;
  }
  for (const auto& e : file.events) out << "event " << event_to_string(e) << "\n";
  return out.str();
}

}  // namespace ipr
