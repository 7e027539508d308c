#include "ipr/dynamics/observable.hpp"

#include <algorithm>
#include <stdexcept>

namespace ipr {

namespace {

[[noreturn]] void mismatch() { throw std::invalid_argument("observables from different backends"); }

Rational canon(Rational q) {
  q.canonicalize();
  return q;
}

Rational eval(const StepFunction& f, const Rational& x) {
  auto it = std::upper_bound(f.breaks.begin(), f.breaks.end(), x);
  return f.values[static_cast<std::size_t>(it - f.breaks.begin()) - 1];
}

/// Builds a normalized step function from sorted unique breakpoints starting
/// at 0 and a value function.
template <class Value>
StepFunction build(const std::vector<Rational>& breaks, Value&& value) {
  StepFunction out;
  for (const auto& b : breaks) {
    Rational v = canon(value(b));
    if (!out.values.empty() && out.values.back() == v) continue;
    out.breaks.push_back(b);
    out.values.push_back(std::move(v));
  }
  return out;
}

std::vector<Rational> merged_breaks(const StepFunction& f, const StepFunction& g) {
  std::vector<Rational> all;
  std::merge(f.breaks.begin(), f.breaks.end(), g.breaks.begin(), g.breaks.end(), std::back_inserter(all));
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

StepFunction step_constant(const Rational& c) { return StepFunction{{Rational(0)}, {canon(c)}}; }

}  // namespace

Observable indicator(const MeasureSystem& sys, const EventSet& b) {
  sys.check_event(b);
  switch (sys.backend()) {
    case Backend::finite_perm: {
      FiniteFunction f{std::vector<Rational>(sys.finite().weights.size(), Rational(0))};
      for (auto x : std::get<PointEvent>(b).points) f.values[x] = 1;
      return f;
    }
    case Backend::rotation: {
      std::vector<Rational> breaks{Rational(0)};
      const auto& iv = std::get<IntervalEvent>(b).intervals;
      for (const auto& [lo, hi] : iv) {
        breaks.push_back(lo);
        if (hi < 1) breaks.push_back(hi);
      }
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      return build(breaks, [&](const Rational& x) {
        for (const auto& [lo, hi] : iv)
          if (lo <= x && x < hi) return Rational(1);
        return Rational(0);
      });
    }
    case Backend::bernoulli:
      return CylinderFunction{Rational(0), {{Rational(1), std::get<CylinderEvent>(b)}}};
  }
  mismatch();
}

Observable constant(const MeasureSystem& sys, const Rational& c) {
  switch (sys.backend()) {
    case Backend::finite_perm: return FiniteFunction{std::vector<Rational>(sys.finite().weights.size(), canon(c))};
    case Backend::rotation: return step_constant(c);
    case Backend::bernoulli: return CylinderFunction{canon(c), {}};
  }
  mismatch();
}

Observable add(const Observable& f, const Observable& g) {
  if (f.index() != g.index()) mismatch();
  if (const auto* a = std::get_if<FiniteFunction>(&f)) {
    const auto& b = std::get<FiniteFunction>(g);
    if (a->values.size() != b.values.size()) mismatch();
    FiniteFunction out{a->values};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = canon(out.values[i] + b.values[i]);
    return out;
  }
  if (const auto* a = std::get_if<StepFunction>(&f)) {
    const auto& b = std::get<StepFunction>(g);
    return build(merged_breaks(*a, b), [&](const Rational& x) { return Rational(eval(*a, x) + eval(b, x)); });
  }
  const auto& a = std::get<CylinderFunction>(f);
  const auto& b = std::get<CylinderFunction>(g);
  CylinderFunction out{canon(a.constant + b.constant), a.terms};
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

Observable scale(const Rational& c, const Observable& f) {
  if (const auto* a = std::get_if<FiniteFunction>(&f)) {
    FiniteFunction out{a->values};
    for (auto& v : out.values) v = canon(v * c);
    return out;
  }
  if (const auto* a = std::get_if<StepFunction>(&f)) {
    if (c == 0) return step_constant(0);
    StepFunction out = *a;
    for (auto& v : out.values) v = canon(v * c);
    return out;
  }
  const auto& a = std::get<CylinderFunction>(f);
  CylinderFunction out{canon(a.constant * c), a.terms};
  for (auto& [coef, cyl] : out.terms) coef = canon(coef * c);
  return out;
}

Observable subtract(const Observable& f, const Observable& g) { return add(f, scale(Rational(-1), g)); }

Observable koopman(const MeasureSystem& sys, const Vector& w, const Observable& f) {
  switch (sys.backend()) {
    case Backend::finite_perm: {
      const auto* a = std::get_if<FiniteFunction>(&f);
      if (!a) mismatch();
      const auto perm = sys.permutation(w);
      FiniteFunction out{a->values};
      for (std::size_t x = 0; x < perm.size(); ++x) out.values[x] = a->values[perm[x]];
      return out;
    }
    case Backend::rotation: {
      const auto* a = std::get_if<StepFunction>(&f);
      if (!a) mismatch();
      const Rational s = sys.rotation_amount(w);
      std::vector<Rational> breaks{Rational(0)};
      for (const auto& b : a->breaks) breaks.push_back(frac(b - s));
      std::sort(breaks.begin(), breaks.end());
      breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
      return build(breaks, [&](const Rational& y) { return eval(*a, frac(y + s)); });
    }
    case Backend::bernoulli: {
      const auto* a = std::get_if<CylinderFunction>(&f);
      if (!a) mismatch();
      sys.check_group_element(w);
      CylinderFunction out{a->constant, {}};
      for (const auto& [coef, cyl] : a->terms) out.terms.emplace_back(coef, shift_cylinder(cyl, w[0]));
      return out;
    }
  }
  mismatch();
}

Rational inner(const MeasureSystem& sys, const Observable& f, const Observable& g) {
  if (f.index() != g.index() || f.index() != static_cast<std::size_t>(sys.backend())) mismatch();
  Rational out = 0;
  switch (sys.backend()) {
    case Backend::finite_perm: {
      const auto& a = std::get<FiniteFunction>(f).values;
      const auto& b = std::get<FiniteFunction>(g).values;
      const auto& w = sys.finite().weights;
      if (a.size() != w.size() || b.size() != w.size()) mismatch();
      for (std::size_t x = 0; x < w.size(); ++x) out += a[x] * b[x] * w[x];
      break;
    }
    case Backend::rotation: {
      const auto& a = std::get<StepFunction>(f);
      const auto& b = std::get<StepFunction>(g);
      const auto breaks = merged_breaks(a, b);
      for (std::size_t i = 0; i < breaks.size(); ++i) {
        const Rational next = i + 1 < breaks.size() ? breaks[i + 1] : Rational(1);
        out += (next - breaks[i]) * eval(a, breaks[i]) * eval(b, breaks[i]);
      }
      break;
    }
    case Backend::bernoulli: {
      const auto& a = std::get<CylinderFunction>(f);
      const auto& b = std::get<CylinderFunction>(g);
      const auto& data = sys.bernoulli();
      out = a.constant * b.constant;
      for (const auto& [coef, cyl] : b.terms) out += a.constant * coef * cylinder_measure(data, cyl);
      for (const auto& [coef, cyl] : a.terms) out += b.constant * coef * cylinder_measure(data, cyl);
      for (const auto& [ca, cyl_a] : a.terms)
        for (const auto& [cb, cyl_b] : b.terms) out += ca * cb * cylinder_measure(data, intersect_cylinders(cyl_a, cyl_b));
      break;
    }
  }
  return canon(out);
}

Rational norm2(const MeasureSystem& sys, const Observable& f) { return inner(sys, f, f); }

Rational orbit_metric(const MeasureSystem& sys, const Observable& f, const Observable& g) {
  return norm2(sys, subtract(f, g));
}

bool koopman_isometric_on(const MeasureSystem& sys, const Observable& f, const Observable& g,
                          const std::vector<Vector>& samples) {
  const Rational d = orbit_metric(sys, f, g);
  for (const auto& w : samples)
    if (orbit_metric(sys, koopman(sys, w, f), koopman(sys, w, g)) != d) return false;
  return true;
}

SpectralSplit compact_projection(const MeasureSystem& sys, const EventSet& b) {
  auto f = indicator(sys, b);
  if (sys.compact()) return SpectralSplit{f, constant(sys, 0)};
  auto pf = constant(sys, measure(sys, b));
  auto residual = subtract(f, pf);
  return SpectralSplit{std::move(pf), std::move(residual)};
}

Rational khintchine_bound(const MeasureSystem& sys, const EventSet& b) {
  auto split = compact_projection(sys, b);
  const Rational value = inner(sys, split.compact, indicator(sys, b));
  const Rational mu = measure(sys, b);
  if (value < mu * mu) throw std::logic_error("<P1_B, 1_B> below mu(B)^2");
  return value;
}

}  // namespace ipr
