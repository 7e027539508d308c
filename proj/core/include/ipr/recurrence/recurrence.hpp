#pragma once

#include "ipr/algebra/polynomial_map.hpp"
#include "ipr/algebra/window.hpp"
#include "ipr/dynamics/folner.hpp"
#include "ipr/dynamics/observable.hpp"
#include "ipr/ip/finite_sums.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ipr {

/// One evaluated u of the window.
struct RecurrenceRow {
  Vector u;
  Vector w;  // φ(u)
  Rational corr;
  bool in_r = false;
};

/// The proof's decomposition evaluated at one u, with f = P1_B.
struct PipelineRow {
  Rational metric2;  // ||f - T^{φ(u)} f||^2
  Rational main;     // <T^{φ(u)} f, 1_B>
  Rational cross;    // <T^{φ(u)}(1_B - f), 1_B>
  bool in_a = false;
  bool in_e = false;
  bool in_r = false;
  /// u in A \ E implies u in R, with the intermediate bound
  /// main >= <f, 1_B> - ||f - T f|| ||1_B|| checked in squared form.
  bool chain_ok = true;
};

struct PipelineReport {
  /// A = {u : ||f - T^{φ(u)} f|| < ε/2}.
  ElementSet<Vector> a;
  /// E = {u : cross term < -ε/2}.
  ElementSet<Vector> e;
  /// R assembled from main + cross.
  ElementSet<Vector> r;
  Rational khintchine;
  bool chain_ok = true;
  std::vector<PipelineRow> rows;
  /// Følner density of E for N = 1..; see exceptional_density.
  std::vector<Rational> e_density;
};

struct SyndeticityReport {
  /// Whole finite group (exact) or a window of an infinite one.
  bool window_limited = true;
  /// Largest run of window indices without an element of R, counting the
  /// stretch before the first and after the last element.
  std::size_t max_gap = 0;
  /// Finite groups: size of a greedy cover of the group by translates of R.
  std::optional<std::size_t> translate_cover;
};

struct RecurrenceReport {
  std::string system_id;
  Backend backend = Backend::finite_perm;
  std::string ring;
  bool outside_hypotheses = false;
  std::string label;
  std::string event;
  std::string phi;
  Rational epsilon;
  Rational mu_b;
  /// mu(B)^2 - ε; u is in R when corr > threshold.
  Rational threshold;
  WindowSpec window{GroundRing::rationals(), 0, 1, 0};
  std::size_t domain_dim = 1;

  std::vector<RecurrenceRow> rows;
  ElementSet<Vector> r;
  Ambient<Vector> ambient;

  std::map<unsigned, IpStarVerdict<Vector>> classification;
  /// Følner density of window \ R along the canonical sequence, N = 1.. .
  std::vector<Rational> exceptional_density;
  std::optional<Rational> khintchine;
  std::optional<PipelineReport> pipeline;
  std::optional<SyndeticityReport> syndeticity;

  ElementSet<Vector> exceptional() const { return ambient.elements.minus(r); }
};

/// R(B, φ, ε) = {u in window : mu(B ∩ T^{φ(u)} B) > mu(B)^2 - ε}, via the
/// direct correlation formulas.
RecurrenceReport recurrence_set(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi,
                                const Rational& epsilon, const WindowSpec& window, const SearchOptions& options = {});

/// Largest N for which the canonical Φ_N lies inside the window.
unsigned folner_reach(const WindowSpec& window);

/// Runs is_ip_r_star for r = 1..r_max (stopping at the first budget overrun)
/// and fills the exceptional-set density profile.
void classify_ipstar(RecurrenceReport& report, unsigned r_max, const SearchOptions& options = {});

/// The proof's route to R through f = P1_B, the orbit-metric set A and the
/// cross term. Shares no code with the direct correlation formulas.
PipelineReport theorem1_pipeline(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi,
                                 const Rational& epsilon, const WindowSpec& window,
                                 const SearchOptions& options = {});

/// recurrence_set + classify_ipstar + theorem1_pipeline + syndeticity.
RecurrenceReport full_report(const MeasureSystem& sys, const EventSet& b, const PolynomialMap& phi,
                             const Rational& epsilon, const WindowSpec& window, unsigned r_max,
                             const SearchOptions& options = {});

SyndeticityReport syndeticity_check(const RecurrenceReport& report);

struct FpProbe {
  bool intersects = false;
  /// Elements of FP(gens) inside the window and in R.
  std::vector<Vector> hits;
  /// Elements of FP(gens) that fell outside the window.
  std::size_t outside_window = 0;
  std::vector<Vector> products;
};

/// FP(gens) = {prod_{i in α} x_i} against R, for one-dimensional domains.
FpProbe fp_probe(const RecurrenceReport& report, const std::vector<Scalar>& gens);

}  // namespace ipr
