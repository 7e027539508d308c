#pragma once

#include "ipr/recurrence/recurrence.hpp"

#include <string>
#include <string_view>

namespace ipr {

/// JSON report. Stable top-level keys, in this order:
///
///   generated             timestamp (the only run-dependent line)
///   system                {id, backend, ring, outside_theorem_hypotheses, label}
///   event, phi, epsilon, mu_B, threshold, window, domain_dim
///   R                     elements of R in canonical order
///   table                 [{u, w, corr, in_R}] per window element
///   classification        {"r": {verdict, witness}}
///   witness               first failing witness or null
///   exceptional_density   {"N": density of window \ R in Φ_N}
///   bounds                {mu_B_squared, khintchine}
///   pipeline              {A, E, R, chain_ok, khintchine, e_density, rows}
///   syndeticity           {window_limited, max_gap, translate_cover}
///
/// Rationals are strings `a/b`; group elements use the canonical rendering.
std::string report_to_json(const RecurrenceReport& report, std::string_view generated);
RecurrenceReport report_from_json(std::string_view text);

/// `# generated <timestamp>` then header `w,mu_B,corr,threshold,in_R`; the
/// w column holds the window element u.
std::string report_to_csv(const RecurrenceReport& report, std::string_view generated);

}  // namespace ipr
