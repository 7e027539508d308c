#pragma once

#include "ipr/dynamics/system_io.hpp"
#include "ipr/hj/hj_number.hpp"
#include "ipr/ip/example_a.hpp"
#include "ipr/ip/fk_density.hpp"
#include "ipr/ip/fu_ramsey.hpp"
#include "ipr/recurrence/isometric_search.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ipr::cli {

/// A certificate is a block of `key value` lines:
///
///   certificate <type>
///   key value
///   ...
///   system begin          (optional embedded system file)
///   ...
///   system end
///   end
///
/// Lines outside blocks (headers, summaries) are ignored by the parser, so a
/// captured stdout can be checked directly.
struct Certificate {
  std::string type;
  std::size_t line = 0;
  std::vector<std::pair<std::string, std::string>> fields;
  std::string system_text;

  void set(const std::string& key, std::string value) { fields.emplace_back(key, std::move(value)); }
  std::optional<std::string> get(std::string_view key) const;
  std::string require(std::string_view key) const;
  std::vector<std::string> all(std::string_view key) const;
};

class CertificateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Certificate> parse_certificates(std::string_view text);

/// Renders the block, preceded by `#` lines documenting the enumeration order
/// of its type unless `header` is false.
std::string render(const Certificate& c, bool header = true);

/// Colorings as digit strings, comma separated when colors > 10.
std::string coloring_to_string(std::span<const std::uint8_t> c, unsigned colors);
Coloring coloring_from_string(std::string_view text);

/// A single term `[a*]x1^d1*x2...` with target 1.
MonomialMap parse_monomial(const GroundRing& ring, std::size_t domain_dim, std::string_view text);
/// Whitespace separated vectors, e.g. `1 3 5` or `(1,0) (0,1)`.
std::vector<Vector> parse_vectors(const GroundRing& ring, std::size_t dim, std::string_view text);
std::string vectors_to_string(const std::vector<Vector>& vs);

std::vector<Certificate> hj_certificates(const HjNumberResult& result);
Certificate fu_certificate(const FuRamseyResult& result);
Certificate fk_certificate(const FkDensityResult& result);
Certificate example_a_certificate(const ExampleA& a, const ExampleAChecks& checks);

/// What recurrence-type certificates need to rebuild the computation.
struct DynamicsContext {
  std::string system_text;
  std::string event;
  std::string phi;
  Rational epsilon;
  std::string window;
  std::size_t domain_dim = 1;
};

Certificate ipstar_certificate(const DynamicsContext& ctx, unsigned r, const std::vector<Vector>& witness);
Certificate isometric_certificate(const DynamicsContext& ctx, const std::vector<MonomialMap>& ms,
                                  const std::vector<Vector>& gens, const IsometricSearchResult& result);

struct CheckResult {
  bool ok = false;
  std::string message;
};

/// Re-validates with the independent verification routines only; never calls
/// a search.
CheckResult check_certificate(const Certificate& c);

}  // namespace ipr::cli
