#pragma once

#include "ipr/dynamics/system.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ipr {

/// Line-oriented system description. `#` starts a comment; one directive per
/// line:
///
///   backend finite_perm | rotation | bernoulli
///   id <free text>
///   prime <p>                   finite_perm, bernoulli
///   points <n>                  finite_perm
///   weights <q_0> .. <q_{n-1}>  finite_perm, default uniform
///   generator (0 1 2)(3 4)      finite_perm, one per basis vector of F_p^n
///   regular                     finite_perm: X = F_p, x -> x + 1
///   rho <q_1> .. <q_n>          rotation
///   base <q_0> .. <q_{k-1}>     bernoulli letter distribution
///   event <body>                repeatable; the first is the default B
///
/// Event bodies: point indices `0 1` (finite_perm); endpoint pairs
/// `0 1/2 3/4 1` for [0,1/2) ∪ [3/4,1) (rotation); `coord:letter` entries
/// such as `0:0 [0,1]:1` (bernoulli, coordinates in F_p[t] notation). `none`
/// is the empty event.
struct SystemFile {
  MeasureSystem system;
  std::vector<EventSet> events;
};

/// Error carrying the 1-based line it refers to (0 when not line-specific).
class SystemParseError : public std::invalid_argument {
 public:
  SystemParseError(std::size_t line, const std::string& message)
      : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

SystemFile parse_system(std::string_view text);
SystemFile load_system(const std::string& path);

EventSet parse_event(const MeasureSystem& sys, std::string_view body);

/// Inverse of parse_system (generators written in cycle notation).
std::string system_to_text(const SystemFile& file);

}  // namespace ipr
