#include "ipr/ip/fk_density.hpp"

#include "ipr/ip/finite_sums.hpp"

#include <stdexcept>

namespace ipr {

bool is_ip_r_free(const std::vector<std::int64_t>& set, unsigned r) {
  ElementSet<std::int64_t> s(set);
  SearchOptions serial;
  serial.workers = 1;
  return contains_ip_r(s, r, s, serial).status == SearchStatus::absent;
}

namespace {

struct BranchAndBound {
  unsigned r;
  unsigned n;
  BudgetMeter& meter;
  std::vector<std::int64_t> current;
  std::vector<std::int64_t> best;
  bool interrupted = false;

  void run(std::int64_t next) {
    if (interrupted) return;
    if (current.size() > best.size()) best = current;
    if (next > static_cast<std::int64_t>(n)) return;
    if (current.size() + (n - static_cast<std::size_t>(next) + 1) <= best.size()) return;
    if (!meter.charge()) {
      interrupted = true;
      return;
    }
    current.push_back(next);
    if (is_ip_r_free(current, r)) run(next + 1);
    current.pop_back();
    run(next + 1);
  }
};

}  // namespace

FkDensityResult fk_density_experiment(unsigned r, unsigned n, const SearchOptions& options) {
  if (r == 0 || n == 0) throw std::invalid_argument("fk_density_experiment needs r, N >= 1");
  if (n > 64) throw std::invalid_argument("fk_density_experiment: N beyond exhaustive range");
  BudgetMeter meter(options);
  BranchAndBound bb{r, n, meter, {}, {}};
  bb.run(1);

  FkDensityResult out;
  out.r = r;
  out.n = n;
  out.candidates = meter.used();
  if (bb.interrupted) {
    out.status = SearchStatus::budget_exceeded;
    return out;
  }
  out.complement = bb.best;
  out.value = Rational(static_cast<long>(n - bb.best.size()), static_cast<long>(n));
  out.value.canonicalize();
  if (r >= 2) {
    std::vector<std::int64_t> odds;
    for (std::int64_t x = 1; x <= static_cast<std::int64_t>(n); x += 2) odds.push_back(x);
    if (is_ip_r_free(odds, r)) {
      out.odd_certificate = Rational(static_cast<long>(odds.size()), static_cast<long>(n));
      out.odd_certificate->canonicalize();
    }
  }
  return out;
}

}  // namespace ipr
