#include "minflood/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minflood {

namespace {

// Round-count formulas are exact rationals evaluated in doubles; the slack
// keeps values that land on an integer from ceiling up one spuriously.
long ceil_rounds(double x) { return static_cast<long>(std::ceil(x - 1e-9)); }

void check_np(long n, long p, const char* who) {
  if (n < 1 || p < 1) throw std::invalid_argument(std::string(who) + ": n and p must be positive");
}

}  // namespace

long budget_p_agreement(long n, long p) {
  check_np(n, p, "budget_p_agreement");
  return std::max<long>(0, p * (n - p - 1) + 1);
}

KBudget budget_k_agreement(long n, long p, double epsilon) {
  check_np(n, p, "budget_k_agreement");
  if (!(epsilon > 0.0)) throw std::invalid_argument("budget_k_agreement: epsilon must be positive");

  const long k = ceil_rounds((1.0 + epsilon) * static_cast<double>(p));
  const double denom = 1.0 + static_cast<double>(k) * epsilon / (1.0 + epsilon);
  const double gamma = 1.0 + static_cast<double>(k) * static_cast<double>(n - k - 1) / denom;
  return KBudget{k, std::max<long>(0, ceil_rounds(gamma))};
}

ProcessState step(const ProcessState& state, std::span<const Value> received,
                  const ProtocolVariant& variant, long round) {
  if (state.has_decided()) return state;

  ProcessState next = state;
  if (received.empty()) {
    next.quiet_rounds += 1;
  } else {
    next.quiet_rounds = 0;
    next.current_min = std::min(next.current_min, *std::min_element(received.begin(), received.end()));
  }

  if (const auto* kb = std::get_if<KnownBound>(&variant)) {
    if (round + 1 >= kb->gamma) next.decided = next.current_min;
  } else {
    const auto& us = std::get<UnknownSize>(variant);
    if (next.quiet_rounds >= us.quiet_period) next.decided = next.current_min;
  }
  return next;
}

}  // namespace minflood
