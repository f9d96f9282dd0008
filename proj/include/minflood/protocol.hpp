#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>

namespace minflood {

using Value = std::int64_t;

/// Per-process state of the min-flooding protocol. Identity-free: behavior
/// depends only on the input value and the values received so far.
struct ProcessState {
  Value input = 0;
  Value current_min = 0;  // running minimum over the input and everything heard
  std::optional<Value> decided;
  int quiet_rounds = 0;  // consecutive rounds with no received messages

  bool has_decided() const { return decided.has_value(); }

  friend bool operator==(const ProcessState&, const ProcessState&) = default;
};

inline ProcessState initial_state(Value input) { return ProcessState{input, input, {}, 0}; }

/// Decide after a fixed number of rounds (requires a bound on n).
struct KnownBound {
  long gamma = 0;
};

/// Decide after quiet_period consecutive rounds without neighbors.
struct UnknownSize {
  int quiet_period = 1;
};

using ProtocolVariant = std::variant<KnownBound, UnknownSize>;

/// Round budget for p-agreement: max(0, p(n-p-1)+1).
long budget_p_agreement(long n, long p);

struct KBudget {
  long k = 0;
  long gamma = 0;
};

/// Round budget for k-agreement with k = ceil((1+eps)p):
/// gamma = ceil(1 + k(n-k-1) / (1 + k*eps/(1+eps))), clamped at zero.
KBudget budget_k_agreement(long n, long p, double epsilon);

/// Broadcast payload: the current minimum, delivered identically to every
/// neighbor. Decided processes keep broadcasting.
inline Value outgoing_message(const ProcessState& state) { return state.current_min; }

/// One synchronous round for one process. Decided states are returned
/// unchanged. Otherwise the minimum absorbs any smaller received value, the
/// quiet counter is advanced (reset on any reception), and the variant's
/// decision rule fires: KnownBound decides once round+1 >= gamma, UnknownSize
/// once quiet_rounds reaches the quiet period.
ProcessState step(const ProcessState& state, std::span<const Value> received,
                  const ProtocolVariant& variant, long round);

}  // namespace minflood
