#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "envelopes/beliefs.hpp"
#include "envelopes/numerics.hpp"

namespace envelopes {

/// Which side of the table a player sits on. The opener's own amount is the
/// one revealed; the observer sees the opponent's amount. Both decide from
/// the same revealed value.
enum class Perspective { Opener, Observer };

enum class Action { RequestExchange, Keep };

/// Threshold strategy: classify the revealed amount against the belief's
/// intermediate amount M and act to end up holding the believed-larger
/// envelope.
struct IasStrategy {
  Belief belief;
};

struct AlwaysExchange {};

struct NeverExchange {};

/// Requests exchange with probability p, drawing exactly one number from the
/// caller's stream per decision so rounds stay reproducible.
struct RandomExchange {
  double p = 0.5;
};

using Strategy =
    std::variant<IasStrategy, AlwaysExchange, NeverExchange, RandomExchange>;

/// Opener with revealed <= M believes he holds the smaller amount and
/// requests; the observer with revealed > M believes the opponent holds the
/// larger amount (so his own is the smaller) and requests. The two IAS rules
/// with one shared M partition the line: exactly one side requests.
Action decide(const Strategy& strategy, double revealed,
              Perspective perspective, RandomStream& rs);

/// The exchange happens only if both players request it.
bool resolve_exchange(Action opener_action, Action observer_action);

/// Parses a strategy spec string:
///   ias-uniform:N=<amount>
///   ias-normal:X=<amount>[,cv=<real>]
///   always
///   never
///   random:p=<prob>
Strategy parse_strategy(std::string_view text);

/// Canonical spec string for a strategy (inverse of parse_strategy).
std::string describe_strategy(const Strategy& strategy);

}  // namespace envelopes
