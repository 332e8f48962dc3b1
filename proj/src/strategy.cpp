#include "envelopes/strategy.hpp"

#include <cstdio>
#include <stdexcept>

#include "spec_grammar.hpp"

namespace envelopes {

namespace {

std::string format_amount(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

Action decide(const Strategy& strategy, double revealed,
              Perspective perspective, RandomStream& rs) {
  if (!(revealed > 0.0)) {
    throw std::invalid_argument("decide: revealed amount must be positive");
  }
  struct Visitor {
    double revealed;
    Perspective perspective;
    RandomStream& rs;

    Action operator()(const IasStrategy& s) const {
      const double m = intermediate_amount(s.belief);
      const bool believes_revealed_smaller = revealed <= m;
      // Opener holds the revealed envelope and wants out of it iff he thinks
      // it is the smaller; the observer wants into it iff he thinks it is
      // the larger.
      if (perspective == Perspective::Opener) {
        return believes_revealed_smaller ? Action::RequestExchange
                                         : Action::Keep;
      }
      return believes_revealed_smaller ? Action::Keep
                                       : Action::RequestExchange;
    }
    Action operator()(const AlwaysExchange&) const {
      return Action::RequestExchange;
    }
    Action operator()(const NeverExchange&) const { return Action::Keep; }
    Action operator()(const RandomExchange& s) const {
      // One draw per decision, even for p = 0 or 1.
      const double u = rs.next_unit();
      return u <= s.p ? Action::RequestExchange : Action::Keep;
    }
  };
  return std::visit(Visitor{revealed, perspective, rs}, strategy);
}

bool resolve_exchange(Action opener_action, Action observer_action) {
  return opener_action == Action::RequestExchange &&
         observer_action == Action::RequestExchange;
}

Strategy parse_strategy(std::string_view text) {
  const auto args = detail::SpecArgs::parse(text);
  if (args.name == "always") {
    args.allow_only({});
    return AlwaysExchange{};
  }
  if (args.name == "never") {
    args.allow_only({});
    return NeverExchange{};
  }
  if (args.name == "random") {
    args.allow_only({"p"});
    const double p = args.number("p");
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("strategy 'random': p must be in [0, 1]");
    }
    return RandomExchange{p};
  }
  if (args.name == "ias-uniform") {
    args.allow_only({"N"});
    return IasStrategy{UniformBelief(args.number("N"))};
  }
  if (args.name == "ias-normal") {
    args.allow_only({"X", "cv"});
    const double x_hat = args.number("X");
    if (const auto cv = args.optional_number("cv")) {
      return IasStrategy{NormalBelief(x_hat, *cv)};
    }
    return IasStrategy{NormalBelief(x_hat)};
  }
  throw std::invalid_argument("unknown strategy '" + args.name + "'");
}

std::string describe_strategy(const Strategy& strategy) {
  struct Visitor {
    std::string operator()(const IasStrategy& s) const {
      if (const auto* u = std::get_if<UniformBelief>(&s.belief)) {
        return "ias-uniform:N=" + format_amount(u->n_max);
      }
      const auto& n = std::get<NormalBelief>(s.belief);
      return "ias-normal:X=" + format_amount(n.x_hat) +
             ",cv=" + format_amount(n.cv);
    }
    std::string operator()(const AlwaysExchange&) const { return "always"; }
    std::string operator()(const NeverExchange&) const { return "never"; }
    std::string operator()(const RandomExchange& s) const {
      return "random:p=" + format_amount(s.p);
    }
  };
  return std::visit(Visitor{}, strategy);
}

}  // namespace envelopes
