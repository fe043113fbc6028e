#include "zenokit/extrapolation.hpp"

namespace zenokit {

std::string to_string(AbstractionKind k) {
  std::string base;
  switch (k.profile) {
    case ProfileKind::M: base = "m"; break;
    case ProfileKind::LU: base = "lu"; break;
    case ProfileKind::WeakL: base = "lbar-u"; break;
    case ProfileKind::WeakU: base = "l-ubar"; break;
  }
  return k.variant == Variant::Plus ? base + "+" : base;
}

std::optional<AbstractionKind> parse_abstraction(std::string_view name) {
  for (const auto& k : abstraction::kAll)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

bool is_lift_safe(AbstractionKind k) { return k.profile == ProfileKind::M || k.profile == ProfileKind::WeakU; }

bool is_weakly_order_preserving(AbstractionKind k) {
  return k.profile == ProfileKind::M || k.profile == ProfileKind::WeakL;
}

}  // namespace zenokit
