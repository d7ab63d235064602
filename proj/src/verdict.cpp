#include "braidlift/verdict.hpp"

namespace braidlift {

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Liftable: return "Liftable";
    case VerdictKind::NotLiftable: return "NotLiftable";
    case VerdictKind::UnknownWithinBound: return "UnknownWithinBound";
  }
  return "?";
}

nlohmann::json LiftVerdict::to_json() const {
  nlohmann::json j;
  j["verdict"] = verdict_name(kind);
  if (kind == VerdictKind::Liftable) {
    j["witness"] = nlohmann::json::array();
    for (auto& w : witness) j["witness"].push_back(w.str());
  }
  if (kind == VerdictKind::NotLiftable) j["obstruction"] = obstruction;
  if (kind == VerdictKind::UnknownWithinBound) j["bound"] = bound;
  if (!route.empty()) j["route"] = route;
  return j;
}

}  // namespace braidlift
