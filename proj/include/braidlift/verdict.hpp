#ifndef BRAIDLIFT_VERDICT_HPP
#define BRAIDLIFT_VERDICT_HPP

#include <string>
#include <vector>

#include "braidlift/braid.hpp"
#include "json.hpp"

namespace braidlift {

enum class VerdictKind { Liftable, NotLiftable, UnknownWithinBound };

const char* verdict_name(VerdictKind k);

struct LiftVerdict {
  VerdictKind kind = VerdictKind::UnknownWithinBound;
  std::vector<BraidWord> witness;  // images of the generators / arcs, when Liftable
  std::string obstruction;         // reason, when NotLiftable
  int bound = 0;                   // search bound, when UnknownWithinBound
  std::string route;               // which procedure decided, when known

  static LiftVerdict liftable(std::vector<BraidWord> w) { return {VerdictKind::Liftable, std::move(w), {}, 0, {}}; }
  static LiftVerdict not_liftable(std::string why) { return {VerdictKind::NotLiftable, {}, std::move(why), 0, {}}; }
  static LiftVerdict unknown(int bound) { return {VerdictKind::UnknownWithinBound, {}, {}, bound, {}}; }

  nlohmann::json to_json() const;
};

}  // namespace braidlift

#endif
