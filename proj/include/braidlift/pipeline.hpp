#ifndef BRAIDLIFT_PIPELINE_HPP
#define BRAIDLIFT_PIPELINE_HPP

#include <optional>
#include <vector>

#include "braidlift/coloring.hpp"
#include "braidlift/link.hpp"
#include "braidlift/verdict.hpp"

namespace braidlift {

// What the caller knows about the diagram. A pretzel form must be the diagram itself
// (pretzel_diagram(q)), so strands line up with twist regions.
struct KnownForm {
  std::optional<TwoBridgeForm> two_bridge;
  std::optional<std::vector<int>> pretzel;
};

// Exact routes first (two-bridge decision, pretzel classifier, Alexander divisibility), then
// the bounded search. The verdict's route names the step that decided.
LiftVerdict decide_lift(const LinkDiagram& d, const GColoring& tricoloring, int bound, const KnownForm& form = {});

}  // namespace braidlift

#endif
