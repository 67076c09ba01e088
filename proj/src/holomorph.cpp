#include "nqr/holomorph.hpp"

#include <algorithm>
#include <set>

#include "nqr/errors.hpp"

namespace nqr {

namespace {

bool shape_holds(const GroupTable& t, const PermGroup& h, const ConnectionCandidate& c) {
  std::set<std::uint32_t> remaining(c.set.begin(), c.set.end());
  std::vector<std::vector<Point>> orbits;
  while (!remaining.empty()) {
    auto o = orbit(h, *remaining.begin());
    for (auto x : o)
      if (remaining.erase(x) == 0) return false;
    orbits.push_back(std::move(o));
  }
  const auto inverted = [&](const std::vector<Point>& o) {
    std::vector<Point> inv;
    for (auto x : o) inv.push_back(t.inverse(x));
    std::sort(inv.begin(), inv.end());
    return inv;
  };
  if (c.shape == OrbitShape::one_orbit) return orbits.size() == 1 && inverted(orbits[0]) == orbits[0];
  return orbits.size() == 2 && inverted(orbits[0]) == orbits[1] && orbits[0] != orbits[1];
}

}  // namespace

std::size_t HolomorphReport::count(OrbitShape shape) const {
  return static_cast<std::size_t>(std::count_if(candidates.begin(), candidates.end(),
                                                [&](const auto& c) { return c.candidate.shape == shape; }));
}

std::vector<std::size_t> HolomorphReport::violations() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i].params && !candidates[i].complete) out.push_back(i);
  return out;
}

HolomorphReport falsify_holomorph(const GroupTable& t, const PermGroup& h, std::size_t cap) {
  if (t.order() > cap)
    throw ResourceError("falsify_holomorph: |T| = " + std::to_string(t.order()) + " exceeds cap " +
                        std::to_string(cap));
  HolomorphReport report;
  report.group_order = t.order();
  report.nonabelian_simple = t.is_nonabelian_simple();
  for (auto& c : holomorph_orbit_sets(t, h)) {
    HolomorphCandidate entry;
    const FamilyInstance cay = cayley_graph(t, c.set);
    entry.params = srg_params(cay.graph);
    entry.complete = is_complete(cay.graph);
    entry.shape_verified = shape_holds(t, h, c);
    entry.candidate = std::move(c);
    report.candidates.push_back(std::move(entry));
  }
  return report;
}

Json to_json(const HolomorphReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    Json j{{"shape", std::string(to_string(c.candidate.shape))},
           {"size", c.candidate.set.size()},
           {"set", c.candidate.set}};
    j["srg"] = c.params ? to_json(*c.params) : Json(nullptr);
    j["complete"] = c.complete;
    j["shape_verified"] = c.shape_verified;
    candidates.push_back(std::move(j));
  }
  return Json{{"order", r.group_order},
              {"nonabelian_simple", r.nonabelian_simple},
              {"one_orbit", r.count(OrbitShape::one_orbit)},
              {"two_orbit", r.count(OrbitShape::two_orbit)},
              {"candidates", std::move(candidates)},
              {"violations", r.violations()}};
}

}  // namespace nqr
