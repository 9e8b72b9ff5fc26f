#include <limits>

#include "common.hpp"
#include "polyhyp/invariants.hpp"

namespace polyhyp {

  std::string_view to_string(Bound b) {
    switch (b) {
      case Bound::exact: return "exact";
      case Bound::lower: return "lower";
      case Bound::upper: return "upper";
    }
    return "exact";
  }

  SamplingPlan SamplingPlan::exhaustive(std::size_t geodesic_cap) {
    SamplingPlan p;
    p.geodesic_cap = geodesic_cap;
    return p;
  }

  SamplingPlan SamplingPlan::random(std::size_t   samples,
                                    std::uint64_t seed,
                                    std::size_t   geodesic_cap) {
    SamplingPlan p;
    p.mode         = Mode::random;
    p.samples      = samples;
    p.seed         = seed;
    p.geodesic_cap = geodesic_cap;
    return p;
  }

  std::size_t TupleSampler::below(std::size_t n) {
    if (n == 0) {
      throw std::invalid_argument("cannot draw from an empty range");
    }
    std::uint64_t const bound = n;
    std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max()
                                - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = _engine();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  }

  std::vector<Vertex> TupleSampler::tuple(std::size_t arity, std::size_t n) {
    std::vector<Vertex> t(arity);
    for (auto& v : t) {
      v = static_cast<Vertex>(below(n));
    }
    return t;
  }

  std::vector<std::vector<Vertex>>
  draw_tuples(SamplingPlan const& plan, std::size_t arity, std::size_t n) {
    TupleSampler                     s(plan.seed);
    std::vector<std::vector<Vertex>> out;
    out.reserve(plan.samples);
    for (std::size_t i = 0; i < plan.samples; ++i) {
      out.push_back(s.tuple(arity, n));
    }
    return out;
  }

  Bound bound_for(SamplingPlan const& plan, bool cap_hit) {
    return plan.is_exhaustive() && !cap_hit ? Bound::exact : Bound::lower;
  }

  double InvariantResult::value() const {
    if (doubled) {
      return static_cast<double>(*doubled) / 2.0;
    }
    return real.value_or(0.0);
  }

  std::string_view to_string(SideMode m) {
    switch (m) {
      case SideMode::all: return "all";
      case SideMode::enumerate: return "enumerate";
      case SideMode::interval: return "interval";
    }
    return "all";
  }

  std::string_view to_string(MeshMode m) {
    return m == MeshMode::geodesic ? "geodesic" : "adversarial";
  }

}  // namespace polyhyp
