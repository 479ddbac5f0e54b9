#pragma once

#include "mdim/formulas.hpp"
#include "mdim/graph.hpp"
#include "mdim/metric.hpp"
#include "mdim/vertex_set.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mdim {

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BallViolation {
    Vertex center = 0;
    std::size_t ball_size = 0;
    BigInt bound;
};

struct NearViolation {
    Edge pair;
    std::size_t near_distinguishers = 0; // |D(x,y) ∩ ball(S,2)|
    std::size_t required = 0;            // k + 1
};

// Every vertex within distance 2 of S. Throws on empty S.
VertexSet expand_radius2(const DistanceMatrix& dm, const VertexSet& s);

// Compares |{u : d(u,v) <= d}| with 1 + d(2d+1)^(|S|-1) for every v in S.
// S must be resolving; throws PreconditionError otherwise.
std::vector<BallViolation> check_ball_growth(const DistanceMatrix& dm, const PairDistinguishers& pd,
                                             const VertexSet& s, std::size_t d);

// For pairs with |S ∩ D(x,y)| >= k, requires k + 1 distinguishers inside
// ball(S,2). Needs kappa >= k + 1 and S k-resolving.
std::vector<NearViolation> check_near_distinguisher(const PairDistinguishers& pd, const DistanceMatrix& dm,
                                                    const VertexSet& s, std::size_t k);

} // namespace mdim
