#pragma once

#include "superwig/oracle.hpp"

#include <map>
#include <string>
#include <vector>

namespace sw {

// One tensor step V (x) R(source), decomposed into GT-adapted components.
struct Coupling {
    Weight source;
    RepModule T;
    std::vector<Component> components;
};

// Irreducible constituents of V^(x)k (covariant) or V*^(x)k (contravariant), k <= kmax,
// each realized in its GT basis.
struct Family {
    Shape shape;
    Direction direction = Direction::covariant;
    int kmax = 0;
    RepModule V;
    std::map<Weight, RepModule> members;
    std::vector<std::vector<Weight>> levels;   // levels[k]: constituents first reached at k
    std::map<Weight, Coupling> couplings;      // V (x) R(source) for sources below kmax
    std::vector<std::string> excluded;         // components dropped as not realizable
};

Family build_family(const Shape& s, Direction d, int kmax);
const Family& cached_family(const Shape& s, Direction d, int kmax);

} // namespace sw
