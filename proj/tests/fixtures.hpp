#pragma once

#include <string>
#include <vector>

#include "altknot/diagram.hpp"
#include "altknot/generator.hpp"

namespace fx {

inline const std::string trefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
inline const std::string flipped_trefoil = "X(4,2,5,1) X(3,6,4,1) X(5,2,6,3)";
inline const std::string hopf = "X(4,1,3,2) X(2,3,1,4)";
inline const std::string kink = "X(1,1,2,2)";

inline altknot::Diagram torus(int n) { return altknot::braid_closure(2, std::vector<int>(n, 1)); }
inline altknot::Diagram figure_eight() { return altknot::braid_closure(3, {1, -2, 1, -2}); }
inline altknot::Diagram borromean() { return altknot::braid_closure(3, {1, -2, 1, -2, 1, -2}); }
inline altknot::Diagram trefoil_sum() { return altknot::braid_closure(3, {1, 1, 1, 2, 2, 2}); }

}  // namespace fx
