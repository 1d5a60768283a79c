#pragma once

#include <string>
#include <vector>

#include "toricdef/deformation.hpp"

namespace toricdef {

// Built-in singularity presentations:
//   a1                  K[x,y,z]/(z^2 - x*y)
//   a2-like             K[x,y,z]/(z^3 - x*y), weights (3,3,2)
//   twisted-cubic-cone  K[x,y,z,w]/(xw-yz, y^2-xz, z^2-yw) with the
//                       resolution matrices "psi", "syzygy", "jacobian"
//   sym3-cone           K[s0..s3]/(s0s2-s1^2, s1s2-s0s3, s1s3-s2^2) with
//                       the resolution maps "alpha", "beta", "gamma"
std::vector<std::string> preset_names();
SingularityPresentation preset(const std::string& name);

}  // namespace toricdef
