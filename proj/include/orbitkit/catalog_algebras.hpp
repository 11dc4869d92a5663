#pragma once

#include <string>
#include <vector>

#include "orbitkit/liealg.hpp"

namespace orbitkit::algebras {

LieAlgebra abelian(std::size_t n);
LieAlgebra heisenberg3();          // [e1,e2] = e3
LieAlgebra axb();                  // [a,b] = b
LieAlgebra g49_0();                // [e0,e1] = -e1, [e0,e2] = e2, [e1,e2] = e3
LieAlgebra b5();                   // basis d, e0, e1, e2, e3
LieAlgebra e2_motion();            // [a,x] = y, [a,y] = -x
LieAlgebra heisenberg3_plus_line();  // h3 + R z

/// Looks up a catalog name; "abelian<n>" for any n >= 1.
std::optional<LieAlgebra> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace orbitkit::algebras
