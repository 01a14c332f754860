#pragma once

#include "kerov/partitions.hpp"
#include "kerov/rational.hpp"

namespace kerov {

BigInt dimension(const YoungDiagram& lambda);
// chi^lambda at the class rho, |rho| = |lambda|; Murnaghan-Nakayama over rim hooks
BigInt character(const YoungDiagram& lambda, const Partition& rho);
// chi^lambda_{rho u 1^{n-|rho|}} / dim lambda; rho may contain ones; requires |rho| <= n
Rational character_ratio(const YoungDiagram& lambda, const Partition& rho);
Rational plancherel_weight(const YoungDiagram& lambda);

void clear_character_cache();

}  // namespace kerov
