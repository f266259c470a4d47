#pragma once

#include "maps.hpp"

namespace segalbar {

// level [n] corresponds to the interval ordinal n+2
int j_ob(int level);
// interval ordinal n corresponds to the partial-map ordinal n-2
int h_ob(int n);

// the isomorphism onto interval maps: an arrow [m] -> [n] becomes m+2 -> n+2
IntervalMap j_map(const OpArrow& a);
OpArrow j_inverse(const IntervalMap& f);

// strips both endpoints; interior values shift down by one, values hitting an
// endpoint become undefined
PartialMap h_map(const IntervalMap& f);

PartialMap hj_map(const OpArrow& a);

// the arrow [n] -> [1] picking out the j-th edge, 1 <= j <= n; identity for n = 1
OpArrow edge_arrow(int n, int j);

}  // namespace segalbar
