#pragma once

#include <string>
#include <vector>

#include "netheat/graph.hpp"

namespace netheat::fixtures {

// Shared gallery used across tests and the `fixtures` CLI command.
//
//   P3        v0-v1-v2-v3 path, no flags
//   SINGLE    one edge a->b
//   SINGLE-D  one edge a->b, head b flagged
//   SINGLE-DD one edge a->b, both endpoints flagged
//   STAR4INF  center c flagged, 4 pendant out-edges c->l1..l4
//   STARK(k)  finite star, k pendant out-edges, center unflagged
//   INSTARK(k) k pendant edges oriented into the center
//   K3PAIRINF two triangles bridged through a flagged vertex w
//   EEINF     edge between two flagged vertices plus a disjoint P3

Graph p3();
Graph single();
Graph single_d();
Graph single_dd();
Graph star4_inf();
Graph star_k(int k);
Graph in_star_k(int k, bool center_flagged = false);
Graph k3pair_inf();
Graph ee_inf();

/// All fixed-size gallery members (STARK represented by k = 4), with
/// their canonical names.
std::vector<std::pair<std::string, Graph>> gallery();

}  // namespace netheat::fixtures
