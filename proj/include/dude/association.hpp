#pragma once

#include <cstdint>
#include <vector>

#include "dude/channel.hpp"
#include "dude/config.hpp"
#include "dude/deployment.hpp"

namespace dude {

// Per-UE serving cells for one policy. Under the coupled policy the UL
// cell equals the DL cell for every UE.
struct AssociationMap {
  UlPolicy policy = UlPolicy::coupled;
  std::vector<int> dl_cell;
  std::vector<int> ul_cell;

  bool operator==(const AssociationMap&) const = default;
};

// DL cell = argmax of (tx_power - coupling_loss + bias); fading excluded,
// ties broken by lowest BS index.
std::vector<int> associate_dl(const Deployment& deployment,
                              const LinkState& links);

// coupled: copy of dl_assoc. decoupled: argmin coupling loss, bias ignored,
// ties broken by lowest BS index.
std::vector<int> associate_ul(UlPolicy policy, const Deployment& deployment,
                              const LinkState& links,
                              const std::vector<int>& dl_assoc);

// Share of UEs whose UL cell differs from their DL cell.
double decoupling_fraction(const AssociationMap& assoc);

enum class Direction { dl, ul };

struct CellLoad {
  std::vector<int> ue_count;  // per BS
  double macro_mean = 0.0;    // attached UEs / BS count, per tier
  double small_mean = 0.0;
  std::size_t macro_cells = 0;
  std::size_t small_cells = 0;
};

CellLoad load_by_cell(const AssociationMap& assoc, const Deployment& deployment,
                      Direction direction);

// Attached UE indices per cell, ascending.
std::vector<std::vector<int>> group_ues_by_cell(const std::vector<int>& serving,
                                                std::size_t bs_count);

}  // namespace dude
