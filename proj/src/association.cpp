#include "dude/association.hpp"

#include <cassert>

namespace dude {

std::vector<int> associate_dl(const Deployment& deployment,
                              const LinkState& links) {
  const std::size_t n_ue = deployment.ues.size();
  const std::size_t n_bs = deployment.bs.size();
  assert(n_bs > 0);
  std::vector<int> serving(n_ue, 0);
  for (std::size_t ue = 0; ue < n_ue; ++ue) {
    int best = 0;
    double best_metric = deployment.bs[0].tx_power_dbm -
                         links.coupling_loss_db(ue, 0) +
                         deployment.bs[0].bias_db;
    for (std::size_t bs = 1; bs < n_bs; ++bs) {
      const double metric = deployment.bs[bs].tx_power_dbm -
                            links.coupling_loss_db(ue, bs) +
                            deployment.bs[bs].bias_db;
      if (metric > best_metric) {
        best_metric = metric;
        best = static_cast<int>(bs);
      }
    }
    serving[ue] = best;
  }
  return serving;
}

std::vector<int> associate_ul(UlPolicy policy, const Deployment& deployment,
                              const LinkState& links,
                              const std::vector<int>& dl_assoc) {
  if (policy == UlPolicy::coupled) {
    assert(dl_assoc.size() == deployment.ues.size());
    return dl_assoc;
  }
  const std::size_t n_ue = deployment.ues.size();
  const std::size_t n_bs = deployment.bs.size();
  std::vector<int> serving(n_ue, 0);
  for (std::size_t ue = 0; ue < n_ue; ++ue) {
    int best = 0;
    double best_loss = links.coupling_loss_db(ue, 0);
    for (std::size_t bs = 1; bs < n_bs; ++bs) {
      const double loss = links.coupling_loss_db(ue, bs);
      if (loss < best_loss) {
        best_loss = loss;
        best = static_cast<int>(bs);
      }
    }
    serving[ue] = best;
  }
  return serving;
}

double decoupling_fraction(const AssociationMap& assoc) {
  if (assoc.dl_cell.empty()) return 0.0;
  std::size_t split = 0;
  for (std::size_t ue = 0; ue < assoc.dl_cell.size(); ++ue) {
    if (assoc.dl_cell[ue] != assoc.ul_cell[ue]) ++split;
  }
  return static_cast<double>(split) / static_cast<double>(assoc.dl_cell.size());
}

CellLoad load_by_cell(const AssociationMap& assoc, const Deployment& deployment,
                      Direction direction) {
  const auto& serving =
      direction == Direction::dl ? assoc.dl_cell : assoc.ul_cell;
  CellLoad load;
  load.ue_count.assign(deployment.bs.size(), 0);
  for (int cell : serving) ++load.ue_count[static_cast<std::size_t>(cell)];

  std::size_t macro_attached = 0;
  std::size_t small_attached = 0;
  for (std::size_t bs = 0; bs < deployment.bs.size(); ++bs) {
    if (deployment.bs[bs].tier == Tier::macro) {
      ++load.macro_cells;
      macro_attached += static_cast<std::size_t>(load.ue_count[bs]);
    } else {
      ++load.small_cells;
      small_attached += static_cast<std::size_t>(load.ue_count[bs]);
    }
  }
  if (load.macro_cells > 0) {
    load.macro_mean = static_cast<double>(macro_attached) /
                      static_cast<double>(load.macro_cells);
  }
  if (load.small_cells > 0) {
    load.small_mean = static_cast<double>(small_attached) /
                      static_cast<double>(load.small_cells);
  }
  return load;
}

std::vector<std::vector<int>> group_ues_by_cell(const std::vector<int>& serving,
                                                std::size_t bs_count) {
  std::vector<std::vector<int>> attached(bs_count);
  for (std::size_t ue = 0; ue < serving.size(); ++ue) {
    attached[static_cast<std::size_t>(serving[ue])].push_back(
        static_cast<int>(ue));
  }
  return attached;
}

}  // namespace dude
