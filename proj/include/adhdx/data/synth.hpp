#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "adhdx/data/preprocess.hpp"
#include "adhdx/data/table.hpp"

namespace adhdx {

// Desk-scale stand-in for the phenotypic file. The three ADHD rating scales
// carry the class signal (class-conditional Gaussians with separated means);
// every other column is class-independent noise. 2% of cells are flagged
// missing, except DX, which must stay defined for label construction.
// Byte-identical output per (counts, seed).
std::pair<DataTable, LabelVector> synth_generate(const std::array<int, 4>& n_per_class,
                                                 std::uint64_t seed);

}  // namespace adhdx
