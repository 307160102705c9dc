#pragma once

#include "mfd/document.hpp"

#include <optional>

namespace mfd {

/// Built-in worked examples: the D-infinity triple, a product-of-linear-forms
/// triple, the E6/E7/E8 curve-singularity triples over F_7, and a d = 2 pair.
struct CorpusItem {
  std::string name;
  MFDocument doc;
  std::optional<bool> expect_reduced;
  std::optional<std::vector<int>> expect_syzygy_mult;  // projective multiplicities of the syzygy
  std::optional<int> expect_stable_size;
};

const std::vector<CorpusItem>& corpus();

/// Item lookup by name; throws std::out_of_range when missing.
const CorpusItem& corpus_item(const std::string& name);

}  // namespace mfd
