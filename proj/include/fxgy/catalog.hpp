#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fxgy/families.hpp"

namespace fxgy {

struct ExampleReport {
  std::string id;
  std::string title;
  std::vector<CheckRecord> checks;
  std::vector<Certificate> certificates;
  bool passed() const;
};

/// Every id known to the regression suite, in report order.
const std::vector<std::string>& example_ids();

/// Runs one example. Throws UnknownExampleId.
ExampleReport run_example(const std::string& id, int horizon);

/// "all" or a comma-separated list of ids, reported in catalog order.
/// Throws UnknownExampleId before running anything.
std::vector<ExampleReport> run_examples(const std::string& selection, int horizon);

/// Ids accepted by example_families.
const std::vector<std::string>& family_example_ids();

/// The equation families of an example (6.1 has three). Throws
/// UnknownExampleId.
std::vector<EquationFamily> example_families(const std::string& id);

}  // namespace fxgy
