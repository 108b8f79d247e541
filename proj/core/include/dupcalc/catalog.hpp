#ifndef DUPCALC_CATALOG_HPP_
#define DUPCALC_CATALOG_HPP_

#include <string>
#include <vector>

#include "dupcalc/axioms.hpp"
#include "dupcalc/duplicator.hpp"

namespace dupcalc {

// Built-in library of named algebras, duplicators and axiom suites.
// Read-only after first use.
struct CatalogInfo {
  std::string key;
  std::string kind;  // "algebra" | "duplicator" | "axiom-suite"
  std::string description;
};

const FiniteAlgebra& catalog_algebra(const std::string& key);
const Duplicator& catalog_duplicator(const std::string& key);
const AxiomSuite& catalog_axiom_suite(const std::string& key);

bool catalog_has_algebra(const std::string& key);
bool catalog_has_duplicator(const std::string& key);

// All entries of the given kind ("" = everything), sorted by key.
std::vector<CatalogInfo> catalog_list(const std::string& kind = "");

}  // namespace dupcalc

#endif  // DUPCALC_CATALOG_HPP_
