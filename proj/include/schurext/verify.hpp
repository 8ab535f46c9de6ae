#ifndef SCHUREXT_VERIFY_HPP
#define SCHUREXT_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace schurext {

struct CatalogEntry {
  std::string group;
  std::string functor;
};
// Functors of degree at most 4 adapted to the classical groups and their products.
std::vector<CatalogEntry> classical_catalog();

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::size_t passed = 0, failed = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool ok() const { return failed == 0 && passed > 0; }
};

using Progress = std::function<void(const std::string&)>;

// yoneda, key-lemma, twist-ext, degree0, contractions, stabilization, involution, calcul-p3,
// hopf-section, hopf-axiom
const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const Progress& progress = {});

}  // namespace schurext

#endif
