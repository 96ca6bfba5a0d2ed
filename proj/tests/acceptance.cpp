// Runs every reproduction check with the default bounds and prints one line
// per criterion. Exit status is nonzero if any criterion fails.
#include <iostream>

#include "toric/verify.hpp"

int main() {
  toric::VerifyConfig cfg;
  const auto records = toric::verify_paper(cfg);
  bool all = true;
  for (const auto& r : records) {
    all = all && r.pass;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": " << r.anchor << " (" << r.details
              << ")\n";
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << "\n";
  return all ? 0 : 1;
}
