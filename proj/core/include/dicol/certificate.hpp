#pragma once

#include <string>
#include <vector>

namespace dicol {

// One named claim about a generated object. Claims marked checked were
// verified through the public operations before the object was returned;
// holds records the outcome. Unchecked claims are design notes.
struct CertEntry {
  std::string name;
  std::string detail;
  bool checked = false;
  bool holds = false;
};

inline bool certificate_ok(const std::vector<CertEntry>& cert) {
  for (const CertEntry& e : cert)
    if (e.checked && !e.holds) return false;
  return true;
}

}  // namespace dicol
