#pragma once

#include <string>
#include <vector>

namespace schroalg {

enum class CheckStatus { Pass, Fail, Flag };

std::string status_name(CheckStatus s);

// One verification check. "flag" marks a documented convention adopted over
// an inconsistent alternative; flags never fail a run.
struct Check {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
  std::string anchor;  // the mathematical statement being checked
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;

  int count(CheckStatus s) const;
  bool ok() const { return count(CheckStatus::Fail) == 0; }

  void add(std::string id, bool pass, std::string detail, std::string anchor);
  void flag(std::string id, std::string detail, std::string anchor);
};

}  // namespace schroalg
