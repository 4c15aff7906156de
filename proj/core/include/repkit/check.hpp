#pragma once

#include <string>
#include <vector>

namespace repkit {

// Accumulated verification result: pass stays true until a failure is noted.
struct CheckReport {
  bool pass = true;
  std::vector<std::string> notes;    // informational lines, in order
  std::vector<std::string> failures; // one line per failed assertion

  void note(std::string s) { notes.push_back(std::move(s)); }
  void check(bool ok, std::string what) {
    if (ok) return;
    pass = false;
    failures.push_back(std::move(what));
  }
  void merge(const CheckReport& o) {
    pass = pass && o.pass;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
};

} // namespace repkit
