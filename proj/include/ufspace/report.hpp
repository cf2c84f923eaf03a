#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace ufspace {

enum class Status { pass, fail, skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

struct ReportItem {
  std::string name;
  Status status;
  std::string witness;
};

/// Ordered list of named checks. Exit code is 0 iff nothing failed.
class Report {
 public:
  void add(std::string name, bool ok, std::string witness = {}) {
    items_.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(witness)});
  }
  void skip(std::string name, std::string why) {
    items_.push_back({std::move(name), Status::skip, std::move(why)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& it : other.items_)
      items_.push_back({prefix + it.name, it.status, it.witness});
  }

  const std::vector<ReportItem>& items() const { return items_; }
  const ReportItem* find(const std::string& name) const {
    for (const auto& it : items_)
      if (it.name == name) return &it;
    return nullptr;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& it : items_) n += it.status == s;
    return n;
  }
  bool passed() const { return count(Status::fail) == 0; }
  int exit_code() const { return passed() ? 0 : 1; }

  /// `PROP name STATUS [witness]`, one line per item.
  std::string render_text() const {
    std::ostringstream out;
    for (const auto& it : items_) {
      out << "PROP " << it.name << ' ' << to_string(it.status);
      if (!it.witness.empty()) out << ' ' << it.witness;
      out << '\n';
    }
    return out.str();
  }

  /// `name<TAB>STATUS<TAB>witness`, one line per item.
  std::string render_tsv() const {
    std::ostringstream out;
    for (const auto& it : items_)
      out << it.name << '\t' << to_string(it.status) << '\t' << it.witness << '\n';
    return out.str();
  }

 private:
  std::vector<ReportItem> items_;
};

}  // namespace ufspace
