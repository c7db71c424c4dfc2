#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace schurvec {

using Json = nlohmann::json;
// Insertion-ordered variant for everything we emit, so output is
// byte-stable run to run.
using OrderedJson = nlohmann::ordered_json;

struct CheckEntry {
  std::string check;
  OrderedJson inputs;
  std::string verdict;  // "pass" | "fail" | "inconclusive"
  std::optional<std::string> witness;
  std::string details;
};

struct Report {
  std::vector<CheckEntry> entries;

  void add(CheckEntry e) { entries.push_back(std::move(e)); }
  void append(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  int count(const std::string& verdict) const {
    int n = 0;
    for (const auto& e : entries)
      if (e.verdict == verdict) ++n;
    return n;
  }
  bool all_pass() const {
    return count("pass") == static_cast<int>(entries.size());
  }

  OrderedJson to_json() const {
    OrderedJson checks = OrderedJson::array();
    for (const auto& e : entries) {
      OrderedJson j;
      j["check"] = e.check;
      j["inputs"] = e.inputs;
      j["verdict"] = e.verdict;
      if (e.witness) j["witness"] = *e.witness;
      j["details"] = e.details;
      checks.push_back(std::move(j));
    }
    return checks;
  }

  std::string to_table() const {
    std::size_t wc = 5, wv = 7, ww = 7;
    for (const auto& e : entries) {
      wc = std::max(wc, e.check.size());
      wv = std::max(wv, e.verdict.size());
      ww = std::max(ww, e.witness ? e.witness->size() : 1);
    }
    auto pad = [](const std::string& s, std::size_t w) {
      return s + std::string(w - s.size(), ' ');
    };
    std::string out = pad("check", wc) + "  " + pad("verdict", wv) + "  " +
                      pad("witness", ww) + "  details\n";
    for (const auto& e : entries)
      out += pad(e.check, wc) + "  " + pad(e.verdict, wv) + "  " +
             pad(e.witness ? *e.witness : "-", ww) + "  " + e.details + "\n";
    out += std::to_string(entries.size()) + " checks, " +
           std::to_string(count("pass")) + " pass, " +
           std::to_string(count("fail")) + " fail, " +
           std::to_string(count("inconclusive")) + " inconclusive\n";
    return out;
  }
};

}  // namespace schurvec
