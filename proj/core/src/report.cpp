#include "orbitkit/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "orbitkit/version.hpp"

namespace orbitkit {

void Report::add(CheckRecord rec) { checks.push_back(std::move(rec)); }

void Report::add_bool(const std::string& name, bool holds,
                      const std::string& source,
                      std::vector<std::string> caveats) {
  add({name, holds ? "holds" : "fails", std::nullopt, source, std::move(caveats)});
}

void Report::add_field(const std::string& name, const std::string& value) {
  fields[name] = value;
}

bool Report::all_hold() const {
  for (const auto& c : checks)
    if (c.verdict == "fails") return false;
  return true;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "report.v1";
  j["tool_version"] = kVersion;
  j["command"] = command;
  j["input"] = input;
  j["digest"] = digest;
  j["seed"] = seed;
  j["tol"] = tol;
  j["samples"] = samples;
  for (const auto& [k, v] : fields) {
    // Numeric-looking fields are emitted as integers so consumers can
    // compare dimensions without string parsing.
    if (!v.empty() && (std::isdigit(static_cast<unsigned char>(v[0])) ||
                       (v.size() > 1 && v[0] == '-'))) {
      bool numeric = true;
      for (std::size_t i = (v[0] == '-' ? 1 : 0); i < v.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(v[i]))) numeric = false;
      if (numeric) {
        j[k] = std::stoll(v);
        continue;
      }
    }
    if (v == "true" || v == "false") {
      j[k] = (v == "true");
      continue;
    }
    j[k] = v;
  }
  std::vector<CheckRecord> sorted = checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : sorted) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["verdict"] = c.verdict;
    if (c.residual) jc["residual"] = *c.residual;
    jc["source"] = c.source;
    if (!c.caveats.empty()) jc["caveats"] = c.caveats;
    arr.push_back(jc);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << command << " " << input << " (seed=" << seed << ", tol=" << tol
     << ", samples=" << samples << ")\n";
  for (const auto& [k, v] : fields) os << "  " << k << " = " << v << "\n";
  std::vector<CheckRecord> sorted = checks;
  std::sort(sorted.begin(), sorted.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  for (const auto& c : sorted) {
    std::string tag = c.verdict == "holds"
                          ? "PASS"
                          : (c.verdict == "fails" ? "FAIL" : "SKIP");
    os << "  [" << tag << "] " << c.name;
    if (c.residual) os << " (residual=" << *c.residual << ")";
    if (!c.source.empty()) os << " -- " << c.source;
    for (const auto& cv : c.caveats) os << " [" << cv << "]";
    os << "\n";
  }
  return os.str();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((h >> (i * 4)) & 0xf);
  return os.str();
}

}  // namespace orbitkit
