#pragma once

#include "schmidt/congruence.hpp"
#include "schmidt/linearizer.hpp"

#include "json.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace schmidt::cli {

inline constexpr const char* kManifestSchema = "schmidt-verify-manifest/1";

/// Inclusive integer range, written "lo..hi" or a single value.
struct Range {
  unsigned lo = 0;
  unsigned hi = 0;

  /// Throws std::invalid_argument on malformed text, lo > hi, or lo < min.
  static Range parse(const std::string& text, unsigned min, const std::string& name);
  std::string to_string() const;
  friend bool operator==(const Range&, const Range&) = default;
};

enum class SignSelector { plus, minus, both };

SignSelector sign_selector_from_string(const std::string& text);
std::string to_string(SignSelector s);

struct SweepSpec {
  Range n{1, 1};
  Range m{1, 1};
  Range r{1, 1};
  Range a{0, 0};
  SignSelector sign = SignSelector::both;
  CheckKind check = CheckKind::theorem;
  unsigned jobs = 1;
  bool constructive = false;
  bool exploratory = false;
  bool include_terms = true;

  /// Throws std::invalid_argument for combinations outside the contract.
  void validate() const;
  std::vector<SchmidtParams> cells() const;
};

struct RunManifest {
  std::string tool_version;
  SweepSpec spec;
  std::vector<CongruenceReport> cells;
  bool passed = true;
  std::chrono::nanoseconds elapsed{0};
};

/// Runs every cell, `spec.jobs` at a time. Reports come back ordered by
/// (n, m, r, eps, a) regardless of scheduling. InvariantViolation from any
/// cell is rethrown after the workers finish.
RunManifest run_sweep(const SweepSpec& spec, BTableCache* cache);

/// With `stable` set every timing field is written as 0.
nlohmann::json to_json(const RunManifest& manifest, bool stable);
nlohmann::json to_json(const CongruenceReport& report, bool stable);

}  // namespace schmidt::cli
