#include "schmidt_cli/sweep.hpp"

#include "schmidt/extension.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace schmidt::cli {

Range Range::parse(const std::string& text, unsigned min, const std::string& name) {
  auto number = [&](const std::string& part) -> unsigned {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6)
      throw std::invalid_argument("--" + name + ": expected lo..hi or a single value, got '" + text + "'");
    return static_cast<unsigned>(std::stoul(part));
  };
  Range out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    out.lo = out.hi = number(text);
  } else {
    out.lo = number(text.substr(0, dots));
    out.hi = number(text.substr(dots + 2));
  }
  if (out.lo > out.hi) throw std::invalid_argument("--" + name + ": empty range '" + text + "'");
  if (out.lo < min)
    throw std::invalid_argument("--" + name + " must be >= " + std::to_string(min));
  return out;
}

std::string Range::to_string() const {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
}

SignSelector sign_selector_from_string(const std::string& text) {
  if (text == "+" || text == "+1" || text == "1" || text == "plus") return SignSelector::plus;
  if (text == "-" || text == "-1" || text == "minus") return SignSelector::minus;
  if (text == "both" || text == "+-" || text == "±") return SignSelector::both;
  throw std::invalid_argument("--sign: expected +, - or both, got '" + text + "'");
}

std::string to_string(SignSelector s) {
  switch (s) {
    case SignSelector::plus: return "+";
    case SignSelector::minus: return "-";
    case SignSelector::both: return "both";
  }
  return "?";
}

void SweepSpec::validate() const {
  if (n.lo < 1) throw std::invalid_argument("--n must be >= 1");
  if (m.lo < 1) throw std::invalid_argument("--m must be >= 1");
  if (r.lo < 1) throw std::invalid_argument("--r must be >= 1");
  if (jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
  const bool weighted = check == CheckKind::kk1 || check == CheckKind::odd_power;
  if (!weighted && (a.lo != 0 || a.hi != 0))
    throw std::invalid_argument("--a only applies to the kk1 and odd_power checks");
  if (check == CheckKind::odd_power && m.hi > 1 && !exploratory)
    throw std::invalid_argument("odd_power is stated for m = 1; pass --exploratory for larger m");
  if (constructive && check != CheckKind::theorem)
    throw std::invalid_argument("--constructive applies to the theorem check only");
}

std::vector<SchmidtParams> SweepSpec::cells() const {
  std::vector<Sign> signs;
  if (sign != SignSelector::plus) signs.push_back(Sign::minus);
  if (sign != SignSelector::minus) signs.push_back(Sign::plus);
  std::vector<SchmidtParams> out;
  for (unsigned nn = n.lo; nn <= n.hi; ++nn)
    for (unsigned mm = m.lo; mm <= m.hi; ++mm)
      for (unsigned rr = r.lo; rr <= r.hi; ++rr)
        for (Sign eps : signs)
          for (unsigned aa = a.lo; aa <= a.hi; ++aa) out.push_back({nn, rr, mm, eps, aa});
  return out;
}

namespace {

CongruenceReport run_cell(const SweepSpec& spec, const SchmidtParams& p, BTableCache* cache) {
  switch (spec.check) {
    case CheckKind::theorem:
      return theorem_check(p, {.constructive = spec.constructive || p.m == 1,
                               .keep_terms = spec.include_terms,
                               .cache = cache});
    case CheckKind::pan:
      return pan_check(p, {.keep_terms = spec.include_terms});
    case CheckKind::kk1:
      return generalized_check(p, GeneralizedForm::kk1, {.keep_terms = spec.include_terms});
    case CheckKind::odd_power:
      return generalized_check(p, GeneralizedForm::odd_power,
                               {.exploratory = spec.exploratory, .keep_terms = spec.include_terms});
  }
  throw std::logic_error("unknown check kind");
}

}  // namespace

RunManifest run_sweep(const SweepSpec& spec, BTableCache* cache) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SchmidtParams> params = spec.cells();
  RunManifest manifest;
  manifest.tool_version = SCHMIDT_VERSION;
  manifest.spec = spec;
  manifest.cells.resize(params.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      try {
        manifest.cells[i] = run_cell(spec, params[i], cache);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = params.size();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(spec.jobs, std::max<std::size_t>(params.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& cell : manifest.cells) manifest.passed = manifest.passed && cell.passed;
  manifest.elapsed = std::chrono::steady_clock::now() - start;
  return manifest;
}

namespace {

double millis(std::chrono::nanoseconds d, bool stable) {
  return stable ? 0.0 : std::chrono::duration<double, std::milli>(d).count();
}

}  // namespace

nlohmann::json to_json(const CongruenceReport& report, bool stable) {
  nlohmann::json cell;
  cell["n"] = report.params.n;
  cell["m"] = report.params.m;
  cell["r"] = report.params.r;
  cell["epsilon"] = to_int(report.params.epsilon);
  cell["a"] = report.params.a;
  cell["check"] = to_string(report.check);
  cell["weight"] = to_string(report.weight);
  cell["verdict"] = report.passed ? "pass" : "fail";
  if (report.witness) {
    cell["witness"] = {{"monomial", report.witness->monomial},
                       {"coefficient", report.witness->coefficient.get_str()},
                       {"residue", report.witness->residue.get_str()}};
  } else {
    cell["witness"] = nullptr;
  }
  cell["constructive"] = report.constructive_checked ? "agree" : "skipped";
  if (!report.terms.empty()) {
    auto monomials = nlohmann::json::array();
    auto coefficients = nlohmann::json::array();
    for (const auto& t : report.terms) {
      monomials.push_back(t.monomial);
      coefficients.push_back(t.coefficient.get_str());
    }
    cell["monomials"] = std::move(monomials);
    cell["coefficients"] = std::move(coefficients);
  }
  cell["elapsed_ms"] = millis(report.elapsed, stable);
  return cell;
}

nlohmann::json to_json(const RunManifest& manifest, bool stable) {
  nlohmann::json doc;
  doc["schema"] = kManifestSchema;
  doc["tool_version"] = manifest.tool_version;
  // Execution settings (jobs, cache, output) are left out so that they
  // cannot change the document.
  doc["spec"] = {{"n", manifest.spec.n.to_string()},
                 {"m", manifest.spec.m.to_string()},
                 {"r", manifest.spec.r.to_string()},
                 {"a", manifest.spec.a.to_string()},
                 {"sign", to_string(manifest.spec.sign)},
                 {"check", to_string(manifest.spec.check)},
                 {"constructive", manifest.spec.constructive},
                 {"exploratory", manifest.spec.exploratory}};
  auto cells = nlohmann::json::array();
  for (const auto& c : manifest.cells) cells.push_back(to_json(c, stable));
  doc["cells"] = std::move(cells);
  doc["verdict"] = manifest.passed ? "pass" : "fail";
  doc["elapsed_ms"] = millis(manifest.elapsed, stable);
  return doc;
}

}  // namespace schmidt::cli
