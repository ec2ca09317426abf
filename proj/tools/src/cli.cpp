#include "schmidt_cli/cli.hpp"

#include "CLI11.hpp"
#include "schmidt/congruence.hpp"
#include "schmidt/extension.hpp"
#include "schmidt/linearizer.hpp"
#include "schmidt_cli/sweep.hpp"
#include "schmidt_cli/table_store.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace schmidt::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Loads the persisted tables (if any) on construction; `flush` writes them
/// back.
class TableSession {
 public:
  TableSession(const std::string& flag, std::ostream& err) : path_(resolve_cache_path(flag)) {
    if (path_.empty()) return;
    probe_writable();
    const LoadStats stats = load_tables(path_, btables, ctables);
    if (stats.rejected > 0)
      err << "note: " << stats.rejected << " cache entr" << (stats.rejected == 1 ? "y" : "ies")
          << " in " << path_.string() << " failed validation and will be recomputed\n";
  }

  void flush() const {
    if (!path_.empty()) save_tables(path_, btables, ctables);
  }

  BTableCache btables;
  CTableCache ctables;

 private:
  void probe_writable() const {
    std::filesystem::path dir = path_.has_parent_path() ? path_.parent_path() : ".";
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::filesystem::path probe = path_;
    probe += ".probe";
    std::ofstream out(probe);
    if (!out) throw UsageError("cache path " + path_.string() + " is not writable");
    out.close();
    std::filesystem::remove(probe, ec);
  }

  std::filesystem::path path_;
};

std::string certificate_detail(const Certificate& cert) {
  if (cert.passed)
    return "pass (" + std::to_string(cert.points) + (cert.points == 1 ? " point)" : " points)");
  std::ostringstream s;
  s << "FAIL at " << cert.mismatch->point.get_str() << ": lhs " << cert.mismatch->lhs.get_str()
    << " != rhs " << cert.mismatch->rhs.get_str();
  return s.str();
}

std::vector<unsigned> parse_index_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6)
      throw UsageError("--indices: expected comma-separated nonnegative integers, got '" + text + "'");
    out.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (out.empty()) throw UsageError("--indices: list must not be empty");
  return out;
}

struct VerifyArgs {
  std::string n = "1", m = "1", r = "1", a = "0", sign = "both", check = "theorem";
  unsigned jobs = 1;
  std::string json, cache;
  bool stable = false, exploratory = false, constructive = false, no_terms = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  try {
    spec.n = Range::parse(args.n, 1, "n");
    spec.m = Range::parse(args.m, 1, "m");
    spec.r = Range::parse(args.r, 1, "r");
    spec.a = Range::parse(args.a, 0, "a");
    spec.sign = sign_selector_from_string(args.sign);
    spec.check = check_kind_from_string(args.check);
    spec.jobs = args.jobs;
    spec.exploratory = args.exploratory;
    spec.constructive = args.constructive;
    spec.include_terms = !args.no_terms;
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::ofstream file;
  const bool to_stdout = args.json == "-";
  if (!args.json.empty() && !to_stdout) {
    file.open(args.json, std::ios::trunc);
    if (!file) throw UsageError("cannot write output file " + args.json);
  }
  TableSession tables(args.cache, err);

  const RunManifest manifest = run_sweep(spec, &tables.btables);
  tables.flush();

  if (!args.json.empty()) {
    const std::string doc = to_json(manifest, args.stable).dump(1) + "\n";
    if (to_stdout) {
      out << doc;
    } else {
      file << doc;
      if (!file.flush()) throw UsageError("cannot write output file " + args.json);
    }
  }
  std::ostream& log = to_stdout ? err : out;
  std::size_t failures = 0;
  for (const auto& cell : manifest.cells) {
    if (cell.passed) continue;
    ++failures;
    log << "FAIL " << to_string(cell.check) << " n=" << cell.params.n << " m=" << cell.params.m
        << " r=" << cell.params.r << " eps=" << to_string(cell.params.epsilon)
        << " a=" << cell.params.a << ": coefficient " << cell.witness->coefficient.get_str()
        << " of " << cell.witness->monomial << " is " << cell.witness->residue.get_str()
        << " mod " << cell.params.n << "\n";
  }
  log << to_string(spec.check) << ": " << manifest.cells.size() << " cells, "
      << (manifest.cells.size() - failures) << " pass, " << failures << " fail\n";
  return manifest.passed ? kPass : kFail;
}

int cmd_btable(unsigned m, unsigned r, const std::string& cache, std::ostream& out,
               std::ostream& err) {
  if (r < 1) throw UsageError("--r must be >= 1");
  TableSession tables(cache, err);
  const BTable t = b_table(m, r, &tables.btables);
  tables.flush();
  for (unsigned k = t.first_index(); k <= t.last_index(); ++k)
    out << (k == t.first_index() ? "" : " ") << "b[" << k << "]=" << t.at(k).get_str();
  out << "\n";
  return kPass;
}

int cmd_ctable(unsigned j, unsigned a, const std::string& cache, std::ostream& out,
               std::ostream& err) {
  TableSession tables(cache, err);
  const CTable t = c_table(j, a, &tables.ctables);
  tables.flush();
  for (std::size_t i = 0; i < t.entries().size(); ++i)
    out << (i == 0 ? "" : " ") << "c[" << i << "]=" << t.entries()[i].get_str();
  out << "\n";
  return kPass;
}

int cmd_identity(const std::string& which, const std::map<std::string, CLI::Option*>& opts,
                 const std::map<std::string, unsigned>& values, std::ostream& out) {
  static const std::map<std::string, std::set<std::string>> arity = {
      {"main5", {"m", "r"}},   {"main8", {"m", "k"}},  {"main12", {"n"}}, {"main13", {"n"}},
      {"repeat", {"i", "j"}},  {"main14", {"j", "a"}}, {"sq_weight", {"a"}},
  };
  auto it = arity.find(which);
  if (it == arity.end()) throw UsageError("unknown identity '" + which + "'");
  std::set<std::string> given;
  for (const auto& [name, opt] : opts)
    if (opt->count() > 0) given.insert(name);
  if (given != it->second) {
    std::string need;
    for (const auto& p : it->second) need += " --" + p;
    throw UsageError("identity " + which + " takes exactly:" + need);
  }
  auto v = [&](const char* name) { return values.at(name); };

  bool ok = true;
  if (which == "main5") {
    if (v("r") < 1) throw UsageError("--r must be >= 1");
    const BTable t = b_table(v("m"), v("r"));
    const Certificate cert = certify_power_identity(t);
    ok = cert.passed;
    out << "main5 m=" << v("m") << " r=" << v("r") << ": " << certificate_detail(cert) << "\n";
  } else if (which == "main8") {
    const long k = v("k");
    const auto samples = sample_range(-k, k);
    const Certificate cert = pfaff_check(v("m"), v("k"), samples);
    ok = cert.passed;
    out << "main8 m=" << v("m") << " k=" << k << ": " << certificate_detail(cert) << "\n";
  } else if (which == "main12" || which == "main13") {
    const unsigned n = v("n");
    if (n < 1) throw UsageError("--n must be >= 1");
    const Sign eps = which == "main12" ? Sign::plus : Sign::minus;
    for (unsigned k = 0; k < n && ok; ++k) {
      const Integer closed = eps == Sign::plus ? partial_sum_plus(n, k) : partial_sum_minus(n, k);
      const Integer direct = partial_sum_direct(n, k, eps);
      if (closed != direct) {
        ok = false;
        out << which << " n=" << n << " k=" << k << ": FAIL closed form " << closed.get_str()
            << " != direct sum " << direct.get_str() << "\n";
      }
    }
    if (ok) out << which << " n=" << n << ": pass (" << n << " values of k)\n";
  } else if (which == "repeat") {
    const Certificate cert = certify_product_identity(v("i"), v("j"));
    ok = cert.passed;
    out << "repeat i=" << v("i") << " j=" << v("j") << ": " << certificate_detail(cert) << "\n";
  } else if (which == "main14") {
    const long deg = 2L * v("j") + 2L * v("a");
    const auto samples = sample_range(0, deg);
    const Certificate cert = verify_c_identity(v("j"), v("a"), samples);
    ok = cert.passed;
    out << "main14 j=" << v("j") << " a=" << v("a") << ": " << certificate_detail(cert) << "\n";
  } else if (which == "sq_weight") {
    const Certificate cert = certify_square_weight(v("a"));
    ok = cert.passed;
    out << "sq_weight a=" << v("a") << ": " << certificate_detail(cert) << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_linearize(const std::string& indices_text, unsigned r, std::ostream& out) {
  if (r < 1) throw UsageError("--r must be >= 1");
  const std::vector<unsigned> indices = parse_index_list(indices_text);
  const BasisCombo combo = tuple_linearize(indices, r);
  out << combo.to_string() << "\n";

  unsigned top = 0, total = 0;
  for (unsigned i : indices) {
    top = std::max(top, i);
    total += i;
  }
  const long degree = 2L * r * total;
  PointFunction lhs = [&](const Integer& k) -> Rational {
    Integer product = 1;
    for (unsigned i : indices) product *= pow(binom(k + i, 2L * i), r) * central_binom(i);
    return product;
  };
  PointFunction rhs = [&](const Integer& k) -> Rational { return combo_eval(combo, k); };
  const auto samples = sample_range(0, degree);
  const Certificate cert = certify_pointwise(lhs, rhs, samples, static_cast<std::size_t>(degree) + 1);
  const bool bounds_ok = !combo.empty() && *combo.min_index() >= top && *combo.max_index() <= r * total;
  out << "min index " << (combo.empty() ? 0 : *combo.min_index()) << " >= " << top
      << ", max index " << (combo.empty() ? 0 : *combo.max_index()) << " <= " << r * total
      << "; identity " << certificate_detail(cert) << "\n";
  return cert.passed && bounds_ok ? kPass : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of divisibility of weighted Schmidt polynomial sums"};
  app.set_version_flag("--version", std::string(SCHMIDT_VERSION));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run a congruence check over a parameter grid");
  verify->add_option("--n", va.n, "range lo..hi, n >= 1");
  verify->add_option("--m", va.m, "outer power range, m >= 1");
  verify->add_option("--r", va.r, "binomial power range, r >= 1");
  verify->add_option("--a", va.a, "weight exponent range (kk1, odd_power)");
  verify->add_option("--sign", va.sign, "+, - or both");
  verify->add_option("--check", va.check, "theorem | pan | kk1 | odd_power");
  verify->add_option("--jobs,-j", va.jobs, "worker threads");
  verify->add_option("--json", va.json, "write the run manifest here ('-' for stdout)");
  verify->add_option("--cache", va.cache, "persisted b/c-table file");
  verify->add_flag("--stable-output", va.stable, "write all timing fields as 0");
  verify->add_flag("--exploratory", va.exploratory, "allow odd_power with m > 1");
  verify->add_flag("--constructive", va.constructive, "rebuild every sum through the basis expansion");
  verify->add_flag("--no-terms", va.no_terms, "omit coefficient lists from the manifest");

  unsigned bm = 0, br = 1, cj = 0, ca = 0;
  std::string bcache, ccache;
  auto* btable = app.add_subcommand("btable", "Print b-coefficients b_{m,k}^{(r)}");
  btable->add_option("--m", bm)->required();
  btable->add_option("--r", br)->required();
  btable->add_option("--cache", bcache, "persist into this table file");
  auto* ctable = app.add_subcommand("ctable", "Print c-coefficients c_i(j,a)");
  ctable->add_option("--j", cj)->required();
  ctable->add_option("--a", ca)->required();
  ctable->add_option("--cache", ccache, "persist into this table file");

  std::string which;
  std::map<std::string, unsigned> ivalues{{"m", 0}, {"r", 0}, {"k", 0}, {"n", 0}, {"i", 0}, {"j", 0}, {"a", 0}};
  std::map<std::string, CLI::Option*> iopts;
  auto* identity = app.add_subcommand("identity", "Certify one binomial identity");
  identity->add_option("which", which, "main5 | main8 | main12 | main13 | repeat | main14 | sq_weight")
      ->required();
  for (auto& [name, value] : ivalues) iopts[name] = identity->add_option("--" + name, value);

  std::string indices;
  unsigned lr = 1;
  auto* linearize = app.add_subcommand("linearize", "Expand a product of powers in the B_t basis");
  linearize->add_option("--indices", indices, "comma-separated i_1,...,i_m")->required();
  linearize->add_option("--r", lr);

  std::vector<std::string> argv_store{"schmidt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::CallForVersion&) {
    out << SCHMIDT_VERSION << "\n";
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(va, out, err);
    if (btable->parsed()) return cmd_btable(bm, br, bcache, out, err);
    if (ctable->parsed()) return cmd_ctable(cj, ca, ccache, out, err);
    if (identity->parsed()) return cmd_identity(which, iopts, ivalues, out);
    if (linearize->parsed()) return cmd_linearize(indices, lr, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace schmidt::cli
