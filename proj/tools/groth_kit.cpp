#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "grothkit/acceptance.hpp"
#include "grothkit/analysis.hpp"
#include "grothkit/bpd.hpp"
#include "grothkit/engines.hpp"
#include "grothkit/json_io.hpp"
#include "grothkit/scan.hpp"
#include "grothkit/zeroone.hpp"

using namespace grothkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitRefused = 2;
constexpr int kExitVerification = 3;

struct ComputeArgs {
  std::string perm;
  std::string kind = "groth";
  std::string variant = "single";
  std::string engine = "dd";
  std::string format = "text";
};

struct ScanArgs {
  int n = 1;
  std::string checks = "zeroone,engines,conjectures,lorentzian,factorization";
  std::string out;
  std::optional<int> workers;
  bool resume = false;
  bool timings = false;
};

int cmd_compute(const ComputeArgs& a) {
  const Permutation w = Permutation::parse(a.perm);
  const Kind kind = a.kind == "schubert" ? Kind::Schubert : Kind::Grothendieck;
  const Variant variant = a.variant == "double" ? Variant::Double : Variant::Single;
  const Engine engine = a.engine == "bpd" ? Engine::Bpd : Engine::DividedDifference;
  const Polynomial f = compute(w, kind, variant, engine);
  if (a.format == "json") {
    std::cout << to_json(f).dump() << '\n';
  } else if (a.format == "latex") {
    std::cout << to_latex(f) << '\n';
  } else {
    std::cout << to_text(f) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::string& perm, const std::string& format) {
  const Permutation w = Permutation::parse(perm);
  const ClassifyVerdict g = classify_groth(w);
  const ClassifyVerdict s = classify_schubert(w);
  if (format == "json") {
    std::cout << Json{{"grothendieck", to_json(g)}, {"schubert", to_json(s)}}.dump() << '\n';
  } else {
    auto line = [](const char* label, const ClassifyVerdict& v) {
      std::cout << label << ": patterns " << (v.by_patterns ? "avoid" : "contain") << ", coefficients "
                << (v.by_coefficients ? "zero-one" : "not zero-one");
      if (v.witness) {
        std::cout << " (witness " << Json(v.witness->to_vector()).dump() << " coefficient "
                  << v.witness_coefficient.str() << ")";
      }
      std::cout << (v.theorem_violation() ? "  THEOREM VIOLATION" : "") << '\n';
    };
    line("grothendieck", g);
    line("schubert", s);
  }
  return g.theorem_violation() || s.theorem_violation() ? kExitVerification : kExitOk;
}

int cmd_factor(const std::string& perm, bool dual, const std::string& format) {
  const Permutation w = Permutation::parse(perm);
  const FactorizationReport r = dual ? factorize_double_schubert(w) : factorize(w);
  if (format == "json") {
    std::cout << to_json(r).dump() << '\n';
    return kExitOk;
  }
  std::cout << "perm " << w.to_string() << '\n';
  std::cout << "lambda " << Json(r.lambda.to_vector()).dump() << '\n';
  for (std::size_t k = 0; k < r.structures.size(); ++k) {
    const LocalStructure& s = r.structures[k];
    if (s.kind == StructureKind::A) {
      std::cout << "A k=" << s.size << " p=" << s.row;
    } else {
      std::cout << "B l=" << s.size << " r=" << s.row;
    }
    std::cout << "  " << to_text(r.factors[k]) << '\n';
  }
  std::cout << "verified " << (r.product_verified ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_bpds(const std::string& perm, bool count_only, const std::string& format) {
  const Permutation w = Permutation::parse(perm);
  const std::vector<BumplessPipeDream> all = enumerate_bpds(w);
  if (count_only) {
    std::cout << all.size() << '\n';
    return kExitOk;
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const BumplessPipeDream& p : all) arr.push_back(to_json(p));
    std::cout << arr.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i > 0) std::cout << '\n';
    std::cout << all[i].render();
  }
  return kExitOk;
}

int cmd_scan(const ScanArgs& a) {
  ScanOptions options;
  options.n = a.n;
  options.checks = parse_checks(a.checks);
  options.workers = resolve_workers(a.workers);
  options.timings = a.timings;

  std::map<std::string, ScanRecord> existing;
  if (a.resume && !a.out.empty()) {
    std::ifstream in(a.out);
    if (in) existing = read_scan_records(in);
  }
  ScanSummary summary;
  if (a.out.empty()) {
    summary = run_scan(options, std::cout, existing);
  } else {
    const std::string tmp = a.out + ".partial";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw InvalidArgument("cannot write " + tmp);
      summary = run_scan(options, out, existing);
    }
    if (std::rename(tmp.c_str(), a.out.c_str()) != 0) throw InvalidArgument("cannot write " + a.out);
    std::cout << summary.to_json().dump() << '\n';
  }
  for (const std::string& note : summary.failure_notes) std::cerr << "failure: " << note << '\n';
  return summary.ok() ? kExitOk : kExitVerification;
}

int cmd_verify(bool quick, bool extended) {
  AcceptanceOptions options;
  options.quick = quick;
  options.extended = extended;
  int failed = 0;
  run_acceptance(options, [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert and Grothendieck polynomial toolkit"};
  app.require_subcommand(1);

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Print a Schubert or Grothendieck polynomial");
  compute->add_option("perm", compute_args.perm, "Permutation in one-line notation")->required();
  compute->add_option("--kind", compute_args.kind)->check(CLI::IsMember({"schubert", "groth"}));
  compute->add_option("--variant", compute_args.variant)->check(CLI::IsMember({"single", "double"}));
  compute->add_option("--engine", compute_args.engine)->check(CLI::IsMember({"dd", "bpd"}));
  compute->add_option("--format", compute_args.format)->check(CLI::IsMember({"text", "json", "latex"}));

  std::string perm;
  std::string format = "text";
  auto* classify = app.add_subcommand("classify", "Pattern and coefficient zero-one verdicts");
  classify->add_option("perm", perm)->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  bool dual = false;
  auto* factor = app.add_subcommand("factor", "Factorize a zero-one Grothendieck polynomial");
  factor->add_option("perm", perm)->required();
  factor->add_flag("--double", dual, "Factorize the double Schubert polynomial instead");
  factor->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  bool count_only = false;
  bool render = false;
  auto* bpds = app.add_subcommand("bpds", "Enumerate bumpless pipe dreams");
  bpds->add_option("perm", perm)->required();
  bpds->add_flag("--count", count_only, "Print only the number of BPDs");
  bpds->add_flag("--render", render, "Print ASCII grids (default)");
  bpds->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Sweep S_n and write JSONL records");
  scan->add_option("--n", scan_args.n)->required()->check(CLI::Range(1, kScanMaxN));
  scan->add_option("--checks", scan_args.checks, "Comma list of checks");
  scan->add_option("--out", scan_args.out, "Output path (stdout if omitted)");
  scan->add_option("--workers", scan_args.workers, "Worker threads");
  scan->add_flag("--resume", scan_args.resume, "Reuse records already in --out");
  scan->add_flag("--timings", scan_args.timings, "Record per-permutation wall time");

  bool quick = false;
  bool extended = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance criteria");
  verify->add_flag("--quick", quick, "Small sweeps only");
  verify->add_flag("--extended", extended, "Include the S_7 sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*compute) return cmd_compute(compute_args);
    if (*classify) return cmd_classify(perm, format);
    if (*factor) return cmd_factor(perm, dual, format);
    if (*bpds) return cmd_bpds(perm, count_only, format);
    if (*scan) return cmd_scan(scan_args);
    if (*verify) return cmd_verify(quick, extended);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const NotZeroOne& e) {
    std::cerr << "NotZeroOne: " << e.what() << '\n';
    return kExitRefused;
  } catch (const BoundExceeded& e) {
    std::cerr << "BoundExceeded: " << e.what() << '\n';
    return kExitRefused;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRefused;
  } catch (const FactorizationMismatch& e) {
    std::cerr << "FactorizationMismatch: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ContractViolation& e) {
    std::cerr << "ContractViolation: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
