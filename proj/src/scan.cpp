#include "grothkit/scan.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "grothkit/analysis.hpp"
#include "grothkit/engines.hpp"
#include "grothkit/zeroone.hpp"

namespace grothkit {

namespace {

const std::vector<std::pair<std::string, Check>>& check_names() {
  static const std::vector<std::pair<std::string, Check>> names = {
      {"zeroone", Check::ZeroOne},
      {"engines", Check::Engines},
      {"conjectures", Check::Conjectures},
      {"lorentzian", Check::Lorentzian},
      {"factorization", Check::Factorization},
  };
  return names;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Skipped: return "skipped";
  }
  return "skipped";
}

Outcome outcome_from(const std::string& s) {
  if (s == "pass") return Outcome::Pass;
  if (s == "fail") return Outcome::Fail;
  if (s == "skipped") return Outcome::Skipped;
  throw ParseError("unknown outcome '" + s + "'");
}

Outcome outcome_of(bool pass) { return pass ? Outcome::Pass : Outcome::Fail; }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::set<Check> all_checks() {
  std::set<Check> out;
  for (const auto& [name, check] : check_names()) out.insert(check);
  return out;
}

std::set<Check> parse_checks(const std::string& text) {
  std::set<Check> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    bool found = false;
    for (const auto& [name, check] : check_names()) {
      if (name == item) {
        out.insert(check);
        found = true;
      }
    }
    if (!found) throw ParseError("unknown check '" + item + "'");
  }
  if (out.empty()) throw ParseError("no checks selected");
  return out;
}

Json ScanRecord::to_json() const {
  return Json{{"perm", perm},
              {"n", n},
              {"length", length},
              {"degree_d", degree_d},
              {"zero_one_patterns", zero_one_patterns},
              {"zero_one_coeffs", zero_one_coeffs},
              {"schubert_zero_one_patterns", schubert_zero_one_patterns},
              {"schubert_zero_one_coeffs", schubert_zero_one_coeffs},
              {"engines_agree", optional_json(engines_agree)},
              {"conj_1_1", outcome_name(conj_1_1)},
              {"conj_1_2", outcome_name(conj_1_2)},
              {"conj_1_6", outcome_name(conj_1_6)},
              {"lorentzian", outcome_name(lorentzian)},
              {"factorization_verified", optional_json(factorization_verified)},
              {"wall_time_ms", optional_json(wall_time_ms)}};
}

ScanRecord ScanRecord::from_json(const Json& j) {
  try {
    ScanRecord r;
    r.perm = j.at("perm").get<std::string>();
    r.n = j.at("n").get<int>();
    r.length = j.at("length").get<int>();
    r.degree_d = j.at("degree_d").get<int>();
    r.zero_one_patterns = j.at("zero_one_patterns").get<bool>();
    r.zero_one_coeffs = j.at("zero_one_coeffs").get<bool>();
    r.schubert_zero_one_patterns = j.at("schubert_zero_one_patterns").get<bool>();
    r.schubert_zero_one_coeffs = j.at("schubert_zero_one_coeffs").get<bool>();
    if (!j.at("engines_agree").is_null()) r.engines_agree = j.at("engines_agree").get<bool>();
    r.conj_1_1 = outcome_from(j.at("conj_1_1").get<std::string>());
    r.conj_1_2 = outcome_from(j.at("conj_1_2").get<std::string>());
    r.conj_1_6 = outcome_from(j.at("conj_1_6").get<std::string>());
    r.lorentzian = outcome_from(j.at("lorentzian").get<std::string>());
    if (!j.at("factorization_verified").is_null()) {
      r.factorization_verified = j.at("factorization_verified").get<bool>();
    }
    if (!j.at("wall_time_ms").is_null()) r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed scan record: ") + e.what());
  }
}

std::vector<std::string> ScanRecord::violations() const {
  std::vector<std::string> out;
  if (zero_one_patterns != zero_one_coeffs) out.push_back("six-pattern verdict disagrees with coefficients");
  if (schubert_zero_one_patterns != schubert_zero_one_coeffs) {
    out.push_back("twelve-pattern verdict disagrees with coefficients");
  }
  if (engines_agree && !*engines_agree) out.push_back("engines disagree");
  if (zero_one_patterns) {
    if (conj_1_1 == Outcome::Fail) out.push_back("conjecture 1.1 fails on a zero-one permutation");
    if (conj_1_2 == Outcome::Fail) out.push_back("conjecture 1.2 fails on a zero-one permutation");
    if (conj_1_6 == Outcome::Fail) out.push_back("conjecture 1.6 fails on a zero-one permutation");
    if (lorentzian == Outcome::Fail) out.push_back("Lorentzian check fails on a zero-one permutation");
    if (factorization_verified && !*factorization_verified) out.push_back("factorization not verified");
  }
  return out;
}

bool ScanRecord::has_reported_conjecture_failure() const {
  return !zero_one_patterns &&
         (conj_1_1 == Outcome::Fail || conj_1_2 == Outcome::Fail || conj_1_6 == Outcome::Fail);
}

ScanRecord scan_permutation(const Permutation& w, const ScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto& checks = options.checks;
  ScanRecord r;
  r.perm = w.to_string();
  r.n = w.size();
  r.length = length(w);
  const Polynomial g = grothendieck_dd(w, Variant::Single);
  r.degree_d = g.total_degree();

  const ClassifyVerdict groth = classify_groth(w);
  r.zero_one_patterns = groth.by_patterns;
  r.zero_one_coeffs = groth.by_coefficients;
  const ClassifyVerdict schubert = classify_schubert(w);
  r.schubert_zero_one_patterns = schubert.by_patterns;
  r.schubert_zero_one_coeffs = schubert.by_coefficients;

  if (checks.contains(Check::Engines) && w.size() <= kScanEngineBound) {
    r.engines_agree = grothendieck_bpd(w, Variant::Single) == g &&
                      grothendieck_bpd(w, Variant::Double) == grothendieck_dd(w, Variant::Double) &&
                      homogeneous_component(g, r.length) == schubert_dd(w, Variant::Single);
  }
  if (checks.contains(Check::Conjectures)) {
    r.conj_1_1 = outcome_of(check_conjecture_1_1(g).pass);
    r.conj_1_2 = outcome_of(check_conjecture_1_2(g).pass);
    r.conj_1_6 = outcome_of(check_conjecture_1_6(g).pass);
  }
  if (r.zero_one_patterns) {
    if (checks.contains(Check::Lorentzian) && w.size() <= kScanLorentzianBound) {
      r.lorentzian = outcome_of(check_lorentzian_theorem(w).lorentzian);
    }
    if (checks.contains(Check::Factorization)) {
      try {
        const FactorizationReport rep = factorize(w);
        r.factorization_verified = rep.product_verified && rep.disjoint_windows;
      } catch (const FactorizationMismatch&) {
        r.factorization_verified = false;
      }
    }
  }
  if (options.timings) {
    r.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

Json ScanSummary::to_json() const {
  return Json{{"summary", true},
              {"n", n},
              {"total", total},
              {"zero_one", zero_one},
              {"failures", failures},
              {"reported_conjecture_failures", reported},
              {"status", ok() ? "PASS" : "FAIL"}};
}

int resolve_workers(std::optional<int> requested) {
  if (const char* env = std::getenv("GROTH_KIT_WORKERS")) {
    try {
      const int value = std::stoi(env);
      if (value >= 1) return value;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("GROTH_KIT_WORKERS must be a positive integer, got '") + env + "'");
  }
  if (requested) {
    if (*requested < 1) throw InvalidArgument("--workers must be positive");
    return *requested;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::map<std::string, ScanRecord> read_scan_records(std::istream& in) {
  std::map<std::string, ScanRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const nlohmann::json::exception&) {
      // A truncated last line from an interrupted run is recomputed.
      continue;
    }
    if (j.contains("summary")) continue;
    ScanRecord r = ScanRecord::from_json(j);
    out.emplace(r.perm, std::move(r));
  }
  return out;
}

ScanSummary run_scan(const ScanOptions& options, std::ostream& out,
                     const std::map<std::string, ScanRecord>& existing) {
  if (options.n < 1 || options.n > kScanMaxN) {
    throw BoundExceeded("scan supports 1 <= n <= " + std::to_string(kScanMaxN));
  }
  const std::vector<Permutation> perms = all_permutations(options.n);
  const std::size_t count = perms.size();
  std::vector<std::optional<ScanRecord>> results(count);
  std::vector<std::string> errors(count);
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      ScanRecord record;
      std::string error;
      auto found = existing.find(perms[i].to_string());
      if (found != existing.end() && found->second.n == options.n) {
        record = found->second;
      } else {
        try {
          record = scan_permutation(perms[i], options);
        } catch (const std::exception& e) {
          error = e.what();
        }
      }
      {
        std::lock_guard lock(mutex);
        if (error.empty()) {
          results[i] = std::move(record);
        } else {
          errors[i] = error;
          results[i] = ScanRecord{};
        }
      }
      ready.notify_one();
    }
  };

  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) pool.emplace_back(worker);

  ScanSummary summary;
  summary.n = options.n;
  for (std::size_t i = 0; i < count; ++i) {
    ScanRecord record;
    std::string error;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[i].has_value(); });
      record = std::move(*results[i]);
      error = errors[i];
    }
    ++summary.total;
    if (!error.empty()) {
      ++summary.failures;
      summary.failure_notes.push_back(perms[i].to_string() + ": " + error);
      out << Json{{"perm", perms[i].to_string()}, {"error", error}}.dump() << '\n';
      continue;
    }
    if (record.zero_one_patterns) ++summary.zero_one;
    if (record.has_reported_conjecture_failure()) ++summary.reported;
    const std::vector<std::string> violations = record.violations();
    if (!violations.empty()) {
      ++summary.failures;
      for (const std::string& v : violations) summary.failure_notes.push_back(record.perm + ": " + v);
    }
    out << record.to_json().dump() << '\n';
  }
  for (std::thread& t : pool) t.join();
  out << summary.to_json().dump() << '\n';
  out.flush();
  return summary;
}

}  // namespace grothkit
