// hyperenum: orbit representatives, curves, verification and timings.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hyperenum/curves.hpp"
#include "hyperenum/galois_enum.hpp"
#include "hyperenum/oracle.hpp"

using namespace hyperenum;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

std::vector<std::string> encoded(const std::vector<FieldElt>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(std::to_string(x.encode()));
  return out;
}

std::vector<std::string> type_strings(const GaloisType& t) {
  std::vector<std::string> out;
  for (int m : t) out.push_back(std::to_string(m));
  return out;
}

GaloisType parse_type(const std::string& s) {
  GaloisType t;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      t.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw UsageError("bad --type entry: " + part);
    }
  }
  std::sort(t.rbegin(), t.rend());
  if (t.empty() || t.back() < 1) throw UsageError("--type must list positive integers");
  return t;
}

const FieldCtx& field_or_usage(u64 q) {
  try {
    return field_of_order(q);
  } catch (const FieldError& e) {
    throw UsageError(std::string("bad --q: ") + e.what());
  }
}

struct Common {
  std::string format = "csv";
  std::string out;
  int threads = 1;
};

class Output {
 public:
  explicit Output(const Common& c) : json_(c.format == "jsonl") {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw UsageError("cannot open " + c.out);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  bool json() const { return json_; }

 private:
  bool json_;
  std::ofstream file_;
};

int cmd_orbits(const Common& c, u64 q, int n, const std::string& type) {
  const FieldCtx& F = field_or_usage(q);
  std::vector<TypedRep> reps;
  if (!type.empty()) {
    GaloisType M = parse_type(type);
    int sum = 0;
    for (int m : M) sum += m;
    if (sum != n) throw UsageError("--type does not sum to --n");
    if (M[0] == n && n % 2 != 0) throw UsageError("odd n unsupported");
    for (auto& f : reps_for_type(F, M)) reps.push_back({M, f});
  } else {
    if (n % 2 != 0) throw UsageError("odd n unsupported");
    if (n < 4) throw UsageError("n must be at least 4");
    reps = sym_orbit_reps(F, n, c.threads);
  }
  Output out(c);
  if (!out.json()) out.os() << "q,n,type,degree,coeffs,stabilizer\n";
  for (const auto& r : reps) {
    const auto coeffs = encoded(r.form.dehom().coeffs());
    const auto stab = zero_set_stabilizer(r.form).size();
    if (out.json()) {
      nlohmann::json j{{"q", q}, {"n", n}, {"type", r.type}, {"degree", r.form.dehom().degree()},
                       {"coeffs", std::vector<u64>()}, {"stabilizer", stab}};
      for (const auto& x : r.form.dehom().coeffs()) j["coeffs"].push_back(x.encode());
      out.os() << j.dump() << "\n";
    } else {
      out.os() << q << ',' << n << ',' << join(type_strings(r.type), ';') << ',' << r.form.dehom().degree() << ','
               << join(coeffs, ';') << ',' << stab << "\n";
    }
  }
  return kOk;
}

void check_curve_args(u64 q, int genus) {
  if (q % 2 == 0) throw UsageError("q must be odd");
  if (genus < 2) throw UsageError("genus must be at least 2");
  field_or_usage(q);
}

void curve_guard(u64 q, int genus) {
  long double v = 1;
  for (int i = 0; i < 2 * genus - 1; ++i) v *= static_cast<long double>(q);
  if (v > 1e8L) throw OracleGuard("q^(2g-1) exceeds the enumeration limit");
}

int cmd_curves(const Common& c, u64 q, int genus) {
  check_curve_args(q, genus);
  curve_guard(q, genus);
  const FieldCtx& F = field_of_order(q);
  const auto curves = enumerate_curves(F, genus, c.threads);
  const auto mass = mass_check(curves, q, genus);
  Output out(c);
  if (!out.json()) out.os() << "q,genus,degree,coeffs,twist,aut_order\n";
  for (const auto& cv : curves) {
    const auto w = weierstrass_coeffs(cv);
    const int degree = static_cast<int>(w.size()) - 1;
    if (out.json()) {
      nlohmann::json j{{"q", q},           {"genus", genus},       {"degree", degree}, {"coeffs", std::vector<u64>()},
                       {"twist", cv.delta.encode()}, {"aut_order", cv.aut_order}};
      for (const auto& x : w) j["coeffs"].push_back(x.encode());
      out.os() << j.dump() << "\n";
    } else {
      out.os() << q << ',' << genus << ',' << degree << ',' << join(encoded(w), ';') << ',' << cv.delta.encode() << ','
               << cv.aut_order << "\n";
    }
  }
  const std::string m = mass.value.str();
  const std::string mass_text = m.find('/') == std::string::npos ? m + "/1" : m;
  if (out.json())
    out.os() << nlohmann::json{{"count", curves.size()}, {"mass", mass_text}}.dump() << "\n";
  else
    out.os() << "# count " << curves.size() << " mass " << mass_text << "\n";
  return kOk;
}

void oracle_guard(u64 q, int n) {
  long double v = 1;
  for (int i = 0; i < n; ++i) v *= static_cast<long double>(q);
  if (v > static_cast<long double>(kOracleLimit)) throw OracleGuard("q^n exceeds the brute-force limit");
}

int cmd_verify(const Common& c, u64 q, int genus, int n, bool oracle, bool mass) {
  if (!oracle && !mass) mass = true;
  if (oracle) oracle_guard(q, genus > 0 ? 2 * genus + 2 : n);
  std::vector<std::pair<std::string, std::string>> rows;
  if (genus > 0) {
    check_curve_args(q, genus);
    curve_guard(q, genus);
    const FieldCtx& F = field_of_order(q);
    const auto curves = enumerate_curves(F, genus, c.threads);
    if (mass) {
      auto m = mass_check(curves, q, genus);
      rows.emplace_back("mass", m.pass ? "PASS" : "FAIL");
    }
    if (oracle) rows.emplace_back("oracle", compare_curves_with_oracle(curves, F, genus).empty() ? "PASS" : "FAIL");
  } else {
    if (n < 4 || n % 2 != 0) throw UsageError("verify needs --genus, or an even --n >= 4");
    const FieldCtx& F = field_or_usage(q);
    const auto reps = sym_orbit_reps(F, n, c.threads);
    if (mass) {
      Rational sum = 0;
      for (const auto& r : reps) sum += Rational(1, static_cast<long>(zero_set_stabilizer(r.form).size()));
      Rational expected = 1;
      for (int i = 0; i < n - 3; ++i) expected *= static_cast<long>(q);
      rows.emplace_back("mass", sum == expected ? "PASS" : "FAIL");
    }
    if (oracle) rows.emplace_back("oracle", compare_orbits_with_oracle(reps, F, n).empty() ? "PASS" : "FAIL");
  }
  Output out(c);
  bool ok = true;
  if (!out.json()) out.os() << "check,status\n";
  for (const auto& [name, status] : rows) {
    ok = ok && status == "PASS";
    if (out.json())
      out.os() << nlohmann::json{{"check", name}, {"status", status}}.dump() << "\n";
    else
      out.os() << name << ',' << status << "\n";
  }
  return ok ? kOk : kFail;
}

int cmd_bench(const Common& c, const std::vector<u64>& qs, int genus, int reps) {
  if (genus < 2) throw UsageError("genus must be at least 2");
  if (reps < 1) throw UsageError("repetitions must be positive");
  Output out(c);
  if (!out.json()) out.os() << "q,phase,seconds\n";
  auto row = [&](u64 q, const char* phase, double s) {
    if (out.json())
      out.os() << nlohmann::json{{"q", q}, {"phase", phase}, {"seconds", s}}.dump() << "\n";
    else
      out.os() << q << ',' << phase << ',' << s << "\n";
  };
  using clock = std::chrono::steady_clock;
  for (u64 q : qs) {
    const FieldCtx& F = field_or_usage(q);
    double best_sym = 1e300, best_curves = 1e300;
    for (int r = 0; r < reps; ++r) {
      auto t0 = clock::now();
      auto sym = sym_orbit_reps(F, 2 * genus + 2, c.threads);
      auto t1 = clock::now();
      best_sym = std::min(best_sym, std::chrono::duration<double>(t1 - t0).count());
      if (q % 2 == 1) {
        std::size_t count = 0;
        for (const auto& s : sym) count += curves_from_rep(s.form).size();
        auto t2 = clock::now();
        best_curves = std::min(best_curves, std::chrono::duration<double>(t2 - t1).count());
        (void)count;
      }
    }
    row(q, "sym", best_sym);
    if (q % 2 == 1) row(q, "curves", best_curves);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate hyperelliptic curves over finite fields up to isomorphism"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "jsonl"}));
    sub->add_option("--out", common.out, "Output file (default stdout)");
    sub->add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  };

  u64 q = 0;
  int n = 0, genus = 0, reps = 3;
  std::string type;
  bool oracle = false, mass = false;
  std::vector<u64> qs;

  auto* orbits = app.add_subcommand("orbits", "Orbit representatives of separable forms of degree n");
  orbits->add_option("--q", q, "Field order")->required();
  orbits->add_option("--n", n, "Form degree")->required();
  orbits->add_option("--type", type, "Galois type, e.g. 3,2,1");
  add_common(orbits);

  auto* curves = app.add_subcommand("curves", "Hyperelliptic curves of the given genus");
  curves->add_option("--q", q, "Field order (odd)")->required();
  curves->add_option("--genus", genus, "Genus")->required();
  add_common(curves);

  auto* verify = app.add_subcommand("verify", "Mass formula and brute-force checks");
  verify->add_option("--q", q, "Field order")->required();
  auto* vg = verify->add_option("--genus", genus, "Genus");
  auto* vn = verify->add_option("--n", n, "Form degree");
  vg->excludes(vn);
  verify->add_flag("--oracle", oracle, "Compare with brute force");
  verify->add_flag("--mass", mass, "Check the mass formula");
  add_common(verify);

  auto* bench = app.add_subcommand("bench", "Timings of the orbit and curve phases");
  bench->add_option("--q", qs, "Field orders")->required();
  bench->add_option("--genus", genus, "Genus")->default_val(2);
  bench->add_option("--reps", reps, "Repetitions; the minimum is reported")->default_val(3);
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (orbits->parsed()) return cmd_orbits(common, q, n, type);
    if (curves->parsed()) return cmd_curves(common, q, genus);
    if (verify->parsed()) {
      if (genus == 0 && n == 0) throw UsageError("verify needs --genus or --n");
      return cmd_verify(common, q, genus, n, oracle, mass);
    }
    if (bench->parsed()) return cmd_bench(common, qs, genus, reps);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleGuard& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
