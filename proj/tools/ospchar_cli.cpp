// Command-line surface for the odd symplectic character kernel:
//   char    one character as a Laurent polynomial (text or JSON)
//   table   every character in a partition box
//   oracle  characters extracted from the generating-function expansion
//   verify  identity checks, individually or as the full grid
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <array>
#include <atomic>
#include <cctype>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ospchar/ospchar.hpp"

namespace {

using namespace ospchar;
using nlohmann::json;

Partition parse_lambda(const std::string& s) {
  std::vector<int> parts;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::size_t pos = tok.find_first_not_of(" \t");
    if (pos == std::string::npos) continue;
    std::size_t end = tok.find_last_not_of(" \t");
    parts.push_back(std::stoi(tok.substr(pos, end - pos + 1)));
  }
  return Partition(std::move(parts));
}

// One "--set var=value" assignment; value is an integer or a signed
// monomial like q^2, x1, t^-3.
struct Assignment {
  std::string target;
  bool is_const = false;
  long constant = 0;
  std::string var;  // when !is_const
  int exponent = 1;
  bool negated = false;
};

Assignment parse_assignment(const std::string& s) {
  auto eq = s.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("--set expects var=value, got '" + s + "'");
  Assignment a;
  a.target = s.substr(0, eq);
  std::string v = s.substr(eq + 1);
  if (v.empty()) throw std::invalid_argument("--set " + s + ": empty value");
  if (v[0] == '-') {
    a.negated = true;
    v = v.substr(1);
    if (v.empty()) throw std::invalid_argument("--set " + s + ": empty value");
  }
  if (v.find_first_not_of("0123456789") == std::string::npos) {
    a.is_const = true;
    a.constant = std::stol(v);
    return a;
  }
  auto caret = v.find('^');
  std::string name = caret == std::string::npos ? v : v.substr(0, caret);
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) ||
      name.find_first_not_of(
          "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789") !=
          std::string::npos)
    throw std::invalid_argument("--set " + s + ": bad variable name '" + name + "'");
  a.var = name;
  if (caret != std::string::npos) {
    std::string e = v.substr(caret + 1);
    if (e.empty()) throw std::invalid_argument("--set " + s + ": empty exponent");
    a.exponent = std::stoi(e);
  }
  return a;
}

LaurentPoly apply_assignment(const LaurentPoly& p, const Assignment& a) {
  const VarTablePtr& tab = p.table();
  int target = tab->index_of(a.target);
  if (target < 0)
    throw std::invalid_argument("--set: variable '" + a.target + "' is not in the polynomial");

  VarTablePtr out_tab = tab;
  if (!a.is_const && tab->index_of(a.var) < 0) {
    std::vector<std::string> names = tab->names();
    names.push_back(a.var);
    out_tab = VarTable::create(std::move(names));
  }

  LaurentPoly value = a.is_const
                          ? LaurentPoly::constant(out_tab, a.constant)
                          : LaurentPoly::var(out_tab, out_tab->index_of(a.var), a.exponent);
  if (a.negated) value = -value;

  std::vector<LaurentPoly> images;
  for (int i = 0; i < tab->size(); ++i) {
    if (i == target)
      images.push_back(value);
    else
      images.push_back(LaurentPoly::var(out_tab, out_tab->index_of(tab->name(i))));
  }
  return map_vars(p, out_tab, images);
}

LaurentPoly compute_character(const std::string& family, const Partition& lam, int n) {
  if (family == "osp") return osp_char(lam, n);
  if (family == "sp") return sp_even(lam, n);
  if (family == "schur") return schur(lam, n);
  if (family == "proctor") return osp_proctor(lam, n);
  return osp_principal_q(lam, n);  // "principal-q"
}

json character_json(const std::string& family, const Partition& lam, int n,
                    const LaurentPoly& p) {
  json j = to_json(p);
  j["family"] = family;
  j["lambda"] = lam.parts();
  j["n"] = n;
  return j;
}

// Report output for the verify subcommand; timing is omitted so reruns with
// the same seed are byte-identical.
json report_json(const VerificationReport& r) {
  json j = to_json(r);
  j.erase("elapsed_seconds");
  return j;
}

int emit_reports(const std::vector<VerificationReport>& reps, bool as_json) {
  bool all_pass = true;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(report_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& r : reps) std::cout << r.to_line(false) << "\n";
  }
  for (const auto& r : reps) all_pass = all_pass && r.pass;
  return all_pass ? 0 : 1;
}

// The documented verification grid, run by `verify all`.
std::vector<std::function<VerificationReport()>> full_grid(unsigned long long seed) {
  std::vector<std::function<VerificationReport()>> checks;
  checks.push_back([] { return verify_osp_vs_oracle(1, 6); });
  checks.push_back([] { return verify_osp_vs_oracle(2, 7); });
  for (int n = 1; n <= 3; ++n) checks.push_back([n] { return osp_den_identity(n); });
  for (int n = 1; n <= 3; ++n) checks.push_back([n] { return sp_den_identity(n); });
  for (int n = 1; n <= 3; ++n) checks.push_back([n] { return proctor_den_identity(n); });
  for (int n = 1; n <= 3; ++n) checks.push_back([n] { return verify_proctor_z1(n, 4); });
  for (int n = 1; n <= 3; ++n) checks.push_back([n] { return verify_principal_q(n, 4); });
  for (auto [m, n, r] : std::vector<std::array<int, 3>>{
           {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 2}, {2, 2, 1}})
    checks.push_back([m, n, r] { return verify_bkw(m, n, r); });
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      checks.push_back([n, r] { return verify_reduction_osp(n, r); });
      checks.push_back([n, r] { return verify_reduction_sp(n, r); });
    }
  for (int n = 1; n <= 3; ++n)
    checks.push_back([n, seed] { return verify_key_lemma(n, 20, seed); });
  checks.push_back([] { return verify_key_lemma_symbolic(); });
  for (int n = 1; n <= 4; ++n) {
    checks.push_back([n] { return cauchy_det_check(n, CauchyVariant::difference); });
    checks.push_back([n] { return cauchy_det_check(n, CauchyVariant::one_minus); });
  }
  checks.push_back([seed] { return verify_cauchy_binet(50, seed); });
  checks.push_back([] { return verify_spot_values(); });
  for (int n = 1; n <= 3; ++n)
    checks.push_back([n] { return verify_character_symmetries(n, 4); });
  return checks;
}

std::vector<VerificationReport> run_parallel(
    const std::vector<std::function<VerificationReport()>>& checks, int jobs) {
  std::vector<VerificationReport> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
      try {
        results[i] = checks[i]();
      } catch (const std::exception& e) {
        results[i].check = "internal";
        results[i].fail(std::string("exception: ") + e.what());
      }
    }
  };
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return results;
}

int max_length_for(const std::string& family, int n) {
  return (family == "sp" || family == "schur") ? n : n + 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact odd symplectic characters: bialternants, generating-function oracle, identity checks"};
  app.require_subcommand(1);

  std::string family = "osp", lambda_str, variant = "both", check;
  int n = 0, m = 1, r = 1, degree = 6, trials = 20, max_weight = 4;
  int max_len = 0, max_part = 0;
  unsigned long long seed = 1;
  int jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  bool as_json = false;
  std::vector<std::string> sets;

  const std::vector<std::string> families{"osp", "sp", "schur", "proctor", "principal-q"};

  CLI::App* c_char = app.add_subcommand("char", "compute one character");
  c_char->add_option("family", family, "osp | sp | schur | proctor | principal-q")
      ->required()
      ->check(CLI::IsMember(families));
  c_char->add_option("--lambda", lambda_str, "comma-separated parts, empty for the empty partition");
  c_char->add_option("--n", n, "rank parameter")->required();
  c_char->add_option("--set", sets, "substitute var=value (integer or monomial), repeatable");
  c_char->add_flag("--json", as_json, "JSON output");

  CLI::App* c_table = app.add_subcommand("table", "all characters in a partition box");
  c_table->add_option("family", family, "osp | sp | schur | proctor | principal-q")
      ->required()
      ->check(CLI::IsMember(families));
  c_table->add_option("--max-len", max_len, "box height")->required();
  c_table->add_option("--max-part", max_part, "box width")->required();
  c_table->add_option("--n", n, "rank parameter")->required();
  c_table->add_flag("--json", as_json, "JSON output");

  CLI::App* c_oracle = app.add_subcommand("oracle", "characters from the generating function");
  c_oracle->add_option("--n", n, "rank parameter")->required();
  c_oracle->add_option("--degree", degree, "series truncation cap");
  c_oracle->add_flag("--json", as_json, "JSON output");

  const std::vector<std::string> checks_known{
      "osp-den", "sp-den", "proctor-den", "proctor-z1", "principal-q", "oracle",
      "bkw", "reduction-osp", "reduction-sp", "key-lemma", "key-lemma-symbolic",
      "cauchy-det", "cauchy-binet", "symmetries", "spot", "all"};
  CLI::App* c_verify = app.add_subcommand("verify", "run identity checks");
  c_verify->add_option("check", check, "check name or 'all'")
      ->required()
      ->check(CLI::IsMember(checks_known));
  c_verify->add_option("--n", n, "rank parameter");
  c_verify->add_option("--m", m, "first rank (bkw)");
  c_verify->add_option("--r", r, "rectangle width");
  c_verify->add_option("--degree", degree, "series truncation cap (oracle)");
  c_verify->add_option("--trials", trials, "random trial count");
  c_verify->add_option("--seed", seed, "random seed");
  c_verify->add_option("--max-weight", max_weight, "largest |lambda| on grid checks");
  c_verify->add_option("--variant", variant, "cauchy-det variant: difference | one-minus | both")
      ->check(CLI::IsMember({"difference", "one-minus", "both"}));
  c_verify->add_option("--jobs", jobs, "worker threads for 'all'");
  c_verify->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_char->parsed()) {
      Partition lam = parse_lambda(lambda_str);
      if (n < 0 || lam.length() > max_length_for(family, n))
        throw std::invalid_argument("partition too long for " + family + " at n=" +
                                    std::to_string(n));
      LaurentPoly p = compute_character(family, lam, n);
      for (const auto& s : sets) p = apply_assignment(p, parse_assignment(s));
      if (as_json)
        std::cout << character_json(family, lam, n, p).dump(2) << "\n";
      else
        std::cout << p.to_string() << "\n";
      return 0;
    }

    if (c_table->parsed()) {
      if (n < 0 || max_len > max_length_for(family, n))
        throw std::invalid_argument("box height exceeds the partition length bound for " +
                                    family + " at n=" + std::to_string(n));
      json arr = json::array();
      for (const Partition& lam : enumerate_bounded(max_len, max_part)) {
        LaurentPoly p = compute_character(family, lam, n);
        if (as_json)
          arr.push_back(character_json(family, lam, n, p));
        else
          std::cout << lam.to_string() << " -> " << p.to_string() << "\n";
      }
      if (as_json) std::cout << arr.dump(2) << "\n";
      return 0;
    }

    if (c_oracle->parsed()) {
      if (n < 0 || degree < 0) throw std::invalid_argument("oracle: need n >= 0, degree >= 0");
      TruncatedSeries s = cauchy_rhs(n, degree);
      json arr = json::array();
      for (const auto& [lam, p] : extract_characters(s, n)) {
        if (as_json) {
          json j = to_json(p);
          j["lambda"] = lam.parts();
          arr.push_back(std::move(j));
        } else {
          std::cout << lam.to_string() << " -> " << p.to_string() << "\n";
        }
      }
      if (as_json) std::cout << arr.dump(2) << "\n";
      return 0;
    }

    // verify
    auto need = [&](const char* flag) {
      if (c_verify->count(flag) == 0)
        throw std::invalid_argument(std::string("verify ") + check + " requires " + flag);
    };
    std::vector<VerificationReport> reps;
    if (check == "all") {
      reps = run_parallel(full_grid(seed), jobs);
    } else if (check == "osp-den") {
      need("--n");
      reps.push_back(osp_den_identity(n));
    } else if (check == "sp-den") {
      need("--n");
      reps.push_back(sp_den_identity(n));
    } else if (check == "proctor-den") {
      need("--n");
      reps.push_back(proctor_den_identity(n));
    } else if (check == "proctor-z1") {
      need("--n");
      reps.push_back(verify_proctor_z1(n, max_weight));
    } else if (check == "principal-q") {
      need("--n");
      reps.push_back(verify_principal_q(n, max_weight));
    } else if (check == "oracle") {
      need("--n");
      reps.push_back(verify_osp_vs_oracle(n, degree));
    } else if (check == "bkw") {
      need("--m");
      need("--n");
      need("--r");
      reps.push_back(verify_bkw(m, n, r));
    } else if (check == "reduction-osp") {
      need("--n");
      need("--r");
      reps.push_back(verify_reduction_osp(n, r));
    } else if (check == "reduction-sp") {
      need("--n");
      need("--r");
      reps.push_back(verify_reduction_sp(n, r));
    } else if (check == "key-lemma") {
      need("--n");
      reps.push_back(verify_key_lemma(n, trials, seed));
    } else if (check == "key-lemma-symbolic") {
      reps.push_back(verify_key_lemma_symbolic());
    } else if (check == "cauchy-det") {
      need("--n");
      if (variant != "one-minus") reps.push_back(cauchy_det_check(n, CauchyVariant::difference));
      if (variant != "difference") reps.push_back(cauchy_det_check(n, CauchyVariant::one_minus));
    } else if (check == "cauchy-binet") {
      reps.push_back(verify_cauchy_binet(trials, seed));
    } else if (check == "symmetries") {
      need("--n");
      reps.push_back(verify_character_symmetries(n, max_weight));
    } else {  // spot
      reps.push_back(verify_spot_values());
    }
    return emit_reports(reps, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
