#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsjack/cache.hpp"
#include "nsjack/composition.hpp"
#include "nsjack/jack.hpp"
#include "nsjack/oracle.hpp"
#include "nsjack/pieri.hpp"
#include "nsjack/verify.hpp"

namespace {

using namespace nsjack;

void print_terms(const std::vector<std::pair<Composition, Rational>>& terms,
                 const char* label) {
  for (const auto& [nu, c] : terms)
    std::cout << label << "_(" << format_composition(nu)
              << ")  coeff " << format_rational(c) << "\n";
  if (terms.empty()) std::cout << "(empty expansion)\n";
}

int cmd_gen(int n, const Rational& alpha, int max_weight,
            const std::string& out_path) {
  const auto t0 = std::chrono::steady_clock::now();
  JackTable table(n, alpha);
  table.fill(max_weight);
  if (!out_path.empty()) write_table(table, out_path);
  const auto t1 = std::chrono::steady_clock::now();
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  std::cout << "generated " << table.entries().size() << " polynomials (N="
            << n << ", alpha=" << format_rational(alpha) << ", |eta| <= "
            << max_weight << ") in " << ms << " ms\n";
  if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_pieri(const Composition& eta, const std::vector<std::string>& mode,
              const Rational& alpha) {
  const int n = static_cast<int>(eta.size());
  const std::string& kind = mode.at(0);
  auto index_arg = [&](int lo, int hi) {
    if (mode.size() != 2)
      throw CLI::ValidationError("--mode " + kind + " needs an argument");
    const int v = std::stoi(mode[1]);
    if (v < lo || v > hi)
      throw CLI::ValidationError("--mode " + kind + " argument out of range");
    return v;
  };

  if (kind == "zi") {
    const int i = index_arg(1, n);  // 1-based on the command line
    print_terms(expand_z_i(eta, i - 1, alpha).terms, "E");
  } else if (kind == "e1") {
    print_terms(expand_e1(eta, alpha).terms, "E");
  } else if (kind == "eN1") {
    print_terms(expand_eN1(eta, alpha).terms, "E");
  } else if (kind == "ep") {
    const int p = index_arg(1, n);
    if (p == 1) {
      print_terms(expand_e1(eta, alpha).terms, "E");
    } else if (p == n - 1) {
      print_terms(expand_eN1(eta, alpha).terms, "E");
    } else if (p == n) {
      std::cout << "E_(" << format_composition(plus_ones(eta))
                << ")  coeff 1\n";
    } else {
      std::cout << "(no closed form for 1 < p < N-1; using the brute-force "
                   "oracle)\n";
      JackTable table(n, alpha);
      print_terms(brute_pieri_ep(eta, p, table).terms, "E");
    }
  } else if (kind == "sym") {
    const int p = index_arg(1, n);
    if (!is_partition(eta))
      throw CLI::ValidationError("--mode sym needs a partition --eta");
    print_terms(expand_ep_P(eta, p, alpha, n), "P");
  } else {
    throw CLI::ValidationError("unknown mode: " + kind);
  }
  return 0;
}

int cmd_verify(int n, const std::vector<Rational>& alphas, int max_weight) {
  const auto results = run_verify(n, alphas, max_weight);
  return report_verify(results, std::cout) ? 0 : 1;
}

int cmd_explore(int n, int p, const Rational& alpha, int max_weight,
                const std::string& out_path) {
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << "\n";
      return 1;
    }
    out = &file;
  }

  *out << "eta,nu,A_oracle,B_from_A,B_swa,B_ext_moved,B_ext_all,"
          "is_mstar,is_p1,at_most_one_down,"
          "swa_match,ext_moved_match,ext_all_match\n";

  JackTable table(n, alpha);
  std::map<std::string, std::pair<int, int>> rates;  // class -> (match, total)
  auto tally = [&](const std::string& cls, bool match) {
    auto& [hits, total] = rates[cls];
    ++total;
    if (match) ++hits;
  };

  for (const auto& eta : compositions_up_to_weight(n, max_weight)) {
    const BasisExpansion brute = brute_pieri_ep(eta, p, table);
    for (const auto& [nu, a] : brute.terms) {
      if (a == 0) continue;
      const ConjectureRecord rec = conjecture_Bp(eta, p, nu, alpha, table);
      *out << "\"" << format_composition(eta) << "\",\""
           << format_composition(nu) << "\","
           << format_rational(rec.A_oracle) << ','
           << format_rational(rec.B_from_A) << ','
           << format_rational(rec.B_swa) << ','
           << format_rational(rec.B_ext_moved) << ','
           << format_rational(rec.B_ext_all) << ','
           << rec.is_mstar << ',' << rec.is_p1 << ','
           << rec.at_most_one_down << ','
           << rec.swa_match << ',' << rec.ext_moved_match << ','
           << rec.ext_all_match << "\n";
      if (rec.is_mstar) tally("nu = eta + chi_Mstar (proved)", rec.swa_match);
      if (rec.at_most_one_down)
        tally("at most one part moves downwards", rec.ext_moved_match);
      else
        tally("more than one part moves downwards", rec.ext_moved_match);
      tally("all rows (extended form, moved-rows reading)",
            rec.ext_moved_match);
      tally("all rows (extended form, all-rows reading)", rec.ext_all_match);
      tally("all rows (two-product form)", rec.swa_match);
    }
  }

  std::cout << "match rates (N=" << n << ", p=" << p
            << ", alpha=" << format_rational(alpha) << ", |eta| <= "
            << max_weight << "):\n";
  for (const auto& [cls, rt] : rates)
    std::cout << "  " << cls << ": " << rt.first << "/" << rt.second << "\n";
  return 0;
}

Rational parse_alpha(const std::string& text) {
  const Rational a = parse_rational(text);
  if (a <= 0) throw CLI::ValidationError("alpha must be positive");
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonsymmetric Jack polynomials and their Pieri coefficients "
               "in exact rational arithmetic"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int n = 3;
  int max_weight = 4;
  int p = 2;
  std::string alpha_text = "2";
  std::vector<std::string> alpha_list;
  std::string eta_text;
  std::vector<std::string> mode;
  std::string out_path;

  auto* gen = app.add_subcommand("gen", "generate a table and write a cache");
  gen->add_option("--n", n, "number of variables")->required();
  gen->add_option("--alpha", alpha_text, "parameter alpha (num or num/den)");
  gen->add_option("--max-weight", max_weight, "largest |eta| to generate");
  gen->add_option("--out", out_path, "cache file path");

  auto* pieri = app.add_subcommand("pieri", "print one Pieri expansion");
  pieri->add_option("--eta", eta_text, "source composition, comma-separated")
      ->required();
  pieri->add_option("--alpha", alpha_text, "parameter alpha");
  pieri
      ->add_option("--mode", mode,
                   "zi <i> | e1 | eN1 | ep <p> | sym <p> (1-based)")
      ->required()
      ->expected(1, 2);

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->add_option("--n", n, "number of variables");
  verify->add_option("--alpha", alpha_list,
                     "alpha samples (repeatable; default 2,3,5/2,7/3,11/2)");
  verify->add_option("--max-weight", max_weight, "largest |eta| checked");

  auto* explore =
      app.add_subcommand("explore", "general-p conjecture report (CSV)");
  explore->add_option("--n", n, "number of variables");
  explore->add_option("--p", p, "elementary symmetric degree");
  explore->add_option("--alpha", alpha_text, "parameter alpha");
  explore->add_option("--max-weight", max_weight, "largest |eta| explored");
  explore->add_option("--out", out_path, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(n, parse_alpha(alpha_text), max_weight,
                                      out_path);
    if (pieri->parsed())
      return cmd_pieri(parse_composition(eta_text), mode,
                       parse_alpha(alpha_text));
    if (verify->parsed()) {
      std::vector<Rational> alphas;
      if (alpha_list.empty())
        alpha_list = {"2", "3", "5/2", "7/3", "11/2"};
      for (const auto& a : alpha_list) alphas.push_back(parse_alpha(a));
      return cmd_verify(n, alphas, max_weight);
    }
    if (explore->parsed()) {
      if (p < 1 || p > n) throw CLI::ValidationError("need 1 <= p <= N");
      return cmd_explore(n, p, parse_alpha(alpha_text), max_weight, out_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
