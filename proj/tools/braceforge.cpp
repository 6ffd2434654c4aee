// Command-line front end: construct braces, run structural reports, execute
// the property-verification suites, export Yang-Baxter solutions.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "braceforge/errors.hpp"
#include "braceforge/json_io.hpp"
#include "braceforge/verify.hpp"
#include "braceforge/ybe.hpp"

namespace {

using braceforge::json;

int effective_cap(int cli_cap) {
  return cli_cap > 0 ? cli_cap : braceforge::default_order_cap();
}

void print_verify_table(const std::vector<braceforge::SuiteResult>& results,
                        const braceforge::VerifySummary& summary) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.subject.size());
  for (const auto& r : results) {
    std::string line = r.subject;
    line.resize(width, ' ');
    std::cout << line << "  " << r.status;
    if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
  }
  std::cout << summary.passed << " passed, " << summary.failed << " failed, "
            << summary.skipped << " skipped\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite skew brace calculator"};
  app.require_subcommand(1);
  int order_cap = 0;
  app.add_option("--order-cap", order_cap,
                 "maximum brace order (default: BRACEFORGE_ORDER_CAP or 512)");

  std::string construct_expr, construct_out;
  auto* cmd_construct =
      app.add_subcommand("construct", "build a brace and write its JSON table");
  cmd_construct->add_option("expr", construct_expr, "builder expression or file")
      ->required();
  cmd_construct->add_option("-o,--output", construct_out, "output file");

  std::string analyze_spec;
  bool analyze_witnesses = false;
  bool analyze_json = false;
  auto* cmd_analyze =
      app.add_subcommand("analyze", "full structural report as JSON");
  cmd_analyze->add_option("brace", analyze_spec, "catalog name, expression or file")
      ->required();
  cmd_analyze->add_flag("--witnesses", analyze_witnesses,
                        "include failure witnesses");
  cmd_analyze->add_flag("--json", analyze_json, "JSON output (always on)");

  std::string verify_selector = "all";
  std::string verify_filter;
  bool verify_json = false;
  bool verify_witnesses = false;
  auto* cmd_verify =
      app.add_subcommand("verify", "run property suites over the catalog");
  cmd_verify->add_option("selector", verify_selector,
                         "suite name or 'all' (see --list)");
  cmd_verify->add_option("--filter", verify_filter,
                         "restrict to catalog braces whose name contains this");
  cmd_verify->add_flag("--json", verify_json, "machine-readable output");
  cmd_verify->add_flag("--witnesses", verify_witnesses,
                       "include failure details (always recorded)");
  bool verify_list = false;
  cmd_verify->add_flag("--list", verify_list, "list suite selectors and exit");

  std::string solution_spec, solution_out;
  auto* cmd_solution =
      app.add_subcommand("solution", "export the Yang-Baxter solution of a brace");
  cmd_solution->add_option("brace", solution_spec, "catalog name, expression or file")
      ->required();
  cmd_solution->add_option("-o,--output", solution_out, "output file");

  std::string subs_spec;
  bool subs_json = false;
  auto* cmd_subs = app.add_subcommand(
      "subskewbraces", "enumerate sub skew braces (exploratory)");
  cmd_subs->add_option("brace", subs_spec, "catalog name, expression or file")
      ->required();
  cmd_subs->add_flag("--json", subs_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    const int cap = effective_cap(order_cap);

    if (*cmd_construct) {
      braceforge::SkewBrace b = braceforge::load_brace(construct_expr, cap);
      std::string text = braceforge::brace_to_json(b).dump(2) + "\n";
      if (construct_out.empty())
        std::cout << text;
      else
        braceforge::write_text_file(construct_out, text);
      return 0;
    }

    if (*cmd_analyze) {
      braceforge::SkewBrace b = braceforge::load_brace(analyze_spec, cap);
      json report =
          braceforge::analysis_report(analyze_spec, b, analyze_witnesses);
      std::cout << report.dump(2) << "\n";
      return 0;
    }

    if (*cmd_verify) {
      if (verify_list) {
        for (const auto& name : braceforge::suite_names())
          std::cout << name << "\n";
        return 0;
      }
      std::vector<braceforge::SuiteResult> results;
      braceforge::VerifySummary summary =
          braceforge::run_suites(verify_selector, verify_filter, results);
      if (verify_json) {
        json j;
        j["schema"] = 1;
        j["selector"] = verify_selector;
        json items = json::array();
        for (const auto& r : results) {
          json item;
          item["subject"] = r.subject;
          item["status"] = r.status;
          if (!r.detail.empty()) item["detail"] = r.detail;
          items.push_back(item);
        }
        j["results"] = items;
        j["passed"] = summary.passed;
        j["failed"] = summary.failed;
        j["skipped"] = summary.skipped;
        std::cout << j.dump(2) << "\n";
      } else {
        print_verify_table(results, summary);
      }
      return summary.failed == 0 ? 0 : 1;
    }

    if (*cmd_solution) {
      braceforge::SkewBrace b = braceforge::load_brace(solution_spec, cap);
      braceforge::SetSolution s = braceforge::solution_from_brace(b);
      std::string text = braceforge::solution_to_json(s).dump(2) + "\n";
      if (solution_out.empty())
        std::cout << text;
      else
        braceforge::write_text_file(solution_out, text);
      return 0;
    }

    if (*cmd_subs) {
      braceforge::SkewBrace b = braceforge::load_brace(subs_spec, cap);
      auto subs = braceforge::sub_skew_braces(b);
      if (subs_json) {
        json j;
        j["schema"] = 1;
        j["brace"] = subs_spec;
        j["count"] = static_cast<int>(subs.size());
        json items = json::array();
        for (const auto& s : subs) items.push_back(braceforge::element_set_to_json(s));
        j["sub_skew_braces"] = items;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << subs.size() << " sub skew braces of " << subs_spec << "\n";
        for (const auto& s : subs) {
          std::cout << "  [";
          bool first = true;
          for (int x : s.indices()) {
            if (!first) std::cout << " ";
            std::cout << x;
            first = false;
          }
          std::cout << "]\n";
        }
      }
      return 0;
    }
  } catch (const braceforge::AxiomError& e) {
    std::cerr << "axiom error: " << e.what();
    if (e.witness[0] >= 0)
      std::cerr << " witness (" << e.witness[0] << ", " << e.witness[1] << ", "
                << e.witness[2] << ")";
    std::cerr << "\n";
    return 2;
  } catch (const braceforge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
