#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ccc/bounds.hpp"
#include "ccc/codes.hpp"
#include "ccc/composition.hpp"
#include "ccc/designs.hpp"
#include "ccc/errors.hpp"
#include "ccc/oracle.hpp"
#include "json.hpp"

namespace ccc::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kInvalidInput = 2;
constexpr int kUnsupported = 3;

Composition parse_comp(const std::string& text, std::ostream& out) {
  Composition c = Composition::parse(text);
  if (c.str() != text) {
    out << "note: composition " << text << " normalized to " << c.str() << "\n";
  }
  return c;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw invalid_input("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw invalid_input("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw invalid_input("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json nccc_json(const NcccAnswer& a) {
  json j;
  j["status"] = to_string(a.status);
  j["lower"] = a.lower;
  if (a.upper) j["upper"] = *a.upper;
  return j;
}

void print_nccc_line(std::ostream& out, const NcccAnswer& a) {
  out << to_string(a.status) << " " << a.lower;
  if (a.upper) out << " " << *a.upper;
  out << "\n";
}

int cmd_bounds(const std::string& comp_str, long long n, bool as_json, std::ostream& out) {
  Composition c = parse_comp(comp_str, out);
  const long long johnson = johnson_upper(n, c);
  const NcccAnswer answer = nccc_exact(c);
  const bool have_cert = n >= 1 && johnson >= 1;
  const bool have_legacy = c.num_parts() >= 2;
  if (as_json) {
    json j;
    j["comp"] = c.str();
    j["n"] = n;
    j["johnson_upper"] = johnson;
    if (have_cert) j["feasibility_certificate"] = feasibility_certificate(johnson, n, c);
    if (have_legacy) {
      const auto [lo, hi] = legacy_bounds(c);
      j["legacy_lower"] = lo;
      j["legacy_upper"] = hi;
    }
    j["nccc"] = nccc_json(answer);
    out << j.dump() << "\n";
    return kOk;
  }
  out << "comp " << c.str() << "\n";
  out << "n " << n << "\n";
  out << "johnson_upper " << johnson << "\n";
  if (have_cert) {
    out << "feasibility_certificate "
        << (feasibility_certificate(johnson, n, c) ? "true" : "false") << "\n";
  }
  if (have_legacy) {
    const auto [lo, hi] = legacy_bounds(c);
    out << "legacy_lower " << lo << "\n";
    out << "legacy_upper " << hi << "\n";
  }
  out << "nccc ";
  print_nccc_line(out, answer);
  return kOk;
}

int cmd_nccc(const std::string& comp_str, bool as_json, std::ostream& out) {
  Composition c = parse_comp(comp_str, out);
  const NcccAnswer answer = nccc_exact(c);
  if (as_json) {
    json j;
    j["comp"] = c.str();
    j.update(nccc_json(answer));
    out << j.dump() << "\n";
  } else {
    print_nccc_line(out, answer);
  }
  return kOk;
}

int cmd_construct(const std::string& comp_str, long long n, const std::string& out_file,
                  std::ostream& out) {
  Composition c = parse_comp(comp_str, out);
  Code code = construct_optimal(c, static_cast<int>(n));
  const VerifyReport report = verify_code(code);
  if (!report.passed) throw std::logic_error("constructed code failed verification");
  if (!out_file.empty()) write_file(out_file, format_code(code));
  out << "size " << code.size() << " = floor(" << n << "/" << c.largest_part()
      << "), verified d=" << report.min_distance << "\n";
  return kOk;
}

int cmd_verify(const std::string& in_file, int expect_size, std::ostream& out) {
  Code code = parse_code(read_file(in_file));
  const VerifyReport report = verify_code(code);
  if (!report.passed) {
    out << "verification failed: " << report.failure << "\n";
    return kVerifyFailed;
  }
  if (expect_size >= 0 && code.size() != expect_size) {
    out << "size " << code.size() << " != expected " << expect_size << "\n";
    return kVerifyFailed;
  }
  out << "ok size " << code.size() << " d=" << report.min_distance << "\n";
  return kOk;
}

int cmd_oracle(const std::string& comp_str, long long n, int q, const std::string& out_file,
               bool as_json, std::ostream& out) {
  Composition c = parse_comp(comp_str, out);
  OracleResult result = exact_max_code(q, static_cast<int>(n), c);
  if (!out_file.empty() && result.witness) write_file(out_file, format_code(*result.witness));
  if (as_json) {
    json j;
    j["comp"] = c.str();
    j["q"] = q;
    j["n"] = n;
    j["value"] = result.value;
    j["search_space"] = result.search_space;
    out << j.dump() << "\n";
  } else {
    out << "value " << result.value << "\n";
    out << "search_space " << result.search_space << "\n";
  }
  return kOk;
}

int cmd_table(int max_w1, const std::string& format, std::ostream& out) {
  if (max_w1 < 1) throw invalid_input("--max-w1 must be positive");
  struct Row {
    Composition c;
    DerivedParams d;
    NcccAnswer a;
  };
  std::vector<Row> rows;
  for (int w1 = 1; w1 <= max_w1; ++w1) {
    for (int w2 = w1; w2 >= 1; --w2) {
      for (int w3 = w2; w3 >= 1; --w3) {
        Composition c({w1, w2, w3});
        rows.push_back({c, derived_params(c), nccc_exact(c)});
      }
    }
  }
  const bool csv = format == "csv";
  if (csv) {
    out << "comp,w,s,mu,status,lower,upper\n";
    for (const Row& r : rows) {
      out << '"' << r.c.str() << "\"," << r.d.w << "," << r.d.s << "," << r.d.mu << ","
          << to_string(r.a.status) << "," << r.a.lower << ",";
      if (r.a.upper) out << *r.a.upper;
      out << "\n";
    }
    return kOk;
  }
  out << "| comp | w | s | mu | status | N_ccc |\n";
  out << "| --- | --- | --- | --- | --- | --- |\n";
  std::vector<const Row*> open_rows;
  for (const Row& r : rows) {
    out << "| " << r.c.str() << " | " << r.d.w << " | " << r.d.s << " | " << r.d.mu
        << " | " << to_string(r.a.status) << " | ";
    if (r.a.status == NcccStatus::exact) {
      out << r.a.lower;
    } else {
      out << "[" << r.a.lower << ", " << *r.a.upper << "]";
      open_rows.push_back(&r);
    }
    out << " |\n";
  }
  if (!open_rows.empty()) {
    out << "\nopen exceptions:";
    for (size_t i = 0; i < open_rows.size(); ++i) {
      out << (i ? "; " : " ") << open_rows[i]->c.str() << " in [" << open_rows[i]->a.lower
          << ", " << *open_rows[i]->a.upper << "]";
    }
    out << "\n";
  }
  return kOk;
}

int cmd_gdp(bool threshold_mode, int w1, int s, int M, int e1, int e2, std::ostream& out) {
  const GdpDesign g = threshold_mode ? build_exgdp(w1, s) : build_gdp(M, e1, e2);
  out << format_gdp(g) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"constructions, bounds and checkers for constant-composition codes"};
  app.require_subcommand(1);

  std::string comp_str, out_file, in_file, format = "md";
  long long n = 0;
  int q = 0, max_w1 = 0, expect_size = -1;
  int w1 = 0, s = 0, M = 0, e1 = 0, e2 = 0;
  bool json_bounds = false, json_nccc = false, json_oracle = false;

  auto* bounds_cmd = app.add_subcommand("bounds", "bound and certificate values at one length");
  bounds_cmd->add_option("--comp", comp_str)->required();
  bounds_cmd->add_option("--n", n)->required();
  bounds_cmd->add_flag("--json", json_bounds);

  auto* nccc_cmd = app.add_subcommand("nccc", "stabilization length of a composition");
  nccc_cmd->add_option("--comp", comp_str)->required();
  nccc_cmd->add_flag("--json", json_nccc);

  auto* construct_cmd = app.add_subcommand("construct", "build and verify an optimal code");
  construct_cmd->add_option("--comp", comp_str)->required();
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--out", out_file);

  auto* verify_cmd = app.add_subcommand("verify", "re-verify a code file");
  verify_cmd->add_option("--in", in_file)->required();
  verify_cmd->add_option("--expect-size", expect_size);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive exact maximum at small size");
  oracle_cmd->add_option("--comp", comp_str)->required();
  oracle_cmd->add_option("--n", n)->required();
  oracle_cmd->add_option("--q", q)->required();
  oracle_cmd->add_option("--out", out_file);
  oracle_cmd->add_flag("--json", json_oracle);

  auto* table_cmd = app.add_subcommand("table", "N_ccc table over three-part compositions");
  table_cmd->add_option("--max-w1", max_w1)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"md", "csv"}));

  auto* gdp_cmd = app.add_subcommand("gdp", "debug dump of difference designs");
  auto* opt_w1 = gdp_cmd->add_option("--w1", w1);
  auto* opt_s = gdp_cmd->add_option("--s", s)->needs(opt_w1);
  opt_w1->needs(opt_s);
  auto* opt_M = gdp_cmd->add_option("--M", M)->excludes(opt_w1);
  auto* opt_e1 = gdp_cmd->add_option("--e1", e1)->needs(opt_M);
  auto* opt_e2 = gdp_cmd->add_option("--e2", e2)->needs(opt_M);
  opt_M->needs(opt_e1);
  opt_M->needs(opt_e2);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(comp_str, n, json_bounds, out);
    if (nccc_cmd->parsed()) return cmd_nccc(comp_str, json_nccc, out);
    if (construct_cmd->parsed()) return cmd_construct(comp_str, n, out_file, out);
    if (verify_cmd->parsed()) return cmd_verify(in_file, expect_size, out);
    if (oracle_cmd->parsed()) return cmd_oracle(comp_str, n, q, out_file, json_oracle, out);
    if (table_cmd->parsed()) return cmd_table(max_w1, format, out);
    if (gdp_cmd->parsed()) {
      const bool threshold_mode = opt_w1->count() > 0;
      if (!threshold_mode && opt_M->count() == 0) {
        throw invalid_input("gdp needs either --w1/--s or --M/--e1/--e2");
      }
      return cmd_gdp(threshold_mode, w1, s, M, e1, e2, out);
    }
  } catch (const unsupported_parameters& e) {
    err << "unsupported parameters: " << e.what() << "\n";
    return kUnsupported;
  } catch (const search_exhausted& e) {
    err << "unsupported parameters: " << e.what() << "\n";
    return kUnsupported;
  } catch (const invalid_input& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  err << "invalid input: no subcommand\n";
  return kInvalidInput;
}

}  // namespace ccc::cli
