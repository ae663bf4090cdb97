// catmat: decide whether a finite category with a given hom-set cardinality
// matrix exists, build and check witnesses, run the brute-force oracle.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catmat/certificate.hpp"
#include "catmat/decider.hpp"
#include "catmat/errors.hpp"
#include "catmat/oracle.hpp"
#include "catmat/verifier.hpp"
#include "catmat/witness.hpp"

namespace fs = std::filesystem;
using namespace catmat;

namespace {

enum Exit { kExists = 0, kAbsent = 1, kInputError = 2, kUnknown = 3 };

struct Options {
  std::string input;
  std::string batch;
  std::string out;
  std::string certificate;
  bool json = false;
  bool explain = false;
  bool via_submatrices = false;
  std::uint64_t budget = SearchBudget{}.max_assignments;
};

/// Result of one command on one input.
struct Outcome {
  int code = kExists;
  std::string text;  // human-readable
  json doc;          // --json form
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  return {std::istreambuf_iterator<char>(in), {}};
}

VerifyOptions verify_options() {
  VerifyOptions opts;
  if (const char* env = std::getenv("CATMAT_TRIPLE_BUDGET")) {
    char* end = nullptr;
    errno = 0;
    const auto value = std::strtoull(env, &end, 10);
    if (errno != 0 || end == env || *end != '\0' || env[0] == '-') {
      throw std::runtime_error(std::string("CATMAT_TRIPLE_BUDGET is not a count: ") + env);
    }
    opts.triple_budget = value;
  }
  return opts;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    out += (a ? "," : "") + std::to_string(xs[a]);
  }
  return out;
}

std::string report_text(const VerificationReport& r, const FiniteCategory& c) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << " (" << r.triples_checked << " triples checked";
  if (!r.passed) {
    out << ", " << r.failure_count << " failures";
  }
  out << ")\n";
  for (const auto& x : r.cardinality_mismatches) {
    out << "  cardinality: |Hom(" << x.i << "," << x.j << ")| = " << x.actual << ", expected "
        << x.expected << "\n";
  }
  auto name = [&](MorphId f) {
    return f == kNoMorphism || f >= c.morphism_count() ? std::string("<unset>") : c.label_of(f);
  };
  for (const auto& x : r.identity_failures) {
    out << "  identity: " << (x.left ? "id o " : "") << name(x.morphism) << (x.left ? "" : " o id")
        << " at object " << x.object << "\n";
  }
  for (const auto& x : r.closure_failures) {
    out << "  closure: " << name(x.g) << " o " << name(x.f) << " = " << name(x.result) << "\n";
  }
  for (const auto& x : r.associativity_failures) {
    out << "  associativity: h=" << name(x.h) << " g=" << name(x.g) << " f=" << name(x.f)
        << ": " << name(x.left) << " vs " << name(x.right) << "\n";
  }
  return out.str();
}

Outcome cmd_decide(const HomMatrix& m, const Options& o) {
  Outcome r;
  const auto v = o.via_submatrices ? decide_by_submatrices(m) : decide(m);
  r.code = v.exists ? kExists : kAbsent;
  r.text = v.exists ? "EXISTS\n" : "DOES NOT EXIST\n";
  if (v.reason) {
    r.text += "  " + describe(*v.reason) + "\n";
  }
  if (!v.subset.empty()) {
    r.text += "  failing submatrix: {" + join(v.subset) + "}\n";
  }
  r.doc = verdict_json(v);
  if (o.explain) {
    const auto rows = condition_report(m);
    for (const auto& row : rows) {
      r.text += "  [" + std::string(status_name(row.status)) + "] " + row.id;
      if (!row.details.empty()) {
        r.text += "  " + row.details;
      }
      r.text += "\n";
    }
    r.doc["conditions"] = conditions_json(rows);
  }
  return r;
}

Outcome cmd_witness(const HomMatrix& m, const std::string& out_path) {
  Outcome r;
  const auto v = decide(m);
  if (!v.exists) {
    r.code = kAbsent;
    r.doc = verdict_json(v);
    r.text = "DOES NOT EXIST\n" + r.doc.dump(2) + "\n";
    return r;
  }
  const auto cat = build_witness(m);
  const auto report = verify_category(cat, m, verify_options());
  if (!report.passed) {
    r.code = kAbsent;
    r.doc = report_json(report, cat);
    r.text = "internal error: witness failed verification\n" + report_text(report, cat);
    return r;
  }
  const auto cert = write_certificate(cat, m, v.reduction.map);
  if (out_path.empty()) {
    r.doc = cert;
    r.text = cert.dump(2) + "\n";
    return r;
  }
  std::ofstream file(out_path);
  file << cert.dump(2) << "\n";
  if (!file) {
    throw std::runtime_error("cannot write " + out_path);
  }
  r.doc = {{"exists", true},
           {"certificate", out_path},
           {"morphisms", cat.morphism_count()},
           {"triples_checked", report.triples_checked}};
  r.text = "EXISTS: wrote " + std::to_string(cat.morphism_count()) + " morphisms to " + out_path +
           " (verified, " + std::to_string(report.triples_checked) + " triples)\n";
  return r;
}

Outcome cmd_oracle(const HomMatrix& m, const Options& o) {
  Outcome r;
  const auto res = oracle_decide(m, {o.budget});
  r.code = res.result == OracleResult::Yes  ? kExists
           : res.result == OracleResult::No ? kAbsent
                                            : kUnknown;
  const char* word = res.result == OracleResult::Yes  ? "EXISTS"
                     : res.result == OracleResult::No ? "DOES NOT EXIST"
                                                      : "UNKNOWN (budget exhausted)";
  r.text = std::string(word) + " (" + std::to_string(res.assignments) + " assignments)\n";
  r.doc = {{"result", std::string(result_name(res.result))}, {"assignments", res.assignments}};
  return r;
}

Outcome cmd_report(const HomMatrix& m, const Options&) {
  Outcome r;
  const auto v = decide(m);
  const auto rows = condition_report(m);
  r.code = v.exists ? kExists : kAbsent;
  r.doc = verdict_json(v);
  r.doc["matrix"] = matrix_json(m);
  r.doc["conditions"] = conditions_json(rows);
  std::ostringstream out;
  out << "matrix (order " << m.order() << "): " << m << "\n";
  out << "reduced (order " << v.reduction.reduced.order() << "): " << v.reduction.reduced << "\n";
  out << "class_of: [" << join(v.reduction.map.class_of) << "]\n";
  if (v.partition) {
    const auto& p = *v.partition;
    const auto& rep = v.reduction.map.representative;
    for (std::size_t c = 0; c < p.class_count(); ++c) {
      std::vector<std::size_t> members;
      for (auto x : p.classes[c]) {
        members.push_back(rep[x]);
      }
      out << "class " << c << " " << kind_letter(p.kinds[c]) << ": {" << join(members) << "}";
      if (p.basepoints[c]) {
        out << " basepoint " << rep[*p.basepoints[c]];
      }
      out << "\n";
    }
    for (const auto& [lam, mu] : p.hasse()) {
      out << "order: " << lam << " > " << mu << "\n";
    }
  }
  out << "conditions:\n";
  for (const auto& row : rows) {
    out << "  [" << status_name(row.status) << "] " << row.id;
    if (!row.details.empty()) {
      out << "  " << row.details;
    }
    out << "\n";
  }
  out << (v.exists ? "EXISTS\n" : "DOES NOT EXIST\n");
  if (v.reason) {
    out << "  " << describe(*v.reason) << "\n";
  }
  r.text = out.str();
  return r;
}

/// Runs `fn` on one matrix file, turning input problems into exit code 2.
Outcome on_file(const std::string& path, const std::function<Outcome(const HomMatrix&)>& fn) {
  try {
    return fn(parse_matrix(read_file(path)));
  } catch (const std::exception& e) {
    return {kInputError, std::string("error: ") + e.what() + "\n", {{"error", e.what()}}};
  }
}

void emit(const Outcome& r, const Options& o) {
  if (o.json) {
    std::cout << r.doc.dump(2) << "\n";
  } else {
    (r.code == kInputError ? std::cerr : std::cout) << r.text;
  }
}

int run_matrix_command(const Options& o,
                       const std::function<Outcome(const HomMatrix&, const std::string&)>& fn) {
  if (o.batch.empty()) {
    if (o.input.empty()) {
      std::cerr << "error: a matrix file or --batch DIR is required\n";
      return kInputError;
    }
    const auto r = on_file(o.input, [&](const HomMatrix& m) { return fn(m, o.out); });
    emit(r, o);
    return r.code;
  }
  std::error_code ec;
  if (!fs::is_directory(o.batch, ec)) {
    std::cerr << "error: " << o.batch << " is not a directory\n";
    return kInputError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(o.batch)) {
    if (entry.is_regular_file()) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  int worst = kExists;
  json all = json::array();
  for (const auto& file : files) {
    std::string out_path;
    if (!o.out.empty()) {
      out_path = (fs::path(o.out) / file.stem()).string() + ".cert.json";
    }
    const auto r = on_file(file.string(), [&](const HomMatrix& m) { return fn(m, out_path); });
    worst = std::max(worst, r.code);
    if (o.json) {
      all.push_back({{"file", file.filename().string()}, {"exit", r.code}, {"result", r.doc}});
    } else {
      auto first_line = r.text.substr(0, r.text.find('\n'));
      std::cout << file.filename().string() << ": " << first_line << "\n";
    }
  }
  if (o.json) {
    std::cout << all.dump(2) << "\n";
  }
  return worst;
}

int cmd_verify(const Options& o) {
  Outcome r;
  try {
    const auto cert = read_certificate(read_file(o.certificate));
    const auto m = parse_matrix(read_file(o.input));
    const auto report = verify_category(cert.category, m, verify_options());
    r.code = report.passed ? kExists : kAbsent;
    r.text = report_text(report, cert.category);
    r.doc = report_json(report, cert.category);
  } catch (const std::exception& e) {
    r = {kInputError, std::string("error: ") + e.what() + "\n", {{"error", e.what()}}};
  }
  emit(r, o);
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide, build and check finite categories with prescribed hom-set sizes"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool batch) {
    sub->add_option("matrix", o.input, "Matrix file (plain rows or JSON), - for stdin");
    if (batch) {
      sub->add_option("--batch", o.batch, "Process every file in this directory");
    }
    sub->add_flag("--json", o.json, "Machine-readable output");
  };

  auto* decide_cmd = app.add_subcommand("decide", "Decide whether a category exists");
  add_common(decide_cmd, true);
  decide_cmd->add_flag("--explain", o.explain, "List every condition and its status");
  decide_cmd->add_flag("--via-submatrices", o.via_submatrices,
                       "Decide through all principal submatrices of size <= 4");

  auto* witness_cmd = app.add_subcommand("witness", "Build and verify a witness category");
  add_common(witness_cmd, true);
  witness_cmd->add_option("--out", o.out,
                          "Certificate file (a directory with --batch); stdout if omitted");

  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a matrix");
  verify_cmd->add_option("certificate", o.certificate, "Certificate JSON")->required();
  verify_cmd->add_option("matrix", o.input, "Matrix file")->required();
  verify_cmd->add_flag("--json", o.json, "Machine-readable output");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force search for a composition table");
  add_common(oracle_cmd, true);
  oracle_cmd->add_option("--budget", o.budget, "Maximum table-cell assignments");

  auto* report_cmd = app.add_subcommand("report", "Reduction, partition and all conditions");
  add_common(report_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*verify_cmd) {
    return cmd_verify(o);
  }
  if (*decide_cmd) {
    return run_matrix_command(o, [&](const HomMatrix& m, const std::string&) {
      return cmd_decide(m, o);
    });
  }
  if (*witness_cmd) {
    if (!o.batch.empty() && !o.out.empty()) {
      std::error_code ec;
      fs::create_directories(o.out, ec);
    }
    return run_matrix_command(o, [&](const HomMatrix& m, const std::string& out) {
      return cmd_witness(m, out);
    });
  }
  if (*oracle_cmd) {
    return run_matrix_command(o, [&](const HomMatrix& m, const std::string&) {
      return cmd_oracle(m, o);
    });
  }
  return run_matrix_command(o, [&](const HomMatrix& m, const std::string&) {
    return cmd_report(m, o);
  });
}
