#include "cyclo/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cyclo/crtmap.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/divisors.hpp"
#include "cyclo/io.hpp"
#include "cyclo/resultants.hpp"
#include "cyclo/smithvec.hpp"
#include "cyclo/snf.hpp"

namespace cyclo::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kDirectSum = " ⊕ ";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Integer>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i].get_str();
  return os.str();
}

std::string render(const DirectSumElement& e) {
  std::string s;
  for (std::size_t k = 0; k < e.components().size(); ++k) {
    if (k) s += kDirectSum;
    s += to_string(e.components()[k]);
  }
  return s;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (const auto& x : m.row(i)) r.push_back(x.get_str());
    rows.push_back(r);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

template <class F>
double micros(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw UsageError(std::string(what) + " must be a positive integer");
}

std::string open_or_stdin(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

int cmd_divisors(std::uint64_t n, bool as_json, std::ostream& out) {
  require_positive(n, "n");
  const DivisorReport r = divisor_report(n);
  if (as_json) {
    out << to_json(r).dump(2) << '\n';
    return kOk;
  }
  out << "n = " << n << '\n';
  out << "divisors: " << join(r.divisors) << '\n';
  out << "ratios: " << join(r.ratios) << '\n';
  out << "ratio positions:";
  for (const auto& rp : r.ratio_positions) out << ' ' << rp.index << ':' << rp.prime;
  out << '\n';
  if (r.stats) {
    out << "stats: ones=" << r.stats->mult_of_one << " least=" << r.stats->least_above_one << " (x"
        << r.stats->mult_least << ") largest=" << r.stats->largest << " (x" << r.stats->mult_largest << ")\n";
  }
  out << "cokernel: ";
  if (r.coker_orders.empty()) {
    out << "0 (trivial)";
  } else {
    for (std::size_t i = 0; i < r.coker_orders.size(); ++i) out << (i ? kDirectSum : "") << "Z/" << r.coker_orders[i];
  }
  out << '\n';
  out << "det: " << (r.det_sign < 0 ? "-" : "") << r.det_magnitude << '\n';
  out << "g(n): " << r.gcd_product << '\n';
  return kOk;
}

int cmd_matrix(std::uint64_t n, bool as_json, std::ostream& out) {
  require_positive(n, "n");
  const IntMatrix a = build_A(n);
  if (as_json) out << matrix_json(a).dump(2) << '\n';
  else write_matrix(out, a);
  return kOk;
}

int cmd_snf(const std::string& path, bool as_json, std::ostream& out, std::ostream& err) {
  std::istringstream in(open_or_stdin(path));
  const IntMatrix a = read_matrix(in);
  const SnfResult r = snf(a);
  if (!(r.U * a * r.V == r.S)) {
    err << "internal error: U*A*V != S\n";
    return kInternal;
  }
  if (as_json) {
    out << json{{"S", matrix_json(r.S)}, {"U", matrix_json(r.U)}, {"V", matrix_json(r.V)},
                {"divisors", integers_to_json(r.divisors())}}
               .dump(2)
        << '\n';
    return kOk;
  }
  out << "divisors: " << join(r.divisors()) << '\n';
  out << "S\n";
  write_matrix(out, r.S);
  out << "U\n";
  write_matrix(out, r.U);
  out << "V\n";
  write_matrix(out, r.V);
  return kOk;
}

int cmd_smithvec(std::uint64_t n, bool as_json, std::ostream& out) {
  require_positive(n, "n");
  SmithVector v;
  SmithVectorReport report;
  const double build_us = micros([&] { v = sv(n); });
  const double verify_us = micros([&] { report = verify_smith_vector(v); });
  if (as_json) {
    json doc = to_json(v);
    doc["verification"] = report.summary();
    doc["passed"] = report.passed();
    doc["build_ms"] = build_us / 1000.0;
    doc["verify_ms"] = verify_us / 1000.0;
    out << doc.dump(2) << '\n';
  } else {
    out << "n = " << n << '\n';
    for (std::size_t j = 0; j < v.entries.size(); ++j) {
      out << "entry " << j << " (e = " << v.divisors[j] << "): " << render(v.entries[j]) << '\n';
    }
    out << "verification: " << report.summary() << '\n';
    out << "time: build " << build_us / 1000.0 << " ms, verify " << verify_us / 1000.0 << " ms\n";
  }
  return report.passed() ? kOk : kVerificationFailed;
}

int cmd_resultant(std::uint64_t m, std::uint64_t n, bool as_json, std::ostream& out) {
  require_positive(m, "m");
  require_positive(n, "n");
  const Integer closed = cyclotomic_resultant(m, n);
  const Integer oracle = resultant(cyclotomic(m), cyclotomic(n));
  const bool match = closed == oracle;
  if (as_json) {
    out << json{{"m", m}, {"n", n}, {"closed_form", closed.get_str()}, {"oracle", oracle.get_str()}, {"match", match}}
               .dump(2)
        << '\n';
  } else {
    out << "closed-form: " << closed << '\n';
    out << "oracle: " << oracle << '\n';
    out << "match: " << (match ? "yes" : "no") << '\n';
  }
  return match ? kOk : kInternal;
}

int cmd_detpsi(const std::string& path, bool as_json, std::ostream& out) {
  std::istringstream in(open_or_stdin(path));
  std::vector<IntPolynomial> polys = read_polynomials(in);
  if (polys.empty()) throw UsageError("no factors given");
  const MonicFactorization fs(std::move(polys));
  const Integer product = det_psi_product(fs);
  const Integer det = determinant(psi_matrix(fs));
  const bool match = product == det;
  if (as_json) {
    out << json{{"resultant_product", product.get_str()}, {"determinant", det.get_str()}, {"match", match}}.dump(2)
        << '\n';
  } else {
    out << "resultant product: " << product << '\n';
    out << "determinant: " << det << '\n';
    out << "match: " << (match ? "yes" : "no") << '\n';
  }
  return match ? kOk : kInternal;
}

int cmd_bench(std::uint64_t n_max, std::uint64_t cap, std::ostream& out) {
  require_positive(n_max, "n_max");
  if (n_max > cap) throw UsageError("n_max " + std::to_string(n_max) + " exceeds cap " + std::to_string(cap));
  out << "n,closed_form_us,oracle_snf_us,smith_vector_us\n";
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const double closed = micros([&] { (void)an_divisors(n); });
    const double oracle = micros([&] { (void)snf(build_A(n)); });
    const double smith = micros([&] { (void)sv(n); });
    out << n << ',' << closed << ',' << oracle << ',' << smith << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cokernel structure of the cyclotomic CRT map Z[X]/(X^n-1) -> (+)_{d|n} Z[X]/Phi_d"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::uint64_t n = 0, m = 0, cap = 64;
  std::string path;

  auto* divisors = app.add_subcommand("divisors", "Elementary divisors and cokernel of A_n");
  divisors->add_option("n", n)->required();
  auto* matrix = app.add_subcommand("matrix", "Print A_n in the matrix text format");
  matrix->add_option("n", n)->required();
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix file ('-' for stdin)");
  snf_cmd->add_option("file", path)->required();
  auto* smithvec = app.add_subcommand("smithvec", "Smith vector for n, with verification");
  smithvec->add_option("n", n)->required();
  auto* res = app.add_subcommand("resultant", "R(Phi_m, Phi_n): closed form against the Sylvester determinant");
  res->add_option("m", m)->required();
  res->add_option("n", n)->required();
  auto* detpsi = app.add_subcommand("detpsi", "det of Psi_f for monic factors listed one per line");
  detpsi->add_option("file", path)->required();
  auto* bench = app.add_subcommand("bench", "Timing table (CSV) for n = 1..n_max");
  bench->add_option("n_max", n)->required();
  bench->add_option("--cap", cap, "Largest n_max accepted");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsage;
  }

  const bool as_json = format == "json";
  try {
    if (*divisors) return cmd_divisors(n, as_json, out);
    if (*matrix) return cmd_matrix(n, as_json, out);
    if (*snf_cmd) return cmd_snf(path, as_json, out, err);
    if (*smithvec) return cmd_smithvec(n, as_json, out);
    if (*res) return cmd_resultant(m, n, as_json, out);
    if (*detpsi) return cmd_detpsi(path, as_json, out);
    if (*bench) return cmd_bench(n, cap, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotMonic& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationFailure& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace cyclo::cli
