// mcong: derive, evaluate and verify congruence schemes for m-sections of
// solutions of F(q) = S(q) + R(q) F(q^m).
//
// Exit codes:
//   0  success (scheme found / verification clean / known form reproduced)
//   1  no miracle (derive, coeff); closed form disagrees with derivation (known)
//   2  usage or parse error, unreadable scheme file
//   3  representation error (SectionVanishes, NonUnitDenominator,
//      NonIntegralCoefficient, AmbiguousNormalization, NonSeriesResult)
//   4  internal invariant failure
//   5  verification found a mismatch

#include <chrono>
#include <cstdint>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcong/mcong.hpp"

namespace {

using namespace mcong;

enum Exit : int {
  kOk = 0,
  kNoMiracle = 1,
  kUsage = 2,
  kRepresentation = 3,
  kInternal = 4,
  kMismatch = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EquationFlags {
  std::uint64_t m = 0;
  std::uint64_t i = 0;
  std::string S = "0";
  std::string R;
  std::string f0;

  void add_to(CLI::App* cmd, bool required) {
    auto* mo = cmd->add_option("--m", m, "sectioning base m >= 2");
    auto* io = cmd->add_option("--i", i, "section index 0 <= i < m");
    cmd->add_option("--S", S, "inhomogeneous term S(q)")->capture_default_str();
    auto* ro = cmd->add_option("--R", R, "multiplier R(q)");
    cmd->add_option("--f0", f0, "constant term of F when it is not forced");
    if (required) {
      mo->required();
      io->required();
      ro->required();
    }
  }

  bool given() const { return m != 0 || !R.empty(); }
};

/// Parses S, R and f0; parse problems are usage errors.
FunctionalEquation parse_equation(const std::string& S, const std::string& R, std::uint64_t m,
                                  const std::string& f0_text) {
  if (m < 2) throw UsageError("--m must be at least 2");
  RatFun s, r;
  std::optional<Rational> f0;
  try {
    s = parse_ratfun(S, m);
    r = parse_ratfun(R, m);
    if (!f0_text.empty()) f0 = parse_constant(f0_text);
  } catch (const Error& e) {
    throw UsageError(std::string("cannot parse expression: ") + e.what());
  }
  return make_equation(std::move(s), std::move(r), m, f0);
}

std::uint64_t parse_index(const std::string& text) {
  if (text.empty() || text.size() > 19 || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("--n must be a decimal integer in [0, 2^63 - 1]");
  const auto v = std::stoull(text);
  if (v > static_cast<std::uint64_t>(INT64_MAX)) throw UsageError("--n exceeds 2^63 - 1");
  return v;
}

void print_scheme(const Scheme& s) {
  const std::string fi = "F_" + std::to_string(s.i);
  std::cout << fi << "(q) = E(q) + P(q)*" << fi << "(q^" << s.m << ")  (mod " << s.m << ")\n"
            << "E = " << render_mod_ratfun(s.E) << "\n"
            << "P = " << render_mod_poly(s.P) << "\n"
            << "seed = " << s.seed << "\n"
            << "A = " << s.provenance.A << "\n"
            << "G = " << s.provenance.G << "\n";
}

void print_no_miracle(const NoMiracle& nm) {
  std::cout << "FAIL: no miracle\n"
            << "proper part = " << render_ratfun(nm.proper_part) << "\n"
            << "polynomial part = " << render_poly(nm.polynomial_part) << "\n";
}

/// Runs body, mapping library errors onto exit codes.
template <typename Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SchemeFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RepresentationError& e) {
    std::cerr << "representation error " << e.kind() << ": " << e.what() << "\n";
    return kRepresentation;
  } catch (const NonSeriesResult& e) {
    std::cerr << "representation error NonSeriesResult: " << e.what() << "\n";
    return kRepresentation;
  } catch (const InternalInvariant& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}

/// Derives from flags; returns the scheme or the exit code to stop with.
std::variant<Scheme, int> derive_from_flags(const EquationFlags& f, bool print) {
  const auto fe = parse_equation(f.S, f.R, f.m, f.f0);
  if (f.i >= f.m) throw UsageError("--i must satisfy 0 <= i < m");
  const Derivation d = derive_scheme(fe, f.i);
  if (const auto* nm = std::get_if<NoMiracle>(&d)) {
    print_no_miracle(*nm);
    return static_cast<int>(kNoMiracle);
  }
  if (print) print_scheme(std::get<Scheme>(d));
  return std::get<Scheme>(d);
}

FunctionalEquation equation_from_provenance(const Scheme& s) {
  return parse_equation(s.provenance.S, s.provenance.R, s.m, s.provenance.f0.value_or(""));
}

std::string verdict_line(const VerificationReport& r) {
  std::string out = std::to_string(r.matched) + "/" + std::to_string(r.checked) + " match";
  if (r.first_mismatch) {
    out += "; first mismatch at n=" + std::to_string(r.first_mismatch->index) + ": oracle " +
           std::to_string(r.first_mismatch->expected) + ", scheme " + std::to_string(r.first_mismatch->got);
  }
  return out;
}

// ---------------------------------------------------------------- scan

struct ScanCell {
  std::uint64_t m = 0;
  std::uint64_t i = 0;
  std::string verdict;  // MIRACLE, no, or an error kind
  std::string detail;
  std::optional<Scheme> scheme;
  std::string check;
};

ScanCell scan_cell(const std::string& S, const std::string& R, const std::string& f0, std::uint64_t m,
                   std::uint64_t i, std::size_t quick) {
  ScanCell cell{m, i, "", "", std::nullopt, ""};
  try {
    const auto fe = parse_equation(S, R, m, f0);
    const Derivation d = derive_scheme(fe, i);
    if (const auto* nm = std::get_if<NoMiracle>(&d)) {
      cell.verdict = "no";
      cell.detail = render_ratfun(nm->proper_part);
      return cell;
    }
    cell.verdict = "MIRACLE";
    cell.scheme = std::get<Scheme>(d);
    if (quick > 0) {
      const auto r = verify_scheme(fe, i, *cell.scheme, quick);
      cell.check = r.ok() ? "ok" : "MISMATCH@" + std::to_string(r.first_mismatch->index);
    }
  } catch (const RepresentationError& e) {
    cell.verdict = e.kind();
    cell.detail = e.what();
  } catch (const NonSeriesResult& e) {
    cell.verdict = "NonSeriesResult";
    cell.detail = e.what();
  } catch (const UsageError& e) {
    cell.verdict = "UsageError";
    cell.detail = e.what();
  } catch (const Error& e) {
    cell.verdict = "Error";
    cell.detail = e.what();
  }
  return cell;
}

std::vector<std::uint64_t> scan_indices(const std::string& spec, std::uint64_t m) {
  if (spec == "all") {
    std::vector<std::uint64_t> all(m);
    for (std::uint64_t i = 0; i < m; ++i) all[i] = i;
    return all;
  }
  Rational v;
  try {
    v = parse_constant(spec, m);
  } catch (const Error& e) {
    throw UsageError("--i must be 'all', an integer or an expression in m: " + std::string(e.what()));
  }
  if (v.get_den() != 1 || v < 0) throw UsageError("--i must evaluate to a nonnegative integer");
  return {v.get_num().get_ui()};
}

int run_scan(std::uint64_t from, std::uint64_t to, const std::string& S, const std::string& R, const std::string& f0,
             const std::string& ispec, std::size_t quick, bool json) {
  if (from < 2) throw UsageError("--m-from must be at least 2");
  if (from > to) throw UsageError("empty m range");
  std::vector<std::future<ScanCell>> jobs;
  for (std::uint64_t m = from; m <= to; ++m) {
    for (std::uint64_t i : scan_indices(ispec, m)) {
      if (i >= m) {
        std::promise<ScanCell> p;
        p.set_value(ScanCell{m, i, "InvalidIndex", "i must be below m", std::nullopt, ""});
        jobs.push_back(p.get_future());
        continue;
      }
      jobs.push_back(std::async(std::launch::async, scan_cell, S, R, f0, m, i, quick));
    }
  }
  std::vector<ScanCell> cells;
  for (auto& j : jobs) cells.push_back(j.get());

  if (json) {
    auto arr = nlohmann::json::array();
    for (const auto& c : cells) {
      nlohmann::json rec = {{"m", std::to_string(c.m)}, {"i", std::to_string(c.i)}, {"verdict", c.verdict}};
      if (c.scheme) rec["scheme"] = scheme_to_json(*c.scheme);
      if (!c.detail.empty()) rec[c.verdict == "no" ? "proper_part" : "message"] = c.detail;
      if (!c.check.empty()) rec["check"] = c.check;
      arr.push_back(rec);
    }
    std::cout << arr.dump(2) << "\n";
    return kOk;
  }
  std::cout << "m\ti\tverdict\tcheck\tP\n";
  for (const auto& c : cells) {
    std::cout << c.m << "\t" << c.i << "\t" << c.verdict << "\t" << (c.check.empty() ? "-" : c.check) << "\t";
    if (c.scheme) {
      std::cout << render_mod_poly(c.scheme->P);
    } else if (c.verdict == "no") {
      std::cout << "-";
    } else {
      std::cout << c.detail;
    }
    std::cout << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- known

int run_known(const std::string& prop, std::uint64_t m, std::size_t quick) {
  KnownFamily family;
  std::string exact_E;
  if (prop == "A") {
    family = KnownFamily::A;
    exact_E = "0";
  } else if (prop == "B") {
    family = KnownFamily::B;
    exact_E = "1/(1 - q)";
  } else if (prop == "C") {
    family = KnownFamily::C;
    exact_E = "0";
  } else {
    throw UsageError("--prop must be A, B or C");
  }
  if (m < 2) throw UsageError("--m must be at least 2");
  const KnownScheme known = known_scheme(family, m);
  std::cout << "family " << prop << ", m = " << m << ", section " << known.i << "\n";
  if (!known.P) {
    std::cout << "no miracle (m = 2 mod 4)\n";
  } else {
    std::cout << "E = " << exact_E << "\n"
              << "E mod " << m << " = " << render_mod_ratfun(known.E) << "\n"
              << "P = " << render_mod_poly(*known.P) << "\n";
  }
  const KnownCheck check = check_known(known);
  std::cout << "derivation: " << (check.ok ? "OK" : "MISMATCH") << " (" << check.detail << ")\n";
  if (check.ok || !known.P) return check.ok ? kOk : kNoMiracle;

  // Disagreement: let the oracle arbitrate between the two polynomials.
  const auto fe = known_equation(family, m);
  const Derivation d = derive_scheme(fe, known.i);
  if (const auto* s = std::get_if<Scheme>(&d)) {
    Scheme closed = *s;
    closed.P = *known.P;
    closed.E = known.E;
    std::cout << "oracle, closed form: " << verdict_line(verify_scheme(fe, known.i, closed, quick)) << "\n"
              << "oracle, derived:     " << verdict_line(verify_scheme(fe, known.i, *s, quick)) << "\n";
  }
  return kNoMiracle;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruence schemes for m-sections of F(q) = S(q) + R(q) F(q^m)"};
  app.require_subcommand(1);

  EquationFlags derive_flags;
  std::string json_path;
  auto* derive = app.add_subcommand("derive", "derive F_i(q) = E(q) + P(q) F_i(q^m) (mod m)");
  derive_flags.add_to(derive, true);
  derive->add_option("--json", json_path, "write the scheme file here");

  EquationFlags coeff_flags;
  std::string coeff_scheme, coeff_n;
  auto* coeff = app.add_subcommand("coeff", "n-th coefficient of F_i mod m");
  coeff_flags.add_to(coeff, false);
  coeff->add_option("--scheme", coeff_scheme, "scheme file from derive --json");
  coeff->add_option("--n", coeff_n, "coefficient index, at most 2^63 - 1")->required();

  EquationFlags verify_flags;
  std::string verify_scheme_path;
  std::size_t verify_count = 1000;
  auto* verify = app.add_subcommand("verify", "check a scheme against brute-force expansion");
  verify_flags.add_to(verify, false);
  verify->add_option("--scheme", verify_scheme_path, "verify this scheme file instead of deriving");
  verify->add_option("--N", verify_count, "number of section coefficients to check")->capture_default_str();

  std::uint64_t scan_from = 0, scan_to = 0;
  std::string scan_S = "0", scan_R, scan_f0, scan_i = "all";
  std::size_t scan_quick = 200;
  bool scan_json = false;
  auto* scan = app.add_subcommand("scan", "derive over a range of m; S and R may use m");
  scan->add_option("--m-from", scan_from)->required();
  scan->add_option("--m-to", scan_to)->required();
  scan->add_option("--S", scan_S)->capture_default_str();
  scan->add_option("--R", scan_R)->required();
  scan->add_option("--f0", scan_f0);
  scan->add_option("--i", scan_i, "'all', an integer, or an expression in m such as m-1")->capture_default_str();
  scan->add_option("--N", scan_quick, "oracle quick-check length (0 disables)")->capture_default_str();
  scan->add_flag("--json", scan_json, "machine-readable output");

  std::string known_prop;
  std::uint64_t known_m = 0;
  std::size_t known_quick = 2000;
  auto* known = app.add_subcommand("known", "closed-form schemes A, B, C and whether derivation reproduces them");
  known->add_option("--prop", known_prop)->required();
  known->add_option("--m", known_m)->required();
  known->add_option("--N", known_quick, "oracle length used when forms disagree")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*derive) {
    return guarded([&] {
      auto r = derive_from_flags(derive_flags, true);
      if (std::holds_alternative<int>(r)) return std::get<int>(r);
      if (!json_path.empty()) save_scheme_file(std::get<Scheme>(r), json_path);
      return static_cast<int>(kOk);
    });
  }

  if (*coeff) {
    return guarded([&] {
      const std::uint64_t n = parse_index(coeff_n);
      Scheme scheme;
      if (!coeff_scheme.empty()) {
        scheme = load_scheme_file(coeff_scheme);
      } else {
        if (!coeff_flags.given()) throw UsageError("give --scheme or --m/--i/--R");
        auto r = derive_from_flags(coeff_flags, false);
        if (std::holds_alternative<int>(r)) return std::get<int>(r);
        scheme = std::get<Scheme>(r);
      }
      const auto start = std::chrono::steady_clock::now();
      const Residue v = scheme_coeff(scheme, n);
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
      std::cout << "F_" << scheme.i << "[" << n << "] = " << v << " (mod " << scheme.m << ")\n"
                << "time: " << ms.count() << " ms\n";
      return static_cast<int>(kOk);
    });
  }

  if (*verify) {
    return guarded([&] {
      Scheme scheme;
      FunctionalEquation fe;
      if (!verify_scheme_path.empty()) {
        scheme = load_scheme_file(verify_scheme_path);
        fe = equation_from_provenance(scheme);
      } else {
        if (!verify_flags.given()) throw UsageError("give --scheme or --m/--i/--R");
        auto r = derive_from_flags(verify_flags, false);
        if (std::holds_alternative<int>(r)) return std::get<int>(r);
        scheme = std::get<Scheme>(r);
        fe = parse_equation(verify_flags.S, verify_flags.R, verify_flags.m, verify_flags.f0);
      }
      const auto report = verify_scheme(fe, scheme.i, scheme, verify_count);
      std::cout << verdict_line(report) << "\n";
      return static_cast<int>(report.ok() ? kOk : kMismatch);
    });
  }

  if (*scan) {
    return guarded([&] { return run_scan(scan_from, scan_to, scan_S, scan_R, scan_f0, scan_i, scan_quick, scan_json); });
  }

  if (*known) {
    return guarded([&] { return run_known(known_prop, known_m, known_quick); });
  }
  return kUsage;
}
