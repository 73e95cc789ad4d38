#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "salem/errors.hpp"
#include "salem/forge.hpp"
#include "salem/report.hpp"
#include "salem/units.hpp"

using namespace salem;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInternal = 2 };

struct Common {
  std::string format = "text";
  unsigned max_n = 10;
  unsigned digits = 6;
  int irr_cap = 24;

  VerifyOptions verify() const {
    VerifyOptions o;
    o.max_n = max_n;
    o.digits = digits;
    o.irreducibility.degree_cap = irr_cap;
    return o;
  }
};

void add_common(CLI::App* cmd, Common& c, bool reports = true) {
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  if (!reports) return;
  cmd->add_option("--max-n", c.max_n, "Largest exponent in the unit spectrum")
      ->check(CLI::Range(1u, 10000u))
      ->capture_default_str();
  cmd->add_option("--digits", c.digits, "Decimal digits of alpha")->check(CLI::Range(0u, 1000u))->capture_default_str();
  cmd->add_option("--irr-cap", c.irr_cap, "Largest degree for exhaustive factor search")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
}

IntPoly parse_inline(const std::string& text) {
  auto p = parse_poly_line(text);
  if (!p) throw ParseError(0, "no coefficients given");
  return *p;
}

std::vector<IntPoly> read_inputs(const std::string& path, const std::vector<std::string>& inline_coeffs) {
  std::vector<IntPoly> out;
  for (const auto& s : inline_coeffs) out.push_back(parse_inline(s));
  if (!path.empty()) {
    std::vector<PolyLine> lines;
    if (path == "-") {
      lines = parse_poly_file(std::cin);
    } else {
      std::ifstream in(path);
      if (!in) throw ParseError(0, "cannot open " + path);
      lines = parse_poly_file(in);
    }
    for (auto& l : lines) out.push_back(std::move(l.poly));
  }
  if (out.empty()) throw ParseError(0, "no input polynomials (give a file or --coeffs)");
  return out;
}

void print_records(const std::vector<ReportRecord>& rs, const std::string& format, bool spectrum_only) {
  if (format == "json") {
    std::cout << (spectrum_only ? to_spectrum_json(rs) : to_json(rs)) << "\n";
    return;
  }
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (spectrum_only) {
      std::cout << to_spectrum_text(rs[i]);
    } else {
      if (i) std::cout << "\n";
      std::cout << to_text(rs[i]);
    }
  }
}

// "3..5" or "7"
std::pair<Integer, Integer> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      Integer v(s, 10);
      return {v, v};
    }
    Integer lo(s.substr(0, dots), 10), hi(s.substr(dots + 2), 10);
    if (hi < lo) throw ParseError(0, "empty range " + s);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw ParseError(0, "bad range '" + s + "' (expected A or A..B)");
  }
}

ReportRecord certified_record(const IntPoly& s, const std::vector<unsigned>& claimed, const Provenance& prov,
                              const Common& c) {
  const VerifyOptions vo = c.verify();
  auto outcome = certify_salem(s, claimed, prov, vo.irreducibility);
  if (outcome.certificate) return record_from_certificate(*outcome.certificate, vo);
  ReportRecord r = verify_polynomial(s, vo);
  if (r.is_salem()) r.reason = outcome.reason;
  r.provenance = prov;
  return r;
}

struct GenerateArgs {
  std::string kind;
  unsigned n = 0;
  unsigned t = 0;
  std::string d;
  unsigned count = 1;
  std::string a_start;
  std::string name;
  std::string a;
};

std::vector<ReportRecord> run_generate(const GenerateArgs& g, const Common& c) {
  std::vector<ReportRecord> out;
  GeneratorOptions go;
  go.irreducibility.degree_cap = c.irr_cap;
  std::optional<Integer> start;
  if (!g.a_start.empty()) start = parse_range(g.a_start).first;

  if (g.kind == "theorem3") {
    if (g.n == 0 || g.t == 0) throw ParseError(0, "theorem3 needs --n and --t");
    const GeneratorSpec spec =
        g.d.empty() ? GeneratorSpec::automatic(g.n, g.t) : GeneratorSpec::make(g.n, g.t, parse_inline(g.d));
    for (const auto& cert : generate_salem_units(spec, g.count, start, go).certificates)
      out.push_back(record_from_certificate(cert, c.verify()));
  } else if (g.kind == "theorem2") {
    if (g.n == 0) throw ParseError(0, "theorem2 needs --n");
    for (const auto& [v, t] : theorem2_degrees(g.n, g.count)) {
      (void)t;
      for (const auto& cert : generate_salem_units(theorem2_spec(g.n, v), 1, start, go, "theorem2").certificates)
        out.push_back(record_from_certificate(cert, c.verify()));
    }
  } else if (g.kind == "prop4") {
    for (const auto& pr : prop4_pairs(g.count)) {
      Provenance prov;
      prov.construction = "prop4";
      prov.n = 5;
      prov.t = 3;
      prov.label = "pair " + std::to_string(pr.index) + " (" + pr.a.get_str() + "," + pr.b.get_str() + ")";
      out.push_back(certified_record(expand_trace(prop4_trace(pr)), {5}, prov, c));
    }
  } else if (g.kind == "family") {
    const auto fam = parse_family(g.name);
    if (!fam) throw ParseError(0, "family name must be F, G or H");
    if (g.a.empty()) throw ParseError(0, "family needs --a A or --a A..B");
    const auto [lo, hi] = parse_range(g.a);
    for (Integer a = lo; a <= hi; ++a) {
      Provenance prov;
      prov.construction = "family";
      prov.shift = a;
      prov.label = to_string(*fam) + "_" + a.get_str();
      out.push_back(certified_record(family(*fam, a), family_exponents(*fam), prov, c));
    }
  } else {
    throw ParseError(0, "unknown kind " + g.kind);
  }
  return out;
}

int run_reproduce(const std::string& format) {
  const auto rows = reproduce_examples();
  bool all = true;
  for (const auto& r : rows) all = all && r.pass;
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) j.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    std::cout << j.dump(2) << "\n";
  } else {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.name.size());
    for (const auto& r : rows)
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(w - r.name.size() + 2, ' ') << r.detail
                << "\n";
    std::size_t passed = 0;
    for (const auto& r : rows) passed += r.pass;
    std::cout << passed << "/" << rows.size() << " checks passed\n";
  }
  return all ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Salem numbers with alpha^n - 1 a unit: verification, spectra and constructions"};
  app.require_subcommand(1);

  Common verify_c, spectrum_c, generate_c, repro_c, bound_c;
  std::string file;
  std::vector<std::string> coeffs;

  auto* verify = app.add_subcommand("verify", "Classify polynomials and report their unit spectra");
  verify->add_option("file", file, "Polynomial file, one per line, constant term first ('-' for stdin)");
  verify->add_option("--coeffs", coeffs, "Inline coefficients, constant term first (repeatable)");
  add_common(verify, verify_c);

  auto* spectrum = app.add_subcommand("spectrum", "Like verify, printing only verdicts and spectra");
  spectrum->add_option("file", file, "Polynomial file ('-' for stdin)");
  spectrum->add_option("--coeffs", coeffs, "Inline coefficients (repeatable)");
  add_common(spectrum, spectrum_c);

  GenerateArgs g;
  auto* generate = app.add_subcommand("generate", "Produce certified Salem polynomials from a construction");
  generate->add_option("kind", g.kind, "theorem3 | theorem2 | prop4 | family")
      ->required()
      ->check(CLI::IsMember({"theorem3", "theorem2", "prop4", "family"}));
  generate->add_option("--n", g.n, "Target exponent");
  generate->add_option("--t", g.t, "Trace degree (theorem3)");
  generate->add_option("--d", g.d, "Explicit auxiliary factor, constant term first (theorem3)");
  generate->add_option("--count", g.count, "Number of items")->check(CLI::Range(1u, 100000u))->capture_default_str();
  generate->add_option("--a-start", g.a_start, "Smallest shift to try (theorem3, theorem2)");
  generate->add_option("--name", g.name, "Family F, G or H");
  generate->add_option("--a", g.a, "Family parameter A or range A..B");
  add_common(generate, generate_c);

  auto* reproduce = app.add_subcommand("reproduce", "Run the worked-example regression table");
  add_common(reproduce, repro_c, false);

  unsigned degree = 0;
  auto* bound = app.add_subcommand("bound", "Upper bound on the number of exceptional units for a degree");
  bound->add_option("--degree", degree, "Field degree")->required()->check(CLI::Range(1u, 100000u));
  add_common(bound, bound_c, false);

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

  try {
    if (*verify || *spectrum) {
      const Common& c = *verify ? verify_c : spectrum_c;
      std::vector<ReportRecord> rs;
      for (const auto& p : read_inputs(file, coeffs)) rs.push_back(verify_polynomial(p, c.verify()));
      print_records(rs, c.format, static_cast<bool>(*spectrum));
    } else if (*generate) {
      print_records(run_generate(g, generate_c), generate_c.format, false);
    } else if (*reproduce) {
      return run_reproduce(repro_c.format);
    } else if (*bound) {
      const Integer b = evertse_bound(degree);
      if (bound_c.format == "json") {
        nlohmann::ordered_json j{{"degree", std::to_string(degree)}, {"bound", b.get_str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << b.get_str() << "\n";
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalInvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const GenerationAborted& e) {
    std::cerr << "error: generation aborted: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    // UnsupportedParameters and InvalidGeneratorSpec land here
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
