#include "salem/report.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <type_traits>

#include <nlohmann/json.hpp>
#include "salem/errors.hpp"

namespace salem {

using ojson = nlohmann::ordered_json;

std::optional<IntPoly> parse_poly_line(const std::string& text, std::size_t line) {
  std::string body = text.substr(0, text.find('#'));
  std::istringstream in(body);
  std::vector<Integer> coeffs;
  std::string tok;
  while (in >> tok) {
    Integer c;
    const std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    const bool digits = tok.size() > start && std::all_of(tok.begin() + static_cast<long>(start), tok.end(),
                                                          [](unsigned char ch) { return std::isdigit(ch) != 0; });
    if (!digits || c.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
      throw ParseError(line, "not an integer: '" + tok + "'");
    coeffs.push_back(c);
  }
  if (coeffs.empty()) return std::nullopt;
  IntPoly p(std::move(coeffs));
  if (p.is_zero()) throw ParseError(line, "zero polynomial");
  return p;
}

std::vector<PolyLine> parse_poly_file(std::istream& in) {
  std::vector<PolyLine> out;
  std::string text;
  for (std::size_t line = 1; std::getline(in, text); ++line)
    if (auto p = parse_poly_line(text, line)) out.push_back({line, std::move(*p)});
  return out;
}

std::string format_poly_line(const IntPoly& p) {
  std::string s;
  for (const auto& c : p.coeffs()) s += (s.empty() ? "" : " ") + c.get_str();
  return s;
}

ReportRecord verify_polynomial(const IntPoly& p, const VerifyOptions& opts) {
  if (p.is_zero()) throw std::invalid_argument("cannot verify the zero polynomial");
  ReportRecord r;
  r.input = p;
  r.digits = opts.digits;
  const SalemVerdict v = classify_salem(p, opts.irreducibility);
  r.verdict = to_string(v.tag);
  if (v.trace) {
    r.trace = *v.trace;
    r.t = static_cast<unsigned>(v.trace->degree());
  }
  if (!v.ok()) {
    r.reason = v.detail;
    return r;
  }
  r.reason = v.trace_verdict->irreducibility->evidence;
  r.alpha = approx_root(p, v.salem->alpha_interval, opts.digits);
  if (opts.max_n == 0) return r;
  r.max_n = opts.max_n;
  const UnitSpectrum s = unit_spectrum(p, opts.max_n);
  r.spectrum = std::vector<unsigned>(s.members.begin(), s.members.end());
  for (const auto& c : s.certificates) r.norms.push_back({c.n, c.norm_minus, c.norm_plus});
  for (unsigned n : {1U, 2U, 3U, 4U, 6U}) {
    if (n > opts.max_n) break;
    CheckEntry e;
    e.n = n;
    if (n <= 4) e.coefficient_identity = prop1_check(p, n);
    e.trace_evaluation = prop23_check(*r.trace, n);
    e.norm_unit = s.certificates[n - 1].is_unit_minus;
    r.checks.push_back(e);
  }
  return r;
}

ReportRecord record_from_certificate(const SalemCertificate& cert, const VerifyOptions& opts) {
  ReportRecord r = verify_polynomial(cert.salem.poly, opts);
  if (!r.is_salem()) throw InternalInvariantError("certified polynomial failed re-verification: " + r.reason);
  r.provenance = cert.provenance;
  return r;
}

namespace {

ojson coeff_array(const IntPoly& p) {
  ojson a = ojson::array();
  for (const auto& c : p.coeffs()) a.push_back(c.get_str());
  return a;
}

IntPoly poly_from(const ojson& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
  std::vector<Integer> c;
  for (const auto& e : j) c.emplace_back(e.get<std::string>(), 10);
  return IntPoly(std::move(c));
}

template <class T>
ojson str_or_null(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Integer>)
    return v->get_str();
  else
    return std::to_string(*v);
}

ojson bool_or_null(const std::optional<bool>& v) { return v ? ojson(*v) : ojson(nullptr); }

unsigned to_unsigned(const ojson& j) {
  const std::string s = j.get<std::string>();
  std::size_t used = 0;
  const unsigned long v = std::stoul(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad count '" + s + "'");
  return static_cast<unsigned>(v);
}

std::optional<unsigned> opt_unsigned(const ojson& j) {
  return j.is_null() ? std::nullopt : std::optional<unsigned>(to_unsigned(j));
}

std::optional<bool> opt_bool(const ojson& j) { return j.is_null() ? std::nullopt : std::optional<bool>(j.get<bool>()); }

ojson record_json(const ReportRecord& r) {
  ojson j;
  j["input"] = coeff_array(r.input);
  j["verdict"] = r.verdict;
  j["reason"] = r.reason;
  j["t"] = str_or_null(r.t);
  j["trace"] = r.trace ? coeff_array(*r.trace) : ojson(nullptr);
  j["alpha"] = r.alpha ? ojson(*r.alpha) : ojson(nullptr);
  j["digits"] = std::to_string(r.digits);
  j["max_n"] = std::to_string(r.max_n);
  if (r.spectrum) {
    ojson s = ojson::array();
    for (unsigned n : *r.spectrum) s.push_back(std::to_string(n));
    j["spectrum"] = s;
  } else {
    j["spectrum"] = nullptr;
  }
  j["norms"] = ojson::array();
  for (const auto& e : r.norms) {
    ojson o;
    o["n"] = std::to_string(e.n);
    o["norm_minus"] = e.norm_minus.get_str();
    o["norm_plus"] = e.norm_plus.get_str();
    j["norms"].push_back(o);
  }
  j["checks"] = ojson::array();
  for (const auto& e : r.checks) {
    ojson o;
    o["n"] = std::to_string(e.n);
    o["coefficient_identity"] = bool_or_null(e.coefficient_identity);
    o["trace_evaluation"] = bool_or_null(e.trace_evaluation);
    o["norm_unit"] = e.norm_unit;
    j["checks"].push_back(o);
  }
  if (r.provenance) {
    const Provenance& p = *r.provenance;
    ojson o;
    o["construction"] = p.construction;
    o["n"] = str_or_null(p.n);
    o["t"] = str_or_null(p.t);
    o["d"] = p.d ? coeff_array(*p.d) : ojson(nullptr);
    o["shift"] = str_or_null(p.shift);
    o["label"] = p.label;
    j["provenance"] = o;
  } else {
    j["provenance"] = nullptr;
  }
  return j;
}

ReportRecord record_of(const ojson& j) {
  ReportRecord r;
  r.input = poly_from(j.at("input"));
  r.verdict = j.at("verdict").get<std::string>();
  r.reason = j.at("reason").get<std::string>();
  r.t = opt_unsigned(j.at("t"));
  if (!j.at("trace").is_null()) r.trace = poly_from(j.at("trace"));
  if (!j.at("alpha").is_null()) r.alpha = j.at("alpha").get<std::string>();
  r.digits = to_unsigned(j.at("digits"));
  r.max_n = to_unsigned(j.at("max_n"));
  if (!j.at("spectrum").is_null()) {
    r.spectrum.emplace();
    for (const auto& e : j.at("spectrum")) r.spectrum->push_back(to_unsigned(e));
  }
  for (const auto& e : j.at("norms"))
    r.norms.push_back({to_unsigned(e.at("n")), Integer(e.at("norm_minus").get<std::string>(), 10),
                       Integer(e.at("norm_plus").get<std::string>(), 10)});
  for (const auto& e : j.at("checks"))
    r.checks.push_back({to_unsigned(e.at("n")), opt_bool(e.at("coefficient_identity")),
                        opt_bool(e.at("trace_evaluation")), e.at("norm_unit").get<bool>()});
  const ojson& p = j.at("provenance");
  if (!p.is_null()) {
    Provenance prov;
    prov.construction = p.at("construction").get<std::string>();
    prov.n = opt_unsigned(p.at("n"));
    prov.t = opt_unsigned(p.at("t"));
    if (!p.at("d").is_null()) prov.d = poly_from(p.at("d"));
    if (!p.at("shift").is_null()) prov.shift = Integer(p.at("shift").get<std::string>(), 10);
    prov.label = p.at("label").get<std::string>();
    r.provenance = prov;
  }
  return r;
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const ojson::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace

std::string to_json(const ReportRecord& r) { return record_json(r).dump(2); }

std::string to_json(const std::vector<ReportRecord>& rs) {
  ojson a = ojson::array();
  for (const auto& r : rs) a.push_back(record_json(r));
  return a.dump(2);
}

ReportRecord record_from_json(const std::string& text) {
  return guarded([&] { return record_of(ojson::parse(text)); });
}

std::vector<ReportRecord> records_from_json(const std::string& text) {
  return guarded([&] {
    std::vector<ReportRecord> out;
    for (const auto& j : ojson::parse(text)) out.push_back(record_of(j));
    return out;
  });
}

namespace {

std::string join(const std::vector<unsigned>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; }

std::string describe(const Provenance& p) {
  std::ostringstream os;
  os << p.construction;
  if (!p.label.empty()) os << " " << p.label;
  if (p.n) os << " n=" << *p.n;
  if (p.t) os << " t=" << *p.t;
  if (p.d) os << " D=" << p.d->to_string();
  if (p.shift) os << " a=" << *p.shift;
  return os.str();
}

}  // namespace

std::string to_text(const ReportRecord& r) {
  std::ostringstream os;
  os << "polynomial: " << r.input.to_string() << "\n";
  os << "coefficients: " << format_poly_line(r.input) << "\n";
  if (r.provenance) os << "source: " << describe(*r.provenance) << "\n";
  os << "verdict: " << r.verdict << "\n";
  if (r.trace) os << "trace: " << r.trace->to_string() << " (t = " << *r.t << ")\n";
  if (!r.is_salem()) {
    os << "reason: " << r.reason << "\n";
    return os.str();
  }
  os << "alpha: " << *r.alpha << "\n";
  os << "irreducibility: " << r.reason << "\n";
  if (!r.spectrum) return os.str();
  os << "unit spectrum (n <= " << r.max_n << "): " << join(*r.spectrum) << "\n";
  std::size_t w = 11;
  for (const auto& e : r.norms) w = std::max({w, e.norm_minus.get_str().size(), e.norm_plus.get_str().size()});
  os << "  " << std::setw(3) << "n" << "  " << std::setw(static_cast<int>(w)) << "N(a^n - 1)" << "  "
     << std::setw(static_cast<int>(w)) << "N(a^n + 1)" << "\n";
  for (const auto& e : r.norms)
    os << "  " << std::setw(3) << e.n << "  " << std::setw(static_cast<int>(w)) << e.norm_minus.get_str() << "  "
       << std::setw(static_cast<int>(w)) << e.norm_plus.get_str() << "\n";
  if (!r.checks.empty()) {
    os << "characterizations (coefficients / trace values / norm):\n";
    for (const auto& c : r.checks)
      os << "  n=" << c.n << ": " << yes_no(c.coefficient_identity) << " / " << yes_no(c.trace_evaluation) << " / "
         << (c.norm_unit ? "yes" : "no") << "\n";
  }
  return os.str();
}

std::string to_spectrum_text(const ReportRecord& r) {
  std::string s = format_poly_line(r.input) + ": " + r.verdict;
  if (r.spectrum) s += " " + join(*r.spectrum);
  return s + "\n";
}

std::string to_spectrum_json(const std::vector<ReportRecord>& rs) {
  ojson a = ojson::array();
  for (const auto& r : rs) {
    ojson o;
    o["input"] = coeff_array(r.input);
    o["verdict"] = r.verdict;
    o["max_n"] = std::to_string(r.max_n);
    if (r.spectrum) {
      ojson s = ojson::array();
      for (unsigned n : *r.spectrum) s.push_back(std::to_string(n));
      o["spectrum"] = s;
    } else {
      o["spectrum"] = nullptr;
    }
    a.push_back(o);
  }
  return a.dump(2);
}

namespace {

bool has_all(const UnitSpectrum& s, std::initializer_list<unsigned> ns) {
  return std::all_of(ns.begin(), ns.end(), [&](unsigned n) { return s.members.count(n) != 0; });
}

std::string interval_text(unsigned lo, unsigned hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

ReproRow sweep(Family f, unsigned lo, unsigned hi) {
  ReproRow row;
  const auto claimed = family_exponents(f);
  std::string exps;
  for (unsigned n : claimed) exps += (exps.empty() ? "" : ",") + std::to_string(n);
  row.name = to_string(f) + "_a Salem with alpha^n - 1 a unit for n in {" + exps + "}, a = " + interval_text(lo, hi);
  unsigned ok = 0;
  std::string first_bad;
  for (unsigned a = lo; a <= hi; ++a) {
    const auto out = certify_salem(family(f, a), claimed, {"family", {}, {}, {}, Integer(a), to_string(f)});
    if (out.certificate)
      ++ok;
    else if (first_bad.empty())
      first_bad = "; a = " + std::to_string(a) + ": " + out.reason;
  }
  row.pass = ok == hi - lo + 1;
  row.detail = std::to_string(ok) + "/" + std::to_string(hi - lo + 1) + " certified" + first_bad;
  return row;
}

ReproRow generator_row(unsigned n, unsigned t, unsigned count) {
  ReproRow row;
  row.name = "generator (n, t) = (" + std::to_string(n) + ", " + std::to_string(t) + "): " + std::to_string(count) +
             " certificates";
  const auto res = generate_salem_units(GeneratorSpec::automatic(n, t), count);
  std::string shifts;
  for (const auto& c : res.certificates) shifts += (shifts.empty() ? "" : ",") + c.shift->get_str();
  row.pass = res.certificates.size() == count;
  row.detail = "a = " + shifts + ", skipped " + std::to_string(res.skipped.size());
  return row;
}

}  // namespace

std::vector<ReproRow> reproduce_examples() {
  std::vector<ReproRow> rows;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rows.push_back({std::move(name), pass, std::move(detail)});
  };

  // Smallest degree-6 number with alpha^4 - 1 a unit.
  const IntPoly f0 = family(Family::F, 0);
  const SalemVerdict v0 = classify_salem(f0);
  add("F_0 = x^6 - x^4 - x^3 - x^2 + 1 is Salem", v0.ok(), to_string(v0.tag));
  if (v0.ok()) {
    const std::string a5 = approx_root(f0, v0.salem->alpha_interval, 5);
    add("F_0 alpha starts 1.401", a5.rfind("1.401", 0) == 0, "alpha = " + a5);
    const UnitSpectrum s = unit_spectrum(f0, 6);
    const std::vector<unsigned> got(s.members.begin(), s.members.end());
    add("F_0 unit spectrum up to 6 is {1, 2, 4}", got == std::vector<unsigned>{1, 2, 4}, join(got));
    bool agree = true;
    for (unsigned n = 1; n <= 4; ++n)
      agree = agree && prop1_check(f0, n) == prop23_check(*v0.trace, n) &&
              prop1_check(f0, n) == s.certificates[n - 1].is_unit_minus;
    add("F_0 coefficient, trace and norm tests agree for n = 1..4", agree, agree ? "agree" : "disagree");
  }

  // The quartic with alpha^3 - 1 a unit.
  const IntPoly quartic{1, -1, -1, -1, 1};
  const SalemVerdict vq = classify_salem(quartic);
  add("x^4 - x^3 - x^2 - x + 1 is Salem with alpha^3 - 1 a unit", vq.ok() && is_exceptional_power(quartic, 3),
      to_string(vq.tag) + ", N(alpha^3 - 1) = " + norm_pow_minus(quartic, 3).get_str());
  if (vq.ok()) {
    const std::string a5 = approx_root(quartic, vq.salem->alpha_interval, 5);
    add("quartic alpha starts 1.422", a5.rfind("1.422", 0) == 0, "alpha = " + a5);
  }
  {
    std::vector<std::string> hits;
    for (long a = -12; a <= 12; ++a)
      for (long b = -12; b <= 12; ++b) {
        const IntPoly t{b, a, 1};
        if (classify_trace(t).ok() && prop23_check(t, 3)) hits.push_back(t.to_string());
      }
    std::string list;
    for (const auto& h : hits) list += (list.empty() ? "" : ", ") + h;
    add("quadratic traces x^2 + ax + b (|a|, |b| <= 12) with T(-1) = T(2) = -1", hits.size() == 1 &&
        hits[0] == IntPoly({-3, -1, 1}).to_string(), std::to_string(hits.size()) + " found: " + list);
  }

  rows.push_back(sweep(Family::F, 0, 20));
  rows.push_back(sweep(Family::G, 3, 20));
  {
    bool ok = true;
    for (long a : {3L, 5L, 10L, 100L}) ok = ok && expand_trace(family_h_trace(a)) == family(Family::H, a);
    add("H_a = x^5 h_a(x + 1/x) for a in {3, 5, 10, 100}", ok, ok ? "exact" : "mismatch");
  }
  {
    unsigned ok = 0;
    for (unsigned a = 3; a <= 40; ++a) {
      const IntPoly h = family(Family::H, a);
      if (classify_salem(h).ok() && has_all(unit_spectrum(h, 4), {1, 2, 3, 4})) ++ok;
    }
    add("H_a Salem with {1, 2, 3, 4} in the spectrum for >= 15 a in 3..40", ok >= 15,
        std::to_string(ok) + "/38");
  }

  // Integer recurrence for alpha^5 - 1.
  {
    bool ok = true;
    std::string detail;
    try {
      const auto pairs = prop4_pairs(10);
      ok = pairs[0].a == 0 && pairs[0].b == 0 && pairs[1].a == -1 && pairs[1].b == 2 && pairs[2].a == -6 &&
           pairs[2].b == 15;
      for (std::size_t k = 2; k < pairs.size(); ++k)
        ok = ok && pairs[k].a < pairs[k - 1].a && pairs[k].b > pairs[k - 1].b;
      unsigned certified = 0;
      const IntPoly base = IntPoly{-1, 1, 1} * IntPoly{-2, 1};
      for (const auto& p : pairs) {
        const IntPoly t = prop4_trace(p);
        if (classify_trace(t).ok() && resultant(base, t) == -1 && is_exceptional_power(expand_trace(t), 5))
          ++certified;
      }
      ok = ok && certified == pairs.size();
      detail = "pair 9 = (" + pairs[9].a.get_str() + ", " + pairs[9].b.get_str() + "), " +
               std::to_string(certified) + "/10 certified";
    } catch (const InternalInvariantError& e) {
      ok = false;
      detail = e.what();
    }
    add("recurrence: first 10 pairs integral, monotone, each giving alpha^5 - 1 a unit", ok, detail);
  }

  for (auto [n, t] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {3, 3}, {2, 3}, {4, 5}, {6, 5}})
    rows.push_back(generator_row(n, t, 2));

  {
    const auto degs = theorem2_degrees(12, 3);
    const bool ok = degs == std::vector<std::pair<unsigned, unsigned>>{{1, 11}, {2, 13}, {4, 17}};
    std::string list;
    for (auto [v, t] : degs) list += (list.empty() ? "" : ", ") + std::string("v=") + std::to_string(v) +
                                     " t=" + std::to_string(t) + " deg=" + std::to_string(2 * t);
    add("n = 12: admissible (v, t) start (1, 11), (2, 13), (4, 17)", ok, list);
    const auto res = generate_salem_units(theorem2_spec(12, 1), 1, std::nullopt, {}, "theorem2");
    add("n = 12, t = 11: a degree-22 Salem number with alpha^12 - 1 a unit", res.certificates.size() == 1,
        "a = " + res.certificates.at(0).shift->get_str());
  }
  return rows;
}

}  // namespace salem
