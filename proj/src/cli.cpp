#include "skein/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "skein/bracket.hpp"
#include "skein/cocenter.hpp"
#include "skein/dims.hpp"
#include "skein/duality.hpp"
#include "skein/errors.hpp"
#include "skein/homology.hpp"
#include "skein/tl.hpp"
#include "skein/webs.hpp"

namespace skein::cli {

namespace {

enum class Format { Pretty, Tsv, Json };

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A JSON argument given either inline or as a path to a file.
std::string file_or_inline(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

std::string total_only(const std::string& group, const std::string& manifold, const Integer& total,
                       const std::string& provenance, Format f) {
  GradedDimTable t;
  t.group = group;
  t.manifold = manifold;
  t.total = total;
  t.total_provenance = provenance;
  switch (f) {
    case Format::Pretty: return total.get_str() + "\n";
    case Format::Tsv: return t.to_tsv();
    case Format::Json: {
      nlohmann::ordered_json j;
      j["group"] = group;
      j["manifold"] = manifold;
      j["total"] = nlohmann::ordered_json::parse(total.get_str());
      j["total_provenance"] = provenance;
      return j.dump(2) + "\n";
    }
  }
  return "";
}

std::string emit_table(const GradedDimTable& t, Format f) { return f == Format::Json ? t.to_json() : t.to_tsv(); }

struct Options {
  std::string format = "pretty";

  int genus = 1;
  bool graded = false;
  bool cograded = false;
  long n = 0;
  std::string reading = "literal-gcd";

  std::string pair = "sl2-pgl2";
  std::string manifold;

  std::string file;
  std::string defect;
  long chi = -1;
  int center_order = 2;

  long coeff = 0;
  bool picard = false;

  std::string form;
  std::string group = "trivial";
  long r = 2;
  long r_max = -1;
  std::size_t cap = 200000;
};

Format parse_format(const std::string& s) {
  if (s == "tsv") return Format::Tsv;
  if (s == "json") return Format::Json;
  return Format::Pretty;
}

int dims_sl2(const Options& o, Format f, std::ostream& out) {
  if (o.graded && o.cograded) throw InvalidInput("--graded and --cograded are exclusive");
  if (o.graded || o.cograded) {
    out << emit_table(o.graded ? graded_sl2_sigma(o.genus) : cograded_sl2_sigma(o.genus), f);
    return kOk;
  }
  out << total_only("SL2", "Sigma_" + std::to_string(o.genus) + " x S1", total_sl2_sigma(o.genus),
                    "closed form 2^(2g+1)+2g-1 for SL2 on Sigma_g x S1", f);
  return kOk;
}

int dims_sln(const Options& o, Format f, std::ostream& out) {
  if (o.graded && o.cograded) throw InvalidInput("--graded and --cograded are exclusive");
  if (o.graded) {
    out << emit_table(graded_sln_t3(o.n, parse_reading(o.reading)), f);
    return kOk;
  }
  if (o.cograded) {
    out << emit_table(cograded_sln_t3_prime(o.n), f);
    return kOk;
  }
  const Integer total = total_sln_t3(o.n);
  if (total != total_sln_t3_convolution(o.n))
    throw InvalidInput("triple divisor sum and Dirichlet convolution disagree at N=" + std::to_string(o.n));
  out << total_only("SL" + std::to_string(o.n), "T3", total,
                    "sum over N=d*e*f of P(d)*e^3*mu(f), equal to the convolution P*J3", f);
  return kOk;
}

int check_duality(const Options& o, Format f, std::ostream& out) {
  DualitySetup s;
  s.pair = parse_pair(o.pair);
  s.manifold = parse_dual_manifold(o.manifold);
  s.reading = parse_reading(o.reading);
  s.genus = o.genus;
  if (s.manifold == DualManifold::Torus3) {
    if (o.n != 0) {
      if (s.pair.n != 0 && s.pair.n != o.n) throw InvalidInput("--n disagrees with --pair");
      s.pair.n = o.n;
    }
    if (s.pair.n == 0) throw InvalidInput("--n is required with --pair slN-pglN");
  } else if (s.pair.n == 0) {
    s.pair.n = 2;
  }
  const auto report = run_duality_checks(s);
  out << (f == Format::Json ? report.to_json() : f == Format::Tsv ? report.to_tsv() : report.to_pretty());
  return report.has_fail() ? kFail : kOk;
}

int bracket_cmd(const Options& o, Format f, std::ostream& out) {
  const TangleDiagram d = parse_diagram(read_file(o.file));
  if (!d.is_closed()) throw InvalidInput("diagram has boundary points; the bracket needs a closed diagram");
  RatFunc value = bracket_value(d);
  std::string what = "Kauffman bracket state sum";
  if (!o.defect.empty()) {
    if (o.chi != 1 && o.chi != -1) throw InvalidInput("--chi must be 1 or -1");
    std::istringstream in(read_file(o.defect));
    const auto marking = parse_defect(in, RatFunc(Rational(o.chi)), o.center_order);
    value = twisted_bracket(d, marking);
    what = "defect-twisted bracket state sum, chi = " + std::to_string(o.chi);
  }
  switch (f) {
    case Format::Pretty: out << value.to_string() << "\n"; break;
    case Format::Tsv: out << "bracket\t" << value.to_string() << "\t" << what << "\n"; break;
    case Format::Json: {
      nlohmann::ordered_json j{{"crossings", d.crossings.size()}, {"bracket", value.to_string()}, {"provenance", what}};
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int webs_constants(Format f, std::ostream& out) {
  const auto s = solve_abc();
  const auto basis = end_space_v2v2();
  const RatFunc theta = cable(webs::theta()).element.coefficient(PlanarMatching(0, 0, {}));
  const std::string prov = "solved in the clasped TL4 basis of End(V2 x V2)";
  std::vector<std::pair<std::string, RatFunc>> rows{{"a", s.a}, {"b", s.b}, {"c", s.c}};
  for (std::size_t i = 0; i < s.h_horizontal.size(); ++i)
    rows.emplace_back("H_horizontal[" + basis.labels[i] + "]", s.h_horizontal[i]);
  rows.emplace_back("theta", theta);
  switch (f) {
    case Format::Pretty:
      out << "End(V2 x V2) rank " << basis.rank << ", residual " << (s.residual_zero ? "zero" : "NONZERO") << "\n";
      for (const auto& [k, v] : rows) out << k << " = " << v.to_string() << "\n";
      break;
    case Format::Tsv:
      out << "rank\t" << basis.rank << "\trank of the three clasped webs in TL4\n";
      for (const auto& [k, v] : rows)
        out << k << "\t" << v.to_string() << "\t" << (k == "theta" ? "closed clasped theta web" : prov) << "\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["rank"] = basis.rank;
      j["residual_zero"] = s.residual_zero;
      for (const auto& [k, v] : rows) j[k] = v.to_string();
      j["provenance"] = prov;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return s.residual_zero ? kOk : kFail;
}

int tl_jw(const Options& o, Format f, std::ostream& out) {
  if (o.n < 0 || o.n > 8) throw InvalidInput("--n must be between 0 and 8");
  const int n = static_cast<int>(o.n);
  const TlElement p = jones_wenzl(n);
  const RatFunc tr = closure(p);
  switch (f) {
    case Format::Pretty: out << p << "\nclosure = " << tr.to_string() << "\n"; break;
    case Format::Tsv:
      for (const auto& [m, c] : p.terms()) out << m.to_string() << "\t" << c.to_string() << "\n";
      out << "closure\t" << tr.to_string() << "\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["n"] = n;
      auto& terms = j["terms"] = nlohmann::ordered_json::array();
      for (const auto& [m, c] : p.terms()) terms.push_back({{"matching", m.to_string()}, {"coefficient", c.to_string()}});
      j["closure"] = tr.to_string();
      out << j.dump(2) << "\n";
      break;
    }
  }
  return kOk;
}

int homology_cmd(const Options& o, Format f, std::ostream& out) {
  if (o.manifold.empty() == o.file.empty()) throw InvalidInput("give exactly one of --manifold and --file");
  if (o.coeff < 0) throw InvalidInput("--coeff must be 0 (integers) or a modulus >= 2");
  const Manifold m = o.file.empty() ? registry(o.manifold, o.genus)
                                    : manifold_from_complex(parse_chain_complex(read_file(o.file)));
  const std::string coeff = o.coeff == 0 ? "Z" : "Z/" + std::to_string(o.coeff);
  std::vector<std::pair<std::string, std::string>> rows;
  for (int k = 0; k <= 3; ++k) rows.emplace_back("H" + std::to_string(k), homology(m.complex, k, o.coeff).to_string());
  bool ok = true;
  if (o.picard) {
    if (o.coeff < 2) throw InvalidInput("--picard needs --coeff N with N >= 2");
    const auto p = picard(m, o.coeff);
    rows.emplace_back("pi0", p.pi0.to_string());
    rows.emplace_back("pi1", p.pi1.to_string());
    rows.emplace_back("duality_cardinality", p.duality_cardinality_ok ? "ok" : "mismatch");
    ok = p.duality_cardinality_ok;
  }
  switch (f) {
    case Format::Pretty:
      out << m.complex.name << " with " << coeff << " coefficients\n";
      for (const auto& [k, v] : rows) out << k << " = " << v << "\n";
      break;
    case Format::Tsv:
      for (const auto& [k, v] : rows) out << k << "\t" << v << "\tSmith normal form over " << coeff << "\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json j;
      j["manifold"] = m.complex.name;
      j["coefficients"] = coeff;
      for (const auto& [k, v] : rows) j[k] = v;
      out << j.dump(2) << "\n";
      break;
    }
  }
  return ok ? kOk : kFail;
}

int cocenter_cmd(const Options& o, Format f, std::ostream& out) {
  const auto alg = parse_algebra(file_or_inline(o.form), o.group == "trivial" ? o.group : file_or_inline(o.group));
  const long r_max = o.r_max < 0 ? o.r + 4 : o.r_max;
  const auto e = cocenter_window(alg, o.r, r_max, o.cap);
  out << (f == Format::Json ? e.to_json() : e.to_tsv());
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skein module dimension tables, duality checks and Temperley-Lieb tools", "skein"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"pretty", "tsv", "json"}));

  std::function<int(Format, std::ostream&)> action;
  const auto bind = [&](CLI::App* sub, std::function<int(Format, std::ostream&)> fn) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* dims = app.add_subcommand("dims", "Closed-form skein module dimensions");
  dims->require_subcommand(1);
  auto* sl2 = dims->add_subcommand("sl2-sigma", "SL2 on Sigma_g x S1");
  sl2->add_option("--g", o.genus, "Genus")->required()->check(CLI::Range(1, 12));
  sl2->add_flag("--graded", o.graded, "Untwisted graded table");
  sl2->add_flag("--cograded", o.cograded, "Twisted degree-zero table");
  bind(sl2, [&](Format f, std::ostream& os) { return dims_sl2(o, f, os); });
  auto* sln = dims->add_subcommand("sln-t3", "SL_N on T3");
  sln->add_option("--n", o.n, "N")->required()->check(CLI::Range(1L, 100000L));
  sln->add_flag("--graded", o.graded, "Untwisted graded table");
  sln->add_flag("--cograded", o.cograded, "Twisted degree-zero table (N prime)");
  sln->add_option("--reading", o.reading, "Reading of the gcd entry")
      ->check(CLI::IsMember({"literal-gcd", "partition-gcd"}));
  bind(sln, [&](Format f, std::ostream& os) { return dims_sln(o, f, os); });

  auto* check = app.add_subcommand("check", "Consistency checks");
  check->require_subcommand(1);
  auto* duality = check->add_subcommand("duality", "Langlands duality checks for (SL_N, PGL_N)");
  duality->add_option("--pair", o.pair, "slN-pglN");
  duality->add_option("--manifold", o.manifold, "sigma or t3")->required();
  duality->add_option("--g", o.genus, "Genus for sigma")->check(CLI::Range(1, 12));
  duality->add_option("--n", o.n, "N for t3")->check(CLI::Range(2L, 200L));
  duality->add_option("--reading", o.reading, "Reading of the gcd entry")
      ->check(CLI::IsMember({"literal-gcd", "partition-gcd"}));
  bind(duality, [&](Format f, std::ostream& os) { return check_duality(o, f, os); });

  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket of a closed diagram");
  bracket->add_option("--file", o.file, "Diagram file")->required();
  bracket->add_option("--defect", o.defect, "Defect curve file");
  bracket->add_option("--chi", o.chi, "Central character value, 1 or -1");
  bracket->add_option("--order", o.center_order, "Order of the center")->check(CLI::Range(1, 64));
  bind(bracket, [&](Format f, std::ostream& os) { return bracket_cmd(o, f, os); });

  auto* webs = app.add_subcommand("webs", "SL3 web computations");
  webs->require_subcommand(1);
  auto* constants = webs->add_subcommand("constants", "Braiding coefficients a, b, c");
  bind(constants, [&](Format f, std::ostream& os) { return webs_constants(f, os); });

  auto* tl = app.add_subcommand("tl", "Temperley-Lieb tools");
  tl->require_subcommand(1);
  auto* jw = tl->add_subcommand("jw", "Jones-Wenzl projector");
  jw->add_option("--n", o.n, "Strands")->required();
  bind(jw, [&](Format f, std::ostream& os) { return tl_jw(o, f, os); });

  auto* hom = app.add_subcommand("homology", "Cellular homology and Picard data");
  hom->add_option("--manifold", o.manifold, "Registry name");
  hom->add_option("--g", o.genus, "Genus for sigma_g_x_s1")->check(CLI::Range(1, 12));
  hom->add_option("--file", o.file, "Chain complex JSON");
  hom->add_option("--coeff", o.coeff, "0 for Z, N for Z/N");
  hom->add_flag("--picard", o.picard, "Report Picard groupoid components");
  bind(hom, [&](Format f, std::ostream& os) { return homology_cmd(o, f, os); });

  auto* coc = app.add_subcommand("cocenter", "Window-truncated cocenter oracle");
  coc->add_option("--form", o.form, "Skew form as JSON or a JSON file")->required();
  coc->add_option("--group", o.group, "Generators as JSON, a JSON file, or trivial");
  coc->add_option("--r", o.r, "Basis radius")->check(CLI::Range(0L, 50L));
  coc->add_option("--rmax", o.r_max, "Largest generation radius (default r+4)");
  coc->add_option("--cap", o.cap, "Largest number of symbols in the generation window");
  bind(coc, [&](Format f, std::ostream& os) { return cocenter_cmd(o, f, os); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Name unrecognized arguments before any missing-requirement message.
    if (e.get_exit_code() != 0) {
      std::vector<std::string> extras = app.remaining(true);
      if (!extras.empty()) {
        err << "unrecognized argument: " << extras.front() << "\nRun with --help for more information.\n";
        return kUsage;
      }
    }
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!action) {
    err << app.help();
    return kUsage;
  }
  try {
    std::ostringstream buffer;
    const int code = action(parse_format(o.format), buffer);
    out << buffer.str();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"skein"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace skein::cli
