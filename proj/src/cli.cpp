#include "aqp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include "CLI11.hpp"
#include "aqp/ajverify.hpp"
#include "aqp/ore_json.hpp"
#include "aqp/parse.hpp"
#include "aqp/reference.hpp"

namespace aqp::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_max_order() {
  const char* env = std::getenv(kMaxOrderEnv);
  if (env == nullptr || *env == '\0') return kDefaultMaxOrder;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 64)
    throw UsageError(std::string(kMaxOrderEnv) + " must be an integer in 1..64");
  return static_cast<int>(v);
}

template <int N, std::size_t M>
OrderedJson fraction_json(const RationalFunction<N>& f,
                          const std::array<std::string_view, M>& names) {
  OrderedJson j;
  j["num"] = f.num().to_string(names);
  j["den"] = f.den().to_string(names);
  return j;
}

OrderedJson coefficient_json(const Rational& c) {
  if (c.get_den() == 1 && c.get_num().fits_slong_p()) return c.get_num().get_si();
  return c.get_str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_jones(Knot knot, int n, const std::string& emit, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be >= 1");
  const LaurentPoly value = jones(knot, n);
  if (emit == "json") {
    OrderedJson coeffs = OrderedJson::object();
    for (const auto& t : value.terms())
      coeffs[std::to_string(t.exp)] = coefficient_json(t.coeff);
    OrderedJson j;
    j["knot"] = knot_name(knot);
    j["n"] = n;
    j["value"] = value.to_string();
    j["coeffs"] = std::move(coeffs);
    out << j.dump(2) << "\n";
  } else {
    out << value.to_string() << "\n";
  }
  return kExitOk;
}

int cmd_telescope(Knot knot, int max_order, bool homogenize,
                  const std::string& emit, std::ostream& out) {
  const Recursion rec = find_recursion(term_ratios(knot), max_order);
  const TelescopeResult& t = rec.telescoped;
  const RatFun inhom = homogenize ? RatFun() : t.inhom;
  if (emit == "json") {
    OrderedJson j;
    j["knot"] = knot_name(knot);
    j["order"] = t.order;
    j["failed_orders"] = rec.failed_orders;
    j["homogenized"] = homogenize;
    j["operator"] = homogenize ? ore_to_json(rec.normalized) : ore_to_json(t.op);
    j["certificate"] = fraction_json(t.certificate, kTriNames);
    j["inhomogeneous"] = fraction_json(inhom, kBiNames);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "knot: " << knot_name(knot) << "\n";
  out << "telescoping order: " << t.order << "\n";
  out << "failed orders:";
  if (rec.failed_orders.empty()) out << " none";
  for (int o : rec.failed_orders) out << " " << o;
  out << "\n";
  out << "operator: "
      << (homogenize ? rec.normalized.to_string() : t.op.to_string()) << "\n";
  out << "certificate: " << t.certificate.to_string(kTriNames) << "\n";
  out << "inhomogeneous part: " << inhom.to_string(kBiNames) << "\n";
  return kExitOk;
}

OrderedJson verdict_json(const AjVerdict& v) {
  OrderedJson j;
  j["knot"] = knot_name(v.knot);
  j["telescoping_order"] = v.recursion.telescoped.order;
  j["failed_orders"] = v.recursion.failed_orders;
  j["order"] = v.recursion.normalized.degree();
  j["operator"] = ore_to_json(v.recursion.normalized);
  j["char_poly"] = v.char_poly.to_string();
  j["a_polynomial"] = v.a_polynomial.to_string();
  j["essentially_equal"] = v.essentially_equal;
  j["lemma31_ok"] = v.lemma31_ok;
  OrderedJson ann;
  ann["ok"] = v.annihilation.ok;
  ann["n_checked"] = v.annihilation.n_checked;
  ann["first_failure"] = v.annihilation.first_failure
                             ? OrderedJson(*v.annihilation.first_failure)
                             : OrderedJson(nullptr);
  j["annihilation"] = std::move(ann);
  OrderedJson cert;
  cert["deg_Q"] = v.no_order1.deg_Q;
  cert["deg_q"] = v.no_order1.deg_q;
  cert["table_size"] = v.no_order1.table_size;
  cert["unknowns"] = v.no_order1.unknowns;
  cert["equations"] = v.no_order1.equations;
  cert["rank"] = v.no_order1.rank;
  cert["nullspace_dimension"] = v.no_order1.nullity;
  cert["method"] = v.no_order1.method;
  j["no_order1_certificate"] = std::move(cert);
  OrderedJson fac;
  fac["divisible_by_L_minus_1"] = v.factors.divisible_by_L_minus_1;
  fac["cofactor_L_degree"] = v.factors.quotient_L_degree;
  j["factors"] = std::move(fac);
  j["passed"] = v.passed();
  return j;
}

int cmd_aj_check(Knot knot, int max_order, int table_size, std::ostream& out) {
  AjOptions opt;
  opt.max_order = max_order;
  opt.table_size = table_size;
  const AjVerdict v = aj_verdict(knot, opt);
  out << verdict_json(v).dump(2) << "\n";
  return v.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_char_variety(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read operator file '" + path + "'");
  OrderedJson j;
  try {
    j = OrderedJson::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("operator file is not valid JSON: ") + e.what());
  }
  // Also accept the output of `telescope --emit json`.
  if (j.is_object() && j.contains("operator")) j = j.at("operator");
  const OreOp op = ore_from_json(j);
  if (op.is_zero()) throw UsageError("operator is zero");
  out << characteristic_poly(normalize(op)).to_string() << "\n";
  return kExitOk;
}

struct KnotReport {
  std::string text;
  bool ok = false;
};

KnotReport repro_knot(Knot knot, int max_order) {
  std::ostringstream s;
  AjOptions opt;
  opt.max_order = max_order;
  const AjVerdict v = aj_verdict(knot, opt);
  const ReferenceRun& ref = reference_run(knot);
  const NormalizedOp expected = reference_operator(knot);
  const bool op_match = expected == v.recursion.normalized;
  const bool char_match =
      essential_equality(v.char_poly, reference_char_numerator(knot));

  s << "== knot " << knot_name(knot) << " ==\n";
  s << "telescoping order: " << v.recursion.telescoped.order << " (orders tried without success:";
  if (v.recursion.failed_orders.empty()) s << " none";
  for (int o : v.recursion.failed_orders) s << " " << o;
  s << ")\n";
  s << "inhomogeneous part: " << v.recursion.telescoped.inhom.to_string(kBiNames) << "\n";
  s << "homogeneous order: " << v.recursion.normalized.degree() << "\n";
  s << "recursion, backward shifts as published:\n";
  for (std::size_t k = 0; k < ref.backward.size(); ++k) {
    const std::size_t back = ref.backward.size() - 1 - k;
    s << "  SUM[n" << (back ? "-" + std::to_string(back) : "") << "]: ("
      << ref.backward[k].first << ")/(" << ref.backward[k].second << ")\n";
  }
  s << "recursion, forward shifts, normalized:\n";
  for (std::size_t k = 0; k < v.recursion.normalized.coeffs.size(); ++k) {
    s << "  E^" << k << " computed: "
      << v.recursion.normalized.coeffs[k].to_string(kBiNames) << "\n";
    s << "  E^" << k << " expected: " << expected.coeffs[k].to_string(kBiNames) << "\n";
  }
  s << "  match: " << yes_no(op_match) << "\n";
  s << "characteristic polynomial:\n";
  s << "  computed: " << v.char_poly.to_string() << "\n";
  s << "  expected: (" << ref.char_function.first << ")/(" << ref.char_function.second
    << ")\n";
  s << "  A-polynomial: " << knot_record(knot).a_polynomial_text << "\n";
  s << "  essentially equal to expected: " << yes_no(char_match) << "\n";
  s << "  essentially equal to A-polynomial: " << yes_no(v.essentially_equal) << "\n";
  if (knot == Knot::kFigure8)
    s << "  L-1 splits off, cofactor of L-degree " << v.factors.quotient_L_degree
      << ": " << yes_no(v.factors.divisible_by_L_minus_1) << "\n";
  s << "E-1 divides the operator at q=1, Q=1: " << yes_no(v.lemma31_ok) << "\n";
  s << "annihilates J(n), n=1.." << v.annihilation.n_checked << ": "
    << yes_no(v.annihilation.ok) << "\n";
  s << "order-1 annihilators (deg_Q<=" << v.no_order1.deg_Q << ", deg_q<="
    << v.no_order1.deg_q << ", N=" << v.no_order1.table_size
    << "): nullspace dimension " << v.no_order1.nullity << " (" << v.no_order1.method
    << ", rank " << v.no_order1.rank << "/" << v.no_order1.unknowns << ")\n";
  const bool ok = op_match && char_match && v.passed() && v.no_order1.nullity == 0;
  s << "status: " << (ok ? "reproduced" : "MISMATCH") << "\n";
  return {s.str(), ok};
}

int cmd_repro(int threads, int max_order, std::ostream& out) {
  if (threads < 1) throw UsageError("--threads must be >= 1");
  const Knot knots[] = {Knot::kTrefoil, Knot::kFigure8};
  std::vector<KnotReport> reports;
  if (threads == 1) {
    for (Knot k : knots) reports.push_back(repro_knot(k, max_order));
  } else {
    std::vector<std::future<KnotReport>> jobs;
    for (Knot k : knots)
      jobs.push_back(std::async(std::launch::async, repro_knot, k, max_order));
    for (auto& j : jobs) reports.push_back(j.get());
  }
  bool ok = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << "\n";
    out << reports[i].text;
    ok = ok && reports[i].ok;
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-holonomic tools for colored Jones functions", "aqp"};
  app.require_subcommand(1);

  std::string knot;
  int n = 0;
  std::string emit = "text";
  int max_order = 0;
  bool homogenize = false;
  int table_size = kTableSize;
  std::string operator_file;
  int threads = 1;

  auto* jones_cmd = app.add_subcommand("jones", "Colored Jones function J(n)");
  jones_cmd->add_option("--knot", knot, "3_1 or 4_1")->required();
  jones_cmd->add_option("--n", n, "color, n >= 1")->required();
  jones_cmd->add_option("--emit", emit, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* tele_cmd = app.add_subcommand("telescope", "Creative telescoping recursion");
  tele_cmd->add_option("--knot", knot, "3_1 or 4_1")->required();
  tele_cmd->add_option("--max-order", max_order, "largest order tried");
  tele_cmd->add_option("--emit", emit, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  tele_cmd->add_flag("--homogenize", homogenize,
                     "emit the normalized homogeneous operator");

  auto* aj_cmd = app.add_subcommand("aj-check", "AJ conjecture verdict as JSON");
  aj_cmd->add_option("--knot", knot, "3_1 or 4_1")->required();
  aj_cmd->add_option("--max-order", max_order, "largest order tried");
  aj_cmd->add_option("--table-size", table_size, "number of J(n) values");

  auto* cv_cmd = app.add_subcommand("char-variety",
                                    "Characteristic polynomial of an operator");
  cv_cmd->add_option("--operator", operator_file, "operator JSON file")->required();

  auto* repro_cmd = app.add_subcommand("repro-paper",
                                       "Reproduce both knot sessions side by side");
  repro_cmd->add_option("--threads", threads, "worker threads");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (max_order == 0) max_order = default_max_order();
    if (max_order < 1) throw UsageError("--max-order must be >= 1");
    if (*jones_cmd) return cmd_jones(knot_from_name(knot), n, emit, out);
    if (*tele_cmd)
      return cmd_telescope(knot_from_name(knot), max_order, homogenize, emit, out);
    if (*aj_cmd) return cmd_aj_check(knot_from_name(knot), max_order, table_size, out);
    if (*cv_cmd) return cmd_char_variety(operator_file, out);
    return cmd_repro(threads, max_order, out);
  } catch (const UnknownKnot& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OrderBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
}

}  // namespace aqp::cli
