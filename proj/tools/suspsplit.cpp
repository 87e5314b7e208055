// suspsplit: command-line front end for the decomposition library.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "suspsplit/errors.hpp"
#include "suspsplit/io.hpp"
#include "suspsplit/oracle.hpp"
#include "suspsplit/pi_tables.hpp"

using namespace suspsplit;
using nlohmann::json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;

json read_document(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
}

EnumerationBounds parse_bounds(const std::string& spec, int n) {
  EnumerationBounds b;
  if (!spec.empty()) {
    std::vector<int> v;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::exception&) {
        throw SchemaError("--bounds expects four integers l,d,t2,r");
      }
    }
    if (v.size() != 4 || *std::min_element(v.begin(), v.end()) < 0)
      throw SchemaError("--bounds expects four non-negative integers l,d,t2,r");
    b.max_l = v[0];
    b.max_d = v[1];
    b.max_t2 = v[2];
    b.max_r = std::max(1, v[3]);
  }
  b.n_min = n ? n : 2;
  b.n_max = n ? n : 5;
  b.cap = cap_from_env(kDefaultCap);
  return b;
}

struct Options {
  std::string file = "-";
  bool as_json = false;
  bool localize = false;
  int depth = 4;
  std::string bounds;
  int n = 0;
  int pi_degree = 0;
  std::string space;
  bool odd = false;
  bool list = false;
};

int run_decompose(const Options& o) {
  json doc = read_document(o.file);
  if (o.n) {
    if (doc.is_object() && doc.contains("n") && doc.at("n") != o.n) throw SchemaError("--n disagrees with the document");
    if (doc.is_object()) doc["n"] = o.n;
  }
  ManifoldInput in = parse_decompose(doc);
  if (o.localize) in.localize = true;
  const DecompositionResult res = decide(in);
  if (o.as_json)
    std::cout << to_json(res).dump(2) << "\n";
  else
    std::cout << format_result(res);
  return 0;
}

int run_normalize(const Options& o) {
  const AttachingVector v = parse_normalize(read_document(o.file));
  const Normalized nv = normalize(to_slots(v));
  if (o.as_json)
    std::cout << to_json(nv).dump(2) << "\n";
  else
    std::cout << format_normalized(nv);
  return 0;
}

int run_tables(const Options& o) {
  if (o.space.empty()) throw SchemaError("tables needs --space");
  const SpaceTerm t = parse_term(o.space);
  const HomotopyGroup g = o.odd ? pi_odd(o.pi_degree, t) : pi(o.pi_degree, t);
  if (o.as_json) {
    json sums = json::array();
    for (const auto& s : g.summands) sums.push_back(json{{"order", s.order}, {"generator", to_string(s.gen)}});
    std::cout << json{{"degree", g.degree}, {"space", to_string(t)}, {"text", group_text(g)}, {"summands", sums}}.dump(2)
              << "\n";
  } else {
    std::cout << group_text(g) << "\n";
  }
  return 0;
}

int emit_reports(const std::vector<Report>& reports, bool as_json) {
  bool ok = true;
  json arr = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed;
    if (as_json)
      arr.push_back(to_json(r));
    else
      std::cout << to_string(r) << "\n";
  }
  if (as_json) std::cout << arr.dump(2) << "\n";
  return ok ? 0 : kExitVerify;
}

int run_verify(const Options& o, bool file_given) {
  std::vector<Report> reports;
  if (file_given) {
    ManifoldInput in = parse_decompose(read_document(o.file));
    if (o.localize) in.localize = true;
    const DecompositionResult res = decide(in);
    Report h{"homology", true, 0, {}};
    for (const auto& w : res.candidates()) h.merge(check_homology(in, w, res.localized));
    reports.push_back(h);
    if (std::holds_alternative<AttachingCoeffs>(in.top)) {
      reports.push_back(cross_validate(in));
      const SlotVector v = attaching_vector(in);
      Report orbit{"normal form orbit", true, 1, {}};
      const OrbitResult r = orbit_equivalent(v, normalize(v).vector, o.depth);
      if (r != OrbitResult::Equivalent) orbit.fail(std::string(to_string(r)) + " at depth " + std::to_string(o.depth));
      reports.push_back(orbit);
    }
    return emit_reports(reports, o.as_json);
  }
  const EnumerationBounds b = parse_bounds(o.bounds, o.n);
  reports.push_back(check_homology_sweep(b));
  reports.push_back(check_mode_agreement(b));
  for (int n : {2, 3})
    if (b.n_min <= n && n <= b.n_max) reports.push_back(check_rule_soundness(n, b));
  reports.push_back(check_confluence_sweep(b));
  reports.push_back(check_localization(b));
  if (b.n_min <= 2) reports.push_back(check_reduce_phi(std::min(b.max_l, 3), std::min(b.max_t2, 3), b.max_r));
  return emit_reports(reports, o.as_json);
}

int run_enumerate(const Options& o) {
  const EnumerationBounds b = parse_bounds(o.bounds, o.n);
  if (!o.list) {
    const std::uint64_t total = count_inputs(b);
    if (o.as_json)
      std::cout << json{{"count", total}, {"cap", b.cap}}.dump() << "\n";
    else
      std::cout << total << "\n";
    return 0;
  }
  for_each_input(b, [&](const ManifoldInput& in) {
    const DecompositionResult res = decide(in);
    std::cout << "n=" << in.n << " l=" << in.l << " d=" << in.d << " T=" << in.T.encode() << " -> "
              << to_string(res.wedge) << "\n";
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wedge decompositions of suspended highly connected Poincare duality complexes"};
  app.require_subcommand(1);
  Options o;

  auto* dec = app.add_subcommand("decompose", "Decompose the suspension described by a JSON input");
  dec->add_option("-f,--file", o.file, "Input document ('-' for stdin)");
  dec->add_flag("--json", o.as_json, "Emit JSON");
  dec->add_flag("--localize", o.localize, "Localize away from 2");
  dec->add_option("--n", o.n, "Connectivity parameter (checked against the document)")->check(CLI::Range(2, 5));

  auto* nor = app.add_subcommand("normalize", "Normalize a top-cell attaching vector");
  nor->add_option("-f,--file", o.file, "Input document ('-' for stdin)");
  nor->add_flag("--json", o.as_json, "Emit JSON");

  auto* tab = app.add_subcommand("tables", "Print a stored homotopy group");
  tab->add_option("--pi", o.pi_degree, "Homotopy degree")->required();
  tab->add_option("--space", o.space, "Space, e.g. \"P^5(Z/4)\" or \"C^5_eta\"")->required();
  tab->add_flag("--odd", o.odd, "Odd-primary part only");
  tab->add_flag("--json", o.as_json, "Emit JSON");

  auto* ver = app.add_subcommand("verify", "Run the brute-force checks");
  auto* ver_file = ver->add_option("-f,--file", o.file, "Check a single input instead of sweeping");
  ver->add_option("--bounds", o.bounds, "Sweep bounds l,d,t2,r");
  ver->add_option("--n", o.n, "Restrict the sweep to one n")->check(CLI::Range(2, 5));
  ver->add_option("--depth", o.depth, "Orbit search depth")->check(CLI::Range(0, 64));
  ver->add_flag("--localize", o.localize, "Localize away from 2");
  ver->add_flag("--json", o.as_json, "Emit JSON");

  auto* en = app.add_subcommand("enumerate", "Count or list enumerated inputs");
  en->add_option("--bounds", o.bounds, "Bounds l,d,t2,r");
  en->add_option("--n", o.n, "Restrict to one n")->check(CLI::Range(2, 5));
  en->add_flag("--list", o.list, "List every input with its wedge");
  en->add_flag("--json", o.as_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSchema;
  }

  try {
    if (dec->parsed()) return run_decompose(o);
    if (nor->parsed()) return run_normalize(o);
    if (tab->parsed()) return run_tables(o);
    if (ver->parsed()) return run_verify(o, ver_file->count() > 0);
    return run_enumerate(o);
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
