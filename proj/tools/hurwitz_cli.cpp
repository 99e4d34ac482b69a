// Command-line front end: parses groups and data in cycle notation or
// JSON, dispatches to the classify / orbit / extension operations and
// emits deterministic reports.
//
// Exit codes: 0 ok, 1 internal failure, 2 invalid input, 3 cap exceeded,
// 4 hypothesis violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/classify.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/extension.hpp"
#include "hurwitz/orbit.hpp"
#include "hurwitz/parse.hpp"
#include "hurwitz/report_json.hpp"

namespace {

using namespace hurwitz;

struct CommonOpts {
  std::string group;
  std::string datum;
  std::string datum_file;
  std::string format = "table";
  std::size_t order_cap = PermGroup::kDefaultOrderCap;
  std::size_t orbit_cap = 1'000'000;
  std::size_t enum_cap = 20'000'000;
  int threads = 1;
};

std::shared_ptr<const PermGroup> load_group(const CommonOpts& o) {
  if (o.group.empty()) throw InvalidInput("--group is required");
  if (is_builtin(o.group)) return make_builtin(o.group, o.order_cap);
  if (std::filesystem::exists(o.group)) {
    std::ifstream in(o.group);
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw InvalidInput("cannot parse group file " + o.group + ": " +
                         e.what());
    }
    return group_from_json(j, o.order_cap);
  }
  throw InvalidInput("group \"" + o.group +
                     "\" is neither a builtin name nor a readable file");
}

std::optional<Perm> cyclic_generator_of(const std::string& name,
                                        const PermGroup& g) {
  for (const auto& b : builtin_groups()) {
    std::string key = name;
    for (auto& c : key) c = static_cast<char>(std::toupper((unsigned char)c));
    if (b.name == key && b.cyclic)
      return Perm::from_cycles(b.generators.front(), b.degree);
  }
  return std::nullopt;
}

Datum load_datum(const CommonOpts& o,
                 const std::shared_ptr<const PermGroup>& g) {
  if (!o.datum_file.empty()) {
    std::ifstream in(o.datum_file);
    if (!in) throw InvalidInput("cannot open datum file " + o.datum_file);
    json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw InvalidInput("cannot parse datum file " + o.datum_file + ": " +
                         e.what());
    }
    return datum_from_json(j, o.order_cap);
  }
  if (o.datum.empty())
    throw InvalidInput("--datum or --datum-json is required");
  auto entries =
      parse_entries(o.datum, g->degree(), cyclic_generator_of(o.group, *g));
  return Datum::make(g, entries);
}

std::vector<Move> load_movers(const std::string& selector, int n) {
  if (selector == "pure" || selector.empty()) return pure_moves(n);
  if (selector == "full") return sigma_moves(n);
  std::vector<Move> out;
  std::stringstream ss(selector);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back({tok, BraidWord::parse(n, tok)});
  if (out.empty()) throw InvalidInput("empty mover list \"" + selector + "\"");
  return out;
}

void emit(const std::string& s) { std::cout << s << std::flush; }

int run_check(const CommonOpts& o, bool genus_only) {
  auto g = load_group(o);
  std::vector<Perm> entries;
  if (!o.datum_file.empty()) {
    Datum d = load_datum(o, g);  // throws on invalid
    entries = d.entries();
  } else {
    if (o.datum.empty()) throw InvalidInput("--datum is required");
    entries =
        parse_entries(o.datum, g->degree(), cyclic_generator_of(o.group, *g));
  }
  Datum::Check c = Datum::check(*g, entries);
  if (!c.ok()) {
    if (o.format == "json") {
      emit(dump(check_json(c)));
    } else {
      std::cout << "invalid: " << c.message << "\n";
    }
    return 2;
  }
  Datum d = Datum::make(g, entries);
  if (genus_only) {
    if (o.format == "json") {
      json j;
      j["genus"] = d.genus();
      emit(dump(j));
    } else {
      std::cout << d.genus() << "\n";
    }
    return 0;
  }
  if (o.format == "json") {
    json j = check_json(c);
    j["genus"] = d.genus();
    j["signature"] = signature_json(d.signature());
    j["datum"] = datum_json(d);
    emit(dump(j));
  } else {
    std::cout << "valid, genus " << d.genus() << "\n"
              << "signature: " << d.signature().str() << "\n";
  }
  return 0;
}

int run_orbit(const CommonOpts& o, const std::string& movers_spec,
              const std::string& canon_spec) {
  auto g = load_group(o);
  Datum d = load_datum(o, g);
  auto movers = load_movers(movers_spec, d.size());
  Canon canon = parse_canon(canon_spec);
  OrbitOptions opts{o.orbit_cap, o.threads};
  Orbit orb = enumerate_orbit(d, movers, canon, opts);
  if (o.format == "json") {
    emit(dump(orbit_json(orb)));
  } else {
    std::cout << "orbit size " << orb.size() << " (canonicalizer "
              << canon_name(canon) << ")\n";
  }
  return 0;
}

int run_classify(const CommonOpts& o, int n) {
  auto g = load_group(o);
  ClassifyOptions opts;
  opts.enumeration = {o.enum_cap, o.threads};
  opts.orbit = {o.orbit_cap, o.threads};
  auto reports = classify_types(g, n, opts);
  if (o.format == "json") {
    emit(dump(type_reports_json(reports)));
    return 0;
  }
  std::cout << reports.size() << " type(s) for " <<
      (g->name().empty() ? "group" : g->name()) << ", n = " << n << "\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::cout << i << "  orbit " << r.orbit_size << "  genus " << r.genus
              << "  " << r.signature.str() << "  rep "
              << r.representative.str() << "\n";
  }
  return 0;
}

int run_extensions(const CommonOpts& o, bool minimal, bool abelian_cert) {
  auto g = load_group(o);
  Datum d = load_datum(o, g);
  OrbitOptions opts{o.orbit_cap, o.threads};
  if (abelian_cert) {
    AbelianCertificate cert = abelian_certificate(d);
    if (o.format == "json") {
      emit(dump(abelian_certificate_json(cert)));
    } else {
      std::cout << "abelian full-base certificate: checked "
                << cert.checked.size() << " pure generators, all fix the tuple"
                << "\n";
    }
    return 0;
  }
  ExtensionReport r = extension_report(d, opts);
  json j = extension_json(r);
  if (minimal) {
    MinimalExtension m = centerless_minimum(d, opts);
    j["minimal"] = minimal_extension_json(m);
  }
  if (o.format == "json") {
    emit(dump(j));
  } else {
    std::cout << "exact index " << r.exact_orbit_index
              << (r.exact_index_center_ambiguous ? " (center-ambiguous)" : "")
              << ", inn index " << r.inn_orbit_index << ", aut index "
              << r.aut_orbit_index << "\n"
              << "eps image: " << r.eps_image.size() << " automorphism(s), "
              << r.eps_image_in_out << " in Out G\n";
    if (minimal)
      std::cout << "minimal base degree " << r.inn_orbit_index
                << " (certificate "
                << (j["minimal"]["verified"].get<bool>() ? "passed" : "FAILED")
                << ")\n";
  }
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_datum) {
  cmd->add_option("--group", o.group, "builtin name (S3, S4, A4, Z2, Z3, Z6, V4) or JSON file");
  if (with_datum) {
    cmd->add_option("--datum", o.datum,
                    "comma-separated entries in cycle notation; \"k mod m\" "
                    "for builtin cyclic groups");
    cmd->add_option("--datum-json", o.datum_file, "datum JSON file");
  }
  cmd->add_option("--format", o.format, "output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
  cmd->add_option("--order-cap", o.order_cap, "group order cap");
  cmd->add_option("--orbit-cap", o.orbit_cap, "orbit size cap");
  cmd->add_option("--enum-cap", o.enum_cap, "enumeration cap on |G|^(n-1)");
  cmd->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz-orbit classifier for Galois covers of the line"};
  app.require_subcommand(1);

  CommonOpts check_o, genus_o, orbit_o, classify_o, ext_o;
  std::string movers_spec = "pure", canon_spec = "exact";
  int classify_n = 0;
  bool minimal = false, abelian_cert = false;

  auto* check = app.add_subcommand("check", "validate a datum and report genus");
  add_common(check, check_o, true);

  auto* genus = app.add_subcommand("genus", "genus of the covering curve");
  add_common(genus, genus_o, true);

  auto* orbit = app.add_subcommand("orbit", "enumerate a braid orbit");
  add_common(orbit, orbit_o, true);
  orbit->add_option("--movers", movers_spec,
                    "pure, full, or comma-separated generator names");
  orbit->add_option("--canon", canon_spec, "exact, inn or aut")
      ->check(CLI::IsMember({"exact", "inn", "aut"}));

  auto* classify = app.add_subcommand("classify", "topological types for (G, n)");
  add_common(classify, classify_o, false);
  classify->add_option("--n", classify_n, "number of branch points")
      ->required()
      ->check(CLI::Range(3, 64));

  auto* ext = app.add_subcommand("extensions", "extension indices and eps image");
  add_common(ext, ext_o, true);
  ext->add_flag("--minimal", minimal,
                "also compute the centerless minimal extension");
  ext->add_flag("--abelian-cert", abelian_cert,
                "emit the abelian full-base certificate instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(check_o, false);
    if (genus->parsed()) return run_check(genus_o, true);
    if (orbit->parsed()) return run_orbit(orbit_o, movers_spec, canon_spec);
    if (classify->parsed()) return run_classify(classify_o, classify_n);
    if (ext->parsed()) return run_extensions(ext_o, minimal, abelian_cert);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
