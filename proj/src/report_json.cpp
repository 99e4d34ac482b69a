#include "hurwitz/report_json.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/parse.hpp"

namespace hurwitz {

json group_json(const PermGroup& g) {
  json j;
  j["degree"] = g.degree();
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.cycles());
  j["generators"] = std::move(gens);
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

std::shared_ptr<const PermGroup> group_from_json(const json& j,
                                                 std::size_t order_cap) {
  if (j.is_string()) return make_builtin(j.get<std::string>(), order_cap);
  if (!j.is_object() || !j.contains("degree") || !j.contains("generators"))
    throw InvalidInput("group JSON needs {\"degree\": d, \"generators\": [...]}");
  int degree = j.at("degree").get<int>();
  std::vector<Perm> gens;
  for (const auto& s : j.at("generators"))
    gens.push_back(Perm::from_cycles(s.get<std::string>(), degree));
  std::string name = j.value("name", std::string());
  return std::make_shared<PermGroup>(degree, std::move(gens), name, order_cap);
}

json datum_json(const Datum& d) {
  json j;
  j["group"] = group_json(d.group());
  json entries = json::array();
  for (int i = 0; i < d.size(); ++i) entries.push_back(d.entry(i).cycles());
  j["entries"] = std::move(entries);
  return j;
}

Datum datum_from_json(const json& j, std::size_t order_cap) {
  if (!j.is_object() || !j.contains("group") || !j.contains("entries"))
    throw InvalidInput("datum JSON needs {\"group\": ..., \"entries\": [...]}");
  auto g = group_from_json(j.at("group"), order_cap);
  std::vector<Perm> entries;
  for (const auto& s : j.at("entries"))
    entries.push_back(Perm::from_cycles(s.get<std::string>(), g->degree()));
  return Datum::make(std::move(g), entries);
}

json signature_json(const BranchSignature& s) {
  json j;
  j["orders"] = s.orders;
  json classes = json::array();
  for (const auto& [label, count] : s.classes)
    classes.push_back(json::array({label, count}));
  j["classes"] = std::move(classes);
  return j;
}

json check_json(const Datum::Check& c) {
  json j;
  j["valid"] = c.ok();
  if (!c.ok()) {
    const char* defect = "";
    switch (c.defect) {
      case Datum::Defect::too_short: defect = "too_short"; break;
      case Datum::Defect::entry_outside_group: defect = "entry_outside_group"; break;
      case Datum::Defect::product_not_identity: defect = "product_not_identity"; break;
      case Datum::Defect::trivial_entry: defect = "trivial_entry"; break;
      case Datum::Defect::proper_subgroup: defect = "proper_subgroup"; break;
      case Datum::Defect::none: break;
    }
    j["defect"] = defect;
    j["reason"] = c.message;
  }
  return j;
}

json orbit_json(const Orbit& o) {
  json j;
  j["size"] = o.size();
  json rep = json::array();
  for (int i = 0; i < o.start.size(); ++i)
    rep.push_back(o.start.entry(i).cycles());
  j["representative"] = std::move(rep);
  j["canonicalizer"] = canon_name(o.canon);
  json movers = json::array();
  for (const auto& m : o.movers) movers.push_back(m.name);
  j["movers"] = std::move(movers);
  return j;
}

json type_reports_json(const std::vector<TypeReport>& reports) {
  json arr = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    json j;
    j["index"] = i;
    j["orbit_size"] = r.orbit_size;
    j["genus"] = r.genus;
    j["signature"] = signature_json(r.signature);
    json rep = json::array();
    for (int k = 0; k < r.representative.size(); ++k)
      rep.push_back(r.representative.entry(k).cycles());
    j["representative"] = std::move(rep);
    j["pure_orbits"] = {{"exact", r.pure_orbits_exact},
                        {"inn", r.pure_orbits_inn},
                        {"aut", r.pure_orbits_aut}};
    arr.push_back(std::move(j));
  }
  return arr;
}

json extension_json(const ExtensionReport& r) {
  json j;
  j["datum"] = datum_json(r.datum);
  j["exact_orbit_index"] = r.exact_orbit_index;
  j["exact_index_center_ambiguous"] = r.exact_index_center_ambiguous;
  j["inn_orbit_index"] = r.inn_orbit_index;
  j["aut_orbit_index"] = r.aut_orbit_index;
  json eps;
  eps["size"] = r.eps_image.size();
  json maps = json::array();
  for (const auto& a : r.eps_image) {
    json images = json::array();
    for (const auto& p : a.generator_images()) images.push_back(p.cycles());
    maps.push_back(std::move(images));
  }
  eps["maps"] = std::move(maps);
  j["eps_image"] = std::move(eps);
  j["eps_image_in_out"] = r.eps_image_in_out;
  j["center_trivial"] = r.center_trivial;
  j["abelian"] = r.abelian;
  return j;
}

json minimal_extension_json(const MinimalExtension& m) {
  json j;
  j["base_degree"] = m.base.n_points;
  j["movers"] = m.base.names;
  json phi = json::array();
  for (const auto& [sg, gid] : m.phi) {
    json e;
    e["word"] = sg.word.str();
    e["conjugator"] = m.datum.group().element(gid).cycles();
    phi.push_back(std::move(e));
  }
  j["phi"] = std::move(phi);
  j["checked"] = m.checked;
  j["verified"] = m.verified;
  return j;
}

json abelian_certificate_json(const AbelianCertificate& c) {
  json j;
  j["datum"] = datum_json(c.datum);
  j["checked"] = c.checked;
  j["all_fixed"] = c.all_fixed;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hurwitz
