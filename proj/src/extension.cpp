#include "hurwitz/extension.hpp"

#include <algorithm>

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::optional<GroupAutomorphism> solve_automorphism(
    const AutomorphismGroup& auts, const std::vector<int>& t,
    const std::vector<int>& u) {
  for (const auto& a : auts.all) {
    bool match = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (a.apply(t[i]) != u[i]) {
        match = false;
        break;
      }
    if (match) return a;
  }
  return std::nullopt;
}

std::vector<int> conjugators(const PermGroup& g, const std::vector<int>& t,
                             const std::vector<int>& u) {
  std::vector<int> out;
  const int n = static_cast<int>(g.order());
  for (int a = 0; a < n; ++a) {
    bool match = true;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (g.conj(a, t[i]) != u[i]) {
        match = false;
        break;
      }
    if (match) out.push_back(a);
  }
  return out;
}

namespace {

// Closure of the solved automorphisms under composition; a finite subset
// of a finite group closed under products is a subgroup.
std::vector<GroupAutomorphism> subgroup_closure(
    std::vector<GroupAutomorphism> gens, const PermGroup& g) {
  std::vector<GroupAutomorphism> elems{GroupAutomorphism::identity(g)};
  auto contains = [&](const GroupAutomorphism& a) {
    return std::find(elems.begin(), elems.end(), a) != elems.end();
  };
  for (const auto& a : gens)
    if (!contains(a)) elems.push_back(a);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& a : gens) {
      GroupAutomorphism prod = elems[i].after(a);
      if (!contains(prod)) elems.push_back(std::move(prod));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::size_t image_size_in_out(const std::vector<GroupAutomorphism>& subgroup,
                              const AutomorphismGroup& auts) {
  // Distinct cosets eta Inn among the subgroup's members.
  std::vector<std::vector<int>> coset_keys;
  std::vector<GroupAutomorphism> inner;
  for (std::size_t i = 0; i < auts.all.size(); ++i)
    if (auts.inner[i]) inner.push_back(auts.all[i]);
  for (const auto& eta : subgroup) {
    std::vector<int> best = eta.table();
    for (const auto& in : inner) best = std::min(best, eta.after(in).table());
    coset_keys.push_back(std::move(best));
  }
  std::sort(coset_keys.begin(), coset_keys.end());
  coset_keys.erase(std::unique(coset_keys.begin(), coset_keys.end()),
                   coset_keys.end());
  return coset_keys.size();
}

}  // namespace

ExtensionReport extension_report(const Datum& d, const OrbitOptions& opts) {
  const PermGroup& g = d.group();
  AutomorphismGroup auts = AutomorphismGroup::compute(g);
  const auto movers = pure_moves(d.size());

  ExtensionReport r{d};
  r.center_trivial = g.center_trivial();
  r.abelian = g.is_abelian();

  Orbit exact = enumerate_orbit(d, movers, Canon::exact, opts);
  Orbit inn = enumerate_orbit(d, movers, Canon::inn, opts);
  Orbit aut = enumerate_orbit(d, movers, Canon::aut, opts, &auts);
  r.exact_orbit_index = exact.size();
  r.inn_orbit_index = inn.size();
  r.aut_orbit_index = aut.size();

  // The full twist acts by simultaneous conjugation by the last entry, so
  // the exact index is only the true subgroup index when that entry is
  // central.
  const auto& center = g.center_ids();
  r.exact_index_center_ambiguous =
      !std::binary_search(center.begin(), center.end(),
                          d.entry_id(d.size() - 1));

  // Image of the aut-level stabilizer in Aut G, solved on Schreier
  // generators.
  CosetAction ca = coset_action(aut);
  std::vector<GroupAutomorphism> solved;
  for (const auto& sg : schreier_generators(ca)) {
    std::vector<int> image = apply_word_ids(g, d.entry_ids(), sg.word);
    auto eta = solve_automorphism(auts, d.entry_ids(), image);
    if (!eta)
      throw Error("no automorphism matches stabilizer word " + sg.word.str() +
                  "; the aut orbit and Aut G disagree");
    solved.push_back(std::move(*eta));
  }
  r.eps_image = subgroup_closure(std::move(solved), g);
  r.eps_image_in_out = image_size_in_out(r.eps_image, auts);
  return r;
}

MinimalExtension centerless_minimum(const Datum& d, const OrbitOptions& opts) {
  const PermGroup& g = d.group();
  if (!g.center_trivial())
    throw HypothesisViolation(
        "the minimal extension needs Z(G) = 1, but the center has order " +
        std::to_string(g.center_ids().size()));

  MinimalExtension m{d};
  Orbit inn = enumerate_orbit(d, pure_moves(d.size()), Canon::inn, opts);
  m.base = coset_action(inn);

  for (auto& sg : schreier_generators(m.base)) {
    std::vector<int> image = apply_word_ids(g, d.entry_ids(), sg.word);
    std::vector<int> sols = conjugators(g, d.entry_ids(), image);
    if (sols.empty())
      throw Error("stabilizer word " + sg.word.str() +
                  " does not act by conjugation on the tuple");
    if (sols.size() > 1)
      throw Error("conjugator for " + sg.word.str() +
                  " is not unique despite trivial center");
    m.phi.emplace_back(std::move(sg), sols.front());
  }
  // Replay: conjugation by phi(w) reproduces the action of w.
  m.verified = true;
  for (const auto& [sg, gid] : m.phi) {
    std::vector<int> replay = apply_word_ids(g, d.entry_ids(), sg.word);
    for (int i = 0; i < d.size(); ++i)
      if (replay[i] != g.conj(gid, d.entry_id(i))) {
        m.verified = false;
        break;
      }
    ++m.checked;
  }
  return m;
}

AbelianCertificate abelian_certificate(const Datum& d) {
  const PermGroup& g = d.group();
  if (!g.is_abelian())
    throw HypothesisViolation(
        "the full-base certificate needs an abelian group");
  AbelianCertificate cert{d};
  for (const auto& a : pure_generators(d.size())) {
    std::vector<int> image = apply_word_ids(g, d.entry_ids(), a.word);
    if (image != d.entry_ids())
      throw Error("pure generator " + a.name +
                  " moved a tuple over an abelian group");
    cert.checked.push_back(a.name);
  }
  cert.all_fixed = true;
  return cert;
}

ExtensionHandle canonical_handle(const Datum& d, Canon level,
                                 const OrbitOptions& opts) {
  Orbit o = enumerate_orbit(d, pure_moves(d.size()), level, opts);
  ExtensionHandle h{canon_name(level), d};
  h.action = coset_action(o);
  h.labels = o.reps;
  return h;
}

ExtensionHandle join(const ExtensionHandle& a, const ExtensionHandle& b) {
  if (!(a.datum == b.datum))
    throw InvalidInput("join needs handles over the same datum");
  ExtensionHandle h{"join(" + a.kind + "," + b.kind + ")", a.datum};
  h.action = intersect_actions(a.action, b.action);
  h.labels.reserve(h.action.n_points);
  const PermGroup& g = a.datum.group();
  for (std::size_t p = 0; p < h.action.n_points; ++p)
    h.labels.push_back(apply_word_ids(g, a.datum.entry_ids(),
                                      h.action.word(static_cast<int>(p))));
  return h;
}

bool join_consistent(const ExtensionHandle& a, const ExtensionHandle& b,
                     const ExtensionHandle& joined) {
  const PermGroup& g = a.datum.group();
  auto stabilizes = [&](const ExtensionHandle& h, const SchreierGen& sg) {
    return h.action.apply_seq(sg.seq, h.action.basepoint) ==
           h.action.basepoint;
  };
  auto value_set = [&](const ExtensionHandle& h,
                       const SchreierGen& sg) -> std::optional<std::vector<int>> {
    std::vector<int> image = apply_word_ids(g, h.datum.entry_ids(), sg.word);
    if (h.kind == "exact")
      return image == h.datum.entry_ids() ? std::optional(std::vector<int>{0})
                                          : std::nullopt;
    if (h.kind == "inn") {
      std::vector<int> sols = conjugators(g, h.datum.entry_ids(), image);
      if (sols.empty()) return std::nullopt;
      return sols;
    }
    return std::nullopt;  // no G-valued extension at the aut level
  };
  for (const auto& sg : schreier_generators(joined.action)) {
    if (!stabilizes(a, sg) || !stabilizes(b, sg)) return false;
    auto va = value_set(a, sg);
    auto vb = value_set(b, sg);
    if (va && vb) {
      std::vector<int> common;
      std::set_intersection(va->begin(), va->end(), vb->begin(), vb->end(),
                            std::back_inserter(common));
      if (common.empty()) return false;
    } else if ((a.kind == "exact" && !va) || (b.kind == "exact" && !vb) ||
               (a.kind == "inn" && !va) || (b.kind == "inn" && !vb)) {
      return false;
    }
  }
  return true;
}

}  // namespace hurwitz
