#include "nilgrade/spec_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nilgrade {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void allow_keys(const json& node, const std::string& path, std::initializer_list<const char*> keys) {
  if (!node.is_object()) throw SpecError(path, "expected an object");
  for (const auto& [key, value] : node.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
      throw SpecError(child(path, key), "unknown key '" + key + "'");
  }
}

const json& require(const json& node, const std::string& path, const char* key) {
  auto it = node.find(key);
  if (it == node.end()) throw SpecError(child(path, key), "missing required key");
  return *it;
}

std::int64_t get_int(const json& node, const std::string& path) {
  if (!node.is_number_integer()) throw SpecError(path, "expected an integer");
  return node.get<std::int64_t>();
}

std::uint32_t get_positive(const json& node, const std::string& path) {
  const std::int64_t v = get_int(node, path);
  if (v < 1 || v > (std::int64_t{1} << 31)) throw SpecError(path, "expected a positive integer");
  return static_cast<std::uint32_t>(v);
}

std::string get_string(const json& node, const std::string& path) {
  if (!node.is_string()) throw SpecError(path, "expected a string");
  return node.get<std::string>();
}

const json& get_array(const json& node, const std::string& path) {
  if (!node.is_array()) throw SpecError(path, "expected an array");
  return node;
}

bool get_bool(const json& node, const std::string& path) {
  if (!node.is_boolean()) throw SpecError(path, "expected true or false");
  return node.get<bool>();
}

// Anything thrown by the library while building is reported with the path.
template <typename F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SpecError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ValidationError(e.law(), e.witness() + " (at " + path + ")");
  } catch (const PreconditionError& e) {
    throw SpecError(path, e.what());
  }
}

std::vector<Element> elements_of(const FiniteRing& ring, const json& list, const std::string& path) {
  std::vector<Element> out;
  const auto& arr = get_array(list, path);
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(resolve_element(ring, arr[i], child(path, i)));
  return out;
}

ElementSet two_sided_closure(const FiniteRing& ring, const std::vector<Element>& gens) {
  ElementSet set = additive_closure(ring, gens);
  const auto ring_gens = ring.additive_generators();
  for (;;) {
    std::vector<Element> extra;
    for (Element a : subgroup_generators(ring, set))
      for (Element r : ring_gens) {
        for (Element p : {ring.mul(a, r), ring.mul(r, a)})
          if (!set.contains(p)) extra.push_back(p);
      }
    if (extra.empty()) return set;
    extra.insert(extra.end(), gens.begin(), gens.end());
    for (Element a : subgroup_generators(ring, set)) extra.push_back(a);
    set = additive_closure(ring, extra);
  }
}

Degree parse_degree(const GradingGroup& group, const json& node, const std::string& path) {
  const Degree d{get_int(node, path)};
  if (!group.contains(d)) throw SpecError(path, "degree " + std::to_string(d.value) + " is not in " + group.label());
  return d;
}

struct Built {
  Grading grading;
  ConstructionInfo info;
};

Grading parse_grading_block(const RingPtr& ring, const json* block, const std::string& path,
                            const std::optional<GradingGroup>& default_group, const Limits& limits) {
  if (!block) return Grading::trivial(ring, default_group.value_or(GradingGroup::trivial()), limits);
  allow_keys(*block, path, {"group", "trivial", "components"});
  const GradingGroup group = group_from_json(require(*block, path, "group"), child(path, "group"));
  if (default_group && !(group == *default_group))
    throw SpecError(child(path, "group"), "grading group must be " + default_group->label());
  const bool trivial = block->contains("trivial") && get_bool(block->at("trivial"), child(path, "trivial"));
  if (trivial == block->contains("components"))
    throw SpecError(path, "give exactly one of \"trivial\": true and \"components\"");
  if (trivial) return at(path, [&] { return Grading::trivial(ring, group, limits); });
  ComponentGenerators gens;
  const auto& comps = get_array(block->at("components"), child(path, "components"));
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string p = child(child(path, "components"), i);
    allow_keys(comps[i], p, {"degree", "generators"});
    const Degree d = parse_degree(group, require(comps[i], p, "degree"), child(p, "degree"));
    gens.emplace_back(d, elements_of(*ring, require(comps[i], p, "generators"), child(p, "generators")));
  }
  return at(path, [&] { return Grading::verify(ring, group, gens, limits); });
}

SigmaVector parse_sigma(const GradingGroup& group, const json* node, std::size_t n, const std::string& path) {
  SigmaVector sigma;
  if (!node) return SigmaVector(n, group.identity());
  const auto& arr = get_array(*node, path);
  for (std::size_t i = 0; i < arr.size(); ++i) sigma.push_back(parse_degree(group, arr[i], child(path, i)));
  if (sigma.size() != n) throw SpecError(path, "expected " + std::to_string(n) + " entries");
  return sigma;
}

const json* find(const json& node, const char* key) {
  auto it = node.find(key);
  return it == node.end() ? nullptr : &*it;
}

Built build(const json& node, const std::string& path, const std::optional<GradingGroup>& default_group,
            const Limits& limits) {
  if (!node.is_object()) throw SpecError(path, "expected a ring description object");
  const std::string kind = get_string(require(node, path, "kind"), child(path, "kind"));
  ConstructionInfo info;
  info.kind = kind;

  if (kind == "zn" || kind == "gf" || kind == "table") {
    RingPtr ring;
    if (kind == "zn") {
      allow_keys(node, path, {"kind", "n", "grading"});
      const auto n = get_positive(require(node, path, "n"), child(path, "n"));
      if (n > limits.max_elements) throw ResourceError("max_elements", limits.max_elements, n);
      ring = make_zn(n);
    } else if (kind == "gf") {
      allow_keys(node, path, {"kind", "p", "k", "grading"});
      const auto p = get_positive(require(node, path, "p"), child(path, "p"));
      const auto k = node.contains("k") ? get_positive(node.at("k"), child(path, "k")) : 1U;
      ring = at(path, [&] { return make_gf(p, k, limits); });
    } else {
      allow_keys(node, path, {"kind", "size", "add", "mul", "one", "label", "labels", "grading"});
      const auto size = get_positive(require(node, path, "size"), child(path, "size"));
      if (size > limits.max_elements) throw ResourceError("max_elements", limits.max_elements, size);
      auto table = [&](const char* key) {
        const std::string p = child(path, key);
        const auto& rows = get_array(require(node, path, key), p);
        if (rows.size() != size) throw SpecError(p, "expected " + std::to_string(size) + " rows");
        std::vector<Element> flat;
        for (std::size_t i = 0; i < size; ++i) {
          const auto& row = get_array(rows[i], child(p, i));
          if (row.size() != size) throw SpecError(child(p, i), "expected " + std::to_string(size) + " entries");
          for (std::size_t j = 0; j < size; ++j) {
            const auto v = get_int(row[j], child(child(p, i), j));
            if (v < 0 || v >= static_cast<std::int64_t>(size)) throw SpecError(child(child(p, i), j), "entry out of range");
            flat.push_back(static_cast<Element>(v));
          }
        }
        return flat;
      };
      auto add = table("add");
      auto mul = table("mul");
      const auto one = get_int(require(node, path, "one"), child(path, "one"));
      std::vector<std::string> labels;
      if (auto* l = find(node, "labels")) {
        const auto& arr = get_array(*l, child(path, "labels"));
        for (std::size_t i = 0; i < arr.size(); ++i) labels.push_back(get_string(arr[i], child(child(path, "labels"), i)));
        if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
          throw SpecError(child(path, "labels"), "labels must be distinct");
      }
      const std::string label = node.contains("label") ? get_string(node.at("label"), child(path, "label")) : "T";
      if (one < 0 || one >= static_cast<std::int64_t>(size)) throw SpecError(child(path, "one"), "identity out of range");
      auto t = at(path, [&] {
        return std::make_shared<const TableRing>(size, std::move(add), std::move(mul), static_cast<Element>(one), label,
                                                 std::move(labels));
      });
      at(path, [&] { return verify_ring_axioms(*t, limits); });
      ring = t;
    }
    Grading g = parse_grading_block(ring, find(node, "grading"), child(path, "grading"), default_group, limits);
    return {std::move(g), std::move(info)};
  }

  if (kind == "matrix" || kind == "triangular") {
    allow_keys(node, path, {"kind", "base", "n", "sigma"});
    Built base = build(require(node, path, "base"), child(path, "base"), default_group, limits);
    const auto n = get_positive(require(node, path, "n"), child(path, "n"));
    const SigmaVector sigma = parse_sigma(base.grading.group(), find(node, "sigma"), n, child(path, "sigma"));
    info.base = base.grading;
    info.n = n;
    info.sigma = sigma;
    if (kind == "matrix") {
      Grading g = at(path, [&] { return matrix_graded(base.grading, n, sigma, limits); });
      return {std::move(g), std::move(info)};
    }
    TriangularResult t = at(path, [&] { return triangular_graded(base.grading, n, sigma, limits); });
    info.ideals.push_back({"zero_diagonal", t.zero_diagonal});
    return {std::move(t.grading), std::move(info)};
  }

  if (kind == "diagonal_z") {
    allow_keys(node, path, {"kind", "base", "n"});
    if (default_group && !default_group->is_integer())
      throw SpecError(path, "diagonal_z is graded by the integers, not " + default_group->label());
    Built base = build(require(node, path, "base"), child(path, "base"), std::nullopt, limits);
    const auto n = get_positive(require(node, path, "n"), child(path, "n"));
    info.base = base.grading;
    info.n = n;
    for (std::size_t i = 0; i < n; ++i) info.sigma.push_back(Degree{static_cast<std::int64_t>(i)});
    Grading g = at(path, [&] { return diagonal_z_grading(base.grading.ring_ptr(), n, limits); });
    return {std::move(g), std::move(info)};
  }

  if (kind == "group_ring") {
    allow_keys(node, path, {"kind", "base", "group", "mode"});
    const GradingGroup group = group_from_json(require(node, path, "group"), child(path, "group"));
    if (!group.is_finite()) throw SpecError(child(path, "group"), "group rings need a finite group");
    if (default_group && !(group == *default_group))
      throw SpecError(child(path, "group"), "grading group must be " + default_group->label());
    Built base = build(require(node, path, "base"), child(path, "base"), group, limits);
    const std::string mode = node.contains("mode") ? get_string(node.at("mode"), child(path, "mode")) : "auto";
    info.base = base.grading;
    GroupRingResult r = at(path, [&]() -> GroupRingResult {
      if (mode == "auto") return group_ring_graded_auto(base.grading, group.finite_group(), limits);
      if (mode == "paper_twisted")
        return group_ring_graded(base.grading, group.finite_group(), GroupRingMode::paper_twisted, limits);
      if (mode == "standard")
        return group_ring_graded(base.grading, group.finite_group(), GroupRingMode::standard, limits);
      throw SpecError(child(path, "mode"), "unknown mode '" + mode + "' (auto, paper_twisted, standard)");
    });
    for (const auto& o : r.outcomes)
      info.notes.push_back("group ring mode " + to_string(o.mode) + ": " + (o.valid ? "validates" : "rejected: " + o.detail));
    info.ideals.push_back({"augmentation", augmentation_ideal(r.grading).elements});
    Grading g = r.grading;
    info.group_ring = std::move(r);
    return {std::move(g), std::move(info)};
  }

  if (kind == "product") {
    allow_keys(node, path, {"kind", "factors"});
    const auto& arr = get_array(require(node, path, "factors"), child(path, "factors"));
    if (arr.empty()) throw SpecError(child(path, "factors"), "need at least one factor");
    std::optional<GradingGroup> group = default_group;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      Built f = build(arr[i], child(child(path, "factors"), i), group, limits);
      if (!group) group = f.grading.group();
      info.factors.push_back(std::move(f.grading));
    }
    Grading g = at(path, [&] { return product_grading(info.factors, limits); });
    return {std::move(g), std::move(info)};
  }

  if (kind == "quotient") {
    allow_keys(node, path, {"kind", "base", "ideal"});
    Built base = build(require(node, path, "base"), child(path, "base"), default_group, limits);
    const json& ideal_node = require(node, path, "ideal");
    const std::string ip = child(path, "ideal");
    ElementSet ideal;
    if (ideal_node.is_string()) {
      if (ideal_node.get<std::string>() != "graded_jacobson")
        throw SpecError(ip, "expected \"graded_jacobson\" or {\"generators\": [...]}");
      ideal = at(ip, [&] { return graded_jacobson_radical(base.grading, limits).elements; });
    } else {
      allow_keys(ideal_node, ip, {"generators"});
      const auto gens = elements_of(base.grading.ring(), require(ideal_node, ip, "generators"), child(ip, "generators"));
      ideal = two_sided_closure(base.grading.ring(), gens);
    }
    info.base = base.grading;
    info.kernel = ideal;
    GradedQuotient q = at(path, [&] { return graded_quotient(base.grading, ideal, limits); });
    return {std::move(q.grading), std::move(info)};
  }

  if (kind == "amalgamation") {
    allow_keys(node, path, {"kind", "a", "b", "f", "j"});
    Built a = build(require(node, path, "a"), child(path, "a"), default_group, limits);
    Built b = build(require(node, path, "b"), child(path, "b"), a.grading.group(), limits);
    const json& fnode = require(node, path, "f");
    const std::string fp = child(path, "f");
    std::vector<Element> f;
    if (fnode.is_string()) {
      if (fnode.get<std::string>() != "identity") throw SpecError(fp, "expected \"identity\" or a list of images");
      if (a.grading.ring().size() != b.grading.ring().size()) throw SpecError(fp, "identity needs |A| = |B|");
      for (Element x = 0; x < a.grading.ring().size(); ++x) f.push_back(x);
    } else {
      f = elements_of(b.grading.ring(), fnode, fp);
    }
    const auto jgens = elements_of(b.grading.ring(), require(node, path, "j"), child(path, "j"));
    AmalgamationSpec spec{a.grading, b.grading, f, two_sided_closure(b.grading.ring(), jgens)};
    AmalgamationResult r = at(path, [&] { return amalgamation(spec, limits); });
    info.amalgamation_a = a.grading;
    info.base = b.grading;
    Grading g = r.grading;
    info.amalgamation = std::move(r);
    return {std::move(g), std::move(info)};
  }

  throw SpecError(child(path, "kind"), "unknown ring kind '" + kind + "'");
}

ElementFact parse_fact(const FiniteRing& ring, const json& node, const std::string& path, std::size_t ideal_count) {
  allow_keys(node, path,
             {"element", "m", "homogeneous", "degree", "m_potent", "nilpotent", "unit", "graded_m_nil_clean",
              "graded_strongly_m_nil_clean", "graded_pi_regular", "lift_ideal", "lift_to"});
  ElementFact fact;
  const json& e = require(node, path, "element");
  fact.text = e.is_string() ? e.get<std::string>() : e.dump();
  fact.element = resolve_element(ring, e, child(path, "element"));
  if (auto* v = find(node, "m")) {
    const auto m = get_positive(*v, child(path, "m"));
    if (m < 2) throw SpecError(child(path, "m"), "m must be at least 2");
    fact.m = m;
  }
  auto flag = [&](const char* key, std::optional<bool>& out) {
    if (auto* v = find(node, key)) out = get_bool(*v, child(path, key));
  };
  flag("homogeneous", fact.homogeneous);
  flag("m_potent", fact.m_potent);
  flag("nilpotent", fact.nilpotent);
  flag("unit", fact.unit);
  flag("graded_m_nil_clean", fact.graded_m_nil_clean);
  flag("graded_strongly_m_nil_clean", fact.graded_strongly_m_nil_clean);
  flag("graded_pi_regular", fact.graded_pi_regular);
  if (auto* v = find(node, "degree")) {
    if (v->is_string() && v->get<std::string>() == "zero")
      fact.degree = std::optional<std::int64_t>{};
    else
      fact.degree = std::optional<std::int64_t>{get_int(*v, child(path, "degree"))};
  }
  if (auto* v = find(node, "lift_ideal")) {
    const auto i = get_int(*v, child(path, "lift_ideal"));
    if (i < 0 || static_cast<std::size_t>(i) >= ideal_count) throw SpecError(child(path, "lift_ideal"), "no such ideal");
    fact.lift_ideal = static_cast<std::size_t>(i);
  }
  if (auto* v = find(node, "lift_to")) fact.lift_to = resolve_element(ring, *v, child(path, "lift_to"));
  if (fact.lift_to && !fact.lift_ideal) throw SpecError(child(path, "lift_to"), "lift_to needs lift_ideal");
  return fact;
}

std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

const std::vector<std::string>& decision_checks() {
  static const std::vector<std::string> names{"graded_m_nil_clean", "graded_strongly_m_nil_clean"};
  return names;
}

Element resolve_element(const FiniteRing& ring, const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    const auto v = value.get<std::int64_t>();
    if (v < 0 || static_cast<std::size_t>(v) >= ring.size())
      throw SpecError(where, "element index " + std::to_string(v) + " out of range for " + ring.label());
    return static_cast<Element>(v);
  }
  if (value.is_string()) {
    if (auto e = find_element(ring, value.get<std::string>())) return *e;
    throw SpecError(where, "no element of " + ring.label() + " renders as '" + value.get<std::string>() + "'");
  }
  throw SpecError(where, "expected an element index or rendering");
}

GradingGroup group_from_json(const json& node, const std::string& path) {
  if (!node.is_object()) throw SpecError(path, "expected a group description object");
  const std::string kind = get_string(require(node, path, "kind"), child(path, "kind"));
  if (kind == "trivial") {
    allow_keys(node, path, {"kind"});
    return GradingGroup::trivial();
  }
  if (kind == "integer") {
    allow_keys(node, path, {"kind"});
    return GradingGroup::integers();
  }
  if (kind == "cyclic" || kind == "dihedral") {
    allow_keys(node, path, {"kind", "n"});
    const auto n = get_positive(require(node, path, "n"), child(path, "n"));
    if (n > 4096) throw SpecError(child(path, "n"), "group too large");
    return GradingGroup::finite(kind == "cyclic" ? make_cyclic(n) : make_dihedral(n));
  }
  if (kind == "product") {
    allow_keys(node, path, {"kind", "factors"});
    const auto& arr = get_array(require(node, path, "factors"), child(path, "factors"));
    if (arr.empty()) throw SpecError(child(path, "factors"), "need at least one factor");
    FiniteGroup g = make_cyclic(1);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const GradingGroup f = group_from_json(arr[i], child(child(path, "factors"), i));
      if (!f.is_finite()) throw SpecError(child(child(path, "factors"), i), "product factors must be finite");
      g = i == 0 ? f.finite_group() : direct_product(g, f.finite_group());
    }
    return GradingGroup::finite(std::move(g));
  }
  if (kind == "table") {
    allow_keys(node, path, {"kind", "order", "table", "label"});
    const auto order = get_positive(require(node, path, "order"), child(path, "order"));
    if (order > 4096) throw SpecError(child(path, "order"), "group too large");
    const std::string tp = child(path, "table");
    const auto& rows = get_array(require(node, path, "table"), tp);
    if (rows.size() != order) throw SpecError(tp, "expected " + std::to_string(order) + " rows");
    std::vector<FiniteGroup::Index> table;
    for (std::size_t i = 0; i < order; ++i) {
      const auto& row = get_array(rows[i], child(tp, i));
      if (row.size() != order) throw SpecError(child(tp, i), "expected " + std::to_string(order) + " entries");
      for (std::size_t j = 0; j < order; ++j) {
        const auto v = get_int(row[j], child(child(tp, i), j));
        if (v < 0 || v >= static_cast<std::int64_t>(order)) throw SpecError(child(child(tp, i), j), "entry out of range");
        table.push_back(static_cast<FiniteGroup::Index>(v));
      }
    }
    const std::string label = node.contains("label") ? get_string(node.at("label"), child(path, "label")) : "G";
    return at(path, [&] { return GradingGroup::finite(FiniteGroup(order, std::move(table), label)); });
  }
  throw SpecError(child(path, "kind"), "unknown group kind '" + kind + "'");
}

json group_to_json(const GradingGroup& group) {
  if (group.is_integer()) return {{"kind", "integer"}};
  const auto& g = group.finite_group();
  json rows = json::array();
  for (std::size_t i = 0; i < g.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.order(); ++j)
      row.push_back(g.multiply(static_cast<FiniteGroup::Index>(i), static_cast<FiniteGroup::Index>(j)));
    rows.push_back(std::move(row));
  }
  return {{"kind", "table"}, {"order", g.order()}, {"table", std::move(rows)}, {"label", g.label()}};
}

RingSpec parse_ring_spec(const json& doc, const Limits& limits) {
  const std::string root;
  allow_keys(doc, "/", {"name", "description", "m", "ring", "checks", "expect", "ideals", "elements", "group_facts"});
  Built built = build(require(doc, root, "ring"), "/ring", std::nullopt, limits);
  RingSpec spec(std::move(built.grading));
  spec.construction = std::move(built.info);
  spec.source = doc;
  spec.name = doc.contains("name") ? get_string(doc.at("name"), "/name") : "unnamed";
  if (doc.contains("description")) spec.description = get_string(doc.at("description"), "/description");
  if (doc.contains("m")) {
    const auto m = get_positive(doc.at("m"), "/m");
    if (m < 2) throw SpecError("/m", "m must be at least 2");
    spec.m = m;
  }
  const FiniteRing& ring = spec.grading.ring();

  if (auto* c = find(doc, "checks")) {
    if (c->is_string()) {
      if (c->get<std::string>() != "all") throw SpecError("/checks", "expected \"all\" or a list of check names");
    } else {
      const auto& arr = get_array(*c, "/checks");
      for (std::size_t i = 0; i < arr.size(); ++i) spec.checks.push_back(get_string(arr[i], child("/checks", i)));
    }
  }
  if (auto* e = find(doc, "expect")) {
    if (!e->is_object()) throw SpecError("/expect", "expected an object of check name to boolean");
    for (const auto& [key, value] : e->items()) {
      const auto& allowed = decision_checks();
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
        throw SpecError(child("/expect", key), "only decision checks take an expected value");
      spec.expect[key] = get_bool(value, child("/expect", key));
    }
  }
  if (auto* ideals = find(doc, "ideals")) {
    const auto& arr = get_array(*ideals, "/ideals");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string p = child("/ideals", i);
      allow_keys(arr[i], p, {"name", "generators"});
      const std::string name = arr[i].contains("name") ? get_string(arr[i].at("name"), child(p, "name")) : "ideal" + std::to_string(i);
      const auto gens = elements_of(ring, require(arr[i], p, "generators"), child(p, "generators"));
      spec.ideals.push_back({name, two_sided_closure(ring, gens)});
    }
  }
  if (auto* facts = find(doc, "elements")) {
    const auto& arr = get_array(*facts, "/elements");
    for (std::size_t i = 0; i < arr.size(); ++i)
      spec.elements.push_back(parse_fact(ring, arr[i], child("/elements", i), spec.ideals.size()));
  }
  if (auto* g = find(doc, "group_facts")) {
    allow_keys(*g, "/group_facts", {"m_minus_1_torsion_free"});
    if (g->contains("m_minus_1_torsion_free"))
      spec.expect_torsion_free = get_bool(g->at("m_minus_1_torsion_free"), "/group_facts/m_minus_1_torsion_free");
  }
  return spec;
}

RingSpec parse_ring_spec(const std::string& text, const Limits& limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError("line " + std::to_string(line_of_offset(text, e.byte)), e.what());
  }
  return parse_ring_spec(doc, limits);
}

RingSpec load_ring_spec(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw SpecError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ring_spec(buf.str(), limits);
  } catch (const SpecError& e) {
    throw SpecError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

json to_table_spec(const Grading& grading) {
  const FiniteRing& r = grading.ring();
  constexpr std::size_t kMaxExport = 1024;
  if (r.size() > kMaxExport) throw ResourceError("export_size", kMaxExport, r.size());
  json add = json::array();
  json mul = json::array();
  json labels = json::array();
  for (Element a = 0; a < r.size(); ++a) {
    json ra = json::array();
    json rm = json::array();
    for (Element b = 0; b < r.size(); ++b) {
      ra.push_back(r.add(a, b));
      rm.push_back(r.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
    labels.push_back(r.format(a));
  }
  json comps = json::array();
  for (const auto& c : grading.components()) comps.push_back({{"degree", c.degree.value}, {"generators", c.generators}});
  json ring = {{"kind", "table"}, {"size", r.size()}, {"add", std::move(add)}, {"mul", std::move(mul)},
               {"one", r.one()}, {"label", r.label()},
               {"grading", {{"group", group_to_json(grading.group())}, {"components", std::move(comps)}}}};
  // Distinct renderings keep string element references meaningful.
  std::set<std::string> distinct;
  for (const auto& l : labels) distinct.insert(l.get<std::string>());
  if (distinct.size() == r.size()) ring["labels"] = std::move(labels);
  return ring;
}

}  // namespace nilgrade
