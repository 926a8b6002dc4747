#include "twmack/job.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twmack/errors.hpp"
#include "twmack/instances.hpp"
#include "twmack/span.hpp"
#include "twmack/witness.hpp"

namespace twmack {

namespace {

using Json = nlohmann::ordered_json;

GroupPtr parse_group(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw validation_error("group spec needs a \"kind\"");
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "cyclic") return cyclic_group(spec.at("n").get<int>());
  if (kind == "dihedral") return dihedral_group(spec.at("n").get<int>());
  if (kind == "symmetric") return symmetric_group(spec.at("n").get<int>());
  if (kind == "product") {
    const auto& factors = spec.at("factors");
    if (!factors.is_array() || factors.size() < 2)
      throw validation_error("product group needs at least two factors");
    GroupPtr acc = parse_group(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) acc = product_group(acc, parse_group(factors[i]));
    return acc;
  }
  if (kind == "table")
    return group_from_table(spec.at("table").get<std::vector<std::vector<int>>>());
  throw validation_error("unknown group kind: " + kind);
}

RingPtr parse_ring(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw validation_error("ring spec needs a \"kind\"");
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "gf") {
    int p = spec.at("p").get<int>(), k = spec.value("k", 1);
    if (spec.contains("modulus"))
      return ring_from_field(FiniteField::make(p, k, spec.at("modulus").get<std::vector<int>>()));
    return ring_from_field(FiniteField::make(p, k));
  }
  if (kind == "zmod") return zmod_ring(spec.at("n").get<int>());
  if (kind == "product") {
    const auto& factors = spec.at("factors");
    if (!factors.is_array() || factors.size() < 2)
      throw validation_error("product ring needs at least two factors");
    RingPtr acc = parse_ring(factors[0]);
    for (size_t i = 1; i < factors.size(); ++i) acc = product_ring(acc, parse_ring(factors[i]));
    return acc;
  }
  throw validation_error("unknown ring kind: " + kind);
}

GRingPtr parse_gring(const Json& job, const GroupPtr& group) {
  if (!job.contains("ring")) throw validation_error("this task needs a \"ring\"");
  RingPtr ring = parse_ring(job.at("ring"));
  Json action = job.value("action", Json{{"kind", "trivial"}});
  std::string kind = action.at("kind").get<std::string>();
  if (kind == "trivial") return trivial_gring(ring, group);
  if (kind == "frobenius") {
    if (!ring->field) throw validation_error("a frobenius action needs a field ring");
    return frobenius_gring(ring->field, group, action.value("power", 1));
  }
  if (kind == "table")
    return make_gring(ring, group, action.at("theta").get<std::vector<std::vector<int>>>());
  throw validation_error("unknown action kind: " + kind);
}

bool is_cyclic_of(const GroupPtr& group, int n) {
  if (group->order != n) return false;
  for (int g = 0; g < group->order; ++g)
    if (static_cast<int>(subgroup_generated(group, {g}).order()) == n) return true;
  return n == 1;
}

Subgroup parse_subgroup(const Json& gens, const GroupPtr& group, const std::string& name) {
  if (!gens.is_array()) throw validation_error("subgroup " + name + " must be a generator list");
  std::vector<int> generators;
  for (const auto& e : gens) {
    if (e.is_number_integer()) {
      generators.push_back(e.get<int>());
    } else if (e.is_string()) {
      // cycle notation; only meaningful for symmetric groups
      int degree = 1;
      while (degree <= 5) {
        int order = 1;
        for (int i = 2; i <= degree; ++i) order *= i;
        if (order == group->order) break;
        ++degree;
      }
      if (degree > 5)
        throw validation_error("cycle notation requires a symmetric group");
      generators.push_back(symmetric_element_from_cycles(degree, e.get<std::string>()));
    } else {
      throw validation_error("subgroup generators must be indices or cycle strings");
    }
  }
  return subgroup_generated(group, generators);
}

Json matrix_json(const IntMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows; ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json map_json(const AbMap& m) {
  if (m.source.kind == AbValue::Kind::Free) return matrix_json(m.matrix);
  return Json(m.table);
}

Json value_json(const AbValue& v) {
  Json out;
  out["label"] = v.label;
  if (v.kind == AbValue::Kind::Free)
    out["free_rank"] = v.rank;
  else
    out["finite_order"] = v.finite->size;
  return out;
}

Json mackey_json(const MackeyData& m) {
  Json out;
  out["label"] = m.label;
  Json values = Json::array();
  for (int hi = 0; hi < m.lattice.size(); ++hi) {
    Json v = value_json(m.values[hi]);
    Json elems = Json::array();
    for (int e : m.lattice.subgroups[hi].elements) elems.push_back(e);
    v["subgroup"] = std::move(elems);
    values.push_back(std::move(v));
  }
  out["values"] = std::move(values);
  Json res = Json::object(), tr = Json::object();
  for (const auto& [key, map] : m.res)
    res[std::to_string(key.first) + "<=" + std::to_string(key.second)] = map_json(map);
  for (const auto& [key, map] : m.tr)
    tr[std::to_string(key.first) + "<=" + std::to_string(key.second)] = map_json(map);
  out["res"] = std::move(res);
  out["tr"] = std::move(tr);
  Json conj = Json::object();
  for (int g = 0; g < m.group->order; ++g)
    for (int hi = 0; hi < m.lattice.size(); ++hi)
      conj["g" + std::to_string(g) + ",H" + std::to_string(hi)] = map_json(m.conj[g][hi]);
  out["conj"] = std::move(conj);
  return out;
}

Json axioms_json(const AxiomReport& report) {
  Json out;
  Json checked = Json::object();
  for (const auto& [axiom, count] : report.checked) checked[axiom] = count;
  out["instances"] = std::move(checked);
  Json verdicts = Json::object();
  for (const auto& [axiom, count] : report.checked)
    verdicts[axiom] = report.axiom_passed(axiom) ? "pass" : "fail";
  out["per_axiom"] = std::move(verdicts);
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back(Json{{"axiom", f.axiom}, {"witness", f.witness}});
  out["failures"] = std::move(failures);
  return out;
}

// ---------------------------------------------------------------- rendering

void render_json(std::ostream& os, const Json& j, int indent);

bool is_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) return false;
    for (const auto& v : row)
      if (!v.is_number()) return false;
  }
  return true;
}

void render_matrix(std::ostream& os, const Json& j, int indent) {
  size_t width = 1;
  for (const auto& row : j)
    for (const auto& v : row) width = std::max(width, v.dump().size());
  for (const auto& row : j) {
    os << std::string(indent, ' ') << "[";
    for (const auto& v : row) {
      std::string s = v.dump();
      os << " " << std::string(width - s.size(), ' ') << s;
    }
    os << " ]\n";
  }
}

void render_json(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && is_matrix(value)) ||
          (value.is_array() && !value.empty() && value[0].is_object())) {
        os << pad << key << ":\n";
        if (value.is_array() && is_matrix(value)) {
          render_matrix(os, value, indent + 2);
        } else if (value.is_array()) {
          for (const auto& item : value) {
            render_json(os, item, indent + 2);
            os << pad << "  -\n";
          }
        } else {
          render_json(os, value, indent + 2);
        }
      } else {
        os << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

std::string render_report(const Json& full) {
  std::ostringstream os;
  for (const auto& [section, content] : full.items()) {
    if (section == "spec_echo") continue;
    os << "== " << section << " ==\n";
    render_json(os, content, 2);
  }
  return os.str();
}

// ------------------------------------------------------------------- tasks

struct TaskResult {
  Json results = Json::object();
  Json verdicts = Json::object();
  bool ok = true;
};

TaskResult task_verify_mackey(const Json& job, const GroupPtr& group, const JobOptions& opts) {
  TaskResult out;
  const auto& task = job.at("task");
  std::string instance = task.value("instance", "k0");
  MackeyData data;
  if (instance == "burnside") {
    data = burnside_mackey(group);
  } else if (instance == "k0") {
    TwistedContext ctx(parse_gring(job, group));
    data = k0_twisted_mackey(ctx);
  } else if (instance == "units") {
    const auto& ring = job.at("ring");
    if (ring.at("kind").get<std::string>() != "gf")
      throw validation_error("the units instance needs ring gf(p,k)");
    int k = ring.value("k", 1);
    if (!is_cyclic_of(group, k))
      throw validation_error("the units instance needs group cyclic(k) matching the field degree");
    data = units_galois_mackey(ring.at("p").get<int>(), k);
  } else if (instance == "endomorphism") {
    TwistedContext ctx(parse_gring(job, group));
    auto endo = endomorphism_mackey(ctx);
    out.results["squares_commute"] = endo.squares_commute;
    out.verdicts["squares"] = endo.squares_commute ? "pass" : "fail";
    if (!endo.squares_commute) {
      out.ok = false;
      out.results["squares_detail"] = endo.detail;
    }
    data = std::move(endo.data);
  } else if (instance == "dress-kuku") {
    TwistedContext ctx(parse_gring(job, group));
    auto cmp = dress_kuku_compare(ctx);
    out.results["pipelines_identical"] = cmp.identical;
    out.verdicts["comparison"] = cmp.identical ? "pass" : "fail";
    if (!cmp.identical) {
      out.ok = false;
      out.results["comparison_detail"] = cmp.detail;
    }
    data = std::move(cmp.twisted);
  } else if (instance == "quillen") {
    if (!opts.allow_external_data)
      throw unsupported_error("the quillen instance uses external data; pass "
                              "--allow-external-data to enable it");
    const auto& ring = job.at("ring");
    int k = ring.value("k", 1);
    if (!is_cyclic_of(group, k))
      throw validation_error("the quillen instance needs group cyclic(k) matching the field degree");
    data = quillen_kn_instance(ring.at("p").get<int>(), k, task.value("i", 1));
  } else {
    throw validation_error("unknown verify-mackey instance: " + instance);
  }
  auto report = check_axioms(data);
  out.results["mackey"] = mackey_json(data);
  out.results["axioms"] = axioms_json(report);
  out.verdicts["axioms"] = report.all_passed() ? "pass" : "fail";
  if (!report.all_passed()) out.ok = false;
  return out;
}

TaskResult task_k0(const Json& job, const GroupPtr& group) {
  TaskResult out;
  TwistedContext ctx(parse_gring(job, group));
  auto lat = build_lattice(group, group->order);
  Json per_sub = Json::array();
  for (int hi = 0; hi < lat.size(); ++hi) {
    const auto& k0 = ctx.k0(lat.subgroups[hi]);
    Json entry;
    Json elems = Json::array();
    for (int e : lat.subgroups[hi].elements) elems.push_back(e);
    entry["subgroup"] = std::move(elems);
    entry["algebra_dim"] = k0.algebra->dim;
    entry["blocks"] = k0.rank();
    Json blocks = Json::array();
    int total = 0;
    for (int c = 0; c < k0.rank(); ++c) {
      const auto& b = k0.blocks[c];
      Json jb;
      jb["block_dim"] = b.block_dim;
      jb["center_degree"] = b.center_field_dim;
      jb["matrix_size"] = b.matrix_size;
      jb["simple_dim"] = b.simple_dim;
      Json idem = Json::array();
      for (int v : k0.idempotents[c]) idem.push_back(v);
      jb["idempotent"] = std::move(idem);
      blocks.push_back(std::move(jb));
      total += b.matrix_size * b.matrix_size * b.center_field_dim;
    }
    entry["blocks_detail"] = std::move(blocks);
    entry["wedderburn_dimension_check"] = total == k0.algebra->dim;
    if (total != k0.algebra->dim) out.ok = false;
    per_sub.push_back(std::move(entry));
  }
  out.results["k0"] = std::move(per_sub);
  out.verdicts["wedderburn"] = out.ok ? "pass" : "fail";
  return out;
}

TaskResult task_burnside(const GroupPtr& group) {
  TaskResult out;
  auto lat = build_lattice(group, group->order);
  Json marks = Json::array();
  for (int c = 0; c < lat.num_classes(); ++c) {
    auto cosets = coset_space(lat.subgroups[lat.class_reps[c]]);
    Json row = Json::array();
    for (long long v : marks_vector(cosets.set, lat)) row.push_back(v);
    marks.push_back(std::move(row));
  }
  out.results["table_of_marks"] = std::move(marks);

  bool rank_ok = true;
  Json ranks = Json::array();
  for (int a = 0; a < lat.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < lat.size(); ++b) {
      auto basis =
          burnside_hom_basis(coset_space(lat.subgroups[a]).set, coset_space(lat.subgroups[b]).set);
      auto dcs = double_coset_reps(lat.subgroups[a], lat.subgroups[b], full_subgroup(group));
      row.push_back(basis.size());
      if (basis.size() != dcs.size()) rank_ok = false;
    }
    ranks.push_back(std::move(row));
  }
  out.results["hom_basis_ranks"] = std::move(ranks);
  out.results["ranks_match_double_cosets"] = rank_ok;
  out.verdicts["hom_rank"] = rank_ok ? "pass" : "fail";
  out.ok = rank_ok;
  return out;
}

TaskResult task_double_cosets(const Json& job, const GroupPtr& group) {
  TaskResult out;
  const auto& task = job.at("task");
  auto h = parse_subgroup(task.at("H"), group, "H");
  auto j = parse_subgroup(task.at("J"), group, "J");
  auto k = parse_subgroup(task.at("K"), group, "K");
  if (!h.contains_subgroup(j) || !h.contains_subgroup(k))
    throw validation_error("double-cosets requires J <= H and K <= H");
  auto cosets = double_coset_reps(j, k, h);
  Json list = Json::array();
  for (const auto& dc : cosets) list.push_back(Json{{"rep", dc.rep}, {"size", dc.size}});
  out.results["double_cosets"] = std::move(list);

  auto blocks = refined_transversal(j, k, h);
  Json trans = Json::array();
  int rhs = 0;
  for (const auto& b : blocks) {
    Json jb;
    jb["rep"] = b.rep;
    jb["betas"] = b.betas;
    trans.push_back(std::move(jb));
    rhs += static_cast<int>(b.betas.size());
  }
  out.results["refined_transversal"] = std::move(trans);
  int lhs = h.order() / j.order();
  out.results["index_H_J"] = lhs;
  out.results["sum_of_indices"] = rhs;
  out.verdicts["cardinality_identity"] = lhs == rhs ? "pass" : "fail";
  out.ok = lhs == rhs;
  return out;
}

TaskResult task_auslander(const Json& job, const GroupPtr& group) {
  TaskResult out;
  auto gring = parse_gring(job, group);
  auto lat = build_lattice(group, group->order);
  bool all_iso = true;
  Json per_sub = Json::array();
  for (int hi = 0; hi < lat.size(); ++hi) {
    auto a = auslander_map(gring, lat.subgroups[hi]);
    Json entry;
    Json elems = Json::array();
    for (int e : lat.subgroups[hi].elements) elems.push_back(e);
    entry["subgroup"] = std::move(elems);
    entry["verdict"] = a.isomorphism ? "isomorphism" : "not an isomorphism";
    entry["image_rank"] = a.image_rank;
    entry["domain_dim"] = a.domain_dim;
    entry["codomain_dim"] = a.codomain_dim;
    entry["fixed_subring_order"] = static_cast<int>(a.fixed.to_parent.size());
    per_sub.push_back(std::move(entry));
    all_iso = all_iso && a.isomorphism;
  }
  out.results["auslander"] = std::move(per_sub);

  TwistedContext ctx(gring);
  const auto& k0 = ctx.k0(full_subgroup(group));
  out.results["full_group_k0_blocks"] = k0.rank();
  out.verdicts["isomorphism"] = all_iso ? "pass" : "fail";
  out.ok = all_iso;
  return out;
}

TaskResult task_decompose(const Json& job, const GroupPtr& group) {
  TaskResult out;
  const auto& task = job.at("task");
  auto gring = parse_gring(job, group);
  TwistedContext ctx(gring);
  auto h = parse_subgroup(task.at("H"), group, "H");
  auto j = parse_subgroup(task.at("J"), group, "J");
  auto k = parse_subgroup(task.at("K"), group, "K");
  if (!h.contains_subgroup(j) || !h.contains_subgroup(k))
    throw validation_error("decompose requires J <= H and K <= H");
  auto report = mackey_decomposition_witness(ctx, j, k, h);
  Json trans = Json::array();
  for (const auto& block : refined_transversal(j, k, h)) {
    Json jb;
    jb["rep"] = block.rep;
    jb["betas"] = block.betas;
    trans.push_back(std::move(jb));
  }
  out.results["refined_transversal"] = std::move(trans);
  out.results["double_cosets"] = report.double_cosets;
  out.results["checked_pairs"] = report.checked_pairs;
  out.verdicts["left_module_isomorphism"] = report.left_module_iso ? "pass" : "fail";
  out.verdicts["bimodule_squares"] = report.bimodule_commutes ? "pass" : "fail";
  out.verdicts["k0_classes_equal"] = report.k0_match ? "pass" : "fail";
  if (!report.passed()) {
    out.ok = false;
    out.results["failure_detail"] = report.failure_detail;
  }
  return out;
}

} // namespace

JobOutcome run_job_text(const std::string& json_text, const JobOptions& options) {
  JobOutcome outcome;
  Json report;
  report["spec_echo"] = Json::object();
  report["results"] = Json::object();
  report["verdicts"] = Json::object();
  report["timings"] = Json::object();
  try {
    Json job = Json::parse(json_text);
    report["spec_echo"] = job;
    bool emit_timings = false;
    if (job.contains("options")) emit_timings = job["options"].value("emit_timings", false);

    auto t0 = std::chrono::steady_clock::now();
    GroupPtr group = parse_group(job.at("group"));
    if (group->order > options.max_group_order)
      throw validation_error("group order exceeds --max-group-order");

    if (!job.contains("task")) throw validation_error("job needs a \"task\"");
    std::string kind = job.at("task").at("kind").get<std::string>();
    TaskResult result;
    if (kind == "verify-mackey")
      result = task_verify_mackey(job, group, options);
    else if (kind == "k0")
      result = task_k0(job, group);
    else if (kind == "burnside")
      result = task_burnside(group);
    else if (kind == "double-cosets")
      result = task_double_cosets(job, group);
    else if (kind == "auslander")
      result = task_auslander(job, group);
    else if (kind == "decompose")
      result = task_decompose(job, group);
    else
      throw validation_error("unknown task kind: " + kind);

    report["results"] = std::move(result.results);
    report["verdicts"] = std::move(result.verdicts);
    report["verdicts"]["overall"] = result.ok ? "pass" : "fail";
    if (emit_timings) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
      report["timings"][kind] = ms;
    }
    outcome.exit_code = result.ok ? 0 : 1;
  } catch (const validation_error& e) {
    report["verdicts"] = Json{{"error", e.what()}, {"overall", "invalid"}};
    outcome.exit_code = 2;
  } catch (const unsupported_error& e) {
    report["verdicts"] = Json{{"error", e.what()}, {"overall", "unsupported"}};
    outcome.exit_code = 3;
  } catch (const check_error& e) {
    report["verdicts"] = Json{{"error", e.what()}, {"overall", "fail"}};
    outcome.exit_code = 1;
  } catch (const Json::exception& e) {
    report["verdicts"] = Json{{"error", e.what()}, {"overall", "invalid"}};
    outcome.exit_code = 2;
  }
  outcome.json_report = report.dump(2) + "\n";
  outcome.text_report = render_report(report);
  return outcome;
}

JobOutcome run_job_file(const std::string& path, const JobOptions& options) {
  std::ifstream in(path);
  if (!in) {
    JobOutcome outcome;
    outcome.exit_code = 2;
    outcome.text_report = "cannot open job file: " + path + "\n";
    outcome.json_report = "{}\n";
    return outcome;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return run_job_text(buffer.str(), options);
}

} // namespace twmack
