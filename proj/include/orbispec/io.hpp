#pragma once
// Spec files and report emission: JSON schema for orbifold specifications
// (builtin names resolvable via "builtin:<name>"), plus deterministic TSV and
// JSON renderings of spectrum tables, strata censuses, and heat reports.

#include <orbispec/heat.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace orbispec {

// fixed 12-significant-digit rendering for all human-readable tables
inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline std::string rat_vec_string(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += rat_string(v[i]);
  }
  return s + ")";
}

// --- specification files ---------------------------------------------------
// Schema: {"name": str, "dim": int, "gram": [[rational str]],
//          "generators": [{"matrix": [[int]], "a": [rational str]}]}
// The translation part of each generator is matrix * a.

inline FlatOrbifoldSpec spec_from_json(const nlohmann::json& j, const std::string& context) {
  auto fail = [&](const std::string& msg) -> std::runtime_error {
    return std::runtime_error(context + ": " + msg);
  };
  if (!j.is_object()) throw fail("top level must be an object");
  for (const char* key : {"name", "dim", "gram", "generators"})
    if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");
  if (!j["name"].is_string()) throw fail("'name' must be a string");
  if (!j["dim"].is_number_integer()) throw fail("'dim' must be an integer");
  long d = j["dim"].get<long>();
  if (d < 1) throw fail("'dim' must be positive");

  auto rat_at = [&](const nlohmann::json& cell, const char* what) {
    if (!cell.is_string()) throw fail(std::string(what) + " entries must be rational strings");
    try {
      return parse_rat(cell.get<std::string>());
    } catch (const std::exception& e) {
      throw fail(std::string(what) + ": " + e.what());
    }
  };

  const auto& gram_j = j["gram"];
  if (!gram_j.is_array() || static_cast<long>(gram_j.size()) != d)
    throw fail("'gram' must be a dim x dim array");
  RatMat gram(d, d);
  for (long i = 0; i < d; ++i) {
    if (!gram_j[i].is_array() || static_cast<long>(gram_j[i].size()) != d)
      throw fail("'gram' must be a dim x dim array");
    for (long k = 0; k < d; ++k) gram(i, k) = rat_at(gram_j[i][k], "'gram'");
  }

  if (!j["generators"].is_array()) throw fail("'generators' must be an array");
  std::vector<AffineIsometry> gens;
  for (const auto& g : j["generators"]) {
    if (!g.is_object() || !g.contains("matrix") || !g.contains("a"))
      throw fail("each generator needs 'matrix' and 'a'");
    const auto& mj = g["matrix"];
    if (!mj.is_array() || static_cast<long>(mj.size()) != d)
      throw fail("generator 'matrix' must be dim x dim integers");
    IntMat m(d, d);
    for (long i = 0; i < d; ++i) {
      if (!mj[i].is_array() || static_cast<long>(mj[i].size()) != d)
        throw fail("generator 'matrix' must be dim x dim integers");
      for (long k = 0; k < d; ++k) {
        if (!mj[i][k].is_number_integer())
          throw fail("generator 'matrix' must be dim x dim integers");
        m(i, k) = mj[i][k].get<long>();
      }
    }
    const auto& aj = g["a"];
    if (!aj.is_array() || static_cast<long>(aj.size()) != d)
      throw fail("generator 'a' must have dim entries");
    RatVec a(d);
    for (long i = 0; i < d; ++i) a[i] = rat_at(aj[i], "generator 'a'");
    RatVec t = mul(m, a);
    gens.push_back(normalize_mod1(AffineIsometry(std::move(m), std::move(t))));
  }

  try {
    return make_orbifold(j["name"].get<std::string>(), std::move(gram), gens);
  } catch (const std::exception& e) {
    throw fail(std::string("validation failed: ") + e.what());
  }
}

inline nlohmann::json spec_to_json(const FlatOrbifoldSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["dim"] = spec.dim();
  nlohmann::json gram = nlohmann::json::array();
  for (long i = 0; i < spec.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (long k = 0; k < spec.dim(); ++k) row.push_back(rat_string(spec.lattice.gram(i, k)));
    gram.push_back(row);
  }
  j["gram"] = gram;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& f : spec.holonomy) {
    if (f.M.is_identity()) continue;
    nlohmann::json g;
    nlohmann::json m = nlohmann::json::array();
    for (long i = 0; i < spec.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (long k = 0; k < spec.dim(); ++k) row.push_back(f.M(i, k).get_si());
      m.push_back(row);
    }
    g["matrix"] = m;
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : a_of(f)) a.push_back(rat_string(x));
    g["a"] = a;
    gens.push_back(g);
  }
  j["generators"] = gens;
  return j;
}

// Resolves "builtin:<name>" through the catalog, anything else as a JSON file.
inline FlatOrbifoldSpec load_spec(const std::string& ref) {
  const std::string prefix = "builtin:";
  if (ref.rfind(prefix, 0) == 0) return catalog(ref.substr(prefix.size()));
  std::ifstream in(ref);
  if (!in) throw std::runtime_error(ref + ": cannot open spec file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error(ref + ": JSON parse error: " + e.what());
  }
  return spec_from_json(j, ref);
}

// --- spectrum tables -------------------------------------------------------

inline std::string spectrum_tsv(const SpectrumTable& t) {
  std::ostringstream os;
  os << "# spec\t" << t.name << "\tp\t" << t.p << "\tcutoff\t" << rat_string(t.cutoff)
     << "\n";
  os << "q_num\tq_den\tlambda\tmultiplicity\n";
  for (const auto& r : t.rows)
    os << r.q.get_num().get_str() << '\t' << r.q.get_den().get_str() << '\t'
       << format_double(r.lambda) << '\t' << r.multiplicity << '\n';
  return os.str();
}

inline nlohmann::json spectrum_json(const SpectrumTable& t) {
  nlohmann::json j;
  j["spec"] = t.name;
  j["p"] = t.p;
  j["cutoff"] = rat_string(t.cutoff);
  j["max_residual"] = t.max_residual;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json row;
    row["q"] = rat_string(r.q);
    row["lambda"] = r.lambda;
    row["multiplicity"] = r.multiplicity;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

// --- strata censuses -------------------------------------------------------

inline std::string strata_tsv(const FlatOrbifoldSpec& spec,
                              const std::vector<SingularStratum>& census) {
  std::ostringstream os;
  os << "# spec\t" << spec.name << "\torientability\t"
     << orientability_string(orientability(spec)) << "\n";
  os << "id\tdim\tcodim\tiso_order\torbit_size\tcomponents\tvolume\tvolume_value\t"
        "orientation_preserving\tprimary\tbase_point\n";
  for (size_t i = 0; i < census.size(); ++i) {
    const auto& s = census[i];
    os << i << '\t' << s.dim << '\t' << s.codim << '\t' << s.isotropy_order << '\t'
       << s.orbit_size << '\t'
       << (s.component_count < 0 ? std::string("unrefined")
                                 : std::to_string(s.component_count))
       << '\t' << s.volume.str() << '\t' << format_double(s.volume.to_double()) << '\t'
       << (s.orientation_preserving_isotropy ? 1 : 0) << '\t' << (s.primary ? 1 : 0) << '\t'
       << rat_vec_string(s.base_point) << '\n';
  }
  return os.str();
}

inline nlohmann::json strata_json(const FlatOrbifoldSpec& spec,
                                  const std::vector<SingularStratum>& census) {
  nlohmann::json j;
  j["spec"] = spec.name;
  j["orientability"] = orientability_string(orientability(spec));
  nlohmann::json rows = nlohmann::json::array();
  for (size_t i = 0; i < census.size(); ++i) {
    const auto& s = census[i];
    nlohmann::json row;
    row["id"] = i;
    row["dim"] = s.dim;
    row["codim"] = s.codim;
    row["isotropy_order"] = s.isotropy_order;
    row["orbit_size"] = s.orbit_size;
    if (s.component_count < 0)
      row["components"] = "unrefined";
    else
      row["components"] = s.component_count;
    row["volume"] = s.volume.str();
    row["volume_value"] = s.volume.to_double();
    row["gram_det"] = rat_string(s.gram_det);
    row["orientation_preserving"] = s.orientation_preserving_isotropy;
    row["primary"] = s.primary;
    row["base_point"] = rat_vec_string(s.base_point);
    rows.push_back(row);
  }
  j["strata"] = rows;
  return j;
}

// --- heat reports ----------------------------------------------------------

inline std::string heat_tsv(const HeatReport& r, const HeatTraceCheck* check = nullptr) {
  std::ostringstream os;
  os << "# spec\t" << r.spec_name << "\tp\t" << r.p << "\n";
  os << "a0\t" << r.a0.str() << '\t' << format_double(r.a0.to_double()) << '\n';
  for (size_t i = 0; i < r.stratum_b0.size(); ++i)
    os << "b0\t" << i << '\t' << r.stratum_b0[i].str() << '\t'
       << format_double(r.stratum_b0[i].to_double()) << '\n';
  os << "B_plus\t" << r.parity.b_plus.str() << '\t'
     << (r.parity.k_plus ? std::to_string(*r.parity.k_plus) : std::string("none")) << '\n';
  os << "B_minus\t" << r.parity.b_minus.str() << '\t'
     << (r.parity.k_minus ? std::to_string(*r.parity.k_minus) : std::string("none")) << '\n';
  for (const auto& [exp, val] : r.c)
    os << "c\t" << rat_string(exp) << '\t' << format_double(val) << '\n';
  if (check)
    for (const auto& row : check->rows)
      os << "trace_check\t" << format_double(row.t) << '\t'
         << format_double(row.truncated_sum) << '\t' << format_double(row.predicted) << '\t'
         << format_double(row.rel_error) << '\t' << format_double(row.tail_bound) << '\n';
  return os.str();
}

inline nlohmann::json heat_json(const HeatReport& r, const HeatTraceCheck* check = nullptr) {
  nlohmann::json j;
  j["spec"] = r.spec_name;
  j["p"] = r.p;
  j["a0"] = {{"exact", r.a0.str()}, {"value", r.a0.to_double()}};
  nlohmann::json b0 = nlohmann::json::array();
  for (size_t i = 0; i < r.stratum_b0.size(); ++i)
    b0.push_back({{"id", i},
                  {"exact", r.stratum_b0[i].str()},
                  {"value", r.stratum_b0[i].to_double()}});
  j["stratum_b0"] = b0;
  j["B_plus"] = {{"exact", r.parity.b_plus.str()}, {"value", r.parity.b_plus.to_double()}};
  j["B_minus"] = {{"exact", r.parity.b_minus.str()},
                  {"value", r.parity.b_minus.to_double()}};
  if (r.parity.k_plus)
    j["k_plus"] = *r.parity.k_plus;
  else
    j["k_plus"] = nullptr;
  if (r.parity.k_minus)
    j["k_minus"] = *r.parity.k_minus;
  else
    j["k_minus"] = nullptr;
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [exp, val] : r.c) c[rat_string(exp)] = val;
  j["c"] = c;
  if (check) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : check->rows)
      rows.push_back({{"t", row.t},
                      {"truncated_sum", row.truncated_sum},
                      {"predicted", row.predicted},
                      {"rel_error", row.rel_error},
                      {"tail_bound", row.tail_bound}});
    j["trace_check"] = {{"cutoff", rat_string(check->cutoff)}, {"rows", rows}};
  }
  return j;
}

}  // namespace orbispec
