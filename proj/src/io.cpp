#include "onepmac/io.hpp"

#include <fstream>
#include <sstream>

#include "onepmac/errors.hpp"

namespace onepmac {

namespace {

const json& need(const json& j, const char* key, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(what + ": missing field '" + key + "'");
  return *it;
}

const json& need_array(const json& j, const char* key, const std::string& what) {
  const json& v = need(j, key, what);
  if (!v.is_array()) throw ParseError(what + ": field '" + key + "' must be an array");
  return v;
}

int need_int(const json& j, const char* key, const std::string& what) {
  const json& v = need(j, key, what);
  if (!v.is_number_integer()) throw ParseError(what + ": field '" + key + "' must be an integer");
  return v.get<int>();
}

std::string where(const std::string& field, std::size_t k) {
  return field + "[" + std::to_string(k) + "]";
}

Rational rational_entry(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (v.is_number()) return rationalize(v.get<double>());
  throw ParseError(path + ": expected a number or a rational string");
}

double real_entry(const json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return rational_entry(v, path).get_d();
  throw ParseError(path + ": expected a number");
}

AlphabetSpec alphabets_from_json(const json& j, const std::string& what) {
  const json& in = need_array(j, "inputs", what);
  std::vector<int> sizes;
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (!in[k].is_number_integer()) throw ParseError(what + ": " + where("inputs", k) + " must be an integer");
    sizes.push_back(in[k].get<int>());
  }
  try {
    return AlphabetSpec(sizes, need_int(j, "output", what));
  } catch (const ShapeMismatch& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::vector<cplx> complex_pair_list(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 2) throw ParseError(path + ": expected [re, im]");
  return {cplx(real_entry(v[0], path), real_entry(v[1], path))};
}

cplx complex_entry(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  return complex_pair_list(v, path)[0];
}

json complex_to_json(cplx c) { return json::array({c.real(), c.imag()}); }

}  // namespace

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Report the line and column of the byte offset.
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream os;
    os << source << ":" << line << ":" << col << ": malformed JSON (" << e.what() << ")";
    throw ParseError(os.str());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

RationalVector rational_probs_from_json(const json& j) {
  const json& probs = need_array(j, "probs", "MAC");
  RationalVector out;
  for (std::size_t k = 0; k < probs.size(); ++k) out.push_back(rational_entry(probs[k], "MAC: " + where("probs", k)));
  return out;
}

Mac mac_from_json(const json& j) {
  const AlphabetSpec alph = alphabets_from_json(j, "MAC");
  const json& probs = need_array(j, "probs", "MAC");
  std::vector<double> p;
  for (std::size_t k = 0; k < probs.size(); ++k) p.push_back(real_entry(probs[k], "MAC: " + where("probs", k)));
  return Mac(alph, std::move(p));
}

json to_json(const Mac& mac) {
  return json{{"inputs", mac.alphabets().input_sizes},
              {"output", mac.alphabets().output_size},
              {"probs", mac.probs()}};
}

LinearInequality inequality_from_json(const json& j) {
  const AlphabetSpec alph = alphabets_from_json(j, "inequality");
  const json& c = need_array(j, "coeffs", "inequality");
  RationalVector coeffs;
  for (std::size_t k = 0; k < c.size(); ++k) coeffs.push_back(rational_entry(c[k], "inequality: " + where("coeffs", k)));
  const Rational bound = rational_entry(need(j, "bound", "inequality"), "inequality: bound");
  try {
    return LinearInequality(alph, std::move(coeffs), bound);
  } catch (const ShapeMismatch& e) {
    throw ParseError(std::string("inequality: ") + e.what());
  }
}

json to_json(const LinearInequality& ineq) {
  json coeffs = json::array();
  for (const auto& c : ineq.coeffs) coeffs.push_back(to_string(c));
  return json{{"inputs", ineq.alphabets.input_sizes},
              {"output", ineq.alphabets.output_size},
              {"coeffs", coeffs},
              {"bound", to_string(ineq.bound)}};
}

json to_json(const Facet& f) {
  json n = json::array();
  for (const auto& c : f.normal) n.push_back(to_string(c));
  return json{{"normal", n}, {"offset", to_string(f.offset)}};
}

json to_json(const RationalPolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices) {
    json row = json::array();
    for (const auto& c : v) row.push_back(to_string(c));
    verts.push_back(row);
  }
  json out{{"dim", p.dim}, {"vertices", verts}};
  if (p.facets) {
    json fs = json::array();
    for (const auto& f : *p.facets) fs.push_back(to_json(f));
    out["facets"] = fs;
  }
  return out;
}

RationalPolytope polytope_from_json(const json& j) {
  RationalPolytope p;
  p.dim = need_int(j, "dim", "polytope");
  const json& verts = need_array(j, "vertices", "polytope");
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (!verts[k].is_array()) throw ParseError("polytope: " + where("vertices", k) + " must be an array");
    RationalVector v;
    for (std::size_t t = 0; t < verts[k].size(); ++t)
      v.push_back(rational_entry(verts[k][t], "polytope: " + where(where("vertices", k), t)));
    p.vertices.push_back(std::move(v));
  }
  if (j.contains("facets")) {
    const json& fs = need_array(j, "facets", "polytope");
    std::vector<Facet> facets;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const std::string ctx = "polytope: " + where("facets", k);
      Facet f;
      const json& n = need_array(fs[k], "normal", ctx);
      for (std::size_t t = 0; t < n.size(); ++t) f.normal.push_back(rational_entry(n[t], ctx + ".normal"));
      f.offset = rational_entry(need(fs[k], "offset", ctx), ctx + ".offset");
      facets.push_back(std::move(f));
    }
    p.facets = std::move(facets);
  }
  return p;
}

json matrix_to_json(const CMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json r = json::array(), c = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      r.push_back(m(i, k).real());
      c.push_back(m(i, k).imag());
    }
    re.push_back(r);
    im.push_back(c);
  }
  return json{{"re", re}, {"im", im}};
}

CMatrix matrix_from_json(const json& j, const std::string& what) {
  const json& re = need_array(j, "re", what);
  const std::size_t n = re.size();
  const bool has_im = j.contains("im");
  const json im = has_im ? need_array(j, "im", what) : json::array();
  if (has_im && im.size() != n) throw ParseError(what + ": 're' and 'im' have different row counts");
  const std::size_t cols = n ? (re[0].is_array() ? re[0].size() : 0) : 0;
  CMatrix m(n, cols);
  for (std::size_t r = 0; r < n; ++r) {
    if (!re[r].is_array() || re[r].size() != cols) throw ParseError(what + ": " + where("re", r) + " has wrong length");
    if (has_im && (!im[r].is_array() || im[r].size() != cols))
      throw ParseError(what + ": " + where("im", r) + " has wrong length");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = cplx(real_entry(re[r][c], what + ": " + where(where("re", r), c)),
                     has_im ? real_entry(im[r][c], what + ": " + where(where("im", r), c)) : 0.0);
  }
  return m;
}

OneParticleState state_from_json(const json& j) {
  const int dim = need_int(j, "dim", "state");
  const CMatrix m = matrix_from_json(j, "state");
  if (m.rows() != dim || m.cols() != dim)
    throw ParseError("state: 'dim' is " + std::to_string(dim) + " but the matrix is " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  return OneParticleState(m);
}

json to_json(const OneParticleState& s) {
  json out = matrix_to_json(s.matrix());
  out["dim"] = s.dim();
  return out;
}

Encoder encoder_from_json(const json& j) {
  const json& type = need(j, "type", "encoding");
  if (!type.is_string()) throw ParseError("encoding: 'type' must be a string");
  const std::string t = type.get<std::string>();
  if (t == "phases") {
    const json& ph = need_array(j, "phases", "encoding");
    std::vector<std::vector<double>> phases;
    for (std::size_t k = 0; k < ph.size(); ++k) {
      if (!ph[k].is_array()) throw ParseError("encoding: " + where("phases", k) + " must be an array");
      std::vector<double> row;
      for (std::size_t a = 0; a < ph[k].size(); ++a) row.push_back(real_entry(ph[k][a], "encoding: phases"));
      phases.push_back(std::move(row));
    }
    return phase_encoder(phases);
  }
  if (t == "product") {
    const json& chans = need_array(j, "channels", "encoding");
    ProductEncoder enc;
    for (std::size_t p = 0; p < chans.size(); ++p) {
      std::vector<NpChannel> row;
      for (std::size_t a = 0; a < chans[p].size(); ++a) {
        const std::string ctx = "encoding: " + where(where("channels", p), a);
        std::vector<NpBranch> branches;
        for (const auto& br : need_array(chans[p][a], "branches", ctx))
          branches.push_back({real_entry(need(br, "w", ctx), ctx + ".w"),
                              complex_entry(need(br, "y", ctx), ctx + ".y"),
                              complex_entry(need(br, "z", ctx), ctx + ".z")});
        row.emplace_back(std::move(branches));
      }
      enc.table.push_back(std::move(row));
    }
    return enc;
  }
  if (t == "kraus") {
    JointEncoder enc;
    for (const auto& v : need_array(j, "inputs", "encoding")) enc.input_sizes.push_back(v.get<int>());
    const json& groups = need_array(j, "groups", "encoding");
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const std::string ctx = "encoding: " + where("groups", g);
      GroupEncoder ge;
      for (const auto& p : need_array(groups[g], "parties", ctx)) ge.parties.push_back(p.get<int>() - 1);
      const json& chans = need_array(groups[g], "channels", ctx);
      for (std::size_t a = 0; a < chans.size(); ++a) {
        std::vector<CMatrix> ops;
        const json& kr = need_array(chans[a], "kraus", ctx + "." + where("channels", a));
        for (std::size_t k = 0; k < kr.size(); ++k) ops.push_back(matrix_from_json(kr[k], ctx + ".kraus"));
        ge.per_input.emplace_back(ge.parties, std::move(ops));
      }
      enc.groups.push_back(std::move(ge));
    }
    return enc;
  }
  throw ParseError("encoding: unknown type '" + t + "' (expected phases, product or kraus)");
}

json to_json(const Encoder& e) {
  if (const auto* p = std::get_if<ProductEncoder>(&e)) {
    json chans = json::array();
    for (const auto& row : p->table) {
      json r = json::array();
      for (const auto& ch : row) {
        json brs = json::array();
        for (const auto& br : ch.branches())
          brs.push_back({{"w", br.weight}, {"y", complex_to_json(br.y)}, {"z", complex_to_json(br.z)}});
        r.push_back({{"branches", brs}});
      }
      chans.push_back(r);
    }
    return json{{"type", "product"}, {"channels", chans}};
  }
  const auto& j = std::get<JointEncoder>(e);
  json groups = json::array();
  for (const auto& g : j.groups) {
    json parties = json::array();
    for (int p : g.parties) parties.push_back(p + 1);
    json chans = json::array();
    for (const auto& ch : g.per_input) {
      json ops = json::array();
      for (const auto& k : ch.kraus()) ops.push_back(matrix_to_json(k));
      chans.push_back({{"kraus", ops}});
    }
    groups.push_back({{"parties", parties}, {"channels", chans}});
  }
  return json{{"type", "kraus"}, {"inputs", j.input_sizes}, {"groups", groups}};
}

json to_json(const ViolationReport& r) {
  json mv = json::array();
  for (Eigen::Index k = 0; k < r.measurement_vector.size(); ++k)
    mv.push_back(complex_to_json(r.measurement_vector(k)));
  return json{{"N", r.N},
              {"phases", r.phases},
              {"trace_norm", r.trace_norm},
              {"delta", r.delta},
              {"closed_form_delta", r.closed_form_delta},
              {"lhs", r.lhs},
              {"bound", r.N},
              {"optimal_measurement", r.optimal_measurement},
              {"measurement_vector", mv}};
}

json to_json(const WitnessReport& r) {
  std::vector<int> parties;
  for (int p : r.parties) parties.push_back(p + 1);
  return json{{"K", r.K},         {"crk", r.crk},   {"parties", parties},
              {"phases", r.phases}, {"trace_norm", r.trace_norm}, {"delta", r.delta},
              {"lhs", r.lhs},     {"bound", r.K + 1}, {"certified", r.certified}};
}

json to_json(const CoherenceReport& r) {
  json out{{"dim", r.dim},
           {"K", r.K},
           {"fingerprint_delta", r.fingerprint_delta},
           {"lhs", r.lhs},
           {"bound", r.bound},
           {"witness_level", r.witness_level},
           {"state_hash", r.state_hash}};
  out["crk"] = r.crk ? json(*r.crk) : json(nullptr);
  out["comparison_trace_norm"] = r.comparison_trace_norm ? json(*r.comparison_trace_norm) : json(nullptr);
  return out;
}

json to_json(const PhaseScanResult& r) {
  json classes = json::array();
  for (int q = 0; q < 3; ++q)
    classes.push_back({{"max", r.maxima[q]}, {"bound", r.bounds[q]}, {"argmax", r.argmax[q]}});
  return json{{"resolution", r.resolution}, {"classes", classes}};
}

json to_json(const MembershipResult& r) {
  json out{{"member", r.member}};
  if (r.member) {
    json w = json::array();
    for (const auto& x : r.weights) w.push_back(to_string(x));
    out["weights"] = w;
  } else {
    out["separator"] = to_json(r.separator);
  }
  return out;
}

json to_json(const CensusReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    json rep = to_json(c.representative);
    classes.push_back({{"representative", rep}, {"orbit_size", c.orbit.size()}, {"is_positivity", c.positivity}});
  }
  return json{{"vertices", r.vertex_count},
              {"dim", r.dim},
              {"facets", r.facet_count},
              {"positivity", r.positivity_count},
              {"nontrivial_classes", r.nontrivial_classes()},
              {"classes", classes}};
}

}  // namespace onepmac
