#include "qpriv/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace qpriv {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw ValidationError(std::string("parse error: ") + err.what());
  }
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(where + ": missing field '" + key + "'");
  }
  return j.at(key);
}

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError(where + ": expected [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

DimSignature parse_dims(const json& j, const std::string& where) {
  const json& dims = field(j, "dims", where);
  if (!dims.is_array() || dims.empty()) {
    throw ValidationError(where + ".dims: expected a non-empty array");
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!dims[i].is_number_integer() || dims[i].get<long long>() < 1) {
      throw ValidationError(where + ".dims[" + std::to_string(i) +
                            "]: expected a positive integer");
    }
    out.push_back(dims[i].get<int>());
  }
  return DimSignature(out);
}

ComplexMatrix parse_matrix(const json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array()) {
    throw ValidationError(where + ": expected an array of rows");
  }
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(rows[0].size());
  ComplexMatrix m(nr, nc);
  for (int i = 0; i < nr; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != nc) {
      throw ValidationError(where + ": ragged row " + std::to_string(i));
    }
    for (int j = 0; j < nc; ++j) {
      m(i, j) = parse_complex(row[static_cast<std::size_t>(j)],
                              where + "[" + std::to_string(i) + "][" +
                                  std::to_string(j) + "]");
    }
  }
  return m;
}

PureState state_from_json(const json& j, const std::string& where,
                          const Tolerances& tol) {
  const DimSignature sig = parse_dims(j, where);
  const json& vec = field(j, "vector", where);
  if (!vec.is_array() || static_cast<int>(vec.size()) != sig.total()) {
    throw ValidationError(where + ".vector: expected " +
                          std::to_string(sig.total()) + " entries");
  }
  ComplexVector v(sig.total());
  for (int i = 0; i < sig.total(); ++i) {
    v(i) = parse_complex(vec[static_cast<std::size_t>(i)],
                         where + ".vector[" + std::to_string(i) + "]");
  }
  return PureState(std::move(v), sig, tol);
}

DensityMatrix density_from_json(const json& j, const std::string& where,
                                const Tolerances& tol) {
  const DimSignature sig = parse_dims(j, where);
  if (j.contains("vector")) {
    return state_from_json(j, where, tol).density(tol);
  }
  const json& rows = field(j, "density", where);
  ComplexMatrix m = parse_matrix(rows, where + ".density");
  if (m.rows() != sig.total() || m.cols() != sig.total()) {
    throw ValidationError(where + ".density: expected a " +
                          std::to_string(sig.total()) + "x" +
                          std::to_string(sig.total()) + " matrix");
  }
  return DensityMatrix(std::move(m), sig, tol);
}

KrausChannel channel_from_json(const json& j, const std::string& where,
                               const Tolerances& tol) {
  if (j.contains("kraus")) {
    const json& list = j.at("kraus");
    if (!list.is_array() || list.empty()) {
      throw ValidationError(where + ".kraus: expected a non-empty array");
    }
    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < list.size(); ++k) {
      ops.push_back(parse_matrix(list[k], where + ".kraus[" + std::to_string(k) + "]"));
    }
    return KrausChannel(std::move(ops), tol);
  }
  const json& kind = field(j, "kind", where);
  if (!kind.is_string()) {
    throw ValidationError(where + ".kind: expected a string");
  }
  const std::string name = kind.get<std::string>();
  if (name == "identity") {
    int dim = 2;
    if (j.contains("params") && j.at("params").contains("dim")) {
      dim = j.at("params").at("dim").get<int>();
    }
    return identity_channel(dim, tol);
  }
  static const std::map<std::string, std::string> param_key = {
      {"depolarizing", "p"},     {"amplitude-damping", "gamma"},
      {"phase-damping", "lambda"}, {"bit-flip", "p"},
      {"erasure", "p"}};
  const auto it = param_key.find(name);
  if (it == param_key.end()) {
    throw ValidationError(where + ".kind: unknown channel '" + name + "'");
  }
  const json& params = field(j, "params", where);
  const json& value = field(params, it->second.c_str(), where + ".params");
  if (!value.is_number()) {
    throw ValidationError(where + ".params." + it->second + ": expected a number");
  }
  return named_channel(name, value.get<double>(), tol);
}

Ensemble ensemble_from_json(const json& j, const std::string& where,
                            const Tolerances& tol) {
  const json& members = field(j, "members", where);
  if (!members.is_array() || members.empty()) {
    throw ValidationError(where + ".members: expected a non-empty array");
  }
  std::vector<Ensemble::Member> out;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::string mw = where + ".members[" + std::to_string(k) + "]";
    const json& p = field(members[k], "p", mw);
    if (!p.is_number()) {
      throw ValidationError(mw + ".p: expected a number");
    }
    out.push_back({p.get<double>(),
                   density_from_json(field(members[k], "state", mw), mw + ".state", tol)});
  }
  return Ensemble(std::move(out), tol);
}

std::string complex_to_json(const Complex& c) {
  return "[" + format_number(c.real()) + "," + format_number(c.imag()) + "]";
}

}  // namespace

Scenario parse_scenario(const std::string& text, const Tolerances& tol) {
  const json doc = parse_json(text);
  PureState initial = state_from_json(field(doc, "initial", "scenario"),
                                      "scenario.initial", tol);
  const json& legs_json = field(doc, "legs", "scenario");
  if (!legs_json.is_array() || legs_json.empty()) {
    throw ValidationError("scenario.legs: expected a non-empty array");
  }
  std::vector<Leg> legs;
  for (std::size_t i = 0; i < legs_json.size(); ++i) {
    const std::string where = "scenario.legs[" + std::to_string(i) + "]";
    const json& name = field(legs_json[i], "name", where);
    if (!name.is_string()) {
      throw ValidationError(where + ".name: expected a string");
    }
    legs.push_back({name.get<std::string>(),
                    channel_from_json(field(legs_json[i], "channel", where),
                                      where + ".channel", tol),
                    std::nullopt});
  }
  if (doc.contains("ensembles")) {
    const json& list = doc.at("ensembles");
    if (!list.is_array()) {
      throw ValidationError("scenario.ensembles: expected an array");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "scenario.ensembles[" + std::to_string(i) + "]";
      const json& leg_name = field(list[i], "leg", where);
      bool found = false;
      for (Leg& leg : legs) {
        if (leg.name == leg_name.get<std::string>()) {
          leg.signals = ensemble_from_json(list[i], where, tol);
          found = true;
          break;
        }
      }
      if (!found) {
        throw ValidationError(where + ".leg: no leg named '" +
                              leg_name.get<std::string>() + "'");
      }
    }
  }
  return Scenario(std::move(initial), std::move(legs), tol);
}

Scenario load_scenario(const std::string& path, const Tolerances& tol) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError("cannot open scenario file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_scenario(buffer.str(), tol);
  } catch (const ValidationError& err) {
    throw ValidationError(path + ": " + err.what());
  } catch (const DimensionError& err) {
    throw ValidationError(path + ": " + err.what());
  }
}

PureState parse_pure_state(const std::string& text, const Tolerances& tol) {
  return state_from_json(parse_json(text), "state", tol);
}

DensityMatrix parse_density(const std::string& text, const Tolerances& tol) {
  return density_from_json(parse_json(text), "state", tol);
}

KrausChannel parse_channel(const std::string& text, const Tolerances& tol) {
  return channel_from_json(parse_json(text), "channel", tol);
}

std::string serialize_scenario(const Scenario& s) {
  std::ostringstream os;
  os << "{\"initial\":{\"dims\":" << s.initial().signature().to_string()
     << ",\"vector\":[";
  for (int i = 0; i < s.initial().dim(); ++i) {
    if (i) os << ",";
    os << complex_to_json(s.initial().vector()(i));
  }
  os << "]},\"legs\":[";
  for (std::size_t i = 0; i < s.legs().size(); ++i) {
    if (i) os << ",";
    const Leg& leg = s.legs()[i];
    os << "{\"name\":\"" << leg.name << "\",\"channel\":{\"kraus\":[";
    for (std::size_t k = 0; k < leg.channel.kraus().size(); ++k) {
      if (k) os << ",";
      const ComplexMatrix& m = leg.channel.kraus()[k];
      os << "[";
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        if (r) os << ",";
        os << "[";
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          if (c) os << ",";
          os << complex_to_json(m(r, c));
        }
        os << "]";
      }
      os << "]";
    }
    os << "]}}";
  }
  os << "]}";
  return os.str();
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace qpriv
