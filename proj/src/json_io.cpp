#include "mpschain/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace mpschain {

namespace {

std::string fmt17(double v) {
  if (!std::isfinite(v)) {
    return "null";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_value(const Json& j, std::string& out, bool pretty, int depth) {
  const std::string pad(pretty ? 2 * (depth + 1) : 0, ' ');
  const std::string closing_pad(pretty ? 2 * depth : 0, ' ');
  switch (j.type()) {
    case Json::value_t::null:
      out += "null";
      break;
    case Json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case Json::value_t::number_float:
      out += fmt17(j.get<double>());
      break;
    case Json::value_t::string:
      out += Json(j.get<std::string>()).dump();  // handles escaping
      break;
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const Json& item : j) {
        if (!first) {
          out += ',';
        }
        first = false;
        if (pretty) {
          out += '\n';
          out += pad;
        }
        write_value(item, out, pretty, depth + 1);
      }
      if (pretty) {
        out += '\n';
        out += closing_pad;
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) {
          out += ',';
        }
        first = false;
        if (pretty) {
          out += '\n';
          out += pad;
        }
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write_value(value, out, pretty, depth + 1);
      }
      if (pretty) {
        out += '\n';
        out += closing_pad;
      }
      out += '}';
      break;
    }
    default:
      out += "null";
      break;
  }
}

const Json& require_key(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(context) + ": missing required key \"" +
                     key + "\"");
  }
  return j.at(key);
}

int require_positive_int(const Json& j, const char* key, const char* context) {
  const Json& v = require_key(j, key, context);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) {
    throw ParseError(std::string(context) + ": \"" + key +
                     "\" must be a positive integer");
  }
  return static_cast<int>(v.get<std::int64_t>());
}

Complex complex_from_json(const Json& j, const char* context) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw ParseError(std::string(context) +
                     ": complex entries must be [re, im] number pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

// Integer d with d^n == side, if one exists.
int infer_local_dim(Eigen::Index side, int n_sites) {
  if (n_sites == 1) {
    return static_cast<int>(side);
  }
  const double guess = std::round(std::pow(static_cast<double>(side),
                                           1.0 / static_cast<double>(n_sites)));
  for (int d = std::max(1, static_cast<int>(guess) - 1);
       d <= static_cast<int>(guess) + 1; ++d) {
    if (detail::pow_or_limit(d, n_sites, std::size_t{1} << 62) ==
        static_cast<std::size_t>(side)) {
      return d;
    }
  }
  throw ParseError("dense observable side " + std::to_string(side) +
                   " is not a perfect n_sites-th power");
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  const int rows = require_positive_int(j, "rows", "matrix");
  const int cols = require_positive_int(j, "cols", "matrix");
  const Json& entries = require_key(j, "entries", "matrix");
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(rows) * cols) {
    throw ParseError("matrix: \"entries\" must hold rows*cols = " +
                     std::to_string(rows * cols) + " pairs");
  }
  ComplexMatrix m(rows, cols);
  std::size_t idx = 0;
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = complex_from_json(entries[idx++], "matrix");
    }
  }
  return m;
}

Json to_json(const MPSFamily& family) {
  Json sites = Json::array();
  for (int n = 1; n <= family.explicit_site_count(); ++n) {
    Json matrices = Json::array();
    for (const ComplexMatrix& a : family.site(n).matrices) {
      matrices.push_back(to_json(a));
    }
    sites.push_back(Json{{"matrices", matrices}});
  }
  return Json{{"d", family.d()},
              {"m", family.m()},
              {"tail", family.tail() == Tail::RepeatLast ? "repeat_last"
                                                         : "finite"},
              {"sites", sites}};
}

MPSFamily family_from_json(const Json& j) {
  const int d = require_positive_int(j, "d", "family");
  const int m = require_positive_int(j, "m", "family");
  const Json& tail_j = require_key(j, "tail", "family");
  if (!tail_j.is_string()) {
    throw ParseError("family: \"tail\" must be a string");
  }
  const std::string tail_s = tail_j.get<std::string>();
  Tail tail;
  if (tail_s == "repeat_last") {
    tail = Tail::RepeatLast;
  } else if (tail_s == "finite") {
    tail = Tail::Finite;
  } else {
    throw ParseError("family: \"tail\" must be \"repeat_last\" or \"finite\"");
  }
  const Json& sites_j = require_key(j, "sites", "family");
  if (!sites_j.is_array() || sites_j.empty()) {
    throw ParseError("family: \"sites\" must be a non-empty array");
  }
  std::vector<SiteTensors> sites;
  sites.reserve(sites_j.size());
  for (const Json& site_j : sites_j) {
    const Json& matrices_j = require_key(site_j, "matrices", "family site");
    if (!matrices_j.is_array()) {
      throw ParseError("family site: \"matrices\" must be an array");
    }
    SiteTensors site;
    for (const Json& m_j : matrices_j) {
      site.matrices.push_back(matrix_from_json(m_j));
    }
    sites.push_back(std::move(site));
  }
  try {
    return MPSFamily(d, m, std::move(sites), tail);
  } catch (const Error& err) {
    throw ParseError(std::string("family: ") + err.what());
  }
}

Json to_json(const LocalObservable& x) {
  if (x.form() == LocalObservable::Form::Product) {
    Json factors = Json::array();
    for (const ComplexMatrix& f : x.factors()) {
      factors.push_back(to_json(f));
    }
    return Json{{"form", "product"}, {"n_sites", x.n_sites()},
                {"factors", factors}};
  }
  return Json{{"form", "dense"}, {"n_sites", x.n_sites()},
              {"matrix", to_json(x.matrix())}};
}

LocalObservable observable_from_json(const Json& j) {
  const Json& form_j = require_key(j, "form", "observable");
  if (!form_j.is_string()) {
    throw ParseError("observable: \"form\" must be a string");
  }
  const std::string form = form_j.get<std::string>();
  const int n_sites = require_positive_int(j, "n_sites", "observable");
  try {
    if (form == "product") {
      const Json& factors_j = require_key(j, "factors", "observable");
      if (!factors_j.is_array() ||
          factors_j.size() != static_cast<std::size_t>(n_sites)) {
        throw ParseError(
            "observable: \"factors\" must hold n_sites matrices");
      }
      std::vector<ComplexMatrix> factors;
      factors.reserve(factors_j.size());
      for (const Json& f : factors_j) {
        factors.push_back(matrix_from_json(f));
      }
      return LocalObservable::product(std::move(factors));
    }
    if (form == "dense") {
      ComplexMatrix m =
          matrix_from_json(require_key(j, "matrix", "observable"));
      const int d = infer_local_dim(m.rows(), n_sites);
      return LocalObservable::dense(d, n_sites, std::move(m));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& err) {
    throw ParseError(std::string("observable: ") + err.what());
  }
  throw ParseError("observable: \"form\" must be \"product\" or \"dense\"");
}

Json to_json(const ConditionReport& report) {
  return Json{{"condition", report.condition_name},
              {"pass", report.pass},
              {"tolerance", report.tolerance},
              {"sites", report.checked_sites},
              {"residuals", report.residuals},
              {"notes", report.notes}};
}

Json to_json(const DensityMatrix& rho) {
  return Json{{"n_sites", rho.n_sites},
              {"d", rho.d},
              {"matrix", to_json(rho.matrix)}};
}

Json to_json(const EvaluationReport& report, bool include_elapsed) {
  Json j{{"value", Json::array({report.value.real(), report.value.imag()})},
         {"method", report.method},
         {"n_sites", report.n_sites}};
  if (include_elapsed) {
    j["elapsed_ms"] = report.elapsed_ms;
  }
  return j;
}

std::string dump_json(const Json& j, bool pretty) {
  std::string out;
  write_value(j, out, pretty, 0);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json(buffer.str());
}

}  // namespace mpschain
