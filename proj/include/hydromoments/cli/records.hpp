#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hydromoments/asymptotics.hpp"
#include "hydromoments/result.hpp"
#include "hydromoments/uncertainty.hpp"

namespace hydromoments::cli {

using Json = nlohmann::ordered_json;
using hydromoments::to_string;

inline constexpr const char* schema_version = "hydromoments/1";

/// One requested moment.
struct Request {
  int D = 3;
  int n = 1;
  int l = 0;
  double Z = 1.0;
  Space space = Space::Position;
  double alpha = 0.0;
  std::string mode = "auto";
};

enum class Status { Ok, OutOfDomain, NumericalFailure };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::OutOfDomain: return "out-of-domain";
    case Status::NumericalFailure: return "numerical-failure";
  }
  return "unknown";
}

/// A request with either its result or the reason it has none.
struct Row {
  Request request;
  Status status = Status::Ok;
  std::optional<MomentResult> result;
  std::string message;
};

/// 17 significant digits; identical doubles always print identically.
inline std::string format_decimal(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// "m/2" with m twice the exponent of pi, as stored.
inline std::string format_pi_pow(const ExactValue& v) { return std::to_string(v.pi_twice()) + "/2"; }

inline ExactValue parse_exact(const std::string& coeff, const std::string& pi_pow) {
  const auto slash = pi_pow.find('/');
  if (slash == std::string::npos || pi_pow.substr(slash + 1) != "2") {
    throw Error(ErrorCode::UnsupportedArgument, "piPow must read m/2, got '" + pi_pow + "'");
  }
  return ExactValue(rational_from_string(coeff), std::stoi(pi_pow.substr(0, slash)));
}

/// Compact JSON with floats at 17 significant digits; non-finite floats become null.
inline void write_json(std::ostream& out, const Json& j) {
  switch (j.type()) {
    case Json::value_t::object: {
      out << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ',';
        first = false;
        out << Json(key).dump() << ':';
        write_json(out, value);
      }
      out << '}';
      break;
    }
    case Json::value_t::array: {
      out << '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out << ',';
        write_json(out, j[i]);
      }
      out << ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out << (std::isfinite(x) ? format_decimal(x) : "null");
      break;
    }
    default:
      out << j.dump();
  }
}

inline std::string to_json_string(const Json& j) {
  std::ostringstream out;
  write_json(out, j);
  return out.str();
}

inline Json request_json(const Request& r) {
  Json j;
  j["D"] = r.D;
  j["n"] = r.n;
  j["l"] = r.l;
  j["Z"] = r.Z;
  j["space"] = std::string(to_string(r.space));
  j["alpha"] = r.alpha;
  j["mode"] = r.mode;
  return j;
}

inline Json result_json(const Row& row) {
  Json j;
  j["status"] = std::string(to_string(row.status));
  if (!row.result) {
    j["message"] = row.message;
    return j;
  }
  const MomentResult& m = *row.result;
  j["method"] = std::string(to_string(m.method));
  if (m.is_exact()) {
    j["exact"] = Json{{"coeff", to_string(m.exact().coeff())}, {"piPow", format_pi_pow(m.exact())}};
  } else {
    j["exact"] = nullptr;
  }
  j["decimal"] = m.decimal();
  j["error_bound"] = m.error_estimate;
  return j;
}

inline Json row_json(const std::string& command, const Row& row) {
  Json j;
  j["schemaVersion"] = schema_version;
  j["command"] = command;
  j["request"] = request_json(row.request);
  j["result"] = result_json(row);
  return j;
}

inline Request request_from_json(const Json& j) {
  Request r;
  r.D = j.at("D").get<int>();
  r.n = j.at("n").get<int>();
  r.l = j.at("l").get<int>();
  r.Z = j.at("Z").get<double>();
  r.space = j.at("space").get<std::string>() == "p" ? Space::Momentum : Space::Position;
  r.alpha = j.at("alpha").get<double>();
  r.mode = j.at("mode").get<std::string>();
  return r;
}

inline Method method_from_string(const std::string& name) {
  for (Method m : {Method::Hyp3F2, Method::Hyp5F4, Method::SingleSum, Method::DoubleSum, Method::ClosedForm,
                   Method::Reflection, Method::Quadrature, Method::Asymptotic}) {
    if (to_string(m) == name) return m;
  }
  throw Error(ErrorCode::UnsupportedArgument, "unknown method '" + name + "'");
}

/// Inverse of row_json.
inline Row row_from_json(const Json& j) {
  Row row;
  row.request = request_from_json(j.at("request"));
  const Json& res = j.at("result");
  const std::string status = res.at("status").get<std::string>();
  if (status != "ok") {
    row.status = status == "out-of-domain" ? Status::OutOfDomain : Status::NumericalFailure;
    row.message = res.at("message").get<std::string>();
    return row;
  }
  const Request& q = row.request;
  MomentResult m;
  m.state = make_state(q.D, q.n, q.l, q.Z);
  m.space = q.space;
  m.alpha = q.alpha;
  m.method = method_from_string(res.at("method").get<std::string>());
  if (res.at("exact").is_null()) {
    m.value = res.at("decimal").get<double>();
  } else {
    m.value = parse_exact(res["exact"].at("coeff").get<std::string>(), res["exact"].at("piPow").get<std::string>());
  }
  m.error_estimate = res.at("error_bound").get<double>();
  row.result = m;
  return row;
}

inline constexpr const char* csv_header =
    "D,n,l,Z,space,alpha,mode,value_decimal,value_exact_coeff,value_exact_pipow,error_bound,status";

inline std::string csv_row(const Row& row) {
  const Request& q = row.request;
  std::ostringstream out;
  out << q.D << ',' << q.n << ',' << q.l << ',' << format_decimal(q.Z) << ',' << to_string(q.space) << ','
      << format_decimal(q.alpha) << ',' << q.mode << ',';
  if (row.result) {
    const MomentResult& m = *row.result;
    out << format_decimal(m.decimal()) << ',';
    if (m.is_exact()) {
      out << to_string(m.exact().coeff()) << ',' << format_pi_pow(m.exact());
    } else {
      out << ',';
    }
    out << ',' << format_decimal(m.error_estimate);
  } else {
    out << ",,,";
  }
  out << ',' << to_string(row.status);
  return out.str();
}

inline std::string human_row(const Row& row) {
  const Request& q = row.request;
  std::ostringstream out;
  out << '<' << to_string(q.space) << '^' << format_decimal(q.alpha) << "> for (D=" << q.D << ", n=" << q.n
      << ", l=" << q.l << ", Z=" << format_decimal(q.Z) << "): ";
  if (!row.result) {
    out << to_string(row.status) << ": " << row.message;
    return out.str();
  }
  const MomentResult& m = *row.result;
  if (m.is_exact()) {
    out << m.exact().str() << " = " << format_decimal(m.decimal()) << " [exact, " << to_string(m.method) << ']';
  } else {
    out << format_decimal(m.decimal()) << " +/- " << format_decimal(m.error_estimate) << " [" << to_string(m.method)
        << ']';
  }
  return out.str();
}

inline Json optional_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

inline Json inequality_json(const InequalityReport& r) {
  const auto& p = r.params;
  Json j;
  j["name"] = std::string(to_string(r.name));
  j["rigorous"] = is_rigorous(r.name);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["ratio"] = r.ratio;
  j["inverted"] = r.inverted;
  j["satisfied"] = r.satisfied;
  j["params"] = Json{{"D", p.state.D()}, {"n", p.state.n()},         {"l", p.state.l()},
                     {"Z", p.state.Z()}, {"a", optional_json(p.a)},   {"b", optional_json(p.b)},
                     {"alpha", optional_json(p.alpha)}, {"k", optional_json(p.k)}, {"q", p.q}, {"N", p.N}};
  return j;
}

inline Json asymptotic_json(const AsymptoticEstimate& e) {
  Json j;
  j["regime"] = std::string(to_string(e.regime));
  j["leading"] = e.leading;
  j["corrected"] = e.corrected;
  j["constraints"] = e.constraints;
  return j;
}

}  // namespace hydromoments::cli
