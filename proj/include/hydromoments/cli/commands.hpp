#pragma once

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "hydromoments/asymptotics.hpp"
#include "hydromoments/cli/pool.hpp"
#include "hydromoments/cli/records.hpp"
#include "hydromoments/momentum.hpp"
#include "hydromoments/oracle/quadrature.hpp"
#include "hydromoments/position.hpp"

namespace hydromoments::cli {

enum class Format { Json, Csv, Human };

inline constexpr int exit_ok = 0;
inline constexpr int exit_hard_failure = 1;
inline constexpr int exit_domain = 2;
inline constexpr int exit_numerical = 3;

inline int exit_code(const Error& e) { return e.is_domain_error() ? exit_domain : exit_numerical; }

inline Mode parse_mode(const std::string& mode) {
  if (mode == "exact") return Mode::Exact;
  if (mode == "float") return Mode::Float;
  return Mode::Auto;
}

inline MomentResult evaluate(const Request& q) {
  const HydrogenicState state = make_state(q.D, q.n, q.l, q.Z);
  if (q.mode == "oracle") {
    return q.space == Space::Position ? oracle::quad_r_moment(state, q.alpha) : oracle::quad_p_moment(state, q.alpha);
  }
  const Mode mode = parse_mode(q.mode);
  return q.space == Space::Position ? position_moment(state, q.alpha, mode) : p_moment(state, q.alpha, mode);
}

inline Row evaluate_row(const Request& q) {
  Row row;
  row.request = q;
  try {
    row.result = evaluate(q);
  } catch (const Error& e) {
    row.status = e.is_domain_error() ? Status::OutOfDomain : Status::NumericalFailure;
    row.message = e.what();
  }
  return row;
}

inline void emit_rows(std::ostream& out, const std::string& command, const std::vector<Row>& rows, Format format) {
  switch (format) {
    case Format::Json:
      for (const Row& row : rows) out << to_json_string(row_json(command, row)) << '\n';
      break;
    case Format::Csv:
      out << csv_header << '\n';
      for (const Row& row : rows) out << csv_row(row) << '\n';
      break;
    case Format::Human:
      for (const Row& row : rows) out << human_row(row) << '\n';
      break;
  }
}

/// One record per successful request; the first failure sets the exit code and
/// its message goes to `err`.
inline int cmd_compute(const std::vector<Request>& requests, Format format, std::ostream& out, std::ostream& err) {
  std::vector<Row> rows;
  int code = exit_ok;
  for (const Request& q : requests) {
    try {
      Row row;
      row.request = q;
      row.result = evaluate(q);
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      if (code == exit_ok) code = exit_code(e);
    }
  }
  emit_rows(out, "compute", rows, format);
  return code;
}

struct TableSpec {
  int D_lo = 3, D_hi = 3;
  int n_lo = 1, n_hi = 3;
  /// Negative selects every l < n.
  int l = -1;
  std::vector<double> alphas;
  Space space = Space::Position;
  double Z = 1.0;
  std::string mode = "auto";
  bool parallel = false;
};

/// Requests in lexicographic (D, n, l, alpha) order.
inline std::vector<Request> table_requests(const TableSpec& spec) {
  std::vector<double> alphas = spec.alphas;
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
  std::vector<Request> requests;
  for (int D = spec.D_lo; D <= spec.D_hi; ++D) {
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
      for (int l = 0; l < n; ++l) {
        if (spec.l >= 0 && l != spec.l) continue;
        for (double a : alphas) requests.push_back({D, n, l, spec.Z, spec.space, a, spec.mode});
      }
    }
  }
  return requests;
}

inline int cmd_table(const TableSpec& spec, Format format, std::ostream& out) {
  const auto requests = table_requests(spec);
  const auto rows = parallel_map(
      requests.size(), [&](size_t i) { return evaluate_row(requests[i]); }, spec.parallel ? worker_count() : 1u);
  if (format == Format::Json) {
    Json doc;
    doc["schemaVersion"] = schema_version;
    doc["command"] = "table";
    doc["rows"] = Json::array();
    for (const Row& row : rows) doc["rows"].push_back(Json{{"request", request_json(row.request)}, {"result", result_json(row)}});
    out << to_json_string(doc) << '\n';
  } else {
    emit_rows(out, "table", rows, format);
  }
  return exit_ok;
}

enum class LimitFamily { General, Circular, NS };

struct LimitsSpec {
  Regime regime = Regime::Rydberg;
  double alpha = 1.0;
  Space space = Space::Momentum;
  LimitFamily family = LimitFamily::General;
  int D = 3, n = 1, l = 0;
  double Z = 1.0;
  /// n values (Rydberg) or D values (high-D).
  std::vector<int> sequence;
};

struct LimitRow {
  int parameter = 0;
  double exact = 0.0;
  AsymptoticEstimate estimate;
  double ratio_minus_one = 0.0;
};

inline LimitRow limit_row(const LimitsSpec& spec, int parameter) {
  const bool rydberg = spec.regime == Regime::Rydberg;
  const int D = rydberg ? spec.D : parameter;
  const int n = rydberg ? parameter : spec.n;
  const int l = spec.family == LimitFamily::Circular ? n - 1 : spec.family == LimitFamily::NS ? 0 : spec.l;
  const HydrogenicState state = make_state(D, n, l, spec.Z);

  AsymptoticEstimate estimate;
  if (!rydberg) {
    estimate = highD(spec.alpha, state, spec.space);
  } else if (spec.space == Space::Position) {
    estimate = rydberg_r(spec.alpha, state);
  } else {
    if (D != 3) throw Error(ErrorCode::OrderOutOfRegime, "Rydberg momentum estimates are three-dimensional");
    if (spec.family == LimitFamily::Circular) {
      estimate = rydberg_circular_p(spec.alpha, n, spec.Z);
    } else if (spec.alpha == -1.0 && spec.family == LimitFamily::NS) {
      estimate = rydberg_inverse_p(n, spec.Z, RydbergFamily::NS);
    } else {
      estimate = rydberg_p(spec.alpha, n, spec.Z);
    }
  }
  const double exact = spec.space == Space::Position ? position_moment(state, spec.alpha).decimal()
                                                     : p_moment(state, spec.alpha).decimal();
  return {parameter, exact, estimate, exact / estimate.corrected - 1.0};
}

inline int cmd_limits(const LimitsSpec& spec, Format format, std::ostream& out, std::ostream& err) {
  std::vector<LimitRow> rows;
  try {
    for (int p : spec.sequence) rows.push_back(limit_row(spec, p));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e);
  }
  const char* parameter = spec.regime == Regime::Rydberg ? "n" : "D";
  switch (format) {
    case Format::Json: {
      Json doc;
      doc["schemaVersion"] = schema_version;
      doc["command"] = "limits";
      doc["regime"] = std::string(to_string(spec.regime));
      doc["space"] = std::string(to_string(spec.space));
      doc["alpha"] = spec.alpha;
      doc["rows"] = Json::array();
      for (const auto& r : rows) {
        Json j;
        j[parameter] = r.parameter;
        j["exact"] = r.exact;
        j["leading"] = r.estimate.leading;
        j["corrected"] = r.estimate.corrected;
        j["ratio_minus_one"] = r.ratio_minus_one;
        j["constraints"] = r.estimate.constraints;
        doc["rows"].push_back(j);
      }
      out << to_json_string(doc) << '\n';
      break;
    }
    case Format::Csv:
      out << parameter << ",exact,leading,corrected,ratio_minus_one\n";
      for (const auto& r : rows) {
        out << r.parameter << ',' << format_decimal(r.exact) << ',' << format_decimal(r.estimate.leading) << ','
            << format_decimal(r.estimate.corrected) << ',' << format_decimal(r.ratio_minus_one) << '\n';
      }
      break;
    case Format::Human:
      out << std::setw(6) << parameter << std::setw(26) << "exact" << std::setw(26) << "leading" << std::setw(26)
          << "corrected" << std::setw(14) << "ratio-1" << '\n';
      for (const auto& r : rows) {
        out << std::setw(6) << r.parameter << std::setprecision(17) << std::setw(26) << r.exact << std::setw(26)
            << r.estimate.leading << std::setw(26) << r.estimate.corrected << std::setprecision(4) << std::setw(14)
            << r.ratio_minus_one << '\n';
      }
      break;
  }
  return exit_ok;
}

}  // namespace hydromoments::cli
