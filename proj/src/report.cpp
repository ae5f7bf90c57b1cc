#include "charfluct/report.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace charfluct {

namespace {

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string config_comment_lines(const ExperimentConfig& config) {
  std::istringstream in(config.to_key_values());
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << "# " << line << "\n";
  return out.str();
}

}  // namespace

double format_round_trip(double value) {
  return std::stod(format_double(value));
}

void write_text_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows,
                            const ExperimentConfig& config) {
  std::ostringstream out;
  out << config_comment_lines(config);
  out << "# generated_at = " << timestamp_utc() << "\n";
  out << "q,condition,indices,value,exact,predicted_limit\n";
  for (const auto& r : rows) {
    out << r.q << ',' << r.condition << ",\"" << r.indices << "\","
        << format_double(r.value) << ','
        << (r.exact ? fraction_string(*r.exact) : "") << ','
        << (r.predicted ? format_double(*r.predicted) : "") << "\n";
  }
  return out.str();
}

nlohmann::json diagnostics_json(const std::vector<DiagnosticsRow>& rows,
                                const ExperimentConfig& config) {
  nlohmann::json j;
  j["schema"] = "charfluct-report-v1";
  j["kind"] = "exact";
  j["config"] = config.to_json();
  j["generated_at"] = timestamp_utc();
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["q"] = r.q;
    row["condition"] = r.condition;
    row["indices"] = r.indices;
    row["value"] = r.value;
    if (r.exact) row["exact"] = fraction_string(*r.exact);
    if (r.predicted) row["predicted_limit"] = *r.predicted;
    out_rows.push_back(std::move(row));
  }
  j["rows"] = std::move(out_rows);
  return j;
}

std::string fluctuation_csv(const std::vector<ReportRow>& rows,
                            const ExperimentConfig& config) {
  std::ostringstream out;
  out << config_comment_lines(config);
  out << "# generated_at = " << timestamp_utc() << "\n";
  out << "model,q,observable,statistic,estimate,stderr,predicted,n_samples,"
         "seed\n";
  for (const auto& r : rows) {
    out << '"' << r.model << "\"," << r.q << ',' << r.observable << ','
        << r.statistic << ',' << format_double(r.estimate) << ','
        << format_double(r.stderr_) << ','
        << (r.predicted ? format_double(*r.predicted) : "") << ','
        << r.n_samples << ',' << r.seed << "\n";
  }
  return out.str();
}

nlohmann::json fluctuation_json(const std::vector<ReportRow>& rows,
                                const ExperimentConfig& config) {
  nlohmann::json j;
  j["schema"] = "charfluct-report-v1";
  j["kind"] = "sample";
  j["config"] = config.to_json();
  j["generated_at"] = timestamp_utc();
  nlohmann::json out_rows = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json row;
    row["model"] = r.model;
    row["q"] = r.q;
    row["observable"] = r.observable;
    row["statistic"] = r.statistic;
    row["estimate"] = r.estimate;
    row["stderr"] = r.stderr_;
    if (r.predicted) row["predicted"] = *r.predicted;
    row["n_samples"] = r.n_samples;
    row["seed"] = r.seed;
    out_rows.push_back(std::move(row));
  }
  j["rows"] = std::move(out_rows);
  return j;
}

nlohmann::json merge_reports(const std::vector<nlohmann::json>& reports) {
  if (reports.empty()) throw std::invalid_argument("nothing to merge");
  nlohmann::json merged;
  merged["schema"] = "charfluct-report-v1";
  merged["kind"] = reports.front().at("kind");
  merged["generated_at"] = timestamp_utc();
  merged["configs"] = nlohmann::json::array();
  merged["rows"] = nlohmann::json::array();
  for (const auto& report : reports) {
    if (report.at("schema") != "charfluct-report-v1")
      throw std::invalid_argument("unsupported report schema");
    if (report.at("kind") != merged["kind"])
      throw std::invalid_argument("cannot merge reports of different kinds");
    merged["configs"].push_back(report.at("config"));
    for (const auto& row : report.at("rows")) merged["rows"].push_back(row);
  }
  return merged;
}

std::string report_to_csv(const nlohmann::json& report) {
  std::ostringstream out;
  bool sample = report.at("kind") == "sample";
  if (sample) {
    out << "model,q,observable,statistic,estimate,stderr,predicted,"
           "n_samples,seed\n";
  } else {
    out << "q,condition,indices,value,exact,predicted_limit\n";
  }
  for (const auto& row : report.at("rows")) {
    if (sample) {
      out << '"' << row.at("model").get<std::string>() << "\","
          << row.at("q").get<int>() << ','
          << row.at("observable").get<std::string>() << ','
          << row.at("statistic").get<std::string>() << ','
          << format_double(row.at("estimate").get<double>()) << ','
          << format_double(row.at("stderr").get<double>()) << ','
          << (row.contains("predicted")
                  ? format_double(row.at("predicted").get<double>())
                  : "")
          << ',' << row.at("n_samples").get<long long>() << ','
          << row.at("seed").get<std::uint64_t>() << "\n";
    } else {
      out << row.at("q").get<int>() << ',' << row.at("condition").get<int>()
          << ",\"" << row.at("indices").get<std::string>() << "\","
          << format_double(row.at("value").get<double>()) << ','
          << (row.contains("exact") ? row.at("exact").get<std::string>() : "")
          << ','
          << (row.contains("predicted_limit")
                  ? format_double(row.at("predicted_limit").get<double>())
                  : "")
          << "\n";
    }
  }
  return out.str();
}

}  // namespace charfluct
