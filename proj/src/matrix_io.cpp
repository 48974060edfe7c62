#include "vho/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace vho::io {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string token;
  while (std::getline(ss, token, ',')) fields.push_back(trim(token));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

[[noreturn]] void fail(const std::string& origin, std::size_t line,
                       const std::string& why) {
  std::ostringstream msg;
  msg << origin << ":" << line << ": " << why;
  throw error(errc::parse_error, msg.str());
}

double parse_number(const std::string& token, const std::string& origin,
                    std::size_t line) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    fail(origin, line, "expected a number, got '" + token + "'");
  }
  if (consumed != token.size()) {
    fail(origin, line, "trailing characters after number '" + token + "'");
  }
  return value;
}

}  // namespace

matrix_file load_matrix(std::istream& in, const std::string& origin) {
  std::vector<std::string> criterion_names;
  std::vector<madm::direction> directions;
  std::vector<double> weights;
  std::vector<std::string> alternatives;
  std::vector<std::vector<double>> rows;
  std::set<std::string> seen_ids;

  enum class section { names, directions, weights, values };
  section next = section::names;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_csv(line);

    switch (next) {
      case section::names: {
        std::set<std::string> unique;
        for (const auto& name : fields) {
          if (name.empty()) fail(origin, line_no, "empty criterion name");
          if (!unique.insert(name).second) {
            fail(origin, line_no, "duplicate criterion name '" + name + "'");
          }
        }
        criterion_names = fields;
        next = section::directions;
        break;
      }
      case section::directions: {
        if (fields.size() != criterion_names.size()) {
          fail(origin, line_no, "expected one direction per criterion");
        }
        for (const auto& token : fields) {
          const std::string t = lower(token);
          if (t == "benefit") {
            directions.push_back(madm::direction::benefit);
          } else if (t == "cost") {
            directions.push_back(madm::direction::cost);
          } else {
            fail(origin, line_no,
                 "direction must be 'benefit' or 'cost', got '" + token + "'");
          }
        }
        next = section::weights;
        break;
      }
      case section::weights: {
        if (fields.size() != criterion_names.size()) {
          fail(origin, line_no, "expected one weight per criterion");
        }
        for (const auto& token : fields) {
          weights.push_back(parse_number(token, origin, line_no));
        }
        next = section::values;
        break;
      }
      case section::values: {
        if (fields.size() != criterion_names.size() + 1) {
          fail(origin, line_no,
               "expected alternative id plus " +
                   std::to_string(criterion_names.size()) + " values");
        }
        if (fields.front().empty()) fail(origin, line_no, "empty alternative id");
        if (!seen_ids.insert(fields.front()).second) {
          fail(origin, line_no,
               "duplicate alternative id '" + fields.front() + "'");
        }
        alternatives.push_back(fields.front());
        std::vector<double> row;
        for (std::size_t j = 1; j < fields.size(); ++j) {
          const double v = parse_number(fields[j], origin, line_no);
          if (!std::isfinite(v) || v <= 0.0) {
            fail(origin, line_no,
                 "matrix values must be finite and > 0, got '" + fields[j] + "'");
          }
          row.push_back(v);
        }
        rows.push_back(std::move(row));
        break;
      }
    }
  }

  if (next != section::values) {
    fail(origin, line_no, "file ended before the weights line");
  }
  if (rows.empty()) {
    fail(origin, line_no, "file has no alternative rows");
  }

  std::vector<madm::criterion_spec> criteria;
  for (std::size_t j = 0; j < criterion_names.size(); ++j) {
    criteria.push_back({criterion_names[j], directions[j]});
  }
  // weight_vector errors (negative entry, bad sum) propagate untouched so
  // callers can tell them apart from parse errors.
  return {madm::decision_matrix(std::move(criteria), std::move(alternatives),
                                rows),
          madm::weight_vector(std::move(weights))};
}

matrix_file load_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw error(errc::parse_error, "cannot open '" + path.string() + "'");
  }
  return load_matrix(in, path.string());
}

}  // namespace vho::io
