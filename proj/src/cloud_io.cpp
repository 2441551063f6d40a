#include "hypgrp/cloud_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "hypgrp/errors.hpp"

namespace hypgrp {

  namespace {

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r");
      return s.substr(first, last - first + 1);
    }

    std::vector<std::string_view> split(std::string_view s) {
      std::vector<std::string_view> fields;
      while (true) {
        auto const comma = s.find(',');
        fields.push_back(trim(s.substr(0, comma)));
        if (comma == std::string_view::npos) {
          return fields;
        }
        s.remove_prefix(comma + 1);
      }
    }

    double parse_number(std::string_view s, std::size_t line) {
      double value = 0.0;
      auto const [end, ec] = std::from_chars(s.data(), s.data() + s.size(),
                                             value);
      if (ec != std::errc() || end != s.data() + s.size()) {
        throw InputError("line " + std::to_string(line) + ": '"
                         + std::string(s) + "' is not a number");
      }
      return value;
    }

    // Fills the upper half from a lower triangle given row by row.
    std::vector<double>
    from_lower(std::vector<std::vector<double>> const& rows) {
      std::size_t const   n = rows.size();
      std::vector<double> d(n * n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != i + 1) {
          throw InputError("lower-triangle row " + std::to_string(i)
                           + " has " + std::to_string(rows[i].size())
                           + " entries, expected " + std::to_string(i + 1));
        }
        for (std::size_t j = 0; j <= i; ++j) {
          d[i * n + j] = rows[i][j];
          d[j * n + i] = rows[i][j];
        }
      }
      return d;
    }

  }  // namespace

  PointCloud cloud_from_json(nlohmann::json const& j) {
    try {
      if (!j.is_object()) {
        throw InputError("cloud JSON must be an object");
      }
      std::vector<double> d;
      std::size_t         n = 0;
      if (j.contains("matrix")) {
        auto const& m = j.at("matrix");
        n             = m.size();
        for (auto const& row : m) {
          if (row.size() != n) {
            throw InputError("distance matrix is not square");
          }
          for (auto const& x : row) {
            d.push_back(x.get<double>());
          }
        }
      } else if (j.contains("lower")) {
        auto const rows = j.at("lower").get<std::vector<std::vector<double>>>();
        n               = rows.size();
        d               = from_lower(rows);
      } else {
        throw InputError("cloud JSON needs a \"matrix\" or \"lower\" field");
      }
      std::optional<std::vector<double>>      weights;
      std::optional<std::vector<std::string>> labels;
      if (j.contains("weights")) {
        weights = j.at("weights").get<std::vector<double>>();
      }
      if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
      }
      return PointCloud(n, std::move(d), std::move(weights), std::move(labels));
    } catch (nlohmann::json::exception const& e) {
      throw InputError(std::string("malformed cloud JSON: ") + e.what());
    }
  }

  PointCloud parse_cloud_json(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw InputError(std::string("malformed cloud JSON: ") + e.what());
    }
    return cloud_from_json(j);
  }

  PointCloud parse_cloud_csv(std::string_view text) {
    std::vector<std::vector<double>>        rows;
    std::optional<std::vector<double>>      weights;
    std::optional<std::vector<std::string>> labels;
    std::size_t                             line_no = 0;
    while (!text.empty()) {
      auto const       eol  = text.find('\n');
      std::string_view line = trim(text.substr(0, eol));
      text.remove_prefix(eol == std::string_view::npos ? text.size()
                                                       : eol + 1);
      ++line_no;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      if (line.starts_with("weights:")) {
        weights.emplace();
        for (auto f : split(line.substr(8))) {
          weights->push_back(parse_number(f, line_no));
        }
      } else if (line.starts_with("labels:")) {
        labels.emplace();
        for (auto f : split(line.substr(7))) {
          labels->emplace_back(f);
        }
      } else {
        std::vector<double> row;
        for (auto f : split(line)) {
          row.push_back(parse_number(f, line_no));
        }
        rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) {
      throw InputError("cloud CSV has no distance rows");
    }
    std::size_t const n = rows.size();
    return PointCloud(n, from_lower(rows), std::move(weights),
                      std::move(labels));
  }

  PointCloud load_cloud(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open cloud file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (path.ends_with(".json")) {
      return parse_cloud_json(buffer.str());
    }
    return parse_cloud_csv(buffer.str());
  }

  nlohmann::json cloud_to_json(PointCloud const& c) {
    nlohmann::json matrix = nlohmann::json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      auto const row = c.row(i);
      matrix.push_back(std::vector<double>(row.begin(), row.end()));
    }
    nlohmann::json j = {{"matrix", std::move(matrix)}};
    if (c.weights()) {
      j["weights"] = *c.weights();
    }
    if (c.labels()) {
      j["labels"] = *c.labels();
    }
    return j;
  }

  void write_cloud_csv(std::ostream& out, PointCloud const& c) {
    auto const old = out.precision(17);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        out << (j ? "," : "") << c(i, j);
      }
      out << '\n';
    }
    auto list = [&](char const* key, auto const& values) {
      out << key << ' ';
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? "," : "") << values[i];
      }
      out << '\n';
    };
    if (c.weights()) {
      list("weights:", *c.weights());
    }
    if (c.labels()) {
      list("labels:", *c.labels());
    }
    out.precision(old);
  }

}  // namespace hypgrp
