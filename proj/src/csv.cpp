#include "bigsurv/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "bigsurv/errors.hpp"

namespace bigsurv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double parse_double(const std::string& cell, const std::string& path,
                    std::size_t line_no, const std::string& column) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(path + ": line " + std::to_string(line_no) +
                     ": non-numeric value '" + cell + "' in column " + column);
  return value;
}

std::uint64_t parse_id(const std::string& cell, const std::string& path,
                       std::size_t line_no) {
  std::uint64_t value = 0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError(path + ": line " + std::to_string(line_no) +
                     ": invalid id '" + cell + "'");
  return value;
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;  // rows[i] belongs to line i+2
};

CsvTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_line(line);
    if (line_no == 1) {
      table.header = std::move(cells);
    } else {
      if (cells.size() != table.header.size())
        throw ParseError(path + ": line " + std::to_string(line_no) + ": expected " +
                         std::to_string(table.header.size()) + " cells, got " +
                         std::to_string(cells.size()));
      table.rows.push_back(std::move(cells));
    }
  }
  if (table.header.empty()) throw ParseError(path + ": missing header row");
  return table;
}

// Validates `id,x1,...,xp,<trailing...>` and returns p.
std::size_t check_header(const CsvTable& table, const std::string& path,
                         const std::vector<std::string>& trailing) {
  const auto& h = table.header;
  if (h.empty() || h[0] != "id")
    throw ParseError(path + ": header must start with column 'id'");
  if (h.size() < 1 + trailing.size() + 1)
    throw ParseError(path + ": missing column '" + trailing.front() +
                     "' (expected id,x1,...,xp," + trailing.front() + ",...)");
  const std::size_t p = h.size() - 1 - trailing.size();
  for (std::size_t j = 0; j < p; ++j) {
    const std::string want = "x" + std::to_string(j + 1);
    if (h[1 + j] != want)
      throw ParseError(path + ": expected column '" + want + "', found '" +
                       h[1 + j] + "'");
  }
  for (std::size_t j = 0; j < trailing.size(); ++j) {
    if (h[1 + p + j] != trailing[j])
      throw ParseError(path + ": expected column '" + trailing[j] +
                       "', found '" + h[1 + p + j] + "'");
  }
  return p;
}

struct XyData {
  std::vector<std::uint64_t> ids;
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
};

XyData read_xy(const std::string& path) {
  CsvTable table = read_table(path);
  const std::size_t p = check_header(table, path, {"y"});
  const std::size_t n = table.rows.size();
  if (n == 0) throw ParseError(path + ": no data rows");
  XyData out;
  out.ids.reserve(n);
  out.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  out.y.resize(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = table.rows[i];
    const std::size_t line_no = i + 2;
    out.ids.push_back(parse_id(row[0], path, line_no));
    for (std::size_t j = 0; j < p; ++j)
      out.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_double(row[1 + j], path, line_no, "x" + std::to_string(j + 1));
    out.y[static_cast<Eigen::Index>(i)] =
        parse_double(row[1 + p], path, line_no, "y");
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open file for writing");
  return out;
}

}  // namespace

FinitePopulation load_population_csv(const std::string& path) {
  XyData data = read_xy(path);
  try {
    return FinitePopulation::create(std::move(data.ids), std::move(data.x),
                                    std::move(data.y));
  } catch (const InvariantError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BigDataSample load_big_csv(const std::string& path,
                           std::optional<std::uint64_t> population_size) {
  XyData data = read_xy(path);
  try {
    return BigDataSample::create(std::move(data.ids), std::move(data.x),
                                 std::move(data.y), population_size);
  } catch (const InvariantError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

ProbabilitySample load_probability_csv(const std::string& path) {
  CsvTable table = read_table(path);
  const bool has_y = !table.header.empty() && table.header.back() == "y";
  const std::size_t p =
      check_header(table, path,
                   has_y ? std::vector<std::string>{"d", "delta", "y"}
                         : std::vector<std::string>{"d", "delta"});
  const std::size_t n = table.rows.size();
  if (n == 0) throw ParseError(path + ": no data rows");

  std::vector<std::uint64_t> ids;
  ids.reserve(n);
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  Eigen::VectorXd d(static_cast<Eigen::Index>(n));
  std::vector<std::uint8_t> delta(n);
  Eigen::VectorXd y;
  if (has_y) y.resize(static_cast<Eigen::Index>(n));

  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = table.rows[i];
    const std::size_t line_no = i + 2;
    ids.push_back(parse_id(row[0], path, line_no));
    for (std::size_t j = 0; j < p; ++j)
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          parse_double(row[1 + j], path, line_no, "x" + std::to_string(j + 1));
    const double dv = parse_double(row[1 + p], path, line_no, "d");
    if (!(dv > 0.0))
      throw ParseError(path + ": line " + std::to_string(line_no) +
                       ": design weight d must be positive, got " + row[1 + p]);
    d[static_cast<Eigen::Index>(i)] = dv;
    const double dl = parse_double(row[2 + p], path, line_no, "delta");
    if (dl != 0.0 && dl != 1.0)
      throw ParseError(path + ": line " + std::to_string(line_no) +
                       ": delta must be 0 or 1, got " + row[2 + p]);
    delta[i] = static_cast<std::uint8_t>(dl);
    if (has_y)
      y[static_cast<Eigen::Index>(i)] =
          parse_double(row[3 + p], path, line_no, "y");
  }
  try {
    return ProbabilitySample::create(
        std::move(ids), std::move(x), std::move(d), std::move(delta),
        has_y ? std::optional<Eigen::VectorXd>(std::move(y)) : std::nullopt);
  } catch (const InvariantError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_population_csv(const std::string& path,
                          const FinitePopulation& pop) {
  auto out = open_out(path);
  out << "id";
  for (std::size_t j = 0; j < pop.dim(); ++j) out << ",x" << (j + 1);
  out << ",y\n";
  for (std::size_t i = 0; i < pop.size(); ++i) {
    out << pop.ids[i];
    for (std::size_t j = 0; j < pop.dim(); ++j)
      out << ',' << fmt(pop.x(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j)));
    out << ',' << fmt(pop.y[static_cast<Eigen::Index>(i)]) << '\n';
  }
}

void write_big_csv(const std::string& path, const BigDataSample& big) {
  auto out = open_out(path);
  out << "id";
  for (std::size_t j = 0; j < big.dim(); ++j) out << ",x" << (j + 1);
  out << ",y\n";
  for (std::size_t i = 0; i < big.size(); ++i) {
    out << big.ids[i];
    for (std::size_t j = 0; j < big.dim(); ++j)
      out << ',' << fmt(big.x(static_cast<Eigen::Index>(i),
                              static_cast<Eigen::Index>(j)));
    out << ',' << fmt(big.y[static_cast<Eigen::Index>(i)]) << '\n';
  }
}

void write_probability_csv(const std::string& path,
                           const ProbabilitySample& sample) {
  auto out = open_out(path);
  out << "id";
  for (std::size_t j = 0; j < sample.dim(); ++j) out << ",x" << (j + 1);
  out << ",d,delta";
  if (sample.y) out << ",y";
  out << '\n';
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out << sample.ids[i];
    for (std::size_t j = 0; j < sample.dim(); ++j)
      out << ',' << fmt(sample.x(static_cast<Eigen::Index>(i),
                                 static_cast<Eigen::Index>(j)));
    out << ',' << fmt(sample.d[static_cast<Eigen::Index>(i)]) << ','
        << static_cast<int>(sample.delta[i]);
    if (sample.y) out << ',' << fmt((*sample.y)[static_cast<Eigen::Index>(i)]);
    out << '\n';
  }
}

}  // namespace bigsurv
