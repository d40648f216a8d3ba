// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/dataset_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "wavecauchy/errors.hpp"

namespace wavecauchy
{

using nlohmann::json;

namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::ofstream OpenForWrite(const std::filesystem::path &path)
{
  if (path.has_parent_path())
  {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
    {
      throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                    ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
  {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  return out;
}

void Finish(std::ofstream &out, const std::filesystem::path &path)
{
  out.flush();
  if (!out)
  {
    throw IoError("write to " + path.string() + " failed");
  }
}

std::vector<std::string> SplitCsv(const std::string &line)
{
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ','))
  {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',')
  {
    fields.emplace_back();
  }
  return fields;
}

double ParseNumber(const std::string &text, const std::filesystem::path &path, std::size_t line)
{
  const char *begin = text.c_str();
  char *end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
  {
    throw DataError(path.string() + ":" + std::to_string(line) + ": '" + text +
                    "' is not a number");
  }
  return v;
}

void WriteRow(std::ostream &out, const std::vector<double> &values)
{
  for (std::size_t k = 0; k < values.size(); ++k)
  {
    if (k > 0)
    {
      out << ',';
    }
    out << FormatNumber(values[k]);
  }
  out << '\n';
}

json NumberOrNull(const std::optional<double> &v)
{
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string FormatNumber(double value)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  if (std::isinf(value))
  {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string DatasetCsvHeader(int dim_n)
{
  return dim_n == 2 ? "ix,it,x1,y,t,u,dnu" : "ix,it,x1,x2,y,t,u,dnu";
}

void WriteDatasetCsv(const CauchyDataSet &data, const std::filesystem::path &path)
{
  std::ofstream out = OpenForWrite(path);
  out << DatasetCsvHeader(data.dim_n) << '\n';
  auto coords = [&](const SpacePoint &p) {
    std::vector<double> c{p.x[0]};
    if (data.dim_n == 3)
    {
      c.push_back(p.x[1]);
    }
    c.push_back(p.y);
    return c;
  };
  for (std::size_t i = 0; i < data.nodes_x; ++i)
  {
    const std::vector<double> c = coords(data.points[i]);
    for (std::size_t j = 0; j < data.nodes_t; ++j)
    {
      const std::size_t k = data.Index(i, j);
      out << i << ',' << j << ',';
      std::vector<double> row = c;
      row.insert(row.end(), {data.t[k], data.u[k], data.dnu[k]});
      WriteRow(out, row);
    }
  }
  const std::vector<double> c = coords(data.trace_point);
  if (data.trace_minus)
  {
    std::vector<double> row = c;
    row.insert(row.end(), {data.trace_t_minus, *data.trace_minus, kNaN});
    out << "-1,0,";
    WriteRow(out, row);
  }
  if (data.trace_plus)
  {
    std::vector<double> row = c;
    row.insert(row.end(), {data.trace_t_plus, *data.trace_plus, kNaN});
    out << "-1,1,";
    WriteRow(out, row);
  }
  Finish(out, path);
}

CauchyDataSet ReadDatasetCsv(const std::filesystem::path &path, int dim_n)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw IoError("cannot open dataset " + path.string());
  }
  std::string line;
  if (!std::getline(in, line) || line != DatasetCsvHeader(dim_n))
  {
    throw DataError(path.string() + ": expected header '" + DatasetCsvHeader(dim_n) + "'");
  }
  const std::size_t width = dim_n == 2 ? 7 : 8;

  struct Row
  {
    long ix;
    long it;
    SpacePoint p;
    double t, u, dnu;
  };
  std::vector<Row> rows;
  std::vector<Row> traces;
  std::size_t line_no = 1;
  while (std::getline(in, line))
  {
    ++line_no;
    if (line.empty())
    {
      continue;
    }
    const std::vector<std::string> f = SplitCsv(line);
    if (f.size() != width)
    {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                      std::to_string(width) + " fields");
    }
    std::vector<double> v;
    for (const std::string &s : f)
    {
      v.push_back(ParseNumber(s, path, line_no));
    }
    Row r{static_cast<long>(v[0]), static_cast<long>(v[1]), {}, 0, 0, 0};
    std::size_t k = 2;
    r.p.x[0] = v[k++];
    if (dim_n == 3)
    {
      r.p.x[1] = v[k++];
    }
    r.p.y = v[k++];
    r.t = v[k++];
    r.u = v[k++];
    r.dnu = v[k++];
    (r.ix < 0 ? traces : rows).push_back(r);
  }

  CauchyDataSet data;
  data.dim_n = dim_n;
  if (rows.empty())
  {
    throw DataError(path.string() + ": no node samples");
  }
  data.nodes_x = static_cast<std::size_t>(rows.back().ix) + 1;
  data.nodes_t = static_cast<std::size_t>(rows.back().it) + 1;
  if (rows.size() != data.nodes_x * data.nodes_t)
  {
    throw DataError(path.string() + ": sample count does not match an (ix, it) tensor grid");
  }
  data.points.resize(data.nodes_x);
  data.t.resize(rows.size());
  data.u.resize(rows.size());
  data.dnu.resize(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k)
  {
    const Row &r = rows[k];
    if (r.ix < 0 || r.it < 0 || data.Index(static_cast<std::size_t>(r.ix),
                                           static_cast<std::size_t>(r.it)) != k)
    {
      throw DataError(path.string() + ": rows are not in (ix, it) order at sample " +
                      std::to_string(k));
    }
    data.points[static_cast<std::size_t>(r.ix)] = r.p;
    data.t[k] = r.t;
    data.u[k] = r.u;
    data.dnu[k] = r.dnu;
  }
  for (const Row &r : traces)
  {
    data.trace_point = r.p;
    if (r.it == 0)
    {
      data.trace_minus = r.u;
      data.trace_t_minus = r.t;
    }
    else if (r.it == 1)
    {
      data.trace_plus = r.u;
      data.trace_t_plus = r.t;
    }
    else
    {
      throw DataError(path.string() + ": trace rows need it = 0 or 1");
    }
  }
  return data;
}

void WriteSweepCsv(const SweepResult &sweep, const std::filesystem::path &path)
{
  std::ofstream out = OpenForWrite(path);
  out << "h,B,I,R,abs_err,rel_err\n";
  for (const SweepEntry &e : sweep.entries)
  {
    WriteRow(out, {e.h, e.boundary, e.integral, e.estimate, e.abs_err.value_or(kNaN),
                   e.rel_err.value_or(kNaN)});
  }
  Finish(out, path);
}

json SweepSummaryJson(const SweepResult &sweep)
{
  json entries = json::array();
  for (const SweepEntry &e : sweep.entries)
  {
    entries.push_back({{"h", e.h},
                       {"B", e.boundary},
                       {"I", e.integral},
                       {"R", e.estimate},
                       {"abs_err", NumberOrNull(e.abs_err)},
                       {"rel_err", NumberOrNull(e.rel_err)},
                       {"amplification", e.amplification}});
  }
  json doc = {{"schedule", sweep.schedule},
              {"entries", entries},
              {"truth", NumberOrNull(sweep.truth)},
              {"scale", sweep.scale},
              {"truncated", sweep.truncated},
              {"truncation_reason", sweep.truncation_reason}};
  if (sweep.selection)
  {
    const LimitSelection &s = *sweep.selection;
    json sel = {{"estimate", s.estimate},
                {"h_star", s.h_star},
                {"index", s.index},
                {"differences", s.differences},
                {"no_plateau", s.no_plateau}};
    if (sweep.truth)
    {
      sel["abs_err"] = std::abs(s.estimate - *sweep.truth);
      sel["rel_err"] = std::abs(s.estimate - *sweep.truth) / sweep.scale;
    }
    doc["selection"] = sel;
  }
  else
  {
    doc["selection"] = nullptr;
  }
  return doc;
}

void WriteJson(const json &doc, const std::filesystem::path &path)
{
  std::ofstream out = OpenForWrite(path);
  out << doc.dump(2) << '\n';
  Finish(out, path);
}

json ReadJson(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw IoError("cannot open " + path.string());
  }
  try
  {
    json doc;
    in >> doc;
    return doc;
  }
  catch (const json::parse_error &e)
  {
    throw DataError(path.string() + " is not valid JSON: " + e.what());
  }
}

}  // namespace wavecauchy
