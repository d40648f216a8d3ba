// Copyright 2026 The wavecauchy Authors
// SPDX-License-Identifier: Apache-2.0

#include "wavecauchy/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "wavecauchy/errors.hpp"

namespace wavecauchy
{

using nlohmann::json;

namespace
{

// Collects every problem instead of stopping at the first one.
class Problems
{
public:
  void Add(std::string msg) { list_.push_back(std::move(msg)); }
  bool Empty() const { return list_.empty(); }
  const std::vector<std::string> &List() const { return list_; }

  // Runs `step`, recording any wavecauchy::Error it throws.
  void Try(const std::string &context, const std::function<void()> &step)
  {
    try
    {
      step();
    }
    catch (const ValidationError &e)
    {
      for (const std::string &m : e.Messages())
      {
        Add(context + ": " + m);
      }
    }
    catch (const Error &e)
    {
      Add(context + ": " + e.what());
    }
  }

private:
  std::vector<std::string> list_;
};

double Number(const json &obj, const char *key, double fallback, const std::string &path,
              Problems &problems)
{
  if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null())
  {
    return fallback;
  }
  const json &v = obj.at(key);
  if (!v.is_number())
  {
    problems.Add(path + "." + key + " must be a number");
    return fallback;
  }
  return v.get<double>();
}

int Integer(const json &obj, const char *key, int fallback, const std::string &path,
            Problems &problems)
{
  if (!obj.is_object() || !obj.contains(key) || obj.at(key).is_null())
  {
    return fallback;
  }
  const json &v = obj.at(key);
  if (!v.is_number_integer())
  {
    problems.Add(path + "." + key + " must be an integer");
    return fallback;
  }
  return v.get<int>();
}

std::string String(const json &obj, const char *key, const std::string &fallback,
                   const std::string &path, Problems &problems)
{
  if (!obj.is_object() || !obj.contains(key))
  {
    return fallback;
  }
  if (!obj.at(key).is_string())
  {
    problems.Add(path + "." + key + " must be a string");
    return fallback;
  }
  return obj.at(key).get<std::string>();
}

std::vector<double> Numbers(const json &obj, const char *key, std::size_t expected,
                            const std::string &path, Problems &problems)
{
  if (!obj.is_object() || !obj.contains(key))
  {
    return {};
  }
  const json &v = obj.at(key);
  if (!v.is_array() || v.size() != expected)
  {
    problems.Add(path + "." + key + " must be an array of " + std::to_string(expected) +
                 " numbers");
    return {};
  }
  std::vector<double> out;
  for (const json &e : v)
  {
    if (!e.is_number())
    {
      problems.Add(path + "." + key + " must contain numbers only");
      return {};
    }
    out.push_back(e.get<double>());
  }
  return out;
}

XVec XVector(const json &obj, const char *key, int dim_n, const std::string &path,
             Problems &problems)
{
  const std::vector<double> v = Numbers(obj, key, static_cast<std::size_t>(dim_n - 1), path, problems);
  XVec out{};
  for (std::size_t i = 0; i < v.size(); ++i)
  {
    out[i] = v[i];
  }
  return out;
}

// Point (x..., y) in R^n.
std::optional<SpacePoint> PointVector(const json &obj, const char *key, int dim_n,
                                      const std::string &path, Problems &problems)
{
  const std::vector<double> v = Numbers(obj, key, static_cast<std::size_t>(dim_n), path, problems);
  if (v.empty())
  {
    return std::nullopt;
  }
  SpacePoint p;
  p.x[0] = v[0];
  if (dim_n == 3)
  {
    p.x[1] = v[1];
  }
  p.y = v.back();
  return p;
}

json XJson(const XVec &x, int dim_n)
{
  return dim_n == 2 ? json::array({x[0]}) : json::array({x[0], x[1]});
}

DomainProfile ParseProfile(const json &doc, int dim_n, Problems &problems)
{
  const std::string path = "profile";
  if (!doc.is_object())
  {
    problems.Add("profile section is missing");
    return FlatProfile(dim_n, 1.0);
  }
  const std::string kind = String(doc, "kind", "flat", path, problems);
  const double level = Number(doc, "level", 1.0, path, problems);
  DomainProfile p = FlatProfile(dim_n, level);
  problems.Try(path, [&] {
    switch (ProfileKindFromString(kind))
    {
      case ProfileKind::Flat:
        break;
      case ProfileKind::Tilted:
        p = TiltedProfile(dim_n, level, XVector(doc, "slope", dim_n, path, problems));
        break;
      case ProfileKind::GaussianBump:
        p = GaussianBumpProfile(dim_n, level, Number(doc, "amplitude", 0.0, path, problems),
                                Number(doc, "width", 1.0, path, problems),
                                XVector(doc, "center", dim_n, path, problems));
        break;
      case ProfileKind::CustomSeries:
      {
        std::vector<SeriesTerm> terms;
        if (doc.contains("series") && doc.at("series").is_array())
        {
          for (const json &t : doc.at("series"))
          {
            SeriesTerm term;
            term.cos_amplitude = Number(t, "cos", 0.0, path + ".series", problems);
            term.sin_amplitude = Number(t, "sin", 0.0, path + ".series", problems);
            term.wavevector = XVector(t, "wavevector", dim_n, path + ".series", problems);
            terms.push_back(term);
          }
        }
        else
        {
          problems.Add("profile.series must be an array for custom_series");
        }
        p = CustomSeriesProfile(dim_n, level, std::move(terms));
        break;
      }
    }
  });
  p.c1 = Number(doc, "C1", p.c1, path, problems);
  p.c2 = Number(doc, "C2", p.c2, path, problems);
  return p;
}

PulseSpec ParsePulse(const json &doc, const std::string &path, Problems &problems)
{
  PulseSpec pulse;
  const json empty = json::object();
  const json &p = doc.contains("pulse") ? doc.at("pulse") : empty;
  pulse.sigma = Number(p, "sigma", pulse.sigma, path + ".pulse", problems);
  pulse.amplitude = Number(p, "amplitude", pulse.amplitude, path + ".pulse", problems);
  pulse.delay = Number(p, "delay", pulse.delay, path + ".pulse", problems);
  return pulse;
}

std::optional<WaveFieldModel> ParseFieldTerm(const json &doc, int dim_n, const std::string &path,
                                             Problems &problems)
{
  const std::string kind = String(doc, "kind", "", path, problems);
  std::optional<WaveFieldModel> model;
  problems.Try(path, [&] {
    if (kind == "plane_wave")
    {
      const std::vector<double> d =
          Numbers(doc, "direction", static_cast<std::size_t>(dim_n), path, problems);
      if (d.empty())
      {
        problems.Add(path + ".direction is required for plane_wave");
        return;
      }
      std::array<double, 3> dir{d[0], dim_n == 3 ? d[1] : 0.0, d.back()};
      model = PlaneWave(dim_n, dir, ParsePulse(doc, path, problems));
    }
    else if (kind == "point_source_3d" || kind == "cylindrical_source_2d")
    {
      const int need = kind == "point_source_3d" ? 3 : 2;
      if (dim_n != need)
      {
        problems.Add(path + ": " + kind + " requires dimension " + std::to_string(need));
        return;
      }
      const auto q = PointVector(doc, "source", dim_n, path, problems);
      if (!q)
      {
        problems.Add(path + ".source is required for " + kind);
        return;
      }
      const double radius = Number(doc, "scatterer_radius", 0.0, path, problems);
      const PulseSpec pulse = ParsePulse(doc, path, problems);
      model = need == 3 ? PointSource3d(*q, pulse, radius) : CylindricalSource2d(*q, pulse, radius);
    }
    else if (kind == "standing_wave")
    {
      model = StandingWave(dim_n, XVector(doc, "k", dim_n, path, problems),
                           Number(doc, "k_y", 0.0, path, problems),
                           Number(doc, "phase", 0.0, path, problems),
                           Number(doc, "amplitude", 1.0, path, problems));
    }
    else if (kind == "affine")
    {
      model = AffineField(dim_n, Number(doc, "c0", 0.0, path, problems),
                          Number(doc, "c_t", 0.0, path, problems),
                          XVector(doc, "c_x", dim_n, path, problems),
                          Number(doc, "c_y", 0.0, path, problems));
    }
    else
    {
      problems.Add(path + ".kind '" + kind + "' is not a known field kind");
    }
  });
  return model;
}

// Source fields must be defined on the closed domain or confine their
// singularity to a scatterer ball inside the domain and away from the cone.
void CheckFieldPlacement(const ExperimentConfig &c, Problems &problems)
{
  for (const FieldTerm &term : c.field->Terms())
  {
    const SpacePoint *q = nullptr;
    double radius = 0.0;
    if (const auto *s = std::get_if<PointSourceTerm>(&term))
    {
      q = &s->source;
      radius = s->scatterer_radius;
    }
    else if (const auto *s2 = std::get_if<CylindricalSourceTerm>(&term))
    {
      q = &s2->source;
      radius = s2->scatterer_radius;
    }
    if (q == nullptr)
    {
      continue;
    }
    const double boundary = c.profile.Y(q->x);
    if (radius <= 0.0)
    {
      if (!(q->y > boundary))
      {
        problems.Add("field: a source inside the domain needs a scatterer_radius (ball omega)");
      }
      continue;
    }
    if (!(q->y + radius < boundary))
    {
      problems.Add("field: scatterer ball omega must lie inside the domain");
    }
    if (!(DistanceToCone(c.target, *q) > radius))
    {
      problems.Add("field: scatterer ball omega intersects the cone K above the target");
    }
  }
}

}  // namespace

std::optional<double> ExperimentConfig::Truth() const
{
  const SpacePoint p{target.x, target.y};
  if (!field || !field->IsValid(p))
  {
    return std::nullopt;
  }
  return field->Value(p, target.t);
}

ExperimentConfig ParseConfig(const json &doc)
{
  Problems problems;
  ExperimentConfig c;
  if (!doc.is_object())
  {
    throw ValidationError({"configuration must be a JSON object"});
  }
  c.source = doc;
  c.dim_n = Integer(doc, "dimension", 2, "", problems);
  if (c.dim_n != 2 && c.dim_n != 3)
  {
    problems.Add("dimension must be 2 or 3");
    throw ValidationError(problems.List());
  }
  const json empty = json::object();
  auto section = [&](const char *key) -> const json & {
    if (!doc.contains(key))
    {
      return empty;
    }
    if (!doc.at(key).is_object())
    {
      problems.Add(std::string(key) + " must be an object");
      return empty;
    }
    return doc.at(key);
  };

  c.profile = ParseProfile(doc.contains("profile") ? doc.at("profile") : json(), c.dim_n, problems);

  const json &tg = section("target");
  c.target.x = XVector(tg, "x", c.dim_n, "target", problems);
  c.target.y = Number(tg, "y", 0.0, "target", problems);
  c.target.t = Number(tg, "t", 0.0, "target", problems);

  const json &sw = section("sweep");
  c.sweep.h_max = Number(sw, "h_max", c.sweep.h_max, "sweep", problems);
  c.sweep.ratio = Number(sw, "ratio", c.sweep.ratio, "sweep", problems);
  c.sweep.count = Integer(sw, "count", c.sweep.count, "sweep", problems);
  c.sweep.precision_budget =
      Number(sw, "precision_budget", c.sweep.precision_budget, "sweep", problems);
  if (sw.contains("resolution_guard"))
  {
    if (sw.at("resolution_guard").is_boolean())
    {
      c.sweep.resolution_guard = sw.at("resolution_guard").get<bool>();
    }
    else
    {
      problems.Add("sweep.resolution_guard must be a boolean");
    }
  }
  problems.Try("sweep", [&] { c.sweep.Validate(); });

  const json &ap = section("aperture");
  c.margin = Number(ap, "margin", c.sweep.h_max > 0.0 ? DefaultMargin(c.sweep.h_max) : 0.5,
                    "aperture", problems);
  c.counts.nodes_x = Integer(ap, "nodes_x", c.counts.nodes_x, "aperture", problems);
  c.counts.nodes_t = Integer(ap, "nodes_t", c.counts.nodes_t, "aperture", problems);
  c.counts.nodes_angular = Integer(ap, "nodes_angular", c.counts.nodes_angular, "aperture", problems);
  if (c.margin < 0.0)
  {
    problems.Add("aperture.margin must be >= 0");
  }
  if (c.counts.nodes_x < 2 || c.counts.nodes_t < 2 || c.counts.nodes_angular < 1)
  {
    problems.Add("aperture node counts must be >= 2 (nodes_angular >= 1)");
  }

  const json &ns = section("noise");
  c.noise.level = Number(ns, "level", 0.0, "noise", problems);
  const double seed = Number(ns, "seed", 0.0, "noise", problems);
  if (c.noise.level < 0.0)
  {
    problems.Add("noise.level must be >= 0");
  }
  if (seed < 0.0 || seed != std::floor(seed))
  {
    problems.Add("noise.seed must be a non-negative integer");
  }
  else
  {
    c.noise.seed = static_cast<std::uint64_t>(seed);
  }

  const json &kn = section("kernel");
  c.kernel.s_nodes = Integer(kn, "s_nodes", c.kernel.s_nodes, "kernel", problems);
  c.kernel.xi_nodes = Integer(kn, "xi_nodes", c.kernel.xi_nodes, "kernel", problems);
  c.kernel.xi_cutoff_tol = Number(kn, "xi_cutoff_tol", c.kernel.xi_cutoff_tol, "kernel", problems);
  c.kernel.sigma_min_factor =
      Number(kn, "sigma_min_factor", c.kernel.sigma_min_factor, "kernel", problems);
  if (kn.contains("sigma_min") && !kn.at("sigma_min").is_null())
  {
    c.kernel.sigma_min = Number(kn, "sigma_min", 0.0, "kernel", problems);
  }
  problems.Try("kernel", [&] {
    KernelParams probe;
    probe.h = c.sweep.h_max > 0.0 ? c.sweep.h_max : 1.0;
    probe.dim_n = c.dim_n;
    probe.s_nodes = c.kernel.s_nodes;
    probe.xi_nodes = c.kernel.xi_nodes;
    probe.xi_cutoff_tol = c.kernel.xi_cutoff_tol;
    probe.sigma_min =
        c.kernel.sigma_min ? *c.kernel.sigma_min : c.kernel.sigma_min_factor * std::sqrt(probe.h);
    probe.Validate();
  });

  if (doc.contains("field") && !doc.at("field").is_null())
  {
    const json &f = doc.at("field");
    const json terms = f.is_array() ? f : json::array({f});
    for (std::size_t k = 0; k < terms.size(); ++k)
    {
      auto m = ParseFieldTerm(terms[k], c.dim_n, "field[" + std::to_string(k) + "]", problems);
      if (m)
      {
        c.field = c.field ? *c.field + *m : *m;
      }
    }
  }

  c.output_dir = String(doc, "output", "out", "", problems);

  problems.Try("profile", [&] {
    // Box large enough to contain the cone-cap search radius.
    const double box = (c.profile.c1 + std::abs(c.target.y) + c.profile.c2 * Norm(c.target.x)) /
                           std::max(1e-6, 1.0 - c.profile.c2) +
                       1.0 + Norm(c.target.x);
    ValidateGrowth(c.profile, box, c.dim_n == 2 ? 2001 : 101);
  });

  if (problems.Empty())
  {
    problems.Try("aperture", [&] {
      const ApertureChart chart = c.BuildChart();
      if (c.field)
      {
        for (std::size_t i = 0; i < chart.NodeCount(); ++i)
        {
          const SpacePoint p{chart.nodes[i].x, chart.nodes[i].y};
          if (!c.field->IsValid(p))
          {
            problems.Add("field is not valid at aperture node " + std::to_string(i));
            break;
          }
        }
      }
    });
  }
  else
  {
    problems.Try("target", [&] { CheckTarget(c.profile, c.target); });
  }
  if (c.field)
  {
    CheckFieldPlacement(c, problems);
    if (!c.field->IsValid({c.target.x, c.target.y}))
    {
      problems.Add("field: target lies inside the scatterer set or at a source");
    }
  }
  if (!problems.Empty())
  {
    throw ValidationError(problems.List());
  }
  return c;
}

ExperimentConfig LoadConfig(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw IoError("cannot open configuration file " + path.string());
  }
  json doc;
  try
  {
    in >> doc;
  }
  catch (const json::parse_error &e)
  {
    throw ValidationError({"configuration " + path.string() + " is not valid JSON: " + e.what()});
  }
  return ParseConfig(doc);
}

json GeometryFingerprint(const ExperimentConfig &c)
{
  const DomainProfile &p = c.profile;
  json profile = {{"kind", ToString(p.kind)}, {"level", p.level}, {"C1", p.c1}, {"C2", p.c2}};
  switch (p.kind)
  {
    case ProfileKind::Flat:
      break;
    case ProfileKind::Tilted:
      profile["slope"] = XJson(p.slope, c.dim_n);
      break;
    case ProfileKind::GaussianBump:
      profile["amplitude"] = p.amplitude;
      profile["width"] = p.width;
      profile["center"] = XJson(p.center, c.dim_n);
      break;
    case ProfileKind::CustomSeries:
    {
      json terms = json::array();
      for (const SeriesTerm &t : p.series)
      {
        terms.push_back({{"cos", t.cos_amplitude},
                         {"sin", t.sin_amplitude},
                         {"wavevector", XJson(t.wavevector, c.dim_n)}});
      }
      profile["series"] = terms;
      break;
    }
  }
  return {{"dimension", c.dim_n},
          {"profile", profile},
          {"target", {{"x", XJson(c.target.x, c.dim_n)}, {"y", c.target.y}, {"t", c.target.t}}},
          {"aperture",
           {{"margin", c.margin},
            {"nodes_x", c.counts.nodes_x},
            {"nodes_t", c.counts.nodes_t},
            {"nodes_angular", c.counts.nodes_angular}}}};
}

}  // namespace wavecauchy
