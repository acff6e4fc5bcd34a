#include "rpvt/distribution.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rpvt {

namespace {

double unit_ball_volume(int n) {
  return std::exp(0.5 * n * std::log(M_PI) - std::lgamma(0.5 * n + 1.0));
}

// Normalizer of (1-t^2)^p on [-1,1]: 1 / B(1/2, p+1).
double marginal_norm(double p) {
  return std::exp(std::lgamma(p + 1.5) - 0.5 * std::log(M_PI) - std::lgamma(p + 1.0));
}

double trapezoid_integral(const std::vector<double>& table, double a, double b) {
  const std::size_t m = table.size();
  const double h = (b - a) / static_cast<double>(m - 1);
  double s = 0.5 * (table.front() + table.back());
  for (std::size_t i = 1; i + 1 < m; ++i) s += table[i];
  return s * h;
}

}  // namespace

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::cube_solid: return "cube_solid";
    case Kind::cube_vertices: return "cube_vertices";
    case Kind::ball: return "ball";
    case Kind::sphere: return "sphere";
    case Kind::beta: return "beta";
    case Kind::product_1d: return "product_1d";
  }
  throw std::logic_error("kind_name: bad enum");
}

Kind kind_from_name(const std::string& name) {
  if (name == "cube_solid") return Kind::cube_solid;
  if (name == "cube_vertices") return Kind::cube_vertices;
  if (name == "ball") return Kind::ball;
  if (name == "sphere") return Kind::sphere;
  if (name == "beta") return Kind::beta;
  if (name == "product_1d") return Kind::product_1d;
  throw std::invalid_argument("unknown distribution kind: " + name);
}

void DistributionSpec::validate() const {
  if (dim < 1) throw std::invalid_argument("DistributionSpec: dim must be >= 1");
  if (kind == Kind::beta && beta_param <= -1.0) {
    throw std::invalid_argument("DistributionSpec: beta requires beta_param > -1");
  }
  if (kind == Kind::product_1d && product_table.size() < 3) {
    throw std::invalid_argument("DistributionSpec: product_1d needs a density table");
  }
  if (isotropic_scale <= 0.0) {
    throw std::invalid_argument("DistributionSpec: isotropic_scale must be positive");
  }
}

std::optional<double> DistributionSpec::kappa() const {
  switch (kind) {
    case Kind::cube_solid:
    case Kind::ball:
      return 1.0 / dim;
    case Kind::beta:
      return 1.0 / (beta_param + dim);
    default:
      return std::nullopt;
  }
}

std::optional<double> DistributionSpec::support_volume() const {
  const double s = isotropic_scale;
  switch (kind) {
    case Kind::cube_solid:
    case Kind::cube_vertices:
      return std::pow(2.0 * s, dim);
    case Kind::ball:
    case Kind::sphere:
    case Kind::beta:
      return std::pow(s, dim) * unit_ball_volume(dim);
    case Kind::product_1d:
      return std::pow(2.0 * s, dim);
  }
  return std::nullopt;
}

DistributionSpec make_cube_solid(int n) {
  DistributionSpec s;
  s.kind = Kind::cube_solid;
  s.dim = n;
  s.validate();
  return s;
}

DistributionSpec make_cube_vertices(int n) {
  DistributionSpec s;
  s.kind = Kind::cube_vertices;
  s.dim = n;
  s.validate();
  return s;
}

DistributionSpec make_ball(int n) {
  DistributionSpec s;
  s.kind = Kind::ball;
  s.dim = n;
  s.validate();
  return s;
}

DistributionSpec make_sphere(int n) {
  DistributionSpec s;
  s.kind = Kind::sphere;
  s.dim = n;
  s.validate();
  return s;
}

DistributionSpec make_beta(int n, double beta) {
  DistributionSpec s;
  s.kind = Kind::beta;
  s.dim = n;
  s.beta_param = beta;
  s.validate();
  return s;
}

DistributionSpec make_product_1d(int n, std::vector<double> density_table) {
  DistributionSpec s;
  s.kind = Kind::product_1d;
  s.dim = n;
  s.product_table = std::move(density_table);
  s.validate();
  const double z = trapezoid_integral(s.product_table, -1.0, 1.0);
  if (z <= 0.0) throw std::invalid_argument("product_1d: density table integrates to 0");
  for (double& v : s.product_table) v /= z;
  return s;
}

double coordinate_second_moment(const DistributionSpec& spec) {
  switch (spec.kind) {
    case Kind::cube_solid:
      return 1.0 / 3.0;
    case Kind::cube_vertices:
      return 1.0;
    case Kind::ball:
      return 1.0 / (spec.dim + 2.0);
    case Kind::sphere:
      return 1.0 / spec.dim;
    case Kind::beta:
      return 1.0 / (spec.dim + 2.0 * spec.beta_param + 2.0);
    case Kind::product_1d: {
      const std::size_t m = spec.product_table.size();
      std::vector<double> weighted(m);
      for (std::size_t i = 0; i < m; ++i) {
        const double t = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(m - 1);
        weighted[i] = t * t * spec.product_table[i];
      }
      return trapezoid_integral(weighted, -1.0, 1.0);
    }
  }
  throw std::logic_error("coordinate_second_moment: bad kind");
}

DistributionSpec isotropize(const DistributionSpec& spec) {
  spec.validate();
  DistributionSpec out = spec;
  const double m2 = coordinate_second_moment(spec) * spec.isotropic_scale * spec.isotropic_scale;
  out.isotropic_scale = spec.isotropic_scale / std::sqrt(m2);
  return out;
}

double marginal_density_1d(const DistributionSpec& spec, double t) {
  const double s = spec.isotropic_scale;
  const double u = t / s;
  switch (spec.kind) {
    case Kind::cube_solid:
      return std::abs(u) <= 1.0 ? 0.5 / s : 0.0;
    case Kind::ball:
    case Kind::beta: {
      if (std::abs(u) >= 1.0) return 0.0;
      const double beta = spec.kind == Kind::ball ? 0.0 : spec.beta_param;
      const double p = beta + 0.5 * (spec.dim - 1);
      return marginal_norm(p) * std::pow(1.0 - u * u, p) / s;
    }
    case Kind::product_1d: {
      if (std::abs(u) > 1.0) return 0.0;
      const std::size_t m = spec.product_table.size();
      const double pos = (u + 1.0) * 0.5 * static_cast<double>(m - 1);
      const std::size_t i = std::min(static_cast<std::size_t>(pos), m - 2);
      const double frac = pos - static_cast<double>(i);
      return (spec.product_table[i] * (1.0 - frac) + spec.product_table[i + 1] * frac) / s;
    }
    default:
      throw std::invalid_argument("marginal_density_1d: unsupported kind " +
                                  kind_name(spec.kind));
  }
}

double support_norm(const DistributionSpec& spec, std::span<const double> x) {
  const double s = spec.isotropic_scale;
  switch (spec.kind) {
    case Kind::cube_solid:
    case Kind::cube_vertices:
    case Kind::product_1d: {
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      return m / s;
    }
    case Kind::ball:
    case Kind::sphere:
    case Kind::beta: {
      double n2 = 0.0;
      for (double v : x) n2 += v * v;
      return std::sqrt(n2) / s;
    }
  }
  throw std::logic_error("support_norm: bad kind");
}

double isotropic_constant(const DistributionSpec& spec) {
  const double s = spec.isotropic_scale;
  const int n = spec.dim;
  switch (spec.kind) {
    case Kind::cube_solid:
      return 1.0 / (2.0 * s);
    case Kind::ball:
      return 1.0 / (s * std::pow(unit_ball_volume(n), 1.0 / n));
    case Kind::beta: {
      // density const*(1-|x/s|^2)^beta / s^n, peak at the center
      const double b = spec.beta_param;
      if (b < 0.0) throw std::invalid_argument("isotropic_constant: beta < 0 is not log-concave");
      const double logc = std::lgamma(0.5 * n + b + 1.0) - 0.5 * n * std::log(M_PI) -
                          std::lgamma(b + 1.0);
      return std::exp((logc - n * std::log(s)) / n);
    }
    default:
      throw std::invalid_argument("isotropic_constant: unsupported kind " +
                                  kind_name(spec.kind));
  }
}

std::string spec_to_kv(const DistributionSpec& spec) {
  std::ostringstream os;
  os << "kind=" << kind_name(spec.kind) << "\n";
  os << "dim=" << spec.dim << "\n";
  char buf[64];
  if (spec.kind == Kind::beta) {
    std::snprintf(buf, sizeof buf, "%.17g", spec.beta_param);
    os << "beta=" << buf << "\n";
  }
  std::snprintf(buf, sizeof buf, "%.17g", spec.isotropic_scale);
  os << "scale=" << buf << "\n";
  if (spec.kind == Kind::product_1d) {
    os << "table=";
    for (std::size_t i = 0; i < spec.product_table.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", spec.product_table[i]);
      os << (i ? "," : "") << buf;
    }
    os << "\n";
  }
  return os.str();
}

DistributionSpec spec_from_kv(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("spec_from_kv: malformed line: " + line);
    }
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  DistributionSpec s;
  if (!kv.count("kind") || !kv.count("dim")) {
    throw std::invalid_argument("spec_from_kv: kind and dim are required");
  }
  s.kind = kind_from_name(kv["kind"]);
  s.dim = std::stoi(kv["dim"]);
  if (kv.count("beta")) s.beta_param = std::stod(kv["beta"]);
  if (kv.count("scale")) s.isotropic_scale = std::stod(kv["scale"]);
  if (kv.count("table")) {
    std::istringstream ts(kv["table"]);
    std::string tok;
    while (std::getline(ts, tok, ',')) s.product_table.push_back(std::stod(tok));
  }
  s.validate();
  return s;
}

}  // namespace rpvt
