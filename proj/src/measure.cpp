#include "gencase/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gencase {

void LengthDistribution::finish_table(double untruncated_total) {
  double sum = 0;
  for (double v : table_) sum += v;
  if (sum <= 0) throw std::invalid_argument("length distribution has no mass");
  truncation_error_ =
      untruncated_total > 0 ? 1.0 - sum / untruncated_total : 0.0;
  for (double& v : table_) v /= sum;
  cdf_.resize(table_.size());
  double acc = 0;
  for (std::size_t i = 0; i < table_.size(); ++i) {
    acc += table_[i];
    cdf_[i] = acc;
  }
  cdf_.back() = 1.0;
}

LengthDistribution LengthDistribution::cauchy(std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("cauchy needs n_max >= 1");
  LengthDistribution d;
  d.kind_ = DistKind::Cauchy;
  d.table_.assign(n_max + 1, 0.0);
  for (std::size_t n = 1; n <= n_max; ++n)
    d.table_[n] = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  constexpr double kPi = 3.14159265358979323846;
  d.finish_table(kPi * kPi / 6.0);
  return d;
}

LengthDistribution LengthDistribution::geometric(double ratio, std::size_t n_max) {
  if (!(ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument("geometric ratio must lie in (0,1)");
  LengthDistribution d;
  d.kind_ = DistKind::Geometric;
  d.param_a_ = ratio;
  d.table_.assign(n_max + 1, 0.0);
  double w = 1.0 - ratio;
  for (std::size_t n = 0; n <= n_max; ++n) {
    d.table_[n] = w;
    w *= ratio;
  }
  d.finish_table(1.0);
  return d;
}

LengthDistribution LengthDistribution::uniform_range(std::size_t a, std::size_t b) {
  if (a > b) throw std::invalid_argument("uniform range needs a <= b");
  LengthDistribution d;
  d.kind_ = DistKind::UniformRange;
  d.param_a_ = static_cast<double>(a);
  d.param_b_ = static_cast<double>(b);
  d.table_.assign(b + 1, 0.0);
  for (std::size_t n = a; n <= b; ++n) d.table_[n] = 1.0;
  d.finish_table(0.0);
  return d;
}

LengthDistribution LengthDistribution::point_mass(std::size_t n) {
  LengthDistribution d;
  d.kind_ = DistKind::PointMass;
  d.param_a_ = static_cast<double>(n);
  d.table_.assign(n + 1, 0.0);
  d.table_[n] = 1.0;
  d.finish_table(0.0);
  return d;
}

LengthDistribution LengthDistribution::truncated(std::size_t new_n_max) const {
  switch (kind_) {
    case DistKind::Cauchy:
      return cauchy(new_n_max);
    case DistKind::Geometric:
      return geometric(param_a_, new_n_max);
    case DistKind::UniformRange: {
      std::size_t a = static_cast<std::size_t>(param_a_);
      std::size_t b = static_cast<std::size_t>(param_b_);
      return uniform_range(a, std::min(b, new_n_max));
    }
    case DistKind::PointMass: {
      std::size_t n = static_cast<std::size_t>(param_a_);
      if (n > new_n_max)
        throw std::invalid_argument("point mass beyond truncation");
      return point_mass(n);
    }
  }
  throw std::logic_error("unreachable");
}

std::size_t LengthDistribution::sample_length(Rng& rng) const {
  double u = rng.unit();
  auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<std::size_t>(it - cdf_.begin());
}

std::string LengthDistribution::spec() const {
  switch (kind_) {
    case DistKind::Cauchy:
      return "cauchy";
    case DistKind::Geometric:
      return "geom:" + std::to_string(param_a_);
    case DistKind::UniformRange:
      return "uniform:" + std::to_string(static_cast<std::size_t>(param_a_)) +
             ":" + std::to_string(static_cast<std::size_t>(param_b_));
    case DistKind::PointMass:
      return "point:" + std::to_string(static_cast<std::size_t>(param_a_));
  }
  return "?";
}

double LengthInvariantMeasure::mass(const Word& w) const {
  if (universe_ == Universe::ReducedWords && !is_reduced(w))
    throw std::invalid_argument("word outside the reduced-word universe");
  std::size_t n = w.size();
  double dn = dist_.d(n);
  if (dn == 0.0) return 0.0;
  double k = static_cast<double>(alphabet_.letters());
  // exact division while the slice size fits a double, log-space beyond
  double log2_slice;
  if (universe_ == Universe::AllWords) {
    log2_slice = static_cast<double>(n) * std::log2(k);
  } else {
    log2_slice = n == 0 ? 0.0
                        : std::log2(k) + static_cast<double>(n - 1) * std::log2(k - 1);
  }
  if (log2_slice < 52.0) {
    double slice = slice_count(alphabet_, universe_, n).to_double();
    return dn / slice;
  }
  return std::exp2(std::log2(dn) - log2_slice);
}

Word LengthInvariantMeasure::sample(Rng& rng) const {
  std::size_t n = dist_.sample_length(rng);
  return sample_word(alphabet_, universe_, n, rng);
}

LengthInvariantMeasure parse_measure_spec(const Alphabet& alphabet,
                                          const std::string& spec,
                                          std::size_t n_max) {
  std::string body = spec;
  Universe universe = Universe::AllWords;
  const std::string suffix = "@reduced";
  if (body.size() >= suffix.size() &&
      body.compare(body.size() - suffix.size(), suffix.size(), suffix) == 0) {
    universe = Universe::ReducedWords;
    body = body.substr(0, body.size() - suffix.size());
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
      std::size_t colon = s.find(':', start);
      parts.push_back(s.substr(start, colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    return parts;
  };
  std::vector<std::string> parts = split(body);
  try {
    if (parts[0] == "cauchy" && parts.size() == 1)
      return {alphabet, universe, LengthDistribution::cauchy(n_max)};
    if (parts[0] == "geom" && parts.size() == 2)
      return {alphabet, universe,
              LengthDistribution::geometric(std::stod(parts[1]), n_max)};
    if (parts[0] == "uniform" && parts.size() == 3)
      return {alphabet, universe,
              LengthDistribution::uniform_range(std::stoul(parts[1]),
                                                std::stoul(parts[2]))};
    if (parts[0] == "point" && parts.size() == 2)
      return {alphabet, universe,
              LengthDistribution::point_mass(std::stoul(parts[1]))};
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad measure parameters: " + spec);
  }
  throw std::invalid_argument("unknown measure spec: " + spec);
}

}  // namespace gencase
