#ifndef LOGHM_RANDOM_INSTANCES_HPP
#define LOGHM_RANDOM_INSTANCES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "json.hpp"

#include "loghm/analytic_map.hpp"
#include "loghm/error.hpp"
#include "loghm/logharmonic_map.hpp"

namespace loghm {

inline constexpr double kInstanceScale = 0.99;
inline constexpr double kZeroRadius = 0.9;
inline constexpr int kMaxBlaschkeDegree = 4;

/// A random member of L_R: epsilon = scale * e^{i phi} * z * prod (z - a)/(1 - conj(a) z)
/// gives h' = (1 + epsilon)/(1 - epsilon); omega = scale * e^{i psi} * prod (z - b)/(1 - conj(b) z).
struct LRInstance {
  std::vector<cplx> epsilon_zeros;  ///< zeros besides the forced one at 0
  double epsilon_rotation = 0.0;
  std::vector<cplx> omega_zeros;
  double omega_rotation = 0.0;
  double scale = kInstanceScale;
};

/// Seeded source of doubles in [0, 1): std::mt19937_64 (fully specified by
/// the standard) with the top 53 bits mapped to [0, 1).
class InstanceRng {
 public:
  explicit InstanceRng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the disk |z| <= radius.
  cplx in_disk(double radius) {
    const double rho = radius * std::sqrt(uniform());
    return std::polar(rho, 2.0 * std::numbers::pi * uniform());
  }

  /// Uniform integer in [lo, hi].
  int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

inline LRInstance random_instance(InstanceRng& rng) {
  LRInstance inst;
  const int eps_extra = rng.integer(0, kMaxBlaschkeDegree - 1);
  for (int i = 0; i < eps_extra; ++i) inst.epsilon_zeros.push_back(rng.in_disk(kZeroRadius));
  inst.epsilon_rotation = 2.0 * std::numbers::pi * rng.uniform();
  const int omega_degree = rng.integer(0, kMaxBlaschkeDegree);
  for (int i = 0; i < omega_degree; ++i) inst.omega_zeros.push_back(rng.in_disk(kZeroRadius));
  inst.omega_rotation = 2.0 * std::numbers::pi * rng.uniform();
  return inst;
}

inline std::vector<LRInstance> random_instances(int count, std::uint64_t seed) {
  InstanceRng rng(seed);
  std::vector<LRInstance> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(random_instance(rng));
  return out;
}

inline AnalyticMap instance_epsilon(const LRInstance& inst) {
  std::vector<cplx> zeros{cplx{}};
  zeros.insert(zeros.end(), inst.epsilon_zeros.begin(), inst.epsilon_zeros.end());
  return presets::blaschke(std::move(zeros), inst.scale, inst.epsilon_rotation);
}

inline AnalyticMap instance_omega(const LRInstance& inst) {
  return presets::blaschke(inst.omega_zeros, inst.scale, inst.omega_rotation);
}

inline LogharmonicMap build_instance(const LRInstance& inst, int order = kDefaultOrder) {
  return LogharmonicMap::from_dilatation(presets::herglotz(instance_epsilon(inst)), instance_omega(inst),
                                         Variant::Nonvanishing, order);
}

inline nlohmann::json to_json(const LRInstance& inst) {
  auto zeros = [](const std::vector<cplx>& zs) {
    auto a = nlohmann::json::array();
    for (const auto& z : zs) a.push_back(complex_to_json(z));
    return a;
  };
  return {{"epsilon", {{"zeros", zeros(inst.epsilon_zeros)}, {"rotation", inst.epsilon_rotation}}},
          {"omega", {{"zeros", zeros(inst.omega_zeros)}, {"rotation", inst.omega_rotation}}},
          {"scale", inst.scale}};
}

inline LRInstance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("epsilon") || !j.contains("omega"))
    throw Error(ErrorKind::InputError, "instance needs \"epsilon\" and \"omega\"");
  LRInstance inst;
  const auto read = [](const nlohmann::json& part, std::vector<cplx>& zeros, double& rotation) {
    if (part.contains("zeros")) {
      if (!part.at("zeros").is_array()) throw Error(ErrorKind::InputError, "zeros must be an array");
      for (const auto& z : part.at("zeros")) {
        const cplx a = complex_from_json(z);
        if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::InputError, "instance zero outside the disk");
        zeros.push_back(a);
      }
    }
    rotation = part.value("rotation", 0.0);
  };
  read(j.at("epsilon"), inst.epsilon_zeros, inst.epsilon_rotation);
  read(j.at("omega"), inst.omega_zeros, inst.omega_rotation);
  inst.scale = j.value("scale", kInstanceScale);
  if (!(inst.scale > 0.0 && inst.scale < 1.0)) throw Error(ErrorKind::InputError, "instance scale must lie in (0, 1)");
  if (inst.epsilon_zeros.size() + 1 > kMaxBlaschkeDegree || inst.omega_zeros.size() > kMaxBlaschkeDegree)
    throw Error(ErrorKind::InputError, "Blaschke degree exceeds 4");
  return inst;
}

}  // namespace loghm

#endif  // LOGHM_RANDOM_INSTANCES_HPP
