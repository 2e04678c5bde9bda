#include "dirsh/bandit.hpp"

#include <algorithm>

#include "dirsh/errors.hpp"

namespace dirsh {

std::vector<Arm> default_arm_grid() {
  static constexpr double kBetas[] = {1.0, 2.0, 4.0, 8.0};
  std::vector<Arm> arms;
  for (double b1 : kBetas) {
    for (double b2 : kBetas) arms.push_back({b1, b2});
  }
  return arms;
}

UcbBandit::UcbBandit(std::vector<Arm> arms, double exploration)
    : arms_(std::move(arms)), exploration_(exploration) {
  if (arms_.empty()) throw ParameterError("bandit needs at least one arm");
  if (!(exploration_ >= 0.0)) {
    throw ParameterError("exploration constant must be non-negative");
  }
  for (const Arm& a : arms_) {
    if (!(a.beta1 >= 0.0) || !(a.beta2 >= 0.0)) {
      throw ParameterError("arm exponents must be non-negative");
    }
  }
  reset();
}

void UcbBandit::reset() {
  counts_.assign(arms_.size(), 0);
  means_.assign(arms_.size(), 0.0);
  pulled_.assign(arms_.size(), 0);
  total_ = 0;
  f_best_.reset();
  f_worst_.reset();
}

std::size_t UcbBandit::select_arm() const {
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    if (counts_[a] == 0) return a;
  }
  std::size_t best = 0;
  double best_score = -1.0;
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    const double score = ucb_index(means_[a], counts_[a], total_, exploration_);
    if (score > best_score) {
      best_score = score;
      best = a;
    }
  }
  return best;
}

const Arm& UcbBandit::pull() {
  const std::size_t a = select_arm();
  pulled_[a] = 1;
  return arms_[a];
}

void UcbBandit::settle(double reward) {
  reward = std::clamp(reward, 0.0, 1.0);
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    if (!pulled_[a]) continue;
    pulled_[a] = 0;
    ++counts_[a];
    ++total_;
    means_[a] += (reward - means_[a]) / static_cast<double>(counts_[a]);
  }
}

double UcbBandit::ucb_index(double mean, long count, long total, double c) {
  return mean + c * std::sqrt(2.0 * std::log(static_cast<double>(total)) /
                              static_cast<double>(count));
}

double UcbBandit::episode_reward(double f, double f_best, double f_worst) {
  if (f_worst == f_best) return 0.5;
  return std::clamp((f_worst - f) / (f_worst - f_best), 0.0, 1.0);
}

double UcbBandit::settle_objective(double f) {
  f_best_ = f_best_ ? std::min(*f_best_, f) : f;
  f_worst_ = f_worst_ ? std::max(*f_worst_, f) : f;
  const double r = episode_reward(f, *f_best_, *f_worst_);
  settle(r);
  return r;
}

std::vector<std::size_t> UcbBandit::pending() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < arms_.size(); ++a) {
    if (pulled_[a]) out.push_back(a);
  }
  return out;
}

}  // namespace dirsh
