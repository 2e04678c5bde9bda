#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace dirsh {

/// One bandit arm: the exponent pair (beta1, beta2) of the selection law.
struct Arm {
  double beta1 = 1.0;
  double beta2 = 1.0;

  friend bool operator==(const Arm&, const Arm&) = default;
};

/// {1, 2, 4, 8} x {1, 2, 4, 8}, beta1-major.
std::vector<Arm> default_arm_grid();

inline const double kDefaultExploration = std::sqrt(2.0);

/// UCB1 over a fixed arm set, credited once per solution-generation episode.
///
/// Arms are pulled at every decision of an episode; the episode is then
/// settled with a single reward shared by every arm pulled in it. Selection
/// reads only settled statistics, so it is a pure function of the state.
class UcbBandit {
 public:
  explicit UcbBandit(std::vector<Arm> arms = default_arm_grid(),
                     double exploration = kDefaultExploration);

  /// Index of the arm UCB picks now: the lowest-index never-pulled arm,
  /// otherwise argmax of mean + c * sqrt(2 ln(total) / count).
  std::size_t select_arm() const;

  /// select_arm(), recorded for credit at the next settlement.
  const Arm& pull();

  /// Credits `reward` (clipped to [0, 1]) to every arm pulled since the last
  /// settlement: one count increment each plus an incremental mean update.
  void settle(double reward);

  /// Reward for objective value `f` (lower is better), normalized against the
  /// running best and worst values, which are first widened to include `f`.
  /// Settles and returns the reward.
  double settle_objective(double f);

  /// Settles a discarded episode with reward 0.
  void settle_discard() { settle(0.0); }

  /// mean + c * sqrt(2 ln(total) / count).
  static double ucb_index(double mean, long count, long total, double c);

  /// (f_worst - f) / (f_worst - f_best) clipped to [0, 1]; 0.5 if the range
  /// is empty.
  static double episode_reward(double f, double f_best, double f_worst);

  const std::vector<Arm>& arms() const { return arms_; }
  const std::vector<long>& counts() const { return counts_; }
  const std::vector<double>& means() const { return means_; }
  long total_pulls() const { return total_; }
  double exploration() const { return exploration_; }
  /// Arms pulled in the open episode, in index order.
  std::vector<std::size_t> pending() const;

  /// Forgets all statistics (chunk boundary).
  void reset();

 private:
  std::vector<Arm> arms_;
  double exploration_;
  std::vector<long> counts_;
  std::vector<double> means_;
  std::vector<char> pulled_;
  long total_ = 0;
  std::optional<double> f_best_;
  std::optional<double> f_worst_;
};

}  // namespace dirsh
