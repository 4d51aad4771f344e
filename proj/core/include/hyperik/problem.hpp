#pragma once

#include <Eigen/Dense>
#include <functional>
#include <limits>

#include "hyperik/kinematics.hpp"
#include "hyperik/rng.hpp"

namespace hyperik {

/// Box-constrained minimization problem.
struct SearchProblem {
    int dimension = 0;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::function<double(const Eigen::VectorXd&)> evaluate;
};

/// A position in the search space with its cached cost.
struct Candidate {
    Eigen::VectorXd position;
    double cost = std::numeric_limits<double>::infinity();
};

/// The 9-dimensional positional-error problem for a target point. Bounds
/// come from the model's joint limits; evaluate is objective().
/// Throws std::invalid_argument if the target is not finite.
SearchProblem make_ik_problem(const RobotModel& model, const Position& target);

/// Coordinate-wise projection onto [lower, upper]; idempotent.
Eigen::VectorXd clamp(const SearchProblem& problem, Eigen::VectorXd position);

/// Uniform draw in the bound box, coordinate by coordinate, cost evaluated.
Candidate sample_uniform(const SearchProblem& problem, Rng& rng);

} // namespace hyperik
