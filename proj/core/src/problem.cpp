#include "hyperik/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperik {

SearchProblem make_ik_problem(const RobotModel& model, const Position& target) {
    if (!(std::isfinite(target.x) && std::isfinite(target.y) &&
          std::isfinite(target.z))) {
        throw std::invalid_argument("target position must be finite");
    }
    SearchProblem p;
    p.dimension = model.dof();
    p.lower = model.lower_bounds();
    p.upper = model.upper_bounds();
    p.evaluate = [model, target](const Eigen::VectorXd& q) {
        return objective(model, target, q);
    };
    return p;
}

Eigen::VectorXd clamp(const SearchProblem& problem, Eigen::VectorXd position) {
    return position.cwiseMax(problem.lower).cwiseMin(problem.upper);
}

Candidate sample_uniform(const SearchProblem& problem, Rng& rng) {
    Candidate c;
    c.position.resize(problem.dimension);
    for (int i = 0; i < problem.dimension; ++i) {
        c.position[i] = rng.uniform(problem.lower[i], problem.upper[i]);
    }
    c.cost = problem.evaluate(c.position);
    return c;
}

} // namespace hyperik
