#include "hyperik/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperik {

namespace {

std::vector<DHRow> default_rows() {
    std::vector<DHRow> rows;
    rows.push_back({0.0, deg2rad(90.0), 3.0, 0.0, deg2rad(360.0)});
    for (int i = 0; i < 8; ++i) {
        rows.push_back({1.0, 0.0, 0.0, deg2rad(-90.0), deg2rad(90.0)});
    }
    return rows;
}

void validate_rows(const std::vector<DHRow>& rows) {
    if (rows.size() != 9) {
        throw std::invalid_argument("RobotModel requires exactly 9 DH rows");
    }
    for (const DHRow& r : rows) {
        if (!(std::isfinite(r.a) && std::isfinite(r.alpha) &&
              std::isfinite(r.d) && std::isfinite(r.theta_min) &&
              std::isfinite(r.theta_max))) {
            throw std::invalid_argument("DH row has a non-finite entry");
        }
        if (r.a < 0.0) {
            throw std::invalid_argument("DH link length a must be >= 0");
        }
        if (!(r.theta_min < r.theta_max)) {
            throw std::invalid_argument("DH row needs theta_min < theta_max");
        }
    }
}

} // namespace

RobotModel::RobotModel() : rows_(default_rows()) {}

RobotModel::RobotModel(std::vector<DHRow> rows) : rows_(std::move(rows)) {
    validate_rows(rows_);
}

Eigen::VectorXd RobotModel::lower_bounds() const {
    Eigen::VectorXd lo(dof());
    for (int i = 0; i < dof(); ++i) lo[i] = rows_[i].theta_min;
    return lo;
}

Eigen::VectorXd RobotModel::upper_bounds() const {
    Eigen::VectorXd hi(dof());
    for (int i = 0; i < dof(); ++i) hi[i] = rows_[i].theta_max;
    return hi;
}

Position RobotModel::workspace_center() const {
    return {0.0, 0.0, rows_.front().d};
}

double RobotModel::workspace_radius() const {
    // Joint 1 sweeps its link in the base plane; every later link can add at
    // most its own extent to the distance from the shoulder.
    double radius = rows_.front().a;
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        radius += std::hypot(rows_[i].a, rows_[i].d);
    }
    return radius;
}

Transform dh_transform(const DHRow& row, double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const double ca = std::cos(row.alpha);
    const double sa = std::sin(row.alpha);
    Transform t;
    t << ct, -st * ca,  st * sa, row.a * ct,
         st,  ct * ca, -ct * sa, row.a * st,
        0.0,       sa,       ca,      row.d,
        0.0,      0.0,      0.0,        1.0;
    return t;
}

Position forward_kinematics(const RobotModel& model, const Eigen::VectorXd& q) {
    if (q.size() != model.dof()) {
        throw std::invalid_argument("joint vector size does not match model");
    }
    Transform t = dh_transform(model.rows()[0], q[0]);
    for (int i = 1; i < model.dof(); ++i) {
        t *= dh_transform(model.rows()[i], q[i]);
    }
    return {t(0, 3), t(1, 3), t(2, 3)};
}

double fitness(const Position& desired, const Position& reached) {
    const double dx = desired.x - reached.x;
    const double dy = desired.y - reached.y;
    const double dz = desired.z - reached.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double objective(const RobotModel& model, const Position& target,
                 const Eigen::VectorXd& q) {
    return fitness(target, forward_kinematics(model, q));
}

} // namespace hyperik
