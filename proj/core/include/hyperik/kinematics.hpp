#pragma once

#include <Eigen/Dense>
#include <numbers>
#include <vector>

namespace hyperik {

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Cartesian end-effector position in cm.
struct Position {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// One Denavit-Hartenberg row: link length a (cm), twist alpha (rad),
/// offset d (cm), plus the joint-angle box [theta_min, theta_max] (rad).
struct DHRow {
    double a = 0.0;
    double alpha = 0.0;
    double d = 0.0;
    double theta_min = 0.0;
    double theta_max = 0.0;
};

using Transform = Eigen::Matrix4d;

/// Geometric description of the 9-DOF serial arm.
class RobotModel {
public:
    /// Builds the default arm: joint 1 lifts the chain by d=3 cm about a
    /// vertical axis with theta in [0, 360] deg; joints 2-9 are unit links
    /// in a common plane with theta in [-90, 90] deg.
    RobotModel();

    /// Throws std::invalid_argument unless there are exactly 9 valid rows.
    explicit RobotModel(std::vector<DHRow> rows);

    const std::vector<DHRow>& rows() const { return rows_; }
    int dof() const { return static_cast<int>(rows_.size()); }

    Eigen::VectorXd lower_bounds() const;
    Eigen::VectorXd upper_bounds() const;

    /// Center and radius of a sphere containing every reachable position.
    Position workspace_center() const;
    double workspace_radius() const;

private:
    std::vector<DHRow> rows_;
};

/// Single-joint homogeneous transform. Bottom row is exactly (0,0,0,1) and
/// the rotation block is orthonormal for any finite theta.
Transform dh_transform(const DHRow& row, double theta);

/// End-effector position: translation column of T1 * T2 * ... * T9,
/// accumulated left to right with full 4x4 products.
Position forward_kinematics(const RobotModel& model, const Eigen::VectorXd& q);

/// Euclidean distance between two positions (cm).
double fitness(const Position& desired, const Position& reached);

/// Positional error of configuration q against the target; the cost every
/// optimizer minimizes.
double objective(const RobotModel& model, const Position& target,
                 const Eigen::VectorXd& q);

} // namespace hyperik
