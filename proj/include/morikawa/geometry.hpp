#pragma once

#include <array>
#include <optional>
#include <string>

#include "morikawa/errors.hpp"

namespace morikawa::geometry {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator*(double c, const Vec2& v) { return {c * v.x, c * v.y}; }
double dot(const Vec2& a, const Vec2& b);
double cross(const Vec2& a, const Vec2& b);
double norm(const Vec2& v);

// Canonical frame: the line L is the x-axis, the unit circle C1 is tangent to
// it at the origin (center (0,1)), and the radius-r circle Cr is tangent to it
// at (2*sqrt(r), 0) (center (2*sqrt(r), r)). The two circles are then mutually
// tangent.
struct Scene {
    double r = 1.0;
    double sqrt_r = 1.0;

    // Throws DomainError for r < 1.
    static Scene with_radius(double r);

    Vec2 center1() const { return {0.0, 1.0}; }
    Vec2 center_r() const { return {2.0 * sqrt_r, r}; }
    Vec2 tangent_point1() const { return {0.0, 0.0}; }
    Vec2 tangent_point_r() const { return {2.0 * sqrt_r, 0.0}; }
};

// A tilted square resting on L. theta is the angle between L and the
// lower-right side; at theta = 0 the bottom side lies on L and v_dn is the
// lower-left vertex. Walking counterclockwise from the bottom vertex:
// v_dn -> v_B -> v_up -> v_A.
struct SquarePose {
    double theta = 0.0;
    double s = 0.0;
    Vec2 v_dn, v_B, v_up, v_A;

    static SquarePose at(double offset, double theta, double s);
    std::array<Vec2, 4> vertices() const { return {v_dn, v_B, v_up, v_A}; }
};

enum class VertexId { Dn = 0, B = 1, Up = 2, A = 3 };
// Sides by their endpoints, counterclockwise.
enum class SideId { DnB = 0, BUp = 1, UpA = 2, ADn = 3 };

enum class LineContactKind { CornerOnLine, SideOnLine };
enum class CircleContactKind { None, Corner, SideTangent, CornerWithTangency };

struct CircleContact {
    CircleContactKind kind = CircleContactKind::None;
    std::optional<VertexId> vertex;  // Corner / CornerWithTangency
    std::optional<SideId> side;      // SideTangent / CornerWithTangency
};

struct ContactProfile {
    LineContactKind line_contact = LineContactKind::CornerOnLine;
    CircleContact c1_contact;
    CircleContact cr_contact;
    // Best-effort configuration label where the contact pattern pins one:
    // "theta-zero", "#6", "#9", "#19".
    std::optional<std::string> named_hint;
};

constexpr const char* kVertexNames[4] = {"v_dn", "v_B", "v_up", "v_A"};
constexpr const char* kSideNames[4] = {"dn-B", "B-up", "up-A", "A-dn"};

// Signed distance from a point to the square: positive outside, negative
// inside, zero on the boundary.
double signed_distance(const Vec2& p, const SquarePose& pose);

// Clearances of a pose against the scene: {to L, to C1, to Cr}. A circle
// clearance is distance(center, square) - radius; zero means touching.
std::array<double, 3> clearances(const Scene& scene, const SquarePose& pose);

double default_contact_tol(const Scene& scene);

// The unique inscribed square at tilt theta in [0, pi/2): nested bisection,
// sliding the square along L until it just touches C1 (inner) and adjusting
// the side length until it just reaches Cr (outer), both to 1e-13 relative.
// Throws DomainError for theta outside [0, pi/2), ConvergenceError if a
// bracket fails.
SquarePose inscribed_square(const Scene& scene, double theta);

// How the square touches L, C1 and Cr. Throws NotInscribed if any clearance
// exceeds tol.
ContactProfile classify(const Scene& scene, const SquarePose& pose, double tol);
ContactProfile classify(const Scene& scene, const SquarePose& pose);

// Upper bound 2r/(r + sqrt(8)*sqrt(r) + 1) for the side length of squares in
// the corner-corner contact family; accepts any r > 0.
double bound_M(double r);

// Split ell = b + c of a length-ell segment at its instantaneous pivot, for
// the family of segments with endpoints on the x-axis and on a line through
// the origin at angle phi, meeting the x-axis at angle beta. The pivot
// satisfies b*cot(beta) = c*cot(gamma) with gamma = pi - phi - beta.
struct PivotSplit {
    double b = 0.0;  // distance from the pivot to the x-axis endpoint
    double c = 0.0;  // distance from the pivot to the other endpoint
};
PivotSplit pivot_balance(double ell, double phi, double beta);

// y-coordinate of the pivot of the family of lines perpendicular to the
// segments above through their pivots:
//   ell * (cos(gamma) + cos(gamma - beta)*cos(beta)) / sin(gamma + beta).
double pivot_y(double ell, double phi, double beta);

struct MuBruteResult {
    double theta_star = 0.0;
    double mu = 0.0;
};

// Global minimum of s(theta) by uniform sweep over [0, pi/2 - 1e-6] followed
// by golden-section refinement of the best bracket to 1e-12. grid_n >= 100.
MuBruteResult brute_force_mu(const Scene& scene, int grid_n);

namespace detail {
// inscribed_square with a caller-chosen outer bracket upper end; used to
// check that independent bracketings agree.
SquarePose inscribed_square_bracketed(const Scene& scene, double theta, double s_hi);
}  // namespace detail

}  // namespace morikawa::geometry
