#include "morikawa/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace morikawa::geometry {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kRelTol = 1e-13;     // bisection resolution, relative
constexpr double kSweepMargin = 1e-6;  // sweep stops at pi/2 - this

double point_segment_dist2(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 v = b - a;
    Vec2 w = p - a;
    double len2 = dot(v, v);
    double t = len2 > 0.0 ? std::clamp(dot(w, v) / len2, 0.0, 1.0) : 0.0;
    Vec2 d = w - t * v;
    return dot(d, d);
}

bool point_in_square(const Vec2& p, const SquarePose& pose) {
    auto vs = pose.vertices();
    for (int i = 0; i < 4; ++i) {
        // vertices are counterclockwise
        if (cross(vs[(i + 1) % 4] - vs[i], p - vs[i]) < 0.0) return false;
    }
    return true;
}

// Sign of distance(center, square) - radius without taking square roots.
int clearance_sign(const Vec2& center, double radius, const SquarePose& pose) {
    if (point_in_square(center, pose)) return -1;
    auto vs = pose.vertices();
    double d2 = point_segment_dist2(center, vs[0], vs[1]);
    for (int i = 1; i < 4; ++i) d2 = std::min(d2, point_segment_dist2(center, vs[i], vs[(i + 1) % 4]));
    double r2 = radius * radius;
    if (d2 > r2) return 1;
    if (d2 < r2) return -1;
    return 0;
}

// Slides the square rightward along L until it just touches C1. Clearance to
// C1 is negative at offset 0 (the square pokes into the disk when v_dn sits
// at the tangency point) and positive once the square is fully to the right,
// and is convex in the offset, so bisection on [0, s+2] finds the right-hand
// touching offset.
double slide_to_touch_c1(const Scene& scene, double theta, double s) {
    const Vec2 c1 = scene.center1();
    double lo = 0.0;
    double hi = s + 2.0;
    if (clearance_sign(c1, 1.0, SquarePose::at(hi, theta, s)) < 0)
        throw ConvergenceError("slide bracket: square still touches C1 at the far end");
    const double tol = kRelTol * hi;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (clearance_sign(c1, 1.0, SquarePose::at(mid, theta, s)) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

int cr_clearance_sign_when_touching_c1(const Scene& scene, double theta, double s) {
    double d = slide_to_touch_c1(scene, theta, s);
    return clearance_sign(scene.center_r(), scene.r, SquarePose::at(d, theta, s));
}

SquarePose solve_inscribed(const Scene& scene, double theta, double s_hi) {
    if (!(theta >= 0.0 && theta < kHalfPi)) throw DomainError("theta must lie in [0, pi/2)");
    double lo = 1e-9;
    double hi = s_hi;
    if (cr_clearance_sign_when_touching_c1(scene, theta, lo) <= 0)
        throw ConvergenceError("outer bracket: smallest square already reaches Cr");
    if (cr_clearance_sign_when_touching_c1(scene, theta, hi) > 0)
        throw ConvergenceError("outer bracket: largest square does not reach Cr");
    const double tol = kRelTol * std::max(1.0, hi);
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (cr_clearance_sign_when_touching_c1(scene, theta, mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    double s = 0.5 * (lo + hi);
    double d = slide_to_touch_c1(scene, theta, s);
    SquarePose pose = SquarePose::at(d, theta, s);
    auto cl = clearances(scene, pose);
    double limit = 1e-10 * std::max(1.0, scene.r);
    if (std::abs(cl[0]) > limit || std::abs(cl[1]) > limit || std::abs(cl[2]) > limit)
        throw ConvergenceError("inscribed square clearance exceeds tolerance");
    return pose;
}

struct SideTangency {
    SideId side;
    double foot_t;        // parameter of the perpendicular foot along the side
    double foot_gap;      // distance from the foot to the nearest endpoint
    VertexId near_vertex;
};

CircleContact contact_with_circle(const SquarePose& pose, const Vec2& center, double radius, double tol) {
    auto vs = pose.vertices();

    std::optional<SideTangency> tangency;
    for (int i = 0; i < 4; ++i) {
        const Vec2& a = vs[i];
        const Vec2& b = vs[(i + 1) % 4];
        Vec2 v = b - a;
        double len = norm(v);
        double line_dist = std::abs(cross(v, center - a)) / len;
        if (std::abs(line_dist - radius) > tol) continue;
        double t = dot(center - a, v) / (len * len);
        double margin = tol / len;
        if (t < -margin || t > 1.0 + margin) continue;
        double gap_a = std::abs(t) * len;
        double gap_b = std::abs(1.0 - t) * len;
        SideTangency cand{static_cast<SideId>(i), t, std::min(gap_a, gap_b),
                          gap_a <= gap_b ? static_cast<VertexId>(i) : static_cast<VertexId>((i + 1) % 4)};
        if (!tangency || cand.foot_gap > tangency->foot_gap) tangency = cand;
    }

    std::optional<VertexId> corner;
    double best_gap = tol;
    for (int i = 0; i < 4; ++i) {
        double gap = std::abs(norm(vs[i] - center) - radius);
        if (gap <= best_gap) {
            best_gap = gap;
            corner = static_cast<VertexId>(i);
        }
    }

    CircleContact out;
    if (tangency) {
        // A tangency whose foot sits at a vertex is the degenerate
        // corner-with-tangency contact; the threshold is the half-chord
        // length at depth tol.
        double foot_tol = std::sqrt(2.0 * radius * tol);
        if (tangency->foot_gap <= foot_tol) {
            out.kind = CircleContactKind::CornerWithTangency;
            out.vertex = tangency->near_vertex;
            out.side = tangency->side;
        } else {
            out.kind = CircleContactKind::SideTangent;
            out.side = tangency->side;
        }
    } else if (corner) {
        out.kind = CircleContactKind::Corner;
        out.vertex = corner;
    }
    return out;
}

std::optional<std::string> derive_hint(const ContactProfile& profile) {
    if (profile.line_contact == LineContactKind::SideOnLine) return "theta-zero";
    const auto& c1 = profile.c1_contact;
    const auto& cr = profile.cr_contact;
    if (c1.kind == CircleContactKind::CornerWithTangency && cr.kind == CircleContactKind::CornerWithTangency)
        return "#9";
    if (c1.kind == CircleContactKind::Corner && cr.kind == CircleContactKind::Corner) {
        if (c1.vertex == VertexId::A && cr.vertex == VertexId::Up) return "#6";
        if (c1.vertex == VertexId::Up && cr.vertex == VertexId::B) return "#19";
    }
    return std::nullopt;
}

}  // namespace

double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double norm(const Vec2& v) { return std::hypot(v.x, v.y); }

Scene Scene::with_radius(double r) {
    if (!(r >= 1.0)) throw DomainError("scene radius must satisfy r >= 1");
    Scene s;
    s.r = r;
    s.sqrt_r = std::sqrt(r);
    return s;
}

SquarePose SquarePose::at(double offset, double theta, double s) {
    double c = std::cos(theta);
    double sn = std::sin(theta);
    SquarePose p;
    p.theta = theta;
    p.s = s;
    p.v_dn = {offset, 0.0};
    p.v_B = {offset + s * c, s * sn};
    p.v_up = {offset + s * (c - sn), s * (sn + c)};
    p.v_A = {offset - s * sn, s * c};
    return p;
}

double signed_distance(const Vec2& p, const SquarePose& pose) {
    auto vs = pose.vertices();
    double d2 = point_segment_dist2(p, vs[0], vs[1]);
    for (int i = 1; i < 4; ++i) d2 = std::min(d2, point_segment_dist2(p, vs[i], vs[(i + 1) % 4]));
    double d = std::sqrt(d2);
    return point_in_square(p, pose) ? -d : d;
}

std::array<double, 3> clearances(const Scene& scene, const SquarePose& pose) {
    auto vs = pose.vertices();
    double lowest = vs[0].y;
    for (int i = 1; i < 4; ++i) lowest = std::min(lowest, vs[i].y);
    return {lowest,
            signed_distance(scene.center1(), pose) - 1.0,
            signed_distance(scene.center_r(), pose) - scene.r};
}

double default_contact_tol(const Scene& scene) { return 1e-9 * std::max(1.0, scene.r); }

SquarePose inscribed_square(const Scene& scene, double theta) {
    return solve_inscribed(scene, theta, 2.0 * scene.sqrt_r + 2.0);
}

SquarePose detail::inscribed_square_bracketed(const Scene& scene, double theta, double s_hi) {
    return solve_inscribed(scene, theta, s_hi);
}

ContactProfile classify(const Scene& scene, const SquarePose& pose, double tol) {
    auto cl = clearances(scene, pose);
    if (std::abs(cl[0]) > tol || std::abs(cl[1]) > tol || std::abs(cl[2]) > tol)
        throw NotInscribed("pose clearance exceeds contact tolerance");

    ContactProfile profile;
    // The next vertex counterclockwise from v_dn also lies on L exactly when
    // theta = 0; compare its height against tol.
    profile.line_contact =
        pose.v_B.y <= tol ? LineContactKind::SideOnLine : LineContactKind::CornerOnLine;
    profile.c1_contact = contact_with_circle(pose, scene.center1(), 1.0, tol);
    profile.cr_contact = contact_with_circle(pose, scene.center_r(), scene.r, tol);
    if (profile.c1_contact.kind == CircleContactKind::None ||
        profile.cr_contact.kind == CircleContactKind::None)
        throw NotInscribed("no contact detected on a circle despite small clearance");
    profile.named_hint = derive_hint(profile);
    return profile;
}

ContactProfile classify(const Scene& scene, const SquarePose& pose) {
    return classify(scene, pose, default_contact_tol(scene));
}

double bound_M(double r) {
    if (!(r > 0.0)) throw DomainError("bound_M requires r > 0");
    return 2.0 * r / (r + std::sqrt(8.0) * std::sqrt(r) + 1.0);
}

PivotSplit pivot_balance(double ell, double phi, double beta) {
    if (!(ell > 0.0)) throw DomainError("segment length must be positive");
    if (!(phi > 0.0 && phi < kHalfPi)) throw DomainError("phi must lie in (0, pi/2)");
    if (!(beta > kHalfPi - phi && beta < kHalfPi)) throw DomainError("beta must lie in (pi/2 - phi, pi/2)");
    double gamma = std::numbers::pi - phi - beta;
    // b*cot(beta) = c*cot(gamma), b + c = ell; sin(beta+gamma) = sin(phi).
    PivotSplit out;
    out.b = ell * std::cos(gamma) * std::sin(beta) / std::sin(phi);
    out.c = ell - out.b;
    return out;
}

double pivot_y(double ell, double phi, double beta) {
    if (!(ell > 0.0)) throw DomainError("segment length must be positive");
    if (!(phi > 0.0 && phi < kHalfPi)) throw DomainError("phi must lie in (0, pi/2)");
    if (!(beta > kHalfPi - phi && beta < kHalfPi)) throw DomainError("beta must lie in (pi/2 - phi, pi/2)");
    double gamma = std::numbers::pi - phi - beta;
    return ell * (std::cos(gamma) + std::cos(gamma - beta) * std::cos(beta)) / std::sin(gamma + beta);
}

MuBruteResult brute_force_mu(const Scene& scene, int grid_n) {
    if (grid_n < 100) throw DomainError("brute_force_mu requires grid_n >= 100");
    const double theta_max = kHalfPi - kSweepMargin;
    int best_i = 0;
    double best_s = std::numeric_limits<double>::infinity();
    auto theta_at = [&](int i) { return theta_max * static_cast<double>(i) / static_cast<double>(grid_n - 1); };
    for (int i = 0; i < grid_n; ++i) {
        double s = inscribed_square(scene, theta_at(i)).s;
        if (s < best_s) {
            best_s = s;
            best_i = i;
        }
    }

    // Golden-section refinement of the winning bracket.
    double a = theta_at(std::max(0, best_i - 1));
    double b = theta_at(std::min(grid_n - 1, best_i + 1));
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = inscribed_square(scene, c).s;
    double fd = inscribed_square(scene, d).s;
    while (b - a > 1e-12) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = inscribed_square(scene, c).s;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = inscribed_square(scene, d).s;
        }
    }
    double theta_star = 0.5 * (a + b);
    return {theta_star, inscribed_square(scene, theta_star).s};
}

}  // namespace morikawa::geometry
