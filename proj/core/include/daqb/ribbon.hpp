#pragma once

#include "daqb/word.hpp"

#include <cmath>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace daqb {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(double k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
  friend Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend bool operator==(const Vec3 &, const Vec3 &) = default;
};

double dot(Vec3 a, Vec3 b);
Vec3 cross(Vec3 a, Vec3 b);
double norm(Vec3 a);
Vec3 normalized(Vec3 a);
/// Rotation of `v` about the unit axis `k` by `angle` (right-handed).
Vec3 rotate(Vec3 v, Vec3 k, double angle);

/// Geometry errors: degenerate or anti-parallel steps, bad prescriptions.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Frame {
  Vec3 u; // direction of motion
  Vec3 v; // ribbon direction
  Vec3 w; // normal, u x v

  static Frame from_uv(Vec3 u, Vec3 v);
  /// max of |u.v|, |u.w|, |v.w|, ||u|-1|, ||v|-1|, ||w|-1|, |w - u x v|
  double orthonormality_error() const;
};

/// Largest componentwise distance between corresponding axes.
double frame_deviation(const Frame &a, const Frame &b);

enum class Crossing { None, XFace, YFace };

struct RibbonSample {
  double s = 0;
  Vec3 position;
  std::optional<Vec3> tangent;
  std::optional<Vec3> ribbon;
  Crossing crossing = Crossing::None;
};

struct RibbonPath {
  std::vector<RibbonSample> samples;
  /// Direction in which the path descends; used to mirror a path.
  Vec3 descent{0, 0, -1};
  double max_step = 0.1;

  /// Checks step sizes and face-crossing prescriptions; throws GeometryError.
  void validate() const;
  /// Unit tangents: given ones, otherwise finite differences of positions.
  std::vector<Vec3> tangents() const;
};

/// No-roll transport by the minimal rotation between consecutive tangents.
std::vector<Frame> transport_frame(const RibbonPath &path, const Frame &initial);

struct TwistResult {
  double total_twist = 0;
  std::vector<double> per_segment;
  double residual_orthogonality_error = 0;
  std::size_t samples = 0;

  /// {"total_twist": ..., "samples": ..., "residual": ...}
  std::string to_json() const;
};

/// Twist of the prescribed ribbon direction relative to the no-roll frame.
/// Anticlockwise (the sense of Q_i) is positive; seen from the co-moving
/// frame the same ribbon direction turns clockwise about u. Samples without
/// a prescription follow the no-roll frame.
TwistResult total_twist(const RibbonPath &path);

/// Signed right-handed angle about each u from the transported v to the
/// prescribed v, unwrapped; the ribbon frames are the transported frames
/// turned by these angles.
std::vector<Frame> ribbon_frames(const RibbonPath &path);

/// u(t) = cos(2 pi t) y + sin(2 pi t) z with the ribbon direction
/// v(t) = -cos(2 pi t) x + sin^2(2 pi t) y - sin(2 pi t) cos(2 pi t) z,
/// t = k / samples; positions integrate u with the trapezoid rule.
RibbonPath analytic_q_path(int n, int i, int samples);

/// Closed forms of the no-roll frame along analytic_q_path:
/// e1 = u(t), e2 = -x, e3 = -sin(2 pi t) y + cos(2 pi t) z.
Frame analytic_transported_frame(double t);
/// Closed forms u(t), v(t), w(t) of the ribbon frame.
Frame analytic_ribbon_frame(double t);

/// Polyline realization of a generator inside the unrolled unit cube.
/// Strand i rests at x = (i - 1/2)/N, y = 1/2 and descends from z = 1 to
/// z = 0. Y_i winds once through the x-faces, Z_i once through the y-faces,
/// T_i moves the active strand to the next position, Q_i inserts the
/// analytic loop. Negative exponents give the mirrored path; |k| copies are
/// stacked. Sigma has no path.
RibbonPath generator_path(const Letter &letter, int n, int samples = 256);

/// The path of the inverse element: mirror through the plane orthogonal to
/// the descent axis and traverse backwards. The twist changes sign.
RibbonPath inverse(const RibbonPath &path);
/// Same curve traversed backwards; the twist is unchanged.
RibbonPath reverse_traversal(const RibbonPath &path);

/// Joins two paths end to start. Requires coincident junction points and
/// tangents within `max_angle_deg`.
RibbonPath concatenate(const RibbonPath &a, const RibbonPath &b, double max_angle_deg = 10.0);

/// CSV with header s,x,y,z[,vx,vy,vz].
RibbonPath read_csv(std::istream &in);
void write_csv(std::ostream &out, const RibbonPath &path);

} // namespace daqb
