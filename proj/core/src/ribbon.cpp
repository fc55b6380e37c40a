#include "daqb/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

namespace daqb {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kDegenerate = 1e-14;
} // namespace

double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(Vec3 a) {
  const double len = norm(a);
  if (len < kDegenerate)
    throw GeometryError("cannot normalize a zero vector");
  return (1.0 / len) * a;
}

Vec3 rotate(Vec3 v, Vec3 k, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return c * v + s * cross(k, v) + ((1 - c) * dot(k, v)) * k;
}

Frame Frame::from_uv(Vec3 u, Vec3 v) {
  u = normalized(u);
  v = normalized(v - dot(v, u) * u);
  return {u, v, cross(u, v)};
}

double Frame::orthonormality_error() const {
  double e = std::max({std::abs(dot(u, v)), std::abs(dot(u, w)), std::abs(dot(v, w)),
                       std::abs(norm(u) - 1), std::abs(norm(v) - 1), std::abs(norm(w) - 1)});
  return std::max(e, norm(w - cross(u, v)));
}

double frame_deviation(const Frame &a, const Frame &b) {
  double d = 0;
  for (Vec3 e : {a.u - b.u, a.v - b.v, a.w - b.w})
    d = std::max({d, std::abs(e.x), std::abs(e.y), std::abs(e.z)});
  return d;
}

void RibbonPath::validate() const {
  if (samples.size() < 2)
    throw GeometryError("a ribbon path needs at least two samples");
  for (std::size_t k = 1; k < samples.size(); ++k) {
    const double step = norm(samples[k].position - samples[k - 1].position);
    if (step < kDegenerate)
      throw GeometryError("consecutive positions coincide at sample " + std::to_string(k));
    if (step > max_step)
      throw GeometryError("step " + std::to_string(step) + " exceeds the maximum at sample " +
                          std::to_string(k));
  }
  const auto t = tangents();
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto &smp = samples[k];
    if (smp.crossing == Crossing::None)
      continue;
    if (!smp.ribbon)
      throw GeometryError("face crossing without a ribbon prescription at sample " + std::to_string(k));
    const Vec3 r = *smp.ribbon;
    // x-faces: the ribbon contains the vertical; y-faces: it is horizontal
    const double off = smp.crossing == Crossing::XFace
                           ? std::abs(dot(normalized(r), cross(Vec3{0, 0, 1}, t[k])))
                           : std::abs(normalized(r).z);
    if (off > 1e-8)
      throw GeometryError("inconsistent boundary prescription at sample " + std::to_string(k));
  }
}

std::vector<Vec3> RibbonPath::tangents() const {
  const std::size_t m = samples.size();
  std::vector<Vec3> out(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (samples[k].tangent) {
      out[k] = normalized(*samples[k].tangent);
      continue;
    }
    const std::size_t lo = k == 0 ? 0 : k - 1;
    const std::size_t hi = k + 1 == m ? k : k + 1;
    const Vec3 d = samples[hi].position - samples[lo].position;
    if (norm(d) < kDegenerate)
      throw GeometryError("degenerate tangent at sample " + std::to_string(k));
    out[k] = normalized(d);
  }
  return out;
}

std::vector<Frame> transport_frame(const RibbonPath &path, const Frame &initial) {
  const auto t = path.tangents();
  for (std::size_t k = 1; k < path.samples.size(); ++k)
    if (norm(path.samples[k].position - path.samples[k - 1].position) < kDegenerate)
      throw GeometryError("consecutive positions coincide at sample " + std::to_string(k));
  if (initial.orthonormality_error() > 1e-10)
    throw GeometryError("initial frame is not orthonormal");
  if (norm(initial.u - t[0]) > 1e-8)
    throw GeometryError("initial frame is not tangent to the path");

  std::vector<Frame> frames;
  frames.reserve(t.size());
  frames.push_back(initial);
  for (std::size_t k = 1; k < t.size(); ++k) {
    const Vec3 a = frames.back().u, b = t[k];
    const Vec3 c = cross(a, b);
    const double s = norm(c), d = dot(a, b);
    if (d < 0 && s < 1e-12)
      throw GeometryError("anti-parallel tangent step at sample " + std::to_string(k) +
                          "; sample the path more finely");
    Vec3 v = frames.back().v;
    if (s > 0)
      v = rotate(v, (1.0 / s) * c, std::atan2(s, d));
    v = normalized(v - dot(v, b) * b);
    frames.push_back({b, v, cross(b, v)});
  }
  return frames;
}

namespace {

double wrap(double a) {
  a = std::fmod(a + std::numbers::pi, kTwoPi);
  if (a <= 0)
    a += kTwoPi;
  return a - std::numbers::pi;
}

Frame start_frame(const RibbonPath &path) {
  const auto &first = path.samples.front();
  if (!first.ribbon || !path.samples.back().ribbon)
    throw GeometryError("ribbon direction must be prescribed at both endpoints");
  return Frame::from_uv(path.tangents().front(), *first.ribbon);
}

// Unwrapped right-handed angles from the transported v to the prescribed v.
std::vector<double> ribbon_angles(const RibbonPath &path, const std::vector<Frame> &frames) {
  std::vector<double> phi(frames.size(), 0.0);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const double prev = k ? phi[k - 1] : 0.0;
    const auto &r = path.samples[k].ribbon;
    if (!r) {
      phi[k] = prev;
      continue;
    }
    const Vec3 v = frames[k].v, u = frames[k].u;
    const Vec3 rp = *r - dot(*r, u) * u;
    if (norm(rp) < 1e-12)
      throw GeometryError("prescribed ribbon direction is tangent at sample " + std::to_string(k));
    const double raw = std::atan2(dot(cross(v, rp), u), dot(v, rp));
    phi[k] = prev + wrap(raw - prev);
  }
  return phi;
}

} // namespace

TwistResult total_twist(const RibbonPath &path) {
  path.validate();
  const auto frames = transport_frame(path, start_frame(path));
  const auto phi = ribbon_angles(path, frames);
  TwistResult out;
  out.samples = frames.size();
  out.per_segment.reserve(frames.size() - 1);
  for (std::size_t k = 1; k < phi.size(); ++k) {
    out.per_segment.push_back(-(phi[k] - phi[k - 1]));
    out.total_twist += out.per_segment.back();
  }
  for (const auto &f : frames)
    out.residual_orthogonality_error = std::max(out.residual_orthogonality_error, f.orthonormality_error());
  return out;
}

std::vector<Frame> ribbon_frames(const RibbonPath &path) {
  auto frames = transport_frame(path, start_frame(path));
  const auto phi = ribbon_angles(path, frames);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    auto &f = frames[k];
    f.v = rotate(f.v, f.u, phi[k]);
    f.w = cross(f.u, f.v);
  }
  return frames;
}

std::string TwistResult::to_json() const {
  std::ostringstream os;
  os << std::setprecision(17) << "{\"total_twist\":" << total_twist << ",\"samples\":" << samples
     << ",\"residual\":" << residual_orthogonality_error << '}';
  return os.str();
}

Frame analytic_transported_frame(double t) {
  const double c = std::cos(kTwoPi * t), s = std::sin(kTwoPi * t);
  return {{0, c, s}, {-1, 0, 0}, {0, -s, c}};
}

Frame analytic_ribbon_frame(double t) {
  const double c = std::cos(kTwoPi * t), s = std::sin(kTwoPi * t);
  return {{0, c, s}, {-c, s * s, -s * c}, {-s, -s * c, c * c}};
}

RibbonPath analytic_q_path(int n, int i, int samples) {
  if (samples < 16)
    throw DomainError("analytic_q_path needs at least 16 samples");
  if (i < 1 || i > n)
    throw DomainError("strand index out of range");
  RibbonPath path;
  path.descent = {0, 1, 0};
  Vec3 p{(i - 0.5) / n, 0.5, 0.5};
  const double h = 1.0 / samples;
  for (int k = 0; k <= samples; ++k) {
    const double t = k * h;
    const Frame f = analytic_ribbon_frame(t);
    if (k > 0) {
      const Vec3 prev = analytic_ribbon_frame(t - h).u;
      p = p + (0.5 * h) * (prev + f.u);
    }
    path.samples.push_back({t, p, f.u, f.v, Crossing::None});
  }
  return path;
}

namespace {

using Curve = std::function<Vec3(double)>;

// Samples s = k/m of a curve with tangent and ribbon fields, inserting exact
// samples where the path crosses integer x or y values.
RibbonPath sample_curve(int m, const Curve &pos, const Curve &tangent, const Curve &ribbon) {
  std::vector<std::pair<double, Crossing>> params;
  for (int k = 0; k <= m; ++k)
    params.push_back({static_cast<double>(k) / m, Crossing::None});
  for (int axis = 0; axis < 2; ++axis) {
    auto coord = [&](double s) { return axis == 0 ? pos(s).x : pos(s).y; };
    for (int k = 0; k < m; ++k) {
      const double a = static_cast<double>(k) / m, b = static_cast<double>(k + 1) / m;
      const double fa = coord(a), fb = coord(b);
      if (std::floor(fa) == std::floor(fb))
        continue;
      const double face = std::max(std::floor(fa), std::floor(fb));
      const Crossing flag = axis == 0 ? Crossing::XFace : Crossing::YFace;
      if (fa == face || fb == face) {
        params.push_back({fa == face ? a : b, flag});
        continue;
      }
      double lo = a, hi = b;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((coord(mid) - face) * (fa - face) > 0)
          lo = mid;
        else
          hi = mid;
      }
      params.push_back({0.5 * (lo + hi), flag});
    }
  }
  std::sort(params.begin(), params.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  RibbonPath path;
  for (const auto &[s, c] : params) {
    if (!path.samples.empty() && s - path.samples.back().s < 1e-9) {
      if (c != Crossing::None)
        path.samples.back().crossing = c;
      continue;
    }
    path.samples.push_back({s, pos(s), tangent(s), ribbon(s), c});
  }
  return path;
}

double bump(double s) { return s - std::sin(kTwoPi * s) / kTwoPi; }
double bump_rate(double s) { return 1 - std::cos(kTwoPi * s); }

Vec3 in_plane_normal(Vec3 u) { return cross(Vec3{0, 1, 0}, u); }

RibbonPath translate(RibbonPath p, Vec3 d) {
  for (auto &s : p.samples)
    s.position = s.position + d;
  return p;
}

RibbonPath unit_generator(Gen kind, int index, int n, int m) {
  const Vec3 base{(index - 0.5) / n, 0.5, 1.0};
  switch (kind) {
  case Gen::Y:
  case Gen::T: {
    const double span = kind == Gen::Y ? 1.0 : 1.0 / n;
    auto tangent = [span](double s) { return normalized(Vec3{span * bump_rate(s), 0, -1}); };
    return sample_curve(
        m, [=](double s) { return base + Vec3{span * bump(s), 0, -s}; }, tangent,
        [=](double s) { return in_plane_normal(tangent(s)); });
  }
  case Gen::Z: {
    auto tangent = [](double s) { return normalized(Vec3{0, bump_rate(s), -1}); };
    return sample_curve(
        m, [=](double s) { return base + Vec3{0, bump(s), -s}; }, tangent,
        [](double) { return Vec3{-1, 0, 0}; });
  }
  case Gen::Q: {
    RibbonPath path;
    const Vec3 down{0, 0, -1}, rest{-1, 0, 0};
    const int lead = std::max(8, m / 2);
    for (int k = 0; k < lead; ++k)
      path.samples.push_back({0, base + Vec3{0, 0, -0.5 * k / lead}, down, rest, Crossing::None});
    // the analytic loop turned by x -> x, y -> -z, z -> y
    auto turn = [](Vec3 a) { return Vec3{a.x, a.z, -a.y}; };
    const RibbonPath loop = analytic_q_path(n, index, std::max(16, m));
    const Vec3 anchor = base + Vec3{0, 0, -0.5};
    const Vec3 origin = loop.samples.front().position;
    for (std::size_t k = 0; k + 1 < loop.samples.size(); ++k) {
      const auto &s = loop.samples[k];
      path.samples.push_back(
          {0, anchor + turn(s.position - origin), turn(*s.tangent), turn(*s.ribbon), Crossing::None});
    }
    for (int k = 0; k <= lead; ++k)
      path.samples.push_back({0, anchor + Vec3{0, 0, -0.5 * k / lead}, down, rest, Crossing::None});
    for (std::size_t k = 0; k < path.samples.size(); ++k)
      path.samples[k].s = static_cast<double>(k) / static_cast<double>(path.samples.size() - 1);
    return path;
  }
  default:
    throw DomainError("generator paths exist for T, Y, Z and Q letters only");
  }
}

} // namespace

RibbonPath generator_path(const Letter &letter, int n, int samples) {
  check_letter(letter, n);
  if (letter.kind == Gen::Sigma)
    throw DomainError("sigma has no generator path");
  RibbonPath unit = unit_generator(letter.kind, letter.index, n, samples);
  if (letter.exponent < 0) {
    const Vec3 start = unit.samples.front().position;
    unit = inverse(unit);
    unit = translate(std::move(unit), start - unit.samples.front().position);
  }
  RibbonPath out = unit;
  for (int k = 1; k < std::abs(letter.exponent); ++k) {
    const Vec3 shift = out.samples.back().position - unit.samples.front().position;
    out = concatenate(out, translate(unit, shift));
  }
  return out;
}

RibbonPath inverse(const RibbonPath &path) {
  const Vec3 d = normalized(path.descent);
  const Vec3 end = path.samples.back().position;
  auto reflect = [d](Vec3 v) { return v - (2 * dot(v, d)) * d; };
  RibbonPath out;
  out.descent = path.descent;
  out.max_step = path.max_step;
  for (auto it = path.samples.rbegin(); it != path.samples.rend(); ++it) {
    RibbonSample s = *it;
    s.s = 1 - it->s;
    s.position = end + reflect(it->position - end);
    if (s.tangent)
      s.tangent = -reflect(*s.tangent);
    if (s.ribbon)
      s.ribbon = reflect(*s.ribbon);
    out.samples.push_back(s);
  }
  return out;
}

RibbonPath reverse_traversal(const RibbonPath &path) {
  RibbonPath out;
  out.descent = -path.descent;
  out.max_step = path.max_step;
  for (auto it = path.samples.rbegin(); it != path.samples.rend(); ++it) {
    RibbonSample s = *it;
    s.s = 1 - it->s;
    if (s.tangent)
      s.tangent = -*s.tangent;
    out.samples.push_back(s);
  }
  return out;
}

RibbonPath concatenate(const RibbonPath &a, const RibbonPath &b, double max_angle_deg) {
  if (a.samples.empty() || b.samples.empty())
    throw GeometryError("cannot concatenate empty paths");
  if (norm(a.samples.back().position - b.samples.front().position) > 1e-9)
    throw GeometryError("paths do not meet: junction is not continuous");
  const Vec3 ta = a.tangents().back(), tb = b.tangents().front();
  const double angle = std::acos(std::clamp(dot(ta, tb), -1.0, 1.0)) * 180.0 / std::numbers::pi;
  if (angle > max_angle_deg)
    throw GeometryError("tangents differ by " + std::to_string(angle) + " degrees at the junction");
  RibbonPath out = a;
  out.max_step = std::max(a.max_step, b.max_step);
  out.samples.insert(out.samples.end(), b.samples.begin() + 1, b.samples.end());
  for (std::size_t k = 0; k < out.samples.size(); ++k)
    out.samples[k].s = static_cast<double>(k) / static_cast<double>(out.samples.size() - 1);
  return out;
}

RibbonPath read_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line))
    throw GeometryError("empty CSV input");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      header.push_back(cell);
  }
  const std::vector<std::string> base{"s", "x", "y", "z"};
  if (header.size() < 4 || !std::equal(base.begin(), base.end(), header.begin()))
    throw GeometryError("CSV header must start with s,x,y,z");
  const bool has_v = header.size() >= 7;
  RibbonPath path;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty())
      continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ','))
      cells.push_back(cell);
    if (cells.size() < 4)
      throw GeometryError("CSV row " + std::to_string(row) + " has fewer than four columns");
    try {
      RibbonSample s;
      s.s = std::stod(cells[0]);
      s.position = {std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3])};
      if (has_v && cells.size() >= 7 && !cells[4].empty())
        s.ribbon = Vec3{std::stod(cells[4]), std::stod(cells[5]), std::stod(cells[6])};
      path.samples.push_back(s);
    } catch (const std::logic_error &) {
      throw GeometryError("CSV row " + std::to_string(row) + " is not numeric");
    }
  }
  return path;
}

void write_csv(std::ostream &out, const RibbonPath &path) {
  out << "s,x,y,z,vx,vy,vz\n" << std::setprecision(17);
  for (const auto &s : path.samples) {
    out << s.s << ',' << s.position.x << ',' << s.position.y << ',' << s.position.z;
    if (s.ribbon)
      out << ',' << s.ribbon->x << ',' << s.ribbon->y << ',' << s.ribbon->z;
    else
      out << ",,,";
    out << '\n';
  }
}

} // namespace daqb
